#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "hopfcyc/hopf.hpp"

namespace hopfcyc {

/// Malformed instance text; the message starts with "line N:" when a line is known.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Contents of a `.hopf` file. Exactly the parts required by `kind` are present.
struct InstanceFile {
  enum class Kind { coalgebra, hopf, comodule_coalgebra };

  Kind kind = Kind::comodule_coalgebra;
  std::string name;
  Field field;
  std::optional<HopfInstance> hopf;
  std::optional<CoalgebraInstance> coalgebra;
  std::optional<LinearMap> coaction;

  static InstanceFile from(const ComoduleCoalgebraInstance& m);
  static InstanceFile from(const HopfInstance& h);
  static InstanceFile from(const CoalgebraInstance& c);

  /// Throws InputError unless kind is comodule_coalgebra.
  ComoduleCoalgebraInstance comodule() const;
};

/// Parses `key = value` lines ('#' starts a comment). Structure maps are lists
/// of `row col num den` entries separated by ';'. When `field_override` is set,
/// the rational constants are realized in that field instead of the declared one.
InstanceFile parse_instance(const std::string& text, std::optional<Field> field_override = std::nullopt);
InstanceFile load_instance(const std::string& path, std::optional<Field> field_override = std::nullopt);

/// Deterministic text form; parse_instance(serialize_instance(x)) reproduces x.
std::string serialize_instance(const InstanceFile& inst);

}  // namespace hopfcyc
