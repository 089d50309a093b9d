#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfcyc/linear_map.hpp"

namespace hopfcyc {

/// Comultiplication [d] → [d,d], counit [d] → [].
struct CoalgebraInstance {
  std::string name;
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  LinearMap comultiplication;
  LinearMap counit;
};

/// Multiplication [d,d] → [d], unit [] → [d], antipode and its inverse [d] → [d].
struct HopfInstance {
  std::string name;
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  LinearMap comultiplication;
  LinearMap counit;
  LinearMap multiplication;
  LinearMap unit;
  LinearMap antipode;
  LinearMap antipode_inverse;

  CoalgebraInstance coalgebra() const;
};

/// Left coaction written H-first: ρ : C → H ⊗ C.
struct ComoduleCoalgebraInstance {
  std::string name;
  HopfInstance hopf;
  CoalgebraInstance coalgebra;
  LinearMap coaction;
};

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::string witness;  // empty when passed
};

struct CheckReport {
  std::vector<AxiomResult> results;

  bool passed() const;
  /// The first failed axiom, if any.
  const AxiomResult* first_failure() const;
  void add(std::string axiom, const LinearMap& lhs, const LinearMap& rhs,
           const std::vector<std::vector<std::string>>& leg_labels);
};

/// Index of the first domain basis vector on which a and b differ.
std::optional<std::size_t> first_difference(const LinearMap& a, const LinearMap& b);

/// Human-readable basis vector e_(i,j,...) of a tensor shape, using leg labels.
std::string basis_vector_name(const TensorShape& shape, std::size_t flat,
                              const std::vector<std::vector<std::string>>& leg_labels);

CheckReport check_coalgebra(const CoalgebraInstance& c);
CheckReport check_hopf(const HopfInstance& h);
/// Throws std::domain_error on dimension mismatch between the parts.
CheckReport check_comodule_coalgebra(const ComoduleCoalgebraInstance& m);

/// Coalgebra on C⊗H, basis (a, g) flattened with a slowest.
/// Throws std::domain_error if m fails its axioms.
CoalgebraInstance crossed_coproduct(const ComoduleCoalgebraInstance& m);

/// A functional x on H (as a row, indexed by basis) with f·x = f(1)x for all f
/// and x(1) = 1, or nullopt when no normalized left integral exists.
std::optional<std::vector<Scalar>> find_left_integral(const HopfInstance& h);

/// The same structure constants realized over another field.
HopfInstance change_field(const HopfInstance& h, const Field& f);
CoalgebraInstance change_field(const CoalgebraInstance& c, const Field& f);
ComoduleCoalgebraInstance change_field(const ComoduleCoalgebraInstance& m, const Field& f);
LinearMap change_field(const LinearMap& m, const Field& f);

}  // namespace hopfcyc
