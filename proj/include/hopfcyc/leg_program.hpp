#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hopfcyc/hopf.hpp"

namespace hopfcyc {

/// A step that does not fit the shape it receives.
class CompileError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A straight-line program on tensor legs. Each step either applies a map to a
/// contiguous run of legs (a map with empty domain inserts its codomain legs)
/// or permutes all legs.
class LegProgram {
 public:
  struct Step {
    enum class Kind { apply, permute };
    Kind kind;
    std::size_t first_leg = 0;
    LinearMap map;
    std::vector<std::size_t> perm;  // perm[k] = target of leg k
    std::string label;
  };

  LegProgram& apply(std::size_t first_leg, LinearMap map, std::string label);
  LegProgram& permute(std::vector<std::size_t> perm, std::string label = "permute");
  /// Appends the steps of `next` (runs after this program).
  LegProgram& then(const LegProgram& next);

  const std::vector<Step>& steps() const { return steps_; }

  /// Shape after all steps. Throws CompileError naming the first bad step.
  TensorShape output_shape(const TensorShape& input) const;
  LinearMap compile(const Field& f, const TensorShape& input) const;
  /// Runs the program on one vector of the input space.
  SparseVec run(const Field& f, const TensorShape& input, const SparseVec& v) const;

  std::string dump() const;

 private:
  std::vector<Step> steps_;
};

/// Builds a LegProgram over named legs, so formulas can be written in terms of
/// the legs they touch rather than positions.
class LegBuilder {
 public:
  LegBuilder(const Field& f, std::vector<std::string> labels, const TensorShape& shape);

  /// Gathers `inputs` contiguously (in the given order, at the position of the
  /// first of them) and applies m, naming its codomain legs `outputs`.
  /// With no inputs, the new legs are appended at the end.
  LegBuilder& apply(const LinearMap& m, const std::vector<std::string>& inputs, const std::vector<std::string>& outputs,
                    std::string label);
  /// Final leg order; must list exactly the current legs.
  LegBuilder& arrange(const std::vector<std::string>& order);

  const std::vector<std::string>& labels() const { return labels_; }
  const TensorShape& shape() const { return shape_; }
  const LegProgram& program() const { return program_; }
  const TensorShape& input_shape() const { return input_; }
  LinearMap compile() const { return program_.compile(field_, input_); }

 private:
  std::size_t position(const std::string& label) const;
  void reorder(const std::vector<std::string>& order);

  Field field_;
  TensorShape input_;
  std::vector<std::string> labels_;
  TensorShape shape_;
  LegProgram program_;
};

// Structure maps with canonical leg shapes.
LinearMap comultiplication(const CoalgebraInstance& c);  // [d] → [d,d]
LinearMap counit(const CoalgebraInstance& c);             // [d] → []
LinearMap comultiplication(const HopfInstance& h);
LinearMap counit(const HopfInstance& h);
LinearMap multiplication(const HopfInstance& h);  // [d,d] → [d]
LinearMap unit(const HopfInstance& h);            // [] → [d]
LinearMap antipode(const HopfInstance& h);
LinearMap antipode_inverse(const HopfInstance& h);
LinearMap coaction(const ComoduleCoalgebraInstance& m);  // [dC] → [dH, dC]

/// Δ^p : C → C^{⊗(p+1)}, left-nested: Δ^p = (Δ ⊗ id^{p−1}) Δ^{p−1}; Δ^0 = id.
LinearMap iterated_coproduct(const CoalgebraInstance& c, std::size_t p);
LinearMap iterated_coproduct(const HopfInstance& h, std::size_t p);
/// Right-nested variant, Δ^p = (id^{p−1} ⊗ Δ) Δ^{p−1}.
LinearMap iterated_coproduct_right(const CoalgebraInstance& c, std::size_t p);

/// k-fold product H^{⊗k} → H in order; k = 0 gives the unit.
LinearMap iterated_product(const HopfInstance& h, std::size_t k);

/// (h, g_0, …, g_p) ↦ (h^{(0)} g_0, …, h^{(p)} g_p).
LinearMap diagonal_action(const HopfInstance& h, std::size_t p);

/// (a_0, …, a_q) ↦ (a_0^{1̄} ⋯ a_q^{1̄}) ⊗ (a_0^{0̄}, …, a_q^{0̄}).
LinearMap tensor_coaction(const ComoduleCoalgebraInstance& m, std::size_t q);

/// ρ^{(j)} = (Δ^{j−1} ⊗ id) ρ : C → H^{⊗j} ⊗ C, a ↦ a^{(j̄)} ⊗ … ⊗ a^{(1̄)} ⊗ a^{(0̄)}
/// (the H-leg next to C carries index 1̄); j = 0 is the identity.
LinearMap iterated_coaction(const ComoduleCoalgebraInstance& m, std::size_t j);

}  // namespace hopfcyc
