#pragma once

#include <string>
#include <vector>

#include "hopfcyc/hopf.hpp"

namespace hopfcyc {

/// A finite group by its multiplication table; element 0 is the identity.
struct FiniteGroup {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table;  // table[a][b] = index of ab

  std::size_t order() const { return labels.size(); }
  std::size_t inverse(std::size_t a) const;

  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup symmetric3();
};

HopfInstance ground_field_hopf(const Field& f);
HopfInstance group_algebra(const FiniteGroup& g, const Field& f);
/// 4-dimensional Hopf algebra on 1, g, x, gx with g² = 1, x² = 0, xg = −gx, Δx = x⊗1 + g⊗x.
HopfInstance sweedler_hopf(const Field& f);

/// Every basis element group-like.
CoalgebraInstance grouplike_coalgebra(std::size_t n, const Field& f);
/// k^G: Δδ_x = Σ_{ab=x} δ_a⊗δ_b, ε(δ_x) = [x = e].
CoalgebraInstance function_coalgebra(const FiniteGroup& g, const Field& f);

/// ρ(a) = 1 ⊗ a.
ComoduleCoalgebraInstance trivial_coaction(std::string name, const HopfInstance& h, const CoalgebraInstance& c);
/// k^G over kG with ρ(δ_x) = x ⊗ δ_x.
ComoduleCoalgebraInstance grading_coaction(std::string name, const FiniteGroup& g, const Field& f);
/// H over itself with ρ(h) = h^{(0)} S(h^{(2)}) ⊗ h^{(1)}.
ComoduleCoalgebraInstance coadjoint_coaction(std::string name, const HopfInstance& h);

std::vector<std::string> hopf_catalog_names();
HopfInstance catalog_hopf(const std::string& name, const Field& f);

/// Instances exercised by the full acceptance run.
std::vector<std::string> comodule_catalog_names();
/// Larger or noncocommutative-with-coaction instances, checked at low degree only.
std::vector<std::string> extended_comodule_catalog_names();
/// Throws std::out_of_range for unknown names.
ComoduleCoalgebraInstance catalog_comodule(const std::string& name, const Field& f);

}  // namespace hopfcyc
