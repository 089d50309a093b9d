#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcyc/cocyclic.hpp"
#include "hopfcyc/leg_program.hpp"

namespace hopfcyc {

/// C^n = C^{⊗(n+1)} with ∂^i = Δ on a_i (i ≤ n), ∂^{n+1}(a) = (a_0^{(1)}, a_1, …, a_n, a_0^{(0)}),
/// σ^i = ε on a_{i+1} and τ(a_0, …, a_n) = (a_1, …, a_n, a_0).
struct StandardCocyclic {
  CoalgebraInstance coalgebra;
  ParacocyclicFamily family;
};
StandardCocyclic standard_cocyclic(const CoalgebraInstance& c, std::size_t N);

/// A(p,q) = H^{⊗(p+1)} ⊗ C^{⊗(q+1)}, legs (g_0, …, g_p | a_0, …, a_q).
/// The last cofaces are the composites ∂^{q+1} = τ∂^0 and ∂̄^{p+1} = τ̄∂̄^0.
struct NaturalCocylindrical {
  ComoduleCoalgebraInstance comodule;
  CocylindricalFamily family;
};
NaturalCocylindrical natural_cocylindrical(const ComoduleCoalgebraInstance& m, std::size_t P, std::size_t Q);

/// τ_{p,q}(g | a) = (S⁻¹(a_0^{1̄})·(g_0, …, g_p) | a_1, …, a_q, a_0^{0̄}).
LinearMap natural_cyclic(const ComoduleCoalgebraInstance& m, std::size_t p, std::size_t q);
/// τ̄_{p,q}(g | a) = (g_1, …, g_p, (a_0^{1̄}⋯a_q^{1̄}) g_0 | a_0^{0̄}, …, a_q^{0̄}).
LinearMap natural_hcyclic(const ComoduleCoalgebraInstance& m, std::size_t p, std::size_t q);
/// ∂^{q+1} written out: (S⁻¹(a_0^{(0)1̄})·(g_0, …, g_p) | a_0^{(1)}, a_1, …, a_q, a_0^{(0)0̄}).
LinearMap direct_last_coface(const ComoduleCoalgebraInstance& m, std::size_t p, std::size_t q);
/// ∂̄^{p+1} written out: (g_0^{(1)}, g_1, …, g_p, (a_0^{1̄}⋯a_q^{1̄}) g_0^{(0)} | a^{0̄}).
LinearMap direct_last_hcoface(const ComoduleCoalgebraInstance& m, std::size_t p, std::size_t q);

/// φ : (C⊗H)^{⊗(n+1)} → H^{⊗(n+1)} ⊗ C^{⊗(n+1)},
/// g_k ↦ S⁻¹(a_{k+1}^{(k+1)} ⋯ a_n^{(k+1)}) g_k, a_j ↦ a_j^{0̄} (j ≥ 1).
LinearMap phi(const ComoduleCoalgebraInstance& m, std::size_t n);
/// The inverse written out: g_k ↦ (a_{k+1}^{(1̄)} a_{k+2}^{(2̄)} ⋯ a_n^{(n−k)}) g_k, paired back with a_k^{0̄}.
LinearMap psi_display(const ComoduleCoalgebraInstance& m, std::size_t n);
/// Exact inverse of φ; ConsistencyError if φ is singular.
LinearMap psi(const ComoduleCoalgebraInstance& m, std::size_t n);

/// β(g_0, …, g_p | a) = (S(g_0^{(1)})·(g_1, …, g_p) | g_0^{(0)} | a) and
/// γ(g_1, …, g_p | g | a) = (g^{(0)}, g^{(1)}·(g_1, …, g_p) | a). Both keep the leg
/// shape H^{⊗(p+1)} ⊗ C^{⊗(q+1)}.
std::pair<LinearMap, LinearMap> beta_gamma(const ComoduleCoalgebraInstance& m, std::size_t p, std::size_t q);

/// The operators of C♮H transported by β and γ, written in closed form on
/// (g_1, …, g_p | g | a_0, …, a_q):
///   𝔱 = (g_1, …, g_p | S⁻¹(a_0^{1̄}) g | a_1, …, a_q, a_0^{0̄}),
///   𝔡_i = Δ on a_i (i ≤ q), 𝔡_{q+1} = (… | S⁻¹(a_0^{(0)1̄}) g | a_0^{(1)}, a_1, …, a_q, a_0^{(0)0̄}),
///   𝔰_i = ε on a_{i+1},
///   𝔡̄_0 inserts 1 in front, 𝔡̄_i = Δ on g_i (1 ≤ i ≤ p), 𝔡̄_{p+1} = bold-Δ on (g | a),
///   𝔰̄_i = ε on g_{i+1},
///   𝔱̄ = (S(g_1^{(1)})·(g_2, …, g_p, S(g^{(2)}) X g^{(0)}) | g^{(1)} g_1^{(0)} | a^{0̄}), X = a_0^{1̄}⋯a_q^{1̄},
///   and 𝔱̄(g | a) = (X g | a^{0̄}) when p = 0.
CocylindricalFamily transported_family(const ComoduleCoalgebraInstance& m, std::size_t P, std::size_t Q);

/// bold-Δ(g | a_0, …, a_n) = (S(g^{(2)}) (a_0^{1̄}⋯a_n^{1̄}) g^{(0)} | g^{(1)} | a^{0̄}) on H ⊗ C^{⊗(n+1)}.
LinearMap first_row_coaction(const ComoduleCoalgebraInstance& m, std::size_t n);

/// A left H-comodule: ρ : space → [dH] ++ space.
struct Comodule {
  HopfInstance hopf;
  TensorShape space;
  LinearMap coaction;
};
CheckReport check_comodule(const Comodule& M);
/// Degree n of the first row of C♮H with bold-Δ.
Comodule first_row_comodule(const ComoduleCoalgebraInstance& m, std::size_t n);

/// C^p(H, M) = H^{⊗p} ⊗ M with
/// δ(g_1, …, g_p, m) = (1, g, m) + Σ_{i=1}^{p} (−1)^i (…, Δg_i, …) + (−1)^{p+1} (g, ρ(m)).
struct ComoduleCochainComplex {
  Comodule module;
  std::size_t top = 0;            // δ known for p < top
  std::vector<LinearMap> delta;   // delta[p] : C^p → C^{p+1}
  TensorShape space(std::size_t p) const;
  /// dim H^p(H, M) for p < top.
  std::vector<std::size_t> cohomology_dims() const;
};
ComoduleCochainComplex comodule_cochain(const Comodule& M, std::size_t P);

/// Coinvariants {v : bold-Δ v = 1 ⊗ v} inside H ⊗ C^{⊗(n+1)}.
Subspace coinvariants(const ComoduleCoalgebraInstance& m, std::size_t n);

/// The coinvariant cocyclic module: 𝔡, 𝔰, 𝔱 (at p = 0) restricted to the
/// coinvariant subspaces, in their coordinates, through degree N.
struct CoinvariantCocyclic {
  std::vector<Subspace> spaces;
  ParacocyclicFamily family;
};
CoinvariantCocyclic coinvariant_cocyclic(const ComoduleCoalgebraInstance& m, std::size_t N);

/// h(g_1, …, g_p, m) = x(g_1)(g_2, …, g_p, m) : C^p → C^{p−1} for a normalized
/// integral x; nullopt when H has none.
std::optional<LinearMap> cosemisimple_homotopy(const Comodule& M, std::size_t p);

}  // namespace hopfcyc
