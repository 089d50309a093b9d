#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfcyc/constructions.hpp"

namespace hopfcyc {

/// The k[u]-module W tensored onto a mixed complex, u of cohomological degree 2.
/// hochschild: W = k[u]/u k[u], leaving (V, b).
/// cyclic: W = k[u,u⁻¹]/u k[u], giving ⊕_{i≥0} V^{n−2i} u^i with b + uB.
enum class CoefficientChoice { hochschild, cyclic };

std::string to_string(CoefficientChoice w);
/// Accepts "hh" / "hc"; throws std::invalid_argument otherwise.
CoefficientChoice parse_coefficients(const std::string& text);

/// Dimensions keyed by an index tuple, e.g. (n) or (r, p, q).
struct DimensionTable {
  std::vector<std::string> axes;
  std::map<std::vector<std::size_t>, std::size_t> entries;

  std::optional<std::size_t> at(const std::vector<std::size_t>& index) const;
  friend bool operator==(const DimensionTable&, const DimensionTable&) = default;
};

struct PageReport {
  std::string instance;
  Field field;
  std::vector<std::size_t> truncation;  // {N} or {P, Q}
  std::size_t safe_degree = 0;          // no entry has total degree above this
  std::map<std::string, DimensionTable> tables;

  /// Stable, byte-reproducible JSON text.
  std::string to_json() const;
};

/// A cochain complex with a weight on every basis vector: d[n] : K^n → K^{n+1}.
/// F^s K^n is spanned by the basis vectors of weight ≥ s.
struct FilteredComplex {
  Field field;
  std::vector<std::size_t> dims;                 // dims[n], n ≤ d.size()
  std::vector<LinearMap> d;
  std::vector<std::vector<std::size_t>> weight;  // weight[n][j]

  /// ConsistencyError naming the offending entry unless d² = 0 and every d
  /// preserves the filtration.
  void verify() const;
  /// dim H^n for n < d.size().
  std::vector<std::size_t> cohomology_dims() const;
  /// dim E_r^{s} in total degree n, by E_r = Z_r^s / (Z_{r−1}^{s+1} + d Z_{r−1}^{s−r+1})
  /// with Z_r^s = F^s ∩ d⁻¹(F^{s+r}) and Z_{−1}^s = F^s. Requires n < d.size().
  std::size_t page_dim(std::size_t r, std::size_t s, std::size_t n) const;
};

/// V ⊠ W for a mixed complex, through degree m.top (d known below it). `weight`
/// labels V^n; the u^i summand adds 2i. Without labels every weight is 2i.
FilteredComplex with_coefficients(const MixedComplexT& m, CoefficientChoice w,
                                  const std::vector<std::vector<std::size_t>>& weight = {});

/// HH^n or HC^n for n ≤ min(N, truncation − 1) of a cocyclic family. Throws
/// std::domain_error, naming the failing degree, unless τ^{n+1} = id throughout.
PageReport hh_hc_dims(const ParacocyclicFamily& family, CoefficientChoice w, std::size_t N);
/// Same tables from any mixed complex, for n < m.top.
DimensionTable mixed_cohomology(const MixedComplexT& m, CoefficientChoice w);

/// A subquotient Z/B with chosen representatives of a basis of Z/B.
struct Subquotient {
  Subspace cycles;
  Subspace boundaries;
  std::vector<SparseVec> representatives;
  std::shared_ptr<const Eliminator> solver;  // boundaries untagged, representatives tagged by index

  std::size_t dim() const { return representatives.size(); }
  /// Coordinates of v ∈ Z modulo B; ConsistencyError if v ∉ Z.
  SparseVec coordinates(const SparseVec& v) const;
  /// Matrix of the map Z/B → target induced by f; ConsistencyError unless f(Z) ⊆ target.Z
  /// and f(B) ⊆ target.B.
  LinearMap induced(const LinearMap& f, const Subquotient& target) const;
};
Subquotient make_subquotient(const Subspace& cycles, const Subspace& boundaries);

/// The cocyclic module q ↦ H^p(H, C^q) of the first row, with the operators
/// induced by the transported 𝔡, 𝔰, 𝔱, through degree N.
ParacocyclicFamily cohomology_row(const ComoduleCoalgebraInstance& m, std::size_t p, std::size_t N);

/// The normalized total complex of C♮H ⊠ W filtered by s = q + 2i, where q is
/// the C-degree and i the power of u. In this weight b̄ has degree 0, b and uB
/// degree 1, and uTB̄ degree 2, so d(F^s) ⊆ F^s; E⁰ has differential b̄.
FilteredComplex filtered_total(const NaturalCocylindrical& nat, CoefficientChoice w);

/// Pages E_r for r ≤ 2, entry (r, p, q) with p the H-degree and q the weight,
/// restricted to p ≤ P, q ≤ Q and p + q ≤ max(P, Q) (the safe degree).
/// generic: Z/B formulas on filtered_total.
PageReport spectral_generic(const ComoduleCoalgebraInstance& m, CoefficientChoice w, std::size_t P, std::size_t Q);
/// closed form: E⁰ = ⊕_i C̄^p(H, N^{q−2i}) by dimension count, E¹ = ⊕_i H^p(H, N^{q−2i})
/// by the comodule coboundary δ, E² = HH/HC^q of cohomology_row(m, p, ·); N^k is the
/// normalized first row.
PageReport spectral_closed_form(const ComoduleCoalgebraInstance& m, CoefficientChoice w, std::size_t P,
                                std::size_t Q);
/// Both, compared; ConsistencyError on any differing entry.
PageReport spectral_pages(const ComoduleCoalgebraInstance& m, CoefficientChoice w, std::size_t P, std::size_t Q);

/// HH and HC of C•(C>◁H) and of the coinvariant cocyclic module through degree N.
struct PropositionReport {
  bool supported = false;  // false when H has no normalized integral
  PageReport crossed;      // tables "HH", "HC"
  PageReport coinvariant;  // tables "HH", "HC"
  bool agree() const;
};
PropositionReport proposition_check(const ComoduleCoalgebraInstance& m, std::size_t N);

/// HC of C>◁H through degree N along three routes: the standard module of the
/// crossed coproduct, the diagonal of C♮H, and the normalized Tot of C♮H.
struct RouteReport {
  DimensionTable crossed, diagonal, total;
  bool agree() const { return crossed == diagonal && diagonal == total; }
};
RouteReport route_independence(const ComoduleCoalgebraInstance& m, std::size_t N);

}  // namespace hopfcyc
