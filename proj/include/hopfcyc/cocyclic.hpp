#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "hopfcyc/hopf.hpp"
#include "hopfcyc/linalg.hpp"

namespace hopfcyc {

namespace detail {

/// Thread-safe memo of operator matrices keyed by (kind, a, b, c).
class OperatorCache {
 public:
  using Key = std::tuple<int, std::size_t, std::size_t, std::size_t>;
  const LinearMap& get(const Key& key, const std::function<LinearMap()>& make);

 private:
  std::mutex mutex_;
  std::map<Key, std::shared_ptr<const LinearMap>> maps_;
};

}  // namespace detail

/// Degree-indexed spaces A^n with cofaces ∂^i : A^n → A^{n+1} (0 ≤ i ≤ n+1),
/// codegeneracies σ^i : A^n → A^{n−1} (0 ≤ i ≤ n−1) and τ_n : A^n → A^n.
/// Operators are generated on demand and memoized; copies share the memo.
class ParacocyclicFamily {
 public:
  using SpaceFn = std::function<TensorShape(std::size_t n)>;
  using IndexedFn = std::function<LinearMap(std::size_t n, std::size_t i)>;
  using CyclicFn = std::function<LinearMap(std::size_t n)>;

  ParacocyclicFamily() = default;
  ParacocyclicFamily(std::string name, Field field, std::size_t truncation, SpaceFn space, IndexedFn coface,
                     IndexedFn codegeneracy, CyclicFn cyclic);

  const std::string& name() const { return name_; }
  const Field& field() const { return field_; }
  /// Largest degree at which checks and cohomology are attempted.
  std::size_t truncation() const { return truncation_; }
  ParacocyclicFamily with_truncation(std::size_t n) const;

  TensorShape space(std::size_t n) const;
  std::size_t dim(std::size_t n) const { return space(n).total(); }
  const LinearMap& coface(std::size_t n, std::size_t i) const;
  const LinearMap& codegeneracy(std::size_t n, std::size_t i) const;
  const LinearMap& cyclic(std::size_t n) const;

 private:
  std::string name_;
  Field field_;
  std::size_t truncation_ = 0;
  SpaceFn space_;
  IndexedFn coface_;
  IndexedFn codegeneracy_;
  CyclicFn cyclic_;
  std::shared_ptr<detail::OperatorCache> cache_ = std::make_shared<detail::OperatorCache>();
};

/// Bigraded spaces A(p,q) with horizontal (barred, acting on p) and vertical
/// (acting on q) paracocyclic structures.
class CocylindricalFamily {
 public:
  using SpaceFn = std::function<TensorShape(std::size_t p, std::size_t q)>;
  using IndexedFn = std::function<LinearMap(std::size_t p, std::size_t q, std::size_t i)>;
  using CyclicFn = std::function<LinearMap(std::size_t p, std::size_t q)>;

  struct Operators {
    IndexedFn coface, codegeneracy;
    CyclicFn cyclic;
  };

  CocylindricalFamily() = default;
  CocylindricalFamily(std::string name, Field field, std::size_t pmax, std::size_t qmax, SpaceFn space,
                      Operators horizontal, Operators vertical);

  const std::string& name() const { return name_; }
  const Field& field() const { return field_; }
  std::size_t pmax() const { return pmax_; }
  std::size_t qmax() const { return qmax_; }
  CocylindricalFamily with_truncation(std::size_t pmax, std::size_t qmax) const;

  TensorShape space(std::size_t p, std::size_t q) const;
  std::size_t dim(std::size_t p, std::size_t q) const { return space(p, q).total(); }

  // Vertical: A(p,q) → A(p,q±1).
  const LinearMap& coface(std::size_t p, std::size_t q, std::size_t i) const;
  const LinearMap& codegeneracy(std::size_t p, std::size_t q, std::size_t i) const;
  const LinearMap& cyclic(std::size_t p, std::size_t q) const;
  // Horizontal: A(p,q) → A(p±1,q).
  const LinearMap& hcoface(std::size_t p, std::size_t q, std::size_t i) const;
  const LinearMap& hcodegeneracy(std::size_t p, std::size_t q, std::size_t i) const;
  const LinearMap& hcyclic(std::size_t p, std::size_t q) const;

  /// Row p: the vertical family q ↦ A(p,q).
  ParacocyclicFamily row(std::size_t p) const;
  /// Column q: the horizontal family p ↦ A(p,q).
  ParacocyclicFamily column(std::size_t q) const;

 private:
  std::string name_;
  Field field_;
  std::size_t pmax_ = 0, qmax_ = 0;
  SpaceFn space_;
  Operators h_, v_;
  std::shared_ptr<detail::OperatorCache> cache_ = std::make_shared<detail::OperatorCache>();
};

/// Cosimplicial and Λ∞ identities through the truncation (cofaces need degree n+1).
CheckReport check_paracocyclic(const ParacocyclicFamily& f);
/// τ_n^{n+1} = id for n ≤ truncation.
CheckReport check_cyclic_order(const ParacocyclicFamily& f);
/// Rows and columns are paracocyclic, every horizontal operator commutes with
/// every vertical one, and τ̄^{p+1} τ^{q+1} = id.
CheckReport check_cocylindrical(const CocylindricalFamily& f);

/// A(n,n) with ∂̄^i∂^i, σ̄^iσ^i and τ̄τ.
ParacocyclicFamily diagonal(const CocylindricalFamily& f);

/// b = Σ_{i=0}^{n+1} (−1)^i ∂^i : A^n → A^{n+1}.
LinearMap hochschild_b(const ParacocyclicFamily& f, std::size_t n);
/// σ = σ^n ∘ τ_{n+1} : A^{n+1} → A^n.
LinearMap extra_codegeneracy(const ParacocyclicFamily& f, std::size_t n);
/// N_n = Σ_{i=0}^{n} (−1)^{in} τ_n^i on A^n.
LinearMap norm_operator(const ParacocyclicFamily& f, std::size_t n);
/// B = N_n σ (1 − (−1)^{n+1} τ_{n+1}) : A^{n+1} → A^n.
LinearMap connes_B(const ParacocyclicFamily& f, std::size_t n);

/// Graded spaces with b : V^n → V^{n+1} and B : V^{n+1} → V^n, n < top.
struct MixedComplexT {
  std::string name;
  Field field;
  std::size_t top = 0;  // b and B are known for n < top
  std::vector<std::size_t> dims;  // dims[n] for n ≤ top
  std::vector<LinearMap> b;       // b[n] : V^n → V^{n+1}
  std::vector<LinearMap> B;       // B[n] : V^{n+1} → V^n

  /// T = 1 − (bB + Bb) on V^n for n < top.
  LinearMap T(std::size_t n) const;
};

/// The (b, B) complex of a paracocyclic family through its truncation.
MixedComplexT mixed_complex(const ParacocyclicFamily& f);
/// With `expect_mixed`: b² = 0, B² = 0 and T = id. Otherwise the paracochain
/// conditions that hold on any paracocyclic module: b² = 0 and T invertible.
CheckReport check_mixed(const MixedComplexT& m, bool expect_mixed);

/// Tot^n = ⊕_{p+q=n} A(p,q), summands ordered by increasing p.
/// d = b̄ + (−1)^p b and D = (−1)^p B + T B̄ with T the vertical T on the target.
MixedComplexT tot_mixed(const CocylindricalFamily& f);
/// Tot over the normalized bicomplex N(p,q) = ∩ ker σ^i ∩ ∩ ker σ̄^j, where B² = 0
/// holds even when rows or columns are only paracocyclic.
struct NormalizedTot {
  std::vector<std::vector<Subspace>> spaces;  // spaces[p][q], p + q ≤ top
  MixedComplexT complex;                      // summands ordered by increasing p
};
NormalizedTot tot_normalized(const CocylindricalFamily& f);
/// Offset of summand (p, n−p) inside Tot^n.
std::size_t tot_offset(const CocylindricalFamily& f, std::size_t n, std::size_t p);

/// The shuffle map A(n,n) → Tot^n: on (p,q) it is the signed sum over
/// (p,q)-shuffles (μ,ν) of σ̄^{ν_1}⋯σ̄^{ν_q} σ^{μ_1}⋯σ^{μ_p}.
LinearMap shuffle_f0(const CocylindricalFamily& f, std::size_t n);

/// N^n = ∩_{i<n} ker σ^i with b and B restricted; throws ConsistencyError if
/// either fails to preserve the subspaces.
struct NormalizedComplex {
  std::vector<Subspace> spaces;
  MixedComplexT complex;  // in coordinates of `spaces`
};
NormalizedComplex normalize(const ParacocyclicFamily& f);

}  // namespace hopfcyc
