#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hopfcyc/linear_map.hpp"

namespace hopfcyc {

/// Incremental sparse Gaussian elimination. Rows are kept in semi-echelon form
/// keyed by their leading index, with leading coefficient 1. Each inserted
/// vector may carry a tag; the eliminator then tracks every row as a
/// combination of tagged inputs.
class Eliminator {
 public:
  Eliminator(Field field, std::size_t ambient);

  /// Inserts v as tagged input `tag`. Returns true if v was independent of the
  /// rows so far; otherwise the dependency is appended to relations().
  bool insert_tagged(const SparseVec& v, std::size_t tag);
  /// Inserts v without tracking; dependencies on it are not recorded.
  bool insert(const SparseVec& v);

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }

  /// Combinations c of tagged inputs with Σ c_t v_t in the span of untagged inputs.
  const std::vector<SparseVec>& relations() const { return relations_; }

  /// Writes v as a combination of tagged inputs, if v lies in their span
  /// (untagged rows contribute nothing to the combination).
  std::optional<SparseVec> express(const SparseVec& v) const;

  /// The echelon rows, ordered by leading index.
  std::vector<SparseVec> rows() const;

 private:
  struct Row {
    SparseVec v;
    SparseVec combo;
  };
  bool insert_impl(SparseVec v, SparseVec combo, bool tracked);

  Field field_;
  std::size_t ambient_;
  std::map<std::size_t, Row> rows_;
  std::vector<SparseVec> relations_;
};

/// A subspace of k^ambient, stored by a semi-echelon basis.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(const Field& f, std::size_t ambient, const std::vector<SparseVec>& vectors);
  static Subspace zero(const Field& f, std::size_t ambient);
  static Subspace whole(const Field& f, std::size_t ambient);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVec>& basis() const { return basis_; }

  bool contains(const SparseVec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v with respect to basis(), or nullopt if v is outside.
  std::optional<SparseVec> coordinates(const SparseVec& v) const;

  /// Inclusion map k^dim → k^ambient.
  LinearMap inclusion() const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Field field_;
  std::size_t ambient_ = 0;
  std::vector<SparseVec> basis_;
  std::vector<std::size_t> pivots_;  // leading index of each basis vector, increasing
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

struct RankKernelImage {
  std::size_t rank;
  Subspace kernel;
  Subspace image;
};

RankKernelImage rank_kernel_image(const LinearMap& f);
std::size_t rank(const LinearMap& f);
Subspace kernel(const LinearMap& f);
Subspace image(const LinearMap& f);
/// f(U) for a subspace U of the domain.
Subspace image_of(const LinearMap& f, const Subspace& u);
/// {x : f(x) ∈ w}.
Subspace preimage(const LinearMap& f, const Subspace& w);

/// Fraction-free elimination over ℚ on a dense integer copy (columns scaled
/// to clear denominators). Throws std::domain_error for prime fields.
std::size_t bareiss_rank(const LinearMap& f);

/// dim z − dim bd. Throws ConsistencyError unless bd ⊆ z.
std::size_t subquotient_dim(const Subspace& z, const Subspace& bd);

/// Matrix of f restricted to u, corestricted to v, in the bases of u and v.
/// Throws ConsistencyError if f(u) ⊄ v.
LinearMap restrict_map(const LinearMap& f, const Subspace& u, const Subspace& v);

/// Throws ConsistencyError if f is singular.
LinearMap inverse(const LinearMap& f);

/// Some x with f x = b, if one exists.
std::optional<SparseVec> solve(const LinearMap& f, const SparseVec& b);

}  // namespace hopfcyc
