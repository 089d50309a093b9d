#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hopfcyc/field.hpp"

namespace hopfcyc {

/// Ordered tensor factors. The empty shape is the ground field (dimension 1);
/// a zero factor denotes the zero space.
class TensorShape {
 public:
  TensorShape() = default;
  TensorShape(std::initializer_list<std::size_t> factors);
  explicit TensorShape(std::vector<std::size_t> factors);

  /// `copies` repetitions of a single factor of dimension `dim`.
  static TensorShape power(std::size_t dim, std::size_t copies);
  /// A single factor; used for coordinate spaces of subspaces.
  static TensorShape flat(std::size_t dim);

  const std::vector<std::size_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::size_t total() const;
  std::size_t operator[](std::size_t i) const { return factors_[i]; }

  TensorShape concat(const TensorShape& other) const;
  std::string to_string() const;

  friend bool operator==(const TensorShape&, const TensorShape&) = default;

 private:
  std::vector<std::size_t> factors_;
};

/// Row-major flattening: leftmost factor varies slowest.
std::size_t tensor_index(const TensorShape& shape, std::span<const std::size_t> multi_index);
std::vector<std::size_t> tensor_unindex(const TensorShape& shape, std::size_t flat);

struct Entry {
  std::size_t index;
  Scalar value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sorted by index, no explicit zeros.
using SparseVec = std::vector<Entry>;

SparseVec axpy(const Scalar& a, const SparseVec& x, const SparseVec& y);  // a*x + y
SparseVec scaled(const Scalar& a, const SparseVec& x);

/// A matrix between based spaces, stored column-sparse: column j is the image
/// of the j-th domain basis vector.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(Field field, TensorShape domain, TensorShape codomain);

  static LinearMap zero(const Field& f, const TensorShape& domain, const TensorShape& codomain);
  static LinearMap identity(const Field& f, const TensorShape& shape);
  /// Build from a dense row-major grid of integers (codomain rows x domain columns).
  static LinearMap from_rows(const Field& f, const TensorShape& domain, const TensorShape& codomain,
                             const std::vector<std::vector<long>>& rows);
  /// Column-wise construction from sparse images.
  static LinearMap from_columns(const Field& f, const TensorShape& domain, const TensorShape& codomain,
                                std::vector<SparseVec> columns);

  const Field& field() const { return field_; }
  const TensorShape& domain() const { return domain_; }
  const TensorShape& codomain() const { return codomain_; }
  std::size_t rows() const { return codomain_.total(); }
  std::size_t cols() const { return domain_.total(); }

  const SparseVec& column(std::size_t j) const { return columns_[j]; }
  const std::vector<SparseVec>& columns() const { return columns_; }
  Scalar at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, const Scalar& v);

  std::size_t nonzeros() const;
  bool is_zero() const;
  bool is_identity() const;

  SparseVec apply(const SparseVec& v) const;

  /// Same entries, new shapes with the same totals.
  LinearMap reshaped(const TensorShape& domain, const TensorShape& codomain) const;
  LinearMap transpose() const;

  LinearMap& operator+=(const LinearMap& o);
  LinearMap& operator-=(const LinearMap& o);
  friend LinearMap operator+(LinearMap a, const LinearMap& b) { return a += b; }
  friend LinearMap operator-(LinearMap a, const LinearMap& b) { return a -= b; }
  friend LinearMap operator*(const Scalar& s, const LinearMap& m);
  /// Composition a∘b. Requires b.codomain().total() == a.domain().total().
  friend LinearMap operator*(const LinearMap& a, const LinearMap& b);

  /// Entrywise equality; shapes need only agree in total dimension.
  friend bool operator==(const LinearMap& a, const LinearMap& b);

  std::string to_string() const;

 private:
  Field field_;
  TensorShape domain_;
  TensorShape codomain_;
  std::vector<SparseVec> columns_;
};

/// Kronecker product consistent with tensor_index: (f⊗g)(x⊗y) = f(x)⊗g(y).
LinearMap tensor_of_maps(const LinearMap& f, const LinearMap& g);

/// Permutation matrix moving leg k of `shape` to position perm[k].
LinearMap permute_legs(const Field& f, const TensorShape& shape, std::span<const std::size_t> perm);

/// Power of an endomorphism; power 0 is the identity.
LinearMap power(const LinearMap& m, unsigned k);

/// Block matrix assembly: blocks[r][c] maps domain block c to codomain block r.
/// Null entries (default-constructed maps with zero columns) are treated as zero.
LinearMap block_matrix(const Field& f, const std::vector<std::size_t>& row_dims,
                       const std::vector<std::size_t>& col_dims,
                       const std::vector<std::vector<const LinearMap*>>& blocks);

}  // namespace hopfcyc
