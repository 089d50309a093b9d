#include "hopfcyc/linear_map.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hopfcyc {

TensorShape::TensorShape(std::initializer_list<std::size_t> factors) : TensorShape(std::vector<std::size_t>(factors)) {}

TensorShape::TensorShape(std::vector<std::size_t> factors) : factors_(std::move(factors)) {}

TensorShape TensorShape::flat(std::size_t dim) { return TensorShape(std::vector<std::size_t>{dim}); }

TensorShape TensorShape::power(std::size_t dim, std::size_t copies) {
  return TensorShape(std::vector<std::size_t>(copies, dim));
}

std::size_t TensorShape::total() const {
  return std::accumulate(factors_.begin(), factors_.end(), std::size_t{1}, std::multiplies<>());
}

TensorShape TensorShape::concat(const TensorShape& other) const {
  auto f = factors_;
  f.insert(f.end(), other.factors_.begin(), other.factors_.end());
  return TensorShape(std::move(f));
}

std::string TensorShape::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? "," : "") + std::to_string(factors_[i]);
  return s + "]";
}

std::size_t tensor_index(const TensorShape& shape, std::span<const std::size_t> multi_index) {
  if (multi_index.size() != shape.rank())
    throw std::domain_error("multi-index length " + std::to_string(multi_index.size()) + " does not match shape " +
                            shape.to_string());
  std::size_t flat = 0;
  for (std::size_t k = 0; k < shape.rank(); ++k) {
    if (multi_index[k] >= shape[k])
      throw std::domain_error("index " + std::to_string(multi_index[k]) + " out of range for factor " +
                              std::to_string(k) + " of shape " + shape.to_string());
    flat = flat * shape[k] + multi_index[k];
  }
  return flat;
}

std::vector<std::size_t> tensor_unindex(const TensorShape& shape, std::size_t flat) {
  if (flat >= shape.total()) throw std::domain_error("flat index out of range for shape " + shape.to_string());
  std::vector<std::size_t> idx(shape.rank());
  for (std::size_t k = shape.rank(); k-- > 0;) {
    idx[k] = flat % shape[k];
    flat /= shape[k];
  }
  return idx;
}

SparseVec axpy(const Scalar& a, const SparseVec& x, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].index < y[j].index)) {
      Scalar v = a * x[i].value;
      if (!v.is_zero()) out.push_back({x[i].index, std::move(v)});
      ++i;
    } else if (i == x.size() || y[j].index < x[i].index) {
      out.push_back(y[j]);
      ++j;
    } else {
      Scalar v = a * x[i].value + y[j].value;
      if (!v.is_zero()) out.push_back({x[i].index, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scaled(const Scalar& a, const SparseVec& x) {
  SparseVec out;
  if (a.is_zero()) return out;
  out.reserve(x.size());
  for (const auto& e : x) out.push_back({e.index, a * e.value});
  return out;
}

LinearMap::LinearMap(Field field, TensorShape domain, TensorShape codomain)
    : field_(field), domain_(std::move(domain)), codomain_(std::move(codomain)), columns_(domain_.total()) {}

LinearMap LinearMap::zero(const Field& f, const TensorShape& domain, const TensorShape& codomain) {
  return LinearMap(f, domain, codomain);
}

LinearMap LinearMap::identity(const Field& f, const TensorShape& shape) {
  LinearMap m(f, shape, shape);
  for (std::size_t j = 0; j < m.cols(); ++j) m.columns_[j].push_back({j, Scalar::one(f)});
  return m;
}

LinearMap LinearMap::from_rows(const Field& f, const TensorShape& domain, const TensorShape& codomain,
                               const std::vector<std::vector<long>>& rows) {
  LinearMap m(f, domain, codomain);
  if (rows.size() != m.rows()) throw std::domain_error("row count does not match codomain " + codomain.to_string());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::domain_error("column count does not match domain " + domain.to_string());
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c] != 0) m.columns_[c].push_back({r, Scalar::from_int(f, rows[r][c])});
  }
  for (auto& col : m.columns_)
    std::erase_if(col, [](const Entry& e) { return e.value.is_zero(); });
  return m;
}

LinearMap LinearMap::from_columns(const Field& f, const TensorShape& domain, const TensorShape& codomain,
                                  std::vector<SparseVec> columns) {
  LinearMap m(f, domain, codomain);
  if (columns.size() != m.cols()) throw std::domain_error("column count does not match domain " + domain.to_string());
  for (auto& col : columns)
    for (const auto& e : col)
      if (e.index >= m.rows()) throw std::domain_error("row index out of range in column data");
  m.columns_ = std::move(columns);
  return m;
}

Scalar LinearMap::at(std::size_t row, std::size_t col) const {
  const auto& c = columns_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::size_t r) { return e.index < r; });
  if (it != c.end() && it->index == row) return it->value;
  return Scalar::zero(field_);
}

void LinearMap::set(std::size_t row, std::size_t col, const Scalar& v) {
  if (row >= rows()) throw std::domain_error("row index out of range");
  auto& c = columns_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::size_t r) { return e.index < r; });
  if (it != c.end() && it->index == row) {
    if (v.is_zero())
      c.erase(it);
    else
      it->value = v;
  } else if (!v.is_zero()) {
    c.insert(it, {row, v});
  }
}

std::size_t LinearMap::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

bool LinearMap::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseVec& c) { return c.empty(); });
}

bool LinearMap::is_identity() const {
  if (rows() != cols()) return false;
  for (std::size_t j = 0; j < cols(); ++j) {
    const auto& c = columns_[j];
    if (c.size() != 1 || c[0].index != j || !c[0].value.is_one()) return false;
  }
  return true;
}

SparseVec LinearMap::apply(const SparseVec& v) const {
  std::unordered_map<std::size_t, Scalar> acc;
  for (const auto& e : v) {
    if (e.index >= cols()) throw std::domain_error("vector index outside map domain");
    for (const auto& r : columns_[e.index]) {
      auto [it, fresh] = acc.try_emplace(r.index, Scalar::zero(field_));
      it->second += e.value * r.value;
    }
  }
  SparseVec out;
  out.reserve(acc.size());
  for (auto& [k, s] : acc)
    if (!s.is_zero()) out.push_back({k, std::move(s)});
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  return out;
}

LinearMap LinearMap::reshaped(const TensorShape& domain, const TensorShape& codomain) const {
  if (domain.total() != cols() || codomain.total() != rows())
    throw std::domain_error("reshape must preserve dimensions");
  LinearMap m = *this;
  m.domain_ = domain;
  m.codomain_ = codomain;
  return m;
}

LinearMap LinearMap::transpose() const {
  LinearMap t(field_, codomain_, domain_);
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& e : columns_[j]) t.columns_[e.index].push_back({j, e.value});
  return t;
}

LinearMap& LinearMap::operator+=(const LinearMap& o) {
  if (o.rows() != rows() || o.cols() != cols()) throw std::domain_error("sum of maps with different dimensions");
  for (std::size_t j = 0; j < cols(); ++j) columns_[j] = axpy(Scalar::one(field_), o.columns_[j], columns_[j]);
  return *this;
}

LinearMap& LinearMap::operator-=(const LinearMap& o) {
  if (o.rows() != rows() || o.cols() != cols()) throw std::domain_error("difference of maps with different dimensions");
  for (std::size_t j = 0; j < cols(); ++j)
    columns_[j] = axpy(-Scalar::one(field_), o.columns_[j], columns_[j]);
  return *this;
}

LinearMap operator*(const Scalar& s, const LinearMap& m) {
  LinearMap out = m;
  for (auto& c : out.columns_) c = scaled(s, c);
  return out;
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
  if (b.rows() != a.cols())
    throw std::domain_error("composition of incompatible maps: " + b.codomain().to_string() + " into " +
                            a.domain().to_string());
  LinearMap out(a.field(), b.domain(), a.codomain());
  for (std::size_t j = 0; j < b.cols(); ++j) out.columns_[j] = a.apply(b.columns_[j]);
  return out;
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const auto& x = a.columns_[j];
    const auto& y = b.columns_[j];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].index != y[k].index || x[k].value != y[k].value) return false;
  }
  return true;
}

std::string LinearMap::to_string() const {
  std::ostringstream os;
  os << domain_.to_string() << " -> " << codomain_.to_string() << "\n";
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) os << (c ? " " : "") << at(r, c).to_string();
    os << "\n";
  }
  return os.str();
}

LinearMap tensor_of_maps(const LinearMap& f, const LinearMap& g) {
  LinearMap out = LinearMap::zero(f.field(), f.domain().concat(g.domain()), f.codomain().concat(g.codomain()));
  std::vector<SparseVec> cols(out.cols());
  const std::size_t gr = g.rows(), gc = g.cols();
  for (std::size_t i = 0; i < f.cols(); ++i)
    for (std::size_t j = 0; j < gc; ++j) {
      auto& col = cols[i * gc + j];
      for (const auto& a : f.column(i))
        for (const auto& b : g.column(j)) col.push_back({a.index * gr + b.index, a.value * b.value});
    }
  return LinearMap::from_columns(f.field(), out.domain(), out.codomain(), std::move(cols));
}

LinearMap permute_legs(const Field& f, const TensorShape& shape, std::span<const std::size_t> perm) {
  const std::size_t n = shape.rank();
  if (perm.size() != n) throw std::domain_error("permutation length does not match shape " + shape.to_string());
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw std::domain_error("not a permutation of the tensor legs");
    seen[p] = true;
  }
  std::vector<std::size_t> out_factors(n);
  for (std::size_t k = 0; k < n; ++k) out_factors[perm[k]] = shape[k];
  TensorShape out_shape(out_factors);
  std::vector<SparseVec> cols(shape.total());
  std::vector<std::size_t> target(n);
  for (std::size_t flat = 0; flat < shape.total(); ++flat) {
    auto idx = tensor_unindex(shape, flat);
    for (std::size_t k = 0; k < n; ++k) target[perm[k]] = idx[k];
    cols[flat].push_back({tensor_index(out_shape, target), Scalar::one(f)});
  }
  return LinearMap::from_columns(f, shape, out_shape, std::move(cols));
}

LinearMap power(const LinearMap& m, unsigned k) {
  if (m.rows() != m.cols()) throw std::domain_error("power of a non-square map");
  LinearMap out = LinearMap::identity(m.field(), m.domain());
  for (unsigned i = 0; i < k; ++i) out = m * out;
  return out;
}

LinearMap block_matrix(const Field& f, const std::vector<std::size_t>& row_dims,
                       const std::vector<std::size_t>& col_dims,
                       const std::vector<std::vector<const LinearMap*>>& blocks) {
  const std::size_t rtot = std::accumulate(row_dims.begin(), row_dims.end(), std::size_t{0});
  const std::size_t ctot = std::accumulate(col_dims.begin(), col_dims.end(), std::size_t{0});
  std::vector<SparseVec> cols(ctot);
  std::size_t coff = 0;
  for (std::size_t c = 0; c < col_dims.size(); ++c) {
    std::size_t roff = 0;
    for (std::size_t r = 0; r < row_dims.size(); ++r) {
      const LinearMap* b = blocks[r][c];
      if (b != nullptr) {
        if (b->rows() != row_dims[r] || b->cols() != col_dims[c])
          throw std::domain_error("block dimensions do not match the block layout");
        for (std::size_t j = 0; j < col_dims[c]; ++j)
          for (const auto& e : b->column(j)) cols[coff + j].push_back({roff + e.index, e.value});
      }
      roff += row_dims[r];
    }
    coff += col_dims[c];
  }
  // Blocks are visited in increasing row offset, so columns stay sorted.
  return LinearMap::from_columns(f, TensorShape::flat(ctot), TensorShape::flat(rtot), std::move(cols));
}

}  // namespace hopfcyc
