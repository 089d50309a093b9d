#include "hopfcyc/linalg.hpp"

#include <algorithm>

namespace hopfcyc {

namespace {

// Dense matrices at or below this many entries get Bareiss ranks over ℚ.
constexpr std::size_t kDenseLimit = 10000;

SparseVec unit(const Field& f, std::size_t i) { return {{i, Scalar::one(f)}}; }

}  // namespace

Eliminator::Eliminator(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {}

bool Eliminator::insert_tagged(const SparseVec& v, std::size_t tag) { return insert_impl(v, unit(field_, tag), true); }

bool Eliminator::insert(const SparseVec& v) { return insert_impl(v, {}, false); }

bool Eliminator::insert_impl(SparseVec v, SparseVec combo, bool tracked) {
  while (!v.empty()) {
    auto it = rows_.find(v.front().index);
    if (it == rows_.end()) {
      Scalar inv = Scalar::one(field_) / v.front().value;
      Row r{scaled(inv, v), scaled(inv, combo)};
      rows_.emplace(v.front().index, std::move(r));
      return true;
    }
    Scalar c = -v.front().value;
    v = axpy(c, it->second.v, v);
    combo = axpy(c, it->second.combo, combo);
  }
  if (tracked) relations_.push_back(std::move(combo));
  return false;
}

std::optional<SparseVec> Eliminator::express(const SparseVec& v0) const {
  SparseVec v = v0;
  SparseVec combo;
  while (!v.empty()) {
    auto it = rows_.find(v.front().index);
    if (it == rows_.end()) return std::nullopt;
    Scalar c = v.front().value;
    v = axpy(-c, it->second.v, v);
    combo = axpy(c, it->second.combo, combo);
  }
  return combo;
}

std::vector<SparseVec> Eliminator::rows() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (const auto& [k, r] : rows_) out.push_back(r.v);
  return out;
}

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<SparseVec>& vectors) {
  Eliminator e(f, ambient);
  for (const auto& v : vectors) {
    if (!v.empty() && v.back().index >= ambient) throw std::domain_error("vector outside ambient space");
    e.insert(v);
  }
  Subspace s;
  s.field_ = f;
  s.ambient_ = ambient;
  s.basis_ = e.rows();
  for (const auto& b : s.basis_) s.pivots_.push_back(b.front().index);
  return s;
}

Subspace Subspace::zero(const Field& f, std::size_t ambient) { return span(f, ambient, {}); }

Subspace Subspace::whole(const Field& f, std::size_t ambient) {
  Subspace s;
  s.field_ = f;
  s.ambient_ = ambient;
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit(f, i));
    s.pivots_.push_back(i);
  }
  return s;
}

std::optional<SparseVec> Subspace::coordinates(const SparseVec& v0) const {
  SparseVec v = v0;
  SparseVec coords;
  while (!v.empty()) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), v.front().index);
    if (it == pivots_.end() || *it != v.front().index) return std::nullopt;
    const auto pos = static_cast<std::size_t>(it - pivots_.begin());
    Scalar c = v.front().value;
    v = axpy(-c, basis_[pos], v);
    coords.push_back({pos, c});
  }
  // Pivots are visited in increasing order, so coords is already sorted.
  return coords;
}

bool Subspace::contains(const SparseVec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const SparseVec& v) { return contains(v); });
}

LinearMap Subspace::inclusion() const {
  return LinearMap::from_columns(field_, TensorShape::flat(dim()), TensorShape::flat(ambient_), basis_);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.contains(b);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::domain_error("sum of subspaces of different spaces");
  auto vs = a.basis();
  vs.insert(vs.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.field(), a.ambient(), vs);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::domain_error("intersection of subspaces of different spaces");
  Eliminator e(a.field(), a.ambient());
  for (const auto& v : a.basis()) e.insert(v);
  for (std::size_t j = 0; j < b.dim(); ++j) e.insert_tagged(b.basis()[j], j);
  std::vector<SparseVec> out;
  for (const auto& rel : e.relations()) {
    SparseVec w;
    for (const auto& t : rel) w = axpy(t.value, b.basis()[t.index], w);
    out.push_back(std::move(w));
  }
  return Subspace::span(a.field(), a.ambient(), out);
}

RankKernelImage rank_kernel_image(const LinearMap& f) {
  Eliminator e(f.field(), f.rows());
  for (std::size_t j = 0; j < f.cols(); ++j) e.insert_tagged(f.column(j), j);
  RankKernelImage r{e.rank(), Subspace::span(f.field(), f.cols(), e.relations()),
                    Subspace::span(f.field(), f.rows(), e.rows())};
  return r;
}

std::size_t rank(const LinearMap& f) {
  if (f.field().is_rational() && f.rows() * f.cols() <= kDenseLimit && f.rows() * f.cols() > 0)
    return bareiss_rank(f);
  Eliminator e(f.field(), f.rows());
  for (std::size_t j = 0; j < f.cols(); ++j) e.insert(f.column(j));
  return e.rank();
}

Subspace kernel(const LinearMap& f) { return rank_kernel_image(f).kernel; }

Subspace image(const LinearMap& f) { return Subspace::span(f.field(), f.rows(), f.columns()); }

Subspace image_of(const LinearMap& f, const Subspace& u) {
  if (u.ambient() != f.cols()) throw std::domain_error("subspace is not in the domain of the map");
  std::vector<SparseVec> vs;
  vs.reserve(u.dim());
  for (const auto& b : u.basis()) vs.push_back(f.apply(b));
  return Subspace::span(f.field(), f.rows(), vs);
}

Subspace preimage(const LinearMap& f, const Subspace& w) {
  if (w.ambient() != f.rows()) throw std::domain_error("subspace is not in the codomain of the map");
  Eliminator e(f.field(), f.rows());
  for (const auto& v : w.basis()) e.insert(v);
  for (std::size_t j = 0; j < f.cols(); ++j) e.insert_tagged(f.column(j), j);
  return Subspace::span(f.field(), f.cols(), e.relations());
}

std::size_t bareiss_rank(const LinearMap& f) {
  if (!f.field().is_rational()) throw std::domain_error("Bareiss elimination is only used over the rationals");
  const std::size_t m = f.rows(), n = f.cols();
  std::vector<std::vector<mpz_class>> a(m, std::vector<mpz_class>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    mpz_class l = 1;
    for (const auto& e : f.column(j)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.value.to_rational().get_den_mpz_t());
    for (const auto& e : f.column(j)) {
      mpq_class q = e.value.to_rational() * l;
      a[e.index][j] = q.get_num();
    }
  }
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && a[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t k = c + 1; k < n; ++k) {
        a[i][k] = a[i][k] * a[r][c] - a[i][c] * a[r][k];
        mpz_divexact(a[i][k].get_mpz_t(), a[i][k].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::size_t subquotient_dim(const Subspace& z, const Subspace& bd) {
  if (!z.contains(bd)) throw ConsistencyError("boundary space is not contained in the cycle space");
  return z.dim() - bd.dim();
}

LinearMap restrict_map(const LinearMap& f, const Subspace& u, const Subspace& v) {
  if (u.ambient() != f.cols() || v.ambient() != f.rows())
    throw std::domain_error("restriction subspaces do not match the map");
  std::vector<SparseVec> cols;
  cols.reserve(u.dim());
  for (const auto& b : u.basis()) {
    auto c = v.coordinates(f.apply(b));
    if (!c) throw ConsistencyError("map does not carry the subspace into the target subspace");
    cols.push_back(std::move(*c));
  }
  return LinearMap::from_columns(f.field(), TensorShape::flat(u.dim()), TensorShape::flat(v.dim()), std::move(cols));
}

LinearMap inverse(const LinearMap& f) {
  if (f.rows() != f.cols()) throw ConsistencyError("inverse of a non-square map");
  Eliminator e(f.field(), f.rows());
  for (std::size_t j = 0; j < f.cols(); ++j) e.insert_tagged(f.column(j), j);
  if (e.rank() != f.cols()) throw ConsistencyError("map is singular");
  std::vector<SparseVec> cols;
  cols.reserve(f.rows());
  for (std::size_t i = 0; i < f.rows(); ++i) cols.push_back(*e.express(unit(f.field(), i)));
  return LinearMap::from_columns(f.field(), f.codomain(), f.domain(), std::move(cols));
}

std::optional<SparseVec> solve(const LinearMap& f, const SparseVec& b) {
  Eliminator e(f.field(), f.rows());
  for (std::size_t j = 0; j < f.cols(); ++j) e.insert_tagged(f.column(j), j);
  return e.express(b);
}

}  // namespace hopfcyc
