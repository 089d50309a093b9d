#include "hopfcyc/cocyclic.hpp"

#include <algorithm>

namespace hopfcyc {

namespace {

enum OpKind { kCoface, kCodegeneracy, kCyclic, kHCoface, kHCodegeneracy, kHCyclic };

std::string at(std::size_t n) { return " at n=" + std::to_string(n); }
std::string at(std::size_t n, std::size_t i) { return " at n=" + std::to_string(n) + ", i=" + std::to_string(i); }
std::string at(std::size_t n, std::size_t i, std::size_t j) {
  return " at n=" + std::to_string(n) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j);
}

Scalar sgn(const Field& f, std::size_t k) { return Scalar::from_int(f, k % 2 ? -1 : 1); }

}  // namespace

const LinearMap& detail::OperatorCache::get(const Key& key, const std::function<LinearMap()>& make) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = maps_.find(key);
    if (it != maps_.end()) return *it->second;
  }
  // Built outside the lock; a concurrent duplicate build is discarded.
  auto made = std::make_shared<const LinearMap>(make());
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, fresh] = maps_.emplace(key, std::move(made));
  return *it->second;
}

ParacocyclicFamily::ParacocyclicFamily(std::string name, Field field, std::size_t truncation, SpaceFn space,
                                       IndexedFn coface, IndexedFn codegeneracy, CyclicFn cyclic)
    : name_(std::move(name)),
      field_(field),
      truncation_(truncation),
      space_(std::move(space)),
      coface_(std::move(coface)),
      codegeneracy_(std::move(codegeneracy)),
      cyclic_(std::move(cyclic)) {}

ParacocyclicFamily ParacocyclicFamily::with_truncation(std::size_t n) const {
  ParacocyclicFamily f = *this;
  f.truncation_ = n;
  return f;
}

TensorShape ParacocyclicFamily::space(std::size_t n) const { return space_(n); }

const LinearMap& ParacocyclicFamily::coface(std::size_t n, std::size_t i) const {
  if (i > n + 1) throw std::out_of_range("coface index " + std::to_string(i) + at(n));
  return cache_->get({kCoface, n, i, 0}, [&] { return coface_(n, i); });
}

const LinearMap& ParacocyclicFamily::codegeneracy(std::size_t n, std::size_t i) const {
  if (n == 0 || i > n - 1) throw std::out_of_range("codegeneracy index " + std::to_string(i) + at(n));
  return cache_->get({kCodegeneracy, n, i, 0}, [&] { return codegeneracy_(n, i); });
}

const LinearMap& ParacocyclicFamily::cyclic(std::size_t n) const {
  return cache_->get({kCyclic, n, 0, 0}, [&] { return cyclic_(n); });
}

CocylindricalFamily::CocylindricalFamily(std::string name, Field field, std::size_t pmax, std::size_t qmax,
                                         SpaceFn space, Operators horizontal, Operators vertical)
    : name_(std::move(name)),
      field_(field),
      pmax_(pmax),
      qmax_(qmax),
      space_(std::move(space)),
      h_(std::move(horizontal)),
      v_(std::move(vertical)) {}

CocylindricalFamily CocylindricalFamily::with_truncation(std::size_t pmax, std::size_t qmax) const {
  CocylindricalFamily f = *this;
  f.pmax_ = pmax;
  f.qmax_ = qmax;
  return f;
}

TensorShape CocylindricalFamily::space(std::size_t p, std::size_t q) const { return space_(p, q); }

const LinearMap& CocylindricalFamily::coface(std::size_t p, std::size_t q, std::size_t i) const {
  if (i > q + 1) throw std::out_of_range("vertical coface index out of range");
  return cache_->get({kCoface, p, q, i}, [&] { return v_.coface(p, q, i); });
}
const LinearMap& CocylindricalFamily::codegeneracy(std::size_t p, std::size_t q, std::size_t i) const {
  if (q == 0 || i > q - 1) throw std::out_of_range("vertical codegeneracy index out of range");
  return cache_->get({kCodegeneracy, p, q, i}, [&] { return v_.codegeneracy(p, q, i); });
}
const LinearMap& CocylindricalFamily::cyclic(std::size_t p, std::size_t q) const {
  return cache_->get({kCyclic, p, q, 0}, [&] { return v_.cyclic(p, q); });
}
const LinearMap& CocylindricalFamily::hcoface(std::size_t p, std::size_t q, std::size_t i) const {
  if (i > p + 1) throw std::out_of_range("horizontal coface index out of range");
  return cache_->get({kHCoface, p, q, i}, [&] { return h_.coface(p, q, i); });
}
const LinearMap& CocylindricalFamily::hcodegeneracy(std::size_t p, std::size_t q, std::size_t i) const {
  if (p == 0 || i > p - 1) throw std::out_of_range("horizontal codegeneracy index out of range");
  return cache_->get({kHCodegeneracy, p, q, i}, [&] { return h_.codegeneracy(p, q, i); });
}
const LinearMap& CocylindricalFamily::hcyclic(std::size_t p, std::size_t q) const {
  return cache_->get({kHCyclic, p, q, 0}, [&] { return h_.cyclic(p, q); });
}

ParacocyclicFamily CocylindricalFamily::row(std::size_t p) const {
  const CocylindricalFamily self = *this;
  return ParacocyclicFamily(
      name_ + " row " + std::to_string(p), field_, qmax_, [self, p](std::size_t q) { return self.space(p, q); },
      [self, p](std::size_t q, std::size_t i) { return self.coface(p, q, i); },
      [self, p](std::size_t q, std::size_t i) { return self.codegeneracy(p, q, i); },
      [self, p](std::size_t q) { return self.cyclic(p, q); });
}

ParacocyclicFamily CocylindricalFamily::column(std::size_t q) const {
  const CocylindricalFamily self = *this;
  return ParacocyclicFamily(
      name_ + " column " + std::to_string(q), field_, pmax_, [self, q](std::size_t p) { return self.space(p, q); },
      [self, q](std::size_t p, std::size_t i) { return self.hcoface(p, q, i); },
      [self, q](std::size_t p, std::size_t i) { return self.hcodegeneracy(p, q, i); },
      [self, q](std::size_t p) { return self.hcyclic(p, q); });
}

CheckReport check_paracocyclic(const ParacocyclicFamily& f) {
  CheckReport r;
  const std::size_t N = f.truncation();
  const std::vector<std::vector<std::string>> none;
  for (std::size_t n = 0; n <= N; ++n) {
    const LinearMap id = LinearMap::identity(f.field(), f.space(n));
    // ∂^j ∂^i = ∂^i ∂^{j−1}, i < j, on A^n (needs A^{n+2}).
    if (n + 2 <= N)
      for (std::size_t j = 1; j <= n + 2; ++j)
        for (std::size_t i = 0; i < j; ++i)
          r.add("coface-coface" + at(n, i, j), f.coface(n + 1, j) * f.coface(n, i), f.coface(n + 1, i) * f.coface(n, j - 1),
                none);
    // σ^j σ^i = σ^i σ^{j+1}, i ≤ j, on A^n.
    if (n >= 2)
      for (std::size_t j = 0; j + 2 <= n; ++j)
        for (std::size_t i = 0; i <= j; ++i)
          r.add("codegeneracy-codegeneracy" + at(n, i, j), f.codegeneracy(n - 1, j) * f.codegeneracy(n, i),
                f.codegeneracy(n - 1, i) * f.codegeneracy(n, j + 1), none);
    // σ^j ∂^i on A^n, with σ^j : A^{n+1} → A^n.
    if (n + 1 <= N)
      for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= n + 1; ++i) {
          const LinearMap lhs = f.codegeneracy(n + 1, j) * f.coface(n, i);
          if (i == j || i == j + 1)
            r.add("codegeneracy-coface" + at(n, i, j), lhs, id, none);
          else if (i < j)
            r.add("codegeneracy-coface" + at(n, i, j), lhs, f.coface(n - 1, i) * f.codegeneracy(n, j - 1), none);
          else
            r.add("codegeneracy-coface" + at(n, i, j), lhs, f.coface(n - 1, i - 1) * f.codegeneracy(n, j), none);
        }
    // τ_{n+1} ∂^i = ∂^{i−1} τ_n (1 ≤ i ≤ n+1), τ_{n+1} ∂^0 = ∂^{n+1}.
    if (n + 1 <= N) {
      for (std::size_t i = 1; i <= n + 1; ++i)
        r.add("cyclic-coface" + at(n, i), f.cyclic(n + 1) * f.coface(n, i), f.coface(n, i - 1) * f.cyclic(n), none);
      r.add("cyclic-coface0" + at(n), f.cyclic(n + 1) * f.coface(n, 0), f.coface(n, n + 1), none);
    }
    // τ_{n−1} σ^i = σ^{i−1} τ_n (1 ≤ i ≤ n−1), τ_{n−1} σ^0 = σ^{n−1} τ_n².
    if (n >= 1) {
      for (std::size_t i = 1; i + 1 <= n; ++i)
        r.add("cyclic-codegeneracy" + at(n, i), f.cyclic(n - 1) * f.codegeneracy(n, i),
              f.codegeneracy(n, i - 1) * f.cyclic(n), none);
      r.add("cyclic-codegeneracy0" + at(n), f.cyclic(n - 1) * f.codegeneracy(n, 0),
            f.codegeneracy(n, n - 1) * f.cyclic(n) * f.cyclic(n), none);
    }
  }
  return r;
}

CheckReport check_cyclic_order(const ParacocyclicFamily& f) {
  CheckReport r;
  for (std::size_t n = 0; n <= f.truncation(); ++n)
    r.add("cyclic order" + at(n), power(f.cyclic(n), static_cast<unsigned>(n + 1)),
          LinearMap::identity(f.field(), f.space(n)), {});
  return r;
}

CheckReport check_cocylindrical(const CocylindricalFamily& f) {
  CheckReport r;
  const std::vector<std::vector<std::string>> none;
  const auto merge = [&](const CheckReport& part, const std::string& where) {
    for (auto a : part.results) {
      a.axiom = where + ": " + a.axiom;
      r.results.push_back(std::move(a));
    }
  };
  for (std::size_t p = 0; p <= f.pmax(); ++p) merge(check_paracocyclic(f.row(p)), "row " + std::to_string(p));
  for (std::size_t q = 0; q <= f.qmax(); ++q) merge(check_paracocyclic(f.column(q)), "column " + std::to_string(q));

  for (std::size_t p = 0; p <= f.pmax(); ++p)
    for (std::size_t q = 0; q <= f.qmax(); ++q) {
      const std::string w = " at (p,q)=(" + std::to_string(p) + "," + std::to_string(q) + ")";
      // Each operator with its target index; horizontal ones are functions of q,
      // vertical ones of p.
      struct Op {
        std::string name;
        std::size_t target;
        std::function<LinearMap(std::size_t)> at;
      };
      std::vector<Op> hs, vs;
      if (p + 1 <= f.pmax())
        for (std::size_t i = 0; i <= p + 1; ++i)
          hs.push_back({"hcoface " + std::to_string(i), p + 1, [&f, p, i](std::size_t qq) { return f.hcoface(p, qq, i); }});
      for (std::size_t i = 0; i + 1 <= p; ++i)
        hs.push_back({"hcodegeneracy " + std::to_string(i), p - 1,
                      [&f, p, i](std::size_t qq) { return f.hcodegeneracy(p, qq, i); }});
      hs.push_back({"hcyclic", p, [&f, p](std::size_t qq) { return f.hcyclic(p, qq); }});
      if (q + 1 <= f.qmax())
        for (std::size_t i = 0; i <= q + 1; ++i)
          vs.push_back({"coface " + std::to_string(i), q + 1, [&f, q, i](std::size_t pp) { return f.coface(pp, q, i); }});
      for (std::size_t i = 0; i + 1 <= q; ++i)
        vs.push_back({"codegeneracy " + std::to_string(i), q - 1,
                      [&f, q, i](std::size_t pp) { return f.codegeneracy(pp, q, i); }});
      vs.push_back({"cyclic", q, [&f, q](std::size_t pp) { return f.cyclic(pp, q); }});

      for (const auto& X : hs)
        for (const auto& Y : vs)
          r.add(X.name + " commutes with " + Y.name + w, X.at(Y.target) * Y.at(p), Y.at(X.target) * X.at(q), none);
      r.add("cylindrical identity" + w,
            power(f.hcyclic(p, q), static_cast<unsigned>(p + 1)) * power(f.cyclic(p, q), static_cast<unsigned>(q + 1)),
            LinearMap::identity(f.field(), f.space(p, q)), none);
    }
  return r;
}

ParacocyclicFamily diagonal(const CocylindricalFamily& f) {
  const CocylindricalFamily c = f;
  return ParacocyclicFamily(
      "diagonal of " + f.name(), f.field(), std::min(f.pmax(), f.qmax()),
      [c](std::size_t n) { return c.space(n, n); },
      [c](std::size_t n, std::size_t i) { return c.hcoface(n, n + 1, i) * c.coface(n, n, i); },
      [c](std::size_t n, std::size_t i) { return c.hcodegeneracy(n, n - 1, i) * c.codegeneracy(n, n, i); },
      [c](std::size_t n) { return c.hcyclic(n, n) * c.cyclic(n, n); });
}

LinearMap hochschild_b(const ParacocyclicFamily& f, std::size_t n) {
  LinearMap b = LinearMap::zero(f.field(), f.space(n), f.space(n + 1));
  for (std::size_t i = 0; i <= n + 1; ++i) b += sgn(f.field(), i) * f.coface(n, i);
  return b;
}

LinearMap extra_codegeneracy(const ParacocyclicFamily& f, std::size_t n) {
  return f.codegeneracy(n + 1, n) * f.cyclic(n + 1);
}

LinearMap norm_operator(const ParacocyclicFamily& f, std::size_t n) {
  LinearMap N = LinearMap::zero(f.field(), f.space(n), f.space(n));
  LinearMap t = LinearMap::identity(f.field(), f.space(n));
  for (std::size_t i = 0; i <= n; ++i) {
    N += sgn(f.field(), i * n) * t;
    t = f.cyclic(n) * t;
  }
  return N;
}

LinearMap connes_B(const ParacocyclicFamily& f, std::size_t n) {
  const LinearMap one = LinearMap::identity(f.field(), f.space(n + 1));
  const LinearMap lambda = one - sgn(f.field(), n + 1) * f.cyclic(n + 1);
  return norm_operator(f, n) * extra_codegeneracy(f, n) * lambda;
}

LinearMap MixedComplexT::T(std::size_t n) const {
  LinearMap t = LinearMap::identity(field, TensorShape::flat(dims[n]));
  LinearMap s = B[n] * b[n];
  if (n > 0) s += b[n - 1] * B[n - 1];
  return t - s.reshaped(t.domain(), t.codomain());
}

MixedComplexT mixed_complex(const ParacocyclicFamily& f) {
  MixedComplexT m;
  m.name = f.name();
  m.field = f.field();
  m.top = f.truncation();
  for (std::size_t n = 0; n <= m.top; ++n) m.dims.push_back(f.dim(n));
  for (std::size_t n = 0; n < m.top; ++n) {
    m.b.push_back(hochschild_b(f, n).reshaped(TensorShape::flat(m.dims[n]), TensorShape::flat(m.dims[n + 1])));
    m.B.push_back(connes_B(f, n).reshaped(TensorShape::flat(m.dims[n + 1]), TensorShape::flat(m.dims[n])));
  }
  return m;
}

CheckReport check_mixed(const MixedComplexT& m, bool expect_mixed) {
  CheckReport r;
  const std::vector<std::vector<std::string>> none;
  for (std::size_t n = 0; n + 1 < m.top; ++n) {
    const auto zero = LinearMap::zero(m.field, TensorShape::flat(m.dims[n]), TensorShape::flat(m.dims[n + 2]));
    r.add("b squared" + at(n), m.b[n + 1] * m.b[n], zero, none);
    if (!expect_mixed) continue;
    const auto zeroB = LinearMap::zero(m.field, TensorShape::flat(m.dims[n + 2]), TensorShape::flat(m.dims[n]));
    r.add("B squared" + at(n), m.B[n] * m.B[n + 1], zeroB, none);
  }
  for (std::size_t n = 0; n < m.top; ++n) {
    const auto id = LinearMap::identity(m.field, TensorShape::flat(m.dims[n]));
    if (expect_mixed) {
      r.add("T is the identity" + at(n), m.T(n), id, none);
    } else {
      AxiomResult a{"T is invertible" + at(n), rank(m.T(n)) == m.dims[n], {}};
      if (!a.passed) a.witness = "rank " + std::to_string(rank(m.T(n))) + " < " + std::to_string(m.dims[n]);
      r.results.push_back(std::move(a));
    }
  }
  return r;
}

std::size_t tot_offset(const CocylindricalFamily& f, std::size_t n, std::size_t p) {
  std::size_t off = 0;
  for (std::size_t k = 0; k < p; ++k) off += f.dim(k, n - k);
  return off;
}

namespace {

/// The pieces of a bicomplex needed to assemble Tot, all in flat coordinates.
struct BicomplexPieces {
  std::function<std::size_t(std::size_t, std::size_t)> dim;
  std::function<LinearMap(std::size_t, std::size_t)> vb, vB, vT, hb, hB;  // vB, hB from degree +1
};

MixedComplexT assemble_tot(const Field& fld, std::size_t top, const BicomplexPieces& x) {
  MixedComplexT m;
  m.field = fld;
  m.top = top;
  const auto offset = [&](std::size_t n, std::size_t p) {
    std::size_t off = 0;
    for (std::size_t k = 0; k < p; ++k) off += x.dim(k, n - k);
    return off;
  };
  for (std::size_t n = 0; n <= top; ++n) m.dims.push_back(offset(n, n + 1));
  const auto place = [](SparseVec& col, const SparseVec& part, std::size_t off) {
    for (const auto& e : part) col.push_back({off + e.index, e.value});
  };
  const auto sorted = [](SparseVec col) {
    std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
    return col;
  };

  for (std::size_t n = 0; n < top; ++n) {
    // d = b̄ + (−1)^p b : Tot^n → Tot^{n+1}
    std::vector<SparseVec> dcols(m.dims[n]);
    for (std::size_t p = 0; p <= n; ++p) {
      const std::size_t q = n - p;
      const LinearMap bv = sgn(fld, p) * x.vb(p, q);  // (p,q) → (p,q+1)
      const LinearMap bh = x.hb(p, q);                // (p,q) → (p+1,q)
      for (std::size_t j = 0; j < x.dim(p, q); ++j) {
        SparseVec col;
        place(col, bv.column(j), offset(n + 1, p));
        place(col, bh.column(j), offset(n + 1, p + 1));
        dcols[offset(n, p) + j] = sorted(std::move(col));
      }
    }
    m.b.push_back(LinearMap::from_columns(fld, TensorShape::flat(m.dims[n]), TensorShape::flat(m.dims[n + 1]),
                                          std::move(dcols)));

    // D = (−1)^p B + T B̄ : Tot^{n+1} → Tot^n
    std::vector<SparseVec> Dcols(m.dims[n + 1]);
    for (std::size_t p = 0; p <= n + 1; ++p) {
      const std::size_t q = n + 1 - p;
      LinearMap v, h;
      if (q >= 1) v = sgn(fld, p) * x.vB(p, q - 1);     // (p,q) → (p,q−1)
      if (p >= 1) h = x.vT(p - 1, q) * x.hB(p - 1, q);  // (p,q) → (p−1,q)
      for (std::size_t j = 0; j < x.dim(p, q); ++j) {
        SparseVec col;
        if (q >= 1) place(col, v.column(j), offset(n, p));
        if (p >= 1) place(col, h.column(j), offset(n, p - 1));
        Dcols[offset(n + 1, p) + j] = sorted(std::move(col));
      }
    }
    m.B.push_back(LinearMap::from_columns(fld, TensorShape::flat(m.dims[n + 1]), TensorShape::flat(m.dims[n]),
                                          std::move(Dcols)));
  }
  return m;
}

LinearMap flat(const LinearMap& a) {
  return a.reshaped(TensorShape::flat(a.domain().total()), TensorShape::flat(a.codomain().total()));
}

LinearMap row_T(const ParacocyclicFamily& row, std::size_t q) {
  LinearMap s = connes_B(row, q) * hochschild_b(row, q);
  if (q > 0) s += hochschild_b(row, q - 1) * connes_B(row, q - 1);
  return LinearMap::identity(row.field(), row.space(q)) - s;
}

}  // namespace

MixedComplexT tot_mixed(const CocylindricalFamily& f) {
  BicomplexPieces x;
  x.dim = [&](std::size_t p, std::size_t q) { return f.dim(p, q); };
  x.vb = [&](std::size_t p, std::size_t q) { return flat(hochschild_b(f.row(p), q)); };
  x.vB = [&](std::size_t p, std::size_t q) { return flat(connes_B(f.row(p), q)); };
  x.vT = [&](std::size_t p, std::size_t q) { return flat(row_T(f.row(p), q)); };
  x.hb = [&](std::size_t p, std::size_t q) { return flat(hochschild_b(f.column(q), p)); };
  x.hB = [&](std::size_t p, std::size_t q) { return flat(connes_B(f.column(q), p)); };
  MixedComplexT m = assemble_tot(f.field(), std::min(f.pmax(), f.qmax()), x);
  m.name = "Tot of " + f.name();
  return m;
}

NormalizedTot tot_normalized(const CocylindricalFamily& f) {
  const std::size_t top = std::min(f.pmax(), f.qmax());
  NormalizedTot out;
  out.spaces.assign(top + 1, {});
  for (std::size_t p = 0; p <= top; ++p)
    for (std::size_t q = 0; p + q <= top; ++q) {
      Subspace s = Subspace::whole(f.field(), f.dim(p, q));
      for (std::size_t i = 0; i < q; ++i) s = intersect(s, kernel(f.codegeneracy(p, q, i)));
      for (std::size_t i = 0; i < p; ++i) s = intersect(s, kernel(f.hcodegeneracy(p, q, i)));
      out.spaces[p].push_back(std::move(s));
    }
  const auto& N = out.spaces;
  BicomplexPieces x;
  x.dim = [&](std::size_t p, std::size_t q) { return N[p][q].dim(); };
  x.vb = [&](std::size_t p, std::size_t q) { return restrict_map(hochschild_b(f.row(p), q), N[p][q], N[p][q + 1]); };
  x.vB = [&](std::size_t p, std::size_t q) { return restrict_map(connes_B(f.row(p), q), N[p][q + 1], N[p][q]); };
  x.vT = [&](std::size_t p, std::size_t q) { return restrict_map(row_T(f.row(p), q), N[p][q], N[p][q]); };
  x.hb = [&](std::size_t p, std::size_t q) { return restrict_map(hochschild_b(f.column(q), p), N[p][q], N[p + 1][q]); };
  x.hB = [&](std::size_t p, std::size_t q) { return restrict_map(connes_B(f.column(q), p), N[p + 1][q], N[p][q]); };
  out.complex = assemble_tot(f.field(), top, x);
  out.complex.name = "normalized Tot of " + f.name();
  return out;
}

LinearMap shuffle_f0(const CocylindricalFamily& f, std::size_t n) {
  const Field& fld = f.field();
  std::vector<SparseVec> cols(f.dim(n, n));
  for (std::size_t p = 0; p <= n; ++p) {
    const std::size_t q = n - p;
    const std::size_t off = tot_offset(f, n, p);
    LinearMap part = LinearMap::zero(fld, f.space(n, n), f.space(p, q));
    // Choose μ (size p) ⊂ {0..n−1}; ν is the complement (size q).
    std::vector<bool> choose(n, false);
    std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(p), true);
    do {
      std::vector<std::size_t> mu, nu;
      for (std::size_t k = 0; k < n; ++k) (choose[k] ? mu : nu).push_back(k);
      // Sign of the permutation listing μ then ν.
      std::size_t inversions = 0;
      for (auto a : mu)
        for (auto b : nu)
          if (a > b) ++inversions;
      // Vertical codegeneracies σ^{μ_p} first (from q = n), then horizontal ones.
      LinearMap op = LinearMap::identity(fld, f.space(n, n));
      std::size_t qq = n;
      for (std::size_t k = mu.size(); k-- > 0;) op = f.codegeneracy(n, qq--, mu[k]) * op;
      std::size_t pp = n;
      for (std::size_t k = nu.size(); k-- > 0;) op = f.hcodegeneracy(pp--, q, nu[k]) * op;
      part += sgn(fld, inversions) * op;
    } while (std::prev_permutation(choose.begin(), choose.end()));
    for (std::size_t j = 0; j < part.cols(); ++j)
      for (const auto& e : part.column(j)) cols[j].push_back({off + e.index, e.value});
  }
  return LinearMap::from_columns(fld, f.space(n, n), TensorShape::flat(tot_offset(f, n, n + 1)), std::move(cols));
}

NormalizedComplex normalize(const ParacocyclicFamily& f) {
  NormalizedComplex out;
  const std::size_t top = f.truncation();
  for (std::size_t n = 0; n <= top; ++n) {
    Subspace s = Subspace::whole(f.field(), f.dim(n));
    for (std::size_t i = 0; i < n; ++i) s = intersect(s, kernel(f.codegeneracy(n, i)));
    out.spaces.push_back(std::move(s));
  }
  MixedComplexT& m = out.complex;
  m.name = "normalized " + f.name();
  m.field = f.field();
  m.top = top;
  for (const auto& s : out.spaces) m.dims.push_back(s.dim());
  for (std::size_t n = 0; n < top; ++n) {
    m.b.push_back(restrict_map(hochschild_b(f, n), out.spaces[n], out.spaces[n + 1]));
    m.B.push_back(restrict_map(connes_B(f, n), out.spaces[n + 1], out.spaces[n]));
  }
  return out;
}

}  // namespace hopfcyc
