#include "hopfcyc/cohomology.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include <json.hpp>

namespace hopfcyc {

std::string to_string(CoefficientChoice w) { return w == CoefficientChoice::hochschild ? "hh" : "hc"; }

CoefficientChoice parse_coefficients(const std::string& text) {
  if (text == "hh") return CoefficientChoice::hochschild;
  if (text == "hc") return CoefficientChoice::cyclic;
  throw std::invalid_argument("unknown theory '" + text + "' (expected hh or hc)");
}

std::optional<std::size_t> DimensionTable::at(const std::vector<std::size_t>& index) const {
  const auto it = entries.find(index);
  if (it == entries.end()) return std::nullopt;
  return it->second;
}

std::string PageReport::to_json() const {
  nlohmann::ordered_json j;
  j["instance"] = instance;
  j["field"] = field.to_string();
  j["truncation"] = truncation;
  j["safe_degree"] = safe_degree;
  nlohmann::ordered_json tabs = nlohmann::ordered_json::object();
  for (const auto& [name, t] : tables) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& [index, dim] : t.entries) {
      auto row = nlohmann::ordered_json::array();
      for (auto i : index) row.push_back(i);
      row.push_back(dim);
      rows.push_back(std::move(row));
    }
    auto axes = t.axes;
    axes.push_back("dim");
    tabs[name] = {{"axes", axes}, {"entries", rows}};
  }
  j["tables"] = std::move(tabs);
  return j.dump(2) + "\n";
}

namespace {

TensorShape flat(std::size_t n) { return TensorShape::flat(n); }

Subspace coordinate_span(const Field& f, const std::vector<std::size_t>& weight, std::size_t s) {
  std::vector<SparseVec> vs;
  for (std::size_t j = 0; j < weight.size(); ++j)
    if (weight[j] >= s) vs.push_back({{j, Scalar::one(f)}});
  return Subspace::span(f, weight.size(), vs);
}

}  // namespace

void FilteredComplex::verify() const {
  for (std::size_t n = 0; n < d.size(); ++n) {
    for (std::size_t j = 0; j < d[n].cols(); ++j)
      for (const auto& e : d[n].column(j))
        if (weight[n + 1][e.index] < weight[n][j])
          throw ConsistencyError("differential lowers the filtration in degree " + std::to_string(n) + ": basis " +
                                 std::to_string(j) + " (weight " + std::to_string(weight[n][j]) + ") hits " +
                                 std::to_string(e.index) + " (weight " + std::to_string(weight[n + 1][e.index]) +
                                 ")");
    if (n + 1 < d.size() && !(d[n + 1] * d[n]).is_zero())
      throw ConsistencyError("d squared is nonzero in degree " + std::to_string(n));
  }
}

std::vector<std::size_t> FilteredComplex::cohomology_dims() const {
  std::vector<std::size_t> ranks;
  for (const auto& m : d) ranks.push_back(rank(m));
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < d.size(); ++n) out.push_back(dims[n] - ranks[n] - (n ? ranks[n - 1] : 0));
  return out;
}

std::size_t FilteredComplex::page_dim(std::size_t r, std::size_t s, std::size_t n) const {
  if (n >= d.size()) throw std::out_of_range("page beyond the computed differentials");
  // Z_r^s in degree deg; r = −1 is encoded as r == 0 with `minus_one`.
  const auto Z = [&](long rr, long ss, std::size_t deg) {
    const std::size_t sc = static_cast<std::size_t>(std::max(ss, 0L));
    Subspace f = coordinate_span(field, weight[deg], sc);
    if (rr < 0) return f;
    const std::size_t target = static_cast<std::size_t>(std::max(ss + rr, 0L));
    return intersect(f, preimage(d[deg], coordinate_span(field, weight[deg + 1], target)));
  };
  const long R = static_cast<long>(r), S = static_cast<long>(s);
  const Subspace top = Z(R, S, n);
  Subspace low = Z(R - 1, S + 1, n);
  if (n > 0) low = sum(low, image_of(d[n - 1], Z(R - 1, S - R + 1, n - 1)));
  return subquotient_dim(top, low);
}

FilteredComplex with_coefficients(const MixedComplexT& m, CoefficientChoice w,
                                  const std::vector<std::vector<std::size_t>>& weight) {
  const Field& f = m.field;
  const auto label = [&](std::size_t deg, std::size_t j) -> std::size_t { return weight.empty() ? 0 : weight[deg][j]; };
  FilteredComplex K;
  K.field = f;
  if (w == CoefficientChoice::hochschild) {
    K.dims = m.dims;
    K.d = m.b;
    for (std::size_t n = 0; n <= m.top; ++n) {
      K.weight.emplace_back();
      for (std::size_t j = 0; j < m.dims[n]; ++j) K.weight.back().push_back(label(n, j));
    }
    return K;
  }
  // K^n = ⊕_{i ≤ n/2} V^{n−2i} u^i, ordered by i.
  const auto blocks = [&](std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; 2 * i <= n; ++i) out.push_back(m.dims[n - 2 * i]);
    return out;
  };
  for (std::size_t n = 0; n <= m.top; ++n) {
    std::size_t total = 0;
    K.weight.emplace_back();
    for (std::size_t i = 0; 2 * i <= n; ++i)
      for (std::size_t j = 0; j < m.dims[n - 2 * i]; ++j) K.weight.back().push_back(label(n - 2 * i, j) + 2 * i);
    for (auto b : blocks(n)) total += b;
    K.dims.push_back(total);
  }
  for (std::size_t n = 0; n < m.top; ++n) {
    const auto cols = blocks(n), rows = blocks(n + 1);
    std::vector<std::vector<const LinearMap*>> grid(rows.size(), std::vector<const LinearMap*>(cols.size(), nullptr));
    for (std::size_t i = 0; i < cols.size(); ++i) {
      grid[i][i] = &m.b[n - 2 * i];
      if (n >= 2 * i + 1) grid[i + 1][i] = &m.B[n - 2 * i - 1];
    }
    K.d.push_back(block_matrix(f, rows, cols, grid));
  }
  return K;
}

DimensionTable mixed_cohomology(const MixedComplexT& m, CoefficientChoice w) {
  DimensionTable t;
  t.axes = {"n"};
  const auto dims = with_coefficients(m, w).cohomology_dims();
  for (std::size_t n = 0; n < dims.size(); ++n) t.entries[{n}] = dims[n];
  return t;
}

PageReport hh_hc_dims(const ParacocyclicFamily& family, CoefficientChoice w, std::size_t N) {
  const std::size_t T = std::min(N + 1, family.truncation());
  if (T == 0) throw std::invalid_argument("truncation 0 leaves no computable degree");
  const ParacocyclicFamily f = family.with_truncation(T);
  const CheckReport order = check_cyclic_order(f);
  if (const auto* bad = order.first_failure())
    throw std::domain_error(family.name() + " is not cocyclic: " + bad->axiom + " fails at " + bad->witness);
  PageReport r;
  r.instance = family.name();
  r.field = family.field();
  r.truncation = {T};
  r.safe_degree = T - 1;
  r.tables[w == CoefficientChoice::hochschild ? "HH" : "HC"] = mixed_cohomology(mixed_complex(f), w);
  return r;
}

Subquotient make_subquotient(const Subspace& cycles, const Subspace& boundaries) {
  if (!cycles.contains(boundaries)) throw ConsistencyError("boundaries are not contained in the cycles");
  Subquotient q{cycles, boundaries, {}, nullptr};
  Eliminator pick(cycles.field(), cycles.ambient());
  for (const auto& b : boundaries.basis()) pick.insert(b);
  for (const auto& z : cycles.basis())
    if (pick.insert(z)) q.representatives.push_back(z);
  auto solver = std::make_shared<Eliminator>(cycles.field(), cycles.ambient());
  for (const auto& b : boundaries.basis()) solver->insert(b);
  for (std::size_t k = 0; k < q.representatives.size(); ++k) solver->insert_tagged(q.representatives[k], k);
  q.solver = std::move(solver);
  return q;
}

SparseVec Subquotient::coordinates(const SparseVec& v) const {
  const auto c = cycles.contains(v) ? solver->express(v) : std::nullopt;
  if (!c) throw ConsistencyError("vector outside the cycles of a subquotient");
  return *c;
}

LinearMap Subquotient::induced(const LinearMap& f, const Subquotient& target) const {
  for (const auto& b : boundaries.basis())
    if (!target.boundaries.contains(f.apply(b))) throw ConsistencyError("induced map does not preserve boundaries");
  std::vector<SparseVec> cols;
  for (const auto& r : representatives) cols.push_back(target.coordinates(f.apply(r)));
  return LinearMap::from_columns(cycles.field(), flat(dim()), flat(target.dim()), std::move(cols));
}

ParacocyclicFamily cohomology_row(const ComoduleCoalgebraInstance& m, std::size_t p, std::size_t N) {
  auto sq = std::make_shared<std::vector<Subquotient>>();
  for (std::size_t q = 0; q <= N + 1; ++q) {
    const auto c = comodule_cochain(first_row_comodule(m, q), p + 1);
    const Subspace z = kernel(c.delta[p]);
    const Subspace bd = p == 0 ? Subspace::zero(m.hopf.field, z.ambient()) : image(c.delta[p - 1]);
    sq->push_back(make_subquotient(z, bd));
  }
  const ParacocyclicFamily row = transported_family(m, p, N + 1).row(p);
  const auto at = [sq](std::size_t q) -> const Subquotient& {
    if (q >= sq->size()) throw std::out_of_range("cohomology row beyond its truncation");
    return (*sq)[q];
  };
  return ParacocyclicFamily(
      "H^" + std::to_string(p) + " row of " + m.name, m.hopf.field, N,
      [at](std::size_t q) { return flat(at(q).dim()); },
      [row, at](std::size_t q, std::size_t i) { return at(q).induced(row.coface(q, i), at(q + 1)); },
      [row, at](std::size_t q, std::size_t i) { return at(q).induced(row.codegeneracy(q, i), at(q - 1)); },
      [row, at](std::size_t q) { return at(q).induced(row.cyclic(q), at(q)); });
}

FilteredComplex filtered_total(const NaturalCocylindrical& nat, CoefficientChoice w) {
  const NormalizedTot t = tot_normalized(nat.family);
  std::vector<std::vector<std::size_t>> qlabel;
  for (std::size_t n = 0; n <= t.complex.top; ++n) {
    qlabel.emplace_back();
    for (std::size_t p = 0; p <= n; ++p) qlabel.back().insert(qlabel.back().end(), t.spaces[p][n - p].dim(), n - p);
  }
  FilteredComplex K = with_coefficients(t.complex, w, qlabel);
  K.verify();
  return K;
}

namespace {

PageReport page_frame(const ComoduleCoalgebraInstance& m, std::size_t P, std::size_t Q) {
  PageReport r;
  r.instance = m.name;
  r.field = m.hopf.field;
  r.truncation = {P, Q};
  r.safe_degree = std::max(P, Q);
  r.tables["E"].axes = {"r", "p", "q"};
  return r;
}

bool in_range(std::size_t p, std::size_t q, std::size_t P, std::size_t Q) {
  return p <= P && q <= Q && p + q <= std::max(P, Q);
}

/// M restricted to a subcomodule given as a subspace of M.space.
Comodule restrict_comodule(const Comodule& M, const Subspace& sub) {
  const Field& f = M.hopf.field;
  const std::size_t dM = M.space.total();
  std::vector<SparseVec> cols;
  for (const auto& v : sub.basis()) {
    std::vector<SparseVec> slices(M.hopf.dim);
    for (const auto& e : M.coaction.apply(v)) slices[e.index / dM].push_back({e.index % dM, e.value});
    SparseVec col;
    for (std::size_t h = 0; h < slices.size(); ++h) {
      const auto c = sub.coordinates(slices[h]);
      if (!c) throw ConsistencyError("subspace is not a subcomodule");
      for (const auto& e : *c) col.push_back({h * sub.dim() + e.index, e.value});
    }
    cols.push_back(std::move(col));
  }
  return {M.hopf, flat(sub.dim()),
          LinearMap::from_columns(f, flat(sub.dim()), TensorShape{M.hopf.dim, sub.dim()}, std::move(cols))};
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

PageReport spectral_generic(const ComoduleCoalgebraInstance& m, CoefficientChoice w, std::size_t P, std::size_t Q) {
  PageReport r = page_frame(m, P, Q);
  const std::size_t top = std::max(P, Q) + 1;
  const FilteredComplex K = filtered_total(natural_cocylindrical(m, top, top), w);
  auto& E = r.tables["E"].entries;
  for (std::size_t n = 0; n < top; ++n)
    for (std::size_t s = 0; s <= n; ++s) {
      const std::size_t p = n - s;
      if (!in_range(p, s, P, Q)) continue;
      for (std::size_t rr = 0; rr <= 2; ++rr) E[{rr, p, s}] = K.page_dim(rr, s, n);
    }
  return r;
}

PageReport spectral_closed_form(const ComoduleCoalgebraInstance& m, CoefficientChoice w, std::size_t P,
                                std::size_t Q) {
  PageReport r = page_frame(m, P, Q);
  const std::size_t top = std::max(P, Q) + 1;
  const std::size_t dH = m.hopf.dim;
  const ParacocyclicFamily row = transported_family(m, 0, top).row(0);
  // Normalized first row N^k and H^p(H, N^k).
  std::vector<std::size_t> normalized;
  std::vector<std::vector<std::size_t>> h;  // h[k][p]
  for (std::size_t k = 0; k < top; ++k) {
    Subspace s = Subspace::whole(m.hopf.field, row.dim(k));
    for (std::size_t i = 0; i < k; ++i) s = intersect(s, kernel(row.codegeneracy(k, i)));
    normalized.push_back(s.dim());
    h.push_back(comodule_cochain(restrict_comodule(first_row_comodule(m, k), s), P + 1).cohomology_dims());
  }
  const auto summands = [&](std::size_t q) {
    std::vector<std::size_t> ks;
    for (std::size_t i = 0; 2 * i <= q; ++i) {
      ks.push_back(q - 2 * i);
      if (w == CoefficientChoice::hochschild) break;
    }
    return ks;
  };
  auto& E = r.tables["E"].entries;
  for (std::size_t p = 0; p <= P; ++p) {
    if (p >= top) break;
    const DimensionTable e2 =
        hh_hc_dims(cohomology_row(m, p, top - p), w, top - p - 1).tables.begin()->second;
    for (std::size_t q = 0; q <= Q; ++q) {
      if (!in_range(p, q, P, Q)) continue;
      std::size_t e0 = 0, e1 = 0;
      for (auto k : summands(q)) {
        e0 += ipow(dH - 1, p) * normalized[k];
        e1 += h[k][p];
      }
      E[{0, p, q}] = e0;
      E[{1, p, q}] = e1;
      E[{2, p, q}] = e2.at({q}).value();
    }
  }
  return r;
}

PageReport spectral_pages(const ComoduleCoalgebraInstance& m, CoefficientChoice w, std::size_t P, std::size_t Q) {
  const PageReport a = spectral_generic(m, w, P, Q);
  const PageReport b = spectral_closed_form(m, w, P, Q);
  const auto& ea = a.tables.at("E").entries;
  const auto& eb = b.tables.at("E").entries;
  for (const auto& [index, dim] : ea) {
    const auto it = eb.find(index);
    if (it == eb.end() || it->second != dim)
      throw ConsistencyError("spectral page mismatch at (r,p,q) = (" + std::to_string(index[0]) + "," +
                             std::to_string(index[1]) + "," + std::to_string(index[2]) + "): filtered " +
                             std::to_string(dim) + ", closed form " +
                             (it == eb.end() ? std::string("absent") : std::to_string(it->second)));
  }
  if (ea.size() != eb.size()) throw ConsistencyError("spectral page tables cover different entries");
  return a;
}

bool PropositionReport::agree() const { return supported && crossed.tables == coinvariant.tables; }

PropositionReport proposition_check(const ComoduleCoalgebraInstance& m, std::size_t N) {
  PropositionReport out;
  if (!find_left_integral(m.hopf)) return out;
  out.supported = true;
  const auto crossed = standard_cocyclic(crossed_coproduct(m), N + 1).family;
  const auto coinv = coinvariant_cocyclic(m, N + 1).family;
  for (auto w : {CoefficientChoice::hochschild, CoefficientChoice::cyclic}) {
    const auto a = hh_hc_dims(crossed, w, N);
    const auto b = hh_hc_dims(coinv, w, N);
    if (out.crossed.tables.empty()) {
      out.crossed = a;
      out.coinvariant = b;
    } else {
      out.crossed.tables.insert(a.tables.begin(), a.tables.end());
      out.coinvariant.tables.insert(b.tables.begin(), b.tables.end());
    }
  }
  return out;
}

RouteReport route_independence(const ComoduleCoalgebraInstance& m, std::size_t N) {
  RouteReport r;
  r.crossed = hh_hc_dims(standard_cocyclic(crossed_coproduct(m), N + 1).family, CoefficientChoice::cyclic, N)
                  .tables.at("HC");
  const auto nat = natural_cocylindrical(m, N + 1, N + 1).family;
  r.diagonal = hh_hc_dims(diagonal(nat), CoefficientChoice::cyclic, N).tables.at("HC");
  r.total = mixed_cohomology(tot_normalized(nat).complex, CoefficientChoice::cyclic);
  return r;
}

}  // namespace hopfcyc
