#include "hopfcyc/hopf.hpp"

#include "hopfcyc/linalg.hpp"

namespace hopfcyc {

namespace {

LinearMap id(const Field& f, std::size_t d) { return LinearMap::identity(f, TensorShape{d}); }

LinearMap tens(const LinearMap& a, const LinearMap& b) { return tensor_of_maps(a, b); }
LinearMap tens(const LinearMap& a, const LinearMap& b, const LinearMap& c) {
  return tensor_of_maps(tensor_of_maps(a, b), c);
}

// [x1, y1, x2, y2] → [x1, x2, y1, y2]
LinearMap middle_swap(const Field& f, std::size_t dx, std::size_t dy) {
  const std::vector<std::size_t> p{0, 2, 1, 3};
  return permute_legs(f, TensorShape{dx, dy, dx, dy}, p);
}

void require_shape(const LinearMap& m, const TensorShape& dom, const TensorShape& cod, const std::string& what) {
  if (m.domain().total() != dom.total() || m.codomain().total() != cod.total())
    throw std::domain_error(what + " has shape " + m.domain().to_string() + " -> " + m.codomain().to_string() +
                            ", expected " + dom.to_string() + " -> " + cod.to_string());
}

std::vector<std::vector<std::string>> legs(std::initializer_list<const std::vector<std::string>*> ls) {
  std::vector<std::vector<std::string>> out;
  for (auto* l : ls) out.push_back(*l);
  return out;
}

}  // namespace

CoalgebraInstance HopfInstance::coalgebra() const { return {name, field, dim, basis, comultiplication, counit}; }

bool CheckReport::passed() const { return first_failure() == nullptr; }

const AxiomResult* CheckReport::first_failure() const {
  for (const auto& r : results)
    if (!r.passed) return &r;
  return nullptr;
}

std::optional<std::size_t> first_difference(const LinearMap& a, const LinearMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::domain_error("comparing maps of different sizes");
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!(a.column(j) == b.column(j))) return j;
  return std::nullopt;
}

std::string basis_vector_name(const TensorShape& shape, std::size_t flat,
                              const std::vector<std::vector<std::string>>& leg_labels) {
  const auto idx = tensor_unindex(shape, flat);
  std::string s = "e(";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ",";
    if (k < leg_labels.size() && idx[k] < leg_labels[k].size())
      s += leg_labels[k][idx[k]];
    else
      s += std::to_string(idx[k]);
  }
  return s + ")";
}

void CheckReport::add(std::string axiom, const LinearMap& lhs, const LinearMap& rhs,
                      const std::vector<std::vector<std::string>>& leg_labels) {
  AxiomResult r{std::move(axiom), true, {}};
  if (auto j = first_difference(lhs, rhs)) {
    r.passed = false;
    TensorShape s = lhs.domain();
    std::size_t row = 0;
    // First row where the two images disagree.
    const SparseVec diff = axpy(-Scalar::one(lhs.field()), rhs.column(*j), lhs.column(*j));
    if (!diff.empty()) row = diff.front().index;
    r.witness = "on " + basis_vector_name(s, *j, leg_labels) + ": lhs[" + std::to_string(row) +
                "] = " + lhs.at(row, *j).to_string() + ", rhs[" + std::to_string(row) + "] = " +
                rhs.at(row, *j).to_string();
  }
  results.push_back(std::move(r));
}

CheckReport check_coalgebra(const CoalgebraInstance& c) {
  const Field& f = c.field;
  const std::size_t d = c.dim;
  require_shape(c.comultiplication, TensorShape{d}, TensorShape{d, d}, "comultiplication");
  require_shape(c.counit, TensorShape{d}, TensorShape{}, "counit");
  const LinearMap D = c.comultiplication.reshaped(TensorShape{d}, TensorShape{d, d});
  const LinearMap e = c.counit.reshaped(TensorShape{d}, TensorShape{});
  const auto L = legs({&c.basis});
  CheckReport r;
  r.add("coassociativity", tens(D, id(f, d)) * D, tens(id(f, d), D) * D, L);
  r.add("left counit", tens(e, id(f, d)) * D, id(f, d), L);
  r.add("right counit", tens(id(f, d), e) * D, id(f, d), L);
  return r;
}

CheckReport check_hopf(const HopfInstance& h) {
  const Field& f = h.field;
  const std::size_t d = h.dim;
  require_shape(h.multiplication, TensorShape{d, d}, TensorShape{d}, "multiplication");
  require_shape(h.unit, TensorShape{}, TensorShape{d}, "unit");
  require_shape(h.antipode, TensorShape{d}, TensorShape{d}, "antipode");
  require_shape(h.antipode_inverse, TensorShape{d}, TensorShape{d}, "antipode inverse");
  CheckReport r = check_coalgebra(h.coalgebra());
  const LinearMap D = h.comultiplication.reshaped(TensorShape{d}, TensorShape{d, d});
  const LinearMap e = h.counit.reshaped(TensorShape{d}, TensorShape{});
  const LinearMap m = h.multiplication.reshaped(TensorShape{d, d}, TensorShape{d});
  const LinearMap u = h.unit.reshaped(TensorShape{}, TensorShape{d});
  const LinearMap& S = h.antipode;
  const LinearMap& Si = h.antipode_inverse;
  const LinearMap I = id(f, d);
  const auto L1 = legs({&h.basis});
  const auto L2 = legs({&h.basis, &h.basis});
  const auto L3 = legs({&h.basis, &h.basis, &h.basis});
  const auto L0 = std::vector<std::vector<std::string>>{};

  r.add("associativity", m * tens(m, I), m * tens(I, m), L3);
  r.add("left unit", m * tens(u, I), I, L1);
  r.add("right unit", m * tens(I, u), I, L1);
  r.add("comultiplication is multiplicative", D * m, tens(m, m) * middle_swap(f, d, d) * tens(D, D), L2);
  r.add("counit is multiplicative", e * m, tens(e, e), L2);
  r.add("comultiplication of unit", D * u, tens(u, u), L0);
  r.add("counit of unit", e * u, LinearMap::identity(f, TensorShape{}), L0);
  r.add("left antipode", m * tens(S, I) * D, u * e, L1);
  r.add("right antipode", m * tens(I, S) * D, u * e, L1);
  r.add("antipode inverse (left)", S * Si, I, L1);
  r.add("antipode inverse (right)", Si * S, I, L1);
  return r;
}

CheckReport check_comodule_coalgebra(const ComoduleCoalgebraInstance& mc) {
  const HopfInstance& h = mc.hopf;
  const CoalgebraInstance& c = mc.coalgebra;
  if (!(h.field == c.field)) throw std::domain_error("Hopf algebra and coalgebra are over different fields");
  const Field& f = h.field;
  const std::size_t dh = h.dim, dc = c.dim;
  require_shape(mc.coaction, TensorShape{dc}, TensorShape{dh, dc}, "coaction");
  require_shape(h.comultiplication, TensorShape{dh}, TensorShape{dh, dh}, "Hopf comultiplication");
  require_shape(h.counit, TensorShape{dh}, TensorShape{}, "Hopf counit");
  require_shape(h.multiplication, TensorShape{dh, dh}, TensorShape{dh}, "Hopf multiplication");
  require_shape(h.unit, TensorShape{}, TensorShape{dh}, "Hopf unit");
  require_shape(c.comultiplication, TensorShape{dc}, TensorShape{dc, dc}, "comultiplication");
  require_shape(c.counit, TensorShape{dc}, TensorShape{}, "counit");

  const LinearMap rho = mc.coaction.reshaped(TensorShape{dc}, TensorShape{dh, dc});
  const LinearMap DH = h.comultiplication.reshaped(TensorShape{dh}, TensorShape{dh, dh});
  const LinearMap eH = h.counit.reshaped(TensorShape{dh}, TensorShape{});
  const LinearMap mH = h.multiplication.reshaped(TensorShape{dh, dh}, TensorShape{dh});
  const LinearMap uH = h.unit.reshaped(TensorShape{}, TensorShape{dh});
  const LinearMap DC = c.comultiplication.reshaped(TensorShape{dc}, TensorShape{dc, dc});
  const LinearMap eC = c.counit.reshaped(TensorShape{dc}, TensorShape{});
  const LinearMap IH = id(f, dh), IC = id(f, dc);
  const auto L = legs({&c.basis});

  CheckReport r;
  r.add("coaction coassociativity", tens(DH, IC) * rho, tens(IH, rho) * rho, L);
  r.add("coaction counit", tens(eH, IC) * rho, IC, L);
  // a^{(0)1̄} a^{(1)1̄} ⊗ a^{(0)0̄} ⊗ a^{(1)0̄} = a^{1̄} ⊗ a^{0̄(0)} ⊗ a^{0̄(1)}
  r.add("comultiplication is colinear", tens(mH, IC, IC) * middle_swap(f, dh, dc) * tens(rho, rho) * DC,
        tens(IH, DC) * rho, L);
  // a^{1̄} ε(a^{0̄}) = ε(a) 1
  r.add("counit is colinear", tens(IH, eC) * rho, uH * eC, L);
  return r;
}

CoalgebraInstance crossed_coproduct(const ComoduleCoalgebraInstance& mc) {
  if (!check_comodule_coalgebra(mc).passed()) throw std::domain_error("input is not a comodule coalgebra");
  const HopfInstance& h = mc.hopf;
  const CoalgebraInstance& c = mc.coalgebra;
  const Field& f = h.field;
  const std::size_t dh = h.dim, dc = c.dim;
  const LinearMap rho = mc.coaction.reshaped(TensorShape{dc}, TensorShape{dh, dc});
  const LinearMap DH = h.comultiplication.reshaped(TensorShape{dh}, TensorShape{dh, dh});
  const LinearMap mH = h.multiplication.reshaped(TensorShape{dh, dh}, TensorShape{dh});
  const LinearMap DC = c.comultiplication.reshaped(TensorShape{dc}, TensorShape{dc, dc});
  const LinearMap IH = id(f, dh), IC = id(f, dc);

  // [a, g] → [a0, a1, g0, g1] → [a0, h, a1', g0, g1] → [a0, h, g0, a1', g1] → [a0, h g0, a1', g1]
  const LinearMap step1 = tens(DC, DH);
  const LinearMap step2 = tens(tens(IC, rho), tens(IH, IH));
  const std::vector<std::size_t> p{0, 1, 3, 2, 4};
  const LinearMap step3 = permute_legs(f, step2.codomain(), p);
  const LinearMap step4 = tens(tens(IC, mH), tens(IC, IH));
  const LinearMap delta = step4 * step3 * step2 * step1;

  CoalgebraInstance out;
  out.name = c.name + ">|" + h.name;
  out.field = f;
  out.dim = dc * dh;
  for (const auto& a : c.basis)
    for (const auto& g : h.basis) out.basis.push_back(a + "*" + g);
  out.comultiplication = delta.reshaped(TensorShape{out.dim}, TensorShape{out.dim, out.dim});
  out.counit = tens(c.counit, h.counit).reshaped(TensorShape{out.dim}, TensorShape{});
  return out;
}

std::optional<std::vector<Scalar>> find_left_integral(const HopfInstance& h) {
  const Field& f = h.field;
  const std::size_t d = h.dim;
  // Unknowns x_l. Rows (k, j): Σ_l Δ[(k,l), j] x_l − u_k x_j = 0; final row: Σ_k u_k x_k = 1.
  std::vector<std::vector<Scalar>> dense(d * d + 1, std::vector<Scalar>(d, Scalar::zero(f)));
  for (std::size_t j = 0; j < d; ++j)
    for (const auto& e : h.comultiplication.column(j)) {
      const std::size_t k = e.index / d, l = e.index % d;
      dense[k * d + j][l] += e.value;
    }
  for (std::size_t k = 0; k < d; ++k) {
    const Scalar uk = h.unit.at(k, 0);
    for (std::size_t j = 0; j < d; ++j) dense[k * d + j][j] -= uk;
    dense[d * d][k] += uk;
  }
  LinearMap a(f, TensorShape{d}, TensorShape{d * d + 1});
  for (std::size_t r = 0; r < dense.size(); ++r)
    for (std::size_t c = 0; c < d; ++c)
      if (!dense[r][c].is_zero()) a.set(r, c, dense[r][c]);
  const SparseVec rhs{{d * d, Scalar::one(f)}};
  auto x = solve(a, rhs);
  if (!x) return std::nullopt;
  std::vector<Scalar> out(d, Scalar::zero(f));
  for (const auto& e : *x) out[e.index] = e.value;
  return out;
}

LinearMap change_field(const LinearMap& m, const Field& f) {
  std::vector<SparseVec> cols(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& e : m.column(j)) {
      Scalar v = Scalar::from_rational(f, e.value.to_rational());
      if (!v.is_zero()) cols[j].push_back({e.index, std::move(v)});
    }
  return LinearMap::from_columns(f, m.domain(), m.codomain(), std::move(cols));
}

CoalgebraInstance change_field(const CoalgebraInstance& c, const Field& f) {
  CoalgebraInstance o = c;
  o.field = f;
  o.comultiplication = change_field(c.comultiplication, f);
  o.counit = change_field(c.counit, f);
  return o;
}

HopfInstance change_field(const HopfInstance& h, const Field& f) {
  HopfInstance o = h;
  o.field = f;
  o.comultiplication = change_field(h.comultiplication, f);
  o.counit = change_field(h.counit, f);
  o.multiplication = change_field(h.multiplication, f);
  o.unit = change_field(h.unit, f);
  o.antipode = change_field(h.antipode, f);
  o.antipode_inverse = change_field(h.antipode_inverse, f);
  return o;
}

ComoduleCoalgebraInstance change_field(const ComoduleCoalgebraInstance& m, const Field& f) {
  return {m.name, change_field(m.hopf, f), change_field(m.coalgebra, f), change_field(m.coaction, f)};
}

}  // namespace hopfcyc
