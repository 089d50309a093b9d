#include "hopfcyc/constructions.hpp"

#include <stdexcept>

namespace hopfcyc {

namespace {

std::vector<std::string> names(const std::string& prefix, std::size_t from, std::size_t to) {
  std::vector<std::string> out;
  for (std::size_t k = from; k < to; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

std::vector<std::string> join(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

TensorShape natural_shape(const ComoduleCoalgebraInstance& m, std::size_t hs, std::size_t cs) {
  return TensorShape::power(m.hopf.dim, hs).concat(TensorShape::power(m.coalgebra.dim, cs));
}

/// Legs (g0..g{p}, a0..a{q}).
LegBuilder natural_builder(const ComoduleCoalgebraInstance& m, std::size_t p, std::size_t q) {
  return LegBuilder(m.hopf.field, join(names("g", 0, p + 1), names("a", 0, q + 1)), natural_shape(m, p + 1, q + 1));
}

/// Legs (g1..g{p}, g, a0..a{q}) for the transported side.
LegBuilder transported_builder(const ComoduleCoalgebraInstance& m, std::size_t p, std::size_t q) {
  return LegBuilder(m.hopf.field, join(join(names("g", 1, p + 1), {"g"}), names("a", 0, q + 1)),
                    natural_shape(m, p + 1, q + 1));
}

/// h·(t_0, …, t_k) on the named legs; with no targets h is absorbed by ε.
void act(LegBuilder& b, const HopfInstance& H, const std::string& h, const std::vector<std::string>& targets) {
  if (targets.empty()) {
    b.apply(counit(H), {h}, {}, "counit of acting element");
    return;
  }
  b.apply(diagonal_action(H, targets.size() - 1), join({h}, targets), targets, "diagonal action");
}

/// Product of the named legs in order, written to `out` (unit if empty).
void multiply(LegBuilder& b, const HopfInstance& H, const std::vector<std::string>& inputs, const std::string& out) {
  b.apply(iterated_product(H, inputs.size()), inputs, {out}, "product");
}

LinearMap delete_leg(const LinearMap& eps, const TensorShape& shape, std::size_t leg) {
  const Field& f = eps.field();
  const TensorShape before(std::vector<std::size_t>(shape.factors().begin(), shape.factors().begin() + leg));
  const TensorShape after(std::vector<std::size_t>(shape.factors().begin() + leg + 1, shape.factors().end()));
  return tensor_of_maps(tensor_of_maps(LinearMap::identity(f, before), eps), LinearMap::identity(f, after));
}

LinearMap split_leg(const LinearMap& delta, const TensorShape& shape, std::size_t leg) { return delete_leg(delta, shape, leg); }

}  // namespace

StandardCocyclic standard_cocyclic(const CoalgebraInstance& c, std::size_t N) {
  const std::size_t d = c.dim;
  const Field f = c.field;
  const auto space = [d](std::size_t n) { return TensorShape::power(d, n + 1); };
  const auto coface = [c, d, f](std::size_t n, std::size_t i) -> LinearMap {
    const TensorShape s = TensorShape::power(d, n + 1);
    if (i <= n) return split_leg(comultiplication(c), s, i);
    LegBuilder b(f, names("a", 0, n + 1), s);
    b.apply(comultiplication(c), {"a0"}, {"x0", "x1"}, "comultiply a0");
    b.arrange(join(join({"x1"}, names("a", 1, n + 1)), {"x0"}));
    return b.compile();
  };
  const auto codegeneracy = [c, d](std::size_t n, std::size_t i) {
    return delete_leg(counit(c), TensorShape::power(d, n + 1), i + 1);
  };
  const auto cyclic = [d, f](std::size_t n) {
    std::vector<std::size_t> perm(n + 1);
    for (std::size_t k = 0; k <= n; ++k) perm[k] = (k + n) % (n + 1);  // leg k moves to k−1
    return permute_legs(f, TensorShape::power(d, n + 1), perm);
  };
  return {c, ParacocyclicFamily("standard cocyclic module of " + c.name, f, N, space, coface, codegeneracy, cyclic)};
}

LinearMap natural_cyclic(const ComoduleCoalgebraInstance& m, std::size_t p, std::size_t q) {
  LegBuilder b = natural_builder(m, p, q);
  b.apply(coaction(m), {"a0"}, {"h", "a0"}, "coaction on a0");
  b.apply(antipode_inverse(m.hopf), {"h"}, {"h"}, "inverse antipode");
  act(b, m.hopf, "h", names("g", 0, p + 1));
  b.arrange(join(join(names("g", 0, p + 1), names("a", 1, q + 1)), {"a0"}));
  return b.compile();
}

LinearMap natural_hcyclic(const ComoduleCoalgebraInstance& m, std::size_t p, std::size_t q) {
  LegBuilder b = natural_builder(m, p, q);
  b.apply(tensor_coaction(m, q), names("a", 0, q + 1), join({"X"}, names("a", 0, q + 1)), "coaction on all a");
  multiply(b, m.hopf, {"X", "g0"}, "g0");
  b.arrange(join(join(names("g", 1, p + 1), {"g0"}), names("a", 0, q + 1)));
  return b.compile();
}

LinearMap direct_last_coface(const ComoduleCoalgebraInstance& m, std::size_t p, std::size_t q) {
  LegBuilder b = natural_builder(m, p, q);
  b.apply(comultiplication(m.coalgebra), {"a0"}, {"b0", "b1"}, "comultiply a0");
  b.apply(coaction(m), {"b0"}, {"h", "b0"}, "coaction on a0^(0)");
  b.apply(antipode_inverse(m.hopf), {"h"}, {"h"}, "inverse antipode");
  act(b, m.hopf, "h", names("g", 0, p + 1));
  b.arrange(join(join(join(names("g", 0, p + 1), {"b1"}), names("a", 1, q + 1)), {"b0"}));
  return b.compile();
}

LinearMap direct_last_hcoface(const ComoduleCoalgebraInstance& m, std::size_t p, std::size_t q) {
  LegBuilder b = natural_builder(m, p, q);
  b.apply(comultiplication(m.hopf), {"g0"}, {"u0", "u1"}, "comultiply g0");
  b.apply(tensor_coaction(m, q), names("a", 0, q + 1), join({"X"}, names("a", 0, q + 1)), "coaction on all a");
  multiply(b, m.hopf, {"X", "u0"}, "w");
  b.arrange(join(join(join({"u1"}, names("g", 1, p + 1)), {"w"}), names("a", 0, q + 1)));
  return b.compile();
}

NaturalCocylindrical natural_cocylindrical(const ComoduleCoalgebraInstance& m, std::size_t P, std::size_t Q) {
  if (!check_comodule_coalgebra(m).passed()) throw std::domain_error("invalid comodule coalgebra " + m.name);
  const auto space = [m](std::size_t p, std::size_t q) { return natural_shape(m, p + 1, q + 1); };

  CocylindricalFamily::Operators vertical;
  vertical.cyclic = [m](std::size_t p, std::size_t q) { return natural_cyclic(m, p, q); };
  vertical.coface = [m](std::size_t p, std::size_t q, std::size_t i) -> LinearMap {
    const TensorShape s = natural_shape(m, p + 1, q + 1);
    if (i <= q) return split_leg(comultiplication(m.coalgebra), s, p + 1 + i);
    return natural_cyclic(m, p, q + 1) * split_leg(comultiplication(m.coalgebra), s, p + 1);
  };
  vertical.codegeneracy = [m](std::size_t p, std::size_t q, std::size_t i) {
    return delete_leg(counit(m.coalgebra), natural_shape(m, p + 1, q + 1), p + 2 + i);
  };

  CocylindricalFamily::Operators horizontal;
  horizontal.cyclic = [m](std::size_t p, std::size_t q) { return natural_hcyclic(m, p, q); };
  horizontal.coface = [m](std::size_t p, std::size_t q, std::size_t i) -> LinearMap {
    const TensorShape s = natural_shape(m, p + 1, q + 1);
    if (i <= p) return split_leg(comultiplication(m.hopf), s, i);
    return natural_hcyclic(m, p + 1, q) * split_leg(comultiplication(m.hopf), s, 0);
  };
  horizontal.codegeneracy = [m](std::size_t p, std::size_t q, std::size_t i) {
    return delete_leg(counit(m.hopf), natural_shape(m, p + 1, q + 1), i + 1);
  };

  return {m, CocylindricalFamily(m.coalgebra.name + " natural " + m.hopf.name, m.hopf.field, P, Q, space, horizontal,
                                 vertical)};
}

LinearMap phi(const ComoduleCoalgebraInstance& m, std::size_t n) {
  std::vector<std::string> legs;
  for (std::size_t k = 0; k <= n; ++k) legs = join(legs, {"a" + std::to_string(k), "g" + std::to_string(k)});
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k <= n; ++k) {
    dims.push_back(m.coalgebra.dim);
    dims.push_back(m.hopf.dim);
  }
  LegBuilder b(m.hopf.field, legs, TensorShape(dims));
  const auto h = [](std::size_t j, std::size_t k) { return "h" + std::to_string(j) + "_" + std::to_string(k); };
  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<std::string> out;
    for (std::size_t k = j; k >= 1; --k) out.push_back(h(j, k));
    out.push_back("a" + std::to_string(j));
    b.apply(iterated_coaction(m, j), {"a" + std::to_string(j)}, out, "iterated coaction on a" + std::to_string(j));
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::string> factors;
    for (std::size_t j = k + 1; j <= n; ++j) factors.push_back(h(j, k + 1));
    multiply(b, m.hopf, factors, "P");
    b.apply(antipode_inverse(m.hopf), {"P"}, {"P"}, "inverse antipode");
    multiply(b, m.hopf, {"P", "g" + std::to_string(k)}, "g" + std::to_string(k));
  }
  b.arrange(join(names("g", 0, n + 1), names("a", 0, n + 1)));
  return b.compile();
}

LinearMap psi_display(const ComoduleCoalgebraInstance& m, std::size_t n) {
  LegBuilder b = natural_builder(m, n, n);
  const auto h = [](std::size_t j, std::size_t k) { return "h" + std::to_string(j) + "_" + std::to_string(k); };
  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<std::string> out;
    for (std::size_t k = j; k >= 1; --k) out.push_back(h(j, k));
    out.push_back("a" + std::to_string(j));
    b.apply(iterated_coaction(m, j), {"a" + std::to_string(j)}, out, "iterated coaction on a" + std::to_string(j));
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::string> factors;
    for (std::size_t j = k + 1; j <= n; ++j) factors.push_back(h(j, j - k));
    multiply(b, m.hopf, factors, "P");
    multiply(b, m.hopf, {"P", "g" + std::to_string(k)}, "g" + std::to_string(k));
  }
  std::vector<std::string> order;
  for (std::size_t k = 0; k <= n; ++k) order = join(order, {"a" + std::to_string(k), "g" + std::to_string(k)});
  b.arrange(order);
  return b.compile();
}

LinearMap psi(const ComoduleCoalgebraInstance& m, std::size_t n) { return inverse(phi(m, n)); }

std::pair<LinearMap, LinearMap> beta_gamma(const ComoduleCoalgebraInstance& m, std::size_t p, std::size_t q) {
  if (p == 0) {
    const auto id = LinearMap::identity(m.hopf.field, natural_shape(m, 1, q + 1));
    return {id, id};
  }
  const auto& H = m.hopf;
  LegBuilder beta = natural_builder(m, p, q);
  beta.apply(comultiplication(H), {"g0"}, {"u0", "u1"}, "comultiply g0");
  beta.apply(antipode(H), {"u1"}, {"u1"}, "antipode");
  act(beta, H, "u1", names("g", 1, p + 1));
  beta.arrange(join(join(names("g", 1, p + 1), {"u0"}), names("a", 0, q + 1)));

  LegBuilder gamma = transported_builder(m, p, q);
  gamma.apply(comultiplication(H), {"g"}, {"u0", "u1"}, "comultiply g");
  act(gamma, H, "u1", names("g", 1, p + 1));
  gamma.arrange(join(join({"u0"}, names("g", 1, p + 1)), names("a", 0, q + 1)));
  return {beta.compile(), gamma.compile()};
}

LinearMap first_row_coaction(const ComoduleCoalgebraInstance& m, std::size_t n) {
  const auto& H = m.hopf;
  LegBuilder b(H.field, join({"g"}, names("a", 0, n + 1)), natural_shape(m, 1, n + 1));
  b.apply(tensor_coaction(m, n), names("a", 0, n + 1), join({"X"}, names("a", 0, n + 1)), "coaction on all a");
  b.apply(iterated_coproduct(H, 2), {"g"}, {"c0", "c1", "c2"}, "comultiply g twice");
  b.apply(antipode(H), {"c2"}, {"c2"}, "antipode");
  multiply(b, H, {"c2", "X", "c0"}, "h");
  b.arrange(join({"h", "c1"}, names("a", 0, n + 1)));
  return b.compile();
}

CocylindricalFamily transported_family(const ComoduleCoalgebraInstance& m, std::size_t P, std::size_t Q) {
  const auto space = [m](std::size_t p, std::size_t q) { return natural_shape(m, p + 1, q + 1); };
  const auto gs = [](std::size_t p) { return names("g", 1, p + 1); };

  CocylindricalFamily::Operators vertical;
  vertical.cyclic = [m, gs](std::size_t p, std::size_t q) {
    LegBuilder b = transported_builder(m, p, q);
    b.apply(coaction(m), {"a0"}, {"h", "a0"}, "coaction on a0");
    b.apply(antipode_inverse(m.hopf), {"h"}, {"h"}, "inverse antipode");
    multiply(b, m.hopf, {"h", "g"}, "g");
    b.arrange(join(join(join(gs(p), {"g"}), names("a", 1, q + 1)), {"a0"}));
    return b.compile();
  };
  vertical.coface = [m, gs](std::size_t p, std::size_t q, std::size_t i) -> LinearMap {
    const TensorShape s = natural_shape(m, p + 1, q + 1);
    if (i <= q) return split_leg(comultiplication(m.coalgebra), s, p + 1 + i);
    LegBuilder b = transported_builder(m, p, q);
    b.apply(comultiplication(m.coalgebra), {"a0"}, {"b0", "b1"}, "comultiply a0");
    b.apply(coaction(m), {"b0"}, {"h", "b0"}, "coaction on a0^(0)");
    b.apply(antipode_inverse(m.hopf), {"h"}, {"h"}, "inverse antipode");
    multiply(b, m.hopf, {"h", "g"}, "g");
    b.arrange(join(join(join(join(gs(p), {"g"}), {"b1"}), names("a", 1, q + 1)), {"b0"}));
    return b.compile();
  };
  vertical.codegeneracy = [m](std::size_t p, std::size_t q, std::size_t i) {
    return delete_leg(counit(m.coalgebra), natural_shape(m, p + 1, q + 1), p + 2 + i);
  };

  CocylindricalFamily::Operators horizontal;
  horizontal.coface = [m](std::size_t p, std::size_t q, std::size_t i) -> LinearMap {
    const Field& f = m.hopf.field;
    const TensorShape s = natural_shape(m, p + 1, q + 1);
    if (i == 0) return tensor_of_maps(unit(m.hopf), LinearMap::identity(f, s));
    if (i <= p) return split_leg(comultiplication(m.hopf), s, i - 1);
    return tensor_of_maps(LinearMap::identity(f, TensorShape::power(m.hopf.dim, p)), first_row_coaction(m, q));
  };
  horizontal.codegeneracy = [m](std::size_t p, std::size_t q, std::size_t i) {
    return delete_leg(counit(m.hopf), natural_shape(m, p + 1, q + 1), i);
  };
  horizontal.cyclic = [m, gs](std::size_t p, std::size_t q) {
    const auto& H = m.hopf;
    LegBuilder b = transported_builder(m, p, q);
    b.apply(tensor_coaction(m, q), names("a", 0, q + 1), join({"X"}, names("a", 0, q + 1)), "coaction on all a");
    if (p == 0) {
      multiply(b, H, {"X", "g"}, "g");
      b.arrange(join({"g"}, names("a", 0, q + 1)));
      return b.compile();
    }
    b.apply(iterated_coproduct(H, 2), {"g"}, {"c0", "c1", "c2"}, "comultiply g twice");
    b.apply(antipode(H), {"c2"}, {"c2"}, "antipode");
    multiply(b, H, {"c2", "X", "c0"}, "w");
    b.apply(comultiplication(H), {"g1"}, {"v0", "v1"}, "comultiply g1");
    b.apply(antipode(H), {"v1"}, {"v1"}, "antipode");
    act(b, H, "v1", join(names("g", 2, p + 1), {"w"}));
    multiply(b, H, {"c1", "v0"}, "g");
    b.arrange(join(join(join(names("g", 2, p + 1), {"w"}), {"g"}), names("a", 0, q + 1)));
    return b.compile();
  };
  return CocylindricalFamily("transported " + m.coalgebra.name + " natural " + m.hopf.name, m.hopf.field, P, Q, space,
                             horizontal, vertical);
}

CheckReport check_comodule(const Comodule& M) {
  const auto& H = M.hopf;
  const Field& f = H.field;
  const auto idM = LinearMap::identity(f, M.space);
  CheckReport r;
  r.add("comodule coassociativity", tensor_of_maps(comultiplication(H), idM) * M.coaction,
        tensor_of_maps(LinearMap::identity(f, TensorShape{H.dim}), M.coaction) * M.coaction, {});
  r.add("comodule counit", tensor_of_maps(counit(H), idM) * M.coaction, idM, {});
  return r;
}

Comodule first_row_comodule(const ComoduleCoalgebraInstance& m, std::size_t n) {
  return {m.hopf, natural_shape(m, 1, n + 1), first_row_coaction(m, n)};
}

TensorShape ComoduleCochainComplex::space(std::size_t p) const {
  return TensorShape::power(module.hopf.dim, p).concat(module.space);
}

std::vector<std::size_t> ComoduleCochainComplex::cohomology_dims() const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < top; ++p) {
    const std::size_t z = space(p).total() - rank(delta[p]);
    const std::size_t bd = p == 0 ? 0 : rank(delta[p - 1]);
    out.push_back(z - bd);
  }
  return out;
}

ComoduleCochainComplex comodule_cochain(const Comodule& M, std::size_t P) {
  const auto& H = M.hopf;
  const Field& f = H.field;
  ComoduleCochainComplex c{M, P, {}};
  for (std::size_t p = 0; p < P; ++p) {
    const TensorShape s = c.space(p);
    LinearMap d = tensor_of_maps(unit(H), LinearMap::identity(f, s));
    for (std::size_t i = 1; i <= p; ++i)
      d += Scalar::from_int(f, i % 2 ? -1 : 1) * split_leg(comultiplication(H), s, i - 1);
    d += Scalar::from_int(f, (p + 1) % 2 ? -1 : 1) *
         tensor_of_maps(LinearMap::identity(f, TensorShape::power(H.dim, p)), M.coaction);
    c.delta.push_back(std::move(d));
  }
  return c;
}

Subspace coinvariants(const ComoduleCoalgebraInstance& m, std::size_t n) {
  const auto s = natural_shape(m, 1, n + 1);
  return kernel(first_row_coaction(m, n) - tensor_of_maps(unit(m.hopf), LinearMap::identity(m.hopf.field, s)));
}

CoinvariantCocyclic coinvariant_cocyclic(const ComoduleCoalgebraInstance& m, std::size_t N) {
  CoinvariantCocyclic out;
  for (std::size_t n = 0; n <= N + 1; ++n) out.spaces.push_back(coinvariants(m, n));
  const auto spaces = std::make_shared<const std::vector<Subspace>>(out.spaces);
  const ParacocyclicFamily row = transported_family(m, 0, N + 1).row(0);
  const auto sub = [spaces](std::size_t n) -> const Subspace& {
    if (n >= spaces->size()) throw std::out_of_range("coinvariants beyond the truncation");
    return (*spaces)[n];
  };
  out.family = ParacocyclicFamily(
      "coinvariant cocyclic module of " + m.name, m.hopf.field, N,
      [sub](std::size_t n) { return TensorShape::flat(sub(n).dim()); },
      [row, sub](std::size_t n, std::size_t i) { return restrict_map(row.coface(n, i), sub(n), sub(n + 1)); },
      [row, sub](std::size_t n, std::size_t i) { return restrict_map(row.codegeneracy(n, i), sub(n), sub(n - 1)); },
      [row, sub](std::size_t n) { return restrict_map(row.cyclic(n), sub(n), sub(n)); });
  return out;
}

std::optional<LinearMap> cosemisimple_homotopy(const Comodule& M, std::size_t p) {
  if (p == 0) throw std::domain_error("the homotopy starts in degree 1");
  const auto x = find_left_integral(M.hopf);
  if (!x) return std::nullopt;
  const Field& f = M.hopf.field;
  std::vector<SparseVec> cols;
  for (const auto& v : *x) cols.push_back(v.is_zero() ? SparseVec{} : SparseVec{{0, v}});
  const LinearMap functional = LinearMap::from_columns(f, TensorShape{M.hopf.dim}, TensorShape{}, std::move(cols));
  const TensorShape rest = TensorShape::power(M.hopf.dim, p - 1).concat(M.space);
  return tensor_of_maps(functional, LinearMap::identity(f, rest));
}

}  // namespace hopfcyc
