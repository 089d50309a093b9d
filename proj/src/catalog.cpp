#include "hopfcyc/catalog.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "hopfcyc/linalg.hpp"

namespace hopfcyc {

namespace {

LinearMap sparse_map(const Field& f, const TensorShape& dom, const TensorShape& cod,
                     const std::vector<std::tuple<std::size_t, std::size_t, long>>& entries) {
  LinearMap m(f, dom, cod);
  for (const auto& [r, c, v] : entries) m.set(r, c, m.at(r, c) + Scalar::from_int(f, v));
  return m;
}

}  // namespace

std::size_t FiniteGroup::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < order(); ++b)
    if (table[a][b] == 0) return b;
  throw std::logic_error("group table has no inverse for element " + labels[a]);
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  FiniteGroup g;
  g.name = "Z" + std::to_string(n);
  for (std::size_t i = 0; i < n; ++i) g.labels.push_back(i == 0 ? "e" : i == 1 ? "g" : "g" + std::to_string(i));
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  return g;
}

FiniteGroup FiniteGroup::symmetric3() {
  // One-line notation, lexicographic; the identity 012 comes first.
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  FiniteGroup g;
  g.name = "S3";
  for (const auto& q : perms) g.labels.push_back("p" + std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  g.table.assign(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<std::size_t, 3> c{};
      for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];  // (ab)(i) = a(b(i))
      g.table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return g;
}

HopfInstance ground_field_hopf(const Field& f) {
  HopfInstance h;
  h.name = "k";
  h.field = f;
  h.dim = 1;
  h.basis = {"1"};
  h.comultiplication = sparse_map(f, TensorShape{1}, TensorShape{1, 1}, {{0, 0, 1}});
  h.counit = sparse_map(f, TensorShape{1}, TensorShape{}, {{0, 0, 1}});
  h.multiplication = sparse_map(f, TensorShape{1, 1}, TensorShape{1}, {{0, 0, 1}});
  h.unit = sparse_map(f, TensorShape{}, TensorShape{1}, {{0, 0, 1}});
  h.antipode = LinearMap::identity(f, TensorShape{1});
  h.antipode_inverse = h.antipode;
  return h;
}

HopfInstance group_algebra(const FiniteGroup& g, const Field& f) {
  const std::size_t n = g.order();
  HopfInstance h;
  h.name = "k" + g.name;
  h.field = f;
  h.dim = n;
  h.basis = g.labels;
  std::vector<std::tuple<std::size_t, std::size_t, long>> d, e, m, s;
  for (std::size_t a = 0; a < n; ++a) {
    d.emplace_back(a * n + a, a, 1);
    e.emplace_back(0, a, 1);
    s.emplace_back(g.inverse(a), a, 1);
    for (std::size_t b = 0; b < n; ++b) m.emplace_back(g.table[a][b], a * n + b, 1);
  }
  h.comultiplication = sparse_map(f, TensorShape{n}, TensorShape{n, n}, d);
  h.counit = sparse_map(f, TensorShape{n}, TensorShape{}, e);
  h.multiplication = sparse_map(f, TensorShape{n, n}, TensorShape{n}, m);
  h.unit = sparse_map(f, TensorShape{}, TensorShape{n}, {{0, 0, 1}});
  h.antipode = sparse_map(f, TensorShape{n}, TensorShape{n}, s);
  h.antipode_inverse = h.antipode;
  return h;
}

HopfInstance sweedler_hopf(const Field& f) {
  // g^a x^b has index a + 2b: 1, g, x, gx.
  const auto index = [](std::size_t a, std::size_t b) { return a + 2 * b; };
  HopfInstance h;
  h.name = "H4";
  h.field = f;
  h.dim = 4;
  h.basis = {"1", "g", "x", "gx"};
  std::vector<std::tuple<std::size_t, std::size_t, long>> m;
  for (std::size_t a1 = 0; a1 < 2; ++a1)
    for (std::size_t b1 = 0; b1 < 2; ++b1)
      for (std::size_t a2 = 0; a2 < 2; ++a2)
        for (std::size_t b2 = 0; b2 < 2; ++b2) {
          if (b1 + b2 == 2) continue;  // x² = 0
          // g^{a1} x^{b1} g^{a2} x^{b2} = (−1)^{b1 a2} g^{a1+a2} x^{b1+b2}
          const long sign = (b1 * a2) % 2 ? -1 : 1;
          m.emplace_back(index((a1 + a2) % 2, b1 + b2), index(a1, b1) * 4 + index(a2, b2), sign);
        }
  h.multiplication = sparse_map(f, TensorShape{4, 4}, TensorShape{4}, m);
  // Δ1 = 1⊗1, Δg = g⊗g, Δx = x⊗1 + g⊗x, Δ(gx) = gx⊗g + 1⊗gx.
  h.comultiplication = sparse_map(f, TensorShape{4}, TensorShape{4, 4},
                                  {{0 * 4 + 0, 0, 1}, {1 * 4 + 1, 1, 1}, {2 * 4 + 0, 2, 1}, {1 * 4 + 2, 2, 1},
                                   {3 * 4 + 1, 3, 1}, {0 * 4 + 3, 3, 1}});
  h.counit = sparse_map(f, TensorShape{4}, TensorShape{}, {{0, 0, 1}, {0, 1, 1}});
  h.unit = sparse_map(f, TensorShape{}, TensorShape{4}, {{0, 0, 1}});
  // S(x) = −gx, S(gx) = x.
  h.antipode = sparse_map(f, TensorShape{4}, TensorShape{4}, {{0, 0, 1}, {1, 1, 1}, {3, 2, -1}, {2, 3, 1}});
  h.antipode_inverse = inverse(h.antipode);
  return h;
}

CoalgebraInstance grouplike_coalgebra(std::size_t n, const Field& f) {
  CoalgebraInstance c;
  c.name = "grouplike" + std::to_string(n);
  c.field = f;
  c.dim = n;
  std::vector<std::tuple<std::size_t, std::size_t, long>> d, e;
  for (std::size_t a = 0; a < n; ++a) {
    c.basis.push_back("c" + std::to_string(a));
    d.emplace_back(a * n + a, a, 1);
    e.emplace_back(0, a, 1);
  }
  c.comultiplication = sparse_map(f, TensorShape{n}, TensorShape{n, n}, d);
  c.counit = sparse_map(f, TensorShape{n}, TensorShape{}, e);
  return c;
}

CoalgebraInstance function_coalgebra(const FiniteGroup& g, const Field& f) {
  const std::size_t n = g.order();
  CoalgebraInstance c;
  c.name = "k^" + g.name;
  c.field = f;
  c.dim = n;
  for (const auto& l : g.labels) c.basis.push_back("d_" + l);
  std::vector<std::tuple<std::size_t, std::size_t, long>> d;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d.emplace_back(a * n + b, g.table[a][b], 1);
  c.comultiplication = sparse_map(f, TensorShape{n}, TensorShape{n, n}, d);
  c.counit = sparse_map(f, TensorShape{n}, TensorShape{}, {{0, 0, 1}});
  return c;
}

ComoduleCoalgebraInstance trivial_coaction(std::string name, const HopfInstance& h, const CoalgebraInstance& c) {
  ComoduleCoalgebraInstance m{std::move(name), h, c, {}};
  m.coaction = tensor_of_maps(h.unit.reshaped(TensorShape{}, TensorShape{h.dim}),
                              LinearMap::identity(c.field, TensorShape{c.dim}));
  return m;
}

ComoduleCoalgebraInstance grading_coaction(std::string name, const FiniteGroup& g, const Field& f) {
  const std::size_t n = g.order();
  ComoduleCoalgebraInstance m{std::move(name), group_algebra(g, f), function_coalgebra(g, f), {}};
  std::vector<std::tuple<std::size_t, std::size_t, long>> r;
  for (std::size_t x = 0; x < n; ++x) r.emplace_back(x * n + x, x, 1);
  m.coaction = sparse_map(f, TensorShape{n}, TensorShape{n, n}, r);
  return m;
}

ComoduleCoalgebraInstance coadjoint_coaction(std::string name, const HopfInstance& h) {
  const Field& f = h.field;
  const std::size_t d = h.dim;
  const LinearMap I = LinearMap::identity(f, TensorShape{d});
  const LinearMap D = h.comultiplication.reshaped(TensorShape{d}, TensorShape{d, d});
  const LinearMap D2 = tensor_of_maps(D, I) * D;  // [h0, h1, h2]
  const LinearMap withS = tensor_of_maps(tensor_of_maps(I, I), h.antipode) * D2;
  const std::vector<std::size_t> p{0, 2, 1};  // → [h0, S(h2), h1]
  const LinearMap moved = permute_legs(f, TensorShape{d, d, d}, p) * withS;
  const LinearMap rho = tensor_of_maps(h.multiplication.reshaped(TensorShape{d, d}, TensorShape{d}), I) * moved;
  return {std::move(name), h, h.coalgebra(), rho.reshaped(TensorShape{d}, TensorShape{d, d})};
}

std::vector<std::string> hopf_catalog_names() { return {"ground-field", "kz2", "kz3", "kz4", "ks3", "sweedler"}; }

HopfInstance catalog_hopf(const std::string& name, const Field& f) {
  if (name == "ground-field") return ground_field_hopf(f);
  if (name == "kz2") return group_algebra(FiniteGroup::cyclic(2), f);
  if (name == "kz3") return group_algebra(FiniteGroup::cyclic(3), f);
  if (name == "kz4") return group_algebra(FiniteGroup::cyclic(4), f);
  if (name == "ks3") return group_algebra(FiniteGroup::symmetric3(), f);
  if (name == "sweedler") return sweedler_hopf(f);
  throw std::out_of_range("unknown Hopf algebra '" + name + "'");
}

std::vector<std::string> comodule_catalog_names() {
  return {"ground-field", "kz2-functions", "kz3-functions", "kz2-trivial",
          "kz4-trivial",  "ks3-trivial",   "sweedler-trivial"};
}

std::vector<std::string> extended_comodule_catalog_names() { return {"sweedler-coadjoint", "ks3-functions"}; }

ComoduleCoalgebraInstance catalog_comodule(const std::string& name, const Field& f) {
  const auto z2 = FiniteGroup::cyclic(2);
  if (name == "ground-field")
    return trivial_coaction(name, ground_field_hopf(f), ground_field_hopf(f).coalgebra());
  if (name == "kz2-functions") return grading_coaction(name, z2, f);
  if (name == "kz3-functions") return grading_coaction(name, FiniteGroup::cyclic(3), f);
  if (name == "ks3-functions") return grading_coaction(name, FiniteGroup::symmetric3(), f);
  if (name == "kz2-trivial") return trivial_coaction(name, group_algebra(z2, f), grouplike_coalgebra(2, f));
  if (name == "kz4-trivial")
    return trivial_coaction(name, group_algebra(FiniteGroup::cyclic(4), f), function_coalgebra(z2, f));
  if (name == "ks3-trivial")
    return trivial_coaction(name, group_algebra(FiniteGroup::symmetric3(), f), ground_field_hopf(f).coalgebra());
  if (name == "sweedler-trivial") return trivial_coaction(name, sweedler_hopf(f), ground_field_hopf(f).coalgebra());
  if (name == "sweedler-coadjoint") return coadjoint_coaction(name, sweedler_hopf(f));
  throw std::out_of_range("unknown comodule coalgebra '" + name + "'");
}

}  // namespace hopfcyc
