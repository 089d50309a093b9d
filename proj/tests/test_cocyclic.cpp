#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfcyc/catalog.hpp"
#include "hopfcyc/constructions.hpp"

using namespace hopfcyc;

namespace {

const Field Q = Field::rationals();

void require_pass(const CheckReport& r) {
  const AxiomResult* bad = r.first_failure();
  CAPTURE(bad ? bad->axiom + " " + bad->witness : std::string("none"));
  CHECK(r.passed());
}

// dim ker b_n − rank b_{n−1}, independent of any library cohomology routine.
std::vector<std::size_t> b_cohomology(const MixedComplexT& m) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < m.top; ++n) {
    const std::size_t z = m.dims[n] - bareiss_rank(m.b[n]);
    out.push_back(z - (n ? bareiss_rank(m.b[n - 1]) : 0));
  }
  return out;
}

}  // namespace

TEST_CASE("standard cocyclic modules are cocyclic") {
  const auto k = standard_cocyclic(ground_field_hopf(Q).coalgebra(), 4);
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(k.family.dim(n) == 1);
    CHECK(k.family.cyclic(n).is_identity());
  }
  require_pass(check_paracocyclic(k.family));
  require_pass(check_cyclic_order(k.family));

  const auto z3 = standard_cocyclic(grouplike_coalgebra(3, Q), 3);
  require_pass(check_paracocyclic(z3.family));
  require_pass(check_cyclic_order(z3.family));

  // τ at n = 1 on a 2-dim group-like coalgebra swaps the legs.
  const auto z2 = standard_cocyclic(grouplike_coalgebra(2, Q), 2);
  CHECK(z2.family.cyclic(1) == permute_legs(Q, TensorShape{2, 2}, std::vector<std::size_t>{1, 0}));

  const auto cross = standard_cocyclic(crossed_coproduct(catalog_comodule("kz2-functions", Q)), 2);
  require_pass(check_paracocyclic(cross.family));
  require_pass(check_cyclic_order(cross.family));
}

TEST_CASE("a negated cyclic operator is caught") {
  const auto z2 = standard_cocyclic(grouplike_coalgebra(2, Q), 3).family;
  const ParacocyclicFamily bad(
      "negated", Q, 3, [&](std::size_t n) { return z2.space(n); },
      [&](std::size_t n, std::size_t i) { return z2.coface(n, i); },
      [&](std::size_t n, std::size_t i) { return z2.codegeneracy(n, i); },
      [&](std::size_t n) { return Scalar::from_int(Q, -1) * z2.cyclic(n); });
  const auto r = check_paracocyclic(bad);
  REQUIRE_FALSE(r.passed());
  CHECK(r.first_failure()->axiom.find("cyclic") != std::string::npos);
  CHECK_FALSE(r.first_failure()->witness.empty());
}

TEST_CASE("extra codegeneracy satisfies tau sigma0 = sigma tau") {
  for (const auto& fam : {standard_cocyclic(grouplike_coalgebra(3, Q), 3).family,
                          diagonal(natural_cocylindrical(catalog_comodule("sweedler-trivial", Q), 2, 2).family)}) {
    for (std::size_t n = 0; n + 1 <= fam.truncation(); ++n)
      CHECK(fam.cyclic(n) * fam.codegeneracy(n + 1, 0) == extra_codegeneracy(fam, n) * fam.cyclic(n + 1));
  }
}

TEST_CASE("B on the ground field") {
  const auto k = standard_cocyclic(ground_field_hopf(Q).coalgebra(), 5).family;
  for (std::size_t n = 0; n < 5; ++n) {
    CAPTURE(n);
    const long expect = n % 2 == 0 ? 2 * static_cast<long>(n + 1) : 0;
    CHECK(connes_B(k, n).at(0, 0) == Scalar::from_int(Q, expect));
    CHECK(hochschild_b(k, n).at(0, 0) == Scalar::from_int(Q, n % 2 == 0 ? 0 : 1));
  }
}

TEST_CASE("mixed complexes of cocyclic modules") {
  for (const auto& fam : {standard_cocyclic(grouplike_coalgebra(2, Q), 3).family,
                          standard_cocyclic(function_coalgebra(FiniteGroup::cyclic(3), Q), 3).family,
                          standard_cocyclic(crossed_coproduct(catalog_comodule("kz2-functions", Q)), 2).family}) {
    CAPTURE(fam.name());
    require_pass(check_mixed(mixed_complex(fam), true));
  }
}

TEST_CASE("paracocyclic rows: b squares to zero, T invertible but not the identity") {
  const auto nat = natural_cocylindrical(catalog_comodule("kz2-functions", Q), 1, 3).family;
  const auto row = nat.row(1);
  require_pass(check_paracocyclic(row));
  CHECK_FALSE(check_cyclic_order(row).passed());
  const auto m = mixed_complex(row);
  require_pass(check_mixed(m, false));
  // B² vanishes once the complex is normalized.
  const auto nm = normalize(row).complex;
  for (std::size_t n = 0; n + 1 < nm.top; ++n)
    CHECK((nm.B[n] * nm.B[n + 1]).is_zero());
  bool some_T_differs = false;
  for (std::size_t n = 0; n < m.top; ++n) {
    const auto T = m.T(n);
    CHECK(rank(T) == m.dims[n]);
    if (!T.is_identity()) some_T_differs = true;
  }
  CHECK(some_T_differs);
}

TEST_CASE("diagonal of the natural cocylindrical module is cocyclic") {
  for (const auto* name : {"kz2-functions", "kz2-trivial", "sweedler-trivial"}) {
    CAPTURE(name);
    const auto nat = natural_cocylindrical(catalog_comodule(name, Q), 3, 3).family;
    const auto d = diagonal(nat);
    require_pass(check_paracocyclic(d));
    require_pass(check_cyclic_order(d));
    require_pass(check_mixed(mixed_complex(d), true));
  }
}

TEST_CASE("normalization") {
  const auto k = standard_cocyclic(ground_field_hopf(Q).coalgebra(), 3).family;
  const auto nk = normalize(k);
  CHECK(nk.complex.dims == std::vector<std::size_t>{1, 0, 0, 0});

  // The normalized complex has the same b-cohomology as the full one.
  const auto z2 = standard_cocyclic(grouplike_coalgebra(2, Q), 4).family;
  const auto full = b_cohomology(mixed_complex(z2));
  const auto norm = b_cohomology(normalize(z2).complex);
  CHECK(std::vector<std::size_t>(full.begin(), full.end() - 1) == std::vector<std::size_t>(norm.begin(), norm.end() - 1));
  require_pass(check_mixed(normalize(z2).complex, true));
}

TEST_CASE("totalization") {
  // The trivial one-dimensional cocylindrical module: Tot^n has dimension n+1.
  const auto k = natural_cocylindrical(catalog_comodule("ground-field", Q), 4, 4).family;
  const auto tk = tot_mixed(k);
  for (std::size_t n = 0; n <= 4; ++n) CHECK(tk.dims[n] == n + 1);
  require_pass(check_mixed(tk, true));

  // Trivial coaction: rows and columns are cocyclic, so the full Tot is mixed.
  const auto triv = natural_cocylindrical(catalog_comodule("kz2-trivial", Q), 3, 3).family;
  require_pass(check_mixed(tot_mixed(triv), true));

  for (const auto* name : {"kz2-functions", "kz2-trivial", "sweedler-trivial"}) {
    CAPTURE(name);
    const auto nat = natural_cocylindrical(catalog_comodule(name, Q), 3, 3).family;
    require_pass(check_cocylindrical(nat));
    require_pass(check_mixed(tot_mixed(nat), false));
    require_pass(check_mixed(tot_normalized(nat).complex, true));
  }
}

TEST_CASE("shuffle map") {
  const auto nat = natural_cocylindrical(catalog_comodule("kz2-functions", Q), 3, 3).family;
  CHECK(shuffle_f0(nat, 0).is_identity());
  const auto diag = mixed_complex(diagonal(nat));
  const auto tot = tot_mixed(nat);
  const auto norm = normalize(diagonal(nat));
  for (std::size_t n = 0; n <= 2; ++n) {
    CAPTURE(n);
    const auto in = norm.spaces[n].inclusion();
    const auto lhs = tot.b[n] * shuffle_f0(nat, n) * in;
    const auto rhs = shuffle_f0(nat, n + 1) * diag.b[n].reshaped(nat.space(n, n), nat.space(n + 1, n + 1)) * in;
    CHECK(lhs == rhs.reshaped(lhs.domain(), lhs.codomain()));
  }
  // Eilenberg–Zilber: b-cohomology of the diagonal equals that of Tot.
  const auto hd = b_cohomology(diag);
  const auto ht = b_cohomology(tot);
  CHECK(std::vector<std::size_t>(hd.begin(), hd.begin() + 3) == std::vector<std::size_t>(ht.begin(), ht.begin() + 3));
}
