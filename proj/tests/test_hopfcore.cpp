#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfcyc/catalog.hpp"
#include "hopfcyc/hopf_io.hpp"
#include "hopfcyc/linalg.hpp"

using namespace hopfcyc;

namespace {

const Field Q = Field::rationals();

std::vector<Field> fields() { return {Q, Field::prime(7), Field::prime(101)}; }

}  // namespace

TEST_CASE("coalgebra checks") {
  CHECK(check_coalgebra(ground_field_hopf(Q).coalgebra()).passed());
  CHECK(check_coalgebra(grouplike_coalgebra(2, Q)).passed());
  CHECK(check_coalgebra(function_coalgebra(FiniteGroup::symmetric3(), Q)).passed());

  auto bad = grouplike_coalgebra(2, Q);
  bad.comultiplication.set(1, 0, Scalar::one(Q));  // e_0 ↦ c0⊗c0 + c0⊗c1
  auto r = check_coalgebra(bad);
  REQUIRE_FALSE(r.passed());
  CHECK_FALSE(r.first_failure()->witness.empty());
}

TEST_CASE("hopf checks") {
  for (const auto& f : fields())
    for (const auto& name : hopf_catalog_names()) {
      CAPTURE(name);
      auto r = check_hopf(catalog_hopf(name, f));
      CHECK(r.passed());
    }

  const auto kz2 = catalog_hopf("kz2", Q);
  CHECK(kz2.antipode.is_identity());

  const auto h4 = sweedler_hopf(Q);
  CHECK_FALSE((h4.antipode * h4.antipode).is_identity());
  CHECK(power(h4.antipode, 4).is_identity());

  auto zeroS = kz2;
  zeroS.antipode = LinearMap::zero(Q, TensorShape{2}, TensorShape{2});
  auto r = check_hopf(zeroS);
  REQUIRE_FALSE(r.passed());
  CHECK(r.first_failure()->axiom == "left antipode");
}

TEST_CASE("group algebras have inverse-permutation antipodes") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto g = FiniteGroup::cyclic(n);
    const auto h = group_algebra(g, Q);
    CHECK((h.antipode * h.antipode).is_identity());
    for (std::size_t a = 0; a < n; ++a) CHECK(h.antipode.at(g.inverse(a), a).is_one());
  }
}

TEST_CASE("comodule coalgebra checks") {
  for (const auto& f : fields()) {
    auto names = comodule_catalog_names();
    for (const auto& n : extended_comodule_catalog_names()) names.push_back(n);
    for (const auto& name : names) {
      CAPTURE(name);
      auto m = catalog_comodule(name, f);
      CHECK(check_coalgebra(m.coalgebra).passed());
      CHECK(check_hopf(m.hopf).passed());
      CHECK(check_comodule_coalgebra(m).passed());
    }
  }
  // Trivial coaction on an arbitrary pair.
  CHECK(check_comodule_coalgebra(trivial_coaction("t", sweedler_hopf(Q), function_coalgebra(FiniteGroup::cyclic(3), Q)))
            .passed());

  // Mis-graded: ρ(δ_x) = x⊗δ_x except δ_e ↦ g⊗δ_e breaks counit compatibility.
  auto bad = catalog_comodule("kz2-functions", Q);
  bad.coaction.set(0, 0, Scalar::zero(Q));
  bad.coaction.set(2, 0, Scalar::one(Q));
  auto r = check_comodule_coalgebra(bad);
  REQUIRE_FALSE(r.passed());
  bool counit_failed = false;
  for (const auto& a : r.results)
    if (a.axiom == "counit is colinear") counit_failed = !a.passed;
  CHECK(counit_failed);

  auto mismatch = catalog_comodule("kz2-functions", Q);
  mismatch.coalgebra = grouplike_coalgebra(3, Q);
  CHECK_THROWS_AS(check_comodule_coalgebra(mismatch), std::domain_error);
}

TEST_CASE("crossed coproduct") {
  for (const auto& name : comodule_catalog_names()) {
    CAPTURE(name);
    auto m = catalog_comodule(name, Q);
    auto c = crossed_coproduct(m);
    CHECK(c.dim == m.hopf.dim * m.coalgebra.dim);
    CHECK(check_coalgebra(c).passed());
    CHECK(c.counit == tensor_of_maps(m.coalgebra.counit, m.hopf.counit).reshaped(TensorShape{c.dim}, TensorShape{}));
  }
  // Trivial coaction gives the tensor product coalgebra.
  auto t = catalog_comodule("kz2-trivial", Q);
  auto c = crossed_coproduct(t);
  const std::vector<std::size_t> mid{0, 2, 1, 3};
  auto expected = permute_legs(Q, TensorShape{2, 2, 2, 2}, mid) *
                  tensor_of_maps(t.coalgebra.comultiplication, t.hopf.comultiplication);
  CHECK(c.comultiplication == expected);

  auto k = crossed_coproduct(catalog_comodule("ground-field", Q));
  CHECK(k.dim == 1);
  CHECK(k.comultiplication.at(0, 0).is_one());

  auto x = catalog_comodule("sweedler-coadjoint", Q);
  CHECK(check_coalgebra(crossed_coproduct(x)).passed());

  auto bad = catalog_comodule("kz2-functions", Q);
  bad.coaction = LinearMap::zero(Q, TensorShape{2}, TensorShape{2, 2});
  CHECK_THROWS_AS(crossed_coproduct(bad), std::domain_error);
}

TEST_CASE("left integrals") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto x = find_left_integral(group_algebra(FiniteGroup::cyclic(n), Q));
    REQUIRE(x.has_value());
    for (std::size_t a = 0; a < n; ++a) CHECK((*x)[a] == (a == 0 ? Scalar::one(Q) : Scalar::zero(Q)));
  }
  auto xs3 = find_left_integral(group_algebra(FiniteGroup::symmetric3(), Q));
  REQUIRE(xs3.has_value());
  CHECK((*xs3)[0].is_one());
  for (std::size_t a = 1; a < 6; ++a) CHECK((*xs3)[a].is_zero());

  // The 4-dimensional non-cosemisimple algebra has no normalized left integral.
  CHECK_FALSE(find_left_integral(sweedler_hopf(Q)).has_value());
  CHECK(find_left_integral(ground_field_hopf(Q)).has_value());
}

TEST_CASE("instance files round-trip") {
  for (const auto& name : comodule_catalog_names()) {
    CAPTURE(name);
    const auto inst = InstanceFile::from(catalog_comodule(name, Q));
    const std::string text = serialize_instance(inst);
    const auto back = parse_instance(text);
    CHECK(serialize_instance(back) == text);
    auto m = back.comodule();
    CHECK(m.coaction == inst.coaction.value());
    CHECK(m.hopf.antipode_inverse == inst.hopf->antipode_inverse);
    CHECK(check_comodule_coalgebra(m).passed());
  }
  const auto h = InstanceFile::from(sweedler_hopf(Field::prime(7)));
  const auto text = serialize_instance(h);
  CHECK(serialize_instance(parse_instance(text)) == text);
  CHECK(parse_instance(text).field == Field::prime(7));

  const auto over7 = parse_instance(serialize_instance(InstanceFile::from(sweedler_hopf(Q))), Field::prime(7));
  CHECK(over7.field == Field::prime(7));
  CHECK(check_hopf(*over7.hopf).passed());
}

TEST_CASE("instance file diagnostics") {
  const std::string good = serialize_instance(InstanceFile::from(grouplike_coalgebra(2, Q)));
  CHECK_NOTHROW(parse_instance(good));
  CHECK_THROWS_AS(parse_instance("kind = coalgebra\nfield = Q\ncoalgebra.dim = 2\n"), InputError);
  try {
    parse_instance("kind = coalgebra\nfield = Q\ncoalgebra.dim = 1\ncoalgebra.comultiplication = 0 0 1\n"
                   "coalgebra.counit = 0 0 1 1\n");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_instance("kind = coalgebra\nfield = Fp:8\n"), InputError);
  CHECK_THROWS_AS(parse_instance("kind = coalgebra\nfield = Q\ncoalgebra.dim = 1\n"
                                 "coalgebra.comultiplication = 0 5 1 1\ncoalgebra.counit = 0 0 1 1\n"),
                  InputError);
  CHECK_THROWS_AS(parse_instance(good + "bogus = 1\n"), InputError);
  CHECK_THROWS_AS(parse_instance("garbage\n"), InputError);
}
