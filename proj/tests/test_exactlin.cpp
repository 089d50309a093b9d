#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfcyc/linalg.hpp"

using namespace hopfcyc;

namespace {

LinearMap random_map(const Field& f, std::size_t rows, std::size_t cols, std::mt19937& rng, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<std::vector<long>> grid(rows, std::vector<long>(cols));
  for (auto& r : grid)
    for (auto& x : r) x = d(rng);
  return LinearMap::from_rows(f, TensorShape{cols}, TensorShape{rows}, grid);
}

std::size_t idx(const TensorShape& s, std::vector<std::size_t> m) { return tensor_index(s, m); }

}  // namespace

TEST_CASE("scalars") {
  const Field q = Field::rationals();
  const Field f7 = Field::prime(7);
  CHECK(Scalar::from_int(f7, -1) == Scalar::from_int(f7, 6));
  CHECK((Scalar::from_int(f7, 3) / Scalar::from_int(f7, 5)) * Scalar::from_int(f7, 5) == Scalar::from_int(f7, 3));
  CHECK(Scalar::from_rational(f7, mpq_class(1, 2)) == Scalar::from_int(f7, 4));
  CHECK_THROWS_AS(Scalar::from_rational(f7, mpq_class(1, 7)), std::domain_error);
  CHECK((Scalar::from_int(q, 1) / Scalar::from_int(q, 3)).to_string() == "1/3");
  CHECK_THROWS_AS(Scalar::one(q) / Scalar::zero(q), std::domain_error);
  CHECK_THROWS_AS(Field::prime(9), std::domain_error);
  CHECK(Field::parse("Fp:101") == Field::prime(101));
  CHECK_THROWS_AS(Field::parse("Fp:x"), std::domain_error);
  CHECK_THROWS(Scalar::one(q) + Scalar::one(f7));
}

TEST_CASE("tensor_index") {
  CHECK(idx(TensorShape{2, 3}, {1, 2}) == 5);
  CHECK(idx(TensorShape{}, {}) == 0);
  CHECK(idx(TensorShape{2, 2, 2}, {1, 0, 1}) == 5);
  CHECK_THROWS_AS(idx(TensorShape{2, 3}, {2, 0}), std::domain_error);
  CHECK_THROWS_AS(idx(TensorShape{2, 3}, {1}), std::domain_error);
}

TEST_CASE("tensor_index is a bijection") {
  for (const TensorShape& s : {TensorShape{3, 1, 4}, TensorShape{2, 2, 2, 2}, TensorShape{7}, TensorShape{10, 10, 10, 10}}) {
    for (std::size_t flat = 0; flat < s.total(); ++flat) REQUIRE(tensor_index(s, tensor_unindex(s, flat)) == flat);
  }
}

TEST_CASE("tensor_of_maps") {
  const Field f5 = Field::prime(5);
  const LinearMap id2 = LinearMap::identity(f5, TensorShape{2});
  const LinearMap swap = LinearMap::from_rows(f5, TensorShape{2}, TensorShape{2}, {{0, 1}, {1, 0}});
  const LinearMap k = tensor_of_maps(id2, swap);
  CHECK(k.domain() == TensorShape{2, 2});
  CHECK(k.apply({{1, Scalar::one(f5)}}).front().index == 0);

  const LinearMap z = LinearMap::zero(f5, TensorShape{3}, TensorShape{2});
  CHECK(tensor_of_maps(z, swap).is_zero());

  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    auto f = random_map(f5, 2, 2, rng, 0, 4), g = random_map(f5, 2, 2, rng, 0, 4);
    auto f2 = random_map(f5, 2, 2, rng, 0, 4), g2 = random_map(f5, 2, 2, rng, 0, 4);
    REQUIRE(tensor_of_maps(f, g) * tensor_of_maps(f2, g2) == tensor_of_maps(f * f2, g * g2));
    auto h = random_map(f5, 2, 2, rng, 0, 4);
    REQUIRE(tensor_of_maps(tensor_of_maps(f, g), h) == tensor_of_maps(f, tensor_of_maps(g, h)));
  }
}

TEST_CASE("permute_legs") {
  const Field q = Field::rationals();
  const std::vector<std::size_t> tr{1, 0};
  const LinearMap t = permute_legs(q, TensorShape{2, 2}, tr);
  CHECK(t.apply({{1, Scalar::one(q)}}).front().index == 2);
  CHECK(t * t == LinearMap::identity(q, TensorShape{2, 2}));

  const std::vector<std::size_t> idp{0, 1, 2};
  CHECK(permute_legs(q, TensorShape{2, 3, 2}, idp).is_identity());

  const std::vector<std::size_t> cyc{1, 2, 0};
  const LinearMap c = permute_legs(q, TensorShape{2, 2, 2}, cyc);
  CHECK(c * c * c == LinearMap::identity(q, TensorShape{2, 2, 2}));
  CHECK_FALSE((c * c).is_identity());

  // Homomorphism: composing permutation matrices composes the permutations.
  const TensorShape s{2, 3, 4};
  const std::vector<std::size_t> p1{2, 0, 1};
  const LinearMap m1 = permute_legs(q, s, p1);
  const std::vector<std::size_t> p2{1, 0, 2};
  const LinearMap m2 = permute_legs(q, m1.codomain(), p2);
  std::vector<std::size_t> comp(3);
  for (std::size_t k = 0; k < 3; ++k) comp[k] = p2[p1[k]];
  CHECK(m2 * m1 == permute_legs(q, s, comp));

  const std::vector<std::size_t> shortp{0};
  CHECK_THROWS_AS(permute_legs(q, s, shortp), std::domain_error);
}

TEST_CASE("rank, kernel, image") {
  const Field q = Field::rationals();
  auto a = LinearMap::from_rows(q, TensorShape{2}, TensorShape{2}, {{1, 1}, {0, 0}});
  auto r = rank_kernel_image(a);
  CHECK(r.rank == 1);
  CHECK(r.kernel.dim() == 1);
  CHECK(r.image.dim() == 1);
  CHECK(rank(LinearMap::identity(q, TensorShape{4})) == 4);
  CHECK(kernel(LinearMap::identity(q, TensorShape{4})).dim() == 0);

  const Field f7 = Field::prime(7);
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    auto left = random_map(f7, 6, 3, rng, 0, 6), right = random_map(f7, 3, 6, rng, 0, 6);
    auto m = left * right;
    auto rk = rank_kernel_image(m);
    CHECK(rk.rank <= 3);
    CHECK(rk.kernel.dim() + rk.rank == 6);
    for (const auto& v : rk.kernel.basis()) CHECK(m.apply(v).empty());
  }
  // A fixed forced-rank-3 product whose factors have full rank.
  auto left = LinearMap::from_rows(f7, TensorShape{3}, TensorShape{6},
                                   {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {2, 0, 5}, {3, 4, 6}});
  auto right = LinearMap::from_rows(f7, TensorShape{6}, TensorShape{3},
                                    {{1, 2, 0, 0, 1, 3}, {0, 1, 1, 4, 0, 0}, {0, 0, 0, 1, 5, 2}});
  CHECK(rank(left * right) == 3);
}

TEST_CASE("rank over Q agrees with large primes") {
  std::mt19937 rng(5);
  const Field q = Field::rationals();
  for (int t = 0; t < 15; ++t) {
    const std::size_t rows = 3 + t % 5, cols = 4 + t % 4;
    std::uniform_int_distribution<long> d(-3, 3);
    std::vector<std::vector<long>> grid(rows, std::vector<long>(cols));
    for (auto& r : grid)
      for (auto& x : r) x = d(rng);
    if (t % 3 == 0) grid.back() = grid.front();  // force a dependency
    auto mq = LinearMap::from_rows(q, TensorShape{cols}, TensorShape{rows}, grid);
    auto mp1 = LinearMap::from_rows(Field::prime(1000003), TensorShape{cols}, TensorShape{rows}, grid);
    auto mp2 = LinearMap::from_rows(Field::prime(2147483647), TensorShape{cols}, TensorShape{rows}, grid);
    const auto rq = bareiss_rank(mq);
    CHECK(rq == rank_kernel_image(mq).rank);
    CHECK(rq == rank(mp1));
    CHECK(rq == rank(mp2));
  }
}

TEST_CASE("subspaces and subquotients") {
  const Field q = Field::rationals();
  const auto e = [&](std::size_t i) { return SparseVec{{i, Scalar::one(q)}}; };
  auto z = Subspace::span(q, 3, {e(0), e(1)});
  auto b = Subspace::span(q, 3, {e(0)});
  CHECK(subquotient_dim(z, b) == 1);
  CHECK(subquotient_dim(z, z) == 0);
  CHECK(subquotient_dim(Subspace::whole(q, 5), Subspace::zero(q, 5)) == 5);
  CHECK_THROWS_AS(subquotient_dim(b, z), ConsistencyError);

  auto u = Subspace::span(q, 3, {e(0), e(1)});
  auto v = Subspace::span(q, 3, {axpy(Scalar::one(q), e(1), e(2)), e(0)});
  CHECK(intersect(u, v).dim() == 1);
  CHECK(intersect(u, v).contains(e(0)));
  CHECK(sum(u, v).dim() == 3);

  auto proj = LinearMap::from_rows(q, TensorShape{3}, TensorShape{3}, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  CHECK(preimage(proj, Subspace::zero(q, 3)).dim() == 2);
  CHECK(preimage(proj, b).dim() == 3);

  auto coords = v.coordinates(axpy(Scalar::from_int(q, 2), e(0), e(1)));
  CHECK_FALSE(coords.has_value());
}

TEST_CASE("inverse and solve") {
  const Field q = Field::rationals();
  auto a = LinearMap::from_rows(q, TensorShape{3}, TensorShape{3}, {{2, 1, 0}, {0, 1, 3}, {1, 0, 1}});
  auto ai = inverse(a);
  CHECK((a * ai).is_identity());
  CHECK((ai * a).is_identity());
  auto s = LinearMap::from_rows(q, TensorShape{2}, TensorShape{2}, {{1, 1}, {1, 1}});
  CHECK_THROWS_AS(inverse(s), ConsistencyError);
  auto x = solve(s, SparseVec{{0, Scalar::one(q)}, {1, Scalar::one(q)}});
  REQUIRE(x.has_value());
  CHECK(s.apply(*x) == SparseVec{{0, Scalar::one(q)}, {1, Scalar::one(q)}});
  CHECK_FALSE(solve(s, SparseVec{{0, Scalar::one(q)}}).has_value());
}

TEST_CASE("restriction") {
  const Field q = Field::rationals();
  const auto e = [&](std::size_t i) { return SparseVec{{i, Scalar::one(q)}}; };
  auto swap = permute_legs(q, TensorShape{2, 2}, std::vector<std::size_t>{1, 0});
  // Symmetric tensors are preserved by the swap.
  auto sym = Subspace::span(q, 4, {e(0), e(3), axpy(Scalar::one(q), e(1), e(2))});
  CHECK(restrict_map(swap, sym, sym).is_identity());
  CHECK_THROWS_AS(restrict_map(swap, Subspace::span(q, 4, {e(1)}), Subspace::span(q, 4, {e(1)})), ConsistencyError);
}
