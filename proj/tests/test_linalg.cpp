#include "derivscope/linalg.hpp"

#include "doctest.h"
#include "test_support.hpp"

using namespace derivscope;

namespace {

RatMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  RatMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (int v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

RatVector vec(std::initializer_list<int> values) {
  RatVector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (int x : values) v[i++] = Rational(x);
  return v;
}

}  // namespace

TEST_CASE("rational arithmetic stays canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK((Rational(1, 2) + Rational(1, 3)).str() == "5/6");
  CHECK((Rational(1, 2) * Rational(2, 3)).str() == "1/3");
  CHECK((Rational(3) / Rational(6)).str() == "1/2");
  CHECK(Rational(-4, 6).numerator() == -2);
  CHECK(Rational(-4, 6).denominator() == 3);
  CHECK(Rational(1, 3).inverse() == Rational(3));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK(Rational::parse("+3/6") == Rational(1, 2));
  CHECK(Rational::parse("-1/2") == Rational(-1, 2));
  CHECK(Rational::parse("10/-4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
}

TEST_CASE("rref on the pinned examples") {
  {
    auto [m, pivots] = rref(mat({{1, 0}, {0, 1}}));
    CHECK(equal(m, mat({{1, 0}, {0, 1}})));
    CHECK(pivots == std::vector<Index>{0, 1});
  }
  {
    auto [m, pivots] = rref(mat({{0, 0}, {0, 0}}));
    CHECK(equal(m, mat({{0, 0}, {0, 0}})));
    CHECK(pivots.empty());
  }
  {
    // hand elimination: R2 -= 2·R1
    auto [m, pivots] = rref(mat({{1, 2}, {2, 4}}));
    CHECK(equal(m, mat({{1, 2}, {0, 0}})));
    CHECK(pivots == std::vector<Index>{0});
  }
}

TEST_CASE("nullspace on the pinned examples") {
  CHECK(nullspace(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).dim() == 0);
  {
    const Subspace s = nullspace(mat({{0, 0}, {0, 0}}));
    CHECK(s.dim() == 2);
    CHECK(s == Subspace::full(2));
  }
  {
    // x - y = 0 solved by (1,1)
    const Subspace s = nullspace(mat({{1, -1}}));
    CHECK(s.dim() == 1);
    CHECK(equal(s.basis(), mat({{1, 1}})));
  }
}

TEST_CASE("span on the pinned examples") {
  CHECK(Subspace::span({}, 3) == Subspace::zero(3));
  {
    // RREF of the stacked rows leaves a single line
    const Subspace s = Subspace::span({vec({1, 0}), vec({2, 0})}, 2);
    CHECK(s.dim() == 1);
    CHECK(equal(s.basis(), mat({{1, 0}})));
  }
  CHECK(Subspace::span({vec({1, 0}), vec({0, 1})}, 2) == Subspace::full(2));
  CHECK_THROWS_AS(Subspace::span({vec({1, 0, 0})}, 2), std::invalid_argument);
}

TEST_CASE("sum on the pinned examples") {
  const Subspace u = Subspace::span({vec({1, 1, 0})}, 3);
  CHECK(sum(u, Subspace::zero(3)) == u);
  const Subspace e1 = Subspace::span({vec({1, 0, 0})}, 3);
  const Subspace e2 = Subspace::span({vec({0, 1, 0})}, 3);
  CHECK(sum(e1, e2) == Subspace::span({vec({1, 0, 0}), vec({0, 1, 0})}, 3));
  // rank of the stacked matrix [[1,1],[1,-1]] is 2
  CHECK(sum(Subspace::span({vec({1, 1})}, 2), Subspace::span({vec({1, -1})}, 2)) ==
        Subspace::full(2));
  CHECK_THROWS_AS(sum(e1, Subspace::zero(2)), std::invalid_argument);
}

TEST_CASE("intersect on the pinned examples") {
  const Subspace u = Subspace::span({vec({1, 2, 3})}, 3);
  CHECK(intersect(u, Subspace::full(3)) == u);
  // stacked system: span{e1,e2} ∩ span{e2,e3} = span{e2}
  const Subspace a = Subspace::span({vec({1, 0, 0}), vec({0, 1, 0})}, 3);
  const Subspace b = Subspace::span({vec({0, 1, 0}), vec({0, 0, 1})}, 3);
  CHECK(intersect(a, b) == Subspace::span({vec({0, 1, 0})}, 3));
  CHECK(intersect(Subspace::span({vec({1, 1})}, 2), Subspace::span({vec({1, -1})}, 2)) ==
        Subspace::zero(2));
  CHECK_THROWS_AS(intersect(a, Subspace::full(2)), std::invalid_argument);
}

TEST_CASE("contains on the pinned examples") {
  const Subspace u = Subspace::span({vec({1, 0})}, 2);
  CHECK(u.contains(vec({0, 0})));
  CHECK_FALSE(u.contains(vec({1, 1})));
  // (3,6) = 3·(1,2)
  CHECK(Subspace::span({vec({1, 2})}, 2).contains(vec({3, 6})));
}

TEST_CASE("coordinate_complement on the pinned examples") {
  CHECK(coordinate_complement(Subspace::zero(3)) == Subspace::full(3));
  CHECK(coordinate_complement(Subspace::full(3)) == Subspace::zero(3));
  // pivots {0,1} leave the complement {2}
  const Subspace u = Subspace::span({vec({1, 0, 0}), vec({0, 1, 0})}, 3);
  CHECK(coordinate_complement(u) == Subspace::span({vec({0, 0, 1})}, 3));
}

TEST_CASE("inverse") {
  const RatMatrix m = mat({{1, 2}, {3, 4}});
  const RatMatrix mi = inverse(m);
  CHECK(equal(m * mi, RatMatrix::Identity(2, 2)));
  CHECK(equal(mi * m, RatMatrix::Identity(2, 2)));
  CHECK_FALSE(try_inverse(mat({{1, 2}, {2, 4}})).has_value());
  CHECK_THROWS_AS(inverse(mat({{1, 2}, {2, 4}})), std::invalid_argument);
}

TEST_CASE("rank + nullity = cols and exact kernel membership") {
  dstest::Rng rng(12001);
  for (int iter = 0; iter < 40; ++iter) {
    const Index rows = 1 + static_cast<Index>(rng() % 6);
    const Index cols = 1 + static_cast<Index>(rng() % 6);
    const RatMatrix m = dstest::rand_matrix(rng, rows, cols);
    const Subspace kernel = nullspace(m);
    CHECK(rank(m) + kernel.dim() == cols);
    for (Index i = 0; i < kernel.dim(); ++i)
      CHECK(is_zero(m * kernel.basis_vector(i)));  // exact, no tolerance
  }
}

TEST_CASE("rref is idempotent") {
  dstest::Rng rng(12002);
  for (int iter = 0; iter < 25; ++iter) {
    const RatMatrix m = dstest::rand_matrix(rng, 1 + static_cast<Index>(rng() % 5),
                                            1 + static_cast<Index>(rng() % 5));
    const RatMatrix once = rref(m).matrix;
    CHECK(equal(rref(once).matrix, once));
  }
}

TEST_CASE("canonical form is invariant under invertible row mixing") {
  dstest::Rng rng(12003);
  for (int iter = 0; iter < 25; ++iter) {
    const Index ambient = 2 + static_cast<Index>(rng() % 5);
    const Index k = 1 + static_cast<Index>(rng() % ambient);
    const RatMatrix b = dstest::rand_matrix(rng, k, ambient, -2, 2);
    const RatMatrix p = dstest::rand_invertible(rng, k);
    CHECK(Subspace::span_rows(b) == Subspace::span_rows(p * b));
  }
}

TEST_CASE("Grassmann identity on random subspaces") {
  dstest::Rng rng(12004);
  for (int iter = 0; iter < 30; ++iter) {
    const Index ambient = 1 + static_cast<Index>(rng() % 6);
    const Subspace u = dstest::rand_subspace(rng, ambient);
    const Subspace w = dstest::rand_subspace(rng, ambient);
    CHECK(sum(u, w).dim() + intersect(u, w).dim() == u.dim() + w.dim());
  }
}

TEST_CASE("coordinate complement splits the ambient space") {
  dstest::Rng rng(12005);
  for (int iter = 0; iter < 30; ++iter) {
    const Index ambient = 1 + static_cast<Index>(rng() % 6);
    const Subspace u = dstest::rand_subspace(rng, ambient);
    const Subspace c = coordinate_complement(u);
    CHECK(sum(u, c) == Subspace::full(ambient));
    CHECK(intersect(u, c) == Subspace::zero(ambient));
  }
}

TEST_CASE("coordinates_of reproduces the vector") {
  dstest::Rng rng(12006);
  for (int iter = 0; iter < 25; ++iter) {
    const Index ambient = 1 + static_cast<Index>(rng() % 6);
    const Subspace u = dstest::rand_subspace(rng, ambient);
    if (u.dim() == 0) continue;
    // random combination of basis rows lies inside, with those coordinates
    const RatVector coeffs = dstest::rand_vector(rng, u.dim());
    const RatVector v = u.basis().transpose() * coeffs;
    const auto back = u.coordinates_of(v);
    REQUIRE(back.has_value());
    CHECK(equal(*back, coeffs));
  }
}
