#include "derivscope/algebra.hpp"

#include "derivscope/catalog.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace derivscope;

namespace {

RatVector unit(Index n, Index i) { return RatVector::Unit(n, i); }

RatVector coords(std::initializer_list<Rational> values) {
  RatVector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (const Rational& x : values) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("validate flags raw structural problems") {
  Algebra ok = abelian(3);
  CHECK(validate(ok).empty());

  Algebra bad_order;
  bad_order.dim = 3;
  bad_order.constants[{2, 1}] = RatVector::Zero(3);
  CHECK(validate(bad_order).size() == 1);

  Algebra bad_length;
  bad_length.dim = 3;
  bad_length.constants[{0, 1}] = RatVector::Zero(2);
  CHECK(validate(bad_length).size() == 1);

  Algebra bad_range;
  bad_range.dim = 2;
  bad_range.constants[{0, 5}] = RatVector::Zero(2);
  CHECK(validate(bad_range).size() == 1);
}

TEST_CASE("product on pinned examples") {
  const Algebra h3 = heisenberg3();
  CHECK(equal(product(h3, unit(3, 0), unit(3, 1)), unit(3, 2)));

  const Algebra as2 = family_as(2);
  // mu(e0, e3) = 2 e1 in the 0-based family table
  CHECK(equal(product(as2, unit(4, 0), unit(4, 3)), coords({0, 2, 0, 0})));

  dstest::Rng rng(3100);
  const RatVector x = dstest::rand_vector(rng, 4);
  CHECK(is_zero(product(as2, x, x)));
  CHECK_THROWS_AS(product(h3, unit(4, 0), unit(3, 0)), std::invalid_argument);
}

TEST_CASE("product is antisymmetric on random vectors over the catalog") {
  dstest::Rng rng(3101);
  for (const CatalogEntry& e : default_catalog()) {
    const RatVector x = dstest::rand_vector(rng, e.algebra.dim);
    const RatVector y = dstest::rand_vector(rng, e.algebra.dim);
    CHECK(is_zero(product(e.algebra, x, y) + product(e.algebra, y, x)));
  }
}

TEST_CASE("jacobiator on pinned examples") {
  const Algebra flat = abelian(4);
  dstest::Rng rng(3102);
  CHECK(is_zero(jacobiator(flat, dstest::rand_vector(rng, 4), dstest::rand_vector(rng, 4),
                           dstest::rand_vector(rng, 4))));

  // A_s at (e0, e2, e3): expanding the three terms leaves s(s-1)·e1
  for (int s : {2, 3, 5}) {
    const Algebra as = family_as(s);
    const RatVector j = jacobiator(as, unit(4, 0), unit(4, 2), unit(4, 3));
    CHECK(equal(j, coords({0, Rational(s * (s - 1)), 0, 0})));
  }

  const Algebra h3 = heisenberg3();
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j)
      for (Index k = 0; k < 3; ++k)
        CHECK(is_zero(jacobiator(h3, unit(3, i), unit(3, j), unit(3, k))));
}

TEST_CASE("jacobiator is alternating") {
  dstest::Rng rng(3103);
  const Algebra a = dstest::rand_algebra(rng, 4, -2, 2);
  const RatVector x = dstest::rand_vector(rng, 4);
  const RatVector y = dstest::rand_vector(rng, 4);
  const RatVector z = dstest::rand_vector(rng, 4);
  CHECK(is_zero(jacobiator(a, x, y, z) + jacobiator(a, y, x, z)));
  CHECK(is_zero(jacobiator(a, x, y, z) + jacobiator(a, x, z, y)));
}

TEST_CASE("is_lie on pinned examples") {
  CHECK(is_lie(family_as(0)));
  CHECK(is_lie(family_as(1)));
  CHECK_FALSE(is_lie(family_as(2)));
  CHECK(is_lie(abelian(5)));
  CHECK(is_lie(sl2()));
  // basis check implies the identity on arbitrary vectors
  dstest::Rng rng(3104);
  const Algebra f5 = standard_filiform(5);
  REQUIRE(is_lie(f5));
  for (int iter = 0; iter < 10; ++iter) {
    CHECK(is_zero(jacobiator(f5, dstest::rand_vector(rng, 5), dstest::rand_vector(rng, 5),
                             dstest::rand_vector(rng, 5))));
  }
}

TEST_CASE("derived algebra and product_subspace") {
  CHECK(derived_algebra(abelian(3)) == Subspace::zero(3));

  const Algebra as3 = family_as(3);
  const Subspace derived = derived_algebra(as3);
  CHECK(derived == Subspace::span({unit(4, 0), unit(4, 1)}, 4));
  CHECK(product_subspace(as3, Subspace::full(4), Subspace::full(4)) == derived);
  CHECK(product_subspace(as3, Subspace::zero(4), Subspace::full(4)) == Subspace::zero(4));

  CHECK(derived_algebra(sl2()) == Subspace::full(3));

  // filiform: mu(derived, g) sits strictly inside the derived algebra
  const Algebra f4 = standard_filiform(4);
  const Subspace g2 = lower_central_term(f4);
  CHECK(g2.dim() == 1);
  CHECK(derived_algebra(f4).contains(g2));
  CHECK(g2.dim() < derived_algebra(f4).dim());
}

TEST_CASE("is_perfect") {
  CHECK(is_perfect(sl2()));
  CHECK_FALSE(is_perfect(abelian(2)));
  CHECK_FALSE(is_perfect(heisenberg3()));  // derived = span{e2}
}

TEST_CASE("centralizer and center on pinned examples") {
  const Algebra flat = abelian(3);
  CHECK(centralizer(flat, {unit(3, 0)}) == Subspace::full(3));
  CHECK(centralizer(flat, {}) == Subspace::full(3));

  const Algebra as2 = family_as(2);
  // centralizer of e2 is spanned by {e2, e3}
  CHECK(centralizer(as2, {unit(4, 2)}) == Subspace::span({unit(4, 2), unit(4, 3)}, 4));
  CHECK(center(as2) == Subspace::zero(4));

  const Algebra h3 = heisenberg3();
  CHECK(centralizer(h3, {unit(3, 0)}) == Subspace::span({unit(3, 0), unit(3, 2)}, 3));
  CHECK(center(h3) == Subspace::span({unit(3, 2)}, 3));
  CHECK(center(aff()) == Subspace::zero(2));
  CHECK(center(abelian(4)) == Subspace::full(4));
}

TEST_CASE("direct_product blocks and additivity") {
  const Algebra a = aff();
  CHECK(direct_product(a, abelian(0)) == a);
  CHECK(direct_product(abelian(2), abelian(3)) == abelian(5));

  // A_0 agrees with aff x K^2 after reordering the basis
  const Algebra as0 = family_as(0);
  const Algebra affk2 = with_abelian_factor(aff(), 2);
  CHECK(is_lie(as0));
  CHECK(derived_algebra(as0).dim() == derived_algebra(affk2).dim());
  CHECK(center(as0).dim() == center(affk2).dim());

  for (const CatalogEntry& x : default_catalog()) {
    if (x.algebra.dim > 4) continue;
    const Algebra p = direct_product(x.algebra, heisenberg3());
    CHECK(derived_algebra(p).dim() ==
          derived_algebra(x.algebra).dim() + derived_algebra(heisenberg3()).dim());
    CHECK(center(p).dim() == center(x.algebra).dim() + center(heisenberg3()).dim());
  }
}

TEST_CASE("one_dim_extension on pinned examples") {
  CHECK(one_dim_extension(RatMatrix::Zero(2, 2)) == abelian(3));

  RatMatrix id1 = RatMatrix::Identity(1, 1);
  CHECK(one_dim_extension(id1) == aff());

  // single nilpotent Jordan block of size 3 gives the filiform law of dim 4
  const Algebra f4 = standard_filiform(4);
  CHECK(f4.dim == 4);
  CHECK(equal(f4.bracket(0, 1), unit(4, 2)));
  CHECK(equal(f4.bracket(0, 2), unit(4, 3)));
  CHECK(is_zero(f4.bracket(1, 2)));
  CHECK(is_lie(f4));

  RatMatrix rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(one_dim_extension(rect), std::invalid_argument);
}

TEST_CASE("change_of_basis on pinned examples") {
  const Algebra h3 = heisenberg3();
  CHECK(change_of_basis(h3, RatMatrix::Identity(3, 3)) == h3);

  RatMatrix g = RatMatrix::Identity(3, 3);
  g(2, 2) = Rational(2);
  const Algebra moved = change_of_basis(h3, g);
  CHECK(equal(moved.bracket(0, 1), coords({0, 0, 2})));

  dstest::Rng rng(3105);
  for (const CatalogEntry& e : default_catalog()) {
    if (e.algebra.dim > 5) continue;
    const RatMatrix p = dstest::rand_invertible(rng, e.algebra.dim);
    const Algebra m = change_of_basis(e.algebra, p);
    CHECK(is_lie(m) == is_lie(e.algebra));
    CHECK(derived_algebra(m).dim() == derived_algebra(e.algebra).dim());
    CHECK(center(m).dim() == center(e.algebra).dim());
  }

  RatMatrix singular = RatMatrix::Zero(3, 3);
  CHECK_THROWS_AS(change_of_basis(h3, singular), std::invalid_argument);
}

TEST_CASE("deformed_product basics") {
  const Algebra h3 = heisenberg3();
  CHECK(deformed_product(h3, h3, Rational(0)) == h3);

  const Algebra doubled = deformed_product(h3, h3, Rational(1));
  CHECK(equal(doubled.bracket(0, 1), coords({0, 0, 2})));

  CHECK_THROWS_AS(deformed_product(h3, abelian(2), Rational(1)), std::invalid_argument);
}

TEST_CASE("constant vector round trip") {
  CHECK(pair_count(4) == 6);
  CHECK(pair_offset(0, 1, 4) == 0);
  CHECK(pair_offset(2, 3, 4) == 5);
  dstest::Rng rng(3106);
  for (int iter = 0; iter < 10; ++iter) {
    const Algebra a = dstest::rand_algebra(rng, 4, -2, 2);
    CHECK(algebra_from_constant_vector(constant_vector(a), 4) == a);
  }
}
