#include <random>

#include "doctest.h"
#include "gfz/catalog.hpp"
#include "gfz/crisp.hpp"
#include "gfz/generate.hpp"
#include "oracles.hpp"

using namespace gfz;

namespace {

CrispSubset subset_of(const GsgPtr& g, std::initializer_list<const char*> ids) {
  CrispSubset s(g->carrier());
  for (const char* id : ids) s.add(g->element(id));
  return s;
}

}  // namespace

TEST_CASE("ideal membership checks") {
  GsgPtr geven = make_modular(4, {0, 2});
  CHECK(is_ideal(*geven, subset_of(geven, {"0", "2"}), Side::TwoSided));

  GsgPtr z4 = make_modular(4, {0, 1, 2, 3});
  CHECK(is_ideal(*z4, CrispSubset::universe(z4->carrier()), Side::TwoSided));
  CHECK_FALSE(is_ideal(*z4, subset_of(z4, {"1"}), Side::TwoSided));  // 2*1*1 = 2 escapes
  CHECK_THROWS_AS(is_ideal(*z4, CrispSubset(z4->carrier()), Side::Left), Error);
}

TEST_CASE("one-sided ideals of the projections") {
  GsgPtr lz = catalog_instance("leftzero2");
  // s g i = s, so the only left ideal is everything; any nonempty set is a
  // right ideal.
  CHECK(enumerate_ideals(*lz, Side::Left).size() == 1);
  CHECK(enumerate_ideals(*lz, Side::Right).size() == 3);
  CHECK(enumerate_ideals(*lz, Side::TwoSided).size() == 1);
}

TEST_CASE("ideal product examples") {
  GsgPtr z4 = make_modular(4, {0, 1, 2, 3});
  CHECK(ideal_product(*z4, subset_of(z4, {"2"}), subset_of(z4, {"2"})) ==
        subset_of(z4, {"0"}));
  CHECK(ideal_product(*z4, subset_of(z4, {"1", "3"}), subset_of(z4, {"2"})) ==
        subset_of(z4, {"0", "2"}));

  GsgPtr c2 = catalog_instance("const2");
  CHECK(ideal_product(*c2, subset_of(c2, {"a"}), CrispSubset::universe(c2->carrier())) ==
        subset_of(c2, {"a"}));
  CHECK_THROWS_AS(ideal_product(*z4, CrispSubset(z4->carrier()), subset_of(z4, {"0"})), Error);
}

TEST_CASE("ideal closure reaches the least two-sided ideal") {
  GsgPtr z4 = make_modular(4, {0, 1, 2, 3});
  CHECK(ideal_closure(*z4, subset_of(z4, {"2"})) == subset_of(z4, {"0", "2"}));
  CHECK(ideal_closure(*z4, subset_of(z4, {"1"})) == CrispSubset::universe(z4->carrier()));
  CHECK(ideal_closure(*z4, CrispSubset::universe(z4->carrier())) ==
        CrispSubset::universe(z4->carrier()));
}

TEST_CASE("closure is extensive, idempotent and monotone") {
  gen::Rng rng(2024);
  for (const CatalogEntry& e : catalog()) {
    for (int i = 0; i < 10; ++i) {
      CrispSubset x = gen::draw_subset(rng, e.instance->carrier(), true);
      CrispSubset cx = ideal_closure(*e.instance, x);
      CHECK(x.subset_of(cx));
      CHECK(ideal_closure(*e.instance, cx) == cx);
      CHECK(is_ideal(*e.instance, cx, Side::TwoSided));
      CrispSubset y = gen::draw_subset(rng, e.instance->carrier(), true);
      if (x.subset_of(y)) CHECK(cx.subset_of(ideal_closure(*e.instance, y)));
    }
  }
}

TEST_CASE("ideal enumeration agrees with the subset-scan oracle") {
  for (const char* name : {"mod4-full", "mod4-geven", "mod6-g03", "negq4", "leftzero2"}) {
    GsgPtr g = catalog_instance(name);
    for (Side side : {Side::Left, Side::Right, Side::TwoSided}) {
      auto expected = oracle::naive_ideals(*g, side != Side::Right, side != Side::Left);
      auto got = enumerate_ideals(*g, side);
      REQUIRE(got.size() == expected.size());
      for (const auto& members : expected) {
        bool found = false;
        for (const CrispSubset& s : got) found = found || s.bits == members;
        CHECK(found);
      }
    }
  }
}

TEST_CASE("enumeration results for the flagship instances") {
  GsgPtr z4 = make_modular(4, {0, 1, 2, 3});
  auto ideals = enumerate_ideals(*z4, Side::TwoSided);
  REQUIRE(ideals.size() == 3);
  CHECK(ideals[0] == subset_of(z4, {"0"}));
  CHECK(ideals[1] == subset_of(z4, {"0", "2"}));
  CHECK(ideals[2] == CrispSubset::universe(z4->carrier()));

  // With even operators every superset of {0,2} absorbs, and {0} still does.
  GsgPtr geven = make_modular(4, {0, 2});
  CHECK(enumerate_ideals(*geven, Side::TwoSided).size() == 5);

  GsgPtr one = make_modular(1, {0});
  CHECK(enumerate_ideals(*one, Side::TwoSided).size() == 1);

  CHECK_THROWS_AS(enumerate_ideals(*make_modular(13, {0}), Side::TwoSided), Error);
}

TEST_CASE("prime ideal criteria on the flagship instances") {
  GsgPtr z4 = make_modular(4, {0, 1, 2, 3});
  CrispSubset evens = subset_of(z4, {"0", "2"});
  for (PrimeCriterion c :
       {PrimeCriterion::Pairs, PrimeCriterion::Sandwich, PrimeCriterion::Subsets}) {
    CHECK(is_prime_ideal(*z4, evens, c));
    CHECK_FALSE(is_prime_ideal(*z4, subset_of(z4, {"0"}), c));  // 2 g 2 = 0 yet 2 is outside
    CHECK(is_prime_ideal(*z4, CrispSubset::universe(z4->carrier()), c));  // degenerate
  }
  CHECK_THROWS_AS(is_prime_ideal(*z4, subset_of(z4, {"1"})), Error);
}

TEST_CASE("semiprime checks and witnesses") {
  GsgPtr z4 = make_modular(4, {0, 1, 2, 3});
  CHECK(is_semiprime_ideal(*z4, subset_of(z4, {"0", "2"})));
  CHECK_FALSE(is_semiprime_ideal(*z4, subset_of(z4, {"0"})));
  CHECK(is_semiprime_ideal(*z4, CrispSubset::universe(z4->carrier())));

  GsgPtr nq = catalog_instance("negq4");
  CHECK_FALSE(is_semiprime_ideal(*nq, subset_of(nq, {"n0", "n3"})));  // n2 squares inside
}

TEST_CASE("prime criteria agree on every ideal of every catalog instance") {
  for (const CatalogEntry& e : catalog()) {
    for (const CrispSubset& ideal : enumerate_ideals(*e.instance, Side::TwoSided)) {
      bool pairs = is_prime_ideal(*e.instance, ideal, PrimeCriterion::Pairs);
      CHECK(pairs == is_prime_ideal(*e.instance, ideal, PrimeCriterion::Sandwich));
      CHECK(pairs == is_prime_ideal(*e.instance, ideal, PrimeCriterion::Subsets));
      if (pairs) CHECK(is_semiprime_ideal(*e.instance, ideal));
    }
  }
}

TEST_CASE("crisp extension") {
  GsgPtr z4 = make_modular(4, {0, 1, 2, 3});
  CHECK(crisp_extension(*z4, z4->element("2"), subset_of(z4, {"0", "2"})) ==
        CrispSubset::universe(z4->carrier()));
  CHECK(crisp_extension(*z4, z4->element("1"), subset_of(z4, {"0"})) == subset_of(z4, {"0"}));
  CHECK(crisp_extension(*z4, 0, CrispSubset::universe(z4->carrier())) ==
        CrispSubset::universe(z4->carrier()));
  CHECK_THROWS_AS(crisp_extension(*z4, 9, subset_of(z4, {"0"})), Error);

  // Extensions of a two-sided ideal contain it.
  for (const CrispSubset& ideal : enumerate_ideals(*z4, Side::TwoSided))
    for (int x = 0; x < z4->size(); ++x) CHECK(ideal.subset_of(crisp_extension(*z4, x, ideal)));
}
