#include "doctest.h"
#include "gfz/catalog.hpp"
#include "gfz/gamma_semigroup.hpp"
#include "oracles.hpp"

using namespace gfz;

namespace {

GsgTables modular_tables(int n, const std::vector<int>& gamma) {
  GsgTables t;
  for (int i = 0; i < n; ++i) t.carrier.push_back(std::to_string(i));
  for (int v : gamma) t.gamma.push_back(std::to_string(v));
  const int ng = static_cast<int>(gamma.size());
  t.sgs.resize(static_cast<size_t>(n) * ng * n);
  t.gsg.resize(static_cast<size_t>(ng) * n * ng);
  for (int a = 0; a < n; ++a)
    for (int g = 0; g < ng; ++g)
      for (int b = 0; b < n; ++b) t.sgs[(a * ng + g) * n + b] = a * gamma[g] % n * b % n;
  for (int g = 0; g < ng; ++g)
    for (int a = 0; a < n; ++a)
      for (int h = 0; h < ng; ++h) t.gsg[(g * n + a) * ng + h] = gamma[g] * a % n * gamma[h] % n;
  return t;
}

}  // namespace

TEST_CASE("full modular tables validate and match the naive oracle") {
  GsgTables t = modular_tables(4, {0, 1, 2, 3});
  CHECK(oracle::naive_associative(t));
  GsgPtr g = GammaSemigroup::build(t);
  CHECK(g->size() == 4);
  CHECK(g->gamma_size() == 4);
}

TEST_CASE("a single mutated entry is flagged as an associativity violation") {
  GsgTables t = modular_tables(4, {0, 1, 2, 3});
  // 1*1*1 changed from 1 to 2
  t.sgs[(1 * 4 + 1) * 4 + 1] = 2;
  CHECK_FALSE(oracle::naive_associative(t));
  CHECK_THROWS_WITH_AS(GammaSemigroup::build(t), doctest::Contains("first law"), Error);
}

TEST_CASE("singleton instance is valid") {
  GsgTables t;
  t.carrier = {"a"};
  t.gamma = {"g"};
  t.sgs = {0};
  t.gsg = {0};
  GsgPtr g = GammaSemigroup::build(t);
  CHECK(op_sgs(*g, 0, 0, 0) == 0);
  CHECK(is_regular(*g).regular);
  CHECK(is_commutative(*g));
}

TEST_CASE("make_modular rejects gamma subsets that are not product-closed") {
  // The gamma table must map into the subset; 1*2*1 = 2 escapes {1,3}.
  CHECK_THROWS_AS(make_modular(4, {1, 3}), Error);
  CHECK_THROWS_AS(make_modular(2, {1}), Error);
  CHECK_THROWS_AS(make_modular(5, {1, 2, 3, 4}), Error);
  CHECK_THROWS_AS(make_modular(4, {}), Error);
  CHECK_THROWS_AS(make_modular(0, {0}), Error);
  CHECK_THROWS_AS(make_modular(4, {5}), Error);
}

TEST_CASE("make_modular accepts divisor-multiple gamma subsets") {
  CHECK(make_modular(4, {0, 2})->gamma_size() == 2);
  CHECK(make_modular(6, {0, 3})->gamma_size() == 2);
  CHECK(make_modular(6, {0, 2, 4})->gamma_size() == 3);
  CHECK(make_modular(5, {0, 1, 2, 3, 4})->size() == 5);
  GsgPtr one = make_modular(1, {0});
  CHECK(one->size() == 1);
  CHECK(one->has_zero());
}

TEST_CASE("operation lookups follow modular arithmetic") {
  GsgPtr g = make_modular(4, {0, 1, 2, 3});
  CHECK(op_sgs(*g, 1, 3, 2) == 2);   // 1*3*2 = 6
  CHECK(op_gsg(*g, 3, 2, 3) == 2);   // 3*2*3 = 18
  CHECK(op_sgs(*g, 3, 1, 3) == 1);   // 9
  CHECK_THROWS_AS(op_sgs(*g, 4, 0, 0), Error);
  CHECK_THROWS_AS(op_gsg(*g, 0, 0, 7), Error);
  CHECK_THROWS_AS(g->element("9"), Error);
}

TEST_CASE("power element uses the zeroth-power convention") {
  GsgPtr g = make_modular(4, {0, 1, 2, 3});
  CHECK(power_element(*g, 3, 1, 0) == 3);
  CHECK(power_element(*g, 3, 1, 1) == 1);  // 3*1*3 = 9
  CHECK(power_element(*g, 2, 2, 2) == 0);  // every extra factor keeps it even
  CHECK_THROWS_AS(power_element(*g, 0, 0, -1), Error);
}

TEST_CASE("commutativity detection") {
  CHECK(is_commutative(*make_modular(6, {0, 3})));
  CHECK_FALSE(is_commutative(*catalog_instance("leftzero2")));
  CHECK_FALSE(is_commutative(*catalog_instance("rightzero2")));
}

TEST_CASE("regularity with witnesses") {
  GsgPtr z5 = make_modular(5, {0, 1, 2, 3, 4});
  RegularityResult r = is_regular(*z5);
  REQUIRE(r.regular);
  for (int c = 0; c < z5->size(); ++c) {
    const RegularityWitness& w = r.witnesses[c];
    CHECK(z5->sgs(z5->sgs(c, w.g1, w.x), w.g2, c) == c);
  }

  RegularityResult bad = is_regular(*make_modular(4, {0, 2}));
  CHECK_FALSE(bad.regular);
  CHECK(bad.failing == 1);  // no x with 1 g x h 1 = 1 over even operators
}

TEST_CASE("zero element must absorb") {
  GsgTables t;
  t.carrier = {"a", "b"};
  t.gamma = {"g"};
  t.sgs = {0, 0, 1, 1};  // left projection
  t.gsg = {0, 0};
  t.zero = "a";
  CHECK_THROWS_AS(GammaSemigroup::build(t), Error);  // b g a = b
  t.zero.reset();
  CHECK(GammaSemigroup::build(t) != nullptr);
}

TEST_CASE("build rejects malformed carriers and partial tables") {
  GsgTables t;
  t.carrier = {"a", "a"};
  t.gamma = {"g"};
  t.sgs = {0, 0, 0, 0};
  t.gsg = {0, 0};
  CHECK_THROWS_AS(GammaSemigroup::build(t), Error);

  GsgTables m = modular_tables(2, {0, 1});
  m.sgs[3] = -1;
  CHECK_THROWS_WITH_AS(GammaSemigroup::build(m), doctest::Contains("sgs entry"), Error);
}

TEST_CASE("factorization index groups products by their value") {
  GsgPtr c2 = catalog_instance("const2");
  const auto& fact = c2->factorizations();
  CHECK(fact[c2->element("b")].empty());
  CHECK(fact[c2->element("a")].size() == 4);  // every u g v lands on a
}
