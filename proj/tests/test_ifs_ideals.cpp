#include "doctest.h"
#include "gfz/catalog.hpp"
#include "gfz/generate.hpp"
#include "gfz/ifs_ideals.hpp"

using namespace gfz;

namespace {

CrispSubset subset_of(const GsgPtr& g, std::initializer_list<const char*> ids) {
  CrispSubset s(g->carrier());
  for (const char* id : ids) s.add(g->element(id));
  return s;
}

Ifs constant_ifs(const CarrierPtr& c, const Degree& m, const Degree& n) {
  return ifs_build(c, std::vector<Degree>(c->size(), m), std::vector<Degree>(c->size(), n));
}

// Independent composition oracle: rescan all products instead of using the
// factorization index.
Ifs compose_oracle(const GammaSemigroup& g, const Ifs& a, const Ifs& b) {
  Ifs out{g.carrier(), std::vector<Degree>(g.size(), Degree::zero()),
          std::vector<Degree>(g.size(), Degree::one())};
  for (int u = 0; u < g.size(); ++u)
    for (int ga = 0; ga < g.gamma_size(); ++ga)
      for (int v = 0; v < g.size(); ++v) {
        int x = g.sgs(u, ga, v);
        out.mu[x] = degree_max(out.mu[x], degree_min(a.mu[u], b.mu[v]));
        out.nu[x] = degree_min(out.nu[x], degree_max(a.nu[u], b.nu[v]));
      }
  return out;
}

}  // namespace

TEST_CASE("translation predicates and witnesses") {
  GsgPtr z4 = make_modular(4, {0, 1, 2, 3});

  Ifs step = step_ifs(subset_of(z4, {"0", "2"}), Degree::of(9, 10), Degree::of(1, 10),
                      Degree::of(1, 20), Degree::of(8, 10));
  CHECK(is_ifi(*z4, step).holds);

  Ifs constant = constant_ifs(z4->carrier(), Degree::of(1, 4), Degree::of(1, 2));
  CHECK(is_ifi(*z4, constant).holds);

  Ifs bad = characteristic_pair(subset_of(z4, {"1"}));
  IdealVerdict v = is_ifli(*z4, bad);
  REQUIRE_FALSE(v.holds);
  // The reported tuple must re-evaluate to a genuine violation.
  if (std::string(v.condition) == "mu-left")
    CHECK(bad.mu[z4->sgs(v.x, v.g, v.y)] < bad.mu[v.y]);
  else
    CHECK(bad.nu[v.y] < bad.nu[z4->sgs(v.x, v.g, v.y)]);
}

TEST_CASE("empty sets are rejected by the predicates but not the raw checks") {
  GsgPtr z4 = make_modular(4, {0, 1, 2, 3});
  Ifs empty = constant_ifs(z4->carrier(), Degree::zero(), Degree::one());
  CHECK_THROWS_AS(is_ifli(*z4, empty), Error);
  CHECK_THROWS_AS(is_ifi(*z4, empty), Error);
  CHECK(ifli_conditions(*z4, empty).holds);

  CarrierPtr other = Carrier::make({"x"});
  Ifs elsewhere = constant_ifs(other, Degree::one(), Degree::zero());
  CHECK_THROWS_AS(is_ifli(*z4, elsewhere), Error);
}

TEST_CASE("whole space") {
  GsgPtr z4 = make_modular(4, {0, 1, 2, 3});
  Ifs s = whole_space(*z4);
  CHECK(support(s) == CrispSubset::universe(z4->carrier()));
  CHECK(ifs_eq(s, characteristic_pair(CrispSubset::universe(z4->carrier()))));
}

TEST_CASE("composition values and the no-factorization default") {
  GsgPtr c2 = catalog_instance("const2");
  Ifs any = constant_ifs(c2->carrier(), Degree::of(3, 4), Degree::of(1, 4));
  Ifs prod = compose(*c2, any, any);
  int b = c2->element("b");
  CHECK(prod.mu[b] == Degree::zero());
  CHECK(prod.nu[b] == Degree::one());

  GsgPtr z4 = make_modular(4, {0, 1, 2, 3});
  Ifs two = characteristic_pair(subset_of(z4, {"2"}));
  Ifs sq = compose(*z4, two, two);
  CHECK(sq.mu[z4->element("0")] == Degree::one());  // 0 = 2*1*2
  CHECK(sq.nu[z4->element("0")] == Degree::zero());

  CarrierPtr other = Carrier::make({"x"});
  CHECK_THROWS_AS(compose(*z4, constant_ifs(other, Degree::one(), Degree::zero()), two), Error);
}

TEST_CASE("composition matches a direct rescan") {
  gen::Rng rng(515);
  for (const char* name : {"mod4-full", "mod6-g03", "leftzero2", "negq4"}) {
    GsgPtr g = catalog_instance(name);
    for (int i = 0; i < 20; ++i) {
      Ifs a = *gen::draw_ifs(rng, *g, gen::IfsConstraint::None);
      Ifs b = *gen::draw_ifs(rng, *g, gen::IfsConstraint::None);
      CHECK(ifs_eq(compose(*g, a, b), compose_oracle(*g, a, b)));
    }
  }
}

TEST_CASE("composition absorbs into one-sided ideals") {
  gen::Rng rng(516);
  GsgPtr z6 = make_modular(6, {0, 1, 2, 3, 4, 5});
  for (int i = 0; i < 20; ++i) {
    auto a = gen::draw_ifs(rng, *z6, gen::IfsConstraint::Ifli);
    REQUIRE(a);
    CHECK(ifs_leq(compose(*z6, whole_space(*z6), *a), *a));
  }
}

TEST_CASE("prime and semiprime predicates") {
  GsgPtr z4 = make_modular(4, {0, 1, 2, 3});

  Ifs constant = constant_ifs(z4->carrier(), Degree::of(1, 2), Degree::of(1, 4));
  CHECK(is_ifpi(*z4, constant).holds);
  CHECK(is_ifspi(*z4, constant).holds);

  Ifs prime_pair = characteristic_pair(subset_of(z4, {"0", "2"}));
  CHECK(is_ifpi(*z4, prime_pair).holds);
  CHECK(is_ifspi(*z4, prime_pair).holds);

  Ifs zero_pair = characteristic_pair(subset_of(z4, {"0"}));
  IdealVerdict v = is_ifspi(*z4, zero_pair);
  REQUIRE_FALSE(v.holds);
  CHECK(v.x == z4->element("2"));  // 2 g 2 always lands on 0

  // The prime equalities presuppose the ideal conditions.
  CHECK_THROWS_AS(is_ifpi(*z4, characteristic_pair(subset_of(z4, {"1"}))), Error);
}

TEST_CASE("prime implies semiprime on sampled sets") {
  gen::Rng rng(517);
  for (const CatalogEntry& e : catalog()) {
    for (int i = 0; i < 10; ++i) {
      auto a = gen::draw_ifs(rng, *e.instance, gen::IfsConstraint::Ifpi);
      if (!a) continue;
      CHECK(is_ifspi(*e.instance, *a).holds);
    }
  }
}

TEST_CASE("the prime equalities are not preserved by meets") {
  // Two incomparable primes collapse onto their intersection, which is not
  // prime; this pins the documented defect probe.
  GsgPtr z6 = make_modular(6, {0, 1, 2, 3, 4, 5});
  Ifs a = characteristic_pair(subset_of(z6, {"0", "2", "4"}));
  Ifs b = characteristic_pair(subset_of(z6, {"0", "3"}));
  REQUIRE(is_ifpi(*z6, a).holds);
  REQUIRE(is_ifpi(*z6, b).holds);
  Ifs meet = ifs_meet(a, b);
  REQUIRE(is_ifi(*z6, meet).holds);
  IdealVerdict v = ifpi_conditions(*z6, meet);
  REQUIRE_FALSE(v.holds);
  CHECK(z6->id(v.x) == "2");
  CHECK(z6->id(v.y) == "3");
  // The semiprime equalities do survive the meet.
  CHECK(ifspi_conditions(*z6, meet).holds);
}

TEST_CASE("threshold sets of an IF ideal are crisp ideals") {
  GsgPtr z4 = make_modular(4, {0, 1, 2, 3});
  Ifs step = step_ifs(subset_of(z4, {"0", "2"}), Degree::of(9, 10), Degree::of(1, 10),
                      Degree::of(1, 20), Degree::of(8, 10));

  CHECK(zero_set(*z4, step) == subset_of(z4, {"0", "2"}));
  CHECK(omega_set(*z4, step, z4->element("0")) == subset_of(z4, {"0", "2"}));
  // A base point with extremal values saturates the whole carrier.
  CHECK(omega_set(*z4, step, z4->element("1")) == CrispSubset::universe(z4->carrier()));

  GsgPtr u5 = catalog_instance("umod5");
  Ifs c5 = constant_ifs(u5->carrier(), Degree::of(1, 2), Degree::of(1, 4));
  CHECK_THROWS_AS(zero_set(*u5, c5), Error);  // no designated zero

  CHECK_THROWS_AS(omega_set(*z4, characteristic_pair(subset_of(z4, {"1"})), 0), Error);
}
