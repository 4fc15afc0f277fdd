#include <vector>

#include "doctest.h"
#include "gfz/catalog.hpp"
#include "gfz/ifs.hpp"

using namespace gfz;

namespace {

// All admissible (mu, nu) pairs over a grid at a single point.
std::vector<std::pair<Degree, Degree>> admissible_pairs(const std::vector<Degree>& grid) {
  std::vector<std::pair<Degree, Degree>> out;
  for (const Degree& m : grid)
    for (const Degree& n : grid)
      if (sum_within_one(m, n)) out.emplace_back(m, n);
  return out;
}

Ifs point_ifs(const CarrierPtr& c, const Degree& m, const Degree& n) {
  return ifs_build(c, {m}, {n});
}

}  // namespace

TEST_CASE("build validates the pointwise sum") {
  CarrierPtr snap = graded_snapshot_carrier();
  Ifs a = graded_snapshot_ifs();
  CHECK(a.mu[0] == Degree::one());
  CHECK(a.nu[2] == Degree::of(7, 10));

  CHECK_NOTHROW(ifs_build(snap, std::vector<Degree>(3, Degree::zero()),
                          std::vector<Degree>(3, Degree::one())));
  CHECK_THROWS_AS(ifs_build(snap, {Degree::of(3, 5), Degree::zero(), Degree::zero()},
                            {Degree::of(1, 2), Degree::one(), Degree::one()}),
                  Error);
  CHECK_THROWS_AS(ifs_build(snap, {Degree::zero()}, {Degree::one()}), Error);
}

TEST_CASE("order and equality") {
  CarrierPtr snap = graded_snapshot_carrier();
  Ifs a = graded_snapshot_ifs();
  Ifs empty = ifs_build(snap, std::vector<Degree>(3, Degree::zero()),
                        std::vector<Degree>(3, Degree::one()));
  CHECK(ifs_leq(a, a));
  CHECK(ifs_eq(a, a));
  CHECK(ifs_leq(empty, a));
  CHECK_FALSE(ifs_leq(a, empty));

  // box(A) <= A always; A <= box(A) only where mu + nu reaches 1.
  CHECK(ifs_leq(ifs_box(a), a));
  CHECK_FALSE(ifs_leq(a, ifs_box(a)));  // at n1, 1/10 + 6/10 < 1

  CarrierPtr other = Carrier::make({"p", "q", "r"});
  Ifs b = ifs_build(other, a.mu, a.nu);
  CHECK_THROWS_AS(ifs_leq(a, b), Error);
}

TEST_CASE("complement, box and diamond") {
  CarrierPtr pt = Carrier::make({"x"});
  Ifs h = point_ifs(pt, Degree::of(1, 2), Degree::of(1, 4));
  Ifs boxed = ifs_box(h);
  CHECK(boxed.mu[0] == Degree::of(1, 2));
  CHECK(boxed.nu[0] == Degree::of(1, 2));

  Ifs a = graded_snapshot_ifs();
  Ifs dia = ifs_diamond(a);
  CHECK(dia.mu[1] == Degree::of(4, 10));
  CHECK(dia.nu[1] == Degree::of(6, 10));

  CHECK(ifs_eq(ifs_complement(ifs_complement(a)), a));
  CHECK(ifs_eq(ifs_box(ifs_box(a)), ifs_box(a)));
  CHECK(ifs_eq(ifs_diamond(ifs_diamond(a)), ifs_diamond(a)));
  CHECK(ifs_leq(ifs_box(a), ifs_diamond(a)));
}

TEST_CASE("meet, join and families") {
  CarrierPtr pt = Carrier::make({"x"});
  Ifs top = point_ifs(pt, Degree::one(), Degree::zero());
  Ifs mid = point_ifs(pt, Degree::of(1, 10), Degree::of(6, 10));
  Ifs m = ifs_meet(top, mid);
  CHECK(m.mu[0] == Degree::of(1, 10));
  CHECK(m.nu[0] == Degree::of(6, 10));

  Ifs a = graded_snapshot_ifs();
  CHECK(ifs_eq(ifs_meet(a, a), a));

  std::vector<Ifs> family = {a, ifs_box(a), ifs_diamond(a)};
  Ifs inf = ifs_family_inf(family);
  CHECK(ifs_eq(inf, ifs_meet(ifs_meet(family[0], family[1]), family[2])));
  Ifs sup = ifs_family_sup(family);
  CHECK(ifs_eq(sup, ifs_join(ifs_join(family[0], family[1]), family[2])));
  CHECK_THROWS_AS(ifs_family_inf({}), Error);
}

TEST_CASE("lattice laws over a grid, exhaustively at one point") {
  CarrierPtr pt = Carrier::make({"x"});
  std::vector<Degree> grid = {Degree::zero(), Degree::of(1, 4), Degree::of(1, 2),
                              Degree::of(3, 4), Degree::one()};
  auto pairs = admissible_pairs(grid);
  REQUIRE(pairs.size() == 15);
  std::vector<Ifs> all;
  for (const auto& [m, n] : pairs) all.push_back(point_ifs(pt, m, n));
  for (const Ifs& x : all)
    for (const Ifs& y : all) {
      CHECK(ifs_eq(ifs_meet(x, y), ifs_meet(y, x)));
      CHECK(ifs_eq(ifs_join(x, y), ifs_join(y, x)));
      CHECK(ifs_eq(ifs_meet(x, ifs_join(x, y)), x));  // absorption
      CHECK(ifs_eq(ifs_join(x, ifs_meet(x, y)), x));
      CHECK(ifs_leq(ifs_meet(x, y), x));
      CHECK(ifs_leq(x, ifs_join(x, y)));
      for (const Ifs& z : all)
        CHECK(ifs_eq(ifs_meet(ifs_meet(x, y), z), ifs_meet(x, ifs_meet(y, z))));
    }
}

TEST_CASE("level cuts") {
  Ifs a = graded_snapshot_ifs();
  CHECK(upper_cut(a, Degree::zero()) == CrispSubset::universe(a.carrier));

  CrispSubset u = upper_cut(a, Degree::of(2, 10));
  CHECK(u.contains(0));
  CHECK_FALSE(u.contains(1));
  CHECK(u.contains(2));

  CrispSubset l = lower_cut(a, Degree::of(6, 10));
  CHECK(l.contains(0));
  CHECK(l.contains(1));
  CHECK_FALSE(l.contains(2));

  CHECK(upper_cut(a, Degree::one()).count() == 1);

  // Upper cuts shrink and lower cuts grow as the threshold rises.
  std::vector<Degree> ts = degree_images(a);
  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    CHECK(upper_cut(a, ts[i + 1]).subset_of(upper_cut(a, ts[i])));
    CHECK(lower_cut(a, ts[i]).subset_of(lower_cut(a, ts[i + 1])));
  }
}

TEST_CASE("support") {
  CarrierPtr snap = graded_snapshot_carrier();
  Ifs a = graded_snapshot_ifs();
  CHECK(support(a) == CrispSubset::universe(snap));

  Ifs empty = ifs_build(snap, std::vector<Degree>(3, Degree::zero()),
                        std::vector<Degree>(3, Degree::one()));
  CHECK(support(empty).empty());
  CHECK_FALSE(ifs_nonempty(empty));

  Ifs half = ifs_build(snap, {Degree::zero(), Degree::of(1, 2), Degree::zero()},
                       {Degree::of(1, 2), Degree::of(1, 2), Degree::one()});
  CrispSubset s = support(half);
  CHECK_FALSE(s.contains(0));  // mu must be strictly positive
  CHECK(s.contains(1));
  CHECK_FALSE(s.contains(2));
  CHECK(ifs_nonempty(half));
}

TEST_CASE("characteristic pairs and steps") {
  GsgPtr z4 = make_modular(4, {0, 1, 2, 3});
  CrispSubset evens(z4->carrier());
  evens.add(0);
  evens.add(2);

  Ifs chi = characteristic_pair(CrispSubset::universe(z4->carrier()));
  for (int i = 0; i < chi.size(); ++i) {
    CHECK(chi.mu[i] == Degree::one());
    CHECK(chi.nu[i] == Degree::zero());
  }

  CHECK(support(characteristic_pair(evens)) == evens);
  CHECK(ifs_eq(characteristic_pair(evens),
               step_ifs(evens, Degree::one(), Degree::zero(), Degree::zero(), Degree::one())));

  Ifs step = step_ifs(evens, Degree::of(9, 10), Degree::of(1, 10), Degree::of(1, 20),
                      Degree::of(8, 10));
  CHECK(upper_cut(step, Degree::of(9, 10)) == evens);
  CHECK(lower_cut(step, Degree::of(1, 20)) == evens);

  CHECK_THROWS_AS(step_ifs(evens, Degree::of(1, 10), Degree::of(9, 10), Degree::zero(),
                           Degree::one()),
                  Error);
  CHECK_THROWS_AS(step_ifs(evens, Degree::of(9, 10), Degree::zero(), Degree::of(2, 10),
                           Degree::of(8, 10)),
                  Error);
}

TEST_CASE("every operation preserves the sum invariant") {
  Ifs a = graded_snapshot_ifs();
  Ifs b = ifs_diamond(a);
  for (const Ifs& out : {ifs_complement(a), ifs_box(a), ifs_diamond(a), ifs_meet(a, b),
                         ifs_join(a, b)}) {
    CHECK_NOTHROW(ifs_build(out.carrier, out.mu, out.nu));
  }
}
