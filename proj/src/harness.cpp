#include "gfz/harness.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>

#include "gfz/extension.hpp"
#include "gfz/io.hpp"

namespace gfz::harness {

const char* verdict_token(Verdict v) {
  switch (v) {
    case Verdict::AllPass: return "all-pass";
    case Verdict::Counterexample: return "counterexample";
    case Verdict::HypothesisNeverMet: return "hypothesis-never-met";
    case Verdict::ExpectedFail: return "expected-fail";
    case Verdict::UnexpectedPass: return "unexpected-pass";
  }
  return "?";
}

namespace {

CaseOutcome pass() { return {CaseOutcome::Pass, "", {}}; }
CaseOutcome skip(std::string note) { return {CaseOutcome::Skip, std::move(note), {}}; }
CaseOutcome fail(std::string note, std::vector<Artifact> artifacts) {
  return {CaseOutcome::Fail, std::move(note), std::move(artifacts)};
}

Artifact art_g(const GammaSemigroup& g) { return {"G.gsg", io::print_gsg(g)}; }
Artifact art_ifs(const char* name, const Ifs& a) { return {name, io::print_ifs(a)}; }

struct KindPick {
  Side side;
  gen::IfsConstraint constraint;
  const char* name;
};

KindPick pick_kind(gen::Rng& rng) {
  switch (rng.below(3)) {
    case 0: return {Side::Left, gen::IfsConstraint::Ifli, "left"};
    case 1: return {Side::Right, gen::IfsConstraint::Ifri, "right"};
    default: return {Side::TwoSided, gen::IfsConstraint::Ifi, "two-sided"};
  }
}

IdealVerdict side_conditions(const GammaSemigroup& g, const Ifs& a, Side side) {
  switch (side) {
    case Side::Left: return ifli_conditions(g, a);
    case Side::Right: return ifri_conditions(g, a);
    case Side::TwoSided: return ifi_conditions(g, a);
  }
  return {};
}

std::vector<Degree> sweep_thresholds(const Ifs& a) {
  std::vector<Degree> ts = degree_images(a);
  if (ts.empty() || ts.front() != Degree::zero()) ts.insert(ts.begin(), Degree::zero());
  if (ts.back() != Degree::one()) ts.push_back(Degree::one());
  return ts;
}

std::string verdict_note(const GammaSemigroup& g, const IdealVerdict& v) {
  std::string out = std::string(v.condition) + " fails at (";
  out += v.x >= 0 ? g.id(v.x) : "-";
  out += ", ";
  out += v.g >= 0 ? g.gamma_id(v.g) : "-";
  out += ", ";
  out += v.y >= 0 ? g.id(v.y) : "-";
  out += ")";
  return out;
}

// ---- individual statement checks -----------------------------------------

CaseOutcome check_prime_criteria(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  auto ideals = enumerate_ideals(*g, Side::TwoSided);
  for (const CrispSubset& ideal : ideals) {
    bool pairs = is_prime_ideal(*g, ideal, PrimeCriterion::Pairs);
    bool sandwich = is_prime_ideal(*g, ideal, PrimeCriterion::Sandwich);
    bool subsets = is_prime_ideal(*g, ideal, PrimeCriterion::Subsets);
    if (pairs != sandwich || pairs != subsets)
      return fail("criteria disagree on {" + ideal.str() + "}: pairs=" + std::to_string(pairs) +
                      " sandwich=" + std::to_string(sandwich) +
                      " subsets=" + std::to_string(subsets),
                  {art_g(*g)});
    bool sp = is_semiprime_ideal(*g, ideal);
    if (pairs && !sp)
      return fail("prime ideal {" + ideal.str() + "} is not semiprime", {art_g(*g)});
    bool sp_by_ideals = true;
    for (const CrispSubset& a : ideals)
      if (ideal_product(*g, a, a).subset_of(ideal) && !a.subset_of(ideal)) {
        sp_by_ideals = false;
        break;
      }
    if (sp != sp_by_ideals)
      return fail("semiprime forms disagree on {" + ideal.str() + "}", {art_g(*g)});
  }
  return pass();
}

CaseOutcome check_family_inf(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  KindPick kind = pick_kind(rng);
  std::vector<Ifs> family;
  int k = 2 + rng.below(2);
  for (int i = 0; i < k; ++i) {
    auto a = gen::draw_ifs(rng, *g, kind.constraint);
    if (!a) return skip("no constrained sample");
    family.push_back(std::move(*a));
  }
  Ifs meet = ifs_family_inf(family);
  IdealVerdict v = side_conditions(*g, meet, kind.side);
  if (!v.holds)
    return fail("family inf loses the " + std::string(kind.name) + " conditions: " +
                    verdict_note(*g, v),
                {art_g(*g), art_ifs("A0.ifs", family[0]), art_ifs("A1.ifs", family[1])});
  return pass();
}

CaseOutcome check_box(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  KindPick kind = pick_kind(rng);
  auto a = gen::draw_ifs(rng, *g, kind.constraint);
  if (!a) return skip("no constrained sample");
  IdealVerdict v = side_conditions(*g, ifs_box(*a), kind.side);
  if (!v.holds)
    return fail("box image loses the conditions: " + verdict_note(*g, v),
                {art_g(*g), art_ifs("A.ifs", *a)});
  return pass();
}

CaseOutcome check_diamond(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  KindPick kind = pick_kind(rng);
  auto a = gen::draw_ifs(rng, *g, kind.constraint);
  if (!a) return skip("no constrained sample");
  IdealVerdict v = side_conditions(*g, ifs_diamond(*a), kind.side);
  if (!v.holds)
    return fail("diamond image loses the conditions: " + verdict_note(*g, v),
                {art_g(*g), art_ifs("A.ifs", *a)});
  return pass();
}

CaseOutcome check_box_diamond_iff(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  KindPick kind = pick_kind(rng);
  auto a = gen::draw_ifs(rng, *g, gen::IfsConstraint::None);
  bool lhs = side_conditions(*g, *a, kind.side).holds;
  bool rhs = side_conditions(*g, ifs_box(*a), kind.side).holds &&
             side_conditions(*g, ifs_diamond(*a), kind.side).holds;
  if (lhs != rhs)
    return fail(std::string("biconditional broken for ") + kind.name,
                {art_g(*g), art_ifs("A.ifs", *a)});
  return pass();
}

CaseOutcome check_cuts_are_ideals(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  KindPick kind = pick_kind(rng);
  auto a = gen::draw_ifs(rng, *g, kind.constraint);
  if (!a) return skip("no constrained sample");
  std::vector<Degree> ts = degree_images_common(*a);
  if (ts.empty()) return skip("no shared image value");
  for (const Degree& t : ts) {
    CrispSubset up = upper_cut(*a, t);
    CrispSubset low = lower_cut(*a, t);
    if (!is_ideal(*g, up, kind.side))
      return fail("upper cut at " + t.str() + " is not a " + kind.name + " ideal",
                  {art_g(*g), art_ifs("A.ifs", *a)});
    if (!is_ideal(*g, low, kind.side))
      return fail("lower cut at " + t.str() + " is not a " + kind.name + " ideal",
                  {art_g(*g), art_ifs("A.ifs", *a)});
  }
  return pass();
}

CaseOutcome check_cuts_converse(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  KindPick kind = pick_kind(rng);
  auto a = gen::draw_ifs(rng, *g, gen::IfsConstraint::None);
  for (const Degree& t : sweep_thresholds(*a)) {
    CrispSubset up = upper_cut(*a, t);
    if (!up.empty() && !is_ideal(*g, up, kind.side)) return skip("cut hypothesis not met");
    CrispSubset low = lower_cut(*a, t);
    if (!low.empty() && !is_ideal(*g, low, kind.side)) return skip("cut hypothesis not met");
  }
  IdealVerdict v = side_conditions(*g, *a, kind.side);
  if (!v.holds)
    return fail("all cuts are ideals yet the conditions fail: " + verdict_note(*g, v),
                {art_g(*g), art_ifs("A.ifs", *a)});
  return pass();
}

CaseOutcome check_omega_and_zero_sets(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  auto a = gen::draw_ifs(rng, *g, gen::IfsConstraint::Ifi);
  if (!a) return skip("no constrained sample");
  int omega = rng.below(g->size());
  CrispSubset w = omega_set(*g, *a, omega);  // postcondition-checked inside
  if (!is_ideal(*g, w, Side::TwoSided))
    return fail("omega set is not a two-sided ideal", {art_g(*g), art_ifs("A.ifs", *a)});
  if (g->has_zero()) {
    CrispSubset z = zero_set(*g, *a);
    if (!is_ideal(*g, z, Side::TwoSided))
      return fail("zero-level set is not a two-sided ideal", {art_g(*g), art_ifs("A.ifs", *a)});
  }
  return pass();
}

CaseOutcome check_step_ifs(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  KindPick kind = pick_kind(rng);
  auto ideals = enumerate_ideals(*g, kind.side);
  const CrispSubset& ideal = ideals[rng.below(static_cast<int>(ideals.size()))];
  Degree a0 = Degree::one(), a1 = Degree::zero(), b0 = Degree::zero(), b1 = Degree::one();
  for (int i = 0; i < 20; ++i) {
    Degree ca0 = gen::draw_degree(rng), ca1 = gen::draw_degree(rng);
    Degree cb0 = gen::draw_degree(rng), cb1 = gen::draw_degree(rng);
    if (ca1 < ca0 && cb0 < cb1 && sum_within_one(ca0, cb0) && sum_within_one(ca1, cb1)) {
      a0 = ca0; a1 = ca1; b0 = cb0; b1 = cb1;
      break;
    }
  }
  Ifs step = step_ifs(ideal, a0, a1, b0, b1);
  IdealVerdict v = side_conditions(*g, step, kind.side);
  if (!v.holds)
    return fail("step over a " + std::string(kind.name) + " ideal loses the conditions: " +
                    verdict_note(*g, v),
                {art_g(*g), art_ifs("A.ifs", step)});
  if (!(upper_cut(step, a0) == ideal) || !(lower_cut(step, b0) == ideal))
    return fail("step cuts do not recover the base ideal", {art_g(*g), art_ifs("A.ifs", step)});
  return pass();
}

CaseOutcome check_characteristic(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  KindPick kind = pick_kind(rng);
  auto ideals = enumerate_ideals(*g, kind.side);
  const CrispSubset& ideal = ideals[rng.below(static_cast<int>(ideals.size()))];
  Ifs chi = characteristic_pair(ideal);
  IdealVerdict v;
  switch (kind.side) {
    case Side::Left: v = is_ifli(*g, chi); break;
    case Side::Right: v = is_ifri(*g, chi); break;
    case Side::TwoSided: v = is_ifi(*g, chi); break;
  }
  if (!v.holds)
    return fail("characteristic pair loses the conditions: " + verdict_note(*g, v),
                {art_g(*g), art_ifs("A.ifs", chi)});
  return pass();
}

CaseOutcome check_compose_left(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  auto a = gen::draw_ifs(rng, *g, gen::IfsConstraint::None);
  bool side_right = rng.below(2) == 1;
  bool lhs = side_right ? ifri_conditions(*g, *a).holds : ifli_conditions(*g, *a).holds;
  Ifs comp = side_right ? compose(*g, *a, whole_space(*g)) : compose(*g, whole_space(*g), *a);
  bool rhs = ifs_leq(comp, *a);
  if (lhs != rhs)
    return fail(std::string("one-sided composition characterization broken (") +
                    (side_right ? "right" : "left") + ")",
                {art_g(*g), art_ifs("A.ifs", *a)});
  return pass();
}

CaseOutcome check_compose_two_sided(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  auto a = gen::draw_ifs(rng, *g, gen::IfsConstraint::None);
  bool lhs = ifi_conditions(*g, *a).holds;
  bool rhs = ifs_leq(compose(*g, whole_space(*g), *a), *a) &&
             ifs_leq(compose(*g, *a, whole_space(*g)), *a);
  if (lhs != rhs)
    return fail("two-sided composition characterization broken",
                {art_g(*g), art_ifs("A.ifs", *a)});
  return pass();
}

CaseOutcome check_compose_below_meet(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  auto a = gen::draw_ifs(rng, *g, gen::IfsConstraint::Ifri);
  auto b = gen::draw_ifs(rng, *g, gen::IfsConstraint::Ifli);
  if (!a || !b) return skip("no constrained sample");
  if (!ifs_leq(compose(*g, *a, *b), ifs_meet(*a, *b)))
    return fail("composition escapes the meet",
                {art_g(*g), art_ifs("A.ifs", *a), art_ifs("B.ifs", *b)});
  return pass();
}

CaseOutcome check_compose_meet_chain(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  auto a = gen::draw_ifs(rng, *g, gen::IfsConstraint::Ifi);
  auto b = gen::draw_ifs(rng, *g, gen::IfsConstraint::Ifi);
  if (!a || !b) return skip("no constrained sample");
  Ifs meet = ifs_meet(*a, *b);
  if (!ifs_leq(compose(*g, *a, *b), meet) || !ifs_leq(meet, *a) || !ifs_leq(meet, *b))
    return fail("composition/meet chain broken",
                {art_g(*g), art_ifs("A.ifs", *a), art_ifs("B.ifs", *b)});
  return pass();
}

CaseOutcome check_regular_superset(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance(rng);
  if (!is_regular(*g).regular) return skip("instance is not regular");
  auto a = gen::draw_ifs(rng, *g, gen::IfsConstraint::None);
  auto b = gen::draw_ifs(rng, *g, gen::IfsConstraint::None);
  if (!ifs_leq(ifs_meet(*a, *b), compose(*g, *a, *b)))
    return fail("meet escapes the composition on a regular instance",
                {art_g(*g), art_ifs("A.ifs", *a), art_ifs("B.ifs", *b)});
  return pass();
}

CaseOutcome check_regular_characterization(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  if (is_regular(*g).regular) {
    auto a = gen::draw_ifs(rng, *g, gen::IfsConstraint::Ifri);
    auto b = gen::draw_ifs(rng, *g, gen::IfsConstraint::Ifli);
    if (!a || !b) return skip("no constrained sample");
    if (!ifs_eq(compose(*g, *a, *b), ifs_meet(*a, *b)))
      return fail("composition differs from meet on a regular instance",
                  {art_g(*g), art_ifs("A.ifs", *a), art_ifs("B.ifs", *b)});
    return pass();
  }
  // Non-regular direction: some pair of one-sided ideals must witness the
  // difference through their characteristic pairs.
  for (const CrispSubset& r : enumerate_ideals(*g, Side::Right))
    for (const CrispSubset& l : enumerate_ideals(*g, Side::Left)) {
      Ifs cr = characteristic_pair(r), cl = characteristic_pair(l);
      if (!ifs_eq(compose(*g, cr, cl), ifs_meet(cr, cl))) return pass();
    }
  return fail("non-regular instance hides every composition/meet witness", {art_g(*g)});
}

CaseOutcome check_prime_definition_consistency(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  auto a = gen::draw_ifs(rng, *g, gen::IfsConstraint::Ifi);
  if (!a) return skip("no constrained sample");
  for (int x = 0; x < g->size(); ++x)
    for (int y = 0; y < g->size(); ++y) {
      Degree inf_mu = a->mu[g->sgs(x, 0, y)], sup_nu = a->nu[g->sgs(x, 0, y)];
      for (int ga = 1; ga < g->gamma_size(); ++ga) {
        inf_mu = degree_min(inf_mu, a->mu[g->sgs(x, ga, y)]);
        sup_nu = degree_max(sup_nu, a->nu[g->sgs(x, ga, y)]);
      }
      if (inf_mu < degree_max(a->mu[x], a->mu[y]) ||
          degree_min(a->nu[x], a->nu[y]) < sup_nu)
        return fail("ideal inequalities do not dominate the prime bounds",
                    {art_g(*g), art_ifs("A.ifs", *a)});
    }
  return pass();
}

CaseOutcome check_family_inf_semiprime(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  std::vector<Ifs> family;
  int k = 2 + rng.below(2);
  for (int i = 0; i < k; ++i) {
    auto a = gen::draw_ifs(rng, *g, gen::IfsConstraint::Ifspi);
    if (!a) return skip("no constrained sample");
    family.push_back(std::move(*a));
  }
  Ifs meet = ifs_family_inf(family);
  if (!ifi_conditions(*g, meet).holds || !ifspi_conditions(*g, meet).holds)
    return fail("family inf of semiprime members loses the conditions",
                {art_g(*g), art_ifs("A0.ifs", family[0]), art_ifs("A1.ifs", family[1])});
  return pass();
}

// Frozen refutation: the meet of the characteristic pairs of two
// incomparable prime ideals of mod6-full collapses onto their intersection,
// which is not prime, so the prime equalities fail at (2, 3).
CaseOutcome probe_family_inf_prime(gen::Rng&) {
  GsgPtr g = catalog_instance("mod6-full");
  CrispSubset evens(g->carrier()), threes(g->carrier());
  for (int v : {0, 2, 4}) evens.add(g->element(std::to_string(v)));
  for (int v : {0, 3}) threes.add(g->element(std::to_string(v)));
  Ifs a = characteristic_pair(evens), b = characteristic_pair(threes);
  if (!is_ifpi(*g, a).holds || !is_ifpi(*g, b).holds)
    return fail("probe setup broken: inputs are not prime", {art_g(*g)});
  Ifs meet = ifs_meet(a, b);
  IdealVerdict v = ifpi_conditions(*g, meet);
  if (v.holds) return pass();  // would be an unexpected pass of the printed claim
  return fail("meet of two prime members is not prime: " + verdict_note(*g, v),
              {art_g(*g), art_ifs("A.ifs", a), art_ifs("B.ifs", b), art_ifs("meet.ifs", meet)});
}

CaseOutcome check_box_prime(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  bool semi = rng.below(2) == 1;
  auto a = gen::draw_ifs(rng, *g, semi ? gen::IfsConstraint::Ifspi : gen::IfsConstraint::Ifpi);
  if (!a) return skip("no constrained sample");
  Ifs box = ifs_box(*a);
  bool ok = ifi_conditions(*g, box).holds &&
            (semi ? ifspi_conditions(*g, box).holds : ifpi_conditions(*g, box).holds);
  if (!ok) return fail("box image loses the prime conditions", {art_g(*g), art_ifs("A.ifs", *a)});
  return pass();
}

CaseOutcome check_diamond_prime(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  bool semi = rng.below(2) == 1;
  auto a = gen::draw_ifs(rng, *g, semi ? gen::IfsConstraint::Ifspi : gen::IfsConstraint::Ifpi);
  if (!a) return skip("no constrained sample");
  Ifs dia = ifs_diamond(*a);
  bool ok = ifi_conditions(*g, dia).holds &&
            (semi ? ifspi_conditions(*g, dia).holds : ifpi_conditions(*g, dia).holds);
  if (!ok)
    return fail("diamond image loses the prime conditions", {art_g(*g), art_ifs("A.ifs", *a)});
  return pass();
}

CaseOutcome check_box_diamond_prime_iff(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  auto a = gen::draw_ifs(rng, *g, gen::IfsConstraint::None);
  for (bool semi : {false, true}) {
    auto conds = [&](const Ifs& s) {
      return ifi_conditions(*g, s).holds &&
             (semi ? ifspi_conditions(*g, s).holds : ifpi_conditions(*g, s).holds);
    };
    if (conds(*a) != (conds(ifs_box(*a)) && conds(ifs_diamond(*a))))
      return fail(std::string("prime biconditional broken (semi=") + (semi ? "1" : "0") + ")",
                  {art_g(*g), art_ifs("A.ifs", *a)});
  }
  return pass();
}

CaseOutcome check_prime_cuts(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  bool semi = rng.below(2) == 1;
  auto a = gen::draw_ifs(rng, *g, semi ? gen::IfsConstraint::Ifspi : gen::IfsConstraint::Ifpi);
  if (!a) return skip("no constrained sample");
  std::vector<Degree> ts = degree_images_common(*a);
  if (ts.empty()) return skip("no shared image value");
  for (const Degree& t : ts)
    for (const CrispSubset& cut : {upper_cut(*a, t), lower_cut(*a, t)}) {
      bool ok = semi ? is_semiprime_ideal(*g, cut) : is_prime_ideal(*g, cut);
      if (!ok)
        return fail("cut at " + t.str() + " is not " + (semi ? "semiprime" : "prime"),
                    {art_g(*g), art_ifs("A.ifs", *a)});
    }
  return pass();
}

CaseOutcome check_prime_cuts_converse(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  bool semi = rng.below(2) == 1;
  auto a = gen::draw_ifs(rng, *g, gen::IfsConstraint::None);
  for (const Degree& t : sweep_thresholds(*a))
    for (const CrispSubset& cut : {upper_cut(*a, t), lower_cut(*a, t)}) {
      if (cut.empty()) continue;
      if (!is_ideal(*g, cut, Side::TwoSided)) return skip("cut hypothesis not met");
      bool ok = semi ? is_semiprime_ideal(*g, cut) : is_prime_ideal(*g, cut);
      if (!ok) return skip("cut hypothesis not met");
    }
  bool ok = ifi_conditions(*g, *a).holds &&
            (semi ? ifspi_conditions(*g, *a).holds : ifpi_conditions(*g, *a).holds);
  if (!ok)
    return fail(std::string("all cuts ") + (semi ? "semiprime" : "prime") +
                    " yet the equalities fail",
                {art_g(*g), art_ifs("A.ifs", *a)});
  return pass();
}

std::vector<CrispSubset> prime_ideals(const GammaSemigroup& g, bool semi) {
  std::vector<CrispSubset> out;
  for (const CrispSubset& i : enumerate_ideals(g, Side::TwoSided)) {
    bool ok = semi ? is_semiprime_ideal(g, i) : is_prime_ideal(g, i);
    if (ok) out.push_back(i);
  }
  return out;
}

CaseOutcome check_step_prime(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  bool semi = rng.below(2) == 1;
  auto ideals = prime_ideals(*g, semi);
  if (ideals.empty()) return skip("no qualifying crisp ideal");
  const CrispSubset& ideal = ideals[rng.below(static_cast<int>(ideals.size()))];
  Degree a0 = Degree::one(), a1 = Degree::zero(), b0 = Degree::zero(), b1 = Degree::one();
  for (int i = 0; i < 20; ++i) {
    Degree ca0 = gen::draw_degree(rng), ca1 = gen::draw_degree(rng);
    Degree cb0 = gen::draw_degree(rng), cb1 = gen::draw_degree(rng);
    if (ca1 < ca0 && cb0 < cb1 && sum_within_one(ca0, cb0) && sum_within_one(ca1, cb1)) {
      a0 = ca0; a1 = ca1; b0 = cb0; b1 = cb1;
      break;
    }
  }
  Ifs step = step_ifs(ideal, a0, a1, b0, b1);
  bool ok = ifi_conditions(*g, step).holds &&
            (semi ? ifspi_conditions(*g, step).holds : ifpi_conditions(*g, step).holds);
  if (!ok)
    return fail(std::string("step over a ") + (semi ? "semiprime" : "prime") +
                    " ideal loses the equalities",
                {art_g(*g), art_ifs("A.ifs", step)});
  return pass();
}

CaseOutcome check_characteristic_prime(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  bool semi = rng.below(2) == 1;
  auto ideals = prime_ideals(*g, semi);
  if (ideals.empty()) return skip("no qualifying crisp ideal");
  Ifs chi = characteristic_pair(ideals[rng.below(static_cast<int>(ideals.size()))]);
  IdealVerdict v = semi ? is_ifspi(*g, chi) : is_ifpi(*g, chi);
  if (!v.holds)
    return fail("characteristic pair loses the prime equalities",
                {art_g(*g), art_ifs("A.ifs", chi)});
  return pass();
}

CaseOutcome check_extension_ifi(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  if (!is_commutative(*g)) return skip("instance is not commutative");
  auto a = gen::draw_ifs(rng, *g, gen::IfsConstraint::Ifi);
  if (!a) return skip("no constrained sample");
  int x = rng.below(g->size());
  IdealVerdict v = ifi_conditions(*g, extend(*g, x, *a));
  if (!v.holds)
    return fail("extension by '" + g->id(x) + "' loses the ideal conditions: " +
                    verdict_note(*g, v),
                {art_g(*g), art_ifs("A.ifs", *a)});
  return pass();
}

CaseOutcome check_extension_ifri(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance(rng);  // commutativity not needed here
  auto a = gen::draw_ifs(rng, *g, gen::IfsConstraint::Ifri);
  if (!a) return skip("no constrained sample");
  int x = rng.below(g->size());
  IdealVerdict v = ifri_conditions(*g, extend(*g, x, *a));
  if (!v.holds)
    return fail("extension loses the right-ideal conditions: " + verdict_note(*g, v),
                {art_g(*g), art_ifs("A.ifs", *a)});
  return pass();
}

CaseOutcome check_extension_prime(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  if (!is_commutative(*g)) return skip("instance is not commutative");
  bool semi = rng.below(2) == 1;
  auto a = gen::draw_ifs(rng, *g, semi ? gen::IfsConstraint::Ifspi : gen::IfsConstraint::Ifpi);
  if (!a) return skip("no constrained sample");
  int x = rng.below(g->size());
  Ifs e = extend(*g, x, *a);
  bool ok = ifi_conditions(*g, e).holds &&
            (semi ? ifspi_conditions(*g, e).holds : ifpi_conditions(*g, e).holds);
  if (!ok)
    return fail("extension loses the prime equalities", {art_g(*g), art_ifs("A.ifs", *a)});
  return pass();
}

CaseOutcome check_extension_parts(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  auto a = gen::draw_ifs(rng, *g, gen::IfsConstraint::Ifi);
  if (!a) return skip("no constrained sample");
  int x = rng.below(g->size());
  Ifs ext = extend(*g, x, *a);
  if (!ifs_leq(*a, ext))
    return fail("set is not contained in its extension", {art_g(*g), art_ifs("A.ifs", *a)});
  for (int alpha = 0; alpha < g->gamma_size(); ++alpha)
    for (int n = 0; n <= 3; ++n) {
      Ifs lower = extend(*g, power_element(*g, x, alpha, n), *a);
      Ifs upper = extend(*g, power_element(*g, x, alpha, n + 1), *a);
      if (!ifs_leq(lower, upper))
        return fail("power chain is not monotone at n=" + std::to_string(n),
                    {art_g(*g), art_ifs("A.ifs", *a)});
    }
  if (Degree::zero() < a->mu[x] && a->nu[x] < Degree::one()) {
    if (!(support(ext) == CrispSubset::universe(g->carrier())))
      return fail("support of the extension misses part of the carrier",
                  {art_g(*g), art_ifs("A.ifs", *a)});
  }
  return pass();
}

CaseOutcome check_extension_crisp(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  CrispSubset sub = gen::draw_subset(rng, g->carrier(), true);
  int x = rng.below(g->size());
  Ifs via_ifs = extend(*g, x, characteristic_pair(sub));
  Ifs via_crisp = characteristic_pair(crisp_extension(*g, x, sub));
  if (!ifs_eq(via_ifs, via_crisp))
    return fail("characteristic pair and crisp extension do not commute", {art_g(*g)});
  return pass();
}

CaseOutcome check_extension_cuts(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  auto a = gen::draw_ifs(rng, *g, gen::IfsConstraint::None);
  int x = rng.below(g->size());
  Ifs ext = extend(*g, x, *a);
  for (const Degree& t : sweep_thresholds(*a)) {
    if (!(crisp_extension(*g, x, upper_cut(*a, t)) == upper_cut(ext, t)))
      return fail("upper cuts do not commute with extension at t=" + t.str(),
                  {art_g(*g), art_ifs("A.ifs", *a)});
    if (!(crisp_extension(*g, x, lower_cut(*a, t)) == lower_cut(ext, t)))
      return fail("lower cuts do not commute with extension at t=" + t.str(),
                  {art_g(*g), art_ifs("A.ifs", *a)});
  }
  return pass();
}

CaseOutcome check_constancy(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  if (!is_commutative(*g)) return skip("instance is not commutative");
  std::optional<Ifs> a;
  if (rng.below(3) == 0) {
    Degree c = gen::draw_degree(rng);
    Degree d = c.complement();
    a = ifs_build(g->carrier(), std::vector<Degree>(g->size(), c),
                  std::vector<Degree>(g->size(), d));
  } else {
    a = gen::draw_ifs(rng, *g, gen::IfsConstraint::None);
  }
  for (int x = 0; x < g->size(); ++x)
    if (!ifs_eq(extend(*g, x, *a), *a)) return skip("not extension-fixed everywhere");
  if (!is_constant(*a))
    return fail("extension-fixed set is not constant", {art_g(*g), art_ifs("A.ifs", *a)});
  return pass();
}

CaseOutcome check_nonmaximal(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  if (!is_commutative(*g)) return skip("instance is not commutative");
  auto a = gen::draw_ifs(rng, *g, gen::IfsConstraint::Ifpi);
  if (!a) return skip("no constrained sample");
  if (is_constant(*a)) return skip("sample is constant");
  for (int x = 0; x < g->size(); ++x) {
    Ifs ext = extend(*g, x, *a);
    if (ifs_leq(*a, ext) && !ifs_eq(*a, ext) && ifi_conditions(*g, ext).holds &&
        ifpi_conditions(*g, ext).holds)
      return pass();
  }
  return fail("no strictly larger prime extension exists", {art_g(*g), art_ifs("A.ifs", *a)});
}

CaseOutcome check_semiprime_family_extension(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  if (!is_commutative(*g)) return skip("instance is not commutative");
  if (!g->has_zero()) return skip("instance has no zero");
  std::vector<Ifs> family;
  int k = 2 + rng.below(2);
  for (int i = 0; i < k; ++i) {
    auto a = gen::draw_ifs(rng, *g, gen::IfsConstraint::Ifspi);
    if (!a) return skip("no constrained sample");
    family.push_back(std::move(*a));
  }
  Ifs meet = ifs_family_inf(family);
  if (!ifi_conditions(*g, meet).holds || !ifspi_conditions(*g, meet).holds)
    return fail("family inf loses the semiprime equalities",
                {art_g(*g), art_ifs("A0.ifs", family[0])});
  for (int x = 0; x < g->size(); ++x) {
    Ifs e = extend(*g, x, meet);
    if (!ifi_conditions(*g, e).holds || !ifspi_conditions(*g, e).holds)
      return fail("extension of the family inf loses the semiprime equalities",
                  {art_g(*g), art_ifs("A0.ifs", family[0])});
  }
  return pass();
}

CaseOutcome check_crisp_family_extension(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  if (!is_commutative(*g)) return skip("instance is not commutative");
  auto semis = prime_ideals(*g, true);
  if (semis.empty()) return skip("no semiprime crisp ideal");
  CrispSubset meet = semis[rng.below(static_cast<int>(semis.size()))];
  int k = 1 + rng.below(2);
  for (int i = 0; i < k; ++i)
    meet = subset_intersect(meet, semis[rng.below(static_cast<int>(semis.size()))]);
  if (meet.empty()) return skip("family intersection is empty");
  Ifs m = characteristic_pair(meet);
  for (int x = 0; x < g->size(); ++x) {
    Ifs e = extend(*g, x, m);
    if (!ifi_conditions(*g, e).holds || !ifspi_conditions(*g, e).holds)
      return fail("extension of the intersection pair loses the semiprime equalities",
                  {art_g(*g), art_ifs("M.ifs", m)});
  }
  return pass();
}

CaseOutcome check_fixed_point_forward(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  auto a = gen::draw_ifs(rng, *g, gen::IfsConstraint::Ifpi);
  if (!a) return skip("no constrained sample");
  int x = rng.below(g->size());
  FixedPointResult r = fixed_point_forward(*g, *a, x);
  switch (r.outcome) {
    case CheckOutcome::Pass: return pass();
    case CheckOutcome::HypothesisNotMet: return skip("base point is not extremal");
    case CheckOutcome::Fail:
      return fail("extremal base point moved the set: " + r.detail,
                  {art_g(*g), art_ifs("A.ifs", *a)});
  }
  return pass();
}

// Frozen refutation of the printed converse: on mod4-full the set below is
// an IF ideal fixed under extension by every qualifying element, yet the
// prime equalities fail at (2, 2). (The gap: 2 is exempted through its
// minimal nu value while its mu value is not maximal.)
CaseOutcome probe_fixed_point_converse(gen::Rng&) {
  GsgPtr g = catalog_instance("mod4-full");
  Ifs a = ifs_build(g->carrier(),
                    {Degree::of(1, 2), Degree::zero(), Degree::of(1, 2), Degree::zero()},
                    {Degree::zero(), Degree::of(1, 2), Degree::of(1, 4), Degree::of(1, 2)});
  if (!is_ifi(*g, a).holds) return fail("probe setup broken: not an IF ideal", {art_g(*g)});
  FixedPointResult r = fixed_point_converse(*g, a);
  if (r.outcome == CheckOutcome::Fail)
    return fail("fixed-point hypothesis holds yet the set is not prime: " + r.detail,
                {art_g(*g), art_ifs("A.ifs", a)});
  return pass();  // unexpected: the printed claim would have survived
}

CaseOutcome check_prime_char_extension(gen::Rng& rng) {
  GsgPtr g = gen::draw_instance_small(rng, 6);
  for (const CrispSubset& ideal : enumerate_ideals(*g, Side::TwoSided)) {
    Ifs m = characteristic_pair(ideal);
    bool fixed_everywhere = true;
    for (int x = 0; x < g->size() && fixed_everywhere; ++x) {
      if (ideal.contains(x)) continue;
      fixed_everywhere = ifs_eq(extend(*g, x, m), m);
    }
    if (is_prime_ideal(*g, ideal) != fixed_everywhere)
      return fail("prime characterization by extensions breaks on {" + ideal.str() + "}",
                  {art_g(*g), art_ifs("M.ifs", m)});
  }
  return pass();
}

// The graded example as printed claims to be an IF ideal, but the nu value
// rises from 6/10 to 7/10 when magnitude 1 meets magnitude 2.
CaseOutcome probe_graded_example_ifi(gen::Rng&) {
  GsgPtr g = catalog_instance("negq4");
  Ifs a = graded_ifs(*g);
  IdealVerdict v = ifi_conditions(*g, a);
  if (!v.holds)
    return fail("graded example is not an IF ideal: " + verdict_note(*g, v),
                {art_g(*g), art_ifs("A.ifs", a)});
  return pass();
}

// The extension example claims constant values (1/10, 7/10) for every
// nonzero base point; the zero of the carrier alone already breaks that.
CaseOutcome probe_graded_example_extension(gen::Rng&) {
  GsgPtr g = catalog_instance("negq4");
  Ifs a = graded_ifs(*g);
  int x = g->element("n1");
  Ifs ext = extend(*g, x, a);
  Ifs claimed = ifs_build(g->carrier(),
                          std::vector<Degree>(g->size(), Degree::of(1, 10)),
                          std::vector<Degree>(g->size(), Degree::of(7, 10)));
  if (!ifs_eq(ext, claimed)) {
    std::string note = "extension by 'n1' differs from the claimed constant:";
    for (int y = 0; y < g->size(); ++y)
      if (ext.mu[y] != claimed.mu[y] || ext.nu[y] != claimed.nu[y]) {
        note += " at " + g->id(y) + " actual (" + ext.mu[y].str() + ", " + ext.nu[y].str() +
                ")";
        break;
      }
    return fail(note, {art_g(*g), art_ifs("A.ifs", a), art_ifs("extended.ifs", ext)});
  }
  return pass();
}

}  // namespace

const std::vector<TheoremCase>& registry() {
  static const std::vector<TheoremCase> cases = {
      {"thm-2.1", "pairs, sandwich and ideal-quantified prime forms agree; prime implies semiprime",
       false, check_prime_criteria},
      {"prop-3.5", "family inf preserves the one- and two-sided ideal conditions", false,
       check_family_inf},
      {"lem-3.6", "the box image of an ideal keeps the conditions", false, check_box},
      {"lem-3.7", "the diamond image of an ideal keeps the conditions", false, check_diamond},
      {"thm-3.8", "ideal conditions hold iff both modal images keep them", false,
       check_box_diamond_iff},
      {"thm-3.9", "cuts at shared image values are crisp ideals", false, check_cuts_are_ideals},
      {"thm-3.10", "when every nonempty cut is a crisp ideal the set is an IF ideal", false,
       check_cuts_converse},
      {"prop-3.11", "threshold sets at a fixed point and at the zero are crisp ideals", false,
       check_omega_and_zero_sets},
      {"thm-3.12", "two-valued steps over a crisp ideal are IF ideals with matching cuts "
                   "(crisp-ideal hypothesis assumed, as in the proof)",
       false, check_step_ifs},
      {"cor-3.13", "characteristic pairs of crisp ideals are IF ideals", false,
       check_characteristic},
      {"thm-3.15", "one-sided ideal conditions are equivalent to absorption under composition "
                   "with the whole space",
       false, check_compose_left},
      {"thm-3.16", "two-sided version of the composition characterization", false,
       check_compose_two_sided},
      {"prop-3.17", "composition of right and left ideals sits below their meet", false,
       check_compose_below_meet},
      {"prop-3.18", "for two-sided ideals composition sits below the meet and both members",
       false, check_compose_meet_chain},
      {"prop-3.19", "on regular instances composition dominates the meet", false,
       check_regular_superset},
      {"thm-3.20", "regularity is equivalent to composition = meet for right/left ideal pairs",
       false, check_regular_characterization},
      {"def-4.1-consistency", "the ideal inequalities already dominate the prime bounds, so the "
                              "equalities carry the whole content",
       false, check_prime_definition_consistency},
      {"prop-4.3-ifspi", "family inf preserves the semiprime equalities", false,
       check_family_inf_semiprime},
      {"prop-4.3-ifpi", "printed claim that family inf preserves the prime equalities; refuted "
                        "by incomparable primes (documented defect probe)",
       true, probe_family_inf_prime},
      {"lem-4.4", "the box image keeps the prime/semiprime equalities", false, check_box_prime},
      {"lem-4.5", "the diamond image keeps the prime/semiprime equalities", false,
       check_diamond_prime},
      {"thm-4.6", "prime equalities hold iff both modal images keep them", false,
       check_box_diamond_prime_iff},
      {"thm-4.7", "cuts of prime/semiprime sets at shared image values are prime/semiprime",
       false, check_prime_cuts},
      {"thm-4.8", "when every nonempty cut is prime/semiprime the equalities hold", false,
       check_prime_cuts_converse},
      {"thm-4.9", "steps over crisp prime/semiprime ideals keep the equalities (crisp "
                  "prime/semiprime hypothesis assumed, as in the earlier step result)",
       false, check_step_prime},
      {"cor-4.10", "characteristic pairs of crisp prime/semiprime ideals keep the equalities",
       false, check_characteristic_prime},
      {"prop-5.3", "on commutative instances extension preserves the ideal conditions", false,
       check_extension_ifi},
      {"remark-5.4-ifri", "extension preserves the right-ideal conditions without "
                          "commutativity",
       false, check_extension_ifri},
      {"prop-5.5-ifpi", "on commutative instances extension preserves the prime/semiprime "
                        "equalities",
       false, check_extension_prime},
      {"prop-5.7-parts-1-3", "containment in the extension, power-chain monotonicity, and "
                             "support saturation",
       false, check_extension_parts},
      {"prop-5.8-crisp", "extension commutes with characteristic pairs", false,
       check_extension_crisp},
      {"prop-5.9-cuts", "extension commutes with upper and lower cuts", false,
       check_extension_cuts},
      {"prop-5.10-constant", "a set fixed by every extension on a commutative instance is "
                             "constant",
       false, check_constancy},
      {"cor-5.10-nonmaximal", "non-constant prime sets admit a strictly larger prime extension",
       false, check_nonmaximal},
      {"cor-5.11-family", "family inf of semiprime sets and its extensions stay semiprime "
                          "(commutative, with zero)",
       false, check_semiprime_family_extension},
      {"cor-5.13-crisp-family", "extensions of the pair of an intersection of crisp semiprime "
                                "ideals stay semiprime",
       false, check_crisp_family_extension},
      {"thm-5.13-fixedpoint", "extension by a point with minimal mu and maximal nu fixes a "
                              "prime set",
       false, check_fixed_point_forward},
      {"thm-5.13-converse", "printed converse of the fixed-point theorem; refuted by an exempt "
                            "point with minimal nu but non-maximal mu (documented defect probe)",
       true, probe_fixed_point_converse},
      {"cor-5.14-prime-char", "a crisp ideal is prime iff its pair is fixed by extension at "
                              "every outside point",
       false, check_prime_char_extension},
      {"example-3.4-ifi", "printed claim that the graded example is an IF ideal; refuted on the "
                          "magnitude quotient (documented defect probe)",
       true, probe_graded_example_ifi},
      {"example-5.2-discrepancy", "printed constant extension values of the graded example; the "
                                  "zero point alone breaks them (documented defect probe)",
       true, probe_graded_example_extension},
  };
  return cases;
}

const TheoremCase& find_case(std::string_view id) {
  for (const TheoremCase& c : registry())
    if (c.id == id) return c;
  throw Error(Errc::UnknownCase, "no registered case '" + std::string(id) + "'");
}

CaseReport run_case(const TheoremCase& c, const RunOptions& opts) {
  CaseReport report;
  report.case_id = c.id;
  report.seed = opts.seed;
  auto start = std::chrono::steady_clock::now();
  gen::Rng rng(opts.seed ^ gen::fnv1a(c.id));

  std::optional<CaseOutcome> failure;
  for (int i = 0; i < opts.budget; ++i) {
    CaseOutcome out = c.attempt(rng);
    ++report.instances;
    if (out.kind == CaseOutcome::Skip) {
      ++report.skipped;
      continue;
    }
    if (out.kind == CaseOutcome::Fail) {
      failure = std::move(out);
      break;
    }
  }

  if (failure) {
    report.verdict = c.probe ? Verdict::ExpectedFail : Verdict::Counterexample;
    report.note = failure->note;
    if (!opts.results_dir.empty()) {
      std::filesystem::create_directories(opts.results_dir);
      failure->artifacts.push_back({"witness.txt", failure->note + "\n"});
      for (const Artifact& a : failure->artifacts) {
        std::ofstream out(std::filesystem::path(opts.results_dir) / (c.id + "." + a.name),
                          std::ios::binary);
        out << a.content;
      }
      report.witness_file = c.id + ".witness.txt";
    }
  } else if (report.instances == report.skipped) {
    report.verdict = Verdict::HypothesisNeverMet;
  } else {
    report.verdict = c.probe ? Verdict::UnexpectedPass : Verdict::AllPass;
  }

  report.elapsed_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<CaseReport> run_selected(std::span<const std::string> ids, const RunOptions& opts) {
  std::vector<CaseReport> out;
  for (const std::string& id : ids) out.push_back(run_case(find_case(id), opts));
  return out;
}

std::vector<CaseReport> run_all(const RunOptions& opts) {
  std::vector<CaseReport> out;
  for (const TheoremCase& c : registry()) out.push_back(run_case(c, opts));
  return out;
}

std::string machine_records(std::span<const CaseReport> reports) {
  std::string out;
  for (const CaseReport& r : reports) {
    out += "case=" + r.case_id + " verdict=" + verdict_token(r.verdict) +
           " instances=" + std::to_string(r.instances) + " skipped=" +
           std::to_string(r.skipped) + " seed=" + std::to_string(r.seed) +
           " witness=" + r.witness_file + "\n";
  }
  return out;
}

bool any_theorem_failure(std::span<const CaseReport> reports) {
  for (const CaseReport& r : reports)
    if (r.verdict == Verdict::Counterexample) return true;
  return false;
}

namespace {

constexpr CoverageRow kCoverage[] = {
    {"thm-2.1 prime criteria equivalence", "case:thm-2.1"},
    {"def-3.1 left translation conditions", "definition:is_ifli"},
    {"def-3.2 right translation conditions", "definition:is_ifri"},
    {"def-3.3 two-sided conditions", "definition:is_ifi"},
    {"example-3.4 graded set", "case:example-3.4-ifi"},
    {"prop-3.5 family inf of ideals", "case:prop-3.5"},
    {"lem-3.6 box image", "case:lem-3.6"},
    {"lem-3.7 diamond image", "case:lem-3.7"},
    {"thm-3.8 modal biconditional", "case:thm-3.8"},
    {"def level cuts", "definition:upper_cut/lower_cut"},
    {"thm-3.9 cuts are ideals", "case:thm-3.9"},
    {"thm-3.10 cut converse", "case:thm-3.10"},
    {"prop-3.11 threshold sets", "case:prop-3.11"},
    {"thm-3.12 step sets", "case:thm-3.12"},
    {"cor-3.13 characteristic pairs", "case:cor-3.13"},
    {"def-3.14 composition", "definition:compose"},
    {"thm-3.15 one-sided composition characterization", "case:thm-3.15"},
    {"thm-3.16 two-sided composition characterization", "case:thm-3.16"},
    {"prop-3.17 composition below meet", "case:prop-3.17"},
    {"prop-3.18 composition/meet chain", "case:prop-3.18"},
    {"prop-3.19 regular superset", "case:prop-3.19"},
    {"thm-3.20 regularity characterization", "case:thm-3.20"},
    {"def-4.1 prime equalities", "case:def-4.1-consistency"},
    {"def-4.2 semiprime inequalities", "covered-by:def-4.1-consistency"},
    {"prop-4.3 semiprime half", "case:prop-4.3-ifspi"},
    {"prop-4.3 prime half", "case:prop-4.3-ifpi"},
    {"lem-4.4 box image (prime)", "case:lem-4.4"},
    {"lem-4.5 diamond image (prime)", "case:lem-4.5"},
    {"thm-4.6 modal biconditional (prime)", "case:thm-4.6"},
    {"thm-4.7 prime cuts", "case:thm-4.7"},
    {"thm-4.8 prime cut converse", "case:thm-4.8"},
    {"thm-4.9 prime steps", "case:thm-4.9"},
    {"cor-4.10 prime characteristic pairs", "case:cor-4.10"},
    {"def-5.1 extension", "definition:extend"},
    {"example-5.2 extension values", "case:example-5.2-discrepancy"},
    {"prop-5.3 extension of ideals", "case:prop-5.3"},
    {"remark-5.4 right ideals need no commutativity", "case:remark-5.4-ifri"},
    {"prop-5.5 extension of prime/semiprime sets", "case:prop-5.5-ifpi"},
    {"def support", "definition:support"},
    {"prop-5.7 containment, power chain, support", "case:prop-5.7-parts-1-3"},
    {"remark-5.6 zeroth power convention", "covered-by:prop-5.7-parts-1-3"},
    {"def crisp extension", "definition:crisp_extension"},
    {"prop-5.8 crisp commutation", "case:prop-5.8-crisp"},
    {"prop-5.9 cut commutation", "case:prop-5.9-cuts"},
    {"prop-5.10 constancy", "case:prop-5.10-constant"},
    {"cor-5.10 non-maximality", "case:cor-5.10-nonmaximal"},
    {"cor-5.11 semiprime family extension", "case:cor-5.11-family"},
    {"remark-5.12 arbitrary semiprime intersections", "covered-by:cor-5.11-family"},
    {"cor-5.13 crisp semiprime family", "case:cor-5.13-crisp-family"},
    {"thm-5.13 fixed point, forward", "case:thm-5.13-fixedpoint"},
    {"thm-5.13 fixed point, converse", "case:thm-5.13-converse"},
    {"cor-5.14 prime characterization by extensions", "case:cor-5.14-prime-char"},
};

}  // namespace

std::span<const CoverageRow> coverage_table() { return kCoverage; }

}  // namespace gfz::harness
