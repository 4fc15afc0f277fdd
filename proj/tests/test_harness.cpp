#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "gfz/extension.hpp"
#include "gfz/harness.hpp"
#include "gfz/io.hpp"

using namespace gfz;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("registry ids are unique and lookups work") {
  std::set<std::string> ids;
  for (const harness::TheoremCase& c : harness::registry()) CHECK(ids.insert(c.id).second);
  CHECK(harness::find_case("thm-2.1").id == "thm-2.1");
  CHECK_THROWS_AS(harness::find_case("thm-99"), Error);
}

TEST_CASE("coverage table and registry agree") {
  std::set<std::string> registered;
  for (const harness::TheoremCase& c : harness::registry()) registered.insert(c.id);

  std::set<std::string> mentioned;
  for (const harness::CoverageRow& row : harness::coverage_table()) {
    std::string d = row.disposition;
    if (d.rfind("case:", 0) == 0) {
      std::string id = d.substr(5);
      CHECK_MESSAGE(registered.count(id) == 1, "unregistered case ", id);
      mentioned.insert(id);
    } else if (d.rfind("covered-by:", 0) == 0) {
      CHECK(registered.count(d.substr(11)) == 1);
    } else {
      CHECK(d.rfind("definition:", 0) == 0);
    }
  }
  for (const std::string& id : registered)
    CHECK_MESSAGE(mentioned.count(id) == 1, "case ", id, " missing from the coverage table");
}

TEST_CASE("identical options give identical reports") {
  harness::RunOptions opts;
  opts.budget = 30;
  opts.seed = 11;
  auto a = harness::run_all(opts);
  auto b = harness::run_all(opts);
  CHECK(harness::machine_records(a) == harness::machine_records(b));
}

TEST_CASE("budget zero reports hypothesis-never-met everywhere") {
  harness::RunOptions opts;
  opts.budget = 0;
  for (const harness::CaseReport& r : harness::run_all(opts)) {
    CHECK(r.verdict == harness::Verdict::HypothesisNeverMet);
    CHECK(r.instances == 0);
  }
}

TEST_CASE("default run has no theorem failures and confirmed probes") {
  harness::RunOptions opts;
  opts.budget = 40;
  opts.seed = 7;
  auto reports = harness::run_all(opts);
  CHECK_FALSE(harness::any_theorem_failure(reports));
  int probes = 0;
  for (const harness::CaseReport& r : reports)
    if (r.verdict == harness::Verdict::ExpectedFail) ++probes;
  CHECK(probes == 4);
}

TEST_CASE("probe artifacts round-trip and still refute") {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "gfz-harness-roundtrip";
  std::filesystem::remove_all(dir);

  harness::RunOptions opts;
  opts.budget = 3;
  opts.seed = 7;
  opts.results_dir = dir.string();
  harness::CaseReport r = harness::run_case(harness::find_case("example-3.4-ifi"), opts);
  REQUIRE(r.verdict == harness::Verdict::ExpectedFail);
  CHECK(r.witness_file == "example-3.4-ifi.witness.txt");

  GsgPtr g = io::parse_gsg(slurp(dir / "example-3.4-ifi.G.gsg"));
  Ifs a = io::parse_ifs(slurp(dir / "example-3.4-ifi.A.ifs"), g->carrier());
  IdealVerdict v = ifi_conditions(*g, a);
  REQUIRE_FALSE(v.holds);
  CHECK(g->id(v.x) == "n1");
  CHECK(g->gamma_id(v.g) == "e2");
  CHECK(g->id(v.y) == "n2");

  harness::CaseReport c = harness::run_case(harness::find_case("thm-5.13-converse"), opts);
  REQUIRE(c.verdict == harness::Verdict::ExpectedFail);
  GsgPtr g2 = io::parse_gsg(slurp(dir / "thm-5.13-converse.G.gsg"));
  Ifs a2 = io::parse_ifs(slurp(dir / "thm-5.13-converse.A.ifs"), g2->carrier());
  CHECK(fixed_point_converse(*g2, a2).outcome == CheckOutcome::Fail);

  std::filesystem::remove_all(dir);
}

TEST_CASE("catalog spans the advertised coverage axes") {
  bool commutative = false, non_commutative = false, regular = false, non_regular = false;
  bool with_zero = false, without_zero = false;
  for (const CatalogEntry& e : catalog()) {
    CHECK(e.instance->size() <= 6);
    (is_commutative(*e.instance) ? commutative : non_commutative) = true;
    (is_regular(*e.instance).regular ? regular : non_regular) = true;
    (e.instance->has_zero() ? with_zero : without_zero) = true;
  }
  CHECK(commutative);
  CHECK(non_commutative);
  CHECK(regular);
  CHECK(non_regular);
  CHECK(with_zero);
  CHECK(without_zero);
  CHECK_FALSE(is_regular(*catalog_instance("mod4-geven")).regular);
  CHECK_THROWS_AS(catalog_instance("nope"), Error);
}

TEST_CASE("instance generators are deterministic and validated") {
  gen::GsgStreamSpec spec;
  spec.family = gen::GsgFamily::Modular;
  auto a = gen::generate_gsemigroups(spec, 42, 12);
  auto b = gen::generate_gsemigroups(spec, 42, 12);
  REQUIRE(a.size() == b.size());
  REQUIRE_FALSE(a.empty());
  for (size_t i = 0; i < a.size(); ++i) CHECK(io::print_gsg(*a[i]) == io::print_gsg(*b[i]));

  spec.family = gen::GsgFamily::Mutation;
  auto mutants = gen::generate_gsemigroups(spec, 42, 40);
  CHECK_FALSE(mutants.empty());  // rejection sampling still finds valid tables

  spec.family = gen::GsgFamily::Catalog;
  auto replay = gen::generate_gsemigroups(spec, 1, 13);
  CHECK(replay.size() == catalog().size());

  spec.max_s = 13;
  CHECK_THROWS_AS(gen::generate_gsemigroups(spec, 1, 1), Error);
}

TEST_CASE("constrained IFS draws satisfy their predicate") {
  gen::Rng rng(321);
  GsgPtr g = catalog_instance("mod6-geven");
  int produced = 0;
  for (int i = 0; i < 30; ++i) {
    auto ifi = gen::draw_ifs(rng, *g, gen::IfsConstraint::Ifi);
    if (ifi) {
      ++produced;
      CHECK(is_ifi(*g, *ifi).holds);
    }
    auto pi = gen::draw_ifs(rng, *g, gen::IfsConstraint::Ifpi);
    if (pi) CHECK(is_ifpi(*g, *pi).holds);
    auto spi = gen::draw_ifs(rng, *g, gen::IfsConstraint::Ifspi);
    if (spi) CHECK(is_ifspi(*g, *spi).holds);
  }
  CHECK(produced > 0);
}

TEST_CASE("machine records carry the contract fields") {
  harness::RunOptions opts;
  opts.budget = 5;
  opts.seed = 3;
  harness::CaseReport r = harness::run_case(harness::find_case("thm-2.1"), opts);
  std::string line = harness::machine_records(std::vector<harness::CaseReport>{r});
  CHECK(line == "case=thm-2.1 verdict=all-pass instances=5 skipped=0 seed=3 witness=-\n");
}
