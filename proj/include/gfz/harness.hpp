#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gfz/generate.hpp"

namespace gfz::harness {

enum class Verdict {
  AllPass,
  Counterexample,
  HypothesisNeverMet,
  ExpectedFail,     // documented-defect probe that reported its discrepancy
  UnexpectedPass,   // probe that failed to reproduce its discrepancy
};

const char* verdict_token(Verdict v);

struct Artifact {
  std::string name;     // e.g. "G.gsg", "A.ifs", "witness.txt"
  std::string content;
};

struct CaseOutcome {
  enum Kind { Pass, Skip, Fail } kind = Pass;
  std::string note;
  std::vector<Artifact> artifacts;
};

// One registered statement check. attempt() runs a single generated
// instance; probes are statements whose printed form is refuted and are
// expected to report the discrepancy (they never count as theorem failures).
struct TheoremCase {
  std::string id;
  std::string summary;
  bool probe = false;
  std::function<CaseOutcome(gen::Rng&)> attempt;
};

const std::vector<TheoremCase>& registry();
const TheoremCase& find_case(std::string_view id);  // UnknownCase

struct CaseReport {
  std::string case_id;
  Verdict verdict = Verdict::HypothesisNeverMet;
  int instances = 0;
  int skipped = 0;
  std::uint64_t seed = 0;
  std::string witness_file = "-";
  std::string note;
  double elapsed_sec = 0.0;
};

struct RunOptions {
  int budget = 100;
  std::uint64_t seed = 7;
  std::string results_dir;  // artifacts are written here when nonempty
};

CaseReport run_case(const TheoremCase& c, const RunOptions& opts);
std::vector<CaseReport> run_selected(std::span<const std::string> ids, const RunOptions& opts);
std::vector<CaseReport> run_all(const RunOptions& opts);

// Line-delimited key=value records, one per case, byte-stable across runs
// with the same options (no timing fields).
std::string machine_records(std::span<const CaseReport> reports);

// True when a non-probe case produced a counterexample.
bool any_theorem_failure(std::span<const CaseReport> reports);

// Statement inventory backing the registry-completeness test. Dispositions
// are "case:<id>" for checked statements, "covered-by:<id>" for remarks
// folded into a neighbouring case, and "definition:<operation>" for
// definitions realized directly by library operations.
struct CoverageRow {
  const char* statement;
  const char* disposition;
};

std::span<const CoverageRow> coverage_table();

}  // namespace gfz::harness
