#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gfz/extension.hpp"
#include "gfz/harness.hpp"
#include "gfz/io.hpp"

namespace {

using namespace gfz;

// Exit codes: 0 = all checks pass, 1 = a check failed (witness printed),
// 2 = usage / parse / argument errors.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Parse, "cannot write '" + path + "'");
  out << content;
}

GsgPtr load_gsg(const std::string& path) { return io::parse_gsg(read_file(path)); }

struct ValidateArgs {
  std::string path;
  bool machine = false;
};

int cmd_validate(const ValidateArgs& args) {
  GsgPtr g;
  try {
    g = load_gsg(args.path);
  } catch (const Error& e) {
    switch (e.code()) {
      case Errc::MissingTableEntry:
      case Errc::AssociativityViolation:
      case Errc::InvalidZero:
        std::cout << (args.machine ? "result=invalid detail=" : "invalid: ") << e.what() << "\n";
        return kCheckFailed;
      default:
        throw;
    }
  }
  bool comm = is_commutative(*g);
  RegularityResult reg = is_regular(*g);
  if (args.machine) {
    std::cout << "result=valid carrier=" << g->size() << " gamma=" << g->gamma_size()
              << " commutative=" << (comm ? "yes" : "no")
              << " regular=" << (reg.regular ? "yes" : "no")
              << " zero=" << (g->has_zero() ? g->id(g->zero()) : "-") << "\n";
  } else {
    std::cout << "valid: |S| = " << g->size() << ", |G| = " << g->gamma_size() << ", "
              << (comm ? "commutative" : "non-commutative") << ", "
              << (reg.regular ? "regular" : "non-regular");
    if (!reg.regular) std::cout << " (no witness for '" << g->id(reg.failing) << "')";
    if (g->has_zero()) std::cout << ", zero = " << g->id(g->zero());
    std::cout << "\n";
  }
  return kOk;
}

struct CheckArgs {
  std::string gsg_path;
  std::string what;
  std::string set_csv;
  std::string ifs_path;
  std::string side = "two-sided";
  std::string criterion = "pairs";
  bool machine = false;
};

int report_check(bool ok, const std::string& witness, bool machine) {
  if (machine)
    std::cout << "result=" << (ok ? "pass" : "fail")
              << (witness.empty() ? "" : " witness=" + witness) << "\n";
  else
    std::cout << (ok ? "pass" : "fail: " + witness) << "\n";
  return ok ? kOk : kCheckFailed;
}

int cmd_check(const CheckArgs& args) {
  GsgPtr g = load_gsg(args.gsg_path);

  Side side = Side::TwoSided;
  if (args.side == "left") side = Side::Left;
  else if (args.side == "right") side = Side::Right;
  else if (args.side != "two-sided" && args.side != "two")
    throw Error(Errc::InvalidParameters, "bad --side '" + args.side + "'");

  if (args.what == "ideal" || args.what == "prime" || args.what == "semiprime") {
    if (args.set_csv.empty()) throw Error(Errc::EmptySubset, "--set is required here");
    CrispSubset target = io::parse_subset(args.set_csv, g->carrier());
    try {
      if (args.what == "ideal")
        return report_check(is_ideal(*g, target, side), "closure fails", args.machine);
      PrimeCriterion crit = PrimeCriterion::Pairs;
      if (args.criterion == "sandwich") crit = PrimeCriterion::Sandwich;
      else if (args.criterion == "subsets") crit = PrimeCriterion::Subsets;
      else if (args.criterion != "pairs")
        throw Error(Errc::InvalidParameters, "bad --criterion '" + args.criterion + "'");
      bool ok = args.what == "prime" ? is_prime_ideal(*g, target, crit)
                                     : is_semiprime_ideal(*g, target);
      std::string note;
      if (ok && target.count() == g->size()) note = "degenerate: the whole carrier";
      if (args.machine) {
        std::cout << "result=" << (ok ? "pass" : "fail")
                  << (note.empty() ? "" : " note=" + note) << "\n";
      } else {
        std::cout << (ok ? "pass" : "fail");
        if (!note.empty()) std::cout << " (" << note << ")";
        std::cout << "\n";
      }
      return ok ? kOk : kCheckFailed;
    } catch (const Error& e) {
      if (e.code() == Errc::NotAnIdeal) return report_check(false, e.what(), args.machine);
      throw;
    }
  }

  if (args.ifs_path.empty()) throw Error(Errc::MissingValue, "an .ifs target is required here");
  Ifs a = io::parse_ifs(read_file(args.ifs_path), g->carrier());
  try {
    IdealVerdict v;
    if (args.what == "ifli") v = is_ifli(*g, a);
    else if (args.what == "ifri") v = is_ifri(*g, a);
    else if (args.what == "ifi") v = is_ifi(*g, a);
    else if (args.what == "ifpi") v = is_ifpi(*g, a);
    else if (args.what == "ifspi") v = is_ifspi(*g, a);
    else throw Error(Errc::InvalidParameters, "unknown check '" + args.what + "'");
    std::string witness;
    if (!v.holds) {
      witness = std::string(v.condition) + " at (" + (v.x >= 0 ? g->id(v.x) : "-") + "," +
                (v.g >= 0 ? g->gamma_id(v.g) : "-") + "," + (v.y >= 0 ? g->id(v.y) : "-") + ")";
    }
    return report_check(v.holds, witness, args.machine);
  } catch (const Error& e) {
    switch (e.code()) {
      case Errc::EmptyIfs:
      case Errc::NotAnIfi:
        return report_check(false, e.what(), args.machine);
      default:
        throw;
    }
  }
}

struct ComposeArgs {
  std::string gsg_path, a_path, b_path, out_path;
  bool explain = false;
};

int cmd_compose(const ComposeArgs& args) {
  GsgPtr g = load_gsg(args.gsg_path);
  Ifs a = io::parse_ifs(read_file(args.a_path), g->carrier());
  Ifs b = io::parse_ifs(read_file(args.b_path), g->carrier());
  Ifs c = compose(*g, a, b);
  std::string text = io::print_ifs(c);
  if (args.out_path.empty()) std::cout << text;
  else write_file(args.out_path, text);
  if (args.explain) {
    const auto& fact = g->factorizations();
    for (int x = 0; x < g->size(); ++x) {
      std::cout << "# " << g->id(x) << ": ";
      bool found = false;
      for (const auto& [u, ga, v] : fact[x]) {
        if (degree_min(a.mu[u], b.mu[v]) == c.mu[x]) {
          std::cout << "mu via " << g->id(u) << " " << g->gamma_id(ga) << " " << g->id(v);
          found = true;
          break;
        }
      }
      if (!found) std::cout << (fact[x].empty() ? "no factorization" : "mu is the empty sup");
      std::cout << "\n";
    }
  }
  return kOk;
}

struct ExtendArgs {
  std::string gsg_path, a_path, by, out_path;
};

int cmd_extend(const ExtendArgs& args) {
  GsgPtr g = load_gsg(args.gsg_path);
  Ifs a = io::parse_ifs(read_file(args.a_path), g->carrier());
  Ifs e = extend(*g, g->element(args.by), a);
  std::string text = io::print_ifs(e);
  if (args.out_path.empty()) std::cout << text;
  else write_file(args.out_path, text);
  return kOk;
}

struct CutArgs {
  std::string a_path, t, kind = "upper";
};

int cmd_cut(const CutArgs& args) {
  Ifs a = io::parse_ifs(read_file(args.a_path));
  Degree t = Degree::parse(args.t);
  CrispSubset cut;
  if (args.kind == "upper") cut = upper_cut(a, t);
  else if (args.kind == "lower") cut = lower_cut(a, t);
  else throw Error(Errc::InvalidParameters, "bad --kind '" + args.kind + "'");
  std::cout << cut.str() << "\n";
  return kOk;
}

struct EnumArgs {
  std::string gsg_path;
  std::string side = "two-sided";
};

int cmd_enumerate(const EnumArgs& args) {
  GsgPtr g = load_gsg(args.gsg_path);
  Side side = Side::TwoSided;
  if (args.side == "left") side = Side::Left;
  else if (args.side == "right") side = Side::Right;
  else if (args.side != "two-sided" && args.side != "two")
    throw Error(Errc::InvalidParameters, "bad --side '" + args.side + "'");
  for (const CrispSubset& ideal : enumerate_ideals(*g, side)) std::cout << ideal.str() << "\n";
  return kOk;
}

struct VerifyArgs {
  std::string cases = "all";
  int budget = 100;
  std::uint64_t seed = 7;
  std::string out_dir;
  bool machine = false;
};

std::string default_results_dir() {
  if (const char* env = std::getenv("GFZ_RESULTS_DIR")) return env;
  return "results";
}

int cmd_verify(const VerifyArgs& args) {
  harness::RunOptions opts;
  opts.budget = args.budget;
  opts.seed = args.seed;
  opts.results_dir = args.out_dir.empty() ? default_results_dir() : args.out_dir;

  std::vector<harness::CaseReport> reports;
  if (args.cases == "all") {
    reports = harness::run_all(opts);
  } else {
    std::vector<std::string> ids;
    std::stringstream ss(args.cases);
    std::string id;
    while (std::getline(ss, id, ',')) {
      if (!id.empty()) ids.push_back(id);
    }
    reports = harness::run_selected(ids, opts);
  }

  std::string records = harness::machine_records(reports);
  std::filesystem::create_directories(opts.results_dir);
  write_file((std::filesystem::path(opts.results_dir) / "report.txt").string(), records);

  if (args.machine) {
    std::cout << records;
  } else {
    for (const auto& r : reports) {
      std::cout << r.case_id << " | " << harness::verdict_token(r.verdict) << " | instances "
                << r.instances << " | skipped " << r.skipped;
      if (!r.note.empty()) std::cout << " | " << r.note;
      std::cout << "\n";
    }
    int fails = 0, probes = 0;
    for (const auto& r : reports) {
      fails += r.verdict == harness::Verdict::Counterexample;
      probes += r.verdict == harness::Verdict::ExpectedFail;
    }
    std::cout << reports.size() << " cases, " << fails << " counterexamples, " << probes
              << " documented-defect probes confirmed; records in " << opts.results_dir
              << "/report.txt\n";
  }
  return harness::any_theorem_failure(reports) ? kCheckFailed : kOk;
}

struct GenArgs {
  std::string what;  // "catalog" or "modular"
  int n = 4;
  std::string gamma_csv;
  std::string out;
};

int cmd_gen(const GenArgs& args) {
  if (args.what == "catalog") {
    std::filesystem::path dir = args.out.empty() ? "catalog" : args.out;
    std::filesystem::create_directories(dir);
    for (const CatalogEntry& e : catalog())
      write_file((dir / (e.name + ".gsg")).string(), io::print_gsg(*e.instance));
    std::cout << "wrote " << catalog().size() << " instances to " << dir.string() << "\n";
    return kOk;
  }
  if (args.what == "modular") {
    std::vector<int> gamma;
    std::stringstream ss(args.gamma_csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) gamma.push_back(std::stoi(tok));
    GsgPtr g = make_modular(args.n, gamma);
    std::string text = io::print_gsg(*g);
    if (args.out.empty()) std::cout << text;
    else write_file(args.out, text);
    return kOk;
  }
  throw Error(Errc::InvalidParameters, "gen expects 'catalog' or 'modular'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Gamma-semigroup and intuitionistic fuzzy ideal toolkit"};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--machine", machine, "line-record output");

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand("validate", "validate a .gsg file and describe it");
  validate->add_option("file", validate_args.path)->required();

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "run a predicate against a subset or IFS");
  check->add_option("file", check_args.gsg_path)->required();
  check->add_option("what", check_args.what)->required()
      ->check(CLI::IsMember({"ideal", "prime", "semiprime", "ifli", "ifri", "ifi", "ifpi",
                             "ifspi"}));
  check->add_option("target", check_args.ifs_path, "path of an .ifs target");
  check->add_option("--set", check_args.set_csv, "comma-separated crisp subset");
  check->add_option("--side", check_args.side, "left | right | two-sided");
  check->add_option("--criterion", check_args.criterion, "pairs | sandwich | subsets");

  ComposeArgs compose_args;
  auto* compose_cmd = app.add_subcommand("compose", "sup-min composition of two IFS files");
  compose_cmd->add_option("file", compose_args.gsg_path)->required();
  compose_cmd->add_option("A", compose_args.a_path)->required();
  compose_cmd->add_option("B", compose_args.b_path)->required();
  compose_cmd->add_option("--out", compose_args.out_path);
  compose_cmd->add_flag("--explain", compose_args.explain, "print achieving factorizations");

  ExtendArgs extend_args;
  auto* extend_cmd = app.add_subcommand("extend", "extension of an IFS by a carrier element");
  extend_cmd->add_option("file", extend_args.gsg_path)->required();
  extend_cmd->add_option("A", extend_args.a_path)->required();
  extend_cmd->add_option("--by", extend_args.by)->required();
  extend_cmd->add_option("--out", extend_args.out_path);

  CutArgs cut_args;
  auto* cut_cmd = app.add_subcommand("cut", "upper or lower level cut of an IFS file");
  cut_cmd->add_option("A", cut_args.a_path)->required();
  cut_cmd->add_option("--t", cut_args.t)->required();
  cut_cmd->add_option("--kind", cut_args.kind, "upper | lower");

  EnumArgs enum_args;
  auto* enum_cmd = app.add_subcommand("enumerate-ideals", "list all ideals of a side");
  enum_cmd->add_option("file", enum_args.gsg_path)->required();
  enum_cmd->add_option("--side", enum_args.side, "left | right | two-sided");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run registered statement checks");
  verify_cmd->add_option("--cases", verify_args.cases, "all or a comma-separated id list");
  verify_cmd->add_option("--budget", verify_args.budget, "instances per case");
  verify_cmd->add_option("--seed", verify_args.seed, "generator seed");
  verify_cmd->add_option("--out", verify_args.out_dir, "results directory");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "emit catalog or modular instances");
  gen_cmd->add_option("what", gen_args.what)->required();
  gen_cmd->add_option("--n", gen_args.n, "modulus for modular instances");
  gen_cmd->add_option("--gamma", gen_args.gamma_csv, "comma-separated gamma values");
  gen_cmd->add_option("--out", gen_args.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  validate_args.machine = machine;
  check_args.machine = machine;
  verify_args.machine = machine;

  try {
    if (validate->parsed()) return cmd_validate(validate_args);
    if (check->parsed()) return cmd_check(check_args);
    if (compose_cmd->parsed()) return cmd_compose(compose_args);
    if (extend_cmd->parsed()) return cmd_extend(extend_args);
    if (cut_cmd->parsed()) return cmd_cut(cut_args);
    if (enum_cmd->parsed()) return cmd_enumerate(enum_args);
    if (verify_cmd->parsed()) return cmd_verify(verify_args);
    if (gen_cmd->parsed()) return cmd_gen(gen_args);
  } catch (const gfz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
