// apnvsp command-line frontend.
//
// Exit codes: 0 ok, 1 invariant violated, 2 input error, 3 budget exhausted.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "apnvsp/apnvsp.hpp"

namespace {

using namespace apnvsp;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

// Point-set file: '#' comments, first value m, then the points.
PointSet read_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::vector<std::uint64_t> values;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) values.push_back(detail::parse_number(tok));
  }
  if (values.empty()) throw InputError("point file needs a width header");
  if (values[0] == 0 || values[0] > kMaxWidth) throw InputError("point width must be in [1, 16]");
  const auto m = static_cast<unsigned>(values[0]);
  std::vector<Mask> pts;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > full_mask(m)) throw InputError("point does not fit the width");
    pts.push_back(static_cast<Mask>(values[i]));
  }
  return PointSet(m, std::move(pts));
}

int run_analyze(const std::string& input, const std::string& json_out, bool skip_blocking,
                std::uint64_t sample_budget, std::uint64_t seed, std::uint64_t budget, bool expect_crooked,
                bool timing) {
  AnalysisOptions opt;
  opt.skip_blocking = skip_blocking;
  opt.expect_crooked = expect_crooked;
  opt.timing = timing;
  opt.blocking.sample_budget = sample_budget;
  opt.blocking.seed = seed;
  opt.blocking.node_budget = budget;
  const auto result = analyze(load_input(input), opt);
  const std::string text = result.report.dump(2) + "\n";
  if (json_out.empty()) {
    std::cout << text;
  } else {
    write_text(json_out, text);
    const auto& r = result.report;
    std::cout << "n=" << r["input"]["n"] << " m=" << r["input"]["m"] << " degree=" << r["degree"]
              << " du=" << r["differential_uniformity"] << " apn=" << r["apn"] << '\n';
    if (!r["amplitude_distribution"].is_null()) {
      std::cout << "distribution " << r["amplitude_distribution"].get<std::string>() << '\n';
    }
    if (!r["partition"].is_null() && r["partition"].contains("type")) {
      std::cout << "partition " << r["partition"]["type"].get<std::string>() << '\n';
    }
  }
  for (const auto& v : result.violations) std::cerr << "violation: " << v << '\n';
  if (!result.violations.empty()) return kViolation;
  if (result.budget_exhausted) return kBudget;
  return kOk;
}

int run_enumerate(unsigned n, bool verbose) {
  const auto entries = enumerate_admissible(n, verbose);
  std::size_t admissible = 0;
  for (const auto& e : entries) {
    if (e.admissible) ++admissible;
    if (!verbose) {
      std::cout << e.type.partition_string() << '\n';
      continue;
    }
    std::cout << e.type.partition_string() << "  " << e.type.distribution_string() << "  ";
    if (e.admissible) {
      std::cout << "not excluded\n";
    } else {
      std::cout << "rejected:";
      for (const auto& r : e.failing_rules()) std::cout << ' ' << r;
      std::cout << '\n';
    }
  }
  std::cout << "# " << admissible << " types not excluded for n=" << n << '\n';
  return kOk;
}

int run_construct(const std::string& kind, unsigned n, unsigned param, const std::vector<std::string>& refines,
                  bool list) {
  ExplicitPartition p;
  if (kind == "spread") {
    p = spread(n, param);
  } else if (kind == "bu") {
    p = bu_partition(n, param);
  } else if (kind == "kurz") {
    std::cout << "kurz: existence known, construction not implemented\n";
    return kInputError;
  } else {
    throw InputError("--kind must be spread or bu");
  }
  for (const auto& r : refines) {
    const auto colon = r.find(':');
    if (colon == std::string::npos) throw InputError("--refine expects idx:t");
    const auto idx = detail::parse_number(r.substr(0, colon));
    const auto t = detail::parse_number(r.substr(colon + 1));
    p = refine_member(p, static_cast<std::size_t>(idx), static_cast<unsigned>(t));
  }
  if (list) {
    for (std::size_t i = 0; i < p.members.size(); ++i) {
      std::cout << i << ": dim " << p.members[i].dim() << " basis";
      for (Mask b : p.members[i].basis()) std::cout << ' ' << b;
      std::cout << '\n';
    }
  }
  const bool ok = p.verify();
  std::cout << "type " << p.type().to_string() << '\n';
  std::cout << "members " << p.members.size() << '\n';
  std::cout << "verify " << (ok ? "pass" : "FAIL") << '\n';
  return ok ? kOk : kViolation;
}

int run_ea(const std::string& input, std::uint64_t seed, const std::string& out_path) {
  const auto in = load_input(input);
  const Vbf& f = in.f;
  const auto triple = random_ea_triple(f.n(), f.m(), seed);
  const Vbf g = ea_transform(f, triple);
  std::ostringstream os;
  os << "# ea image of " << in.source << " with seed " << seed << '\n';
  int code = kOk;
  try {
    const bool dist = amplitude_distribution(f) == amplitude_distribution(g);
    os << "# amplitude distribution preserved: " << (dist ? "yes" : "no") << '\n';
    const bool nb = verify_nonbent_equivariance(f, g, triple.a1);
    os << "# non-bent set equivariance: " << (nb ? "yes" : "no") << '\n';
    if (!dist || !nb) code = kViolation;
  } catch (const NotPlateaued&) {
    os << "# spectral checks skipped: not plateaued\n";
  }
  if (f.n() == f.m()) {
    try {
      const bool part = verify_partition_equivariance(f, g, triple.a1, triple.a2, triple.a3);
      os << "# partition equivariance: " << (part ? "yes" : "no") << '\n';
      if (!part) code = kViolation;
    } catch (const NotCrooked&) {
      os << "# partition checks skipped: not crooked\n";
    }
  }
  os << serialize_lut(g);
  if (out_path.empty()) {
    std::cout << os.str();
  } else {
    write_text(out_path, os.str());
  }
  return code;
}

int run_ccz(const std::string& input, const std::string& points, std::uint64_t budget) {
  if (input.empty() == points.empty()) throw InputError("ccz-check takes either a function or --points");
  CczOptions opt;
  opt.budget = budget;
  const auto r = points.empty() ? ccz_necessary_report(load_input(input).f, opt)
                                : ccz_necessary_report(read_points(points), opt);
  std::cout << to_json(r).dump(2) << '\n';
  if (r.certified_not_permutation) {
    std::cerr << "certified: not CCZ-equivalent to a permutation\n";
  }
  return r.pair_status == PairStatus::budget_exhausted && !r.certified_not_permutation ? kBudget : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analysis of vectorial Boolean functions, their vector space partitions and non-bent sets"};
  app.require_subcommand(1);

  std::string input, json_out, out_path, points, kind;
  std::uint64_t sample_budget = 100'000, seed = 1, budget = kDefaultNodeBudget;
  unsigned n = 0, param = 0;
  bool skip_blocking = false, expect_crooked = false, timing = false, verbose = false, list = false;
  std::vector<std::string> refines;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for a LUT file or catalog:<name>:<n>");
  analyze_cmd->add_option("input", input, "LUT path or catalog spec")->required();
  analyze_cmd->add_option("--json", json_out, "Write the JSON report here instead of stdout");
  analyze_cmd->add_flag("--skip-blocking", skip_blocking, "Skip the non-bent set analysis");
  analyze_cmd->add_option("--sample-budget", sample_budget, "Subspaces sampled when a scan is too large");
  analyze_cmd->add_option("--seed", seed, "Seed for sampled checks");
  analyze_cmd->add_option("--budget", budget, "Node budget for subspace searches");
  analyze_cmd->add_flag("--expect-crooked", expect_crooked, "Treat a non-crooked input as a violation");
  analyze_cmd->add_flag("--timing", timing, "Include wall-clock timings");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Admissible amplitude distributions for even n");
  enumerate_cmd->add_option("--n", n, "Dimension")->required();
  enumerate_cmd->add_flag("--verbose", verbose, "Also list rejected types with the rules that kill them");

  auto* construct_cmd = app.add_subcommand("construct", "Build and verify an explicit partition");
  construct_cmd->add_option("--kind", kind, "spread or bu (kurz is not implemented)")->required();
  construct_cmd->add_option("--n", n, "Dimension")->required();
  construct_cmd->add_option("--param", param, "t for spread, s for bu")->required();
  construct_cmd->add_option("--refine", refines, "idx:t, replace member idx by a t-spread of it");
  construct_cmd->add_flag("--list", list, "Print every member");

  auto* ea_cmd = app.add_subcommand("ea", "Seeded EA transform plus equivariance checks");
  ea_cmd->add_option("input", input, "LUT path or catalog spec")->required();
  ea_cmd->add_option("--seed", seed, "Seed for the affine triple");
  ea_cmd->add_option("--out", out_path, "Write the LUT here instead of stdout");

  auto* ccz_cmd = app.add_subcommand("ccz-check", "Necessary conditions for CCZ-equivalence to a permutation");
  ccz_cmd->add_option("input", input, "LUT path or catalog spec");
  ccz_cmd->add_option("--points", points, "Point-set file instead of a function");
  ccz_cmd->add_option("--budget", budget, "Node budget for the complementary pair search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*analyze_cmd) {
      return run_analyze(input, json_out, skip_blocking, sample_budget, seed, budget, expect_crooked, timing);
    }
    if (*enumerate_cmd) return run_enumerate(n, verbose);
    if (*construct_cmd) return run_construct(kind, n, param, refines, list);
    if (*ea_cmd) return run_ea(input, seed, out_path);
    if (*ccz_cmd) return run_ccz(input, points, budget);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kBudget;
  } catch (const NotCrooked& e) {
    std::cerr << "not crooked: " << e.what() << '\n';
    return kViolation;
  } catch (const NotPlateaued& e) {
    std::cerr << "not plateaued: " << e.what() << '\n';
    return kViolation;
  } catch (const StructureViolation& e) {
    std::cerr << "structure violation: " << e.what() << '\n';
    return kViolation;
  }
  return kOk;
}
