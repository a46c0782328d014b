#pragma once

// Full analysis of one function, rendered as a versioned JSON document.

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "apnvsp/admissibility.hpp"
#include "apnvsp/blocking.hpp"
#include "apnvsp/errors.hpp"
#include "apnvsp/io.hpp"
#include "apnvsp/partition.hpp"
#include "apnvsp/vbf.hpp"

namespace apnvsp {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct LoadedInput {
  std::string source;
  std::optional<std::uint32_t> modulus;
  std::optional<bool> apn_condition;  // catalog gcd condition
  Vbf f;
};

/// "catalog:<name>:<n>" or a path to a LUT file.
inline LoadedInput load_input(const std::string& spec) {
  if (spec.rfind("catalog:", 0) == 0) {
    auto c = parse_catalog_spec(spec);
    return {spec, c.modulus, c.apn_condition, std::move(c.f)};
  }
  return {spec, std::nullopt, std::nullopt, read_lut_file(spec)};
}

inline Json to_json(const Subspace& s) {
  Json j = Json::object();
  j["dim"] = s.dim();
  j["basis"] = std::vector<Mask>(s.basis().begin(), s.basis().end());
  return j;
}

inline Json to_json(const RuleVerdict& v) {
  Json j = Json::object();
  j["rule"] = v.rule;
  j["pass"] = v.pass;
  j["applicable"] = v.applicable;
  j["detail"] = v.detail;
  Json vals = Json::object();
  for (const auto& [k, x] : v.values) vals[k] = x;
  j["values"] = vals;
  return j;
}

inline Json to_json(const BlockingBounds& b) {
  Json j = Json::object();
  j["bose_burton"] = b.bose_burton;
  j["govaerts_storme"] = b.govaerts_storme ? Json(*b.govaerts_storme) : Json(nullptr);
  j["apn_bent_bound"] = b.apn_bent_bound ? Json(*b.apn_bent_bound) : Json(nullptr);
  j["ccz_size_threshold"] = b.ccz_size_threshold ? Json(*b.ccz_size_threshold) : Json(nullptr);
  return j;
}

inline Json pair_json(const std::optional<std::pair<Subspace, Subspace>>& pair) {
  if (!pair) return nullptr;
  return Json::array({to_json(pair->first), to_json(pair->second)});
}

inline Json to_json(const BlockingReport& r) {
  Json j = Json::object();
  j["n_size"] = r.n_size;
  j["mod4"] = r.mod4;
  j["scan_dim"] = r.scan_dim;
  Json odd = Json::object();
  odd["ok"] = r.odd.ok;
  odd["sampled"] = r.odd.sampled;
  odd["scanned"] = r.odd.scanned;
  odd["seed"] = r.odd.sampled ? Json(r.odd.seed) : Json(nullptr);
  odd["counterexample"] = r.odd.counterexample ? to_json(*r.odd.counterexample) : Json(nullptr);
  j["odd_intersection"] = odd;
  j["is_blocking"] = r.is_blocking;
  if (r.minimality) {
    Json mj = Json::object();
    mj["minimal"] = r.minimality->minimal;
    mj["removable"] = r.minimality->removable ? Json(*r.minimality->removable) : Json(nullptr);
    j["minimality"] = mj;
  } else {
    j["minimality"] = nullptr;
  }
  j["max_inner_dim"] = r.max_inner.dim();
  j["max_inner"] = to_json(r.max_inner);
  j["is_trivial"] = r.is_trivial;
  j["threefold_ok"] = r.threefold_ok ? Json(*r.threefold_ok) : Json(nullptr);
  j["pair_status"] = to_string(r.pair_status);
  j["pair"] = pair_json(r.pair);
  j["bounds"] = to_json(r.bounds);
  return j;
}

inline Json to_json(const CczReport& r) {
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  j["n"] = r.n;
  j["n_size"] = r.n_size;
  j["size_threshold"] = r.size_threshold;
  j["size_ok"] = r.size_ok;
  j["threefold_ok"] = r.threefold_ok ? Json(*r.threefold_ok) : Json(nullptr);
  j["pair_status"] = to_string(r.pair_status);
  j["pair"] = pair_json(r.pair);
  j["certified_not_permutation"] = r.certified_not_permutation;
  j["reasons"] = r.reasons;
  return j;
}

struct AnalysisOptions {
  bool skip_blocking = false;
  bool expect_crooked = false;
  bool timing = false;  // wall-clock fields make the report non-deterministic, so they are opt-in
  BlockingOptions blocking;
};

struct AnalysisResult {
  Json report;
  std::vector<std::string> violations;
  bool budget_exhausted = false;
};

inline AnalysisResult analyze(const LoadedInput& in, const AnalysisOptions& opt = {}) {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  Json timing = Json::object();
  auto lap = [&](const char* key, Clock::time_point since) {
    timing[key] = std::chrono::duration<double, std::milli>(Clock::now() - since).count();
  };

  const Vbf& f = in.f;
  AnalysisResult out;
  auto& violations = out.violations;
  Json& j = out.report;
  j["schema"] = kSchemaVersion;
  Json input = Json::object();
  input["source"] = in.source;
  input["n"] = f.n();
  input["m"] = f.m();
  input["modulus"] = in.modulus ? Json(*in.modulus) : Json(nullptr);
  if (in.apn_condition) input["gcd_condition"] = *in.apn_condition;
  j["input"] = input;

  auto t = Clock::now();
  const unsigned degree = algebraic_degree(f);
  const auto du = differential_uniformity(f);
  const bool apn = du == 2;
  j["degree"] = degree;
  j["differential_uniformity"] = du;
  j["apn"] = apn;
  lap("differential_ms", t);

  t = Clock::now();
  bool plateaued = true;
  std::int32_t linearity = 0;
  std::vector<ComponentProfile> profiles(f.codomain_size());
  for (Mask b = 1; b < f.codomain_size(); ++b) {
    profiles[b] = component_profile(f, b);
    plateaued = plateaued && profiles[b].plateaued;
    linearity = std::max(linearity, profiles[b].amplitude);
  }
  j["plateaued"] = plateaued;
  j["linearity"] = linearity;
  std::optional<AmplitudeDistribution> dist;
  if (plateaued) dist = amplitude_distribution(f);
  j["amplitude_distribution"] = dist ? Json(dist->to_string()) : Json(nullptr);
  lap("walsh_ms", t);

  const bool square = f.n() == f.m();
  if (square && plateaued) {
    const bool moment = fourth_moment_check(f);
    j["fourth_moment_ok"] = moment;
    if (moment != apn) violations.push_back("fourth-moment identity disagrees with the DDT");
  } else {
    j["fourth_moment_ok"] = nullptr;
  }

  // Partition, when F is crooked.
  t = Clock::now();
  Json part = nullptr;
  if (square && f.n() >= 2) {
    try {
      const auto p = build_partition(f);
      part = Json::object();
      part["crooked"] = true;
      part["type"] = partition_type(p).to_string();
      part["members"] = p.members.size();
      const bool cover = verify_partition(p);
      part["verified"] = cover;
      if (!cover) violations.push_back("derived subspaces do not partition F_2^n");
      if (plateaued) {
        const bool dims = verify_dim_amplitude(f, p);
        part["dim_matches_exponent"] = dims;
        if (!dims) violations.push_back("dim V_b differs from the amplitude exponent of F_b");
      }
    } catch (const NotCrooked& e) {
      part = Json::object();
      part["crooked"] = false;
      part["reason"] = e.what();
      if (opt.expect_crooked) violations.push_back(std::string("not crooked: ") + e.what());
      if (apn && degree == 2) violations.push_back("quadratic APN function is not crooked");
    } catch (const StructureViolation& e) {
      part = Json::object();
      part["crooked"] = true;
      part["structure_violation"] = e.what();
      violations.push_back(std::string("partition structure: ") + e.what());
    }
  } else if (opt.expect_crooked) {
    violations.push_back("crookedness needs n = m");
  }
  j["partition"] = part;
  lap("partition_ms", t);

  // Admissibility rules on the amplitude distribution.
  Json rules = nullptr;
  const bool even_type = dist && square && f.n() % 2 == 0 && f.n() >= 4 && f.n() <= 16 &&
                         std::all_of(dist->counts.begin(), dist->counts.end(),
                                     [](const auto& kv) { return kv.first % 2 == 0; });
  if (even_type && apn && degree == 2) {
    std::map<unsigned, std::uint64_t> nonbent;
    for (const auto& [l, k] : dist->counts) {
      if (l > 0) nonbent[l] = k;
    }
    const auto entry = assess(DistributionType(f.n(), nonbent));
    rules = Json::object();
    rules["type"] = entry.type.partition_string();
    rules["admissible"] = entry.admissible;
    Json vs = Json::array();
    for (const auto& v : entry.verdicts) vs.push_back(to_json(v));
    rules["verdicts"] = vs;
    if (!entry.admissible) violations.push_back("distribution fails the admissibility rules");
  }
  j["rules"] = rules;

  // Blocking structure of N_F.
  t = Clock::now();
  Json blocking = nullptr;
  if (!opt.skip_blocking && plateaued && f.n() % 2 == 0 && f.n() >= 2) {
    try {
      const auto n_set = nonbent_set(f);
      const auto br = blocking_report(n_set, f.n(), opt.blocking);
      blocking = to_json(br);
      out.budget_exhausted = br.pair_status == PairStatus::budget_exhausted;
      if (apn && degree == 2 && square) {
        if (!br.odd.ok) violations.push_back("a subspace meets N_F evenly");
        if (br.mod4 != 1) violations.push_back("|N_F| is not 1 mod 4");
      }
    } catch (const BudgetExhausted&) {
      blocking = Json::object();
      blocking["budget_exhausted"] = true;
      out.budget_exhausted = true;
    }
  }
  j["blocking"] = blocking;
  lap("blocking_ms", t);

  j["violations"] = violations;
  if (opt.timing) {
    lap("total_ms", t0);
    j["timing"] = timing;
  }
  return out;
}

}  // namespace apnvsp
