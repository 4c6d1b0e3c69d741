#pragma once

// Command dispatch for the twisted-lab tool. `run` turns a validated
// RunConfig into a deterministic Report; the executable only parses flags
// and writes the report out.

#include "twisted/cohomology.hpp"
#include "twisted/divisor_dynamics.hpp"
#include "twisted/exact_linalg.hpp"
#include "twisted/integer.hpp"
#include "twisted/json_io.hpp"
#include "twisted/twisted_ring.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace twisted::lab {

inline constexpr const char* kToolName = "twisted-lab";
inline constexpr const char* kToolVersion = "1.0.0";

enum class Command { Dims, Gens, Ampleness, Cohomology, Growth };
enum class Format { Json, Csv };
enum class Side { Both, Left, Right };

inline const char* to_string(Command c) {
  switch (c) {
    case Command::Dims: return "dims";
    case Command::Gens: return "gens";
    case Command::Ampleness: return "ampleness";
    case Command::Cohomology: return "cohomology";
    case Command::Growth: return "growth";
  }
  return "?";
}
using twisted::to_string;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitBudget = 3;

struct RunConfig {
  Command command = Command::Dims;
  std::int64_t r = 2;
  std::int64_t m = 1;
  std::int64_t max_n = 4;

  // ampleness: either a spec document or the individual pieces
  std::optional<std::string> spec_path;
  std::optional<std::string> matrix;
  std::optional<std::string> divisor;
  std::optional<std::string> curves;
  std::optional<std::string> ample;
  std::optional<std::int64_t> dim_x;
  std::optional<std::int64_t> deg_sigma;
  bool ample_flag = false;
  std::uint64_t witness_window = 64;

  // cohomology
  std::int64_t t_min = 0;
  std::int64_t t_max = 0;
  Side side = Side::Both;

  Format format = Format::Json;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  std::uint64_t budget = 1'000'000;
  unsigned workers = 1;
};

struct Report {
  int exit_code = kExitOk;
  io::json document;
  /// Set for CSV output; JSON output uses `document`.
  std::optional<std::string> csv;

  std::string text() const { return csv ? *csv : document.dump(2) + "\n"; }
};

namespace detail {

inline io::json input_echo(const RunConfig& c) {
  io::json in;
  switch (c.command) {
    case Command::Dims:
    case Command::Gens:
    case Command::Growth:
      in = {{"r", c.r}, {"m", c.m}, {"max_n", c.max_n}};
      if (c.command == Command::Gens) {
        in["budget"] = c.budget;
        in["seed"] = c.seed;
        in["trials"] = c.trials;
      }
      break;
    case Command::Ampleness:
      if (c.spec_path) in["spec"] = *c.spec_path;
      if (c.matrix) in["matrix"] = *c.matrix;
      if (c.divisor) in["divisor"] = *c.divisor;
      if (c.curves) in["curves"] = *c.curves;
      if (c.ample) in["ample"] = *c.ample;
      if (c.dim_x) in["dimX"] = *c.dim_x;
      if (c.deg_sigma) in["degSigma"] = *c.deg_sigma;
      in["ampleFlag"] = c.ample_flag;
      in["witness_window"] = c.witness_window;
      break;
    case Command::Cohomology:
      in = {{"r", c.r}, {"m", c.m}, {"max_n", c.max_n}, {"t_min", c.t_min}, {"t_max", c.t_max}};
      in["side"] = c.side == Side::Both ? "both" : (c.side == Side::Left ? "left" : "right");
      break;
  }
  in["format"] = c.format == Format::Json ? "json" : "csv";
  return in;
}

inline io::json envelope(const RunConfig& c) {
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"command", to_string(c.command)},
          {"input", input_echo(c)},
          {"citations", io::json::array()}};
}

inline void validate_ring(const RunConfig& c, std::int64_t min_r) {
  if (c.m < 1) throw domain_error("--m must be at least 1");
  if (c.r < min_r) throw domain_error("--r must be at least " + std::to_string(min_r));
  if (c.max_n < 1) throw domain_error("--max-n must be at least 1");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline NumericalActionSpec action_spec(const RunConfig& c) {
  io::json doc = io::json::object();
  if (c.spec_path) doc = io::parse_text(read_file(*c.spec_path), "--spec");
  if (c.matrix) doc["P"] = io::parse_text(*c.matrix, "--matrix");
  if (c.curves) doc["curves"] = io::parse_text(*c.curves, "--curves");
  if (c.dim_x) doc["dimX"] = *c.dim_x;
  if (c.deg_sigma) doc["degSigma"] = *c.deg_sigma;
  if (c.ample_flag) doc["ampleFlag"] = true;
  if (!doc.contains("curves") && doc.contains("P")) {
    // Default to the coordinate functionals.
    const std::size_t l = doc["P"].size();
    io::json curves = io::json::array();
    for (std::size_t i = 0; i < l; ++i) {
      io::json e = io::json::array();
      for (std::size_t k = 0; k < l; ++k) e.push_back(i == k ? 1 : 0);
      curves.push_back(std::move(e));
    }
    doc["curves"] = std::move(curves);
  }
  return io::spec_from_json(doc);
}

inline Report run_dims(const RunConfig& c) {
  validate_ring(c, 1);
  const PowerRingSpec spec{c.m, c.r};
  Report rep;
  rep.document = envelope(c);
  io::json rows = io::json::array();
  std::ostringstream csv;
  csv << "n,e_n,dim\n";
  for (std::int64_t n = 0; n <= c.max_n; ++n) {
    const Integer e = twist_degree(c.r, n);
    const Integer d = grade_dimension(spec, n);
    rows.push_back({{"n", n}, {"e_n", io::to_json(e)}, {"dim", io::to_json(d)}});
    csv << n << ',' << e << ',' << d << '\n';
  }
  rep.document["results"] = {{"grades", std::move(rows)}};
  rep.document["citations"].push_back(citation::kGradedAlgebra);
  if (c.format == Format::Csv) rep.csv = csv.str();
  return rep;
}

inline Report run_gens(const RunConfig& c) {
  validate_ring(c, 1);
  const PowerRingSpec spec{c.m, c.r};
  Report rep;
  rep.document = envelope(c);
  rep.document["citations"].push_back(citation::kFrobeniusGeneration);
  rep.document["citations"].push_back(citation::kGradedAlgebra);

  GeneratorCounts counts;
  std::optional<std::int64_t> reached;
  try {
    counts = generator_degrees(spec, c.max_n, {c.budget, c.workers});
  } catch (const budget_exceeded& e) {
    reached = e.reached();
    // Recompute the completed prefix so the partial report is still useful.
    if (e.reached() >= 1) counts = generator_degrees(spec, e.reached(), {c.budget, c.workers});
    rep.exit_code = kExitBudget;
    rep.document["error"] = e.what();
  }

  io::json per_grade = io::json::object();
  io::json samples = io::json::object();
  std::ostringstream csv;
  csv << "n,count\n";
  bool new_in_every = counts.max_n >= 2;
  for (const auto& [n, cnt] : counts.counts) {
    per_grade[std::to_string(n)] = io::to_json(cnt);
    csv << n << ',' << cnt << '\n';
    if (n >= 2 && cnt == 0) new_in_every = false;
    if (n >= 2 && cnt != 0) {
      if (auto z = first_indecomposable(spec, n)) samples[std::to_string(n)] = io::to_json(*z);
    }
  }

  std::string verdict;
  if (counts.max_n < 2) {
    verdict = "window-too-small";
  } else if (counts.generated_in_degree_one()) {
    verdict = "generated-in-degree-one";
  } else if (new_in_every) {
    verdict = "new-generators-in-every-degree";
  } else {
    verdict = "new-generators-in-some-degrees";
  }

  const auto laws = associativity_check(spec, c.trials, c.seed, std::min<std::int64_t>(c.max_n, 5));
  io::json results = {
      {"indecomposable_counts", std::move(per_grade)},
      {"indecomposable_samples", std::move(samples)},
      {"verdict", verdict},
      {"window_max_n", counts.max_n},
      {"finitely_generated_expected", c.r == 1 || (c.r == 2 && c.m == 1)},
      {"algebra_laws", {{"trials", laws.trials}, {"failures", laws.failures}, {"passed", laws.passed()}}},
  };
  if (reached) results["budget_reached_n"] = *reached;
  rep.document["results"] = std::move(results);
  if (c.format == Format::Csv) rep.csv = csv.str();
  return rep;
}

inline Report run_growth(const RunConfig& c) {
  validate_ring(c, 1);
  if (c.max_n < 3) throw domain_error("growth needs --max-n >= 3 (at least 4 grades)");
  const PowerRingSpec spec{c.m, c.r};
  Report rep;
  rep.document = envelope(c);
  const auto dims = grade_dimensions(spec, c.max_n);
  const auto cls = growth_class(dims);
  std::ostringstream csv;
  csv << "n,dim\n";
  for (std::size_t n = 0; n < dims.size(); ++n) csv << n << ',' << dims[n] << '\n';
  rep.document["results"] = {
      {"dims", io::to_json(dims)},
      {"growth_class", to_string(cls)},
      {"non_noetherian", cls == GrowthClass::Exponential},
  };
  rep.document["citations"].push_back(citation::kExponentialGrowth);
  if (c.format == Format::Csv) rep.csv = csv.str();
  return rep;
}

inline io::json witness_json(const NumericalActionSpec& spec, const DivisorClass& d,
                             const std::optional<DivisorClass>& ample, std::uint64_t window) {
  const DivisorClass base = ample ? *ample : d;
  if (!spec.is_ample(base)) return {{"status", "skipped"}, {"reason", "no ample class available"}};
  try {
    WitnessConfig cfg;
    cfg.window = window;
    const auto w = non_left_ample_witness(spec, d, base, cfg);
    return {{"status", "found"},
            {"H", io::to_json(w.h.coords)},
            {"curve", io::to_json(w.curve.coords)},
            {"multiple", io::to_json(w.multiple)},
            {"verified_window", w.window},
            {"sum_constant", io::to_json(w.sum_constant)},
            {"orbit_constant", io::to_json(w.orbit_constant)}};
  } catch (const witness_not_found& e) {
    return {{"status", "Undetermined"}, {"reason", e.what()}};
  }
}

inline Report run_ampleness(const RunConfig& c) {
  if (!c.spec_path && !c.matrix) throw domain_error("ampleness needs --matrix or --spec");
  const NumericalActionSpec spec = action_spec(c);
  DivisorClass d;
  if (c.divisor) {
    d.coords = io::vector_from_json(io::parse_text(*c.divisor, "--divisor"));
  } else {
    throw domain_error("ampleness needs --divisor");
  }
  spec.check(d);
  std::optional<DivisorClass> ample;
  if (c.ample) {
    ample = DivisorClass{io::vector_from_json(io::parse_text(*c.ample, "--ample"))};
    spec.check(*ample);
  }

  Report rep;
  rep.document = envelope(c);
  const auto report = classify_ampleness(spec, d);
  io::json results = {
      {"left", to_string(report.left)},
      {"right", to_string(report.right)},
      {"spectral_radius", io::to_json(report.spectral_radius)},
      {"quasi_unipotent", report.quasi_unipotent},
      {"divisor_is_ample", spec.is_ample(d)},
      {"reasons", report.reasons},
      {"spec", io::to_json(spec)},
  };
  results["ample_eigenvector"] =
      report.ample_eigenvector ? io::to_json(report.ample_eigenvector->coords) : io::json(nullptr);
  results["eigenvalue"] = report.eigenvalue ? io::to_json(*report.eigenvalue) : io::json(nullptr);
  results["char_poly"] = char_poly(spec.action).str();
  if (report.spectral_radius.is_point() && is_integral(report.spectral_radius.lo)) {
    results["jordan_growth_exponent"] =
        jordan_growth_exponent(spec.action, numerator(report.spectral_radius.lo));
  }
  if (report.left == Verdict::No) results["non_left_ample_witness"] = witness_json(spec, d, ample, c.witness_window);
  if (spec.deg_sigma) {
    if (spec.rank() == 1) {
      results["degree_consistency"] = degree_consistency(spec, d);
    } else {
      results["degree_consistency"] = "unsupported: self-intersection needs rank-one Num(X)";
    }
  }
  rep.document["results"] = std::move(results);
  for (const auto& cite : report.citations) rep.document["citations"].push_back(cite);
  if (c.format == Format::Csv) {
    std::ostringstream csv;
    csv << "left,right,radius_lo,radius_hi,quasi_unipotent\n"
        << to_string(report.left) << ',' << to_string(report.right) << ','
        << to_string(report.spectral_radius.lo) << ',' << to_string(report.spectral_radius.hi) << ','
        << (report.quasi_unipotent ? "true" : "false") << '\n';
    rep.csv = csv.str();
  }
  return rep;
}

inline io::json table_json(const CohomologyTable& t) {
  io::json rows = io::json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"n", r.n}, {"degree", io::to_json(r.degree)}, {"q", r.q}, {"h", io::to_json(r.value)}});
  return rows;
}

inline Report run_cohomology(const RunConfig& c) {
  validate_ring(c, 2);
  if (c.t_min > c.t_max) throw domain_error("empty --t window");
  if (c.format == Format::Csv && (c.t_min != c.t_max || c.side == Side::Both))
    throw domain_error("CSV output needs a single --t value and --side left or right");
  const PowerRingSpec spec{c.m, c.r};
  Report rep;
  rep.document = envelope(c);
  io::json scans = io::json::array();
  std::ostringstream csv;
  for (std::int64_t t = c.t_min; t <= c.t_max; ++t) {
    io::json entry = {{"t", t}};
    if (c.side != Side::Left) {
      const auto right = right_vanishing_scan(spec, Integer(t), c.max_n);
      entry["right"] = {{"n0", right.n0 ? io::json(*right.n0) : io::json(nullptr)},
                        {"stabilised", right.n0.has_value()},
                        {"table", table_json(right.table)}};
      if (c.format == Format::Csv) right.table.write_csv(csv);
    }
    if (c.side != Side::Right) {
      const auto left = left_vanishing_scan(spec, Integer(t), c.max_n);
      entry["left"] = {{"verdict", to_string(left.verdict)},
                       {"witness_q", left.witness_q ? io::json(*left.witness_q) : io::json(nullptr)},
                       {"window_start", left.window_start},
                       {"table", table_json(left.table)}};
      if (c.format == Format::Csv) left.table.write_csv(csv);
    }
    scans.push_back(std::move(entry));
  }
  rep.document["results"] = {{"scans", std::move(scans)}};
  rep.document["citations"].push_back(citation::kCohomologyVanishing);
  rep.document["citations"].push_back(citation::kNotLeftAmple);
  rep.document["citations"].push_back(citation::kAmpleEigenvector);
  if (c.format == Format::Csv) rep.csv = csv.str();
  return rep;
}

}  // namespace detail

/// Dispatches a command. Invalid configurations yield exit code 2 and a
/// report carrying the error; budget exhaustion yields 3.
inline Report run(const RunConfig& c) {
  try {
    switch (c.command) {
      case Command::Dims: return detail::run_dims(c);
      case Command::Gens: return detail::run_gens(c);
      case Command::Ampleness: return detail::run_ampleness(c);
      case Command::Cohomology: return detail::run_cohomology(c);
      case Command::Growth: return detail::run_growth(c);
    }
    throw domain_error("unknown command");
  } catch (const domain_error& e) {
    Report rep;
    rep.exit_code = kExitInvalid;
    rep.document = detail::envelope(c);
    rep.document["error"] = e.what();
    return rep;
  } catch (const io::json::exception& e) {
    Report rep;
    rep.exit_code = kExitInvalid;
    rep.document = detail::envelope(c);
    rep.document["error"] = e.what();
    return rep;
  } catch (const budget_exceeded& e) {
    Report rep;
    rep.exit_code = kExitBudget;
    rep.document = detail::envelope(c);
    rep.document["error"] = e.what();
    rep.document["budget_reached_n"] = e.reached();
    return rep;
  }
}

}  // namespace twisted::lab
