// twisted-lab: command-line front end for the twisted ring library.
//
//   twisted-lab dims --p 3 --m 2 --max-n 5
//   twisted-lab gens --p 2 --m 1 --max-n 6
//   twisted-lab ampleness --matrix '[[2]]' --divisor '[1]' --curves '[[1]]'
//   twisted-lab cohomology --p 2 --m 1 --t -2 --max-n 20
//   twisted-lab growth --p 3 --m 2 --max-n 10

#include "twisted/cli_lab.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

using twisted::lab::Command;
using twisted::lab::Format;
using twisted::lab::RunConfig;
using twisted::lab::Side;

bool parse_t_window(const std::string& text, RunConfig& cfg) {
  try {
    std::size_t used = 0;
    const auto colon = text.find(':', 1);
    if (colon == std::string::npos) {
      cfg.t_min = cfg.t_max = std::stoll(text, &used);
      return used == text.size();
    }
    const std::string lo = text.substr(0, colon), hi = text.substr(colon + 1);
    cfg.t_min = std::stoll(lo, &used);
    if (used != lo.size()) return false;
    cfg.t_max = std::stoll(hi, &used);
    return used == hi.size();
  } catch (const std::exception&) {
    return false;
  }
}

void add_ring_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--r,--p", cfg.r, "Power of the endomorphism x_i -> x_i^r (p for Frobenius)");
  sub->add_option("--m", cfg.m, "Dimension of projective space P^m");
  sub->add_option("--max-n", cfg.max_n, "Largest grade n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with twisted homogeneous coordinate rings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", twisted::lab::kToolVersion);

  RunConfig cfg;
  std::string format = "json";
  std::string out_path;
  std::string t_window = "0";
  std::string side = "both";

  auto* dims = app.add_subcommand("dims", "Dimensions of the graded pieces F_n");
  auto* gens = app.add_subcommand("gens", "Indecomposable monomials per grade (finite generation)");
  auto* ample = app.add_subcommand("ampleness", "Left/right ampleness from a numerical action");
  auto* coh = app.add_subcommand("cohomology", "Vanishing scans for left and right twists on P^m");
  auto* growth = app.add_subcommand("growth", "Growth class of dim F_n (non-noetherian flag)");

  for (auto* sub : {dims, gens, ample, coh, growth}) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", out_path, "Write the report here instead of stdout");
  }
  for (auto* sub : {dims, gens, coh, growth}) add_ring_options(sub, cfg);

  gens->add_option("--seed", cfg.seed, "Seed for the algebra-law sampling");
  gens->add_option("--trials", cfg.trials, "Sampled triples for the algebra laws");
  gens->add_option("--budget", cfg.budget, "Maximum monomials enumerated per grade (env TWISTED_BUDGET overrides)");
  gens->add_option("--workers", cfg.workers, "Enumeration threads");

  ample->add_option("--spec", cfg.spec_path, "JSON document {P, curves, dimX, degSigma, ampleFlag}");
  ample->add_option("--matrix", cfg.matrix, "Numerical action as a JSON array of rows");
  ample->add_option("--divisor", cfg.divisor, "Divisor class as a JSON integer array");
  ample->add_option("--curves", cfg.curves, "Curve functionals as a JSON array of arrays");
  ample->add_option("--ample", cfg.ample, "Ample class used for the non-ampleness witness");
  ample->add_option("--dimX", cfg.dim_x, "Dimension of X");
  ample->add_option("--deg-sigma", cfg.deg_sigma, "Degree of the endomorphism");
  ample->add_flag("--ample-flag", cfg.ample_flag, "Assert L_n is ample for n >> 0");
  ample->add_option("--window", cfg.witness_window, "Window M_0 for witness verification");
  ample->add_option("--seed", cfg.seed, "Unused; accepted for uniformity");

  coh->add_option("--t", t_window, "Twist t or window lo:hi");
  coh->add_option("--side", side, "Which twists to scan")->check(CLI::IsMember({"both", "left", "right"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : twisted::lab::kExitInvalid;
  }

  if (dims->parsed()) cfg.command = Command::Dims;
  if (gens->parsed()) cfg.command = Command::Gens;
  if (ample->parsed()) cfg.command = Command::Ampleness;
  if (coh->parsed()) cfg.command = Command::Cohomology;
  if (growth->parsed()) cfg.command = Command::Growth;

  cfg.format = format == "csv" ? Format::Csv : Format::Json;
  static const std::map<std::string, Side> sides{{"both", Side::Both}, {"left", Side::Left}, {"right", Side::Right}};
  cfg.side = sides.at(side);
  if (!parse_t_window(t_window, cfg)) {
    std::cerr << "invalid --t value: " << t_window << '\n';
    return twisted::lab::kExitInvalid;
  }
  if (const char* env = std::getenv("TWISTED_BUDGET")) {
    try {
      cfg.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "invalid TWISTED_BUDGET: " << env << '\n';
      return twisted::lab::kExitInvalid;
    }
  }

  const auto report = twisted::lab::run(cfg);
  if (report.exit_code == twisted::lab::kExitInvalid && report.document.contains("error"))
    std::cerr << "error: " << report.document["error"].get<std::string>() << '\n';

  if (out_path.empty()) {
    std::cout << report.text();
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << '\n';
      return twisted::lab::kExitInvalid;
    }
    out << report.text();
  }
  return report.exit_code;
}
