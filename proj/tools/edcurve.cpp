// edcurve: ED degrees of curve multiview varieties from the command line.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "edcurve/cli.hpp"

int main(int argc, char** argv) {
  using edcurve::RunConfig;
  RunConfig cfg;
  int N_flag = -1;
  int vars_flag = -1;

  CLI::App app{"Euclidean distance degrees of curve multiview varieties"};
  app.set_help_flag("--help", "print this help and exit");  // -h is taken by --h
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "base seed for every random choice")->capture_default_str();
    sub->add_option("--retries", cfg.retries, "reseeding budget when genericity fails")->capture_default_str();
    sub->add_flag("--json", cfg.json, "machine-readable output");
  };

  auto* eddeg = app.add_subcommand("eddeg", "ED degree of one curve under one camera arrangement");
  eddeg->add_option("--curve", cfg.curve_path, "curve JSON file")->required();
  eddeg->add_option("--cameras", cfg.cameras_path, "camera arrangement JSON file")->required();
  eddeg->add_flag("--allow-h1", cfg.allow_h1, "accept h = 1 (never compared with 3en-2)");
  common(eddeg);

  auto* sweep = app.add_subcommand("sweep", "compare ED degrees with 3en-2 over a grid");
  sweep->add_option("--e", cfg.e_range, "curve degrees A..B")->capture_default_str();
  sweep->add_option("--n", cfg.n_range, "camera counts A..B")->capture_default_str();
  sweep->add_option("--h", cfg.h_list, "image dimensions, comma separated")->capture_default_str();
  sweep->add_option("--N", N_flag, "ambient dimension (default max(3, e))");
  sweep->add_option("--family", cfg.family, "random | monomial")->capture_default_str();
  sweep->add_option("--curve", cfg.curve_path, "fixed curve JSON file (overrides --e, --N, --family)");
  common(sweep);

  auto* l3 = app.add_subcommand("l3", "lines meeting three skew lines under wedge cameras");
  cfg.h_list = "2";
  l3->add_option("--n", cfg.n_range, "camera counts A..B");
  l3->add_option("--h", cfg.h_list, "camera image dimensions (2 and/or 3)");
  common(l3);

  auto* tri = app.add_subcommand("triangulate", "nearest point on the multiview curve");
  tri->add_option("--curve", cfg.curve_path, "curve JSON file")->required();
  tri->add_option("--cameras", cfg.cameras_path, "camera arrangement JSON file")->required();
  tri->add_option("--data", cfg.data_path, "data point JSON file (random when omitted)");
  tri->add_option("--tol", cfg.tol, "isolating interval width")->capture_default_str();
  common(tri);

  auto* wedge = app.add_subcommand("wedge", "matrix of k x k minors of each camera");
  wedge->add_option("--cameras", cfg.cameras_path, "camera arrangement JSON file")->required();
  wedge->add_option("--k", cfg.k, "minor size")->capture_default_str();
  wedge->add_option("--order", cfg.order, "subset order: lex | colex")->capture_default_str();
  common(wedge);

  auto* md = app.add_subcommand("multidegree", "product of linear forms in T1..Tn");
  md->add_option("--factor", cfg.factors, "factor such as 'T1+2*T2' (repeatable)")->required();
  md->add_option("--vars", vars_flag, "number of variables (default: highest index used)");
  common(md);

  auto* scroll = app.add_subcommand("scroll", "ED degrees of a Bezier ruled surface curve in P^5");
  scroll->add_option("--bezier1", cfg.bezier1_path, "first control polygon JSON file")->required();
  scroll->add_option("--bezier2", cfg.bezier2_path, "second control polygon JSON file")->required();
  scroll->add_option("--n", cfg.n_range, "camera counts A..B");
  common(scroll);

  // defaults that differ per command
  cfg.n_range = "";
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : edcurve::kInputError;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.n_range.empty()) cfg.n_range = cfg.command == "l3" ? "1..5" : cfg.command == "scroll" ? "1..2" : "1..3";
  if (cfg.command == "l3" && l3->count("--h") == 0) cfg.h_list = "2,3";
  if (N_flag >= 0) cfg.N = N_flag;
  if (vars_flag >= 0) cfg.vars = vars_flag;
  return edcurve::run_command(cfg, std::cout, std::cerr);
}
