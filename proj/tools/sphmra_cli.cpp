#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sphmra/certify.hpp"
#include "sphmra/errors.hpp"
#include "sphmra/io.hpp"
#include "sphmra/posdef.hpp"
#include "sphmra/quadrature.hpp"
#include "sphmra/transform.hpp"
#include "sphmra/uncertainty.hpp"

using namespace sphmra;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_verification = 2;

void check_distinct(const std::string& in, const std::string& out) {
  if (!out.empty() && in == out) {
    throw std::invalid_argument("input and output paths must differ");
  }
}

// Writes `text` to `path`, or to stdout when the path is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  out << text;
}

void emit_json(const std::string& path, const io::json& doc) {
  if (path.empty()) {
    std::cout << doc.dump(1) << '\n';
  } else {
    io::write_json_file(path, doc);
  }
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial wavelet multiresolution analysis on n-spheres"};
  app.require_subcommand(1);

  long long max_nodes = 0;
  app.add_option("--max-nodes", max_nodes,
                 "Grid node cap (overrides SPHMRA_MAX_NODES; default 1e7)")
      ->check(CLI::PositiveNumber);

  int M = 0;
  int alpha = 0;
  std::string in_path;
  std::string out_path;
  int grid = 0;
  int levels = 0;
  std::vector<int> ms;
  std::vector<double> lambdas;
  int n = 2;
  int max_j = 3;

  auto* weights = app.add_subcommand("weights", "Quadrature nodes and weights as CSV");
  weights->add_option("--M", M, "Node count parameter")->required()->check(CLI::PositiveNumber);
  weights->add_option("--alpha", alpha, "Sine power")->required()->check(CLI::PositiveNumber);
  weights->add_option("--out", out_path, "Output CSV (stdout if omitted)");

  auto* analyze = app.add_subcommand("analyze", "Grid signal to spectrum");
  analyze->add_option("--in", in_path, "Signal JSON")->required();
  analyze->add_option("--out", out_path, "Spectrum JSON (stdout if omitted)");

  auto* synthesize = app.add_subcommand("synthesize", "Spectrum to samples on N_j");
  synthesize->add_option("--in", in_path, "Spectrum JSON")->required();
  synthesize->add_option("--grid", grid, "Grid level j")->required()->check(CLI::PositiveNumber);
  synthesize->add_option("--out", out_path, "Signal JSON (stdout if omitted)");

  auto* decompose = app.add_subcommand("decompose", "Pyramid decomposition of a grid signal");
  decompose->add_option("--in", in_path, "Signal JSON")->required();
  decompose->add_option("--levels", levels, "Number of splitting stages (default: down to N_1)")
      ->check(CLI::PositiveNumber);
  decompose->add_option("--out", out_path, "Pyramid JSON (stdout if omitted)");

  auto* reconstruct = app.add_subcommand("reconstruct", "Pyramid reconstruction");
  reconstruct->add_option("--in", in_path, "Pyramid JSON")->required();
  reconstruct->add_option("--out", out_path, "Signal JSON (stdout if omitted)");

  auto* table = app.add_subcommand("table", "Uncertainty table of Phi_m as CSV");
  table->add_option("--m", ms, "Comma-separated m values")->delimiter(',')->required();
  table->add_option("--lambda", lambdas, "Comma-separated lambda values")->delimiter(',')->required();
  table->add_option("--out", out_path, "Output CSV (stdout if omitted)");

  auto* uncert = app.add_subcommand("uncertainty", "Uncertainty report of a zonal function");
  uncert->add_option("--in", in_path, "Zonal spectrum JSON")->required();

  auto* classify = app.add_subcommand("classify", "Positive-definiteness classification");
  classify->add_option("--in", in_path, "Zonal spectrum JSON")->required();

  auto* verify = app.add_subcommand("verify", "Certify all transform constants against the oracle");
  verify->add_option("--n", n, "Sphere dimension")->check(CLI::Range(2, 16));
  verify->add_option("--max-j", max_j, "Highest level")->check(CLI::Range(1, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_domain;
  }

  try {
    if (max_nodes > 0) {
      setenv("SPHMRA_MAX_NODES", std::to_string(max_nodes).c_str(), 1);
    }
    check_distinct(in_path, out_path);

    if (*weights) {
      const auto rule = quadrature::make_rule(M, alpha);
      std::ostringstream csv;
      csv << "u,node,chi\n";
      for (int u = 0; u <= M; ++u) {
        csv << u << ',' << g17(rule.node(u)) << ',' << g17(rule.weights[u]) << '\n';
      }
      emit(out_path, csv.str());
    } else if (*analyze) {
      const auto signal = io::signal_from_json(io::read_json_file(in_path));
      emit_json(out_path, io::to_json(mra::analyze(signal)));
    } else if (*synthesize) {
      const auto spectrum = io::spectrum_from_json(io::read_json_file(in_path));
      emit_json(out_path, io::to_json(mra::synthesize_on_grid(spectrum, grid)));
    } else if (*decompose) {
      const auto signal = io::signal_from_json(io::read_json_file(in_path));
      const auto p = levels > 0 ? transform::pyramid_decompose(signal, levels)
                                : transform::pyramid_decompose(signal);
      emit_json(out_path, io::to_json(p));
    } else if (*reconstruct) {
      const auto p = io::pyramid_from_json(io::read_json_file(in_path));
      emit_json(out_path, io::to_json(transform::pyramid_reconstruct(p)));
    } else if (*table) {
      const auto rows = uncertainty::uncertainty_table(ms, lambdas);
      emit(out_path, uncertainty::table_csv(rows));
    } else if (*uncert) {
      const auto z = io::zonal_from_json(io::read_json_file(in_path));
      emit_json("", io::to_json(uncertainty::uncertainty_product(z)));
    } else if (*classify) {
      const auto z = io::zonal_from_json(io::read_json_file(in_path));
      emit_json("", io::to_json(posdef::classify(z)));
    } else if (*verify) {
      const auto report = certify::certify_all(SphereGeometry(n), max_j);
      std::cout << report.to_text();
      const bool ok = report.passed();
      std::cout << (ok ? "all constants certified\n" : "certification FAILED\n");
      return ok ? exit_ok : exit_verification;
    }
  } catch (const std::exception& e) {
    std::cerr << "sphmra: " << e.what() << '\n';
    return exit_domain;
  }
  return exit_ok;
}
