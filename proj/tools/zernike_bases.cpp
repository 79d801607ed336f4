#include "zernike/serialize.hpp"
#include "zernike/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace zernike;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

Basis parse_basis(const std::string& name) {
  if (name == "I" || name == "i" || name == "1") return Basis::I;
  if (name == "II" || name == "ii" || name == "2") return Basis::II;
  throw CLI::ValidationError("--basis", "must be I or II");
}

std::pair<int, int> parse_index(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--index", "expected two comma-separated integers");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--index", "expected two comma-separated integers");
  }
}

std::pair<int, int> parse_grid(const std::string& text) {
  auto x = text.find('x');
  try {
    if (x == std::string::npos) {
      int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--grid", "expected N or NXxNY");
  }
}

json report_to_json(const SuiteReport& report) {
  json checks = json::array();
  for (const auto& check : report.checks)
    checks.push_back({{"name", check.name},
                      {"pass", check.pass},
                      {"exact", check.exact},
                      {"error", check.error}});
  return {{"suite", report.suite},   {"n_max", report.n_max},
          {"tolerance", report.tolerance}, {"pass", report.pass},
          {"exact", report.exact},  {"worst_error", report.worst_error},
          {"checks", std::move(checks)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two orthonormal eigenbases of the unit-disk Zernike operator: "
               "exact interbasis tables, sampling, conversion, fitting, verification"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string output;
  std::string input;
  std::string basis_name = "I";
  std::string index_text = "0,0";
  std::string grid_text = "64";
  std::string suite = "all";
  int n_max = -1;
  int order = 0;
  double tolerance = 0;
  unsigned seed = 0;
  int threads = 1;

  auto* tables = app.add_subcommand("tables", "emit interbasis matrices through rung n-max");
  tables->add_option("--n-max", n_max, "largest rung")->required()->check(CLI::NonNegativeNumber);
  tables->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  tables->add_option("--output,-o", output, "output path (default stdout)");

  auto* eval = app.add_subcommand("eval", "sample one basis function on a Cartesian grid");
  eval->add_option("--basis", basis_name, "I or II")->required();
  eval->add_option("--index", index_text, "n,m for basis I; n1,n2 for basis II")->required();
  eval->add_option("--grid", grid_text, "N or NXxNY resolution over [-1,1]^2");
  eval->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  eval->add_option("--threads", threads, "rows evaluated in parallel")
      ->check(CLI::PositiveNumber);
  eval->add_option("--output,-o", output, "output path (default stdout)");

  auto* convert_cmd = app.add_subcommand("convert", "change a spectrum between bases");
  convert_cmd->add_option("--input,-i", input, "spectrum json path")->required();
  convert_cmd->add_option("--target", basis_name, "target basis: I or II")->required();
  convert_cmd->add_option("--output,-o", output, "output path (default stdout)");

  auto* fit_cmd = app.add_subcommand("fit", "least-squares projection of samples onto a basis");
  fit_cmd->add_option("--input,-i", input, "samples path (.csv or .json)")->required();
  fit_cmd->add_option("--basis", basis_name, "I or II")->required();
  fit_cmd->add_option("--n-max", n_max, "largest rung")->required()->check(CLI::NonNegativeNumber);
  fit_cmd->add_option("--output,-o", output, "output path (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites; exit 0 iff pass");
  verify_cmd->add_option("--suite", suite, "one of the named suites, or all")
      ->check(CLI::IsMember({"all", "orthonormality", "unitarity", "eigenvalue", "overlap",
                             "fourier", "symmetry"}));
  verify_cmd->add_option("--n-max", n_max, "largest rung (suite default if omitted)");
  verify_cmd->add_option("--order", order, "quadrature order override")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--tolerance", tolerance, "tolerance override")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed, "seed for random sample points");
  verify_cmd->add_option("--threads", threads, "parallel suite iteration")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--output,-o", output, "report path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (tables->parsed()) {
      write_output(output, format == "json" ? tables_to_json(n_max).dump(2)
                                            : tables_to_csv(n_max));
    } else if (eval->parsed()) {
      auto [nx, ny] = parse_grid(grid_text);
      auto grid = eval_grid(parse_basis(basis_name), parse_index(index_text), nx, ny, threads);
      write_output(output, format == "json" ? grid_to_json(grid).dump(2) : grid_to_csv(grid));
    } else if (convert_cmd->parsed()) {
      auto spec = spectrum_from_json(json::parse(read_file(input)));
      auto converted = convert(spec, parse_basis(basis_name));
      write_output(output, spectrum_to_json(converted).dump(2));
    } else if (fit_cmd->parsed()) {
      auto text = read_file(input);
      auto samples = input.size() > 4 && input.substr(input.size() - 4) == ".csv"
                         ? samples_from_csv(text)
                         : samples_from_json(json::parse(text));
      auto report = fit(samples, parse_basis(basis_name), n_max);
      write_output(output, fit_report_to_json(report).dump(2));
    } else if (verify_cmd->parsed()) {
      VerifyOptions opt;
      opt.n_max = n_max;
      opt.order = order;
      opt.tolerance = tolerance;
      opt.seed = seed;
      opt.threads = threads;
      json reports = json::array();
      bool pass = true;
      if (suite == "all") {
        for (const auto& name : suite_names()) {
          auto report = run_suite(name, opt);
          pass = pass && report.pass;
          reports.push_back(report_to_json(report));
        }
      } else {
        auto report = run_suite(suite, opt);
        pass = report.pass;
        reports.push_back(report_to_json(report));
      }
      write_output(output, json{{"pass", pass}, {"reports", std::move(reports)}}.dump(2));
      return pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
