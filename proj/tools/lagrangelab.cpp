#include "lagrangelab/errors.hpp"
#include "lagrangelab/families.hpp"
#include "lagrangelab/io.hpp"
#include "lagrangelab/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

using namespace lagrangelab;

namespace {

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Structural:
      return 2;
    case ErrorKind::Invariant:
      return 3;
    case ErrorKind::Input:
    case ErrorKind::TooLarge:
      return 1;
  }
  return 1;
}

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Input, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monotone Lagrangians from intersections of real quadrics"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  CheckOptions opt;
  bool no_numeric = false;

  auto* check_cmd = app.add_subcommand("check", "Full report for a polytope or quadric system");
  check_cmd->add_option("file", file, "Input JSON, or - for stdin")->required();
  check_cmd->add_flag("--json", json, "JSON output");
  check_cmd->add_option("--tol-membership", opt.tol.membership, "Quadric residual tolerance");
  check_cmd->add_option("--tol-lagrangian", opt.tol.lagrangian, "Pullback of omega tolerance");
  check_cmd->add_option("--tol-liouville", opt.tol.liouville, "Relative error of the loop integrals");
  check_cmd->add_flag("--normalize-normals", opt.normalize_normals, "Divide each normal and offset by the normal's gcd");
  check_cmd->add_option("--seed", opt.seed, "Seed for the numerical check");
  check_cmd->add_flag("--no-numeric", no_numeric, "Skip the numerical check");

  auto* gale_cmd = app.add_subcommand("gale", "Gale dual presentations and column classes");
  gale_cmd->add_option("file", file, "Input JSON, or - for stdin")->required();
  gale_cmd->add_flag("--json", json, "JSON output");

  auto* topo_cmd = app.add_subcommand("topology", "Fiber and total space");
  topo_cmd->add_option("file", file, "Input JSON, or - for stdin")->required();

  std::string family;
  std::vector<std::string> params;
  bool numeric = false;
  auto* repro_cmd = app.add_subcommand("reproduce", "Check a family against its closed forms");
  repro_cmd->add_option("family", family, "ex1, ex2, th3, th4, th5, th6 or sphere")->required();
  repro_cmd->add_option("--params", params, "name=values, values as 1,2,3 or a..b or a..b:step")->expected(0, 64);
  repro_cmd->add_flag("--json", json, "JSON output");
  repro_cmd->add_flag("--numeric", numeric, "Also run the numerical check");

  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  auto* scan_cmd = app.add_subcommand("scan", "Group a parameter range by diffeomorphism type");
  scan_cmd->add_option("family", family, "ex1, ex2, th3, th4, th5, th6 or sphere")->required();
  scan_cmd->add_option("--range", params, "name=values, values as 1,2,3 or a..b or a..b:step")->expected(0, 64);
  scan_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  scan_cmd->add_flag("--json", json, "JSON output");

  auto* list_cmd = app.add_subcommand("families", "List the built-in families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*check_cmd) {
      opt.numeric = !no_numeric;
      auto r = check(parse_input(read_file(file)), opt);
      std::cout << (json ? report_json(r) : report_text(r));
    } else if (*gale_cmd) {
      auto in = parse_input(read_file(file));
      std::cout << (json ? gale_json(in) : gale_text(in));
    } else if (*topo_cmd) {
      CheckOptions o;
      o.numeric = false;
      std::cout << topology_text(check(parse_input(read_file(file)), o));
    } else if (*repro_cmd) {
      CheckOptions o = family_options();
      o.numeric = numeric;
      auto rows = reproduce(family, parse_grid(params), o);
      std::cout << (json ? reproduce_json(family, rows) : reproduce_text(family, rows));
    } else if (*scan_cmd) {
      auto res = scan(family, parse_grid(params), threads, family_options());
      std::cout << (json ? scan_json(family, res) : scan_text(family, res));
    } else if (*list_cmd) {
      for (const auto& f : family_catalog()) {
        std::cout << f.id;
        for (const auto& p : f.params) std::cout << " " << p;
        std::cout << "\n  " << f.summary << "\n";
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
