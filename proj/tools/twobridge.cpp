// Command-line front end: invariants, obstruct, enumerate, verify-paper,
// oracle-check.  Exit codes: 0 success, 1 invariant/assertion failure,
// 2 usage error.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "twobridge/conway.hpp"
#include "twobridge/enumerate.hpp"
#include "twobridge/obstruction.hpp"
#include "twobridge/report.hpp"
#include "twobridge/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

tb::ConwayForm parse_or_usage(const std::string& text) {
  try {
    return tb::ConwayForm::parse(text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    std::exit(kExitUsage);
  }
}

int cmd_invariants(const std::string& conway, bool as_json) {
  const tb::ConwayForm k = parse_or_usage(conway);
  const tb::InvariantBundle b = tb::compute_invariants(k);
  std::cout << (as_json ? tb::invariants_json(b) + "\n"
                        : tb::invariants_text(b));
  return kExitOk;
}

int cmd_obstruct(const std::string& conway, bool as_json, long density_pmax) {
  const tb::ConwayForm k = parse_or_usage(conway);
  tb::ObstructionReport r = tb::verdict(k);
  if (density_pmax >= 2) {
    r.density_window = tb::signature_density(k, 2, density_pmax);
  }
  if (as_json) {
    std::cout << tb::obstruction_json(r) << '\n';
  } else {
    std::cout << tb::obstruction_text(r);
    if (r.density_window) {
      std::cout << "density_window     [" << tb::rat_string(r.density_window->window_min)
                << ", " << tb::rat_string(r.density_window->window_max)
                << "] over p in [" << r.density_window->N << ", "
                << r.density_window->p_max << "]\n";
    }
  }
  return kExitOk;
}

int cmd_enumerate(int max_complexity, const std::string& dedup,
                  int genus_min, int genus_max, const std::string& out_path) {
  tb::EnumerationSpec spec;
  spec.max_complexity = max_complexity;
  if (dedup == "symmetry") {
    spec.dedup = tb::Dedup::symmetry;
  } else if (dedup != "none") {
    std::cerr << "error: --dedup must be 'none' or 'symmetry'\n";
    return kExitUsage;
  }
  if (genus_min > 0 || genus_max > 0) {
    spec.genus_range = {genus_min > 0 ? genus_min : 1,
                        genus_max > 0 ? genus_max : max_complexity / 2};
  }

  const bool csv = out_path.size() >= 4 &&
                   out_path.compare(out_path.size() - 4, 4, ".csv") == 0;
  const bool json = out_path.size() >= 5 &&
                    out_path.compare(out_path.size() - 5, 5, ".json") == 0;
  if (!csv && !json) {
    std::cerr << "error: --out must end in .json or .csv\n";
    return kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  tb::RunReport rep;
  {
    std::ostringstream echo;
    echo << "enumerate max_complexity=" << max_complexity << " dedup=" << dedup;
    if (spec.genus_range) {
      echo << " genus=" << spec.genus_range->first << ".."
           << spec.genus_range->second;
    }
    rep.spec_echo = echo.str();
  }
  try {
    tb::enumerate(spec, [&](const tb::ConwayForm& k) {
      tb::ObstructionReport r = tb::verdict(k);
      rep.counts.add(r.verdict);
      rep.reports.push_back(std::move(r));
    });
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << '\n';
    return kExitUsage;
  }
  out << (csv ? tb::run_report_csv(rep) : tb::run_report_json(rep));
  out.close();

  std::cout << "forms             " << rep.counts.total() << '\n'
            << "excluded_torus_2k " << rep.counts.excluded_torus_2k << '\n'
            << "no_ccs_main       " << rep.counts.no_ccs_main << '\n'
            << "no_ccs_equality   " << rep.counts.no_ccs_equality << '\n'
            << "inconclusive      " << rep.counts.inconclusive << '\n'
            << "report written to " << out_path << '\n';
  if (rep.counts.inconclusive > 0) {
    std::cerr << "error: " << rep.counts.inconclusive
              << " form(s) received no verdict\n";
    return kExitFailure;
  }
  return kExitOk;
}

int report_suites(const tb::RunReport& rep, bool as_json,
                  const std::string& out_path) {
  if (as_json) {
    std::cout << tb::run_report_json(rep, /*include_reports=*/false) << '\n';
  } else {
    for (const auto& [name, ok] : rep.suites) {
      std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << '\n';
    }
    for (const auto& [name, detail] : rep.failures) {
      std::cout << "  " << name << ": " << detail << '\n';
    }
    std::cout << "wall time " << rep.wall_seconds << " s\n";
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return kExitUsage;
    }
    out << tb::run_report_json(rep);
  }
  return rep.all_suites_passed() && rep.counts.inconclusive == 0
             ? kExitOk
             : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants and surgery obstructions of positive "
               "2-bridge knots in Conway normal form"};
  app.require_subcommand(1);

  std::string conway;
  bool as_json = false;
  long density_pmax = 0;

  CLI::App* inv = app.add_subcommand(
      "invariants", "Print the invariant bundle of one Conway form");
  inv->add_option("--conway", conway,
                  "Conway twist list, outermost first, e.g. \"4,-2,2,-4\" or "
                  "\"C[4,-2,2,-4]\"")
      ->required();
  inv->add_flag("--json", as_json, "JSON output");

  CLI::App* obs = app.add_subcommand(
      "obstruct", "Evaluate every surgery obstruction for one Conway form");
  obs->add_option("--conway", conway, "Conway twist list, outermost first")
      ->required();
  obs->add_flag("--json", as_json, "JSON output");
  obs->add_option("--density-pmax", density_pmax,
                  "Attach a signature-density window over p in [2, PMAX]");

  int max_complexity = 12;
  std::string dedup = "none";
  int genus_min = 0, genus_max = 0;
  std::string out_path;
  CLI::App* enu = app.add_subcommand(
      "enumerate", "Classify every form up to a complexity bound");
  enu->add_option("--max-complexity", max_complexity,
                  "Bound on s(K) = sum(b_i - c_i)")
      ->required();
  enu->add_option("--dedup", dedup, "'none' or 'symmetry'");
  enu->add_option("--genus-min", genus_min, "Restrict to genus >= this");
  enu->add_option("--genus-max", genus_max, "Restrict to genus <= this");
  enu->add_option("--out", out_path, "Report path (.json or .csv)")
      ->required();

  std::string grid = "default";
  std::string config_path;
  CLI::App* ver = app.add_subcommand(
      "verify-paper", "Replay the named case analysis on configured grids");
  ver->add_option("--grid", grid, "'default' or 'large'");
  ver->add_option("--config", config_path,
                  "key = value file overriding the grid sizes");
  ver->add_flag("--json", as_json, "JSON output");
  ver->add_option("--out", out_path, "Also write the full JSON report here");

  int oracle_n = 12;
  CLI::App* ora = app.add_subcommand(
      "oracle-check", "Cross-validate independent invariant code paths");
  ora->add_option("--max-complexity", oracle_n, "Corpus bound on s(K)");
  ora->add_flag("--json", as_json, "JSON output");
  ora->add_option("--out", out_path, "Also write the full JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (inv->parsed()) return cmd_invariants(conway, as_json);
    if (obs->parsed()) return cmd_obstruct(conway, as_json, density_pmax);
    if (enu->parsed()) {
      return cmd_enumerate(max_complexity, dedup, genus_min, genus_max,
                           out_path);
    }
    if (ver->parsed()) {
      tb::VerifyConfig config;
      if (grid == "large") {
        config = tb::VerifyConfig::large();
      } else if (grid != "default") {
        std::cerr << "error: --grid must be 'default' or 'large'\n";
        return kExitUsage;
      }
      if (!config_path.empty()) {
        config = tb::VerifyConfig::from_file(config_path);
      }
      return report_suites(tb::verify_paper(config), as_json, out_path);
    }
    if (ora->parsed()) {
      tb::OracleSpec spec;
      spec.max_complexity = oracle_n;
      return report_suites(tb::oracle_check(spec), as_json, out_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
