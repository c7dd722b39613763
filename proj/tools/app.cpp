#include "app.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "format.hpp"
#include "uwca/verification.hpp"

namespace uwca::cli {

namespace {

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') {
    return fallback;
  }
  const Index parsed = parse_index(raw);  // throws on garbage
  if (parsed > std::uint64_t{1} << 62) {
    throw std::invalid_argument(std::string(name) + " is absurdly large");
  }
  return parsed.convert_to<std::uint64_t>();
}

// Usage-level failure: bad argument, over-budget request, unreadable flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Index parse_argument(const std::string& text, const char* what) {
  try {
    return parse_index(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(what) + " must be a non-negative decimal integer, got '" +
                     text + "'");
  }
}

int cmd_born(const std::string& n_text, std::ostream& out) {
  out << cells_born(parse_argument(n_text, "n")).str() << "\n";
  return kExitOk;
}

int cmd_total(const std::string& n_text, std::ostream& out) {
  out << total_cells(parse_argument(n_text, "n")).str() << "\n";
  return kExitOk;
}

int cmd_quad(const std::string& m_text, const std::string& k_text,
             std::ostream& out) {
  const Index m = parse_argument(m_text, "m");
  const Index k = parse_argument(k_text, "k");
  if (m < 1) {
    throw UsageError("m must be >= 1");
  }
  // The quadratic validates k's range before n is materialized.
  const CellCount u_m = total_cells_quadratic(DyadicForm{m, k});
  const Index n = m << k.convert_to<unsigned>();
  out << n.str() << " " << u_m.str() << "\n";
  return kExitOk;
}

int cmd_table(const std::vector<std::string>& m_texts, std::uint32_t k_max,
              const std::string& format_name, std::ostream& out) {
  std::vector<Index> multipliers;
  for (const std::string& text : m_texts) {
    const Index m = parse_argument(text, "--m entry");
    if (m < 1) {
      throw UsageError("--m entries must be >= 1");
    }
    multipliers.push_back(m);
  }
  static const std::map<std::string, TableFormat> kFormats = {
      {"pretty", TableFormat::pretty},
      {"csv", TableFormat::csv},
      {"tsv", TableFormat::tsv},
      {"json", TableFormat::json}};
  const auto it = kFormats.find(format_name);
  if (it == kFormats.end()) {
    throw UsageError("unknown table format '" + format_name + "'");
  }
  out << format_table(multipliers, k_max, it->second);
  return kExitOk;
}

int cmd_simulate(const std::string& n_text, const std::string& render,
                 const std::string& out_path, bool naive,
                 const Budgets& budgets, std::ostream& out,
                 std::ostream& err) {
  const Index n = parse_argument(n_text, "n");
  if (n > budgets.simulation) {
    throw UsageError("generation " + n.str() +
                     " exceeds the simulation budget " +
                     std::to_string(budgets.simulation) +
                     " (override with UWCA_SIM_BUDGET)");
  }
  const AutomatonState state =
      run_to(n, budgets.simulation, naive ? StepMode::naive : StepMode::frontier);

  // Self-check against the closed form is always on.
  const CellCount expected = total_cells(n);
  const CellCount simulated(state.on_set.size());
  if (simulated != expected) {
    err << "self-check failed: simulated " << simulated.str()
        << " cells, closed form says " << expected.str() << "\n";
    return kExitCheckFailed;
  }

  const std::string summary =
      "generation=" + n.str() + " on=" + simulated.str() + "\n";

  if (render.empty()) {
    out << summary;
    return kExitOk;
  }
  if (state.on_set.empty()) {
    throw UsageError("nothing to render at generation 0");
  }
  const std::string image =
      render == "pbm" ? render_pbm(state) : render_text(state);
  if (out_path.empty()) {
    // Keep stdout clean for the image; the summary moves to stderr.
    err << summary;
    out << image;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      throw UsageError("cannot write to '" + out_path + "'");
    }
    file << image;
    out << summary;
  }
  return kExitOk;
}

int cmd_verify(const std::string& max_n_text, std::uint32_t m_max,
               std::uint32_t k_max, const std::string& bfile_path,
               const std::string& bfile_series_name,
               const std::string& bfile_offset_text, bool as_json,
               const Budgets& budgets, std::ostream& out, std::ostream& err) {
  const Index max_n = parse_argument(max_n_text, "--max-n");
  if (max_n > budgets.simulation) {
    throw UsageError("--max-n " + max_n.str() +
                     " exceeds the simulation budget " +
                     std::to_string(budgets.simulation) +
                     " (override with UWCA_SIM_BUDGET)");
  }

  std::vector<VerificationReport> reports;
  auto [rows, table_report] = reproduce_table1(8);
  reports.push_back(std::move(table_report));
  reports.push_back(verify_sim_vs_formula(max_n, budgets.simulation));
  reports.push_back(verify_factorization(m_max, k_max));
  reports.push_back(verify_upper_bound(max_n < 1 ? Index(1) : max_n));

  if (!bfile_path.empty()) {
    BFileSeries series;
    if (bfile_series_name == "a130665") {
      series = BFileSeries::a130665;
    } else if (bfile_series_name == "total") {
      series = BFileSeries::total_cells;
    } else {
      throw UsageError("unknown b-file series '" + bfile_series_name + "'");
    }
    Index offset = 0;
    if (!bfile_offset_text.empty()) {
      offset = parse_argument(bfile_offset_text, "--bfile-offset");
    }
    try {
      reports.push_back(crosscheck_bfile(bfile_path, series, offset));
    } catch (const ParseError& e) {
      err << "b-file " << bfile_path << ": " << e.what() << "\n";
      return kExitCheckFailed;
    } catch (const std::runtime_error& e) {
      err << e.what() << "\n";
      return kExitCheckFailed;
    }
  }

  out << (as_json ? format_reports_json(reports) : format_reports_text(reports));
  bool all_passed = true;
  for (const VerificationReport& report : reports) {
    all_passed = all_passed && report.passed();
  }
  return all_passed ? kExitOk : kExitCheckFailed;
}

int cmd_scan(std::uint32_t k_max, bool as_json, const Budgets& budgets,
             std::ostream& out) {
  if (k_max > budgets.scan) {
    throw UsageError("--k-max " + std::to_string(k_max) +
                     " exceeds the scan budget " + std::to_string(budgets.scan) +
                     " (override with UWCA_SCAN_BUDGET)");
  }
  const RatioScanReport report = ratio_scan(k_max, budgets.scan);
  out << (as_json ? format_scan_json(report) : format_scan_text(report));
  return kExitOk;
}

}  // namespace

Budgets budgets_from_env() {
  Budgets budgets;
  budgets.simulation = env_or("UWCA_SIM_BUDGET", kDefaultSimulationBudget);
  budgets.scan =
      static_cast<std::uint32_t>(env_or("UWCA_SCAN_BUDGET", kDefaultScanBudget));
  return budgets;
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Ulam-Warburton cellular automaton: exact counts, closed forms, "
               "simulation and cross-checks"};
  app.require_subcommand(1);

  std::string n_text, m_text, k_text;
  std::vector<std::string> table_m = {"1", "3", "5", "7"};
  std::uint32_t table_k_max = 8;
  std::string table_format = "csv";
  std::string render, out_path;
  bool naive = false;
  std::string verify_max_n = "256";
  std::uint32_t verify_m_max = 64;
  std::uint32_t verify_k_max = 16;
  std::string bfile_path, bfile_offset;
  std::string bfile_series = "a130665";
  bool verify_json = false;
  std::uint32_t scan_k_max = 12;
  bool scan_json = false;

  CLI::App* born = app.add_subcommand("born", "Cells born at stage n, u(n)");
  born->add_option("n", n_text, "generation (any length)")->required();

  CLI::App* total =
      app.add_subcommand("total", "Total ON cells through stage n, U(n)");
  total->add_option("n", n_text, "generation (any length)")->required();

  CLI::App* quad = app.add_subcommand(
      "quad", "n_m and U_m(n_m) for n_m = m*2^k via the quadratic family");
  quad->add_option("m", m_text, "multiplier, >= 1")->required();
  quad->add_option("k", k_text, "exponent of 2, >= 0")->required();

  CLI::App* table =
      app.add_subcommand("table", "Quadratic-family table U_m, k = 0..k_max");
  table->add_option("--m", table_m, "multipliers")
      ->delimiter(',')
      ->capture_default_str();
  table->add_option("--k-max", table_k_max, "last row")->capture_default_str();
  table->add_option("--format", table_format, "pretty|csv|tsv|json")
      ->capture_default_str();

  CLI::App* simulate =
      app.add_subcommand("simulate", "Run the sparse-grid automaton to n");
  simulate->add_option("n", n_text, "generations to run")->required();
  simulate->add_option("--render", render, "text|pbm")
      ->check(CLI::IsMember({"text", "pbm"}));
  simulate->add_option("--out", out_path, "write the render here instead of stdout");
  simulate->add_flag("--naive", naive, "use the no-frontier oracle stepper");

  CLI::App* verify =
      app.add_subcommand("verify", "Cross-check closed forms, simulation and "
                                   "reference values");
  verify->add_option("--max-n", verify_max_n, "simulation sweep bound")
      ->capture_default_str();
  verify->add_option("--m-max", verify_m_max, "factorization sweep: multipliers")
      ->capture_default_str();
  verify->add_option("--k-max", verify_k_max, "factorization sweep: exponents")
      ->capture_default_str();
  verify->add_option("--bfile", bfile_path, "cross-check a local b-file");
  verify->add_option("--bfile-series", bfile_series, "a130665|total")
      ->capture_default_str();
  verify->add_option("--bfile-offset", bfile_offset,
                     "add to b-file indices before lookup");
  verify->add_flag("--json", verify_json, "machine-readable report");

  CLI::App* scan = app.add_subcommand(
      "scan", "Exact min/max of U(n)/n^2 over blocks [2^k, 2^(k+1))");
  scan->add_option("--k-max", scan_k_max, "last block")->capture_default_str();
  scan->add_flag("--json", scan_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const Budgets budgets = budgets_from_env();
    if (born->parsed()) {
      return cmd_born(n_text, out);
    }
    if (total->parsed()) {
      return cmd_total(n_text, out);
    }
    if (quad->parsed()) {
      return cmd_quad(m_text, k_text, out);
    }
    if (table->parsed()) {
      return cmd_table(table_m, table_k_max, table_format, out);
    }
    if (simulate->parsed()) {
      return cmd_simulate(n_text, render, out_path, naive, budgets, out, err);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_max_n, verify_m_max, verify_k_max, bfile_path,
                        bfile_series, bfile_offset, verify_json, budgets, out,
                        err);
    }
    if (scan->parsed()) {
      return cmd_scan(scan_k_max, scan_json, budgets, out);
    }
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  err << "no subcommand\n";
  return kExitUsage;
}

}  // namespace uwca::cli
