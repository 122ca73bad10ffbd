// Command-line front end: every computation is a subcommand emitting a CSV
// or JSON report with deterministic formatting. Exit codes: 0 = all checks
// passed, 1 = a verified bound/inequality failed, 2 = usage/domain error.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "redheffer/core.hpp"
#include "redheffer/qpe.hpp"
#include "redheffer/thresholds.hpp"

namespace {

constexpr double kCertifyTol = 1e-12;
constexpr double kCorollaryTol = 1e-9;

using Cell =
    std::variant<std::monostate, double, long long, bool, std::string>;
using Row = std::vector<std::pair<std::string, Cell>>;

struct OutputConfig {
  std::string format = "csv";
  std::string out_path;  // empty = stdout
  int precision = 17;
};

std::string format_double(double v, int precision) {
  char buf[64];
  std::to_chars_result res{};
  if (precision >= 17) {
    // shortest representation that round-trips
    res = std::to_chars(buf, buf + sizeof(buf), v);
  } else {
    res = std::to_chars(buf, buf + sizeof(buf), v,
                        std::chars_format::general, precision);
  }
  return std::string(buf, res.ptr);
}

std::string format_cell(const Cell& cell, int precision, bool json) {
  if (std::holds_alternative<std::monostate>(cell)) {
    return json ? "null" : "";
  }
  if (const auto* d = std::get_if<double>(&cell)) {
    return format_double(*d, precision);
  }
  if (const auto* i = std::get_if<long long>(&cell)) {
    return std::to_string(*i);
  }
  if (const auto* b = std::get_if<bool>(&cell)) {
    return *b ? "true" : "false";
  }
  const auto& s = std::get<std::string>(cell);
  return json ? "\"" + s + "\"" : s;
}

void write_csv(std::ostream& os, const std::vector<Row>& rows,
               int precision) {
  if (rows.empty()) return;
  for (std::size_t i = 0; i < rows.front().size(); ++i) {
    if (i > 0) os << ',';
    os << rows.front()[i].first;
  }
  os << '\n';
  for (const Row& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) os << ',';
      os << format_cell(row[i].second, precision, false);
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<Row>& rows, int precision,
                bool as_array) {
  const auto write_object = [&os, precision](const Row& row,
                                             const char* indent) {
    os << "{\n";
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << indent << "  \"" << row[i].first
         << "\": " << format_cell(row[i].second, precision, true);
      os << (i + 1 < row.size() ? ",\n" : "\n");
    }
    os << indent << "}";
  };
  if (as_array) {
    os << "[\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
      os << "  ";
      write_object(rows[r], "  ");
      os << (r + 1 < rows.size() ? ",\n" : "\n");
    }
    os << "]\n";
  } else {
    write_object(rows.front(), "");
    os << "\n";
  }
}

void emit(const std::vector<Row>& rows, bool as_array,
          const OutputConfig& cfg) {
  std::ofstream file;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      throw std::runtime_error("cannot open output file: " + cfg.out_path);
    }
  }
  std::ostream& os = cfg.out_path.empty() ? std::cout : file;
  if (cfg.format == "json") {
    write_json(os, rows, cfg.precision, as_array);
  } else {
    write_csv(os, rows, cfg.precision);
  }
}

void add_output_options(CLI::App* sub, OutputConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", cfg.out_path, "Write the report to a file");
  sub->add_option("--precision", cfg.precision,
                  "Significant digits (17 = shortest round-trip)")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
}

void write_distribution_csv(const std::string& path, int qubits, double phase,
                            int precision) {
  const redheffer::qpe::OutcomeDistribution sim =
      redheffer::qpe::outcome_distribution(qubits, phase);
  std::ofstream os(path);
  if (!os) {
    throw std::runtime_error("cannot open distribution file: " + path);
  }
  os << "x,delta,p_closed,p_sim,abs_diff\n";
  for (std::int64_t x = 0;
       x < static_cast<std::int64_t>(sim.probs.size()); ++x) {
    const double delta = redheffer::qpe::phase_error(phase, qubits, x);
    const double p_closed =
        redheffer::qpe::closed_form_prob(qubits, phase, x);
    const double p_sim = sim.probs[static_cast<std::size_t>(x)];
    os << x << ',' << format_double(delta, precision) << ','
       << format_double(p_closed, precision) << ','
       << format_double(p_sim, precision) << ','
       << format_double(std::fabs(p_sim - p_closed), precision) << '\n';
  }
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{
      "Numerical toolkit for the generalized Redheffer inequality and the "
      "phase-estimation success bound"};
  app.require_subcommand(1);

  OutputConfig out;

  auto* cmd_thresholds = app.add_subcommand(
      "thresholds", "Threshold table: numeric alpha_n, beta_n, gamma_n");
  int n_max = 2;
  cmd_thresholds->add_option("--n-max", n_max, "Largest product index")
      ->required()
      ->check(CLI::Range(2, 1000000));
  add_output_options(cmd_thresholds, out);

  auto* cmd_verify = app.add_subcommand(
      "verify", "Minimum margin of the inequality over a grid of [0, 1/2]");
  double alpha = 0.0;
  int grid = 100001;
  int threads = 1;
  cmd_verify->add_option("--alpha", alpha, "Exponent")->required();
  cmd_verify->add_option("--grid", grid, "Grid point count")
      ->capture_default_str();
  cmd_verify->add_option("--threads", threads, "Worker threads for the scan")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  add_output_options(cmd_verify, out);

  auto* cmd_gscan = app.add_subcommand(
      "gscan", "Minimum of the induction gap G_{n,alpha} over [0, 1]");
  int gscan_n = 2;
  int gscan_grid = 4097;
  cmd_gscan->add_option("--n", gscan_n, "Product index")->required();
  cmd_gscan->add_option("--alpha", alpha, "Exponent")->required();
  cmd_gscan->add_option("--grid", gscan_grid, "Grid point count")
      ->capture_default_str();
  cmd_gscan->add_option("--threads", threads, "Worker threads for the scan")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  add_output_options(cmd_gscan, out);

  auto* cmd_sharpness = app.add_subcommand(
      "sharpness", "Search for a point violating the inequality");
  cmd_sharpness->add_option("--alpha", alpha, "Exponent")->required();
  add_output_options(cmd_sharpness, out);

  auto* cmd_corollary = app.add_subcommand(
      "corollary",
      "Minimum of sin^2(pi t)(1/t^2 + 1/(1-t)^2) over an interior grid");
  int corollary_grid = 100001;
  cmd_corollary->add_option("--grid", corollary_grid, "Grid point count")
      ->capture_default_str();
  add_output_options(cmd_corollary, out);

  auto* cmd_qpe = app.add_subcommand(
      "qpe", "Phase-estimation outcome probabilities and the 8/pi^2 bound");
  int qubits = 1;
  double phase = 0.0;
  std::string dist_path;
  cmd_qpe->add_option("--qubits", qubits, "Register size")
      ->required()
      ->check(CLI::Range(1, redheffer::qpe::kMaxQubits));
  cmd_qpe->add_option("--phase", phase, "Phase in [0, 1)")->required();
  cmd_qpe->add_option("--dist", dist_path,
                      "Write the full outcome distribution CSV here");
  add_output_options(cmd_qpe, out);

  auto* cmd_constants =
      app.add_subcommand("constants", "Named constants at full precision");
  add_output_options(cmd_constants, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    if (cmd_thresholds->parsed()) {
      std::vector<Row> rows;
      for (const redheffer::ThresholdRow& r :
           redheffer::threshold_table(n_max)) {
        rows.push_back(Row{{"n", static_cast<long long>(r.n)},
                           {"alpha_n", r.alpha_n},
                           {"beta_n", r.beta_n},
                           {"gamma_n", r.gamma_n},
                           {"alpha_eq_beta", r.alpha_eq_beta}});
      }
      emit(rows, true, out);
      return 0;
    }

    if (cmd_verify->parsed()) {
      const redheffer::MarginReport report =
          redheffer::certify_inequality(alpha, grid, threads);
      const bool pass = report.min_margin >= -kCertifyTol;
      emit({Row{{"alpha", report.alpha},
                {"grid", static_cast<long long>(report.grid_count)},
                {"min_margin", report.min_margin},
                {"argmin_x", report.argmin_x},
                {"pass", pass}}},
           false, out);
      return pass ? 0 : 1;
    }

    if (cmd_gscan->parsed()) {
      const redheffer::GapScan scan =
          redheffer::min_induction_gap(gscan_n, alpha, gscan_grid, threads);
      const bool pass = scan.min_value >= -kCertifyTol;
      emit({Row{{"n", static_cast<long long>(gscan_n)},
                {"alpha", alpha},
                {"min_g", scan.min_value},
                {"argmin_y", scan.argmin},
                {"pass", pass}}},
           false, out);
      return pass ? 0 : 1;
    }

    if (cmd_sharpness->parsed()) {
      const std::optional<double> witness = redheffer::find_violation(alpha);
      Row row{{"alpha", alpha},
              {"witness_x", Cell{}},
              {"margin_at_witness", Cell{}}};
      if (witness) {
        row[1].second = *witness;
        row[2].second = redheffer::margin(alpha, *witness);
      }
      emit({row}, false, out);
      return witness ? 1 : 0;
    }

    if (cmd_corollary->parsed()) {
      if (corollary_grid < 1) {
        throw std::domain_error("corollary: grid must be >= 1");
      }
      // interior grid theta_k = k/(N+1), k = 1..N: the endpoints 0 and 1
      // are outside the domain
      double min_lhs = redheffer::corollary_lhs(1.0 / (corollary_grid + 1.0));
      double argmin = 1.0 / (corollary_grid + 1.0);
      for (int k = 2; k <= corollary_grid; ++k) {
        const double theta = k / (corollary_grid + 1.0);
        const double v = redheffer::corollary_lhs(theta);
        if (v < min_lhs) {
          min_lhs = v;
          argmin = theta;
        }
      }
      const bool pass = min_lhs >= 8.0 - kCorollaryTol;
      emit({Row{{"min_lhs", min_lhs},
                {"argmin_theta", argmin},
                {"pass", pass}}},
           false, out);
      return pass ? 0 : 1;
    }

    if (cmd_qpe->parsed()) {
      const redheffer::qpe::SuccessReport report =
          redheffer::qpe::success_probability(qubits, phase);
      if (!dist_path.empty()) {
        write_distribution_csv(dist_path, qubits, report.phase,
                               out.precision);
      }
      emit({Row{{"n", static_cast<long long>(report.num_qubits)},
                {"w", report.phase},
                {"x_lo", static_cast<long long>(report.x_lo)},
                {"x_hi", static_cast<long long>(report.x_hi)},
                {"p_lo", report.p_lo},
                {"p_hi", report.p_hi},
                {"success_prob", report.success_prob},
                {"bound", report.bound},
                {"satisfied", report.satisfied}}},
           false, out);
      return report.satisfied ? 0 : 1;
    }

    if (cmd_constants->parsed()) {
      emit({Row{{"alpha_t", redheffer::alpha_sharp()},
                {"success_bound", redheffer::success_bound()},
                {"alpha_2", redheffer::alpha_two()},
                {"product_limit", redheffer::product_limit()}}},
           false, out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

int main(int argc, char** argv) { return run(argc, argv); }
