#include "redheffer/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <utility>

#include "redheffer/core.hpp"

namespace redheffer {

namespace {

struct Probe {
  double x;
  double value;
};

// Golden-section minimization on [lo, hi] that returns the best *evaluated*
// point, so the result can never be worse than the bracket ends.
template <typename F>
Probe golden_min(const F& f, double lo, double hi, double xtol = 1e-12,
                 int max_iter = 200) {
  constexpr double invphi = 0.61803398874989485;
  Probe best{lo, f(lo)};
  auto consider = [&best](double x, double v) {
    if (v < best.value) best = {x, v};
  };
  consider(hi, f(hi));
  double a = lo;
  double b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  consider(c, fc);
  consider(d, fd);
  for (int it = 0; it < max_iter && (b - a) > xtol; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
      consider(d, fd);
    }
  }
  return best;
}

// Grid minimum with lowest-index tie-breaking. Partitioning across threads
// changes nothing: every point is evaluated identically and chunks are
// merged in index order.
template <typename F>
std::pair<double, int> grid_min(int count, int threads, const F& value_at) {
  const auto scan = [&value_at](int first, int last) {
    double best = value_at(first);
    int best_idx = first;
    for (int i = first + 1; i < last; ++i) {
      const double v = value_at(i);
      if (v < best) {
        best = v;
        best_idx = i;
      }
    }
    return std::pair<double, int>{best, best_idx};
  };
  if (threads <= 1 || count < 2 * threads) {
    return scan(0, count);
  }
  std::vector<std::pair<double, int>> partial(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const int chunk = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int first = t * chunk;
    const int last = std::min(count, first + chunk);
    pool.emplace_back([&partial, &scan, t, first, last] {
      partial[t] = scan(first, last);
    });
  }
  for (auto& th : pool) th.join();
  std::pair<double, int> best = partial[0];
  for (int t = 1; t < threads; ++t) {
    if (partial[t].first < best.first) best = partial[t];
  }
  return best;
}

template <typename F>
GapScan scan_with_refinement(int grid_count, int threads, double domain_hi,
                             const F& f) {
  const double step = domain_hi / (grid_count - 1);
  const auto point = [step](int i) { return i * step; };
  const auto [grid_best, idx] =
      grid_min(grid_count, threads, [&](int i) { return f(point(i)); });
  GapScan result{grid_best, point(idx)};
  const double lo = point(std::max(0, idx - 1));
  const double hi = point(std::min(grid_count - 1, idx + 1));
  const Probe refined = golden_min(f, lo, hi);
  if (refined.value < result.min_value) {
    result.min_value = refined.value;
    result.argmin = refined.x;
  }
  return result;
}

void check_grid(int grid_count, const char* fn) {
  if (grid_count < 2) {
    throw std::domain_error(std::string(fn) + ": grid_count must be >= 2");
  }
}

}  // namespace

double beta_threshold(int n) {
  if (n < 2) throw std::domain_error("beta_threshold: n must be >= 2");
  const double denom =
      std::log1p(1.0 / (4.0 * n - 2.0)) - std::log(partial_product(n, 1.0));
  return std::log(2.0) / denom;
}

double gamma_threshold(int n) {
  if (n < 2) throw std::domain_error("gamma_threshold: n must be >= 2");
  return -std::log(2.0) / std::log(partial_product(n, 1.0));
}

GapScan min_induction_gap(int n, double alpha, int grid_count, int threads) {
  check_grid(grid_count, "min_induction_gap");
  return scan_with_refinement(grid_count, threads, 1.0, [n, alpha](double y) {
    return induction_gap(n, alpha, y);
  });
}

double alpha_threshold(int n, const SolverConfig& cfg) {
  if (n < 2) throw std::domain_error("alpha_threshold: n must be >= 2");
  if (!(cfg.alpha_lo < cfg.alpha_hi) || !(cfg.alpha_tol > 0.0) ||
      cfg.y_grid < 3 || !(cfg.neg_tol > 0.0)) {
    throw std::domain_error("alpha_threshold: invalid solver config");
  }
  const auto gap_negative = [n, &cfg](double alpha) {
    return min_induction_gap(n, alpha, cfg.y_grid).min_value < -cfg.neg_tol;
  };
  if (gap_negative(cfg.alpha_lo) || !gap_negative(cfg.alpha_hi)) {
    throw std::runtime_error(
        "alpha_threshold: predicate does not differ at the bracket ends");
  }
  double lo = cfg.alpha_lo;
  double hi = cfg.alpha_hi;
  while (hi - lo > cfg.alpha_tol) {
    const double mid = 0.5 * (lo + hi);
    if (gap_negative(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

MarginReport certify_inequality(double alpha, int grid_count, int threads) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("certify_inequality: alpha must be positive");
  }
  check_grid(grid_count, "certify_inequality");
  const GapScan scan = scan_with_refinement(
      grid_count, threads, 0.5, [alpha](double x) { return margin(alpha, x); });
  return MarginReport{alpha, grid_count, scan.min_value, scan.argmin, true};
}

std::optional<double> find_violation(double alpha) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("find_violation: alpha must be positive");
  }
  double best = margin(alpha, 0.25);  // x = 1/2 - 2^-2
  int best_j = 2;
  for (int j = 3; j <= 40; ++j) {
    const double x = 0.5 - std::ldexp(1.0, -j);
    const double m = margin(alpha, x);
    if (m < best) {
      best = m;
      best_j = j;
    }
  }
  double best_x = 0.5 - std::ldexp(1.0, -best_j);
  const double lo = 0.5 - std::ldexp(1.0, -(best_j - 1));
  const double hi = 0.5 - std::ldexp(1.0, -(best_j + 1));
  const Probe refined =
      golden_min([alpha](double x) { return margin(alpha, x); }, lo, hi);
  if (refined.value < best) {
    best = refined.value;
    best_x = refined.x;
  }
  if (best < 0.0) return best_x;
  return std::nullopt;
}

bool concavity_check(double alpha, int grid_count) {
  if (!(alpha > 7.0 / 9.0 && alpha < 3.0)) {
    throw std::domain_error("concavity_check: alpha must lie in (7/9, 3)");
  }
  if (grid_count < 3) {
    throw std::domain_error("concavity_check: grid_count must be >= 3");
  }
  const double step = 1.0 / (grid_count - 1);
  std::vector<double> g(grid_count);
  for (int i = 0; i < grid_count; ++i) {
    g[i] = induction_gap(2, alpha, i * step);
  }
  for (int i = 1; i + 1 < grid_count; ++i) {
    if (g[i + 1] - 2.0 * g[i] + g[i - 1] > 1e-10) return false;
  }
  return true;
}

std::vector<ThresholdRow> threshold_table(int n_max, const SolverConfig& cfg) {
  if (n_max < 2) throw std::domain_error("threshold_table: n_max must be >= 2");
  std::vector<ThresholdRow> rows;
  rows.reserve(n_max - 1);
  for (int n = 2; n <= n_max; ++n) {
    ThresholdRow row;
    row.n = n;
    row.alpha_n = alpha_threshold(n, cfg);
    row.beta_n = beta_threshold(n);
    row.gamma_n = gamma_threshold(n);
    row.alpha_eq_beta = std::fabs(row.alpha_n - row.beta_n) < kAlphaBetaTol;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace redheffer
