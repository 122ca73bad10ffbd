#pragma once

#include <optional>
#include <vector>

// Threshold sequences of the generalized Redheffer inequality and grid
// certification of the inequality itself: closed-form beta_n / gamma_n,
// the bisection solver for the numeric n-threshold alpha_n, minimum-margin
// scans, and the sharpness falsifier for alpha above the critical exponent.

namespace redheffer {

struct SolverConfig {
  double alpha_lo = 0.5;    // bisection bracket: gap nonnegative here
  double alpha_hi = 8.0;    // ... and negative somewhere in [0,1] here
  double alpha_tol = 1e-8;  // bracket width target
  int y_grid = 4097;        // inner minimization grid over [0,1]
  double neg_tol = 1e-13;   // negativity threshold for the predicate
};

// Result of minimizing a function over a grid plus local refinement.
struct GapScan {
  double min_value = 0.0;
  double argmin = 0.0;
};

struct MarginReport {
  double alpha = 0.0;
  int grid_count = 0;
  double min_margin = 0.0;
  double argmin_x = 0.0;
  bool refined = false;
};

struct ThresholdRow {
  int n = 0;
  double alpha_n = 0.0;  // numeric threshold from the bisection solver
  double beta_n = 0.0;   // log 2 / (log(1 + 1/(4n-2)) - log F_n(1))
  double gamma_n = 0.0;  // -log 2 / log F_n(1)
  bool alpha_eq_beta = false;
};

// |alpha_n - beta_n| tolerance for the ThresholdRow equality flag.
inline constexpr double kAlphaBetaTol = 1e-5;

// Closed-form upper bound of the n-threshold, log 2 / (log(1 + 1/(4n-2)) -
// log F_n(1)); strictly increasing with limit alpha_sharp().
double beta_threshold(int n);

// -log 2 / log F_n(1); strictly decreasing with limit alpha_sharp().
double gamma_threshold(int n);

// Minimum of the induction gap G_{n,alpha} over [0,1]: dense grid scan
// followed by golden-section refinement around the grid argmin. Ties break
// to the lowest grid index; results are independent of `threads`.
GapScan min_induction_gap(int n, double alpha, int grid_count, int threads = 1);

// Numeric n-threshold: bisection on alpha with the predicate
// "min_y G_{n,alpha}(y) < -neg_tol". The forced zero at y = 0 is ignored by
// construction (strict negativity below -neg_tol). Throws std::runtime_error
// if the predicate does not differ at the two bracket ends.
double alpha_threshold(int n, const SolverConfig& cfg = {});

// Minimum margin of the inequality over a uniform grid of [0, 1/2]
// (endpoints included) with golden-section refinement around the argmin.
// min_margin >= -1e-12 certifies the inequality at grid resolution.
MarginReport certify_inequality(double alpha, int grid_count, int threads = 1);

// Searches x = 1/2 - 2^-j, j = 2..40, plus golden-section descent around the
// best scan point, for margin(alpha, x) < 0. Violations for alpha above the
// sharp exponent concentrate in a thin layer at x -> 1/2, which uniform
// grids miss.
std::optional<double> find_violation(double alpha);

// True iff every raw central second difference of G_{2,alpha} on the grid
// is <= +1e-10. Valid for alpha in (7/9, 3); concavity actually holds
// exactly when alpha >= 9/11.
bool concavity_check(double alpha, int grid_count);

// Rows for n = 2..n_max.
std::vector<ThresholdRow> threshold_table(int n_max,
                                          const SolverConfig& cfg = {});

}  // namespace redheffer
