#pragma once

// Closed-form building blocks of the generalized Redheffer inequality
//
//     (1 + 4x^2)^{1/alpha} cos(pi x) >= 1 - 4x^2,   x in [0, 1/2]:
//
// truncated cosine products F_n, the induction functional G_{n,alpha} whose
// sign defines the n-thresholds, pointwise margins, and the named constants.
// All functions are pure and thread-safe; domain violations throw
// std::domain_error.

namespace redheffer {

inline constexpr double kPi = 3.14159265358979323846;

// Sharp exponent log 2 / log(4/pi) ~ 2.8694: the largest alpha for which
// the inequality holds on the whole interval.
double alpha_sharp();

// 8/pi^2 ~ 0.81057: the phase-estimation success-probability floor.
double success_bound();

// log 2 / log(21/16) ~ 2.5490: the n = 2 induction threshold.
double alpha_two();

// lim_{n->inf} F_n(1) = pi/4.
double product_limit();

// F_n(y) = prod_{k=2}^{n} (1 - y/(2k-1)^2) for n >= 2, y in [0,1].
// Factors are multiplied in increasing k for reproducibility.
double partial_product(int n, double y);

// F_n'(y)/F_n(y) = -sum_{k=2}^{n} 1/((2k-1)^2 - y); always negative.
// At y = 1 the sum telescopes to -(n-1)/(4n).
double partial_product_log_deriv(int n, double y);

// cos(pi sqrt(y)/2)/(1-y) on [0,1); the removable singularity at y = 1
// takes the limit value pi/4.
double infinite_product(double y);

// G_{n,alpha}(y) = (1+y)^{1/alpha} F_n(y) - (1 + y/(4n-2)).
// Nonnegativity of this gap on [0,1] is what the n-threshold measures.
double induction_gap(int n, double alpha, double y);

// (1+4x^2)^{1/alpha} cos(pi x) - (1-4x^2) for x in [0, 1/2].
// Evaluated cancellation-free near x = 1/2 so the O(t^2) behaviour at the
// endpoint is resolved down to t ~ 1e-12.
double margin(double alpha, double x);

// sin^2(pi theta) (1/theta^2 + 1/(1-theta)^2) for theta in (0,1);
// bounded below by 8 with equality only at theta = 1/2.
double corollary_lhs(double theta);

// (1 - y/(2m+1)^2)(1 + y/(4m-2)) - (1 + y/(4m+2)) for m >= 2, y in [0,1].
double induction_step_residual(int m, double y);

// Quadratic lower bound 3/(2(2m-1)(2m+1)^2) y^2 of the residual above;
// the two agree exactly at y = 0 and y = 1.
double induction_step_residual_bound(int m, double y);

}  // namespace redheffer
