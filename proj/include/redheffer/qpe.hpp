#pragma once

#include <complex>
#include <cstdint>
#include <vector>

// State-vector simulation of quantum phase estimation: the phase state
// |psi_n(w)> = 2^{-n/2} sum_y e^{2 pi i w y} |y>, the quantum Fourier
// transform and its inverse, and the outcome distribution of measuring
// QFT^-1 |psi_n(w)> computed two independent ways (simulation and closed
// form), together with the 8/pi^2 success bound report.
//
// Phases are fractions of a full turn; any real value is wrapped mod 1 on
// entry. States are immutable values; transforms return new vectors.

namespace redheffer::qpe {

// Amplitude budget: 2^24 complex doubles (256 MiB) per state.
inline constexpr int kMaxQubits = 24;

struct StateVector {
  int num_qubits = 0;
  std::vector<std::complex<double>> amplitudes;

  double norm() const;
};

StateVector basis_state(int num_qubits, std::int64_t x);

// Amplitude at index y is e^{2 pi i w y} / sqrt(2^n). The phase w*y is
// reduced mod 1 in extended precision before the complex exponential, so
// per-amplitude accuracy stays at a few ulp even for y ~ 2^24.
StateVector phase_state(int num_qubits, double phase);

// Unitary with kernel e^{+2 pi i x y / 2^n} / sqrt(2^n); maps |x> to
// phase_state(n, x/2^n). Radix-2 factorization, O(n 2^n).
StateVector qft(const StateVector& state);

// Inverse transform, kernel e^{-2 pi i x y / 2^n} / sqrt(2^n).
StateVector inverse_qft(const StateVector& state);

// Reference implementations by direct double sum, O(4^n). The fast
// transforms above must match these within 1e-12 per amplitude.
StateVector qft_direct(const StateVector& state);
StateVector inverse_qft_direct(const StateVector& state);

// Wrapped phase error: the representative of (w - x/2^n) mod 1 in
// (-1/2, 1/2]; an exact tie at distance 1/2 resolves to +1/2.
double phase_error(double phase, int num_qubits, std::int64_t x);

// Outcome probability sin^2(pi 2^n D)/(2^{2n} sin^2(pi D)) with
// D = phase_error(w, n, x); the removable singularity at D = 0 takes the
// limit value 1.
double closed_form_prob(int num_qubits, double phase, std::int64_t x);

struct OutcomeDistribution {
  int num_qubits = 0;
  double phase = 0.0;
  std::vector<double> probs;
};

// |amplitude|^2 of inverse_qft(phase_state(n, w)): the simulated route.
OutcomeDistribution outcome_distribution(int num_qubits, double phase);

struct SuccessReport {
  double phase = 0.0;
  int num_qubits = 0;
  std::int64_t x_lo = 0;  // grid points with |phase error| < 2^-n;
  std::int64_t x_hi = 0;  // x_hi == x_lo (and p_hi = 0) for exact phases
  double p_lo = 0.0;
  double p_hi = 0.0;
  double success_prob = 0.0;
  double bound = 0.0;  // 8/pi^2
  bool satisfied = false;
};

// Identifies the one or two grid points within 2^-n of the phase and sums
// their closed-form probabilities. The closed form and the simulated route
// are certified against each other separately.
SuccessReport success_probability(int num_qubits, double phase);

}  // namespace redheffer::qpe
