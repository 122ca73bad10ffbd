#include "redheffer/qpe.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "redheffer/core.hpp"

namespace redheffer::qpe {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

void check_qubits(int n, const char* fn) {
  if (n < 1) {
    throw std::domain_error(std::string(fn) + ": need at least one qubit");
  }
  if (n > kMaxQubits) {
    throw std::length_error(std::string(fn) + ": amplitude budget is 2^" +
                            std::to_string(kMaxQubits));
  }
}

void check_state(const StateVector& s, const char* fn) {
  check_qubits(s.num_qubits, fn);
  if (s.amplitudes.size() != (std::size_t{1} << s.num_qubits)) {
    throw std::domain_error(std::string(fn) +
                            ": amplitude count must be 2^num_qubits");
  }
}

double wrap_phase(double w) {
  if (!std::isfinite(w)) {
    throw std::domain_error("phase must be finite");
  }
  double r = w - std::floor(w);
  if (r >= 1.0) r = 0.0;  // w just below an integer can round up
  return r;
}

// Fractional part of w*y to full double precision: the product is split
// into rounded value + fma residual, and only the rounded part goes
// through fmod (which is exact).
double product_mod_one(double w, double y) {
  const double p = w * y;
  const double err = std::fma(w, y, -p);
  double frac = std::fmod(p, 1.0) + err;
  frac -= std::floor(frac);
  if (frac >= 1.0) frac = 0.0;
  return frac;
}

StateVector transform_fft(const StateVector& state, double sign) {
  StateVector out = state;
  auto& a = out.amplitudes;
  const std::size_t size = a.size();

  for (std::size_t i = 1, j = 0; i < size; ++i) {
    std::size_t bit = size >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  std::vector<std::complex<double>> twiddle;
  for (std::size_t len = 2; len <= size; len <<= 1) {
    const std::size_t half = len >> 1;
    twiddle.resize(half);
    for (std::size_t k = 0; k < half; ++k) {
      // k/len is an exact dyadic rational, so the angle is accurate to one
      // rounding regardless of len.
      twiddle[k] = std::polar(
          1.0, sign * kTwoPi *
                   (static_cast<double>(k) / static_cast<double>(len)));
    }
    for (std::size_t start = 0; start < size; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const std::complex<double> u = a[start + k];
        const std::complex<double> v = a[start + k + half] * twiddle[k];
        a[start + k] = u + v;
        a[start + k + half] = u - v;
      }
    }
  }

  const double scale = 1.0 / std::sqrt(static_cast<double>(size));
  for (auto& amp : a) amp *= scale;
  return out;
}

StateVector transform_direct(const StateVector& state, double sign) {
  const std::size_t size = state.amplitudes.size();
  const std::uint64_t mask = size - 1;
  StateVector out;
  out.num_qubits = state.num_qubits;
  out.amplitudes.resize(size);
  const double scale = 1.0 / std::sqrt(static_cast<double>(size));
  for (std::uint64_t x = 0; x < size; ++x) {
    std::complex<double> sum = 0.0;
    for (std::uint64_t y = 0; y < size; ++y) {
      // x*y mod 2^n stays exact in 64-bit integers for n <= 24.
      const std::uint64_t k = (x * y) & mask;
      const double angle =
          sign * kTwoPi * (static_cast<double>(k) / static_cast<double>(size));
      sum += state.amplitudes[y] * std::polar(1.0, angle);
    }
    out.amplitudes[x] = scale * sum;
  }
  return out;
}

}  // namespace

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& amp : amplitudes) sum += std::norm(amp);
  return std::sqrt(sum);
}

StateVector basis_state(int num_qubits, std::int64_t x) {
  check_qubits(num_qubits, "basis_state");
  const std::int64_t size = std::int64_t{1} << num_qubits;
  if (x < 0 || x >= size) {
    throw std::domain_error("basis_state: index out of range");
  }
  StateVector s;
  s.num_qubits = num_qubits;
  s.amplitudes.assign(static_cast<std::size_t>(size), 0.0);
  s.amplitudes[static_cast<std::size_t>(x)] = 1.0;
  return s;
}

StateVector phase_state(int num_qubits, double phase) {
  check_qubits(num_qubits, "phase_state");
  const double w = wrap_phase(phase);
  const std::size_t size = std::size_t{1} << num_qubits;
  StateVector s;
  s.num_qubits = num_qubits;
  s.amplitudes.resize(size);
  const double scale = 1.0 / std::sqrt(static_cast<double>(size));
  for (std::size_t y = 0; y < size; ++y) {
    const double frac = product_mod_one(w, static_cast<double>(y));
    s.amplitudes[y] = std::polar(scale, kTwoPi * frac);
  }
  return s;
}

StateVector qft(const StateVector& state) {
  check_state(state, "qft");
  return transform_fft(state, +1.0);
}

StateVector inverse_qft(const StateVector& state) {
  check_state(state, "inverse_qft");
  return transform_fft(state, -1.0);
}

StateVector qft_direct(const StateVector& state) {
  check_state(state, "qft_direct");
  return transform_direct(state, +1.0);
}

StateVector inverse_qft_direct(const StateVector& state) {
  check_state(state, "inverse_qft_direct");
  return transform_direct(state, -1.0);
}

double phase_error(double phase, int num_qubits, std::int64_t x) {
  check_qubits(num_qubits, "phase_error");
  const std::int64_t size = std::int64_t{1} << num_qubits;
  if (x < 0 || x >= size) {
    throw std::domain_error("phase_error: x out of range");
  }
  const double d =
      wrap_phase(phase) - std::ldexp(static_cast<double>(x), -num_qubits);
  // Nearest-integer reduction into (-1/2, 1/2]; ceil(d - 1/2) sends the
  // exact tie d = 1/2 to +1/2.
  return d - std::ceil(d - 0.5);
}

double closed_form_prob(int num_qubits, double phase, std::int64_t x) {
  const double delta = phase_error(phase, num_qubits, x);
  if (std::fabs(delta) < 1e-15) return 1.0;
  const double denom_sin = std::sin(kPi * delta);
  if (denom_sin == 0.0) return 1.0;
  // 2^n * delta scaled exactly, then reduced mod 2 (the period of
  // sin(pi u) in u) so the argument never loses accuracy for large n.
  const double u = std::fmod(std::ldexp(delta, num_qubits), 2.0);
  const double ratio = std::sin(kPi * u) / std::ldexp(denom_sin, num_qubits);
  return ratio * ratio;
}

OutcomeDistribution outcome_distribution(int num_qubits, double phase) {
  check_qubits(num_qubits, "outcome_distribution");
  const StateVector final_state =
      inverse_qft(phase_state(num_qubits, phase));
  OutcomeDistribution dist;
  dist.num_qubits = num_qubits;
  dist.phase = wrap_phase(phase);
  dist.probs.reserve(final_state.amplitudes.size());
  for (const auto& amp : final_state.amplitudes) {
    dist.probs.push_back(std::norm(amp));
  }
  return dist;
}

SuccessReport success_probability(int num_qubits, double phase) {
  check_qubits(num_qubits, "success_probability");
  const double w = wrap_phase(phase);
  const double scaled = std::ldexp(w, num_qubits);  // 2^n w in [0, 2^n)
  const std::int64_t size = std::int64_t{1} << num_qubits;

  SuccessReport report;
  report.phase = w;
  report.num_qubits = num_qubits;
  report.bound = success_bound();

  const double floor_scaled = std::floor(scaled);
  report.x_lo = static_cast<std::int64_t>(floor_scaled);
  if (scaled == floor_scaled) {
    // Exact grid phase: a single outcome carries probability 1.
    report.x_hi = report.x_lo;
    report.p_lo = closed_form_prob(num_qubits, w, report.x_lo);
    report.p_hi = 0.0;
  } else {
    report.x_hi = (report.x_lo + 1) & (size - 1);
    report.p_lo = closed_form_prob(num_qubits, w, report.x_lo);
    report.p_hi = closed_form_prob(num_qubits, w, report.x_hi);
  }
  report.success_prob = report.p_lo + report.p_hi;
  report.satisfied = report.success_prob >= report.bound - 1e-12;
  return report;
}

}  // namespace redheffer::qpe
