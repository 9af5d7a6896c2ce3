#include "paircoh/specfun.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "paircoh/errors.hpp"

namespace paircoh::specfun {

namespace {

constexpr long double kSeriesCutoff = 1e-17L;
constexpr double kJ0SeriesLimit = 12.0;

long double j0_series(long double x) {
  const long double w = -x * x / 4.0L;
  long double term = 1.0L;
  long double sum = 1.0L;
  long double magnitude = 1.0L;
  for (int k = 1; k < 500; ++k) {
    term *= w / (static_cast<long double>(k) * k);
    sum += term;
    magnitude += std::fabs(term);
    if (std::fabs(term) < kSeriesCutoff * magnitude) break;
  }
  return sum;
}

// Hankel expansion J0(x) = sqrt(2/(pi x)) (P cos chi - Q sin chi),
// chi = x - pi/4, truncated at its smallest term.
double j0_asymptotic(double x) {
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double smallest = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double next = term * (-(2.0 * k - 1) * (2.0 * k - 1)) / (k * 8.0 * x);
    if (std::fabs(next) >= smallest) break;
    term = next;
    smallest = std::fabs(term);
    // a_k / x^k enters P (k even) or Q (k odd) with alternating sign.
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      p += sign * term;
    } else {
      q += sign * term;
    }
    if (smallest < 1e-17) break;
  }
  const double chi = x - kPi / 4.0;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

const std::vector<double>& log_factorial_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kMaxOscillatorLevel + 1);
    long double acc = 0.0L;
    t[0] = 0.0;
    for (int n = 1; n <= kMaxOscillatorLevel; ++n) {
      acc += std::log(static_cast<long double>(n));
      t[n] = static_cast<double>(acc);
    }
    return t;
  }();
  return table;
}

}  // namespace

double bessel_i(BesselOrder order, double x) {
  if (!(x >= 0.0)) {
    throw DomainError("bessel_i: argument must be nonnegative, got " + std::to_string(x));
  }
  const int nu = static_cast<int>(order);
  if (x == 0.0) return nu == 0 ? 1.0 : 0.0;

  const long double half = x / 2.0L;
  const long double quarter_sq = half * half;
  long double term = nu == 0 ? 1.0L : half;
  long double sum = term;
  for (int k = 1; k < 1000; ++k) {
    term *= quarter_sq / (static_cast<long double>(k) * (k + nu));
    sum += term;
    if (term < kSeriesCutoff * sum) break;
  }
  return static_cast<double>(sum);
}

std::complex<double> bessel_i0_quarter_square(std::complex<double> w) {
  // Stop on the absolute series (I_0 of |z|) so cancellation near zeros of
  // the oscillating case cannot stall the loop.
  std::complex<long double> wl(w.real(), w.imag());
  std::complex<long double> term(1.0L, 0.0L);
  std::complex<long double> sum(1.0L, 0.0L);
  long double magnitude = 1.0L;
  for (int k = 1; k < 2000; ++k) {
    term *= wl / static_cast<long double>(static_cast<long double>(k) * k);
    sum += term;
    const long double t = std::abs(term);
    magnitude += t;
    if (t < kSeriesCutoff * magnitude) break;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

double bessel_j0(double x) {
  const double ax = std::fabs(x);
  if (ax <= kJ0SeriesLimit) return static_cast<double>(j0_series(ax));
  return j0_asymptotic(ax);
}

double j0_zero(int k) {
  if (k < 1 || k > 30) {
    throw DomainError("j0_zero: index must lie in [1, 30], got " + std::to_string(k));
  }
  const double guess = (k - 0.25) * kPi;
  double lo = guess - 1.0;
  double hi = guess + 1.0;
  double f_lo = bessel_j0(lo);
  if (f_lo * bessel_j0(hi) > 0.0) {
    throw NumericalError("j0_zero: bracket around asymptotic guess has no sign change");
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = bessel_j0(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void oscillator_eigenfunctions(double x, std::span<double> out) {
  if (out.empty()) return;
  if (out.size() > static_cast<std::size_t>(kMaxOscillatorLevel) + 1) {
    throw DomainError("oscillator_eigenfunctions: level exceeds cap");
  }
  // pi^(-1/4)
  const double psi0 = 0.75112554446494248286 * std::exp(-0.5 * x * x);
  out[0] = psi0;
  if (out.size() == 1) return;
  out[1] = std::sqrt(2.0) * x * psi0;
  for (std::size_t n = 1; n + 1 < out.size(); ++n) {
    const double nd = static_cast<double>(n);
    out[n + 1] = x * std::sqrt(2.0 / (nd + 1.0)) * out[n] - std::sqrt(nd / (nd + 1.0)) * out[n - 1];
  }
}

double oscillator_eigenfunction(int n, double x) {
  if (n < 0 || n > kMaxOscillatorLevel) {
    throw DomainError("oscillator_eigenfunction: level out of range: " + std::to_string(n));
  }
  std::vector<double> psi(static_cast<std::size_t>(n) + 1);
  oscillator_eigenfunctions(x, psi);
  return psi.back();
}

double log_factorial(int n) {
  if (n < 0 || n > 1'000'000) {
    throw DomainError("log_factorial: argument out of range: " + std::to_string(n));
  }
  const auto& table = log_factorial_table();
  if (n <= kMaxOscillatorLevel) return table[static_cast<std::size_t>(n)];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

}  // namespace paircoh::specfun
