#include "paircoh/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "paircoh/errors.hpp"
#include "paircoh/specfun.hpp"

namespace paircoh {

std::vector<double> PTSpectrum::eigenvalues() const {
  std::vector<double> all(diagonal);
  all.reserve(diagonal.size() + 2 * paired.size());
  for (const auto& p : paired) {
    all.push_back(p.plus);
    all.push_back(p.minus);
  }
  std::sort(all.begin(), all.end());
  return all;
}

double PTSpectrum::trace() const {
  double t = std::accumulate(diagonal.begin(), diagonal.end(), 0.0);
  for (const auto& p : paired) t += p.plus + p.minus;
  return t;
}

double PTSpectrum::min_eigenvalue() const {
  double lo = *std::min_element(diagonal.begin(), diagonal.end());
  for (const auto& p : paired) lo = std::min(lo, p.minus);
  return lo;
}

PTSpectrum pt_spectrum(const SchmidtState& state) {
  const auto c = state.coefficients();
  const std::size_t size = c.size();
  PTSpectrum spec;
  spec.diagonal.resize(size);
  for (std::size_t n = 0; n < size; ++n) spec.diagonal[n] = std::norm(c[n]);
  spec.paired.reserve(size * (size - 1) / 2);
  for (std::size_t n = 0; n < size; ++n) {
    for (std::size_t m = n + 1; m < size; ++m) {
      const double mag = std::abs(c[n]) * std::abs(c[m]);
      spec.paired.push_back({static_cast<int>(n), static_cast<int>(m), mag, -mag,
                             std::arg(c[n] * std::conj(c[m]))});
    }
  }
  return spec;
}

std::vector<double> pair_coherent_pt_eigenvalues(double abs_zeta, int cutoff) {
  if (abs_zeta < 0.0) throw DomainError("pair_coherent_pt_eigenvalues: |zeta| must be >= 0");
  if (cutoff < 0) throw DomainError("pair_coherent_pt_eigenvalues: cutoff must be >= 0");
  const double log_i0 = std::log(specfun::bessel_i(specfun::BesselOrder::Zero, 2.0 * abs_zeta));
  // |zeta|^k / k! as a log, with |zeta|^0 = 1 also at zeta = 0.
  auto log_weight = [&](int k) {
    if (k == 0) return 0.0;
    if (abs_zeta == 0.0) return -std::numeric_limits<double>::infinity();
    return k * std::log(abs_zeta) - specfun::log_factorial(k);
  };
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(cutoff + 1) * static_cast<std::size_t>(cutoff + 1));
  for (int n = 0; n <= cutoff; ++n) {
    out.push_back(std::exp(2.0 * log_weight(n) - log_i0));
    for (int m = n + 1; m <= cutoff; ++m) {
      const double v = std::exp(log_weight(n) + log_weight(m) - log_i0);
      out.push_back(v);
      out.push_back(-v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double negativity(const SchmidtState& state) {
  // sum_m |c_m| * sum_{n<m} |c_n|; avoids the cancellation in
  // ((sum |c|)^2 - sum |c|^2) / 2 for nearly product states.
  double prefix = 0.0;
  double total = 0.0;
  for (const cplx& c : state.coefficients()) {
    const double a = std::abs(c);
    total += a * prefix;
    prefix += a;
  }
  return total;
}

double von_neumann_entropy(const SchmidtState& state, LogBase base) {
  double s = 0.0;
  for (const cplx& c : state.coefficients()) {
    const double p = std::norm(c);
    if (p > 0.0) s -= p * std::log(p);
  }
  return base == LogBase::Bits ? s / std::log(2.0) : s;
}

double correlation_entropy(const SchmidtState& state, LogBase base) {
  return 2.0 * von_neumann_entropy(state, base);
}

double linear_entropy(const SchmidtState& state) {
  double purity = 0.0;
  for (const cplx& c : state.coefficients()) {
    const double p = std::norm(c);
    purity += p * p;
  }
  return 1.0 - purity;
}

EntropyRecord entropies(const SchmidtState& state) {
  const double s = von_neumann_entropy(state);
  return {s, s, 2.0 * s, linear_entropy(state)};
}

}  // namespace paircoh
