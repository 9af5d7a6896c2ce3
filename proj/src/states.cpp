#include "paircoh/states.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "paircoh/errors.hpp"
#include "paircoh/specfun.hpp"

namespace paircoh {

using specfun::BesselOrder;

const char* to_string(StateKind kind) {
  switch (kind) {
    case StateKind::PairCoherent:
      return "pair-coherent";
    case StateKind::SqueezedVacuum:
      return "squeezed-vacuum";
    case StateKind::Custom:
      return "custom";
  }
  return "unknown";
}

namespace detail {

SchmidtState make_state(std::vector<cplx> coefficients, StateKind kind, std::optional<cplx> zeta,
                        double tail_mass) {
  if (coefficients.empty()) throw DomainError("SchmidtState: empty coefficient list");
  double norm2 = 0.0;
  for (const cplx& c : coefficients) norm2 += std::norm(c);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw DomainError("SchmidtState: coefficients have zero or non-finite norm");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (cplx& c : coefficients) c *= scale;
  return SchmidtState(std::move(coefficients), kind, zeta, tail_mass);
}

}  // namespace detail

SchmidtState::SchmidtState(std::vector<cplx> coefficients, StateKind kind,
                           std::optional<cplx> zeta, double tail_mass)
    : coefficients_(std::move(coefficients)), kind_(kind), zeta_(zeta), tail_mass_(tail_mass) {}

SchmidtState SchmidtState::custom(std::vector<cplx> coefficients) {
  return detail::make_state(std::move(coefficients), StateKind::Custom, std::nullopt, 0.0);
}

std::vector<double> SchmidtState::schmidt_weights() const {
  std::vector<double> p(coefficients_.size());
  for (std::size_t n = 0; n < p.size(); ++n) p[n] = std::norm(coefficients_[n]);
  return p;
}

namespace {

void check_tolerance(double tail_tolerance) {
  if (!(tail_tolerance > 0.0 && tail_tolerance <= 1e-4)) {
    throw DomainError("tail tolerance must lie in (0, 1e-4], got " + std::to_string(tail_tolerance));
  }
}

struct Cutoff {
  int n;
  double tail;
};

// Smallest N whose discarded mass sum_{k>N} |zeta|^(2k)/(k!)^2 / I_0(2|zeta|)
// is certified below tolerance. Once k+1 > |zeta| the ratio
// p_{k+1}/p_k = |zeta|^2/(k+1)^2 is below one and decreasing, so the tail after
// N is bounded by p_{N+1} / (1 - r_{N+1}).
Cutoff pair_coherent_cutoff(double r, double log_i0, double tail_tolerance) {
  if (r == 0.0) return {0, 0.0};
  const double log_r = std::log(r);
  for (int n = 0; n <= kPairCoherentCap; ++n) {
    const int next = n + 1;
    const double ratio = (r / (next + 1.0)) * (r / (next + 1.0));
    if (ratio >= 1.0) continue;
    const double log_p_next = 2.0 * next * log_r - 2.0 * specfun::log_factorial(next) - log_i0;
    const double bound = std::exp(log_p_next) / (1.0 - ratio);
    if (bound < tail_tolerance) return {n, bound};
  }
  throw CapacityError("pair_coherent: truncation would exceed cap of " +
                      std::to_string(kPairCoherentCap));
}

// Coefficients |a|^n |b|^n / n! with phase n (arg a + arg b), evaluated in log
// space from the two magnitudes separately.
std::vector<cplx> log_space_coefficients(double log_mag_per_level, double phase, int cutoff,
                                         double log_norm, bool zero_magnitude) {
  std::vector<cplx> c(static_cast<std::size_t>(cutoff) + 1);
  c[0] = std::exp(-log_norm);
  for (int n = 1; n <= cutoff; ++n) {
    if (zero_magnitude) {
      c[static_cast<std::size_t>(n)] = 0.0;
      continue;
    }
    const double log_mag = n * log_mag_per_level - specfun::log_factorial(n) - log_norm;
    c[static_cast<std::size_t>(n)] = std::polar(std::exp(log_mag), n * phase);
  }
  return c;
}

}  // namespace

SchmidtState pair_coherent(cplx zeta, double tail_tolerance) {
  check_tolerance(tail_tolerance);
  const double r = std::abs(zeta);
  if (!std::isfinite(r) || r > kMaxPairParameter) {
    throw DomainError("pair_coherent: |zeta| must not exceed 50, got " + std::to_string(r));
  }
  const double log_i0 = std::log(specfun::bessel_i(BesselOrder::Zero, 2.0 * r));
  const Cutoff cut = pair_coherent_cutoff(r, log_i0, tail_tolerance);
  const double log_r = r > 0.0 ? std::log(r) : 0.0;
  auto c = log_space_coefficients(log_r, std::arg(zeta), cut.n, 0.5 * log_i0, r == 0.0);
  return detail::make_state(std::move(c), StateKind::PairCoherent, zeta, cut.tail);
}

SchmidtState squeezed_vacuum(cplx zeta, double tail_tolerance) {
  check_tolerance(tail_tolerance);
  const double t = std::abs(zeta);
  if (!(t < 1.0)) {
    throw DomainError("squeezed vacuum undefined at or beyond unit parameter (|zeta| = " +
                      std::to_string(t) + ")");
  }
  int cutoff = 0;
  double tail = 0.0;
  if (t > 0.0) {
    // Discarded mass after N is exactly t^(2(N+1)).
    const double log_t2 = 2.0 * std::log(t);
    const double needed = std::log(tail_tolerance) / log_t2;  // N + 1 > needed
    if (needed > kSqueezedVacuumCap) {
      throw CapacityError("squeezed_vacuum: |zeta| = " + std::to_string(t) +
                          " needs a cutoff beyond " + std::to_string(kSqueezedVacuumCap));
    }
    cutoff = static_cast<int>(std::floor(needed));
    tail = std::exp(log_t2 * (cutoff + 1));
  }
  std::vector<cplx> c(static_cast<std::size_t>(cutoff) + 1);
  const double amp0 = std::sqrt(1.0 - t * t);
  const double phase = std::arg(zeta);
  for (int n = 0; n <= cutoff; ++n) {
    c[static_cast<std::size_t>(n)] = std::polar(amp0 * std::pow(t, n), n * phase);
  }
  return detail::make_state(std::move(c), StateKind::SqueezedVacuum, zeta, tail);
}

SchmidtState project_pair_from_coherent(cplx alpha, cplx beta, double tail_tolerance) {
  check_tolerance(tail_tolerance);
  const double ra = std::abs(alpha);
  const double rb = std::abs(beta);
  if (!(ra * rb <= kMaxPairParameter)) {
    throw DomainError("project_pair_from_coherent: |alpha beta| must not exceed 50");
  }
  // <n,n|alpha,beta> = exp(-(|a|^2+|b|^2)/2) a^n b^n / sqrt(n! n!). The Gaussian
  // prefactor drops out on renormalization.
  const double r = ra * rb;
  std::vector<double> log_p;
  int cutoff = 0;
  double tail = 0.0;
  if (r > 0.0) {
    // Use the explicit partial sums for the norm, then cut where the
    // ratio-test bound on the remaining mass falls below tolerance.
    double norm = 0.0;
    for (int n = 0; n <= kPairCoherentCap; ++n) {
      const double lp = 2.0 * (n * (std::log(ra) + std::log(rb)) - specfun::log_factorial(n));
      log_p.push_back(lp);
      norm += std::exp(lp);
    }
    const double log_norm = std::log(norm);
    cutoff = kPairCoherentCap;
    for (int n = 0; n < kPairCoherentCap; ++n) {
      const double ratio = (r / (n + 2.0)) * (r / (n + 2.0));
      if (ratio >= 1.0) continue;
      const double bound = std::exp(log_p[static_cast<std::size_t>(n) + 1] - log_norm) / (1.0 - ratio);
      if (bound < tail_tolerance) {
        cutoff = n;
        tail = bound;
        break;
      }
    }
  }
  std::vector<cplx> c(static_cast<std::size_t>(cutoff) + 1);
  c[0] = 1.0;
  for (int n = 1; n <= cutoff; ++n) {
    const double mag = std::exp(0.5 * log_p[static_cast<std::size_t>(n)]);
    c[static_cast<std::size_t>(n)] = std::polar(mag, n * (std::arg(alpha) + std::arg(beta)));
  }
  return detail::make_state(std::move(c), StateKind::PairCoherent, alpha * beta, tail);
}

SchmidtState truncate(const SchmidtState& state, int cutoff) {
  if (cutoff < 0) throw DomainError("truncate: cutoff must be nonnegative");
  if (cutoff >= state.truncation()) return state;
  auto src = state.coefficients();
  std::vector<cplx> c(src.begin(), src.begin() + cutoff + 1);
  double dropped = 0.0;
  for (std::size_t n = static_cast<std::size_t>(cutoff) + 1; n < src.size(); ++n) {
    dropped += std::norm(src[n]);
  }
  return detail::make_state(std::move(c), state.kind(), state.zeta(), state.tail_mass() + dropped);
}

cplx quadrature_amplitude(const SchmidtState& state, double x_a, double x_b) {
  const auto c = state.coefficients();
  std::vector<double> psi_a(c.size());
  std::vector<double> psi_b(c.size());
  specfun::oscillator_eigenfunctions(x_a, psi_a);
  specfun::oscillator_eigenfunctions(x_b, psi_b);
  cplx sum = 0.0;
  for (std::size_t n = 0; n < c.size(); ++n) sum += c[n] * (psi_a[n] * psi_b[n]);
  return sum;
}

double QuadratureGrid::trapezoid_integral() const {
  const std::size_t n = axis.size();
  if (n < 2) return 0.0;
  const double h = (axis.back() - axis.front()) / static_cast<double>(n - 1);
  auto weight = [n](std::size_t i) { return (i == 0 || i + 1 == n) ? 0.5 : 1.0; };
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sum += weight(i) * weight(j) * at(i, j);
  }
  return sum * h * h;
}

}  // namespace paircoh
