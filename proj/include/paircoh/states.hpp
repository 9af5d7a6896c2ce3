#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace paircoh {

using cplx = std::complex<double>;

inline constexpr double kDefaultTailTolerance = 1e-16;
inline constexpr int kPairCoherentCap = 512;
inline constexpr int kSqueezedVacuumCap = 4096;
inline constexpr double kMaxPairParameter = 50.0;

enum class StateKind { PairCoherent, SqueezedVacuum, Custom };

const char* to_string(StateKind kind);

class SchmidtState;

namespace detail {
// Normalizes and wraps; throws DomainError on a zero vector.
SchmidtState make_state(std::vector<cplx> coefficients, StateKind kind, std::optional<cplx> zeta,
                        double tail_mass);
}  // namespace detail

// Truncated two-mode pure state sum_n c_n |n,n> (Schmidt form).
// Immutable; coefficients are normalized on construction.
class SchmidtState {
 public:
  // Normalizes the given amplitudes. Throws DomainError if all are zero.
  static SchmidtState custom(std::vector<cplx> coefficients);

  std::span<const cplx> coefficients() const { return coefficients_; }
  cplx coefficient(int n) const { return coefficients_[static_cast<std::size_t>(n)]; }
  // Cutoff N; there are N+1 coefficients.
  int truncation() const { return static_cast<int>(coefficients_.size()) - 1; }
  std::optional<cplx> zeta() const { return zeta_; }
  StateKind kind() const { return kind_; }
  // Estimated probability mass of the untruncated series beyond N.
  double tail_mass() const { return tail_mass_; }

  // Schmidt weights |c_n|^2.
  std::vector<double> schmidt_weights() const;

 private:
  friend SchmidtState detail::make_state(std::vector<cplx>, StateKind, std::optional<cplx>,
                                         double);
  SchmidtState(std::vector<cplx> coefficients, StateKind kind, std::optional<cplx> zeta,
               double tail_mass);

  std::vector<cplx> coefficients_;
  StateKind kind_;
  std::optional<cplx> zeta_;
  double tail_mass_;
};

// Pair coherent state (q = 0): c_n proportional to zeta^n / n!, normalized by
// 1/sqrt(I_0(2|zeta|)). The cutoff is the smallest N whose tail bound drops
// below tail_tolerance. Requires |zeta| <= 50 and tail_tolerance in (0, 1e-4].
SchmidtState pair_coherent(cplx zeta, double tail_tolerance = kDefaultTailTolerance);

// Two-mode squeezed vacuum sqrt(1-|zeta|^2) sum zeta^n |n,n>. Requires |zeta| < 1.
// Throws CapacityError when the cutoff needed for tail_tolerance exceeds 4096.
SchmidtState squeezed_vacuum(cplx zeta, double tail_tolerance = kDefaultTailTolerance);

// Projects the product coherent state |alpha, beta> onto the equal photon
// number subspace and renormalizes. Requires |alpha beta| <= 50.
SchmidtState project_pair_from_coherent(cplx alpha, cplx beta,
                                        double tail_tolerance = kDefaultTailTolerance);

// Keeps c_0..c_cutoff and renormalizes. Returns the state unchanged when it is
// already short enough.
SchmidtState truncate(const SchmidtState& state, int cutoff);

// <x_a, x_b | psi> = sum_n c_n psi_n(x_a) psi_n(x_b).
cplx quadrature_amplitude(const SchmidtState& state, double x_a, double x_b);

// P(x_a, x_b) = |<x_a, x_b|psi>|^2 sampled on a uniform square grid.
struct QuadratureGrid {
  std::vector<double> axis;     // shared by x_a and x_b
  std::vector<double> values;   // row-major, values[i * n + j] = P(axis[i], axis[j])

  std::size_t size() const { return axis.size(); }
  double at(std::size_t i, std::size_t j) const { return values[i * axis.size() + j]; }
  double trapezoid_integral() const;
};

}  // namespace paircoh
