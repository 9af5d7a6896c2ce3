#pragma once

#include <complex>
#include <span>

namespace paircoh::specfun {

inline constexpr double kPi = 3.14159265358979323846;

// Only the two orders that appear in the state normalization and the
// number-moment formulas are supported.
enum class BesselOrder { Zero = 0, One = 1 };

// Modified Bessel function I_nu(x), nu in {0, 1}, by its power series.
// Relative error below 1e-13 for 0 <= x <= 100. Throws DomainError for x < 0.
double bessel_i(BesselOrder order, double x);

// Sum_k w^k / (k!)^2, i.e. I_0(z) with w = z^2 / 4. Working in w avoids
// picking a branch of sqrt(z^2). For w < 0 this is J_0(2 sqrt(-w)).
std::complex<double> bessel_i0_quarter_square(std::complex<double> w);

// Bessel function of the first kind J_0(x) for |x| <= 100.
// Power series (extended precision) for |x| <= 12, Hankel asymptotic form
// beyond. Absolute error below 1e-10.
double bessel_j0(double x);

// k-th positive zero of J_0, 1 <= k <= 30. Bisection inside a bracket
// around (k - 1/4) pi down to a width of 1e-12.
double j0_zero(int k);

inline constexpr int kMaxOscillatorLevel = 4096;

// Normalized harmonic-oscillator eigenfunction <x|n> in units where the
// ground state density is exp(-x^2)/sqrt(pi).
double oscillator_eigenfunction(int n, double x);

// Fills out[n] = <x|n> for n = 0 .. out.size()-1 with one pass of the
// normalized three-term recurrence.
void oscillator_eigenfunctions(double x, std::span<double> out);

// ln(n!) for 0 <= n <= 1e6. Values up to kMaxOscillatorLevel come from a
// table built once on first use.
double log_factorial(int n);

}  // namespace paircoh::specfun
