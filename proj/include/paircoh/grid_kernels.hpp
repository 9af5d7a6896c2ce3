#pragma once

// Grid evaluations parallelized with OpenMP over rows. Each point is written
// to a fixed slot, so output is identical for any thread count. The serial
// namespace keeps plain loops that the tests and benchmark compare against.

#include "paircoh/states.hpp"
#include "paircoh/witnesses.hpp"

namespace paircoh {

// |<x_a, x_b|psi>|^2 on points x points nodes spanning [x_min, x_max]^2.
// Requires points >= 2 and x_min < x_max.
QuadratureGrid quadrature_grid(const SchmidtState& state, double x_min, double x_max, int points);

// Q over |alpha|, |beta| in [0, amax], alpha real, beta = |beta| e^{i rel_phase}.
// Requires points >= 2, amax > 0.
QGrid q_grid(double zeta, double amax, int points, double rel_phase);

namespace serial {
QuadratureGrid quadrature_grid(const SchmidtState& state, double x_min, double x_max, int points);
QGrid q_grid(double zeta, double amax, int points, double rel_phase);
}  // namespace serial

}  // namespace paircoh
