#include "paircoh/grid_kernels.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "paircoh/errors.hpp"
#include "paircoh/specfun.hpp"

namespace paircoh {

namespace {

std::vector<double> uniform_axis(double lo, double hi, int points) {
  if (points < 2) throw DomainError("grid needs at least 2 points, got " + std::to_string(points));
  if (!(lo < hi)) throw DomainError("grid range must satisfy min < max");
  std::vector<double> axis(static_cast<std::size_t>(points));
  const double h = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) axis[static_cast<std::size_t>(i)] = lo + i * h;
  axis.back() = hi;
  return axis;
}

// psi_n(x_i) for every axis node, row i holding levels 0..N.
std::vector<double> eigenfunction_table(const std::vector<double>& axis, std::size_t levels) {
  std::vector<double> table(axis.size() * levels);
  for (std::size_t i = 0; i < axis.size(); ++i) {
    specfun::oscillator_eigenfunctions(axis[i], std::span<double>(table.data() + i * levels, levels));
  }
  return table;
}

inline double quadrature_point(std::span<const cplx> c, const double* psi_a, const double* psi_b) {
  cplx amp = 0.0;
  for (std::size_t n = 0; n < c.size(); ++n) amp += c[n] * (psi_a[n] * psi_b[n]);
  return std::norm(amp);
}

QuadratureGrid prepare_quadrature(double x_min, double x_max, int points) {
  QuadratureGrid grid;
  grid.axis = uniform_axis(x_min, x_max, points);
  grid.values.assign(grid.axis.size() * grid.axis.size(), 0.0);
  return grid;
}

QGrid prepare_q(double zeta, double amax, int points, double rel_phase) {
  if (!(amax > 0.0)) throw DomainError("q_grid: amax must be positive");
  if (!(std::fabs(zeta) <= kMaxPairParameter)) throw DomainError("q_grid: |zeta| must not exceed 50");
  QGrid grid;
  grid.zeta = zeta;
  grid.rel_phase = rel_phase;
  grid.magnitudes = uniform_axis(0.0, amax, points);
  grid.values.assign(grid.magnitudes.size() * grid.magnitudes.size(), 0.0);
  return grid;
}

}  // namespace

QuadratureGrid quadrature_grid(const SchmidtState& state, double x_min, double x_max, int points) {
  QuadratureGrid grid = prepare_quadrature(x_min, x_max, points);
  const auto c = state.coefficients();
  const std::size_t levels = c.size();
  const std::vector<double> psi = eigenfunction_table(grid.axis, levels);
  const auto n = static_cast<std::ptrdiff_t>(grid.axis.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for (std::ptrdiff_t j = 0; j < n; ++j) {
      grid.values[static_cast<std::size_t>(i * n + j)] =
          quadrature_point(c, &psi[static_cast<std::size_t>(i) * levels],
                           &psi[static_cast<std::size_t>(j) * levels]);
    }
  }
  return grid;
}

QGrid q_grid(double zeta, double amax, int points, double rel_phase) {
  QGrid grid = prepare_q(zeta, amax, points, rel_phase);
  const auto n = static_cast<std::ptrdiff_t>(grid.magnitudes.size());
  const cplx z(zeta, 0.0);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const cplx alpha(grid.magnitudes[static_cast<std::size_t>(i)], 0.0);
    for (std::ptrdiff_t j = 0; j < n; ++j) {
      const cplx beta = std::polar(grid.magnitudes[static_cast<std::size_t>(j)], rel_phase);
      grid.values[static_cast<std::size_t>(i * n + j)] = q_function(z, alpha, beta);
    }
  }
  return grid;
}

namespace serial {

QuadratureGrid quadrature_grid(const SchmidtState& state, double x_min, double x_max, int points) {
  QuadratureGrid grid = prepare_quadrature(x_min, x_max, points);
  const auto c = state.coefficients();
  const std::size_t levels = c.size();
  const std::vector<double> psi = eigenfunction_table(grid.axis, levels);
  const std::size_t n = grid.axis.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      grid.values[i * n + j] = quadrature_point(c, &psi[i * levels], &psi[j * levels]);
    }
  }
  return grid;
}

QGrid q_grid(double zeta, double amax, int points, double rel_phase) {
  QGrid grid = prepare_q(zeta, amax, points, rel_phase);
  const std::size_t n = grid.magnitudes.size();
  const cplx z(zeta, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx alpha(grid.magnitudes[i], 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      grid.values[i * n + j] = q_function(z, alpha, std::polar(grid.magnitudes[j], rel_phase));
    }
  }
  return grid;
}

}  // namespace serial

}  // namespace paircoh
