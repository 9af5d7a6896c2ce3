#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "paircoh/errors.hpp"
#include "paircoh/grid_kernels.hpp"
#include "paircoh/specfun.hpp"
#include "paircoh/states.hpp"
#include "paircoh/witnesses.hpp"

using namespace paircoh;
using specfun::kPi;

namespace {

struct Peak {
  double value;
  std::size_t i, j;
};

// Strict local maxima over the 8-neighbourhood, largest first.
std::vector<Peak> local_maxima(const QuadratureGrid& g) {
  const std::size_t n = g.size();
  std::vector<Peak> peaks;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double v = g.at(i, j);
      bool is_max = true;
      for (int di = -1; di <= 1 && is_max; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          if (!di && !dj) continue;
          const long ii = static_cast<long>(i) + di, jj = static_cast<long>(j) + dj;
          if (ii < 0 || jj < 0 || ii >= static_cast<long>(n) || jj >= static_cast<long>(n)) continue;
          if (g.at(ii, jj) >= v) {
            is_max = false;
            break;
          }
        }
      if (is_max) peaks.push_back({v, i, j});
    }
  std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) { return a.value > b.value; });
  return peaks;
}

}  // namespace

TEST_CASE("parallel and serial grids are identical") {
  const SchmidtState s = pair_coherent(std::polar(1.0, kPi));
  CHECK(quadrature_grid(s, -4.0, 4.0, 41).values == serial::quadrature_grid(s, -4.0, 4.0, 41).values);
  const QGrid a = q_grid(1.0, 3.0, 31, kPi);
  const QGrid b = serial::q_grid(1.0, 3.0, 31, kPi);
  CHECK(a.values == b.values);
  CHECK(a.magnitudes == b.magnitudes);
}

TEST_CASE("vacuum quadrature grid is a normalized Gaussian") {
  const QuadratureGrid g = quadrature_grid(pair_coherent(0.0), -6.0, 6.0, 121);
  CHECK(g.size() == 121);
  CHECK(g.axis.front() == -6.0);
  CHECK(g.axis.back() == 6.0);
  CHECK(std::fabs(g.trapezoid_integral() - 1.0) < 1e-3);
  CHECK(std::fabs(g.at(60, 60) - 1.0 / kPi) < 1e-14);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double x = g.axis[i], y = g.axis[j];
      CHECK(std::fabs(g.at(i, j) - std::exp(-x * x - y * y) / kPi) < 1e-14);
    }
}

TEST_CASE("quadrature grids integrate to one") {
  for (cplx zeta : {cplx(-1.0), std::polar(0.7, 1.2), cplx(2.0)}) {
    const QuadratureGrid g = quadrature_grid(pair_coherent(zeta), -6.0, 6.0, 121);
    CHECK(std::fabs(g.trapezoid_integral() - 1.0) < 1e-3);
    CHECK(*std::min_element(g.values.begin(), g.values.end()) >= 0.0);
  }
  const QuadratureGrid t = quadrature_grid(squeezed_vacuum(0.5), -6.0, 6.0, 121);
  CHECK(std::fabs(t.trapezoid_integral() - 1.0) < 1e-3);
}

TEST_CASE("pair_coherent(-1) quadrature distribution") {
  const QuadratureGrid g = quadrature_grid(pair_coherent(-1.0), -4.0, 4.0, 81);
  CHECK(*std::min_element(g.values.begin(), g.values.end()) >= 0.0);
  // mass inside [-4, 4]^2
  CHECK(g.trapezoid_integral() > 0.999);

  const auto top = std::max_element(g.values.begin(), g.values.end());
  const std::size_t k = static_cast<std::size_t>(top - g.values.begin());
  const std::size_t i = k / g.size(), j = k % g.size();
  CHECK(g.at(j, i) == doctest::Approx(*top).epsilon(1e-12));

  const auto peaks = local_maxima(g);
  REQUIRE(peaks.size() >= 2);
  for (int p = 0; p < 2; ++p) {
    const double xa = g.axis[peaks[p].i], xb = g.axis[peaks[p].j];
    CAPTURE(xa);
    CAPTURE(xb);
    CHECK(std::fabs(xa + xb) < 1e-12);
  }
}

TEST_CASE("grid argument checks") {
  const SchmidtState s = pair_coherent(0.5);
  CHECK_THROWS_AS(quadrature_grid(s, -1.0, 1.0, 1), DomainError);
  CHECK_THROWS_AS(quadrature_grid(s, 1.0, 1.0, 10), DomainError);
  CHECK_THROWS_AS(q_grid(1.0, 0.0, 10, 0.0), DomainError);
  CHECK_THROWS_AS(q_grid(1.0, 3.0, 1, 0.0), DomainError);
  CHECK_THROWS_AS(q_grid(60.0, 3.0, 10, 0.0), DomainError);
}

TEST_CASE("Q grid values and zero ridge") {
  const QGrid out = q_grid(1.0, 3.0, 61, kPi);
  REQUIRE(out.magnitudes.size() == 61);
  CHECK(out.magnitudes.front() == 0.0);
  CHECK(out.magnitudes.back() == 3.0);
  CHECK(*std::min_element(out.values.begin(), out.values.end()) >= 0.0);
  for (std::size_t i = 0; i < 61; i += 7)
    for (std::size_t j = 0; j < 61; j += 5)
      CHECK(out.at(i, j) == q_function(1.0, out.magnitudes[i], std::polar(out.magnitudes[j], kPi)));

  // Any node marked zero sits near a ring 4|alpha||beta| = j0_zero(k)^2, and
  // the first ring is hit.
  int near_first = 0;
  for (std::size_t i = 0; i < 61; ++i)
    for (std::size_t j = 0; j < 61; ++j) {
      if (out.at(i, j) >= 1e-10) continue;
      const double ab = out.magnitudes[i] * out.magnitudes[j];
      if (std::fabs(ab - q_zero_locus(1.0, 1)) < 0.05) ++near_first;
    }
  CHECK(near_first > 0);

  const QGrid in = q_grid(1.0, 3.0, 61, 0.0);
  CHECK(*std::min_element(in.values.begin(), in.values.end()) > 1e-10);
}
