#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "paircoh/errors.hpp"
#include "paircoh/specfun.hpp"
#include "paircoh/states.hpp"

using namespace paircoh;

namespace {

double norm2(const SchmidtState& s) {
  double t = 0.0;
  for (const cplx& c : s.coefficients()) t += std::norm(c);
  return t;
}

// sum_n r^(2n) / (n!)^2 by direct terms, 200 of them.
double pcs_weight_sum(double r) {
  double sum = 0.0;
  double term = 1.0;
  for (int n = 0; n < 200; ++n) {
    if (n > 0) term *= (r / n) * (r / n);
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("pair_coherent(0) is the two-mode vacuum") {
  const SchmidtState s = pair_coherent(0.0);
  REQUIRE(s.truncation() == 0);
  CHECK(s.coefficient(0) == cplx(1.0, 0.0));
  CHECK(s.kind() == StateKind::PairCoherent);
}

TEST_CASE("pair_coherent(1) leading coefficient is 1/sqrt(I0(2))") {
  const SchmidtState s = pair_coherent(1.0);
  const double oracle = 1.0 / std::sqrt(pcs_weight_sum(1.0));
  CHECK(std::abs(s.coefficient(0) - oracle) < 1e-14);
  CHECK(std::fabs(s.coefficient(0).real() - 0.66233) < 1e-5);
}

TEST_CASE("pair coherent normalization constant matches direct sum") {
  for (double r : {0.1, 0.5, 1.0, 2.0, 5.0, 12.0, 30.0, 50.0}) {
    const SchmidtState s = pair_coherent(r);
    CAPTURE(r);
    CHECK(std::fabs(norm2(s) - 1.0) < 1e-12);
    CHECK(s.tail_mass() < 1e-16);
    CHECK(s.truncation() <= kPairCoherentCap);
    const double n0 = 1.0 / std::sqrt(pcs_weight_sum(r));
    CHECK(std::fabs(s.coefficient(0).real() - n0) < 1e-12 * std::max(1.0, n0));
  }
}

TEST_CASE("pair coherent coefficient ratio is |zeta|/(n+1)") {
  for (double r : {0.3, 1.0, 4.0}) {
    const SchmidtState s = pair_coherent(r);
    const auto c = s.coefficients();
    for (std::size_t n = 0; n + 1 < c.size(); ++n) {
      if (std::abs(c[n]) < 1e-290) break;
      CHECK(std::abs(c[n + 1]) / std::abs(c[n]) == doctest::Approx(r / (n + 1.0)).epsilon(1e-12));
    }
  }
}

TEST_CASE("pair coherent phase covariance") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> phase(-specfun::kPi, specfun::kPi);
  const double r = 1.7;
  const SchmidtState base = pair_coherent(r);
  for (int trial = 0; trial < 10; ++trial) {
    const double phi = phase(rng);
    const SchmidtState s = pair_coherent(std::polar(r, phi));
    REQUIRE(s.truncation() == base.truncation());
    for (int n = 0; n <= s.truncation(); ++n) {
      const cplx expected = std::polar(1.0, n * phi) * base.coefficient(n);
      CHECK(std::abs(s.coefficient(n) - expected) < 1e-13);
    }
  }
}

TEST_CASE("pair_coherent domain errors") {
  CHECK_THROWS_AS(pair_coherent(50.5), DomainError);
  CHECK_THROWS_AS(pair_coherent(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(pair_coherent(1.0, 1e-3), DomainError);
  CHECK_NOTHROW(pair_coherent(1.0, 1e-4));
}

TEST_CASE("looser tail tolerance gives a shorter, still normalized state") {
  const SchmidtState tight = pair_coherent(2.0);
  const SchmidtState loose = pair_coherent(2.0, 1e-6);
  CHECK(loose.truncation() < tight.truncation());
  CHECK(loose.tail_mass() < 1e-6);
  CHECK(std::fabs(norm2(loose) - 1.0) < 1e-12);
}

TEST_CASE("squeezed vacuum coefficients") {
  CHECK(squeezed_vacuum(0.0).truncation() == 0);
  CHECK(squeezed_vacuum(0.0).coefficient(0) == cplx(1.0));

  const SchmidtState s = squeezed_vacuum(0.5);
  CHECK(s.kind() == StateKind::SqueezedVacuum);
  for (int n = 0; n <= s.truncation(); ++n) {
    CHECK(std::fabs(s.coefficient(n).real() - std::sqrt(0.75) * std::pow(0.5, n)) < 1e-15);
  }
  CHECK(s.tail_mass() < 1e-16);
  CHECK(std::fabs(norm2(s) - 1.0) < 1e-12);
}

TEST_CASE("squeezed vacuum near unit parameter needs a long cutoff") {
  const SchmidtState s = squeezed_vacuum(0.99);
  CHECK(s.truncation() > 1500);
  CHECK(s.truncation() <= kSqueezedVacuumCap);
  CHECK(std::fabs(norm2(s) - 1.0) < 1e-12);
  // geometric tail t^(2(N+1))
  CHECK(std::pow(0.99, 2.0 * (s.truncation() + 1)) < 1e-16);
}

TEST_CASE("squeezed vacuum domain and capacity errors") {
  CHECK_THROWS_AS(squeezed_vacuum(1.0), DomainError);
  CHECK_THROWS_AS(squeezed_vacuum(cplx(0.0, 1.2)), DomainError);
  CHECK_THROWS_AS(squeezed_vacuum(0.9999), CapacityError);
}

TEST_CASE("projection of a coherent product state") {
  CHECK(project_pair_from_coherent(0.0, cplx(3.0, -1.0)).truncation() == 0);

  const SchmidtState p = project_pair_from_coherent(1.0, 1.0);
  const SchmidtState q = pair_coherent(1.0);
  REQUIRE(p.truncation() == q.truncation());
  for (int n = 0; n <= p.truncation(); ++n) CHECK(std::abs(p.coefficient(n) - q.coefficient(n)) < 1e-12);

  const SchmidtState pi = project_pair_from_coherent(cplx(0.0, 1.0), 1.0);
  const SchmidtState qi = pair_coherent(cplx(0.0, 1.0));
  REQUIRE(pi.truncation() == qi.truncation());
  for (int n = 0; n <= pi.truncation(); ++n) {
    CHECK(std::abs(pi.coefficient(n) - qi.coefficient(n)) < 1e-12);
    if (std::abs(pi.coefficient(n)) > 1e-12) {
      const cplx unit = pi.coefficient(n) / std::abs(pi.coefficient(n));
      CHECK(std::abs(unit - std::polar(1.0, n * specfun::kPi / 2)) < 1e-12);
    }
  }
}

TEST_CASE("projection identity on random draws") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> mag(0.0, std::sqrt(3.0));
  std::uniform_real_distribution<double> phase(-specfun::kPi, specfun::kPi);
  for (int trial = 0; trial < 20; ++trial) {
    const cplx alpha = std::polar(mag(rng), phase(rng));
    const cplx beta = std::polar(mag(rng), phase(rng));
    const SchmidtState p = project_pair_from_coherent(alpha, beta);
    const SchmidtState q = pair_coherent(alpha * beta);
    const int n_max = std::max(p.truncation(), q.truncation());
    for (int n = 0; n <= n_max; ++n) {
      const cplx a = n <= p.truncation() ? p.coefficient(n) : 0.0;
      const cplx b = n <= q.truncation() ? q.coefficient(n) : 0.0;
      CHECK(std::abs(a - b) < 1e-12);
    }
  }
}

TEST_CASE("truncate keeps a prefix and renormalizes") {
  const SchmidtState s = pair_coherent(2.0);
  const SchmidtState t = truncate(s, 3);
  CHECK(t.truncation() == 3);
  CHECK(std::fabs(norm2(t) - 1.0) < 1e-14);
  CHECK(t.tail_mass() > s.tail_mass());
  const double ratio = std::abs(t.coefficient(2) / t.coefficient(1));
  CHECK(ratio == doctest::Approx(std::abs(s.coefficient(2) / s.coefficient(1))));
  CHECK(truncate(s, 1000).truncation() == s.truncation());
  CHECK_THROWS_AS(truncate(s, -1), DomainError);
}

TEST_CASE("custom states normalize and reject the zero vector") {
  const SchmidtState s = SchmidtState::custom({1.0, 1.0});
  CHECK(std::abs(s.coefficient(0) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(s.kind() == StateKind::Custom);
  CHECK_FALSE(s.zeta().has_value());
  CHECK_THROWS_AS(SchmidtState::custom({0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(SchmidtState::custom({}), DomainError);
}

TEST_CASE("quadrature amplitude of the vacuum at the origin") {
  const cplx amp = quadrature_amplitude(pair_coherent(0.0), 0.0, 0.0);
  CHECK(std::abs(amp - 1.0 / std::sqrt(specfun::kPi)) < 1e-15);
  CHECK(amp.real() == doctest::Approx(0.56419).epsilon(1e-5));
}

TEST_CASE("quadrature amplitude is symmetric under mode exchange") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> x(-5.0, 5.0);
  const SchmidtState states[] = {pair_coherent(cplx(-1.0, 0.3)), squeezed_vacuum(cplx(0.2, 0.6)),
                                 SchmidtState::custom({1.0, cplx(0.0, 2.0), -0.5})};
  for (const auto& s : states) {
    for (int trial = 0; trial < 25; ++trial) {
      const double xa = x(rng);
      const double xb = x(rng);
      CHECK(std::abs(quadrature_amplitude(s, xa, xb) - quadrature_amplitude(s, xb, xa)) < 1e-15);
    }
  }
}

TEST_CASE("pair coherent wave function equals the explicit Hermite sum") {
  // <x_a,x_b|zeta,0> = N0 sum zeta^n/n! H_n(x_a) H_n(x_b) exp(-(x_a^2+x_b^2)/2) / (sqrt(pi) 2^n n!)
  const double zeta = -0.8;
  const double xa = 0.7;
  const double xb = -1.1;
  auto hermite = [](int n, double x) {
    double h0 = 1.0;
    double h1 = 2.0 * x;
    if (n == 0) return h0;
    for (int k = 1; k < n; ++k) {
      const double h2 = 2.0 * x * h1 - 2.0 * k * h0;
      h0 = h1;
      h1 = h2;
    }
    return h1;
  };
  // Sum over the same Fock levels the truncated state keeps, normalized over them.
  const SchmidtState state = pair_coherent(zeta);
  double sum = 0.0;
  double weight = 0.0;
  double fact = 1.0;
  for (int n = 0; n <= state.truncation(); ++n) {
    if (n > 0) fact *= n;
    sum += std::pow(zeta, n) / fact * hermite(n, xa) * hermite(n, xb) / (std::pow(2.0, n) * fact);
    weight += std::pow(zeta, 2 * n) / (fact * fact);
  }
  const double oracle = sum * std::exp(-(xa * xa + xb * xb) / 2) / std::sqrt(specfun::kPi) / std::sqrt(weight);
  CHECK(std::abs(quadrature_amplitude(state, xa, xb) - oracle) < 1e-13);
}
