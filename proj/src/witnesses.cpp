#include "paircoh/witnesses.hpp"

#include <cmath>
#include <string>

#include "paircoh/errors.hpp"
#include "paircoh/specfun.hpp"

namespace paircoh {

using specfun::BesselOrder;
using specfun::kPi;

namespace {

void require_nonzero_m(double m) {
  if (m == 0.0 || !std::isfinite(m)) throw DomainError("EPR variables need a finite nonzero m");
}

// var = (m^2 + 1/m^2)(<n> + 1/2) + 2 (|m|/m) Re<ab>, identical for u and v
// since <a> = <a^2> = <a b^dag> = 0 on Schmidt-diagonal states.
JointVariance variances_from_moments(double mean_number, double re_ab, double m) {
  const double scale = m * m + 1.0 / (m * m);
  const double sign = m > 0.0 ? 1.0 : -1.0;
  const double var = scale * (mean_number + 0.5) + 2.0 * sign * re_ab;
  return {var, var};
}

double state_phase(const SchmidtState& state) {
  return state.zeta() ? std::arg(*state.zeta()) : 0.0;
}

}  // namespace

double q_function(cplx zeta, cplx alpha, cplx beta) {
  const double r = std::abs(zeta);
  if (!(r <= kMaxPairParameter)) throw DomainError("q_function: |zeta| must not exceed 50");
  const double i0 = specfun::bessel_i(BesselOrder::Zero, 2.0 * r);
  const cplx w = zeta * std::conj(alpha) * std::conj(beta);  // z^2 / 4
  const double envelope = std::exp(-(std::norm(alpha) + std::norm(beta)));
  return envelope * std::norm(specfun::bessel_i0_quarter_square(w)) / (kPi * kPi * i0);
}

double q_zero_locus(double zeta, int k) {
  if (!(zeta > 0.0)) {
    throw DomainError("q_zero_locus: zeros exist only for real positive zeta");
  }
  const double z0 = specfun::j0_zero(k);
  return z0 * z0 / (4.0 * zeta);
}

JointVariance joint_variance(const SchmidtState& state, double m) {
  require_nonzero_m(m);
  const auto c = state.coefficients();
  double mean_number = 0.0;
  cplx ab = 0.0;  // <psi| a b |psi> = sum_n (n+1) conj(c_n) c_{n+1}
  for (std::size_t n = 0; n < c.size(); ++n) {
    mean_number += static_cast<double>(n) * std::norm(c[n]);
    if (n + 1 < c.size()) ab += static_cast<double>(n + 1) * std::conj(c[n]) * c[n + 1];
  }
  return variances_from_moments(mean_number, ab.real(), m);
}

JointVariance pair_coherent_joint_variance(cplx zeta, double m) {
  require_nonzero_m(m);
  const double r = std::abs(zeta);
  if (!(r <= kMaxPairParameter)) throw DomainError("|zeta| must not exceed 50");
  const double x = 2.0 * r;
  const double ratio = r == 0.0 ? 0.0
                                : specfun::bessel_i(BesselOrder::One, x) /
                                      specfun::bessel_i(BesselOrder::Zero, x);
  // <a^dag a> = |zeta| I_1/I_0, <ab> = zeta.
  return variances_from_moments(r * ratio, zeta.real(), m);
}

double pair_coherent_total_variance(cplx zeta, double m) {
  require_nonzero_m(m);
  const double r = std::abs(zeta);
  const double x = 2.0 * r;
  const double ratio = r == 0.0 ? 0.0
                                : specfun::bessel_i(BesselOrder::One, x) /
                                      specfun::bessel_i(BesselOrder::Zero, x);
  const double scale = m * m + 1.0 / (m * m);
  const double sign = m > 0.0 ? 1.0 : -1.0;
  return scale + 2.0 * scale * r * ratio + 4.0 * sign * r * std::cos(std::arg(zeta));
}

double mancini_product(const SchmidtState& state) {
  const JointVariance v = joint_variance(state, 1.0);
  return v.var_u * v.var_v;
}

const char* to_string(SignCondition c) {
  switch (c) {
    case SignCondition::Satisfied:
      return "satisfied";
    case SignCondition::Violated:
      return "violated";
    case SignCondition::Indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

SignCondition sign_condition(double m, double phi) {
  require_nonzero_m(m);
  const double c = std::cos(phi);
  if (std::fabs(c) < 1e-12) return SignCondition::Indeterminate;
  return ((m > 0.0) != (c > 0.0)) ? SignCondition::Satisfied : SignCondition::Violated;
}

WitnessReport duan_total_variance(const SchmidtState& state, double m) {
  require_nonzero_m(m);
  WitnessReport rep;
  rep.m_param = m;
  rep.phi = state_phase(state);
  const JointVariance v = joint_variance(state, m);
  rep.var_u = v.var_u;
  rep.var_v = v.var_v;
  rep.total_variance = v.var_u + v.var_v;
  rep.mancini_product = mancini_product(state);
  rep.duan_threshold = m * m + 1.0 / (m * m);
  rep.duan_lower = std::fabs(m * m - 1.0 / (m * m));
  rep.mancini_violated = rep.mancini_product < 1.0;
  rep.duan_violated = rep.duan_lower <= rep.total_variance && rep.total_variance < rep.duan_threshold;
  rep.sign = sign_condition(m, rep.phi);
  return rep;
}

}  // namespace paircoh
