#pragma once

#include <complex>
#include <vector>

#include "paircoh/states.hpp"

namespace paircoh {

// Husimi function of the pair coherent state,
//   Q = exp(-(|a|^2+|b|^2)) |I_0(2 sqrt(zeta a* b*))|^2 / (pi^2 I_0(2|zeta|)).
// Never negative. Requires |zeta| <= 50.
double q_function(cplx zeta, cplx alpha, cplx beta);

// |alpha||beta| on the k-th zero ring of Q for real zeta > 0 and
// out-of-phase alpha, beta: j0_zero(k)^2 / (4 zeta).
double q_zero_locus(double zeta, int k);

// Q sampled over |alpha|, |beta| in [0, amax] with beta = |beta| e^{i rel_phase}
// and alpha real.
struct QGrid {
  double zeta = 0.0;
  double rel_phase = 0.0;
  std::vector<double> magnitudes;  // shared axis for |alpha| and |beta|
  std::vector<double> values;      // values[i * n + j] = Q(magnitudes[i], magnitudes[j])

  double at(std::size_t i, std::size_t j) const { return values[i * magnitudes.size() + j]; }
};

// Variances of u = |m| x_a + x_b / m and v = |m| p_a - p_b / m with
// x = (a + a^dag)/sqrt 2, p = (a - a^dag)/(i sqrt 2).
struct JointVariance {
  double var_u = 0.0;
  double var_v = 0.0;
};

// From the Fock moments <a^dag a> and <ab> of the Schmidt coefficients.
// Throws DomainError for m == 0.
JointVariance joint_variance(const SchmidtState& state, double m);

// Same quantity for the pair coherent state written with I_1(2|zeta|)/I_0(2|zeta|).
JointVariance pair_coherent_joint_variance(cplx zeta, double m);

// Closed-form M = var_u + var_v for the pair coherent state.
double pair_coherent_total_variance(cplx zeta, double m);

// <(du)^2><(dv)^2> at m = 1.
double mancini_product(const SchmidtState& state);

enum class SignCondition { Satisfied, Violated, Indeterminate };

const char* to_string(SignCondition c);

// sign(m) * sign(cos phi) < 0. Indeterminate when |cos phi| < 1e-12.
SignCondition sign_condition(double m, double phi);

struct WitnessReport {
  double m_param = 1.0;
  double phi = 0.0;
  double var_u = 0.0;
  double var_v = 0.0;
  double total_variance = 0.0;   // M
  double mancini_product = 0.0;  // M_x, always evaluated at m = 1
  double duan_threshold = 2.0;   // m^2 + 1/m^2
  double duan_lower = 0.0;       // |m^2 - 1/m^2|
  bool mancini_violated = false; // M_x < 1 witnesses entanglement
  bool duan_violated = false;    // duan_lower <= M < duan_threshold
  SignCondition sign = SignCondition::Indeterminate;

  bool operator==(const WitnessReport&) const = default;
};

WitnessReport duan_total_variance(const SchmidtState& state, double m);

}  // namespace paircoh
