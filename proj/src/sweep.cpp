#include "paircoh/sweep.hpp"

#include <cmath>
#include <exception>
#include <sstream>

#include "paircoh/errors.hpp"
#include "paircoh/measures.hpp"
#include "paircoh/oracle.hpp"
#include "paircoh/witnesses.hpp"

namespace paircoh {

const char* to_string(SweepMeasure m) {
  switch (m) {
    case SweepMeasure::CorrEntropy:
      return "corr-entropy";
    case SweepMeasure::LinearEntropy:
      return "linear-entropy";
    case SweepMeasure::Mancini:
      return "mancini";
    case SweepMeasure::Duan:
      return "duan";
    case SweepMeasure::Negativity:
      return "negativity";
  }
  return "unknown";
}

const char* to_string(SweepState s) {
  switch (s) {
    case SweepState::Pcs:
      return "pcs";
    case SweepState::Tmsv:
      return "tmsv";
    case SweepState::Both:
      return "both";
  }
  return "unknown";
}

SweepMeasure parse_measure(const std::string& name) {
  for (auto m : {SweepMeasure::CorrEntropy, SweepMeasure::LinearEntropy, SweepMeasure::Mancini,
                 SweepMeasure::Duan, SweepMeasure::Negativity}) {
    if (name == to_string(m)) return m;
  }
  throw DomainError("unknown measure '" + name + "'");
}

SweepState parse_state(const std::string& name) {
  for (auto s : {SweepState::Pcs, SweepState::Tmsv, SweepState::Both}) {
    if (name == to_string(s)) return s;
  }
  throw DomainError("unknown state '" + name + "'");
}

void validate(const SweepSettings& s) {
  if (!(s.zeta_min >= 0.0)) throw DomainError("sweep: zeta-min must be >= 0");
  if (s.steps == 1) {
    if (s.zeta_min != s.zeta_max) throw DomainError("sweep: a single step needs zeta-min == zeta-max");
  } else {
    if (s.steps < 2) throw DomainError("sweep: steps must be >= 2");
    if (!(s.zeta_min < s.zeta_max)) throw DomainError("sweep: zeta-min must be below zeta-max");
  }
  if (s.state != SweepState::Pcs && !(s.zeta_max < 1.0)) {
    throw DomainError("sweep: squeezed vacuum requires zeta-max < 1");
  }
  if (s.state != SweepState::Tmsv && s.zeta_max > kMaxPairParameter) {
    throw DomainError("sweep: pair coherent states require zeta-max <= 50");
  }
  if (s.m == 0.0 || !std::isfinite(s.m)) throw DomainError("sweep: m must be nonzero");
  if (!std::isfinite(s.phi)) throw DomainError("sweep: phi must be finite");
}

double evaluate_measure(SweepMeasure measure, const SchmidtState& state, double m) {
  switch (measure) {
    case SweepMeasure::CorrEntropy:
      return correlation_entropy(state);
    case SweepMeasure::LinearEntropy:
      return linear_entropy(state);
    case SweepMeasure::Mancini:
      return mancini_product(state);
    case SweepMeasure::Duan:
      return duan_total_variance(state, m).total_variance;
    case SweepMeasure::Negativity:
      return negativity(state);
  }
  throw ContractError("evaluate_measure: unhandled measure");
}

double audit_measure(SweepMeasure measure, const SchmidtState& state, double m) {
  switch (measure) {
    case SweepMeasure::Mancini: {
      const JointVariance v = oracle::ladder_joint_variance(state, 1.0);
      return v.var_u * v.var_v;
    }
    case SweepMeasure::Duan: {
      const JointVariance v = oracle::ladder_joint_variance(state, m);
      return v.var_u + v.var_v;
    }
    case SweepMeasure::Negativity: {
      const auto eig = oracle::hermitian_eigenvalues(oracle::partial_transpose(oracle::dense_density(state)));
      double neg = 0.0;
      for (double e : eig) {
        if (e < 0.0) neg -= e;
      }
      return neg;
    }
    case SweepMeasure::CorrEntropy:
    case SweepMeasure::LinearEntropy: {
      const auto eig = oracle::hermitian_eigenvalues(oracle::partial_trace_b(oracle::dense_density(state)));
      double s = 0.0;
      double purity = 0.0;
      for (double e : eig) {
        if (e > 0.0) s -= e * std::log2(e);
        purity += e * e;
      }
      return measure == SweepMeasure::CorrEntropy ? 2.0 * s : 1.0 - purity;
    }
  }
  throw ContractError("audit_measure: unhandled measure");
}

namespace {

SchmidtState build_state(bool pair_coherent_family, double r, const SweepSettings& s) {
  const cplx zeta = std::polar(r, s.phi);
  return pair_coherent_family ? pair_coherent(zeta, s.tail_tolerance)
                              : squeezed_vacuum(zeta, s.tail_tolerance);
}

SweepTable prepare(const SweepSettings& s) {
  validate(s);
  SweepTable table;
  table.measure = to_string(s.measure);
  table.state = to_string(s.state);
  table.phi = s.phi;
  table.m = s.measure == SweepMeasure::Mancini ? 1.0 : s.m;
  table.tail_tolerance = s.tail_tolerance;
  const std::string base = to_string(s.measure);
  if (s.state != SweepState::Tmsv) table.columns.push_back(base + "_pcs");
  if (s.state != SweepState::Pcs) table.columns.push_back(base + "_tmsv");
  table.parameter_values.resize(static_cast<std::size_t>(s.steps));
  for (int k = 0; k < s.steps; ++k) {
    table.parameter_values[static_cast<std::size_t>(k)] =
        s.steps == 1 ? s.zeta_min : s.zeta_min + k * (s.zeta_max - s.zeta_min) / (s.steps - 1);
  }
  table.parameter_values.back() = s.zeta_max;
  table.rows.assign(table.parameter_values.size(), std::vector<double>(table.columns.size()));
  return table;
}

std::vector<double> evaluate_row(const SweepSettings& s, double r) {
  std::vector<double> row;
  auto one = [&](bool pcs_family) {
    const SchmidtState state = build_state(pcs_family, r, s);
    const double value = evaluate_measure(s.measure, state, s.m);
    if (s.audit) {
      const double check = audit_measure(s.measure, state, s.m);
      if (!(std::fabs(check - value) <= kAuditTolerance)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "oracle mismatch for " << to_string(s.measure) << " at |zeta| = " << r << ": "
            << value << " vs " << check;
        throw NumericalError(msg.str());
      }
    }
    row.push_back(value);
  };
  if (s.state != SweepState::Tmsv) one(true);
  if (s.state != SweepState::Pcs) one(false);
  return row;
}

}  // namespace

SweepTable run_sweep(const SweepSettings& settings) {
  SweepTable table = prepare(settings);
  const auto n = static_cast<std::ptrdiff_t>(table.parameter_values.size());
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    try {
      table.rows[i] = evaluate_row(settings, table.parameter_values[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return table;
}

namespace serial {

SweepTable run_sweep(const SweepSettings& settings) {
  SweepTable table = prepare(settings);
  for (std::size_t i = 0; i < table.parameter_values.size(); ++i) {
    table.rows[i] = evaluate_row(settings, table.parameter_values[i]);
  }
  return table;
}

}  // namespace serial

}  // namespace paircoh
