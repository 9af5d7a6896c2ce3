#pragma once

#include <string>
#include <vector>

#include "paircoh/states.hpp"

namespace paircoh {

enum class SweepMeasure { CorrEntropy, LinearEntropy, Mancini, Duan, Negativity };
enum class SweepState { Pcs, Tmsv, Both };

const char* to_string(SweepMeasure m);
const char* to_string(SweepState s);
// Throws DomainError on an unknown name.
SweepMeasure parse_measure(const std::string& name);
SweepState parse_state(const std::string& name);

struct SweepSettings {
  SweepMeasure measure = SweepMeasure::LinearEntropy;
  SweepState state = SweepState::Pcs;
  double zeta_min = 0.0;
  double zeta_max = 1.0;
  int steps = 11;
  double phi = 0.0;
  double m = 1.0;
  double tail_tolerance = kDefaultTailTolerance;
  // Recompute every point through the dense/ladder oracle and fail on a
  // deviation above kAuditTolerance.
  bool audit = false;
};

inline constexpr double kAuditTolerance = 1e-10;

// |zeta| -> measure records. Parameter values strictly increasing, one
// column per evaluated state family.
struct SweepTable {
  std::string parameter = "|zeta|";
  std::string measure;
  std::string state;
  double phi = 0.0;
  double m = 1.0;
  double tail_tolerance = kDefaultTailTolerance;
  std::vector<std::string> columns;
  std::vector<double> parameter_values;
  std::vector<std::vector<double>> rows;  // rows[i][k] for columns[k]

  bool operator==(const SweepTable&) const = default;
};

// Rejects bad ranges before any state is built. A single point is allowed
// when zeta_min == zeta_max and steps == 1.
void validate(const SweepSettings& settings);

// Measure value for one state through the closed-form modules.
double evaluate_measure(SweepMeasure measure, const SchmidtState& state, double m);

// Same value recomputed through the oracle module (dense partial transpose,
// Jacobi, ladder algebra). Dense routes need truncation <= 40.
double audit_measure(SweepMeasure measure, const SchmidtState& state, double m);

// Points evaluated with OpenMP; rows assembled in parameter order.
SweepTable run_sweep(const SweepSettings& settings);

namespace serial {
SweepTable run_sweep(const SweepSettings& settings);
}

}  // namespace paircoh
