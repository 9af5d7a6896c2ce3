#pragma once

#include <vector>

#include "paircoh/states.hpp"

namespace paircoh {

// One 2x2 block of the partially transposed density matrix spanned by
// |n,m> and |m,n>, n < m. Eigenvectors are (|n,m> +- e^{-i theta}|m,n>)/sqrt 2.
struct PairedEigenvalues {
  int n = 0;
  int m = 0;
  double plus = 0.0;
  double minus = 0.0;
  double theta = 0.0;  // arg(c_n conj(c_m))

  bool operator==(const PairedEigenvalues&) const = default;
};

// Full spectrum of rho^{T_b} for a Schmidt-diagonal pure state.
struct PTSpectrum {
  std::vector<double> diagonal;  // lambda_nn = |c_n|^2 on |n,n>
  std::vector<PairedEigenvalues> paired;

  // Every eigenvalue, ascending. Size (N+1)^2.
  std::vector<double> eigenvalues() const;
  double trace() const;
  double min_eigenvalue() const;

  bool operator==(const PTSpectrum&) const = default;
};

PTSpectrum pt_spectrum(const SchmidtState& state);

// Eigenvalues of the partial transpose of the pair coherent state written
// directly in terms of |zeta| and I_0(2|zeta|), for n, m <= cutoff. Ascending.
std::vector<double> pair_coherent_pt_eigenvalues(double abs_zeta, int cutoff);

// Sum of |negative PT eigenvalues| = sum_{n<m} |c_n||c_m|.
double negativity(const SchmidtState& state);

enum class LogBase { Bits, Nats };

// Entropy of either reduced density matrix, -sum p_n log p_n with 0 log 0 = 0.
double von_neumann_entropy(const SchmidtState& state, LogBase base = LogBase::Bits);

// S_a + S_b - S_ab; S_ab vanishes for a pure state.
double correlation_entropy(const SchmidtState& state, LogBase base = LogBase::Bits);

// 1 - Tr(rho_a^2) = 1 - sum |c_n|^4.
double linear_entropy(const SchmidtState& state);

struct EntropyRecord {
  double s_a = 0.0;
  double s_b = 0.0;
  double i_corr = 0.0;
  double i_lin = 0.0;

  bool operator==(const EntropyRecord&) const = default;
};

EntropyRecord entropies(const SchmidtState& state);

}  // namespace paircoh
