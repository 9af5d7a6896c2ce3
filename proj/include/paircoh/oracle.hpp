#pragma once

// Brute-force verification path. Nothing here calls the closed forms in
// measures/witnesses; the test suite compares the two routes.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "paircoh/states.hpp"
#include "paircoh/witnesses.hpp"

namespace paircoh::oracle {

// Per-mode Fock cutoff the dense path accepts. The doubled real embedding
// of a (41^2)-dimensional operator is already ~90 MB.
inline constexpr int kMaxOracleCutoff = 40;

// Dense complex d x d matrix, row-major. Two-mode operators use the composite
// index (n, m) -> n * (N + 1) + m.
class DenseOperator {
 public:
  explicit DenseOperator(std::size_t dim);
  static DenseOperator two_mode(int cutoff);

  std::size_t dim() const { return dim_; }
  std::optional<int> mode_cutoff() const { return cutoff_; }
  std::size_t index(int n, int m) const;

  cplx& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const cplx& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

  cplx trace() const;
  // max |A - A^dag|
  double hermiticity_defect() const;
  std::vector<cplx> apply(std::span<const cplx> v) const;

  bool operator==(const DenseOperator&) const = default;

 private:
  std::size_t dim_;
  std::optional<int> cutoff_;
  std::vector<cplx> entries_;
};

// |psi><psi| embedded with the given per-mode cutoff (>= state truncation,
// <= kMaxOracleCutoff).
DenseOperator dense_density(const SchmidtState& state, int cutoff);
DenseOperator dense_density(const SchmidtState& state);

// Transpose on mode b: <n1,m1|X^{T_b}|n2,m2> = <n1,m2|X|n2,m1>.
DenseOperator partial_transpose(const DenseOperator& op);

// Tr_b, giving the reduced density matrix of mode a.
DenseOperator partial_trace_b(const DenseOperator& op);

// Ascending eigenvalues of a Hermitian matrix by cyclic Jacobi rotations on
// the real symmetric embedding [[Re A, -Im A], [Im A, Re A]].
// Throws ContractError if max|A - A^dag| > 1e-12 and NumericalError if the
// off-diagonal mass is still above 1e-13 after 100 sweeps.
std::vector<double> hermitian_eigenvalues(const DenseOperator& op);

enum class Ladder { A, ADag, B, BDag };

// <psi| w_1 w_2 ... |psi> with the rightmost operator applied first.
// Words longer than two letters are rejected with ContractError.
cplx ladder_expectation(const SchmidtState& state, std::span<const Ladder> word);

// Parses whitespace-separated tokens from {a, adag, b, bdag}, e.g. "adag a".
cplx ladder_expectation(const SchmidtState& state, std::string_view word);

// Variances of u and v assembled from ladder expectations only.
JointVariance ladder_joint_variance(const SchmidtState& state, double m);

}  // namespace paircoh::oracle
