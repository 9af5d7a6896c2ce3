#include "paircoh/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "paircoh/errors.hpp"

namespace paircoh::oracle {

DenseOperator::DenseOperator(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

DenseOperator DenseOperator::two_mode(int cutoff) {
  if (cutoff < 0) throw DomainError("two_mode: cutoff must be nonnegative");
  if (cutoff > kMaxOracleCutoff) {
    throw CapacityError("dense oracle cutoff " + std::to_string(cutoff) + " exceeds " +
                        std::to_string(kMaxOracleCutoff));
  }
  const auto per_mode = static_cast<std::size_t>(cutoff) + 1;
  DenseOperator op(per_mode * per_mode);
  op.cutoff_ = cutoff;
  return op;
}

std::size_t DenseOperator::index(int n, int m) const {
  if (!cutoff_) throw ContractError("index: operator has no two-mode structure");
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(*cutoff_ + 1) +
         static_cast<std::size_t>(m);
}

cplx DenseOperator::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double DenseOperator::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return worst;
}

std::vector<cplx> DenseOperator::apply(std::span<const cplx> v) const {
  if (v.size() != dim_) throw ContractError("apply: vector length does not match dimension");
  std::vector<cplx> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

DenseOperator dense_density(const SchmidtState& state, int cutoff) {
  if (cutoff < state.truncation()) {
    throw DomainError("dense_density: cutoff " + std::to_string(cutoff) +
                      " is below the state truncation " + std::to_string(state.truncation()));
  }
  DenseOperator rho = DenseOperator::two_mode(cutoff);
  const auto c = state.coefficients();
  for (std::size_t n = 0; n < c.size(); ++n) {
    for (std::size_t m = 0; m < c.size(); ++m) {
      const int ni = static_cast<int>(n);
      const int mi = static_cast<int>(m);
      rho(rho.index(ni, ni), rho.index(mi, mi)) = c[n] * std::conj(c[m]);
    }
  }
  return rho;
}

DenseOperator dense_density(const SchmidtState& state) {
  return dense_density(state, state.truncation());
}

DenseOperator partial_transpose(const DenseOperator& op) {
  const auto cutoff = op.mode_cutoff();
  if (!cutoff) throw ContractError("partial_transpose: operator has no two-mode structure");
  DenseOperator out = DenseOperator::two_mode(*cutoff);
  for (int n1 = 0; n1 <= *cutoff; ++n1) {
    for (int m1 = 0; m1 <= *cutoff; ++m1) {
      for (int n2 = 0; n2 <= *cutoff; ++n2) {
        for (int m2 = 0; m2 <= *cutoff; ++m2) {
          out(out.index(n1, m1), out.index(n2, m2)) = op(op.index(n1, m2), op.index(n2, m1));
        }
      }
    }
  }
  return out;
}

DenseOperator partial_trace_b(const DenseOperator& op) {
  const auto cutoff = op.mode_cutoff();
  if (!cutoff) throw ContractError("partial_trace_b: operator has no two-mode structure");
  const auto per_mode = static_cast<std::size_t>(*cutoff) + 1;
  DenseOperator out(per_mode);
  for (int n1 = 0; n1 <= *cutoff; ++n1) {
    for (int n2 = 0; n2 <= *cutoff; ++n2) {
      cplx acc = 0.0;
      for (int m = 0; m <= *cutoff; ++m) acc += op(op.index(n1, m), op.index(n2, m));
      out(static_cast<std::size_t>(n1), static_cast<std::size_t>(n2)) = acc;
    }
  }
  return out;
}

namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr double kOffDiagonalTarget = 1e-13;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p != q) sum += a[p * n + q] * a[p * n + q];
    }
  }
  return std::sqrt(sum);
}

// Cyclic Jacobi on a real symmetric n x n matrix (row-major, overwritten).
// Returns the diagonal once the off-diagonal Frobenius norm is below target.
std::vector<double> jacobi_symmetric(std::vector<double> a, std::size_t n) {
  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a, n) < kOffDiagonalTarget) {
      std::vector<double> diag(n);
      for (std::size_t i = 0; i < n; ++i) diag[i] = a[i * n + i];
      return diag;
    }
    if (sweep == kMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        double t;
        if (std::fabs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        a[p * n + p] -= t * apq;
        a[q * n + q] += t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          if (akp == 0.0 && akq == 0.0) continue;
          const double new_kp = c * akp - s * akq;
          const double new_kq = s * akp + c * akq;
          a[k * n + p] = new_kp;
          a[p * n + k] = new_kp;
          a[k * n + q] = new_kq;
          a[q * n + k] = new_kq;
        }
      }
    }
  }
  throw NumericalError("hermitian_eigenvalues: Jacobi did not converge in 100 sweeps");
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const DenseOperator& op) {
  const double defect = op.hermiticity_defect();
  if (defect > kHermitianTolerance) {
    std::ostringstream msg;
    msg << "hermitian_eigenvalues: input is not Hermitian (defect " << defect << ")";
    throw ContractError(msg.str());
  }
  const std::size_t d = op.dim();
  const std::size_t n = 2 * d;
  std::vector<double> s(n * n);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      // Symmetrize away the sub-tolerance defect so the embedding is exactly symmetric.
      const cplx h = 0.5 * (op(i, j) + std::conj(op(j, i)));
      s[i * n + j] = h.real();
      s[(i + d) * n + (j + d)] = h.real();
      s[i * n + (j + d)] = -h.imag();
      s[(i + d) * n + j] = h.imag();
    }
  }
  std::vector<double> doubled = jacobi_symmetric(std::move(s), n);
  std::sort(doubled.begin(), doubled.end());
  // Each eigenvalue of A appears twice in the embedding.
  std::vector<double> out(d);
  for (std::size_t i = 0; i < d; ++i) out[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return out;
}

namespace {

using Ket = std::map<std::pair<int, int>, cplx>;

Ket apply_ladder(Ladder op, const Ket& in) {
  Ket out;
  for (const auto& [label, amp] : in) {
    auto [n, m] = label;
    switch (op) {
      case Ladder::A:
        if (n > 0) out[{n - 1, m}] += std::sqrt(static_cast<double>(n)) * amp;
        break;
      case Ladder::ADag:
        out[{n + 1, m}] += std::sqrt(static_cast<double>(n + 1)) * amp;
        break;
      case Ladder::B:
        if (m > 0) out[{n, m - 1}] += std::sqrt(static_cast<double>(m)) * amp;
        break;
      case Ladder::BDag:
        out[{n, m + 1}] += std::sqrt(static_cast<double>(m + 1)) * amp;
        break;
    }
  }
  return out;
}

Ket schmidt_ket(const SchmidtState& state) {
  Ket ket;
  const auto c = state.coefficients();
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n] != 0.0) ket[{static_cast<int>(n), static_cast<int>(n)}] = c[n];
  }
  return ket;
}

cplx inner(const Ket& bra, const Ket& ket) {
  cplx acc = 0.0;
  for (const auto& [label, amp] : ket) {
    auto it = bra.find(label);
    if (it != bra.end()) acc += std::conj(it->second) * amp;
  }
  return acc;
}

cplx expect(const Ket& psi, std::initializer_list<Ladder> word) {
  Ket phi = psi;
  for (auto it = std::rbegin(word); it != std::rend(word); ++it) phi = apply_ladder(*it, phi);
  return inner(psi, phi);
}

}  // namespace

cplx ladder_expectation(const SchmidtState& state, std::span<const Ladder> word) {
  if (word.size() > 2) throw ContractError("ladder_expectation: words longer than 2 are unsupported");
  Ket psi = schmidt_ket(state);
  Ket phi = psi;
  for (auto it = word.rbegin(); it != word.rend(); ++it) phi = apply_ladder(*it, phi);
  return inner(psi, phi);
}

cplx ladder_expectation(const SchmidtState& state, std::string_view word) {
  std::vector<Ladder> ops;
  std::istringstream in{std::string(word)};
  std::string tok;
  while (in >> tok) {
    if (tok == "a") {
      ops.push_back(Ladder::A);
    } else if (tok == "adag") {
      ops.push_back(Ladder::ADag);
    } else if (tok == "b") {
      ops.push_back(Ladder::B);
    } else if (tok == "bdag") {
      ops.push_back(Ladder::BDag);
    } else {
      throw ContractError("ladder_expectation: unknown operator '" + tok + "'");
    }
  }
  return ladder_expectation(state, ops);
}

JointVariance ladder_joint_variance(const SchmidtState& state, double m) {
  if (m == 0.0 || !std::isfinite(m)) throw DomainError("EPR variables need a finite nonzero m");
  using enum Ladder;
  const Ket psi = schmidt_ket(state);
  const double root2 = std::sqrt(2.0);
  const cplx i(0.0, 1.0);

  // First moments.
  const cplx x_a = (expect(psi, {A}) + expect(psi, {ADag})) / root2;
  const cplx x_b = (expect(psi, {B}) + expect(psi, {BDag})) / root2;
  const cplx p_a = (expect(psi, {A}) - expect(psi, {ADag})) / (i * root2);
  const cplx p_b = (expect(psi, {B}) - expect(psi, {BDag})) / (i * root2);

  // Second moments; x^2 = (a a + a a^dag + a^dag a + a^dag a^dag) / 2 and
  // p^2 = -(a a - a a^dag - a^dag a + a^dag a^dag) / 2.
  const cplx xa2 = (expect(psi, {A, A}) + expect(psi, {A, ADag}) + expect(psi, {ADag, A}) +
                    expect(psi, {ADag, ADag})) / 2.0;
  const cplx xb2 = (expect(psi, {B, B}) + expect(psi, {B, BDag}) + expect(psi, {BDag, B}) +
                    expect(psi, {BDag, BDag})) / 2.0;
  const cplx pa2 = -(expect(psi, {A, A}) - expect(psi, {A, ADag}) - expect(psi, {ADag, A}) +
                     expect(psi, {ADag, ADag})) / 2.0;
  const cplx pb2 = -(expect(psi, {B, B}) - expect(psi, {B, BDag}) - expect(psi, {BDag, B}) +
                     expect(psi, {BDag, BDag})) / 2.0;
  const cplx xaxb = (expect(psi, {A, B}) + expect(psi, {A, BDag}) + expect(psi, {ADag, B}) +
                     expect(psi, {ADag, BDag})) / 2.0;
  const cplx papb = -(expect(psi, {A, B}) - expect(psi, {A, BDag}) - expect(psi, {ADag, B}) +
                      expect(psi, {ADag, BDag})) / 2.0;

  const double m2 = m * m;
  const double sign = m > 0.0 ? 1.0 : -1.0;
  const double var_xa = (xa2 - x_a * x_a).real();
  const double var_xb = (xb2 - x_b * x_b).real();
  const double var_pa = (pa2 - p_a * p_a).real();
  const double var_pb = (pb2 - p_b * p_b).real();
  const double cov_x = (xaxb - x_a * x_b).real();
  const double cov_p = (papb - p_a * p_b).real();

  // u = |m| x_a + x_b / m, v = |m| p_a - p_b / m.
  return {m2 * var_xa + var_xb / m2 + 2.0 * sign * cov_x,
          m2 * var_pa + var_pb / m2 - 2.0 * sign * cov_p};
}

}  // namespace paircoh::oracle
