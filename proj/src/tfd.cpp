#include "janus/tfd.hpp"

#include <cmath>
#include <stdexcept>

namespace janus {

namespace {
constexpr Complex kI{0.0, 1.0};
}

VectorizedState::VectorizedState(FockSpace s, Eigen::VectorXcd a)
    : space(std::move(s)), amps(std::move(a)) {
  if (amps.size() != space.dim() * space.dim()) {
    throw std::invalid_argument(
        "VectorizedState: amplitude length must be dim^2");
  }
}

VectorizedState identity_vector(const FockSpace& space) {
  const Eigen::Index d = space.dim();
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(d * d);
  for (Eigen::Index n = 0; n < d; ++n) {
    amps[n * d + n] = 1.0;
  }
  return VectorizedState(space, std::move(amps));
}

VectorizedState vectorize(const FockSpace& space, const SparseOperator& rho) {
  const Eigen::Index d = space.dim();
  if (rho.rows() != d || rho.cols() != d) {
    throw std::invalid_argument("vectorize: operator does not act on space");
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(d * d);
  for (const auto& t : rho.entries()) {
    amps[t.row() * d + t.col()] = t.value();
  }
  return VectorizedState(space, std::move(amps));
}

SparseOperator devectorize(const VectorizedState& v) {
  const Eigen::Index d = v.space.dim();
  std::vector<Triplet> trips;
  for (Eigen::Index i = 0; i < v.amps.size(); ++i) {
    if (v.amps[i] != Complex(0.0, 0.0)) {
      trips.emplace_back(i / d, i % d, v.amps[i]);
    }
  }
  return SparseOperator::from_triplets(d, d, trips);
}

DenseMatrix devectorize_dense(const VectorizedState& v) {
  const Eigen::Index d = v.space.dim();
  return Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic,
                                        Eigen::Dynamic, Eigen::RowMajor>>(
             v.amps.data(), d, d)
      .eval();
}

SparseOperator lift(const FockSpace& space, const SparseOperator& a) {
  const Eigen::Index d = space.dim();
  if (a.rows() != d || a.cols() != d) {
    throw std::invalid_argument("lift: operator does not act on space");
  }
  return kron(a, SparseOperator::identity(d));
}

SparseOperator tilde(const FockSpace& space, const SparseOperator& a) {
  const Eigen::Index d = space.dim();
  if (a.rows() != d || a.cols() != d) {
    throw std::invalid_argument("tilde: operator does not act on space");
  }
  return kron(SparseOperator::identity(d), a.conjugate());
}

Complex trace_of(const VectorizedState& v) {
  const Eigen::Index d = v.space.dim();
  Complex t = 0.0;
  for (Eigen::Index n = 0; n < d; ++n) {
    t += v.amps[n * d + n];
  }
  return t;
}

Liouvillian build_liouvillian(const JanusRealization& real, double g,
                              double kappa, DissipatorForm form) {
  if (kappa < 0.0) {
    throw std::invalid_argument("build_liouvillian: kappa must be >= 0");
  }
  const FockSpace& space = real.space;
  const SparseOperator& F = real.F;

  // Tilde-rule assembly on the doubled space.
  const SparseOperator LF = lift(space, F);
  const SparseOperator LFd = LF.adjoint();
  const SparseOperator TF = tilde(space, F);
  const SparseOperator TFd = TF.adjoint();

  SparseOperator drive = LF - TFd + LFd - TF;
  SparseOperator dissipator =
      form == DissipatorForm::vectorized
          ? 2.0 * (LF * TF) - TFd * TF - LFd * LF
          : 2.0 * (LF * TF) - TF * TFd - LFd * LF;
  SparseOperator op = (-kI * g) * drive + (0.5 * kappa) * dissipator;

  // Direct Kronecker vectorization of the master equation, term for term:
  // A rho B <-> kron(A, B^T) under the row-major flattening.
  const SparseOperator ident = SparseOperator::identity(space.dim());
  const SparseOperator Fd = F.adjoint();
  const SparseOperator FdF = Fd * F;
  SparseOperator drive_k = kron(F, ident) - kron(ident, F.transpose()) +
                           kron(Fd, ident) - kron(ident, F.conjugate());
  SparseOperator dissipator_k =
      form == DissipatorForm::vectorized
          ? 2.0 * kron(F, F.conjugate()) - kron(ident, FdF.transpose()) -
                kron(FdF, ident)
          : 2.0 * kron(F, F.conjugate()) -
                kron(ident, F.conjugate() * F.transpose()) - kron(FdF, ident);
  SparseOperator op_k = (-kI * g) * drive_k + (0.5 * kappa) * dissipator_k;

  const double diff = max_abs_diff(op, op_k);
  if (diff > 1e-13 * std::max(1.0, op.max_abs())) {
    throw std::logic_error(
        "build_liouvillian: tilde-rule and Kronecker assemblies disagree");
  }

  Liouvillian liou{std::move(op), g, kappa, real, form, diff};
  return liou;
}

double trace_form_check(const Liouvillian& liou) {
  const Eigen::Index d = liou.realization.space.dim();
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(d * d);
  for (const auto& t : liou.op.entries()) {
    if (t.row() % (d + 1) == 0) {  // row is a |n,n> pair
      acc[t.col()] += t.value();
    }
  }
  double worst = 0.0;
  for (Eigen::Index j = 0; j < acc.size(); ++j) {
    worst = std::max(worst, std::abs(acc[j]));
  }
  return worst;
}

}  // namespace janus
