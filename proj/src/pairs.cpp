#include "janus/pairs.hpp"

#include <cmath>
#include <stdexcept>

namespace janus {

namespace {

// diag(1/(n_mode + shift)) over basis occupations; shift >= 1 keeps every
// entry finite.
SparseOperator inverse_number_diag(const FockSpace& space, int mode,
                                   double shift) {
  Eigen::VectorXcd d(space.dim());
  for (Eigen::Index idx = 0; idx < space.dim(); ++idx) {
    d[idx] = Complex(1.0 / (space.occupation(idx, mode) + shift), 0.0);
  }
  return SparseOperator::diagonal(d);
}

SparseOperator parity_diag(const FockSpace& space, int mode) {
  Eigen::VectorXcd d(space.dim());
  for (Eigen::Index idx = 0; idx < space.dim(); ++idx) {
    d[idx] = Complex(space.occupation(idx, mode) % 2 == 0 ? 1.0 : -1.0, 0.0);
  }
  return SparseOperator::diagonal(d);
}

}  // namespace

std::string to_string(JanusKind kind) {
  switch (kind) {
    case JanusKind::pair_ab:     return "pair_ab";
    case JanusKind::square_a2:   return "square_a2";
    case JanusKind::single_beta: return "single_beta";
    case JanusKind::pair_beta:   return "pair_beta";
  }
  throw std::logic_error("unknown JanusKind");
}

JanusKind janus_kind_from_string(const std::string& name) {
  if (name == "pair_ab")     return JanusKind::pair_ab;
  if (name == "square_a2")   return JanusKind::square_a2;
  if (name == "single_beta") return JanusKind::single_beta;
  if (name == "pair_beta")   return JanusKind::pair_beta;
  throw std::invalid_argument("unknown realization kind: " + name);
}

JanusRealization build_pair(const JanusConfig& config) {
  const FockSpace& space = config.space;
  const bool two_mode = config.kind == JanusKind::pair_ab ||
                        config.kind == JanusKind::pair_beta;
  if (two_mode && space.mode_count() < 2) {
    throw std::invalid_argument(to_string(config.kind) +
                                " requires at least two modes");
  }

  JanusRealization real{config.kind, config.beta, space, SparseOperator(),
                        {}, std::nullopt};

  const SparseOperator a = ladder_op(space, 0, Ladder::lower);
  const SparseOperator a_dag = ladder_op(space, 0, Ladder::raise);

  switch (config.kind) {
    case JanusKind::pair_ab:
    case JanusKind::pair_beta: {
      const SparseOperator b = ladder_op(space, 1, Ladder::lower);
      const SparseOperator b_dag = ladder_op(space, 1, Ladder::raise);
      const SparseOperator ab = a * b;
      const SparseOperator ab_dag = a_dag * b_dag;
      real.F = config.kind == JanusKind::pair_ab
                   ? ab
                   : ab + config.beta * ab_dag;
      // Conjugates a^dag b^dag/(n_b+1) and a^dag b^dag/(n_a+1), the diagonal
      // acting first. These give [ab, G_i^dag] = 1 exactly on the interior.
      real.G_daggers = {ab_dag * inverse_number_diag(space, 1, 1.0),
                        ab_dag * inverse_number_diag(space, 0, 1.0)};
      real.charge = number_op(space, 0) - number_op(space, 1);
      break;
    }
    case JanusKind::square_a2:
    case JanusKind::single_beta: {
      const SparseOperator a2 = a * a;
      const SparseOperator a2_dag = a_dag * a_dag;
      real.F = config.kind == JanusKind::square_a2
                   ? a2
                   : a + config.beta * a2_dag;
      // Conjugates a^dag^2/2 * 1/(n_a+1) and a^dag^2/2 * 1/(n_a+2); the
      // same operators serve both kinds. For single_beta the contract is
      // not exact and the residual is reported, never asserted.
      real.G_daggers = {0.5 * (a2_dag * inverse_number_diag(space, 0, 1.0)),
                        0.5 * (a2_dag * inverse_number_diag(space, 0, 2.0))};
      if (config.kind == JanusKind::square_a2) {
        real.charge = parity_diag(space, 0);
      }
      break;
    }
  }
  return real;
}

double commutator_residual(const JanusRealization& real, int which,
                           int margin) {
  if (margin < 1) {
    throw std::invalid_argument("commutator_residual: margin must be >= 1");
  }
  if (which < 0 || which >= static_cast<int>(real.G_daggers.size())) {
    throw std::invalid_argument("commutator_residual: no such conjugate");
  }
  const FockSpace& space = real.space;
  const SparseOperator defect =
      commutator(real.F, real.G_daggers[which]) -
      SparseOperator::identity(space.dim());

  double worst = -1.0;
  StateVector basis = StateVector::Zero(space.dim());
  for (Eigen::Index idx = 0; idx < space.dim(); ++idx) {
    bool interior = true;
    for (int m = 0; m < space.mode_count(); ++m) {
      if (space.occupation(idx, m) > space.cutoff(m) - 1 - margin) {
        interior = false;
        break;
      }
    }
    if (!interior) continue;
    basis[idx] = 1.0;
    worst = std::max(worst, defect.apply(basis).norm());
    basis[idx] = 0.0;
  }
  if (worst < 0.0) {
    throw std::invalid_argument(
        "commutator_residual: interior subspace is empty at this margin");
  }
  return worst;
}

double f_fdag_commutator_norm(const JanusRealization& real) {
  return commutator(real.F, real.F.adjoint()).frobenius_norm();
}

}  // namespace janus
