#ifndef JANUS_PAIRS_HPP
#define JANUS_PAIRS_HPP

#include <optional>
#include <string>
#include <vector>

#include "janus/fock.hpp"

namespace janus {

// The four concrete realizations of the commutation contract [F, G_i^dag] = 1.
enum class JanusKind { pair_ab, square_a2, single_beta, pair_beta };

std::string to_string(JanusKind kind);
JanusKind janus_kind_from_string(const std::string& name);

struct JanusConfig {
  JanusKind kind;
  FockSpace space;
  Complex beta{0.0, 0.0};  // used by single_beta and pair_beta only
};

// A concrete (F, {G_i^dag}) pair. `charge` is the conserved quantity that
// block-diagonalizes the dynamics: n_a - n_b for the pair kinds, photon
// parity for square_a2, absent for single_beta.
struct JanusRealization {
  JanusKind kind;
  Complex beta{0.0, 0.0};
  FockSpace space;
  SparseOperator F;
  std::vector<SparseOperator> G_daggers;
  std::optional<SparseOperator> charge;

  bool has_charge() const { return charge.has_value(); }
};

JanusRealization build_pair(const JanusConfig& config);

// Truncation-aware test of the Janus contract: max over basis states with
// all occupations <= cutoff-1-margin of ||([F, G_which^dag] - I)|n>||.
// The identity cannot hold at the truncation edge, so margin >= 1 is
// required; quadratic raising operators need margin >= 2.
double commutator_residual(const JanusRealization& real, int which,
                           int margin);

// ||[F, F^dag]||_F, reported as a diagnostic for the beta-deformed kinds.
double f_fdag_commutator_norm(const JanusRealization& real);

}  // namespace janus

#endif  // JANUS_PAIRS_HPP
