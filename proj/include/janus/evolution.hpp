#ifndef JANUS_EVOLUTION_HPP
#define JANUS_EVOLUTION_HPP

#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "janus/tfd.hpp"

namespace janus {

// Raised when the adaptive step controller underflows, the usual signature
// of a generator too stiff for an explicit method.
class StepUnderflowError : public std::runtime_error {
 public:
  StepUnderflowError(double t, double h);
  double time() const { return t_; }

 private:
  double t_;
};

struct SampleObservables {
  double t = 0.0;
  Complex trace;
  double herm_dev = 0.0;  // ||rho - rho^dag||_F
  double min_eig = 0.0;
  std::vector<double> mean_n;  // per mode
  double leak = 0.0;           // population of the top two levels, any mode
  std::optional<double> fidelity_ref;  // filled by the caller when a
                                       // reference state is in play
  std::optional<double> resid_F;       // vs -2ig/kappa, kappa > 0 only
  std::optional<double> resid_Ftilde;  // vs +2ig/kappa
};

struct Trajectory {
  std::vector<double> times;
  std::vector<VectorizedState> states;
  std::vector<SampleObservables> observables;
};

struct EvolveOptions {
  double max_step = std::numeric_limits<double>::infinity();
  // Population of the top two Fock levels above this prints nothing but is
  // recorded; callers decide whether a leaky run is acceptable.
  double leak_warn_threshold = 1e-6;
};

// Adaptive Dormand-Prince 5(4) propagation of |rho(t)> = exp(op t)|rho(0)>,
// sampled at t_grid. t_grid must start at 0 and increase strictly. rho0 must
// devectorize to a Hermitian, unit-trace, positive-semidefinite matrix
// within 1e-10.
Trajectory evolve(const Liouvillian& liou, const VectorizedState& rho0,
                  const std::vector<double>& t_grid, double tol,
                  const EvolveOptions& options = {});

// Dense scaling-and-squaring matrix exponential applied to rho0. Reference
// path for the adaptive integrator; doubled dimension capped at 4096.
VectorizedState expm_oracle(const Liouvillian& liou, double t,
                            const VectorizedState& rho0);

// exp(op * t) v for an arbitrary doubled-space generator (test hook).
Eigen::VectorXcd expm_apply(const SparseOperator& op, double t,
                            const Eigen::VectorXcd& v);

// Eq-of-motion with kappa forced to zero: the pure-drive short-term regime.
VectorizedState short_term_state(const JanusRealization& real, double g,
                                 double t, const VectorizedState& rho0,
                                 double tol = 1e-10);

struct EigenvalueReport {
  Complex lambda;       // Rayleigh quotient
  double residual = 0.0;  // ||G v - lambda v|| / ||v||, interior-restricted
};

struct GEigenstateReport {
  EigenvalueReport lifted;
  EigenvalueReport tilded;
};

// Rayleigh-quotient eigenvalue extraction for G = (G_which^dag)^dag on both
// the lifted and tilde copies. margin > 0 restricts the residual to basis
// states at least that far from every cutoff.
GEigenstateReport verify_G_eigenstate(const VectorizedState& state,
                                      const JanusRealization& real, int which,
                                      int margin = 0);

// Observables of a single vectorized state (also used for steady states).
SampleObservables observables_of(const VectorizedState& state, double t,
                                 const JanusRealization& real, double g,
                                 double kappa);

}  // namespace janus

#endif  // JANUS_EVOLUTION_HPP
