#ifndef JANUS_TFD_HPP
#define JANUS_TFD_HPP

#include "janus/fock.hpp"
#include "janus/pairs.hpp"

namespace janus {

// A density matrix flattened into the doubled space H (x) H~. Amplitudes are
// ordered with the non-tilde index major, so the vector is a row-major copy
// of the matrix: amps[n*dim + m] = rho(n, m).
struct VectorizedState {
  FockSpace space;  // the single-copy space
  Eigen::VectorXcd amps;

  VectorizedState(FockSpace s, Eigen::VectorXcd a);
  Eigen::Index doubled_dim() const { return amps.size(); }
};

// |I> = sum_N |N,N>. Not normalized: ||I|| = sqrt(dim).
VectorizedState identity_vector(const FockSpace& space);

VectorizedState vectorize(const FockSpace& space, const SparseOperator& rho);
SparseOperator devectorize(const VectorizedState& v);
DenseMatrix devectorize_dense(const VectorizedState& v);

// lift(A) = A (x) I acts on the non-tilde factor; tilde(A) = I (x) conj(A)
// is the TFD partner, with entrywise conjugation in the Fock basis. They
// implement left and right multiplication: A rho <-> lift(A)|rho>,
// rho A^dag <-> tilde(A)|rho>.
SparseOperator lift(const FockSpace& space, const SparseOperator& a);
SparseOperator tilde(const FockSpace& space, const SparseOperator& a);

// <I|rho> = Tr(rho); the trace functional in the doubled space.
Complex trace_of(const VectorizedState& v);

// Ordering of the quadratic dissipator term. `vectorized` is the form
// produced by vectorizing the master equation directly (-F~^dag F~), the
// only one that preserves trace; `literal_paper` swaps it for -F~ F~^dag
// and is kept as a diagnostic.
enum class DissipatorForm { vectorized, literal_paper };

struct Liouvillian {
  SparseOperator op;  // acts on the doubled space
  double g = 0.0;
  double kappa = 0.0;
  JanusRealization realization;
  DissipatorForm form = DissipatorForm::vectorized;
  // Elementwise gap between the tilde-rule assembly and the direct
  // Kronecker assembly of the same generator.
  double equivalence_max_diff = 0.0;
};

// -i g (F - F~^dag + F^dag - F~) + kappa/2 (2 F F~ - F~^dag F~ - F^dag F),
// every symbol lifted to the doubled space. Assembled twice (tilde rule and
// direct Kronecker vectorization) and cross-checked elementwise.
Liouvillian build_liouvillian(const JanusRealization& real, double g,
                              double kappa,
                              DissipatorForm form = DissipatorForm::vectorized);

// ||<I| op||_inf; zero for a trace-preserving generator.
double trace_form_check(const Liouvillian& liou);

}  // namespace janus

#endif  // JANUS_TFD_HPP
