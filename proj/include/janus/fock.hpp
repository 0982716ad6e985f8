#ifndef JANUS_FOCK_HPP
#define JANUS_FOCK_HPP

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace janus {

using Complex = std::complex<double>;
using Triplet = Eigen::Triplet<Complex>;
using StateVector = Eigen::VectorXcd;
using DenseMatrix = Eigen::MatrixXcd;

// Truncated multimode bosonic Hilbert space. Mode m keeps occupations
// 0..cutoff[m]-1; the basis index <-> occupation multi-index bijection is
// row-major (first mode most significant), so index(|2,1>) at cutoffs [3,3]
// is 2*3+1 = 7.
class FockSpace {
 public:
  static constexpr Eigen::Index kDefaultMaxDim = Eigen::Index(1) << 22;

  explicit FockSpace(std::vector<int> cutoffs,
                     Eigen::Index max_dim = kDefaultMaxDim);

  int mode_count() const { return static_cast<int>(cutoffs_.size()); }
  Eigen::Index dim() const { return dim_; }
  const std::vector<int>& cutoffs() const { return cutoffs_; }
  int cutoff(int mode) const;

  Eigen::Index index_of(std::span<const int> occupation) const;
  std::vector<int> occupation_of(Eigen::Index index) const;
  int occupation(Eigen::Index index, int mode) const;

  bool operator==(const FockSpace& other) const {
    return cutoffs_ == other.cutoffs_;
  }

 private:
  std::vector<int> cutoffs_;
  std::vector<Eigen::Index> strides_;  // row-major strides
  Eigen::Index dim_ = 0;
};

// Complex sparse matrix with a canonical entry list: duplicates summed,
// entries below 1e-300 in magnitude dropped, compressed column-major storage.
// All operations are pure; instances are immutable after construction.
class SparseOperator {
 public:
  SparseOperator() = default;
  SparseOperator(Eigen::Index rows, Eigen::Index cols) : mat_(rows, cols) {
    mat_.makeCompressed();
  }
  explicit SparseOperator(Eigen::SparseMatrix<Complex> mat);

  static SparseOperator identity(Eigen::Index dim);
  static SparseOperator from_triplets(Eigen::Index rows, Eigen::Index cols,
                                      const std::vector<Triplet>& entries);
  static SparseOperator diagonal(const Eigen::VectorXcd& entries);
  static SparseOperator from_dense(const DenseMatrix& m);

  Eigen::Index rows() const { return mat_.rows(); }
  Eigen::Index cols() const { return mat_.cols(); }
  Eigen::Index nonzeros() const { return mat_.nonZeros(); }

  SparseOperator adjoint() const;
  SparseOperator transpose() const;
  SparseOperator conjugate() const;  // entrywise, in the Fock basis

  StateVector apply(const StateVector& v) const;
  DenseMatrix dense() const { return DenseMatrix(mat_); }

  double frobenius_norm() const { return mat_.norm(); }
  double max_abs() const;
  Complex coeff(Eigen::Index row, Eigen::Index col) const {
    return mat_.coeff(row, col);
  }
  Complex trace() const;

  // Canonical coordinate list, column-major sorted.
  std::vector<Triplet> entries() const;

  const Eigen::SparseMatrix<Complex>& matrix() const { return mat_; }

  friend SparseOperator operator*(const SparseOperator& a,
                                  const SparseOperator& b);
  friend SparseOperator operator+(const SparseOperator& a,
                                  const SparseOperator& b);
  friend SparseOperator operator-(const SparseOperator& a,
                                  const SparseOperator& b);
  friend SparseOperator operator*(const Complex& s, const SparseOperator& a);
  friend SparseOperator operator*(double s, const SparseOperator& a);
  friend SparseOperator operator-(const SparseOperator& a);

  // Exact comparison of dimensions and canonical entry lists.
  friend bool operator==(const SparseOperator& a, const SparseOperator& b);

 private:
  void canonicalize();
  Eigen::SparseMatrix<Complex> mat_;
};

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);
SparseOperator kron(const SparseOperator& a, const SparseOperator& b);
double max_abs_diff(const SparseOperator& a, const SparseOperator& b);

enum class Ladder { lower, raise };

// Annihilation/creation operator for one mode, embedded in the full space.
// The raising operator truncates at the top level: the sqrt(N) amplitude out
// of level N-1 is absent because the target state exceeds the cutoff.
SparseOperator ladder_op(const FockSpace& space, int mode, Ladder kind);
SparseOperator number_op(const FockSpace& space, int mode);

// Diagonal operator from a function of the occupation multi-index.
SparseOperator diagonal_op(
    const FockSpace& space,
    const std::function<Complex(std::span<const int>)>& f);

}  // namespace janus

#endif  // JANUS_FOCK_HPP
