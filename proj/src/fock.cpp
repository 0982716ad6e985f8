#include "janus/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace janus {

namespace {
constexpr double kDropThreshold = 1e-300;
}

FockSpace::FockSpace(std::vector<int> cutoffs, Eigen::Index max_dim)
    : cutoffs_(std::move(cutoffs)) {
  if (cutoffs_.empty()) {
    throw std::invalid_argument("FockSpace: at least one mode required");
  }
  for (int c : cutoffs_) {
    if (c < 2) {
      throw std::invalid_argument("FockSpace: every cutoff must be >= 2");
    }
  }
  Eigen::Index dim = 1;
  for (int c : cutoffs_) {
    if (dim > max_dim / c) {
      throw std::invalid_argument(
          "FockSpace: dimension exceeds the configured bound");
    }
    dim *= c;
  }
  dim_ = dim;
  strides_.assign(cutoffs_.size(), 1);
  for (int m = mode_count() - 2; m >= 0; --m) {
    strides_[m] = strides_[m + 1] * cutoffs_[m + 1];
  }
}

int FockSpace::cutoff(int mode) const {
  if (mode < 0 || mode >= mode_count()) {
    throw std::invalid_argument("FockSpace: mode index out of range");
  }
  return cutoffs_[mode];
}

Eigen::Index FockSpace::index_of(std::span<const int> occupation) const {
  if (static_cast<int>(occupation.size()) != mode_count()) {
    throw std::invalid_argument("FockSpace: occupation has wrong mode count");
  }
  Eigen::Index idx = 0;
  for (int m = 0; m < mode_count(); ++m) {
    if (occupation[m] < 0 || occupation[m] >= cutoffs_[m]) {
      throw std::invalid_argument("FockSpace: occupation outside cutoff");
    }
    idx += occupation[m] * strides_[m];
  }
  return idx;
}

std::vector<int> FockSpace::occupation_of(Eigen::Index index) const {
  if (index < 0 || index >= dim_) {
    throw std::invalid_argument("FockSpace: basis index out of range");
  }
  std::vector<int> occ(cutoffs_.size());
  for (int m = 0; m < mode_count(); ++m) {
    occ[m] = static_cast<int>((index / strides_[m]) % cutoffs_[m]);
  }
  return occ;
}

int FockSpace::occupation(Eigen::Index index, int mode) const {
  if (mode < 0 || mode >= mode_count()) {
    throw std::invalid_argument("FockSpace: mode index out of range");
  }
  return static_cast<int>((index / strides_[mode]) % cutoffs_[mode]);
}

SparseOperator::SparseOperator(Eigen::SparseMatrix<Complex> mat)
    : mat_(std::move(mat)) {
  canonicalize();
}

void SparseOperator::canonicalize() {
  mat_.prune([](Eigen::Index, Eigen::Index, const Complex& v) {
    return std::abs(v) >= kDropThreshold;
  });
  mat_.makeCompressed();
}

SparseOperator SparseOperator::identity(Eigen::Index dim) {
  Eigen::SparseMatrix<Complex> m(dim, dim);
  m.setIdentity();
  return SparseOperator(std::move(m));
}

SparseOperator SparseOperator::from_triplets(
    Eigen::Index rows, Eigen::Index cols,
    const std::vector<Triplet>& entries) {
  Eigen::SparseMatrix<Complex> m(rows, cols);
  m.setFromTriplets(entries.begin(), entries.end());
  return SparseOperator(std::move(m));
}

SparseOperator SparseOperator::diagonal(const Eigen::VectorXcd& entries) {
  std::vector<Triplet> trips;
  trips.reserve(entries.size());
  for (Eigen::Index i = 0; i < entries.size(); ++i) {
    trips.emplace_back(i, i, entries[i]);
  }
  return from_triplets(entries.size(), entries.size(), trips);
}

SparseOperator SparseOperator::from_dense(const DenseMatrix& m) {
  return SparseOperator(m.sparseView().eval());
}

SparseOperator SparseOperator::adjoint() const {
  return SparseOperator(
      Eigen::SparseMatrix<Complex>(mat_.adjoint()));
}

SparseOperator SparseOperator::transpose() const {
  return SparseOperator(
      Eigen::SparseMatrix<Complex>(mat_.transpose()));
}

SparseOperator SparseOperator::conjugate() const {
  Eigen::SparseMatrix<Complex> m = mat_;
  for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(m, k); it; ++it) {
      it.valueRef() = std::conj(it.value());
    }
  }
  return SparseOperator(std::move(m));
}

StateVector SparseOperator::apply(const StateVector& v) const {
  if (v.size() != mat_.cols()) {
    throw std::invalid_argument("SparseOperator::apply: dimension mismatch");
  }
  return mat_ * v;
}

double SparseOperator::max_abs() const {
  double m = 0.0;
  for (Eigen::Index k = 0; k < mat_.outerSize(); ++k) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(mat_, k); it; ++it) {
      m = std::max(m, std::abs(it.value()));
    }
  }
  return m;
}

Complex SparseOperator::trace() const {
  Complex t = 0.0;
  const Eigen::Index n = std::min(mat_.rows(), mat_.cols());
  for (Eigen::Index i = 0; i < n; ++i) {
    t += mat_.coeff(i, i);
  }
  return t;
}

std::vector<Triplet> SparseOperator::entries() const {
  std::vector<Triplet> out;
  out.reserve(mat_.nonZeros());
  for (Eigen::Index k = 0; k < mat_.outerSize(); ++k) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(mat_, k); it; ++it) {
      out.emplace_back(it.row(), it.col(), it.value());
    }
  }
  return out;
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("SparseOperator: product dimension mismatch");
  }
  return SparseOperator(
      Eigen::SparseMatrix<Complex>(a.mat_ * b.mat_));
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("SparseOperator: sum dimension mismatch");
  }
  return SparseOperator(Eigen::SparseMatrix<Complex>(a.mat_ + b.mat_));
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("SparseOperator: difference dimension mismatch");
  }
  return SparseOperator(Eigen::SparseMatrix<Complex>(a.mat_ - b.mat_));
}

SparseOperator operator*(const Complex& s, const SparseOperator& a) {
  return SparseOperator(Eigen::SparseMatrix<Complex>(s * a.mat_));
}

SparseOperator operator*(double s, const SparseOperator& a) {
  return Complex(s, 0.0) * a;
}

SparseOperator operator-(const SparseOperator& a) {
  return Complex(-1.0, 0.0) * a;
}

bool operator==(const SparseOperator& a, const SparseOperator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() ||
      a.nonzeros() != b.nonzeros()) {
    return false;
  }
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i].row() != eb[i].row() || ea[i].col() != eb[i].col() ||
        ea[i].value() != eb[i].value()) {
      return false;
    }
  }
  return true;
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
  return a * b - b * a;
}

SparseOperator kron(const SparseOperator& a, const SparseOperator& b) {
  // Row-major pairing: entry ((ia,ib),(ja,jb)) = A(ia,ja)*B(ib,jb) at
  // row ia*b.rows()+ib, col ja*b.cols()+jb.
  std::vector<Triplet> trips;
  trips.reserve(static_cast<std::size_t>(a.nonzeros()) *
                static_cast<std::size_t>(b.nonzeros()));
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (const auto& ta : ea) {
    for (const auto& tb : eb) {
      trips.emplace_back(ta.row() * b.rows() + tb.row(),
                         ta.col() * b.cols() + tb.col(),
                         ta.value() * tb.value());
    }
  }
  return SparseOperator::from_triplets(a.rows() * b.rows(),
                                       a.cols() * b.cols(), trips);
}

double max_abs_diff(const SparseOperator& a, const SparseOperator& b) {
  return (a - b).max_abs();
}

SparseOperator ladder_op(const FockSpace& space, int mode, Ladder kind) {
  if (mode < 0 || mode >= space.mode_count()) {
    throw std::invalid_argument("ladder_op: mode index out of range");
  }
  std::vector<Triplet> trips;
  trips.reserve(space.dim());
  std::vector<int> occ;
  for (Eigen::Index idx = 0; idx < space.dim(); ++idx) {
    const int n = space.occupation(idx, mode);
    if (n == 0) continue;
    occ = space.occupation_of(idx);
    occ[mode] = n - 1;
    const Eigen::Index lowered = space.index_of(occ);
    // a|n> = sqrt(n)|n-1>, entry (n-1, n).
    trips.emplace_back(lowered, idx, Complex(std::sqrt(double(n)), 0.0));
  }
  SparseOperator lower = SparseOperator::from_triplets(space.dim(),
                                                       space.dim(), trips);
  return kind == Ladder::lower ? lower : lower.adjoint();
}

SparseOperator number_op(const FockSpace& space, int mode) {
  if (mode < 0 || mode >= space.mode_count()) {
    throw std::invalid_argument("number_op: mode index out of range");
  }
  Eigen::VectorXcd d(space.dim());
  for (Eigen::Index idx = 0; idx < space.dim(); ++idx) {
    d[idx] = Complex(double(space.occupation(idx, mode)), 0.0);
  }
  return SparseOperator::diagonal(d);
}

SparseOperator diagonal_op(
    const FockSpace& space,
    const std::function<Complex(std::span<const int>)>& f) {
  Eigen::VectorXcd d(space.dim());
  for (Eigen::Index idx = 0; idx < space.dim(); ++idx) {
    const auto occ = space.occupation_of(idx);
    d[idx] = f(std::span<const int>(occ));
  }
  return SparseOperator::diagonal(d);
}

}  // namespace janus
