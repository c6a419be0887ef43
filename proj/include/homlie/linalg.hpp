#ifndef HOMLIE_LINALG_HPP
#define HOMLIE_LINALG_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "homlie/rational.hpp"

namespace homlie {

using Mat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RowVec = Eigen::Matrix<Rat, 1, Eigen::Dynamic>;
using Index = Eigen::Index;

/// Reduces A to reduced row-echelon form in place. Pivots are the first
/// nonzero entry in each column scan, so the result is deterministic.
/// Returns the pivot column indices in increasing order.
template <typename Scalar>
std::vector<Index> rrefInPlace(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& A) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < A.cols() && row < A.rows(); ++col) {
    Index p = -1;
    for (Index r = row; r < A.rows(); ++r) {
      if (A(r, col) != Scalar(0)) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row) A.row(row).swap(A.row(p));
    const Scalar inv = Scalar(1) / A(row, col);
    A.row(row) *= inv;
    for (Index r = 0; r < A.rows(); ++r) {
      if (r == row) continue;
      if (A(r, col) != Scalar(0)) {
        A.row(r) -= A(r, col) * A.row(row);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Derived>
Mat rref(const Eigen::MatrixBase<Derived>& A,
         std::vector<Index>* pivots = nullptr) {
  Mat R = A;
  auto p = rrefInPlace(R);
  if (pivots) *pivots = std::move(p);
  return R;
}

template <typename Derived>
Index rankOf(const Eigen::MatrixBase<Derived>& A) {
  std::vector<Index> pivots;
  rref(A, &pivots);
  return static_cast<Index>(pivots.size());
}

/// Canonical subspace of coordinate space: the stored basis rows are the
/// reduced row-echelon basis, so two equal subspaces compare entrywise equal.
class Subspace {
public:
  explicit Subspace(Index ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Canonicalizes the row span of `rows` (zero rows are dropped).
  static Subspace fromRows(const Mat& rows);
  static Subspace zero(Index ambient) { return Subspace(ambient); }
  static Subspace full(Index ambient);
  /// Span of a single vector.
  static Subspace fromVector(const Vec& v);

  Index ambientDim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec basisVector(Index i) const { return basis_.row(i).transpose(); }

  bool isZero() const { return basis_.rows() == 0; }
  bool isFull() const { return basis_.rows() == ambient_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in the basis rows; empty when v is outside the span.
  std::optional<Vec> coordinatesOf(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_ || a.dim() != b.dim()) return false;
    return a.dim() == 0 || a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

private:
  Index ambient_;
  Mat basis_;
};

struct LinearSolveResult {
  std::optional<Mat> solution;  ///< one exact solution of A x = b, if any
  Subspace kernel;              ///< Null(A), canonical form
};

/// Exact Gauss-Jordan solve of A x = b (b may have several columns). The
/// particular solution sets every free variable to zero, so it is canonical.
LinearSolveResult rrefSolve(const Mat& A, const Mat& b);

Subspace kernelOf(const Mat& A);
Subspace imageOf(const Mat& A);

/// Deterministic complement: greedily adjoins standard basis vectors in
/// index order until the whole space is reached.
Subspace complementOf(const Subspace& S);

/// {w : B(w, s) = 0 for all s in S}. B must be symmetric.
Subspace orthogonalComplement(const Subspace& S, const Mat& B);

struct WittSplitResult {
  Subspace isotropic;      ///< S, paired nondegenerately with W, B(S,S) = 0
  Subspace nondegenerate;  ///< H = (S + W)-perp, B restricted to H nondegenerate
};

/// Witt decomposition of the quadratic space (ambient, B) relative to a
/// totally isotropic subspace W: ambient = S + H + W with B(S,S) = 0,
/// B(S + W, H) = 0 and S paired nondegenerately with W. Dual vectors are
/// found by solving B(s_i, w_j) = delta_ij and then corrected by half the
/// Gram matrix to kill B(S,S).
WittSplitResult wittSplit(const Mat& B, const Subspace& W);

/// Matrix of x -> B(x, .) with values in dual-basis coordinates.
Mat flatMap(const Mat& B);

/// Exact inverse; throws homlie::error when A is singular.
Mat inverseExact(const Mat& A);

bool isSymmetric(const Mat& B);
bool isZeroMat(const Mat& A);

/// Stacks the rows of `blocks` on top of each other.
Mat vstack(const std::vector<Mat>& blocks);

}  // namespace homlie

#endif
