#include "homlie/linalg.hpp"

#include <algorithm>

#include "homlie/error.hpp"

namespace homlie {

LinearSolveResult rrefSolve(const Mat& A, const Mat& b) {
  if (A.rows() != b.rows()) throw error("rrefSolve: row count mismatch");
  const Index n = A.cols();
  const Index k = b.cols();
  Mat aug(A.rows(), n + k);
  aug << A, b;
  std::vector<Index> pivots = {};
  Mat R = rref(aug, &pivots);

  LinearSolveResult out{std::nullopt, kernelOf(A)};
  // A pivot inside the right block certifies inconsistency.
  for (Index p : pivots) {
    if (p >= n) return out;
  }
  Mat x = Mat::Zero(n, k);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    x.row(pivots[r]) = R.block(static_cast<Index>(r), n, 1, k);
  }
  out.solution = std::move(x);
  return out;
}

Subspace kernelOf(const Mat& A) {
  std::vector<Index> pivots;
  Mat R = rref(A, &pivots);
  const Index n = A.cols();
  std::vector<bool> isPivot(static_cast<std::size_t>(n), false);
  for (Index p : pivots) isPivot[static_cast<std::size_t>(p)] = true;

  Mat rows(n - static_cast<Index>(pivots.size()), n);
  Index r = 0;
  for (Index freeCol = 0; freeCol < n; ++freeCol) {
    if (isPivot[static_cast<std::size_t>(freeCol)]) continue;
    RowVec v = RowVec::Zero(n);
    v(freeCol) = Rat(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v(pivots[i]) = -R(static_cast<Index>(i), freeCol);
    }
    rows.row(r++) = v;
  }
  return Subspace::fromRows(rows);
}

Subspace imageOf(const Mat& A) { return Subspace::fromRows(A.transpose()); }

Subspace complementOf(const Subspace& S) {
  const Index n = S.ambientDim();
  Mat current = S.basis();
  Mat chosen(0, n);
  for (Index i = 0; i < n && current.rows() + 0 < n; ++i) {
    if (current.rows() == n) break;
    Mat trial(current.rows() + 1, n);
    trial << current, RowVec::Zero(n);
    trial(trial.rows() - 1, i) = Rat(1);
    if (rankOf(trial) > current.rows()) {
      chosen.conservativeResize(chosen.rows() + 1, n);
      chosen.row(chosen.rows() - 1) = RowVec::Zero(n);
      chosen(chosen.rows() - 1, i) = Rat(1);
      current = rref(trial);
    }
  }
  return Subspace::fromRows(chosen);
}

Subspace orthogonalComplement(const Subspace& S, const Mat& B) {
  if (B.rows() != B.cols()) throw error("orthogonalComplement: B not square");
  if (B.rows() != S.ambientDim())
    throw error("orthogonalComplement: ambient dimension mismatch");
  if (!isSymmetric(B)) throw error("orthogonalComplement: B not symmetric");
  // B(w, s) = 0 for all basis rows s  <=>  (S.basis * B) w = 0.
  Mat M = S.basis() * B;
  return kernelOf(M);
}

WittSplitResult wittSplit(const Mat& B, const Subspace& W) {
  const Index n = B.rows();
  if (B.rows() != B.cols() || n != W.ambientDim())
    throw error("wittSplit: dimension mismatch");
  if (!isSymmetric(B)) throw error("wittSplit: B not symmetric");
  if (rankOf(B) != n) throw error("wittSplit: B degenerate");
  const Index k = W.dim();
  if (!isZeroMat(W.basis() * B * W.basis().transpose()))
    throw error("wittSplit: W not totally isotropic");

  if (k == 0) {
    return {Subspace::zero(n), Subspace::full(n)};
  }

  // Dual vectors: solve B(s_i, w_j) = delta_ij.
  Mat M = W.basis() * B;  // k x n, rows pair against w_j
  auto solved = rrefSolve(M, Mat::Identity(k, k));
  if (!solved.solution) throw error("wittSplit: no dual vectors (internal)");
  Mat sPrime = *solved.solution;  // n x k, column i is s'_i

  // Kill B(S, S): s_i = s'_i - (1/2) sum_j G_ij w_j with G the Gram matrix.
  Mat G = sPrime.transpose() * B * sPrime;  // k x k symmetric
  Mat corrected = sPrime - W.basis().transpose() * (G * Rat(1, 2)).transpose();

  Subspace S = Subspace::fromRows(corrected.transpose());
  Mat sw(2 * k, n);
  sw << S.basis(), W.basis();
  Subspace H = orthogonalComplement(Subspace::fromRows(sw), B);

  if (S.dim() != k) throw error("wittSplit: dual space has wrong dimension");
  if (!isZeroMat(S.basis() * B * S.basis().transpose()))
    throw error("wittSplit: correction failed to make S isotropic");
  if (rankOf(H.basis() * B * H.basis().transpose()) != H.dim())
    throw error("wittSplit: B degenerate on H");
  return {S, H};
}

Mat flatMap(const Mat& B) {
  if (B.rows() != B.cols()) throw error("flatMap: B not square");
  return B.transpose();
}

Mat inverseExact(const Mat& A) {
  if (A.rows() != A.cols()) throw error("inverseExact: not square");
  auto res = rrefSolve(A, Mat::Identity(A.rows(), A.rows()));
  if (!res.solution || res.kernel.dim() != 0)
    throw error("inverseExact: matrix is singular");
  return *res.solution;
}

bool isSymmetric(const Mat& B) {
  if (B.rows() != B.cols()) return false;
  for (Index i = 0; i < B.rows(); ++i)
    for (Index j = i + 1; j < B.cols(); ++j)
      if (B(i, j) != B(j, i)) return false;
  return true;
}

bool isZeroMat(const Mat& A) {
  for (Index i = 0; i < A.rows(); ++i)
    for (Index j = 0; j < A.cols(); ++j)
      if (!A(i, j).isZero()) return false;
  return true;
}

Mat vstack(const std::vector<Mat>& blocks) {
  if (blocks.empty()) return Mat(0, 0);
  Index rows = 0;
  const Index cols = blocks.front().cols();
  for (const Mat& b : blocks) rows += b.rows();
  Mat out(rows, cols);
  Index at = 0;
  for (const Mat& b : blocks) {
    out.block(at, 0, b.rows(), cols) = b;
    at += b.rows();
  }
  return out;
}

}  // namespace homlie
