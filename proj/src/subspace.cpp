#include "homlie/error.hpp"
#include "homlie/linalg.hpp"

namespace homlie {

Subspace Subspace::fromRows(const Mat& rows) {
  Subspace out(rows.cols());
  std::vector<Index> pivots;
  Mat R = rref(rows, &pivots);
  out.basis_ = R.topRows(static_cast<Index>(pivots.size()));
  return out;
}

Subspace Subspace::full(Index ambient) {
  Subspace out(ambient);
  out.basis_ = Mat::Identity(ambient, ambient);
  return out;
}

Subspace Subspace::fromVector(const Vec& v) {
  return fromRows(v.transpose());
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw error("Subspace: ambient mismatch");
  // Reduce v against the echelon rows; membership iff the remainder is zero.
  Vec r = v;
  for (Index i = 0; i < basis_.rows(); ++i) {
    Index lead = -1;
    for (Index j = 0; j < ambient_; ++j) {
      if (!basis_(i, j).isZero()) {
        lead = j;
        break;
      }
    }
    if (lead >= 0 && !r(lead).isZero()) {
      r -= r(lead) * basis_.row(i).transpose();
    }
  }
  for (Index j = 0; j < ambient_; ++j)
    if (!r(j).isZero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw error("Subspace: ambient mismatch");
  for (Index i = 0; i < other.basis_.rows(); ++i) {
    if (!contains(other.basisVector(i))) return false;
  }
  return true;
}

std::optional<Vec> Subspace::coordinatesOf(const Vec& v) const {
  auto res = rrefSolve(basis_.transpose(), v);
  if (!res.solution) return std::nullopt;
  return Vec(res.solution->col(0));
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw error("Subspace: ambient mismatch");
  Mat rows(dim() + other.dim(), ambient_);
  rows << basis_, other.basis_;
  return fromRows(rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw error("Subspace: ambient mismatch");
  if (dim() == 0 || other.dim() == 0) return zero(ambient_);
  // x^T basis = y^T otherBasis  <=>  (basis^T | -otherBasis^T) (x; y) = 0.
  Mat M(ambient_, dim() + other.dim());
  M << basis_.transpose(), -other.basis_.transpose();
  Subspace K = kernelOf(M);
  Mat rows(K.dim(), ambient_);
  for (Index i = 0; i < K.dim(); ++i) {
    Vec xy = K.basisVector(i);
    rows.row(i) = xy.head(dim()).transpose() * basis_;
  }
  return fromRows(rows);
}

}  // namespace homlie
