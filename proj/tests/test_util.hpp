#ifndef HOMLIE_TEST_UTIL_HPP
#define HOMLIE_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "homlie/extensions.hpp"

namespace homlie::testutil {

inline Rat randRat(std::mt19937& gen, int maxNum = 3, int maxDen = 2) {
  std::uniform_int_distribution<int> num(-maxNum, maxNum);
  std::uniform_int_distribution<int> den(1, maxDen);
  return Rat(num(gen), den(gen));
}

inline Vec randVec(std::mt19937& gen, Index n, int maxNum = 3, int maxDen = 1) {
  Vec v(n);
  for (Index i = 0; i < n; ++i) v(i) = randRat(gen, maxNum, maxDen);
  return v;
}

inline Mat randMat(std::mt19937& gen, Index r, Index c, int maxNum = 3,
                   int maxDen = 2) {
  Mat m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = randRat(gen, maxNum, maxDen);
  return m;
}

inline Mat randSkew(std::mt19937& gen, Index n, int maxNum = 3,
                    int maxDen = 2) {
  Mat m = Mat::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      m(i, j) = randRat(gen, maxNum, maxDen);
      m(j, i) = -m(i, j);
    }
  return m;
}

inline Mat randInvertible(std::mt19937& gen, Index n, int maxNum = 2) {
  while (true) {
    Mat m = randMat(gen, n, n, maxNum, 1);
    if (rankOf(m) == n) return m;
  }
}

/// Re-expresses the algebra in the basis whose vectors are the columns of P.
inline HomLieAlgebra conjugate(const HomLieAlgebra& A, const Mat& P) {
  const Index n = A.dim();
  Mat Pinv = inverseExact(P);
  StructureTensor t(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      t.set(i, j, Pinv * A.bracketOf(P.col(i), P.col(j)));
  Mat twist = Pinv * A.twist * P;
  std::optional<Mat> form;
  if (A.form) form = Mat(P.transpose() * (*A.form) * P);
  return HomLieAlgebra(A.name + "_conj", {}, std::move(t), std::move(twist),
                       std::move(form));
}

inline HomLieAlgebra directSum(const HomLieAlgebra& A, const HomLieAlgebra& B) {
  const Index n1 = A.dim(), n2 = B.dim(), n = n1 + n2;
  StructureTensor t(n);
  for (Index i = 0; i < n1; ++i)
    for (Index j = i + 1; j < n1; ++j) {
      Vec v = Vec::Zero(n);
      v.head(n1) = A.bracket.entry(i, j);
      t.set(i, j, v);
    }
  for (Index i = 0; i < n2; ++i)
    for (Index j = i + 1; j < n2; ++j) {
      Vec v = Vec::Zero(n);
      v.tail(n2) = B.bracket.entry(i, j);
      t.set(n1 + i, n1 + j, v);
    }
  Mat twist = Mat::Zero(n, n);
  twist.topLeftCorner(n1, n1) = A.twist;
  twist.bottomRightCorner(n2, n2) = B.twist;
  std::optional<Mat> form;
  if (A.form && B.form) {
    Mat F = Mat::Zero(n, n);
    F.topLeftCorner(n1, n1) = *A.form;
    F.bottomRightCorner(n2, n2) = *B.form;
    form = std::move(F);
  }
  return HomLieAlgebra(A.name + "+" + B.name, {}, std::move(t),
                       std::move(twist), std::move(form));
}

/// Heisenberg bracket [e0, e1] = e2 with identity twist: a nilpotent algebra
/// whose twist is trivially equivariant.
inline HomLieAlgebra heisenberg() {
  StructureTensor t(3);
  Vec e2 = Vec::Zero(3);
  e2(2) = Rat(1);
  t.set(0, 1, e2);
  return HomLieAlgebra("heisenberg", {}, std::move(t), Mat::Identity(3, 3),
                       std::nullopt);
}

inline HomLieAlgebra abelian(Index n, bool withForm = true) {
  return HomLieAlgebra("abelian" + std::to_string(n), {}, StructureTensor(n),
                       Mat::Zero(n, n),
                       withForm ? std::optional<Mat>(Mat::Identity(n, n))
                                : std::nullopt);
}

/// The cyclic sl2 table as a quadratic Lie algebra (identity twist).
inline HomLieAlgebra sl2Lie() {
  return HomLieAlgebra("sl2", {}, sl2CyclicBracket(), Mat::Identity(3, 3),
                       Mat::Identity(3, 3));
}

/// Brute-force hom-Jacobi evaluator: expands everything over raw stored
/// structure constants with explicit sign handling, no shared evaluation
/// path with StructureTensor::eval.
inline Vec oracleHomJacobi(const HomLieAlgebra& A, const Vec& x, const Vec& y,
                           const Vec& z) {
  const Index n = A.dim();
  const auto raw = [&](Index i, Index j) -> Vec {
    if (i == j) return Vec::Zero(n);
    if (i < j) return A.bracket.entry(i, j);
    return -A.bracket.entry(j, i);
  };
  const auto rawBracket = [&](const Vec& u, const Vec& v) {
    Vec out = Vec::Zero(n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        const Rat c = u(i) * v(j);
        if (c.isZero()) continue;
        out += c * raw(i, j);
      }
    return out;
  };
  const Vec tx = A.twist * x, ty = A.twist * y, tz = A.twist * z;
  return rawBracket(tx, rawBracket(y, z)) + rawBracket(ty, rawBracket(z, x)) +
         rawBracket(tz, rawBracket(x, y));
}

/// Shipped inventory used by the property suites.
inline std::vector<HomLieAlgebra> shippedAlgebras() {
  std::vector<HomLieAlgebra> out;
  out.push_back(sl2Example(Rat(1)));
  out.push_back(sl2Example(Rat(0)));
  out.push_back(sl2Example(Rat(2)));
  out.push_back(lineExampleToy());
  out.push_back(heisenberg());
  out.push_back(abelian(3));
  out.push_back(sl2Lie());
  return out;
}

}  // namespace homlie::testutil

#endif
