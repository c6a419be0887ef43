#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homlie/error.hpp"
#include "homlie/linalg.hpp"
#include "test_util.hpp"

using namespace homlie;
using testutil::randInvertible;
using testutil::randMat;

namespace {

Vec vec(std::initializer_list<Rat> xs) {
  Vec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const Rat& x : xs) v(i++) = x;
  return v;
}

Mat mat2(Rat a, Rat b, Rat c, Rat d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("solve: identity system") {
  auto res = rrefSolve(Mat::Identity(2, 2), Mat(vec({Rat(1, 2), Rat(3)})));
  REQUIRE(res.solution.has_value());
  CHECK(Vec(res.solution->col(0)) == vec({Rat(1, 2), Rat(3)}));
  CHECK(res.kernel.dim() == 0);
}

TEST_CASE("solve: zero map") {
  auto res = rrefSolve(Mat::Zero(2, 2), Mat(Vec(Vec::Zero(2))));
  REQUIRE(res.solution.has_value());
  CHECK(Vec(res.solution->col(0)) == Vec::Zero(2));
  CHECK(res.kernel.dim() == 2);
}

TEST_CASE("solve: rank-deficient consistent system") {
  // Hand elimination: rows (1,1 | 1) and (2,2 | 2) reduce to x0 + x1 = 1,
  // so the canonical solution (free variable zero) is (1, 0) and the kernel
  // is spanned by (1, -1).
  Mat A = mat2(Rat(1), Rat(1), Rat(2), Rat(2));
  auto res = rrefSolve(A, Mat(vec({Rat(1), Rat(2)})));
  REQUIRE(res.solution.has_value());
  CHECK(Vec(res.solution->col(0)) == vec({Rat(1), Rat(0)}));
  CHECK(res.kernel.dim() == 1);
  CHECK(res.kernel.basisVector(0) == vec({Rat(1), Rat(-1)}));
}

TEST_CASE("solve: inconsistent system still returns the kernel") {
  Mat A = mat2(Rat(1), Rat(1), Rat(2), Rat(2));
  auto res = rrefSolve(A, Mat(vec({Rat(1), Rat(3)})));
  CHECK_FALSE(res.solution.has_value());
  CHECK(res.kernel.dim() == 1);
}

TEST_CASE("solve: multiple right-hand sides") {
  Mat A(2, 2);
  A << Rat(2), Rat(0), Rat(1), Rat(1);
  auto res = rrefSolve(A, Mat::Identity(2, 2));
  REQUIRE(res.solution.has_value());
  CHECK(Mat(A * (*res.solution)) == Mat::Identity(2, 2));
}

TEST_CASE("kernel and image of extreme maps") {
  CHECK(kernelOf(Mat::Zero(3, 3)) == Subspace::full(3));
  CHECK(imageOf(Mat::Zero(3, 3)).dim() == 0);
  CHECK(kernelOf(Mat::Identity(3, 3)).dim() == 0);
  CHECK(imageOf(Mat::Identity(3, 3)) == Subspace::full(3));
}

TEST_CASE("rank-nullity holds exactly on random matrices") {
  std::mt19937 gen(11);
  std::uniform_int_distribution<int> dims(1, 8);
  for (int iter = 0; iter < 200; ++iter) {
    const Index r = dims(gen), c = dims(gen);
    Mat A = randMat(gen, r, c);
    CHECK(kernelOf(A).dim() + imageOf(A).dim() == c);
  }
}

TEST_CASE("subspace canonical form makes equality entrywise") {
  Mat rows(2, 3);
  rows << Rat(1), Rat(1), Rat(0), Rat(0), Rat(2), Rat(2);
  Mat scaled(2, 3);
  scaled << Rat(3), Rat(3), Rat(0), Rat(1), Rat(3), Rat(2);
  CHECK(Subspace::fromRows(rows) == Subspace::fromRows(scaled));
  CHECK(Subspace::fromRows(rows).dim() == 2);
}

TEST_CASE("subspace membership, sum and intersection") {
  Mat rows(1, 3);
  rows << Rat(1), Rat(1), Rat(0);
  Subspace S = Subspace::fromRows(rows);
  CHECK(S.contains(vec({Rat(2), Rat(2), Rat(0)})));
  CHECK_FALSE(S.contains(vec({Rat(1), Rat(0), Rat(0)})));

  Mat rows2(1, 3);
  rows2 << Rat(0), Rat(1), Rat(1);
  Subspace T2 = Subspace::fromRows(rows2);
  CHECK(S.sum(T2).dim() == 2);
  CHECK(S.intersect(T2).dim() == 0);
  CHECK(S.sum(T2).intersect(S) == S);
}

TEST_CASE("complement prefers earliest standard basis vectors") {
  CHECK(complementOf(Subspace::zero(2)) == Subspace::full(2));

  Mat e0(1, 2);
  e0 << Rat(1), Rat(0);
  Subspace C = complementOf(Subspace::fromRows(e0));
  REQUIRE(C.dim() == 1);
  CHECK(C.basisVector(0) == vec({Rat(0), Rat(1)}));

  // Nine-dimensional case: complement of the last three coordinates picks
  // the first six standard basis vectors.
  Mat tail(3, 9);
  tail.setZero();
  tail(0, 6) = Rat(1);
  tail(1, 7) = Rat(1);
  tail(2, 8) = Rat(1);
  Subspace C9 = complementOf(Subspace::fromRows(tail));
  REQUIRE(C9.dim() == 6);
  for (Index i = 0; i < 6; ++i) {
    Vec e = Vec::Zero(9);
    e(i) = Rat(1);
    CHECK(C9.basisVector(i) == e);
  }
}

TEST_CASE("complement splits the space on random subspaces") {
  std::mt19937 gen(23);
  std::uniform_int_distribution<int> dims(1, 8);
  for (int iter = 0; iter < 200; ++iter) {
    const Index n = dims(gen);
    std::uniform_int_distribution<int> rows(0, static_cast<int>(n));
    Subspace S = Subspace::fromRows(randMat(gen, rows(gen), n));
    Subspace C = complementOf(S);
    CHECK(S.dim() + C.dim() == n);
    CHECK(S.intersect(C).dim() == 0);
    CHECK(S.sum(C).isFull());
  }
}

TEST_CASE("orthogonal complement") {
  CHECK(orthogonalComplement(Subspace::full(3), Mat::Identity(3, 3)).dim() == 0);

  // Hyperbolic plane: the span of e0 is its own orthogonal.
  Mat B = mat2(Rat(0), Rat(1), Rat(1), Rat(0));
  Mat e0(1, 2);
  e0 << Rat(1), Rat(0);
  Subspace S = Subspace::fromRows(e0);
  CHECK(orthogonalComplement(S, B) == S);

  Mat asym = mat2(Rat(0), Rat(1), Rat(2), Rat(0));
  CHECK_THROWS_AS(orthogonalComplement(S, asym), error);
}

TEST_CASE("witt split: trivial and hyperbolic base cases") {
  auto nothing = wittSplit(Mat::Identity(3, 3), Subspace::zero(3));
  CHECK(nothing.isotropic.dim() == 0);
  CHECK(nothing.nondegenerate == Subspace::full(3));

  Mat B = mat2(Rat(0), Rat(1), Rat(1), Rat(0));
  Mat e1(1, 2);
  e1 << Rat(0), Rat(1);
  auto split = wittSplit(B, Subspace::fromRows(e1));
  REQUIRE(split.isotropic.dim() == 1);
  CHECK(split.isotropic.basisVector(0) == vec({Rat(1), Rat(0)}));
  CHECK(split.nondegenerate.dim() == 0);
}

TEST_CASE("witt split rejects bad inputs") {
  Mat e0(1, 2);
  e0 << Rat(1), Rat(0);
  CHECK_THROWS_AS(wittSplit(Mat::Identity(2, 2), Subspace::fromRows(e0)),
                  error);  // e0 is not isotropic for the identity form
  Mat degenerate = mat2(Rat(1), Rat(0), Rat(0), Rat(0));
  CHECK_THROWS_AS(wittSplit(degenerate, Subspace::zero(2)), error);
}

TEST_CASE("witt split satisfies its contract on random quadratic spaces") {
  std::mt19937 gen(31);
  std::uniform_int_distribution<int> dims(2, 8);
  std::uniform_int_distribution<int> sign(0, 1);
  int done = 0;
  while (done < 1000) {
    const Index n = dims(gen);
    std::uniform_int_distribution<int> iso(0, static_cast<int>(n / 2));
    const Index k = iso(gen);
    // Pull a standard form with a known isotropic block back through a
    // random invertible change of coordinates.
    Mat B0 = Mat::Zero(n, n);
    for (Index i = 0; i < k; ++i) {
      B0(i, k + i) = Rat(1);
      B0(k + i, i) = Rat(1);
    }
    for (Index i = 2 * k; i < n; ++i) B0(i, i) = sign(gen) ? Rat(1) : Rat(-1);
    Mat P = randInvertible(gen, n);
    Mat B = P.transpose() * B0 * P;
    Mat Pinv = inverseExact(P);
    Mat w0 = Mat::Zero(k, n);
    for (Index i = 0; i < k; ++i) w0(i, i) = Rat(1);
    Subspace W = Subspace::fromRows(w0 * Pinv.transpose());

    auto split = wittSplit(B, W);
    const Subspace& S = split.isotropic;
    const Subspace& H = split.nondegenerate;
    ++done;

    CHECK(S.dim() + H.dim() + W.dim() == n);
    CHECK(S.sum(H).sum(W).isFull());
    CHECK(isZeroMat(S.basis() * B * S.basis().transpose()));
    CHECK(isZeroMat(S.basis() * B * H.basis().transpose()));
    CHECK(isZeroMat(W.basis() * B * H.basis().transpose()));
    CHECK(rankOf(H.basis() * B * H.basis().transpose()) == H.dim());
    CHECK(rankOf(S.basis() * B * W.basis().transpose()) == k);
  }
}

TEST_CASE("kernel and image of the example twist") {
  HomLieAlgebra A = sl2Example(Rat(1));
  Mat dualRows(3, 9);
  dualRows.setZero();
  for (Index i = 0; i < 3; ++i) dualRows(i, 6 + i) = Rat(1);
  CHECK(imageOf(A.twist) == Subspace::fromRows(dualRows));

  Mat kernelRows(6, 9);
  kernelRows.setZero();
  for (Index i = 0; i < 6; ++i) kernelRows(i, 3 + i) = Rat(1);
  CHECK(kernelOf(A.twist) == Subspace::fromRows(kernelRows));
}

TEST_CASE("witt split of the example along the dual block") {
  HomLieAlgebra A = sl2Example(Rat(1));
  Mat dualRows(3, 9);
  dualRows.setZero();
  for (Index i = 0; i < 3; ++i) dualRows(i, 6 + i) = Rat(1);
  auto split = wittSplit(*A.form, Subspace::fromRows(dualRows));

  Mat sRows(3, 9), hRows(3, 9);
  sRows.setZero();
  hRows.setZero();
  for (Index i = 0; i < 3; ++i) {
    sRows(i, i) = Rat(1);      // the acting block
    hRows(i, 3 + i) = Rat(1);  // the core block
  }
  CHECK(split.isotropic == Subspace::fromRows(sRows));
  CHECK(split.nondegenerate == Subspace::fromRows(hRows));
}

TEST_CASE("flat map") {
  CHECK(flatMap(Mat::Identity(3, 3)) == Mat::Identity(3, 3));
  Mat D = mat2(Rat(2), Rat(0), Rat(0), Rat(3));
  CHECK(flatMap(D) == D);
  // For the identity form the flat of a basis vector is the dual vector with
  // the same index.
  Vec flat = flatMap(Mat::Identity(3, 3)) * vec({Rat(0), Rat(1), Rat(0)});
  CHECK(flat == vec({Rat(0), Rat(1), Rat(0)}));
}

TEST_CASE("exact inverse") {
  std::mt19937 gen(41);
  for (int iter = 0; iter < 50; ++iter) {
    Mat P = randInvertible(gen, 5);
    CHECK(Mat(P * inverseExact(P)) == Mat::Identity(5, 5));
  }
  CHECK_THROWS_AS(inverseExact(Mat::Zero(2, 2)), error);
}
