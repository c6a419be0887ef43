#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homlie/error.hpp"
#include "test_util.hpp"

using namespace homlie;
namespace tu = testutil;

namespace {

Vec unit(Index n, Index i) {
  Vec v = Vec::Zero(n);
  v(i) = Rat(1);
  return v;
}

DoubleExtensionData randomDoubleData(std::mt19937& gen, Index coreDim,
                                     const Rat& eta) {
  std::vector<Mat> rho;
  for (int i = 0; i < 3; ++i) rho.push_back(tu::randSkew(gen, coreDim));
  return DoubleExtensionData{tu::abelian(coreDim), sl2CyclicBracket(),
                             Mat::Identity(3, 3), Mat::Zero(coreDim, 3),
                             std::move(rho), eta};
}

LineExtensionData randomLineData(std::mt19937& gen, Index coreDim,
                                 const Rat& lambda) {
  return LineExtensionData{tu::abelian(coreDim), tu::randSkew(gen, coreDim),
                           Vec::Zero(coreDim), lambda};
}

}  // namespace

TEST_CASE("validation of the shipped double-extension data") {
  CHECK(validateDoubleExtension(sl2ExampleData(Rat(1))).allPassed());
  CHECK(validateDoubleExtension(sl2ExampleData(Rat(0))).allPassed());
}

TEST_CASE("validation rejects an action map outside the orthogonal algebra") {
  DoubleExtensionData data = sl2ExampleData(Rat(1));
  data.rho[0] = Mat::Identity(3, 3);
  CheckReport r = validateDoubleExtension(data);
  CHECK_FALSE(r.allPassed());
  CHECK_FALSE(r.find("rho_in_oB")->passed);
  CHECK_THROWS_AS(doubleExtend(data), error);
}

TEST_CASE("validation accepts any skew action over an abelian core") {
  std::mt19937 gen(3);
  for (int iter = 0; iter < 10; ++iter) {
    auto data = randomDoubleData(gen, 3, tu::randRat(gen));
    CHECK(validateDoubleExtension(data).allPassed());
  }
}

TEST_CASE("double extension reproduces the printed bracket tables") {
  HomLieAlgebra A = sl2Example(Rat(1));
  REQUIRE(A.dim() == 9);
  // acting block
  CHECK(A.bracket.entry(0, 1) == unit(9, 2));
  CHECK(A.bracket.entry(1, 2) == unit(9, 0));
  CHECK(A.bracket.entry(0, 2) == -unit(9, 1));
  // action on the core
  CHECK(A.bracket.entry(0, 3) == -unit(9, 4));
  CHECK(A.bracket.entry(0, 4) == unit(9, 3));
  CHECK(A.bracket.entry(2, 3) == -unit(9, 5));
  CHECK(A.bracket.entry(2, 5) == unit(9, 3));
  // coadjoint block
  CHECK(A.bracket.entry(0, 7) == unit(9, 8));
  CHECK(A.bracket.entry(1, 8) == unit(9, 6));
  CHECK(A.bracket.entry(2, 6) == unit(9, 7));
  CHECK(A.bracket.entry(0, 6) == Vec::Zero(9));
  // dual-valued core pairing
  CHECK(A.bracket.entry(3, 4) == Vec(unit(9, 7) - unit(9, 6)));
  CHECK(A.bracket.entry(3, 5) == -unit(9, 8));
  CHECK(A.bracket.entry(4, 5) == Vec::Zero(9));
  // core and dual commute
  for (Index a = 3; a < 6; ++a)
    for (Index b = 6; b < 9; ++b)
      CHECK(A.bracket.entry(a, b) == Vec::Zero(9));
}

TEST_CASE("double extension twist and form") {
  HomLieAlgebra A = sl2Example(Rat(1));
  for (Index j = 0; j < 3; ++j) {
    CHECK(Vec(A.twist.col(j)) == unit(9, 6 + j));
    CHECK(Vec(A.twist.col(3 + j)) == Vec::Zero(9));
    CHECK(Vec(A.twist.col(6 + j)) == Vec::Zero(9));
  }
  CHECK(isZeroMat(A.twist * A.twist));
  REQUIRE(A.form.has_value());
  const Mat& B = *A.form;
  CHECK(B(0, 6) == Rat(1));
  CHECK(B(3, 3) == Rat(1));
  CHECK(B(0, 0) == Rat(0));
  CHECK(isSymmetric(B));

  HomLieAlgebra A2 = sl2Example(Rat(1, 2));
  CHECK(Vec(A2.twist.col(0)) == Vec(unit(9, 6) * Rat(1, 2)));
  CHECK(isZeroMat(A2.twist * A2.twist));

  // eta = 0 still yields a quadratic algebra, with a zero twist.
  HomLieAlgebra A0 = sl2Example(Rat(0));
  CHECK(isZeroMat(A0.twist));
  CHECK(checkQuadraticHomLie(A0).allPassed());
}

TEST_CASE("dual block sits in the twist kernel and commutes with the core") {
  std::mt19937 gen(19);
  for (int iter = 0; iter < 10; ++iter) {
    std::uniform_int_distribution<int> cd(1, 4);
    auto data = randomDoubleData(gen, cd(gen), tu::randRat(gen));
    HomLieAlgebra A = doubleExtend(data);
    const Index r = 3, m = data.core.dim();
    for (Index j = 0; j < r; ++j)
      CHECK(Vec(A.twist * unit(A.dim(), r + m + j)) == Vec::Zero(A.dim()));
    for (Index a = 0; a < m; ++a)
      for (Index b = 0; b < r; ++b)
        CHECK(A.bracket.entry(r + a, r + m + b) == Vec::Zero(A.dim()));
  }
}

TEST_CASE("random double extensions pass the full axiom suite") {
  std::mt19937 gen(29);
  std::uniform_int_distribution<int> cd(1, 4);
  for (int iter = 0; iter < 25; ++iter) {
    auto data = randomDoubleData(gen, cd(gen), tu::randRat(gen));
    HomLieAlgebra A = doubleExtend(data);
    CHECK(checkQuadraticHomLie(A).allPassed());
  }
}

TEST_CASE("validation of the line-extension toy data") {
  CHECK(validateLineExtension(lineExampleToyData()).allPassed());
}

TEST_CASE("line validation rejects a vector outside the kernel of the map") {
  LineExtensionData data = lineExampleToyData();
  data.vprime = unit(2, 0);
  CheckReport r = validateLineExtension(data);
  CHECK_FALSE(r.allPassed());
  CHECK(r.find("cond_i")->passed);  // both sides vanish over the abelian core
  CHECK_FALSE(r.find("cond_iii")->passed);
}

TEST_CASE("line validation rejects a non-skew map") {
  LineExtensionData data = lineExampleToyData();
  data.dmap = Mat::Identity(2, 2);
  CheckReport r = validateLineExtension(data);
  CHECK_FALSE(r.find("dmap_in_oB")->passed);
  CHECK_THROWS_AS(lineExtend(data), error);
}

TEST_CASE("line extension values") {
  HomLieAlgebra A = lineExampleToy();
  REQUIRE(A.dim() == 4);
  // Basis order (d, u1, u2, c); D sends u1 -> -u2 and u2 -> u1.
  CHECK(A.bracket.entry(0, 1) == -unit(4, 2));
  CHECK(A.bracket.entry(0, 2) == unit(4, 1));
  CHECK(A.bracket.entry(1, 2) == -unit(4, 3));  // B(D(u1), u2) = -1
  CHECK(A.bracket.entry(0, 3) == Vec::Zero(4));
  CHECK(Vec(A.twist.col(0)) == unit(4, 3));  // T(d) = c
  for (Index j = 1; j < 4; ++j) CHECK(Vec(A.twist.col(j)) == Vec::Zero(4));
  // c is central.
  for (Index j = 0; j < 4; ++j)
    CHECK(A.bracketOf(unit(4, 3), unit(4, j)) == Vec::Zero(4));
  CHECK(checkQuadraticHomLie(A).allPassed());
}

TEST_CASE("with a zero vector the twist restricts to the core twist") {
  std::mt19937 gen(37);
  auto data = randomLineData(gen, 3, Rat(2));
  HomLieAlgebra A = lineExtend(data);
  for (Index a = 0; a < 3; ++a) {
    Vec expected = Vec::Zero(5);
    expected.segment(1, 3) = data.core.twist.col(a);
    CHECK(Vec(A.twist.col(1 + a)) == expected);
  }
}

TEST_CASE("the central line pairs against the whole core plus itself") {
  std::mt19937 gen(43);
  std::uniform_int_distribution<int> cd(1, 4);
  for (int iter = 0; iter < 10; ++iter) {
    const Index m = cd(gen);
    auto data = randomLineData(gen, m, tu::randRat(gen));
    HomLieAlgebra A = lineExtend(data);
    const Index n = A.dim();
    Subspace cLine = Subspace::fromRows(Mat(unit(n, n - 1).transpose()));
    Subspace perp = orthogonalComplement(cLine, *A.form);
    Mat rows(m + 1, n);
    rows.setZero();
    for (Index i = 0; i <= m; ++i) rows(i, 1 + i) = Rat(1);
    CHECK(perp == Subspace::fromRows(rows));
  }
}

TEST_CASE("random line extensions pass the full axiom suite") {
  std::mt19937 gen(47);
  std::uniform_int_distribution<int> cd(1, 4);
  for (int iter = 0; iter < 25; ++iter) {
    auto data = randomLineData(gen, cd(gen), tu::randRat(gen));
    CHECK(validateLineExtension(data).allPassed());
    CHECK(checkQuadraticHomLie(lineExtend(data)).allPassed());
  }
}

TEST_CASE("example invariants quoted against the construction") {
  HomLieAlgebra A = sl2Example(Rat(1));
  // The dual block is killed by the twist.
  Mat dualRows(3, 9);
  dualRows.setZero();
  for (Index i = 0; i < 3; ++i) dualRows(i, 6 + i) = Rat(1);
  Subspace dual = Subspace::fromRows(dualRows);
  CHECK(kernelOf(A.twist).contains(dual));
  // The example is perfect and core brackets land in the dual block.
  CHECK(derivedSubalgebra(A).isFull());
  CHECK(dual.contains(Subspace::fromRows(
      Mat(A.bracket.entry(3, 4).transpose()))));
  CHECK(dual.contains(Subspace::fromRows(
      Mat(A.bracket.entry(3, 5).transpose()))));
  CHECK(dual.contains(Subspace::fromRows(
      Mat(A.bracket.entry(4, 5).transpose()))));
}

TEST_CASE("extension data with missing form is rejected up front") {
  DoubleExtensionData data = sl2ExampleData(Rat(1));
  data.core.form.reset();
  CHECK_THROWS_AS(validateDoubleExtension(data), error);
  LineExtensionData line = lineExampleToyData();
  line.core.form.reset();
  CHECK_THROWS_AS(validateLineExtension(line), error);
}
