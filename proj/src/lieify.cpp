#include "homlie/lieify.hpp"

#include "homlie/error.hpp"
#include "homlie/structure.hpp"

namespace homlie {

namespace {

bool isZeroVec(const Vec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).isZero()) return false;
  return true;
}

void requireEquivariant(const HomLieAlgebra& A, const char* who) {
  const Index n = A.dim();
  for (Index i = 0; i < n; ++i) {
    const Vec Ti = A.twist.col(i);
    for (Index j = 0; j < n; ++j) {
      if (!isZeroVec(A.twist * A.bracket.bracketBasis(i, j) -
                     A.bracket.evalWithBasis(Ti, j)))
        throw error(std::string(who) + ": twist is not equivariant");
    }
  }
}

void requireQuadraticNilpotent(const HomLieAlgebra& A, const char* who) {
  CheckReport axioms = checkQuadraticHomLie(A);
  for (const Check& c : axioms.checks)
    if (!c.passed)  // a skipped check also disqualifies: the form is required
      throw error(std::string(who) + ": input fails axiom \"" + c.name + "\"");
  if (!isNilpotentMat(A.twist))
    throw error(std::string(who) + ": twist is not nilpotent");
}

StructureTensor lieBracketOf(const HomLieAlgebra& A) {
  const Index n = A.dim();
  StructureTensor out(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      out.set(i, j, A.twist * A.bracket.entry(i, j));
  return out;
}

const Subspace& seriesTerm(const std::vector<Subspace>& series, std::size_t k) {
  return series[std::min(k, series.size() - 1)];
}

}  // namespace

HomLieAlgebra lieify(const HomLieAlgebra& A) {
  requireEquivariant(A, "lieify");
  const Index n = A.dim();
  return HomLieAlgebra(A.name + "_lie", A.basisNames, lieBracketOf(A),
                       Mat::Identity(n, n), A.form);
}

CheckReport nilpotencyTransferCheck(const HomLieAlgebra& A) {
  requireEquivariant(A, "nilpotencyTransferCheck");
  CheckReport report;

  HomLieAlgebra lie = lieify(A);
  auto hom = lowerCentralSeries(A);
  auto lieSeries = lowerCentralSeries(lie);
  const std::size_t len = std::max(hom.size(), lieSeries.size());

  {
    bool ok = true;
    for (std::size_t k = 0; k < len && ok; ++k)
      ok = seriesTerm(hom, k).contains(seriesTerm(lieSeries, k));
    report.add("lie_series_in_hom_series", ok);
  }
  {
    bool ok = true;
    Mat Tpow = A.twist;
    for (std::size_t k = 1; k < len + 1 && ok; ++k) {
      ok = imageOf(Tpow).contains(seriesTerm(lieSeries, k));
      Tpow = Tpow * A.twist;
    }
    report.add("lie_series_in_twist_powers", ok);
  }
  if (nilpotencyClass(A).has_value()) {
    report.add("nilpotency_transfers", nilpotencyClass(lie).has_value());
  } else {
    report.addSkipped("nilpotency_transfers");
  }
  return report;
}

CocycleData associatedCocycle(const HomLieAlgebra& A) {
  requireQuadraticNilpotent(A, "associatedCocycle");
  const Mat& B = *A.form;

  Subspace aspace = complementOf(imageOf(A.twist));
  const Index d = aspace.dim();
  if (d != kernelOf(A.twist).dim())
    throw error("associatedCocycle: complement dimension mismatch");

  CocycleData out;
  out.d = d;
  out.aBasis = aspace.basis();
  for (Index k = 0; k < d; ++k) {
    Mat theta = A.adjoint(aspace.basisVector(k)).transpose() * B;
    if (!isZeroMat(theta + theta.transpose()))
      throw error("associatedCocycle: component is not skew");
    out.theta.push_back(std::move(theta));
  }
  return out;
}

bool isCocycle(const HomLieAlgebra& A, const CocycleData& C) {
  const Index n = A.dim();
  StructureTensor lie = lieBracketOf(A);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = j + 1; k < n; ++k) {
        const Vec bij = lie.entry(i, j);
        const Vec bjk = lie.entry(j, k);
        const Vec bik = lie.entry(i, k);
        for (const Mat& th : C.theta) {
          // theta([e_i,e_j], e_k) + theta([e_j,e_k], e_i) + theta([e_k,e_i], e_j)
          Rat total = (bij.transpose() * th.col(k))(0) +
                      (bjk.transpose() * th.col(i))(0) -
                      (bik.transpose() * th.col(j))(0);
          if (!total.isZero()) return false;
        }
      }
  return true;
}

CoboundaryResult coboundaryWitness(const HomLieAlgebra& A,
                                   const CocycleData& C) {
  const Index n = A.dim();
  const Index d = C.d;
  StructureTensor lie = lieBracketOf(A);
  const Index pairs = n * (n - 1) / 2;

  Mat W(pairs, n);
  Mat rhs(pairs, d);
  Index row = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      W.row(row) = lie.entry(i, j).transpose();
      for (Index t = 0; t < d; ++t)
        rhs(row, t) = C.theta[static_cast<std::size_t>(t)](i, j);
      ++row;
    }

  auto solved = rrefSolve(W, rhs);
  if (!solved.solution) return {false, std::nullopt};
  return {true, Mat(solved.solution->transpose())};
}

RecoveryMap recoverBracket(const HomLieAlgebra& A, const CocycleData& C) {
  requireQuadraticNilpotent(A, "recoverBracket");
  const Index n = A.dim();
  const Index d = C.d;
  StructureTensor lie = lieBracketOf(A);
  const Index pairs = n * (n - 1) / 2;

  Mat W(pairs, n + d);
  Mat rhs(pairs, n);
  Index row = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      W.block(row, 0, 1, n) = lie.entry(i, j).transpose();
      for (Index t = 0; t < d; ++t)
        W(row, n + t) = C.theta[static_cast<std::size_t>(t)](i, j);
      rhs.row(row) = A.bracket.entry(i, j).transpose();
      ++row;
    }

  RecoveryMap out;
  auto solved = rrefSolve(W, rhs);
  if (!solved.solution) {
    // Attribute the failure: the first pair whose equation breaks feasibility.
    Index upto = 0;
    for (Index i = 0; i < n && !out.infeasiblePair; ++i)
      for (Index j = i + 1; j < n; ++j) {
        ++upto;
        auto partial = rrefSolve(W.topRows(upto), rhs.topRows(upto));
        if (!partial.solution) {
          out.infeasiblePair = Witness{{i, j}, A.bracket.entry(i, j)};
          break;
        }
      }
    return out;
  }

  out.feasible = true;
  out.map = solved.solution->transpose();  // n x (n + d)

  Subspace aspace = Subspace::fromRows(C.aBasis);
  out.mapsCoefficientsOntoTwistKernel =
      imageOf(out.map.rightCols(d)) == kernelOf(A.twist);
  out.mapsAlgebraOntoComplementPerp =
      imageOf(out.map.leftCols(n)) == orthogonalComplement(aspace, *A.form);
  Mat embedded(aspace.dim(), n + d);
  embedded << C.aBasis, Mat::Zero(aspace.dim(), d);
  out.kernelIsComplement = kernelOf(out.map) == Subspace::fromRows(embedded);
  return out;
}

CheckReport centerTrivialityConsequences(const HomLieAlgebra& A) {
  CocycleData C = associatedCocycle(A);
  if (!isCocycle(A, C))
    throw error("centerTrivialityConsequences: theta is not a cocycle");
  if (coboundaryWitness(A, C).isCoboundary)
    throw error(
        "centerTrivialityConsequences: theta is a coboundary, the "
        "consequences do not apply");

  const Index n = A.dim();
  CheckReport report;
  {
    Mat stacked(C.d * n, n);
    for (Index k = 0; k < C.d; ++k)
      stacked.middleRows(k * n, n) =
          A.adjoint(Vec(C.aBasis.row(k).transpose()));
    report.add("adjoint_kernels_intersect_trivially",
               kernelOf(stacked).dim() == 0);
  }
  report.add("center_trivial", centerOf(A).dim() == 0);
  report.add("perfect", derivedSubalgebra(A).isFull());
  return report;
}

}  // namespace homlie
