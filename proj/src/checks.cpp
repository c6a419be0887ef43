#include "homlie/checks.hpp"

#include "homlie/error.hpp"

namespace homlie {

namespace {

bool isZeroVec(const Vec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).isZero()) return false;
  return true;
}

Vec scalarDefect(const Rat& r) {
  Vec v(1);
  v(0) = r;
  return v;
}

}  // namespace

Vec homJacobiDefect(const HomLieAlgebra& A, const Vec& x, const Vec& y,
                    const Vec& z) {
  if (x.size() != A.dim() || y.size() != A.dim() || z.size() != A.dim())
    throw error("homJacobiDefect: dimension mismatch");
  const Mat& T = A.twist;
  return A.bracketOf(T * x, A.bracketOf(y, z)) +
         A.bracketOf(T * y, A.bracketOf(z, x)) +
         A.bracketOf(T * z, A.bracketOf(x, y));
}

Vec jacobiDefect(const HomLieAlgebra& A, const Vec& x, const Vec& y,
                 const Vec& z) {
  if (x.size() != A.dim() || y.size() != A.dim() || z.size() != A.dim())
    throw error("jacobiDefect: dimension mismatch");
  return A.bracketOf(x, A.bracketOf(y, z)) + A.bracketOf(y, A.bracketOf(z, x)) +
         A.bracketOf(z, A.bracketOf(x, y));
}

CheckReport checkQuadraticHomLie(const HomLieAlgebra& A) {
  const Index n = A.dim();
  CheckReport report;

  // Hom-Jacobi over basis triples; trilinearity extends the result.
  {
    std::optional<Witness> w;
    for (Index i = 0; i < n && !w; ++i) {
      const Vec Ti = A.twist.col(i);
      for (Index j = i; j < n && !w; ++j) {
        const Vec Tj = A.twist.col(j);
        for (Index k = j; k < n; ++k) {
          Vec d = A.bracket.eval(Ti, A.bracket.bracketBasis(j, k)) +
                  A.bracket.eval(Tj, A.bracket.bracketBasis(k, i)) +
                  A.bracket.eval(A.twist.col(k), A.bracket.bracketBasis(i, j));
          if (!isZeroVec(d)) {
            w = Witness{{i, j, k}, std::move(d)};
            break;
          }
        }
      }
    }
    report.add("hom_jacobi", !w.has_value(), std::move(w));
  }

  // Equivariance T([x,y]) = [T(x), y] on all ordered pairs, the diagonal
  // included ([T(e_i), e_i] need not vanish on its own).
  {
    std::optional<Witness> w;
    for (Index i = 0; i < n && !w; ++i) {
      const Vec Ti = A.twist.col(i);
      for (Index j = 0; j < n; ++j) {
        Vec d = A.twist * A.bracket.bracketBasis(i, j) -
                A.bracket.evalWithBasis(Ti, j);
        if (!isZeroVec(d)) {
          w = Witness{{i, j}, std::move(d)};
          break;
        }
      }
    }
    report.add("equivariance", !w.has_value(), std::move(w));
  }

  if (!A.form) {
    report.addSkipped("symmetric");
    report.addSkipped("nondegenerate");
    report.addSkipped("invariance");
    report.addSkipped("self_adjoint");
    return report;
  }
  const Mat& B = *A.form;

  {
    std::optional<Witness> w;
    for (Index i = 0; i < n && !w; ++i)
      for (Index j = i + 1; j < n; ++j)
        if (B(i, j) != B(j, i)) {
          w = Witness{{i, j}, scalarDefect(B(i, j) - B(j, i))};
          break;
        }
    report.add("symmetric", !w.has_value(), std::move(w));
  }

  {
    Subspace radical = kernelOf(B);
    std::optional<Witness> w;
    if (radical.dim() > 0) w = Witness{{}, radical.basisVector(0)};
    report.add("nondegenerate", radical.dim() == 0, std::move(w));
  }

  // Invariance B([x,y],z) = B(x,[y,z]) on all ordered triples.
  {
    // pairedBracket[i][j] = B-pairing row of [e_i, e_j].
    std::vector<std::vector<RowVec>> paired(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
      paired[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
      for (Index j = 0; j < n; ++j)
        paired[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            A.bracket.bracketBasis(i, j).transpose() * B;
    }
    std::optional<Witness> w;
    for (Index i = 0; i < n && !w; ++i)
      for (Index j = 0; j < n && !w; ++j)
        for (Index k = 0; k < n; ++k) {
          const Rat lhs =
              paired[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)](k);
          const Rat rhs =
              paired[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)](i);
          if (lhs != rhs) {
            w = Witness{{i, j, k}, scalarDefect(lhs - rhs)};
            break;
          }
        }
    report.add("invariance", !w.has_value(), std::move(w));
  }

  {
    Mat d = A.twist.transpose() * B - B * A.twist;
    std::optional<Witness> w;
    for (Index i = 0; i < n && !w; ++i)
      for (Index j = 0; j < n; ++j)
        if (!d(i, j).isZero()) {
          w = Witness{{i, j}, scalarDefect(d(i, j))};
          break;
        }
    report.add("self_adjoint", !w.has_value(), std::move(w));
  }

  return report;
}

FlagWitness isIdeal(const HomLieAlgebra& A, const Subspace& I) {
  if (I.ambientDim() != A.dim()) throw error("isIdeal: ambient mismatch");
  for (Index r = 0; r < I.dim(); ++r) {
    const Vec b = I.basisVector(r);
    Vec tb = A.twist * b;
    if (!I.contains(tb)) return {false, Witness{{r}, std::move(tb)}};
    for (Index i = 0; i < A.dim(); ++i) {
      Vec p = A.bracket.evalWithBasis(-b, i);  // [e_i, b] = -[b, e_i]
      if (!I.contains(p)) return {false, Witness{{i, r}, std::move(p)}};
    }
  }
  return {true, std::nullopt};
}

Subspace idealClosure(const HomLieAlgebra& A, const Subspace& S) {
  if (S.ambientDim() != A.dim()) throw error("idealClosure: ambient mismatch");
  Subspace current = S;
  while (true) {
    std::vector<Mat> parts;
    parts.push_back(current.basis());
    if (current.dim() > 0) {
      parts.push_back((A.twist * current.basis().transpose()).transpose());
      Mat prods(A.dim() * current.dim(), A.dim());
      Index at = 0;
      for (Index r = 0; r < current.dim(); ++r) {
        const Vec b = current.basisVector(r);
        for (Index i = 0; i < A.dim(); ++i) {
          prods.row(at++) = A.bracket.evalWithBasis(-b, i).transpose();
        }
      }
      parts.push_back(std::move(prods));
    }
    Subspace next = Subspace::fromRows(vstack(parts));
    if (next.dim() == current.dim()) return next;
    current = std::move(next);
  }
}

QuotientResult quotientBy(const HomLieAlgebra& A, const Subspace& I) {
  auto ideal = isIdeal(A, I);
  if (!ideal) throw error("quotientBy: subspace is not an ideal");
  const Index n = A.dim();
  Subspace C = complementOf(I);
  const Index m = C.dim();

  Mat M(n, n);
  M << C.basis().transpose(), I.basis().transpose();
  Mat Minv = inverseExact(M);
  Mat projection = Minv.topRows(m);
  Mat inclusion = C.basis().transpose();

  std::vector<Index> reps;
  for (Index r = 0; r < m; ++r) {
    Index lead = 0;
    while (C.basis()(r, lead).isZero()) ++lead;
    reps.push_back(lead);
  }

  StructureTensor qb(m);
  for (Index a = 0; a < m; ++a)
    for (Index b = a + 1; b < m; ++b)
      qb.set(a, b, projection * A.bracket.bracketBasis(reps[static_cast<std::size_t>(a)],
                                                       reps[static_cast<std::size_t>(b)]));
  Mat qtwist = projection * A.twist * inclusion;

  std::vector<std::string> names;
  for (Index r : reps) names.push_back(A.basisNames[static_cast<std::size_t>(r)]);

  HomLieAlgebra q(A.name + "_mod_ideal", std::move(names), std::move(qb),
                  std::move(qtwist), std::nullopt);
  return {std::move(q), std::move(projection), std::move(inclusion),
          std::move(reps)};
}

Subspace centerOf(const HomLieAlgebra& A) {
  const Index n = A.dim();
  Mat stacked(n * n, n);
  for (Index j = 0; j < n; ++j) {
    // Row block j: x -> [x, e_j]; column i is [e_i, e_j].
    for (Index i = 0; i < n; ++i)
      stacked.block(j * n, i, n, 1) = A.bracket.bracketBasis(i, j);
  }
  return kernelOf(stacked);
}

FlagWitness isDerivation(const HomLieAlgebra& A, const Mat& D) {
  const Index n = A.dim();
  if (D.rows() != n || D.cols() != n) throw error("isDerivation: size mismatch");
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      Vec d = D * A.bracket.entry(i, j) -
              A.bracket.evalWithBasis(D.col(i), j) +
              A.bracket.evalWithBasis(D.col(j), i);
      if (!isZeroVec(d)) return {false, Witness{{i, j}, std::move(d)}};
    }
  return {true, std::nullopt};
}

bool isSkewAdjoint(const Mat& B, const Mat& S) {
  if (B.rows() != B.cols() || S.rows() != S.cols() || B.rows() != S.rows())
    throw error("isSkewAdjoint: size mismatch");
  return isZeroMat(S.transpose() * B + B * S);
}

Subspace bracketSpan(const HomLieAlgebra& A, const Subspace& S) {
  if (S.dim() == 0) return Subspace::zero(A.dim());
  Mat rows(A.dim() * S.dim(), A.dim());
  Index at = 0;
  for (Index r = 0; r < S.dim(); ++r) {
    const Vec b = S.basisVector(r);
    for (Index i = 0; i < A.dim(); ++i)
      rows.row(at++) = A.bracket.evalWithBasis(-b, i).transpose();
  }
  return Subspace::fromRows(rows);
}

std::vector<Subspace> lowerCentralSeries(const HomLieAlgebra& A) {
  std::vector<Subspace> series;
  series.push_back(Subspace::full(A.dim()));
  while (true) {
    Subspace next = bracketSpan(A, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<int> nilpotencyClass(const HomLieAlgebra& A) {
  auto series = lowerCentralSeries(A);
  for (std::size_t idx = 0; idx < series.size(); ++idx) {
    if (series[idx].dim() == 0) return static_cast<int>(idx) + 1;
  }
  return std::nullopt;
}

Subspace derivedSubalgebra(const HomLieAlgebra& A) {
  const Index n = A.dim();
  if (n < 2) return Subspace::zero(n);
  Mat rows(n * (n - 1) / 2, n);
  Index at = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) rows.row(at++) = A.bracket.entry(i, j).transpose();
  return Subspace::fromRows(rows);
}

Mat adjointOfBasis(const StructureTensor& t, Index i) {
  const Index n = t.dim();
  Mat out(n, n);
  for (Index j = 0; j < n; ++j) out.col(j) = t.bracketBasis(i, j);
  return out;
}

FlagWitness satisfiesJacobi(const StructureTensor& t) {
  const Index n = t.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = j + 1; k < n; ++k) {
        Vec ei = Vec::Zero(n); ei(i) = Rat(1);
        Vec ej = Vec::Zero(n); ej(j) = Rat(1);
        Vec ek = Vec::Zero(n); ek(k) = Rat(1);
        Vec d = t.eval(ei, t.bracketBasis(j, k)) +
                t.eval(ej, t.bracketBasis(k, i)) +
                t.eval(ek, t.bracketBasis(i, j));
        if (!isZeroVec(d)) return {false, Witness{{i, j, k}, std::move(d)}};
      }
  return {true, std::nullopt};
}

FlagWitness isInvariantForm(const StructureTensor& t, const Mat& B) {
  const Index n = t.dim();
  if (B.rows() != n || B.cols() != n) throw error("isInvariantForm: size mismatch");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const Rat lhs = (t.bracketBasis(i, j).transpose() * B)(k);
        const Rat rhs = (B * t.bracketBasis(j, k))(i);
        if (lhs != rhs)
          return {false, Witness{{i, j, k}, scalarDefect(lhs - rhs)}};
      }
  return {true, std::nullopt};
}

}  // namespace homlie
