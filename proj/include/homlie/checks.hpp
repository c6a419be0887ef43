#ifndef HOMLIE_CHECKS_HPP
#define HOMLIE_CHECKS_HPP

#include <optional>
#include <vector>

#include "homlie/algebra.hpp"

namespace homlie {

struct FlagWitness {
  bool holds = false;
  std::optional<Witness> witness;
  explicit operator bool() const { return holds; }
};

/// [T(x), [y, z]] + [T(y), [z, x]] + [T(z), [x, y]].
Vec homJacobiDefect(const HomLieAlgebra& A, const Vec& x, const Vec& y,
                    const Vec& z);

/// Classical Jacobiator [x, [y, z]] + [y, [z, x]] + [z, [x, y]].
Vec jacobiDefect(const HomLieAlgebra& A, const Vec& x, const Vec& y,
                 const Vec& z);

/// Exhaustive axiom report over basis tuples: hom_jacobi, equivariance and,
/// when a form is present, symmetric / nondegenerate / invariance /
/// self_adjoint (skipped otherwise). Witnesses are the lexicographically
/// smallest failing index tuple.
CheckReport checkQuadraticHomLie(const HomLieAlgebra& A);

/// True iff [g, I] and T(I) are contained in I.
FlagWitness isIdeal(const HomLieAlgebra& A, const Subspace& I);

/// Smallest subspace containing S closed under every ad(e_i) and under T.
Subspace idealClosure(const HomLieAlgebra& A, const Subspace& S);

struct QuotientResult {
  HomLieAlgebra algebra;        ///< bracket and twist on g/I; no form carried
  Mat projection;               ///< (dim g/I) x (dim g)
  Mat inclusion;                ///< (dim g) x (dim g/I), section of projection
  std::vector<Index> representatives;  ///< standard basis indices used
};

/// Quotient by an ideal, in the coordinates of the deterministic complement.
QuotientResult quotientBy(const HomLieAlgebra& A, const Subspace& I);

/// {x : [x, e_j] = 0 for all j}.
Subspace centerOf(const HomLieAlgebra& A);

/// Leibniz identity D([x,y]) = [D(x),y] + [x,D(y)] on all basis pairs.
FlagWitness isDerivation(const HomLieAlgebra& A, const Mat& D);

/// Membership in the orthogonal algebra of B: S^T B + B S = 0.
bool isSkewAdjoint(const Mat& B, const Mat& S);

/// Terms g^1 = g, g^{n+1} = [g, g^n], listed until stabilization (the last
/// entry repeats no further).
std::vector<Subspace> lowerCentralSeries(const HomLieAlgebra& A);

/// First m with g^m = 0, when the lower central series reaches zero.
std::optional<int> nilpotencyClass(const HomLieAlgebra& A);

/// Span of all products [e_i, e_j].
Subspace derivedSubalgebra(const HomLieAlgebra& A);

/// Span of [e_i, b] over all basis vectors e_i and rows b of S.
Subspace bracketSpan(const HomLieAlgebra& A, const Subspace& S);

/// Matrix of y -> [e_i, y] for a bare structure tensor.
Mat adjointOfBasis(const StructureTensor& t, Index i);

/// Classical Jacobi identity for a bare structure tensor, all basis triples.
FlagWitness satisfiesJacobi(const StructureTensor& t);

/// Invariance B([x,y],z) = B(x,[y,z]) for a bare structure tensor.
FlagWitness isInvariantForm(const StructureTensor& t, const Mat& B);

}  // namespace homlie

#endif
