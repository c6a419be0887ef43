#ifndef HOMLIE_STRUCTURE_HPP
#define HOMLIE_STRUCTURE_HPP

#include <variant>
#include <vector>

#include "homlie/extensions.hpp"

namespace homlie {

struct FittingResult {
  int ell;              ///< smallest exponent with Im(T^ell) = Im(T^{ell+1})
  Subspace imagePart;   ///< Im(T^ell); the twist restricts invertibly
  Subspace kernelPart;  ///< Ker(T^ell); the twist restricts nilpotently
};

/// Fitting decomposition of the twist. Requires an equivariant twist; both
/// parts are verified to be ideals and the bracket restricted to the image
/// part is verified to satisfy the classical Jacobi identity.
FittingResult fitting(const HomLieAlgebra& A);

/// Grows ideal_closure(S) into an ideal J that is proper and such that no
/// candidate from the deterministic probe set (standard basis vectors, their
/// pairwise sums, and 32 seeded pseudo-random rational combinations) extends
/// it to a proper ideal. Throws when the closure of S is already everything.
Subspace maximalProperIdealContaining(const HomLieAlgebra& A,
                                      const Subspace& S);

struct StraightenResult {
  Subspace s;                ///< bracket-closed complement of the ideal
  Subspace correctionSpace;  ///< Ker(T) cap Im(T) when a correction ran
  std::vector<Mat> lambda;   ///< skew defect components per correction basis vector
  std::vector<Vec> correctionVectors;  ///< ambient x_t with D_t = ad(x_t)
  Mat phi;                   ///< ambient map fixing the ideal, seed basis -> s basis
};

/// Finds a complement s of a maximal proper ideal I with [s, s] inside s.
/// The one-dimensional case returns the deterministic complement line. In
/// general the bracket defect of the deterministic complement must take
/// values in Ker(T) cap Im(T); the correction is solved as a linear system
/// for a graph map into that space and fails loudly when infeasible.
StraightenResult straightenComplement(const HomLieAlgebra& A,
                                      const Subspace& I);

/// Cartan-Killing form K(e_i, e_j) = trace(ad(e_i) ad(e_j)).
Mat killingForm(const StructureTensor& t);

/// Simplicity criterion for a quadratic Lie algebra: the span of the adjoint
/// maps is skew-adjoint for B, fills the full orthogonal algebra dimension
/// n(n-1)/2, and the center is trivial. Throws when the bracket is not Lie
/// or B is not a symmetric nondegenerate invariant form.
bool isSimpleQuadratic(const StructureTensor& t, const Mat& B);

enum class ExtensionKind { Simple, OneDimensional };

struct SimpleBlocks {
  Mat f;                   ///< core part of the twist on s (core-dim x s-dim)
  Mat g;                   ///< iperp part of the twist on s (iperp coords)
  Mat L;                   ///< core part of the twist on the core
  Mat R;                   ///< iperp part of the twist on the core
  std::vector<Mat> rho;    ///< action of each s basis vector on the core
  std::vector<Mat> sigma;  ///< action of each s basis vector on iperp
  std::vector<Mat> gamma;  ///< iperp-valued core pairing, one skew matrix per iperp basis vector
  Mat psi;                 ///< iperp -> dual of s, via the form
  Rat eta;                 ///< solved from g against the Killing form
  bool gIsZero;            ///< eta = 0 because g vanished identically
  DoubleExtensionData data;
};

struct LineBlocks {
  Mat dmap;   ///< action of the complement line on the core
  Vec vprime; ///< core part of T(d), in core coordinates
  Rat lambda; ///< c-coefficient of T(d)
  Mat L;      ///< core part of the twist on the core
  Mat gamma;  ///< c-coefficients of core brackets (equals dmap^T B_core)
  LineExtensionData data;
};

struct DecompositionResult {
  Subspace ideal;
  Subspace iperp;
  Subspace s;
  Subspace h;
  ExtensionKind kind;
  std::variant<SimpleBlocks, LineBlocks> blocks;
  HomLieAlgebra reconstruction;
  Mat iso;             ///< isometric isomorphism onto the reconstruction
  CheckReport report;  ///< every identity verified along the pipeline
};

/// Full structure decomposition of a quadratic algebra with equivariant
/// nilpotent twist: maximal ideal over Ker(T), Witt split along its
/// orthogonal, complement straightening, block extraction, reconstruction
/// through the matching extension constructor, and an isometric isomorphism
/// back onto the input. Any identity that fails to verify aborts with the
/// failing check's name. Indecomposability is the caller's assertion.
DecompositionResult decompose(const HomLieAlgebra& A);

/// Invertibility, bracket preservation, twist intertwining and (when both
/// forms are present) isometry of P : A1 -> A2.
CheckReport checkIsometricIsomorphism(const HomLieAlgebra& A1,
                                      const HomLieAlgebra& A2, const Mat& P);

/// True when T^dim = 0.
bool isNilpotentMat(const Mat& T);

}  // namespace homlie

#endif
