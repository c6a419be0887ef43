#ifndef HOMLIE_LIEIFY_HPP
#define HOMLIE_LIEIFY_HPP

#include <vector>

#include "homlie/checks.hpp"

namespace homlie {

/// The associated bracket [x, y]_new = T([x, y]), with identity twist and the
/// same form. Requires an equivariant twist.
HomLieAlgebra lieify(const HomLieAlgebra& A);

/// Compares the lower central series of A with the series of its associated
/// Lie bracket: termwise containment, containment in the images of the twist
/// powers, and — when A itself is nilpotent — nilpotency of the associated
/// bracket (skipped otherwise).
CheckReport nilpotencyTransferCheck(const HomLieAlgebra& A);

/// The canonical 2-cocycle data of the associated Lie bracket: a
/// deterministic complement of Im(T) with basis {a_1, ..., a_d} and the skew
/// matrices theta_k(x, y) = B([a_k, x], y).
struct CocycleData {
  Index d = 0;             ///< = dim Ker(T)
  Mat aBasis;              ///< rows are the complement basis vectors
  std::vector<Mat> theta;  ///< one skew matrix per complement basis vector
};

CocycleData associatedCocycle(const HomLieAlgebra& A);

/// Cyclic-sum cocycle identity of theta against the associated Lie bracket
/// (the coefficient space is a trivial module).
bool isCocycle(const HomLieAlgebra& A, const CocycleData& C);

struct CoboundaryResult {
  bool isCoboundary = false;
  std::optional<Mat> mu;  ///< d x dim witness with theta = mu([.,.]_new)
};

/// Decides exactly, via one linear solve, whether theta factors through the
/// associated Lie bracket.
CoboundaryResult coboundaryWitness(const HomLieAlgebra& A,
                                   const CocycleData& C);

/// A linear map recovering the original bracket from the associated one and
/// the cocycle: [x, y] = h([x,y]_new + theta(x, y)), solved over all basis
/// pairs with free coordinates set to zero. The three side conditions are
/// evaluated on the solution and reported, not imposed.
struct RecoveryMap {
  bool feasible = false;
  Mat map;  ///< dim x (dim + d); empty when infeasible
  std::optional<Witness> infeasiblePair;
  bool mapsCoefficientsOntoTwistKernel = false;
  bool mapsAlgebraOntoComplementPerp = false;
  bool kernelIsComplement = false;
};

RecoveryMap recoverBracket(const HomLieAlgebra& A, const CocycleData& C);

/// When theta is not a coboundary: the adjoint kernels of the complement
/// basis intersect trivially, the center vanishes, and the algebra equals its
/// derived subalgebra. Throws when theta is a coboundary.
CheckReport centerTrivialityConsequences(const HomLieAlgebra& A);

}  // namespace homlie

#endif
