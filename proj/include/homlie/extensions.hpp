#ifndef HOMLIE_EXTENSIONS_HPP
#define HOMLIE_EXTENSIONS_HPP

#include <vector>

#include "homlie/checks.hpp"

namespace homlie {

/// Input bundle for the double extension of a quadratic core algebra by a
/// quadratic Lie algebra acting through skew maps: the result lives on
/// acting + core + acting-dual.
struct DoubleExtensionData {
  HomLieAlgebra core;             ///< twist L and form required
  StructureTensor actingBracket;  ///< Lie bracket of the acting algebra
  Mat actingForm;                 ///< invariant form of the acting algebra
  Mat f;                          ///< core-dim x acting-dim
  std::vector<Mat> rho;           ///< one skew map of the core per acting basis vector
  Rat eta;
};

/// Checks the structural requirements (rho maps skew-adjoint, acting bracket
/// Lie, acting form invariant, core a quadratic algebra with equivariant
/// twist) and then the three compatibility conditions tying f, rho and the
/// core twist together.
CheckReport validateDoubleExtension(const DoubleExtensionData& d);

/// Builds the extension. Basis order is (acting, core, dual); refuses to
/// construct when validation fails.
HomLieAlgebra doubleExtend(const DoubleExtensionData& d);

/// Input bundle for the two-dimensional extension by a line pair (d, c):
/// a skew map D and a vector v' with D L = L D = ad(v') and D(v') = 0.
struct LineExtensionData {
  HomLieAlgebra core;  ///< twist L and form required
  Mat dmap;            ///< skew-adjoint map of the core
  Vec vprime;
  Rat lambda;
};

CheckReport validateLineExtension(const LineExtensionData& d);

/// Builds the extension with basis order (d, core, c).
HomLieAlgebra lineExtend(const LineExtensionData& d);

/// The 9-dimensional golden example: sl2 with the cyclic bracket table and
/// identity form acting on a 3-dimensional abelian core, f = 0, L = 0.
HomLieAlgebra sl2Example(const Rat& eta);

/// Data bundle behind sl2Example, exposed for reuse in tests and tooling.
DoubleExtensionData sl2ExampleData(const Rat& eta);

/// The 4-dimensional line-extension example: abelian core of dimension 2
/// with identity form, L = 0, a rotation-like skew map, v' = 0, lambda = 1.
HomLieAlgebra lineExampleToy();
LineExtensionData lineExampleToyData();

/// Cyclic sl2 structure tensor [x1,x2] = x3, [x2,x3] = x1, [x3,x1] = x2.
StructureTensor sl2CyclicBracket();

}  // namespace homlie

#endif
