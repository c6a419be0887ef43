#ifndef HOMLIE_ALGEBRA_HPP
#define HOMLIE_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "homlie/linalg.hpp"

namespace homlie {

/// Skew-symmetric structure tensor: only entries with i < j are stored, so a
/// skew violation is unrepresentable. Evaluation supplies [e_j, e_i] =
/// -[e_i, e_j] and [e_i, e_i] = 0.
class StructureTensor {
public:
  explicit StructureTensor(Index dim);

  Index dim() const { return dim_; }

  /// Sets [e_i, e_j] for i < j.
  void set(Index i, Index j, const Vec& value);

  /// [e_i, e_j] for any pair (sign and diagonal handled).
  Vec bracketBasis(Index i, Index j) const;

  /// Stored entry for i < j (no copy).
  const Vec& entry(Index i, Index j) const;

  /// Bilinear evaluation on arbitrary vectors.
  Vec eval(const Vec& x, const Vec& y) const;

  /// [x, e_j] for arbitrary x; column j of the adjoint of x.
  Vec evalWithBasis(const Vec& x, Index j) const;

  bool isZero() const;

  friend bool operator==(const StructureTensor& a, const StructureTensor& b);

private:
  Index flatIndex(Index i, Index j) const;
  Index dim_;
  std::vector<Vec> c_;
};

/// A finite-dimensional algebra with a skew product, a twist endomorphism and
/// an optional symmetric bilinear form. Whether the data satisfies any of the
/// compatibility laws (Hom-Jacobi, equivariance, invariance, self-adjointness)
/// is checked by the report operations, not enforced here.
struct HomLieAlgebra {
  std::string name;
  std::vector<std::string> basisNames;
  StructureTensor bracket;
  Mat twist;
  std::optional<Mat> form;

  HomLieAlgebra(std::string name_, std::vector<std::string> basisNames_,
                StructureTensor bracket_, Mat twist_,
                std::optional<Mat> form_);

  Index dim() const { return bracket.dim(); }

  Vec bracketOf(const Vec& x, const Vec& y) const { return bracket.eval(x, y); }

  /// Matrix of y -> [x, y].
  Mat adjoint(const Vec& x) const;

  /// Matrix of y -> [e_i, y].
  Mat adjointBasis(Index i) const;

  Vec basisVector(Index i) const;

  static std::vector<std::string> defaultNames(Index dim);
};

struct Witness {
  std::vector<Index> indices;
  Vec defect;
};

struct Check {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::optional<Witness> witness;
};

struct CheckReport {
  std::vector<Check> checks;

  bool allPassed() const;
  const Check* find(const std::string& name) const;
  void add(std::string name, bool passed,
           std::optional<Witness> witness = std::nullopt);
  void addSkipped(std::string name);
  void merge(const CheckReport& other, const std::string& prefix);
};

}  // namespace homlie

#endif
