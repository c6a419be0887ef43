#include "homlie/algebra.hpp"

#include "homlie/error.hpp"

namespace homlie {

StructureTensor::StructureTensor(Index dim) : dim_(dim) {
  c_.assign(static_cast<std::size_t>(dim * (dim - 1) / 2), Vec::Zero(dim));
}

Index StructureTensor::flatIndex(Index i, Index j) const {
  // i < j assumed.
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

void StructureTensor::set(Index i, Index j, const Vec& value) {
  if (i < 0 || j <= i || j >= dim_) throw error("StructureTensor: need 0 <= i < j < dim");
  if (value.size() != dim_) throw error("StructureTensor: value size mismatch");
  c_[static_cast<std::size_t>(flatIndex(i, j))] = value;
}

const Vec& StructureTensor::entry(Index i, Index j) const {
  if (i < 0 || j <= i || j >= dim_) throw error("StructureTensor: need 0 <= i < j < dim");
  return c_[static_cast<std::size_t>(flatIndex(i, j))];
}

Vec StructureTensor::bracketBasis(Index i, Index j) const {
  if (i == j) return Vec::Zero(dim_);
  if (i < j) return entry(i, j);
  return -entry(j, i);
}

Vec StructureTensor::eval(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw error("StructureTensor: operand dimension mismatch");
  Vec out = Vec::Zero(dim_);
  for (Index i = 0; i < dim_; ++i) {
    if (x(i).isZero() && y(i).isZero()) continue;
    for (Index j = i + 1; j < dim_; ++j) {
      const Rat coeff = x(i) * y(j) - x(j) * y(i);
      if (coeff.isZero()) continue;
      out += coeff * entry(i, j);
    }
  }
  return out;
}

Vec StructureTensor::evalWithBasis(const Vec& x, Index j) const {
  if (x.size() != dim_) throw error("StructureTensor: operand dimension mismatch");
  Vec out = Vec::Zero(dim_);
  for (Index i = 0; i < dim_; ++i) {
    if (i == j || x(i).isZero()) continue;
    out += x(i) * bracketBasis(i, j);
  }
  return out;
}

bool StructureTensor::isZero() const {
  for (const Vec& v : c_) {
    for (Index k = 0; k < v.size(); ++k) {
      if (!v(k).isZero()) return false;
    }
  }
  return true;
}

bool operator==(const StructureTensor& a, const StructureTensor& b) {
  if (a.dim_ != b.dim_) return false;
  for (std::size_t k = 0; k < a.c_.size(); ++k) {
    if (!(a.c_[k] == b.c_[k])) return false;
  }
  return true;
}

HomLieAlgebra::HomLieAlgebra(std::string name_,
                             std::vector<std::string> basisNames_,
                             StructureTensor bracket_, Mat twist_,
                             std::optional<Mat> form_)
    : name(std::move(name_)),
      basisNames(std::move(basisNames_)),
      bracket(std::move(bracket_)),
      twist(std::move(twist_)),
      form(std::move(form_)) {
  const Index n = bracket.dim();
  if (basisNames.empty()) basisNames = defaultNames(n);
  if (static_cast<Index>(basisNames.size()) != n)
    throw error("HomLieAlgebra: basis name count mismatch");
  if (twist.rows() != n || twist.cols() != n)
    throw error("HomLieAlgebra: twist must be dim x dim");
  if (form) {
    if (form->rows() != n || form->cols() != n)
      throw error("HomLieAlgebra: form must be dim x dim");
    if (!isSymmetric(*form)) throw error("HomLieAlgebra: asymmetric form");
  }
}

Mat HomLieAlgebra::adjoint(const Vec& x) const {
  const Index n = dim();
  Mat out(n, n);
  for (Index j = 0; j < n; ++j) out.col(j) = bracket.evalWithBasis(x, j);
  return out;
}

Mat HomLieAlgebra::adjointBasis(Index i) const {
  const Index n = dim();
  Mat out(n, n);
  for (Index j = 0; j < n; ++j) out.col(j) = bracket.bracketBasis(i, j);
  return out;
}

Vec HomLieAlgebra::basisVector(Index i) const {
  Vec v = Vec::Zero(dim());
  v(i) = Rat(1);
  return v;
}

std::vector<std::string> HomLieAlgebra::defaultNames(Index dim) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(dim));
  for (Index i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

bool CheckReport::allPassed() const {
  for (const Check& c : checks) {
    if (!c.skipped && !c.passed) return false;
  }
  return true;
}

const Check* CheckReport::find(const std::string& name) const {
  for (const Check& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void CheckReport::add(std::string name, bool passed,
                      std::optional<Witness> witness) {
  checks.push_back({std::move(name), passed, false, std::move(witness)});
}

void CheckReport::addSkipped(std::string name) {
  checks.push_back({std::move(name), false, true, std::nullopt});
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const Check& c : other.checks) {
    Check copy = c;
    copy.name = prefix + copy.name;
    checks.push_back(std::move(copy));
  }
}

}  // namespace homlie
