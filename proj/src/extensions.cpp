#include "homlie/extensions.hpp"

#include "homlie/error.hpp"

namespace homlie {

namespace {

bool isZeroVec(const Vec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).isZero()) return false;
  return true;
}

std::optional<Witness> matrixWitness(const Mat& defect,
                                     std::vector<Index> indices) {
  for (Index i = 0; i < defect.rows(); ++i)
    for (Index j = 0; j < defect.cols(); ++j)
      if (!defect(i, j).isZero()) {
        Vec d(1);
        d(0) = defect(i, j);
        indices.push_back(i);
        indices.push_back(j);
        return Witness{std::move(indices), std::move(d)};
      }
  return std::nullopt;
}

/// rho extended linearly: rho(x) = sum_i x_i rho_i.
Mat rhoOf(const std::vector<Mat>& rho, const Vec& x) {
  Mat out = Mat::Zero(rho.front().rows(), rho.front().cols());
  for (Index i = 0; i < x.size(); ++i) {
    if (x(i).isZero()) continue;
    out += x(i) * rho[static_cast<std::size_t>(i)];
  }
  return out;
}

void requireCoreForm(const HomLieAlgebra& core) {
  if (!core.form) throw error("extension data: core algebra has no form");
}

}  // namespace

CheckReport validateDoubleExtension(const DoubleExtensionData& d) {
  requireCoreForm(d.core);
  const Index m = d.core.dim();
  const Index r = d.actingBracket.dim();
  if (d.actingForm.rows() != r || d.actingForm.cols() != r)
    throw error("extension data: acting form size mismatch");
  if (d.f.rows() != m || d.f.cols() != r)
    throw error("extension data: f must be core-dim x acting-dim");
  if (static_cast<Index>(d.rho.size()) != r)
    throw error("extension data: need one rho map per acting basis vector");
  for (const Mat& R : d.rho)
    if (R.rows() != m || R.cols() != m)
      throw error("extension data: rho map size mismatch");

  const Mat& Bh = *d.core.form;
  const Mat& L = d.core.twist;
  CheckReport report;

  {
    std::optional<Witness> w;
    for (Index i = 0; i < r; ++i) {
      Mat defect = d.rho[static_cast<std::size_t>(i)].transpose() * Bh +
                   Bh * d.rho[static_cast<std::size_t>(i)];
      if (auto mw = matrixWitness(defect, {i})) {
        w = std::move(mw);
        break;
      }
    }
    report.add("rho_in_oB", !w.has_value(), std::move(w));
  }

  {
    auto jac = satisfiesJacobi(d.actingBracket);
    report.add("acting_jacobi", jac.holds, jac.witness);
  }
  report.add("acting_form_symmetric", isSymmetric(d.actingForm));
  report.add("acting_form_nondegenerate", rankOf(d.actingForm) == r);
  {
    auto inv = isInvariantForm(d.actingBracket, d.actingForm);
    report.add("acting_form_invariant", inv.holds, inv.witness);
  }

  report.merge(checkQuadraticHomLie(d.core), "core.");

  // (i) f ad(x) = rho(x) f on acting basis vectors.
  {
    std::optional<Witness> w;
    for (Index i = 0; i < r && !w; ++i) {
      Mat defect = d.f * adjointOfBasis(d.actingBracket, i) -
                   d.rho[static_cast<std::size_t>(i)] * d.f;
      w = matrixWitness(defect, {i});
    }
    report.add("cond_i", !w.has_value(), std::move(w));
  }

  // (ii) L rho(x) = ad_core(f(x)) = rho(x) L, and the common value is a
  // derivation of the core.
  {
    std::optional<Witness> w;
    for (Index i = 0; i < r && !w; ++i) {
      const Mat& Ri = d.rho[static_cast<std::size_t>(i)];
      Mat lhs = L * Ri;
      Mat mid = d.core.adjoint(d.f.col(i));
      Mat rhs = Ri * L;
      w = matrixWitness(lhs - mid, {i});
      if (!w) w = matrixWitness(mid - rhs, {i});
      if (!w) {
        auto der = isDerivation(d.core, lhs);
        if (!der) w = der.witness;
      }
    }
    report.add("cond_ii", !w.has_value(), std::move(w));
  }

  // (iii) rho([x,y]) L = [rho(x), rho(y)] L on acting basis pairs.
  {
    std::optional<Witness> w;
    for (Index i = 0; i < r && !w; ++i)
      for (Index j = i + 1; j < r && !w; ++j) {
        const Mat& Ri = d.rho[static_cast<std::size_t>(i)];
        const Mat& Rj = d.rho[static_cast<std::size_t>(j)];
        Mat defect = (rhoOf(d.rho, d.actingBracket.entry(i, j)) -
                      (Ri * Rj - Rj * Ri)) *
                     L;
        w = matrixWitness(defect, {i, j});
      }
    report.add("cond_iii", !w.has_value(), std::move(w));
  }

  return report;
}

HomLieAlgebra doubleExtend(const DoubleExtensionData& d) {
  CheckReport validation = validateDoubleExtension(d);
  if (!validation.allPassed()) {
    for (const Check& c : validation.checks)
      if (!c.skipped && !c.passed)
        throw error("doubleExtend: validation failed at \"" + c.name + "\"");
  }

  const Index r = d.actingBracket.dim();
  const Index m = d.core.dim();
  const Index n = 2 * r + m;
  const Mat& Bh = *d.core.form;

  const auto embedS = [&](const Vec& v) {
    Vec out = Vec::Zero(n);
    out.head(r) = v;
    return out;
  };
  const auto embedH = [&](const Vec& v) {
    Vec out = Vec::Zero(n);
    out.segment(r, m) = v;
    return out;
  };
  const auto embedD = [&](const Vec& v) {
    Vec out = Vec::Zero(n);
    out.tail(r) = v;
    return out;
  };

  StructureTensor bracket(n);
  // acting x acting
  for (Index a = 0; a < r; ++a)
    for (Index b = a + 1; b < r; ++b)
      bracket.set(a, b, embedS(d.actingBracket.entry(a, b)));
  // acting x core: the rho action
  for (Index a = 0; a < r; ++a)
    for (Index b = 0; b < m; ++b)
      bracket.set(a, r + b, embedH(d.rho[static_cast<std::size_t>(a)].col(b)));
  // acting x dual: coadjoint action, [x_a, xi^b](x_k) = -xi^b([x_a, x_k])
  for (Index a = 0; a < r; ++a)
    for (Index b = 0; b < r; ++b) {
      Vec w = Vec::Zero(r);
      for (Index k = 0; k < r; ++k) w(k) = -d.actingBracket.bracketBasis(a, k)(b);
      bracket.set(a, r + m + b, embedD(w));
    }
  // core x core: core bracket plus the dual-valued pairing term
  for (Index a = 0; a < m; ++a)
    for (Index b = a + 1; b < m; ++b) {
      Vec gamma(r);
      for (Index i = 0; i < r; ++i)
        gamma(i) = (d.rho[static_cast<std::size_t>(i)].col(a).transpose() * Bh)(b);
      bracket.set(r + a, r + b, embedH(d.core.bracket.entry(a, b)) + embedD(gamma));
    }
  // core x dual and dual x dual vanish (nothing stored).

  Mat twist = Mat::Zero(n, n);
  const Mat R = d.f.transpose() * Bh;  // acting-dual component of T on the core
  for (Index a = 0; a < r; ++a)
    twist.col(a) = embedH(d.f.col(a)) + d.eta * embedD(d.actingForm.col(a));
  for (Index a = 0; a < m; ++a)
    twist.col(r + a) = embedH(d.core.twist.col(a)) + embedD(R.col(a));

  Mat form = Mat::Zero(n, n);
  form.block(0, r + m, r, r) = Mat::Identity(r, r);
  form.block(r + m, 0, r, r) = Mat::Identity(r, r);
  form.block(r, r, m, m) = Bh;

  std::vector<std::string> names;
  for (Index a = 0; a < r; ++a) names.push_back("x" + std::to_string(a + 1));
  for (const auto& nm : d.core.basisNames) names.push_back(nm);
  for (Index a = 0; a < r; ++a) names.push_back("xi" + std::to_string(a + 1));

  return HomLieAlgebra(d.core.name + "_double_extension", std::move(names),
                       std::move(bracket), std::move(twist), std::move(form));
}

CheckReport validateLineExtension(const LineExtensionData& d) {
  requireCoreForm(d.core);
  const Index m = d.core.dim();
  if (d.dmap.rows() != m || d.dmap.cols() != m)
    throw error("extension data: skew map size mismatch");
  if (d.vprime.size() != m)
    throw error("extension data: v' size mismatch");

  const Mat& Bh = *d.core.form;
  const Mat& L = d.core.twist;
  CheckReport report;

  report.add("dmap_in_oB", isSkewAdjoint(Bh, d.dmap),
             matrixWitness(d.dmap.transpose() * Bh + Bh * d.dmap, {}));
  if (report.checks.back().passed) report.checks.back().witness.reset();

  report.merge(checkQuadraticHomLie(d.core), "core.");

  // (i) L D = D L = ad(v').
  {
    Mat adv = d.core.adjoint(d.vprime);
    std::optional<Witness> w = matrixWitness(L * d.dmap - adv, {});
    if (!w) w = matrixWitness(d.dmap * L - adv, {});
    report.add("cond_i", !w.has_value(), std::move(w));
  }
  // (ii) ad(v') is a derivation of the core.
  {
    auto der = isDerivation(d.core, d.core.adjoint(d.vprime));
    report.add("cond_ii", der.holds, der.witness);
  }
  // (iii) v' lies in Ker(D).
  {
    Vec dv = d.dmap * d.vprime;
    std::optional<Witness> w;
    if (!isZeroVec(dv)) w = Witness{{}, dv};
    report.add("cond_iii", !w.has_value(), std::move(w));
  }
  return report;
}

HomLieAlgebra lineExtend(const LineExtensionData& d) {
  CheckReport validation = validateLineExtension(d);
  if (!validation.allPassed()) {
    for (const Check& c : validation.checks)
      if (!c.skipped && !c.passed)
        throw error("lineExtend: validation failed at \"" + c.name + "\"");
  }

  const Index m = d.core.dim();
  const Index n = m + 2;
  const Mat& Bh = *d.core.form;
  const Index dIdx = 0;
  const Index cIdx = m + 1;

  const auto embedH = [&](const Vec& v) {
    Vec out = Vec::Zero(n);
    out.segment(1, m) = v;
    return out;
  };

  StructureTensor bracket(n);
  for (Index a = 0; a < m; ++a)
    bracket.set(dIdx, 1 + a, embedH(d.dmap.col(a)));
  for (Index a = 0; a < m; ++a)
    for (Index b = a + 1; b < m; ++b) {
      Vec v = embedH(d.core.bracket.entry(a, b));
      v(cIdx) = (d.dmap.col(a).transpose() * Bh)(b);  // B(D(u), v) c
      bracket.set(1 + a, 1 + b, v);
    }

  Mat twist = Mat::Zero(n, n);
  twist.col(dIdx) = embedH(d.vprime);
  twist(cIdx, dIdx) = d.lambda;
  for (Index a = 0; a < m; ++a) {
    twist.col(1 + a) = embedH(d.core.twist.col(a));
    twist(cIdx, 1 + a) = (d.vprime.transpose() * Bh)(a);  // B(v', u) c
  }

  Mat form = Mat::Zero(n, n);
  form(dIdx, cIdx) = Rat(1);
  form(cIdx, dIdx) = Rat(1);
  form.block(1, 1, m, m) = Bh;

  std::vector<std::string> names;
  names.push_back("d");
  for (const auto& nm : d.core.basisNames) names.push_back(nm);
  names.push_back("c");

  return HomLieAlgebra(d.core.name + "_line_extension", std::move(names),
                       std::move(bracket), std::move(twist), std::move(form));
}

StructureTensor sl2CyclicBracket() {
  StructureTensor t(3);
  Vec e0 = Vec::Zero(3), e1 = Vec::Zero(3), e2 = Vec::Zero(3);
  e0(0) = Rat(1);
  e1(1) = Rat(1);
  e2(2) = Rat(1);
  t.set(0, 1, e2);   // [x1, x2] = x3
  t.set(1, 2, e0);   // [x2, x3] = x1
  t.set(0, 2, -e1);  // [x3, x1] = x2
  return t;
}

DoubleExtensionData sl2ExampleData(const Rat& eta) {
  const Index m = 3;
  HomLieAlgebra core("abelian3", {"v1", "v2", "v3"}, StructureTensor(m),
                     Mat::Zero(m, m), Mat::Identity(m, m));

  std::vector<Mat> rho(3, Mat::Zero(m, m));
  // rho(x1): v1 -> -v2, v2 -> v1
  rho[0](1, 0) = Rat(-1);
  rho[0](0, 1) = Rat(1);
  // rho(x2): v1 -> v2, v2 -> -v1
  rho[1](1, 0) = Rat(1);
  rho[1](0, 1) = Rat(-1);
  // rho(x3): v1 -> -v3, v3 -> v1
  rho[2](2, 0) = Rat(-1);
  rho[2](0, 2) = Rat(1);

  return DoubleExtensionData{std::move(core), sl2CyclicBracket(),
                             Mat::Identity(3, 3), Mat::Zero(m, 3),
                             std::move(rho), eta};
}

HomLieAlgebra sl2Example(const Rat& eta) {
  HomLieAlgebra out = doubleExtend(sl2ExampleData(eta));
  out.name = "sl2_example";
  return out;
}

LineExtensionData lineExampleToyData() {
  const Index m = 2;
  HomLieAlgebra core("abelian2", {"u1", "u2"}, StructureTensor(m),
                     Mat::Zero(m, m), Mat::Identity(m, m));
  Mat D = Mat::Zero(m, m);
  D(0, 1) = Rat(1);
  D(1, 0) = Rat(-1);
  return LineExtensionData{std::move(core), std::move(D), Vec::Zero(m), Rat(1)};
}

HomLieAlgebra lineExampleToy() {
  HomLieAlgebra out = lineExtend(lineExampleToyData());
  out.name = "line_toy";
  return out;
}

}  // namespace homlie
