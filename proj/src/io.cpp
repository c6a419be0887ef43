#include "homlie/io.hpp"

#include <fstream>
#include <sstream>

#include "homlie/error.hpp"

namespace homlie {

namespace {

Rat ratFromJson(const jdoc& j) {
  if (j.is_string()) {
    try {
      return Rat::fromString(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what());
    }
  }
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw parse_error("expected a rational string, got: " + j.dump());
}

std::string keyContext(const char* key) {
  return std::string("field \"") + key + "\"";
}

}  // namespace

jdoc algebraToJson(const HomLieAlgebra& A) {
  jdoc j;
  j["format"] = 1;
  j["name"] = A.name;
  j["dim"] = A.dim();
  j["basis"] = A.basisNames;

  jdoc entries = jdoc::array();
  const Index n = A.dim();
  for (Index i = 0; i < n; ++i)
    for (Index jj = i + 1; jj < n; ++jj) {
      const Vec& c = A.bracket.entry(i, jj);
      jdoc coeffs = jdoc::array();
      for (Index k = 0; k < n; ++k) {
        if (c(k).isZero()) continue;
        coeffs.push_back({{"k", k}, {"c", c(k).str()}});
      }
      if (coeffs.empty()) continue;
      entries.push_back({{"i", i}, {"j", jj}, {"coeffs", coeffs}});
    }
  j["bracket"] = std::move(entries);
  j["twist"] = matToJson(A.twist);
  if (A.form) j["form"] = matToJson(*A.form);
  return j;
}

HomLieAlgebra algebraFromJson(const jdoc& j) {
  if (!j.is_object()) throw parse_error("algebra document must be an object");
  if (j.contains("format")) {
    if (!j["format"].is_number_integer() || j["format"].get<int>() != 1)
      throw parse_error("unsupported document format");
  }
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw parse_error("missing integer " + keyContext("dim"));
  const Index n = j["dim"].get<Index>();
  if (n < 0) throw parse_error("dim must be nonnegative");

  std::string name = "algebra";
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw parse_error("name must be a string");
    name = j["name"].get<std::string>();
  }

  std::vector<std::string> basis;
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || static_cast<Index>(j["basis"].size()) != n)
      throw parse_error("basis must list one name per dimension");
    for (const auto& b : j["basis"]) {
      if (!b.is_string()) throw parse_error("basis names must be strings");
      basis.push_back(b.get<std::string>());
    }
  }

  if (!j.contains("bracket") || !j["bracket"].is_array())
    throw parse_error("missing array " + keyContext("bracket"));
  StructureTensor bracket(n);
  std::vector<bool> seen(static_cast<std::size_t>(n * n), false);
  for (const auto& entry : j["bracket"]) {
    if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
        !entry.contains("coeffs"))
      throw parse_error("bracket entries need i, j and coeffs");
    const Index i = entry["i"].get<Index>();
    const Index jj = entry["j"].get<Index>();
    if (i < 0 || jj < 0 || i >= n || jj >= n)
      throw parse_error("bracket index out of range");
    if (i >= jj) throw parse_error("bracket entry must have i < j");
    if (seen[static_cast<std::size_t>(i * n + jj)])
      throw parse_error("duplicate bracket entry");
    seen[static_cast<std::size_t>(i * n + jj)] = true;
    Vec c = Vec::Zero(n);
    if (!entry["coeffs"].is_array())
      throw parse_error("coeffs must be an array");
    for (const auto& coeff : entry["coeffs"]) {
      if (!coeff.is_object() || !coeff.contains("k") || !coeff.contains("c"))
        throw parse_error("coefficients need k and c");
      const Index k = coeff["k"].get<Index>();
      if (k < 0 || k >= n) throw parse_error("coefficient index out of range");
      c(k) = ratFromJson(coeff["c"]);
    }
    bracket.set(i, jj, c);
  }

  Mat twist = Mat::Zero(n, n);
  if (j.contains("twist") && !j["twist"].is_null()) {
    twist = matFromJson(j["twist"]);
    if (twist.rows() != n || twist.cols() != n)
      throw parse_error("twist must be dim x dim");
  }

  std::optional<Mat> form;
  if (j.contains("form") && !j["form"].is_null()) {
    Mat F = matFromJson(j["form"]);
    if (F.rows() != n || F.cols() != n)
      throw parse_error("form must be dim x dim");
    if (!isSymmetric(F)) throw parse_error("asymmetric form");
    form = std::move(F);
  }

  return HomLieAlgebra(std::move(name), std::move(basis), std::move(bracket),
                       std::move(twist), std::move(form));
}

jdoc matToJson(const Mat& M) {
  jdoc rows = jdoc::array();
  for (Index i = 0; i < M.rows(); ++i) {
    jdoc row = jdoc::array();
    for (Index j = 0; j < M.cols(); ++j) row.push_back(M(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matFromJson(const jdoc& j) {
  if (!j.is_array()) throw parse_error("matrix must be an array of rows");
  const Index rows = static_cast<Index>(j.size());
  Index cols = -1;
  for (const auto& row : j) {
    if (!row.is_array()) throw parse_error("matrix rows must be arrays");
    if (cols < 0)
      cols = static_cast<Index>(row.size());
    else if (static_cast<Index>(row.size()) != cols)
      throw parse_error("matrix rows must have equal length");
  }
  if (rows == 0) return Mat(0, 0);
  Mat M(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index jj = 0; jj < cols; ++jj) M(i, jj) = ratFromJson(j[i][jj]);
  return M;
}

jdoc vecToJson(const Vec& v) {
  jdoc out = jdoc::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

Vec vecFromJson(const jdoc& j) {
  if (!j.is_array()) throw parse_error("vector must be an array");
  Vec v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = ratFromJson(j[i]);
  return v;
}

Vec vecFromCsv(const std::string& csv) {
  std::vector<Rat> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    // Trim spaces around each entry.
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw parse_error("empty CSV entry");
    try {
      values.push_back(Rat::fromString(item.substr(first, last - first + 1)));
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what());
    }
  }
  Vec v(static_cast<Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i)
    v(static_cast<Index>(i)) = values[i];
  return v;
}

jdoc subspaceToJson(const Subspace& S) {
  jdoc j;
  j["ambient"] = S.ambientDim();
  j["dim"] = S.dim();
  j["basis"] = matToJson(S.basis());
  return j;
}

jdoc reportToJson(const CheckReport& r) {
  jdoc checks = jdoc::array();
  for (const Check& c : r.checks) {
    jdoc entry;
    entry["name"] = c.name;
    if (c.skipped) {
      entry["skipped"] = true;
    } else {
      entry["passed"] = c.passed;
    }
    if (c.witness) {
      jdoc w;
      w["indices"] = c.witness->indices;
      w["defect"] = vecToJson(c.witness->defect);
      entry["witness"] = std::move(w);
    }
    checks.push_back(std::move(entry));
  }
  return checks;
}

std::string reportToText(const CheckReport& r) {
  std::ostringstream out;
  for (const Check& c : r.checks) {
    if (c.skipped) {
      out << "SKIP " << c.name << "\n";
      continue;
    }
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (c.witness) {
      out << "  witness (";
      for (std::size_t i = 0; i < c.witness->indices.size(); ++i) {
        if (i) out << ", ";
        out << c.witness->indices[i];
      }
      out << ") defect [";
      for (Index i = 0; i < c.witness->defect.size(); ++i) {
        if (i) out << ", ";
        out << c.witness->defect(i).str();
      }
      out << "]";
    }
    out << "\n";
  }
  return out.str();
}

std::string digestOf(const std::string& bytes) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char b : bytes) {
    hash ^= b;
    hash *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4)
    out << ((hash >> shift) & 0xF);
  return out.str();
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write file: " + path);
  out << bytes;
}

std::string canonicalDump(const jdoc& j) { return j.dump(2) + "\n"; }

HomLieAlgebra loadAlgebra(const std::string& path) {
  jdoc j;
  try {
    j = jdoc::parse(readFile(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error("malformed JSON in " + path + ": " + e.what());
  }
  return algebraFromJson(j);
}

void saveAlgebra(const std::string& path, const HomLieAlgebra& A) {
  writeFile(path, canonicalDump(algebraToJson(A)));
}

}  // namespace homlie
