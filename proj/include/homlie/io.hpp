#ifndef HOMLIE_IO_HPP
#define HOMLIE_IO_HPP

#include <json.hpp>
#include <string>

#include "homlie/algebra.hpp"

namespace homlie {

/// Ordered JSON keeps key order stable, so serialized bytes are reproducible.
using jdoc = nlohmann::ordered_json;

/// Canonical algebra document: format, name, dim, basis, bracket (sorted
/// entries with i < j, zero coefficients dropped), twist, and form when
/// present. Rationals serialize as "p" or "p/q" with the sign on p.
jdoc algebraToJson(const HomLieAlgebra& A);

/// Parses and validates a document. Unknown format versions, out-of-range
/// indices, entries with i >= j, asymmetric forms and malformed rationals
/// are rejected with parse_error.
HomLieAlgebra algebraFromJson(const jdoc& j);

jdoc matToJson(const Mat& M);
Mat matFromJson(const jdoc& j);
jdoc vecToJson(const Vec& v);
Vec vecFromJson(const jdoc& j);

/// Comma-separated rationals, e.g. "0,1/2,-3".
Vec vecFromCsv(const std::string& csv);

jdoc subspaceToJson(const Subspace& S);
jdoc reportToJson(const CheckReport& r);
std::string reportToText(const CheckReport& r);

/// FNV-1a 64-bit digest, hex encoded.
std::string digestOf(const std::string& bytes);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& bytes);

std::string canonicalDump(const jdoc& j);

HomLieAlgebra loadAlgebra(const std::string& path);
void saveAlgebra(const std::string& path, const HomLieAlgebra& A);

}  // namespace homlie

#endif
