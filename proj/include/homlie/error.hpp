#ifndef HOMLIE_ERROR_HPP
#define HOMLIE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace homlie {

/// Domain error: a precondition or a verified identity failed.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input document.
class parse_error : public error {
public:
  explicit parse_error(const std::string& what) : error(what) {}
};

}  // namespace homlie

#endif
