#ifndef HOMLIE_RATIONAL_HPP
#define HOMLIE_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <ostream>
#include <stdexcept>
#include <string>

namespace homlie {

/// Exact rational scalar. Values are always canonical: gcd(|num|, den) = 1
/// and den > 0. All arithmetic is exact; there is no rounding path anywhere.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(long long n) : v_(mpz_class(std::to_string(n))) {}

  Rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  /// Parses "p" or "p/q"; the sign, if any, goes on the numerator.
  static Rat fromString(const std::string& s);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool isZero() const { return sgn(v_) == 0; }
  bool isInteger() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.isZero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

inline std::string Rat::str() const {
  std::string out = v_.get_num().get_str();
  if (v_.get_den() != 1) {
    out += '/';
    out += v_.get_den().get_str();
  }
  return out;
}

inline Rat Rat::fromString(const std::string& s) {
  const auto bad = [&] {
    return std::invalid_argument("Rat: cannot parse \"" + s + "\"");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && s[pos] == '-') {
    negative = true;
    ++pos;
  }
  const std::size_t numStart = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == numStart) throw bad();
  mpz_class num(s.substr(numStart, pos - numStart));
  mpz_class den(1);
  if (pos < s.size()) {
    if (s[pos] != '/') throw bad();
    ++pos;
    const std::size_t denStart = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == denStart || pos != s.size()) throw bad();
    den = mpz_class(s.substr(denStart));
    if (den == 0) throw bad();
  }
  if (negative) num = -num;
  return Rat(num, den);
}

inline std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

}  // namespace homlie

namespace Eigen {

template <>
struct NumTraits<homlie::Rat> : GenericNumTraits<homlie::Rat> {
  typedef homlie::Rat Real;
  typedef homlie::Rat NonInteger;
  typedef homlie::Rat Literal;
  typedef homlie::Rat Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40
  };
  static inline Real epsilon() { return homlie::Rat(0); }
  static inline Real dummy_precision() { return homlie::Rat(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif
