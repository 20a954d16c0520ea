#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "confscan/errors.hpp"

namespace confscan {

// Exact rational scalar. Every coordinate, time parameter and metric value
// in the library is one of these; equality tests throughout the code are
// exact, never tolerance-based. Backed by boost::multiprecision, which keeps
// values canonical (gcd-reduced, positive denominator).
class Scalar {
 public:
  using rep = boost::multiprecision::cpp_rational;

  Scalar() = default;
  Scalar(std::int64_t n) : v_(n) {}  // NOLINT: implicit by design
  Scalar(std::int64_t num, std::int64_t den) {
    if (den == 0) throw input_error("Scalar: zero denominator");
    v_ = rep(num, den);
  }
  explicit Scalar(rep v) : v_(std::move(v)) {}

  // Accepts "p", "-p", "p/q". No decimals: they are not exact.
  static Scalar parse(const std::string& text);
  static Scalar from_strings(const std::string& num, const std::string& den);

  Scalar operator-() const { return Scalar(rep(-v_)); }
  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o) {
    if (o.v_ == 0) throw input_error("Scalar: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool is_zero() const { return v_ == 0; }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

  friend Scalar abs(const Scalar& a) { return a.v_ < 0 ? -a : a; }
  friend const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
  friend const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

  std::string num_string() const { return numerator(v_).str(); }
  std::string den_string() const { return denominator(v_).str(); }
  std::string str() const;

  // Lossy; used only for SVG layout.
  double approx() const { return v_.convert_to<double>(); }

  const rep& value() const { return v_; }

 private:
  rep v_{0};
};

inline Scalar Scalar::parse(const std::string& text) {
  if (text.empty()) throw input_error("Scalar: empty literal");
  for (char c : text) {
    if (c != '-' && c != '/' && (c < '0' || c > '9'))
      throw input_error("Scalar: bad literal '" + text + "'");
  }
  auto slash = text.find('/');
  if (slash == 0 || slash == text.size() - 1)
    throw input_error("Scalar: bad literal '" + text + "'");
  try {
    if (slash == std::string::npos) return Scalar(rep(text));
    boost::multiprecision::cpp_int num(text.substr(0, slash));
    boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw input_error("Scalar: zero denominator in '" + text + "'");
    return Scalar(rep(num, den));
  } catch (const std::runtime_error&) {
    throw input_error("Scalar: bad literal '" + text + "'");
  }
}

inline Scalar Scalar::from_strings(const std::string& num, const std::string& den) {
  return parse(num) / parse(den);
}

inline std::string Scalar::str() const {
  if (denominator(v_) == 1) return numerator(v_).str();
  return numerator(v_).str() + "/" + denominator(v_).str();
}

}  // namespace confscan
