#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>

namespace subdiv {

/// Exact rational with arbitrary-precision integer parts, kept canonical:
/// coprime numerator/denominator, denominator > 0.
class Rational {
public:
  using Int = boost::multiprecision::cpp_int;

  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design of the API
  Rational(Int numerator, Int denominator);

  const Int& numerator() const { return num_; }
  const Int& denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  double to_double() const;
  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend bool operator!=(const Rational& lhs, const Rational& rhs) { return !(lhs == rhs); }
  friend bool operator<(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ * rhs.den_ < rhs.num_ * lhs.den_;
  }

private:
  void normalize();

  Int num_;
  Int den_;
};

/// base^exp; negative exponents invert (base must be nonzero then).
Rational pow(const Rational& base, int exp);

std::ostream& operator<<(std::ostream& out, const Rational& value);

}  // namespace subdiv
