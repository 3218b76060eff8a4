#include "subdiv/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <ostream>
#include <utility>

#include "subdiv/errors.hpp"

namespace subdiv {

Rational::Rational(Int numerator, Int denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) fail(errc::invalid_argument, "rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  const Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

double Rational::to_double() const {
  // Round through a wide binary float so huge integer parts cannot lose
  // more than one ulp in the final division.
  using Wide = boost::multiprecision::cpp_bin_float_100;
  return static_cast<double>(Wide(num_) / Wide(den_));
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
  Rational result = *this;
  result.num_ = -result.num_;
  return result;
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) fail(errc::invalid_argument, "division by zero rational");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

Rational pow(const Rational& base, int exp) {
  if (exp < 0) return Rational(1) / pow(base, -exp);
  Rational result(1);
  Rational factor = base;
  unsigned e = static_cast<unsigned>(exp);
  while (e > 0) {
    if (e & 1u) result *= factor;
    factor *= factor;
    e >>= 1u;
  }
  return result;
}

std::ostream& operator<<(std::ostream& out, const Rational& value) { return out << value.str(); }

}  // namespace subdiv
