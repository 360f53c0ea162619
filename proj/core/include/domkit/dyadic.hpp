#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace domkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact rational with a power-of-two denominator: value = num / 2^exp.
/// Canonical form keeps num odd (or zero with exp 0). All probability and
/// expectation accounting in the toolkit runs on these; floating point only
/// appears in rendered reports.
class Dyadic {
 public:
  Dyadic() : num_(0), exp_(0) {}
  Dyadic(long value) : num_(value), exp_(0) {}  // NOLINT: implicit for literals
  Dyadic(BigInt num, unsigned exp) : num_(std::move(num)), exp_(exp) { normalize(); }

  static Dyadic half_pow(unsigned k) { return Dyadic(1, k); }

  const BigInt& numerator() const { return num_; }
  unsigned exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.exp_, b.exp_);
    return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.exp_, b.exp_);
    return Dyadic((a.num_ << (e - a.exp_)) - (b.num_ << (e - b.exp_)), e);
  }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
  }
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend bool operator<(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.exp_, b.exp_);
    return (a.num_ << (e - a.exp_)) < (b.num_ << (e - b.exp_));
  }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }

  /// Exact comparison against p/q via cross-multiplied integers.
  bool leq(const Rational& r) const {
    return num_ * boost::multiprecision::denominator(r) <=
           boost::multiprecision::numerator(r) * (BigInt(1) << exp_);
  }

  Rational to_rational() const { return Rational(num_, BigInt(1) << exp_); }

  BigInt floor() const {
    if (num_ >= 0) return num_ >> exp_;
    return -((-num_ + (BigInt(1) << exp_) - 1) >> exp_);
  }

  double to_double() const {
    return num_.convert_to<double>() / std::ldexp(1.0, static_cast<int>(exp_));
  }

  /// Exact finite decimal (every dyadic has one), e.g. 1/8 -> "0.125".
  std::string to_decimal() const {
    BigInt scaled = num_;
    for (unsigned i = 0; i < exp_; ++i) scaled *= 5;
    bool neg = scaled < 0;
    std::string digits = BigInt(boost::multiprecision::abs(scaled)).str();
    if (digits.size() <= exp_) digits.insert(0, exp_ + 1 - digits.size(), '0');
    std::string out = neg ? "-" : "";
    out += digits.substr(0, digits.size() - exp_);
    if (exp_ > 0) out += "." + digits.substr(digits.size() - exp_);
    return out;
  }

  std::string to_fraction() const {
    if (exp_ == 0) return num_.str();
    return num_.str() + "/" + (BigInt(1) << exp_).str();
  }

 private:
  void normalize() {
    if (num_ == 0) {
      exp_ = 0;
      return;
    }
    while (exp_ > 0 && (num_ & 1) == 0) {
      num_ >>= 1;
      --exp_;
    }
  }

  BigInt num_;
  unsigned exp_;
};

inline std::string rational_to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

inline double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

/// Fixed-point decimal rendering of p/q (round toward zero).
std::string rational_to_decimal(const Rational& r, int digits);

inline BigInt rational_floor(const Rational& r) {
  BigInt p = boost::multiprecision::numerator(r);
  BigInt q = boost::multiprecision::denominator(r);
  if (p >= 0) return p / q;
  return -((-p + q - 1) / q);
}

}  // namespace domkit
