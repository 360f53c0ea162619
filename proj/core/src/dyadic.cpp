#include "domkit/dyadic.hpp"

namespace domkit {

std::string rational_to_decimal(const Rational& r, int digits) {
  BigInt p = boost::multiprecision::numerator(r);
  BigInt q = boost::multiprecision::denominator(r);
  bool neg = p < 0;
  if (neg) p = -p;
  std::string out = (neg ? "-" : "") + BigInt(p / q).str();
  BigInt rem = p % q;
  if (digits > 0) {
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      out += static_cast<char>('0' + (rem / q).convert_to<int>());
      rem %= q;
    }
  }
  return out;
}

}  // namespace domkit
