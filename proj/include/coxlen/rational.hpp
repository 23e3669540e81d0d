// Exact rational scalars. Everything geometric in this library is computed
// over Q with arbitrary-precision integers; there is no floating point and
// no tolerance anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace coxlen {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Builds num/den in lowest terms with positive denominator.
inline Rat make_rat(Int num, Int den) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

inline Int rat_to_int(const Rat& x) {
  if (!is_integer(x)) throw Error("rational " + x.str() + " is not an integer");
  return numerator(x);
}

inline long long int_to_long(const Int& x) {
  if (x > std::numeric_limits<long long>::max() ||
      x < std::numeric_limits<long long>::min())
    throw Error("integer " + x.str() + " out of 64-bit range");
  return static_cast<long long>(x);
}

inline long long rat_to_long(const Rat& x) { return int_to_long(rat_to_int(x)); }

// "p/q" when q != 1, "p" otherwise; reparses with rat_from_string.
inline std::string rat_to_string(const Rat& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) s += "/" + denominator(x).str();
  return s;
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error("cannot parse rational '" + s + "'");
  }
}

}  // namespace coxlen
