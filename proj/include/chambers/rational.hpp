#pragma once

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace chambers {

// All parameter-space arithmetic is exact rational. Chamber membership is
// decided by sign tests, so no float path exists anywhere in the library.
using Rat = mpq_class;
using Int = long;

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

inline Rat rat_of(Int num, Int den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

inline int sign_of(const Rat& r) { return sgn(r); }

// Renders "p/q", or just "p" when the denominator is 1.
inline std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "p", "-p", "p/q", "-p/q". Whitespace is not allowed.
inline Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Rat r(text);
      r.canonicalize();
      return r;
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty()) throw std::invalid_argument("bad rational");
    Rat r(num + "/" + den);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational literal '" + text + "'");
  }
}

inline Rat vec_sum(const RatVec& v) {
  Rat s = 0;
  for (const auto& x : v) s += x;
  return s;
}

inline Int gcd_ll(Int a, Int b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

}  // namespace chambers
