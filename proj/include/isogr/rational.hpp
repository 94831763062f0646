#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "isogr/errors.hpp"

namespace isogr {

// All arithmetic in this library is exact.  Rationals are GMP-backed; there
// is no floating point anywhere.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Canonical text form: "p" for integers, "p/q" otherwise, q > 0, gcd(p,q)=1.
// mpq_rational already stores values canonically, so str() is what we want.
inline std::string rat_str(const Rat& r) { return r.str(); }

inline std::string int_str(const Int& z) { return z.str(); }

namespace detail {
inline bool valid_int_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}
}  // namespace detail

// Parses "p" or "p/q".  Signs are accepted on either part; the result is
// canonicalized.  Anything else (including "1/0") is a usage_error.
inline Rat rat_parse(const std::string& s) {
  const std::size_t slash = s.find('/');
  const std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  const std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!detail::valid_int_token(num) || !detail::valid_int_token(den)) {
    throw usage_error("invalid rational literal '" + s + "'");
  }
  const Int d(den);
  if (d == 0) throw usage_error("zero denominator in rational literal '" + s + "'");
  Rat r{Int(num)};
  r /= Rat(d);
  return r;
}

}  // namespace isogr
