#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqalg {

// Exact arbitrary-precision integer; all linear algebra in the library is over Z.
using Int = boost::multiprecision::cpp_int;
using Vec = std::vector<Int>;

inline Int igcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int ilcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }
inline Int iabs(const Int& a) { return boost::multiprecision::abs(a); }

// C(n, k) for any integer n (including negative), nonnegative k.
inline Int binomial(const Int& n, long k) {
  if (k < 0) return 0;
  Int num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;  // product of k consecutive integers is divisible by k!
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec vec_scale(const Int& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool vec_is_zero(const Vec& a) {
  for (auto& x : a)
    if (x != 0) return false;
  return true;
}

inline Vec zero_vec(size_t n) { return Vec(n, Int(0)); }

inline Vec unit_vec(size_t n, size_t i) {
  Vec v(n, Int(0));
  v.at(i) = 1;
  return v;
}

inline std::string vec_str(const Vec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + "]";
}

}  // namespace eqalg
