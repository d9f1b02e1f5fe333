#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "grcohom/error.hpp"

namespace grcohom {

// A Z^d-graded degree (also used for integer row functionals).
using DegreeVector = std::vector<long long>;

inline DegreeVector operator+(const DegreeVector& a, const DegreeVector& b) {
  DegreeVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline DegreeVector operator-(const DegreeVector& a, const DegreeVector& b) {
  DegreeVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline DegreeVector operator-(const DegreeVector& a) {
  DegreeVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline DegreeVector operator*(long long c, const DegreeVector& a) {
  DegreeVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline long long dot(const DegreeVector& a, const DegreeVector& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const DegreeVector& a) {
  for (long long x : a)
    if (x != 0) return false;
  return true;
}

inline std::string vec_str(const DegreeVector& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

inline long long vec_gcd(const DegreeVector& a) {
  long long g = 0;
  for (long long x : a) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

inline DegreeVector primitive(DegreeVector a) {
  long long g = vec_gcd(a);
  if (g > 1)
    for (auto& x : a) x /= g;
  return a;
}

// Integer extended with +/- infinity; carries tau_F values and strip bounds.
struct ExtInt {
  enum Kind : int8_t { NegInf = -1, Finite = 0, PosInf = 1 };
  Kind kind = Finite;
  long long v = 0;

  static ExtInt finite(long long x) { return {Finite, x}; }
  static ExtInt pos_inf() { return {PosInf, 0}; }
  static ExtInt neg_inf() { return {NegInf, 0}; }
  bool is_finite() const { return kind == Finite; }
  bool operator==(const ExtInt& o) const {
    return kind == o.kind && (kind != Finite || v == o.v);
  }
  bool operator<(const ExtInt& o) const {
    if (kind != o.kind) return kind < o.kind;
    return kind == Finite && v < o.v;
  }
  bool operator<=(const ExtInt& o) const { return *this < o || *this == o; }
  std::string str() const {
    if (kind == PosInf) return "inf";
    if (kind == NegInf) return "-inf";
    return std::to_string(v);
  }
};

using TauVector = std::vector<ExtInt>;

inline bool tau_leq(const DegreeVector& tau_beta, const TauVector& bound) {
  for (size_t i = 0; i < bound.size(); ++i) {
    if (bound[i].kind == ExtInt::PosInf) continue;
    if (bound[i].kind == ExtInt::NegInf) return false;
    if (tau_beta[i] > bound[i].v) return false;
  }
  return true;
}

}  // namespace grcohom
