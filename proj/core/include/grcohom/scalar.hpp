#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "grcohom/error.hpp"

namespace grcohom {

// Coefficient field: exact rationals (p == 0) or the prime field F_p.
struct Field {
  long long p = 0;
  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;
};

// An exact field element. Arithmetic between different fields is a logic error.
class Scalar {
 public:
  Scalar() : p_(0) {}
  explicit Scalar(long long n) : q_(static_cast<long>(n)), p_(0) {}

  static Scalar zero(const Field& f) { return f.is_rational() ? Scalar() : mod_p(0, f.p); }
  static Scalar one(const Field& f) { return f.is_rational() ? Scalar(1) : mod_p(1, f.p); }
  static Scalar rational(long long num, long long den = 1);
  static Scalar from_mpq(mpq_class v) {
    Scalar s;
    s.q_ = std::move(v);
    s.q_.canonicalize();
    return s;
  }
  static Scalar mod_p(long long v, long long p);

  Field field() const { return Field{p_}; }
  bool is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;

  // Serialized form is always "p" or "p/q" (F_p elements print their residue).
  std::string str() const;
  static Scalar parse(const std::string& s, const Field& f);

  const mpq_class& rat() const { return q_; }
  long long residue() const { return r_; }

 private:
  void check_same(const Scalar& o) const {
    if (p_ != o.p_) fail(Errc::Internal, "mixed-field scalar arithmetic");
  }
  mpq_class q_;
  long long r_ = 0;
  long long p_ = 0;  // 0 means rational mode
};

}  // namespace grcohom
