#include "grcohom/scalar.hpp"

namespace grcohom {

namespace {
long long norm_mod(long long v, long long p) {
  long long r = v % p;
  if (r < 0) r += p;
  return r;
}
}  // namespace

Scalar Scalar::rational(long long num, long long den) {
  if (den == 0) fail(Errc::Internal, "rational with zero denominator");
  Scalar s;
  s.q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::mod_p(long long v, long long p) {
  if (p < 2) fail(Errc::Internal, "prime field needs p >= 2");
  Scalar s;
  s.p_ = p;
  s.r_ = norm_mod(v, p);
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  if (p_ == 0) return from_mpq(q_ + o.q_);
  return mod_p(r_ + o.r_, p_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  if (p_ == 0) return from_mpq(q_ - o.q_);
  return mod_p(r_ - o.r_, p_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  if (p_ == 0) return from_mpq(q_ * o.q_);
  // p fits in 31 bits by construction of Field parsing; products fit in int64
  // only for p < 2^31, enforced at parse time.
  return mod_p(r_ * o.r_, p_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (p_ == 0) return from_mpq(-q_);
  return mod_p(-r_, p_);
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Errc::Internal, "division by zero scalar");
  if (p_ == 0) return from_mpq(1 / q_);
  // extended Euclid
  long long a = r_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    long long q = a / b;
    long long t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (a != 1) fail(Errc::Internal, "residue not invertible (p not prime?)");
  return mod_p(x0, p_);
}

std::string Scalar::str() const {
  if (p_ != 0) return std::to_string(r_);
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar Scalar::parse(const std::string& s, const Field& f) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) fail(Errc::SchemaError, "bad rational literal '" + s + "'");
  v.canonicalize();
  if (f.is_rational()) return from_mpq(v);
  // reduce num/den mod p
  mpz_class pz(static_cast<long>(f.p));
  mpz_class num = v.get_num() % pz;
  mpz_class den = v.get_den() % pz;
  Scalar n = mod_p(num.get_si(), f.p);
  Scalar d = mod_p(den.get_si(), f.p);
  return n / d;
}

}  // namespace grcohom
