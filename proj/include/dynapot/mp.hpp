#pragma once

// Arbitrary-precision scalars: BigInt/BigRat on GMP, BigFloat on MPFR,
// and a complex type Cx over BigFloat. Precision is fixed per value at
// construction; binary operations produce results at the wider precision.

#include <gmpxx.h>
#include <mpfr.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace dynapot {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline constexpr mpfr_prec_t kMinPrec = 53;

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128) {
    mpfr_init2(v_, prec < kMinPrec ? kMinPrec : prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(double d, mpfr_prec_t prec) : BigFloat(prec) { mpfr_set_d(v_, d, MPFR_RNDN); }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, kMinPrec);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat from_int(long i, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, i, MPFR_RNDN);
    return r;
  }
  static BigFloat from_bigint(const BigInt& z, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
    return r;
  }
  static BigFloat from_rat(const BigRat& q, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  // Keeps the value, widens (or narrows) the storage.
  void set_prec_round(mpfr_prec_t prec) { mpfr_prec_round(v_, prec < kMinPrec ? kMinPrec : prec, MPFR_RNDN); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  bool is_neg() const { return mpfr_sgn(v_) < 0; }
  // Order-of-magnitude exponent; 0 for zero values.
  long exp2() const { return mpfr_zero_p(v_) ? 0 : mpfr_get_exp(v_); }

  BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return bin(mpfr_add, a, b); }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return bin(mpfr_sub, a, b); }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return bin(mpfr_mul, a, b); }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return bin(mpfr_div, a, b); }
  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  using Fn2 = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static BigFloat bin(Fn2 fn, const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  mpfr_t v_;
};

inline BigFloat bf_abs(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat bf_log(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat bf_log1p(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_log1p(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat bf_sqrt(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat bf_hypot(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.prec(), b.prec()));
  mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat bf_atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(std::max(y.prec(), x.prec()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat bf_pow_ui(const BigFloat& a, unsigned long k) {
  BigFloat r(a.prec());
  mpfr_pow_ui(r.raw(), a.raw(), k, MPFR_RNDN);
  return r;
}
inline BigFloat bf_pow(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.prec(), b.prec()));
  mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat bf_mul_2si(const BigFloat& a, long k) {
  BigFloat r(a.prec());
  mpfr_mul_2si(r.raw(), a.raw(), k, MPFR_RNDN);
  return r;
}
inline BigFloat bf_const_pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat bf_log2(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

// Complex number over BigFloat.
struct Cx {
  BigFloat re, im;

  explicit Cx(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  Cx(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}
  Cx(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
  std::complex<double> to_std() const { return {re.to_double(), im.to_double()}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend Cx operator+(const Cx& a, const Cx& b) { return Cx(a.re + b.re, a.im + b.im); }
  friend Cx operator-(const Cx& a, const Cx& b) { return Cx(a.re - b.re, a.im - b.im); }
  friend Cx operator-(const Cx& a) { return Cx(-a.re, -a.im); }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return Cx(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Cx operator*(const Cx& a, const BigFloat& s) { return Cx(a.re * s, a.im * s); }
  friend Cx operator/(const Cx& a, const Cx& b) {
    BigFloat den = b.re * b.re + b.im * b.im;
    return Cx((a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den);
  }
  Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
  Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
  Cx& operator*=(const Cx& o) { *this = *this * o; return *this; }
};

inline Cx cx_conj(const Cx& a) { return Cx(a.re, -a.im); }
inline BigFloat cx_abs(const Cx& a) { return bf_hypot(a.re, a.im); }
inline BigFloat cx_norm(const Cx& a) { return a.re * a.re + a.im * a.im; }
inline Cx cx_from_std(std::complex<double> z, mpfr_prec_t prec) { return Cx(z.real(), z.imag(), prec); }
inline Cx cx_from_rat(const BigRat& re, const BigRat& im, mpfr_prec_t prec) {
  return Cx(BigFloat::from_rat(re, prec), BigFloat::from_rat(im, prec));
}
inline Cx cx_inv(const Cx& a) {
  BigFloat den = cx_norm(a);
  return Cx(a.re / den, -a.im / den);
}
// log|a|, computed as (1/2) log(re^2+im^2) to avoid the hypot overflow path.
inline BigFloat cx_log_abs(const Cx& a) { return bf_mul_2si(bf_log(cx_norm(a)), -1); }
// Principal k-th root via polar form.
inline Cx cx_root(const Cx& a, unsigned long k, mpfr_prec_t prec) {
  BigFloat r = bf_hypot(a.re, a.im);
  BigFloat theta = bf_atan2(a.im, a.re);
  BigFloat rk(prec);
  mpfr_rootn_ui(rk.raw(), r.raw(), k, MPFR_RNDN);
  BigFloat phi = theta / BigFloat::from_int(static_cast<long>(k), prec);
  BigFloat s(prec), c(prec);
  mpfr_sin_cos(s.raw(), c.raw(), phi.raw(), MPFR_RNDN);
  return Cx(rk * c, rk * s);
}
// e^{i*angle} scaled by radius, at the given precision.
inline Cx cx_polar(const BigFloat& radius, const BigFloat& angle, mpfr_prec_t prec) {
  BigFloat s(prec), c(prec);
  mpfr_sin_cos(s.raw(), c.raw(), angle.raw(), MPFR_RNDN);
  return Cx(radius * c, radius * s);
}

// Rounds a value to a (possibly different) working precision.
inline BigFloat bf_round_to(const BigFloat& a, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Cx cx_round_to(const Cx& a, mpfr_prec_t prec) {
  return Cx(bf_round_to(a.re, prec), bf_round_to(a.im, prec));
}

// Exact content of a list of integers (gcd, positive), 0 for an empty list.
inline BigInt bigint_gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt bigint_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigRat rat_pow(const BigRat& base, unsigned long e) {
  BigRat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  r.canonicalize();
  return r;
}

// Parses "p/q", plain integers, and decimal literals ("-1.25", "3e-2") exactly.
inline BigRat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.find('/') != std::string::npos) {
    BigRat q(s);
    q.canonicalize();
    return q;
  }
  std::string t = s;
  long exp10 = 0;
  auto epos = t.find_first_of("eE");
  if (epos != std::string::npos) {
    exp10 = std::stol(t.substr(epos + 1));
    t = t.substr(0, epos);
  }
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(t.size() - dot - 1);
    t.erase(dot, 1);
  }
  if (t.empty() || t == "-" || t == "+") throw std::invalid_argument("bad rational literal: " + s);
  BigRat q(BigInt(t));
  BigInt p10 = bigint_pow(BigInt(10), static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 < 0)
    q /= BigRat(p10);
  else
    q *= BigRat(p10);
  q.canonicalize();
  return q;
}

}  // namespace dynapot
