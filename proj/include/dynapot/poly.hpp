#pragma once

// Dense univariate/bivariate polynomials over an exact or floating scalar
// ring: big integers, big rationals, or arbitrary-precision complex.
// Iterated polynomials fill in, so dense storage is the cheap choice.

#include <cstddef>
#include <utility>
#include <vector>

#include "dynapot/errors.hpp"
#include "dynapot/mp.hpp"

namespace dynapot {

inline constexpr std::size_t kMaxDenseCoeffs = 4097;   // degree cap 4096
inline constexpr long kUniExactDegreeBudget = 1024;    // d^n cap, univariate expansion
inline constexpr long kBiExactDegreeBudget = 64;       // d^n cap, bivariate expansion

inline bool ring_is_zero(const BigInt& x) { return x == 0; }
inline bool ring_is_zero(const BigRat& x) { return x == 0; }
inline bool ring_is_zero(const Cx& x) { return x.is_zero(); }
inline bool ring_is_zero(double x) { return x == 0.0; }
inline bool ring_is_zero(const std::complex<double>& x) { return x == 0.0; }

template <class T>
T ring_one();
template <>
inline BigInt ring_one<BigInt>() { return BigInt(1); }
template <>
inline BigRat ring_one<BigRat>() { return BigRat(1); }
template <>
inline double ring_one<double>() { return 1.0; }
template <>
inline std::complex<double> ring_one<std::complex<double>>() { return {1.0, 0.0}; }
template <>
inline Cx ring_one<Cx>() {
  Cx o(128);
  mpfr_set_si(o.re.raw(), 1, MPFR_RNDN);
  return o;
}

template <class T>
T ring_from_long(long k);
template <>
inline BigInt ring_from_long<BigInt>(long k) { return BigInt(k); }
template <>
inline BigRat ring_from_long<BigRat>(long k) { return BigRat(k); }
template <>
inline double ring_from_long<double>(long k) { return static_cast<double>(k); }
template <>
inline std::complex<double> ring_from_long<std::complex<double>>(long k) {
  return {static_cast<double>(k), 0.0};
}
template <>
inline Cx ring_from_long<Cx>(long k) {
  Cx o(128);
  mpfr_set_si(o.re.raw(), k, MPFR_RNDN);
  return o;
}

// Coefficients in ascending order; the empty vector is the zero polynomial.
template <class T>
struct UniPoly {
  std::vector<T> c;

  UniPoly() = default;
  explicit UniPoly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }

  bool is_zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }  // -1 for zero poly
  const T& leading() const { return c.back(); }

  void trim() {
    while (!c.empty() && ring_is_zero(c.back())) c.pop_back();
  }

  static UniPoly identity(const T& one) {  // the polynomial z
    UniPoly p;
    p.c = {T{}, one};
    return p;
  }
};

template <class T>
UniPoly<T> operator+(const UniPoly<T>& a, const UniPoly<T>& b) {
  UniPoly<T> r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
    if (i < b.c.size()) r.c[i] = r.c[i] + b.c[i];
  }
  r.trim();
  return r;
}

template <class T>
UniPoly<T> operator-(const UniPoly<T>& a, const UniPoly<T>& b) {
  UniPoly<T> r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
    if (i < b.c.size()) r.c[i] = r.c[i] - b.c[i];
  }
  r.trim();
  return r;
}

template <class T>
UniPoly<T> operator*(const UniPoly<T>& a, const UniPoly<T>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::size_t n = a.c.size() + b.c.size() - 1;
  if (n > kMaxDenseCoeffs)
    throw CapacityError("polynomial product exceeds dense coefficient limit");
  UniPoly<T> r;
  r.c.resize(n);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (ring_is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

template <class T>
UniPoly<T> scale(const UniPoly<T>& a, const T& s) {
  UniPoly<T> r = a;
  for (auto& x : r.c) x = x * s;
  r.trim();
  return r;
}

template <class T, class X>
X poly_eval(const UniPoly<T>& p, const X& z) {
  if (p.is_zero()) return X{};
  X acc{};
  for (std::size_t i = p.c.size(); i-- > 0;) {
    acc = acc * z;
    acc = acc + X(p.c[i]);
  }
  return acc;
}

// Horner evaluation specialised to matching scalar type (no conversion).
template <class T>
T poly_eval_same(const UniPoly<T>& p, const T& z) {
  if (p.is_zero()) return T{};
  T acc = p.c.back();
  for (std::size_t i = p.c.size() - 1; i-- > 0;) acc = acc * z + p.c[i];
  return acc;
}

// Simultaneous p(z), p'(z); zero coefficients are skipped via power jumps is
// not worthwhile at these degrees — plain fused Horner.
template <class T>
std::pair<T, T> poly_eval_d(const UniPoly<T>& p, const T& z) {
  if (p.is_zero()) return {T{}, T{}};
  T v = p.c.back();
  T d{};
  for (std::size_t i = p.c.size() - 1; i-- > 0;) {
    d = d * z + v;
    v = v * z + p.c[i];
  }
  return {v, d};
}

// Formal m-th derivative.
template <class T>
UniPoly<T> derivative(const UniPoly<T>& p, unsigned m = 1) {
  UniPoly<T> r = p;
  for (unsigned s = 0; s < m; ++s) {
    if (r.c.size() <= 1) return {};
    UniPoly<T> d;
    d.c.resize(r.c.size() - 1);
    for (std::size_t i = 1; i < r.c.size(); ++i)
      d.c[i - 1] = r.c[i] * ring_from_long<T>(static_cast<long>(i));
    d.trim();
    r = std::move(d);
  }
  return r;
}

// p(q(z)) as a formal identity; result degree = deg p * deg q when both are
// nonconstant.
template <class T>
UniPoly<T> compose(const UniPoly<T>& p, const UniPoly<T>& q,
                   std::size_t max_coeffs = kMaxDenseCoeffs) {
  if (p.is_zero()) return {};
  if (p.degree() > 0 && q.degree() > 0) {
    std::size_t need = static_cast<std::size_t>(p.degree()) * static_cast<std::size_t>(q.degree()) + 1;
    if (need > max_coeffs) throw CapacityError("compose: result exceeds coefficient budget");
  }
  UniPoly<T> acc;
  acc.c = {p.c.back()};
  for (std::size_t i = p.c.size() - 1; i-- > 0;) {
    acc = acc * q;
    if (acc.c.empty()) acc.c.resize(1);
    acc.c[0] = acc.c[0] + p.c[i];
    acc.trim();
  }
  return acc;
}

// f composed with itself n times; iterate(f, 0) = z.
template <class T>
UniPoly<T> iterate(const UniPoly<T>& f, unsigned n, long max_degree = kUniExactDegreeBudget) {
  if (f.degree() < 2) throw ValidationError("iterate: map degree must exceed 1");
  double dn = 1.0;
  for (unsigned k = 0; k < n; ++k) {
    dn *= static_cast<double>(f.degree());
    if (dn > static_cast<double>(max_degree))
      throw CapacityError("iterate: d^n exceeds the exact expansion budget");
  }
  UniPoly<T> acc = UniPoly<T>::identity(ring_one<T>());
  for (unsigned k = 0; k < n; ++k)
    acc = compose(f, acc, static_cast<std::size_t>(max_degree) + 1);
  return acc;
}

// Content/primitive decomposition over the integers, with the leading
// coefficient of the primitive part normalised positive.
inline std::pair<BigInt, UniPoly<BigInt>> primitive_part(const UniPoly<BigInt>& p) {
  if (p.is_zero()) throw ValidationError("primitive_part: zero polynomial");
  BigInt g = 0;
  for (const auto& x : p.c) g = bigint_gcd(g, x);
  if (p.leading() < 0) g = -g;
  UniPoly<BigInt> prim;
  prim.c.resize(p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), p.c[i].get_mpz_t(), g.get_mpz_t());
    prim.c[i] = q;
  }
  BigInt content = g < 0 ? BigInt(-g) : g;
  return {content, prim};
}

template <class T>
UniPoly<Cx> to_cx_poly(const UniPoly<T>& p, mpfr_prec_t prec);
template <>
inline UniPoly<Cx> to_cx_poly(const UniPoly<BigInt>& p, mpfr_prec_t prec) {
  UniPoly<Cx> r;
  r.c.reserve(p.c.size());
  for (const auto& x : p.c) r.c.emplace_back(BigFloat::from_bigint(x, prec), BigFloat(prec));
  r.trim();
  return r;
}
template <>
inline UniPoly<Cx> to_cx_poly(const UniPoly<BigRat>& p, mpfr_prec_t prec) {
  UniPoly<Cx> r;
  r.c.reserve(p.c.size());
  for (const auto& x : p.c) r.c.emplace_back(BigFloat::from_rat(x, prec), BigFloat(prec));
  r.trim();
  return r;
}

// ---------------------------------------------------------------------------
// Dense bivariate polynomials, coefficient grid indexed by (z-degree, w-degree).

template <class T>
struct BiPoly {
  std::vector<std::vector<T>> c;  // c[i][j] * z^i * w^j

  BiPoly() = default;

  bool is_zero() const { return c.empty(); }
  long deg_z() const { return static_cast<long>(c.size()) - 1; }
  long deg_w() const {
    long dw = -1;
    for (const auto& row : c) dw = std::max(dw, static_cast<long>(row.size()) - 1);
    return dw;
  }
  long total_degree() const {
    long td = -1;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c[i].size(); ++j)
        if (!ring_is_zero(c[i][j])) td = std::max(td, static_cast<long>(i + j));
    return td;
  }

  const T at(std::size_t i, std::size_t j) const {
    if (i < c.size() && j < c[i].size()) return c[i][j];
    return T{};
  }
  void set(std::size_t i, std::size_t j, T v) {
    if (c.size() <= i) c.resize(i + 1);
    if (c[i].size() <= j) c[i].resize(j + 1);
    c[i][j] = std::move(v);
  }
  void trim() {
    for (auto& row : c)
      while (!row.empty() && ring_is_zero(row.back())) row.pop_back();
    while (!c.empty() && c.back().empty()) c.pop_back();
  }

  static BiPoly var_z() {
    BiPoly p;
    p.set(1, 0, ring_one<T>());
    return p;
  }
  static BiPoly var_w() {
    BiPoly p;
    p.set(0, 1, ring_one<T>());
    return p;
  }
  static BiPoly constant(T v) {
    BiPoly p;
    p.set(0, 0, std::move(v));
    p.trim();
    return p;
  }
};

template <class T>
BiPoly<T> operator+(const BiPoly<T>& a, const BiPoly<T>& b) {
  BiPoly<T> r = a;
  for (std::size_t i = 0; i < b.c.size(); ++i)
    for (std::size_t j = 0; j < b.c[i].size(); ++j)
      r.set(i, j, r.at(i, j) + b.c[i][j]);
  r.trim();
  return r;
}

template <class T>
BiPoly<T> operator-(const BiPoly<T>& a, const BiPoly<T>& b) {
  BiPoly<T> r = a;
  for (std::size_t i = 0; i < b.c.size(); ++i)
    for (std::size_t j = 0; j < b.c[i].size(); ++j)
      r.set(i, j, r.at(i, j) - b.c[i][j]);
  r.trim();
  return r;
}

template <class T>
BiPoly<T> operator*(const BiPoly<T>& a, const BiPoly<T>& b) {
  BiPoly<T> r;
  if (a.is_zero() || b.is_zero()) return r;
  std::size_t nz = static_cast<std::size_t>(a.deg_z() + b.deg_z()) + 1;
  if (nz > kMaxDenseCoeffs) throw CapacityError("bivariate product exceeds z-degree limit");
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < a.c[i].size(); ++j) {
      if (ring_is_zero(a.c[i][j])) continue;
      for (std::size_t k = 0; k < b.c.size(); ++k)
        for (std::size_t l = 0; l < b.c[k].size(); ++l) {
          if (ring_is_zero(b.c[k][l])) continue;
          r.set(i + k, j + l, r.at(i + k, j + l) + a.c[i][j] * b.c[k][l]);
        }
    }
  r.trim();
  return r;
}

template <class T>
BiPoly<T> scale(const BiPoly<T>& a, const T& s) {
  BiPoly<T> r = a;
  for (auto& row : r.c)
    for (auto& x : row) x = x * s;
  r.trim();
  return r;
}

// Univariate p applied to a bivariate argument, by Horner.
template <class T>
BiPoly<T> compose(const UniPoly<T>& p, const BiPoly<T>& arg) {
  BiPoly<T> acc;
  if (p.is_zero()) return acc;
  acc = BiPoly<T>::constant(p.c.back());
  for (std::size_t i = p.c.size() - 1; i-- > 0;) {
    acc = acc * arg;
    acc.set(0, 0, acc.at(0, 0) + p.c[i]);
    acc.trim();
  }
  return acc;
}

template <class T>
BiPoly<T> derivative_z(const BiPoly<T>& p) {
  BiPoly<T> r;
  for (std::size_t i = 1; i < p.c.size(); ++i)
    for (std::size_t j = 0; j < p.c[i].size(); ++j)
      if (!ring_is_zero(p.c[i][j]))
        r.set(i - 1, j, p.c[i][j] * ring_from_long<T>(static_cast<long>(i)));
  r.trim();
  return r;
}

template <class T>
BiPoly<T> derivative_w(const BiPoly<T>& p) {
  BiPoly<T> r;
  for (std::size_t i = 0; i < p.c.size(); ++i)
    for (std::size_t j = 1; j < p.c[i].size(); ++j)
      if (!ring_is_zero(p.c[i][j]))
        r.set(i, j - 1, p.c[i][j] * ring_from_long<T>(static_cast<long>(j)));
  r.trim();
  return r;
}

template <class T, class X>
X bipoly_eval(const BiPoly<T>& p, const X& z, const X& w) {
  X acc{};
  for (std::size_t i = p.c.size(); i-- > 0;) {
    X row{};
    for (std::size_t j = p.c[i].size(); j-- > 0;) {
      row = row * w;
      row = row + X(p.c[i][j]);
    }
    acc = acc * z;
    acc = acc + row;
  }
  return acc;
}

// Restriction to the parametrised line (z, w) = base + s * dir, as a
// univariate polynomial in s.
template <class T>
UniPoly<T> restrict_to_line(const BiPoly<T>& p, const T& base_z, const T& base_w, const T& dir_z,
                            const T& dir_w) {
  UniPoly<T> lz;  // base_z + s*dir_z
  lz.c = {base_z, dir_z};
  lz.trim();
  UniPoly<T> lw;
  lw.c = {base_w, dir_w};
  lw.trim();
  UniPoly<T> acc;
  UniPoly<T> zpow;
  zpow.c = {ring_one<T>()};
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    UniPoly<T> row;
    UniPoly<T> wpow;
    wpow.c = {ring_one<T>()};
    for (std::size_t j = 0; j < p.c[i].size(); ++j) {
      if (!ring_is_zero(p.c[i][j])) row = row + scale(wpow, p.c[i][j]);
      if (j + 1 < p.c[i].size()) wpow = wpow * lw;
    }
    if (!row.is_zero()) acc = acc + row * zpow;
    if (i + 1 < p.c.size()) zpow = zpow * lz;
  }
  return acc;
}

template <class T>
BiPoly<Cx> to_cx_bipoly(const BiPoly<T>& p, mpfr_prec_t prec);
template <>
inline BiPoly<Cx> to_cx_bipoly(const BiPoly<BigRat>& p, mpfr_prec_t prec) {
  BiPoly<Cx> r;
  for (std::size_t i = 0; i < p.c.size(); ++i)
    for (std::size_t j = 0; j < p.c[i].size(); ++j)
      if (!ring_is_zero(p.c[i][j]))
        r.set(i, j, Cx(BigFloat::from_rat(p.c[i][j], prec), BigFloat(prec)));
  r.trim();
  return r;
}

}  // namespace dynapot
