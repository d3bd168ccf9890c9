#pragma once

// Order-m jets: a point value together with derivatives up to order m,
// propagated through polynomial compositions (Taylor mode). Evaluating
// (f^n)^{(k)}(z) for k <= m costs O(n * deg f * m^2) and never expands
// the d^n-sized coefficient vector of f^n.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "dynapot/errors.hpp"
#include "dynapot/mp.hpp"
#include "dynapot/poly.hpp"

namespace dynapot {

// values[k] = h^{(k)}(z); order = values.size() - 1.
struct Jet {
  std::vector<Cx> values;

  unsigned order() const { return static_cast<unsigned>(values.size()) - 1; }
  const Cx& deriv(unsigned k) const { return values[k]; }

  static Jet constant(const Cx& v, unsigned order) {
    Jet j;
    j.values.assign(order + 1, Cx(v.prec()));
    j.values[0] = v;
    return j;
  }
  // Jet of the identity coordinate at z: [z, 1, 0, ..., 0].
  static Jet seed(const Cx& z, unsigned order, mpfr_prec_t prec) {
    Jet j;
    j.values.assign(order + 1, Cx(prec));
    j.values[0] = cx_round_to(z, prec);
    if (order >= 1) mpfr_set_si(j.values[1].re.raw(), 1, MPFR_RNDN);
    return j;
  }
};

namespace detail {
inline long binom(unsigned k, unsigned j) {
  long r = 1;
  for (unsigned i = 0; i < j; ++i) r = r * static_cast<long>(k - i) / static_cast<long>(i + 1);
  return r;
}
inline long cx_exp2(const Cx& a) { return std::max(a.re.exp2(), a.im.exp2()); }
inline double pow2_clamped(long e) {
  return std::ldexp(1.0, static_cast<int>(std::clamp(e, -900L, 900L)));
}
}  // namespace detail

// Jet with a coarse running relative-error estimate per component, used for
// the precision-loss warning. The estimate tracks rounding plus cancellation
// ratios in exponent space; it is an engineering bound, not an interval.
struct TrackedJet {
  Jet jet;
  std::vector<double> relerr;

  static TrackedJet seed(const Cx& z, unsigned order, mpfr_prec_t prec) {
    TrackedJet t;
    t.jet = Jet::seed(z, order, prec);
    t.relerr.assign(order + 1, 0.0);
    return t;
  }
  double max_relerr() const {
    double m = 0.0;
    for (double e : relerr) m = std::max(m, e);
    return m;
  }
};

// Leibniz product of jets: (fg)^{(k)} = sum_j C(k,j) f^{(j)} g^{(k-j)}.
inline TrackedJet jet_mul(const TrackedJet& a, const TrackedJet& b, mpfr_prec_t prec) {
  unsigned m = a.jet.order();
  double u = std::ldexp(1.0, 1 - static_cast<int>(prec));
  TrackedJet r;
  r.jet.values.assign(m + 1, Cx(prec));
  r.relerr.assign(m + 1, 0.0);
  for (unsigned k = 0; k <= m; ++k) {
    Cx acc(prec);
    double err = 0.0;
    long acc_exp = 0;
    bool first = true;
    for (unsigned j = 0; j <= k; ++j) {
      Cx term = a.jet.values[j] * b.jet.values[k - j];
      long bc = detail::binom(k, j);
      if (bc != 1) term = term * BigFloat::from_int(bc, prec);
      double term_err = a.relerr[j] + b.relerr[k - j] + 3 * u;
      long term_exp = detail::cx_exp2(term);
      Cx next = acc + term;
      long next_exp = detail::cx_exp2(next);
      if (first) {
        err = term_err;
        first = false;
      } else {
        err = err * detail::pow2_clamped(acc_exp - next_exp) +
              term_err * detail::pow2_clamped(term_exp - next_exp) + u;
      }
      acc = next;
      acc_exp = next_exp;
    }
    r.jet.values[k] = acc;
    r.relerr[k] = err;
  }
  return r;
}

inline TrackedJet jet_add_const(TrackedJet a, const Cx& cst, mpfr_prec_t prec) {
  double u = std::ldexp(1.0, 1 - static_cast<int>(prec));
  long ea = detail::cx_exp2(a.jet.values[0]);
  long ec = detail::cx_exp2(cst);
  Cx next = a.jet.values[0] + cst;
  long en = detail::cx_exp2(next);
  a.relerr[0] = a.relerr[0] * detail::pow2_clamped(ea - en) +
                u * detail::pow2_clamped(ec - en) + u;
  a.jet.values[0] = next;
  return a;
}

// p evaluated on a jet argument, by Horner.
inline TrackedJet poly_eval_jet(const UniPoly<Cx>& p, const TrackedJet& x, mpfr_prec_t prec) {
  unsigned m = x.jet.order();
  if (p.is_zero()) {
    TrackedJet z;
    z.jet.values.assign(m + 1, Cx(prec));
    z.relerr.assign(m + 1, 0.0);
    return z;
  }
  TrackedJet acc;
  acc.jet = Jet::constant(cx_round_to(p.c.back(), prec), m);
  acc.relerr.assign(m + 1, 0.0);
  for (std::size_t i = p.c.size() - 1; i-- > 0;) {
    acc = jet_mul(acc, x, prec);
    acc = jet_add_const(std::move(acc), p.c[i], prec);
  }
  return acc;
}

struct JetEvalResult {
  Jet jet;             // [f^n(z), (f^n)'(z), ..., (f^n)^{(m)}(z)]
  double max_relerr;   // coarse bound over components
};

// Derivatives of the n-th iterate at z, through n compositions.
inline JetEvalResult jet_eval(const UniPoly<Cx>& f, unsigned n, unsigned m, const Cx& z,
                              mpfr_prec_t prec, double warn_tol = 0.0) {
  if (f.degree() < 2) throw ValidationError("jet_eval: map degree must exceed 1");
  TrackedJet x = TrackedJet::seed(z, m, prec);
  for (unsigned k = 0; k < n; ++k) x = poly_eval_jet(f, x, prec);
  if (warn_tol > 0.0 && x.max_relerr() > warn_tol)
    throw NumericError("jet_eval: estimated precision loss exceeds tolerance");
  return {std::move(x.jet), x.max_relerr()};
}

}  // namespace dynapot
