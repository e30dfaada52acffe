#ifndef COVERCERT_COMPLEXBOX_HPP
#define COVERCERT_COMPLEXBOX_HPP

// Certified complex root enclosures. Rational roots are split off exactly;
// the rest are located by a Durand-Kerner sweep in truncated dyadic
// arithmetic and then certified purely rationally: for a dyadic point z the
// values p(z), p'(z) are exact Gaussian rationals, and every disk of radius
// deg(p) * |p(z)/p'(z)| around z contains at least one root. Pairwise
// disjointness of the deg(p) disks then pins down exactly one root each.

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "covercert/error.hpp"
#include "covercert/rat.hpp"
#include "covercert/roots.hpp"
#include "covercert/upoly.hpp"

namespace covercert {

struct RatInterval {
  Rat lo, hi;
  Rat width() const { return hi - lo; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

struct ComplexBox {
  Rat re_lo, re_hi, im_lo, im_hi;
  long precision_bits = 0;
  bool exact_rational = false;

  Rat re_mid() const { return (re_lo + re_hi) * Rat(Int(1), Int(2)); }
  Rat im_mid() const { return (im_lo + im_hi) * Rat(Int(1), Int(2)); }

  // Certified interval for |z|^2 over the box.
  RatInterval abs2_interval() const {
    auto sq = [](const Rat& a, const Rat& b) {
      Rat lo2, hi2;
      Rat a2 = a * a, b2 = b * b;
      hi2 = std::max(a2, b2);
      if (a.sign() <= 0 && b.sign() >= 0) lo2 = Rat(0);
      else lo2 = std::min(a2, b2);
      return RatInterval{lo2, hi2};
    };
    RatInterval r = sq(re_lo, re_hi), i = sq(im_lo, im_hi);
    return RatInterval{r.lo + i.lo, r.hi + i.hi};
  }
};

namespace detail {

struct CRat {
  Rat re, im;
  CRat() = default;
  CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  friend CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend CRat operator*(const CRat& a, const CRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Rat abs2() const { return re * re + im * im; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

inline CRat cdiv(const CRat& a, const CRat& b) {
  Rat n = b.abs2();
  require(!n.is_zero(), Err::Internal, "complex division by zero");
  Rat ninv = n.inv();
  return {(a.re * b.re + a.im * b.im) * ninv, (a.im * b.re - a.re * b.im) * ninv};
}

inline Rat round_bits(const Rat& a, long bits) { return dyadic_floor(a, bits); }
inline CRat round_bits(const CRat& a, long bits) { return {round_bits(a.re, bits), round_bits(a.im, bits)}; }

inline CRat eval_c(const std::vector<Rat>& c, const CRat& z) {
  CRat acc(Rat(0), Rat(0));
  for (size_t i = c.size(); i-- > 0;) acc = acc * z + CRat(c[i], Rat(0));
  return acc;
}

// Rational upper bound for sqrt(q), q >= 0.
inline Rat sqrt_upper(const Rat& q) {
  if (q.sign() <= 0) return Rat(0);
  Int ab = q.num() * q.den();
  Int s;
  mpz_sqrt(s.get_mpz_t(), ab.get_mpz_t());
  return Rat(s + 1, q.den());
}

}  // namespace detail

// All complex roots of a squarefree rational polynomial as pairwise-disjoint
// certified boxes of width at most 2^-precision_bits.
inline std::vector<ComplexBox> complex_roots(const UPoly<Rat>& p, long precision_bits,
                                             long bit_cap = 1 << 14) {
  require(!p.is_zero() && p.deg() >= 1, Err::InvalidInput, "need positive degree");
  require(is_squarefree(p), Err::InvalidInput, "polynomial must be squarefree");
  require(precision_bits >= 1, Err::InvalidInput, "bad precision");

  std::vector<ComplexBox> boxes;
  auto rr = rational_roots(p);
  for (const auto& [r, m] : rr.roots) {
    (void)m;
    ComplexBox b;
    b.re_lo = b.re_hi = r;
    b.im_lo = b.im_hi = Rat(0);
    b.precision_bits = precision_bits;
    b.exact_rational = true;
    boxes.push_back(b);
  }
  UPoly<Rat> c = rr.cofactor;
  int d = c.deg();
  if (d == 0) return boxes;

  // Monic coefficient lists for c and c'.
  Rat lcinv = c.lc().inv();
  std::vector<Rat> cm;
  for (const auto& a : c.coeffs()) cm.push_back(a * lcinv);
  std::vector<Rat> cd;
  for (int i = 1; i <= d; ++i) cd.push_back(cm[static_cast<size_t>(i)] * Rat(i));

  Rat radius(1);
  for (int i = 0; i < d; ++i) radius = std::max(radius, Rat(1) + cm[static_cast<size_t>(i)].abs());

  Rat target = Rat(Int(1), int_pow(2, static_cast<unsigned long>(precision_bits) + 2));

  for (long bits = 128; bits <= bit_cap; bits *= 2) {
    // Durand-Kerner sweep from points on a circle of the root-bound radius.
    std::vector<detail::CRat> z(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
      double ang = 2.0 * 3.141592653589793 * (static_cast<double>(i) + 0.25) / static_cast<double>(d) + 0.7;
      auto to_rat = [](double x) { return Rat(Int(static_cast<long>(x * 4096.0)), Int(4096)); };
      z[static_cast<size_t>(i)] = detail::CRat(radius * to_rat(std::cos(ang)), radius * to_rat(std::sin(ang)));
    }
    bool converged = false;
    for (int iter = 0; iter < 120 + 4 * d; ++iter) {
      Rat maxcorr(0);
      for (int i = 0; i < d; ++i) {
        detail::CRat denom(Rat(1), Rat(0));
        for (int j = 0; j < d; ++j) {
          if (j == i) continue;
          denom = denom * (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
          denom = detail::round_bits(denom, bits);
        }
        if (denom.is_zero()) {
          // Collided points; nudge and continue.
          z[static_cast<size_t>(i)].re += Rat(Int(1), int_pow(2, 16));
          continue;
        }
        detail::CRat val = detail::eval_c(cm, z[static_cast<size_t>(i)]);
        detail::CRat corr = detail::cdiv(val, denom);
        corr = detail::round_bits(corr, bits);
        z[static_cast<size_t>(i)] = detail::round_bits(z[static_cast<size_t>(i)] - corr, bits);
        maxcorr = std::max(maxcorr, corr.abs2());
      }
      if (maxcorr < Rat(Int(1), int_pow(2, static_cast<unsigned long>(bits))))  { converged = true; break; }
    }
    if (!converged) continue;

    // Newton polish until the certified disk radius meets the target.
    std::vector<Rat> rad_bound(static_cast<size_t>(d));
    bool all_ok = true;
    for (int i = 0; i < d && all_ok; ++i) {
      bool ok = false;
      for (int step = 0; step < 64; ++step) {
        detail::CRat val = detail::eval_c(cm, z[static_cast<size_t>(i)]);
        detail::CRat der = detail::eval_c(cd, z[static_cast<size_t>(i)]);
        if (der.is_zero()) break;
        detail::CRat nq = detail::cdiv(val, der);
        Rat bound = Rat(d) * detail::sqrt_upper(nq.abs2());
        if (bound <= target) {
          rad_bound[static_cast<size_t>(i)] = bound;
          ok = true;
          break;
        }
        z[static_cast<size_t>(i)] = detail::round_bits(z[static_cast<size_t>(i)] - nq, 2 * bits);
      }
      if (!ok) all_ok = false;
    }
    if (!all_ok) continue;

    // Disjointness of all enclosures (including the exact rational ones).
    bool disjoint = true;
    for (int i = 0; i < d && disjoint; ++i) {
      for (int j = i + 1; j < d && disjoint; ++j) {
        Rat dist2 = (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]).abs2();
        Rat rr2 = rad_bound[static_cast<size_t>(i)] + rad_bound[static_cast<size_t>(j)];
        if (dist2 <= rr2 * rr2) disjoint = false;
      }
      for (const auto& b : boxes) {
        detail::CRat q(b.re_lo, b.im_lo);
        Rat dist2 = (z[static_cast<size_t>(i)] - q).abs2();
        if (dist2 <= rad_bound[static_cast<size_t>(i)] * rad_bound[static_cast<size_t>(i)]) disjoint = false;
      }
    }
    if (!disjoint) continue;

    for (int i = 0; i < d; ++i) {
      ComplexBox b;
      const auto& zi = z[static_cast<size_t>(i)];
      const Rat& r = rad_bound[static_cast<size_t>(i)];
      b.re_lo = dyadic_floor(zi.re - r, precision_bits + 8);
      b.re_hi = dyadic_ceil(zi.re + r, precision_bits + 8);
      b.im_lo = dyadic_floor(zi.im - r, precision_bits + 8);
      b.im_hi = dyadic_ceil(zi.im + r, precision_bits + 8);
      b.precision_bits = precision_bits;
      boxes.push_back(b);
    }
    return boxes;
  }
  fail(Err::PrecisionExhausted, "root certification did not converge within the precision cap");
}

}  // namespace covercert

#endif
