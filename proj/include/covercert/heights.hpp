#ifndef COVERCERT_HEIGHTS_HPP
#define COVERCERT_HEIGHTS_HPP

// Heights of rational vectors, algebraic numbers and polynomials, and the
// explicit height inequalities used throughout: products, compositions,
// determinants, the (X-rho)^m transform, Silverman's discriminant bound and
// the arithmetic-Bezout bound for isolated solutions.

#include <utility>
#include <vector>

#include "covercert/bpoly.hpp"
#include "covercert/complexbox.hpp"
#include "covercert/error.hpp"
#include "covercert/logvalue.hpp"
#include "covercert/mpoly.hpp"
#include "covercert/numberfield.hpp"
#include "covercert/rat.hpp"
#include "covercert/solve2.hpp"
#include "covercert/upoly.hpp"

namespace covercert {

// h(v) = log max(|a_1|, ..., |a_N|, b) over the least common denominator b
// with gcd(a_1, ..., a_N, b) = 1. Exact.
inline LogValue height_rational_vector(const std::vector<Rat>& v) {
  require(!v.empty(), Err::InvalidInput, "height of empty vector");
  Int lcd = 1;
  for (const auto& a : v) {
    Int g;
    mpz_lcm(g.get_mpz_t(), lcd.get_mpz_t(), a.den().get_mpz_t());
    lcd = g;
  }
  Int maxnum = 0, gcd_all = lcd;
  for (const auto& a : v) {
    Int n = a.num() * (lcd / a.den());
    Int an;
    mpz_abs(an.get_mpz_t(), n.get_mpz_t());
    if (an > maxnum) maxnum = an;
    Int g;
    mpz_gcd(g.get_mpz_t(), gcd_all.get_mpz_t(), n.get_mpz_t());
    gcd_all = g;
  }
  maxnum /= gcd_all;
  Int b = lcd / gcd_all;
  Int m = maxnum > b ? maxnum : b;
  return LogValue::log_of(Rat(m));
}

inline LogValue height_rational(const Rat& a) { return height_rational_vector({a}); }

// Mahler-measure height of the algebraic numbers with the given minimal
// polynomial: (1/d) (log|lc| + sum log+ |roots|) over the primitive integer
// form. Exact when all roots are rational, a certified enclosure otherwise.
inline LogValue height_algebraic(const UPoly<Rat>& minpoly, long width_bits = 53,
                                 long root_bit_cap = 1 << 14) {
  require(minpoly.deg() >= 1, Err::InvalidInput, "minimal polynomial must have positive degree");
  require(is_squarefree(minpoly), Err::InvalidInput, "minimal polynomial must be squarefree");
  int d = minpoly.deg();
  IntPoly ip = primitive_integer_form(minpoly);
  Int lc_abs;
  mpz_abs(lc_abs.get_mpz_t(), ip.c.back().get_mpz_t());
  LogValue acc = LogValue::log_of(Rat(lc_abs));

  auto rr = rational_roots(minpoly);
  int rational_count = 0;
  for (const auto& [r, m] : rr.roots) {
    rational_count += m;
    Rat ra = r.abs();
    if (ra > Rat(1)) acc = acc + LogValue::log_of(ra).scaled(Rat(m));
  }
  if (rational_count == d) return acc.scaled(Rat(Int(1), Int(d)));

  // Irrational roots: certified boxes, refined until the enclosure is
  // narrower than the requested width.
  const UPoly<Rat>& cof = rr.cofactor;
  for (long prec = std::max<long>(64, width_bits + 16);; prec *= 2) {
    require(prec <= root_bit_cap, Err::PrecisionExhausted, "height enclosure did not narrow");
    Rat lo(0), hi(0);
    for (const auto& box : complex_roots(cof, prec, root_bit_cap)) {
      RatInterval a2 = box.abs2_interval();
      if (a2.hi <= Rat(1)) continue;  // log+ is exactly 0
      RatInterval l = ln_enclosure(a2.hi, prec);
      hi += l.hi;
      if (a2.lo > Rat(1)) lo += ln_enclosure(a2.lo, prec).lo;
    }
    Rat half(Int(1), Int(2));
    lo *= half;
    hi *= half;
    LogValue h = (acc + LogValue::interval(lo, hi)).scaled(Rat(Int(1), Int(d)));
    RatInterval e = h.enclosure(prec);
    if (e.width() < Rat(Int(1), int_pow(2, static_cast<unsigned long>(width_bits)))) return h;
  }
}

// Height of a rational scalar collection (any polynomial type).
inline LogValue height_of_coeffs(const std::vector<Rat>& nonzero_coeffs) {
  if (nonzero_coeffs.empty()) return LogValue::zero();
  return height_rational_vector(nonzero_coeffs);
}

template <class P>
std::vector<Rat> nonzero_rat_coeffs(const P& p);

template <>
inline std::vector<Rat> nonzero_rat_coeffs(const UPoly<Rat>& p) {
  std::vector<Rat> v;
  for (const auto& c : p.coeffs())
    if (!c.is_zero()) v.push_back(c);
  return v;
}
template <>
inline std::vector<Rat> nonzero_rat_coeffs(const BPoly<Rat>& p) {
  std::vector<Rat> v;
  for (const auto& u : p.ycoeffs())
    for (const auto& c : u.coeffs())
      if (!c.is_zero()) v.push_back(c);
  return v;
}
template <>
inline std::vector<Rat> nonzero_rat_coeffs(const MPoly<Rat>& p) {
  return p.coefficients();
}

template <class P>
LogValue height_poly(const P& p) {
  return height_of_coeffs(nonzero_rat_coeffs(p));
}

// Height of an element of a number field: exact for rationals, Mahler
// enclosure otherwise.
inline LogValue height_nf(const NFElem& a) {
  if (a.is_rational()) return height_rational(a.rat_part());
  return height_algebraic(nf_minpoly(a));
}

inline LogValue scalar_height(const Rat& a) { return height_rational(a); }
inline LogValue scalar_height(const NFElem& a) { return height_nf(a); }

// Heights of vectors over a proper number field are returned as the
// certified sandwich [max_i h(a_i), sum_i h(a_i)]; exact only when every
// entry is rational.
inline LogValue height_vector_nf(const std::vector<NFElem>& v) {
  require(!v.empty(), Err::InvalidInput, "height of empty vector");
  bool all_rational = true;
  for (const auto& a : v)
    if (!a.is_rational()) all_rational = false;
  if (all_rational) {
    std::vector<Rat> r;
    r.reserve(v.size());
    for (const auto& a : v) r.push_back(a.rat_part());
    return height_rational_vector(r);
  }
  const long bits = 128;
  Rat lo(0), hi(0);
  for (const auto& a : v) {
    RatInterval e = height_nf(a).enclosure(bits);
    lo = std::max(lo, e.lo);
    hi += e.hi;
  }
  return LogValue::interval(lo, hi);
}

// ---- The explicit inequalities -------------------------------------------

struct BoundPair {
  LogValue lhs, rhs;
  bool comparable = true;  // false when the lhs is undefined (zero value)
};

// h(prod f_i) <= sum h(f_i) + log(n+1) * sum_{i<s} deg f_i.
inline BoundPair bound_product(const std::vector<MPoly<Rat>>& fs) {
  require(!fs.empty(), Err::InvalidInput, "empty product");
  int n = fs[0].nvars();
  MPoly<Rat> prod = MPoly<Rat>::constant(n, Rat(1));
  LogValue rhs;
  long degsum = 0;
  for (size_t i = 0; i < fs.size(); ++i) {
    require(!fs[i].is_zero(), Err::InvalidInput, "zero factor");
    require(fs[i].nvars() == n, Err::DimensionMismatch, "factor arity mismatch");
    prod = prod * fs[i];
    rhs = rhs + height_poly(fs[i]);
    if (i + 1 < fs.size()) degsum += fs[i].total_degree();
  }
  rhs = rhs + LogValue::log_of(Rat(n + 1)).scaled(Rat(degsum));
  return BoundPair{height_poly(prod), rhs, true};
}

// Composition bound, with r passthrough variables left intact:
// h(g(f_1..f_s, T_1..T_r)) <= h(g) + (h + log(s+1) + d log(n+1)) deg_Y g.
struct ComposeResult {
  MPoly<Rat> value;
  LogValue lhs, rhs;
  bool degenerate = false;  // composition identically zero; lhs undefined
};

inline ComposeResult bound_compose(const MPoly<Rat>& g, const std::vector<MPoly<Rat>>& fs, int passthrough) {
  int s = static_cast<int>(fs.size());
  require(s >= 1, Err::InvalidInput, "no substituted polynomials");
  require(g.nvars() == s + passthrough, Err::DimensionMismatch, "arity of g must be s + r");
  int n = fs[0].nvars();
  long d = 0;
  std::vector<Rat> joint;
  for (const auto& f : fs) {
    require(!f.is_zero(), Err::InvalidInput, "zero substituted polynomial");
    require(f.nvars() == n, Err::DimensionMismatch, "substituted arity mismatch");
    d = std::max<long>(d, f.total_degree());
    for (const auto& c : f.coefficients()) joint.push_back(c);
  }
  LogValue h = height_of_coeffs(joint);

  // Substitution images in n + r variables.
  int target = n + passthrough;
  std::vector<MPoly<Rat>> images;
  for (const auto& f : fs) {
    MPoly<Rat> im(target);
    for (const auto& [e, c] : f.terms()) {
      std::vector<int> e2(static_cast<size_t>(target), 0);
      for (int i = 0; i < n; ++i) e2[static_cast<size_t>(i)] = e[static_cast<size_t>(i)];
      im.add_term(e2, c);
    }
    images.push_back(std::move(im));
  }
  for (int j = 0; j < passthrough; ++j) images.push_back(MPoly<Rat>::var(target, n + j));

  MPoly<Rat> comp = g.substitute(images);

  // Degree of g in the substituted block only.
  long deg_y = 0;
  for (const auto& [e, c] : g.terms()) {
    long t = 0;
    for (int i = 0; i < s; ++i) t += e[static_cast<size_t>(i)];
    deg_y = std::max(deg_y, t);
  }
  LogValue rhs = height_poly(g) +
                 (h + LogValue::log_of(Rat(s + 1)) + LogValue::log_of(Rat(n + 1)).scaled(Rat(d))).scaled(Rat(deg_y));
  ComposeResult res{comp, LogValue::zero(), rhs, comp.is_zero()};
  if (!res.degenerate) res.lhs = height_poly(comp);
  return res;
}

// Determinant bound: h(det) <= s (h + log s + d log(n+1)).
struct DetResult {
  MPoly<Rat> det;
  LogValue lhs, rhs;
  bool zero_determinant = false;
};

inline DetResult bound_det(const std::vector<std::vector<MPoly<Rat>>>& m) {
  size_t s = m.size();
  require(s >= 1, Err::InvalidInput, "empty matrix");
  int n = m[0][0].nvars();
  long d = 0;
  LogValue h;
  bool first = true;
  for (const auto& row : m) {
    require(row.size() == s, Err::DimensionMismatch, "matrix not square");
    for (const auto& e : row) {
      if (e.is_zero()) continue;
      d = std::max<long>(d, e.total_degree());
      LogValue he = height_poly(e);
      if (first || certified_le(h, he)) h = he;
      first = false;
    }
  }
  MPoly<Rat> det = mpoly_det(m);
  LogValue rhs = (h + LogValue::log_of(Rat(static_cast<long>(s))) + LogValue::log_of(Rat(n + 1)).scaled(Rat(d)))
                     .scaled(Rat(static_cast<long>(s)));
  DetResult res{det, LogValue::zero(), rhs, det.is_zero()};
  if (!res.zero_determinant) res.lhs = height_poly(det);
  return res;
}

// f(X,Y) = (X-rho)^m g((X-rho)^{-1}, Y); h(f) <= h(g) + m h(rho) + 2m log 2.
template <class K>
struct RhoTransform {
  BPoly<K> f;
  LogValue lhs, rhs;
};

template <class K>
BPoly<K> transform_rho_poly(const BPoly<K>& g, int m, const K& rho) {
  require(g.deg_x() <= m, Err::InvalidInput, "X-degree exceeds m");
  std::vector<UPoly<K>> out;
  UPoly<K> lin(std::vector<K>{-rho, K(1)});  // X - rho
  for (const auto& gy : g.ycoeffs()) {
    UPoly<K> acc;
    for (int i = 0; i <= gy.deg(); ++i) {
      if (::covercert::is_zero(gy[i])) continue;
      acc = acc + lin.pow(m - i).scaled(gy[i]);
    }
    out.push_back(acc);
  }
  return BPoly<K>(std::move(out));
}

inline RhoTransform<Rat> transform_rho(const BPoly<Rat>& g, int m, const Rat& rho) {
  BPoly<Rat> f = transform_rho_poly(g, m, rho);
  LogValue rhs = height_poly(g) + height_rational(rho).scaled(Rat(m)) + LogValue::log_of(Rat(2)).scaled(Rat(2 * m));
  LogValue lhs = f.is_zero() ? LogValue::zero() : height_poly(f);
  return RhoTransform<Rat>{std::move(f), lhs, rhs};
}

// Silverman: log N_{K/Q} D_{L/K} / [L:Q] <= 2([L:K]-1) h(alpha) + log [L:K].
inline LogValue silverman_bound(const LogValue& h_alpha, long deg_lk) {
  require(deg_lk >= 1, Err::InvalidInput, "relative degree must be >= 1");
  return h_alpha.scaled(Rat(2 * (deg_lk - 1))) + LogValue::log_of(Rat(deg_lk));
}

// Arithmetic-Bezout data for a system with the given degrees (sorted
// descending; the N largest enter nabla and Sigma).
struct KPSBound {
  Int nabla;
  Rat sigma;
  LogValue height_bound;  // nabla Sigma h + 2 nabla N log(N+1)
  Int degree_bound;       // nabla
  LogValue disc_bound;    // 2 nabla Sigma h + 5 nabla N log(N+1)
  int N = 0;
};

inline KPSBound kps_bound(const std::vector<long>& degrees_desc, const LogValue& h, int N) {
  require(N >= 1, Err::InvalidInput, "dimension must be positive");
  require(static_cast<int>(degrees_desc.size()) >= N, Err::TooFewEquations,
          "an isolated solution needs at least N equations");
  for (size_t i = 0; i < degrees_desc.size(); ++i) {
    require(degrees_desc[i] >= 1, Err::InvalidInput, "equation of degree zero");
    require(i == 0 || degrees_desc[i - 1] >= degrees_desc[i], Err::InvalidInput, "degrees must be sorted descending");
  }
  KPSBound out;
  out.N = N;
  out.nabla = 1;
  out.sigma = Rat(0);
  for (int i = 0; i < N; ++i) {
    out.nabla *= degrees_desc[static_cast<size_t>(i)];
    out.sigma += Rat(Int(1), Int(degrees_desc[static_cast<size_t>(i)]));
  }
  out.degree_bound = out.nabla;
  Rat ns = Rat(out.nabla) * out.sigma;
  LogValue corner = LogValue::log_of(Rat(N + 1)).scaled(Rat(Int(out.nabla * N)));
  out.height_bound = h.scaled(ns) + corner.scaled(Rat(2));
  out.disc_bound = h.scaled(ns * Rat(2)) + corner.scaled(Rat(5));
  return out;
}

}  // namespace covercert

#endif
