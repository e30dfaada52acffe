#ifndef COVERCERT_ROOTS_HPP
#define COVERCERT_ROOTS_HPP

// Exact rational root extraction. Real roots of the squarefree part are
// isolated with the Descartes/bisection method on integer polynomials; each
// isolating interval is then narrowed below the Farey spacing of the
// admissible denominators, so the candidate can be read off as the simplest
// rational in the interval and confirmed by exact evaluation. No integer
// factorization is involved.

#include <utility>
#include <vector>

#include "covercert/error.hpp"
#include "covercert/rat.hpp"
#include "covercert/upoly.hpp"

namespace covercert {

// Simplest rational (smallest denominator, then smallest |numerator|) in the
// closed interval [lo, hi]. Classic Stern-Brocot walk.
inline Rat simplest_rational_in(const Rat& lo, const Rat& hi) {
  require(lo <= hi, Err::Internal, "empty interval");
  if (lo == hi) return lo;
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rat(0);
  if (hi.sign() < 0) return -simplest_rational_in(-hi, -lo);
  // 0 < lo < hi
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.num().get_mpz_t(), lo.den().get_mpz_t());
  Rat floor_lo{fl};
  if (floor_lo == lo) return lo;
  Rat ceil_lo = floor_lo + Rat(1);
  if (ceil_lo <= hi) return ceil_lo;
  Rat frac = simplest_rational_in((hi - floor_lo).inv(), (lo - floor_lo).inv());
  return floor_lo + frac.inv();
}

namespace detail {

inline int sign_variations(const std::vector<Int>& c) {
  int v = 0, last = 0;
  for (const auto& a : c) {
    int s = mpz_sgn(a.get_mpz_t());
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// In-place Taylor shift: coefficients of P(X+1).
inline std::vector<Int> taylor_shift_1(std::vector<Int> c) {
  size_t n = c.size();
  if (n == 0) return c;
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = n - 1; j >= 1 && j > i; --j) c[j - 1] += c[j];
  return c;
}

// P(X/2) cleared to integers: c_i * 2^(n-i).
inline std::vector<Int> half_left(const std::vector<Int>& c) {
  std::vector<Int> r = c;
  size_t n = r.size();
  for (size_t i = 0; i < n; ++i) r[i] <<= (n - 1 - i);
  return r;
}

// P((X+1)/2) cleared to integers.
inline std::vector<Int> half_right(const std::vector<Int>& c) {
  return taylor_shift_1(half_left(c));
}

struct IsolBucket {
  Rat lo, hi;     // open interval containing exactly one root, or exact point
  bool exact = false;
  Rat point;
};

// Exact synthetic division by (X - 1); requires P(1) == 0.
inline std::vector<Int> divide_out_root_one(const std::vector<Int>& c) {
  size_t n = c.size();
  std::vector<Int> q(n - 1);
  Int acc = c[n - 1];
  for (size_t j = n - 1; j-- > 0;) {
    q[j] = acc;
    acc += c[j];
  }
  require(acc == 0, Err::Internal, "root-one division inexact");
  return q;
}

// Descartes recursion. The polynomial passed to each node has the exact
// roots already found at dyadic split points divided out, so its variation
// count refers to roots strictly inside (lo, hi). Buckets are split until a
// single variation remains and the width drops below min_width.
inline void isolate_01(const std::vector<Int>& c, const Rat& lo, const Rat& hi, const Rat& min_width,
                       std::vector<IsolBucket>& out, int depth) {
  require(depth < 8000, Err::Internal, "root isolation did not terminate");
  std::vector<Int> rev(c.rbegin(), c.rend());
  rev = taylor_shift_1(std::move(rev));
  int v = sign_variations(rev);
  if (v == 0) return;
  if (v == 1 && hi - lo < min_width) {
    out.push_back(IsolBucket{lo, hi, false, Rat(0)});
    return;
  }
  Rat mid = (lo + hi) * Rat(Int(1), Int(2));
  std::vector<Int> left = half_left(c);
  std::vector<Int> right = half_right(c);
  if (mpz_sgn(right.front().get_mpz_t()) == 0) {
    // Root exactly at the midpoint: record it and strip the linear factor
    // from both halves so deeper variation counts stay interior.
    out.push_back(IsolBucket{mid, mid, true, mid});
    right.erase(right.begin());
    left = divide_out_root_one(left);
  }
  isolate_01(left, lo, mid, min_width, out, depth + 1);
  isolate_01(right, mid, hi, min_width, out, depth + 1);
}

}  // namespace detail

// Isolating intervals (or exact points) for all real roots of a squarefree
// nonzero polynomial; non-exact intervals are narrower than min_width.
inline std::vector<detail::IsolBucket> isolate_real_roots(const UPoly<Rat>& sf,
                                                          const Rat& min_width = Rat(1)) {
  std::vector<detail::IsolBucket> out;
  if (sf.deg() <= 0) return out;
  UPoly<Rat> p = sf;
  long k = p.ord0();
  if (k > 0) {
    out.push_back(detail::IsolBucket{Rat(0), Rat(0), true, Rat(0)});
    std::vector<Rat> c(p.coeffs().begin() + k, p.coeffs().end());
    p = UPoly<Rat>(std::move(c));
  }
  if (p.deg() <= 0) return out;
  IntPoly ip = primitive_integer_form(p);
  // Power-of-two Cauchy bound: |root| < B.
  Rat maxabs(0);
  Rat lead{ip.c.back()};
  for (size_t i = 0; i + 1 < ip.c.size(); ++i) {
    Rat q = (Rat(ip.c[i]) / lead).abs();
    if (q > maxabs) maxabs = q;
  }
  Rat bound = Rat(1) + maxabs;
  Int b2 = 2;
  while (Rat(b2) < bound) b2 <<= 1;
  Rat B{b2};
  unsigned long blog = int_bitlen(b2) - 1;

  // P(B*X) restricted to (0,1) isolates the positive roots.
  std::vector<Int> pos = ip.c, neg = ip.c;
  for (size_t i = 0; i < pos.size(); ++i) {
    Int f = int_pow(2, blog * static_cast<unsigned long>(i));
    pos[i] *= f;
    neg[i] *= f;
    if (i % 2 == 1) neg[i] = -neg[i];
  }
  Rat local_width = min_width / B;
  std::vector<detail::IsolBucket> tmp;
  detail::isolate_01(pos, Rat(0), Rat(1), local_width, tmp, 0);
  for (auto& bu : tmp) {
    bu.lo = bu.lo * B;
    bu.hi = bu.hi * B;
    if (bu.exact) bu.point = bu.point * B;
    out.push_back(bu);
  }
  tmp.clear();
  detail::isolate_01(neg, Rat(0), Rat(1), local_width, tmp, 0);
  for (auto& bu : tmp) {
    Rat lo = -(bu.hi * B), hi = -(bu.lo * B);
    detail::IsolBucket nb{lo, hi, bu.exact, bu.exact ? -(bu.point * B) : Rat(0)};
    out.push_back(nb);
  }
  return out;
}

struct RationalRoots {
  std::vector<std::pair<Rat, int>> roots;  // ascending, with multiplicities
  UPoly<Rat> cofactor;                     // p with all rational linear factors removed
};

inline RationalRoots rational_roots(const UPoly<Rat>& p) {
  require(!p.is_zero(), Err::InvalidInput, "rational_roots of zero polynomial");
  RationalRoots result;
  result.cofactor = p;
  if (p.deg() <= 0) return result;

  UPoly<Rat> sf = squarefree_part(p);
  IntPoly sf_int = primitive_integer_form(sf);
  Int L;
  mpz_abs(L.get_mpz_t(), sf_int.c.back().get_mpz_t());
  // Any rational root has denominator dividing L, and two rationals with
  // denominator <= L differ by at least 1/L^2; an isolating interval below
  // that width holds at most one candidate.
  Rat gap = Rat(Int(1), L * L);

  std::vector<Rat> found;
  for (auto& bucket : isolate_real_roots(sf, gap)) {
    if (bucket.exact) {
      found.push_back(bucket.point);
      continue;
    }
    Rat cand = simplest_rational_in(bucket.lo, bucket.hi);
    if (bucket.lo < cand && cand < bucket.hi && sf.eval(cand).is_zero()) found.push_back(cand);
  }

  std::sort(found.begin(), found.end());
  for (const Rat& r : found) {
    UPoly<Rat> lin(std::vector<Rat>{-r, Rat(1)});
    int mult = 0;
    while (true) {
      auto [q, rem] = divrem(result.cofactor, lin);
      if (!rem.is_zero()) break;
      result.cofactor = q;
      ++mult;
    }
    require(mult > 0, Err::Internal, "isolated rational root does not divide");
    result.roots.emplace_back(r, mult);
  }
  return result;
}

}  // namespace covercert

#endif
