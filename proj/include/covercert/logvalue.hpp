#ifndef COVERCERT_LOGVALUE_HPP
#define COVERCERT_LOGVALUE_HPP

// Values living on the logarithmic scale: finite rational combinations
//   c0 + sum_i coef_i * ln(arg_i)        (coef_i in Q, arg_i in Q_{>0})
// plus an optional certified interval summand (from Mahler-measure heights).
//
// Equality of the exact part is decided structurally: the arguments are
// rewritten over a pairwise-coprime, power-free integer base, over which
// logarithms are linearly independent over Q. Strict comparisons are decided
// by certified interval evaluation of ln at escalating precision, so no
// astronomically large exponentials are ever materialized.

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "covercert/complexbox.hpp"  // RatInterval
#include "covercert/error.hpp"
#include "covercert/rat.hpp"

namespace covercert {

namespace detail {

// Certified enclosure of ln(x) for x in [1/2, 2]-ish range via the atanh
// series; x must be a positive rational of moderate bit size.
inline RatInterval ln_series(const Rat& x, long bits) {
  require(x.sign() > 0, Err::Internal, "ln of non-positive value");
  Rat z = (x - Rat(1)) / (x + Rat(1));
  bool neg = z.sign() < 0;
  if (neg) z = -z;
  // ln x = 2 * sum z^(2k+1)/(2k+1); |z| <= 1/2 for the ranges used here.
  require(z < Rat(Int(2), Int(3)), Err::Internal, "ln series argument out of range");
  Rat eps(Int(1), int_pow(2, static_cast<unsigned long>(bits) + 16));
  Rat sum_lo(0), sum_hi(0);
  Rat zp_lo = z, zp_hi = z;
  Rat z2 = z * z;
  long k = 0;
  while (true) {
    Rat t_lo = zp_lo / Rat(2 * k + 1);
    Rat t_hi = zp_hi / Rat(2 * k + 1);
    sum_lo = dyadic_floor(sum_lo + t_lo, bits + 16);
    sum_hi = dyadic_ceil(sum_hi + t_hi, bits + 16);
    // Geometric tail bound: remaining sum <= t_hi * z^2/(1 - z^2).
    Rat tail = t_hi * z2 / (Rat(1) - z2);
    if (tail < eps) {
      sum_hi = dyadic_ceil(sum_hi + tail, bits + 16);
      break;
    }
    zp_lo = dyadic_floor(zp_lo * z2, bits + 32);
    zp_hi = dyadic_ceil(zp_hi * z2, bits + 32);
    ++k;
    require(k < 4 * bits + 64, Err::Internal, "ln series did not converge");
  }
  Rat lo = sum_lo + sum_lo, hi = sum_hi + sum_hi;
  if (neg) return RatInterval{-hi, -lo};
  return RatInterval{lo, hi};
}

inline RatInterval ln2_enclosure(long bits) { return ln_series(Rat(2), bits); }

}  // namespace detail

// Certified enclosure of ln(a) for any positive rational a.
inline RatInterval ln_enclosure(const Rat& a, long bits) {
  require(a.sign() > 0, Err::InvalidInput, "ln of non-positive rational");
  auto ln_int = [&](const Int& n) -> RatInterval {
    if (n == 1) return RatInterval{Rat(0), Rat(0)};
    long e = static_cast<long>(int_bitlen(n)) - 1;
    // Bracket n / 2^e in [1,2) by dyadics of controlled size first.
    Rat r(n, int_pow(2, static_cast<unsigned long>(e)));
    Rat r_lo = dyadic_floor(r, bits + 16);
    Rat r_hi = dyadic_ceil(r, bits + 16);
    RatInterval lr_lo = detail::ln_series(r_lo, bits);
    RatInterval lr_hi = detail::ln_series(r_hi, bits);
    RatInterval l2 = detail::ln2_enclosure(bits);
    return RatInterval{l2.lo * Rat(e) + lr_lo.lo, l2.hi * Rat(e) + lr_hi.hi};
  };
  RatInterval n = ln_int(a.num());
  RatInterval d = ln_int(a.den());
  return RatInterval{n.lo - d.hi, n.hi - d.lo};
}

enum class Cmp { Less, Equal, Greater, Unknown };

class LogValue {
 public:
  LogValue() = default;

  static LogValue zero() { return LogValue(); }
  static LogValue constant(const Rat& c) {
    LogValue v;
    v.c0_ = c;
    return v;
  }
  static LogValue log_of(const Rat& a) {
    require(a.sign() > 0, Err::InvalidInput, "log of non-positive rational");
    LogValue v;
    if (!a.is_one()) v.terms_.emplace_back(Rat(1), a);
    return v;
  }
  static LogValue interval(const Rat& lo, const Rat& hi) {
    require(lo <= hi, Err::InvalidInput, "inverted interval");
    LogValue v;
    v.has_iv_ = true;
    v.iv_ = RatInterval{lo, hi};
    return v;
  }

  bool is_exact() const { return !has_iv_; }
  bool is_structural_zero() const { return !has_iv_ && c0_.is_zero() && terms_.empty(); }
  const Rat& constant_part() const { return c0_; }
  const std::vector<std::pair<Rat, Rat>>& terms() const { return terms_; }
  bool has_interval() const { return has_iv_; }
  const RatInterval& interval_part() const { return iv_; }

  LogValue operator-() const {
    LogValue v = *this;
    v.c0_ = -v.c0_;
    for (auto& [c, a] : v.terms_) c = -c;
    if (v.has_iv_) v.iv_ = RatInterval{-iv_.hi, -iv_.lo};
    return v;
  }
  friend LogValue operator+(const LogValue& x, const LogValue& y) {
    LogValue v = x;
    v.c0_ += y.c0_;
    for (const auto& t : y.terms_) v.push_term(t.first, t.second);
    if (y.has_iv_) {
      if (v.has_iv_) {
        v.iv_.lo += y.iv_.lo;
        v.iv_.hi += y.iv_.hi;
      } else {
        v.has_iv_ = true;
        v.iv_ = y.iv_;
      }
    }
    return v;
  }
  friend LogValue operator-(const LogValue& x, const LogValue& y) { return x + (-y); }
  LogValue scaled(const Rat& s) const {
    if (s.is_zero()) return LogValue();
    LogValue v = *this;
    v.c0_ *= s;
    for (auto& [c, a] : v.terms_) c *= s;
    if (v.has_iv_) {
      Rat lo = iv_.lo * s, hi = iv_.hi * s;
      v.iv_ = s.sign() >= 0 ? RatInterval{lo, hi} : RatInterval{hi, lo};
    }
    return v;
  }

  RatInterval enclosure(long bits) const {
    Rat lo = c0_, hi = c0_;
    for (const auto& [c, a] : terms_) {
      RatInterval l = ln_enclosure(a, bits);
      if (c.sign() >= 0) {
        lo += c * l.lo;
        hi += c * l.hi;
      } else {
        lo += c * l.hi;
        hi += c * l.lo;
      }
    }
    if (has_iv_) {
      lo += iv_.lo;
      hi += iv_.hi;
    }
    return RatInterval{lo, hi};
  }

  // The value as log(A) for a single positive rational A, when the exact
  // form collapses (no constant, no interval, integer coefficients).
  std::optional<Rat> single_log_argument() const {
    if (has_iv_ || !c0_.is_zero()) return std::nullopt;
    Rat arg(1);
    for (const auto& [c, a] : terms_) {
      if (!c.is_integer()) return std::nullopt;
      if (!c.num().fits_slong_p()) return std::nullopt;
      long e = c.num().get_si();
      if (int_bitlen(a.num()) * static_cast<unsigned long>(std::abs(e)) > (1u << 22)) return std::nullopt;
      if (int_bitlen(a.den()) * static_cast<unsigned long>(std::abs(e)) > (1u << 22)) return std::nullopt;
      arg *= a.pow(e);
    }
    return arg;
  }

  // Structural rewrite of the exact part over a pairwise-coprime power-free
  // integer base; the rewritten form is zero iff the exact value is zero.
  LogValue canonicalized() const {
    LogValue v;
    v.c0_ = c0_;
    v.has_iv_ = has_iv_;
    v.iv_ = iv_;
    std::vector<std::pair<Int, Rat>> work;
    for (const auto& [c, a] : terms_) {
      if (c.is_zero()) continue;
      if (a.num() != 1) work.emplace_back(a.num(), c);
      if (a.den() != 1) work.emplace_back(a.den(), -c);
    }
    std::vector<std::pair<Int, Rat>> basis;
    long guard = 0;
    while (!work.empty()) {
      require(++guard < 200000, Err::Internal, "coprime base refinement did not terminate");
      auto [n, c] = work.back();
      work.pop_back();
      if (n == 1 || c.is_zero()) continue;
      bool matched = false;
      for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].first == n) {
          basis[i].second += c;
          matched = true;
          break;
        }
        Int g;
        mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), basis[i].first.get_mpz_t());
        if (g == 1) continue;
        Int b = basis[i].first;
        Rat cb = basis[i].second;
        basis.erase(basis.begin() + static_cast<long>(i));
        work.emplace_back(g, cb);
        work.emplace_back(b / g, cb);
        work.emplace_back(g, c);
        work.emplace_back(n / g, c);
        matched = true;
        break;
      }
      if (!matched) basis.emplace_back(n, c);
    }
    // Power-free reduction: b = r^k with k maximal.
    for (auto& [b, c] : basis) {
      if (c.is_zero()) continue;
      unsigned long maxk = int_bitlen(b);
      for (unsigned long k = maxk; k >= 2; --k) {
        Int r;
        int exact = mpz_root(r.get_mpz_t(), b.get_mpz_t(), k);
        if (exact) {
          b = r;
          c *= Rat(static_cast<long>(k));
          break;
        }
      }
    }
    std::sort(basis.begin(), basis.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [b, c] : basis) {
      if (!c.is_zero() && b != 1) v.terms_.emplace_back(c, Rat(b));
    }
    return v;
  }

  static Cmp compare(const LogValue& x, const LogValue& y, long max_bits = 1 << 14) {
    LogValue diff = (x - y).canonicalized();
    if (diff.is_structural_zero()) return Cmp::Equal;
    if (diff.terms_.empty() && !diff.has_iv_) {
      int s = diff.c0_.sign();
      return s < 0 ? Cmp::Less : (s > 0 ? Cmp::Greater : Cmp::Equal);
    }
    for (long bits = 64; bits <= max_bits; bits *= 2) {
      RatInterval e = diff.enclosure(bits);
      if (e.lo.sign() > 0) return Cmp::Greater;
      if (e.hi.sign() < 0) return Cmp::Less;
      if (!diff.has_iv_) continue;
      // The interval summand has fixed width; once the ln enclosures are
      // narrower than it, further refinement cannot help.
      Rat slack = e.width() - diff.iv_.width();
      if (slack * Rat(16) < diff.iv_.width() && bits > 512) break;
    }
    return Cmp::Unknown;
  }

 private:
  void push_term(const Rat& c, const Rat& a) {
    if (c.is_zero() || a.is_one()) return;
    for (size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].second == a) {
        terms_[i].first += c;
        if (terms_[i].first.is_zero()) terms_.erase(terms_.begin() + static_cast<long>(i));
        return;
      }
    }
    terms_.emplace_back(c, a);
  }

  Rat c0_;
  std::vector<std::pair<Rat, Rat>> terms_;
  bool has_iv_ = false;
  RatInterval iv_{};
};

// Certified x <= y; Unknown is an error (never reached by exact inputs).
inline bool certified_le(const LogValue& x, const LogValue& y) {
  Cmp c = LogValue::compare(x, y);
  require(c != Cmp::Unknown, Err::PrecisionExhausted, "comparison undecided at the precision cap");
  return c != Cmp::Greater;
}

inline bool certified_eq(const LogValue& x, const LogValue& y) {
  return LogValue::compare(x, y) == Cmp::Equal;
}

// Supremum of a family. Exact inputs keep their exact form when the
// tournament is decidable; ties between interval-valued entries fall back to
// a certified interval envelope (a valid enclosure of the true maximum).
inline LogValue logvalue_sup(const std::vector<LogValue>& vals, long bits = 128) {
  require(!vals.empty(), Err::InvalidInput, "sup of empty family");
  size_t best = 0;
  bool decidable = true;
  for (size_t i = 1; i < vals.size() && decidable; ++i) {
    Cmp c = LogValue::compare(vals[best], vals[i], 1 << 10);
    if (c == Cmp::Unknown) decidable = false;
    else if (c == Cmp::Less) best = i;
  }
  if (decidable) return vals[best];
  Rat lo, hi;
  bool first = true;
  for (const auto& v : vals) {
    RatInterval e = v.enclosure(bits);
    if (first) {
      lo = e.lo;
      hi = e.hi;
      first = false;
    } else {
      lo = std::max(lo, e.lo);
      hi = std::max(hi, e.hi);
    }
  }
  return LogValue::interval(lo, hi);
}

}  // namespace covercert

#endif
