#ifndef COVERCERT_SERIES_HPP
#define COVERCERT_SERIES_HPP

// Exact truncated Laurent series: a window of exact coefficients between a
// lowest exponent and an exclusive precision cap. Exponents below the window
// are known zero; at and above the cap nothing is claimed. Precision is
// tracked pessimistically through arithmetic, and a cap of kPrecInf marks a
// series that is a (Laurent) polynomial on the nose, for which orders are
// always exact.

#include <algorithm>
#include <string>
#include <vector>

#include "covercert/bpoly.hpp"
#include "covercert/error.hpp"
#include "covercert/upoly.hpp"

namespace covercert {

inline constexpr long kPrecInf = static_cast<long>(1) << 60;
inline constexpr long kOrdInf = static_cast<long>(1) << 60;

inline long sat_add(long a, long b) {
  if (a >= kPrecInf / 2 || b >= kPrecInf / 2) return kPrecInf;
  return a + b;
}

template <class K>
class Series {
 public:
  Series() : off_(kPrecInf), prec_(kPrecInf) {}

  static Series make(long offset, std::vector<K> coeffs, long prec) {
    Series s;
    s.off_ = offset;
    s.c_ = std::move(coeffs);
    s.prec_ = prec;
    if (s.prec_ < kPrecInf)
      require(offset + static_cast<long>(s.c_.size()) <= s.prec_, Err::Internal, "window beyond precision");
    s.normalize();
    return s;
  }
  static Series zero(long prec = kPrecInf) { return make(std::min(prec, kPrecInf), {}, prec); }
  static Series constant(const K& a) { return make(0, {a}, kPrecInf); }
  static Series x_power(long e) { return make(e, {K(1)}, kPrecInf); }
  static Series from_poly(const UPoly<K>& p) { return make(0, std::vector<K>(p.coeffs()), kPrecInf); }

  long offset() const { return off_; }
  long prec() const { return prec_; }
  bool is_exact() const { return prec_ >= kPrecInf; }
  bool window_empty() const { return c_.empty(); }
  long window_end() const { return c_.empty() ? off_ : off_ + static_cast<long>(c_.size()); }
  const std::vector<K>& window() const { return c_; }

  // Least exponent with a nonzero coefficient. Exact whenever a nonzero
  // coefficient exists below prec, or the series is polynomial-exact.
  long ord() const {
    if (!c_.empty()) return off_;
    if (is_exact()) return kOrdInf;
    fail(Err::IndeterminateOrder, "all stored coefficients vanish below the precision cap");
  }
  bool try_ord(long& out) const {
    if (!c_.empty()) { out = off_; return true; }
    if (is_exact()) { out = kOrdInf; return true; }
    return false;
  }

  const K& coeff(long e) const {
    static const K kzero{};
    if (e < off_ || e >= window_end()) {
      require(e < prec_, Err::IndeterminateOrder, "coefficient beyond precision");
      return kzero;
    }
    return c_[static_cast<size_t>(e - off_)];
  }

  Series truncated(long new_prec) const {
    Series s = *this;
    if (new_prec >= s.prec_) return s;
    s.prec_ = new_prec;
    if (s.off_ >= new_prec) {
      s.c_.clear();
      s.off_ = new_prec;
    } else if (s.window_end() > new_prec) {
      s.c_.resize(static_cast<size_t>(new_prec - s.off_));
    }
    s.normalize();
    return s;
  }

  // Reinterpret the stored window as an exact Laurent polynomial.
  Series as_exact_polynomial() const {
    Series s = *this;
    s.prec_ = kPrecInf;
    s.normalize();
    return s;
  }

  Series shifted(long k) const {
    Series s = *this;
    s.off_ = sat_add(s.off_, k);
    s.prec_ = sat_add(s.prec_, k);
    return s;
  }

  Series operator-() const {
    Series s = *this;
    for (auto& a : s.c_) a = -a;
    return s;
  }
  Series scaled(const K& f) const {
    if (::covercert::is_zero(f)) return zero(prec_);
    Series s = *this;
    for (auto& a : s.c_) a = a * f;
    s.normalize();
    return s;
  }

  friend Series operator+(const Series& a, const Series& b) {
    long prec = std::min(a.prec_, b.prec_);
    long lo = std::min({a.low_bound(), b.low_bound(), prec});
    long end = lo;
    if (!a.c_.empty()) end = std::max(end, a.window_end());
    if (!b.c_.empty()) end = std::max(end, b.window_end());
    end = std::min(end, prec);
    std::vector<K> v(static_cast<size_t>(std::max<long>(0, end - lo)), K(0));
    auto pour = [&](const Series& s) {
      for (size_t i = 0; i < s.c_.size(); ++i) {
        long e = s.off_ + static_cast<long>(i);
        if (e < end) v[static_cast<size_t>(e - lo)] += s.c_[i];
      }
    };
    pour(a);
    pour(b);
    return make(lo, std::move(v), prec);
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

  friend Series operator*(const Series& a, const Series& b) {
    long prec = std::min(sat_add(a.prec_, b.ord_bound()), sat_add(b.prec_, a.ord_bound()));
    if (a.c_.empty() || b.c_.empty()) return zero(prec);
    long lo = a.off_ + b.off_;
    long end = std::min(prec, a.window_end() + b.window_end() - 1);
    long len = std::max<long>(0, end - lo);
    std::vector<K> v(static_cast<size_t>(len), K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (::covercert::is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        long e = a.off_ + static_cast<long>(i) + b.off_ + static_cast<long>(j);
        if (e - lo < len) v[static_cast<size_t>(e - lo)] += a.c_[i] * b.c_[j];
      }
    }
    return make(lo, std::move(v), prec);
  }

  // Multiplicative inverse, valid to prec - 2*ord for inexact input and to
  // the requested fallback window for exact non-monomial input.
  Series inverse(long want_terms = 64) const {
    require(!c_.empty(), Err::IndeterminateOrder, "inverse needs a known leading coefficient");
    long m = off_;
    if (is_exact() && c_.size() == 1) return make(-m, {inv(c_[0])}, kPrecInf);
    long unit_len = is_exact() ? want_terms : prec_ - m;
    std::vector<K> w(static_cast<size_t>(unit_len), K(0));
    K u0i = inv(c_[0]);
    w[0] = u0i;
    for (long k = 1; k < unit_len; ++k) {
      K acc(0);
      for (long j = 1; j <= k && j < static_cast<long>(c_.size()); ++j)
        acc += c_[static_cast<size_t>(j)] * w[static_cast<size_t>(k - j)];
      w[static_cast<size_t>(k)] = -(acc * u0i);
    }
    long out_prec = is_exact() ? want_terms - m : prec_ - 2 * m;
    return make(-m, std::move(w), out_prec);
  }

  std::string to_string(const std::string& var = "X") const {
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (::covercert::is_zero(c_[i])) continue;
      if (!s.empty()) s += " + ";
      long e = off_ + static_cast<long>(i);
      s += ::covercert::to_string(c_[i]);
      if (e != 0) s += "*" + var + "^" + std::to_string(e);
    }
    if (s.empty()) s = "0";
    if (!is_exact()) s += " + O(" + var + "^" + std::to_string(prec_) + ")";
    return s;
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.off_ == b.off_ && a.prec_ == b.prec_ && a.c_ == b.c_;
  }

 private:
  // Lower bound on the order: first possibly-nonzero exponent.
  long low_bound() const { return c_.empty() ? std::min(prec_, kPrecInf) : off_; }
  long ord_bound() const { return low_bound(); }

  void normalize() {
    size_t k = 0;
    while (k < c_.size() && ::covercert::is_zero(c_[k])) ++k;
    if (k > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
      off_ += static_cast<long>(k);
    }
    while (!c_.empty() && ::covercert::is_zero(c_.back())) c_.pop_back();
    if (c_.empty()) off_ = std::min(prec_, kPrecInf);
  }

  long off_;
  std::vector<K> c_;
  long prec_;
};

// f(X, y) for a bivariate polynomial f and a series y, by Horner in Y.
template <class K>
Series<K> eval_bpoly(const BPoly<K>& f, const Series<K>& y) {
  Series<K> r = Series<K>::zero();
  for (int j = f.deg_y(); j >= 0; --j) {
    r = r * y + Series<K>::from_poly(f.ycoeff(j));
  }
  return r;
}

// T^tpow * f(T^{-1}, y(T)): the variable substitution used at infinity.
template <class K>
Series<K> eval_bpoly_inv_x(const BPoly<K>& f, const Series<K>& y, long tpow) {
  Series<K> r = Series<K>::zero();
  for (int j = f.deg_y(); j >= 0; --j) {
    const UPoly<K>& cj = f.ycoeff(j);
    Series<K> lau = Series<K>::zero();
    for (int i = 0; i <= cj.deg(); ++i) {
      if (::covercert::is_zero(cj[i])) continue;
      lau = lau + Series<K>::make(-i, {cj[i]}, kPrecInf);
    }
    r = r * y + lau;
  }
  return r.shifted(tpow);
}

// ---- Hensel lifting --------------------------------------------------------

// Unique series root of f with the given kappa-initial segment, with exact
// coefficients through degree N (window precision N+1). Hypotheses of the
// lifting lemma are checked on entry; HypothesisFailed reports which broke.
//
// Every Newton iterate is kept as an exact polynomial truncated past the
// target window, so all orders along the way are exact and the residual test
// certifies itself.
template <class K>
Series<K> hensel_lift(const BPoly<K>& f, const Series<K>& y0, long kappa, long N) {
  require(kappa >= 0, Err::InvalidInput, "negative kappa");
  require(N >= kappa, Err::InvalidInput, "target precision below the segment length");
  require(y0.is_exact(), Err::InvalidInput, "segment must be an exact polynomial");
  require(y0.window_empty() || y0.offset() >= 0, Err::InvalidInput, "segment must be a power series");

  BPoly<K> fy = f.dy();
  long o0 = eval_bpoly(f, y0).ord();
  if (o0 <= 2 * kappa)
    fail(Err::HypothesisFailed, "ord f(X, y0) = " + std::to_string(o0) + " <= 2*kappa = " + std::to_string(2 * kappa));
  long k0 = eval_bpoly(fy, y0).ord();
  if (k0 != kappa)
    fail(Err::HypothesisFailed,
         "ord f_Y(X, y0) = " + std::to_string(k0) + " != kappa = " + std::to_string(kappa));

  const long cut = kappa + N + 2;  // truncating y here never blocks the target
  Series<K> y = y0;
  for (int iter = 0; iter < 80; ++iter) {
    Series<K> r = eval_bpoly(f, y);  // exact polynomial
    long ro = r.ord();
    if (ro >= kOrdInf) return y;     // the iterate is an exact root
    if (ro > kappa + N) return y.truncated(N + 1);
    Series<K> u = eval_bpoly(fy, y).truncated(cut + 2 * kappa);
    Series<K> delta = r * u.inverse();
    y = (y - delta).truncated(cut).as_exact_polynomial();
  }
  fail(Err::Internal, "Newton lifting did not reach the target precision");
}

// ---- Branch data -----------------------------------------------------------

template <class K>
struct BranchData {
  Series<K> branch;   // root of f to the working precision
  long kappa = 0;     // ord f_Y along the branch
  Series<K> segment;  // kappa-initial segment, window precision kappa+1
};

// kappa and the verified initial segment of a series root of f.
template <class K>
BranchData<K> branch_kappa(const BPoly<K>& f, const Series<K>& y) {
  Series<K> r = eval_bpoly(f, y);
  if (!r.window_empty())
    fail(Err::HypothesisFailed, "series is not a root of f to the available precision");
  Series<K> d = eval_bpoly(f.dy(), y);
  long kappa;
  if (!d.try_ord(kappa))
    fail(Err::InsufficientPrecision, "ord f_Y along the branch is not certified at this precision");
  if (kappa >= kOrdInf)
    fail(Err::HypothesisFailed, "f_Y vanishes along the branch; f is not squarefree");
  if (y.prec() <= kappa)
    fail(Err::InsufficientPrecision, "branch window shorter than kappa");
  BranchData<K> b;
  b.branch = y;
  b.kappa = kappa;
  b.segment = y.truncated(kappa + 1);
  // Postconditions of the segment lemma, checked exactly.
  Series<K> seg = b.segment.as_exact_polynomial();
  long so = eval_bpoly(f, seg).ord();
  require(so > 2 * kappa, Err::Internal, "segment postcondition ord f > 2 kappa failed");
  long sd = eval_bpoly(f.dy(), seg).ord();
  require(sd == kappa, Err::Internal, "segment postcondition ord f_Y = kappa failed");
  return b;
}

// Least index at which two series differ, scanning the range where both are
// defined. PrefixCoincidence when one is an initial segment of the other on
// the whole compared range.
template <class K>
long separation_index(const Series<K>& a, const Series<K>& b) {
  long lo = std::min(a.window_empty() ? a.prec() : a.offset(),
                     b.window_empty() ? b.prec() : b.offset());
  long hi = std::min(a.prec(), b.prec());
  if (hi >= kPrecInf) {
    hi = lo;
    if (!a.window_empty()) hi = std::max(hi, a.window_end());
    if (!b.window_empty()) hi = std::max(hi, b.window_end());
  }
  for (long e = lo; e < hi; ++e)
    if (!(a.coeff(e) == b.coeff(e))) return e;
  fail(Err::PrefixCoincidence, "one segment is an initial segment of the other");
}

}  // namespace covercert

#endif
