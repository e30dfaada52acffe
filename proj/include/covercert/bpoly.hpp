#ifndef COVERCERT_BPOLY_HPP
#define COVERCERT_BPOLY_HPP

// Bivariate polynomials f(X,Y) over an exact field scalar, stored as a dense
// vector of X-polynomials indexed by the Y-power. Resultants with respect to
// Y use the fraction-free subresultant remainder sequence; a Sylvester
// determinant evaluated by Bareiss elimination is kept alongside for
// cross-validation.

#include <string>
#include <utility>
#include <vector>

#include "covercert/error.hpp"
#include "covercert/upoly.hpp"

namespace covercert {

template <class K>
class BPoly {
 public:
  BPoly() = default;
  explicit BPoly(std::vector<UPoly<K>> ycoeffs) : y_(std::move(ycoeffs)) { normalize(); }

  // Coefficient matrix c[i][j] for X^i Y^j.
  static BPoly from_matrix(const std::vector<std::vector<K>>& c) {
    size_t ny = 0;
    for (const auto& row : c) ny = std::max(ny, row.size());
    std::vector<UPoly<K>> ys;
    for (size_t j = 0; j < ny; ++j) {
      std::vector<K> col;
      col.reserve(c.size());
      for (size_t i = 0; i < c.size(); ++i)
        col.push_back(j < c[i].size() ? c[i][j] : K(0));
      ys.emplace_back(std::move(col));
    }
    return BPoly(std::move(ys));
  }

  bool is_zero() const { return y_.empty(); }
  int deg_y() const { return static_cast<int>(y_.size()) - 1; }
  int deg_x() const {
    int d = -1;
    for (const auto& p : y_) d = std::max(d, p.deg());
    return d;
  }
  const UPoly<K>& ycoeff(int j) const {
    static const UPoly<K> kzero{};
    if (j < 0 || j > deg_y()) return kzero;
    return y_[static_cast<size_t>(j)];
  }
  K coeff(int i, int j) const { return ycoeff(j)[i]; }
  const std::vector<UPoly<K>>& ycoeffs() const { return y_; }

  bool monic_in_y() const {
    return deg_y() >= 0 && y_.back().deg() == 0 && y_.back().lc().is_one();
  }

  friend bool operator==(const BPoly& a, const BPoly& b) { return a.y_ == b.y_; }
  friend bool operator!=(const BPoly& a, const BPoly& b) { return !(a == b); }

  BPoly operator-() const {
    std::vector<UPoly<K>> v = y_;
    for (auto& p : v) p = -p;
    return BPoly(std::move(v));
  }
  friend BPoly operator+(const BPoly& a, const BPoly& b) {
    std::vector<UPoly<K>> v(std::max(a.y_.size(), b.y_.size()));
    for (size_t j = 0; j < v.size(); ++j) v[j] = a.ycoeff(static_cast<int>(j)) + b.ycoeff(static_cast<int>(j));
    return BPoly(std::move(v));
  }
  friend BPoly operator-(const BPoly& a, const BPoly& b) { return a + (-b); }
  friend BPoly operator*(const BPoly& a, const BPoly& b) {
    if (a.is_zero() || b.is_zero()) return BPoly();
    std::vector<UPoly<K>> v(a.y_.size() + b.y_.size() - 1);
    for (size_t i = 0; i < a.y_.size(); ++i)
      for (size_t j = 0; j < b.y_.size(); ++j) v[i + j] = v[i + j] + a.y_[i] * b.y_[j];
    return BPoly(std::move(v));
  }
  BPoly scaled(const K& s) const {
    std::vector<UPoly<K>> v = y_;
    for (auto& p : v) p = p.scaled(s);
    return BPoly(std::move(v));
  }

  BPoly pow_y(long e) const {
    require(e >= 0, Err::Internal, "negative power");
    BPoly r(std::vector<UPoly<K>>{UPoly<K>::constant(K(1))});
    BPoly b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      if (e >>= 1) b = b * b;
    }
    return r;
  }

  BPoly dy() const {
    if (y_.size() <= 1) return BPoly();
    std::vector<UPoly<K>> v(y_.size() - 1);
    for (size_t j = 1; j < y_.size(); ++j) v[j - 1] = y_[j].scaled(K(static_cast<long>(j)));
    return BPoly(std::move(v));
  }

  // f(X + a, Y)
  BPoly shift_x(const K& a) const {
    std::vector<UPoly<K>> v = y_;
    for (auto& p : v) p = p.compose_shift(a);
    return BPoly(std::move(v));
  }

  // f(X, Y + a)
  BPoly shift_y(const K& a) const { return substitute_y_linear(a, K(1), 0); }

  // f(X, a + c * X^e * Y): the blow-up substitution used by branch analysis.
  BPoly substitute_y_linear(const K& a, const K& c, int e) const {
    // Horner in Y over the ring K[X][Y].
    BPoly lin(std::vector<UPoly<K>>{UPoly<K>::constant(a), UPoly<K>::monomial(c, e)});
    BPoly r;
    for (size_t j = y_.size(); j-- > 0;) {
      r = r * lin + BPoly(std::vector<UPoly<K>>{y_[j]});
    }
    return r;
  }

  // Smallest X-order among nonzero coefficients (kOrdInf for zero).
  long x_order() const {
    long o = UPoly<K>::kOrdInf;
    for (const auto& p : y_)
      if (!p.is_zero()) o = std::min(o, p.ord0());
    return o;
  }

  // Divide every coefficient by X^k (must be exact).
  BPoly shift_x_down(long k) const {
    std::vector<UPoly<K>> v;
    v.reserve(y_.size());
    for (const auto& p : y_) {
      if (p.is_zero()) {
        v.push_back(p);
        continue;
      }
      require(p.ord0() >= k, Err::Internal, "inexact X-power division");
      std::vector<K> c(p.coeffs().begin() + static_cast<long>(k), p.coeffs().end());
      v.emplace_back(std::move(c));
    }
    return BPoly(std::move(v));
  }

  UPoly<K> eval_y(const K& y) const {
    UPoly<K> r;
    for (size_t j = y_.size(); j-- > 0;) r = r.scaled(y) + y_[j];
    return r;
  }
  UPoly<K> eval_x(const K& x) const {
    std::vector<K> v;
    v.reserve(y_.size());
    for (const auto& p : y_) v.push_back(p.eval(x));
    return UPoly<K>(std::move(v));
  }
  K eval(const K& x, const K& y) const { return eval_x(x).eval(y); }

  std::string to_string(const std::string& xv = "X", const std::string& yv = "Y") const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t j = y_.size(); j-- > 0;) {
      if (y_[j].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + y_[j].to_string(xv) + ")";
      if (j >= 1) s += "*" + yv;
      if (j >= 2) s += "^" + std::to_string(j);
    }
    return s;
  }

 private:
  void normalize() {
    while (!y_.empty() && y_.back().is_zero()) y_.pop_back();
  }
  std::vector<UPoly<K>> y_;
};

// ---- Resultants ----------------------------------------------------------

namespace detail {

// Pseudo-remainder: lc(B)^(degA-degB+1) * A mod B over K[X][Y]. The full
// power of lc(B) is applied even when the degree drops early; the
// subresultant divisions rely on that normalization.
template <class K>
std::vector<UPoly<K>> pseudo_rem(std::vector<UPoly<K>> a, const std::vector<UPoly<K>>& b) {
  int da = static_cast<int>(a.size()) - 1;
  int db = static_cast<int>(b.size()) - 1;
  const UPoly<K>& blc = b.back();
  int e = da - db + 1;
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    UPoly<K> alc = a.back();
    int shift = static_cast<int>(a.size()) - 1 - db;
    for (auto& c : a) c = c * blc;
    for (int j = 0; j <= db; ++j)
      a[static_cast<size_t>(shift + j)] = a[static_cast<size_t>(shift + j)] - alc * b[static_cast<size_t>(j)];
    a.pop_back();
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    --e;
  }
  for (int k = 0; k < e; ++k)
    for (auto& c : a) c = c * blc;
  return a;
}

}  // namespace detail

// Resultant of p and q with respect to Y via the subresultant PRS
// (fraction-free; exact over K[X]).
template <class K>
UPoly<K> resultant_y(const BPoly<K>& p, const BPoly<K>& q) {
  require(!p.is_zero() && !q.is_zero(), Err::InvalidInput, "resultant of zero polynomial");
  int dp = p.deg_y(), dq = q.deg_y();
  if (dp == 0 && dq == 0) return UPoly<K>::constant(K(1));
  if (dp < dq) {
    UPoly<K> r = resultant_y(q, p);
    if ((static_cast<long>(dp) * dq) % 2 == 1) r = -r;
    return r;
  }
  if (dq == 0) return q.ycoeff(0).pow(dp);

  std::vector<UPoly<K>> A = p.ycoeffs(), B = q.ycoeffs();
  UPoly<K> g = UPoly<K>::constant(K(1));
  UPoly<K> h = UPoly<K>::constant(K(1));
  int sign = 1;
  while (true) {
    int da = static_cast<int>(A.size()) - 1;
    int db = static_cast<int>(B.size()) - 1;
    int delta = da - db;
    if ((da % 2 == 1) && (db % 2 == 1)) sign = -sign;
    std::vector<UPoly<K>> R = detail::pseudo_rem(A, B);
    A = std::move(B);
    // Divide through by g * h^delta.
    UPoly<K> divisor = g;
    for (int i = 0; i < delta; ++i) divisor = divisor * h;
    for (auto& c : R) {
      if (!c.is_zero()) c = exact_div(c, divisor);
    }
    while (!R.empty() && R.back().is_zero()) R.pop_back();
    B = std::move(R);
    g = A.back();
    if (delta >= 1) {
      // h = g^delta / h^(delta-1), exact in K[X].
      UPoly<K> num = g;
      for (int i = 1; i < delta; ++i) num = num * g;
      UPoly<K> den = UPoly<K>::constant(K(1));
      for (int i = 1; i < delta; ++i) den = den * h;
      h = exact_div(num, den);
    }
    if (B.empty()) {
      // Common factor of positive Y-degree.
      return UPoly<K>();
    }
    if (static_cast<int>(B.size()) - 1 == 0) {
      int da2 = static_cast<int>(A.size()) - 1;
      // res = h^(1-da2) * c^da2 with c = B[0]; exact division again.
      UPoly<K> num = B[0];
      for (int i = 1; i < da2; ++i) num = num * B[0];
      if (da2 == 0) num = UPoly<K>::constant(K(1));
      UPoly<K> den = UPoly<K>::constant(K(1));
      for (int i = 1; i < da2; ++i) den = den * h;
      UPoly<K> res = exact_div(num, den);
      if (sign < 0) res = -res;
      return res;
    }
  }
}

// Sylvester-matrix resultant evaluated by fraction-free Bareiss elimination.
// Slower; used to cross-check the PRS path.
template <class K>
UPoly<K> resultant_y_sylvester(const BPoly<K>& p, const BPoly<K>& q) {
  require(!p.is_zero() && !q.is_zero(), Err::InvalidInput, "resultant of zero polynomial");
  int dp = p.deg_y(), dq = q.deg_y();
  if (dp == 0 && dq == 0) return UPoly<K>::constant(K(1));
  if (dq == 0) return q.ycoeff(0).pow(dp);
  if (dp == 0) return p.ycoeff(0).pow(dq);
  int n = dp + dq;
  std::vector<std::vector<UPoly<K>>> M(static_cast<size_t>(n), std::vector<UPoly<K>>(static_cast<size_t>(n)));
  for (int r = 0; r < dq; ++r)
    for (int j = 0; j <= dp; ++j) M[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = p.ycoeff(dp - j);
  for (int r = 0; r < dp; ++r)
    for (int j = 0; j <= dq; ++j) M[static_cast<size_t>(dq + r)][static_cast<size_t>(r + j)] = q.ycoeff(dq - j);

  int sign = 1;
  UPoly<K> prev = UPoly<K>::constant(K(1));
  for (int k = 0; k + 1 < n; ++k) {
    if (M[static_cast<size_t>(k)][static_cast<size_t>(k)].is_zero()) {
      int pr = -1;
      for (int r = k + 1; r < n; ++r)
        if (!M[static_cast<size_t>(r)][static_cast<size_t>(k)].is_zero()) { pr = r; break; }
      if (pr < 0) return UPoly<K>();
      std::swap(M[static_cast<size_t>(k)], M[static_cast<size_t>(pr)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        UPoly<K> t = M[static_cast<size_t>(i)][static_cast<size_t>(j)] * M[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                     M[static_cast<size_t>(i)][static_cast<size_t>(k)] * M[static_cast<size_t>(k)][static_cast<size_t>(j)];
        M[static_cast<size_t>(i)][static_cast<size_t>(j)] = t.is_zero() ? t : exact_div(t, prev);
      }
      M[static_cast<size_t>(i)][static_cast<size_t>(k)] = UPoly<K>();
    }
    prev = M[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  UPoly<K> det = M[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
  if (sign < 0) det = -det;
  return det;
}

// Y-discriminant: (-1)^(n(n-1)/2) * Res_Y(f, f_Y) / lc_Y(f).
template <class K>
UPoly<K> discriminant_y(const BPoly<K>& f) {
  int n = f.deg_y();
  require(n >= 1, Err::InvalidInput, "discriminant needs positive Y-degree");
  UPoly<K> res = resultant_y(f, f.dy());
  if (res.is_zero()) return res;
  UPoly<K> d = exact_div(res, f.ycoeff(n));
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

}  // namespace covercert

#endif
