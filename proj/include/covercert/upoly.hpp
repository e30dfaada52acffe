#ifndef COVERCERT_UPOLY_HPP
#define COVERCERT_UPOLY_HPP

// Dense univariate polynomials over an exact field scalar K (Rat or NFElem).
// Coefficients are stored lowest degree first; the zero polynomial is the
// empty vector and has degree -1.

#include <algorithm>
#include <string>
#include <vector>

#include "covercert/error.hpp"
#include "covercert/rat.hpp"

namespace covercert {

template <class K>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static UPoly constant(const K& a) { return UPoly(std::vector<K>{a}); }
  static UPoly x() { return UPoly(std::vector<K>{K(0), K(1)}); }
  // a * X^k
  static UPoly monomial(const K& a, int k) {
    std::vector<K> v(static_cast<size_t>(k) + 1, K(0));
    v.back() = a;
    return UPoly(std::move(v));
  }

  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const K& lc() const {
    require(!is_zero(), Err::Internal, "lc of zero polynomial");
    return c_.back();
  }
  const K& operator[](int i) const {
    static const K kzero{};
    if (i < 0 || i > deg()) return kzero;
    return c_[static_cast<size_t>(i)];
  }
  const std::vector<K>& coeffs() const { return c_; }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  UPoly operator-() const {
    std::vector<K> v = c_;
    for (auto& a : v) a = -a;
    return UPoly(std::move(v));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<K> v(std::max(a.c_.size(), b.c_.size()), K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UPoly(std::move(v));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<K> v(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (::covercert::is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
  }
  UPoly scaled(const K& s) const {
    if (::covercert::is_zero(s)) return UPoly();
    std::vector<K> v = c_;
    for (auto& a : v) a = a * s;
    return UPoly(std::move(v));
  }
  // p * X^k, k >= 0
  UPoly shifted_up(int k) const {
    if (is_zero()) return UPoly();
    std::vector<K> v(c_.size() + static_cast<size_t>(k), K(0));
    std::copy(c_.begin(), c_.end(), v.begin() + k);
    return UPoly(std::move(v));
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<K> v(c_.size() - 1, K(0));
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * K(static_cast<long>(i));
    return UPoly(std::move(v));
  }

  K eval(const K& x) const {
    K r{};
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  // Composition p(X + a) via Horner on the shifted variable.
  UPoly compose_shift(const K& a) const {
    UPoly r;
    UPoly lin(std::vector<K>{a, K(1)});
    for (size_t i = c_.size(); i-- > 0;) r = r * lin + constant(c_[i]);
    return r;
  }

  UPoly pow(long e) const {
    require(e >= 0, Err::Internal, "negative polynomial power");
    UPoly r = constant(K(1));
    UPoly b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  // Euclidean division; requires K a field.
  friend std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
    require(!b.is_zero(), Err::ZeroInverse, "polynomial division by zero");
    UPoly r = a;
    std::vector<K> q(a.deg() >= b.deg() ? static_cast<size_t>(a.deg() - b.deg()) + 1 : 0, K(0));
    K blc_inv = inv(b.lc());
    while (!r.is_zero() && r.deg() >= b.deg()) {
      int k = r.deg() - b.deg();
      K f = r.lc() * blc_inv;
      q[static_cast<size_t>(k)] = f;
      r = r - b.scaled(f).shifted_up(k);
    }
    return {UPoly(std::move(q)), r};
  }

  friend UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divrem(a, b);
    require(r.is_zero(), Err::Internal, "inexact polynomial division");
    return q;
  }

  // Order of vanishing at X=0; exact for polynomials, +infinity for zero.
  static constexpr long kOrdInf = static_cast<long>(1) << 60;
  long ord0() const {
    if (is_zero()) return kOrdInf;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!::covercert::is_zero(c_[i])) return static_cast<long>(i);
    return kOrdInf;
  }

  std::string to_string(const std::string& var = "X") const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
      if (::covercert::is_zero(c_[i])) continue;
      if (!s.empty()) s += " + ";
      s += ::covercert::to_string(c_[i]);
      if (i >= 1) s += "*" + var;
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void normalize() {
    while (!c_.empty() && ::covercert::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

template <class K>
UPoly<K> monic(const UPoly<K>& p) {
  if (p.is_zero()) return p;
  return p.scaled(inv(p.lc()));
}

// Monic gcd by the Euclidean algorithm (K a field).
template <class K>
UPoly<K> gcd_poly(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    auto [q, r] = divrem(a, b);
    (void)q;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return monic(a);
}

template <class K>
UPoly<K> squarefree_part(const UPoly<K>& p) {
  if (p.deg() <= 0) return p;
  UPoly<K> g = gcd_poly(p, p.derivative());
  if (g.deg() <= 0) return p;
  return exact_div(p, g);
}

template <class K>
bool is_squarefree(const UPoly<K>& p) {
  if (p.is_zero()) return false;
  if (p.deg() <= 0) return true;
  return gcd_poly(p, p.derivative()).deg() == 0;
}

// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic or zero.
template <class K>
std::tuple<UPoly<K>, UPoly<K>, UPoly<K>> xgcd_poly(const UPoly<K>& a, const UPoly<K>& b) {
  UPoly<K> r0 = a, r1 = b;
  UPoly<K> u0 = UPoly<K>::constant(K(1)), u1;
  UPoly<K> v0, v1 = UPoly<K>::constant(K(1));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    UPoly<K> u2 = u0 - q * u1;
    UPoly<K> v2 = v0 - q * v1;
    r0 = r1; r1 = r;
    u0 = u1; u1 = u2;
    v0 = v1; v1 = v2;
  }
  if (r0.is_zero()) return {r0, u0, v0};
  K s = inv(r0.lc());
  return {r0.scaled(s), u0.scaled(s), v0.scaled(s)};
}

// Least common denominator and primitive integer content for Rat polynomials.
struct IntPoly {
  std::vector<Int> c;  // lowest degree first, content 1 (up to sign of lc)
  Rat scale;           // original = scale * primitive
};

inline IntPoly primitive_integer_form(const UPoly<Rat>& p) {
  require(!p.is_zero(), Err::InvalidInput, "primitive form of zero polynomial");
  Int lcm_den = 1;
  for (const auto& a : p.coeffs()) {
    Int g;
    mpz_lcm(g.get_mpz_t(), lcm_den.get_mpz_t(), a.den().get_mpz_t());
    lcm_den = g;
  }
  std::vector<Int> v;
  v.reserve(p.coeffs().size());
  Int content = 0;
  for (const auto& a : p.coeffs()) {
    Int n = a.num() * (lcm_den / a.den());
    v.push_back(n);
    Int g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    content = g;
  }
  for (auto& n : v) n /= content;
  return IntPoly{std::move(v), Rat(content, lcm_den)};
}

}  // namespace covercert

#endif
