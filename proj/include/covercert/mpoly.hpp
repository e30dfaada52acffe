#ifndef COVERCERT_MPOLY_HPP
#define COVERCERT_MPOLY_HPP

// Sparse multivariate polynomials over an exact scalar, with a fixed number
// of variables per instance. Exponent vectors are kept in a std::map so that
// term order (lex on the exponent vector) is canonical; no zero coefficient
// is ever stored.

#include <map>
#include <string>
#include <vector>

#include "covercert/error.hpp"
#include "covercert/rat.hpp"

namespace covercert {

template <class K>
class MPoly {
 public:
  using ExpVec = std::vector<int>;

  MPoly() : nvars_(0) {}
  explicit MPoly(int nvars) : nvars_(nvars) {}

  static MPoly constant(int nvars, const K& c) {
    MPoly p(nvars);
    if (!::covercert::is_zero(c)) p.t_[ExpVec(static_cast<size_t>(nvars), 0)] = c;
    return p;
  }
  static MPoly var(int nvars, int i, int e = 1) {
    require(i >= 0 && i < nvars, Err::Internal, "variable index out of range");
    MPoly p(nvars);
    ExpVec v(static_cast<size_t>(nvars), 0);
    v[static_cast<size_t>(i)] = e;
    p.t_[std::move(v)] = K(1);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const std::map<ExpVec, K>& terms() const { return t_; }

  void add_term(const ExpVec& e, const K& c) {
    require(static_cast<int>(e.size()) == nvars_, Err::Internal, "exponent arity mismatch");
    if (::covercert::is_zero(c)) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
    } else {
      it->second += c;
      if (::covercert::is_zero(it->second)) t_.erase(it);
    }
  }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.t_ == b.t_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly operator-() const {
    MPoly r(nvars_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
  }
  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    require(a.nvars_ == b.nvars_, Err::Internal, "arity mismatch");
    MPoly r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, c);
    return r;
  }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    require(a.nvars_ == b.nvars_, Err::Internal, "arity mismatch");
    MPoly r(a.nvars_);
    ExpVec e(static_cast<size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.t_) {
      for (const auto& [eb, cb] : b.t_) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  MPoly scaled(const K& s) const {
    MPoly r(nvars_);
    if (::covercert::is_zero(s)) return r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, c * s);
    return r;
  }
  MPoly pow(long e) const {
    require(e >= 0, Err::Internal, "negative power");
    MPoly r = constant(nvars_, K(1));
    MPoly b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      if (e >>= 1) b = b * b;
    }
    return r;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }
  int degree_in(int i) const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e[static_cast<size_t>(i)]);
    return d;
  }

  // Coefficient of var_i^k, returned in the same variable space with the
  // i-th exponent zeroed.
  MPoly coeff_of(int i, int k) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : t_) {
      if (e[static_cast<size_t>(i)] != k) continue;
      ExpVec e2 = e;
      e2[static_cast<size_t>(i)] = 0;
      r.t_.emplace(std::move(e2), c);
    }
    return r;
  }

  K eval(const std::vector<K>& point) const {
    require(static_cast<int>(point.size()) == nvars_, Err::DimensionMismatch, "evaluation point arity mismatch");
    K acc(0);
    for (const auto& [e, c] : t_) {
      K m = c;
      for (size_t i = 0; i < e.size(); ++i) {
        for (int k = 0; k < e[i]; ++k) m *= point[i];
      }
      acc += m;
    }
    return acc;
  }

  // Substitute each variable by the given polynomial (all in a common target
  // space). Powers are cached per variable.
  MPoly substitute(const std::vector<MPoly>& images) const {
    require(static_cast<int>(images.size()) == nvars_, Err::DimensionMismatch, "substitution arity mismatch");
    int target = images.empty() ? 0 : images[0].nvars();
    MPoly acc(target);
    std::vector<std::vector<MPoly>> pow_cache(static_cast<size_t>(nvars_));
    auto power = [&](int i, int e) -> const MPoly& {
      auto& cache = pow_cache[static_cast<size_t>(i)];
      if (cache.empty()) cache.push_back(constant(target, K(1)));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[static_cast<size_t>(i)]);
      return cache[static_cast<size_t>(e)];
    };
    for (const auto& [e, c] : t_) {
      MPoly m = constant(target, c);
      for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) m = m * power(static_cast<int>(i), e[i]);
      acc = acc + m;
    }
    return acc;
  }

  // Partial derivative.
  MPoly d(int i) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : t_) {
      if (e[static_cast<size_t>(i)] == 0) continue;
      ExpVec e2 = e;
      int k = e2[static_cast<size_t>(i)]--;
      r.add_term(e2, c * K(static_cast<long>(k)));
    }
    return r;
  }

  std::vector<K> coefficients() const {
    std::vector<K> v;
    v.reserve(t_.size());
    for (const auto& [e, c] : t_) v.push_back(c);
    return v;
  }

  // Exact division in K[x_1..x_n]; the divisor must divide exactly
  // (guaranteed where this is used, inside Bareiss elimination).
  friend MPoly exact_div(const MPoly& a, const MPoly& b) {
    require(!b.is_zero(), Err::ZeroInverse, "division by zero polynomial");
    MPoly r = a, q(a.nvars_);
    const auto& [eb, cb] = *b.t_.rbegin();  // lex-leading term of b
    while (!r.is_zero()) {
      const auto& [er, cr] = *r.t_.rbegin();
      ExpVec em(er.size());
      for (size_t i = 0; i < er.size(); ++i) {
        em[i] = er[i] - eb[i];
        require(em[i] >= 0, Err::Internal, "inexact multivariate division");
      }
      MPoly t(a.nvars_);
      t.t_.emplace(std::move(em), cr * inv(cb));
      q = q + t;
      r = r - t * b;
    }
    return q;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += ::covercert::to_string(it->second);
      for (size_t i = 0; i < it->first.size(); ++i) {
        if (it->first[i] == 0) continue;
        s += "*" + names[i];
        if (it->first[i] > 1) s += "^" + std::to_string(it->first[i]);
      }
    }
    return s;
  }

 private:
  int nvars_;
  std::map<ExpVec, K> t_;
};

// Determinant by fraction-free Bareiss elimination over K[x_1..x_n].
template <class K>
MPoly<K> mpoly_det(std::vector<std::vector<MPoly<K>>> m) {
  size_t n = m.size();
  require(n > 0, Err::Internal, "empty determinant");
  for (const auto& row : m) require(row.size() == n, Err::Internal, "non-square determinant");
  int nvars = m[0][0].nvars();
  int sign = 1;
  MPoly<K> prev = MPoly<K>::constant(nvars, K(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t pr = n;
      for (size_t r = k + 1; r < n; ++r)
        if (!m[r][k].is_zero()) { pr = r; break; }
      if (pr == n) return MPoly<K>(nvars);
      std::swap(m[k], m[pr]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        MPoly<K> t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = t.is_zero() ? t : exact_div(t, prev);
      }
      m[i][k] = MPoly<K>(nvars);
    }
    prev = m[k][k];
  }
  MPoly<K> det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

}  // namespace covercert

#endif
