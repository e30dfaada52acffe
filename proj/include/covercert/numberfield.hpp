#ifndef COVERCERT_NUMBERFIELD_HPP
#define COVERCERT_NUMBERFIELD_HPP

// Number fields as quotient rings Q[x]/(minpoly) with a monic squarefree
// minimal polynomial. Irreducibility is proved mechanically up to degree 3
// (no rational root); above that it is carried as a user assertion and any
// falsity surfaces lazily as ReducibleField when an extended gcd exposes a
// factor.
//
// NFElem doubles as a plain rational when it carries no field pointer; mixed
// arithmetic promotes the rational side. This keeps the generic polynomial
// and series code free of explicit field-context plumbing.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "covercert/error.hpp"
#include "covercert/rat.hpp"
#include "covercert/roots.hpp"
#include "covercert/upoly.hpp"

namespace covercert {

class NumberField {
 public:
  enum class Irreducibility { proved, asserted };

  static std::shared_ptr<const NumberField> make(UPoly<Rat> minpoly) {
    require(minpoly.deg() >= 1, Err::InvalidInput, "minimal polynomial must have degree >= 1");
    require(minpoly.lc().is_one(), Err::InvalidInput, "minimal polynomial must be monic");
    require(is_squarefree(minpoly), Err::InvalidInput, "minimal polynomial must be squarefree");
    Irreducibility st = Irreducibility::asserted;
    int d = minpoly.deg();
    if (d == 1) {
      st = Irreducibility::proved;
    } else if (d <= 3) {
      // Degree 2 or 3: irreducible over Q iff there is no rational root.
      auto rr = rational_roots(minpoly);
      if (!rr.roots.empty())
        fail(Err::InvalidInput,
             "minimal polynomial has the rational root " + rr.roots.front().first.to_string());
      st = Irreducibility::proved;
    }
    return std::shared_ptr<const NumberField>(new NumberField(std::move(minpoly), st));
  }

  const UPoly<Rat>& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.deg(); }
  Irreducibility status() const { return status_; }

 private:
  NumberField(UPoly<Rat> mp, Irreducibility st) : minpoly_(std::move(mp)), status_(st) {}
  UPoly<Rat> minpoly_;
  Irreducibility status_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class NFElem {
 public:
  NFElem() : coords_{Rat(0)} {}
  NFElem(long n) : coords_{Rat(n)} {}
  NFElem(int n) : coords_{Rat(n)} {}
  NFElem(const Rat& r) : coords_{r} {}
  NFElem(FieldPtr field, std::vector<Rat> coords) : field_(std::move(field)), coords_(std::move(coords)) {
    require(field_ != nullptr, Err::InvalidInput, "null field");
    require(static_cast<int>(coords_.size()) == field_->degree(), Err::DimensionMismatch,
            "coordinate vector length must equal the field degree");
  }

  static NFElem generator(const FieldPtr& field) {
    std::vector<Rat> v(static_cast<size_t>(field->degree()), Rat(0));
    if (field->degree() == 1) {
      // x = -c0 in a degree-one field.
      v[0] = -field->minpoly()[0];
    } else {
      v[1] = Rat(1);
    }
    return NFElem(field, std::move(v));
  }

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coords() const { return coords_; }

  bool is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
      if (!coords_[i].is_zero()) return false;
    return true;
  }
  const Rat& rat_part() const {
    require(is_rational(), Err::InvalidInput, "element is not rational");
    return coords_[0];
  }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (!c.is_zero()) return false;
    return true;
  }
  bool is_one() const {
    if (!coords_[0].is_one()) return false;
    for (size_t i = 1; i < coords_.size(); ++i)
      if (!coords_[i].is_zero()) return false;
    return true;
  }

  NFElem operator-() const {
    NFElem r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
  }

  friend NFElem operator+(const NFElem& a, const NFElem& b) {
    auto [x, y, f] = aligned(a, b);
    for (size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return from_aligned(f, std::move(x));
  }
  friend NFElem operator-(const NFElem& a, const NFElem& b) { return a + (-b); }
  friend NFElem operator*(const NFElem& a, const NFElem& b) {
    auto [x, y, f] = aligned(a, b);
    if (!f) return NFElem(x[0] * y[0]);
    UPoly<Rat> prod = UPoly<Rat>(std::move(x)) * UPoly<Rat>(std::move(y));
    auto [q, rem] = divrem(prod, f->minpoly());
    (void)q;
    std::vector<Rat> v(static_cast<size_t>(f->degree()), Rat(0));
    for (int i = 0; i <= rem.deg(); ++i) v[static_cast<size_t>(i)] = rem[i];
    return NFElem(f, std::move(v));
  }
  friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inv(); }

  NFElem& operator+=(const NFElem& o) { return *this = *this + o; }
  NFElem& operator-=(const NFElem& o) { return *this = *this - o; }
  NFElem& operator*=(const NFElem& o) { return *this = *this * o; }

  friend bool operator==(const NFElem& a, const NFElem& b) { return (a - b).is_zero(); }
  friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

  // Field inverse by extended Euclid against the minimal polynomial. A
  // nontrivial gcd means the asserted irreducibility was false.
  NFElem inv() const {
    require(!is_zero(), Err::ZeroInverse, "inverse of zero field element");
    if (!field_ || is_rational()) {
      NFElem r = *this;
      r.coords_.assign(r.coords_.size(), Rat(0));
      r.coords_[0] = rat_part_unchecked().inv();
      return r;
    }
    UPoly<Rat> a{std::vector<Rat>(coords_)};
    auto [g, u, v] = xgcd_poly(a, field_->minpoly());
    (void)v;
    if (g.deg() != 0)
      fail(Err::ReducibleField,
           "minimal polynomial shares the factor " + g.to_string("x") + "; the field assertion is false");
    // u*a == 1 (mod minpoly) after monic normalization of g == 1.
    auto [q, rem] = divrem(u, field_->minpoly());
    (void)q;
    std::vector<Rat> w(static_cast<size_t>(field_->degree()), Rat(0));
    for (int i = 0; i <= rem.deg(); ++i) w[static_cast<size_t>(i)] = rem[i];
    return NFElem(field_, std::move(w));
  }

  std::string to_string() const {
    if (!field_ || is_rational()) return rat_part_unchecked().to_string();
    std::string s = "[";
    for (size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += coords_[i].to_string();
    }
    return s + "]";
  }

  // Representation order (coordinate-lexicographic); used only to make
  // reports deterministic, not a field order.
  friend bool value_less(const NFElem& a, const NFElem& b) {
    auto [x, y, f] = aligned(a, b);
    (void)f;
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i] != y[i]) return x[i] < y[i];
    }
    return false;
  }

 private:
  Rat rat_part_unchecked() const { return coords_[0]; }

  static std::tuple<std::vector<Rat>, std::vector<Rat>, FieldPtr> aligned(const NFElem& a, const NFElem& b) {
    require(!(a.field_ && b.field_ && a.field_ != b.field_), Err::InvalidInput,
            "elements of distinct number fields");
    FieldPtr f = a.field_ ? a.field_ : b.field_;
    size_t d = f ? static_cast<size_t>(f->degree()) : 1;
    auto lift = [&](const NFElem& e) {
      std::vector<Rat> v(d, Rat(0));
      if (e.field_) {
        v = e.coords_;
      } else {
        v[0] = e.coords_[0];
      }
      return v;
    };
    return {lift(a), lift(b), f};
  }
  static NFElem from_aligned(const FieldPtr& f, std::vector<Rat> v) {
    if (!f) return NFElem(v[0]);
    return NFElem(f, std::move(v));
  }

  FieldPtr field_;           // null: plain rational constant
  std::vector<Rat> coords_;  // length = degree (or 1 when field_ is null)
};

inline NFElem nf_inverse(const NFElem& a) { return a.inv(); }

// Minimal polynomial of a field element, found as the least linear dependency
// among 1, a, a^2, ... by Gaussian elimination over Q. Monic result.
inline UPoly<Rat> nf_minpoly(const NFElem& a) {
  if (!a.field() || a.is_rational())
    return UPoly<Rat>(std::vector<Rat>{-a.coords()[0], Rat(1)});
  int d = a.field()->degree();
  // rows[k] = coordinates of a^k, k = 0..d.
  std::vector<std::vector<Rat>> pows;
  NFElem p(Rat(1));
  for (int k = 0; k <= d; ++k) {
    std::vector<Rat> v(static_cast<size_t>(d), Rat(0));
    if (p.field()) {
      v = p.coords();
    } else {
      v[0] = p.coords()[0];
    }
    pows.push_back(std::move(v));
    p = p * a;
  }
  for (int m = 1; m <= d; ++m) {
    // Solve sum_{k<m} c_k a^k = -a^m if possible.
    std::vector<std::vector<Rat>> mat(static_cast<size_t>(d), std::vector<Rat>(static_cast<size_t>(m) + 1, Rat(0)));
    for (int r = 0; r < d; ++r) {
      for (int k = 0; k < m; ++k) mat[r][static_cast<size_t>(k)] = pows[static_cast<size_t>(k)][static_cast<size_t>(r)];
      mat[r][static_cast<size_t>(m)] = -pows[static_cast<size_t>(m)][static_cast<size_t>(r)];
    }
    // Gaussian elimination.
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < m && rank < d; ++col) {
      int pr = -1;
      for (int r = rank; r < d; ++r)
        if (!mat[r][static_cast<size_t>(col)].is_zero()) { pr = r; break; }
      if (pr < 0) continue;
      std::swap(mat[static_cast<size_t>(rank)], mat[static_cast<size_t>(pr)]);
      Rat piv = mat[static_cast<size_t>(rank)][static_cast<size_t>(col)];
      for (auto& x : mat[static_cast<size_t>(rank)]) x /= piv;
      for (int r = 0; r < d; ++r) {
        if (r == rank) continue;
        Rat f = mat[static_cast<size_t>(r)][static_cast<size_t>(col)];
        if (f.is_zero()) continue;
        for (int cc = 0; cc <= m; ++cc)
          mat[static_cast<size_t>(r)][static_cast<size_t>(cc)] -= f * mat[static_cast<size_t>(rank)][static_cast<size_t>(cc)];
      }
      pivot_col.push_back(col);
      ++rank;
    }
    bool consistent = true;
    for (int r = rank; r < d; ++r)
      if (!mat[static_cast<size_t>(r)][static_cast<size_t>(m)].is_zero()) { consistent = false; break; }
    if (!consistent) continue;
    std::vector<Rat> sol(static_cast<size_t>(m), Rat(0));
    for (int r = 0; r < rank; ++r) sol[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = mat[static_cast<size_t>(r)][static_cast<size_t>(m)];
    std::vector<Rat> cf(sol.begin(), sol.end());
    cf.push_back(Rat(1));
    UPoly<Rat> mp((std::vector<Rat>(cf)));
    // Exact check: the dependency must really annihilate a.
    NFElem acc(Rat(0)), ap(Rat(1));
    for (int k = 0; k <= mp.deg(); ++k) {
      acc += ap * NFElem(mp[k]);
      ap = ap * a;
    }
    if (acc.is_zero()) return mp;
  }
  fail(Err::Internal, "no minimal polynomial found");
}

}  // namespace covercert

#endif
