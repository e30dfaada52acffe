#ifndef COVERCERT_NF_ROOTS_HPP
#define COVERCERT_NF_ROOTS_HPP

// Root extraction inside a fixed number field. A root xi = a + b*g of p is
// detected by expanding p(a + b*g) modulo the minimal polynomial of g into
// coordinate polynomials and solving the resulting bivariate rational system
// exactly. Complete for fields of degree <= 2 (all that the rest of the
// library instantiates); higher degrees are rejected rather than guessed.

#include <utility>
#include <vector>

#include "covercert/bpoly.hpp"
#include "covercert/error.hpp"
#include "covercert/numberfield.hpp"
#include "covercert/roots.hpp"
#include "covercert/solve2.hpp"

namespace covercert {

template <class K>
struct FieldRoots {
  std::vector<std::pair<K, int>> roots;  // with multiplicities, deterministic order
  UPoly<K> cofactor;
};

inline FieldRoots<Rat> field_roots(const UPoly<Rat>& p, const FieldPtr& /*field*/) {
  auto rr = rational_roots(p);
  return FieldRoots<Rat>{std::move(rr.roots), std::move(rr.cofactor)};
}

namespace detail {

// Coordinates (u, v) of an element u + v*g of a quadratic field.
inline std::pair<Rat, Rat> quad_coords(const NFElem& a) {
  if (!a.field()) return {a.coords()[0], Rat(0)};
  return {a.coords()[0], a.coords()[1]};
}

}  // namespace detail

inline FieldRoots<NFElem> field_roots(const UPoly<NFElem>& p, const FieldPtr& field) {
  require(!p.is_zero(), Err::InvalidInput, "roots of zero polynomial");
  FieldRoots<NFElem> out;
  out.cofactor = p;
  if (p.deg() <= 0) return out;

  std::vector<NFElem> found;
  if (!field || field->degree() == 1) {
    // Everything rational; reduce coefficients and reuse the rational path.
    std::vector<Rat> c;
    for (const auto& a : p.coeffs()) {
      require(a.is_rational(), Err::Internal, "irrational coefficient over a rational base");
      c.push_back(a.rat_part());
    }
    for (const auto& [r, m] : rational_roots(UPoly<Rat>(std::move(c))).roots) {
      (void)m;
      found.emplace_back(r);
    }
  } else if (field->degree() == 2) {
    const UPoly<Rat>& mp = field->minpoly();
    Rat c0 = mp[0], c1 = mp[1];
    // Powers of xi = a + b*g modulo g^2 = -c1*g - c0, tracked as a pair of
    // bivariate polynomials in (a, b).
    BPoly<Rat> BX(std::vector<UPoly<Rat>>{UPoly<Rat>::x()});
    BPoly<Rat> BY(std::vector<UPoly<Rat>>{UPoly<Rat>(), UPoly<Rat>::constant(Rat(1))});
    BPoly<Rat> U = BPoly<Rat>(std::vector<UPoly<Rat>>{UPoly<Rat>::constant(Rat(1))});
    BPoly<Rat> V;
    BPoly<Rat> A, B;
    for (int k = 0; k <= p.deg(); ++k) {
      auto [u, v] = detail::quad_coords(p[k]);
      // (u + v g)(U + V g) with g^2 reduced.
      BPoly<Rat> term_u = U.scaled(u) - V.scaled(v * c0);
      BPoly<Rat> term_v = V.scaled(u) + U.scaled(v) - V.scaled(v * c1);
      A = A + term_u;
      B = B + term_v;
      if (k < p.deg()) {
        BPoly<Rat> nu = BX * U - BY * V.scaled(c0);
        BPoly<Rat> nv = BY * U + BX * V - BY * V.scaled(c1);
        U = std::move(nu);
        V = std::move(nv);
      }
    }
    require(!A.is_zero() || !B.is_zero(), Err::Internal, "vanishing coordinate system");
    std::vector<std::pair<Rat, Rat>> pts;
    if (B.is_zero()) {
      fail(Err::Internal, "coordinate system degenerated to one equation");
    }
    pts = solve_bivariate(A, B);
    NFElem g = NFElem::generator(field);
    for (const auto& [a, b] : pts) found.push_back(NFElem(a) + NFElem(b) * g);
  } else {
    fail(Err::Unsupported, "root search in fields of degree > 2 is not implemented");
  }

  std::sort(found.begin(), found.end(), [](const NFElem& a, const NFElem& b) { return value_less(a, b); });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (const NFElem& r : found) {
    UPoly<NFElem> lin(std::vector<NFElem>{-r, NFElem(1)});
    int mult = 0;
    while (true) {
      auto [q, rem] = divrem(out.cofactor, lin);
      if (!rem.is_zero()) break;
      out.cofactor = q;
      ++mult;
    }
    if (mult > 0) out.roots.emplace_back(r, mult);
  }
  return out;
}

// Roots in F of a rational polynomial, plus the unsplit cofactor over F.
inline FieldRoots<NFElem> nf_roots(const UPoly<Rat>& p, const FieldPtr& field) {
  std::vector<NFElem> c;
  for (const auto& a : p.coeffs()) c.emplace_back(a);
  return field_roots(UPoly<NFElem>(std::move(c)), field);
}

}  // namespace covercert

#endif
