#ifndef COVERCERT_SOLVE2_HPP
#define COVERCERT_SOLVE2_HPP

// Rational solutions of a zero-dimensional pair of bivariate polynomials,
// by Y-resultant projection followed by exact univariate root extraction.
// Only the rational sublist of the solution set is produced; points with an
// irrational coordinate are outside the scope of this solver.

#include <algorithm>
#include <utility>
#include <vector>

#include "covercert/bpoly.hpp"
#include "covercert/error.hpp"
#include "covercert/roots.hpp"

namespace covercert {

template <class K>
UPoly<K> y_content(const BPoly<K>& p) {
  UPoly<K> g;
  for (const auto& c : p.ycoeffs()) g = gcd_poly(g, c);
  return g;
}

inline std::vector<std::pair<Rat, Rat>> solve_bivariate(const BPoly<Rat>& p, const BPoly<Rat>& q) {
  require(!p.is_zero() && !q.is_zero(), Err::InvalidInput, "zero polynomial in system");

  UPoly<Rat> content_gcd = gcd_poly(y_content(p), y_content(q));
  if (content_gcd.deg() > 0)
    fail(Err::PositiveDimensional, "common factor " + content_gcd.to_string("X"));
  UPoly<Rat> rx = resultant_y(p, q);
  if (rx.is_zero())
    fail(Err::PositiveDimensional, "common factor of positive Y-degree");

  std::vector<std::pair<Rat, Rat>> sols;
  if (rx.deg() == 0) {
    // No projected X values at all; still possible when both polynomials are
    // Y-free, in which case there is nothing rational to report.
    return sols;
  }
  for (const auto& [x0, mult] : rational_roots(rx).roots) {
    (void)mult;
    UPoly<Rat> px = p.eval_x(x0);
    UPoly<Rat> qx = q.eval_x(x0);
    UPoly<Rat> g;
    if (px.is_zero() && qx.is_zero())
      fail(Err::PositiveDimensional, "fiber X = " + x0.to_string() + " is contained in both curves");
    if (px.is_zero()) g = qx;
    else if (qx.is_zero()) g = px;
    else g = gcd_poly(px, qx);
    if (g.deg() <= 0) continue;
    for (const auto& [y0, ym] : rational_roots(g).roots) {
      (void)ym;
      if (p.eval(x0, y0).is_zero() && q.eval(x0, y0).is_zero()) sols.emplace_back(x0, y0);
    }
  }
  std::sort(sols.begin(), sols.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  return sols;
}

}  // namespace covercert

#endif
