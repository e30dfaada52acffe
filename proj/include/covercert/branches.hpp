#ifndef COVERCERT_BRANCHES_HPP
#define COVERCERT_BRANCHES_HPP

// Branch enumeration of a plane cover at a finite point and at infinity.
//
// At a point beta, branches are discovered by blowing up clusters: the roots
// of f(beta, Y) seed candidate branches, and a root of multiplicity e spawns
// the substitution Y -> c + Z*W followed by division by the Z-content, which
// exposes the next coefficient layer. Every surviving simple root is then
// lifted by Newton. The full-splitting criterion compares sum(kappa) with
// ord_beta of the Y-discriminant; equality certifies that the cover is
// unramified over beta with all n branches in K[[X - beta]].

#include <string>
#include <utility>
#include <vector>

#include "covercert/bpoly.hpp"
#include "covercert/error.hpp"
#include "covercert/nf_roots.hpp"
#include "covercert/series.hpp"

namespace covercert {

template <class K>
struct SplitOutcome {
  bool split = false;
  std::vector<BranchData<K>> branches;  // kappa descending, lexicographic ties
  long tau = 0;                         // ord_beta of the Y-discriminant
  long sum_kappa = 0;
  int expected = 0;  // deg_Y f
  std::string note;  // diagnostics for ramified verdicts
};

namespace detail {

// Compare branch segments coefficient-by-coefficient from the lowest shared
// exponent; used only to make orderings deterministic.
template <class K>
bool segment_lex_less(const Series<K>& a, const Series<K>& b) {
  long lo = std::min(a.window_empty() ? a.prec() : a.offset(),
                     b.window_empty() ? b.prec() : b.offset());
  long hi = std::min(a.prec(), b.prec());
  for (long e = lo; e < hi; ++e) {
    const K& ca = a.coeff(e);
    const K& cb = b.coeff(e);
    if (!(ca == cb)) return value_less(ca, cb);
  }
  return false;
}

template <class K>
struct BranchSeed {
  std::vector<K> prefix;  // coefficients 0 .. depth-1 of the branch
  BPoly<K> local;         // blown-up polynomial with a simple root at (0, c)
  K root;
};

template <class K>
void enumerate_clusters(const BPoly<K>& P, std::vector<K> prefix, long depth, long depth_cap,
                        const FieldPtr& field, std::vector<BranchSeed<K>>& out, bool& unresolved) {
  UPoly<K> at0 = P.eval_x(K(0));
  auto rr = field_roots(at0, field);
  if (rr.cofactor.deg() >= 1)
    fail(Err::RootsOutsideField,
         "specialized polynomial has the unsplit factor " + rr.cofactor.to_string("Y") +
             "; extend the working field");
  for (const auto& [c, mult] : rr.roots) {
    if (mult == 1) {
      out.push_back(BranchSeed<K>{prefix, P, c});
      continue;
    }
    if (depth + 1 > depth_cap) {
      unresolved = true;
      continue;
    }
    BPoly<K> blown = P.substitute_y_linear(c, K(1), 1);
    long v = blown.x_order();
    require(v >= 1 && v < kOrdInf, Err::Internal, "blow-up content must be positive");
    blown = blown.shift_x_down(v);
    std::vector<K> next = prefix;
    next.push_back(c);
    enumerate_clusters(blown, std::move(next), depth + 1, depth_cap, field, out, unresolved);
  }
}

}  // namespace detail

// All power-series branches of f at X = beta, with the splitting verdict.
// Requires f monic in Y with nonzero Y-discriminant; all roots met along the
// way must lie in the working field (RootsOutsideField otherwise).
template <class K>
SplitOutcome<K> all_branches_at(const BPoly<K>& f, const K& beta, const FieldPtr& field,
                                long prec_request = 0, long prec_cap = 4096) {
  require(f.monic_in_y(), Err::InvalidInput, "polynomial must be monic in Y");
  int n = f.deg_y();
  UPoly<K> d = discriminant_y(f);
  require(!d.is_zero(), Err::InvalidInput, "zero discriminant; polynomial is not squarefree in Y");
  long tau = d.compose_shift(beta).ord0();

  BPoly<K> F = f.shift_x(beta);
  SplitOutcome<K> out;
  out.tau = tau;
  out.expected = n;

  std::vector<detail::BranchSeed<K>> seeds;
  bool unresolved = false;
  detail::enumerate_clusters(F, {}, 0, tau + 2, field, seeds, unresolved);

  long prec = std::max({2 * tau + 4, prec_request, static_cast<long>(2)});
  while (true) {
    require(prec <= std::max(prec_cap, 2 * tau + 4), Err::PrecisionExhausted,
            "branch precision exceeded the configured cap");
    try {
      out.branches.clear();
      out.sum_kappa = 0;
      for (const auto& seed : seeds) {
        long depth = static_cast<long>(seed.prefix.size());
        Series<K> local =
            hensel_lift(seed.local, Series<K>::constant(seed.root), 0, std::max<long>(prec - depth - 1, 0));
        std::vector<K> head = seed.prefix;
        Series<K> y = Series<K>::make(0, std::move(head), kPrecInf) + local.shifted(depth);
        y = y.truncated(prec);
        BranchData<K> b = branch_kappa(F, y);
        out.sum_kappa += b.kappa;
        out.branches.push_back(std::move(b));
      }
      break;
    } catch (const Error& e) {
      if (e.code() != Err::IndeterminateOrder && e.code() != Err::InsufficientPrecision) throw;
      prec *= 2;
    }
  }

  if (unresolved || static_cast<int>(out.branches.size()) != n || out.sum_kappa != tau) {
    out.split = false;
    out.note = "found " + std::to_string(out.branches.size()) + " of " + std::to_string(n) +
               " branches, sum kappa = " + std::to_string(out.sum_kappa) + ", ord of discriminant = " +
               std::to_string(tau) + (unresolved ? ", unresolved cluster beyond the depth cap" : "");
    return out;
  }
  require(out.sum_kappa == tau, Err::Internal, "splitting criterion bookkeeping");
  std::sort(out.branches.begin(), out.branches.end(), [](const BranchData<K>& a, const BranchData<K>& b) {
    if (a.kappa != b.kappa) return a.kappa > b.kappa;
    return detail::segment_lex_less(a.branch, b.branch);
  });
  out.split = true;
  return out;
}

// ---- Expansions at infinity -----------------------------------------------

template <class K>
struct InfinityBranch {
  Series<K> series;   // Laurent expansion in t = 1/x
  long kappa = 0;     // the defining order (through h for the pole branch, g otherwise)
  Series<K> segment;  // initial segment: indices -m..kappa-m for the pole branch, 0..kappa else
};

template <class K>
struct InfinityData {
  std::vector<InfinityBranch<K>> branches;  // [0] = pole branch, rest kappa desc
  K c_lead;                                 // gamma_{inf 1, -m}
  K c_zero;                                 // gamma_{inf 1, 0}
  bool normalized = false;                  // c_lead == 1 and c_zero == 0
  long kappa1_via_g = 0;                    // ord of g_Y along the pole branch
  long pole_kappa_chain_delta = 0;          // kappa_1 - kappa1_via_g (observed m(n-1))
};

namespace detail {

// T^(mn) f(T^-1, T^-m W): monic in W for a monic model with deg_X f = m.
template <class K>
BPoly<K> infinity_cleared_model(const BPoly<K>& f, int m, int n) {
  std::vector<UPoly<K>> hy(static_cast<size_t>(n) + 1);
  for (int j = 0; j < n; ++j) {
    const UPoly<K>& cj = f.ycoeff(j);
    UPoly<K> acc;
    for (int i = 0; i <= cj.deg(); ++i) {
      if (::covercert::is_zero(cj[i])) continue;
      int e = m * n - i - m * j;
      require(e >= 0, Err::Internal, "negative exponent in the infinity model");
      acc = acc + UPoly<K>::monomial(cj[i], e);
    }
    hy[static_cast<size_t>(j)] = std::move(acc);
  }
  hy[static_cast<size_t>(n)] = UPoly<K>::constant(K(1));
  return BPoly<K>(std::move(hy));
}

template <class K>
InfinityData<K> expansions_at_infinity_once(const BPoly<K>& f, int m, int n, const FieldPtr& field,
                                            long want, long prec_cap);

}  // namespace detail

// The n expansions of y at infinity for a model monic in Y with deg_X = m,
// via the auxiliary polynomial T^(mn) f(T^-1, T^-m W), which is monic in W.
// Retries at doubled precision while any order stays uncertified.
template <class K>
InfinityData<K> expansions_at_infinity(const BPoly<K>& f, int m, int n, const FieldPtr& field,
                                       long prec_request = 0, long prec_cap = 4096) {
  require(f.monic_in_y() && f.deg_y() == n, Err::InvalidInput, "model must be monic of Y-degree n");
  require(f.deg_x() == m && m >= 1, Err::InvalidInput, "model must have X-degree m >= 1");

  long want = std::max(prec_request, static_cast<long>(4 * m + 8));
  for (;; want *= 2) {
    require(want <= std::max(prec_cap, static_cast<long>(4 * m + 8)), Err::PrecisionExhausted,
            "infinity expansion precision exceeded the configured cap");
    try {
      return detail::expansions_at_infinity_once(f, m, n, field, want, prec_cap);
    } catch (const Error& e) {
      if (e.code() != Err::IndeterminateOrder && e.code() != Err::InsufficientPrecision) throw;
    }
  }
}

namespace detail {

template <class K>
InfinityData<K> expansions_at_infinity_once(const BPoly<K>& f, int m, int n, const FieldPtr& field,
                                            long want, long prec_cap) {
  BPoly<K> hhat = detail::infinity_cleared_model(f, m, n);
  SplitOutcome<K> sp = all_branches_at(hhat, K(0), field, want + 2 * m + 4, prec_cap);
  if (!sp.split) fail(Err::RamifiedAtInfinity, "cover is ramified over infinity: " + sp.note);

  // Classify: exactly one branch with W(0) != 0 (the pole of order m); the
  // others must start at exponent >= m so that y = t^-m W has no pole. A
  // branch that vanishes through its whole window is a zero sheet.
  int pole_index = -1;
  for (size_t i = 0; i < sp.branches.size(); ++i) {
    long o;
    if (!sp.branches[i].branch.try_ord(o)) o = sp.branches[i].branch.prec();
    if (o == 0) {
      if (pole_index >= 0) fail(Err::WrongPoleShape, "two branches carry a pole of order m");
      pole_index = static_cast<int>(i);
    } else if (o < m) {
      fail(Err::WrongPoleShape, "a branch has a pole of order " + std::to_string(m - o) +
                                    " instead of being finite");
    }
  }
  if (pole_index < 0) fail(Err::WrongPoleShape, "no branch has exact leading exponent -" + std::to_string(m));

  InfinityData<K> out;
  BPoly<K> fdy = f.dy();

  // Pole branch: kappa through h'_Y, which is t^(mn) f_Y(1/t, y).
  {
    const BranchData<K>& bw = sp.branches[static_cast<size_t>(pole_index)];
    Series<K> y1 = bw.branch.shifted(-static_cast<long>(m));
    InfinityBranch<K> b;
    b.series = y1;
    b.kappa = m + bw.kappa;
    b.segment = y1.truncated(b.kappa - m + 1);
    Series<K> seg = b.segment.as_exact_polynomial();
    long oh = eval_bpoly_inv_x(f, seg, static_cast<long>(m) * (n + 1)).ord();
    require(oh > 2 * b.kappa, Err::Internal, "pole segment postcondition ord h > 2 kappa failed");
    long ohd = eval_bpoly_inv_x(fdy, seg, static_cast<long>(m) * n).ord();
    require(ohd == b.kappa, Err::Internal, "pole segment postcondition ord h_Y = kappa failed");
    out.kappa1_via_g = eval_bpoly_inv_x(fdy, y1, m).ord();
    out.pole_kappa_chain_delta = b.kappa - out.kappa1_via_g;
    out.c_lead = y1.coeff(-static_cast<long>(m));
    out.c_zero = y1.coeff(0);
    out.normalized = out.c_lead.is_one() && ::covercert::is_zero(out.c_zero);
    out.branches.push_back(std::move(b));
  }

  // Finite branches: kappa through g'_Y = t^m f_Y(1/t, y).
  std::vector<InfinityBranch<K>> rest;
  for (size_t i = 0; i < sp.branches.size(); ++i) {
    if (static_cast<int>(i) == pole_index) continue;
    Series<K> yj = sp.branches[i].branch.shifted(-static_cast<long>(m));
    InfinityBranch<K> b;
    b.series = yj;
    b.kappa = eval_bpoly_inv_x(fdy, yj, m).ord();
    require(b.kappa < kOrdInf, Err::Internal, "kappa at infinity indeterminate");
    b.segment = yj.truncated(b.kappa + 1);
    Series<K> seg = b.segment.as_exact_polynomial();
    long og = eval_bpoly_inv_x(f, seg, m).ord();
    require(og > 2 * b.kappa, Err::Internal, "segment postcondition ord g > 2 kappa failed");
    long ogd = eval_bpoly_inv_x(fdy, seg, m).ord();
    require(ogd == b.kappa, Err::Internal, "segment postcondition ord g_Y = kappa failed");
    rest.push_back(std::move(b));
  }
  std::sort(rest.begin(), rest.end(), [](const InfinityBranch<K>& a, const InfinityBranch<K>& b) {
    if (a.kappa != b.kappa) return a.kappa > b.kappa;
    return detail::segment_lex_less(a.series, b.series);
  });
  for (auto& b : rest) out.branches.push_back(std::move(b));
  return out;
}

}  // namespace detail

}  // namespace covercert

#endif
