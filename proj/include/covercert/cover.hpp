#ifndef COVERCERT_COVER_HPP
#define COVERCERT_COVER_HPP

// End-to-end analysis of a plane cover: discriminant factorization over the
// working field, branch tables at every extra discriminant root, expansions
// at infinity with the normalization readout, the indeterminate count Omega,
// and the constructive steps that produce the canonical model from a raw
// input curve (normalization seed at infinity + elimination).

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "covercert/branches.hpp"
#include "covercert/error.hpp"
#include "covercert/heights.hpp"
#include "covercert/mpoly.hpp"
#include "covercert/nf_roots.hpp"

namespace covercert {

template <class K>
struct PlaneModel {
  BPoly<K> f;      // monic in Y
  FieldPtr field;  // null over Q
  int m = 0, n = 0;
};

template <class K>
PlaneModel<K> make_plane_model(BPoly<K> f, FieldPtr field) {
  require(!f.is_zero(), Err::InvalidInput, "zero model");
  require(f.monic_in_y(), Err::InvalidInput, "model must be monic in Y");
  PlaneModel<K> pm;
  pm.n = f.deg_y();
  pm.m = f.deg_x();
  require(pm.n >= 2, Err::InvalidInput, "Y-degree must be at least 2");
  require(pm.m >= 1, Err::InvalidInput, "X-degree must be at least 1");
  pm.f = std::move(f);
  pm.field = std::move(field);
  return pm;
}

template <class K>
struct BetaTable {
  K beta;
  long tau = 0;
  std::vector<BranchData<K>> branches;        // all n branches, kappa descending
  int ell = 0;                                // branches with positive kappa
  std::vector<std::array<long, 3>> lambda;    // {j1, j2, lambda}, 1-based, j1<j2<=ell
};

template <class K>
struct CoverReport {
  PlaneModel<K> model;
  UPoly<K> disc;
  K delta;                                    // leading coefficient of disc
  std::vector<std::pair<K, long>> alphas;     // declared order, with sigma_i
  std::vector<BetaTable<K>> betas;            // extra roots, deterministic order
  InfinityData<K> infinity;
  std::vector<std::array<long, 3>> lambda_inf;  // pairs 2 <= j1 < j2 <= n
  long omega = 0;

  // Inequality audit: each of these is a theorem for an honestly analyzed
  // model, recorded so reports can exhibit the certified budget.
  bool finite_segment_budget_ok = false;    // sum (kappa_ij + 1) <= 2 deg d
  bool infinity_kappa_budget_ok = false;    // sum kappa_inf <= m n + deg d
  bool infinity_segment_budget_ok = false;  // sum (kappa_inf + 1) <= (m+1) n + deg d
  bool omega_bound_ok = false;              // omega <= 10 m n + 2 n - 8 m + 1
  bool root_count_bound_ok = false;         // mu + nu <= deg d <= 2 m (n-1)
  bool pole_kappa_identity_ok = false;      // kappa_inf_1 == m (n-1) + ord g_Y (pole branch)
};

template <class K>
struct PhiVector {
  std::vector<std::vector<K>> theta;                 // [i][j] for X^i Y^j, j < n
  std::vector<K> alpha;
  std::vector<K> beta;
  std::vector<std::vector<std::vector<K>>> gamma_fin;  // [beta][branch<ell][k=0..kappa]
  std::vector<std::vector<K>> gamma_inf;                // [j] coefficients, pole branch stored from -m
  K delta;
  long omega = 0;
};

// ---- analyze ---------------------------------------------------------------

template <class K>
CoverReport<K> analyze(const PlaneModel<K>& model, const std::vector<K>& declared_alphas,
                       long prec_request = 0, long prec_cap = 4096) {
  CoverReport<K> rep;
  rep.model = model;
  const int m = model.m, n = model.n;

  rep.disc = discriminant_y(model.f);
  require(!rep.disc.is_zero(), Err::InvalidInput, "discriminant vanishes identically; model is not squarefree");
  rep.delta = rep.disc.lc();
  long degd = rep.disc.deg();

  for (size_t i = 0; i < declared_alphas.size(); ++i)
    for (size_t j = i + 1; j < declared_alphas.size(); ++j)
      require(!(declared_alphas[i] == declared_alphas[j]), Err::InvalidInput, "declared branch points must be distinct");

  auto classified = field_roots(rep.disc, model.field);
  if (classified.cofactor.deg() >= 1)
    fail(Err::UnclassifiedDiscriminantRoot,
         "discriminant factor " + classified.cofactor.to_string("X") + " has no root in the working field");

  std::vector<std::pair<K, long>> pool(classified.roots.begin(), classified.roots.end());
  for (const K& a : declared_alphas) {
    bool found = false;
    for (auto it = pool.begin(); it != pool.end(); ++it) {
      if (it->first == a) {
        rep.alphas.emplace_back(a, it->second);
        pool.erase(it);
        found = true;
        break;
      }
    }
    if (!found)
      fail(Err::DeclaredPointNotRamified,
           "declared branch point " + to_string(a) + " is not a root of the discriminant");
  }
  std::sort(pool.begin(), pool.end(),
            [](const auto& x, const auto& y) { return value_less(x.first, y.first); });

  for (const auto& [beta, tau] : pool) {
    SplitOutcome<K> sp = all_branches_at(model.f, beta, model.field, prec_request, prec_cap);
    if (!sp.split)
      fail(Err::RamifiedAtDeclaredBeta,
           "cover is ramified over the undeclared root " + to_string(beta) + " (" + sp.note + ")");
    BetaTable<K> tab;
    tab.beta = beta;
    tab.tau = tau;
    require(sp.tau == tau, Err::Internal, "discriminant order bookkeeping");
    tab.branches = std::move(sp.branches);
    tab.ell = 0;
    long ksum = 0;
    for (const auto& b : tab.branches) {
      if (b.kappa > 0) ++tab.ell;
      ksum += b.kappa;
    }
    require(ksum == tau, Err::Internal, "branch kappa total must equal the discriminant order");
    for (int j1 = 0; j1 < tab.ell; ++j1) {
      for (int j2 = j1 + 1; j2 < tab.ell; ++j2) {
        long lam = separation_index(tab.branches[static_cast<size_t>(j1)].segment,
                                    tab.branches[static_cast<size_t>(j2)].segment);
        require(lam <= std::min(tab.branches[static_cast<size_t>(j1)].kappa,
                                tab.branches[static_cast<size_t>(j2)].kappa),
                Err::Internal, "separation index exceeds kappa");
        tab.lambda.push_back({j1 + 1, j2 + 1, lam});
      }
    }
    rep.betas.push_back(std::move(tab));
  }

  rep.infinity = expansions_at_infinity(model.f, m, n, model.field, prec_request, prec_cap);
  for (int j1 = 1; j1 < n; ++j1) {
    for (int j2 = j1 + 1; j2 < n; ++j2) {
      long lam = separation_index(rep.infinity.branches[static_cast<size_t>(j1)].segment,
                                  rep.infinity.branches[static_cast<size_t>(j2)].segment);
      rep.lambda_inf.push_back({j1 + 1, j2 + 1, lam});
    }
  }

  // Dimension of the indeterminate vector.
  long fin_members = 0;
  for (const auto& tab : rep.betas)
    for (int j = 0; j < tab.ell; ++j) fin_members += tab.branches[static_cast<size_t>(j)].kappa + 1;
  long inf_members = 0, inf_kappa = 0;
  for (const auto& b : rep.infinity.branches) {
    inf_members += b.kappa + 1;
    inf_kappa += b.kappa;
  }
  long mu = static_cast<long>(rep.alphas.size());
  long nu = static_cast<long>(rep.betas.size());
  rep.omega = static_cast<long>(m + 1) * n + mu + nu + fin_members + inf_members + 1;

  rep.finite_segment_budget_ok = fin_members <= 2 * degd;
  rep.infinity_kappa_budget_ok = inf_kappa <= static_cast<long>(m) * n + degd;
  rep.infinity_segment_budget_ok = inf_members <= static_cast<long>(m + 1) * n + degd;
  rep.omega_bound_ok = rep.omega <= 10L * m * n + 2L * n - 8L * m + 1;
  rep.root_count_bound_ok = mu + nu <= degd && degd <= 2L * m * (n - 1);
  rep.pole_kappa_identity_ok =
      rep.infinity.branches[0].kappa == static_cast<long>(m) * (n - 1) + rep.infinity.kappa1_via_g;
  return rep;
}

// The concrete point of the indeterminate space carried by a report.
template <class K>
PhiVector<K> assemble_phi(const CoverReport<K>& rep) {
  const int m = rep.model.m, n = rep.model.n;
  PhiVector<K> phi;
  phi.delta = rep.delta;
  phi.theta.assign(static_cast<size_t>(m) + 1, std::vector<K>(static_cast<size_t>(n), K(0)));
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j < n; ++j) phi.theta[static_cast<size_t>(i)][static_cast<size_t>(j)] = rep.model.f.coeff(i, j);
  for (const auto& [a, s] : rep.alphas) {
    (void)s;
    phi.alpha.push_back(a);
  }
  for (const auto& tab : rep.betas) phi.beta.push_back(tab.beta);
  for (const auto& tab : rep.betas) {
    std::vector<std::vector<K>> blocks;
    for (int j = 0; j < tab.ell; ++j) {
      const auto& br = tab.branches[static_cast<size_t>(j)];
      std::vector<K> g;
      for (long k = 0; k <= br.kappa; ++k) g.push_back(br.segment.coeff(k));
      blocks.push_back(std::move(g));
    }
    phi.gamma_fin.push_back(std::move(blocks));
  }
  for (size_t j = 0; j < rep.infinity.branches.size(); ++j) {
    const auto& br = rep.infinity.branches[j];
    std::vector<K> g;
    long lo = (j == 0) ? -static_cast<long>(m) : 0;
    for (long k = lo; k <= br.kappa + lo; ++k) g.push_back(br.segment.coeff(k));
    phi.gamma_inf.push_back(std::move(g));
  }
  long count = static_cast<long>(m + 1) * n + static_cast<long>(phi.alpha.size()) +
               static_cast<long>(phi.beta.size()) + 1;
  for (const auto& bl : phi.gamma_fin)
    for (const auto& g : bl) count += static_cast<long>(g.size());
  for (const auto& g : phi.gamma_inf) count += static_cast<long>(g.size());
  phi.omega = count;
  require(phi.omega == rep.omega, Err::Internal, "phi dimension disagrees with omega");
  return phi;
}

// ---- eliminate -------------------------------------------------------------

namespace detail {

// Primitive gcd in (K[X])[Y] by a pseudo-remainder sequence; used only to
// diagnose non-squarefree eliminations.
template <class K>
BPoly<K> gcd_y_primitive(BPoly<K> a, BPoly<K> b) {
  auto content = [](const BPoly<K>& p) {
    UPoly<K> g;
    for (const auto& c : p.ycoeffs()) g = gcd_poly(g, c);
    return g;
  };
  auto primitive = [&](const BPoly<K>& p) {
    if (p.is_zero()) return p;
    UPoly<K> ct = content(p);
    std::vector<UPoly<K>> v;
    for (const auto& c : p.ycoeffs()) v.push_back(c.is_zero() ? c : exact_div(c, ct));
    return BPoly<K>(std::move(v));
  };
  if (a.deg_y() < b.deg_y()) std::swap(a, b);
  a = primitive(a);
  b = primitive(b);
  while (!b.is_zero() && b.deg_y() >= 1) {
    std::vector<UPoly<K>> r = detail::pseudo_rem(a.ycoeffs(), b.ycoeffs());
    a = b;
    b = primitive(BPoly<K>(std::move(r)));
  }
  if (!b.is_zero()) return BPoly<K>(std::vector<UPoly<K>>{UPoly<K>::constant(K(1))});
  return a;
}

}  // namespace detail

template <class K>
struct Eliminated {
  BPoly<K> f;
  int m = 0, n = 0;
};

// Minimal equation of y over K(x): Res_{Y0}(F0(X, Y0), Y - y_expr(X, Y0)),
// normalized monic in Y. A resultant that is a proper power means y_expr
// generates a proper subfield; the extracted root is reported in the error.
template <class K>
Eliminated<K> eliminate(const BPoly<K>& F0, const BPoly<K>& y_expr) {
  require(!F0.is_zero() && F0.deg_y() >= 1, Err::InvalidInput, "degenerate input curve");
  require(F0.ycoeff(F0.deg_y()).deg() == 0, Err::InvalidInput,
          "input curve must have an invertible leading Y0-coefficient");
  // Variables: 0 = X, 1 = Y, 2 = Y0.
  auto embed = [](const BPoly<K>& p, int yvar) {
    MPoly<K> out(3);
    for (int j = 0; j <= p.deg_y(); ++j) {
      const UPoly<K>& c = p.ycoeff(j);
      for (int i = 0; i <= c.deg(); ++i) {
        if (::covercert::is_zero(c[i])) continue;
        std::vector<int> e(3, 0);
        e[0] = i;
        e[static_cast<size_t>(yvar)] = j;
        out.add_term(e, c[i]);
      }
    }
    return out;
  };
  MPoly<K> A = embed(F0, 2);
  MPoly<K> B = MPoly<K>::var(3, 1) - embed(y_expr, 2);
  int da = A.degree_in(2), db = B.degree_in(2);
  MPoly<K> res(3);
  if (db <= 0) {
    // y_expr does not involve Y0: the resultant is (Y - y_expr)^da.
    res = B.pow(da);
  } else {
    int nn = da + db;
    std::vector<std::vector<MPoly<K>>> syl(static_cast<size_t>(nn),
                                           std::vector<MPoly<K>>(static_cast<size_t>(nn), MPoly<K>(3)));
    for (int r = 0; r < db; ++r)
      for (int j = 0; j <= da; ++j) syl[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = A.coeff_of(2, da - j);
    for (int r = 0; r < da; ++r)
      for (int j = 0; j <= db; ++j)
        syl[static_cast<size_t>(db + r)][static_cast<size_t>(r + j)] = B.coeff_of(2, db - j);
    res = mpoly_det(syl);
  }
  require(!res.is_zero(), Err::InvalidInput, "elimination produced the zero polynomial");

  // Convert to a bivariate polynomial in (X, Y).
  int dy = res.degree_in(1);
  std::vector<UPoly<K>> ycoeffs(static_cast<size_t>(dy) + 1);
  for (int j = 0; j <= dy; ++j) {
    MPoly<K> cj = res.coeff_of(1, j);
    int dx = cj.degree_in(0);
    std::vector<K> c(static_cast<size_t>(std::max(dx, 0)) + 1, K(0));
    for (const auto& [e, v] : cj.terms()) c[static_cast<size_t>(e[0])] = v;
    ycoeffs[static_cast<size_t>(j)] = UPoly<K>(std::move(c));
  }
  BPoly<K> f(std::move(ycoeffs));
  const UPoly<K>& lc = f.ycoeff(f.deg_y());
  require(lc.deg() == 0, Err::Internal, "eliminated polynomial has non-constant leading coefficient");
  f = f.scaled(inv(lc[0]));

  if (discriminant_y(f).is_zero()) {
    BPoly<K> g = detail::gcd_y_primitive(f, f.dy());
    std::string root_desc = "";
    if (g.deg_y() >= 1 && g.monic_in_y()) {
      // For a proper power f = s^e, g is s^(e-1) and s divides f exactly.
      BPoly<K> rem = f;
      std::vector<UPoly<K>> q(static_cast<size_t>(f.deg_y() - g.deg_y()) + 1);
      while (!rem.is_zero() && rem.deg_y() >= g.deg_y()) {
        int k = rem.deg_y() - g.deg_y();
        UPoly<K> lead = rem.ycoeff(rem.deg_y());
        q[static_cast<size_t>(k)] = lead;
        std::vector<UPoly<K>> sub(static_cast<size_t>(k) + static_cast<size_t>(g.deg_y()) + 1);
        for (int j = 0; j <= g.deg_y(); ++j) sub[static_cast<size_t>(k + j)] = g.ycoeff(j) * lead;
        rem = rem - BPoly<K>(std::move(sub));
      }
      if (rem.is_zero()) {
        BPoly<K> s(std::move(q));
        int e = s.deg_y() > 0 ? f.deg_y() / s.deg_y() : 0;
        if (e >= 2 && s.pow_y(e) == f) root_desc = "; extracted root " + s.to_string();
      }
    }
    fail(Err::NotSquarefreeAfterReduction,
         "y_expr generates a proper subfield: the eliminated polynomial is a proper power" + root_desc);
  }
  Eliminated<K> out;
  out.n = f.deg_y();
  out.m = f.deg_x();
  out.f = std::move(f);
  return out;
}

// ---- normalization at infinity ---------------------------------------------

template <class K>
struct NormalizationReport {
  BPoly<K> y_expr;   // (u - c0) / c_lead
  int pole_order = 0;
  K c_lead, c_zero;  // leading and constant expansion coefficients of u
  int branch_count = 0;
};

namespace detail {

// T^(P*n) f(T^-1, T^-P W): monic in W whenever f is monic in Y with
// deg_X f <= P.
template <class K>
BPoly<K> pole_cleared_model(const BPoly<K>& f, int P) {
  int n = f.deg_y();
  std::vector<UPoly<K>> hy(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    const UPoly<K>& cj = f.ycoeff(j);
    UPoly<K> acc;
    for (int i = 0; i <= cj.deg(); ++i) {
      if (::covercert::is_zero(cj[i])) continue;
      int e = P * n - i - P * j;
      require(e >= 0, Err::Internal, "pole clearing produced a negative exponent");
      acc = acc + UPoly<K>::monomial(cj[i], e);
    }
    hy[static_cast<size_t>(j)] = std::move(acc);
  }
  return BPoly<K>(std::move(hy));
}

}  // namespace detail

// Expand the seed function u(x, y0) along every branch of F0 over infinity;
// u must have a pole of exact order m along exactly one branch and stay
// finite along the rest. Returns y_expr = (u - c_0)/c_lead together with the
// observed expansion data.
template <class K>
NormalizationReport<K> normalize_at_infinity(const BPoly<K>& F0, int m, const BPoly<K>& u,
                                             const FieldPtr& field, long prec_cap = 4096) {
  require(!F0.is_zero() && F0.deg_y() >= 2, Err::InvalidInput, "input curve must have Y0-degree >= 2");
  require(F0.ycoeff(F0.deg_y()).deg() == 0, Err::InvalidInput,
          "input curve must have an invertible leading Y0-coefficient");
  BPoly<K> F = F0.scaled(inv(F0.ycoeff(F0.deg_y())[0]));
  int n0 = F.deg_y();
  int P = std::max(F.deg_x(), 1);
  BPoly<K> cleared = detail::pole_cleared_model(F, P);

  long prec = static_cast<long>(P) * (u.deg_y() + 2) + u.deg_x() + m + 8;
  while (true) {
    SplitOutcome<K> sp = all_branches_at(cleared, K(0), field, prec, prec_cap);
    if (!sp.split)
      fail(Err::RamifiedAtInfinity, "input cover is ramified over infinity: " + sp.note);
    try {
      int pole_branch = -1;
      long pole_ord = 0;
      K c_lead{}, c_zero{};
      for (size_t i = 0; i < sp.branches.size(); ++i) {
        Series<K> y0 = sp.branches[i].branch.shifted(-static_cast<long>(P));
        Series<K> ub = eval_bpoly_inv_x(u, y0, 0);
        long o;
        if (!ub.try_ord(o)) fail(Err::IndeterminateOrder, "seed expansion order undetermined");
        if (o < 0) {
          if (pole_branch >= 0)
            fail(Err::WrongPoleOrder, "seed function has poles along two branches over infinity");
          pole_branch = static_cast<int>(i);
          pole_ord = -o;
          c_lead = ub.coeff(o);
          c_zero = ub.coeff(0);
        }
      }
      if (pole_branch < 0)
        fail(Err::WrongPoleOrder, "seed function has no pole over infinity");
      if (pole_ord != m)
        fail(Err::WrongPoleOrder, "seed pole order is " + std::to_string(pole_ord) +
                                      ", expected " + std::to_string(m));
      NormalizationReport<K> rep;
      rep.pole_order = static_cast<int>(pole_ord);
      rep.c_lead = c_lead;
      rep.c_zero = c_zero;
      rep.branch_count = n0;
      BPoly<K> shiftc = BPoly<K>(std::vector<UPoly<K>>{UPoly<K>::constant(c_zero)});
      rep.y_expr = (u - shiftc).scaled(inv(c_lead));
      return rep;
    } catch (const Error& e) {
      if (e.code() != Err::IndeterminateOrder) throw;
      prec *= 2;
      require(prec <= prec_cap * 8, Err::PrecisionExhausted, "seed expansion precision cap reached");
    }
  }
}

// ---- good fiber shift ------------------------------------------------------

// Smallest-|rho| integer (positive preferred on ties) avoiding the bad set,
// within |rho| <= m^3.
template <class K>
long find_rho(const std::vector<K>& bad_xs, int m) {
  long bound = static_cast<long>(m) * m * m;
  for (long a = 0; a <= bound; ++a) {
    for (int s = 0; s < 2; ++s) {
      long cand = s == 0 ? a : -a;
      if (a == 0 && s == 1) continue;
      bool bad = false;
      for (const auto& b : bad_xs)
        if (b == K(cand)) { bad = true; break; }
      if (!bad) return cand;
    }
  }
  fail(Err::NoAdmissibleShift, "every integer shift up to m^3 meets the bad set");
}

template <class K>
struct GeneralCaseResult {
  BPoly<K> shifted_model;           // (X-rho)^m f((X-rho)^{-1}, Y)
  long rho = 0;
  std::vector<K> shifted_alphas;    // (alpha - rho)^{-1}
  LogValue h_shifted;               // max height of the shifted branch points
  LogValue h_bound;                 // h + 3 log(2m)
};

template <class K>
GeneralCaseResult<K> general_case_transform(const BPoly<K>& f, int m, const std::vector<K>& alphas,
                                            const std::vector<K>& extra_bad_xs) {
  std::vector<K> bad = alphas;
  bad.insert(bad.end(), extra_bad_xs.begin(), extra_bad_xs.end());
  GeneralCaseResult<K> out;
  out.rho = find_rho(bad, m);
  K rho{out.rho};
  out.shifted_model = transform_rho_poly(f, m, rho);
  std::vector<LogValue> hs_all{LogValue::zero()}, h_all{LogValue::zero()};
  for (const K& a : alphas) {
    K img = inv(a - rho);
    out.shifted_alphas.push_back(img);
    h_all.push_back(scalar_height(a));
    hs_all.push_back(scalar_height(img));
  }
  LogValue h = logvalue_sup(h_all);
  out.h_shifted = logvalue_sup(hs_all);
  out.h_bound = h + LogValue::log_of(Rat(2 * m)).scaled(Rat(3));
  return out;
}

}  // namespace covercert

#endif
