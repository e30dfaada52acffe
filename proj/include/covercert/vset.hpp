#ifndef COVERCERT_VSET_HPP
#define COVERCERT_VSET_HPP

// Symbolic construction of the defining equation system V and the excluded
// predicates W1..W5 over the indeterminate atlas (Theta, Alpha, Beta, Gamma,
// Delta), plus exact membership verification and the degree/height audit.
//
// Order conditions are encoded by explicit coefficient extraction after the
// affine substitution X = Beta_i + Z, so every equation stays polynomial in
// the atlas variables. Coefficients that vanish identically are counted as
// shape slots but not stored; every stored equation has total degree >= 1.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "covercert/cover.hpp"
#include "covercert/error.hpp"
#include "covercert/heights.hpp"
#include "covercert/mpoly.hpp"

namespace covercert {

struct VarAtlas {
  int m = 0, n = 0, mu = 0, nu = 0;
  long omega = 0;
  std::vector<std::string> names;  // size omega; flattening order of phi

  // Offsets into the flattened vector.
  std::vector<long> theta_off;                  // (m+1)*n entries, i-major
  std::vector<long> alpha_off, beta_off;        // mu, nu entries
  std::vector<std::vector<long>> gamma_fin;     // [beta][branch<ell] block starts
  std::vector<std::vector<long>> kappa_fin;     // kappa per stored finite block
  std::vector<long> gamma_inf;                  // [j=0..n-1] block starts
  std::vector<long> kappa_inf;                  // kappa per infinity branch
  long delta_off = 0;

  long theta(int i, int j) const { return theta_off[static_cast<size_t>(i * n + j)]; }
  long arity() const { return omega + 1; }  // one trailing auxiliary variable
  long aux() const { return omega; }
};

template <class K>
VarAtlas build_atlas(const CoverReport<K>& rep) {
  VarAtlas a;
  a.m = rep.model.m;
  a.n = rep.model.n;
  a.mu = static_cast<int>(rep.alphas.size());
  a.nu = static_cast<int>(rep.betas.size());
  long idx = 0;
  for (int i = 0; i <= a.m; ++i) {
    for (int j = 0; j < a.n; ++j) {
      a.theta_off.push_back(idx++);
      a.names.push_back("Theta_" + std::to_string(i) + "_" + std::to_string(j));
    }
  }
  for (int i = 0; i < a.mu; ++i) {
    a.alpha_off.push_back(idx++);
    a.names.push_back("Alpha_" + std::to_string(i + 1));
  }
  for (int i = 0; i < a.nu; ++i) {
    a.beta_off.push_back(idx++);
    a.names.push_back("Beta_" + std::to_string(i + 1));
  }
  for (int i = 0; i < a.nu; ++i) {
    const auto& tab = rep.betas[static_cast<size_t>(i)];
    std::vector<long> offs, kaps;
    for (int j = 0; j < tab.ell; ++j) {
      long kappa = tab.branches[static_cast<size_t>(j)].kappa;
      offs.push_back(idx);
      kaps.push_back(kappa);
      for (long k = 0; k <= kappa; ++k) {
        a.names.push_back("Gamma_" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_" +
                          std::to_string(k));
        ++idx;
      }
    }
    a.gamma_fin.push_back(std::move(offs));
    a.kappa_fin.push_back(std::move(kaps));
  }
  for (size_t j = 0; j < rep.infinity.branches.size(); ++j) {
    long kappa = rep.infinity.branches[j].kappa;
    a.gamma_inf.push_back(idx);
    a.kappa_inf.push_back(kappa);
    long lo = (j == 0) ? -static_cast<long>(a.m) : 0;
    for (long k = lo; k <= kappa + lo; ++k) {
      a.names.push_back("Gamma_inf_" + std::to_string(j + 1) + "_" + std::to_string(k));
      ++idx;
    }
  }
  a.delta_off = idx++;
  a.names.push_back("Delta");
  a.omega = idx;
  require(a.omega == rep.omega, Err::Internal, "atlas dimension disagrees with omega");
  return a;
}

enum class EqTag { ram, disc, ser, ser_inf_g, ser_inf_h, uni };

inline const char* eq_tag_name(EqTag t) {
  switch (t) {
    case EqTag::ram: return "ram";
    case EqTag::disc: return "disc";
    case EqTag::ser: return "ser";
    case EqTag::ser_inf_g: return "ser_inf_g";
    case EqTag::ser_inf_h: return "ser_inf_h";
    case EqTag::uni: return "uni";
  }
  return "?";
}

template <class K>
struct VEquation {
  MPoly<K> poly;
  EqTag tag;
  std::string label;
};

template <class K>
struct VSystem {
  VarAtlas atlas;
  std::vector<VEquation<K>> equations;  // nonzero equations only
  long slots = 0;                       // shape count including vanished slots
  std::map<std::string, long> slots_by_tag;
};

namespace detail {

// Symbolic model coefficients c_j(S) in the atlas space with S the auxiliary
// variable standing for X, and Y handled by the caller via Horner.
template <class K>
std::vector<MPoly<K>> symbolic_ycoeffs_shifted(const VarAtlas& a, const MPoly<K>& ximage) {
  // Returns c_j(ximage) = sum_i Theta_ij * ximage^i for j < n, plus 1 for Y^n.
  std::vector<MPoly<K>> xpow{MPoly<K>::constant(static_cast<int>(a.arity()), K(1))};
  for (int i = 1; i <= a.m; ++i) xpow.push_back(xpow.back() * ximage);
  std::vector<MPoly<K>> cj;
  for (int j = 0; j < a.n; ++j) {
    MPoly<K> acc(static_cast<int>(a.arity()));
    for (int i = 0; i <= a.m; ++i)
      acc = acc + xpow[static_cast<size_t>(i)] * MPoly<K>::var(static_cast<int>(a.arity()),
                                                               static_cast<int>(a.theta(i, j)));
    cj.push_back(std::move(acc));
  }
  cj.push_back(MPoly<K>::constant(static_cast<int>(a.arity()), K(1)));
  return cj;
}

template <class K>
MPoly<K> horner_y(const std::vector<MPoly<K>>& ycoeffs, const MPoly<K>& y) {
  MPoly<K> r(y.nvars());
  for (size_t j = ycoeffs.size(); j-- > 0;) r = r * y + ycoeffs[j];
  return r;
}

// d/dY of a coefficient list, then Horner.
template <class K>
std::vector<MPoly<K>> ycoeffs_derivative(const std::vector<MPoly<K>>& ycoeffs) {
  std::vector<MPoly<K>> d;
  for (size_t j = 1; j < ycoeffs.size(); ++j) d.push_back(ycoeffs[j].scaled(K(static_cast<long>(j))));
  return d;
}

template <class K>
void extract_aux_coeffs(const VarAtlas& atlas, const MPoly<K>& p, long from, long to, EqTag tag,
                        const std::string& label, std::vector<VEquation<K>>& store, long& slots) {
  for (long k = from; k <= to; ++k) {
    MPoly<K> c = p.coeff_of(static_cast<int>(atlas.aux()), static_cast<int>(k));
    ++slots;
    if (!c.is_zero())
      store.push_back(VEquation<K>{std::move(c), tag, label + "[" + std::to_string(k) + "]"});
  }
}

}  // namespace detail

// Y-discriminant of the generic monic model, as a polynomial in the atlas
// variables and the auxiliary variable standing for X.
template <class K>
MPoly<K> symbolic_y_discriminant(const VarAtlas& a) {
  const int arity = static_cast<int>(a.arity());
  const int n = a.n;
  MPoly<K> S = MPoly<K>::var(arity, static_cast<int>(a.aux()));
  std::vector<MPoly<K>> cj = detail::symbolic_ycoeffs_shifted(a, S);
  std::vector<MPoly<K>> dj = detail::ycoeffs_derivative(cj);
  int dn = n, dd = n - 1;
  int sz = dn + dd;
  std::vector<std::vector<MPoly<K>>> syl(static_cast<size_t>(sz),
                                         std::vector<MPoly<K>>(static_cast<size_t>(sz), MPoly<K>(arity)));
  for (int r = 0; r < dd; ++r)
    for (int j = 0; j <= dn; ++j) syl[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = cj[static_cast<size_t>(dn - j)];
  for (int r = 0; r < dn; ++r)
    for (int j = 0; j <= dd; ++j) syl[static_cast<size_t>(dd + r)][static_cast<size_t>(r + j)] = dj[static_cast<size_t>(dd - j)];
  MPoly<K> D = mpoly_det(syl);
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) D = -D;
  return D;
}

template <class K>
VSystem<K> build_V(const CoverReport<K>& rep) {
  VSystem<K> vs;
  vs.atlas = build_atlas(rep);
  const VarAtlas& a = vs.atlas;
  const int arity = static_cast<int>(a.arity());
  const int m = a.m, n = a.n;
  auto var = [&](long i) { return MPoly<K>::var(arity, static_cast<int>(i)); };
  auto cst = [&](const K& c) { return MPoly<K>::constant(arity, c); };
  MPoly<K> S = var(a.aux());
  long slots = 0;

  // Ramification pinning: Alpha_i = alpha_i.
  for (int i = 0; i < a.mu; ++i) {
    vs.equations.push_back(VEquation<K>{var(a.alpha_off[static_cast<size_t>(i)]) - cst(rep.alphas[static_cast<size_t>(i)].first),
                                        EqTag::ram, "ram[" + std::to_string(i + 1) + "]"});
    ++slots;
  }
  vs.slots_by_tag["ram"] = slots;

  // Discriminant factorization: coefficients in X of D(X) - Delta prod(...).
  {
    long before = slots;
    MPoly<K> D = symbolic_y_discriminant<K>(a);
    MPoly<K> rhs = var(a.delta_off);
    for (int i = 0; i < a.mu; ++i)
      rhs = rhs * (S - var(a.alpha_off[static_cast<size_t>(i)])).pow(rep.alphas[static_cast<size_t>(i)].second);
    for (int i = 0; i < a.nu; ++i)
      rhs = rhs * (S - var(a.beta_off[static_cast<size_t>(i)])).pow(rep.betas[static_cast<size_t>(i)].tau);
    MPoly<K> diff = D - rhs;
    long topdeg = std::max(D.degree_in(static_cast<int>(a.aux())), rhs.degree_in(static_cast<int>(a.aux())));
    detail::extract_aux_coeffs(a, diff, 0, topdeg, EqTag::disc, "disc", vs.equations, slots);
    vs.slots_by_tag["disc"] = slots - before;
  }

  // Order conditions at the finite extra roots: X = Beta_i + Z.
  {
    long before = slots;
    for (int i = 0; i < a.nu; ++i) {
      MPoly<K> ximage = var(a.beta_off[static_cast<size_t>(i)]) + S;
      std::vector<MPoly<K>> cj = detail::symbolic_ycoeffs_shifted(a, ximage);
      std::vector<MPoly<K>> dj = detail::ycoeffs_derivative(cj);
      for (size_t j = 0; j < a.gamma_fin[static_cast<size_t>(i)].size(); ++j) {
        long off = a.gamma_fin[static_cast<size_t>(i)][j];
        long kappa = a.kappa_fin[static_cast<size_t>(i)][j];
        MPoly<K> seg(arity);
        for (long k = 0; k <= kappa; ++k) seg = seg + var(off + k) * S.pow(k);
        std::string base = "ser[b" + std::to_string(i + 1) + ",j" + std::to_string(j + 1) + "]";
        detail::extract_aux_coeffs(a, detail::horner_y(cj, seg), 0, 2 * kappa, EqTag::ser, base + ".F",
                                   vs.equations, slots);
        detail::extract_aux_coeffs(a, detail::horner_y(dj, seg), 0, kappa - 1, EqTag::ser, base + ".FY",
                                   vs.equations, slots);
      }
    }
    vs.slots_by_tag["ser"] = slots - before;
  }

  // Order conditions at infinity, finite branches: G(T, Y) = T^m F(1/T, Y).
  {
    long before = slots;
    std::vector<MPoly<K>> gj, gdj;
    for (int j = 0; j < n; ++j) {
      MPoly<K> acc(arity);
      for (int i = 0; i <= m; ++i)
        acc = acc + S.pow(m - i) * var(a.theta(i, j));
      gj.push_back(std::move(acc));
    }
    gj.push_back(S.pow(m));
    gdj = detail::ycoeffs_derivative(gj);
    for (int j = 1; j < n; ++j) {
      long off = a.gamma_inf[static_cast<size_t>(j)];
      long kappa = a.kappa_inf[static_cast<size_t>(j)];
      MPoly<K> seg(arity);
      for (long k = 0; k <= kappa; ++k) seg = seg + var(off + k) * S.pow(k);
      std::string base = "ser_inf_g[j" + std::to_string(j + 1) + "]";
      detail::extract_aux_coeffs(a, detail::horner_y(gj, seg), 0, 2 * kappa, EqTag::ser_inf_g, base + ".G",
                                 vs.equations, slots);
      detail::extract_aux_coeffs(a, detail::horner_y(gdj, seg), 0, kappa - 1, EqTag::ser_inf_g, base + ".GY",
                                 vs.equations, slots);
    }
    vs.slots_by_tag["ser_inf_g"] = slots - before;
  }

  // Pole branch through H(T, Y) = T^(m(n+1)) F(1/T, T^-m Y), evaluated on
  // T^m * segment (a genuine polynomial in T).
  {
    long before = slots;
    std::vector<MPoly<K>> hj, hdj;
    for (int j = 0; j < n; ++j) {
      MPoly<K> acc(arity);
      for (int i = 0; i <= m; ++i)
        acc = acc + S.pow(m * (n + 1) - i - m * j) * var(a.theta(i, j));
      hj.push_back(std::move(acc));
    }
    hj.push_back(S.pow(m));
    hdj = detail::ycoeffs_derivative(hj);
    long off = a.gamma_inf[0];
    long kappa = a.kappa_inf[0];
    MPoly<K> seg(arity);  // T^m * segment: Gamma_{inf1, k-m} T^k for k = 0..kappa
    for (long k = 0; k <= kappa; ++k) seg = seg + var(off + k) * S.pow(k);
    detail::extract_aux_coeffs(a, detail::horner_y(hj, seg), 0, 2 * kappa, EqTag::ser_inf_h, "ser_inf_h.H",
                               vs.equations, slots);
    detail::extract_aux_coeffs(a, detail::horner_y(hdj, seg), 0, kappa - 1, EqTag::ser_inf_h, "ser_inf_h.HY",
                               vs.equations, slots);
    vs.slots_by_tag["ser_inf_h"] = slots - before;
  }

  // Normalization: Gamma_{inf1,-m} = 1 and Gamma_{inf1,0} = 0.
  {
    long before = slots;
    long off = a.gamma_inf[0];
    require(a.kappa_inf[0] >= m, Err::Internal, "pole kappa below m; normalization slot missing");
    vs.equations.push_back(VEquation<K>{var(off) - cst(K(1)), EqTag::uni, "uni[lead]"});
    ++slots;
    vs.equations.push_back(VEquation<K>{var(off + m), EqTag::uni, "uni[const]"});
    ++slots;
    vs.slots_by_tag["uni"] = slots - before;
  }

  vs.slots = slots;
  for (const auto& eq : vs.equations) {
    require(eq.poly.total_degree() >= 1, Err::Internal, "stored equation of degree zero");
    require(eq.poly.degree_in(static_cast<int>(a.aux())) <= 0, Err::Internal,
            "auxiliary variable leaked into an equation");
  }
  return vs;
}

// ---- W predicates ----------------------------------------------------------

enum class WTag { w1, w2, w3, w4, w5 };

inline const char* w_tag_name(WTag t) {
  switch (t) {
    case WTag::w1: return "W1";
    case WTag::w2: return "W2";
    case WTag::w3: return "W3";
    case WTag::w4: return "W4";
    case WTag::w5: return "W5";
  }
  return "?";
}

// A predicate holds (the point falls into the excluded set) iff all listed
// polynomials vanish simultaneously.
template <class K>
struct WPredicate {
  WTag tag;
  std::string label;
  std::vector<MPoly<K>> polys;
};

template <class K>
struct WSystem {
  VarAtlas atlas;
  std::vector<WPredicate<K>> predicates;
};

template <class K>
WSystem<K> build_W(const CoverReport<K>& rep) {
  WSystem<K> ws;
  ws.atlas = build_atlas(rep);
  const VarAtlas& a = ws.atlas;
  const int arity = static_cast<int>(a.arity());
  const int m = a.m, n = a.n;
  auto var = [&](long i) { return MPoly<K>::var(arity, static_cast<int>(i)); };
  MPoly<K> S = var(a.aux());

  ws.predicates.push_back(WPredicate<K>{WTag::w1, "W1", {var(a.delta_off)}});
  for (int i = 0; i < a.mu; ++i)
    for (int j = 0; j < a.nu; ++j)
      ws.predicates.push_back(WPredicate<K>{
          WTag::w2, "W2[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]",
          {var(a.alpha_off[static_cast<size_t>(i)]) - var(a.beta_off[static_cast<size_t>(j)])}});
  for (int i = 0; i < a.nu; ++i)
    for (int j = i + 1; j < a.nu; ++j)
      ws.predicates.push_back(WPredicate<K>{
          WTag::w3, "W3[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]",
          {var(a.beta_off[static_cast<size_t>(i)]) - var(a.beta_off[static_cast<size_t>(j)])}});

  // W4: one extra vanishing order beyond the V-side conditions. Encoded as
  // the single coefficient at exactly kappa (the marginal condition).
  for (int i = 0; i < a.nu; ++i) {
    MPoly<K> ximage = var(a.beta_off[static_cast<size_t>(i)]) + S;
    std::vector<MPoly<K>> cj = detail::symbolic_ycoeffs_shifted(a, ximage);
    std::vector<MPoly<K>> dj = detail::ycoeffs_derivative(cj);
    for (size_t j = 0; j < a.gamma_fin[static_cast<size_t>(i)].size(); ++j) {
      long off = a.gamma_fin[static_cast<size_t>(i)][j];
      long kappa = a.kappa_fin[static_cast<size_t>(i)][j];
      MPoly<K> seg(arity);
      for (long k = 0; k <= kappa; ++k) seg = seg + var(off + k) * S.pow(k);
      MPoly<K> c = detail::horner_y(dj, seg).coeff_of(static_cast<int>(a.aux()), static_cast<int>(kappa));
      ws.predicates.push_back(WPredicate<K>{
          WTag::w4, "W4[b" + std::to_string(i + 1) + ",j" + std::to_string(j + 1) + "]", {std::move(c)}});
    }
  }
  {
    std::vector<MPoly<K>> gj, hj;
    for (int j = 0; j < n; ++j) {
      MPoly<K> accg(arity), acch(arity);
      for (int i = 0; i <= m; ++i) {
        accg = accg + S.pow(m - i) * var(a.theta(i, j));
        acch = acch + S.pow(m * (n + 1) - i - m * j) * var(a.theta(i, j));
      }
      gj.push_back(std::move(accg));
      hj.push_back(std::move(acch));
    }
    gj.push_back(S.pow(m));
    hj.push_back(S.pow(m));
    std::vector<MPoly<K>> gdj = detail::ycoeffs_derivative(gj);
    std::vector<MPoly<K>> hdj = detail::ycoeffs_derivative(hj);
    {
      long off = a.gamma_inf[0];
      long kappa = a.kappa_inf[0];
      MPoly<K> seg(arity);
      for (long k = 0; k <= kappa; ++k) seg = seg + var(off + k) * S.pow(k);
      MPoly<K> c = detail::horner_y(hdj, seg).coeff_of(static_cast<int>(a.aux()), static_cast<int>(kappa));
      ws.predicates.push_back(WPredicate<K>{WTag::w4, "W4[inf,j1]", {std::move(c)}});
    }
    for (int j = 1; j < n; ++j) {
      long off = a.gamma_inf[static_cast<size_t>(j)];
      long kappa = a.kappa_inf[static_cast<size_t>(j)];
      MPoly<K> seg(arity);
      for (long k = 0; k <= kappa; ++k) seg = seg + var(off + k) * S.pow(k);
      MPoly<K> c = detail::horner_y(gdj, seg).coeff_of(static_cast<int>(a.aux()), static_cast<int>(kappa));
      ws.predicates.push_back(
          WPredicate<K>{WTag::w4, "W4[inf,j" + std::to_string(j + 1) + "]", {std::move(c)}});
    }
  }

  // W5: coincidence of the separating coefficients.
  for (int i = 0; i < a.nu; ++i) {
    for (const auto& lam : rep.betas[static_cast<size_t>(i)].lambda) {
      long j1 = lam[0], j2 = lam[1], l = lam[2];
      ws.predicates.push_back(WPredicate<K>{
          WTag::w5,
          "W5[b" + std::to_string(i + 1) + "," + std::to_string(j1) + "," + std::to_string(j2) + "]",
          {var(a.gamma_fin[static_cast<size_t>(i)][static_cast<size_t>(j1 - 1)] + l) -
           var(a.gamma_fin[static_cast<size_t>(i)][static_cast<size_t>(j2 - 1)] + l)}});
    }
  }
  for (const auto& lam : rep.lambda_inf) {
    long j1 = lam[0], j2 = lam[1], l = lam[2];
    ws.predicates.push_back(WPredicate<K>{
        WTag::w5, "W5[inf," + std::to_string(j1) + "," + std::to_string(j2) + "]",
        {var(a.gamma_inf[static_cast<size_t>(j1 - 1)] + l) - var(a.gamma_inf[static_cast<size_t>(j2 - 1)] + l)}});
  }
  return ws;
}

// ---- membership ------------------------------------------------------------

template <class K>
std::vector<K> flatten_phi(const VarAtlas& a, const PhiVector<K>& phi) {
  require(phi.omega == a.omega, Err::DimensionMismatch,
          "phi has dimension " + std::to_string(phi.omega) + ", atlas expects " + std::to_string(a.omega));
  std::vector<K> v(static_cast<size_t>(a.arity()), K(0));
  for (int i = 0; i <= a.m; ++i)
    for (int j = 0; j < a.n; ++j)
      v[static_cast<size_t>(a.theta(i, j))] = phi.theta[static_cast<size_t>(i)][static_cast<size_t>(j)];
  for (size_t i = 0; i < phi.alpha.size(); ++i) v[static_cast<size_t>(a.alpha_off[i])] = phi.alpha[i];
  for (size_t i = 0; i < phi.beta.size(); ++i) v[static_cast<size_t>(a.beta_off[i])] = phi.beta[i];
  for (size_t i = 0; i < phi.gamma_fin.size(); ++i)
    for (size_t j = 0; j < phi.gamma_fin[i].size(); ++j)
      for (size_t k = 0; k < phi.gamma_fin[i][j].size(); ++k)
        v[static_cast<size_t>(a.gamma_fin[i][j] + static_cast<long>(k))] = phi.gamma_fin[i][j][k];
  for (size_t j = 0; j < phi.gamma_inf.size(); ++j)
    for (size_t k = 0; k < phi.gamma_inf[j].size(); ++k)
      v[static_cast<size_t>(a.gamma_inf[j] + static_cast<long>(k))] = phi.gamma_inf[j][k];
  v[static_cast<size_t>(a.delta_off)] = phi.delta;
  return v;
}

struct MembershipRecord {
  std::string label;
  bool ok = false;      // V equation: value is zero / W predicate: does not hold
  std::string value;    // offending value (V) or note
};

struct MembershipReport {
  bool passed = false;
  std::vector<MembershipRecord> v_results;
  std::vector<MembershipRecord> w_results;
  std::string first_failure;
};

template <class K>
MembershipReport verify_membership(const VSystem<K>& vs, const WSystem<K>& ws, const PhiVector<K>& phi) {
  std::vector<K> point = flatten_phi(vs.atlas, phi);
  MembershipReport rep;
  rep.passed = true;
  for (const auto& eq : vs.equations) {
    K val = eq.poly.eval(point);
    MembershipRecord r;
    r.label = std::string("V[") + eq_tag_name(eq.tag) + "] " + eq.label;
    r.ok = ::covercert::is_zero(val);
    if (!r.ok) {
      r.value = to_string(val);
      if (rep.passed) rep.first_failure = r.label;
      rep.passed = false;
    }
    rep.v_results.push_back(std::move(r));
  }
  for (const auto& pred : ws.predicates) {
    bool holds = true;
    for (const auto& p : pred.polys)
      if (!::covercert::is_zero(p.eval(point))) { holds = false; break; }
    MembershipRecord r;
    r.label = std::string(w_tag_name(pred.tag)) + " " + pred.label;
    r.ok = !holds;  // phi must avoid every excluded predicate
    if (!r.ok) {
      r.value = "predicate holds";
      if (rep.passed) rep.first_failure = r.label;
      rep.passed = false;
    }
    rep.w_results.push_back(std::move(r));
  }
  return rep;
}

// ---- audit -----------------------------------------------------------------

inline LogValue coeff_vector_height(const std::vector<Rat>& v) { return height_of_coeffs(v); }
inline LogValue coeff_vector_height(const std::vector<NFElem>& v) { return height_vector_nf(v); }

struct AuditReport {
  long max_degree = 0;
  long degree_bound = 0;  // 2 m n^2
  bool degree_ok = false;
  std::string degree_argmax;
  LogValue max_height;
  LogValue height_bound;  // h_alpha + 12 (m n)^3
  bool height_ok = false;
  std::string height_argmax;
  long equation_count = 0;
  long slot_count = 0;
};

template <class K>
AuditReport audit(const VSystem<K>& vs, const LogValue& h_alpha) {
  AuditReport rep;
  const long m = vs.atlas.m, n = vs.atlas.n;
  rep.degree_bound = 2 * m * n * n;
  rep.equation_count = static_cast<long>(vs.equations.size());
  rep.slot_count = vs.slots;
  Rat mn(m * n);
  rep.height_bound = h_alpha + LogValue::constant(Rat(12) * mn * mn * mn);
  rep.height_ok = true;
  std::vector<LogValue> heights;
  for (const auto& eq : vs.equations) {
    long d = eq.poly.total_degree();
    if (d > rep.max_degree) {
      rep.max_degree = d;
      rep.degree_argmax = eq.label;
    }
    LogValue h = coeff_vector_height(eq.poly.coefficients());
    // The certified claim is per-equation; the recorded maximum is a valid
    // enclosure even when interval heights tie.
    if (!certified_le(h, rep.height_bound)) {
      rep.height_ok = false;
      rep.height_argmax = eq.label;
    }
    heights.push_back(std::move(h));
  }
  rep.degree_ok = rep.max_degree <= rep.degree_bound;
  rep.max_height = logvalue_sup(heights);
  if (rep.height_argmax.empty() && !vs.equations.empty()) {
    for (size_t i = 0; i < heights.size(); ++i) {
      if (LogValue::compare(heights[i], rep.max_height, 1 << 10) != Cmp::Less) {
        rep.height_argmax = vs.equations[i].label;
        break;
      }
    }
  }
  return rep;
}

}  // namespace covercert

#endif
