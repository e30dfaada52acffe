#ifndef COVERCERT_SUITES_HPP
#define COVERCERT_SUITES_HPP

// Seeded randomized suites for the height inequalities and the series
// lemmas. Deterministic given (seed, count); a failing instance is shrunk
// greedily before being reported. A deliberately broken variant of the
// product bound can be injected to exercise the failure path itself.

#include <functional>
#include <string>
#include <vector>

#include "covercert/branches.hpp"
#include "covercert/heights.hpp"
#include "covercert/rng.hpp"
#include "covercert/series.hpp"

namespace covercert {

enum class SuiteFault { none, product_bound_constant };

struct LemmaResult {
  std::string name;
  long checked = 0;
  bool ok = true;
  std::string counterexample;
};

struct SuiteReport {
  std::vector<LemmaResult> lemmas;
  bool passed = true;
};

namespace detail {

inline std::string mpoly_str(const MPoly<Rat>& p) {
  std::vector<std::string> names;
  for (int i = 0; i < p.nvars(); ++i) names.push_back("x" + std::to_string(i + 1));
  return p.to_string(names);
}

// Greedy shrink: repeatedly try zeroing single coefficients while the
// failure persists.
inline std::vector<MPoly<Rat>> shrink_family(std::vector<MPoly<Rat>> fs,
                                             const std::function<bool(const std::vector<MPoly<Rat>>&)>& fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t i = 0; i < fs.size(); ++i) {
      for (const auto& [e, c] : fs[i].terms()) {
        std::vector<MPoly<Rat>> cand = fs;
        cand[i].add_term(e, -c);  // drop this monomial
        if (cand[i].is_zero()) continue;
        if (fails(cand)) {
          fs = std::move(cand);
          progress = true;
          break;
        }
      }
      if (progress) break;
    }
  }
  return fs;
}

}  // namespace detail

inline SuiteReport run_lemma_suites(std::uint64_t seed, long count, SuiteFault fault = SuiteFault::none) {
  SuiteReport rep;

  // Product bound.
  {
    ExactRng rng(seed ^ 0x70726f64);
    LemmaResult r;
    r.name = "height_product_bound";
    auto violated = [&](const std::vector<MPoly<Rat>>& fs) {
      for (const auto& f : fs)
        if (f.is_zero()) return false;
      auto b = bound_product(fs);
      LogValue rhs = b.rhs;
      if (fault == SuiteFault::product_bound_constant) {
        // Drop the degree correction term; the inequality then fails on
        // generic inputs, which is exactly what this fault is for.
        rhs = LogValue::zero();
        for (const auto& f : fs) rhs = rhs + height_poly(f);
      }
      return !certified_le(b.lhs, rhs);
    };
    for (long t = 0; t < count && r.ok; ++t) {
      int nv = 1 + static_cast<int>(rng.next_u(3));
      int s = 2 + static_cast<int>(rng.next_u(2));
      std::vector<MPoly<Rat>> fs;
      for (int i = 0; i < s; ++i) fs.push_back(rng.mpoly(nv, 2 + static_cast<int>(rng.next_u(2)), 4));
      ++r.checked;
      if (violated(fs)) {
        r.ok = false;
        auto small = detail::shrink_family(fs, violated);
        r.counterexample = "factors:";
        for (const auto& f : small) r.counterexample += " [" + detail::mpoly_str(f) + "]";
      }
    }
    rep.lemmas.push_back(std::move(r));
  }

  // Composition bound with passthrough variables.
  {
    ExactRng rng(seed ^ 0x636f6d70);
    LemmaResult r;
    r.name = "height_composition_bound";
    for (long t = 0; t < count && r.ok; ++t) {
      int s = 1 + static_cast<int>(rng.next_u(2));
      int rpass = static_cast<int>(rng.next_u(2));
      int nv = 1 + static_cast<int>(rng.next_u(2));
      MPoly<Rat> g = rng.mpoly(s + rpass, 2 + static_cast<int>(rng.next_u(2)), 3);
      std::vector<MPoly<Rat>> fs;
      for (int i = 0; i < s; ++i) fs.push_back(rng.mpoly(nv, 1 + static_cast<int>(rng.next_u(2)), 3));
      auto b = bound_compose(g, fs, rpass);
      ++r.checked;
      if (!b.degenerate && !certified_le(b.lhs, b.rhs)) {
        r.ok = false;
        r.counterexample = "g = " + detail::mpoly_str(g);
        for (const auto& f : fs) r.counterexample += "; f = " + detail::mpoly_str(f);
      }
    }
    rep.lemmas.push_back(std::move(r));
  }

  // Determinant bound.
  {
    ExactRng rng(seed ^ 0x64657421);
    LemmaResult r;
    r.name = "height_determinant_bound";
    for (long t = 0; t < count && r.ok; ++t) {
      int nv = 1 + static_cast<int>(rng.next_u(2));
      size_t s = 2 + rng.next_u(2);
      std::vector<std::vector<MPoly<Rat>>> m(s, std::vector<MPoly<Rat>>(s, MPoly<Rat>(nv)));
      for (auto& row : m)
        for (auto& e : row) e = rng.mpoly(nv, 1 + static_cast<int>(rng.next_u(2)), 3);
      auto b = bound_det(m);
      ++r.checked;
      if (!b.zero_determinant && !certified_le(b.lhs, b.rhs)) {
        r.ok = false;
        r.counterexample = "matrix entry heights exceed the bound; first entry " + detail::mpoly_str(m[0][0]);
      }
    }
    rep.lemmas.push_back(std::move(r));
  }

  // Transform bound plus the inversion involution.
  {
    ExactRng rng(seed ^ 0x72686f21);
    LemmaResult r;
    r.name = "height_pole_shift_bound";
    for (long t = 0; t < count && r.ok; ++t) {
      BPoly<Rat> g = rng.bpoly(static_cast<int>(rng.next_u(3)), 1 + static_cast<int>(rng.next_u(2)), 5);
      int m = g.deg_x() + static_cast<int>(rng.next_u(2));
      Rat rho = rng.rat(4, 2);
      auto b = transform_rho(g, m, rho);
      ++r.checked;
      bool ok = certified_le(b.lhs, b.rhs);
      if (ok && m == g.deg_x()) {
        auto fwd = transform_rho(g, m, Rat(0));
        ok = transform_rho(fwd.f, m, Rat(0)).f == g;
      }
      if (!ok) {
        r.ok = false;
        r.counterexample = "g = " + g.to_string() + ", m = " + std::to_string(m) + ", rho = " + rho.to_string();
      }
    }
    rep.lemmas.push_back(std::move(r));
  }

  // Series lifting: residual order and uniqueness on constructed splits.
  {
    ExactRng rng(seed ^ 0x68656e73);
    LemmaResult r;
    r.name = "series_lift_residual";
    for (long t = 0; t < count && r.ok; ++t) {
      UPoly<Rat> p = rng.upoly(1 + static_cast<int>(rng.next_u(4)), 4, 2);
      UPoly<Rat> q = rng.upoly(1 + static_cast<int>(rng.next_u(4)), 4, 2);
      if (p == q) continue;
      BPoly<Rat> f = BPoly<Rat>(std::vector<UPoly<Rat>>{p, UPoly<Rat>::constant(Rat(-1))}) *
                     BPoly<Rat>(std::vector<UPoly<Rat>>{q, UPoly<Rat>::constant(Rat(-1))});
      long kappa = (p - q).ord0();
      long N = kappa + 5 + static_cast<long>(rng.next_u(46));
      ++r.checked;
      try {
        Series<Rat> seg = Series<Rat>::from_poly(p).truncated(kappa + 1).as_exact_polynomial();
        Series<Rat> y = hensel_lift(f, seg, kappa, N);
        Series<Rat> resid = eval_bpoly(f, y);
        long o;
        bool known = resid.try_ord(o);
        bool ok = !known || o > N;
        for (long k = 0; ok && k <= N; ++k)
          ok = y.coeff(k) == Series<Rat>::from_poly(p).coeff(k);
        Series<Rat> again = hensel_lift(f, seg, kappa, (N + kappa) / 2 + 1);
        for (long k = 0; ok && k <= (N + kappa) / 2 + 1; ++k) ok = again.coeff(k) == y.coeff(k);
        if (!ok) {
          r.ok = false;
          r.counterexample = "f = " + f.to_string() + " at N = " + std::to_string(N);
        }
      } catch (const Error& e) {
        r.ok = false;
        r.counterexample = std::string("lift failed: ") + e.what() + " on f = " + f.to_string();
      }
    }
    rep.lemmas.push_back(std::move(r));
  }

  // Splitting verdicts against known factorizations.
  {
    ExactRng rng(seed ^ 0x73706c69);
    LemmaResult r;
    r.name = "series_split_verdict";
    for (long t = 0; t < count && r.ok; ++t) {
      int n = 2 + static_cast<int>(rng.next_u(2));
      std::vector<UPoly<Rat>> ps;
      for (int i = 0; i < n; ++i) ps.push_back(rng.upoly(1 + static_cast<int>(rng.next_u(2)), 3, 2));
      bool distinct = true;
      for (int i = 0; i < n && distinct; ++i)
        for (int j = i + 1; j < n; ++j)
          if (ps[static_cast<size_t>(i)] == ps[static_cast<size_t>(j)]) { distinct = false; break; }
      if (!distinct) continue;
      BPoly<Rat> f(std::vector<UPoly<Rat>>{UPoly<Rat>::constant(Rat(1))});
      for (const auto& p : ps)
        f = f * BPoly<Rat>(std::vector<UPoly<Rat>>{p, UPoly<Rat>::constant(Rat(-1))});
      if (n % 2 == 1) f = f.scaled(Rat(-1));
      Rat beta = rng.rat(2, 1);
      ++r.checked;
      try {
        auto sp = all_branches_at(f, beta, nullptr);
        bool ok = sp.split && static_cast<int>(sp.branches.size()) == n && sp.sum_kappa == sp.tau;
        // Engineered ramified variant: multiply in a square-root cluster.
        BPoly<Rat> ram = f * BPoly<Rat>(std::vector<UPoly<Rat>>{
                                 UPoly<Rat>(std::vector<Rat>{-beta, Rat(1)}).scaled(Rat(-1)),
                                 UPoly<Rat>(), UPoly<Rat>::constant(Rat(1))});
        auto spr = all_branches_at(ram, beta, nullptr);
        ok = ok && !spr.split;
        if (!ok) {
          r.ok = false;
          r.counterexample = "f = " + f.to_string() + " at beta = " + beta.to_string();
        }
      } catch (const Error& e) {
        if (e.code() == Err::RootsOutsideField) continue;  // fiber needs an extension; redraw
        r.ok = false;
        r.counterexample = std::string("verdict failed: ") + e.what();
      }
    }
    rep.lemmas.push_back(std::move(r));
  }

  for (const auto& l : rep.lemmas) rep.passed = rep.passed && l.ok;
  return rep;
}

}  // namespace covercert

#endif
