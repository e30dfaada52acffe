// Acceptance suite: runs every certification criterion end to end and prints
// one pass/fail line each. Exit code 0 iff all criteria hold.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <covercert/bounds.hpp>
#include <covercert/cover.hpp>
#include <covercert/io.hpp>
#include <covercert/rng.hpp>
#include <covercert/solve2.hpp>
#include <covercert/suites.hpp>
#include <covercert/vset.hpp>

#include "oracles.hpp"

using namespace covercert;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

UPoly<Rat> upoly(std::vector<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return UPoly<Rat>(std::move(v));
}

struct FixtureRun {
  CoverReport<Rat> report;
  VSystem<Rat> vs;
  WSystem<Rat> ws;
  MembershipReport membership;
  AuditReport auditrep;
  double elapsed = 0;
};

FixtureRun run_fixture(const BPoly<Rat>& curve, const BPoly<Rat>& seed, int m,
                       const std::vector<Rat>& declared, const LogValue& h_alpha) {
  auto t0 = Clock::now();
  FixtureRun out;
  auto norm = normalize_at_infinity(curve, m, seed, nullptr);
  auto elim = eliminate(curve, norm.y_expr);
  out.report = analyze(make_plane_model(elim.f, nullptr), declared);
  out.vs = build_V(out.report);
  out.ws = build_W(out.report);
  out.membership = verify_membership(out.vs, out.ws, assemble_phi(out.report));
  out.auditrep = audit(out.vs, h_alpha);
  out.elapsed = seconds_since(t0);
  return out;
}

}  // namespace

int main() {
  auto t_all = Clock::now();

  // ---- 1: fixture E0, exact end-to-end reproduction -------------------------
  try {
    BPoly<Rat> curve(std::vector<UPoly<Rat>>{upoly({1, 0, -1}), UPoly<Rat>(), upoly({1})});
    BPoly<Rat> seed(std::vector<UPoly<Rat>>{upoly({0, 1}), upoly({1})});
    auto run = run_fixture(curve, seed, 1, {Rat(1), Rat(-1)}, LogValue::zero());
    BPoly<Rat> expect_f(std::vector<UPoly<Rat>>{UPoly<Rat>::constant(Rat(Int(1), Int(4))), upoly({0, -1}), upoly({1})});
    bool ok = run.report.model.f == expect_f;
    ok = ok && run.report.disc == upoly({-1, 0, 1});
    ok = ok && run.report.alphas.size() == 2 && run.report.betas.empty();
    ok = ok && run.report.delta == Rat(1);
    ok = ok && run.report.infinity.branches[0].kappa == 1 && run.report.infinity.branches[1].kappa == 0;
    ok = ok && run.report.omega == 10 && run.report.omega <= 17 && run.report.omega_bound_ok;
    ok = ok && run.membership.passed;
    for (const auto& r : run.membership.w_results) ok = ok && r.ok;
    ok = ok && run.auditrep.degree_ok && run.auditrep.max_degree <= 8;
    ok = ok && certified_le(run.auditrep.max_height, LogValue::constant(Rat(96)));
    ok = ok && run.elapsed < 1.0;
    report(1, "fixture E0 reproduced exactly (omega = 10, membership and audit pass, < 1 s)", ok);
  } catch (const std::exception& e) {
    report(1, std::string("fixture E0: ") + e.what(), false);
  }

  // ---- 2: fixture E1 ---------------------------------------------------------
  try {
    BPoly<Rat> curve(std::vector<UPoly<Rat>>{upoly({-4, 0, 5, 0, -1}), UPoly<Rat>(), upoly({1})});
    BPoly<Rat> seed(std::vector<UPoly<Rat>>{
        UPoly<Rat>(std::vector<Rat>{Rat(Int(-5), Int(2)), Rat(0), Rat(1)}), upoly({1})});
    auto run = run_fixture(curve, seed, 2, {Rat(1), Rat(-1), Rat(2), Rat(-2)}, LogValue::log_of(Rat(2)));
    BPoly<Rat> expect_f(std::vector<UPoly<Rat>>{
        UPoly<Rat>(std::vector<Rat>{Rat(Int(9), Int(16)), Rat(0), Rat(Int(5), Int(2))}),
        UPoly<Rat>(std::vector<Rat>{Rat(Int(-5), Int(2)), Rat(0), Rat(-1)}), upoly({1})});
    bool ok = run.report.model.f == expect_f;
    ok = ok && run.report.disc == upoly({4, 0, -5, 0, 1});
    ok = ok && run.report.alphas.size() == 4 && run.report.betas.empty();
    ok = ok && run.report.infinity.branches[0].kappa == 2 && run.report.infinity.branches[1].kappa == 0;
    ok = ok && run.report.omega == 15 && run.report.omega <= 29;
    ok = ok && run.membership.passed;
    ok = ok && certified_eq(height_poly(run.report.model.f), LogValue::log_of(Rat(40)));
    auto chk = theorem_check(run.report, LogValue::log_of(Rat(2)));
    ok = ok && chk.lambda_prime == int_pow(16, 41) && chk.lambda == int_pow(16, 44);
    ok = ok && chk.passed;
    ok = ok && run.elapsed < 2.0;
    report(2, "fixture E1 reproduced exactly (h(f) = log 40, bounds pass, < 2 s)", ok);
  } catch (const std::exception& e) {
    report(2, std::string("fixture E1: ") + e.what(), false);
  }

  // ---- 3: closed-form bounds --------------------------------------------------
  try {
    bool ok = lambda_main(0, 2) == int_pow(8, 24);
    ok = ok && lambda_main(0, 2) == int_pow(2, 72);
    ok = ok && lambda_prime(1, 2) == int_pow(8, 21);
    for (long m = 1; m <= 5; ++m)
      for (long n = 2; n <= 6; ++n) ok = ok && lambda_prime_dominated(m, n);
    report(3, "closed-form bounds: 8^24 = 2^72, 8^21, and the grid domination", ok);
  } catch (const std::exception& e) {
    report(3, std::string("bounds: ") + e.what(), false);
  }

  // ---- 4: height exactness -----------------------------------------------------
  try {
    ExactRng rng(20260809);
    bool ok = true;
    for (int t = 0; t < 1000 && ok; ++t) {
      int n = 1 + static_cast<int>(rng.next_u(4));
      std::vector<Rat> v;
      for (int i = 0; i < n; ++i) v.push_back(rng.rat(50, 50));
      ok = LogValue::compare(height_rational_vector(v), oracles::height_place_by_place(v)) == Cmp::Equal;
    }
    LogValue h2 = height_algebraic(upoly({-2, 0, 1}), 50);
    RatInterval e = h2.enclosure(64);
    ok = ok && e.width() < Rat(Int(1), int_pow(10, 12));
    RatInterval l2 = ln_enclosure(Rat(2), 64);
    ok = ok && e.lo <= l2.hi * Rat(Int(1), Int(2)) && l2.lo * Rat(Int(1), Int(2)) <= e.hi;
    report(4, "heights: 1000 vectors match the place-enumeration oracle; h(sqrt2) within 1e-12", ok);
  } catch (const std::exception& e) {
    report(4, std::string("height exactness: ") + e.what(), false);
  }

  // ---- 5: height inequality suites ---------------------------------------------
  try {
    SuiteReport sr = run_lemma_suites(0, 500);
    bool ok = true;
    long bound_lemmas = 0;
    for (const auto& l : sr.lemmas) {
      if (l.name.rfind("height_", 0) == 0) {
        ok = ok && l.ok && l.checked >= 450;
        ++bound_lemmas;
      }
    }
    ok = ok && bound_lemmas == 4;
    MPoly<Rat> xp1 = MPoly<Rat>::var(1, 0) + MPoly<Rat>::constant(1, Rat(1));
    auto eq = bound_product({xp1, xp1});
    ok = ok && LogValue::compare(eq.lhs, LogValue::log_of(Rat(2))) == Cmp::Equal;
    ok = ok && LogValue::compare(eq.lhs, eq.rhs) == Cmp::Equal;
    report(5, "height inequalities hold on 500 seeded instances each; equality case reproduced", ok);
  } catch (const std::exception& e) {
    report(5, std::string("lemma suites: ") + e.what(), false);
  }

  // ---- 6: series suites -----------------------------------------------------------
  try {
    ExactRng rng(99);
    bool ok = true;
    int lifts = 0;
    while (lifts < 100 && ok) {
      UPoly<Rat> p = rng.upoly(1 + static_cast<int>(rng.next_u(4)), 4, 2);
      UPoly<Rat> q = rng.upoly(1 + static_cast<int>(rng.next_u(4)), 4, 2);
      if (p == q) continue;
      BPoly<Rat> f = BPoly<Rat>(std::vector<UPoly<Rat>>{p, UPoly<Rat>::constant(Rat(-1))}) *
                     BPoly<Rat>(std::vector<UPoly<Rat>>{q, UPoly<Rat>::constant(Rat(-1))});
      long kappa = (p - q).ord0();
      long N = kappa + 5 + static_cast<long>(rng.next_u(46));
      Series<Rat> seg = Series<Rat>::from_poly(p).truncated(kappa + 1).as_exact_polynomial();
      Series<Rat> y = hensel_lift(f, seg, kappa, N);
      Series<Rat> resid = eval_bpoly(f, y);
      long o;
      bool known = resid.try_ord(o);
      ok = !known || o > N;
      Series<Rat> again = hensel_lift(f, seg, kappa, (N + kappa) / 2 + 1);
      for (long k = 0; ok && k <= (N + kappa) / 2 + 1; ++k) ok = again.coeff(k) == y.coeff(k);
      ++lifts;
    }
    int verdicts = 0;
    ExactRng rng2(101);
    while (verdicts < 100 && ok) {
      int n = 2 + static_cast<int>(rng2.next_u(2));
      std::vector<UPoly<Rat>> ps;
      for (int i = 0; i < n; ++i) ps.push_back(rng2.upoly(1 + static_cast<int>(rng2.next_u(2)), 3, 2));
      bool distinct = true;
      for (int i = 0; i < n && distinct; ++i)
        for (int j = i + 1; j < n; ++j)
          if (ps[static_cast<size_t>(i)] == ps[static_cast<size_t>(j)]) distinct = false;
      if (!distinct) continue;
      BPoly<Rat> f(std::vector<UPoly<Rat>>{UPoly<Rat>::constant(Rat(1))});
      for (const auto& p : ps)
        f = f * BPoly<Rat>(std::vector<UPoly<Rat>>{p, UPoly<Rat>::constant(Rat(-1))});
      if (n % 2 == 1) f = f.scaled(Rat(-1));
      Rat beta = rng2.rat(2, 1);
      try {
        auto sp = all_branches_at(f, beta, nullptr);
        ok = ok && sp.split && sp.sum_kappa == sp.tau && static_cast<int>(sp.branches.size()) == n;
        BPoly<Rat> ram = f * BPoly<Rat>(std::vector<UPoly<Rat>>{
                                 UPoly<Rat>(std::vector<Rat>{-beta, Rat(1)}).scaled(Rat(-1)),
                                 UPoly<Rat>(), UPoly<Rat>::constant(Rat(1))});
        ok = ok && !all_branches_at(ram, beta, nullptr).split;
        ++verdicts;
      } catch (const Error& e) {
        if (e.code() != Err::RootsOutsideField) throw;
      }
    }
    report(6, "series lifting: residuals past N <= 50, uniqueness, and 100 split/ramified verdicts", ok);
  } catch (const std::exception& e) {
    report(6, std::string("series suites: ") + e.what(), false);
  }

  // ---- 7: arithmetic-Bezout empirics and the discriminant bound -----------------
  try {
    ExactRng rng(4242);
    bool ok = true;
    int done = 0;
    while (done < 100 && ok) {
      auto line = [&]() {
        while (true) {
          Rat a = rng.rat(3, 2), b = rng.rat(3, 2), c = rng.rat(3, 2);
          if (!a.is_zero() || !b.is_zero())
            return BPoly<Rat>(std::vector<UPoly<Rat>>{UPoly<Rat>(std::vector<Rat>{c, a}), UPoly<Rat>::constant(b)});
        }
      };
      BPoly<Rat> p = line() * line();
      BPoly<Rat> q = line() * line();
      std::vector<std::pair<Rat, Rat>> sols;
      try {
        sols = solve_bivariate(p, q);
      } catch (const Error&) {
        continue;
      }
      if (sols.empty()) continue;
      LogValue h = logvalue_sup({height_poly(p), height_poly(q)});
      auto k = kps_bound({2, 2}, h, 2);
      LogValue total = LogValue::zero();
      for (const auto& [x, y] : sols) total = total + height_rational_vector({x, y});
      ok = certified_le(total, k.height_bound);
      ++done;
    }
    // Silverman on the two quadratic fields with their true discriminants.
    LogValue h2 = height_algebraic(upoly({-2, 0, 1}));
    ok = ok && certified_le(LogValue::log_of(Rat(8)).scaled(Rat(Int(1), Int(2))), silverman_bound(h2, 2));
    LogValue hphi = height_algebraic(upoly({-1, -1, 1}));
    ok = ok && certified_le(LogValue::log_of(Rat(5)).scaled(Rat(Int(1), Int(2))), silverman_bound(hphi, 2));
    report(7, "arithmetic-Bezout empirics on 100 conic pairs; Silverman on Q(sqrt2), Q(sqrt5)", ok);
  } catch (const std::exception& e) {
    report(7, std::string("KPS empirics: ") + e.what(), false);
  }

  // ---- 8: pole-branch kappa identity at infinity --------------------------------
  try {
    bool ok = true;
    {
      BPoly<Rat> e0(std::vector<UPoly<Rat>>{UPoly<Rat>::constant(Rat(Int(1), Int(4))), upoly({0, -1}), upoly({1})});
      auto rep = analyze(make_plane_model(e0, nullptr), {Rat(1), Rat(-1)});
      ok = ok && rep.pole_kappa_identity_ok;  // kappa_1 = m(n-1) + ord g_Y
      long sum = 0;
      for (const auto& b : rep.infinity.branches) sum += b.kappa;
      ok = ok && sum <= 1 * 2 + rep.disc.deg();
      auto j = io::report_json(rep);
      ok = ok && j["infinity"].contains("pole_kappa_chain_delta");
      ok = ok && j["infinity"]["pole_kappa_chain_delta"].get<long>() == 1;
    }
    {
      BPoly<Rat> e1(std::vector<UPoly<Rat>>{
          UPoly<Rat>(std::vector<Rat>{Rat(Int(9), Int(16)), Rat(0), Rat(Int(5), Int(2))}),
          UPoly<Rat>(std::vector<Rat>{Rat(Int(-5), Int(2)), Rat(0), Rat(-1)}), upoly({1})});
      auto rep = analyze(make_plane_model(e1, nullptr), {Rat(1), Rat(-1), Rat(2), Rat(-2)});
      ok = ok && rep.pole_kappa_identity_ok;
      long sum = 0;
      for (const auto& b : rep.infinity.branches) sum += b.kappa;
      ok = ok && sum <= 2 * 2 + rep.disc.deg();
      ok = ok && rep.infinity.pole_kappa_chain_delta == 2 * (2 - 1);
    }
    report(8, "pole kappa equals m(n-1) + ord g_Y on both fixtures; kappa budget holds; note recorded", ok);
  } catch (const std::exception& e) {
    report(8, std::string("infinity identity: ") + e.what(), false);
  }

  // ---- 9: determinism of the command-line verifier -------------------------------
  try {
    std::string bin = COVERCERT_BIN;
    std::string fx = std::string(COVERCERT_FIXTURES) + "/e0.json";
    std::string o1 = std::string(COVERCERT_TMPDIR) + "/det1.json";
    std::string o2 = std::string(COVERCERT_TMPDIR) + "/det2.json";
    int r1 = std::system((bin + " verify " + fx + " --json --seed 0 --out " + o1).c_str());
    int r2 = std::system((bin + " verify " + fx + " --json --seed 0 --out " + o2).c_str());
    auto slurp = [](const std::string& p) {
      std::ifstream is(p, std::ios::binary);
      std::stringstream ss;
      ss << is.rdbuf();
      return ss.str();
    };
    std::string a = slurp(o1), b = slurp(o2);
    bool ok = WEXITSTATUS(r1) == 0 && WEXITSTATUS(r2) == 0 && !a.empty() && a == b;
    double total = seconds_since(t_all);
    ok = ok && total < 60.0;
    std::ostringstream what;
    what << "verify output byte-identical across runs; acceptance wall clock " << total << " s < 60 s";
    report(9, what.str(), ok);
  } catch (const std::exception& e) {
    report(9, std::string("determinism: ") + e.what(), false);
  }

  if (failures == 0) {
    std::printf("acceptance: all criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
