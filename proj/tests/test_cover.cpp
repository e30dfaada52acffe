#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <covercert/bounds.hpp>
#include <covercert/cover.hpp>

#include "test_rng.hpp"

using namespace covercert;

static UPoly<Rat> upoly(std::vector<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return UPoly<Rat>(std::move(v));
}

static BPoly<Rat> e0_curve() {  // Y0^2 - (X^2 - 1)
  return BPoly<Rat>(std::vector<UPoly<Rat>>{upoly({1, 0, -1}), UPoly<Rat>(), upoly({1})});
}
static BPoly<Rat> e1_curve() {  // Y0^2 - (X^4 - 5X^2 + 4)
  return BPoly<Rat>(std::vector<UPoly<Rat>>{upoly({-4, 0, 5, 0, -1}), UPoly<Rat>(), upoly({1})});
}
static BPoly<Rat> e0_model() {  // Y^2 - XY + 1/4
  return BPoly<Rat>(std::vector<UPoly<Rat>>{UPoly<Rat>::constant(Rat(Int(1), Int(4))), upoly({0, -1}), upoly({1})});
}
static BPoly<Rat> e1_model() {  // Y^2 - (X^2 + 5/2) Y + (5/2) X^2 + 9/16
  return BPoly<Rat>(std::vector<UPoly<Rat>>{
      UPoly<Rat>(std::vector<Rat>{Rat(Int(9), Int(16)), Rat(0), Rat(Int(5), Int(2))}),
      UPoly<Rat>(std::vector<Rat>{Rat(Int(-5), Int(2)), Rat(0), Rat(-1)}), upoly({1})});
}

TEST_CASE("normalize_at_infinity on the hyperelliptic fixtures") {
  // E0 seed u = y0 + x.
  BPoly<Rat> u0(std::vector<UPoly<Rat>>{upoly({0, 1}), upoly({1})});
  auto n0 = normalize_at_infinity(e0_curve(), 1, u0, nullptr);
  CHECK(n0.pole_order == 1);
  CHECK(n0.c_lead == Rat(2));
  CHECK(n0.c_zero == Rat(0));
  // y_expr = (y0 + x)/2
  CHECK(n0.y_expr.coeff(1, 0) == Rat(Int(1), Int(2)));
  CHECK(n0.y_expr.coeff(0, 1) == Rat(Int(1), Int(2)));

  // E1 seed u = y0 + x^2 - 5/2.
  BPoly<Rat> u1(std::vector<UPoly<Rat>>{upoly({0, 0, 1}) + UPoly<Rat>::constant(Rat(Int(-5), Int(2))), upoly({1})});
  auto n1 = normalize_at_infinity(e1_curve(), 2, u1, nullptr);
  CHECK(n1.pole_order == 2);
  CHECK(n1.c_lead == Rat(2));
  CHECK(n1.c_zero == Rat(-5));
  // y_expr = (y0 + x^2)/2 + 5/4
  CHECK(n1.y_expr.coeff(0, 1) == Rat(Int(1), Int(2)));
  CHECK(n1.y_expr.coeff(2, 0) == Rat(Int(1), Int(2)));
  CHECK(n1.y_expr.coeff(0, 0) == Rat(Int(5), Int(4)));

  // Wrong declared pole order.
  CHECK_THROWS_AS(normalize_at_infinity(e0_curve(), 2, u0, nullptr), Error);
  // Seed without a pole: u = y0 - x has its pole on the other branch only;
  // u = 0*y0 + 1 has none at all.
  BPoly<Rat> flat(std::vector<UPoly<Rat>>{upoly({1})});
  CHECK_THROWS_AS(normalize_at_infinity(e0_curve(), 1, flat, nullptr), Error);
  // Seed with poles on both branches: u = y0 + x^2 on E1 keeps a pole on
  // each sheet (x^2 dominates only one cancellation).
  BPoly<Rat> both(std::vector<UPoly<Rat>>{upoly({0, 1}), UPoly<Rat>()});  // u = x
  CHECK_THROWS_AS(normalize_at_infinity(e0_curve(), 1, both, nullptr), Error);
}

TEST_CASE("eliminate produces the canonical fixture models") {
  // E0: Res_{Y0}(Y0^2 - (X^2-1), Y - (Y0 + X)/2) = Y^2 - XY + 1/4.
  BPoly<Rat> yexpr0(std::vector<UPoly<Rat>>{upoly({0, 1}).scaled(Rat(Int(1), Int(2))),
                                            UPoly<Rat>::constant(Rat(Int(1), Int(2)))});
  auto el0 = eliminate(e0_curve(), yexpr0);
  CHECK(el0.f == e0_model());
  CHECK(el0.m == 1);
  CHECK(el0.n == 2);

  BPoly<Rat> yexpr1(std::vector<UPoly<Rat>>{
      UPoly<Rat>(std::vector<Rat>{Rat(Int(5), Int(4)), Rat(0), Rat(Int(1), Int(2))}),
      UPoly<Rat>::constant(Rat(Int(1), Int(2)))});
  auto el1 = eliminate(e1_curve(), yexpr1);
  CHECK(el1.f == e1_model());
  CHECK(el1.m == 2);
  CHECK(el1.n == 2);

  // Identity expression returns the (monicized) input curve.
  BPoly<Rat> idexpr(std::vector<UPoly<Rat>>{UPoly<Rat>(), upoly({1})});
  auto elid = eliminate(e0_curve(), idexpr);
  CHECK(elid.f == e0_curve());

  // A Y0-free expression generates a proper subfield.
  BPoly<Rat> degenerate(std::vector<UPoly<Rat>>{upoly({0, 1})});  // y = x
  CHECK_THROWS_AS(eliminate(e0_curve(), degenerate), Error);
  try {
    eliminate(e0_curve(), degenerate);
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotSquarefreeAfterReduction);
  }
}

TEST_CASE("analyze the E0 model") {
  auto model = make_plane_model(e0_model(), nullptr);
  auto rep = analyze(model, {Rat(1), Rat(-1)});
  CHECK(rep.disc == upoly({-1, 0, 1}));
  CHECK(rep.delta == Rat(1));
  REQUIRE(rep.alphas.size() == 2);
  CHECK(rep.alphas[0].second == 1);
  CHECK(rep.alphas[1].second == 1);
  CHECK(rep.betas.empty());
  REQUIRE(rep.infinity.branches.size() == 2);
  CHECK(rep.infinity.branches[0].kappa == 1);
  CHECK(rep.infinity.branches[1].kappa == 0);
  CHECK(rep.omega == 10);
  CHECK(rep.omega <= 10 * 1 * 2 + 2 * 2 - 8 * 1 + 1);  // 17
  CHECK(rep.finite_segment_budget_ok);
  CHECK(rep.infinity_kappa_budget_ok);
  CHECK(rep.infinity_segment_budget_ok);
  CHECK(rep.omega_bound_ok);
  CHECK(rep.root_count_bound_ok);
  CHECK(rep.pole_kappa_identity_ok);
  CHECK(rep.lambda_inf.empty());

  auto phi = assemble_phi(rep);
  CHECK(phi.omega == 10);
  CHECK(phi.theta[1][1] == Rat(-1));
  CHECK(phi.theta[0][0] == Rat(Int(1), Int(4)));
  CHECK(phi.delta == Rat(1));
  REQUIRE(phi.gamma_inf.size() == 2);
  CHECK(phi.gamma_inf[0][0] == Rat(1));  // leading coefficient of the pole branch
  CHECK(phi.gamma_inf[0][1] == Rat(0));  // constant term is normalized away

  // Declaring only one branch point leaves a genuinely ramified extra root.
  CHECK_THROWS_AS(analyze(model, {Rat(1)}), Error);
  try {
    analyze(model, {Rat(1)});
  } catch (const Error& e) {
    CHECK(e.code() == Err::RamifiedAtDeclaredBeta);
  }
  // Declaring a point that is not a discriminant root is rejected.
  CHECK_THROWS_AS(analyze(model, {Rat(1), Rat(-1), Rat(7)}), Error);
}

TEST_CASE("analyze the E1 model") {
  auto model = make_plane_model(e1_model(), nullptr);
  auto rep = analyze(model, {Rat(1), Rat(-1), Rat(2), Rat(-2)});
  CHECK(rep.disc == upoly({4, 0, -5, 0, 1}));
  CHECK(rep.delta == Rat(1));
  CHECK(rep.alphas.size() == 4);
  CHECK(rep.betas.empty());
  CHECK(rep.infinity.branches[0].kappa == 2);
  CHECK(rep.infinity.branches[1].kappa == 0);
  CHECK(rep.omega == 15);
  CHECK(rep.omega <= 29);
  CHECK(rep.pole_kappa_identity_ok);
  auto phi = assemble_phi(rep);
  CHECK(phi.omega == 15);
}

TEST_CASE("analyze a model with extra unramified discriminant roots") {
  // f = (Y - X^2)(Y - 1)(Y - 4): one pole sheet of order 2 over infinity
  // (already normalized) and two constant sheets. The sheets cross
  // transversally over +-1 and +-2, so the discriminant has four roots,
  // none of them a branch point.
  BPoly<Rat> f = BPoly<Rat>(std::vector<UPoly<Rat>>{upoly({0, 0, 1}), upoly({-1})}) *
                 BPoly<Rat>(std::vector<UPoly<Rat>>{upoly({1}), upoly({-1})}) *
                 BPoly<Rat>(std::vector<UPoly<Rat>>{upoly({-4}), upoly({1})});
  auto model = make_plane_model(f, nullptr);
  CHECK(model.m == 2);
  CHECK(model.n == 3);
  auto rep = analyze(model, {});
  CHECK(rep.alphas.empty());
  CHECK(rep.betas.size() == 4);
  CHECK(rep.infinity.normalized);
  CHECK(rep.infinity.branches[0].kappa == 2);
  for (const auto& tab : rep.betas) {
    CHECK(tab.tau == 2);
    CHECK(tab.ell == 2);
    long sum = 0;
    for (const auto& b : tab.branches) sum += b.kappa;
    CHECK(sum == tab.tau);
    REQUIRE(tab.lambda.size() == 1);
    CHECK(tab.lambda[0][2] <= std::min(tab.branches[0].kappa, tab.branches[1].kappa));
  }
  // Reconstruction: delta prod (X - beta)^tau equals d exactly.
  UPoly<Rat> recon = UPoly<Rat>::constant(rep.delta);
  for (const auto& tab : rep.betas) {
    UPoly<Rat> lin(std::vector<Rat>{-tab.beta, Rat(1)});
    recon = recon * lin.pow(tab.tau);
  }
  CHECK(recon == rep.disc);
  auto phi = assemble_phi(rep);
  CHECK(phi.omega == rep.omega);
}

TEST_CASE("find_rho") {
  CHECK(find_rho<Rat>({Rat(0)}, 1) == 1);
  CHECK(find_rho<Rat>({Rat(1), Rat(-1), Rat(2)}, 2) == 0);
  // Exhaustive-scan cross-check on a crowded bad set.
  std::vector<Rat> bad;
  for (long v = -8; v <= 8; ++v)
    if (v != -7) bad.emplace_back(v);
  CHECK(find_rho<Rat>(bad, 2) == -7);
  std::vector<Rat> all;
  for (long v = -1; v <= 1; ++v) all.emplace_back(v);
  CHECK_THROWS_AS(find_rho<Rat>(all, 1), Error);
}

TEST_CASE("general case transform") {
  // rho = 1 on g = Y - X reproduces the rho-transform example.
  BPoly<Rat> g(std::vector<UPoly<Rat>>{upoly({0, -1}), upoly({1})});
  auto out = general_case_transform<Rat>(g, 1, {Rat(0)}, {});
  CHECK(out.rho == 1);
  CHECK(out.shifted_model.coeff(1, 1) == Rat(1));
  CHECK(out.shifted_model.coeff(0, 1) == Rat(-1));
  CHECK(out.shifted_model.coeff(0, 0) == Rat(-1));
  REQUIRE(out.shifted_alphas.size() == 1);
  CHECK(out.shifted_alphas[0] == Rat(-1));  // (0 - 1)^{-1}
  CHECK(certified_le(out.h_shifted, out.h_bound));

  // Pure inversion (rho = 0): h((alpha)^{-1}) = h(alpha) exactly.
  auto inv0 = general_case_transform<Rat>(g, 1, {Rat(2)}, {});
  CHECK(inv0.rho == 0);
  CHECK(certified_eq(inv0.h_shifted, LogValue::log_of(Rat(2))));

  // E0 branch points {1,-1} with 0,1,-1 all bad and pole order 2: rho = 2,
  // shifted points {-1, -1/3}, shifted height log 3 <= log 2 + 3 log 4.
  auto e0 = general_case_transform<Rat>(e0_model(), 2, {Rat(1), Rat(-1)}, {Rat(0)});
  CHECK(e0.rho == 2);
  REQUIRE(e0.shifted_alphas.size() == 2);
  CHECK(e0.shifted_alphas[0] == Rat(-1));
  CHECK(e0.shifted_alphas[1] == Rat(Int(-1), Int(3)));
  CHECK(e0.h_bound.is_exact());
  CHECK(certified_le(e0.h_shifted, e0.h_bound));
  CHECK(certified_eq(e0.h_shifted, LogValue::log_of(Rat(3))));
  // h = max h(+-1) = 0, so the certified bound is 3 log(2m) = log 64.
  CHECK(certified_eq(e0.h_bound, LogValue::log_of(Rat(4)).scaled(Rat(3))));
}

TEST_CASE("chained pipeline: curve to report") {
  BPoly<Rat> u0(std::vector<UPoly<Rat>>{upoly({0, 1}), upoly({1})});
  auto n0 = normalize_at_infinity(e0_curve(), 1, u0, nullptr);
  auto el = eliminate(e0_curve(), n0.y_expr);
  CHECK(el.f == e0_model());
  auto rep = analyze(make_plane_model(el.f, nullptr), {Rat(1), Rat(-1)});
  CHECK(rep.omega == 10);
  CHECK(rep.infinity.normalized);

  auto chk = theorem_check(rep, LogValue::log_of(Rat(2)));
  CHECK(chk.degx_ok);
  CHECK(chk.degy_ok);
  CHECK(chk.within_lambda_prime);
  CHECK(chk.within_lambda);
  CHECK(chk.passed);
}

TEST_CASE("discriminant reconstruction with declared points") {
  auto model = make_plane_model(e1_model(), nullptr);
  auto rep = analyze(model, {Rat(1), Rat(-1), Rat(2), Rat(-2)});
  UPoly<Rat> recon = UPoly<Rat>::constant(rep.delta);
  long total = 0;
  for (const auto& [a, sigma] : rep.alphas) {
    UPoly<Rat> lin(std::vector<Rat>{-a, Rat(1)});
    recon = recon * lin.pow(sigma);
    total += sigma;
  }
  for (const auto& tab : rep.betas) {
    UPoly<Rat> lin(std::vector<Rat>{-tab.beta, Rat(1)});
    recon = recon * lin.pow(tab.tau);
    total += tab.tau;
  }
  CHECK(recon == rep.disc);
  CHECK(total == rep.disc.deg());
}

TEST_CASE("irrational discriminant roots over Q are a hard error") {
  // Y^2 - XY + 1/3: d = X^2 - 4/3 has no rational roots.
  BPoly<Rat> f(std::vector<UPoly<Rat>>{UPoly<Rat>::constant(Rat(Int(1), Int(3))), upoly({0, -1}), upoly({1})});
  auto model = make_plane_model(f, nullptr);
  CHECK_THROWS_AS(analyze(model, {}), Error);
  try {
    analyze(model, {});
  } catch (const Error& e) {
    CHECK(e.code() == Err::UnclassifiedDiscriminantRoot);
  }
}

TEST_CASE("ramified cover over infinity is rejected") {
  // Y^2 - X: the two sheets merge over infinity.
  BPoly<Rat> f(std::vector<UPoly<Rat>>{upoly({0, -1}), UPoly<Rat>(), upoly({1})});
  CHECK_THROWS_AS(expansions_at_infinity(f, 1, 2, nullptr), Error);
  try {
    expansions_at_infinity(f, 1, 2, nullptr);
  } catch (const Error& e) {
    CHECK(e.code() == Err::RamifiedAtInfinity);
  }
}
