#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <covercert/branches.hpp>
#include <covercert/series.hpp>

#include "test_rng.hpp"

using namespace covercert;

static UPoly<Rat> upoly(std::vector<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return UPoly<Rat>(std::move(v));
}

static Series<Rat> sconst(long v) { return Series<Rat>::constant(Rat(v)); }

TEST_CASE("series windows, orders, arithmetic") {
  // X^2 + X^3 as an exact polynomial.
  Series<Rat> s = Series<Rat>::from_poly(upoly({0, 0, 1, 1}));
  CHECK(s.ord() == 2);
  CHECK(Series<Rat>::from_poly(UPoly<Rat>()).ord() == kOrdInf);

  Series<Rat> t = Series<Rat>::make(0, {Rat(0), Rat(0)}, 2);  // zero to O(X^2)
  CHECK_THROWS_AS(t.ord(), Error);
  long o;
  CHECK(!t.try_ord(o));

  Series<Rat> a = Series<Rat>::make(0, {Rat(1), Rat(2), Rat(3)}, 3);
  Series<Rat> b = Series<Rat>::make(1, {Rat(5)}, 4);
  Series<Rat> sum = a + b;
  CHECK(sum.coeff(0) == Rat(1));
  CHECK(sum.coeff(1) == Rat(7));
  CHECK(sum.prec() == 3);
  Series<Rat> prod = a * b;
  CHECK(prod.ord() == 1);
  CHECK(prod.coeff(1) == Rat(5));
  CHECK(prod.coeff(2) == Rat(10));
  CHECK(prod.prec() == 4);  // min(3+1, 4+0)

  // Laurent inverse: (X^-1 + 1)^{-1} = X - X^2 + X^3 - ...
  Series<Rat> lau = Series<Rat>::make(-1, {Rat(1), Rat(1)}, kPrecInf);
  Series<Rat> li = lau.inverse(8);
  CHECK(li.ord() == 1);
  CHECK(li.coeff(1) == Rat(1));
  CHECK(li.coeff(2) == Rat(-1));
  CHECK(li.coeff(3) == Rat(1));
  Series<Rat> check = (lau * li);
  CHECK(check.coeff(0) == Rat(1));
  CHECK(check.coeff(1) == Rat(0));
}

TEST_CASE("hensel lifting: square root of 1+X") {
  BPoly<Rat> f(std::vector<UPoly<Rat>>{upoly({-1, -1}), UPoly<Rat>(), upoly({1})});  // Y^2 - (1+X)
  Series<Rat> y = hensel_lift(f, sconst(1), 0, 3);
  CHECK(y.coeff(0) == Rat(1));
  CHECK(y.coeff(1) == Rat(Int(1), Int(2)));
  CHECK(y.coeff(2) == Rat(Int(-1), Int(8)));
  CHECK(y.coeff(3) == Rat(Int(1), Int(16)));

  // Exact polynomial root: f = Y - X from the segment X.
  BPoly<Rat> lin(std::vector<UPoly<Rat>>{upoly({0, -1}), upoly({1})});
  Series<Rat> yx = hensel_lift(lin, Series<Rat>::from_poly(upoly({0, 1})), 0, 5);
  CHECK(yx.ord() == 1);
  CHECK(yx.coeff(1) == Rat(1));

  // kappa = 1: f = Y^2 - X^2 (1+X), branch X*sqrt(1+X).
  BPoly<Rat> f2(std::vector<UPoly<Rat>>{upoly({0, 0, -1, -1}), UPoly<Rat>(), upoly({1})});
  Series<Rat> y2 = hensel_lift(f2, Series<Rat>::from_poly(upoly({0, 1})), 1, 4);
  CHECK(y2.coeff(1) == Rat(1));
  CHECK(y2.coeff(2) == Rat(Int(1), Int(2)));
  CHECK(y2.coeff(3) == Rat(Int(-1), Int(8)));
  CHECK(y2.coeff(4) == Rat(Int(1), Int(16)));

  // Hypothesis failures are reported with the broken inequality.
  CHECK_THROWS_AS(hensel_lift(f, sconst(2), 0, 3), Error);   // 2 is not a root mod X
  CHECK_THROWS_AS(hensel_lift(f2, sconst(0), 0, 3), Error);  // wrong kappa
}

TEST_CASE("hensel residual and uniqueness on constructed splits") {
  TestRng rng(555);
  for (int trial = 0; trial < 100; ++trial) {
    // f = (Y - p(X)) (Y - q(X)) with distinct random polynomial branches.
    UPoly<Rat> p = rng.upoly(2 + static_cast<int>(rng.next_u(3)), 4, 2);
    UPoly<Rat> q = rng.upoly(2 + static_cast<int>(rng.next_u(3)), 4, 2);
    if (p == q) continue;
    BPoly<Rat> bp(std::vector<UPoly<Rat>>{p, upoly({-1})});
    BPoly<Rat> bq(std::vector<UPoly<Rat>>{q, upoly({-1})});
    BPoly<Rat> f = bp * bq;  // monic: (-1)^2 Y^2 ...
    Series<Rat> branch = Series<Rat>::from_poly(p);
    // kappa along Y = p is ord of f_Y = (p - q) at the branch.
    UPoly<Rat> diff = p - q;
    long kappa = diff.ord0();
    long N = 20 + static_cast<long>(rng.next_u(31));
    if (N <= kappa) N = kappa + 5;
    Series<Rat> seg = branch.truncated(kappa + 1).as_exact_polynomial();
    Series<Rat> lifted = hensel_lift(f, seg, kappa, N);
    // Residual: ord f(X, lifted) > N.
    Series<Rat> resid = eval_bpoly(f, lifted.truncated(N + 1));
    long o = 0;
    bool known = resid.try_ord(o);
    CHECK((!known || o > N));
    // The lift recovers the designated branch exactly.
    for (long k = 0; k <= N; ++k) CHECK(lifted.coeff(k) == Series<Rat>::from_poly(p).coeff(k));
    // Uniqueness: a second lift from the same segment agrees to shared precision.
    Series<Rat> again = hensel_lift(f, seg, kappa, N / 2 + kappa);
    for (long k = 0; k <= N / 2 + kappa; ++k) CHECK(again.coeff(k) == lifted.coeff(k));
  }
}

TEST_CASE("branch kappa and segment postconditions") {
  // f = Y (Y - X): branch y = 0 has kappa = ord(-X) = 1.
  BPoly<Rat> f(std::vector<UPoly<Rat>>{UPoly<Rat>(), upoly({0, -1}), upoly({1})});
  Series<Rat> zero_branch = Series<Rat>::zero(8);
  BranchData<Rat> b = branch_kappa(f, zero_branch);
  CHECK(b.kappa == 1);
  CHECK(b.segment.window_empty());

  // f = Y^2 - (1+X): kappa = 0 along sqrt(1+X).
  BPoly<Rat> fs(std::vector<UPoly<Rat>>{upoly({-1, -1}), UPoly<Rat>(), upoly({1})});
  Series<Rat> sq = hensel_lift(fs, sconst(1), 0, 6);
  CHECK(branch_kappa(fs, sq).kappa == 0);

  // Product with engineered kappa = 2: f = (Y - X^2)(Y - 2 X^2).
  BPoly<Rat> g1(std::vector<UPoly<Rat>>{upoly({0, 0, 1}), upoly({-1})});
  BPoly<Rat> g2(std::vector<UPoly<Rat>>{upoly({0, 0, 2}), upoly({-1})});
  BPoly<Rat> fprod = g1 * g2;
  Series<Rat> br = Series<Rat>::from_poly(upoly({0, 0, 1})).truncated(8);
  CHECK(branch_kappa(fprod, br).kappa == 2);
}

TEST_CASE("separation index") {
  Series<Rat> a = Series<Rat>::make(0, {Rat(1), Rat(1)}, 2);
  Series<Rat> b = Series<Rat>::make(0, {Rat(1), Rat(2)}, 2);
  CHECK(separation_index(a, b) == 1);

  // Segments of Y(Y-X) at 0: (0) vs (X), both kappa-segments of length 1.
  Series<Rat> s0 = Series<Rat>::zero(2);
  Series<Rat> s1 = Series<Rat>::make(0, {Rat(0), Rat(1)}, 2);
  CHECK(separation_index(s0, s1) == 1);

  Series<Rat> c = Series<Rat>::make(0, {Rat(1), Rat(2), Rat(3), Rat(4), Rat(9)}, 5);
  Series<Rat> d = Series<Rat>::make(0, {Rat(1), Rat(2), Rat(3), Rat(4), Rat(7)}, 5);
  CHECK(separation_index(c, d) == 4);

  // Prefix coincidence: one window an initial segment of the other.
  Series<Rat> p1 = Series<Rat>::make(0, {Rat(1), Rat(2)}, 2);
  Series<Rat> p2 = Series<Rat>::make(0, {Rat(1), Rat(2), Rat(3)}, 3);
  CHECK_THROWS_AS(separation_index(p1, p2), Error);
}

TEST_CASE("all branches at a point: splits and verdicts") {
  // E0 at beta = 0: f(0, Y) = Y^2 + 1/4 has no rational fiber, so the
  // working field must be extended before branches can be seeded there.
  BPoly<Rat> e0(std::vector<UPoly<Rat>>{UPoly<Rat>::constant(Rat(Int(1), Int(4))), upoly({0, -1}), upoly({1})});
  CHECK_THROWS_AS(all_branches_at(e0, Rat(0), nullptr), Error);

  // E0 at a rational-fiber point beta = 5/4: f(5/4, Y) = (Y-1)(Y-1/4).
  auto sp0 = all_branches_at(e0, Rat(Int(5), Int(4)), nullptr);
  CHECK(sp0.split);
  REQUIRE(sp0.branches.size() == 2);
  CHECK(sp0.tau == 0);
  CHECK(sp0.branches[0].kappa == 0);
  CHECK(sp0.branches[1].kappa == 0);
  std::vector<Rat> consts{sp0.branches[0].branch.coeff(0), sp0.branches[1].branch.coeff(0)};
  std::sort(consts.begin(), consts.end());
  CHECK(consts[0] == Rat(Int(1), Int(4)));
  CHECK(consts[1] == Rat(1));

  // E0 at beta = 1: f(1, Y) = (Y - 1/2)^2, genuinely ramified.
  auto sp1 = all_branches_at(e0, Rat(1), nullptr);
  CHECK(!sp1.split);

  // Node: f = (Y - X)(Y - 2X) splits at 0 with kappa = (1,1), tau = 2.
  BPoly<Rat> node = BPoly<Rat>(std::vector<UPoly<Rat>>{upoly({0, 1}), upoly({-1})}) *
                    BPoly<Rat>(std::vector<UPoly<Rat>>{upoly({0, 2}), upoly({-1})});
  auto spn = all_branches_at(node, Rat(0), nullptr);
  CHECK(spn.split);
  CHECK(spn.tau == 2);
  CHECK(spn.sum_kappa == 2);
  REQUIRE(spn.branches.size() == 2);
  CHECK(spn.branches[0].kappa == 1);
  CHECK(spn.branches[1].kappa == 1);
  CHECK(separation_index(spn.branches[0].segment, spn.branches[1].segment) == 1);

  // Tangential product: f = (Y - X)(Y - X^2) splits at 0 with kappa = (1,1).
  BPoly<Rat> tangent = BPoly<Rat>(std::vector<UPoly<Rat>>{upoly({0, 1}), upoly({-1})}) *
                       BPoly<Rat>(std::vector<UPoly<Rat>>{upoly({0, 0, 1}), upoly({-1})});
  auto spt = all_branches_at(tangent, Rat(0), nullptr);
  CHECK(spt.split);
  CHECK(spt.tau == 2);
  CHECK(spt.branches[0].kappa == 1);
  CHECK(spt.branches[1].kappa == 1);

  // Square-root ramification: Y^2 - X at 0.
  BPoly<Rat> sqrtx(std::vector<UPoly<Rat>>{upoly({0, -1}), UPoly<Rat>(), upoly({1})});
  auto spr = all_branches_at(sqrtx, Rat(0), nullptr);
  CHECK(!spr.split);
  CHECK(spr.branches.empty());

  // Cusp: Y^2 - X^3 at 0.
  BPoly<Rat> cusp(std::vector<UPoly<Rat>>{upoly({0, 0, 0, -1}), UPoly<Rat>(), upoly({1})});
  CHECK(!all_branches_at(cusp, Rat(0), nullptr).split);

  // Branch data outside the field: f = Y^2 - 2 X^2 at 0 needs sqrt2.
  BPoly<Rat> irr(std::vector<UPoly<Rat>>{upoly({0, 0, -2}), UPoly<Rat>(), upoly({1})});
  CHECK_THROWS_AS(all_branches_at(irr, Rat(0), nullptr), Error);
  // Over Q(sqrt2) the same model splits.
  auto q2 = NumberField::make(upoly({-2, 0, 1}));
  std::vector<UPoly<NFElem>> ycoeffs;
  for (const auto& u : irr.ycoeffs()) {
    std::vector<NFElem> c;
    for (const auto& x : u.coeffs()) c.emplace_back(x);
    ycoeffs.emplace_back(std::move(c));
  }
  auto spq2 = all_branches_at(BPoly<NFElem>(std::move(ycoeffs)), NFElem(Rat(0)), q2);
  CHECK(spq2.split);
  CHECK(spq2.sum_kappa == spq2.tau);
}

TEST_CASE("splitting criterion on engineered products") {
  TestRng rng(606);
  int checked = 0;
  while (checked < 100) {
    // f = prod (Y - p_i(X)) for distinct random polynomials p_i.
    int n = 2 + static_cast<int>(rng.next_u(2));
    std::vector<UPoly<Rat>> ps;
    for (int i = 0; i < n; ++i) ps.push_back(rng.upoly(1 + static_cast<int>(rng.next_u(3)), 3, 2));
    bool distinct = true;
    for (int i = 0; i < n && distinct; ++i)
      for (int j = i + 1; j < n; ++j)
        if (ps[static_cast<size_t>(i)] == ps[static_cast<size_t>(j)]) { distinct = false; break; }
    if (!distinct) continue;
    BPoly<Rat> f(std::vector<UPoly<Rat>>{UPoly<Rat>::constant(Rat(1))});
    for (const auto& p : ps) f = f * BPoly<Rat>(std::vector<UPoly<Rat>>{p, upoly({-1})});
    if (n % 2 == 1) f = f.scaled(Rat(-1));  // keep monic in Y
    Rat beta = rng.rat(2, 1);
    auto sp = all_branches_at(f, beta, nullptr);
    CHECK(sp.split);
    CHECK(static_cast<int>(sp.branches.size()) == n);
    CHECK(sp.sum_kappa == sp.tau);
    // Branch set equals the constructed one.
    for (const auto& b : sp.branches) {
      bool matched = false;
      for (const auto& p : ps) {
        UPoly<Rat> shifted = p.compose_shift(beta);
        bool same = true;
        for (long k = 0; k < std::min<long>(b.branch.prec(), 6); ++k)
          if (!(b.branch.coeff(k) == Series<Rat>::from_poly(shifted).coeff(k))) { same = false; break; }
        if (same) { matched = true; break; }
      }
      CHECK(matched);
    }
    ++checked;
  }
}

TEST_CASE("engineered ramified point is detected") {
  // f = (Y^2 - X) (Y - 1): at 0 the quadratic cluster is ramified even
  // though a perfectly good rational branch y = 1 passes through.
  BPoly<Rat> f = BPoly<Rat>(std::vector<UPoly<Rat>>{upoly({0, -1}), UPoly<Rat>(), upoly({1})}) *
                 BPoly<Rat>(std::vector<UPoly<Rat>>{upoly({-1}), upoly({1})});
  auto sp = all_branches_at(f, Rat(0), nullptr);
  CHECK(!sp.split);
  CHECK(sp.branches.size() == 1);
  CHECK(sp.sum_kappa != sp.tau);
}

TEST_CASE("expansions at infinity for the quadratic fixtures") {
  // E0: f = Y^2 - XY + 1/4.
  BPoly<Rat> e0(std::vector<UPoly<Rat>>{UPoly<Rat>::constant(Rat(Int(1), Int(4))), upoly({0, -1}), upoly({1})});
  auto inf0 = expansions_at_infinity(e0, 1, 2, nullptr);
  REQUIRE(inf0.branches.size() == 2);
  CHECK(inf0.branches[0].kappa == 1);
  CHECK(inf0.branches[1].kappa == 0);
  CHECK(inf0.c_lead == Rat(1));
  CHECK(inf0.c_zero == Rat(0));
  CHECK(inf0.normalized);
  // y_1 = t^-1 - t/4 + O(t^3): check the stated window.
  CHECK(inf0.branches[0].series.coeff(-1) == Rat(1));
  CHECK(inf0.branches[0].series.coeff(0) == Rat(0));
  CHECK(inf0.branches[0].series.coeff(1) == Rat(Int(-1), Int(4)));
  // y_2 = t/4 + O(t^3).
  CHECK(inf0.branches[1].series.coeff(0) == Rat(0));
  CHECK(inf0.branches[1].series.coeff(1) == Rat(Int(1), Int(4)));
  // Chain identity: kappa_1 = m(n-1) + ord g_Y(y_1) = 1.
  CHECK(inf0.pole_kappa_chain_delta == 1 * (2 - 1));
  CHECK(inf0.kappa1_via_g == 0);

  // E1: f = Y^2 - (X^2 + 5/2) Y + (5/2) X^2 + 9/16.
  BPoly<Rat> e1(std::vector<UPoly<Rat>>{
      UPoly<Rat>(std::vector<Rat>{Rat(Int(9), Int(16)), Rat(0), Rat(Int(5), Int(2))}),
      UPoly<Rat>(std::vector<Rat>{Rat(Int(-5), Int(2)), Rat(0), Rat(-1)}), upoly({1})});
  auto inf1 = expansions_at_infinity(e1, 2, 2, nullptr);
  CHECK(inf1.branches[0].kappa == 2);
  CHECK(inf1.branches[1].kappa == 0);
  CHECK(inf1.c_lead == Rat(1));
  CHECK(inf1.c_zero == Rat(0));
  CHECK(inf1.pole_kappa_chain_delta == 2 * (2 - 1));
  // Finite branch starts at 5/2.
  CHECK(inf1.branches[1].series.coeff(0) == Rat(Int(5), Int(2)));

  // Breaking the normalization (constant shift) flips the readout flag.
  BPoly<Rat> shifted = e0.shift_y(Rat(-1));  // y -> y + 1 model
  auto infs = expansions_at_infinity(shifted, 1, 2, nullptr);
  CHECK(infs.c_lead == Rat(1));
  CHECK(infs.c_zero == Rat(1));
  CHECK(!infs.normalized);
}

TEST_CASE("order of the pole-segment residual on E0") {
  BPoly<Rat> e0(std::vector<UPoly<Rat>>{UPoly<Rat>::constant(Rat(Int(1), Int(4))), upoly({0, -1}), upoly({1})});
  auto inf = expansions_at_infinity(e0, 1, 2, nullptr);
  Series<Rat> seg = inf.branches[0].segment.as_exact_polynomial();
  // t^(m(n+1)) f(1/t, segment) vanishes to order 3 > 2 kappa = 2.
  CHECK(eval_bpoly_inv_x(e0, seg, 1 * (2 + 1)).ord() == 3);
}

TEST_CASE("infinity kappa budget on fixtures") {
  BPoly<Rat> e0(std::vector<UPoly<Rat>>{UPoly<Rat>::constant(Rat(Int(1), Int(4))), upoly({0, -1}), upoly({1})});
  auto inf0 = expansions_at_infinity(e0, 1, 2, nullptr);
  long sum = 0;
  for (const auto& b : inf0.branches) sum += b.kappa;
  long degd = discriminant_y(e0).deg();
  CHECK(sum <= 1 * 2 + degd);
}
