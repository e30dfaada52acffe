#ifndef COVERCERT_BOUNDS_HPP
#define COVERCERT_BOUNDS_HPP

// The closed-form bounds of the main theorem and their exact evaluation on
// concrete covers: Lambda and Lambda' as exact big integers, the height
// check h(f) <= Lambda' (h+1) <= Lambda (h+1) done without floating point,
// and the degree data (nabla, Sigma) of a concrete equation system.

#include <algorithm>
#include <string>
#include <vector>

#include "covercert/error.hpp"
#include "covercert/heights.hpp"
#include "covercert/logvalue.hpp"
#include "covercert/vset.hpp"

namespace covercert {

// (2(g+1)n^2)^(10gn + 12n)
inline Int lambda_main(long genus, long n) {
  require(genus >= 0, Err::InvalidInput, "negative genus");
  require(n >= 2, Err::InvalidInput, "covering degree must be >= 2");
  Int base = 2 * (genus + 1) * n * n;
  unsigned long e = static_cast<unsigned long>(10 * genus * n + 12 * n);
  return int_pow(base, e);
}

// (2 m n^2)^(10 m n + 2 n - 3)
inline Int lambda_prime(long m, long n) {
  require(m >= 1, Err::InvalidInput, "pole order must be >= 1");
  require(n >= 2, Err::InvalidInput, "covering degree must be >= 2");
  Int base = 2 * m * n * n;
  unsigned long e = static_cast<unsigned long>(10 * m * n + 2 * n - 3);
  return int_pow(base, e);
}

// Lambda'(m, n) <= Lambda(m-1, n), the final relaxation step (m = genus+1).
inline bool lambda_prime_dominated(long m, long n) {
  return lambda_prime(m, n) <= lambda_main(m - 1, n);
}

struct MainBounds {
  Int lambda;
  Int lambda_prime;
  Int nabla_cap;  // (2 m n^2)^omega
  long omega = 0;
  long sigma_cap = 0;  // omega
};

template <class K>
MainBounds main_bounds(const CoverReport<K>& rep) {
  MainBounds b;
  long m = rep.model.m, n = rep.model.n;
  b.lambda = lambda_main(m - 1, n);
  b.lambda_prime = lambda_prime(m, n);
  b.omega = rep.omega;
  b.sigma_cap = rep.omega;
  b.nabla_cap = int_pow(Int(2 * m * n * n), static_cast<unsigned long>(rep.omega));
  return b;
}

// ---- theorem check ---------------------------------------------------------

struct CheckReport {
  bool degx_ok = false, degy_ok = false;
  LogValue h_f;
  Int lambda, lambda_prime;
  bool within_lambda_prime = false;
  bool within_lambda = false;
  bool passed = false;
};

template <class K>
LogValue model_height(const CoverReport<K>& rep);

template <>
inline LogValue model_height(const CoverReport<Rat>& rep) {
  return height_poly(rep.model.f);
}
template <>
inline LogValue model_height(const CoverReport<NFElem>& rep) {
  std::vector<NFElem> v;
  for (const auto& u : rep.model.f.ycoeffs())
    for (const auto& c : u.coeffs())
      if (!c.is_zero()) v.push_back(c);
  return height_vector_nf(v);
}

// Exact comparison h(f) <= Lambda' (h+1) and <= Lambda (h+1). The bound side
// stays a formal rational multiple of logs, so nothing astronomically large
// is ever exponentiated.
template <class K>
CheckReport theorem_check(const CoverReport<K>& rep, const LogValue& h_alpha) {
  CheckReport out;
  long m = rep.model.m, n = rep.model.n;
  out.degx_ok = rep.model.f.deg_x() == m;
  out.degy_ok = rep.model.f.deg_y() == n;
  out.lambda = lambda_main(m - 1, n);
  out.lambda_prime = lambda_prime(m, n);
  out.h_f = model_height(rep);
  LogValue hp1 = h_alpha + LogValue::constant(Rat(1));
  out.within_lambda_prime = certified_le(out.h_f, hp1.scaled(Rat(out.lambda_prime)));
  out.within_lambda = certified_le(out.h_f, hp1.scaled(Rat(out.lambda)));
  out.passed = out.degx_ok && out.degy_ok && out.within_lambda_prime && out.within_lambda;
  return out;
}

// ---- nabla / Sigma of a concrete system -------------------------------------

struct SystemKPS {
  std::vector<long> degrees;  // descending
  Int nabla;
  Rat sigma;
  KPSBound kps;
  Int nabla_cap;
  bool nabla_cap_ok = false;
  bool sigma_cap_ok = false;
};

template <class K>
SystemKPS system_nabla_sigma(const VSystem<K>& vs, int N) {
  SystemKPS out;
  for (const auto& eq : vs.equations) out.degrees.push_back(eq.poly.total_degree());
  std::sort(out.degrees.rbegin(), out.degrees.rend());
  require(static_cast<int>(out.degrees.size()) >= N, Err::TooFewEquations,
          "system has " + std::to_string(out.degrees.size()) + " equations, an isolated solution needs " +
              std::to_string(N));
  std::vector<LogValue> heights{LogValue::zero()};
  for (const auto& eq : vs.equations) heights.push_back(coeff_vector_height(eq.poly.coefficients()));
  LogValue h = logvalue_sup(heights);
  out.kps = kps_bound(out.degrees, h, N);
  out.nabla = out.kps.nabla;
  out.sigma = out.kps.sigma;
  long m = vs.atlas.m, n = vs.atlas.n;
  out.nabla_cap = int_pow(Int(2 * m * n * n), static_cast<unsigned long>(vs.atlas.omega));
  out.nabla_cap_ok = out.nabla <= out.nabla_cap;
  out.sigma_cap_ok = out.sigma <= Rat(vs.atlas.omega);
  return out;
}

// The pre-relaxation height chain: nabla Sigma (h + 12 (mn)^3) +
// 2 nabla Omega log(Omega + 1), an upper bound for h(f).
inline LogValue kps_chain_bound(const Int& nabla, const Rat& sigma, const LogValue& h_alpha, long m,
                                long n, long omega) {
  Rat mn(m * n);
  LogValue inner = h_alpha + LogValue::constant(Rat(12) * mn * mn * mn);
  return inner.scaled(Rat(nabla) * sigma) +
         LogValue::log_of(Rat(omega + 1)).scaled(Rat(nabla) * Rat(2 * omega));
}

}  // namespace covercert

#endif
