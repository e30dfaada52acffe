#ifndef COVERCERT_TEST_ORACLES_HPP
#define COVERCERT_TEST_ORACLES_HPP

// Independent oracles used by the unit and acceptance suites. These stay
// deliberately naive: the height oracle walks the places one by one with
// trial-division factorization.

#include <algorithm>
#include <vector>

#include <covercert/logvalue.hpp>
#include <covercert/rat.hpp>

namespace covercert::oracles {

inline long vp(Int n, const Int& p) {
  long v = 0;
  require(n != 0, Err::Internal, "vp of zero");
  Int q, r;
  while (true) {
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    n = q;
    ++v;
  }
  return v;
}

inline std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  mpz_abs(n.get_mpz_t(), n.get_mpz_t());
  if (n <= 1) return out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Height as the sum of local contributions: log+ max |a_i|_v over the
// archimedean place and every prime dividing a numerator or denominator.
inline LogValue height_place_by_place(const std::vector<Rat>& v) {
  Rat maxabs(0);
  for (const auto& a : v) maxabs = std::max(maxabs, a.abs());
  Rat arg = std::max(maxabs, Rat(1));
  std::vector<Int> primes;
  for (const auto& a : v) {
    if (a.is_zero()) continue;
    for (const auto& p : prime_factors(a.num())) primes.push_back(p);
    for (const auto& p : prime_factors(a.den())) primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (const auto& p : primes) {
    long minv = 1 << 20;
    for (const auto& a : v) {
      if (a.is_zero()) continue;
      minv = std::min(minv, vp(a.num(), p) - vp(a.den(), p));
    }
    if (minv < 0) arg = arg * Rat(int_pow(p, static_cast<unsigned long>(-minv)));
  }
  return LogValue::log_of(arg);
}

}  // namespace covercert::oracles

#endif
