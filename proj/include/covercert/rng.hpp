#ifndef COVERCERT_RNG_HPP
#define COVERCERT_RNG_HPP

// Seeded generator for the randomized suites. Draws map engine output
// directly (no std distributions), so streams are identical across standard
// libraries and platforms.

#include <cstdint>
#include <random>
#include <vector>

#include "covercert/bpoly.hpp"
#include "covercert/mpoly.hpp"
#include "covercert/rat.hpp"
#include "covercert/upoly.hpp"

namespace covercert {

class ExactRng {
 public:
  explicit ExactRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u(std::uint64_t bound) { return eng_() % bound; }
  long next_i(long lo, long hi) {
    return lo + static_cast<long>(next_u(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  Rat rat(long num_bound, long den_bound) {
    long n = next_i(-num_bound, num_bound);
    long d = next_i(1, den_bound);
    return Rat(Int(n), Int(d));
  }
  Rat rat_nonzero(long num_bound, long den_bound) {
    while (true) {
      Rat r = rat(num_bound, den_bound);
      if (!r.is_zero()) return r;
    }
  }

  UPoly<Rat> upoly(int deg, long bound = 5, long den = 3) {
    std::vector<Rat> c(static_cast<size_t>(deg) + 1);
    for (auto& x : c) x = rat(bound, den);
    if (c.back().is_zero()) c.back() = Rat(1);
    return UPoly<Rat>(std::move(c));
  }

  BPoly<Rat> bpoly(int degx, int degy, long bound = 4) {
    std::vector<UPoly<Rat>> ys;
    for (int j = 0; j <= degy; ++j) {
      std::vector<Rat> c(static_cast<size_t>(degx) + 1);
      for (auto& x : c) x = rat(bound, 2);
      ys.emplace_back(std::move(c));
    }
    BPoly<Rat> p(std::move(ys));
    if (p.is_zero()) return BPoly<Rat>(std::vector<UPoly<Rat>>{UPoly<Rat>::constant(Rat(1))});
    return p;
  }

  MPoly<Rat> mpoly(int nvars, int deg, int terms, long bound = 5, long den = 2) {
    MPoly<Rat> p(nvars);
    for (int t = 0; t < terms; ++t) {
      std::vector<int> e(static_cast<size_t>(nvars), 0);
      int budget = deg;
      for (int v = 0; v < nvars && budget > 0; ++v) {
        int k = static_cast<int>(next_u(static_cast<std::uint64_t>(budget) + 1));
        e[static_cast<size_t>(v)] = k;
        budget -= k;
      }
      p.add_term(e, rat(bound, den));
    }
    if (p.is_zero()) p = MPoly<Rat>::constant(nvars, Rat(1));
    return p;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace covercert

#endif
