#ifndef COVERCERT_RAT_HPP
#define COVERCERT_RAT_HPP

// Exact rational scalar on top of GMP. Always canonical: lowest terms,
// positive denominator, zero stored as 0/1.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "covercert/error.hpp"

namespace covercert {

using Int = mpz_class;

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline unsigned long int_bitlen(const Int& a) {
  if (a == 0) return 0;
  return mpz_sizeinbase(a.get_mpz_t(), 2);
}

class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(int n) : v_(n) {}
  explicit Rat(const Int& n) : v_(n) {}
  Rat(const Int& num, const Int& den) : v_(num, den) {
    require(den != 0, Err::InvalidInput, "zero denominator");
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "p", "p/q" and decimal digit strings with optional sign.
  static Rat from_string(const std::string& s) {
    if (s.empty()) fail(Err::InvalidInput, "empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) fail(Err::InvalidInput, "bad rational literal '" + s + "'");
    q.canonicalize();
    require(q.get_den() > 0, Err::InvalidInput, "bad rational literal '" + s + "'");
    return Rat(q);
  }

  const mpq_class& mpq() const { return v_; }
  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    require(!o.is_zero(), Err::ZeroInverse, "division by zero rational");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat inv() const {
    require(!is_zero(), Err::ZeroInverse, "inverse of zero");
    return Rat(mpq_class(1 / v_));
  }

  Rat abs() const { return sign() < 0 ? -*this : *this; }

  Rat pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Rat r = Rat(int_pow(num(), static_cast<unsigned long>(e)), int_pow(den(), static_cast<unsigned long>(e)));
    return r;
  }

  std::string to_string() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
  }

 private:
  mpq_class v_;
};

// Generic scalar hooks: every exact scalar type (Rat, NFElem) provides the
// member spellings, and templated containers call these free versions.
template <class K>
bool is_zero(const K& a) { return a.is_zero(); }
template <class K>
K inv(const K& a) { return a.inv(); }
template <class K>
std::string to_string(const K& a) { return a.to_string(); }

inline bool value_less(const Rat& a, const Rat& b) { return a < b; }

// Dyadic helpers (used by interval endpoints): nearest p/2^bits below/above.
inline Rat dyadic_floor(const Rat& a, long bits) {
  Int scaled;
  mpz_class two_b = int_pow(2, static_cast<unsigned long>(bits));
  mpz_fdiv_q(scaled.get_mpz_t(), Int(a.num() * two_b).get_mpz_t(), a.den().get_mpz_t());
  return Rat(scaled, two_b);
}
inline Rat dyadic_ceil(const Rat& a, long bits) {
  Int scaled;
  mpz_class two_b = int_pow(2, static_cast<unsigned long>(bits));
  mpz_cdiv_q(scaled.get_mpz_t(), Int(a.num() * two_b).get_mpz_t(), a.den().get_mpz_t());
  return Rat(scaled, two_b);
}

}  // namespace covercert

#endif
