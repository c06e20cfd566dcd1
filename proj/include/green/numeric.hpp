#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace green {

using Int = mpz_class;
using Rat = mpq_class;

/// Base error type for all library failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

/// Least non-negative residue of a mod m (m > 0).
inline Int mod_nonneg(const Int& a, const Int& m) {
  if (m <= 0) throw Error("mod_nonneg: modulus must be positive");
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// True iff q = p^k for a prime p and k >= 1; fills base prime if requested.
inline bool is_prime_power(const Int& q, Int* base = nullptr) {
  if (q < 2) return false;
  Int n = q;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      if (n != 1) return false;
      if (base) *base = p;
      return true;
    }
  }
  if (base) *base = n;  // q itself prime
  return true;
}

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) {
  return v.get_den() == 1 ? v.get_num().get_str() : v.get_str();
}

}  // namespace green
