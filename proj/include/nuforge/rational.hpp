#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nuforge {

/// Exact rational scalar. GMP keeps results of arithmetic in lowest terms
/// with a positive denominator; values built from a numerator/denominator
/// pair must go through make_rational.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) { return make_rational(BigInt(num), BigInt(den)); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Largest integer <= q.
inline BigInt floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// Non-negative residue of z modulo m (m > 0).
inline std::int64_t mod_floor(const BigInt& z, std::int64_t m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), BigInt(static_cast<long>(m)).get_mpz_t());
  return r.get_si();
}


}  // namespace nuforge
