#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace jacgen {

// Unbounded exact signed integer. GMP does the heavy lifting; everything in
// this library stays in exact integer arithmetic, no floating point anywhere.
using Int = mpz_class;

static_assert(sizeof(long) == sizeof(std::int64_t),
              "LP64 assumed: indices and parameters ride in 64-bit longs");

// base^exp for machine-word base >= 0.
inline Int pow_ui(unsigned long base, unsigned long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

// (-1)^n without powering.
inline int parity_sign(std::uint64_t n) { return (n & 1u) ? -1 : 1; }

// Quotient when den divides num exactly, nullopt otherwise (or when den == 0).
inline std::optional<Int> checked_div(const Int& num, const Int& den) {
  if (den == 0) return std::nullopt;
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) return std::nullopt;
  return q;
}

// Decimal digit count, sign excluded; zero has one digit.
inline std::size_t decimal_digits(const Int& v) {
  if (v == 0) return 1;
  return v.get_str().size() - (v < 0 ? 1 : 0);
}

}  // namespace jacgen
