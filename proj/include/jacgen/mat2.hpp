#pragma once

#include <cstdint>

#include "jacgen/bigint.hpp"

namespace jacgen {

// Exact 2x2 integer matrix, row-major: [[a, b], [c, d]].
struct Mat2 {
  Int a, b, c, d;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  Int det() const { return a * d - b * c; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& x, const Mat2& y);
inline Mat2 mat_mul(const Mat2& x, const Mat2& y) { return x * y; }

// base^e by binary exponentiation; e == 0 gives the identity.
Mat2 mat_pow(Mat2 base, std::uint64_t e);

// Companion matrix of the recurrence: [[k-1, k], [1, 0]]. Requires k >= 2.
Mat2 f_matrix(long k);

// Companion's partner used to reach the Lucas-type family:
// [[1, k], [1, 2-k]]. Requires k >= 2.
Mat2 r_matrix(long k);

// Three consecutive terms around index n: (term n+1, term n, term n-1).
struct TermTriple {
  Int next, cur, prev;
};

// Reads the n-th power of f_matrix(k) as a window of Jacobsthal terms:
// the power equals [[J(n+1), k*J(n)], [J(n), k*J(n-1)]]. Requires n >= 1;
// the internal shape checks (top-right == k * bottom-left, exact division
// of the bottom-right by k) are asserted, not assumed.
TermTriple f_power_terms(long k, std::uint64_t n);

// Reads r_matrix(k) * f_matrix(k)^n as a window of Jacobsthal-Lucas terms:
// the product equals (1/2) * [[j(n+1), k*j(n)], [j(n), k*j(n-1)]].
// Requires n >= 1; shape checks as above.
TermTriple rf_power_lucas(long k, std::uint64_t n);

// True when f_matrix(k) and r_matrix(k) commute (they always do; the checker
// proves it per k rather than trusting the algebra).
bool commutes(long k);

}  // namespace jacgen
