#include "jacgen/mat2.hpp"

#include <stdexcept>
#include <utility>

namespace jacgen {

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
              x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 mat_pow(Mat2 base, std::uint64_t e) {
  Mat2 acc = Mat2::identity();
  while (e != 0) {
    if (e & 1u) acc = acc * base;
    e >>= 1;
    if (e != 0) base = base * base;  // skip the top squaring; it is the big one
  }
  return acc;
}

namespace {
void require_k(long k) {
  if (k < 2) throw std::invalid_argument("matrix parameter k must be >= 2");
}
}  // namespace

Mat2 f_matrix(long k) {
  require_k(k);
  return Mat2{Int(k) - 1, Int(k), Int(1), Int(0)};
}

Mat2 r_matrix(long k) {
  require_k(k);
  return Mat2{Int(1), Int(k), Int(1), 2 - Int(k)};
}

TermTriple f_power_terms(long k, std::uint64_t n) {
  require_k(k);
  if (n == 0)
    throw std::out_of_range("term window needs n >= 1 (no term at -1)");
  const Mat2 m = mat_pow(f_matrix(k), n);
  // Expected shape: [[J(n+1), k*J(n)], [J(n), k*J(n-1)]].
  if (m.b != k * m.c)
    throw std::logic_error("matrix power lost its shape: top-right != k * bottom-left");
  auto prev = checked_div(m.d, Int(k));
  if (!prev)
    throw std::logic_error("matrix power lost its shape: bottom-right not divisible by k");
  return TermTriple{m.a, m.c, *std::move(prev)};
}

TermTriple rf_power_lucas(long k, std::uint64_t n) {
  require_k(k);
  if (n == 0)
    throw std::out_of_range("term window needs n >= 1 (no term at -1)");
  const Mat2 m = r_matrix(k) * mat_pow(f_matrix(k), n);
  // Expected shape: (1/2) * [[j(n+1), k*j(n)], [j(n), k*j(n-1)]].
  if (m.b != k * m.c)
    throw std::logic_error("matrix product lost its shape: top-right != k * bottom-left");
  auto prev = checked_div(2 * m.d, Int(k));
  if (!prev)
    throw std::logic_error("matrix product lost its shape: bottom-right not divisible by k");
  return TermTriple{2 * m.a, 2 * m.c, *std::move(prev)};
}

bool commutes(long k) {
  const Mat2 f = f_matrix(k);
  const Mat2 r = r_matrix(k);
  return f * r == r * f;
}

}  // namespace jacgen
