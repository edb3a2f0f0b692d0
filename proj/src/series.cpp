#include "jacgen/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace jacgen {

namespace {
const Int kZero = 0;
}

Poly::Poly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

Poly operator+(const Poly& x, const Poly& y) {
  std::vector<Int> sum(std::max(x.coeffs_.size(), y.coeffs_.size()));
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = x.coeff(i) + y.coeff(i);
  return Poly(std::move(sum));
}

RationalGf gf_for(const SequenceParams& params, Form form) {
  const long k = params.k();
  Poly den({Int(1), Int(1) - k, Int(-k)});  // 1 - (k-1)x - kx^2
  if (params.kind() == SequenceKind::Jacobsthal) {
    // x / (1 - (k-1)x - kx^2); correct as printed, so both forms agree.
    return RationalGf{Poly({Int(0), Int(1)}), std::move(den)};
  }
  if (form == Form::PaperLiteral) {
    // 2(x + 2 - k): constant and linear coefficients the wrong way round,
    // which is what makes this form disagree with the seeds 2, 2.
    return RationalGf{Poly({2 * (2 - Int(k)), Int(2)}), std::move(den)};
  }
  // (2 + (4-2k)x) / (1 - (k-1)x - kx^2) reproduces seeds 2, 2.
  return RationalGf{Poly({Int(2), 2 * (2 - Int(k))}), std::move(den)};
}

std::vector<Int> expand(const RationalGf& gf, std::uint64_t count) {
  if (count == 0) throw std::invalid_argument("expansion needs count >= 1");
  if (gf.denominator.coeff(0) != 1)
    throw std::invalid_argument("denominator constant term must be 1");
  const long dd = gf.denominator.degree();
  std::vector<Int> c(static_cast<std::size_t>(count));
  // c[n] = num[n] - sum_{i=1..deg(den)} den[i] * c[n-i]
  for (std::uint64_t n = 0; n < count; ++n) {
    Int acc = gf.numerator.coeff(static_cast<std::size_t>(n));
    const std::uint64_t reach = std::min<std::uint64_t>(n, dd > 0 ? dd : 0);
    for (std::uint64_t i = 1; i <= reach; ++i)
      acc -= gf.denominator.coeff(static_cast<std::size_t>(i)) * c[n - i];
    c[n] = std::move(acc);
  }
  return c;
}

namespace {
GfFormMatch match_one(const SequenceParams& params, Form form,
                      const std::vector<Int>& reference, std::uint64_t count) {
  const std::vector<Int> got = expand(gf_for(params, form), count);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (got[i] != reference[i])
      return GfFormMatch{form, false, i, got[i], reference[i]};
  }
  return GfFormMatch{form, true, std::nullopt, std::nullopt, std::nullopt};
}
}  // namespace

GfMatchReport match_report(const SequenceParams& params, std::uint64_t count) {
  if (count == 0) throw std::invalid_argument("comparison needs count >= 1");
  // Reference terms come from the recurrence, not from any series algebra,
  // so the two sides of the comparison are independent.
  const std::vector<Int> reference = terms(params, 0, count - 1);
  return GfMatchReport{params, count,
                       match_one(params, Form::PaperLiteral, reference, count),
                       match_one(params, Form::Corrected, reference, count)};
}

}  // namespace jacgen
