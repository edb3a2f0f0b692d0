#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jacgen/bigint.hpp"
#include "jacgen/form.hpp"
#include "jacgen/sequence.hpp"

namespace jacgen {

// Dense integer polynomial, coefficients in ascending degree order.
// Canonical: no trailing zero coefficients (the zero polynomial is empty).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Int> coeffs);

  // Coefficient of x^i; zero beyond the stored degree.
  const Int& coeff(std::size_t i) const;
  // Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  friend bool operator==(const Poly&, const Poly&) = default;
  friend Poly operator+(const Poly& x, const Poly& y);

 private:
  std::vector<Int> coeffs_;
};

// Formal power series given as numerator / denominator.
struct RationalGf {
  Poly numerator;
  Poly denominator;
};

// Generating function whose power-series coefficients should be the sequence
// terms. Both families share the denominator 1 - (k-1)x - kx^2; the Lucas
// numerator is the statement that differs between the two forms (the
// paper-literal one has its coefficients transposed).
RationalGf gf_for(const SequenceParams& params, Form form);

// First `count` power-series coefficients of num/den. Requires count >= 1 and
// denominator constant term exactly 1 (so the expansion is integral and
// unambiguous).
std::vector<Int> expand(const RationalGf& gf, std::uint64_t count);

// Comparison of one form's expansion against recurrence-generated terms.
struct GfFormMatch {
  Form form;
  bool matches;
  // Set only when matches is false: lowest mismatching coefficient index and
  // the two values that disagree there.
  std::optional<std::uint64_t> first_mismatch;
  std::optional<Int> expanded;
  std::optional<Int> expected;
};

struct GfMatchReport {
  SequenceParams params;
  std::uint64_t count;
  GfFormMatch paper_literal;
  GfFormMatch corrected;
};

// Expands both forms to `count` coefficients and checks them against terms
// produced by the recurrence. Requires count >= 1.
GfMatchReport match_report(const SequenceParams& params, std::uint64_t count);

}  // namespace jacgen
