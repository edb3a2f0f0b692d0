#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jacgen/bigint.hpp"
#include "jacgen/form.hpp"
#include "jacgen/sequence.hpp"

namespace jacgen {

// Every checkable statement the verifier knows about. Names ending in -J are
// about the Jacobsthal family, -Lucas about the Jacobsthal-Lucas family.
enum class IdentityId {
  CatalanJ,           // J(n-r)J(n+r) - J(n)^2         (indices n, r)
  CatalanLucas,       // j(n-r)j(n+r) - j(n)^2         (indices n, r)
  CassiniJ,           // J(n-1)J(n+1) - J(n)^2         (index n)
  CassiniLucas,       // j(n-1)j(n+1) - j(n)^2         (index n)
  DOcagneJ,           // J(m)J(n+1) - J(n)J(m+1)       (indices n, m <= n)
  DOcagneLucas,       // j(m)j(n+1) - j(n)j(m+1)       (indices n, m <= n)
  ConvolutionJ,       // J(m+n) as a bilinear combination  (indices m, n)
  ConvolutionLucas,   // j(m+n) via mixed J/j terms        (indices m, n)
  IntertermsA,        // j(n) from J(n), J(n-1)        (index n)
  IntertermsB,        // j(n-1) from J(n), J(n-1)      (index n)
  SumJ,               // closed form of sum J(0..n)    (index n)
  SumLucas,           // closed form of sum j(0..n)    (index n)
  ColumnVector,       // f_matrix(k)^n * seed column reproduces terms (index n)
  Commutation,        // f_matrix(k) and r_matrix(k) commute (no index)
};

inline constexpr std::array<IdentityId, 14> kAllIdentities = {
    IdentityId::CatalanJ,        IdentityId::CatalanLucas,
    IdentityId::CassiniJ,        IdentityId::CassiniLucas,
    IdentityId::DOcagneJ,        IdentityId::DOcagneLucas,
    IdentityId::ConvolutionJ,    IdentityId::ConvolutionLucas,
    IdentityId::IntertermsA,     IdentityId::IntertermsB,
    IdentityId::SumJ,            IdentityId::SumLucas,
    IdentityId::ColumnVector,    IdentityId::Commutation,
};

// Stable kebab-case name, e.g. "catalan-j"; used by the CLI and C API.
const char* identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(const std::string& name);

// Index names the identity sweeps over, in declaration order (e.g. {"n","r"}).
std::vector<std::string> identity_index_names(IdentityId id);

// True for identities whose paper-literal and corrected statements differ.
bool has_erratum(IdentityId id);

// One checked instance. lhs/rhs are the two sides actually compared; for
// matrix-valued identities they hold the first differing entry (or the
// leading entry when the instance passes).
struct IdentityInstance {
  IdentityId id;
  Form form;
  long k;
  std::vector<std::pair<std::string, std::uint64_t>> indices;
};

struct IdentityReport {
  IdentityInstance instance;
  bool pass;
  Int lhs;
  Int rhs;
};

// Instance checkers. Every left-hand side is built from iteration-backed
// terms and every right-hand side from closed-form-backed terms, so a pass
// also certifies cross-strategy agreement on the touched indices.
//
// Statements that are correct as printed have no separate paper-literal
// variant; their `form` argument only tags the report.
IdentityReport check_catalan_j(long k, std::uint64_t n, std::uint64_t r, Form form);
IdentityReport check_catalan_lucas(long k, std::uint64_t n, std::uint64_t r, Form form);
IdentityReport check_cassini_j(long k, std::uint64_t n, Form form = Form::Corrected);
IdentityReport check_cassini_lucas(long k, std::uint64_t n, Form form = Form::Corrected);
IdentityReport check_docagne_j(long k, std::uint64_t n, std::uint64_t m, Form form = Form::Corrected);
IdentityReport check_docagne_lucas(long k, std::uint64_t n, std::uint64_t m, Form form = Form::Corrected);
IdentityReport check_convolution_j(long k, std::uint64_t m, std::uint64_t n, Form form);
IdentityReport check_convolution_lucas(long k, std::uint64_t m, std::uint64_t n, Form form = Form::Corrected);
IdentityReport check_interterms_a(long k, std::uint64_t n, Form form = Form::Corrected);
IdentityReport check_interterms_b(long k, std::uint64_t n, Form form = Form::Corrected);
IdentityReport check_sum_j(long k, std::uint64_t n, Form form = Form::Corrected);
IdentityReport check_sum_lucas(long k, std::uint64_t n, Form form = Form::Corrected);
IdentityReport check_column_vector(long k, std::uint64_t n, Form form = Form::Corrected);
IdentityReport check_commutation(long k, Form form = Form::Corrected);

struct SweepOptions {
  long k_min = 2;
  long k_max = 2;
  std::uint64_t index_bound = 0;  // inclusive cap for unpinned indices
  // Pinning an index restricts the sweep to that value (still subject to the
  // identity's own preconditions). Pins may exceed index_bound.
  std::optional<std::uint64_t> pin_n;
  std::optional<std::uint64_t> pin_r;
  std::optional<std::uint64_t> pin_m;
};

struct SweepReport {
  IdentityId id;
  Form form;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::optional<IdentityReport> first_counterexample;
};

// Exhaustive deterministic sweep: ascending k, then indices ascending in
// declaration order. Throws std::invalid_argument for k_min < 2,
// k_min > k_max, a pin on an index the identity does not use, or an
// option set that yields zero instances.
SweepReport run_sweep(IdentityId id, Form form, const SweepOptions& opts);

// run_sweep over the cross product, reports in (id, form) argument order.
std::vector<SweepReport> sweep(const std::vector<IdentityId>& ids,
                               const std::vector<Form>& forms,
                               const SweepOptions& opts);

}  // namespace jacgen
