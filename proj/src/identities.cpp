#include "jacgen/identities.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "jacgen/mat2.hpp"

namespace jacgen {

namespace {

using u64 = std::uint64_t;
using Indices = std::vector<std::pair<std::string, u64>>;

// Term access split by side: left-hand sides walk the recurrence, right-hand
// sides use the closed form, so every passing instance doubles as a
// cross-strategy consistency check.
struct Ctx {
  long k;
  SequenceParams pj;
  SequenceParams pl;

  explicit Ctx(long k_)
      : k(k_),
        pj(SequenceKind::Jacobsthal, k_),
        pl(SequenceKind::JacobsthalLucas, k_) {}

  Int lJ(u64 n) const { return eval_iter(pj, n); }
  Int lj(u64 n) const { return eval_iter(pl, n); }
  Int rJ(u64 n) const { return eval_binet(pj, n); }
  Int rj(u64 n) const { return eval_binet(pl, n); }
};

Int k_pow(long k, u64 e) { return pow_ui(static_cast<unsigned long>(k), e); }

IdentityReport make(IdentityId id, Form form, long k, Indices idx, Int lhs,
                    Int rhs) {
  const bool pass = lhs == rhs;
  return IdentityReport{IdentityInstance{id, form, k, std::move(idx)}, pass,
                        std::move(lhs), std::move(rhs)};
}

void require_offset(u64 n, u64 r) {
  if (r > n) throw std::out_of_range("offset r must satisfy r <= n");
}

void require_ge(u64 value, u64 lo, const char* what) {
  if (value < lo) throw std::out_of_range(what);
}

}  // namespace

const char* identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::CatalanJ: return "catalan-j";
    case IdentityId::CatalanLucas: return "catalan-lucas";
    case IdentityId::CassiniJ: return "cassini-j";
    case IdentityId::CassiniLucas: return "cassini-lucas";
    case IdentityId::DOcagneJ: return "docagne-j";
    case IdentityId::DOcagneLucas: return "docagne-lucas";
    case IdentityId::ConvolutionJ: return "convolution-j";
    case IdentityId::ConvolutionLucas: return "convolution-lucas";
    case IdentityId::IntertermsA: return "interterms-a";
    case IdentityId::IntertermsB: return "interterms-b";
    case IdentityId::SumJ: return "sum-j";
    case IdentityId::SumLucas: return "sum-lucas";
    case IdentityId::ColumnVector: return "column-vector";
    case IdentityId::Commutation: return "commutation";
  }
  throw std::invalid_argument("identity id out of range");
}

std::optional<IdentityId> identity_from_name(const std::string& name) {
  for (IdentityId id : kAllIdentities)
    if (name == identity_name(id)) return id;
  return std::nullopt;
}

std::vector<std::string> identity_index_names(IdentityId id) {
  switch (id) {
    case IdentityId::CatalanJ:
    case IdentityId::CatalanLucas: return {"n", "r"};
    case IdentityId::DOcagneJ:
    case IdentityId::DOcagneLucas: return {"n", "m"};
    case IdentityId::ConvolutionJ:
    case IdentityId::ConvolutionLucas: return {"m", "n"};
    case IdentityId::Commutation: return {};
    default: return {"n"};
  }
}

bool has_erratum(IdentityId id) {
  return id == IdentityId::CatalanJ || id == IdentityId::CatalanLucas ||
         id == IdentityId::ConvolutionJ;
}

IdentityReport check_catalan_j(long k, u64 n, u64 r, Form form) {
  require_offset(n, r);
  const Ctx c(k);
  Int lhs = c.lJ(n + r) * c.lJ(n - r) - c.lJ(n) * c.lJ(n);
  // sign * k^(n-r) * J(r)^2; the printed sign is (-1)^(n-r), the confirmed
  // one is its negation.
  const Int jr = c.rJ(r);
  int sign = parity_sign(n - r);
  if (form == Form::Corrected) sign = -sign;
  Int rhs = sign * k_pow(k, n - r) * jr * jr;
  return make(IdentityId::CatalanJ, form, k, {{"n", n}, {"r", r}},
              std::move(lhs), std::move(rhs));
}

IdentityReport check_catalan_lucas(long k, u64 n, u64 r, Form form) {
  require_offset(n, r);
  const Ctx c(k);
  Int lhs = c.lj(n + r) * c.lj(n - r) - c.lj(n) * c.lj(n);
  // 8 * (-1)^(n-r) * k^e * (k-1) * J(r)^2; printed e = n, confirmed e = n-r.
  const u64 e = (form == Form::PaperLiteral) ? n : n - r;
  const Int jr = c.rJ(r);
  Int rhs = 8 * parity_sign(n - r) * k_pow(k, e) * (Int(k) - 1) * jr * jr;
  return make(IdentityId::CatalanLucas, form, k, {{"n", n}, {"r", r}},
              std::move(lhs), std::move(rhs));
}

IdentityReport check_cassini_j(long k, u64 n, Form form) {
  require_ge(n, 1, "cassini needs n >= 1");
  const Ctx c(k);
  Int lhs = c.lJ(n + 1) * c.lJ(n - 1) - c.lJ(n) * c.lJ(n);
  Int rhs = parity_sign(n) * k_pow(k, n - 1);
  return make(IdentityId::CassiniJ, form, k, {{"n", n}}, std::move(lhs),
              std::move(rhs));
}

IdentityReport check_cassini_lucas(long k, u64 n, Form form) {
  require_ge(n, 1, "cassini needs n >= 1");
  const Ctx c(k);
  Int lhs = c.lj(n + 1) * c.lj(n - 1) - c.lj(n) * c.lj(n);
  Int rhs = 8 * parity_sign(n) * k_pow(k, n - 1) * (1 - Int(k));
  return make(IdentityId::CassiniLucas, form, k, {{"n", n}}, std::move(lhs),
              std::move(rhs));
}

IdentityReport check_docagne_j(long k, u64 n, u64 m, Form form) {
  if (m > n) throw std::out_of_range("docagne needs m <= n");
  const Ctx c(k);
  Int lhs = c.lJ(n) * c.lJ(m + 1) - c.lJ(n + 1) * c.lJ(m);
  Int rhs = parity_sign(m) * k_pow(k, m) * c.rJ(n - m);
  return make(IdentityId::DOcagneJ, form, k, {{"n", n}, {"m", m}},
              std::move(lhs), std::move(rhs));
}

IdentityReport check_docagne_lucas(long k, u64 n, u64 m, Form form) {
  if (m > n) throw std::out_of_range("docagne needs m <= n");
  const Ctx c(k);
  Int lhs = c.lj(n) * c.lj(m + 1) - c.lj(n + 1) * c.lj(m);
  Int rhs = 8 * parity_sign(m) * (1 - Int(k)) * k_pow(k, m) * c.rJ(n - m);
  return make(IdentityId::DOcagneLucas, form, k, {{"n", n}, {"m", m}},
              std::move(lhs), std::move(rhs));
}

IdentityReport check_convolution_j(long k, u64 m, u64 n, Form form) {
  require_ge(m, 1, "convolution needs m >= 1");
  require_ge(n, 1, "convolution needs n >= 1");
  const Ctx c(k);
  Int lhs = c.lJ(m + n);
  // J(m)J(n+1) + k * J(m-1) * J(last); printed last = n-1, confirmed last = n.
  const u64 last = (form == Form::PaperLiteral) ? n - 1 : n;
  Int rhs = c.rJ(m) * c.rJ(n + 1) + k * c.rJ(m - 1) * c.rJ(last);
  return make(IdentityId::ConvolutionJ, form, k, {{"m", m}, {"n", n}},
              std::move(lhs), std::move(rhs));
}

IdentityReport check_convolution_lucas(long k, u64 m, u64 n, Form form) {
  require_ge(m, 1, "convolution needs m >= 1");
  const Ctx c(k);
  Int lhs = c.lj(m + n);
  Int rhs = c.rj(m) * c.rJ(n + 1) + k * c.rj(m - 1) * c.rJ(n);
  return make(IdentityId::ConvolutionLucas, form, k, {{"m", m}, {"n", n}},
              std::move(lhs), std::move(rhs));
}

IdentityReport check_interterms_a(long k, u64 n, Form form) {
  require_ge(n, 1, "interterms needs n >= 1");
  const Ctx c(k);
  Int lhs = c.lj(n);
  Int rhs = 2 * (c.rJ(n) + k * c.rJ(n - 1));
  return make(IdentityId::IntertermsA, form, k, {{"n", n}}, std::move(lhs),
              std::move(rhs));
}

IdentityReport check_interterms_b(long k, u64 n, Form form) {
  require_ge(n, 1, "interterms needs n >= 1");
  const Ctx c(k);
  Int lhs = c.lj(n - 1);
  Int rhs = 2 * (c.rJ(n) + (2 - Int(k)) * c.rJ(n - 1));
  return make(IdentityId::IntertermsB, form, k, {{"n", n}}, std::move(lhs),
              std::move(rhs));
}

namespace {

// Shared tail of the two sum checks: closed forms divide by 2(k-1), and a
// nonzero remainder must surface as a failing report, never as a crash.
IdentityReport sum_report(IdentityId id, Form form, long k, u64 n, Int lhs,
                          const Int& numerator) {
  const Int den = 2 * (Int(k) - 1);
  bool inexact = false;
  Int rhs;
  if (auto q = checked_div(numerator, den)) {
    rhs = *std::move(q);
  } else {
    inexact = true;
    mpz_tdiv_q(rhs.get_mpz_t(), numerator.get_mpz_t(), den.get_mpz_t());
  }
  IdentityReport rep = make(id, form, k, {{"n", n}}, std::move(lhs), std::move(rhs));
  if (inexact) rep.pass = false;
  return rep;
}

}  // namespace

IdentityReport check_sum_j(long k, u64 n, Form form) {
  const Ctx c(k);
  Int lhs = prefix_sum(c.pj, n);
  Int num = k * c.rJ(n) + c.rJ(n + 1) - 1;
  return sum_report(IdentityId::SumJ, form, k, n, std::move(lhs), num);
}

IdentityReport check_sum_lucas(long k, u64 n, Form form) {
  const Ctx c(k);
  Int lhs = prefix_sum(c.pl, n);
  Int num = k * c.rj(n) + c.rj(n + 1) + 2 * (Int(k) - 3);
  return sum_report(IdentityId::SumLucas, form, k, n, std::move(lhs), num);
}

IdentityReport check_column_vector(long k, u64 n, Form form) {
  require_ge(n, 1, "column step needs n >= 1");
  const Ctx c(k);
  const Mat2 f = f_matrix(k);
  // f * (j(n), j(n-1))^T should advance the column to (j(n+1), j(n))^T.
  const Int jn = c.lj(n), jn1 = c.lj(n - 1);
  Int l0 = f.a * jn + f.b * jn1;
  Int l1 = f.c * jn + f.d * jn1;
  Int r0 = c.rj(n + 1);
  Int r1 = c.rj(n);
  if (l0 != r0)
    return make(IdentityId::ColumnVector, form, k, {{"n", n}}, std::move(l0),
                std::move(r0));
  if (l1 != r1)
    return make(IdentityId::ColumnVector, form, k, {{"n", n}}, std::move(l1),
                std::move(r1));
  return make(IdentityId::ColumnVector, form, k, {{"n", n}}, std::move(l0),
              std::move(r0));
}

IdentityReport check_commutation(long k, Form form) {
  const Mat2 lhs = f_matrix(k) * r_matrix(k);
  const Mat2 rhs = r_matrix(k) * f_matrix(k);
  const Int* l[] = {&lhs.a, &lhs.b, &lhs.c, &lhs.d};
  const Int* r[] = {&rhs.a, &rhs.b, &rhs.c, &rhs.d};
  for (int i = 0; i < 4; ++i)
    if (*l[i] != *r[i])
      return make(IdentityId::Commutation, form, k, {}, *l[i], *r[i]);
  return make(IdentityId::Commutation, form, k, {}, lhs.a, rhs.a);
}

namespace {

void require_no_pin(const std::optional<u64>& pin, const char* which) {
  if (pin)
    throw std::invalid_argument(std::string("identity has no index ") + which);
}

}  // namespace

SweepReport run_sweep(IdentityId id, Form form, const SweepOptions& opts) {
  if (opts.k_min < 2) throw std::invalid_argument("sweep needs k_min >= 2");
  if (opts.k_min > opts.k_max)
    throw std::invalid_argument("sweep k range is empty");

  const auto names = identity_index_names(id);
  auto uses = [&](const char* ix) {
    return std::find(names.begin(), names.end(), ix) != names.end();
  };
  if (!uses("n")) require_no_pin(opts.pin_n, "n");
  if (!uses("r")) require_no_pin(opts.pin_r, "r");
  if (!uses("m")) require_no_pin(opts.pin_m, "m");

  SweepReport rep{id, form, 0, 0, std::nullopt};
  auto consider = [&rep](IdentityReport r) {
    ++rep.checks;
    if (!r.pass) {
      if (rep.failures == 0) rep.first_counterexample = std::move(r);
      ++rep.failures;
    }
  };

  const u64 bound = opts.index_bound;
  for (long k = opts.k_min; k <= opts.k_max; ++k) {
    switch (id) {
      case IdentityId::CatalanJ:
      case IdentityId::CatalanLucas: {
        auto chk = (id == IdentityId::CatalanJ) ? check_catalan_j
                                                : check_catalan_lucas;
        // Default grid keeps the lowest touched index at n - r >= 2, the
        // bound the printed quadratic identities carry; pins may step
        // outside it (only r <= n is required then).
        if (opts.pin_n && opts.pin_r) {
          if (*opts.pin_r <= *opts.pin_n)
            consider(chk(k, *opts.pin_n, *opts.pin_r, form));
        } else if (opts.pin_n) {
          const u64 n = *opts.pin_n;
          for (u64 r = 0; r + 2 <= n; ++r) consider(chk(k, n, r, form));
        } else if (opts.pin_r) {
          const u64 r = *opts.pin_r;
          for (u64 n = std::max<u64>(2, r + 2); n <= bound; ++n)
            consider(chk(k, n, r, form));
        } else {
          for (u64 n = 2; n <= bound; ++n)
            for (u64 r = 0; r + 2 <= n; ++r) consider(chk(k, n, r, form));
        }
        break;
      }
      case IdentityId::CassiniJ:
      case IdentityId::CassiniLucas:
      case IdentityId::IntertermsA:
      case IdentityId::IntertermsB:
      case IdentityId::SumJ:
      case IdentityId::SumLucas:
      case IdentityId::ColumnVector: {
        IdentityReport (*chk)(long, u64, Form) = nullptr;
        u64 lo = 1;
        switch (id) {
          case IdentityId::CassiniJ: chk = check_cassini_j; break;
          case IdentityId::CassiniLucas: chk = check_cassini_lucas; break;
          case IdentityId::IntertermsA: chk = check_interterms_a; break;
          case IdentityId::IntertermsB: chk = check_interterms_b; break;
          case IdentityId::SumJ: chk = check_sum_j; lo = 0; break;
          case IdentityId::SumLucas: chk = check_sum_lucas; lo = 0; break;
          default: chk = check_column_vector; break;
        }
        if (opts.pin_n) {
          if (*opts.pin_n >= lo) consider(chk(k, *opts.pin_n, form));
        } else {
          for (u64 n = lo; n <= bound; ++n) consider(chk(k, n, form));
        }
        break;
      }
      case IdentityId::DOcagneJ:
      case IdentityId::DOcagneLucas: {
        auto chk = (id == IdentityId::DOcagneJ) ? check_docagne_j
                                                : check_docagne_lucas;
        if (opts.pin_n && opts.pin_m) {
          if (*opts.pin_m <= *opts.pin_n)
            consider(chk(k, *opts.pin_n, *opts.pin_m, form));
        } else if (opts.pin_n) {
          for (u64 m = 0; m <= *opts.pin_n; ++m)
            consider(chk(k, *opts.pin_n, m, form));
        } else if (opts.pin_m) {
          for (u64 n = *opts.pin_m; n <= bound; ++n)
            consider(chk(k, n, *opts.pin_m, form));
        } else {
          for (u64 n = 0; n <= bound; ++n)
            for (u64 m = 0; m <= n; ++m) consider(chk(k, n, m, form));
        }
        break;
      }
      case IdentityId::ConvolutionJ:
      case IdentityId::ConvolutionLucas: {
        const u64 n_lo = (id == IdentityId::ConvolutionJ) ? 1 : 0;
        auto chk = (id == IdentityId::ConvolutionJ) ? check_convolution_j
                                                    : check_convolution_lucas;
        auto inner = [&](u64 m) {
          if (opts.pin_n) {
            if (*opts.pin_n >= n_lo) consider(chk(k, m, *opts.pin_n, form));
          } else {
            for (u64 n = n_lo; n <= bound; ++n) consider(chk(k, m, n, form));
          }
        };
        if (opts.pin_m) {
          if (*opts.pin_m >= 1) inner(*opts.pin_m);
        } else {
          for (u64 m = 1; m <= bound; ++m) inner(m);
        }
        break;
      }
      case IdentityId::Commutation:
        consider(check_commutation(k, form));
        break;
    }
  }

  if (rep.checks == 0)
    throw std::invalid_argument("sweep options select no instances");
  return rep;
}

std::vector<SweepReport> sweep(const std::vector<IdentityId>& ids,
                               const std::vector<Form>& forms,
                               const SweepOptions& opts) {
  if (ids.empty() || forms.empty())
    throw std::invalid_argument("sweep needs at least one identity and form");
  std::vector<SweepReport> out;
  out.reserve(ids.size() * forms.size());
  for (IdentityId id : ids)
    for (Form form : forms) out.push_back(run_sweep(id, form, opts));
  return out;
}

}  // namespace jacgen
