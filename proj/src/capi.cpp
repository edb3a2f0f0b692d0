// extern-C boundary: opaque handles in, status codes and decimal strings out.
// Exceptions from the core are translated, never propagated.
#include "jacgen.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jacgen/bigint.hpp"
#include "jacgen/identities.hpp"
#include "jacgen/sequence.hpp"
#include "jacgen/series.hpp"

struct jg_sequence {
  jacgen::SequenceParams params;
};

// A stream is either a live lazy term run or a materialized coefficient list.
struct jg_stream {
  std::optional<jacgen::TermStream> run;
  std::vector<jacgen::Int> values;
  std::uint64_t next_index = 0;
  std::size_t pos = 0;
};

struct jg_series_report {
  jacgen::GfMatchReport rep;
};

struct jg_sweep {
  jacgen::SweepReport rep;
};

namespace {

template <typename Fn>
jg_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return JG_OK;
  } catch (const std::invalid_argument&) {
    return JG_EINVAL;
  } catch (const std::out_of_range&) {
    return JG_ERANGE;
  } catch (const std::bad_alloc&) {
    return JG_EINTERNAL;
  } catch (...) {
    return JG_EINTERNAL;
  }
}

char* dup_cstr(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

char* dup_int(const jacgen::Int& v) { return dup_cstr(v.get_str()); }

jacgen::SequenceKind to_kind(jg_kind kind) {
  switch (kind) {
    case JG_JACOBSTHAL: return jacgen::SequenceKind::Jacobsthal;
    case JG_JACOBSTHAL_LUCAS: return jacgen::SequenceKind::JacobsthalLucas;
  }
  throw std::invalid_argument("unknown sequence kind");
}

jacgen::Form to_form(jg_form form) {
  switch (form) {
    case JG_FORM_PAPER: return jacgen::Form::PaperLiteral;
    case JG_FORM_CORRECTED: return jacgen::Form::Corrected;
  }
  throw std::invalid_argument("unknown form");
}

jacgen::IdentityId to_identity(jg_identity id) {
  if (id < 0 || id >= JG_IDENTITY_COUNT)
    throw std::invalid_argument("unknown identity");
  return jacgen::kAllIdentities[static_cast<std::size_t>(id)];
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

const jacgen::GfFormMatch& form_match(const jg_series_report* report,
                                      jg_form form) {
  require(report != nullptr, "report is NULL");
  return to_form(form) == jacgen::Form::PaperLiteral
             ? report->rep.paper_literal
             : report->rep.corrected;
}

const jacgen::IdentityReport& counterexample(const jg_sweep* sweep) {
  require(sweep != nullptr, "sweep is NULL");
  if (!sweep->rep.first_counterexample)
    throw std::invalid_argument("sweep has no counterexample");
  return *sweep->rep.first_counterexample;
}

}  // namespace

extern "C" {

const char* jg_version(void) { return "1.0.0"; }

const char* jg_status_message(jg_status status) {
  switch (status) {
    case JG_OK: return "ok";
    case JG_EINVAL: return "invalid argument";
    case JG_ERANGE: return "argument out of range";
    case JG_EINTERNAL: return "internal invariant violation";
  }
  return "unknown status";
}

void jg_string_free(char* s) { std::free(s); }

jg_status jg_sequence_new(jg_kind kind, int64_t k, jg_sequence** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    *out = new jg_sequence{jacgen::SequenceParams(to_kind(kind), k)};
  });
}

void jg_sequence_free(jg_sequence* seq) { delete seq; }

jg_status jg_eval(const jg_sequence* seq, uint64_t n, jg_method method,
                  char** out) {
  return guarded([&] {
    require(seq != nullptr && out != nullptr, "NULL argument");
    jacgen::Int v;
    switch (method) {
      case JG_METHOD_ITER: v = jacgen::eval_iter(seq->params, n); break;
      case JG_METHOD_BINET: v = jacgen::eval_binet(seq->params, n); break;
      case JG_METHOD_MATRIX: v = jacgen::eval_matrix(seq->params, n); break;
      default: throw std::invalid_argument("unknown method");
    }
    *out = dup_int(v);
  });
}

jg_status jg_prefix_sum(const jg_sequence* seq, uint64_t n, char** out) {
  return guarded([&] {
    require(seq != nullptr && out != nullptr, "NULL argument");
    *out = dup_int(jacgen::prefix_sum(seq->params, n));
  });
}

jg_status jg_stream_new(const jg_sequence* seq, uint64_t from, uint64_t to,
                        jg_stream** out) {
  return guarded([&] {
    require(seq != nullptr && out != nullptr, "NULL argument");
    auto stream = std::make_unique<jg_stream>();
    stream->run.emplace(seq->params, from, to);
    *out = stream.release();
  });
}

int jg_stream_next(jg_stream* stream, uint64_t* out_index, char** out_value) {
  if (!stream) return 0;
  try {
    if (stream->run) {
      auto t = stream->run->next();
      if (!t) return 0;
      if (out_index) *out_index = t->first;
      if (out_value) *out_value = dup_int(t->second);
      return 1;
    }
    if (stream->pos >= stream->values.size()) return 0;
    if (out_index) *out_index = stream->next_index + stream->pos;
    if (out_value) *out_value = dup_int(stream->values[stream->pos]);
    ++stream->pos;
    return 1;
  } catch (...) {
    return 0;
  }
}

void jg_stream_free(jg_stream* stream) { delete stream; }

jg_status jg_series_expand(const jg_sequence* seq, jg_form form,
                           uint64_t count, jg_stream** out) {
  return guarded([&] {
    require(seq != nullptr && out != nullptr, "NULL argument");
    auto stream = std::make_unique<jg_stream>();
    stream->values =
        jacgen::expand(jacgen::gf_for(seq->params, to_form(form)), count);
    *out = stream.release();
  });
}

jg_status jg_series_match(const jg_sequence* seq, uint64_t count,
                          jg_series_report** out) {
  return guarded([&] {
    require(seq != nullptr && out != nullptr, "NULL argument");
    *out = new jg_series_report{jacgen::match_report(seq->params, count)};
  });
}

void jg_series_report_free(jg_series_report* report) { delete report; }

int jg_series_form_matches(const jg_series_report* report, jg_form form) {
  try {
    return form_match(report, form).matches ? 1 : 0;
  } catch (...) {
    return 0;
  }
}

int64_t jg_series_first_mismatch(const jg_series_report* report,
                                 jg_form form) {
  try {
    const auto& m = form_match(report, form);
    if (m.matches) return -1;
    return static_cast<int64_t>(*m.first_mismatch);
  } catch (...) {
    return -1;
  }
}

jg_status jg_series_mismatch_values(const jg_series_report* report,
                                    jg_form form, char** out_expanded,
                                    char** out_expected) {
  return guarded([&] {
    const auto& m = form_match(report, form);
    require(!m.matches, "form matches; no mismatch values");
    if (out_expanded) *out_expanded = dup_int(*m.expanded);
    if (out_expected) *out_expected = dup_int(*m.expected);
  });
}

const char* jg_identity_name(jg_identity id) {
  try {
    return jacgen::identity_name(to_identity(id));
  } catch (...) {
    return nullptr;
  }
}

jg_status jg_identity_from_name(const char* name, jg_identity* out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "NULL argument");
    auto id = jacgen::identity_from_name(name);
    require(id.has_value(), "unknown identity name");
    for (std::size_t i = 0; i < jacgen::kAllIdentities.size(); ++i) {
      if (jacgen::kAllIdentities[i] == *id) {
        *out = static_cast<jg_identity>(i);
        return;
      }
    }
    throw std::logic_error("identity table out of sync");
  });
}

const char* jg_identity_indices(jg_identity id) {
  switch (id) {
    case JG_IDENTITY_CATALAN_J:
    case JG_IDENTITY_CATALAN_LUCAS: return "n,r";
    case JG_IDENTITY_DOCAGNE_J:
    case JG_IDENTITY_DOCAGNE_LUCAS: return "n,m";
    case JG_IDENTITY_CONVOLUTION_J:
    case JG_IDENTITY_CONVOLUTION_LUCAS: return "m,n";
    case JG_IDENTITY_COMMUTATION: return "";
    case JG_IDENTITY_CASSINI_J:
    case JG_IDENTITY_CASSINI_LUCAS:
    case JG_IDENTITY_INTERTERMS_A:
    case JG_IDENTITY_INTERTERMS_B:
    case JG_IDENTITY_SUM_J:
    case JG_IDENTITY_SUM_LUCAS:
    case JG_IDENTITY_COLUMN_VECTOR: return "n";
  }
  return nullptr;
}

jg_status jg_sweep_run(jg_identity id, jg_form form, int64_t k_min,
                       int64_t k_max, uint64_t index_bound,
                       const int64_t* pin_n, const int64_t* pin_r,
                       const int64_t* pin_m, jg_sweep** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    jacgen::SweepOptions opts;
    opts.k_min = k_min;
    opts.k_max = k_max;
    opts.index_bound = index_bound;
    auto set_pin = [](std::optional<std::uint64_t>& pin, const int64_t* p) {
      if (!p) return;
      require(*p >= 0, "index pin must be nonnegative");
      pin = static_cast<std::uint64_t>(*p);
    };
    set_pin(opts.pin_n, pin_n);
    set_pin(opts.pin_r, pin_r);
    set_pin(opts.pin_m, pin_m);
    *out = new jg_sweep{jacgen::run_sweep(to_identity(id), to_form(form), opts)};
  });
}

void jg_sweep_free(jg_sweep* sweep) { delete sweep; }

uint64_t jg_sweep_checks(const jg_sweep* sweep) {
  return sweep ? sweep->rep.checks : 0;
}

uint64_t jg_sweep_failures(const jg_sweep* sweep) {
  return sweep ? sweep->rep.failures : 0;
}

int jg_sweep_has_counterexample(const jg_sweep* sweep) {
  return (sweep && sweep->rep.first_counterexample) ? 1 : 0;
}

jg_status jg_sweep_cx_k(const jg_sweep* sweep, int64_t* out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    *out = counterexample(sweep).instance.k;
  });
}

jg_status jg_sweep_cx_index_count(const jg_sweep* sweep, size_t* out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    *out = counterexample(sweep).instance.indices.size();
  });
}

jg_status jg_sweep_cx_index_name(const jg_sweep* sweep, size_t i,
                                 const char** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    const auto& idx = counterexample(sweep).instance.indices;
    require(i < idx.size(), "index position out of range");
    // Names come from a fixed table ("n", "r", "m"), so static storage can
    // back the returned pointer.
    const std::string& name = idx[i].first;
    if (name == "n") *out = "n";
    else if (name == "r") *out = "r";
    else if (name == "m") *out = "m";
    else throw std::logic_error("unexpected index name");
  });
}

jg_status jg_sweep_cx_index_value(const jg_sweep* sweep, size_t i,
                                  uint64_t* out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    const auto& idx = counterexample(sweep).instance.indices;
    require(i < idx.size(), "index position out of range");
    *out = idx[i].second;
  });
}

jg_status jg_sweep_cx_values(const jg_sweep* sweep, char** out_lhs,
                             char** out_rhs) {
  return guarded([&] {
    const auto& cx = counterexample(sweep);
    if (out_lhs) *out_lhs = dup_int(cx.lhs);
    if (out_rhs) *out_rhs = dup_int(cx.rhs);
  });
}

} /* extern "C" */
