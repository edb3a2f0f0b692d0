// jacgen CLI: sequence generation, evaluation, identity verification,
// generating-function comparison, benchmarking. Talks to the engine solely
// through the C API in jacgen.h.
//
// Exit codes: 0 success / all checks pass, 1 verification mismatch,
// 2 usage or argument error. Diagnostics go to stderr, data to stdout.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jacgen.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Died {
  int code;
};

[[noreturn]] void die(int code, const std::string& msg) {
  std::cerr << "jacgen: " << msg << "\n";
  throw Died{code};
}

void check_st(jg_status st, const std::string& what) {
  if (st != JG_OK) die(2, what + ": " + jg_status_message(st));
}

// Takes ownership of a library-allocated string.
std::string take(char* s) {
  std::string out = s ? s : "";
  jg_string_free(s);
  return out;
}

// Move-only owner for a library handle.
template <typename T, void (*Free)(T*)>
struct Handle {
  T* h = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& o) noexcept : h(o.h) { o.h = nullptr; }
  Handle& operator=(Handle&& o) noexcept {
    if (this != &o) {
      Free(h);
      h = o.h;
      o.h = nullptr;
    }
    return *this;
  }
  ~Handle() { Free(h); }
};

using Sequence = Handle<jg_sequence, jg_sequence_free>;
using Stream = Handle<jg_stream, jg_stream_free>;
using SeriesReport = Handle<jg_series_report, jg_series_report_free>;
using Sweep = Handle<jg_sweep, jg_sweep_free>;

jg_kind parse_kind(const std::string& s) {
  if (s == "J" || s == "jacobsthal") return JG_JACOBSTHAL;
  if (s == "j" || s == "jacobsthal-lucas") return JG_JACOBSTHAL_LUCAS;
  die(2, "unknown kind '" + s + "' (expected J or j)");
}

const char* kind_label(jg_kind kind) {
  return kind == JG_JACOBSTHAL ? "J" : "j";
}

int64_t parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    die(2, what + ": '" + s + "' is not an integer");
  }
}

std::pair<int64_t, int64_t> parse_k_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int64_t k = parse_int(s, "--k");
    return {k, k};
  }
  const int64_t lo = parse_int(s.substr(0, dots), "--k lower bound");
  const int64_t hi = parse_int(s.substr(dots + 2), "--k upper bound");
  return {lo, hi};
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

// Renders into memory first so --out can receive the exact stdout bytes.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) die(2, "cannot open '" + out_path + "' for writing");
  f << text;
  if (!f) die(2, "write to '" + out_path + "' failed");
}

std::size_t digit_count(const std::string& decimal) {
  return decimal.size() - ((!decimal.empty() && decimal[0] == '-') ? 1 : 0);
}

enum class Fmt { Table, Csv, Json, BFile };

Fmt parse_fmt(const std::string& s, bool bfile_ok) {
  if (s == "table") return Fmt::Table;
  if (s == "csv") return Fmt::Csv;
  if (s == "json") return Fmt::Json;
  if (s == "bfile" && bfile_ok) return Fmt::BFile;
  die(2, "unsupported format '" + s + "'");
}

// --- gen ---------------------------------------------------------------

struct GenArgs {
  std::string kind, k, format = "table", out;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
};

int cmd_gen(const GenArgs& a) {
  const jg_kind kind = parse_kind(a.kind);
  const Fmt fmt = parse_fmt(a.format, true);
  const int64_t k = parse_int(a.k, "--k");

  Sequence seq;
  check_st(jg_sequence_new(kind, k, &seq.h), "gen");
  Stream st;
  check_st(jg_stream_new(seq.h, a.from, a.to, &st.h), "gen");

  std::vector<std::pair<std::uint64_t, std::string>> rows;
  std::uint64_t idx = 0;
  char* val = nullptr;
  while (jg_stream_next(st.h, &idx, &val)) rows.emplace_back(idx, take(val));

  std::ostringstream text;
  switch (fmt) {
    case Fmt::Table:
      text << "n\tvalue\n";
      for (const auto& [n, v] : rows) text << n << "\t" << v << "\n";
      break;
    case Fmt::Csv: {
      for (std::size_t i = 0; i < rows.size(); ++i)
        text << (i ? "," : "") << rows[i].second;
      text << "\n";
      break;
    }
    case Fmt::BFile:
      for (const auto& [n, v] : rows) text << n << " " << v << "\n";
      break;
    case Fmt::Json: {
      json o;
      o["kind"] = kind_label(kind);
      o["k"] = k;
      o["from"] = a.from;
      o["to"] = a.to;
      json terms = json::array();
      for (const auto& [n, v] : rows) terms.push_back(v);
      o["terms"] = std::move(terms);
      text << o.dump() << "\n";
      break;
    }
  }
  emit(text.str(), a.out);
  return 0;
}

// --- eval --------------------------------------------------------------

struct EvalArgs {
  std::string kind, k, method = "matrix", format = "table", out;
  std::uint64_t n = 0;
};

int cmd_eval(const EvalArgs& a) {
  const jg_kind kind = parse_kind(a.kind);
  const Fmt fmt = parse_fmt(a.format, false);
  const int64_t k = parse_int(a.k, "--k");

  Sequence seq;
  check_st(jg_sequence_new(kind, k, &seq.h), "eval");

  const std::vector<std::pair<std::string, jg_method>> all = {
      {"iter", JG_METHOD_ITER},
      {"binet", JG_METHOD_BINET},
      {"matrix", JG_METHOD_MATRIX}};
  std::vector<std::pair<std::string, jg_method>> chosen;
  if (a.method == "all") {
    chosen = all;
  } else {
    bool found = false;
    for (const auto& m : all)
      if (m.first == a.method) {
        chosen.push_back(m);
        found = true;
      }
    if (!found) die(2, "unknown method '" + a.method + "'");
  }

  std::vector<std::pair<std::string, std::string>> values;
  for (const auto& [name, method] : chosen) {
    char* v = nullptr;
    check_st(jg_eval(seq.h, a.n, method, &v), "eval");
    values.emplace_back(name, take(v));
  }
  bool agree = true;
  for (const auto& [name, v] : values) agree = agree && v == values[0].second;

  std::ostringstream text;
  if (fmt == Fmt::Json) {
    json o;
    o["kind"] = kind_label(kind);
    o["k"] = k;
    o["n"] = a.n;
    json vals;
    for (const auto& [name, v] : values) vals[name] = v;
    o["values"] = std::move(vals);
    if (a.method == "all") o["agreement"] = agree;
    text << o.dump() << "\n";
  } else {  // table and csv coincide: one value per line
    for (const auto& [name, v] : values) text << v << "\n";
    if (a.method == "all")
      text << "agreement " << (agree ? "true" : "false") << "\n";
  }
  emit(text.str(), a.out);
  return agree ? 0 : 1;
}

// --- verify ------------------------------------------------------------

struct VerifyArgs {
  std::string identity, k = "2", form = "both", format = "table", out;
  std::uint64_t n_max = 0;
  std::optional<int64_t> pin_n, pin_r, pin_m;
};

struct SweepRow {
  std::string identity;
  std::string form;
  Sweep sweep;
};

int cmd_verify(const VerifyArgs& a) {
  const Fmt fmt = parse_fmt(a.format, false);
  const auto [k_min, k_max] = parse_k_range(a.k);

  std::vector<jg_identity> ids;
  if (a.identity == "all") {
    for (int i = 0; i < JG_IDENTITY_COUNT; ++i)
      ids.push_back(static_cast<jg_identity>(i));
  } else {
    jg_identity id;
    if (jg_identity_from_name(a.identity.c_str(), &id) != JG_OK)
      die(2, "unknown identity '" + a.identity + "'");
    ids.push_back(id);
  }

  std::vector<jg_form> forms;
  if (a.form == "paper") forms = {JG_FORM_PAPER};
  else if (a.form == "corrected") forms = {JG_FORM_CORRECTED};
  else if (a.form == "both") forms = {JG_FORM_PAPER, JG_FORM_CORRECTED};
  else die(2, "unknown form '" + a.form + "' (paper, corrected, both)");

  const int64_t pn = a.pin_n.value_or(0), pr = a.pin_r.value_or(0),
                pm = a.pin_m.value_or(0);
  std::vector<SweepRow> rows;
  for (jg_identity id : ids) {
    for (jg_form form : forms) {
      SweepRow row;
      row.identity = jg_identity_name(id);
      row.form = form == JG_FORM_PAPER ? "paper" : "corrected";
      check_st(jg_sweep_run(id, form, k_min, k_max, a.n_max,
                            a.pin_n ? &pn : nullptr, a.pin_r ? &pr : nullptr,
                            a.pin_m ? &pm : nullptr, &row.sweep.h),
               "verify " + row.identity);
      rows.push_back(std::move(row));
    }
  }

  const std::string k_range = std::to_string(k_min) + ".." + std::to_string(k_max);
  bool any_failure = false;
  std::ostringstream text;
  json reports = json::array();

  for (const SweepRow& row : rows) {
    const jg_sweep* s = row.sweep.h;
    const std::uint64_t failures = jg_sweep_failures(s);
    any_failure = any_failure || failures != 0;

    struct Cx {
      int64_t k = 0;
      std::vector<std::pair<std::string, std::uint64_t>> indices;
      std::string lhs, rhs;
    };
    std::optional<Cx> cx;
    if (jg_sweep_has_counterexample(s)) {
      Cx c;
      check_st(jg_sweep_cx_k(s, &c.k), "verify");
      std::size_t count = 0;
      check_st(jg_sweep_cx_index_count(s, &count), "verify");
      for (std::size_t i = 0; i < count; ++i) {
        const char* name = nullptr;
        std::uint64_t value = 0;
        check_st(jg_sweep_cx_index_name(s, i, &name), "verify");
        check_st(jg_sweep_cx_index_value(s, i, &value), "verify");
        c.indices.emplace_back(name, value);
      }
      char *lhs = nullptr, *rhs = nullptr;
      check_st(jg_sweep_cx_values(s, &lhs, &rhs), "verify");
      c.lhs = take(lhs);
      c.rhs = take(rhs);
      cx = std::move(c);
    }

    switch (fmt) {
      case Fmt::Table: {
        text << "identity=" << row.identity << " form=" << row.form
             << " k=" << k_range << " n-max=" << a.n_max
             << " checks=" << jg_sweep_checks(s) << " failures=" << failures
             << "\n";
        if (cx) {
          text << "  first counterexample: k=" << cx->k;
          for (const auto& [name, value] : cx->indices)
            text << " " << name << "=" << value;
          text << " lhs=" << cx->lhs << " rhs=" << cx->rhs << "\n";
        }
        break;
      }
      case Fmt::Csv: {
        if (reports.empty() && text.tellp() == std::streampos(0))
          text << "identity,form,k_range,index_bound,checks,failures,"
                  "cx_k,cx_indices,cx_lhs,cx_rhs\n";
        text << row.identity << "," << row.form << "," << k_range << ","
             << a.n_max << "," << jg_sweep_checks(s) << "," << failures << ",";
        if (cx) {
          text << cx->k << ",";
          for (std::size_t i = 0; i < cx->indices.size(); ++i)
            text << (i ? ";" : "") << cx->indices[i].first << "="
                 << cx->indices[i].second;
          text << "," << cx->lhs << "," << cx->rhs;
        } else {
          text << ",,,";
        }
        text << "\n";
        break;
      }
      case Fmt::Json: {
        json o;
        o["identity"] = row.identity;
        o["form"] = row.form;
        o["k_range"] = k_range;
        o["index_bound"] = a.n_max;
        o["checks"] = jg_sweep_checks(s);
        json fails = json::array();
        if (cx) {
          json f;
          f["k"] = cx->k;
          json idx;
          for (const auto& [name, value] : cx->indices) idx[name] = value;
          f["indices"] = std::move(idx);
          f["lhs"] = cx->lhs;
          f["rhs"] = cx->rhs;
          fails.push_back(std::move(f));
        }
        o["failures"] = std::move(fails);
        reports.push_back(std::move(o));
        break;
      }
      default: break;
    }
  }

  if (fmt == Fmt::Json) {
    if (reports.size() == 1)
      text << reports.front().dump() << "\n";
    else
      text << reports.dump() << "\n";
  }
  emit(text.str(), a.out);
  return any_failure ? 1 : 0;
}

// --- series ------------------------------------------------------------

struct SeriesArgs {
  std::string kind, k, form = "corrected", format = "table", out;
  std::uint64_t count = 0;
};

int cmd_series(const SeriesArgs& a) {
  const jg_kind kind = parse_kind(a.kind);
  const Fmt fmt = parse_fmt(a.format, false);
  const int64_t k = parse_int(a.k, "--k");
  jg_form form;
  if (a.form == "paper") form = JG_FORM_PAPER;
  else if (a.form == "corrected") form = JG_FORM_CORRECTED;
  else die(2, "unknown form '" + a.form + "' (paper, corrected)");

  Sequence seq;
  check_st(jg_sequence_new(kind, k, &seq.h), "series");
  Stream st;
  check_st(jg_series_expand(seq.h, form, a.count, &st.h), "series");
  std::vector<std::string> coeffs;
  {
    char* v = nullptr;
    while (jg_stream_next(st.h, nullptr, &v)) coeffs.push_back(take(v));
  }
  SeriesReport rep;
  check_st(jg_series_match(seq.h, a.count, &rep.h), "series");
  const bool matches = jg_series_form_matches(rep.h, form) != 0;
  const int64_t first_mismatch = jg_series_first_mismatch(rep.h, form);
  std::string got, want;
  if (!matches) {
    char *g = nullptr, *w = nullptr;
    check_st(jg_series_mismatch_values(rep.h, form, &g, &w), "series");
    got = take(g);
    want = take(w);
  }

  std::ostringstream text;
  switch (fmt) {
    case Fmt::Table:
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        text << i << " " << coeffs[i] << "\n";
      if (matches)
        text << "match: " << a.form << " form reproduces the first " << a.count
             << " terms\n";
      else
        text << "mismatch at n=" << first_mismatch << ": expansion " << got
             << ", recurrence " << want << "\n";
      break;
    case Fmt::Csv:
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        text << (i ? "," : "") << coeffs[i];
      text << "\n";
      break;
    case Fmt::Json: {
      json o;
      o["kind"] = kind_label(kind);
      o["k"] = k;
      o["form"] = a.form;
      o["count"] = a.count;
      o["coefficients"] = coeffs;
      o["match"] = matches;
      if (matches)
        o["first_mismatch"] = nullptr;
      else
        o["first_mismatch"] = first_mismatch;
      text << o.dump() << "\n";
      break;
    }
    default: break;
  }
  emit(text.str(), a.out);
  return matches ? 0 : 1;
}

// --- bench -------------------------------------------------------------

struct BenchArgs {
  std::string kind, k, n, methods = "iter,binet,matrix", format = "csv", out;
};

int cmd_bench(const BenchArgs& a) {
  const jg_kind kind = parse_kind(a.kind);
  const Fmt fmt = parse_fmt(a.format, false);
  const int64_t k = parse_int(a.k, "--k");

  std::vector<std::uint64_t> ns;
  for (const std::string& item : split_csv(a.n)) {
    const int64_t v = parse_int(item, "--n");
    if (v < 0) die(2, "--n values must be nonnegative");
    ns.push_back(static_cast<std::uint64_t>(v));
  }
  if (ns.empty()) die(2, "--n needs at least one index");

  std::vector<std::pair<std::string, jg_method>> methods;
  for (const std::string& name : split_csv(a.methods)) {
    if (name == "iter") methods.emplace_back(name, JG_METHOD_ITER);
    else if (name == "binet") methods.emplace_back(name, JG_METHOD_BINET);
    else if (name == "matrix") methods.emplace_back(name, JG_METHOD_MATRIX);
    else die(2, "unknown method '" + name + "'");
  }
  if (methods.empty()) die(2, "--methods needs at least one method");

  Sequence seq;
  check_st(jg_sequence_new(kind, k, &seq.h), "bench");

  struct Row {
    std::string method;
    std::uint64_t n;
    double ms;
    std::size_t digits;
  };
  std::vector<Row> rows;
  bool agree = true;
  for (const std::uint64_t n : ns) {
    std::string reference;
    for (const auto& [name, method] : methods) {
      char* v = nullptr;
      const auto t0 = std::chrono::steady_clock::now();
      check_st(jg_eval(seq.h, n, method, &v), "bench");
      const auto t1 = std::chrono::steady_clock::now();
      const std::string value = take(v);
      if (reference.empty()) reference = value;
      else agree = agree && value == reference;
      const double ms =
          std::chrono::duration<double, std::milli>(t1 - t0).count();
      rows.push_back(Row{name, n, ms, digit_count(value)});
    }
  }

  std::ostringstream text;
  char ms_buf[64];
  switch (fmt) {
    case Fmt::Table:
      text << "method\tk\tn\tms\tdigits\n";
      for (const Row& r : rows) {
        std::snprintf(ms_buf, sizeof ms_buf, "%.3f", r.ms);
        text << r.method << "\t" << k << "\t" << r.n << "\t" << ms_buf << "\t"
             << r.digits << "\n";
      }
      break;
    case Fmt::Csv:
      text << "method,k,n,ms,digits\n";
      for (const Row& r : rows) {
        std::snprintf(ms_buf, sizeof ms_buf, "%.3f", r.ms);
        text << r.method << "," << k << "," << r.n << "," << ms_buf << ","
             << r.digits << "\n";
      }
      break;
    case Fmt::Json: {
      json arr = json::array();
      for (const Row& r : rows) {
        json o;
        o["method"] = r.method;
        o["k"] = k;
        o["n"] = r.n;
        o["ms"] = r.ms;
        o["digits"] = r.digits;
        arr.push_back(std::move(o));
      }
      text << arr.dump() << "\n";
      break;
    }
    default: break;
  }
  emit(text.str(), a.out);
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for generalized Jacobsthal and Jacobsthal-Lucas "
               "sequences: generation, evaluation, identity verification, "
               "generating functions, benchmarks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(jg_version()));

  GenArgs gen;
  auto* cgen = app.add_subcommand("gen", "print a run of sequence terms");
  cgen->add_option("kind", gen.kind, "J (Jacobsthal) or j (Jacobsthal-Lucas)")
      ->required();
  cgen->add_option("--k", gen.k, "sequence parameter k (k >= 2)")->required();
  cgen->add_option("--from", gen.from, "first index (default 0)");
  cgen->add_option("--to", gen.to, "last index, inclusive")->required();
  cgen->add_option("--format", gen.format, "table | csv | json | bfile");
  cgen->add_option("--out", gen.out, "write output to this file");

  EvalArgs eval;
  auto* ceval = app.add_subcommand("eval", "evaluate a single term");
  ceval->add_option("kind", eval.kind, "J or j")->required();
  ceval->add_option("--k", eval.k, "sequence parameter k (k >= 2)")->required();
  ceval->add_option("--n", eval.n, "term index")->required();
  ceval->add_option("--method", eval.method,
                    "iter | binet | matrix | all (default matrix; all prints "
                    "iter, binet, matrix lines plus an agreement line)");
  ceval->add_option("--format", eval.format, "table | json");
  ceval->add_option("--out", eval.out, "write output to this file");

  VerifyArgs verify;
  auto* cverify =
      app.add_subcommand("verify", "sweep an identity over k and its indices");
  cverify
      ->add_option("--identity", verify.identity,
                   "identity name (see --list) or 'all'")
      ->required();
  cverify->add_option("--k", verify.k, "k range 'A..B' or single value");
  cverify->add_option("--n-max", verify.n_max,
                      "inclusive bound for unpinned indices");
  cverify->add_option("--form", verify.form, "paper | corrected | both");
  cverify->add_option("--n", verify.pin_n, "pin index n to one value");
  cverify->add_option("--r", verify.pin_r, "pin index r to one value");
  cverify->add_option("--m", verify.pin_m, "pin index m to one value");
  cverify->add_option("--format", verify.format, "table | csv | json");
  cverify->add_option("--out", verify.out, "write output to this file");

  SeriesArgs series;
  auto* cseries = app.add_subcommand(
      "series", "expand the generating function and compare with recurrence terms");
  cseries->add_option("kind", series.kind, "J or j")->required();
  cseries->add_option("--k", series.k, "sequence parameter k (k >= 2)")
      ->required();
  cseries->add_option("--count", series.count, "number of coefficients (>= 1)")
      ->required();
  cseries->add_option("--form", series.form, "paper | corrected");
  cseries->add_option("--format", series.format, "table | csv | json");
  cseries->add_option("--out", series.out, "write output to this file");

  BenchArgs bench;
  auto* cbench =
      app.add_subcommand("bench", "time the evaluation strategies per index");
  cbench->add_option("kind", bench.kind, "J or j")->required();
  cbench->add_option("--k", bench.k, "sequence parameter k (k >= 2)")
      ->required();
  cbench->add_option("--n", bench.n, "comma-separated indices")->required();
  cbench->add_option("--methods", bench.methods,
                     "comma-separated subset of iter,binet,matrix");
  cbench->add_option("--format", bench.format, "table | csv | json");
  cbench->add_option("--out", bench.out, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);  // prints the diagnostic to stderr
    return 2;
  }

  try {
    if (cgen->parsed()) return cmd_gen(gen);
    if (ceval->parsed()) return cmd_eval(eval);
    if (cverify->parsed()) return cmd_verify(verify);
    if (cseries->parsed()) return cmd_series(series);
    if (cbench->parsed()) return cmd_bench(bench);
  } catch (const Died& d) {
    return d.code;
  } catch (const std::exception& e) {
    std::cerr << "jacgen: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
