#include "jacgen.h"

#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  jg_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("library identity strings") {
  CHECK(jg_version() != nullptr);
  CHECK(std::string(jg_version()) == "1.0.0");
  for (jg_status st : {JG_OK, JG_EINVAL, JG_ERANGE, JG_EINTERNAL})
    CHECK(jg_status_message(st) != nullptr);
  jg_string_free(nullptr);  // must be a no-op
}

TEST_CASE("sequence construction validates input") {
  jg_sequence* seq = nullptr;
  CHECK(jg_sequence_new(JG_JACOBSTHAL, 1, &seq) == JG_EINVAL);
  CHECK(jg_sequence_new(JG_JACOBSTHAL, -3, &seq) == JG_EINVAL);
  CHECK(jg_sequence_new(static_cast<jg_kind>(42), 2, &seq) == JG_EINVAL);
  CHECK(jg_sequence_new(JG_JACOBSTHAL, 2, nullptr) == JG_EINVAL);
  REQUIRE(jg_sequence_new(JG_JACOBSTHAL, 2, &seq) == JG_OK);
  REQUIRE(seq != nullptr);
  jg_sequence_free(seq);
  jg_sequence_free(nullptr);  // no-op
}

TEST_CASE("evaluation across methods") {
  jg_sequence* seq = nullptr;
  REQUIRE(jg_sequence_new(JG_JACOBSTHAL, 4, &seq) == JG_OK);
  char* v = nullptr;
  REQUIRE(jg_eval(seq, 7, JG_METHOD_MATRIX, &v) == JG_OK);
  CHECK(take(v) == "3277");
  REQUIRE(jg_eval(seq, 7, JG_METHOD_ITER, &v) == JG_OK);
  CHECK(take(v) == "3277");
  REQUIRE(jg_eval(seq, 7, JG_METHOD_BINET, &v) == JG_OK);
  CHECK(take(v) == "3277");
  CHECK(jg_eval(seq, 7, static_cast<jg_method>(9), &v) == JG_EINVAL);
  CHECK(jg_eval(nullptr, 7, JG_METHOD_ITER, &v) == JG_EINVAL);
  CHECK(jg_eval(seq, 7, JG_METHOD_ITER, nullptr) == JG_EINVAL);
  jg_sequence_free(seq);
}

TEST_CASE("prefix sums") {
  jg_sequence* seq = nullptr;
  REQUIRE(jg_sequence_new(JG_JACOBSTHAL, 3, &seq) == JG_OK);
  char* v = nullptr;
  REQUIRE(jg_prefix_sum(seq, 4, &v) == JG_OK);
  CHECK(take(v) == "30");
  jg_sequence_free(seq);
}

TEST_CASE("term streams") {
  jg_sequence* seq = nullptr;
  REQUIRE(jg_sequence_new(JG_JACOBSTHAL_LUCAS, 4, &seq) == JG_OK);

  jg_stream* st = nullptr;
  CHECK(jg_stream_new(seq, 5, 2, &st) == JG_ERANGE);  // empty window

  REQUIRE(jg_stream_new(seq, 0, 4, &st) == JG_OK);
  const std::vector<std::string> expect = {"2", "2", "14", "50", "206"};
  for (std::uint64_t n = 0; n <= 4; ++n) {
    std::uint64_t idx = 0;
    char* v = nullptr;
    REQUIRE(jg_stream_next(st, &idx, &v) == 1);
    CHECK(idx == n);
    CHECK(take(v) == expect[n]);
  }
  CHECK(jg_stream_next(st, nullptr, nullptr) == 0);
  CHECK(jg_stream_next(st, nullptr, nullptr) == 0);
  jg_stream_free(st);
  jg_stream_free(nullptr);
  jg_sequence_free(seq);
}

TEST_CASE("series expansion stream") {
  jg_sequence* seq = nullptr;
  REQUIRE(jg_sequence_new(JG_JACOBSTHAL, 3, &seq) == JG_OK);
  jg_stream* st = nullptr;
  REQUIRE(jg_series_expand(seq, JG_FORM_CORRECTED, 5, &st) == JG_OK);
  const std::vector<std::string> expect = {"0", "1", "2", "7", "20"};
  for (std::uint64_t n = 0; n < 5; ++n) {
    std::uint64_t idx = 0;
    char* v = nullptr;
    REQUIRE(jg_stream_next(st, &idx, &v) == 1);
    CHECK(idx == n);
    CHECK(take(v) == expect[n]);
  }
  CHECK(jg_stream_next(st, nullptr, nullptr) == 0);
  jg_stream_free(st);
  CHECK(jg_series_expand(seq, JG_FORM_CORRECTED, 0, &st) == JG_EINVAL);
  jg_sequence_free(seq);
}

TEST_CASE("series match report") {
  jg_sequence* seq = nullptr;
  REQUIRE(jg_sequence_new(JG_JACOBSTHAL_LUCAS, 2, &seq) == JG_OK);
  jg_series_report* rep = nullptr;
  REQUIRE(jg_series_match(seq, 10, &rep) == JG_OK);

  CHECK(jg_series_form_matches(rep, JG_FORM_CORRECTED) == 1);
  CHECK(jg_series_first_mismatch(rep, JG_FORM_CORRECTED) == -1);
  char* s = nullptr;
  CHECK(jg_series_mismatch_values(rep, JG_FORM_CORRECTED, &s, nullptr) ==
        JG_EINVAL);

  CHECK(jg_series_form_matches(rep, JG_FORM_PAPER) == 0);
  CHECK(jg_series_first_mismatch(rep, JG_FORM_PAPER) == 0);
  char *got = nullptr, *want = nullptr;
  REQUIRE(jg_series_mismatch_values(rep, JG_FORM_PAPER, &got, &want) == JG_OK);
  CHECK(take(got) == "0");   // 4 - 2k at k = 2
  CHECK(take(want) == "2");  // seed term
  jg_series_report_free(rep);
  jg_series_report_free(nullptr);
  jg_sequence_free(seq);
}

TEST_CASE("identity metadata") {
  for (int i = 0; i < JG_IDENTITY_COUNT; ++i) {
    const jg_identity id = static_cast<jg_identity>(i);
    const char* name = jg_identity_name(id);
    REQUIRE(name != nullptr);
    jg_identity back;
    REQUIRE(jg_identity_from_name(name, &back) == JG_OK);
    CHECK(back == id);
    CHECK(jg_identity_indices(id) != nullptr);
  }
  CHECK(std::string(jg_identity_name(JG_IDENTITY_CATALAN_J)) == "catalan-j");
  CHECK(std::string(jg_identity_indices(JG_IDENTITY_CATALAN_J)) == "n,r");
  CHECK(std::string(jg_identity_indices(JG_IDENTITY_CONVOLUTION_J)) == "m,n");
  CHECK(std::string(jg_identity_indices(JG_IDENTITY_COMMUTATION)).empty());
  jg_identity out;
  CHECK(jg_identity_from_name("not-an-identity", &out) == JG_EINVAL);
  CHECK(jg_identity_from_name(nullptr, &out) == JG_EINVAL);
  CHECK(jg_identity_name(static_cast<jg_identity>(99)) == nullptr);
}

TEST_CASE("sweeps through the C surface") {
  jg_sweep* sw = nullptr;
  REQUIRE(jg_sweep_run(JG_IDENTITY_CATALAN_J, JG_FORM_PAPER, 2, 6, 20, nullptr,
                       nullptr, nullptr, &sw) == JG_OK);
  CHECK(jg_sweep_checks(sw) == 950);  // 190 instances per k, five k values
  CHECK(jg_sweep_failures(sw) == 855);
  REQUIRE(jg_sweep_has_counterexample(sw) == 1);

  int64_t k = 0;
  REQUIRE(jg_sweep_cx_k(sw, &k) == JG_OK);
  CHECK(k == 2);
  size_t count = 0;
  REQUIRE(jg_sweep_cx_index_count(sw, &count) == JG_OK);
  REQUIRE(count == 2);
  const char* name = nullptr;
  uint64_t value = 0;
  REQUIRE(jg_sweep_cx_index_name(sw, 0, &name) == JG_OK);
  REQUIRE(jg_sweep_cx_index_value(sw, 0, &value) == JG_OK);
  CHECK(std::string(name) == "n");
  CHECK(value == 3);
  REQUIRE(jg_sweep_cx_index_name(sw, 1, &name) == JG_OK);
  REQUIRE(jg_sweep_cx_index_value(sw, 1, &value) == JG_OK);
  CHECK(std::string(name) == "r");
  CHECK(value == 1);
  CHECK(jg_sweep_cx_index_name(sw, 2, &name) == JG_EINVAL);

  char *lhs = nullptr, *rhs = nullptr;
  REQUIRE(jg_sweep_cx_values(sw, &lhs, &rhs) == JG_OK);
  CHECK(take(lhs) == "-4");
  CHECK(take(rhs) == "4");
  jg_sweep_free(sw);

  REQUIRE(jg_sweep_run(JG_IDENTITY_CATALAN_J, JG_FORM_CORRECTED, 2, 6, 20,
                       nullptr, nullptr, nullptr, &sw) == JG_OK);
  CHECK(jg_sweep_checks(sw) == 950);
  CHECK(jg_sweep_failures(sw) == 0);
  CHECK(jg_sweep_has_counterexample(sw) == 0);
  CHECK(jg_sweep_cx_k(sw, &k) == JG_EINVAL);
  CHECK(jg_sweep_cx_values(sw, &lhs, &rhs) == JG_EINVAL);
  jg_sweep_free(sw);
  jg_sweep_free(nullptr);
}

TEST_CASE("sweep pins through the C surface") {
  jg_sweep* sw = nullptr;
  const int64_t pin_n = 3, pin_r = 2;
  REQUIRE(jg_sweep_run(JG_IDENTITY_CATALAN_LUCAS, JG_FORM_PAPER, 2, 2, 0,
                       &pin_n, &pin_r, nullptr, &sw) == JG_OK);
  CHECK(jg_sweep_checks(sw) == 1);
  CHECK(jg_sweep_failures(sw) == 1);
  char *lhs = nullptr, *rhs = nullptr;
  REQUIRE(jg_sweep_cx_values(sw, &lhs, &rhs) == JG_OK);
  CHECK(take(lhs) == "-16");
  CHECK(take(rhs) == "-64");
  jg_sweep_free(sw);

  // pinning an index the identity does not use is rejected
  const int64_t pin_m = 1;
  CHECK(jg_sweep_run(JG_IDENTITY_CASSINI_J, JG_FORM_CORRECTED, 2, 2, 5,
                     nullptr, nullptr, &pin_m, &sw) == JG_EINVAL);
  // negative pin is rejected
  const int64_t neg = -1;
  CHECK(jg_sweep_run(JG_IDENTITY_CATALAN_J, JG_FORM_CORRECTED, 2, 2, 5, &neg,
                     nullptr, nullptr, &sw) == JG_EINVAL);
  // bad ranges are rejected
  CHECK(jg_sweep_run(JG_IDENTITY_CASSINI_J, JG_FORM_CORRECTED, 1, 4, 5,
                     nullptr, nullptr, nullptr, &sw) == JG_EINVAL);
  CHECK(jg_sweep_run(JG_IDENTITY_CASSINI_J, JG_FORM_CORRECTED, 5, 4, 5,
                     nullptr, nullptr, nullptr, &sw) == JG_EINVAL);
  // unknown enum values are rejected
  CHECK(jg_sweep_run(static_cast<jg_identity>(77), JG_FORM_CORRECTED, 2, 4, 5,
                     nullptr, nullptr, nullptr, &sw) == JG_EINVAL);
  CHECK(jg_sweep_run(JG_IDENTITY_CASSINI_J, static_cast<jg_form>(7), 2, 4, 5,
                     nullptr, nullptr, nullptr, &sw) == JG_EINVAL);
}

TEST_CASE("commutation sweep has no indices") {
  jg_sweep* sw = nullptr;
  REQUIRE(jg_sweep_run(JG_IDENTITY_COMMUTATION, JG_FORM_CORRECTED, 2, 12, 0,
                       nullptr, nullptr, nullptr, &sw) == JG_OK);
  CHECK(jg_sweep_checks(sw) == 11);
  CHECK(jg_sweep_failures(sw) == 0);
  jg_sweep_free(sw);
}
