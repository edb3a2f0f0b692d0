#include "jacgen/sequence.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using namespace jacgen;
using u64 = std::uint64_t;

namespace {

// Reference rows for k = 2, 3, 4 and n = 0..10, transcribed from the
// published value tables both families come with.
constexpr long kRefK[3] = {2, 3, 4};
constexpr long kRefJ[3][11] = {
    {0, 1, 1, 3, 5, 11, 21, 43, 85, 171, 341},
    {0, 1, 2, 7, 20, 61, 182, 547, 1640, 4921, 14762},
    {0, 1, 3, 13, 51, 205, 819, 3277, 13107, 52429, 209715},
};
constexpr long kRefLucas[3][11] = {
    {2, 2, 6, 10, 22, 42, 86, 170, 342, 682, 1366},
    {2, 2, 10, 26, 82, 242, 730, 2186, 6562, 19682, 59050},
    {2, 2, 14, 50, 206, 818, 3278, 13106, 52430, 209714, 838862},
};

// OEIS A001045 prefix: the classical Jacobsthal numbers, which the k = 2
// member of the J family must reproduce exactly.
constexpr long kClassicalJacobsthal[34] = {
    0,         1,         1,         3,         5,        11,       21,
    43,        85,        171,       341,       683,      1365,     2731,
    5461,      10923,     21845,     43691,     87381,    174763,   349525,
    699051,    1398101,   2796203,   5592405,   11184811, 22369621, 44739243,
    89478485,  178956971, 357913941, 715827883, 1431655765, 2863311531,
};

SequenceParams jac(long k) { return {SequenceKind::Jacobsthal, k}; }
SequenceParams luc(long k) { return {SequenceKind::JacobsthalLucas, k}; }

}  // namespace

TEST_CASE("parameters reject k < 2 and accept k >= 2") {
  CHECK_THROWS_AS(SequenceParams(SequenceKind::Jacobsthal, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(SequenceParams(SequenceKind::JacobsthalLucas, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(SequenceParams(SequenceKind::Jacobsthal, -7),
                  std::invalid_argument);
  CHECK_NOTHROW(SequenceParams(SequenceKind::Jacobsthal, 2));
  CHECK_NOTHROW(SequenceParams(SequenceKind::JacobsthalLucas, 1000));
}

TEST_CASE("seed terms") {
  CHECK(initial_terms(jac(5)) == std::pair<Int, Int>{0, 1});
  CHECK(initial_terms(luc(5)) == std::pair<Int, Int>{2, 2});
}

TEST_CASE("reference tables are reproduced by every strategy") {
  for (int row = 0; row < 3; ++row) {
    const long k = kRefK[row];
    for (u64 n = 0; n <= 10; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      const Int j_expect = kRefJ[row][n];
      const Int l_expect = kRefLucas[row][n];
      CHECK(eval_iter(jac(k), n) == j_expect);
      CHECK(eval_binet(jac(k), n) == j_expect);
      CHECK(eval_matrix(jac(k), n) == j_expect);
      CHECK(eval_iter(luc(k), n) == l_expect);
      CHECK(eval_binet(luc(k), n) == l_expect);
      CHECK(eval_matrix(luc(k), n) == l_expect);
    }
  }
}

TEST_CASE("spot values") {
  CHECK(eval_binet(jac(4), 3) == 13);
  CHECK(eval_matrix(jac(4), 7) == 3277);
  CHECK(eval_binet(luc(3), 10) == 59050);
  CHECK(eval_matrix(luc(2), 9) == 682);
  CHECK(eval_iter(jac(6), 1) == 1);
  CHECK(eval_matrix(jac(6), 1) == 1);
}

TEST_CASE("three strategies agree on a dense grid") {
  for (long k = 2; k <= 8; ++k) {
    for (auto kind : {SequenceKind::Jacobsthal, SequenceKind::JacobsthalLucas}) {
      const SequenceParams p{kind, k};
      Int prev2, prev1;
      for (u64 n = 0; n <= 80; ++n) {
        const Int it = eval_iter(p, n);
        CAPTURE(k);
        CAPTURE(n);
        CHECK(it == eval_binet(p, n));
        CHECK(it == eval_matrix(p, n));
        // and they satisfy the defining recurrence
        if (n >= 2) CHECK(it == (k - 1) * prev1 + k * prev2);
        prev2 = prev1;
        prev1 = it;
      }
    }
  }
}

TEST_CASE("terms grow strictly from n = 2 on") {
  for (long k : {2L, 3L, 7L}) {
    for (auto kind : {SequenceKind::Jacobsthal, SequenceKind::JacobsthalLucas}) {
      const SequenceParams p{kind, k};
      Int prev = eval_iter(p, 2);
      CHECK(prev > 0);
      for (u64 n = 3; n <= 30; ++n) {
        const Int cur = eval_iter(p, n);
        CHECK(cur > prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("k = 2 reproduces the classical Jacobsthal numbers") {
  for (u64 n = 0; n < 34; ++n) {
    CAPTURE(n);
    CHECK(eval_iter(jac(2), n) == Int(kClassicalJacobsthal[n]));
  }
}

TEST_CASE("k = 2 companion terms are a shifted double of the J terms") {
  // j(2, n) = 2 * J(2, n+1): the companion family at k = 2 is NOT the
  // classical Jacobsthal-Lucas sequence; its seeds force this shape instead.
  for (u64 n = 0; n <= 33; ++n) {
    CAPTURE(n);
    CHECK(eval_iter(luc(2), n) == 2 * eval_iter(jac(2), n + 1));
  }
}

TEST_CASE("closed-form division is exact across the grid") {
  // (k^n - (-1)^n) and (4k^n + 2(k-1)(-1)^n) must both be multiples of k+1.
  for (long k = 2; k <= 12; ++k) {
    for (u64 n = 0; n <= 60; ++n) {
      const int sign = parity_sign(n);
      const Int kn = pow_ui(static_cast<unsigned long>(k), n);
      CAPTURE(k);
      CAPTURE(n);
      CHECK(checked_div(kn - sign, Int(k) + 1).has_value());
      CHECK(checked_div(4 * kn + 2 * (Int(k) - 1) * sign, Int(k) + 1).has_value());
    }
  }
}

TEST_CASE("term_stream yields the inclusive window") {
  SUBCASE("full window from zero") {
    TermStream s(jac(2), 0, 10);
    for (u64 n = 0; n <= 10; ++n) {
      auto t = s.next();
      REQUIRE(t.has_value());
      CHECK(t->first == n);
      CHECK(t->second == Int(kRefJ[0][n]));
    }
    CHECK_FALSE(s.next().has_value());
    CHECK_FALSE(s.next().has_value());  // stays exhausted
  }
  SUBCASE("lucas window") {
    TermStream s(luc(4), 0, 4);
    std::vector<Int> got;
    while (auto t = s.next()) got.push_back(t->second);
    CHECK(got == std::vector<Int>{2, 2, 14, 50, 206});
  }
  SUBCASE("single-term window away from the seeds") {
    TermStream s(jac(3), 5, 5);
    auto t = s.next();
    REQUIRE(t.has_value());
    CHECK(t->first == 5);
    CHECK(t->second == 61);
    CHECK_FALSE(s.next().has_value());
  }
  SUBCASE("empty window is rejected") {
    CHECK_THROWS_AS(TermStream(jac(2), 3, 2), std::out_of_range);
  }
}

TEST_CASE("term_stream seek matches direct evaluation at random offsets") {
  std::mt19937_64 rng(20260816u);
  std::uniform_int_distribution<u64> from_dist(1, 300);
  for (int trial = 0; trial < 40; ++trial) {
    const long k = 2 + static_cast<long>(rng() % 7);
    const u64 from = from_dist(rng);
    const u64 to = from + rng() % 5;
    const auto kind = (rng() & 1) ? SequenceKind::Jacobsthal
                                  : SequenceKind::JacobsthalLucas;
    const SequenceParams p{kind, k};
    TermStream s(p, from, to);
    for (u64 n = from; n <= to; ++n) {
      auto t = s.next();
      REQUIRE(t.has_value());
      CAPTURE(k);
      CAPTURE(from);
      CAPTURE(n);
      CHECK(t->first == n);
      CHECK(t->second == eval_iter(p, n));
    }
    CHECK_FALSE(s.next().has_value());
  }
}

TEST_CASE("materialized window helper") {
  CHECK(terms(jac(3), 0, 4) == std::vector<Int>{0, 1, 2, 7, 20});
  CHECK(terms(luc(2), 8, 10) == std::vector<Int>{342, 682, 1366});
}

TEST_CASE("prefix sums") {
  CHECK(prefix_sum(jac(3), 4) == 30);
  CHECK(prefix_sum(luc(3), 3) == 40);
  CHECK(prefix_sum(jac(5), 0) == 0);
  CHECK(prefix_sum(luc(5), 0) == 2);
  for (long k : {2L, 4L}) {
    for (auto kind : {SequenceKind::Jacobsthal, SequenceKind::JacobsthalLucas}) {
      const SequenceParams p{kind, k};
      Int acc = 0;
      for (u64 n = 0; n <= 25; ++n) {
        acc += eval_iter(p, n);
        CAPTURE(k);
        CAPTURE(n);
        CHECK(prefix_sum(p, n) == acc);
      }
    }
  }
}
