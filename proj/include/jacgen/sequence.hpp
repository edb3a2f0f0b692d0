#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "jacgen/bigint.hpp"

namespace jacgen {

// Both families satisfy x(n) = (k-1)*x(n-1) + k*x(n-2) for an integer
// parameter k >= 2; they differ only in the two seed terms.
enum class SequenceKind {
  Jacobsthal,       // seeds 0, 1
  JacobsthalLucas,  // seeds 2, 2
};

class SequenceParams {
 public:
  SequenceParams(SequenceKind kind, long k);

  SequenceKind kind() const { return kind_; }
  long k() const { return k_; }

  friend bool operator==(const SequenceParams&, const SequenceParams&) = default;

 private:
  SequenceKind kind_;
  long k_;
};

// Seed pair (term 0, term 1).
std::pair<Int, Int> initial_terms(const SequenceParams& params);

// The three evaluation strategies. All return the exact same value for the
// same inputs; keeping them separate is the point — each one is a witness
// for the others.
Int eval_iter(const SequenceParams& params, std::uint64_t n);    // O(n) recurrence walk
Int eval_binet(const SequenceParams& params, std::uint64_t n);   // closed form in k^n
Int eval_matrix(const SequenceParams& params, std::uint64_t n);  // 2x2 power, O(log n)

// Lazy run of consecutive terms over the inclusive window [from, to].
// Construction seeks to `from` in O(log from) big-int multiplications; each
// next() then costs one recurrence step.
class TermStream {
 public:
  TermStream(const SequenceParams& params, std::uint64_t from, std::uint64_t to);

  // Yields (index, term) pairs in ascending index order; nullopt once the
  // window is exhausted.
  std::optional<std::pair<std::uint64_t, Int>> next();

  const SequenceParams& params() const { return params_; }

 private:
  SequenceParams params_;
  std::uint64_t to_;
  std::uint64_t idx_;       // index of the term next() will yield
  bool done_ = false;
  Int cur_;                 // term at idx_
  std::optional<Int> prev_; // term at idx_ - 1; empty only at idx_ == 0
};

// Materialized window [from, to].
std::vector<Int> terms(const SequenceParams& params, std::uint64_t from,
                       std::uint64_t to);

// Sum of terms 0..n inclusive.
Int prefix_sum(const SequenceParams& params, std::uint64_t n);

}  // namespace jacgen
