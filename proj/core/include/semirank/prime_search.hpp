#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "semirank/semigroup.hpp"

namespace semirank {

struct Factorization {
  ElementId left;
  ElementId right;
  friend bool operator==(Factorization const&, Factorization const&) = default;
};

// For every element c, all ordered pairs (a, b) with ab = c, in row-major
// scan order. Stored as one flat array with per-element offsets.
class FactorizationIndex {
 public:
  explicit FactorizationIndex(FiniteSemigroup const& s);

  std::span<Factorization const> of(ElementId c) const noexcept {
    return {pairs_.data() + offsets_[c], offsets_[c + 1] - offsets_[c]};
  }
  std::size_t order() const noexcept { return offsets_.size() - 1; }
  std::size_t total_pairs() const noexcept { return pairs_.size(); }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Factorization> pairs_;
};

FactorizationIndex build_factorization_index(FiniteSemigroup const& s);

struct SearchOptions {
  // A known proper prime subset; seeds the incumbent so that only strictly
  // better (or equal-size, lexicographically smaller) sets are explored.
  std::optional<SubsetMask> upper_bound_hint;
  unsigned threads = 1;
  // Prune with a greedy count of pairwise-disjoint violated factorizations.
  bool matching_lower_bound = false;
  // 0 means unlimited. When the budget runs out the best set found so far
  // is returned with proven_optimal = false.
  std::uint64_t max_nodes = 0;
};

struct SearchResult {
  SubsetMask witness;
  std::size_t size = 0;
  std::uint64_t nodes_visited = 0;
  bool proven_optimal = false;
  std::chrono::nanoseconds elapsed{0};
};

// Minimum-cardinality proper prime subset; among those of minimum size the
// lex_less-smallest. Throws NoProperPrimeSubset when the order is 1 and
// ParameterError when the hint is not a proper prime subset.
//
// Each seed c starts a depth-first search for prime sets whose least element
// is c. A node holds a partial set U plus a set of excluded elements. If
// some c' in U has a factorization c' = ab with a, b both outside U, one of
// a, b must join U in any prime superset, so the node branches on that
// constraint (the one with the fewest non-excluded repair options). The
// second branch excludes the first option, so branches are disjoint. A
// node with no violated factorization is prime.
SearchResult smallest_proper_prime_subset(FiniteSemigroup const& s,
                                          SearchOptions const& options = {});

// Complement of the smallest proper prime subset.
SubsetMask largest_proper_subsemigroup(FiniteSemigroup const& s,
                                       SearchOptions const& options = {});

// All proper prime subsets with at most size_limit elements, by size and
// then lex_less. Throws GuardExceeded when the number of candidate sets
// exceeds candidate_guard.
std::vector<SubsetMask> enumerate_prime_subsets_upto(FiniteSemigroup const& s,
                                                     std::size_t size_limit,
                                                     std::uint64_t candidate_guard = 10'000'000);

}  // namespace semirank
