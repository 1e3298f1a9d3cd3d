#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semirank/prime_search.hpp"
#include "semirank/semigroup.hpp"

namespace semirank {

// Limits on exhaustive subset searches. Exceeding one throws GuardExceeded.
struct RankGuards {
  // Largest C(m, k) any single size level of an r1/r2 scan may enumerate.
  std::uint64_t subset_candidates = 10'000'000;
  // r3 and r4 scan all subsets; capped by order.
  std::size_t exhaustive_order = 12;
  // r5 straight from its definition.
  std::size_t direct_order = 14;
};

enum class RankMethod { search, shortcut, formula, direct };

std::string to_string(RankMethod m);

struct RankWitness {
  std::size_t value = 0;
  // Certificate; absent only for r1 when every subset is independent.
  std::optional<SubsetMask> witness;
};

struct LargeRank {
  std::size_t value = 0;
  RankMethod method = RankMethod::search;
  // Smallest proper prime subset and its complement; absent for order 1.
  std::optional<SubsetMask> prime_subset;
  std::optional<SubsetMask> largest_subsemigroup;
  std::uint64_t nodes_visited = 0;
};

// r5 via the smallest proper prime subset V: m - |V| + 1; 1 for order 1.
LargeRank large_rank(FiniteSemigroup const& s, SearchOptions const& options = {});

// r5 straight from its definition: least k such that every k-subset generates.
std::size_t large_rank_direct(FiniteSemigroup const& s, RankGuards const& guards = {});

// m when some element is indecomposable, otherwise nothing.
std::optional<std::size_t> large_rank_via_indecomposable(FiniteSemigroup const& s);

// r2: smallest generating set, first in lex_less order at that size.
RankWitness lower_rank(FiniteSemigroup const& s, RankGuards const& guards = {});

// r1: (size of the smallest dependent subset) - 1, or m if there is none.
// The witness is that dependent subset.
RankWitness small_rank(FiniteSemigroup const& s, RankGuards const& guards = {});

// r4: largest independent set.
RankWitness upper_rank(FiniteSemigroup const& s, RankGuards const& guards = {});

// r3: largest independent generating set.
RankWitness intermediate_rank(FiniteSemigroup const& s, RankGuards const& guards = {});

enum class ClosedForm {
  brandt_large_rank,           // (n^2 - n + 1)|G| + 2, n >= 2
  order_preserving_large_rank,  // C(2n-1, n-1) - n + 1, n >= 3; 2 at n = 2
  order_preserving_order,       // C(2n-1, n-1) - 1
};

// Checked 64-bit evaluation. group_order is ignored by the O_n forms.
// Throws ParameterError outside the domain (n <= 30) and OverflowError.
std::uint64_t closed_form(ClosedForm form, std::uint64_t n, std::uint64_t group_order = 1);

struct RankReport {
  std::optional<std::size_t> r1, r2, r3, r4, r5;
  std::optional<SubsetMask> r1_certificate;  // smallest dependent subset
  std::optional<SubsetMask> r2_witness;
  std::optional<SubsetMask> r3_witness;
  std::optional<SubsetMask> r4_witness;
  std::optional<SubsetMask> r5_prime_subset;
  std::optional<SubsetMask> r5_subsemigroup;
  RankMethod r5_method = RankMethod::search;
  std::vector<std::string> notes;

  bool complete() const noexcept { return r1 && r2 && r3 && r4 && r5; }
  // r1 <= r2 <= r3 <= r4 <= r5 over the values present.
  bool chain_holds() const noexcept;
};

// Computes all five ranks and checks the chain. Guard errors propagate.
RankReport rank_chain_check(FiniteSemigroup const& s, RankGuards const& guards = {},
                            SearchOptions const& options = {});

}  // namespace semirank
