#include "semirank/ranks.hpp"

#include "semirank/combinatorics.hpp"
#include "semirank/errors.hpp"

namespace semirank {

namespace {

void check_level(std::size_t m, std::size_t k, RankGuards const& guards) {
  auto const c = binomial_saturating(m, k);
  if (c > guards.subset_candidates) {
    throw GuardExceeded("subset-candidates", c, guards.subset_candidates);
  }
}

void check_exhaustive(std::size_t m, RankGuards const& guards) {
  if (m > guards.exhaustive_order) {
    throw GuardExceeded("exhaustive-order", m, guards.exhaustive_order);
  }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("closed form overflows 64 bits");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("closed form overflows 64 bits");
  return r;
}

}  // namespace

std::string to_string(RankMethod m) {
  switch (m) {
    case RankMethod::search: return "search";
    case RankMethod::shortcut: return "shortcut";
    case RankMethod::formula: return "formula";
    case RankMethod::direct: return "direct";
  }
  return "unknown";
}

LargeRank large_rank(FiniteSemigroup const& s, SearchOptions const& options) {
  LargeRank out;
  if (s.order() == 1) {
    out.value = 1;
    out.method = RankMethod::direct;
    return out;
  }
  auto result = smallest_proper_prime_subset(s, options);
  out.value = s.order() - result.size + 1;
  out.largest_subsemigroup = result.witness.complement();
  out.prime_subset = std::move(result.witness);
  out.nodes_visited = result.nodes_visited;
  return out;
}

std::size_t large_rank_direct(FiniteSemigroup const& s, RankGuards const& guards) {
  auto const m = s.order();
  if (m > guards.direct_order) throw GuardExceeded("direct-order", m, guards.direct_order);
  // Supersets of generating sets generate, so the first level where every
  // subset generates is the answer.
  for (std::size_t k = 1; k <= m; ++k) {
    bool all = true;
    for (KSubsets it(m, k); !it.done() && all; it.next()) all = is_generating(s, it.mask());
    if (all) return k;
  }
  return m;
}

std::optional<std::size_t> large_rank_via_indecomposable(FiniteSemigroup const& s) {
  if (indecomposable_elements(s).empty()) return std::nullopt;
  return s.order();
}

RankWitness lower_rank(FiniteSemigroup const& s, RankGuards const& guards) {
  auto const m = s.order();
  for (std::size_t k = 1; k <= m; ++k) {
    check_level(m, k, guards);
    for (KSubsets it(m, k); !it.done(); it.next()) {
      auto mask = it.mask();
      if (is_generating(s, mask)) return {k, std::move(mask)};
    }
  }
  return {m, s.full_mask()};
}

RankWitness small_rank(FiniteSemigroup const& s, RankGuards const& guards) {
  auto const m = s.order();
  for (std::size_t k = 2; k <= m; ++k) {
    check_level(m, k, guards);
    for (KSubsets it(m, k); !it.done(); it.next()) {
      auto mask = it.mask();
      if (!is_independent(s, mask)) return {k - 1, std::move(mask)};
    }
  }
  return {m, std::nullopt};
}

RankWitness upper_rank(FiniteSemigroup const& s, RankGuards const& guards) {
  auto const m = s.order();
  check_exhaustive(m, guards);
  for (std::size_t k = m; k >= 1; --k) {
    for (KSubsets it(m, k); !it.done(); it.next()) {
      auto mask = it.mask();
      if (is_independent(s, mask)) return {k, std::move(mask)};
    }
  }
  return {0, std::nullopt};  // unreachable: singletons are independent
}

RankWitness intermediate_rank(FiniteSemigroup const& s, RankGuards const& guards) {
  auto const m = s.order();
  check_exhaustive(m, guards);
  for (std::size_t k = m; k >= 1; --k) {
    for (KSubsets it(m, k); !it.done(); it.next()) {
      auto mask = it.mask();
      if (is_generating(s, mask) && is_independent(s, mask)) return {k, std::move(mask)};
    }
  }
  // A minimum generating set is always independent, so this is unreachable.
  return {0, std::nullopt};
}

std::uint64_t closed_form(ClosedForm form, std::uint64_t n, std::uint64_t group_order) {
  if (n > 30) throw ParameterError("closed forms are evaluated for n <= 30");
  switch (form) {
    case ClosedForm::brandt_large_rank: {
      if (n < 2) throw ParameterError("Brandt large rank needs n >= 2");
      if (group_order < 1) throw ParameterError("group order must be positive");
      return checked_add(checked_mul(n * n - n + 1, group_order), 2);
    }
    case ClosedForm::order_preserving_large_rank: {
      if (n < 2) throw ParameterError("O_n large rank needs n >= 2");
      if (n == 2) return 2;
      return binomial(2 * n - 1, n - 1) - n + 1;
    }
    case ClosedForm::order_preserving_order: {
      if (n < 1) throw ParameterError("O_n order needs n >= 1");
      return binomial(2 * n - 1, n - 1) - 1;
    }
  }
  throw ParameterError("unknown closed form");
}

bool RankReport::chain_holds() const noexcept {
  std::optional<std::size_t> const values[] = {r1, r2, r3, r4, r5};
  std::optional<std::size_t> prev;
  for (auto const& v : values) {
    if (!v) continue;
    if (prev && *prev > *v) return false;
    prev = v;
  }
  return true;
}

RankReport rank_chain_check(FiniteSemigroup const& s, RankGuards const& guards,
                            SearchOptions const& options) {
  RankReport report;
  auto r1 = small_rank(s, guards);
  report.r1 = r1.value;
  report.r1_certificate = std::move(r1.witness);
  auto r2 = lower_rank(s, guards);
  report.r2 = r2.value;
  report.r2_witness = std::move(r2.witness);
  auto r3 = intermediate_rank(s, guards);
  report.r3 = r3.value;
  report.r3_witness = std::move(r3.witness);
  auto r4 = upper_rank(s, guards);
  report.r4 = r4.value;
  report.r4_witness = std::move(r4.witness);
  auto r5 = large_rank(s, options);
  report.r5 = r5.value;
  report.r5_method = r5.method;
  report.r5_prime_subset = std::move(r5.prime_subset);
  report.r5_subsemigroup = std::move(r5.largest_subsemigroup);
  if (auto shortcut = large_rank_via_indecomposable(s); shortcut && *shortcut != r5.value) {
    report.notes.push_back("indecomposable shortcut disagrees with prime search");
  }
  return report;
}

}  // namespace semirank
