#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "semirank/subset_mask.hpp"

namespace semirank {

// C(n, k) by Pascal accumulation. Throws OverflowError past 2^64 - 1.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// C(n, k), clamped to UINT64_MAX instead of throwing.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) noexcept;

// Walks the k-subsets of {0, ..., m-1} in lex_less order of their masks,
// i.e. starting from {m-k, ..., m-1} and ending at {0, ..., k-1}.
class KSubsets {
 public:
  KSubsets(std::size_t m, std::size_t k);

  bool done() const noexcept { return done_; }
  void next();

  // Members in increasing order.
  std::span<ElementId const> elements() const noexcept { return elems_; }
  SubsetMask mask() const;

 private:
  void sync();

  std::size_t m_;
  std::vector<std::size_t> rev_;  // reversed indices m-1-x, increasing
  std::vector<ElementId> elems_;
  bool done_ = false;
};

}  // namespace semirank
