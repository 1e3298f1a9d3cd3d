#include "semirank/combinatorics.hpp"

#include <algorithm>
#include <limits>

#include "semirank/errors.hpp"

namespace semirank {

namespace {

constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();

template <bool Saturate>
std::uint64_t pascal(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // row[j] holds C(i, j) for the current row i, truncated at column k.
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    for (std::uint64_t j = std::min(i, k); j >= 1; --j) {
      if (row[j] > kMax - row[j - 1]) {
        if constexpr (Saturate) {
          row[j] = kMax;
        } else {
          throw OverflowError("C(" + std::to_string(n) + ", " + std::to_string(k) +
                              ") overflows 64 bits");
        }
      } else {
        row[j] += row[j - 1];
      }
    }
  }
  return row[k];
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) { return pascal<false>(n, k); }

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) noexcept {
  // Near-central coefficients of huge n saturate long before the loop ends.
  if (k <= n && n > 4096 && std::min(k, n - k) > 8) return kMax;
  return pascal<true>(n, k);
}

KSubsets::KSubsets(std::size_t m, std::size_t k) : m_(m), rev_(k), elems_(k) {
  if (k > m) {
    done_ = true;
    return;
  }
  for (std::size_t t = 0; t < k; ++t) rev_[t] = t;
  sync();
}

void KSubsets::next() {
  auto const k = rev_.size();
  // Colex successor on the reversed indices.
  std::size_t j = 0;
  while (j < k) {
    auto const cap = j + 1 < k ? rev_[j + 1] : m_;
    if (rev_[j] + 1 < cap) break;
    ++j;
  }
  if (j == k) {
    done_ = true;
    return;
  }
  ++rev_[j];
  for (std::size_t t = 0; t < j; ++t) rev_[t] = t;
  sync();
}

void KSubsets::sync() {
  auto const k = rev_.size();
  for (std::size_t t = 0; t < k; ++t) {
    elems_[k - 1 - t] = static_cast<ElementId>(m_ - 1 - rev_[t]);
  }
}

SubsetMask KSubsets::mask() const { return SubsetMask::of(m_, elems_); }

}  // namespace semirank
