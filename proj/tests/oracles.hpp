#pragma once

// Brute-force reference implementations used only by tests. They work on
// plain element sets and the raw Cayley table so they share no code path
// with the library algorithms they check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "semirank/semigroup.hpp"
#include "semirank/transformation.hpp"

namespace semirank::oracle {

using Set = std::set<ElementId>;

inline Set to_set(SubsetMask const& u) {
  Set s;
  for (ElementId x = 0; x < u.universe(); ++x) {
    if (u.contains(x)) s.insert(x);
  }
  return s;
}

inline Set from_bits(std::uint64_t bits, std::size_t m) {
  Set s;
  for (std::size_t x = 0; x < m; ++x) {
    if ((bits >> x) & 1U) s.insert(static_cast<ElementId>(x));
  }
  return s;
}

inline ElementId product(FiniteSemigroup const& s, ElementId a, ElementId b) {
  return s.table()[a * s.order() + b];
}

// Naive fixpoint: keep multiplying every pair until nothing new appears.
inline Set closure(FiniteSemigroup const& s, Set u) {
  bool grew = true;
  while (grew) {
    grew = false;
    Set const snapshot = u;
    for (auto a : snapshot) {
      for (auto b : snapshot) grew |= u.insert(product(s, a, b)).second;
    }
  }
  return u;
}

inline bool is_prime(FiniteSemigroup const& s, Set const& u) {
  if (u.empty()) return false;
  for (ElementId a = 0; a < s.order(); ++a) {
    for (ElementId b = 0; b < s.order(); ++b) {
      if (u.count(product(s, a, b)) && !u.count(a) && !u.count(b)) return false;
    }
  }
  return true;
}

inline bool is_subsemigroup(FiniteSemigroup const& s, Set const& u) {
  for (auto a : u) {
    for (auto b : u) {
      if (!u.count(product(s, a, b))) return false;
    }
  }
  return true;
}

inline bool is_independent(FiniteSemigroup const& s, Set const& u) {
  for (auto a : u) {
    Set rest = u;
    rest.erase(a);
    if (closure(s, rest).count(a)) return false;
  }
  return true;
}

// Smallest proper prime subset size over all 2^m subsets.
inline std::size_t min_prime_size(FiniteSemigroup const& s) {
  auto const m = s.order();
  std::size_t best = m;
  for (std::uint64_t bits = 1; bits + 1 < (std::uint64_t{1} << m); ++bits) {
    auto const u = from_bits(bits, m);
    if (u.size() < best && is_prime(s, u)) best = u.size();
  }
  return best;
}

// Largest proper subsemigroup size over all 2^m subsets.
inline std::size_t max_proper_subsemigroup_size(FiniteSemigroup const& s) {
  auto const m = s.order();
  std::size_t best = 0;
  for (std::uint64_t bits = 0; bits + 1 < (std::uint64_t{1} << m); ++bits) {
    auto const u = from_bits(bits, m);
    if (u.size() > best && is_subsemigroup(s, u)) best = u.size();
  }
  return best;
}

// r5 from the definition over all 2^m subsets: one more than the largest
// non-generating subset.
inline std::size_t large_rank(FiniteSemigroup const& s) {
  auto const m = s.order();
  std::size_t biggest_bad = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    auto const u = from_bits(bits, m);
    if (u.size() > biggest_bad && closure(s, u).size() != m) biggest_bad = u.size();
  }
  return biggest_bad + 1;
}

// All order-preserving maps of [n] (0-based images) by brute force over n^n.
inline std::vector<std::vector<std::uint32_t>> order_preserving_maps(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> w(n, 0);
  while (true) {
    if (std::is_sorted(w.begin(), w.end())) out.push_back(w);
    std::size_t pos = n;
    while (pos > 0 && w[pos - 1] == n - 1) w[--pos] = 0;
    if (pos == 0) break;
    ++w[pos - 1];
  }
  return out;
}

// Every order-preserving map whose image is [n] \ {k} and whose only
// non-singleton kernel class is {i, i+1} (1-based i, k).
inline std::vector<std::vector<std::uint32_t>> zeta_candidates(std::size_t n, std::size_t i,
                                                               std::size_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  for (auto const& w : order_preserving_maps(n)) {
    std::set<std::uint32_t> image(w.begin(), w.end());
    std::set<std::uint32_t> want;
    for (std::uint32_t y = 0; y < n; ++y) {
      if (y + 1 != k) want.insert(y);
    }
    if (image != want) continue;
    // With n-1 image points the kernel has exactly one pair of equal
    // neighbours; check it is (i, i+1).
    if (w[i - 1] == w[i]) out.push_back(w);
  }
  return out;
}

inline SubsetMask random_mask(std::size_t m, std::mt19937_64& rng, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  SubsetMask u(m);
  for (ElementId x = 0; x < m; ++x) {
    if (coin(rng)) u.insert(x);
  }
  return u;
}

}  // namespace semirank::oracle
