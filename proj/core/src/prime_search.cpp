#include "semirank/prime_search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "semirank/combinatorics.hpp"
#include "semirank/errors.hpp"

namespace semirank {

FactorizationIndex::FactorizationIndex(FiniteSemigroup const& s) {
  auto const m = s.order();
  offsets_.assign(m + 1, 0);
  for (auto p : s.table()) ++offsets_[p + 1];
  for (std::size_t c = 0; c < m; ++c) offsets_[c + 1] += offsets_[c];
  pairs_.resize(m * m);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (ElementId a = 0; a < m; ++a) {
    auto const r = s.row(a);
    for (ElementId b = 0; b < m; ++b) pairs_[fill[r[b]]++] = {a, b};
  }
}

FactorizationIndex build_factorization_index(FiniteSemigroup const& s) {
  return FactorizationIndex(s);
}

namespace {

enum : std::uint8_t { kFree = 0, kIn = 1, kOut = 2 };

struct Shared {
  FiniteSemigroup const& s;
  FactorizationIndex const& index;
  SearchOptions const& options;
  std::atomic<std::size_t> best_size;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
  std::atomic<ElementId> next_seed{0};
};

struct Selection {
  bool violated = false;
  std::size_t count = 0;
  ElementId options[2] = {0, 0};
  std::size_t lower_bound = 0;
};

class Worker {
 public:
  explicit Worker(Shared& shared)
      : sh_(shared),
        status_(shared.s.order(), kFree),
        used_(shared.s.order(), 0) {}

  void run() {
    auto const m = static_cast<ElementId>(sh_.s.order());
    for (ElementId seed = sh_.next_seed.fetch_add(1); seed < m && !sh_.aborted.load();
         seed = sh_.next_seed.fetch_add(1)) {
      // Prime sets found from this seed have least element `seed`.
      std::fill(status_.begin(), status_.begin() + seed, kOut);
      std::fill(status_.begin() + seed, status_.end(), kFree);
      members_.clear();
      add(seed);
      visit();
    }
  }

  std::optional<SubsetMask> const& best() const noexcept { return best_; }

 private:
  void add(ElementId x) {
    status_[x] = kIn;
    members_.insert(std::lower_bound(members_.begin(), members_.end(), x), x);
  }

  void remove(ElementId x) {
    status_[x] = kFree;
    members_.erase(std::lower_bound(members_.begin(), members_.end(), x));
  }

  Selection select() {
    Selection sel;
    sel.count = 3;
    bool const want_bound = sh_.options.matching_lower_bound;
    touched_.clear();
    for (auto c : members_) {
      for (auto const& f : sh_.index.of(c)) {
        if (status_[f.left] == kIn || status_[f.right] == kIn) continue;
        ElementId opts[2];
        std::size_t n = 0;
        if (status_[f.left] == kFree) opts[n++] = f.left;
        if (f.right != f.left && status_[f.right] == kFree) opts[n++] = f.right;
        if (n < sel.count) {
          sel.violated = true;
          sel.count = n;
          std::copy(opts, opts + n, sel.options);
          if (n == 0) {
            for (auto x : touched_) used_[x] = 0;
            return sel;
          }
        }
        if (want_bound && std::none_of(opts, opts + n, [&](ElementId x) { return used_[x]; })) {
          ++sel.lower_bound;
          for (std::size_t t = 0; t < n; ++t) {
            used_[opts[t]] = 1;
            touched_.push_back(opts[t]);
          }
        }
      }
    }
    for (auto x : touched_) used_[x] = 0;
    if (!sel.violated) sel.count = 0;
    return sel;
  }

  void visit() {
    auto const limit = sh_.options.max_nodes;
    if (sh_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > limit && limit != 0) {
      sh_.aborted.store(true);
      return;
    }
    if (sh_.aborted.load(std::memory_order_relaxed)) return;

    auto const sel = select();
    if (!sel.violated) {
      record();
      return;
    }
    if (sel.count == 0) return;
    auto const bound = sh_.best_size.load(std::memory_order_relaxed);
    if (members_.size() + std::max<std::size_t>(1, sel.lower_bound) > bound) return;

    for (std::size_t t = 0; t < sel.count; ++t) {
      auto const x = sel.options[t];
      add(x);
      visit();
      remove(x);
      // Later branches avoid x: sets containing x were covered above.
      if (t + 1 < sel.count) status_[x] = kOut;
    }
    for (std::size_t t = 0; t + 1 < sel.count; ++t) status_[sel.options[t]] = kFree;
  }

  void record() {
    auto mask = SubsetMask::of(sh_.s.order(), members_);
    if (!best_ || shortlex_less(mask, *best_)) best_ = std::move(mask);
    auto const size = members_.size();
    auto cur = sh_.best_size.load();
    while (size < cur && !sh_.best_size.compare_exchange_weak(cur, size)) {
    }
  }

  Shared& sh_;
  std::vector<std::uint8_t> status_;
  std::vector<std::uint8_t> used_;
  std::vector<ElementId> touched_;
  std::vector<ElementId> members_;
  std::optional<SubsetMask> best_;
};

}  // namespace

SearchResult smallest_proper_prime_subset(FiniteSemigroup const& s,
                                          SearchOptions const& options) {
  auto const start = std::chrono::steady_clock::now();
  auto const m = s.order();
  if (m < 2) throw NoProperPrimeSubset();

  // The complement of an idempotent is always a proper prime subset.
  auto const idem = idempotents(s);
  SubsetMask incumbent = s.full_mask();
  incumbent.erase(idem.elements().front());

  if (options.upper_bound_hint) {
    auto const& hint = *options.upper_bound_hint;
    if (hint.universe() != m || hint.is_full() || !is_prime_subset(s, hint)) {
      throw ParameterError("upper bound hint is not a proper prime subset");
    }
    if (shortlex_less(hint, incumbent)) incumbent = hint;
  }

  FactorizationIndex const index(s);
  Shared shared{s, index, options, incumbent.count()};

  auto const threads = std::max(1U, options.threads);
  std::vector<Worker> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) workers.emplace_back(shared);
  if (threads == 1) {
    workers.front().run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (auto& w : workers) pool.emplace_back([&w] { w.run(); });
  }

  for (auto const& w : workers) {
    if (w.best() && shortlex_less(*w.best(), incumbent)) incumbent = *w.best();
  }

  SearchResult result;
  result.size = incumbent.count();
  result.witness = std::move(incumbent);
  result.nodes_visited = shared.nodes.load();
  result.proven_optimal = !shared.aborted.load();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

SubsetMask largest_proper_subsemigroup(FiniteSemigroup const& s, SearchOptions const& options) {
  return smallest_proper_prime_subset(s, options).witness.complement();
}

std::vector<SubsetMask> enumerate_prime_subsets_upto(FiniteSemigroup const& s,
                                                     std::size_t size_limit,
                                                     std::uint64_t candidate_guard) {
  auto const m = s.order();
  auto const limit = std::min(size_limit, m - 1);
  std::uint64_t candidates = 0;
  for (std::size_t k = 1; k <= limit; ++k) {
    auto const c = binomial_saturating(m, k);
    candidates = c > UINT64_MAX - candidates ? UINT64_MAX : candidates + c;
  }
  if (candidates > candidate_guard) {
    throw GuardExceeded("prime-oracle-candidates", candidates, candidate_guard);
  }

  FactorizationIndex const index(s);
  std::vector<std::uint8_t> in(m, 0);
  std::vector<SubsetMask> out;
  for (std::size_t k = 1; k <= limit; ++k) {
    for (KSubsets it(m, k); !it.done(); it.next()) {
      auto const elems = it.elements();
      for (auto x : elems) in[x] = 1;
      bool prime = true;
      for (auto c : elems) {
        for (auto const& f : index.of(c)) {
          if (!in[f.left] && !in[f.right]) {
            prime = false;
            break;
          }
        }
        if (!prime) break;
      }
      for (auto x : elems) in[x] = 0;
      if (prime) out.push_back(it.mask());
    }
  }
  return out;
}

}  // namespace semirank
