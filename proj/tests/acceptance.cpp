// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "semirank/semirank.hpp"

using namespace semirank;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_ms;  // 0 means no time limit
  std::function<Outcome()> body;
};

// Collects "expected vs got" notes, keeping the first few failures.
class Tally {
 public:
  void expect(bool cond, std::string const& what) {
    ++checks_;
    if (cond) return;
    ++failures_;
    if (failures_ <= 5) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  Outcome done(std::string summary) const {
    std::ostringstream os;
    os << summary << " checks=" << checks_ << " failures=" << failures_;
    if (!notes_.empty()) os << " [" << notes_ << "]";
    return {failures_ == 0, os.str()};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string notes_;
};

std::string eq_note(std::string const& what, std::uint64_t got, std::uint64_t want) {
  return what + " got " + std::to_string(got) + " want " + std::to_string(want);
}

std::vector<NamedSemigroup> corpus_upto(std::size_t max_order) {
  std::vector<NamedSemigroup> out;
  for (auto& n : small_corpus()) {
    if (n.semigroup.order() <= max_order) out.push_back(std::move(n));
  }
  return out;
}

struct BrandtCase {
  char const* group;
  std::size_t n;
  std::uint64_t expected;
};

Outcome brandt_large_rank() {
  Tally t;
  for (auto const& c : std::vector<BrandtCase>{{"Z1", 2, 5},
                                               {"Z1", 3, 9},
                                               {"Z1", 4, 15},
                                               {"Z2", 2, 8},
                                               {"Z3", 2, 11},
                                               {"Z2", 3, 16},
                                               {"S3", 2, 20}}) {
    auto const g = group_by_name(c.group);
    auto const b = brandt(g, c.n);
    auto const got = large_rank(b.semigroup).value;
    auto const name = std::string(c.group) + "/n=" + std::to_string(c.n);
    t.expect(got == c.expected, eq_note(name, got, c.expected));
    auto const formula = closed_form(ClosedForm::brandt_large_rank, c.n, g.order());
    t.expect(formula == c.expected, eq_note(name + " formula", formula, c.expected));
  }
  return t.done("7 Brandt instances");
}

Outcome bn_corollary() {
  Tally t;
  for (std::size_t n = 2; n <= 4; ++n) {
    auto const got = large_rank(brandt(cyclic_group(1), n).semigroup).value;
    t.expect(got == n * n - n + 3, eq_note("B" + std::to_string(n), got, n * n - n + 3));
  }
  return t.done("n=2..4");
}

Outcome on_large_rank() {
  Tally t;
  std::uint64_t const expected[] = {8, 32, 122};
  for (std::size_t n = 3; n <= 5; ++n) {
    auto const got = large_rank(order_preserving_singular(n).semigroup).value;
    t.expect(got == expected[n - 3], eq_note("O" + std::to_string(n), got, expected[n - 3]));
    auto const formula = closed_form(ClosedForm::order_preserving_large_rank, n);
    t.expect(formula == expected[n - 3], eq_note("formula", formula, expected[n - 3]));
  }
  auto const o2 = large_rank_direct(order_preserving_singular(2).semigroup);
  t.expect(o2 == 2, eq_note("O2 direct", o2, 2));
  return t.done("n=3..5 plus O2 direct");
}

Outcome on_order() {
  Tally t;
  std::uint64_t const expected[] = {2, 9, 34, 125, 461, 1715};
  for (std::size_t n = 2; n <= 7; ++n) {
    auto const got = order_preserving_singular(n).semigroup.order();
    t.expect(got == expected[n - 2], eq_note("|O" + std::to_string(n) + "|", got, expected[n - 2]));
    auto const formula = closed_form(ClosedForm::order_preserving_order, n);
    t.expect(formula == got, eq_note("formula", formula, got));
  }
  return t.done("n=2..7");
}

Outcome on_prime_lower_bound() {
  Tally t;
  for (std::size_t n = 3; n <= 5; ++n) {
    auto const& s = order_preserving_singular(n).semigroup;
    auto const small = enumerate_prime_subsets_upto(s, n - 2);
    t.expect(small.empty(), "O" + std::to_string(n) + " has a prime subset of size <= n-2");
    auto const w = smallest_proper_prime_subset(s).size;
    t.expect(w == n - 1, eq_note("O" + std::to_string(n) + " witness size", w, n - 1));
  }
  return t.done("n=3..5");
}

Outcome zeta_law() {
  Tally t;
  for (std::size_t n = 3; n <= 6; ++n) {
    for (std::size_t p = 1; p <= n - 1; ++p)
      for (std::size_t r = 1; r <= n - 1; ++r)
        for (std::size_t q = 1; q <= n; ++q)
          for (std::size_t s = 1; s <= n; ++s) {
            auto const prod = compose(zeta(n, p, q), zeta(n, r, s));
            bool const expect_top = q == r || q == r + 1;
            auto const where = "n=" + std::to_string(n) + " p=" + std::to_string(p) +
                               " q=" + std::to_string(q) + " r=" + std::to_string(r) +
                               " s=" + std::to_string(s);
            if (expect_top) {
              t.expect(prod == zeta(n, p, s), where);
            } else {
              t.expect(prod.rank() < n - 1, where);
            }
          }
  }
  return t.done("n=3..6");
}

Outcome witness_primality() {
  Tally t;
  for (auto const& [gname, n] : std::vector<std::pair<char const*, std::size_t>>{
           {"Z1", 2}, {"Z1", 3}, {"Z1", 4}, {"Z2", 2}, {"Z3", 2}, {"Z2", 3}, {"S3", 2}}) {
    auto const b = brandt(group_by_name(gname), n);
    t.expect(is_prime_subset(b.semigroup, witness_prime_brandt(b)),
             std::string(gname) + "/n=" + std::to_string(n));
  }
  for (std::size_t n = 3; n <= 5; ++n) {
    auto const on = order_preserving_singular(n);
    for (std::size_t q = 1; q <= n; ++q) {
      t.expect(is_prime_subset(on.semigroup, witness_prime_on(on, q)),
               "O" + std::to_string(n) + " q=" + std::to_string(q));
    }
  }
  return t.done("Brandt and O_n witnesses");
}

Outcome oracle_equivalence() {
  Tally t;
  std::size_t count = 0;
  for (auto const& named : small_corpus()) {
    auto const search = large_rank(named.semigroup).value;
    auto const direct = large_rank_direct(named.semigroup);
    t.expect(search == direct, eq_note(named.family + " " + named.params, search, direct));
    ++count;
  }
  return t.done(std::to_string(count) + " semigroups");
}

Outcome duality() {
  Tally t;
  std::uint64_t subsets = 0;
  for (auto const& named : corpus_upto(10)) {
    auto const& s = named.semigroup;
    auto const m = s.order();
    for (std::uint64_t bits = 1; bits + 1 < (std::uint64_t{1} << m); ++bits) {
      SubsetMask u(m);
      for (ElementId x = 0; x < m; ++x) {
        if ((bits >> x) & 1U) u.insert(x);
      }
      ++subsets;
      t.expect(is_prime_subset(s, u) == is_subsemigroup(s, u.complement()),
               named.family + " " + named.params);
    }
  }
  return t.done(std::to_string(subsets) + " subsets");
}

Outcome cited_rank_facts() {
  Tally t;
  for (std::size_t n = 2; n <= 4; ++n) {
    auto const r2 = lower_rank(order_preserving_singular(n).semigroup).value;
    t.expect(r2 == n, eq_note("r2(O" + std::to_string(n) + ")", r2, n));
  }
  std::size_t const r1_expected[] = {2, 1, 1};
  for (std::size_t n = 2; n <= 4; ++n) {
    auto const r1 = small_rank(order_preserving_singular(n).semigroup).value;
    t.expect(r1 == r1_expected[n - 2], eq_note("r1(O" + std::to_string(n) + ")", r1, r1_expected[n - 2]));
  }
  return t.done("r2(O2..O4), r1(O2..O4)");
}

Outcome indecomposable_shortcut() {
  Tally t;
  for (std::size_t index = 2; index <= 6; ++index) {
    for (std::size_t period = 1; index + period - 1 <= 6; ++period) {
      auto const s = monogenic(index, period);
      auto const name = "monogenic(" + std::to_string(index) + "," + std::to_string(period) + ")";
      auto const shortcut = large_rank_via_indecomposable(s);
      t.expect(shortcut.has_value() && *shortcut == s.order(), name + " shortcut");
      auto const search = large_rank(s).value;
      t.expect(search == s.order(), eq_note(name + " search", search, s.order()));
    }
  }
  return t.done("index>=2, index+period-1<=6");
}

Outcome rank_chain() {
  Tally t;
  std::size_t complete = 0;
  for (auto const& named : corpus_upto(10)) {
    auto const rep = rank_chain_check(named.semigroup);
    if (!rep.complete()) continue;
    ++complete;
    t.expect(rep.chain_holds(), named.family + " " + named.params);
  }
  t.expect(complete > 0, "no semigroup had all five ranks");
  return t.done(std::to_string(complete) + " semigroups");
}

Outcome garba_decomposition() {
  Tally t;
  std::size_t elements = 0;
  for (std::size_t n = 4; n <= 5; ++n) {
    auto const on = order_preserving_singular(n);
    auto const& s = on.semigroup;
    for (std::size_t r = 1; r <= n - 2; ++r) {
      auto const upper = j_class(on, r + 1).elements();
      j_class(on, r).for_each([&](ElementId alpha) {
        bool found = false;
        for (auto beta : upper) {
          for (auto delta : upper) {
            if (s(beta, delta) == alpha) {
              found = true;
              break;
            }
          }
          if (found) break;
        }
        ++elements;
        t.expect(found, "O" + std::to_string(n) + " " + s.label(alpha));
      });
    }
  }
  return t.done(std::to_string(elements) + " elements");
}

std::string run_cli(std::vector<std::string> args, int& code) {
  std::ostringstream out, err;
  code = cli::run(std::move(args), out, err);
  std::istringstream in(out.str());
  std::string kept;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("elapsed", 0) != 0) kept += line + '\n';
  }
  return kept;
}

Outcome determinism() {
  Tally t;
  for (auto const* suite : {"brandt", "on"}) {
    int c1 = -1, c8 = -1;
    auto const one = run_cli({"verify", suite, "--threads", "1"}, c1);
    auto const eight = run_cli({"verify", suite, "--threads", "8"}, c8);
    t.expect(c1 == 0 && c8 == 0, std::string(suite) + " exit codes " + std::to_string(c1) +
                                     "/" + std::to_string(c8));
    t.expect(!one.empty() && one == eight, std::string(suite) + " reports differ");
  }
  return t.done("verify brandt, verify on at 1 and 8 threads");
}

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "brandt-large-rank", 60'000, brandt_large_rank},
      {2, "bn-large-rank", 10'000, bn_corollary},
      {3, "on-large-rank", 300'000, on_large_rank},
      {4, "on-order", 10'000, on_order},
      {5, "on-no-small-prime-subset", 0, on_prime_lower_bound},
      {6, "zeta-product-law", 0, zeta_law},
      {7, "witness-primality", 0, witness_primality},
      {8, "oracle-equivalence", 10'000, oracle_equivalence},
      {9, "prime-subsemigroup-duality", 0, duality},
      {10, "on-cited-ranks", 0, cited_rank_facts},
      {11, "indecomposable-shortcut", 0, indecomposable_shortcut},
      {12, "rank-chain", 0, rank_chain},
      {13, "garba-decomposition", 60'000, garba_decomposition},
      {14, "determinism", 0, determinism},
  };

  std::size_t failed = 0;
  for (auto const& c : criteria) {
    auto const start = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    auto const ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    bool const in_time = c.limit_ms == 0 || ms < c.limit_ms;
    bool const ok = o.ok && in_time;
    failed += !ok;
    char timing[96];
    if (c.limit_ms == 0) {
      std::snprintf(timing, sizeof timing, "%.1f ms", ms);
    } else {
      std::snprintf(timing, sizeof timing, "%.1f ms, limit %.0f ms%s", ms, c.limit_ms,
                    in_time ? "" : " EXCEEDED");
    }
    std::cout << (ok ? "PASS" : "FAIL") << ' ' << c.id << ' ' << c.name << ": " << o.detail
              << " (" << timing << ")\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
