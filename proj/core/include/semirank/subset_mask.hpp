#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace semirank {

using ElementId = std::uint32_t;

// A subset of the elements {0, ..., m-1} of some semigroup of order m.
//
// Masks are ordered "lexicographically" by reading the membership bits as a
// string b_0 b_1 ... b_{m-1}: at the first differing index, the mask that
// does not contain the element is smaller. Every search in the library
// reports the smallest witness in this order.
class SubsetMask {
 public:
  SubsetMask() = default;
  explicit SubsetMask(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static SubsetMask full(std::size_t universe);
  static SubsetMask of(std::size_t universe, std::span<ElementId const> elements);
  static SubsetMask of(std::size_t universe, std::initializer_list<ElementId> elements) {
    return of(universe, std::span<ElementId const>(elements.begin(), elements.size()));
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(ElementId x) const noexcept {
    return (words_[x >> 6] >> (x & 63)) & 1U;
  }
  void insert(ElementId x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(ElementId x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return count() == universe_; }

  SubsetMask complement() const;
  bool is_subset_of(SubsetMask const& other) const noexcept;

  // Elements in increasing index order.
  std::vector<ElementId> elements() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        auto const b = static_cast<unsigned>(std::countr_zero(bits));
        f(static_cast<ElementId>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  SubsetMask& operator|=(SubsetMask const& other) noexcept;
  SubsetMask& operator&=(SubsetMask const& other) noexcept;

  friend bool operator==(SubsetMask const&, SubsetMask const&) = default;

  std::span<std::uint64_t const> words() const noexcept { return words_; }

 private:
  void clear_padding() noexcept;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Strict "b_0 b_1 ... b_{m-1}" string order described above.
bool lex_less(SubsetMask const& a, SubsetMask const& b) noexcept;

// Size first, then lex_less.
bool shortlex_less(SubsetMask const& a, SubsetMask const& b) noexcept;

}  // namespace semirank
