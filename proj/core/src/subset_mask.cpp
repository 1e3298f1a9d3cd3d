#include "semirank/subset_mask.hpp"

#include <algorithm>
#include <stdexcept>

namespace semirank {

SubsetMask SubsetMask::full(std::size_t universe) {
  SubsetMask m(universe);
  std::fill(m.words_.begin(), m.words_.end(), ~std::uint64_t{0});
  m.clear_padding();
  return m;
}

SubsetMask SubsetMask::of(std::size_t universe, std::span<ElementId const> elements) {
  SubsetMask m(universe);
  for (auto x : elements) {
    if (x >= universe) {
      throw std::out_of_range("element " + std::to_string(x) +
                              " outside universe of size " + std::to_string(universe));
    }
    m.insert(x);
  }
  return m;
}

std::size_t SubsetMask::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool SubsetMask::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

SubsetMask SubsetMask::complement() const {
  SubsetMask m(*this);
  for (auto& w : m.words_) w = ~w;
  m.clear_padding();
  return m;
}

bool SubsetMask::is_subset_of(SubsetMask const& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::vector<ElementId> SubsetMask::elements() const {
  std::vector<ElementId> out;
  out.reserve(count());
  for_each([&](ElementId x) { out.push_back(x); });
  return out;
}

SubsetMask& SubsetMask::operator|=(SubsetMask const& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

SubsetMask& SubsetMask::operator&=(SubsetMask const& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

void SubsetMask::clear_padding() noexcept {
  if (auto const r = universe_ % 64; r != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << r) - 1;
  }
}

bool lex_less(SubsetMask const& a, SubsetMask const& b) noexcept {
  auto const aw = a.words();
  auto const bw = b.words();
  for (std::size_t i = 0; i < aw.size(); ++i) {
    if (auto const diff = aw[i] ^ bw[i]; diff != 0) {
      auto const low = diff & (~diff + 1);
      return (aw[i] & low) == 0;
    }
  }
  return false;
}

bool shortlex_less(SubsetMask const& a, SubsetMask const& b) noexcept {
  auto const ca = a.count();
  auto const cb = b.count();
  if (ca != cb) return ca < cb;
  return lex_less(a, b);
}

}  // namespace semirank
