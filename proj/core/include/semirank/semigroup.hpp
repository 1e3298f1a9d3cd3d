#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semirank/subset_mask.hpp"

namespace semirank {

// Whether a table is checked for associativity on construction.
// Internally built families are associative by construction and pass
// `trusted`; anything read from outside the process must be `checked`.
enum class Trust { checked, trusted };

struct Triple {
  ElementId a;
  ElementId b;
  ElementId c;
  friend bool operator==(Triple const&, Triple const&) = default;
};

// Returns the lexicographically first (a, b, c) with (ab)c != a(bc), or
// nothing if the table associates. `table` is row-major, order x order.
// Throws TableError naming the position of the first out-of-range entry.
std::optional<Triple> validate_associativity(std::size_t order,
                                             std::span<ElementId const> table);

// A finite semigroup given by its Cayley table. Immutable after construction.
class FiniteSemigroup {
 public:
  FiniteSemigroup(std::size_t order, std::vector<ElementId> table,
                  std::vector<std::string> labels = {}, std::string name = {},
                  Trust trust = Trust::checked);

  std::size_t order() const noexcept { return order_; }
  std::string const& name() const noexcept { return name_; }

  // Unchecked product; hot loops use this.
  ElementId operator()(ElementId a, ElementId b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }

  // Bounds-checked product.
  ElementId multiply(ElementId a, ElementId b) const;

  std::span<ElementId const> row(ElementId a) const noexcept {
    return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  std::span<ElementId const> table() const noexcept { return table_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::vector<std::string> const& labels() const noexcept { return labels_; }
  // The display label, or the decimal index when the semigroup is unlabelled.
  std::string label(ElementId a) const;

  SubsetMask empty_mask() const { return SubsetMask(order_); }
  SubsetMask full_mask() const { return SubsetMask::full(order_); }

 private:
  std::size_t order_;
  std::vector<ElementId> table_;
  std::vector<std::string> labels_;
  std::string name_;
};

// Least subset containing U and closed under multiplication; <empty> = empty.
SubsetMask closure(FiniteSemigroup const& s, SubsetMask const& u);

bool is_subsemigroup(FiniteSemigroup const& s, SubsetMask const& u);
bool is_generating(FiniteSemigroup const& s, SubsetMask const& u);

// Every a in U lies outside <U \ {a}>. Throws ParameterError on empty U.
bool is_independent(FiniteSemigroup const& s, SubsetMask const& u);

// Nonempty U with ab in U implying a in U or b in U.
bool is_prime_subset(FiniteSemigroup const& s, SubsetMask const& u);

SubsetMask idempotents(FiniteSemigroup const& s);

// Elements that are not the product of any two elements.
SubsetMask indecomposable_elements(FiniteSemigroup const& s);

// Renders {l_1, l_2, ...} using element labels.
std::string format_subset(FiniteSemigroup const& s, SubsetMask const& u);

}  // namespace semirank
