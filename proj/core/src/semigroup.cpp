#include "semirank/semigroup.hpp"

#include <unordered_set>

#include "semirank/errors.hpp"

namespace semirank {

std::optional<Triple> validate_associativity(std::size_t order,
                                             std::span<ElementId const> table) {
  if (table.size() != order * order) {
    throw TableError("table has " + std::to_string(table.size()) +
                     " entries, expected " + std::to_string(order * order));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= order) {
      throw TableError("entry at row " + std::to_string(i / order) + ", column " +
                       std::to_string(i % order) + " is " + std::to_string(table[i]) +
                       ", outside [0, " + std::to_string(order) + ")");
    }
  }
  auto const at = [&](std::size_t x, std::size_t y) { return table[x * order + y]; };
  for (ElementId a = 0; a < order; ++a) {
    for (ElementId b = 0; b < order; ++b) {
      auto const ab = at(a, b);
      for (ElementId c = 0; c < order; ++c) {
        if (at(ab, c) != at(a, at(b, c))) return Triple{a, b, c};
      }
    }
  }
  return std::nullopt;
}

FiniteSemigroup::FiniteSemigroup(std::size_t order, std::vector<ElementId> table,
                                 std::vector<std::string> labels, std::string name,
                                 Trust trust)
    : order_(order),
      table_(std::move(table)),
      labels_(std::move(labels)),
      name_(std::move(name)) {
  if (order_ == 0) throw TableError("a semigroup needs at least one element");
  if (table_.size() != order_ * order_) {
    throw TableError("table has " + std::to_string(table_.size()) +
                     " entries, expected " + std::to_string(order_ * order_));
  }
  if (!labels_.empty()) {
    if (labels_.size() != order_) {
      throw TableError("expected " + std::to_string(order_) + " labels, got " +
                       std::to_string(labels_.size()));
    }
    std::unordered_set<std::string> seen;
    for (auto const& l : labels_) {
      if (!seen.insert(l).second) throw TableError("duplicate label '" + l + "'");
    }
  }
  if (trust == Trust::checked) {
    if (auto v = validate_associativity(order_, table_)) {
      throw TableError("not associative at (" + std::to_string(v->a) + ", " +
                       std::to_string(v->b) + ", " + std::to_string(v->c) + ")");
    }
  } else {
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (table_[i] >= order_) {
        throw TableError("entry at row " + std::to_string(i / order_) + ", column " +
                         std::to_string(i % order_) + " out of range");
      }
    }
  }
}

ElementId FiniteSemigroup::multiply(ElementId a, ElementId b) const {
  if (a >= order_ || b >= order_) {
    throw std::out_of_range("element index outside semigroup of order " +
                            std::to_string(order_));
  }
  return (*this)(a, b);
}

std::string FiniteSemigroup::label(ElementId a) const {
  return labels_.empty() ? std::to_string(a) : labels_.at(a);
}

SubsetMask closure(FiniteSemigroup const& s, SubsetMask const& u) {
  // Every element of <U> is a word over U, so closing under right
  // multiplication by the generators suffices.
  auto const gens = u.elements();
  SubsetMask result = u;
  std::vector<ElementId> queue = gens;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto const x = queue[i];
    for (auto g : gens) {
      auto const p = s(x, g);
      if (!result.contains(p)) {
        result.insert(p);
        queue.push_back(p);
      }
    }
  }
  return result;
}

bool is_subsemigroup(FiniteSemigroup const& s, SubsetMask const& u) {
  auto const elems = u.elements();
  for (auto a : elems) {
    for (auto b : elems) {
      if (!u.contains(s(a, b))) return false;
    }
  }
  return true;
}

bool is_generating(FiniteSemigroup const& s, SubsetMask const& u) {
  return closure(s, u).is_full();
}

bool is_independent(FiniteSemigroup const& s, SubsetMask const& u) {
  if (u.empty()) throw ParameterError("independence of the empty set is undefined");
  auto const elems = u.elements();
  for (auto a : elems) {
    SubsetMask rest = u;
    rest.erase(a);
    if (closure(s, rest).contains(a)) return false;
  }
  return true;
}

bool is_prime_subset(FiniteSemigroup const& s, SubsetMask const& u) {
  if (u.empty()) return false;
  auto const m = static_cast<ElementId>(s.order());
  for (ElementId a = 0; a < m; ++a) {
    if (u.contains(a)) continue;
    auto const r = s.row(a);
    for (ElementId b = 0; b < m; ++b) {
      if (!u.contains(b) && u.contains(r[b])) return false;
    }
  }
  return true;
}

SubsetMask idempotents(FiniteSemigroup const& s) {
  SubsetMask out = s.empty_mask();
  for (ElementId e = 0; e < s.order(); ++e) {
    if (s(e, e) == e) out.insert(e);
  }
  return out;
}

SubsetMask indecomposable_elements(FiniteSemigroup const& s) {
  SubsetMask products = s.empty_mask();
  for (auto p : s.table()) products.insert(p);
  return products.complement();
}

std::string format_subset(FiniteSemigroup const& s, SubsetMask const& u) {
  std::string out = "{";
  bool first = true;
  u.for_each([&](ElementId x) {
    if (!first) out += ", ";
    out += s.label(x);
    first = false;
  });
  return out + "}";
}

}  // namespace semirank
