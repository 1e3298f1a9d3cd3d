#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "semirank/semigroup.hpp"
#include "semirank/transformation.hpp"

namespace semirank {

// Desk-scale size limits for the constructors. All are overridable.
struct FamilyLimits {
  std::size_t max_cyclic = 2048;
  std::size_t max_symmetric = 5;
  std::size_t max_brandt_order = 100000;
  std::size_t max_monogenic = 4096;
  std::size_t max_full_transformation = 4;
  std::size_t max_order_preserving = 8;
  std::size_t max_zero_semigroup = 4096;
};

class FiniteGroup {
 public:
  // Validates associativity, finds the two-sided identity and inverses.
  // Throws TableError or GroupError naming a witness.
  explicit FiniteGroup(FiniteSemigroup underlying);

  FiniteSemigroup const& semigroup() const noexcept { return underlying_; }
  std::size_t order() const noexcept { return underlying_.order(); }
  ElementId identity() const noexcept { return identity_; }
  ElementId inverse(ElementId g) const { return inverse_.at(g); }
  std::vector<ElementId> const& inverses() const noexcept { return inverse_; }

 private:
  FiniteSemigroup underlying_;
  ElementId identity_ = 0;
  std::vector<ElementId> inverse_;
};

FiniteGroup cyclic_group(std::size_t m, FamilyLimits const& limits = {});
FiniteGroup symmetric_group(std::size_t m, FamilyLimits const& limits = {});
FiniteGroup group_from_table(std::size_t order, std::vector<ElementId> table,
                             std::vector<std::string> labels = {});

// Index layout of B(G, n): (i, g, j) with 1-based i, j and group index g
// sits at ((i-1)|G| + g) n + (j-1); the zero is the last element.
class BrandtCodec {
 public:
  struct Triple {
    std::size_t i;
    ElementId g;
    std::size_t j;
    friend bool operator==(Triple const&, Triple const&) = default;
  };

  BrandtCodec(std::size_t n, std::size_t group_order) : n_(n), group_order_(group_order) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t group_order() const noexcept { return group_order_; }
  ElementId zero() const noexcept { return static_cast<ElementId>(n_ * n_ * group_order_); }

  ElementId encode(std::size_t i, ElementId g, std::size_t j) const;
  // Throws ParameterError for the zero or an out-of-range index.
  Triple decode(ElementId x) const;
  bool is_zero(ElementId x) const noexcept { return x == zero(); }

 private:
  std::size_t n_;
  std::size_t group_order_;
};

struct BrandtSemigroup {
  FiniteSemigroup semigroup;
  BrandtCodec codec;
};

// Elements of a transformation family, indexed in lexicographic order of
// their image words.
class TransformationCodec {
 public:
  explicit TransformationCodec(std::vector<Transformation> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  Transformation const& decode(ElementId x) const { return elements_.at(x); }
  // Throws ParameterError if alpha is not in the family.
  ElementId encode(Transformation const& alpha) const;
  bool contains(Transformation const& alpha) const { return index_.count(alpha) != 0; }
  std::vector<Transformation> const& elements() const noexcept { return elements_; }

 private:
  std::vector<Transformation> elements_;
  std::map<Transformation, ElementId> index_;
};

struct TransformationSemigroup {
  FiniteSemigroup semigroup;
  TransformationCodec codec;
  std::size_t degree;
};

BrandtSemigroup brandt(FiniteGroup const& g, std::size_t n, FamilyLimits const& limits = {});

// a^1, ..., a^{index+period-1} with a^{index+period} = a^{index};
// element k-1 is a^k.
FiniteSemigroup monogenic(std::size_t index, std::size_t period,
                          FamilyLimits const& limits = {});

// T_n: all n^n self-maps.
TransformationSemigroup full_transformation(std::size_t n, FamilyLimits const& limits = {});

// O_n: order-preserving singular self-maps.
TransformationSemigroup order_preserving_singular(std::size_t n,
                                                  FamilyLimits const& limits = {});

// xy = x and xy = y respectively.
FiniteSemigroup left_zero(std::size_t m, FamilyLimits const& limits = {});
FiniteSemigroup right_zero(std::size_t m, FamilyLimits const& limits = {});

// {(n, a, k) : a in G, 1 <= k <= n-1}; requires n >= 2.
SubsetMask witness_prime_brandt(BrandtSemigroup const& b);

// {zeta(i, q) : i in [n-1]} in O_n; requires n >= 3 and 1 <= q <= n.
SubsetMask witness_prime_on(TransformationSemigroup const& on, std::size_t q);

// Elements of a transformation family with image size r.
SubsetMask j_class(TransformationSemigroup const& t, std::size_t r);

// Resolves "Z<m>" and "S<m>" group names.
FiniteGroup group_by_name(std::string const& name, FamilyLimits const& limits = {});

struct NamedSemigroup {
  std::string family;  // e.g. "bn", "on", "cyclic"
  std::string params;  // e.g. "n=2"
  FiniteSemigroup semigroup;
};

// Small test corpus: B_2, B(Z_2,2), O_2, O_3, Z_2..Z_6, monogenic(m, r) with
// m+r-1 <= 6, left- and right-zero semigroups of orders 2..4.
std::vector<NamedSemigroup> small_corpus();

}  // namespace semirank
