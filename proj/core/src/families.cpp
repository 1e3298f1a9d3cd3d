#include "semirank/families.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "semirank/errors.hpp"

namespace semirank {

namespace {

void check_range(std::string const& what, std::size_t value, std::size_t lo,
                 std::size_t hi) {
  if (value < lo || value > hi) {
    throw ParameterError(what + " = " + std::to_string(value) + " outside [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

std::uint64_t word_key(Transformation const& t) {
  std::uint64_t key = 0;
  for (auto p : t.images()) key = key * t.degree() + p;
  return key;
}

TransformationSemigroup transformation_semigroup(std::vector<Transformation> elements,
                                                 std::size_t n, std::string name) {
  std::unordered_map<std::uint64_t, ElementId> index;
  index.reserve(elements.size());
  for (std::size_t x = 0; x < elements.size(); ++x) {
    index.emplace(word_key(elements[x]), static_cast<ElementId>(x));
  }
  auto const m = elements.size();
  std::vector<ElementId> table(m * m);
  std::vector<Transformation::Point> buf(n);
  for (std::size_t a = 0; a < m; ++a) {
    auto const& alpha = elements[a].images();
    for (std::size_t b = 0; b < m; ++b) {
      auto const& beta = elements[b].images();
      std::uint64_t key = 0;
      for (std::size_t x = 0; x < n; ++x) key = key * n + beta[alpha[x]];
      auto const it = index.find(key);
      if (it == index.end()) {
        throw Error("transformation family " + name + " is not closed under composition");
      }
      table[a * m + b] = it->second;
    }
  }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (auto const& t : elements) labels.push_back(t.to_string());
  FiniteSemigroup s(m, std::move(table), std::move(labels), std::move(name),
                    Trust::trusted);
  return {std::move(s), TransformationCodec(std::move(elements)), n};
}

// Nondecreasing words over [0, n) in lexicographic order.
void nondecreasing_words(std::size_t n, std::vector<Transformation::Point>& word,
                         std::vector<Transformation>& out) {
  if (word.size() == n) {
    out.emplace_back(word);
    return;
  }
  Transformation::Point const lo = word.empty() ? 0 : word.back();
  for (auto v = lo; v < n; ++v) {
    word.push_back(v);
    nondecreasing_words(n, word, out);
    word.pop_back();
  }
}

}  // namespace

FiniteGroup::FiniteGroup(FiniteSemigroup underlying) : underlying_(std::move(underlying)) {
  auto const& s = underlying_;
  auto const m = static_cast<ElementId>(s.order());
  bool found = false;
  for (ElementId e = 0; e < m && !found; ++e) {
    bool ok = true;
    for (ElementId g = 0; g < m && ok; ++g) ok = s(e, g) == g && s(g, e) == g;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw GroupError("table has no two-sided identity");
  inverse_.assign(m, 0);
  for (ElementId g = 0; g < m; ++g) {
    bool has = false;
    for (ElementId h = 0; h < m && !has; ++h) {
      if (s(g, h) == identity_ && s(h, g) == identity_) {
        inverse_[g] = h;
        has = true;
      }
    }
    if (!has) throw GroupError("element " + s.label(g) + " has no inverse");
  }
}

FiniteGroup group_from_table(std::size_t order, std::vector<ElementId> table,
                             std::vector<std::string> labels) {
  return FiniteGroup(FiniteSemigroup(order, std::move(table), std::move(labels), "group",
                                     Trust::checked));
}

FiniteGroup cyclic_group(std::size_t m, FamilyLimits const& limits) {
  check_range("cyclic group order", m, 1, limits.max_cyclic);
  std::vector<ElementId> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = static_cast<ElementId>((a + b) % m);
  }
  std::vector<std::string> labels;
  if (m == 1) {
    labels.emplace_back("e");
  } else {
    for (std::size_t a = 0; a < m; ++a) labels.push_back(std::to_string(a));
  }
  return FiniteGroup(FiniteSemigroup(m, std::move(table), std::move(labels),
                                     "Z" + std::to_string(m), Trust::trusted));
}

FiniteGroup symmetric_group(std::size_t m, FamilyLimits const& limits) {
  check_range("symmetric group degree", m, 1, limits.max_symmetric);
  std::vector<Transformation::Point> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Transformation> elements;
  do {
    elements.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto const order = elements.size();
  std::map<Transformation, ElementId> index;
  for (std::size_t x = 0; x < order; ++x) index.emplace(elements[x], static_cast<ElementId>(x));
  std::vector<ElementId> table(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      table[a * order + b] = index.at(compose(elements[a], elements[b]));
    }
  }
  std::vector<std::string> labels;
  for (auto const& p : elements) {
    std::string word;
    for (auto x : p.images()) word += std::to_string(x + 1);
    labels.push_back(order == 1 ? "e" : word);
  }
  return FiniteGroup(FiniteSemigroup(order, std::move(table), std::move(labels),
                                     "S" + std::to_string(m), Trust::trusted));
}

FiniteGroup group_by_name(std::string const& name, FamilyLimits const& limits) {
  if (name.size() >= 2 && (name[0] == 'Z' || name[0] == 'S')) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(name.substr(1), &pos);
    } catch (std::exception const&) {
      pos = 0;
    }
    if (pos == name.size() - 1) {
      return name[0] == 'Z' ? cyclic_group(v, limits) : symmetric_group(v, limits);
    }
  }
  throw ParameterError("unknown group '" + name + "' (expected Z<m> or S<m>)");
}

ElementId BrandtCodec::encode(std::size_t i, ElementId g, std::size_t j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_ || g >= group_order_) {
    throw ParameterError("Brandt triple outside [n] x G x [n]");
  }
  return static_cast<ElementId>(((i - 1) * group_order_ + g) * n_ + (j - 1));
}

BrandtCodec::Triple BrandtCodec::decode(ElementId x) const {
  if (x >= zero()) throw ParameterError("index " + std::to_string(x) + " is not a triple");
  std::size_t const j = x % n_ + 1;
  std::size_t const rest = x / n_;
  return {rest / group_order_ + 1, static_cast<ElementId>(rest % group_order_), j};
}

BrandtSemigroup brandt(FiniteGroup const& g, std::size_t n, FamilyLimits const& limits) {
  if (n < 1) throw ParameterError("Brandt semigroup needs n >= 1");
  auto const k = g.order();
  if (n > limits.max_brandt_order || n * n * k + 1 > limits.max_brandt_order) {
    throw ParameterError("Brandt semigroup of order n^2|G|+1 exceeds limit " +
                         std::to_string(limits.max_brandt_order));
  }
  BrandtCodec codec(n, k);
  auto const m = n * n * k + 1;
  auto const zero = codec.zero();
  auto const& gs = g.semigroup();
  std::vector<ElementId> table(m * m, zero);
  for (std::size_t i = 1; i <= n; ++i) {
    for (ElementId a = 0; a < k; ++a) {
      for (std::size_t j = 1; j <= n; ++j) {
        auto const x = codec.encode(i, a, j);
        // Only (j, b, l) can give a nonzero product.
        for (ElementId b = 0; b < k; ++b) {
          for (std::size_t l = 1; l <= n; ++l) {
            table[x * m + codec.encode(j, b, l)] = codec.encode(i, gs(a, b), l);
          }
        }
      }
    }
  }
  std::vector<std::string> labels(m);
  for (ElementId x = 0; x < zero; ++x) {
    auto const t = codec.decode(x);
    labels[x] = "(" + std::to_string(t.i) + "," + gs.label(t.g) + "," + std::to_string(t.j) + ")";
  }
  labels[zero] = "0";
  std::string name = k == 1 ? "B" + std::to_string(n)
                            : "B(" + gs.name() + "," + std::to_string(n) + ")";
  return {FiniteSemigroup(m, std::move(table), std::move(labels), std::move(name),
                          Trust::trusted),
          codec};
}

FiniteSemigroup monogenic(std::size_t index, std::size_t period, FamilyLimits const& limits) {
  if (index < 1 || period < 1) throw ParameterError("monogenic needs index, period >= 1");
  auto const m = index + period - 1;
  check_range("monogenic order", m, 1, limits.max_monogenic);
  std::vector<ElementId> table(m * m);
  for (std::size_t a = 1; a <= m; ++a) {
    for (std::size_t b = 1; b <= m; ++b) {
      auto s = a + b;
      if (s > m) s = index + (s - index) % period;
      table[(a - 1) * m + (b - 1)] = static_cast<ElementId>(s - 1);
    }
  }
  std::vector<std::string> labels;
  for (std::size_t k = 1; k <= m; ++k) labels.push_back(k == 1 ? "a" : "a^" + std::to_string(k));
  return FiniteSemigroup(m, std::move(table), std::move(labels),
                         "monogenic(" + std::to_string(index) + "," + std::to_string(period) + ")",
                         Trust::trusted);
}

TransformationCodec::TransformationCodec(std::vector<Transformation> elements)
    : elements_(std::move(elements)) {
  for (std::size_t x = 0; x < elements_.size(); ++x) {
    if (!index_.emplace(elements_[x], static_cast<ElementId>(x)).second) {
      throw ParameterError("duplicate transformation " + elements_[x].to_string());
    }
  }
}

ElementId TransformationCodec::encode(Transformation const& alpha) const {
  auto const it = index_.find(alpha);
  if (it == index_.end()) {
    throw ParameterError(alpha.to_string() + " is not an element of this family");
  }
  return it->second;
}

TransformationSemigroup full_transformation(std::size_t n, FamilyLimits const& limits) {
  check_range("full transformation degree", n, 1, limits.max_full_transformation);
  std::vector<Transformation> elements;
  std::vector<Transformation::Point> word(n, 0);
  while (true) {
    elements.emplace_back(word);
    std::size_t pos = n;
    while (pos > 0 && word[pos - 1] == n - 1) word[--pos] = 0;
    if (pos == 0) break;
    ++word[pos - 1];
  }
  return transformation_semigroup(std::move(elements), n, "T" + std::to_string(n));
}

TransformationSemigroup order_preserving_singular(std::size_t n, FamilyLimits const& limits) {
  check_range("order-preserving degree", n, 2, limits.max_order_preserving);
  std::vector<Transformation> all;
  std::vector<Transformation::Point> word;
  nondecreasing_words(n, word, all);
  // The identity is the only order-preserving permutation.
  std::erase(all, Transformation::identity(n));
  return transformation_semigroup(std::move(all), n, "O" + std::to_string(n));
}

FiniteSemigroup left_zero(std::size_t m, FamilyLimits const& limits) {
  check_range("left-zero order", m, 1, limits.max_zero_semigroup);
  std::vector<ElementId> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = static_cast<ElementId>(a);
  }
  return FiniteSemigroup(m, std::move(table), {}, "L" + std::to_string(m), Trust::trusted);
}

FiniteSemigroup right_zero(std::size_t m, FamilyLimits const& limits) {
  check_range("right-zero order", m, 1, limits.max_zero_semigroup);
  std::vector<ElementId> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = static_cast<ElementId>(b);
  }
  return FiniteSemigroup(m, std::move(table), {}, "R" + std::to_string(m), Trust::trusted);
}

SubsetMask witness_prime_brandt(BrandtSemigroup const& b) {
  auto const n = b.codec.n();
  if (n < 2) throw ParameterError("Brandt witness needs n >= 2");
  SubsetMask v = b.semigroup.empty_mask();
  for (ElementId a = 0; a < b.codec.group_order(); ++a) {
    for (std::size_t k = 1; k <= n - 1; ++k) v.insert(b.codec.encode(n, a, k));
  }
  return v;
}

SubsetMask witness_prime_on(TransformationSemigroup const& on, std::size_t q) {
  auto const n = on.degree;
  if (n < 3) throw ParameterError("O_n witness needs n >= 3");
  check_range("q", q, 1, n);
  SubsetMask v = on.semigroup.empty_mask();
  for (std::size_t i = 1; i <= n - 1; ++i) v.insert(on.codec.encode(zeta(n, i, q)));
  return v;
}

SubsetMask j_class(TransformationSemigroup const& t, std::size_t r) {
  SubsetMask out = t.semigroup.empty_mask();
  for (ElementId x = 0; x < t.codec.size(); ++x) {
    if (t.codec.decode(x).rank() == r) out.insert(x);
  }
  return out;
}

std::vector<NamedSemigroup> small_corpus() {
  std::vector<NamedSemigroup> out;
  out.push_back({"bn", "n=2", brandt(cyclic_group(1), 2).semigroup});
  out.push_back({"brandt", "group=Z2 n=2", brandt(cyclic_group(2), 2).semigroup});
  out.push_back({"on", "n=2", order_preserving_singular(2).semigroup});
  out.push_back({"on", "n=3", order_preserving_singular(3).semigroup});
  for (std::size_t m = 2; m <= 6; ++m) {
    out.push_back({"cyclic", "m=" + std::to_string(m), cyclic_group(m).semigroup()});
  }
  for (std::size_t index = 1; index <= 6; ++index) {
    for (std::size_t period = 1; index + period - 1 <= 6; ++period) {
      out.push_back({"monogenic",
                     "index=" + std::to_string(index) + " period=" + std::to_string(period),
                     monogenic(index, period)});
    }
  }
  for (std::size_t m = 2; m <= 4; ++m) {
    out.push_back({"leftzero", "m=" + std::to_string(m), left_zero(m)});
    out.push_back({"rightzero", "m=" + std::to_string(m), right_zero(m)});
  }
  return out;
}

}  // namespace semirank
