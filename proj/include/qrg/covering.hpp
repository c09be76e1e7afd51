#ifndef QRG_COVERING_HPP_
#define QRG_COVERING_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrg/group.hpp"

namespace qrg {

//! A union of whole conjugacy classes of one group. Every product set built
//! from classes is again of this form, so products never touch element sets.
class ClassSet {
 public:
  ClassSet(const GroupTable& g, Bitset bits) : group_(&g), bits_(std::move(bits)) {
    if (bits_.size() != g.num_classes())
      throw Error(ErrorKind::InvalidArgument, "class bitset has the wrong size");
    for (auto c = bits_.find_first(); c != Bitset::npos; c = bits_.find_next(c))
      element_count_ += g.classes()[c].size;
  }

  static ClassSet empty(const GroupTable& g) { return ClassSet(g, Bitset(g.num_classes())); }
  static ClassSet identity(const GroupTable& g) { return of_class(g, 0); }
  static ClassSet full(const GroupTable& g) {
    Bitset b(g.num_classes());
    b.set();
    return ClassSet(g, std::move(b));
  }
  static ClassSet of_class(const GroupTable& g, std::size_t c) {
    Bitset b(g.num_classes());
    b.set(c);
    return ClassSet(g, std::move(b));
  }
  //! C(x)
  static ClassSet of_element(const GroupTable& g, Index x) {
    return of_class(g, g.class_of(x));
  }
  //! C(x) u C(x^-1)
  static ClassSet symmetric(const GroupTable& g, Index x) {
    auto b = of_element(g, x).bits_;
    b.set(g.inverse_class(g.class_of(x)));
    return ClassSet(g, std::move(b));
  }

  const GroupTable& group() const noexcept { return *group_; }
  const Bitset& bits() const noexcept { return bits_; }
  std::size_t element_count() const noexcept { return element_count_; }
  bool is_full() const noexcept { return element_count_ == group_->order(); }
  bool contains_class(std::size_t c) const { return bits_.test(c); }
  bool contains(Index x) const { return bits_.test(group_->class_of(x)); }

  ClassSet operator|(const ClassSet& o) const {
    check_same(o);
    return ClassSet(*group_, bits_ | o.bits_);
  }

  bool operator==(const ClassSet& o) const {
    return group_ == o.group_ && bits_ == o.bits_;
  }

  void check_same(const ClassSet& o) const {
    if (group_ != o.group_)
      throw Error(ErrorKind::GroupMismatch, "class sets of different groups");
  }

 private:
  const GroupTable* group_;
  Bitset bits_;
  std::size_t element_count_ = 0;
};

//! The set product a * b.
inline ClassSet class_product(const ClassSet& a, const ClassSet& b) {
  a.check_same(b);
  const auto& g = a.group();
  Bitset out(g.num_classes());
  const auto& ab = a.bits();
  const auto& bb = b.bits();
  for (auto i = ab.find_first(); i != Bitset::npos; i = ab.find_next(i)) {
    const auto& row = g.class_product_row(i);
    for (auto j = bb.find_first(); j != Bitset::npos; j = bb.find_next(j)) out |= row[j];
    if (out.all()) break;
  }
  return ClassSet(g, std::move(out));
}

//! The exact k-fold product s^k; s^0 is the identity class.
inline ClassSet power(const ClassSet& s, unsigned k) {
  auto r = ClassSet::identity(s.group());
  if (k == 0) return r;
  r = s;
  for (unsigned i = 1; i < k; ++i) {
    if (r.is_full()) break;  // G * s = G
    r = class_product(r, s);
  }
  return r;
}

//! Realizes m = infinity: all powers up to the element order.
inline constexpr std::size_t kAllPowers = std::numeric_limits<std::size_t>::max();

//! Which powers x^i, 1 <= i <= m, a covering property ranges over.
enum class PowerSelection {
  All,
  CoprimeToOrder,  // only i with gcd(i, ord(x)) = 1
};

struct CoveringReport {
  Index element = 0;
  std::optional<unsigned> K;
  bool symmetric = false;
  std::size_t m_checked = 0;
  bool property_holds = false;
  std::string reason;
  std::vector<std::pair<unsigned, std::size_t>> growth_trace;  // (k, |S^k|)
};

//! Minimal K with S^K = G for S = C(x) (or C(x) u C(x^-1)). The sequence S^k
//! is determined by its previous term, so a repeated set means G is never
//! reached. max_k defaults to the number of classes.
inline CoveringReport covering_number(const GroupTable& g, Index x, bool symmetric,
                                      std::optional<unsigned> max_k = std::nullopt) {
  CoveringReport rep;
  rep.element = x;
  rep.symmetric = symmetric;
  if (g.is_trivial()) {
    rep.K = 1;
    rep.growth_trace.emplace_back(1, 1);
    return rep;
  }
  if (x == 0) {
    rep.reason = "trivial class";
    return rep;
  }
  const Index xs[] = {x};
  if (normal_closure(g, xs).order != g.order()) {
    rep.reason = "normal closure is a proper subgroup";
    return rep;
  }
  const unsigned limit = max_k.value_or(static_cast<unsigned>(g.num_classes()));
  const auto s = symmetric ? ClassSet::symmetric(g, x) : ClassSet::of_element(g, x);
  auto cur = s;
  std::vector<Bitset> seen;
  for (unsigned k = 1; k <= limit; ++k) {
    rep.growth_trace.emplace_back(k, cur.element_count());
    if (cur.is_full()) {
      rep.K = k;
      return rep;
    }
    if (std::find(seen.begin(), seen.end(), cur.bits()) != seen.end()) {
      rep.reason = "product sets cycle without covering";
      return rep;
    }
    seen.push_back(cur.bits());
    cur = class_product(cur, s);
  }
  rep.reason = "max_k exceeded";
  return rep;
}

namespace detail {

inline std::vector<std::size_t> selected_powers(const GroupTable& g, Index x, std::size_t m,
                                                PowerSelection sel) {
  const auto ord = g.element_order(x);
  if (m == kAllPowers) m = ord;
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= m; ++i)
    if (sel == PowerSelection::All || std::gcd(i, ord) == 1) out.push_back(i);
  return out;
}

inline ClassSet base_set(const GroupTable& g, Index x, bool symmetric) {
  return symmetric ? ClassSet::symmetric(g, x) : ClassSet::of_element(g, x);
}

}  // namespace detail

//! True iff the K-fold product of C(x^i) (symmetric: C(x^i) u C(x^-i))
//! equals G for every selected i in 1..m.
inline bool covering_property(const GroupTable& g, Index x, unsigned K, std::size_t m,
                              bool symmetric,
                              PowerSelection sel = PowerSelection::All) {
  for (auto i : detail::selected_powers(g, x, m, sel)) {
    auto xi = g.pow(x, static_cast<std::int64_t>(i));
    if (!power(detail::base_set(g, xi, symmetric), K).is_full()) return false;
  }
  return true;
}

struct DoubleParams {
  unsigned K1 = 1;
  unsigned K2 = 1;
  std::size_t m1 = 1;
  std::size_t m2 = 1;
};

//! True iff (C(x^i) u C(x^-i))^K1 (C(y^j) u C(y^-j))^K2 = G for all
//! 1 <= i <= m1, 1 <= j <= m2.
inline bool double_covering_feasible(const GroupTable& g, Index x, Index y,
                                     const DoubleParams& p) {
  std::vector<ClassSet> left, right;
  for (auto i : detail::selected_powers(g, x, p.m1, PowerSelection::All))
    left.push_back(power(ClassSet::symmetric(g, g.pow(x, std::int64_t(i))), p.K1));
  for (auto j : detail::selected_powers(g, y, p.m2, PowerSelection::All))
    right.push_back(power(ClassSet::symmetric(g, g.pow(y, std::int64_t(j))), p.K2));
  for (const auto& l : left)
    for (const auto& r : right)
      if (!class_product(l, r).is_full()) return false;
  return true;
}

inline bool double_covering_feasible(const GroupTable& g, Index x, Index y, unsigned K1,
                                     unsigned K2, std::size_t m1, std::size_t m2) {
  return double_covering_feasible(g, x, y, DoubleParams{K1, K2, m1, m2});
}

//! Minimal (K1, K2) pairs with K1 + K2 <= max_total for which the double
//! covering holds, ordered by increasing K1.
inline std::vector<std::pair<unsigned, unsigned>> double_covering_frontier(
    const GroupTable& g, Index x, Index y, std::size_t m1, std::size_t m2,
    unsigned max_total = 16) {
  std::vector<std::pair<unsigned, unsigned>> out;
  std::optional<unsigned> best_k2;
  for (unsigned k1 = 0; k1 <= max_total; ++k1)
    for (unsigned k2 = 0; k1 + k2 <= max_total; ++k2) {
      if (best_k2 && k2 >= *best_k2) break;
      if (double_covering_feasible(g, x, y, {k1, k2, m1, m2})) {
        out.emplace_back(k1, k2);
        best_k2 = k2;
        break;
      }
    }
  return out;
}

//! Covering property of the image of x in G/N.
inline bool covering_property_mod(const GroupTable& g, const NormalSubgroup& n, Index x,
                                  unsigned K, std::size_t m, bool symmetric,
                                  PowerSelection sel = PowerSelection::All) {
  auto q = quotient(g, n);
  return covering_property(*q, q->projection()[x], K, m, symmetric, sel);
}

inline bool double_covering_mod(const GroupTable& g, const NormalSubgroup& n, Index x,
                                Index y, const DoubleParams& p) {
  auto q = quotient(g, n);
  const auto& proj = q->projection();
  return double_covering_feasible(*q, proj[x], proj[y], p);
}

struct InflationReport {
  std::size_t cosocle_order = 0;
  std::size_t n = 0;       // G-classes inside the cosocle
  unsigned factor = 0;     // 3n - 2
  DoubleParams params;
  bool mod_holds = false;
  bool lifted_holds = false;
  std::optional<unsigned> minimal_factor;  // least t <= 3n - 2 that lifts
  bool implication_holds() const { return !mod_holds || lifted_holds; }
};

namespace detail {

inline InflationReport inflation_check(const GroupTable& g, const GroupTable& q,
                                       const NormalSubgroup& cos, Index x, Index y,
                                       const DoubleParams& p) {
  InflationReport rep;
  rep.cosocle_order = cos.order;
  rep.n = cos.num_classes();
  rep.factor = static_cast<unsigned>(3 * rep.n - 2);
  rep.params = p;
  const auto& proj = q.projection();
  rep.mod_holds = double_covering_feasible(q, proj[x], proj[y], p);
  if (!rep.mod_holds) return rep;
  rep.lifted_holds = double_covering_feasible(
      g, x, y, {rep.factor * p.K1, rep.factor * p.K2, p.m1, p.m2});
  for (unsigned t = 1; t <= rep.factor; ++t)
    if (double_covering_feasible(g, x, y, {t * p.K1, t * p.K2, p.m1, p.m2})) {
      rep.minimal_factor = t;
      break;
    }
  return rep;
}

}  // namespace detail

//! If (x, y) covers with parameters p modulo the cosocle (n classes), the
//! same pair must cover G with both exponents multiplied by 3n - 2.
inline InflationReport verify_cosocle_inflation(const GroupTable& g, Index x, Index y,
                                                const DoubleParams& p) {
  auto cos = cosocle(g);
  auto q = quotient(g, cos);
  return detail::inflation_check(g, *q, cos, x, y, p);
}

//! Runs many inflation checks against one cosocle quotient.
class InflationVerifier {
 public:
  explicit InflationVerifier(const GroupTable& g)
      : g_(g), cosocle_(cosocle(g)), quotient_(quotient(g, cosocle_)) {}

  const NormalSubgroup& cosocle_subgroup() const noexcept { return cosocle_; }
  const GroupTable& quotient_group() const noexcept { return *quotient_; }

  InflationReport check(Index x, Index y, const DoubleParams& p) const {
    return detail::inflation_check(g_, *quotient_, cosocle_, x, y, p);
  }

 private:
  const GroupTable& g_;
  NormalSubgroup cosocle_;
  GroupPtr quotient_;
};

struct PreservationReport {
  std::vector<bool> factor_holds;
  bool product_holds = false;
  std::vector<bool> quotient_holds;  // product modulo each factor
  bool holds() const {
    bool all = product_holds;
    for (bool b : quotient_holds) all = all && b;
    return all;
  }
};

//! Builds the direct product of the factors, with the witness pair formed
//! coordinatewise, and re-checks the same parameters there and in each
//! quotient of the product by one of its (two) factors.
inline PreservationReport verify_product_preservation(
    const std::vector<GroupPtr>& factors,
    const std::vector<std::pair<Index, Index>>& witnesses, const DoubleParams& p,
    const Caps& caps = kDefaultCaps) {
  if (factors.empty() || factors.size() != witnesses.size())
    throw Error(ErrorKind::InvalidArgument, "one witness pair per factor is required");
  PreservationReport rep;
  for (std::size_t i = 0; i < factors.size(); ++i)
    rep.factor_holds.push_back(
        double_covering_feasible(*factors[i], witnesses[i].first, witnesses[i].second, p));

  GroupPtr prod = factors.front();
  auto wit = witnesses.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    auto next = direct_product(prod, factors[i], caps);
    wit = {pair_index(*next, wit.first, witnesses[i].first),
           pair_index(*next, wit.second, witnesses[i].second)};
    prod = next;
  }
  rep.product_holds = double_covering_feasible(*prod, wit.first, wit.second, p);
  if (factors.size() >= 2 && prod->factors().first) {
    for (int which = 0; which < 2; ++which) {
      auto q = quotient(*prod, factor_subgroup(*prod, which), caps);
      const auto& proj = q->projection();
      rep.quotient_holds.push_back(
          double_covering_feasible(*q, proj[wit.first], proj[wit.second], p));
    }
  }
  return rep;
}

}  // namespace qrg

#endif  // QRG_COVERING_HPP_
