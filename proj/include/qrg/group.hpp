#ifndef QRG_GROUP_HPP_
#define QRG_GROUP_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "qrg/error.hpp"
#include "qrg/gfmat.hpp"
#include "qrg/limits.hpp"
#include "qrg/permutation.hpp"

namespace qrg {

using Index = std::uint32_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

struct ClassInfo {
  Index representative;  // smallest element index in the class
  std::size_t size;
};

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

namespace detail {

// Element storage and multiplication behind a GroupTable. Indices are dense,
// identity is 0.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual std::size_t order() const = 0;
  virtual Index mul(Index a, Index b) const = 0;
  virtual Index inv(Index a) const = 0;
  virtual std::string describe(Index a) const = 0;
};

inline Permutation carrier_identity(const Permutation& p) {
  return Permutation::identity(p.degree());
}
inline FFMatrix carrier_identity(const FFMatrix& m) {
  return FFMatrix::identity(m.field(), m.n());
}
inline bool same_carrier(const Permutation& a, const Permutation& b) {
  return a.degree() == b.degree();
}
inline bool same_carrier(const FFMatrix& a, const FFMatrix& b) {
  return a.field() == b.field() && a.n() == b.n();
}
inline std::string describe_carrier(const Permutation& p) {
  return to_cycle_string(p);
}
inline std::string describe_carrier(const FFMatrix& m) { return to_string(m); }

// Elements stored explicitly; products looked up through a hash index.
template <class T>
class KeyedBackend final : public Backend {
 public:
  KeyedBackend(std::vector<T> elements, std::unordered_map<T, Index> index)
      : elements_(std::move(elements)), index_(std::move(index)) {}

  std::size_t order() const override { return elements_.size(); }
  Index mul(Index a, Index b) const override {
    return index_.at(elements_[a] * elements_[b]);
  }
  Index inv(Index a) const override { return index_.at(elements_[a].inverse()); }
  std::string describe(Index a) const override {
    return describe_carrier(elements_[a]);
  }

  const T& element(Index a) const { return elements_[a]; }
  std::optional<Index> find(const T& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<T> elements_;
  std::unordered_map<T, Index> index_;
};

}  // namespace detail

//! A fully enumerated finite group: dense element indices (0 is the
//! identity), multiplication, inverses and the conjugacy-class partition.
//! Immutable once built; the lazily filled class-product cache is guarded.
//!
//! Classes are numbered by (size, smallest element index), so class 0 is the
//! identity class and every report is deterministic.
class GroupTable : public std::enable_shared_from_this<GroupTable> {
  struct PrivateTag {};

 public:
  GroupTable(PrivateTag, std::string name,
             std::shared_ptr<const detail::Backend> backend,
             std::vector<Index> generators, const Caps& caps)
      : name_(std::move(name)),
        backend_(std::move(backend)),
        generators_(std::move(generators)) {
    const auto n = backend_->order();
    if (n <= caps.table) {
      table_.resize(n * n);
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) table_[std::size_t{a} * n + b] = backend_->mul(a, b);
    }
    inv_.resize(n);
    for (Index a = 0; a < n; ++a) inv_[a] = backend_->inv(a);
    build_classes();
  }

  static GroupPtr create(std::string name,
                         std::shared_ptr<const detail::Backend> backend,
                         std::vector<Index> generators,
                         const Caps& caps = kDefaultCaps) {
    return std::make_shared<const GroupTable>(PrivateTag{}, std::move(name),
                                              std::move(backend),
                                              std::move(generators), caps);
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return inv_.size(); }
  bool is_trivial() const noexcept { return order() == 1; }
  bool has_table() const noexcept { return !table_.empty(); }

  Index mul(Index a, Index b) const {
    if (!table_.empty()) return table_[std::size_t{a} * order() + b];
    return backend_->mul(a, b);
  }
  Index inv(Index a) const { return inv_[a]; }
  //! g x g^-1
  Index conj(Index g, Index x) const { return mul(mul(g, x), inv_[g]); }
  Index commutator(Index a, Index b) const {
    return mul(mul(a, b), mul(inv_[a], inv_[b]));
  }

  Index pow(Index x, std::int64_t k) const {
    if (k < 0) {
      x = inv_[x];
      k = -k;
    }
    Index r = 0;
    while (k) {
      if (k & 1) r = mul(r, x);
      x = mul(x, x);
      k >>= 1;
    }
    return r;
  }

  std::size_t element_order(Index x) const {
    std::size_t k = 1;
    for (Index y = x; y != 0; y = mul(y, x)) ++k;
    return k;
  }

  std::span<const Index> generators() const noexcept { return generators_; }

  std::size_t num_classes() const noexcept { return classes_.size(); }
  std::size_t class_of(Index x) const { return class_of_[x]; }
  std::span<const ClassInfo> classes() const noexcept { return classes_; }
  std::span<const Index> class_members(std::size_t c) const {
    return std::span<const Index>(class_members_).subspan(
        class_offsets_[c], class_offsets_[c + 1] - class_offsets_[c]);
  }
  //! Class of x^-1 for x in class c.
  std::size_t inverse_class(std::size_t c) const { return inverse_class_[c]; }

  std::string describe(Index x) const { return backend_->describe(x); }

  //! The stored carrier for x when the group was enumerated from T-valued
  //! generators, nullptr otherwise.
  template <class T>
  const T* element_as(Index x) const {
    auto kb = dynamic_cast<const detail::KeyedBackend<T>*>(backend_.get());
    return kb ? &kb->element(x) : nullptr;
  }

  template <class T>
  std::optional<Index> find(const T& x) const {
    auto kb = dynamic_cast<const detail::KeyedBackend<T>*>(backend_.get());
    if (!kb) return std::nullopt;
    return kb->find(x);
  }

  //! For quotient groups: the parent and the map parent index -> coset index.
  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<Index>& projection() const noexcept { return projection_; }

  //! For direct products: the two factors; element (i, j) has index
  //! i * |right| + j.
  const std::pair<GroupPtr, GroupPtr>& factors() const noexcept { return factors_; }

  //! Classes occurring in C_a * C_b, computed as rep(a) * every element of
  //! C_b. Rows are cached on first use.
  const std::vector<Bitset>& class_product_row(std::size_t a) const {
    std::call_once(row_once_[a], [&] {
      const auto r = num_classes();
      std::vector<Bitset> row(r, Bitset(r));
      const Index rep = classes_[a].representative;
      for (Index y = 0; y < order(); ++y)
        row[class_of_[y]].set(class_of_[mul(rep, y)]);
      rows_[a] = std::move(row);
    });
    return rows_[a];
  }

  const Bitset& class_product_support(std::size_t a, std::size_t b) const {
    return class_product_row(a)[b];
  }

 private:
  friend GroupPtr make_quotient_table(const GroupTable&, std::vector<Index>,
                                      std::vector<Index>, const Caps&);
  friend GroupPtr direct_product(const GroupPtr&, const GroupPtr&, const Caps&);

  void build_classes() {
    const auto n = order();
    constexpr Index kUnset = ~Index{0};
    std::vector<Index> raw(n, kUnset);
    std::vector<std::vector<Index>> orbits;
    for (Index x = 0; x < n; ++x) {
      if (raw[x] != kUnset) continue;
      const auto id = static_cast<Index>(orbits.size());
      std::vector<Index> orbit{x};
      raw[x] = id;
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (auto g : generators_) {
          auto y = conj(g, orbit[i]);
          if (raw[y] == kUnset) {
            raw[y] = id;
            orbit.push_back(y);
          }
        }
      std::sort(orbit.begin(), orbit.end());
      orbits.push_back(std::move(orbit));
    }
    std::vector<std::size_t> perm(orbits.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      if (orbits[a].size() != orbits[b].size())
        return orbits[a].size() < orbits[b].size();
      return orbits[a].front() < orbits[b].front();
    });
    class_of_.assign(n, 0);
    class_offsets_.assign(1, 0);
    for (std::size_t c = 0; c < perm.size(); ++c) {
      const auto& orbit = orbits[perm[c]];
      classes_.push_back({orbit.front(), orbit.size()});
      for (auto x : orbit) {
        class_of_[x] = c;
        class_members_.push_back(x);
      }
      class_offsets_.push_back(class_members_.size());
    }
    inverse_class_.resize(classes_.size());
    for (std::size_t c = 0; c < classes_.size(); ++c)
      inverse_class_[c] = class_of_[inv_[classes_[c].representative]];
    rows_.resize(classes_.size());
    row_once_ = std::make_unique<std::once_flag[]>(classes_.size());
  }

  std::string name_;
  std::shared_ptr<const detail::Backend> backend_;
  std::vector<Index> generators_;
  std::vector<Index> table_;
  std::vector<Index> inv_;
  std::vector<std::size_t> class_of_;
  std::vector<ClassInfo> classes_;
  std::vector<std::size_t> class_offsets_;
  std::vector<Index> class_members_;
  std::vector<std::size_t> inverse_class_;
  GroupPtr parent_;
  std::vector<Index> projection_;
  std::pair<GroupPtr, GroupPtr> factors_;
  mutable std::vector<std::vector<Bitset>> rows_;
  mutable std::unique_ptr<std::once_flag[]> row_once_;
};

//! Breadth-first closure of the generators under right multiplication.
//! Throws CapExceeded as soon as the order would pass caps.order.
template <class T>
GroupPtr enumerate(std::span<const T> generators, std::string name = "G",
                   const Caps& caps = kDefaultCaps) {
  if (generators.empty())
    throw Error(ErrorKind::InvalidArgument, "at least one generator is required");
  for (const auto& g : generators)
    if (!detail::same_carrier(g, generators.front()))
      throw Error(ErrorKind::MixedCarriers, "generators of different shape");

  std::vector<T> elements{detail::carrier_identity(generators.front())};
  std::unordered_map<T, Index> index{{elements.front(), 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      T y = elements[i] * g;
      if (index.contains(y)) continue;
      if (elements.size() >= caps.order)
        throw Error(ErrorKind::CapExceeded,
                    "group order exceeds cap " + std::to_string(caps.order));
      index.emplace(y, static_cast<Index>(elements.size()));
      elements.push_back(std::move(y));
    }
  }
  std::vector<Index> gens;
  for (const auto& g : generators) {
    auto id = index.at(g);
    if (id != 0 && std::find(gens.begin(), gens.end(), id) == gens.end())
      gens.push_back(id);
  }
  auto backend = std::make_shared<detail::KeyedBackend<T>>(std::move(elements),
                                                           std::move(index));
  return GroupTable::create(std::move(name), std::move(backend), std::move(gens), caps);
}

template <class T>
GroupPtr enumerate(const std::vector<T>& generators, std::string name = "G",
                   const Caps& caps = kDefaultCaps) {
  return enumerate(std::span<const T>(generators), std::move(name), caps);
}

//! A normal subgroup stored both as an element set and as the set of classes
//! it is the union of.
struct NormalSubgroup {
  Bitset members;
  Bitset classes;
  std::size_t order = 0;

  bool contains(Index x) const { return members.test(x); }
  std::size_t num_classes() const { return classes.count(); }
  bool operator==(const NormalSubgroup& o) const {
    return members == o.members;
  }
};

namespace detail {

inline Bitset class_set_product(const GroupTable& g, const Bitset& a, const Bitset& b) {
  Bitset out(g.num_classes());
  for (auto i = a.find_first(); i != Bitset::npos; i = a.find_next(i)) {
    const auto& row = g.class_product_row(i);
    for (auto j = b.find_first(); j != Bitset::npos; j = b.find_next(j)) out |= row[j];
  }
  return out;
}

// Subgroup generated by a union of classes, computed on class sets.
inline Bitset class_closure(const GroupTable& g, Bitset s) {
  s.set(0);
  while (true) {
    auto next = s | class_set_product(g, s, s);
    if (next == s) return s;
    s = std::move(next);
  }
}

}  // namespace detail

inline NormalSubgroup normal_subgroup_from_classes(const GroupTable& g,
                                                   const Bitset& classes) {
  NormalSubgroup n;
  n.classes = classes;
  n.members = Bitset(g.order());
  for (auto c = classes.find_first(); c != Bitset::npos; c = classes.find_next(c))
    for (auto x : g.class_members(c)) n.members.set(x);
  n.order = n.members.count();
  return n;
}

//! Validates an element set as a normal subgroup: a union of whole classes
//! containing the identity and closed under multiplication.
inline NormalSubgroup make_normal_subgroup(const GroupTable& g, const Bitset& members) {
  if (members.size() != g.order())
    throw Error(ErrorKind::NotNormal, "member set has the wrong size");
  if (!members.test(0)) throw Error(ErrorKind::NotNormal, "identity missing");
  Bitset classes(g.num_classes());
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    auto mem = g.class_members(c);
    bool in = members.test(mem.front());
    for (auto x : mem)
      if (members.test(x) != in)
        throw Error(ErrorKind::NotNormal, "not a union of conjugacy classes");
    if (in) classes.set(c);
  }
  for (auto c = classes.find_first(); c != Bitset::npos; c = classes.find_next(c)) {
    auto rep = g.classes()[c].representative;
    for (auto x = members.find_first(); x != Bitset::npos; x = members.find_next(x))
      if (!members.test(g.mul(rep, static_cast<Index>(x))))
        throw Error(ErrorKind::NotNormal, "not closed under multiplication");
  }
  return normal_subgroup_from_classes(g, classes);
}

inline NormalSubgroup trivial_subgroup(const GroupTable& g) {
  Bitset c(g.num_classes());
  c.set(0);
  return normal_subgroup_from_classes(g, c);
}

inline NormalSubgroup whole_group(const GroupTable& g) {
  Bitset c(g.num_classes());
  c.set();
  return normal_subgroup_from_classes(g, c);
}

//! Smallest normal subgroup containing the given elements.
inline NormalSubgroup normal_closure(const GroupTable& g, std::span<const Index> elements) {
  Bitset s(g.num_classes());
  for (auto x : elements) s.set(g.class_of(x));
  return normal_subgroup_from_classes(g, detail::class_closure(g, s));
}

inline NormalSubgroup center(const GroupTable& g) {
  Bitset c(g.num_classes());
  for (std::size_t k = 0; k < g.num_classes(); ++k)
    if (g.classes()[k].size == 1) c.set(k);
  return normal_subgroup_from_classes(g, c);
}

//! Every normal subgroup, as the join-closure of the normal closures of
//! single classes. Sorted by (order, smallest differing element).
inline std::vector<NormalSubgroup> normal_subgroups(const GroupTable& g,
                                                    const Caps& caps = kDefaultCaps) {
  const auto r = g.num_classes();
  if (r > caps.classes || r > 64)
    throw Error(ErrorKind::ClassCapExceeded,
                std::to_string(r) + " classes exceeds the class cap");
  using Mask = std::uint64_t;
  std::vector<Mask> support(r * r, 0);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      const auto& s = g.class_product_support(a, b);
      for (auto k = s.find_first(); k != Bitset::npos; k = s.find_next(k))
        support[a * r + b] |= Mask{1} << k;
    }
  auto product = [&](Mask x, Mask y) {
    Mask out = 0;
    for (std::size_t a = 0; a < r; ++a) {
      if (!(x >> a & 1)) continue;
      for (std::size_t b = 0; b < r; ++b)
        if (y >> b & 1) out |= support[a * r + b];
    }
    return out;
  };
  auto closure = [&](Mask s) {
    s |= 1;
    while (true) {
      auto next = s | product(s, s);
      if (next == s) return s;
      s = next;
    }
  };

  std::vector<Mask> lattice{Mask{1}};
  auto add = [&](Mask m) {
    if (std::find(lattice.begin(), lattice.end(), m) == lattice.end()) lattice.push_back(m);
  };
  for (std::size_t c = 1; c < r; ++c) add(closure(Mask{1} << c));
  // The product of two normal subgroups is their join.
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(product(lattice[i], lattice[j]));

  std::vector<NormalSubgroup> out;
  for (auto m : lattice) {
    Bitset cls(r);
    for (std::size_t k = 0; k < r; ++k)
      if (m >> k & 1) cls.set(k);
    out.push_back(normal_subgroup_from_classes(g, cls));
  }
  std::sort(out.begin(), out.end(), [](const NormalSubgroup& a, const NormalSubgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.members < b.members;
  });
  return out;
}

//! Proper normal subgroups not contained in another proper normal subgroup.
inline std::vector<NormalSubgroup> maximal_normal_subgroups(
    const GroupTable& g, const Caps& caps = kDefaultCaps) {
  auto all = normal_subgroups(g, caps);
  std::vector<NormalSubgroup> out;
  for (const auto& n : all) {
    if (n.order == g.order()) continue;
    bool maximal = true;
    for (const auto& m : all)
      if (m.order != g.order() && m.order > n.order && n.members.is_subset_of(m.members)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(n);
  }
  return out;
}

//! Intersection of all maximal proper normal subgroups; the smallest normal
//! subgroup with a semisimple quotient. Its num_classes() is the number of
//! G-classes it contains.
inline NormalSubgroup cosocle(const GroupTable& g, const Caps& caps = kDefaultCaps) {
  auto result = whole_group(g);
  for (const auto& m : maximal_normal_subgroups(g, caps)) result.classes &= m.classes;
  return normal_subgroup_from_classes(g, result.classes);
}

namespace detail {

class QuotientBackend final : public Backend {
 public:
  QuotientBackend(GroupPtr parent, std::vector<Index> projection, std::vector<Index> reps)
      : parent_(std::move(parent)),
        projection_(std::move(projection)),
        reps_(std::move(reps)) {}

  std::size_t order() const override { return reps_.size(); }
  Index mul(Index a, Index b) const override {
    return projection_[parent_->mul(reps_[a], reps_[b])];
  }
  Index inv(Index a) const override { return projection_[parent_->inv(reps_[a])]; }
  std::string describe(Index a) const override {
    return "[" + parent_->describe(reps_[a]) + "]";
  }

 private:
  GroupPtr parent_;
  std::vector<Index> projection_;
  std::vector<Index> reps_;
};

class ProductBackend final : public Backend {
 public:
  ProductBackend(GroupPtr left, GroupPtr right)
      : left_(std::move(left)), right_(std::move(right)), width_(right_->order()) {}

  std::size_t order() const override { return left_->order() * width_; }
  Index mul(Index a, Index b) const override {
    return static_cast<Index>(left_->mul(a / width_, b / width_) * width_ +
                              right_->mul(a % width_, b % width_));
  }
  Index inv(Index a) const override {
    return static_cast<Index>(left_->inv(a / width_) * width_ + right_->inv(a % width_));
  }
  std::string describe(Index a) const override {
    return "(" + left_->describe(a / width_) + ", " + right_->describe(a % width_) + ")";
  }

 private:
  GroupPtr left_, right_;
  std::size_t width_;
};

}  // namespace detail

inline GroupPtr make_quotient_table(const GroupTable& g, std::vector<Index> projection,
                                    std::vector<Index> reps, const Caps& caps) {
  std::vector<Index> gens;
  for (auto x : g.generators()) {
    auto c = projection[x];
    if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
  }
  auto parent = g.shared_from_this();
  auto backend = std::make_shared<detail::QuotientBackend>(parent, projection, std::move(reps));
  auto q = std::make_shared<GroupTable>(GroupTable::PrivateTag{}, g.name() + "/N",
                                        std::move(backend), std::move(gens), caps);
  q->parent_ = parent;
  q->projection_ = std::move(projection);
  return q;
}

//! G/N as a coset group. Coset indices follow the smallest element of each
//! coset, so G/1 reproduces G's indexing exactly.
inline GroupPtr quotient(const GroupTable& g, const NormalSubgroup& n,
                         const Caps& caps = kDefaultCaps) {
  auto checked = make_normal_subgroup(g, n.members);
  constexpr Index kUnset = ~Index{0};
  std::vector<Index> projection(g.order(), kUnset);
  std::vector<Index> reps;
  for (Index x = 0; x < g.order(); ++x) {
    if (projection[x] != kUnset) continue;
    const auto c = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (auto m = checked.members.find_first(); m != Bitset::npos;
         m = checked.members.find_next(m))
      projection[g.mul(x, static_cast<Index>(m))] = c;
  }
  return make_quotient_table(g, std::move(projection), std::move(reps), caps);
}

inline GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b,
                               const Caps& caps = kDefaultCaps) {
  const auto order = a->order() * b->order();
  if (order > caps.order)
    throw Error(ErrorKind::CapExceeded,
                "product order " + std::to_string(order) + " exceeds cap");
  const auto w = static_cast<Index>(b->order());
  std::vector<Index> gens;
  for (auto x : a->generators()) gens.push_back(x * w);
  for (auto y : b->generators()) gens.push_back(y);
  auto backend = std::make_shared<detail::ProductBackend>(a, b);
  auto p = std::make_shared<GroupTable>(GroupTable::PrivateTag{},
                                        "prod(" + a->name() + "," + b->name() + ")",
                                        std::move(backend), std::move(gens), caps);
  p->factors_ = {a, b};
  return p;
}

//! Index of (x, y) in a direct product.
inline Index pair_index(const GroupTable& product, Index x, Index y) {
  const auto& f = product.factors();
  if (!f.first) throw Error(ErrorKind::InvalidArgument, "not a direct product");
  return static_cast<Index>(x * f.second->order() + y);
}

//! The left (which = 0) or right (which = 1) factor embedded as a normal
//! subgroup of a direct product.
inline NormalSubgroup factor_subgroup(const GroupTable& product, int which) {
  const auto& f = product.factors();
  if (!f.first) throw Error(ErrorKind::InvalidArgument, "not a direct product");
  Bitset members(product.order());
  if (which == 0)
    for (Index x = 0; x < f.first->order(); ++x) members.set(pair_index(product, x, 0));
  else
    for (Index y = 0; y < f.second->order(); ++y) members.set(pair_index(product, 0, y));
  return make_normal_subgroup(product, members);
}

//! Classes that contain at least one commutator [a, b]. Conjugating a
//! commutator gives a commutator, so a representative per class suffices
//! for the first argument.
inline Bitset commutator_classes(const GroupTable& g) {
  Bitset s(g.num_classes());
  for (const auto& c : g.classes())
    for (Index b = 0; b < g.order(); ++b)
      s.set(g.class_of(g.commutator(c.representative, b)));
  return s;
}

inline NormalSubgroup commutator_subgroup(const GroupTable& g) {
  return normal_subgroup_from_classes(g, detail::class_closure(g, commutator_classes(g)));
}

inline bool is_perfect(const GroupTable& g) {
  return commutator_subgroup(g).order == g.order();
}

//! Least k with x a product of k commutators; 0 for the identity, nullopt
//! when x lies outside the derived subgroup.
inline std::optional<std::size_t> commutator_width(const GroupTable& g, Index x,
                                                   const Caps& caps = kDefaultCaps) {
  if (g.order() > caps.width)
    throw Error(ErrorKind::WidthCapExceeded,
                "order " + std::to_string(g.order()) + " exceeds width cap");
  if (x == 0) return 0;
  const auto target = g.class_of(x);
  const auto s = commutator_classes(g);
  auto power = s;
  for (std::size_t k = 1;; ++k) {
    if (power.test(target)) return k;
    auto next = detail::class_set_product(g, power, s);
    if (next == power) return std::nullopt;
    power = std::move(next);
  }
}

}  // namespace qrg

#endif  // QRG_GROUP_HPP_
