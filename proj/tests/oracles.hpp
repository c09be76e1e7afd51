// Brute-force reference computations for the tests. Deliberately naive and
// independent of the library: plain vectors, std::set, full enumeration.
#ifndef QRG_TESTS_ORACLES_HPP_
#define QRG_TESTS_ORACLES_HPP_

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<std::uint32_t>;

// (a * b)(i) = a(b(i))
inline Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Perm inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint32_t>(i);
  return r;
}

inline Perm identity(std::size_t n) {
  Perm r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<std::uint32_t>(i);
  return r;
}

inline int sign(const Perm& a) {
  int inv = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) inv += a[i] > a[j];
  return inv % 2 ? -1 : 1;
}

inline std::set<Perm> closure(const std::vector<Perm>& gens) {
  std::set<Perm> seen{identity(gens.front().size())};
  std::vector<Perm> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = compose(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

inline std::set<Perm> all_even(std::size_t n) {
  std::set<Perm> out;
  auto p = identity(n);
  do {
    if (sign(p) == 1) out.insert(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::set<Perm> all_perms(std::size_t n) {
  std::set<Perm> out;
  auto p = identity(n);
  do out.insert(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Conjugacy classes by conjugating with every element.
inline std::vector<std::set<Perm>> classes(const std::set<Perm>& group) {
  std::vector<std::set<Perm>> out;
  std::set<Perm> done;
  for (const auto& x : group) {
    if (done.count(x)) continue;
    std::set<Perm> c;
    for (const auto& g : group) c.insert(compose(compose(g, x), inverse(g)));
    done.insert(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

inline std::set<Perm> product(const std::set<Perm>& a, const std::set<Perm>& b) {
  std::set<Perm> out;
  for (const auto& x : a)
    for (const auto& y : b) out.insert(compose(x, y));
  return out;
}

inline std::set<Perm> power(const std::set<Perm>& s, unsigned k, std::size_t degree) {
  std::set<Perm> out{identity(degree)};
  for (unsigned i = 0; i < k; ++i) out = product(out, s);
  return out;
}

inline bool is_closed(const std::set<Perm>& s) {
  for (const auto& x : s)
    for (const auto& y : s)
      if (!s.count(compose(x, y))) return false;
  return true;
}

// Orders of all normal subgroups: every union of classes that contains the
// identity and is closed under multiplication.
inline std::vector<std::size_t> normal_subgroup_orders(const std::set<Perm>& group) {
  auto cls = classes(group);
  const auto e = identity(group.begin()->size());
  std::vector<std::set<Perm>> others;
  for (const auto& c : cls)
    if (!c.count(e)) others.push_back(c);
  std::vector<std::size_t> orders;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others.size()); ++mask) {
    std::set<Perm> s{e};
    for (std::size_t i = 0; i < others.size(); ++i)
      if (mask >> i & 1) s.insert(others[i].begin(), others[i].end());
    if (group.size() % s.size() == 0 && is_closed(s)) orders.push_back(s.size());
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

inline std::set<Perm> commutator_subgroup(const std::set<Perm>& group) {
  std::set<Perm> comms;
  for (const auto& a : group)
    for (const auto& b : group)
      comms.insert(compose(compose(a, b), compose(inverse(a), inverse(b))));
  return closure(std::vector<Perm>(comms.begin(), comms.end()));
}

// Matrices over GF(p) as dense int rows.
using Mat = std::vector<std::vector<std::int64_t>>;

// dim ker(g - a I) by counting the kernel vectors among all p^n vectors.
inline std::uint32_t eigenspace_dim_by_count(const Mat& g, std::int64_t a, std::int64_t p) {
  const auto n = g.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(p);
  std::uint64_t count = 0;
  std::vector<std::int64_t> v(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    auto c = code;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<std::int64_t>(c % static_cast<std::uint64_t>(p));
      c /= static_cast<std::uint64_t>(p);
    }
    bool zero = true;
    for (std::size_t i = 0; i < n && zero; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n; ++j) s += (g[i][j] - (i == j ? a : 0)) * v[j];
      zero = ((s % p) + p) % p == 0;
    }
    count += zero;
  }
  std::uint32_t d = 0;
  while (count > 1) {
    count /= static_cast<std::uint64_t>(p);
    ++d;
  }
  return d;
}

// (n - max_a dim ker(g - a)) / n as a (num, den) pair, unreduced.
inline std::pair<std::int64_t, std::int64_t> jordan_by_count(const Mat& g, std::int64_t p) {
  std::uint32_t best = 0;
  for (std::int64_t a = 1; a < p; ++a) best = std::max(best, eigenspace_dim_by_count(g, a, p));
  return {static_cast<std::int64_t>(g.size()) - best, static_cast<std::int64_t>(g.size())};
}

// Irreducible degrees from the regular representation: a random Hermitian
// combination of class sums has one eigenvalue per irreducible character,
// with multiplicity chi(1)^2. mul[a][b] is the index of a*b; classes lists
// member indices; inverse_class[i] is the class of inverses of class i.
inline std::vector<std::uint64_t> regular_rep_degrees(
    const std::vector<std::vector<std::uint32_t>>& mul,
    const std::vector<std::vector<std::uint32_t>>& class_members,
    const std::vector<std::size_t>& inverse_class, std::uint64_t seed) {
  const auto n = static_cast<Eigen::Index>(mul.size());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 0; i < class_members.size(); ++i) {
    const std::complex<double> c(normal(rng), normal(rng));
    // left-regular action of class sum i: e_b -> e_{g b}
    for (auto g : class_members[i])
      for (Eigen::Index b = 0; b < n; ++b) {
        h(mul[g][static_cast<std::size_t>(b)], b) += c;
      }
    for (auto g : class_members[inverse_class[i]])
      for (Eigen::Index b = 0; b < n; ++b) h(mul[g][static_cast<std::size_t>(b)], b) += std::conj(c);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(ev.begin(), ev.end());
  std::vector<std::uint64_t> degrees;
  std::size_t i = 0;
  const double tol = 1e-6 * (1.0 + std::abs(ev.back()) + std::abs(ev.front()));
  while (i < ev.size()) {
    std::size_t j = i + 1;
    while (j < ev.size() && ev[j] - ev[j - 1] < tol) ++j;
    const auto mult = j - i;
    degrees.push_back(static_cast<std::uint64_t>(std::llround(std::sqrt(double(mult)))));
    i = j;
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace oracle

#endif  // QRG_TESTS_ORACLES_HPP_
