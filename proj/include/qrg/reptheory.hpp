#ifndef QRG_REPTHEORY_HPP_
#define QRG_REPTHEORY_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "qrg/group.hpp"
#include "qrg/number_theory.hpp"

namespace qrg {

//! Multiset of irreducible complex character degrees, ascending.
struct CharacterDegrees {
  std::vector<std::uint64_t> degrees;
  std::size_t group_order = 0;
  std::uint64_t prime = 0;  // modulus the computation ran over

  std::uint64_t sum_of_squares() const {
    std::uint64_t s = 0;
    for (auto d : degrees) s += d * d;
    return s;
  }
};

inline constexpr std::uint64_t kInfiniteDegree = std::numeric_limits<std::uint64_t>::max();

//! lcm of all element orders.
inline std::uint64_t group_exponent(const GroupTable& g) {
  std::uint64_t e = 1;
  for (const auto& c : g.classes()) e = lcm_u64(e, g.element_order(c.representative));
  return e;
}

//! Smallest prime l > floor_exclusive with l = 1 (mod exponent) and
//! l > 2 sqrt(order). Such l splits every character value and separates a
//! degree d <= sqrt(|G|) from l - d.
inline std::uint64_t degree_prime(std::size_t order, std::uint64_t exponent,
                                  std::uint64_t floor_exclusive = 0) {
  std::uint64_t bound = static_cast<std::uint64_t>(2.0 * std::sqrt(double(order)));
  while (bound * bound < 4 * order) ++bound;
  bound = std::max(bound, floor_exclusive);
  std::uint64_t l = (bound / exponent + 1) * exponent + 1;
  while (!is_prime(l)) l += exponent;
  return l;
}

namespace detail {

// Dense linear algebra mod a prime below 2^32.
class ModMat {
 public:
  using Vec = std::vector<std::uint64_t>;

  explicit ModMat(std::uint64_t p) : p_(p) {}

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t inv(std::uint64_t a) const { return inv_mod(a, p_); }

  // Nullspace of a rows x cols matrix (row-major), as a list of basis vectors.
  std::vector<Vec> nullspace(std::vector<Vec> a, std::size_t cols) const {
    const auto rows = a.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t piv = r;
      while (piv < rows && a[piv][c] == 0) ++piv;
      if (piv == rows) continue;
      std::swap(a[piv], a[r]);
      auto iv = inv(a[r][c]);
      for (auto& v : a[r]) v = mul(v, iv);
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r || a[i][c] == 0) continue;
        auto f = a[i][c];
        for (std::size_t k = 0; k < cols; ++k) a[i][k] = sub(a[i][k], mul(f, a[r][k]));
      }
      pivot_col.push_back(c);
      ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
      if (is_pivot[free]) continue;
      Vec v(cols, 0);
      v[free] = 1;
      for (std::size_t i = 0; i < pivot_col.size(); ++i)
        v[pivot_col[i]] = sub(0, a[i][free]);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Characteristic polynomial (coefficients low to high, monic) through an
  // upper Hessenberg similarity transform.
  Vec charpoly(std::vector<Vec> h) const {
    const auto n = h.size();
    for (std::size_t m = 1; m + 1 < n; ++m) {
      std::size_t i = m;
      while (i < n && h[i][m - 1] == 0) ++i;
      if (i == n) continue;
      if (i != m) {
        std::swap(h[i], h[m]);
        for (std::size_t k = 0; k < n; ++k) std::swap(h[k][i], h[k][m]);
      }
      auto tinv = inv(h[m][m - 1]);
      for (std::size_t j = m + 1; j < n; ++j) {
        auto u = mul(h[j][m - 1], tinv);
        if (u == 0) continue;
        for (std::size_t k = 0; k < n; ++k) h[j][k] = sub(h[j][k], mul(u, h[m][k]));
        for (std::size_t k = 0; k < n; ++k) h[k][m] = add(h[k][m], mul(u, h[k][j]));
      }
    }
    std::vector<Vec> poly(n + 1);
    poly[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
      Vec pm(m + 1, 0);
      const auto& prev = poly[m - 1];
      for (std::size_t k = 0; k < prev.size(); ++k) {
        pm[k + 1] = add(pm[k + 1], prev[k]);
        pm[k] = sub(pm[k], mul(h[m - 1][m - 1], prev[k]));
      }
      std::uint64_t t = 1;
      for (std::size_t i = 1; i < m; ++i) {
        t = mul(t, h[m - i][m - i - 1]);
        auto coef = mul(t, h[m - i - 1][m - 1]);
        const auto& pp = poly[m - i - 1];
        for (std::size_t k = 0; k < pp.size(); ++k) pm[k] = sub(pm[k], mul(coef, pp[k]));
      }
      poly[m] = std::move(pm);
    }
    return poly[n];
  }

  std::uint64_t eval(const Vec& poly, std::uint64_t x) const {
    std::uint64_t r = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) r = add(mul(r, x), *it);
    return r;
  }

  std::uint64_t p() const noexcept { return p_; }

 private:
  std::uint64_t p_;
};

// Structure constants a[i][j][k] = #{(x, y) in C_i x C_j : x y = z_k}.
inline std::vector<std::uint32_t> class_structure_constants(const GroupTable& g) {
  const auto r = g.num_classes();
  std::vector<std::uint32_t> a(r * r * r, 0);
  for (std::size_t k = 0; k < r; ++k) {
    const auto z = g.classes()[k].representative;
    for (Index x = 0; x < g.order(); ++x) {
      const auto y = g.mul(g.inv(x), z);
      ++a[(g.class_of(x) * r + g.class_of(y)) * r + k];
    }
  }
  return a;
}

// One attempt over GF(l); returns an empty vector when l does not work.
inline std::vector<std::uint64_t> degrees_mod(const GroupTable& g,
                                              const std::vector<std::uint32_t>& consts,
                                              std::uint64_t l) {
  using Vec = ModMat::Vec;
  const ModMat mm(l);
  const auto r = g.num_classes();
  auto class_matrix = [&](std::size_t j) {
    std::vector<Vec> m(r, Vec(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k) m[i][k] = consts[(i * r + j) * r + k] % l;
    return m;
  };

  // Simultaneous eigenspaces of the class matrices, refined one matrix at a
  // time in class-index order.
  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < r; ++i) {
      Vec e(r, 0);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    spaces.push_back(std::move(basis));
  }
  for (std::size_t j = 1; j < r && spaces.size() < r; ++j) {
    const auto mj = class_matrix(j);
    std::vector<std::vector<Vec>> refined;
    for (auto& basis : spaces) {
      const auto d = basis.size();
      if (d == 1) {
        refined.push_back(std::move(basis));
        continue;
      }
      // image[t] = M_j b_t
      std::vector<Vec> image(d, Vec(r, 0));
      for (std::size_t t = 0; t < d; ++t)
        for (std::size_t i = 0; i < r; ++i) {
          std::uint64_t s = 0;
          for (std::size_t k = 0; k < r; ++k) s = (s + mj[i][k] * basis[t][k]) % l;
          image[t][i] = s;
        }
      // Coordinates of the images in the basis: pick d independent rows.
      std::vector<Vec> bt(r, Vec(d));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t t = 0; t < d; ++t) bt[i][t] = basis[t][i];
      std::vector<std::size_t> rows;
      {
        std::vector<Vec> work;
        for (std::size_t i = 0; i < r && rows.size() < d; ++i) {
          auto cand = work;
          cand.push_back(bt[i]);
          if (mm.nullspace(cand, d).size() == d - cand.size()) {
            work = std::move(cand);
            rows.push_back(i);
          }
        }
      }
      // Solve B_rows * A = Image_rows for the d x d restriction A.
      std::vector<Vec> aug(d, Vec(2 * d, 0));
      for (std::size_t s = 0; s < d; ++s) {
        for (std::size_t t = 0; t < d; ++t) {
          aug[s][t] = bt[rows[s]][t];
          aug[s][d + t] = image[t][rows[s]];
        }
      }
      for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = c;
        while (aug[piv][c] == 0) ++piv;
        std::swap(aug[piv], aug[c]);
        auto iv = mm.inv(aug[c][c]);
        for (auto& v : aug[c]) v = mm.mul(v, iv);
        for (std::size_t i = 0; i < d; ++i) {
          if (i == c || aug[i][c] == 0) continue;
          auto f = aug[i][c];
          for (std::size_t k = 0; k < 2 * d; ++k) aug[i][k] = mm.sub(aug[i][k], mm.mul(f, aug[c][k]));
        }
      }
      std::vector<Vec> restricted(d, Vec(d));
      for (std::size_t s = 0; s < d; ++s)
        for (std::size_t t = 0; t < d; ++t) restricted[s][t] = aug[s][d + t];

      const auto poly = mm.charpoly(restricted);
      std::size_t found = 0;
      std::vector<std::vector<Vec>> pieces;
      for (std::uint64_t lambda = 0; lambda < l && found < d; ++lambda) {
        if (mm.eval(poly, lambda) != 0) continue;
        auto shifted = restricted;
        for (std::size_t s = 0; s < d; ++s) shifted[s][s] = mm.sub(shifted[s][s], lambda);
        auto ker = mm.nullspace(shifted, d);
        std::vector<Vec> piece;
        for (const auto& c : ker) {
          Vec v(r, 0);
          for (std::size_t t = 0; t < d; ++t)
            for (std::size_t i = 0; i < r; ++i) v[i] = (v[i] + c[t] * basis[t][i]) % l;
          piece.push_back(std::move(v));
        }
        found += piece.size();
        pieces.push_back(std::move(piece));
      }
      if (found != d) return {};
      for (auto& piece : pieces) refined.push_back(std::move(piece));
    }
    spaces = std::move(refined);
  }
  if (spaces.size() != r) return {};

  const auto order = static_cast<std::uint64_t>(g.order());
  const auto max_degree = static_cast<std::uint64_t>(std::sqrt(double(order))) + 1;
  std::vector<std::uint64_t> degrees;
  for (const auto& sp : spaces) {
    auto v = sp.front();
    if (v[0] == 0) return {};
    const auto norm = mm.inv(v[0]);
    for (auto& x : v) x = mm.mul(x, norm);
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < r; ++i) {
      const auto h = static_cast<std::uint64_t>(g.classes()[i].size) % l;
      s = mm.add(s, mm.mul(mm.mul(v[i], v[g.inverse_class(i)]), mm.inv(h)));
    }
    if (s == 0) return {};
    const auto target = mm.mul(order % l, mm.inv(s));
    std::uint64_t deg = 0;
    for (std::uint64_t cand = 1; cand <= max_degree; ++cand)
      if (cand * cand % l == target) {
        deg = cand;
        break;
      }
    if (deg == 0) return {};
    degrees.push_back(deg);
  }
  std::sort(degrees.begin(), degrees.end());
  std::uint64_t sq = 0;
  for (auto d : degrees) sq += d * d;
  if (sq != order) return {};
  return degrees;
}

}  // namespace detail

//! Irreducible degrees from the eigenvectors of the class multiplication
//! matrices over a prime field GF(l) with exp(G) | l - 1 and l > 2 sqrt|G|.
//! Each eigenvector is a central character w with w(K_i) = h_i chi(g_i) /
//! chi(1), and chi(1)^2 = |G| / sum_i w_i w_{i*} / h_i.
inline CharacterDegrees character_degrees(const GroupTable& g,
                                          const Caps& caps = kDefaultCaps) {
  if (g.order() > caps.degree)
    throw Error(ErrorKind::CapExceeded,
                "order " + std::to_string(g.order()) + " exceeds the degree cap");
  const auto consts = detail::class_structure_constants(g);
  const auto e = group_exponent(g);
  std::uint64_t l = 0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    l = degree_prime(g.order(), e, l);
    auto degrees = detail::degrees_mod(g, consts, l);
    if (!degrees.empty()) return {std::move(degrees), g.order(), l};
  }
  throw Error(ErrorKind::NoSuitablePrime, "no working prime after 8 attempts");
}

//! Least degree of a non-trivial irreducible representation;
//! kInfiniteDegree for the trivial group.
inline std::uint64_t quasirandom_degree(const CharacterDegrees& cd) {
  if (cd.degrees.size() <= 1) return kInfiniteDegree;
  // degrees are sorted and the trivial character contributes one 1
  return cd.degrees[1];
}

inline std::uint64_t quasirandom_degree(const GroupTable& g, const Caps& caps = kDefaultCaps) {
  return quasirandom_degree(character_degrees(g, caps));
}

//! Least index of a proper normal subgroup (|G| for simple groups).
inline std::size_t min_normal_index(const GroupTable& g, const Caps& caps = kDefaultCaps) {
  if (g.is_trivial()) throw Error(ErrorKind::TrivialGroup, "trivial group has no proper normal subgroup");
  std::size_t best = g.order();
  for (const auto& n : normal_subgroups(g, caps))
    if (n.order < g.order()) best = std::min(best, g.order() / n.order);
  return best;
}

//! |G| > (D - 1)^2. Vacuous for the trivial group, which has no non-trivial
//! representation at all.
inline bool element_count_bound_check(std::size_t order, std::uint64_t degree) {
  if (degree == kInfiniteDegree) return true;
  return static_cast<unsigned __int128>(order) >
         static_cast<unsigned __int128>(degree - 1) * (degree - 1);
}

inline bool element_count_bound_check(const GroupTable& g, const Caps& caps = kDefaultCaps) {
  return element_count_bound_check(g.order(), quasirandom_degree(g, caps));
}

struct MixingReport {
  double alpha = 0;
  double eps1 = 0;
  double eps2 = 0;
  std::size_t good_x_count = 0;
  std::uint64_t threshold_pairs = 0;  // ceil((1 - eps2) alpha^2 |G|)
  std::uint64_t required_good = 0;    // least count exceeding (1 - eps1) alpha^2 |G|
  bool passes = false;
};

namespace detail {

// ceil / floor of a real computed from decimal inputs; a relative slack of
// 1e-12 absorbs representation error such as 0.9 * 0.25 * 1320.
inline std::uint64_t stable_ceil(long double t) {
  return static_cast<std::uint64_t>(std::max<long double>(0, std::ceil(t - 1e-12L * std::max<long double>(1, t))));
}
inline std::uint64_t stable_floor(long double t) {
  return static_cast<std::uint64_t>(std::max<long double>(0, std::floor(t + 1e-12L * std::max<long double>(1, t))));
}

}  // namespace detail

//! Counts x with |A n xA| >= (1 - eps2) alpha^2 |G|; passes when that count
//! exceeds (1 - eps1) alpha^2 |G|. Exact counting over all x.
inline MixingReport gowers_mixing(const GroupTable& g, const Bitset& a, double eps1,
                                  double eps2) {
  if (a.size() != g.order() || a.none())
    throw Error(ErrorKind::InvalidArgument, "A must be a nonempty subset of G");
  std::vector<Index> elems;
  for (auto x = a.find_first(); x != Bitset::npos; x = a.find_next(x))
    elems.push_back(static_cast<Index>(x));
  const long double n = g.order();
  const long double size = elems.size();
  const long double mass = size * size / n;  // alpha^2 |G|

  MixingReport rep;
  rep.alpha = double(size / n);
  rep.eps1 = eps1;
  rep.eps2 = eps2;
  rep.threshold_pairs = detail::stable_ceil((1.0L - eps2) * mass);
  rep.required_good = detail::stable_floor((1.0L - eps1) * mass) + 1;
  for (Index x = 0; x < g.order(); ++x) {
    std::size_t hits = 0;
    for (auto y : elems) hits += a.test(g.mul(x, y));
    if (hits >= rep.threshold_pairs) ++rep.good_x_count;
  }
  rep.passes = rep.good_x_count >= rep.required_good;
  return rep;
}

//! Platform-independent uniform subset of exactly k indices (partial
//! Fisher-Yates on raw mt19937_64 output).
inline Bitset random_subset(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<Index> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Index>(i);
  Bitset out(n);
  for (std::size_t i = 0; i < k && i < n; ++i) {
    auto j = i + static_cast<std::size_t>(rng() % (n - i));
    std::swap(pool[i], pool[j]);
    out.set(pool[i]);
  }
  return out;
}

struct MixingTrials {
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::vector<MixingReport> reports;
  double rate() const { return trials ? double(passes) / double(trials) : 0.0; }
};

//! Repeats gowers_mixing on seeded random sets of density alpha.
inline MixingTrials mixing_trials(const GroupTable& g, double alpha, double eps1, double eps2,
                                  std::size_t trials, std::uint64_t seed) {
  if (!(alpha > 0 && alpha <= 1))
    throw Error(ErrorKind::InvalidArgument, "alpha must lie in (0, 1]");
  std::mt19937_64 rng(seed);
  const auto k = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(alpha * g.order())));
  MixingTrials out;
  out.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rep = gowers_mixing(g, random_subset(g.order(), k, rng), eps1, eps2);
    out.passes += rep.passes;
    out.reports.push_back(rep);
  }
  return out;
}

}  // namespace qrg

#endif  // QRG_REPTHEORY_HPP_
