#ifndef QRG_PERMUTATION_HPP_
#define QRG_PERMUTATION_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrg/detail/scanner.hpp"
#include "qrg/error.hpp"

namespace qrg {

enum class Parity { Even, Odd };

constexpr Parity operator^(Parity a, Parity b) noexcept {
  return a == b ? Parity::Even : Parity::Odd;
}

inline std::string_view to_string(Parity p) noexcept {
  return p == Parity::Even ? "even" : "odd";
}

//! Cycle structure of a permutation. Lengths are sorted in descending order
//! and include fixed points as cycles of length 1.
struct CycleType {
  std::vector<std::uint32_t> lengths;
  std::uint32_t fixed_points = 0;
  Parity parity = Parity::Even;

  std::size_t num_cycles() const noexcept { return lengths.size(); }
  bool operator==(const CycleType&) const = default;
};

//! A bijection on {0, ..., n-1}. Composition follows function notation:
//! (p * q)(i) = p(q(i)), so q acts first.
class Permutation {
 public:
  //! Identity on `degree` points.
  explicit Permutation(std::uint32_t degree = 1) : images_(degree) {
    if (degree == 0)
      throw Error(ErrorKind::InvalidPermutation, "degree must be positive");
    for (std::uint32_t i = 0; i < degree; ++i) images_[i] = i;
  }

  explicit Permutation(std::vector<std::uint32_t> images)
      : images_(std::move(images)) {
    if (images_.empty())
      throw Error(ErrorKind::InvalidPermutation, "degree must be positive");
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
      if (v >= images_.size() || seen[v])
        throw Error(ErrorKind::InvalidPermutation,
                    "images do not form a bijection");
      seen[v] = true;
    }
  }

  //! Builds from disjoint 0-indexed cycles. Overlapping cycles are rejected.
  static Permutation from_cycles(
      std::uint32_t degree,
      const std::vector<std::vector<std::uint32_t>>& cycles) {
    Permutation p(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cyc : cycles) {
      for (auto x : cyc) {
        if (x >= degree)
          throw Error(ErrorKind::InvalidPermutation,
                      "point " + std::to_string(x + 1) + " exceeds degree " +
                          std::to_string(degree));
        if (used[x])
          throw Error(ErrorKind::InvalidPermutation,
                      "cycles are not disjoint at point " +
                          std::to_string(x + 1));
        used[x] = true;
      }
      for (std::size_t i = 0; i < cyc.size(); ++i)
        p.images_[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    return p;
  }

  static Permutation identity(std::uint32_t degree) {
    return Permutation(degree);
  }

  std::uint32_t degree() const noexcept {
    return static_cast<std::uint32_t>(images_.size());
  }
  std::uint32_t operator[](std::uint32_t i) const { return images_[i]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::uint32_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<std::uint32_t> inv(images_.size());
    for (std::uint32_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    Permutation r;
    r.images_ = std::move(inv);
    return r;
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
      throw Error(ErrorKind::MixedCarriers, "permutations of different degree");
    Permutation r;
    r.images_.resize(p.images_.size());
    for (std::size_t i = 0; i < q.images_.size(); ++i)
      r.images_[i] = p.images_[q.images_[i]];
    return r;
  }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  //! Non-trivial cycles, each starting at its smallest point, ordered by that
  //! point.
  std::vector<std::vector<std::uint32_t>> cycles() const {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      std::vector<std::uint32_t> cyc;
      for (auto x = i; !seen[x]; x = images_[x]) {
        seen[x] = true;
        cyc.push_back(x);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = images_.size();
    for (auto v : images_) h = h * 1000003u ^ v;
    return h;
  }

 private:
  std::vector<std::uint32_t> images_;
};

inline CycleType cycle_type(const Permutation& p) {
  CycleType ct;
  std::vector<bool> seen(p.degree(), false);
  for (std::uint32_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    for (auto x = i; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    ct.lengths.push_back(len);
    if (len == 1) ++ct.fixed_points;
  }
  std::sort(ct.lengths.begin(), ct.lengths.end(), std::greater<>());
  ct.parity = (p.degree() - ct.lengths.size()) % 2 == 0 ? Parity::Even
                                                          : Parity::Odd;
  return ct;
}

inline Parity parity(const Permutation& p) { return cycle_type(p).parity; }

//! An even permutation is exceptional when all of its cycle lengths, fixed
//! points included, are odd and pairwise distinct; exactly then its class in
//! A_n is a proper part of its class in S_n.
inline bool is_exceptional(const CycleType& ct) {
  if (ct.parity == Parity::Odd)
    throw Error(ErrorKind::OddPermutation,
                "exceptionality is defined for even permutations only");
  for (std::size_t i = 0; i < ct.lengths.size(); ++i) {
    if (ct.lengths[i] % 2 == 0) return false;
    if (i > 0 && ct.lengths[i] == ct.lengths[i - 1]) return false;
  }
  return true;
}

inline bool is_exceptional(const Permutation& p) {
  return is_exceptional(cycle_type(p));
}

inline bool is_fixed_point_free(const Permutation& p) {
  return cycle_type(p).fixed_points == 0;
}

//! 1-indexed disjoint cycle notation, "()" for the identity.
inline std::string to_cycle_string(const Permutation& p) {
  auto cyc = p.cycles();
  if (cyc.empty()) return "()";
  std::string s;
  for (const auto& c : cyc) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s;
}

//! Full external form: cycles followed by the mandatory degree suffix.
inline std::string to_string(const Permutation& p) {
  return to_cycle_string(p) + ";degree=" + std::to_string(p.degree());
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << to_string(p);
}

namespace detail {

// Parses a run of "(a b c)(d e)" groups, 1-indexed, and returns 0-indexed
// cycles. Stops at the first character that cannot start a cycle.
inline std::vector<std::vector<std::uint32_t>> parse_cycle_list(Scanner& sc) {
  std::vector<std::vector<std::uint32_t>> cycles;
  sc.skip_ws();
  while (sc.peek() == '(') {
    sc.expect('(');
    std::vector<std::uint32_t> cyc;
    sc.skip_ws();
    while (sc.peek() != ')') {
      auto v = sc.number();
      if (v == 0) sc.fail("point >= 1");
      cyc.push_back(static_cast<std::uint32_t>(v - 1));
      sc.skip_ws();
      if (sc.accept(',')) sc.skip_ws();
    }
    sc.expect(')');
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    sc.skip_ws();
  }
  return cycles;
}

inline Permutation cycles_to_permutation(
    std::uint32_t degree,
    const std::vector<std::vector<std::uint32_t>>& cycles, std::size_t offset) {
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const Error& e) {
    throw ParseError(offset, "disjoint cycles within degree", e.what());
  }
}

}  // namespace detail

//! Parses cycles when the degree is known from context (e.g. the ambient
//! group). Input is 1-indexed: "(1 2 3)(4 5)".
inline Permutation parse_cycles(std::string_view text, std::uint32_t degree) {
  detail::Scanner sc(text);
  auto cycles = detail::parse_cycle_list(sc);
  sc.skip_ws();
  sc.expect_end();
  return detail::cycles_to_permutation(degree, cycles, 0);
}

//! Parses the external form "(1 2 3)(4 5);degree=6". The separator before
//! "degree=" may be ';' or whitespace; the degree is never inferred.
inline Permutation parse_permutation(std::string_view text) {
  detail::Scanner sc(text);
  auto cycles = detail::parse_cycle_list(sc);
  sc.skip_ws();
  sc.accept(';');
  sc.skip_ws();
  std::size_t at = sc.offset();
  sc.expect("degree=");
  auto n = sc.number();
  if (n == 0 || n > (1u << 20)) throw ParseError(at, "degree >= 1", "bad degree");
  sc.skip_ws();
  sc.expect_end();
  return detail::cycles_to_permutation(static_cast<std::uint32_t>(n), cycles,
                                       0);
}

}  // namespace qrg

template <>
struct std::hash<qrg::Permutation> {
  std::size_t operator()(const qrg::Permutation& p) const noexcept {
    return p.hash();
  }
};

#endif  // QRG_PERMUTATION_HPP_
