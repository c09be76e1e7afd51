#ifndef QRG_CONSTRUCTIONS_HPP_
#define QRG_CONSTRUCTIONS_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qrg/gfmat.hpp"
#include "qrg/number_theory.hpp"
#include "qrg/permutation.hpp"
#include "qrg/rational.hpp"

namespace qrg {

struct TwoPrimeSplit {
  std::uint32_t a = 0;  // number of p-cycles
  std::uint32_t b = 0;  // number of q-cycles
  bool operator==(const TwoPrimeSplit&) const = default;
};

//! Positive (a, b) with a*p + b*q = n and max(a, b) >= 2, smallest a first.
//! The max condition keeps two cycles of equal length, so the resulting
//! permutation is not exceptional.
inline std::optional<TwoPrimeSplit> solve_two_prime(std::uint32_t n, std::uint32_t p,
                                                    std::uint32_t q) {
  if (!is_prime(p) || p % 2 == 0 || !is_prime(q) || q <= p)
    throw Error(ErrorKind::InvalidArgument, "need an odd prime p and a prime q > p");
  for (std::uint64_t a = 1; a * p < n; ++a) {
    const auto rest = n - a * p;
    if (rest % q != 0) continue;
    const auto b = rest / q;
    if (b >= 1 && (a >= 2 || b >= 2))
      return TwoPrimeSplit{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
  }
  return std::nullopt;
}

//! a disjoint p-cycles followed by b disjoint q-cycles on n = ap + bq points.
//! Even, fixed-point free and non-exceptional by construction.
inline Permutation brenner_sigma(std::uint32_t n, std::uint32_t p, std::uint32_t q) {
  auto split = solve_two_prime(n, p, q);
  if (!split)
    throw Error(ErrorKind::Infeasible, "no split n = ap + bq with max(a, b) >= 2");
  std::vector<std::vector<std::uint32_t>> cycles;
  std::uint32_t next = 0;
  auto add = [&](std::uint32_t count, std::uint32_t len) {
    for (std::uint32_t c = 0; c < count; ++c) {
      std::vector<std::uint32_t> cyc(len);
      for (auto& x : cyc) x = next++;
      cycles.push_back(std::move(cyc));
    }
  };
  add(split->a, p);
  add(split->b, q);
  return Permutation::from_cycles(n, cycles);
}

//! Column j carries a single 1 in row p(j), i.e. M e_j = e_{p(j)}. With this
//! convention perm_matrix(p * q) = perm_matrix(p) * perm_matrix(q).
inline FFMatrix perm_matrix(const Permutation& p, PrimeField field) {
  FFMatrix m(field, p.degree());
  for (std::uint32_t j = 0; j < p.degree(); ++j) m.at(p[j], j) = 1;
  return m;
}

//! P + P (+ I_pad). With pad 0 the image lies in Sp_{2n} for the form
//! J = [[0, I], [-I, 0]], since the permutation moves the hyperbolic pairs
//! (v_i, w_i) together.
inline FFMatrix double_embed(const Permutation& p, std::uint32_t pad, PrimeField field) {
  if (pad > 2) throw Error(ErrorKind::InvalidArgument, "pad must be 0, 1 or 2");
  if (parity(p) == Parity::Odd)
    throw Error(ErrorKind::OddPermutation, "double embedding is defined on A_n");
  auto pm = perm_matrix(p, field);
  auto m = direct_sum(pm, pm);
  if (pad > 0) m = direct_sum(m, FFMatrix::identity(field, pad));
  return m;
}

struct SigmaJordanReport {
  Permutation sigma;
  TwoPrimeSplit split;
  std::uint32_t cycles = 0;
  Rational value;
  Rational bound;  // (n - k) / n for k cycles
  bool bound_holds() const { return value >= bound; }
};

inline SigmaJordanReport jordan_of_sigma(std::uint32_t n, std::uint32_t p, std::uint32_t q,
                                         PrimeField field) {
  auto split = solve_two_prime(n, p, q);
  if (!split)
    throw Error(ErrorKind::Infeasible, "no split n = ap + bq with max(a, b) >= 2");
  auto sigma = brenner_sigma(n, p, q);
  SigmaJordanReport rep{sigma, *split, split->a + split->b, {}, {}};
  rep.value = jordan_length(perm_matrix(sigma, field));
  rep.bound = Rational(static_cast<std::int64_t>(n) - rep.cycles, n);
  return rep;
}

}  // namespace qrg

#endif  // QRG_CONSTRUCTIONS_HPP_
