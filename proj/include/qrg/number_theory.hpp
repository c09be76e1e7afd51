#ifndef QRG_NUMBER_THEORY_HPP_
#define QRG_NUMBER_THEORY_HPP_

#include <cstdint>
#include <numeric>

namespace qrg {

//! Deterministic trial division; every modulus in this library is small.
constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

constexpr std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                                std::uint64_t mod) noexcept {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(r) * base % mod);
    base = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(base) * base % mod);
    exp >>= 1;
  }
  return r;
}

//! Inverse modulo a prime via Fermat.
constexpr std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) noexcept {
  return pow_mod(a, p - 2, p);
}

constexpr std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) noexcept {
  return a / std::gcd(a, b) * b;
}

}  // namespace qrg

#endif  // QRG_NUMBER_THEORY_HPP_
