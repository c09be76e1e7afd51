#ifndef QRG_LIMITS_HPP_
#define QRG_LIMITS_HPP_

#include <cstddef>

namespace qrg {

//! Size limits shared by the enumeration and analysis routines. All of them
//! can be overridden per call (and from the command line).
struct Caps {
  //! Largest group that will be enumerated.
  std::size_t order = 500000;
  //! Groups up to this order get a materialized |G| x |G| product table.
  std::size_t table = 4096;
  //! normal_subgroups() works on class bitmasks of at most this many classes.
  std::size_t classes = 64;
  //! commutator_width() refuses larger groups.
  std::size_t width = 5000;
  //! character_degrees() refuses larger groups.
  std::size_t degree = 20000;
};

inline constexpr Caps kDefaultCaps{};

}  // namespace qrg

#endif  // QRG_LIMITS_HPP_
