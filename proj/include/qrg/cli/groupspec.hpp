#ifndef QRG_CLI_GROUPSPEC_HPP_
#define QRG_CLI_GROUPSPEC_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qrg/detail/scanner.hpp"
#include "qrg/gfmat.hpp"
#include "qrg/group.hpp"
#include "qrg/permutation.hpp"

namespace qrg::cli {

//! Parsed group specification.
//!
//!   spec  := A<n> | S<n> | C<n> | D<n> | SL<n>:<p> | PSL2:<p> | Sp<n>:<p>
//!          | perm:<cycles>;degree=<n>[;gens=<cycles>{,<cycles>}]
//!          | prod(<spec>,<spec>)
//!
//! D<n> is dihedral of order 2n. In the perm form the leading cycles are the
//! first generator and gens= lists further ones, all 1-indexed.
struct GroupSpec {
  enum class Kind { Alternating, Symmetric, Cyclic, Dihedral, SL, PSL2, Sp, Perm, Product };

  Kind kind = Kind::Cyclic;
  std::uint32_t n = 1;
  std::uint32_t p = 0;
  std::vector<Permutation> gens;  // Perm
  std::vector<GroupSpec> children;  // Product

  bool operator==(const GroupSpec&) const = default;
};

namespace detail {

inline GroupSpec parse_spec_node(qrg::detail::Scanner& sc) {
  using Kind = GroupSpec::Kind;
  GroupSpec s;
  const auto start = sc.offset();
  auto small = [&](std::uint64_t lo, const char* what) {
    const auto at = sc.offset();
    auto v = sc.number();
    if (v < lo || v > 1000000) throw ParseError(at, what, "value out of range");
    return static_cast<std::uint32_t>(v);
  };
  auto prime = [&]() {
    const auto at = sc.offset();
    auto v = sc.number();
    if (v < 2 || v > 65536 || !is_prime(v)) throw ParseError(at, "prime <= 65536", "not a prime");
    return static_cast<std::uint32_t>(v);
  };

  if (sc.accept("prod(")) {
    s.kind = Kind::Product;
    s.children.push_back(parse_spec_node(sc));
    sc.skip_ws();
    sc.expect(',');
    sc.skip_ws();
    s.children.push_back(parse_spec_node(sc));
    sc.skip_ws();
    sc.expect(')');
    return s;
  }
  if (sc.accept("perm:")) {
    s.kind = Kind::Perm;
    const auto first_at = sc.offset();
    auto first = qrg::detail::parse_cycle_list(sc);
    sc.accept(';');
    sc.skip_ws();
    sc.expect("degree=");
    s.n = small(1, "degree >= 1");
    s.gens.push_back(qrg::detail::cycles_to_permutation(s.n, first, first_at));
    if (sc.accept(";gens=")) {
      do {
        sc.skip_ws();
        const auto at = sc.offset();
        if (sc.peek() != '(') sc.fail("'('");
        s.gens.push_back(qrg::detail::cycles_to_permutation(s.n, parse_cycle_list(sc), at));
      } while (sc.peek() == ',' && sc.rest().size() > 1 && sc.rest()[1] == '(' && sc.accept(','));
    }
    return s;
  }
  if (sc.accept("PSL2:")) {
    s.kind = Kind::PSL2;
    s.n = 2;
    s.p = prime();
    return s;
  }
  if (sc.accept("SL")) {
    s.kind = Kind::SL;
    s.n = small(2, "dimension >= 2");
    sc.expect(':');
    s.p = prime();
    return s;
  }
  if (sc.accept("Sp")) {
    s.kind = Kind::Sp;
    const auto at = sc.offset();
    s.n = small(2, "even dimension >= 2");
    if (s.n % 2) throw ParseError(at, "even dimension >= 2", "odd dimension");
    sc.expect(':');
    s.p = prime();
    return s;
  }
  switch (sc.peek()) {
    case 'A': s.kind = Kind::Alternating; break;
    case 'S': s.kind = Kind::Symmetric; break;
    case 'C': s.kind = Kind::Cyclic; break;
    case 'D': s.kind = Kind::Dihedral; break;
    default:
      throw ParseError(start, "one of 'A' 'S' 'C' 'D' 'SL' 'PSL2:' 'Sp' 'perm:' 'prod('",
                       sc.done() ? "unexpected end of input"
                                 : "unexpected '" + std::string(1, sc.peek()) + "'");
  }
  sc.accept(sc.peek());
  s.n = small(1, "n >= 1");
  return s;
}

}  // namespace detail

inline GroupSpec parse_spec(std::string_view text) {
  qrg::detail::Scanner sc(text);
  sc.skip_ws();
  auto s = detail::parse_spec_node(sc);
  sc.skip_ws();
  sc.expect_end();
  return s;
}

//! Canonical text form; parse_spec(render(s)) == s.
inline std::string render(const GroupSpec& s) {
  using Kind = GroupSpec::Kind;
  const auto n = std::to_string(s.n);
  const auto p = std::to_string(s.p);
  switch (s.kind) {
    case Kind::Alternating: return "A" + n;
    case Kind::Symmetric: return "S" + n;
    case Kind::Cyclic: return "C" + n;
    case Kind::Dihedral: return "D" + n;
    case Kind::SL: return "SL" + n + ":" + p;
    case Kind::PSL2: return "PSL2:" + p;
    case Kind::Sp: return "Sp" + n + ":" + p;
    case Kind::Perm: {
      std::string out = "perm:" + to_cycle_string(s.gens.front()) + ";degree=" + n;
      for (std::size_t i = 1; i < s.gens.size(); ++i)
        out += (i == 1 ? ";gens=" : ",") + to_cycle_string(s.gens[i]);
      return out;
    }
    case Kind::Product: return "prod(" + render(s.children[0]) + "," + render(s.children[1]) + ")";
  }
  return {};
}

//! Generators: S_n by (1 2) and (1 .. n); A_n by the 3-cycles (1 2 i);
//! C_n by an n-cycle; D_n by rotation and reflection on n points, with D1 and
//! D2 acting on 2 and 4 points.
inline std::vector<Permutation> family_generators(const GroupSpec& s) {
  using Kind = GroupSpec::Kind;
  const auto n = s.n;
  std::vector<Permutation> gens;
  auto cycle = [](std::uint32_t len) {
    std::vector<std::uint32_t> c(len);
    for (std::uint32_t i = 0; i < len; ++i) c[i] = i;
    return c;
  };
  switch (s.kind) {
    case Kind::Alternating:
      for (std::uint32_t i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
      break;
    case Kind::Symmetric:
      if (n >= 2) gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
      if (n >= 3) gens.push_back(Permutation::from_cycles(n, {cycle(n)}));
      break;
    case Kind::Cyclic:
      if (n >= 2) gens.push_back(Permutation::from_cycles(n, {cycle(n)}));
      break;
    case Kind::Dihedral:
      if (n == 1) return {Permutation::from_cycles(2, {{0, 1}})};
      if (n == 2) return {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{2, 3}})};
      {
        gens.push_back(Permutation::from_cycles(n, {cycle(n)}));
        std::vector<std::uint32_t> refl(n);
        for (std::uint32_t i = 0; i < n; ++i) refl[i] = (n - i) % n;
        gens.push_back(Permutation(refl));
      }
      break;
    case Kind::Perm: return s.gens;
    default: throw Error(ErrorKind::InvalidArgument, "not a permutation family");
  }
  if (gens.empty()) gens.push_back(Permutation(n));
  return gens;
}

inline GroupPtr build(const GroupSpec& s, const Caps& caps = kDefaultCaps) {
  using Kind = GroupSpec::Kind;
  const auto name = render(s);
  switch (s.kind) {
    case Kind::SL:
    case Kind::PSL2: {
      auto sl = enumerate(
          classical_generators(ClassicalFamily::SL, s.n, PrimeField(s.p), caps.order), name, caps);
      if (s.kind == Kind::SL) return sl;
      return quotient(*sl, center(*sl), caps);
    }
    case Kind::Sp:
      return enumerate(classical_generators(ClassicalFamily::Sp, s.n, PrimeField(s.p), caps.order),
                       name, caps);
    case Kind::Product:
      return direct_product(build(s.children[0], caps), build(s.children[1], caps), caps);
    default: return enumerate(family_generators(s), name, caps);
  }
}

inline GroupPtr build(std::string_view spec, const Caps& caps = kDefaultCaps) {
  return build(parse_spec(spec), caps);
}

//! Element of a built group: "#<index>", "class:<k>" (its representative),
//! 1-indexed cycles for permutation groups, or a matrix literal.
inline Index parse_element(const GroupTable& g, std::string_view text) {
  qrg::detail::Scanner sc(text);
  sc.skip_ws();
  Index x = 0;
  if (sc.accept('#')) {
    const auto at = sc.offset();
    auto v = sc.number();
    if (v >= g.order()) throw ParseError(at, "index < " + std::to_string(g.order()), "out of range");
    x = static_cast<Index>(v);
  } else if (sc.accept("class:")) {
    const auto at = sc.offset();
    auto v = sc.number();
    if (v >= g.num_classes())
      throw ParseError(at, "class < " + std::to_string(g.num_classes()), "out of range");
    x = g.classes()[v].representative;
  } else if (sc.peek() == '(') {
    auto probe = g.element_as<Permutation>(0);
    if (!probe) throw ParseError(0, "'#' or 'class:'", "cycle notation needs a permutation group");
    auto perm = parse_cycles(sc.rest(), probe->degree());
    auto found = g.find(perm);
    if (!found) throw ParseError(0, "element of " + g.name(), "permutation not in group");
    return *found;
  } else if (sc.peek() == 'm') {
    auto m = parse_matrix(sc.rest());
    auto found = g.find(m);
    if (!found) throw ParseError(0, "element of " + g.name(), "matrix not in group");
    return *found;
  } else {
    sc.fail("'#', 'class:', '(' or 'mat:'");
  }
  sc.skip_ws();
  sc.expect_end();
  return x;
}

}  // namespace qrg::cli

#endif  // QRG_CLI_GROUPSPEC_HPP_
