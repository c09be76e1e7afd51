#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "qrg/cli/groupspec.hpp"
#include "qrg/covering.hpp"

using qrg::ClassSet;
using qrg::ErrorKind;
using qrg::GroupPtr;
using qrg::GroupTable;
using qrg::Index;
using qrg::Permutation;

namespace {

GroupPtr build(const char* spec) { return qrg::cli::build(spec); }

Index find_perm(const GroupTable& g, std::uint32_t n, std::vector<std::vector<std::uint32_t>> cycles) {
  return *g.find(Permutation::from_cycles(n, cycles));
}

// Element-level sets: conjugates by every element, products of every pair.
using ElementSet = std::set<Index>;

ElementSet conjugates(const GroupTable& g, Index x) {
  ElementSet out;
  for (Index h = 0; h < g.order(); ++h) out.insert(g.mul(g.mul(h, x), g.inv(h)));
  return out;
}

ElementSet product(const GroupTable& g, const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  for (auto x : a)
    for (auto y : b) out.insert(g.mul(x, y));
  return out;
}

ElementSet power(const GroupTable& g, const ElementSet& s, unsigned k) {
  ElementSet out = s;
  for (unsigned i = 1; i < k; ++i) out = product(g, out, s);
  return out;
}

ElementSet members(const ClassSet& s) {
  ElementSet out;
  const auto& g = s.group();
  for (Index x = 0; x < g.order(); ++x)
    if (s.contains(x)) out.insert(x);
  return out;
}

std::optional<unsigned> oracle_covering_number(const GroupTable& g, const ElementSet& s) {
  std::vector<ElementSet> seen;
  ElementSet cur = s;
  for (unsigned k = 1;; ++k) {
    if (cur.size() == g.order()) return k;
    if (std::find(seen.begin(), seen.end(), cur) != seen.end()) return std::nullopt;
    seen.push_back(cur);
    cur = product(g, cur, s);
  }
}

ElementSet symmetric_set(const GroupTable& g, Index x) {
  auto s = conjugates(g, x);
  auto t = conjugates(g, g.inv(x));
  s.insert(t.begin(), t.end());
  return s;
}

}  // namespace

TEST(ClassProduct, IdentityIsNeutral) {
  auto g = build("A5");
  for (std::size_t c = 0; c < g->num_classes(); ++c) {
    auto x = ClassSet::of_class(*g, c);
    EXPECT_EQ(qrg::class_product(ClassSet::identity(*g), x), x);
  }
}

TEST(ClassProduct, TranspositionsInS3) {
  auto g = build("S3");
  auto t = ClassSet::of_element(*g, find_perm(*g, 3, {{0, 1}}));
  auto tt = qrg::class_product(t, t);
  EXPECT_EQ(members(tt), product(*g, members(t), members(t)));
  EXPECT_TRUE(tt.contains(0));
  EXPECT_TRUE(tt.contains(find_perm(*g, 3, {{0, 1, 2}})));
  EXPECT_FALSE(tt.contains(find_perm(*g, 3, {{0, 1}})));
  EXPECT_EQ(tt.element_count(), 3u);
}

TEST(ClassProduct, FiveCyclesSquaredContainIdentity) {
  auto g = build("A5");
  auto x = find_perm(*g, 5, {{0, 1, 2, 3, 4}});
  auto c = ClassSet::of_element(*g, x);
  EXPECT_EQ(c.element_count(), 12u);
  auto cc = qrg::class_product(c, c);
  EXPECT_TRUE(cc.contains(0));
  EXPECT_EQ(members(cc), product(*g, conjugates(*g, x), conjugates(*g, x)));
}

TEST(ClassProduct, GroupMismatch) {
  auto g = build("A5");
  auto h = build("A5");
  try {
    (void)qrg::class_product(ClassSet::identity(*g), ClassSet::identity(*h));
    FAIL();
  } catch (const qrg::Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GroupMismatch);
  }
}

TEST(ClassProductProperty, AgreesWithElementProducts) {
  for (const char* spec : {"S3", "S4", "A4", "A5", "D5", "C6", "SL2:3", "SL2:5", "prod(S3,C3)"}) {
    auto g = build(spec);
    for (std::size_t a = 0; a < g->num_classes(); ++a)
      for (std::size_t b = 0; b < g->num_classes(); ++b) {
        auto ca = ClassSet::of_class(*g, a), cb = ClassSet::of_class(*g, b);
        EXPECT_EQ(members(qrg::class_product(ca, cb)), product(*g, members(ca), members(cb)))
            << spec << " classes " << a << "," << b;
      }
  }
}

TEST(ClassProductProperty, UnionsAgreeWithElementProducts) {
  std::mt19937_64 rng(5);
  for (const char* spec : {"S4", "A5", "SL2:5", "D4"}) {
    auto g = build(spec);
    for (int trial = 0; trial < 20; ++trial) {
      qrg::Bitset a(g->num_classes()), b(g->num_classes());
      for (std::size_t c = 0; c < g->num_classes(); ++c) {
        a[c] = rng() & 1;
        b[c] = rng() & 1;
      }
      ClassSet ca(*g, a), cb(*g, b);
      EXPECT_EQ(members(qrg::class_product(ca, cb)), product(*g, members(ca), members(cb)));
      std::size_t count = 0;
      for (std::size_t c = 0; c < g->num_classes(); ++c)
        if (a[c]) count += g->classes()[c].size;
      EXPECT_EQ(ca.element_count(), count);
    }
  }
}

TEST(CoveringNumber, IdentityNeverCovers) {
  auto g = build("A5");
  auto rep = qrg::covering_number(*g, 0, false);
  EXPECT_FALSE(rep.K.has_value());
}

TEST(CoveringNumber, TrivialGroupIsCoveredAtOnce) {
  auto g = build("C1");
  EXPECT_EQ(qrg::covering_number(*g, 0, false).K, 1u);
}

TEST(CoveringNumber, DoubleThreeCycleInA6) {
  auto g = build("A6");
  auto x = find_perm(*g, 6, {{0, 1, 2}, {3, 4, 5}});
  auto rep = qrg::covering_number(*g, x, false);
  ASSERT_TRUE(rep.K.has_value());
  EXPECT_LE(*rep.K, 4u);
  EXPECT_EQ(rep.K, oracle_covering_number(*g, conjugates(*g, x)));
  // the growth trace ends at |G| and nowhere earlier
  EXPECT_EQ(rep.growth_trace.back().second, g->order());
  for (std::size_t i = 0; i + 1 < rep.growth_trace.size(); ++i)
    EXPECT_LT(rep.growth_trace[i].second, g->order());
}

TEST(CoveringNumber, ProperNormalClosure) {
  auto g = build("S4");
  auto v = find_perm(*g, 4, {{0, 1}, {2, 3}});
  auto rep = qrg::covering_number(*g, v, false);
  EXPECT_FALSE(rep.K.has_value());
  EXPECT_FALSE(qrg::covering_number(*g, find_perm(*g, 4, {{0, 1, 2}}), true).K.has_value());
}

TEST(CoveringNumberProperty, AgreesWithOracleOnSmallGroups) {
  for (const char* spec : {"S3", "S4", "A4", "A5", "D5", "C5", "SL2:5", "prod(A5,C2)"}) {
    auto g = build(spec);
    for (std::size_t c = 0; c < g->num_classes(); ++c) {
      const auto x = g->classes()[c].representative;
      auto plain = qrg::covering_number(*g, x, false);
      auto sym = qrg::covering_number(*g, x, true);
      EXPECT_EQ(plain.K, oracle_covering_number(*g, conjugates(*g, x))) << spec << " class " << c;
      EXPECT_EQ(sym.K, oracle_covering_number(*g, symmetric_set(*g, x))) << spec << " class " << c;
      if (plain.K && sym.K) {
        EXPECT_LE(*sym.K, *plain.K);
      }
      // a proper normal closure rules covering out; in a perfect group the
      // converse holds too
      const Index xs[] = {x};
      const bool generates = qrg::normal_closure(*g, xs).order == g->order();
      if (!generates) {
        EXPECT_FALSE(plain.K.has_value());
      }
      if (qrg::commutator_subgroup(*g).order == g->order()) {
        EXPECT_EQ(plain.K.has_value(), generates && g->order() > 1) << spec << " class " << c;
      }
    }
  }
}

TEST(CoveringNumberProperty, ClassFunction) {
  auto g = build("S5");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto x = static_cast<Index>(rng() % g->order());
    const auto h = static_cast<Index>(rng() % g->order());
    EXPECT_EQ(qrg::covering_number(*g, x, false).K, qrg::covering_number(*g, g->conj(h, x), false).K);
  }
}

TEST(CoveringNumberProperty, MonotoneAbsorption) {
  auto g = build("A6");
  for (std::size_t c = 1; c < g->num_classes(); ++c) {
    auto s = ClassSet::of_class(*g, c);
    auto rep = qrg::covering_number(*g, g->classes()[c].representative, false);
    ASSERT_TRUE(rep.K.has_value());
    for (unsigned k = *rep.K; k < *rep.K + 3; ++k) EXPECT_TRUE(qrg::power(s, k).is_full());
  }
}

TEST(CoveringProperty, Examples) {
  auto a6 = build("A6");
  auto sigma = find_perm(*a6, 6, {{0, 1, 2}, {3, 4, 5}});
  EXPECT_TRUE(qrg::covering_property(*a6, sigma, 4, 2, false));
  // sigma^3 = e, so the property over all powers up to 3 must fail
  EXPECT_FALSE(qrg::covering_property(*a6, sigma, 4, 3, false));
  EXPECT_FALSE(qrg::covering_property(*a6, sigma, 4, qrg::kAllPowers, false));
  EXPECT_TRUE(qrg::covering_property(*a6, sigma, 4, qrg::kAllPowers, false,
                                     qrg::PowerSelection::CoprimeToOrder));

  auto a5 = build("A5");
  EXPECT_FALSE(qrg::covering_property(*a5, find_perm(*a5, 5, {{0, 1, 2, 3, 4}}), 1, 1, false));
  EXPECT_FALSE(qrg::covering_property(*a5, 0, 10, 1, true));
}

TEST(CoveringPropertyProperty, LargerKIsWeaker) {
  auto g = build("A5");
  for (std::size_t c = 1; c < g->num_classes(); ++c) {
    const auto x = g->classes()[c].representative;
    for (unsigned k = 1; k < 6; ++k)
      if (qrg::covering_property(*g, x, k, 2, true)) {
        EXPECT_TRUE(qrg::covering_property(*g, x, k + 1, 2, true));
      }
  }
}

TEST(DoubleCovering, IdentityOnOneSideReducesToSingle) {
  auto g = build("A5");
  const auto y = find_perm(*g, 5, {{0, 1, 2}});
  for (unsigned k = 1; k <= 4; ++k)
    EXPECT_EQ(qrg::double_covering_feasible(*g, 0, y, 1, k, qrg::kAllPowers, 1),
              qrg::covering_property(*g, y, k, 1, true));
}

TEST(DoubleCovering, KleinFourElementsInS4Fail) {
  auto g = build("S4");
  auto v1 = find_perm(*g, 4, {{0, 1}, {2, 3}});
  auto v2 = find_perm(*g, 4, {{0, 2}, {1, 3}});
  for (unsigned k = 1; k <= 6; ++k) EXPECT_FALSE(qrg::double_covering_feasible(*g, v1, v2, k, k, 1, 1));
}

TEST(DoubleCovering, AgreesWithElementProducts) {
  auto g = build("A5");
  for (std::size_t a = 1; a < g->num_classes(); ++a)
    for (std::size_t b = 1; b < g->num_classes(); ++b) {
      const auto x = g->classes()[a].representative, y = g->classes()[b].representative;
      for (unsigned k1 = 1; k1 <= 2; ++k1)
        for (unsigned k2 = 1; k2 <= 2; ++k2) {
          auto set = product(*g, power(*g, symmetric_set(*g, x), k1), power(*g, symmetric_set(*g, y), k2));
          EXPECT_EQ(qrg::double_covering_feasible(*g, x, y, k1, k2, 1, 1), set.size() == g->order());
        }
    }
}

TEST(DoubleCovering, FrontierPairsAreMinimal) {
  auto g = build("A5");
  auto x = find_perm(*g, 5, {{0, 1, 2, 3, 4}});
  auto y = find_perm(*g, 5, {{0, 1, 2}});
  auto frontier = qrg::double_covering_frontier(*g, x, y, 1, 1);
  ASSERT_FALSE(frontier.empty());
  for (auto [k1, k2] : frontier) {
    EXPECT_TRUE(qrg::double_covering_feasible(*g, x, y, k1, k2, 1, 1));
    if (k1 > 0) {
      EXPECT_FALSE(qrg::double_covering_feasible(*g, x, y, k1 - 1, k2, 1, 1));
    }
    if (k2 > 0) {
      EXPECT_FALSE(qrg::double_covering_feasible(*g, x, y, k1, k2 - 1, 1, 1));
    }
  }
}

TEST(CoveringMod, WholeGroupAndTrivialSubgroup) {
  auto g = build("S4");
  auto x = find_perm(*g, 4, {{0, 1}});
  EXPECT_TRUE(qrg::covering_property_mod(*g, qrg::whole_group(*g), x, 1, 1, false));
  for (std::size_t c = 1; c < g->num_classes(); ++c) {
    const auto y = g->classes()[c].representative;
    for (unsigned k = 1; k <= 4; ++k)
      EXPECT_EQ(qrg::covering_property_mod(*g, qrg::trivial_subgroup(*g), y, k, 1, false),
                qrg::covering_property(*g, y, k, 1, false));
  }
}

TEST(CoveringMod, CenterOfSL2Five) {
  // S^K covers G/N iff S^K N = G at the element level.
  auto g = build("SL2:5");
  auto z = qrg::center(*g);
  ASSERT_EQ(z.order, 2u);
  ElementSet zset;
  for (Index x = 0; x < g->order(); ++x)
    if (z.contains(x)) zset.insert(x);
  for (std::size_t c = 0; c < g->num_classes(); ++c) {
    const auto x = g->classes()[c].representative;
    for (unsigned k = 1; k <= 3; ++k) {
      auto covered = product(*g, power(*g, conjugates(*g, x), k), zset).size() == g->order();
      EXPECT_EQ(qrg::covering_property_mod(*g, z, x, k, 1, false), covered) << c << " " << k;
    }
  }
}

TEST(Inflation, SL2FiveFactorIsFour) {
  auto g = build("SL2:5");
  qrg::InflationVerifier v(*g);
  EXPECT_EQ(v.cosocle_subgroup().order, 2u);
  for (std::size_t a = 0; a < g->num_classes(); ++a)
    for (std::size_t b = 0; b < g->num_classes(); ++b) {
      auto rep = v.check(g->classes()[a].representative, g->classes()[b].representative, {1, 1, 1, 1});
      EXPECT_EQ(rep.n, 2u);
      EXPECT_EQ(rep.factor, 4u);
      EXPECT_TRUE(rep.implication_holds());
      if (rep.mod_holds) {
        ASSERT_TRUE(rep.minimal_factor.has_value());
        EXPECT_LE(*rep.minimal_factor, rep.factor);
      }
    }
}

TEST(Inflation, S4CosocleHasThreeClasses) {
  auto g = build("S4");
  auto rep = qrg::verify_cosocle_inflation(*g, find_perm(*g, 4, {{0, 1}}),
                                           find_perm(*g, 4, {{0, 1, 2, 3}}), {1, 1, 1, 1});
  EXPECT_EQ(rep.cosocle_order, 12u);
  EXPECT_EQ(rep.n, 3u);
  EXPECT_EQ(rep.factor, 7u);
  EXPECT_TRUE(rep.implication_holds());
}

TEST(Inflation, SimpleGroupFactorIsOne) {
  auto g = build("A5");
  auto rep = qrg::verify_cosocle_inflation(*g, find_perm(*g, 5, {{0, 1, 2, 3, 4}}),
                                           find_perm(*g, 5, {{0, 1, 2}}), {2, 2, 1, 1});
  EXPECT_EQ(rep.n, 1u);
  EXPECT_EQ(rep.factor, 1u);
  EXPECT_EQ(rep.mod_holds, rep.lifted_holds);
}

TEST(Preservation, ProductOfTwoAlternatingGroups) {
  auto g = build("A5");
  auto x = find_perm(*g, 5, {{0, 1, 2, 3, 4}});
  auto y = find_perm(*g, 5, {{0, 1, 2}});
  auto frontier = qrg::double_covering_frontier(*g, x, y, 1, 1);
  ASSERT_FALSE(frontier.empty());
  auto [k1, k2] = frontier.front();
  auto rep = qrg::verify_product_preservation({g, g}, {{x, y}, {x, y}}, {k1, k2, 1, 1});
  EXPECT_EQ(rep.factor_holds, (std::vector<bool>{true, true}));
  EXPECT_TRUE(rep.product_holds);
  EXPECT_EQ(rep.quotient_holds.size(), 2u);
  EXPECT_TRUE(rep.holds());
}

TEST(Preservation, MismatchedWitnesses) {
  auto g = build("A5");
  try {
    qrg::verify_product_preservation({g, g}, {{0, 0}}, {1, 1, 1, 1});
    FAIL();
  } catch (const qrg::Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}
