#include <gtest/gtest.h>

#include "property_checks.hpp"
#include "ramlab/classes.hpp"

using namespace ramlab;

TEST(Permutation, CompositionAppliesRightFactorFirst) {
  const Permutation a = parse_cycles("(1,2)", 3), b = parse_cycles("(2,3)", 3);
  // a(b(1)) = a(1) = 2; a(b(2)) = a(3) = 3
  const Permutation ab = compose(a, b);
  EXPECT_EQ(ab(0), 1u);
  EXPECT_EQ(ab(1), 2u);
  EXPECT_EQ(ab(2), 0u);
  EXPECT_EQ(conjugate(a, b), compose(compose(b, a), b.inverse()));
}

TEST(Permutation, OrderAndCycleType) {
  const Permutation g = parse_cycles("(1,2,3)(4,5)", 6);
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.cycle_type(), (std::vector<std::size_t>{3, 2, 1}));
  EXPECT_TRUE(g.pow(6).is_identity());
  EXPECT_EQ(parse_cycles(g.to_cycle_string(), 6), g);
}

TEST(Permutation, RejectsMalformedCycles) {
  EXPECT_THROW(parse_cycles("(1,2,1)", 3), std::invalid_argument);
  EXPECT_THROW(parse_cycles("(1,4)", 3), std::invalid_argument);
}

TEST(PermGroup, OrdersMatchClosure) {
  for (const auto& G : oracle::small_group_corpus())
    EXPECT_EQ(G.order(), oracle::closure(G.degree(), G.generators()).size()) << G.name();
}

TEST(PermGroup, RandomGroupsMatchClosure) {
  const auto c = oracle::group_orders_vs_closure(25, 101);
  EXPECT_TRUE(c.ok) << c.detail;
}

TEST(PermGroup, NamedOrders) {
  EXPECT_EQ(group_from_spec("S(7)").order(), 5040);
  EXPECT_EQ(group_from_spec("A(9)").order(), 181440);
  EXPECT_EQ(group_from_spec("D(7)").order(), 14);
  EXPECT_EQ(group_from_spec("PSL(2,11)").order(), 660);
  EXPECT_EQ(group_from_spec("PGL(2,13)").order(), 2184);
  EXPECT_EQ(group_from_spec("M11").order(), 7920);
}

TEST(PermGroup, BundledSymplecticGroups) {
  const PermGroup a = group_from_spec("PSp4(3).2");
  EXPECT_EQ(a.order(), 51840);
  EXPECT_EQ(a.order() / derived_subgroup(a).order(), 2);
  const PermGroup b = group_from_spec("PSp6(2)");
  EXPECT_EQ(b.order(), 1451520);
  EXPECT_EQ(derived_subgroup(b).order(), b.order());
}

TEST(PermGroup, ProductsAndWreaths) {
  EXPECT_EQ(wreath_product(cyclic_group(2), symmetric_group(2)).order(), 8);
  EXPECT_EQ(wreath_product(symmetric_group(3), symmetric_group(2)).order(), 72);
  EXPECT_EQ(direct_product(alternating_group(4), cyclic_group(3)).order(), 36);
  EXPECT_EQ(wreath_product(cyclic_group(3), cyclic_group(3)).order(), 81);
}

TEST(PermGroup, HatGroupOrders) {
  for (const char* name : {"C(3)", "A(4)", "A(5)", "S(3)"}) {
    const PermGroup G = group_from_spec(name);
    const PermGroup H = hat_group(G);
    EXPECT_EQ(H.order(), oracle::closure(H.degree(), H.generators()).size()) << name;
    for (const auto& g : H.generators()) EXPECT_EQ(g.order(), 2u);
  }
}

TEST(PermGroup, UnknownSpecIsRejected) {
  EXPECT_THROW(group_from_spec("bogus"), std::invalid_argument);
  EXPECT_THROW(group_from_spec("PSL(2,9)"), std::invalid_argument);
}

TEST(Classes, SymmetricFourHasFiveClasses) {
  const PermGroup S4 = symmetric_group(4);
  const auto& cls = conjugacy_classes(S4);
  ASSERT_EQ(cls.size(), 5u);
  BigInt total = 0;
  for (const auto& c : cls) total += c.size;
  EXPECT_EQ(total, 24);
}

TEST(Classes, PartitionIdentities) {
  const auto c = oracle::class_identities(oracle::small_group_corpus());
  EXPECT_TRUE(c.ok) << c.detail;
}

TEST(Classes, PGL27CentralizersAndNormalizers) {
  const PermGroup G = group_from_spec("PGL(2,7)");
  for (auto i : classes_of_order(G, 7)) {
    const auto& x = conjugacy_classes(G)[i].rep;
    EXPECT_EQ(centralizer(G, x).order(), 7);
    EXPECT_EQ(normalizer_cyclic(G, x).order(), 42);
  }
  for (auto i : classes_of_order(G, 6)) {
    const auto& x = conjugacy_classes(G)[i].rep;
    EXPECT_EQ(centralizer(G, x).order(), 6);
    EXPECT_EQ(normalizer_cyclic(G, x).order(), 12);
  }
  EXPECT_EQ(center_order(G), 1);
}

TEST(Classes, Rationality) {
  const PermGroup A5 = alternating_group(5), S5 = symmetric_group(5);
  const Permutation five = parse_cycles("(1,2,3,4,5)", 5);
  EXPECT_FALSE(is_rational_element(A5, five));
  EXPECT_TRUE(is_rational_element(S5, five));
  EXPECT_TRUE(is_rational_element(A5, parse_cycles("(1,2,3)", 5)));
  std::size_t rational = 0;
  for (const auto& c : conjugacy_classes(A5)) rational += c.rational;
  EXPECT_EQ(rational, 3u);
}

TEST(Classes, CenterOrders) {
  EXPECT_EQ(center_order(cyclic_group(12)), 12);
  EXPECT_EQ(center_order(dihedral_group(4)), 2);
  EXPECT_EQ(center_order(symmetric_group(5)), 1);
}
