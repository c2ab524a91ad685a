#include <gtest/gtest.h>

#include "ramlab/builtin_groups.hpp"
#include "ramlab/genexp.hpp"

using namespace ramlab;

TEST(Gexp, SymmetricGroupsAreTwo) {
  for (std::size_t n = 3; n <= 9; ++n) EXPECT_EQ(gexp(symmetric_group(n)).value, 2u) << n;
  // S(10) is past the exact enumeration cap
  EXPECT_THROW(gexp(symmetric_group(10)), ResourceCapError);
  ClassOptions opt;
  opt.allow_randomized = true;
  EXPECT_EQ(gexp(symmetric_group(10), opt).value, 2u);
}

TEST(Gexp, DihedralGroupsAreTwo) {
  for (std::size_t n = 3; n <= 12; ++n) EXPECT_EQ(gexp(dihedral_group(n)).value, 2u) << n;
}

TEST(Gexp, CyclicGroupsEqualTheirOrder) {
  for (std::size_t n = 2; n <= 30; ++n) EXPECT_EQ(gexp(cyclic_group(n)).value, n) << n;
}

TEST(Gexp, BundledGroups) {
  EXPECT_EQ(gexp(alternating_group(5)).value, 2u);
  EXPECT_EQ(gexp(group_from_spec("PGL(2,7)")).value, 2u);
  EXPECT_EQ(gexp(group_from_spec("M11")).value, 2u);
  EXPECT_EQ(gexp(alternating_group(4)).value, 3u);
}

TEST(Gexp, WreathOfCyclicThrees) {
  const PermGroup G = wreath_product(cyclic_group(3), cyclic_group(3));
  EXPECT_EQ(gexp(G).value, 3u);
  EXPECT_EQ(exponent(G), 9u);
}

TEST(Gexp, CertificateNormallyGenerates) {
  for (const char* name : {"S(5)", "A(4)", "D(6)", "C(10)", "PGL(2,7)"}) {
    const PermGroup G = group_from_spec(name);
    const auto r = gexp(G);
    EXPECT_TRUE(normally_generates(G, r.certificate)) << name;
    std::uint64_t l = 1;
    for (const auto& x : r.certificate) l = std::lcm(l, x.order());
    EXPECT_EQ(l, r.value) << name;
    EXPECT_EQ(exponent(G) % r.value, 0u) << name;
  }
}

TEST(Gexp, DirectProductIsLcm) {
  const std::vector<const char*> pool{"C(2)", "C(3)", "C(4)", "C(6)", "S(3)", "A(4)", "D(4)", "D(5)"};
  for (const char* a : pool)
    for (const char* b : pool) EXPECT_TRUE(gexp_lcm_check(group_from_spec(a), group_from_spec(b))) << a << " x " << b;
}

TEST(Gexp, ExplicitProductValues) {
  EXPECT_EQ(gexp(direct_product(cyclic_group(4), cyclic_group(6))).value, 12u);
  EXPECT_EQ(gexp(direct_product(alternating_group(4), symmetric_group(3))).value, 6u);
}

TEST(Hat, InvolutionGeneration) {
  for (const char* name : {"C(3)", "A(4)", "A(5)", "S(3)", "D(5)"}) {
    const auto r = hat_involution_report(group_from_spec(name));
    EXPECT_TRUE(r.passes()) << name;
    EXPECT_EQ(r.gexp_value, 2u) << name;
  }
}
