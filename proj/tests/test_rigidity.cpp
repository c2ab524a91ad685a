#include <gtest/gtest.h>

#include "property_checks.hpp"

using namespace ramlab;

namespace {

std::size_t only_class(const PermGroup& G, std::uint64_t order) {
  const auto idx = classes_of_order(G, order);
  EXPECT_EQ(idx.size(), 1u) << G.name() << " order " << order;
  return idx.empty() ? 0 : idx.front();
}

}  // namespace

TEST(TripleCount, SymmetricThree) {
  const PermGroup G = symmetric_group(3);
  const auto t = only_class(G, 2), r = only_class(G, 3);
  EXPECT_EQ(generating_triple_count(G, {t, t, r}), 6);
  const auto rep = rigidity_report(G, {t, t, r});
  EXPECT_TRUE(rep.rigid);
  EXPECT_TRUE(rep.rationally_rigid());
}

TEST(TripleCount, AlternatingFourIsMultipleOfInnerOrder) {
  const PermGroup G = alternating_group(4);
  const auto& cls = conjugacy_classes(G);
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = 0; j < cls.size(); ++j)
      for (std::size_t k = 0; k < cls.size(); ++k) EXPECT_EQ(generating_triple_count(G, {i, j, k}) % 12, 0);
}

TEST(TripleCount, PGL27HasRigidTriple) {
  const PermGroup G = group_from_spec("PGL(2,7)");
  bool found = false;
  for (const auto& r : rigidity_by_orders(G, {2, 6, 7}))
    if (r.rationally_rigid()) {
      found = true;
      EXPECT_EQ(r.count, 336);
    }
  EXPECT_TRUE(found);
}

TEST(TripleCount, MatchesExhaustionOnSmallGroups) {
  std::vector<PermGroup> groups{symmetric_group(3), alternating_group(4), symmetric_group(4), dihedral_group(5),
                                alternating_group(5)};
  const auto c = oracle::triple_counts(groups);
  EXPECT_TRUE(c.ok) << c.detail;
}

TEST(TripleCount, RotationInvariance) {
  const PermGroup G = symmetric_group(5);
  const std::size_t r = conjugacy_classes(G).size();
  for (std::size_t i = 1; i < r; ++i)
    for (std::size_t j = 1; j < r; ++j)
      for (std::size_t k = 1; k < r; ++k)
        EXPECT_EQ(generating_triple_count(G, {i, j, k}), generating_triple_count(G, {j, k, i}));
}

TEST(TripleCount, BadClassIndexThrows) {
  EXPECT_THROW(generating_triple_count(symmetric_group(3), {0, 1, 7}), std::out_of_range);
}

TEST(Criterion, PGL27Passes) {
  const PermGroup G = group_from_spec("PGL(2,7)");
  const auto six = classes_of_order(G, 6), seven = classes_of_order(G, 7), two = classes_of_order(G, 2);
  bool any = false;
  for (auto a : two)
    for (auto b : six)
      for (auto c : seven) any = any || coprime_criterion_check(G, {a, b, c}).passes;
  EXPECT_TRUE(any);
  EXPECT_FALSE(find_criterion_pairs(G).empty());
}

TEST(Criterion, FailureTags) {
  const PermGroup G = group_from_spec("PGL(2,7)");
  const auto six = classes_of_order(G, 6).front(), two = classes_of_order(G, 2).front();
  const auto dup = coprime_criterion_check(G, {two, six, six});
  EXPECT_FALSE(dup.passes);
  EXPECT_EQ(dup.offending, CriterionFailure::duplicate_large_class);

  const auto only_small = coprime_criterion_check(G, {two, two, two});
  EXPECT_EQ(only_small.offending, CriterionFailure::not_two_large_orders);

  // in S(5) the order-4 and order-6 classes are self-centralizing but share the factor 2
  const PermGroup S5 = symmetric_group(5);
  const auto four = classes_of_order(S5, 4).front(), six5 = classes_of_order(S5, 6).front();
  const auto nc = coprime_criterion_check(S5, {classes_of_order(S5, 2).front(), four, six5});
  EXPECT_FALSE(nc.passes);
  EXPECT_EQ(nc.offending, CriterionFailure::orders_not_coprime);

  // in S(4) a 3-cycle and a 4-cycle are rational, self-centralizing and of coprime order
  const PermGroup S4 = symmetric_group(4);
  const auto s4four = classes_of_order(S4, 4).front(), s4three = classes_of_order(S4, 3).front();
  EXPECT_TRUE(coprime_criterion_check(S4, {classes_of_order(S4, 2).front(), s4three, s4four}).passes);
}

TEST(Criterion, CyclicGroupHasNoPairs) { EXPECT_TRUE(find_criterion_pairs(cyclic_group(6)).empty()); }

TEST(Criterion, AlternatingClasses) {
  for (std::size_t n : {7, 9, 11, 13}) {
    const auto r = an_classes_report(n);
    EXPECT_TRUE(r.passes()) << n;
    EXPECT_EQ(r.centralizer_x, r.x.order()) << n;
  }
  EXPECT_THROW(an_classes_report(8), std::invalid_argument);
  EXPECT_THROW(an_classes_report(5), std::invalid_argument);
  EXPECT_THROW(an_classes_report(15), std::invalid_argument);
}
