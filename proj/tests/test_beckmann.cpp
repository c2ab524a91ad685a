#include <gtest/gtest.h>

#include "property_checks.hpp"

using namespace ramlab;

namespace {

Cover cover_file(const std::string& name) { return load_cover((data_dir() / "covers" / name).string()); }

Cover poly(const std::string& body) { return parse_cover("poly\n" + body); }

std::set<BigInt> primes(std::initializer_list<long> ps) {
  std::set<BigInt> s;
  for (long p : ps) s.insert(BigInt(p));
  return s;
}

std::vector<std::string> labels(const std::vector<BranchPoint>& bps) {
  std::vector<std::string> out;
  for (const auto& b : bps) out.push_back(b.label());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Cover, ParsingAndValidation) {
  EXPECT_THROW(parse_cover("poly\n0 2 1\n"), std::invalid_argument);          // no t
  EXPECT_THROW(parse_cover("ratmap\n0 1\n0 2\n"), std::invalid_argument);     // common factor x
  EXPECT_THROW(parse_cover("curve\n0 2 1\n"), std::invalid_argument);
  const Cover c = cover_file("square.poly");
  EXPECT_EQ(c.degree(), 2);
  ASSERT_TRUE(c.hint.has_value());
  EXPECT_EQ(c.hint->order, 2);
}

TEST(BranchPoints, SquareRoot) {
  EXPECT_EQ(labels(branch_points(cover_file("square.poly"))), (std::vector<std::string>{"0", "inf"}));
  EXPECT_EQ(labels(branch_points(cover_file("square.ratmap"))), (std::vector<std::string>{"0", "inf"}));
}

TEST(BranchPoints, EvenDiscriminantDegreeHasNoPointAtInfinity) {
  // X^2 - t(t - 1)
  const Cover c = poly("0 2 1\n2 0 -1\n1 0 1\n");
  EXPECT_EQ(labels(branch_points(c)), (std::vector<std::string>{"0", "1"}));
}

TEST(BranchPoints, CubeRoot) {
  const auto rt = ramification_indices(cover_file("cube.poly"));
  ASSERT_EQ(rt.entries.size(), 2u);
  for (const auto& en : rt.entries) {
    EXPECT_EQ(en.indices, (std::vector<int>{3}));
    EXPECT_EQ(en.e, 3u);
  }
  EXPECT_EQ(rt.riemann_hurwitz_sum(), 4);
}

TEST(Ramification, PSL211Poly) {
  const Cover c = cover_file("psl2_11.poly");
  const auto rt = ramification_indices(c);
  EXPECT_EQ(rt.degree, 11);
  EXPECT_EQ(rt.geometric_branch_point_count(), 4u);
  EXPECT_EQ(rt.riemann_hurwitz_sum(), 20);
  for (const auto& en : rt.entries) {
    int total = 0;
    for (int i : en.indices) total += i;
    EXPECT_EQ(total, 11);
  }
}

TEST(Ramification, PolyAndRatmapAgree) {
  const auto a = ramification_indices(cover_file("psl2_11.poly"));
  const auto b = ramification_indices(cover_file("psl2_11.ratmap"));
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].point, b.entries[i].point);
    EXPECT_EQ(a.entries[i].indices, b.entries[i].indices);
  }
}

TEST(Ramification, DegreeConservationAndRiemannHurwitz) {
  // random rational maps of genus zero: sum over branch points of (d - #preimages) = 2d - 2
  std::mt19937_64 rng(17);
  int tested = 0;
  while (tested < 15) {
    const UniPoly p = oracle::random_poly(rng, 1 + rng() % 5, 6), q = oracle::random_poly(rng, rng() % 5, 6);
    Cover c;
    try {
      c = Cover::from_ratmap(p, q);
    } catch (const std::invalid_argument&) {
      continue;
    }
    const auto rt = ramification_indices(c);
    for (const auto& en : rt.entries) {
      int total = 0;
      for (int i : en.indices) total += i;
      EXPECT_EQ(total, c.degree());
    }
    EXPECT_EQ(rt.riemann_hurwitz_sum(), 2 * c.degree() - 2);
    ++tested;
  }
}

TEST(Types, ParseFormatAndPullback) {
  const auto t = parse_type("2,2,3@inf,5@0");
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t[2].label, "inf");
  EXPECT_EQ(parse_type(format_type(t)).size(), 4u);
  const auto pb = pullback_type(t, 3, {"0", "inf"});
  std::vector<std::uint64_t> es;
  for (const auto& en : pb) es.push_back(en.e);
  std::sort(es.begin(), es.end());
  EXPECT_EQ(es, (std::vector<std::uint64_t>{2, 2, 2, 2, 2, 2, 5}));
  EXPECT_THROW(parse_type("2,x"), std::invalid_argument);
}

TEST(Types, PullbackDropsDividedPoints) {
  const auto pb = pullback_type(parse_type("2@0,2@inf,3"), 2, {"0", "inf"});
  std::vector<std::uint64_t> es;
  for (const auto& en : pb) es.push_back(en.e);
  std::sort(es.begin(), es.end());
  EXPECT_EQ(es, (std::vector<std::uint64_t>{3, 3}));
}

TEST(Abhyankar, OneExactlyWhenDivisible) {
  for (std::uint64_t a = 1; a <= 24; ++a)
    for (std::uint64_t b = 1; b <= 24; ++b) EXPECT_EQ(abhyankar_index(a, b) == 1, b % a == 0) << a << "," << b;
  EXPECT_EQ(abhyankar_index(6, 4), 3u);
}

TEST(Intersection, Multiplicities) {
  EXPECT_EQ(intersection_multiplicity(BigRat(2) * rat_pow(BigRat(9, 5), 3), BranchPoint::infinity(), BigInt(5)), 3);
  EXPECT_EQ(intersection_multiplicity(BigRat(0), BranchPoint::infinity(), BigInt(5)), 0);
  const auto zero = BranchPoint::rational_point(BigRat(0));
  EXPECT_EQ(intersection_multiplicity(BigRat(48), zero, BigInt(2)), 4);
  EXPECT_EQ(intersection_multiplicity(BigRat(1, 3), zero, BigInt(3)), -1);
  EXPECT_EQ(intersection_multiplicity(BigRat(10), BranchPoint::rational_point(BigRat(1)), BigInt(3)), 2);
  EXPECT_EQ(intersection_multiplicity(BigRat(1, 5), BranchPoint::infinity(), BigInt(5), true), 1);
  EXPECT_EQ(intersection_multiplicity(BigRat(5), BranchPoint::infinity(), BigInt(5), true), -1);
  EXPECT_EQ(intersection_multiplicity(BigRat(5), BranchPoint::infinity(), BigInt(5)), 0);
  EXPECT_THROW(intersection_multiplicity(BigRat(0), zero, BigInt(3)), std::invalid_argument);
}

TEST(Predict, SquareRootPrimes) {
  const Cover c = cover_file("square.poly");
  const auto r = predict_inertia(c, BigRat(12));
  // 12 = 2^2 * 3: Q(sqrt 12) = Q(sqrt 3) ramifies at 2 and 3, and 2 is bad for this cover
  EXPECT_EQ(r.predicted_ramified(), primes({3}));
  EXPECT_TRUE(unramified_check(c, BigRat(12), BigInt(5)).unramified());
  EXPECT_EQ(unramified_check(c, BigRat(12), BigInt(3)).verdict, LocalVerdict::ramified);
  EXPECT_EQ(unramified_check(c, BigRat(9), BigInt(3)).verdict, LocalVerdict::unramified);
}

TEST(Predict, PSL211AtOne) {
  const Cover c = cover_file("psl2_11.poly");
  const auto r = predict_inertia(c, BigRat(1));
  EXPECT_EQ(r.predicted_ramified(), primes({13, 634397}));
  for (const auto& p : r.predicted_ramified()) {
    EXPECT_EQ(r.per_prime.at(p).predicted_order, 2u);
    EXPECT_EQ(unramified_check(c, BigRat(1), p).verdict, LocalVerdict::ramified);
  }
  EXPECT_TRUE(r.conflicts.empty());
}

TEST(Predict, BranchPointIsRejected) {
  EXPECT_THROW(predict_inertia(cover_file("square.poly"), BigRat(0)), std::invalid_argument);
}

TEST(Predict, ConsistentWithLocalChecks) {
  const auto chk = oracle::predict_consistency(
      {cover_file("square.poly"), cover_file("cube.poly"), cover_file("psl2_11.poly")}, 60, 41);
  EXPECT_TRUE(chk.ok) << chk.detail;
}

TEST(Udisc, QuadraticExamples) {
  const auto a = universally_ramified_bound(cover_file("square.poly"), {BigRat(2), BigRat(3)});
  EXPECT_EQ(a.remaining.primes, primes({2}));
  const Cover three = poly("0 2 1\n1 0 -3\n");
  const auto b = universally_ramified_bound(three, {BigRat(1), BigRat(4)});
  EXPECT_EQ(b.remaining.primes, primes({2, 3}));
  const auto c = universally_ramified_bound(three, {BigRat(1), BigRat(4), BigRat(-1)});
  EXPECT_EQ(c.remaining.primes, primes({3}));
  EXPECT_THROW(universally_ramified_bound(three, {BigRat(1)}), std::invalid_argument);
}

TEST(Udisc, MonotoneInTheSpecializationSet) {
  const Cover c = cover_file("psl2_11.poly");
  std::vector<BigRat> as{BigRat(1), BigRat(2)};
  auto prev = universally_ramified_bound(c, as).remaining.primes;
  for (long a : {3, -1, 5}) {
    as.emplace_back(a);
    const auto next = universally_ramified_bound(c, as).remaining.primes;
    EXPECT_TRUE(std::includes(prev.begin(), prev.end(), next.begin(), next.end()));
    prev = next;
  }
  EXPECT_TRUE(prev.empty());
}

TEST(Search, ValuesAreVerified) {
  auto chk = oracle::search_verified(cover_file("square.poly"), primes({2, 3}), 5);
  EXPECT_TRUE(chk.ok) << chk.detail;
  chk = oracle::search_verified(cover_file("cube.poly"), primes({2, 5, 7}), 5);
  EXPECT_TRUE(chk.ok) << chk.detail;
  chk = oracle::search_verified(cover_file("psl2_11.poly"), primes({2, 3, 5}), 3);
  EXPECT_TRUE(chk.ok) << chk.detail;
}

TEST(Search, ImpossibleRequestIsExhausted) {
  // 3 ramifies in the splitting field of X^3 - a for every a
  SearchOptions opt;
  opt.candidate_cap = 2000;
  const auto r = specialize_search(cover_file("cube.poly"), primes({3}), 2, opt);
  EXPECT_TRUE(r.values.empty());
  EXPECT_TRUE(r.exhausted);
}

TEST(Wreath, DiscriminantStructure) {
  const auto w = wreath_cover_poly({BigRat(0), BigRat(1)}, {BigRat(2), BigRat(3)});
  EXPECT_EQ(w.f.deg_x(), 2);
  EXPECT_EQ(w.disc.degree(), 2);
  EXPECT_TRUE(w.squarefree_disc);
  const auto one = wreath_cover_poly({BigRat(0)}, {BigRat(1)});
  EXPECT_EQ(one.disc, UniPoly::constant(1));
  EXPECT_THROW(wreath_cover_poly({BigRat(0), BigRat(0)}, {BigRat(1), BigRat(2)}), std::invalid_argument);
}
