#pragma once

// The bundled claim suite: named, tiered checks over the builtin groups and covers.

#include <chrono>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ramlab/beckmann.hpp"
#include "ramlab/builtin_groups.hpp"
#include "ramlab/rigidity.hpp"

namespace ramlab {

enum class Tier { fast = 0, slow = 1, nightly = 2 };

inline std::string to_string(Tier t) {
  switch (t) {
    case Tier::fast: return "default";
    case Tier::slow: return "slow";
    case Tier::nightly: return "nightly";
  }
  return "?";
}

inline Tier parse_tier(const std::string& s) {
  if (s == "default" || s == "fast") return Tier::fast;
  if (s == "slow") return Tier::slow;
  if (s == "nightly") return Tier::nightly;
  throw std::invalid_argument("unknown tier: " + s);
}

enum class ClaimStatus { pass, fail, skipped };

struct ClaimOutcome {
  ClaimStatus status = ClaimStatus::fail;
  std::string detail;
};

struct SuiteContext {
  std::uint64_t seed = 0x5eed;
  unsigned jobs = 1;
};

struct Claim {
  std::string id;
  std::string anchor;  // stable tag naming the checked fact
  Tier tier = Tier::fast;
  std::function<ClaimOutcome(const SuiteContext&)> run;
};

struct ClaimRecord {
  std::string claim_id;
  std::string anchor;
  Tier tier = Tier::fast;
  ClaimStatus status = ClaimStatus::fail;
  std::string detail;
  double seconds = 0;
  bool pass() const { return status == ClaimStatus::pass; }
};

namespace claims_detail {

inline ClaimOutcome verdict(bool ok, std::string detail) {
  return {ok ? ClaimStatus::pass : ClaimStatus::fail, std::move(detail)};
}

inline ClaimOutcome gexp_claim(const std::string& group, std::uint64_t expected) {
  const PermGroup G = group_from_spec(group);
  const auto r = gexp(G);
  return verdict(r.value == expected, "gexp(" + group + ") = " + std::to_string(r.value));
}

inline std::string join_indices(const std::array<std::size_t, 3>& c) {
  return std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]);
}

/// Some class choice with the given orders is rationally rigid (count = |G|/|Z|).
inline ClaimOutcome rigid_claim(const std::string& group, std::array<std::uint64_t, 3> orders,
                                std::optional<BigInt> expected_count, const SuiteContext& ctx) {
  const PermGroup G = group_from_spec(group);
  TripleCountOptions opt;
  opt.jobs = ctx.jobs;
  opt.seed = ctx.seed;
  std::ostringstream os;
  bool ok = false;
  for (const auto& r : rigidity_by_orders(G, orders, opt)) {
    os << "classes " << join_indices(r.classes) << ": count " << r.count << (r.rationally_rigid() ? " rationally rigid" : "")
       << "; ";
    if (r.rationally_rigid() && (!expected_count || r.count == *expected_count)) ok = true;
  }
  return verdict(ok, os.str());
}

/// Some class choice with the given orders satisfies the coprime-inertia criterion.
inline ClaimOutcome criterion_claim(const std::string& group, const std::vector<std::uint64_t>& orders) {
  const PermGroup G = group_from_spec(group);
  std::vector<std::vector<std::size_t>> options;
  for (auto o : orders) options.push_back(classes_of_order(G, o));
  std::vector<std::size_t> pick(orders.size(), 0);
  std::ostringstream os;
  bool ok = false;
  for (bool more = true; more;) {
    std::vector<std::size_t> tuple;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      if (options[i].empty()) return verdict(false, "no class of order " + std::to_string(orders[i]));
      tuple.push_back(options[i][pick[i]]);
    }
    const auto r = coprime_criterion_check(G, tuple);
    os << "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) os << (i ? "," : "") << tuple[i];
    os << "): " << (r.passes ? "passes" : to_string(r.offending)) << "; ";
    ok = ok || r.passes;
    more = false;
    for (std::size_t i = 0; i < pick.size(); ++i) {
      if (++pick[i] < options[i].size()) {
        more = true;
        break;
      }
      pick[i] = 0;
    }
  }
  return verdict(ok, os.str());
}

inline std::filesystem::path cover_path(const std::string& name) { return data_dir() / "covers" / name; }

}  // namespace claims_detail

/// Every claim of the suite, in a fixed order.
inline const std::vector<Claim>& claim_registry() {
  using namespace claims_detail;
  static const std::vector<Claim> reg = [] {
    std::vector<Claim> c;
    auto add = [&](std::string id, std::string anchor, Tier tier, std::function<ClaimOutcome(const SuiteContext&)> fn) {
      c.push_back({std::move(id), std::move(anchor), tier, std::move(fn)});
    };
    for (const auto& [g, v] : std::vector<std::pair<std::string, std::uint64_t>>{
             {"A(5)", 2}, {"S(6)", 2}, {"D(5)", 2}, {"C(12)", 12}, {"PGL(2,7)", 2}, {"M11", 2}})
      add("gexp." + g, "gexp/" + g, Tier::fast, [g = g, v = v](const SuiteContext&) { return gexp_claim(g, v); });
    add("gexp.C3wrC3", "gexp/wreath-cp-cp", Tier::fast, [](const SuiteContext&) {
      const PermGroup G = wreath_product(cyclic_group(3), cyclic_group(3));
      const auto g = gexp(G).value;
      const auto e = exponent(G);
      return verdict(G.order() == 81 && g == 3 && e == 9,
                     "order " + G.order().get_str() + ", gexp " + std::to_string(g) + ", exp " + std::to_string(e));
    });
    add("gexp.product_law", "gexp/direct-product-lcm", Tier::fast, [](const SuiteContext& ctx) {
      const std::vector<std::string> pool{"C(2)", "C(3)", "C(4)", "C(5)", "C(6)", "S(3)", "A(4)", "D(4)"};
      std::mt19937_64 rng(ctx.seed);
      std::ostringstream os;
      bool ok = true;
      for (int i = 0; i < 10; ++i) {
        const auto& a = pool[rng() % pool.size()];
        const auto& b = pool[rng() % pool.size()];
        const bool r = gexp_lcm_check(group_from_spec(a), group_from_spec(b));
        os << a << "x" << b << (r ? " ok; " : " FAIL; ");
        ok = ok && r;
      }
      return verdict(ok, os.str());
    });
    for (const std::string g : {"C(3)", "A(4)", "A(5)"})
      add("hat." + g, "hat/involution-generation", Tier::fast, [g](const SuiteContext&) {
        const auto r = hat_involution_report(group_from_spec(g));
        return verdict(r.passes(), "order " + r.order.get_str() + ", gexp " + std::to_string(r.gexp_value) +
                                       (r.projection_onto ? ", projection onto" : ", projection not onto"));
      });
    add("rigid.PGL(2,7)", "rigidity/PGL(2,7)/2-6-7", Tier::fast,
        [](const SuiteContext& ctx) { return rigid_claim("PGL(2,7)", {2, 6, 7}, BigInt(336), ctx); });
    add("rigid.PSp4(3).2", "rigidity/PSp4(3).2/2-8-9", Tier::slow,
        [](const SuiteContext& ctx) { return rigid_claim("PSp4(3).2", {2, 8, 9}, std::nullopt, ctx); });
    add("rigid.PSp6(2)", "rigidity/PSp6(2)/2-7-9", Tier::nightly,
        [](const SuiteContext& ctx) { return rigid_claim("PSp6(2)", {2, 7, 9}, std::nullopt, ctx); });
    add("centralizer.PGL(2,7)", "self-centralizing/PGL(2,7)/6-7", Tier::fast, [](const SuiteContext&) {
      const PermGroup G = group_from_spec("PGL(2,7)");
      std::ostringstream os;
      bool ok = true;
      for (const auto& [o, cen, nor] : std::vector<std::array<std::uint64_t, 3>>{{6, 6, 12}, {7, 7, 42}}) {
        const auto idx = classes_of_order(G, o);
        ok = ok && !idx.empty();
        for (auto i : idx) {
          const auto& x = conjugacy_classes(G)[i].rep;
          const BigInt c = centralizer(G, x).order(), n = normalizer_cyclic(G, x).order();
          os << "order " << o << ": |C| = " << c << ", |N| = " << n << "; ";
          ok = ok && c == cen && n == nor;
        }
      }
      return verdict(ok, os.str());
    });
    add("criterion.PGL(2,7)", "coprime-criterion/PGL(2,7)/2-6-7", Tier::fast,
        [](const SuiteContext&) { return criterion_claim("PGL(2,7)", {2, 6, 7}); });
    add("criterion.PSp4(3).2", "coprime-criterion/PSp4(3).2/2-8-9", Tier::slow,
        [](const SuiteContext&) { return criterion_claim("PSp4(3).2", {2, 8, 9}); });
    add("criterion.PSp6(2)", "coprime-criterion/PSp6(2)/2-7-9", Tier::nightly,
        [](const SuiteContext&) { return criterion_claim("PSp6(2)", {2, 7, 9}); });
    for (std::size_t n : {7, 9, 11, 13})
      add("an_classes." + std::to_string(n), "alternating/(n-2,1,1)-(n-3,2,1)", Tier::fast, [n](const SuiteContext&) {
        const auto r = an_classes_report(n);
        return verdict(r.passes(), "orders " + std::to_string(r.x.order()) + "," + std::to_string(r.y.order()) +
                                       "; centralizers " + r.centralizer_x.get_str() + "," + r.centralizer_y.get_str());
      });
    add("cover.PSL(2,11).branch", "cover/PSL(2,11)/branch-data", Tier::fast, [](const SuiteContext&) {
      const Cover cv = load_cover(cover_path("psl2_11.poly").string());
      const auto bps = branch_points(cv);
      const auto rt = ramification_indices(cv);
      int finite = 0;
      bool has_inf = false, inf_ok = false, finite_ok = true;
      for (const auto& en : rt.entries) {
        if (en.point.kind == BranchPoint::Kind::infinity) {
          has_inf = true;
          inf_ok = en.indices == std::vector<int>{6, 3, 2, 1, 1, 1, 1, 1, 1, 1, 1} || en.indices == std::vector<int>{6, 3, 2};
          inf_ok = inf_ok && en.e == 6;
        } else {
          finite += en.point.geometric_count();
          finite_ok = finite_ok && en.e == 2;
        }
      }
      const long rh = rt.riemann_hurwitz_sum();
      std::ostringstream os;
      os << rt.geometric_branch_point_count() << " branch points (" << bps.size() << " over Q), RH sum " << rh;
      return verdict(rt.geometric_branch_point_count() == 4 && has_inf && inf_ok && finite == 3 && finite_ok &&
                         rh == 2 * rt.degree - 2 && rh == 20,
                     os.str());
    });
    add("udisc.PSL(2,11)", "cover/PSL(2,11)/no-universally-ramified-prime", Tier::fast, [](const SuiteContext&) {
      const Cover cv = load_cover(cover_path("psl2_11.poly").string());
      const auto r = universally_ramified_bound(cv, {BigRat(1), BigRat(2)});
      std::ostringstream os;
      os << "gcd of discriminants " << r.discriminant_gcd << ", remaining " << r.remaining.primes.size()
         << (r.remaining.complete ? ", complete" : ", incomplete factorization");
      return verdict(r.remaining.primes.empty() && r.remaining.complete, os.str());
    });
    add("pullback.M11", "pullback/(2,2,3@inf,5@0)/d=3", Tier::fast, [](const SuiteContext&) {
      const auto t = pullback_type(parse_type("2,2,3@inf,5@0"), 3, {"0", "inf"});
      std::vector<std::uint64_t> es;
      for (const auto& en : t) es.push_back(en.e);
      std::sort(es.begin(), es.end());
      return verdict(es == std::vector<std::uint64_t>{2, 2, 2, 2, 2, 2, 5}, format_type(t));
    });
    add("prime.45513961", "arith/45513961-prime", Tier::fast, [](const SuiteContext&) {
      return verdict(is_prime(BigInt(45513961)), "Miller-Rabin, deterministic range");
    });
    add("valuation.inf.5", "arith/I_5(2*(9/5)^3,inf)", Tier::fast, [](const SuiteContext&) {
      const BigRat a = BigRat(2) * rat_pow(BigRat(9, 5), 3);
      const long v = intersection_multiplicity(a, BranchPoint::infinity(), BigInt(5));
      return verdict(v == 3, "I_5 = " + std::to_string(v));
    });
    add("m11.unramified.45513961", "cover/M11/a=2/p=45513961", Tier::fast, [](const SuiteContext&) -> ClaimOutcome {
      const auto path = cover_path("m11.poly");
      if (!std::filesystem::exists(path)) return {ClaimStatus::skipped, "skipped: external data absent"};
      const Cover cv = load_cover(path.string());
      const auto r = unramified_check(cv, BigRat(2), BigInt(45513961));
      return verdict(r.unramified(), "verdict " + to_string(r.verdict));
    });
    return c;
  }();
  return reg;
}

/// Runs every claim with tier <= `tier`. Exceptions count as failures.
inline std::vector<ClaimRecord> run_suite(Tier tier, const SuiteContext& ctx = {},
                                          const std::function<void(const ClaimRecord&)>& on_record = {}) {
  std::vector<ClaimRecord> out;
  for (const auto& c : claim_registry()) {
    if (c.tier > tier) continue;
    ClaimRecord rec{c.id, c.anchor, c.tier, ClaimStatus::fail, "", 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      auto o = c.run(ctx);
      rec.status = o.status;
      rec.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      rec.status = ClaimStatus::fail;
      rec.detail = std::string("error: ") + e.what();
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (on_record) on_record(rec);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace ramlab
