// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Usage: acceptance [--tier default|slow|nightly] [--seed N]

#include <chrono>
#include <cstring>
#include <iostream>

#include "property_checks.hpp"
#include "ramlab/claims.hpp"

using namespace ramlab;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> prefixes;  // claim ids starting with one of these belong here
};

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace

int main(int argc, char** argv) {
  Tier tier = Tier::fast;
  std::uint64_t seed = 0x5eed;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--tier") && i + 1 < argc) tier = parse_tier(argv[++i]);
    else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) seed = std::stoull(argv[++i]);
    else {
      std::cerr << "usage: acceptance [--tier default|slow|nightly] [--seed N]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "gexp values", {"gexp.A(5)", "gexp.S(6)", "gexp.D(5)", "gexp.C(12)", "gexp.PGL(2,7)", "gexp.M11", "gexp.C3wrC3"}},
      {2, "direct product law", {"gexp.product_law"}},
      {3, "hat involution generation", {"hat."}},
      {4, "rational rigidity", {"rigid."}},
      {5, "self-centralizing elements of PGL(2,7)", {"centralizer."}},
      {6, "coprime criterion and alternating classes", {"criterion.", "an_classes."}},
      {7, "PSL(2,11) cover branch data", {"cover.PSL(2,11)"}},
      {8, "no universally ramified prime for PSL(2,11)", {"udisc."}},
      {9, "pullback bookkeeping", {"pullback."}},
      {10, "primality and local checks", {"prime.", "valuation.", "m11."}},
  };

  SuiteContext ctx;
  ctx.seed = seed;
  const auto records = run_suite(tier, ctx);

  bool all_ok = true;
  for (const auto& c : criteria) {
    int pass = 0, fail = 0, skip = 0;
    double secs = 0;
    std::string failures;
    for (const auto& r : records) {
      bool mine = false;
      for (const auto& p : c.prefixes) mine = mine || starts_with(r.claim_id, p);
      if (!mine) continue;
      secs += r.seconds;
      if (r.status == ClaimStatus::pass) ++pass;
      else if (r.status == ClaimStatus::skipped) ++skip;
      else {
        ++fail;
        failures += " [" + r.claim_id + ": " + r.detail + "]";
      }
    }
    const bool ok = fail == 0 && pass > 0;
    all_ok = all_ok && ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << " (" << pass << " passed";
    if (skip) std::cout << ", " << skip << " skipped";
    std::cout << ", " << std::fixed << std::setprecision(2) << secs << " s)" << failures << "\n";
  }

  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, oracle::Check>> props;
  props.emplace_back("group orders", oracle::group_orders_vs_closure(25, seed));
  props.emplace_back("class identities", oracle::class_identities(oracle::small_group_corpus()));
  props.emplace_back("triple counts", oracle::triple_counts(oracle::small_group_corpus(), 12, seed));
  props.emplace_back("resultants", oracle::resultant_multiplicativity(100, seed));
  props.emplace_back("squarefree", oracle::squarefree_round_trips(50, seed));
  const auto dir = data_dir() / "covers";
  props.emplace_back("predict vs local",
                     oracle::predict_consistency({load_cover((dir / "square.poly").string()),
                                                  load_cover((dir / "cube.poly").string()),
                                                  load_cover((dir / "psl2_11.poly").string())},
                                                 60, seed));
  {
    oracle::Check s = oracle::search_verified(load_cover((dir / "square.poly").string()), {BigInt(2), BigInt(3)}, 5);
    const auto s2 = oracle::search_verified(load_cover((dir / "psl2_11.poly").string()), {BigInt(2), BigInt(3)}, 3);
    s.ok = s.ok && s2.ok;
    s.detail += ", " + s2.detail;
    props.emplace_back("search", s);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool props_ok = true;
  std::string summary;
  for (const auto& [name, chk] : props) {
    props_ok = props_ok && chk.ok;
    summary += " [" + name + (chk.ok ? " ok: " : " FAILED: ") + chk.detail + "]";
  }
  all_ok = all_ok && props_ok;
  std::cout << (props_ok ? "PASS" : "FAIL") << "  criterion 11: property suites (" << std::fixed << std::setprecision(2)
            << secs << " s)" << summary << "\n";
  return all_ok ? 0 : 1;
}
