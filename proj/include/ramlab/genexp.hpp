#pragma once

// Generator exponent: the least lcm of element orders over generating sets.

#include <numeric>
#include <set>
#include <vector>

#include "ramlab/classes.hpp"

namespace ramlab {

struct GexpReport {
  std::uint64_t value = 1;
  std::set<std::uint64_t> witness_orders;
  std::vector<Permutation> certificate;  // class representatives whose normal closure is G
};

inline std::uint64_t exponent(const PermGroup& G, const ClassOptions& opt = {}) {
  std::uint64_t e = 1;
  for (const auto& c : conjugacy_classes(G, opt)) e = std::lcm(e, c.elt_order);
  return e;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool normally_generates(const PermGroup& G, const std::vector<Permutation>& elems) {
  if (elems.empty()) return G.order() == 1;
  return normal_closure(G, elems).order() == G.order();
}

/// Tries the divisors L of exp(G) in increasing order; the first L whose class
/// representatives of order dividing L normally generate G is gexp(G). The certificate is
/// pruned greedily.
inline GexpReport gexp(const PermGroup& G, const ClassOptions& opt = {}) {
  GexpReport rep;
  if (G.order() == 1) return rep;
  const auto& cls = conjugacy_classes(G, opt);
  for (std::uint64_t L : divisors(exponent(G, opt))) {
    std::vector<Permutation> reps;
    for (const auto& c : cls)
      if (c.elt_order > 1 && L % c.elt_order == 0) reps.push_back(c.rep);
    if (!normally_generates(G, reps)) continue;
    for (std::size_t i = reps.size(); i-- > 0;) {
      std::vector<Permutation> fewer = reps;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
      if (normally_generates(G, fewer)) reps = std::move(fewer);
    }
    rep.value = L;
    rep.certificate = std::move(reps);
    for (const auto& x : rep.certificate) rep.witness_orders.insert(x.order());
    return rep;
  }
  throw std::logic_error("gexp: no divisor of the exponent works");
}

/// gexp(G x H) == lcm(gexp(G), gexp(H)).
inline bool gexp_lcm_check(const PermGroup& G, const PermGroup& H, const ClassOptions& opt = {}) {
  const std::uint64_t lhs = gexp(direct_product(G, H), opt).value;
  return lhs == std::lcm(gexp(G, opt).value, gexp(H, opt).value);
}

struct HatReport {
  bool generators_are_involutions = true;
  bool generators_outside_base = true;
  std::uint64_t gexp_value = 0;
  bool projection_onto = false;
  BigInt order;
  bool passes() const {
    return generators_are_involutions && generators_outside_base && gexp_value == 2 && projection_onto;
  }
};

/// Checks the hat construction: every generator (g, g^-1)a is an involution swapping the two
/// blocks, gexp of the hat group is 2, and its base subgroup projects onto G.
inline HatReport hat_involution_report(const PermGroup& G, const ClassOptions& opt = {}) {
  HatReport r;
  const PermGroup hat = hat_group(G);
  const std::size_t k = G.degree();
  r.order = hat.order();
  for (const auto& e : hat.generators()) {
    if (e.order() != 2) r.generators_are_involutions = false;
    if (e(0) < k) r.generators_outside_base = false;
  }
  r.gexp_value = gexp(hat, opt).value;
  // the base subgroup has index 2 and is generated by e0*e and e*e0 over the generators e
  const auto& gens = hat.generators();
  std::vector<Permutation> proj;
  for (const auto& e : gens)
    for (const auto& prod : {compose(gens.front(), e), compose(e, gens.front())}) {
      std::vector<Point> img(k);
      for (std::size_t i = 0; i < k; ++i) img[i] = prod(static_cast<Point>(i));
      proj.push_back(Permutation::from_images(std::move(img)));
    }
  r.projection_onto = PermGroup(k, std::move(proj)).order() == G.order();
  return r;
}

inline bool hat_involution_check(const PermGroup& G, const ClassOptions& opt = {}) {
  return hat_involution_report(G, opt).passes();
}

}  // namespace ramlab
