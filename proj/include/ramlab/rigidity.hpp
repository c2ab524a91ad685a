#pragma once

// Generating-triple counts, (rational) rigidity and the coprime-inertia criterion.

#include <array>
#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ramlab/genexp.hpp"

namespace ramlab {

struct TripleCountOptions {
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  ClassOptions classes{};
};

/// #{(x,y,z) in C1 x C2 x C3 : xyz = 1, <x,y> = G}. The count is invariant under cyclic
/// rotation of the triple, so the rotation whose enumerated class is smallest is used; one
/// representative x0 of the fixed class is enough since conjugation acts transitively on it.
inline BigInt generating_triple_count(const PermGroup& G, std::array<std::size_t, 3> cls,
                                      const TripleCountOptions& opt = {}) {
  const ClassTable& t = class_table(G, opt.classes);
  if (!t.exact()) throw ResourceCapError("generating_triple_count needs an exact class table");
  for (auto c : cls)
    if (c >= t.classes.size()) throw std::out_of_range("class index out of range");
  std::size_t best = 0;
  for (std::size_t r = 1; r < 3; ++r)
    if (t.classes[cls[(r + 1) % 3]].size < t.classes[cls[(best + 1) % 3]].size) best = r;
  const std::size_t fixed = cls[best], enumerated = cls[(best + 1) % 3], target = cls[(best + 2) % 3];
  const Permutation x0 = t.classes[fixed].rep;

  std::vector<std::uint32_t> candidates;
  for (std::uint32_t e = 0; e < t.class_of.size(); ++e)
    if (t.class_of[e] == enumerated) candidates.push_back(e);

  const std::size_t n = G.degree();
  std::atomic<std::uint64_t> hits{0};
  auto work = [&](std::size_t begin, std::size_t step) {
    std::vector<Point> yi, zi(n);
    std::uint64_t local = 0;
    for (std::size_t k = begin; k < candidates.size(); k += step) {
      t.store->images_of(candidates[k], yi);
      // z = (x0 y)^-1
      for (std::size_t i = 0; i < n; ++i) zi[x0(yi[i])] = static_cast<Point>(i);
      if (t.class_of[t.store->find(zi)] != target) continue;
      const Permutation y = Permutation::from_images(yi);
      if (generates(G, {x0, y}, opt.seed + k)) ++local;
    }
    hits += local;
  };
  const unsigned jobs = std::max(1u, opt.jobs);
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j, jobs);
    for (auto& th : pool) th.join();
  }
  return t.classes[fixed].size * from_u64(hits.load());
}

struct RigidityReport {
  std::array<std::size_t, 3> classes{};
  BigInt count;
  BigInt expected;  // |G|/|Z(G)|
  bool rigid = false;
  bool rational = false;
  bool rationally_rigid() const { return rigid && rational; }
};

inline RigidityReport rigidity_report(const PermGroup& G, std::array<std::size_t, 3> cls,
                                      const TripleCountOptions& opt = {}) {
  RigidityReport r;
  r.classes = cls;
  r.count = generating_triple_count(G, cls, opt);
  r.expected = G.order() / center_order(G, opt.classes);
  r.rigid = r.count > 0 && r.count == r.expected;
  const auto& all = conjugacy_classes(G, opt.classes);
  r.rational = all[cls[0]].rational && all[cls[1]].rational && all[cls[2]].rational;
  return r;
}

inline bool is_rigid(const PermGroup& G, std::array<std::size_t, 3> cls, const TripleCountOptions& opt = {}) {
  return rigidity_report(G, cls, opt).rigid;
}

inline bool is_rationally_rigid(const PermGroup& G, std::array<std::size_t, 3> cls,
                                const TripleCountOptions& opt = {}) {
  return rigidity_report(G, cls, opt).rationally_rigid();
}

/// Every choice of classes with the given element orders, each with its rigidity report.
inline std::vector<RigidityReport> rigidity_by_orders(const PermGroup& G, std::array<std::uint64_t, 3> orders,
                                                      const TripleCountOptions& opt = {}) {
  std::vector<RigidityReport> out;
  const auto a = classes_of_order(G, orders[0], opt.classes);
  const auto b = classes_of_order(G, orders[1], opt.classes);
  const auto c = classes_of_order(G, orders[2], opt.classes);
  for (auto i : a)
    for (auto j : b)
      for (auto k : c) out.push_back(rigidity_report(G, {i, j, k}, opt));
  return out;
}

enum class CriterionFailure { none, not_two_large_orders, orders_not_coprime, centralizer_too_big, duplicate_large_class };

inline std::string to_string(CriterionFailure f) {
  switch (f) {
    case CriterionFailure::none: return "none";
    case CriterionFailure::not_two_large_orders: return "not-two-large-orders";
    case CriterionFailure::orders_not_coprime: return "orders-not-coprime";
    case CriterionFailure::centralizer_too_big: return "centralizer-too-big";
    case CriterionFailure::duplicate_large_class: return "duplicate-large-class";
  }
  return "unknown";
}

struct ClassFacts {
  std::size_t index = 0;
  std::uint64_t order = 1;
  BigInt size;
  BigInt centralizer_order;
  bool rational = false;
  bool large = false;  // order does not divide gexp(G)
  bool self_centralizing = false;
};

struct CriterionReport {
  bool passes = false;
  std::uint64_t gexp_value = 1;
  CriterionFailure offending = CriterionFailure::none;
  std::vector<ClassFacts> details;
};

inline ClassFacts class_facts(const PermGroup& G, std::size_t index, std::uint64_t gexp_value,
                              const ClassOptions& opt = {}) {
  const auto& c = conjugacy_classes(G, opt).at(index);
  ClassFacts f;
  f.index = index;
  f.order = c.elt_order;
  f.size = c.size;
  f.centralizer_order = c.centralizer_order;
  f.rational = c.rational;
  f.large = gexp_value % c.elt_order != 0;
  f.self_centralizing = c.centralizer_order == c.elt_order;
  return f;
}

/// Hypotheses of the coprime-inertia criterion for a class tuple: exactly two entries have
/// order not dividing gexp(G), each the only entry of its order; their orders are coprime;
/// both generate self-centralizing cyclic subgroups.
inline CriterionReport coprime_criterion_check(const PermGroup& G, const std::vector<std::size_t>& tuple,
                                               const ClassOptions& opt = {}) {
  CriterionReport r;
  r.gexp_value = gexp(G, opt).value;
  for (auto i : tuple) r.details.push_back(class_facts(G, i, r.gexp_value, opt));
  std::vector<const ClassFacts*> large;
  for (const auto& f : r.details)
    if (f.large) large.push_back(&f);
  for (const auto* f : large) {
    std::size_t same_order = 0;
    for (const auto& g : r.details)
      if (g.order == f->order) ++same_order;
    if (same_order > 1) {
      r.offending = CriterionFailure::duplicate_large_class;
      return r;
    }
  }
  if (large.size() != 2) {
    r.offending = CriterionFailure::not_two_large_orders;
    return r;
  }
  if (std::gcd(large[0]->order, large[1]->order) != 1) {
    r.offending = CriterionFailure::orders_not_coprime;
    return r;
  }
  if (!large[0]->self_centralizing || !large[1]->self_centralizing) {
    r.offending = CriterionFailure::centralizer_too_big;
    return r;
  }
  r.passes = true;
  return r;
}

/// Unordered pairs of rational, self-centralizing classes with coprime orders that both do
/// not divide gexp(G).
inline std::vector<std::pair<std::size_t, std::size_t>> find_criterion_pairs(const PermGroup& G,
                                                                             const ClassOptions& opt = {}) {
  const std::uint64_t ge = gexp(G, opt).value;
  const auto& cls = conjugacy_classes(G, opt);
  std::vector<std::size_t> ok;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const auto& c = cls[i];
    if (c.rational && c.centralizer_order == c.elt_order && ge % c.elt_order != 0) ok.push_back(i);
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < ok.size(); ++a)
    for (std::size_t b = a + 1; b < ok.size(); ++b)
      if (std::gcd(cls[ok[a]].elt_order, cls[ok[b]].elt_order) == 1) out.emplace_back(ok[a], ok[b]);
  return out;
}

struct AnClassesReport {
  std::size_t n = 0;
  Permutation x, y;  // cycle types (n-2,1,1) and (n-3,2,1)
  BigInt centralizer_x, centralizer_y;
  bool rational_x = false, rational_y = false;
  bool passes() const {
    const std::uint64_t ox = x.order(), oy = y.order();
    return rational_x && rational_y && centralizer_x == ox && centralizer_y == oy && std::gcd(ox, oy) == 1;
  }
};

/// In A_n (n odd, 7 <= n <= 13): the classes of cycle structure (n-2,1,1) and (n-3,2,1) are
/// rational, self-centralizing, with coprime orders.
inline AnClassesReport an_classes_report(std::size_t n, const ClassOptions& opt = {}) {
  if (n < 7 || n > 13 || n % 2 == 0) throw std::invalid_argument("an_classes_check: n must be odd with 7 <= n <= 13");
  const PermGroup A = alternating_group(n);
  AnClassesReport r;
  r.n = n;
  std::vector<Point> ix(n), iy(n);
  std::iota(ix.begin(), ix.end(), Point{0});
  std::iota(iy.begin(), iy.end(), Point{0});
  for (std::size_t i = 0; i < n - 2; ++i) ix[i] = static_cast<Point>((i + 1) % (n - 2));
  for (std::size_t i = 0; i < n - 3; ++i) iy[i] = static_cast<Point>((i + 1) % (n - 3));
  std::swap(iy[n - 3], iy[n - 2]);
  r.x = Permutation::from_images(ix);
  r.y = Permutation::from_images(iy);
  r.centralizer_x = centralizer(A, r.x, opt).order();
  r.centralizer_y = centralizer(A, r.y, opt).order();
  r.rational_x = is_rational_element(A, r.x, opt);
  r.rational_y = is_rational_element(A, r.y, opt);
  return r;
}

inline bool an_classes_check(std::size_t n, const ClassOptions& opt = {}) { return an_classes_report(n, opt).passes(); }

}  // namespace ramlab
