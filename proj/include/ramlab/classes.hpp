#pragma once

// Conjugacy classes, centralizers, cyclic normalizers and rationality of classes.
//
// Groups of order up to the enumeration cap get an exact class table: every element is
// stored, classes are conjugation orbits found by breadth-first search, and a BFS tree
// lets us rebuild a conjugator for any element. Larger groups fall back to searches inside
// the symmetric group (centralizer of x in Sym(n) intersected with G).

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "ramlab/element_store.hpp"
#include "ramlab/errors.hpp"
#include "ramlab/permgroup.hpp"

namespace ramlab {

struct ClassOptions {
  std::uint64_t enumeration_cap = 2'000'000;
  bool allow_randomized = false;
  std::uint64_t seed = 0x5eed;
  std::uint64_t sym_cap = 2'000'000;      // elements of C_Sym(n)(x) we are willing to scan
  std::uint64_t sample_budget = 200'000;  // random elements drawn by the randomized strategy
};

struct ConjClass {
  Permutation rep;  // lexicographically smallest element (exact strategy)
  BigInt size;
  std::uint64_t elt_order = 1;
  std::vector<std::size_t> cycle_type;
  bool rational = false;
  BigInt centralizer_order;
};

struct ClassTable {
  std::vector<ConjClass> classes;
  bool randomized = false;

  // Exact strategy only.
  std::shared_ptr<ElementStore> store;
  std::vector<std::uint32_t> class_of;  // element index -> class index
  std::vector<std::uint32_t> parent;    // BFS tree: element = gen * parent * gen^-1
  std::vector<std::uint16_t> via;
  std::vector<std::uint32_t> rep_index;
  std::vector<Permutation> gens;

  bool exact() const { return store != nullptr; }

  /// t with t * root * t^-1 == element, where root is the BFS root of the element's class.
  Permutation conjugator_from_root(std::uint32_t idx) const {
    Permutation t = Permutation::identity(store->degree());
    while (parent[idx] != idx) {
      t = compose(t, gens[via[idx]]);
      idx = parent[idx];
    }
    return t;
  }

  /// t with t * rep * t^-1 == element (exact strategy).
  Permutation conjugator_from_rep(std::uint32_t idx) const {
    const Permutation to_elem = conjugator_from_root(idx);
    const Permutation to_rep = conjugator_from_root(rep_index[class_of[idx]]);
    return compose(to_elem, to_rep.inverse());
  }

  mutable std::mutex centralizer_mutex;
  mutable std::map<std::size_t, std::shared_ptr<PermGroup>> centralizer_cache;
};

namespace detail {

inline Permutation random_element(const StabChain& chain, std::mt19937_64& rng) {
  Permutation g = Permutation::identity(chain.degree());
  for (const auto& lev : chain.levels()) {
    std::uniform_int_distribution<std::size_t> pick(0, lev.transversal.size() - 1);
    g = compose(g, lev.transversal[pick(rng)]);
  }
  return g;
}

inline std::vector<std::vector<Point>> cycles_of(const Permutation& x) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(x.degree(), false);
  for (std::size_t i = 0; i < x.degree(); ++i) {
    if (seen[i]) continue;
    std::vector<Point> c;
    for (Point j = static_cast<Point>(i); !seen[j]; j = x(j)) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// C_Sym(n)(x) = product over cycle lengths k of C_k wr S_{m_k}.
inline PermGroup sym_centralizer(const Permutation& x) {
  const std::size_t n = x.degree();
  std::map<std::size_t, std::vector<std::vector<Point>>> by_len;
  for (auto& c : cycles_of(x)) by_len[c.size()].push_back(std::move(c));
  std::vector<Permutation> gens;
  for (const auto& [len, cyc] : by_len) {
    if (len > 1) {
      std::vector<Point> img(n);
      std::iota(img.begin(), img.end(), Point{0});
      for (std::size_t i = 0; i < len; ++i) img[cyc[0][i]] = cyc[0][(i + 1) % len];
      gens.push_back(Permutation::from_images(std::move(img)));
    }
    const std::size_t m = cyc.size();
    if (m >= 2) {
      // swap the first two cycles, and cycle all of them, keeping alignment
      std::vector<Point> sw(n), rot(n);
      std::iota(sw.begin(), sw.end(), Point{0});
      std::iota(rot.begin(), rot.end(), Point{0});
      for (std::size_t i = 0; i < len; ++i) {
        sw[cyc[0][i]] = cyc[1][i];
        sw[cyc[1][i]] = cyc[0][i];
        for (std::size_t c = 0; c < m; ++c) rot[cyc[c][i]] = cyc[(c + 1) % m][i];
      }
      gens.push_back(Permutation::from_images(std::move(sw)));
      if (m > 2) gens.push_back(Permutation::from_images(std::move(rot)));
    }
  }
  return PermGroup(n, std::move(gens));
}

/// Some t in Sym(n) with t x t^-1 = y, if x and y have the same cycle type.
inline std::optional<Permutation> sym_conjugator(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree() || x.cycle_type() != y.cycle_type()) return std::nullopt;
  auto cx = cycles_of(x), cy = cycles_of(y);
  auto by_len = [](const std::vector<Point>& a, const std::vector<Point>& b) { return a.size() > b.size(); };
  std::stable_sort(cx.begin(), cx.end(), by_len);
  std::stable_sort(cy.begin(), cy.end(), by_len);
  std::vector<Point> img(x.degree());
  for (std::size_t c = 0; c < cx.size(); ++c)
    for (std::size_t i = 0; i < cx[c].size(); ++i) img[cx[c][i]] = cy[c][i];
  return Permutation::from_images(std::move(img));
}

inline PermGroup centralizer_by_sym(const PermGroup& G, const Permutation& x, const ClassOptions& opt) {
  PermGroup H = sym_centralizer(x);
  bool inside = true;
  for (const auto& h : H.generators())
    if (!G.contains(h)) inside = false;
  if (inside) return PermGroup(G.degree(), H.generators());
  if (H.order() > from_u64(opt.sym_cap))
    throw ResourceCapError("centralizer search: C_Sym(x) has order " + H.order().get_str() + " above the cap");
  StabChain chain(G.degree());
  std::vector<Permutation> gens;
  if (chain.add_generator(x)) gens.push_back(x);
  for_each_element(H, [&](const Permutation& h) {
    if (!chain.contains(h) && G.contains(h)) {
      chain.add_generator(h);
      gens.push_back(h);
    }
  });
  return PermGroup(G.degree(), std::move(gens));
}

inline std::optional<Permutation> conjugator_by_sym(const PermGroup& G, const Permutation& x, const Permutation& y,
                                                    const ClassOptions& opt) {
  auto t = sym_conjugator(x, y);
  if (!t) return std::nullopt;
  if (G.contains(*t)) return t;
  PermGroup H = sym_centralizer(x);
  if (H.order() > from_u64(opt.sym_cap))
    throw ResourceCapError("conjugacy search: C_Sym(x) has order " + H.order().get_str() + " above the cap");
  std::optional<Permutation> found;
  // all conjugators in Sym(n) form the coset t * C_Sym(x)
  for_each_element(H, [&](const Permutation& h) {
    if (found) return;
    Permutation c = compose(*t, h);
    if (G.contains(c)) found = std::move(c);
  });
  return found;
}

inline std::vector<std::uint64_t> coprime_residues(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 1; k < std::max<std::uint64_t>(n, 2); ++k)
    if (std::gcd(k, n) == 1) out.push_back(k);
  return out;
}

inline void sort_classes(std::vector<ConjClass>& cls, std::vector<std::size_t>& perm) {
  perm.resize(cls.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = cls[a];
    const auto& y = cls[b];
    return std::tie(x.elt_order, x.size, x.cycle_type, x.rep) < std::tie(y.elt_order, y.size, y.cycle_type, y.rep);
  });
  std::vector<ConjClass> sorted;
  for (auto i : perm) sorted.push_back(std::move(cls[i]));
  cls = std::move(sorted);
}

inline std::shared_ptr<ClassTable> build_exact_table(const PermGroup& G) {
  const std::size_t n = G.degree();
  const std::uint64_t N = to_u64(G.order());
  auto table = std::make_shared<ClassTable>();
  table->store = std::make_shared<ElementStore>(n, N);
  ElementStore& store = *table->store;
  for_each_element(G, [&](const Permutation& g) { store.insert(g.images()); });
  table->gens = G.generators();
  if (table->gens.size() > 0xffff) throw std::invalid_argument("too many generators for class enumeration");

  constexpr std::uint32_t none = ElementStore::npos;
  std::vector<std::uint32_t> cls(N, none);
  table->parent.assign(N, none);
  table->via.assign(N, 0);
  std::vector<ConjClass> classes;
  std::vector<std::uint32_t> min_index;
  std::vector<std::uint32_t> queue;
  std::vector<Point> xi, yi(n), best;
  for (std::uint32_t start = 0; start < N; ++start) {
    if (cls[start] != none) continue;
    const auto c = static_cast<std::uint32_t>(classes.size());
    classes.emplace_back();
    cls[start] = c;
    table->parent[start] = start;
    queue.assign(1, start);
    std::uint32_t min_idx = start;
    store.images_of(start, best);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      store.images_of(queue[q], xi);
      if (xi < best) {
        best = xi;
        min_idx = queue[q];
      }
      for (std::size_t k = 0; k < table->gens.size(); ++k) {
        const auto& s = table->gens[k];
        for (std::size_t i = 0; i < n; ++i) yi[s(static_cast<Point>(i))] = s(xi[i]);
        const std::uint32_t y = store.find(yi);
        if (cls[y] != none) continue;
        cls[y] = c;
        table->parent[y] = queue[q];
        table->via[y] = static_cast<std::uint16_t>(k);
        queue.push_back(y);
      }
    }
    classes[c].rep = Permutation::from_images(best);
    classes[c].size = static_cast<unsigned long>(queue.size());
    min_index.push_back(min_idx);
  }
  for (auto& cc : classes) {
    cc.elt_order = cc.rep.order();
    cc.cycle_type = cc.rep.cycle_type();
    cc.centralizer_order = G.order() / cc.size;
  }
  std::vector<std::size_t> perm;
  sort_classes(classes, perm);
  std::vector<std::uint32_t> new_id(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) new_id[perm[i]] = static_cast<std::uint32_t>(i);
  table->class_of.resize(N);
  for (std::uint32_t e = 0; e < N; ++e) table->class_of[e] = new_id[cls[e]];
  table->rep_index.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) table->rep_index[i] = min_index[perm[i]];
  for (std::size_t c = 0; c < classes.size(); ++c) {
    bool rational = true;
    for (auto k : coprime_residues(classes[c].elt_order))
      if (table->class_of[store.find(classes[c].rep.pow(static_cast<long long>(k)))] != c) rational = false;
    classes[c].rational = rational;
  }
  table->classes = std::move(classes);
  return table;
}

inline std::shared_ptr<ClassTable> build_randomized_table(const PermGroup& G, const ClassOptions& opt) {
  auto table = std::make_shared<ClassTable>();
  table->randomized = true;
  const BigInt order = G.order();
  BigInt covered = 0;
  std::mt19937_64 rng(opt.seed);
  std::vector<Permutation> pending;
  auto known = [&](const Permutation& x) {
    for (const auto& c : table->classes) {
      if (c.elt_order != x.order() || c.cycle_type != x.cycle_type()) continue;
      if (conjugator_by_sym(G, c.rep, x, opt)) return true;
    }
    return false;
  };
  std::uint64_t draws = 0;
  while (covered < order) {
    if (pending.empty()) {
      if (++draws > opt.sample_budget) throw ResourceCapError("randomized class discovery exceeded its sample budget");
      pending.push_back(random_element(G.chain(), rng));
    }
    Permutation x = std::move(pending.back());
    pending.pop_back();
    if (known(x)) continue;
    ConjClass cc;
    cc.rep = x;
    cc.elt_order = x.order();
    cc.cycle_type = x.cycle_type();
    cc.centralizer_order = centralizer_by_sym(G, x, opt).order();
    cc.size = order / cc.centralizer_order;
    covered += cc.size;
    table->classes.push_back(std::move(cc));
    for (std::uint64_t k = 2; k <= x.order(); ++k) pending.push_back(x.pow(static_cast<long long>(k)));
  }
  for (auto& c : table->classes) {
    bool rational = true;
    for (auto k : coprime_residues(c.elt_order))
      if (!conjugator_by_sym(G, c.rep, c.rep.pow(static_cast<long long>(k)), opt)) rational = false;
    c.rational = rational;
  }
  std::vector<std::size_t> perm;
  sort_classes(table->classes, perm);
  return table;
}

inline bool uses_exact_strategy(const PermGroup& G, const ClassOptions& opt) {
  return G.order() <= from_u64(opt.enumeration_cap);
}

}  // namespace detail

/// The group's class table, built once and cached on the group.
inline const ClassTable& class_table(const PermGroup& G, const ClassOptions& opt = {}) {
  if (const ClassTable* t = G.cached_class_table()) return *t;
  return G.class_table([&]() -> std::shared_ptr<const ClassTable> {
    if (detail::uses_exact_strategy(G, opt)) return detail::build_exact_table(G);
    if (!opt.allow_randomized)
      throw ResourceCapError("group order " + G.order().get_str() +
                             " exceeds the class enumeration cap; enable the randomized strategy");
    return detail::build_randomized_table(G, opt);
  });
}

inline const std::vector<ConjClass>& conjugacy_classes(const PermGroup& G, const ClassOptions& opt = {}) {
  return class_table(G, opt).classes;
}

/// Some t in G with t x t^-1 = y, or nothing when x and y are not conjugate in G.
inline std::optional<Permutation> conjugating_element(const PermGroup& G, const Permutation& x, const Permutation& y,
                                                      const ClassOptions& opt = {}) {
  if (!G.contains(x) || !G.contains(y)) throw std::invalid_argument("conjugating_element: element outside the group");
  if (detail::uses_exact_strategy(G, opt)) {
    const ClassTable& t = class_table(G, opt);
    const auto ix = t.store->find(x), iy = t.store->find(y);
    if (t.class_of[ix] != t.class_of[iy]) return std::nullopt;
    return compose(t.conjugator_from_root(iy), t.conjugator_from_root(ix).inverse());
  }
  return detail::conjugator_by_sym(G, x, y, opt);
}

inline bool are_conjugate(const PermGroup& G, const Permutation& x, const Permutation& y, const ClassOptions& opt = {}) {
  return conjugating_element(G, x, y, opt).has_value();
}

/// Index of g's class in the canonical class order.
inline std::size_t class_index(const PermGroup& G, const Permutation& g, const ClassOptions& opt = {}) {
  if (!G.contains(g)) throw std::invalid_argument("class_index: element outside the group");
  const ClassTable& t = class_table(G, opt);
  if (t.exact()) return t.class_of[t.store->find(g)];
  for (std::size_t c = 0; c < t.classes.size(); ++c)
    if (t.classes[c].elt_order == g.order() && t.classes[c].cycle_type == g.cycle_type() &&
        detail::conjugator_by_sym(G, t.classes[c].rep, g, opt))
      return c;
  throw std::logic_error("class_index: element matches no class");
}

namespace detail {

inline PermGroup centralizer_of_rep(const PermGroup& G, const ClassTable& t, std::size_t c, std::uint64_t seed) {
  const ConjClass& cc = t.classes[c];
  if (cc.size == 1) return G;
  if (cc.centralizer_order == cc.elt_order) return PermGroup(G.degree(), {cc.rep});
  StabChain chain(G.degree());
  std::vector<Permutation> gens{cc.rep};
  chain.add_generator(cc.rep);
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * (c + 1)));
  while (chain.order() < cc.centralizer_order) {
    // g = t_y * h with h centralizing rep, for y = g rep g^-1
    const Permutation g = random_element(G.chain(), rng);
    const Permutation y = conjugate(cc.rep, g);
    const Permutation h = compose(t.conjugator_from_rep(t.store->find(y)).inverse(), g);
    if (chain.add_generator(h)) gens.push_back(h);
  }
  return PermGroup(G.degree(), std::move(gens));
}

}  // namespace detail

/// C_G(g). Exact table groups use orbit-stabilizer with a known target order.
inline PermGroup centralizer(const PermGroup& G, const Permutation& g, const ClassOptions& opt = {}) {
  if (!G.contains(g)) throw std::invalid_argument("centralizer: element outside the group");
  if (!detail::uses_exact_strategy(G, opt)) return detail::centralizer_by_sym(G, g, opt);
  const ClassTable& t = class_table(G, opt);
  const std::uint32_t idx = t.store->find(g);
  const std::size_t c = t.class_of[idx];
  std::shared_ptr<PermGroup> rep_c;
  {
    std::lock_guard<std::mutex> lock(t.centralizer_mutex);
    auto it = t.centralizer_cache.find(c);
    if (it != t.centralizer_cache.end()) rep_c = it->second;
  }
  if (!rep_c) {
    rep_c = std::make_shared<PermGroup>(detail::centralizer_of_rep(G, t, c, opt.seed));
    std::lock_guard<std::mutex> lock(t.centralizer_mutex);
    t.centralizer_cache.emplace(c, rep_c);
  }
  if (g == t.classes[c].rep) return *rep_c;
  const Permutation s = t.conjugator_from_rep(idx);
  std::vector<Permutation> gens;
  for (const auto& h : rep_c->generators()) gens.push_back(conjugate(h, s));
  return PermGroup(G.degree(), std::move(gens));
}

/// N_G(<g>): the centralizer together with one conjugator g -> g^k for every k that works.
inline PermGroup normalizer_cyclic(const PermGroup& G, const Permutation& g, const ClassOptions& opt = {}) {
  PermGroup C = centralizer(G, g, opt);
  StabChain chain(G.degree(), C.generators());
  std::vector<Permutation> gens = C.generators();
  for (auto k : detail::coprime_residues(g.order())) {
    if (k == 1) continue;
    auto t = conjugating_element(G, g, g.pow(static_cast<long long>(k)), opt);
    if (t && chain.add_generator(*t)) gens.push_back(*t);
  }
  return PermGroup(G.degree(), std::move(gens));
}

/// True iff rep^k is conjugate to rep for every k coprime to the element order.
inline bool is_rational_element(const PermGroup& G, const Permutation& g, const ClassOptions& opt = {}) {
  for (auto k : detail::coprime_residues(g.order()))
    if (!are_conjugate(G, g, g.pow(static_cast<long long>(k)), opt)) return false;
  return true;
}

inline bool is_rational_class(const PermGroup& G, const ConjClass& C, const ClassOptions& opt = {}) {
  return is_rational_element(G, C.rep, opt);
}

/// |Z(G)|, read off the class table.
inline BigInt center_order(const PermGroup& G, const ClassOptions& opt = {}) {
  BigInt z = 0;
  for (const auto& c : conjugacy_classes(G, opt))
    if (c.size == 1) ++z;
  return z;
}

/// Indices of classes with the given element order.
inline std::vector<std::size_t> classes_of_order(const PermGroup& G, std::uint64_t order, const ClassOptions& opt = {}) {
  std::vector<std::size_t> out;
  const auto& cls = conjugacy_classes(G, opt);
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (cls[i].elt_order == order) out.push_back(i);
  return out;
}

}  // namespace ramlab
