#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramlab/bigint.hpp"
#include "ramlab/permutation.hpp"
#include "ramlab/stabchain.hpp"

namespace ramlab {

struct ClassTable;

/// A finitely generated permutation group. Immutable after construction; the stabilizer
/// chain and class table are built lazily, once, and shared between copies.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> gens, std::string name = {})
      : degree_(degree), name_(std::move(name)), cache_(std::make_shared<Cache>()) {
    if (degree == 0) throw std::invalid_argument("group degree must be positive");
    for (const auto& g : gens)
      if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    for (auto& g : gens)
      if (!g.is_identity() && std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(std::move(g));
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::string& name() const { return name_; }
  PermGroup renamed(std::string name) const {
    PermGroup copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

  const StabChain& chain() const {
    std::call_once(cache_->chain_once, [&] { cache_->chain = std::make_unique<StabChain>(degree_, gens_); });
    return *cache_->chain;
  }

  BigInt order() const { return chain().order(); }
  bool is_trivial() const { return gens_.empty(); }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) throw std::invalid_argument("contains: degree mismatch");
    return chain().contains(g);
  }

  Permutation identity() const { return Permutation::identity(degree_); }

  /// Lazily built class table; `build` runs at most once per group object family.
  template <class Build>
  const ClassTable& class_table(Build&& build) const {
    std::call_once(cache_->classes_once, [&] {
      cache_->classes = build();
      cache_->classes_ready.store(true, std::memory_order_release);
    });
    return *cache_->classes;
  }

  /// The class table if it has already been built, else nullptr.
  const ClassTable* cached_class_table() const {
    return cache_->classes_ready.load(std::memory_order_acquire) ? cache_->classes.get() : nullptr;
  }

 private:
  struct Cache {
    std::once_flag chain_once;
    std::unique_ptr<StabChain> chain;
    std::once_flag classes_once;
    std::shared_ptr<const ClassTable> classes;
    std::atomic<bool> classes_ready{false};
  };

  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::string name_;
  std::shared_ptr<Cache> cache_;
};

inline BigInt group_order(const PermGroup& g) { return g.order(); }

inline bool contains(const PermGroup& g, const Permutation& x) { return g.contains(x); }

inline std::uint64_t element_order(const Permutation& g) { return g.order(); }

inline PermGroup subgroup_generated(std::size_t degree, std::vector<Permutation> elems) {
  if (elems.empty()) throw std::invalid_argument("subgroup_generated: empty element list");
  return PermGroup(degree, std::move(elems));
}

/// Calls fn on every element exactly once, as products of transversal elements.
inline void for_each_element(const PermGroup& g, const std::function<void(const Permutation&)>& fn) {
  const auto& levels = g.chain().levels();
  std::vector<Permutation> partial(levels.size() + 1, g.identity());
  std::function<void(std::size_t)> rec = [&](std::size_t l) {
    if (l == levels.size()) {
      fn(partial[l]);
      return;
    }
    for (const auto& u : levels[l].transversal) {
      compose_into(partial[l + 1], partial[l], u);
      rec(l + 1);
    }
  };
  rec(0);
}

inline std::vector<Permutation> all_elements(const PermGroup& g) {
  std::vector<Permutation> out;
  for_each_element(g, [&](const Permutation& x) { out.push_back(x); });
  return out;
}

inline std::vector<std::vector<Point>> orbits(std::size_t degree, const std::vector<Permutation>& gens) {
  std::vector<bool> seen(degree, false);
  std::vector<std::vector<Point>> out;
  for (std::size_t s = 0; s < degree; ++s) {
    if (seen[s]) continue;
    std::vector<Point> orb{static_cast<Point>(s)};
    seen[s] = true;
    for (std::size_t q = 0; q < orb.size(); ++q)
      for (const auto& x : gens) {
        Point im = x(orb[q]);
        if (!seen[im]) {
          seen[im] = true;
          orb.push_back(im);
        }
      }
    out.push_back(std::move(orb));
  }
  return out;
}

inline bool is_transitive(const PermGroup& g) { return orbits(g.degree(), g.generators()).size() == 1; }

/// True iff the elements generate all of `whole` (they must lie in it). Uses a randomized
/// certificate first and falls back to an exact stabilizer chain for negative answers.
inline bool generates(const PermGroup& whole, const std::vector<Permutation>& elems, std::uint64_t seed = 1) {
  const BigInt target = whole.order();
  if (target == 1) return true;
  if (is_transitive(whole) && orbits(whole.degree(), elems).size() != 1) return false;
  if (StabChain::reaches_order(elems, whole.degree(), target, seed)) return true;
  return StabChain(whole.degree(), elems).order() == target;
}

/// Smallest normal subgroup of G containing elems.
inline PermGroup normal_closure(const PermGroup& G, const std::vector<Permutation>& elems) {
  for (const auto& e : elems)
    if (!G.contains(e)) throw std::invalid_argument("normal_closure: element outside the group");
  StabChain chain(G.degree());
  std::vector<Permutation> gens;
  std::vector<Permutation> queue;
  for (const auto& e : elems)
    if (chain.add_generator(e)) {
      gens.push_back(e);
      queue.push_back(e);
    }
  while (!queue.empty()) {
    Permutation x = std::move(queue.back());
    queue.pop_back();
    for (const auto& s : G.generators()) {
      Permutation c = conjugate(x, s);
      if (chain.add_generator(c)) {
        gens.push_back(c);
        queue.push_back(c);
      }
    }
  }
  return PermGroup(G.degree(), std::move(gens));
}

inline PermGroup derived_subgroup(const PermGroup& G) {
  std::vector<Permutation> comms;
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      comms.push_back(compose(compose(gens[i].inverse(), gens[j].inverse()), compose(gens[i], gens[j])));
  if (comms.empty()) return PermGroup(G.degree(), {});
  return normal_closure(G, comms);
}

namespace detail {

inline Permutation shift_into(const Permutation& g, std::size_t offset, std::size_t total) {
  std::vector<Point> img(total);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = 0; i < g.degree(); ++i) img[offset + i] = static_cast<Point>(offset + g(static_cast<Point>(i)));
  return Permutation::from_images(std::move(img));
}

/// Permutation of blocks: block b goes to block h(b), points keep their position inside blocks.
inline Permutation block_permutation(const Permutation& h, std::size_t block_size) {
  const std::size_t n = h.degree() * block_size;
  std::vector<Point> img(n);
  for (std::size_t b = 0; b < h.degree(); ++b)
    for (std::size_t i = 0; i < block_size; ++i)
      img[b * block_size + i] = static_cast<Point>(h(static_cast<Point>(b)) * block_size + i);
  return Permutation::from_images(std::move(img));
}

}  // namespace detail

/// G x H acting on disjoint point sets, G's points first.
inline PermGroup direct_product(const PermGroup& G, const PermGroup& H) {
  const std::size_t n = G.degree() + H.degree();
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) gens.push_back(detail::shift_into(g, 0, n));
  for (const auto& h : H.generators()) gens.push_back(detail::shift_into(h, G.degree(), n));
  std::string name = (G.name().empty() || H.name().empty()) ? std::string{} : G.name() + "x" + H.name();
  return PermGroup(n, std::move(gens), name);
}

/// G wr H = G^m : H, imprimitive on deg(G)*deg(H) points (block b holds points b*deg(G)..).
inline PermGroup wreath_product(const PermGroup& G, const PermGroup& H) {
  const std::size_t k = G.degree(), m = H.degree(), n = k * m;
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) gens.push_back(detail::shift_into(g, 0, n));
  for (const auto& h : H.generators()) gens.push_back(detail::block_permutation(h, k));
  std::string name = (G.name().empty() || H.name().empty()) ? std::string{} : G.name() + "wr" + H.name();
  return PermGroup(n, std::move(gens), name);
}

inline PermGroup symmetric_group(std::size_t n);

inline PermGroup wreath_symmetric(const PermGroup& G, std::size_t n) {
  if (n == 0) throw std::invalid_argument("wreath_symmetric: n must be positive");
  return wreath_product(G, symmetric_group(n));
}

/// Element (g1, g2) of G x G on 2*deg(G) points.
inline Permutation pair_element(const Permutation& g1, const Permutation& g2) {
  const std::size_t k = g1.degree();
  std::vector<Point> img(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    img[i] = g1(static_cast<Point>(i));
    img[k + i] = static_cast<Point>(k + g2(static_cast<Point>(i)));
  }
  return Permutation::from_images(std::move(img));
}

/// The block swap generating the top C2 of G wr C2.
inline Permutation block_swap(std::size_t k) {
  std::vector<Point> img(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    img[i] = static_cast<Point>(k + i);
    img[k + i] = static_cast<Point>(i);
  }
  return Permutation::from_images(std::move(img));
}

/// The subgroup of G wr C2 generated by all (g, g^-1)·a. Generators are returned in
/// element-enumeration order, skipping those already in the span of earlier ones; each is
/// an involution swapping the two blocks.
inline PermGroup hat_group(const PermGroup& G) {
  const std::size_t k = G.degree();
  const Permutation a = block_swap(k);
  StabChain chain(2 * k);
  std::vector<Permutation> gens;
  for_each_element(G, [&](const Permutation& g) {
    Permutation e = compose(pair_element(g, g.inverse()), a);
    if (chain.add_generator(e)) gens.push_back(std::move(e));
  });
  return PermGroup(2 * k, std::move(gens), G.name().empty() ? std::string{} : "hat(" + G.name() + ")");
}

}  // namespace ramlab
