#pragma once

// Stabilizer chains (base and strong generating set) via deterministic Schreier-Sims.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "ramlab/bigint.hpp"
#include "ramlab/permutation.hpp"

namespace ramlab {

/// Product-replacement random elements; deterministic for a given seed.
class RandomElements {
 public:
  RandomElements(std::span<const Permutation> gens, std::size_t degree, std::uint64_t seed) : rng_(seed) {
    std::vector<Permutation> base(gens.begin(), gens.end());
    if (base.empty()) base.push_back(Permutation::identity(degree));
    const std::size_t slots = std::max<std::size_t>(10, base.size() + 1);
    for (std::size_t i = 0; i < slots; ++i) state_.push_back(base[i % base.size()]);
    accumulator_ = Permutation::identity(degree);
    for (int i = 0; i < 60; ++i) next();
  }

  Permutation next() {
    std::uniform_int_distribution<std::size_t> pick(0, state_.size() - 1);
    std::size_t s = pick(rng_), t = pick(rng_);
    while (t == s) t = pick(rng_);
    const bool left = (rng_() & 1) != 0;
    const bool inv = (rng_() & 1) != 0;
    const Permutation other = inv ? state_[t].inverse() : state_[t];
    state_[s] = left ? compose(other, state_[s]) : compose(state_[s], other);
    accumulator_ = compose(accumulator_, state_[s]);
    return accumulator_;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<Permutation> state_;
  Permutation accumulator_;
};

class StabChain {
 public:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> gens;          // strong generators fixing earlier base points
    std::vector<Point> orbit;               // fundamental orbit, in discovery order
    std::vector<std::int32_t> orbit_pos;    // point -> index into orbit, -1 if absent
    std::vector<Permutation> transversal;   // transversal[k](base_point) == orbit[k]
    std::vector<Permutation> inv_transversal;
  };

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // first level where sifting failed; == levels().size() when it went through
  };

  explicit StabChain(std::size_t degree) : degree_(degree) {}

  StabChain(std::size_t degree, std::span<const Permutation> gens) : degree_(degree) {
    std::vector<Permutation> nontrivial;
    for (const auto& g : gens) {
      if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
      if (!g.is_identity()) nontrivial.push_back(g);
    }
    if (nontrivial.empty()) return;
    levels_.push_back(make_level(choose_first_base_point(nontrivial)));
    levels_[0].gens = nontrivial;
    rebuild_orbit(levels_[0]);
    complete_from(0);
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& l : levels_) b.push_back(l.base_point);
    return b;
  }

  BigInt order() const {
    BigInt n = 1;
    for (const auto& l : levels_) n *= static_cast<unsigned long>(l.orbit.size());
    return n;
  }

  /// Strong generators without duplicates (level-0 generators first).
  std::vector<Permutation> strong_generators() const {
    std::vector<Permutation> out;
    for (const auto& l : levels_)
      for (const auto& g : l.gens)
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    return out;
  }

  SiftResult sift(Permutation g, std::size_t from = 0) const {
    Permutation tmp;
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const auto& lev = levels_[l];
      const Point beta = g(lev.base_point);
      const auto pos = lev.orbit_pos[beta];
      if (pos < 0) return {std::move(g), l};
      compose_into(tmp, lev.inv_transversal[pos], g);
      std::swap(tmp, g);
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) throw std::invalid_argument("contains: degree mismatch");
    auto r = sift(g);
    return r.level == levels_.size() && r.residue.is_identity();
  }

  /// Adds a generator and restores completeness. Returns false when g was already a member.
  bool add_generator(const Permutation& g) {
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
    if (contains(g)) return false;
    if (levels_.empty()) {
      levels_.push_back(make_level(largest_cycle_point(g)));
    }
    levels_[0].gens.push_back(g);
    rebuild_orbit(levels_[0]);
    complete_from(0);
    return true;
  }

  /// Random Schreier-Sims that stops as soon as the partial chain certifies `target` elements.
  /// The product of partial orbit lengths is a lower bound on the group order, so a `true`
  /// result proves |<gens>| >= target. A `false` result is inconclusive.
  static bool reaches_order(std::span<const Permutation> gens, std::size_t degree, const BigInt& target,
                            std::uint64_t seed, int patience = 40) {
    StabChain partial(degree);
    if (target <= 1) return true;
    RandomElements rnd(gens, degree, seed);
    for (const auto& g : gens) partial.absorb(g);
    if (partial.order() >= target) return true;
    int fails = 0;
    while (fails < patience) {
      if (partial.absorb(rnd.next())) {
        fails = 0;
        if (partial.order() >= target) return true;
      } else {
        ++fails;
      }
    }
    return false;
  }

 private:
  std::size_t degree_;
  std::vector<Level> levels_;

  Level make_level(Point base_point) const {
    Level l;
    l.base_point = base_point;
    l.orbit_pos.assign(degree_, -1);
    return l;
  }

  static Point largest_cycle_point(const Permutation& g) {
    const std::size_t n = g.degree();
    std::vector<bool> seen(n, false);
    std::size_t best_len = 0;
    Point best = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = g(static_cast<Point>(j))) {
        seen[j] = true;
        ++len;
      }
      if (len > best_len) {
        best_len = len;
        best = static_cast<Point>(i);
      }
    }
    return best;
  }

  Point choose_first_base_point(const std::vector<Permutation>& gens) const {
    std::vector<std::int32_t> orbit_id(degree_, -1);
    std::size_t best_size = 0;
    Point best = 0;
    std::vector<Point> queue;
    for (std::size_t start = 0; start < degree_; ++start) {
      if (orbit_id[start] >= 0) continue;
      queue.assign(1, static_cast<Point>(start));
      orbit_id[start] = static_cast<std::int32_t>(start);
      for (std::size_t q = 0; q < queue.size(); ++q)
        for (const auto& s : gens) {
          Point im = s(queue[q]);
          if (orbit_id[im] < 0) {
            orbit_id[im] = static_cast<std::int32_t>(start);
            queue.push_back(im);
          }
        }
      if (queue.size() > best_size) {
        best_size = queue.size();
        best = static_cast<Point>(start);
      }
    }
    return best;
  }

  void rebuild_orbit(Level& lev) const {
    lev.orbit.assign(1, lev.base_point);
    std::fill(lev.orbit_pos.begin(), lev.orbit_pos.end(), -1);
    lev.orbit_pos[lev.base_point] = 0;
    lev.transversal.assign(1, Permutation::identity(degree_));
    lev.inv_transversal.assign(1, Permutation::identity(degree_));
    for (std::size_t q = 0; q < lev.orbit.size(); ++q) {
      for (const auto& s : lev.gens) {
        const Point im = s(lev.orbit[q]);
        if (lev.orbit_pos[im] >= 0) continue;
        lev.orbit_pos[im] = static_cast<std::int32_t>(lev.orbit.size());
        lev.orbit.push_back(im);
        Permutation u = compose(s, lev.transversal[q]);
        lev.inv_transversal.push_back(u.inverse());
        lev.transversal.push_back(std::move(u));
      }
    }
  }

  /// Inserts the residue of g (if nontrivial) into the partial chain without completing it.
  bool absorb(const Permutation& g) {
    auto [h, j] = sift(g);
    if (j == levels_.size() && h.is_identity()) return false;
    if (j == levels_.size()) levels_.push_back(make_level(largest_cycle_point(h)));
    // the residue fixes the first j base points
    for (std::size_t l = 0; l <= j; ++l) {
      levels_[l].gens.push_back(h);
      rebuild_orbit(levels_[l]);
    }
    return true;
  }

  // Returns a nontrivial Schreier generator residue at level i, with the level where its
  // sifting stopped, or nothing when every Schreier generator of level i sifts through.
  std::optional<SiftResult> failing_schreier_generator(std::size_t i) const {
    const Level& lev = levels_[i];
    Permutation tmp, h;
    for (std::size_t bi = 0; bi < lev.orbit.size(); ++bi) {
      for (const auto& x : lev.gens) {
        const auto tpos = lev.orbit_pos[x(lev.orbit[bi])];
        // u_{x(beta)}^-1 x u_beta fixes the level's base point
        compose_into(tmp, x, lev.transversal[bi]);
        compose_into(h, lev.inv_transversal[tpos], tmp);
        if (h.is_identity()) continue;
        auto r = sift(h, i + 1);
        if (r.level < levels_.size() || !r.residue.is_identity()) return r;
      }
    }
    return std::nullopt;
  }

  // Deterministic Schreier-Sims completion loop. Levels deeper than `start` must be complete.
  void complete_from(std::size_t start) {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start);
    while (i >= 0) {
      auto bad = failing_schreier_generator(static_cast<std::size_t>(i));
      if (!bad) {
        --i;
        continue;
      }
      const std::size_t j = bad->level;
      if (j == levels_.size()) levels_.push_back(make_level(largest_cycle_point(bad->residue)));
      for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
        levels_[l].gens.push_back(bad->residue);
        rebuild_orbit(levels_[l]);
      }
      i = static_cast<std::ptrdiff_t>(j);
    }
  }
};

}  // namespace ramlab
