#pragma once

// Independent oracles and property checks shared by the unit tests and the acceptance binary.
// The oracles deliberately avoid stabilizer chains and the library's class tables.

#include <deque>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ramlab/beckmann.hpp"
#include "ramlab/builtin_groups.hpp"
#include "ramlab/rigidity.hpp"

namespace oracle {

using namespace ramlab;
using ElementSet = std::unordered_set<Permutation, PermutationHash>;

/// Closure of the generators by breadth-first multiplication; stops once more than `cap`
/// elements are found (returning what it has).
inline std::vector<Permutation> closure(std::size_t degree, const std::vector<Permutation>& gens,
                                        std::size_t cap = SIZE_MAX) {
  std::vector<Permutation> out{Permutation::identity(degree)};
  ElementSet seen(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size() && out.size() <= cap; ++i)
    for (const auto& g : gens) {
      Permutation h = compose(g, out[i]);
      if (seen.insert(h).second) out.push_back(std::move(h));
    }
  return out;
}

struct BruteClasses {
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, std::size_t, PermutationHash> class_of;
  std::vector<std::size_t> sizes;
};

inline BruteClasses brute_classes(const PermGroup& G) {
  BruteClasses b;
  b.elements = closure(G.degree(), G.generators());
  for (const auto& x : b.elements) {
    if (b.class_of.count(x)) continue;
    const std::size_t id = b.sizes.size();
    std::size_t n = 0;
    std::deque<Permutation> q{x};
    b.class_of[x] = id;
    while (!q.empty()) {
      const Permutation y = q.front();
      q.pop_front();
      ++n;
      for (const auto& g : G.generators()) {
        Permutation z = conjugate(y, g);
        if (b.class_of.emplace(z, id).second) q.push_back(std::move(z));
      }
    }
    b.sizes.push_back(n);
  }
  return b;
}

/// #{(x, y) in C1 x C2 : (xy)^-1 in C3 and <x, y> = G} by exhaustion.
inline std::uint64_t brute_triple_count(const PermGroup& G, const BruteClasses& b, std::size_t c1, std::size_t c2,
                                        std::size_t c3) {
  std::vector<const Permutation*> A, B;
  for (const auto& x : b.elements) {
    const auto c = b.class_of.at(x);
    if (c == c1) A.push_back(&x);
    if (c == c2) B.push_back(&x);
  }
  const std::size_t order = b.elements.size();
  std::uint64_t n = 0;
  for (const auto* x : A)
    for (const auto* y : B) {
      if (b.class_of.at(compose(*x, *y).inverse()) != c3) continue;
      if (closure(G.degree(), {*x, *y}, order).size() == order) ++n;
    }
  return n;
}

/// Random permutation groups of order at most `max_order`, with degree between 3 and 8.
inline std::vector<PermGroup> random_small_groups(std::size_t count, std::size_t max_order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PermGroup> out;
  while (out.size() < count) {
    const std::size_t n = 3 + rng() % 6;
    const std::size_t ngens = 1 + rng() % 3;
    std::vector<Permutation> gens;
    for (std::size_t k = 0; k < ngens; ++k) {
      // a random permutation restricted to a random subset of points
      std::vector<Point> img(n);
      std::iota(img.begin(), img.end(), Point{0});
      std::vector<Point> support;
      for (std::size_t i = 0; i < n; ++i)
        if (rng() % 2) support.push_back(static_cast<Point>(i));
      std::vector<Point> shuffled = support;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (std::size_t i = 0; i < support.size(); ++i) img[support[i]] = shuffled[i];
      gens.push_back(Permutation::from_images(img));
    }
    if (closure(n, gens, max_order).size() > max_order) continue;
    out.emplace_back(n, gens, "random");
  }
  return out;
}

/// Sylvester matrix determinant by fraction-free elimination over Q.
inline BigRat sylvester_resultant(const UniPoly& f, const UniPoly& g) {
  const int m = f.degree(), n = g.degree();
  const int N = m + n;
  if (N == 0) return 1;
  std::vector<std::vector<BigRat>> M(N, std::vector<BigRat>(N, 0));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) M[r][r + j] = f.coeff(m - j);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) M[n + r][r + j] = g.coeff(n - j);
  BigRat det = 1;
  for (int c = 0; c < N; ++c) {
    int piv = -1;
    for (int r = c; r < N; ++r)
      if (M[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(M[piv], M[c]);
      det = -det;
    }
    det *= M[c][c];
    for (int r = c + 1; r < N; ++r) {
      if (M[r][c] == 0) continue;
      const BigRat f2 = M[r][c] / M[c][c];
      for (int k = c; k < N; ++k) M[r][k] -= f2 * M[c][k];
    }
  }
  return det;
}

inline UniPoly random_poly(std::mt19937_64& rng, int deg, long bound) {
  std::vector<BigRat> c(deg + 1);
  for (auto& v : c) v = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  while (c.back() == 0) c.back() = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  return UniPoly(c);
}

inline std::vector<BigInt> primes_up_to(unsigned n) {
  std::vector<BigInt> out;
  for (unsigned p = 2; p <= n; ++p)
    if (is_prime(BigInt(p))) out.emplace_back(p);
  return out;
}

// ---------------------------------------------------------------------------------------
// property checks returning (ok, detail)

struct Check {
  bool ok = true;
  std::string detail;
};

inline Check group_orders_vs_closure(std::size_t count = 25, std::uint64_t seed = 11) {
  Check c;
  std::size_t agree = 0;
  for (const auto& G : random_small_groups(count, 2000, seed)) {
    const std::size_t brute = closure(G.degree(), G.generators()).size();
    if (G.order() == brute) ++agree;
    else c.ok = false;
  }
  c.detail = std::to_string(agree) + "/" + std::to_string(count) + " orders agree";
  return c;
}

inline Check class_identities(const std::vector<PermGroup>& groups) {
  Check c;
  for (const auto& G : groups) {
    const auto b = brute_classes(G);
    const auto& cls = conjugacy_classes(G);
    BigInt total = 0;
    std::set<std::size_t> hit;
    for (const auto& k : cls) {
      total += k.size;
      const auto id = b.class_of.at(k.rep);
      hit.insert(id);
      const bool ok = k.size == b.sizes[id] && k.size * k.centralizer_order == G.order() &&
                      centralizer(G, k.rep).order() == k.centralizer_order;
      if (!ok) c.ok = false;
    }
    if (total != G.order() || hit.size() != cls.size() || cls.size() != b.sizes.size()) c.ok = false;
  }
  c.detail = std::to_string(groups.size()) + " groups";
  return c;
}

/// Triple counts against exhaustion: every class triple for groups up to 400 elements,
/// `sampled` random triples for larger ones.
inline Check triple_counts(const std::vector<PermGroup>& groups, std::size_t sampled = 12, std::uint64_t seed = 5) {
  Check c;
  std::mt19937_64 rng(seed);
  std::size_t compared = 0;
  for (const auto& G : groups) {
    const auto b = brute_classes(G);
    const auto& cls = conjugacy_classes(G);
    std::vector<std::size_t> brute_id;
    for (const auto& k : cls) brute_id.push_back(b.class_of.at(k.rep));
    auto compare = [&](std::size_t i, std::size_t j, std::size_t k) {
      const BigInt lib = generating_triple_count(G, {i, j, k});
      const std::uint64_t br = brute_triple_count(G, b, brute_id[i], brute_id[j], brute_id[k]);
      ++compared;
      if (lib != from_u64(br)) {
        c.ok = false;
        c.detail += G.name() + " (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                    "): " + lib.get_str() + " vs " + std::to_string(br) + "; ";
      }
    };
    const std::size_t r = cls.size();
    if (G.order() <= 400) {
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          for (std::size_t k = 0; k < r; ++k) compare(i, j, k);
    } else {
      for (std::size_t s = 0; s < sampled; ++s) compare(rng() % r, rng() % r, rng() % r);
    }
  }
  c.detail = std::to_string(compared) + " triples compared; " + c.detail;
  return c;
}

inline Check resultant_multiplicativity(std::size_t count = 100, std::uint64_t seed = 3) {
  Check c;
  std::mt19937_64 rng(seed);
  std::size_t good = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const UniPoly f = random_poly(rng, 1 + rng() % 6, 9), g = random_poly(rng, 1 + rng() % 6, 9),
                  h = random_poly(rng, 1 + rng() % 6, 9);
    const bool ok = resultant(f * g, h) == resultant(f, h) * resultant(g, h) &&
                    discriminant(f * g) == discriminant(f) * discriminant(g) * resultant(f, g) * resultant(f, g) &&
                    resultant(f, h) == sylvester_resultant(f, h);
    if (ok) ++good;
    else c.ok = false;
  }
  c.detail = std::to_string(good) + "/" + std::to_string(count) + " inputs";
  return c;
}

inline Check squarefree_round_trips(std::size_t count = 50, std::uint64_t seed = 4) {
  Check c;
  std::mt19937_64 rng(seed);
  std::size_t good = 0;
  for (std::size_t i = 0; i < count; ++i) {
    UniPoly f = UniPoly::constant(static_cast<long>(1 + rng() % 5));
    const int parts = 1 + rng() % 3;
    for (int k = 1; k <= parts; ++k) f = f * pow(random_poly(rng, 1 + rng() % 3, 5), k);
    const auto dec = squarefree_decomposition(f);
    UniPoly back = UniPoly::constant(f.lc());
    bool ok = true;
    for (std::size_t a = 0; a < dec.size(); ++a) {
      back = back * pow(dec[a].first, dec[a].second);
      ok = ok && is_squarefree(dec[a].first) && dec[a].first.lc() == 1;
      for (std::size_t b = a + 1; b < dec.size(); ++b) ok = ok && gcd(dec[a].first, dec[b].first).degree() == 0;
    }
    ok = ok && back == f;
    if (ok) ++good;
    else c.ok = false;
  }
  c.detail = std::to_string(good) + "/" + std::to_string(count) + " round trips";
  return c;
}

/// At good primes, predicted order 1 (or no meeting branch point) must come with an
/// unramified verdict and predicted order > 1 with a ramified one.
inline Check predict_consistency(const std::vector<Cover>& covers, std::size_t per_cover = 60, std::uint64_t seed = 9) {
  Check c;
  std::mt19937_64 rng(seed);
  const auto primes = primes_up_to(60);
  std::size_t total = 0;
  for (const auto& cv : covers) {
    const auto bad = bad_prime_superset(cv);
    std::size_t done = 0;
    while (done < per_cover) {
      const BigRat a(static_cast<long>(rng() % 61) - 30);
      SpecializationReport rep;
      try {
        rep = predict_inertia(cv, a);
      } catch (const std::invalid_argument&) {
        continue;  // branch point
      }
      const BigInt& p = primes[rng() % primes.size()];
      if (bad.primes.count(p)) continue;
      const auto chk = unramified_check(cv, a, p);
      auto it = rep.per_prime.find(p);
      const std::uint64_t predicted = it == rep.per_prime.end() ? 1 : it->second.predicted_order.value_or(0);
      const bool ok = predicted == 0 || (predicted == 1 ? chk.verdict == LocalVerdict::unramified
                                                        : chk.verdict == LocalVerdict::ramified);
      if (!ok) {
        c.ok = false;
        c.detail += "a=" + to_string(a) + " p=" + p.get_str() + " predicted " + std::to_string(predicted) + " got " +
                    to_string(chk.verdict) + "; ";
      }
      ++done;
      ++total;
    }
  }
  c.detail = std::to_string(total) + " (a,p) pairs; " + c.detail;
  return c;
}

inline Check search_verified(const Cover& cv, const std::set<BigInt>& S, std::size_t count) {
  Check c;
  const auto r = specialize_search(cv, S, count);
  for (const auto& a : r.values)
    for (const auto& p : S)
      if (!unramified_check(cv, a, p).unramified()) c.ok = false;
  if (r.values.size() != count) c.ok = false;
  c.detail = std::to_string(r.values.size()) + " values verified";
  return c;
}

inline std::vector<PermGroup> small_group_corpus() {
  return {symmetric_group(3),      cyclic_group(6),          dihedral_group(4),  alternating_group(4),
          dihedral_group(5),       symmetric_group(4),       alternating_group(5), symmetric_group(5),
          projective_linear_group(7, false), projective_linear_group(7, true), projective_linear_group(11, false),
          wreath_product(cyclic_group(3), cyclic_group(3))};
}

}  // namespace oracle
