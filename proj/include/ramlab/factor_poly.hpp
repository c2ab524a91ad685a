#pragma once

// Factorization over Q: squarefree decomposition, factorization modulo a good prime,
// quadratic multifactor Hensel lifting and classical recombination (Zassenhaus).

#include <algorithm>
#include <memory>
#include <random>
#include <vector>

#include "ramlab/errors.hpp"
#include "ramlab/intfactor.hpp"
#include "ramlab/modpoly.hpp"
#include "ramlab/poly.hpp"

namespace ramlab {

struct PolyFactorOptions {
  int degree_cap = 64;
  std::uint64_t seed = 0xfac70;
};

namespace detail {

// Arithmetic on integer polynomials modulo m (coefficients kept in [0, m)).
struct ZMod {
  BigInt m;

  ZPoly reduce(ZPoly a) const {
    for (auto& v : a) v = mod_floor(v, m);
    zpoly::trim(a);
    return a;
  }
  ZPoly add(const ZPoly& a, const ZPoly& b) const {
    ZPoly c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    return reduce(std::move(c));
  }
  ZPoly sub(const ZPoly& a, const ZPoly& b) const {
    ZPoly c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
    return reduce(std::move(c));
  }
  ZPoly mul(const ZPoly& a, const ZPoly& b) const { return reduce(zpoly::mul(a, b)); }
  /// Division by a monic (mod m) polynomial.
  std::pair<ZPoly, ZPoly> divmod_monic(ZPoly a, const ZPoly& b) const {
    const int db = zpoly::deg(b);
    a = reduce(std::move(a));
    if (zpoly::deg(a) < db) return {ZPoly{}, a};
    ZPoly q(zpoly::deg(a) - db + 1);
    for (int i = zpoly::deg(a); i >= db; --i) {
      const BigInt f = mod_floor(a[i], m);
      q[i - db] = f;
      if (f == 0) continue;
      for (int j = 0; j <= db; ++j) a[i - db + j] -= f * b[j];
    }
    a.resize(db);
    return {reduce(std::move(q)), reduce(std::move(a))};
  }
};

template <class Ring>
ZPoly lift_to_z(const Ring& R, const typename Ring::Poly& a) {
  ZPoly z;
  for (const auto& v : a.c) z.push_back(R.field().to_big(v));
  zpoly::trim(z);
  return z;
}

template <class Ring>
typename Ring::Poly reduce_mod_p(const Ring& R, const ZPoly& a) {
  std::vector<typename Ring::Elem> c;
  for (const auto& v : a) c.push_back(R.field().from(v));
  return R.make(std::move(c));
}

// One quadratic Hensel step (von zur Gathen-Gerhard 15.10): from f = g h, s g + t h = 1 mod m
// to the same identities mod m^2; h stays monic.
inline void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const BigInt& m) {
  const ZMod M{m * m};
  const ZPoly e = M.sub(f, M.mul(g, h));
  auto [q, r] = M.divmod_monic(M.mul(s, e), h);
  const ZPoly g2 = M.add(g, M.add(M.mul(t, e), M.mul(q, g)));
  const ZPoly h2 = M.add(h, r);
  const ZPoly b = M.sub(M.add(M.mul(s, g2), M.mul(t, h2)), ZPoly{1});
  auto [c, d] = M.divmod_monic(M.mul(s, b), h2);
  s = M.sub(s, d);
  t = M.sub(t, M.add(M.mul(t, b), M.mul(c, g2)));
  g = g2;
  h = h2;
}

/// Lifts f = lc(f) * prod u_i (mod p, u_i monic, pairwise coprime) to monic w_i mod p^(2^j) >= bound.
template <class Ring>
std::vector<ZPoly> multifactor_lift(const Ring& R, ZPoly f, std::vector<typename Ring::Poly> u, const BigInt& bound,
                                    BigInt& modulus_out) {
  const BigInt p = R.field().modulus();
  std::vector<ZPoly> out;
  while (u.size() > 1) {
    // split off u[0]: f = (lc * u0) * (prod of the rest)
    typename Ring::Poly rest = R.one();
    for (std::size_t i = 1; i < u.size(); ++i) rest = R.mul(rest, u[i]);
    const typename Ring::Poly g0 = R.scale(u[0], R.field().from(f.back()));
    auto [unit, s0, t0] = R.xgcd(g0, rest);
    (void)unit;
    ZPoly g = lift_to_z(R, g0), h = lift_to_z(R, rest), s = lift_to_z(R, s0), t = lift_to_z(R, t0);
    BigInt m = p;
    while (m < bound) {
      hensel_step(f, g, h, s, t, m);
      m *= m;
    }
    modulus_out = m;
    // make g monic mod m
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), g.back().get_mpz_t(), m.get_mpz_t());
    const ZMod M{m};
    out.push_back(M.mul(g, ZPoly{inv}));
    f = h;
    u.erase(u.begin());
  }
  // the last factor is f itself (monic once a factor has been split off)
  if (out.empty()) {
    modulus_out = p;
    while (modulus_out < bound) modulus_out *= modulus_out;
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), modulus_out.get_mpz_t());
    out.push_back(ZMod{modulus_out}.mul(f, ZPoly{inv}));
  } else {
    out.push_back(ZMod{modulus_out}.reduce(f));
  }
  return out;
}

inline ZPoly symmetric_mod(ZPoly a, const BigInt& m) {
  const BigInt half = m / 2;
  for (auto& v : a) {
    v = mod_floor(v, m);
    if (v > half) v -= m;
  }
  zpoly::trim(a);
  return a;
}

inline std::uint64_t next_prime_u64(std::uint64_t n) {
  while (!is_prime(from_u64(n))) ++n;
  return n;
}

/// Irreducible factors of a primitive squarefree integer polynomial with positive lc.
inline std::vector<ZPoly> factor_squarefree_z(ZPoly f, const PolyFactorOptions& opt) {
  std::vector<ZPoly> out;
  if (zpoly::deg(f) <= 0) return out;
  if (f[0] == 0) {
    out.push_back(ZPoly{0, 1});
    f.erase(f.begin());
    if (zpoly::deg(f) <= 0) return out;
  }
  if (zpoly::deg(f) == 1) {
    out.push_back(f);
    return out;
  }
  const int n = zpoly::deg(f);
  // smallest prime > 2 deg with f mod p squarefree of full degree (equivalently p does not
  // divide lc(f) * disc(f))
  std::uint64_t p = next_prime_u64(2 * static_cast<std::uint64_t>(n) + 1);
  std::unique_ptr<ModPolyRing<SmallPrimeField>> ring;
  typename ModPolyRing<SmallPrimeField>::Poly fp;
  while (true) {
    ring = std::make_unique<ModPolyRing<SmallPrimeField>>(SmallPrimeField(p));
    fp = reduce_mod_p(*ring, f);
    if (fp.degree() == n && ring->is_squarefree(fp)) break;
    p = next_prime_u64(p + 1);
  }
  std::mt19937_64 rng(opt.seed);
  auto u = ring->factor_squarefree(ring->monic(fp), rng);
  if (u.size() == 1) {
    out.push_back(f);
    return out;
  }
  std::sort(u.begin(), u.end(), [](const auto& a, const auto& b) { return a.c < b.c; });
  // Landau-Mignotte: coefficients of lc(f) * (any factor) are below |lc| 2^n ||f||_2
  BigInt norm2 = 0;
  for (const auto& v : f) norm2 += v * v;
  BigInt norm = sqrt(norm2) + 1;
  const BigInt bound = 2 * big_abs(f.back()) * big_pow(BigInt(2), static_cast<unsigned long>(n)) * norm + 1;
  BigInt M;
  std::vector<ZPoly> w = multifactor_lift(*ring, f, u, bound, M);

  // classical recombination over subsets of increasing size
  ZPoly F = f;
  std::vector<ZPoly> remaining = w;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZPoly G{F.back()};
      const ZMod Mm{M};
      for (auto i : idx) G = Mm.mul(G, remaining[i]);
      G = zpoly::primitive(symmetric_mod(G, M));
      ZPoly Q;
      if (zpoly::deg(G) > 0 && zpoly::divides(G, F, &Q)) {
        out.push_back(G);
        F = Q;
        std::vector<ZPoly> keep;
        for (std::size_t i = 0; i < remaining.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(remaining[i]);
        remaining = std::move(keep);
        found = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == remaining.size() - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (zpoly::deg(F) > 0) out.push_back(zpoly::primitive(F));
  return out;
}

}  // namespace detail

/// Complete factorization over Q into monic irreducible factors with multiplicities, sorted
/// by (degree, coefficients). f = lc(f) * prod g^m.
inline std::vector<std::pair<UniPoly, int>> factor_rational_poly(const UniPoly& f, const PolyFactorOptions& opt = {}) {
  if (f.is_zero()) throw std::domain_error("factor_rational_poly of zero");
  if (f.degree() > opt.degree_cap)
    throw ResourceCapError("factor_rational_poly: degree " + std::to_string(f.degree()) + " above the cap");
  std::vector<std::pair<UniPoly, int>> out;
  for (const auto& [g, m] : squarefree_decomposition(f)) {
    ZPoly z;
    to_primitive_z(g, z);
    for (const auto& h : detail::factor_squarefree_z(z, opt)) out.emplace_back(from_z(h).monic(), m);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.coeffs() < b.first.coeffs();
  });
  return out;
}

inline bool is_irreducible(const UniPoly& f, const PolyFactorOptions& opt = {}) {
  if (f.degree() <= 0) return false;
  auto fac = factor_rational_poly(f, opt);
  return fac.size() == 1 && fac[0].second == 1;
}

/// Rational roots of f (each once).
inline std::vector<BigRat> rational_roots(const UniPoly& f, const PolyFactorOptions& opt = {}) {
  std::vector<BigRat> out;
  for (const auto& [g, m] : factor_rational_poly(f, opt))
    if (g.degree() == 1) out.push_back(-g.coeff(0));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ramlab
