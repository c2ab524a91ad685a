#pragma once

// Polynomials over prime fields: gcd, squarefreeness, distinct-degree and
// Cantor-Zassenhaus equal-degree factorization.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "ramlab/bigint.hpp"

namespace ramlab {

/// F_p with p < 2^63; products go through 128-bit integers.
struct SmallPrimeField {
  using Elem = std::uint64_t;
  std::uint64_t p;

  explicit SmallPrimeField(std::uint64_t prime) : p(prime) {
    if (prime < 2 || prime >= (1ull << 63)) throw std::invalid_argument("SmallPrimeField: bad modulus");
  }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem add(Elem a, Elem b) const { return a >= p - b ? a - (p - b) : a + b; }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % p); }
  Elem pow(Elem b, std::uint64_t e) const {
    Elem r = one();
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero mod p");
    return pow(a, p - 2);
  }
  bool is_zero(Elem a) const { return a == 0; }
  Elem from(const BigInt& v) const { return to_u64(mod_floor(v, from_u64(p))); }
  Elem from(long v) const { return from(BigInt(v)); }
  BigInt to_big(Elem a) const { return from_u64(a); }
  BigInt modulus() const { return from_u64(p); }
  template <class Rng>
  Elem random(Rng& rng) const {
    return std::uniform_int_distribution<std::uint64_t>(0, p - 1)(rng);
  }
};

/// F_p for arbitrary-size p.
struct BigPrimeField {
  using Elem = BigInt;
  BigInt p;

  explicit BigPrimeField(BigInt prime) : p(std::move(prime)) {
    if (p < 2) throw std::invalid_argument("BigPrimeField: bad modulus");
  }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(const Elem& a, const Elem& b) const { return mod_floor(BigInt(a + b), p); }
  Elem sub(const Elem& a, const Elem& b) const { return mod_floor(BigInt(a - b), p); }
  Elem neg(const Elem& a) const { return mod_floor(BigInt(-a), p); }
  Elem mul(const Elem& a, const Elem& b) const { return mod_floor(BigInt(a * b), p); }
  Elem pow(const Elem& b, const BigInt& e) const {
    BigInt r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r;
  }
  Elem inv(const Elem& a) const {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0) throw std::domain_error("inverse of zero mod p");
    return r;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem from(const BigInt& v) const { return mod_floor(v, p); }
  Elem from(long v) const { return from(BigInt(v)); }
  BigInt to_big(const Elem& a) const { return a; }
  BigInt modulus() const { return p; }
  template <class Rng>
  Elem random(Rng& rng) const {
    gmp_randclass gen(gmp_randinit_default);
    gen.seed(static_cast<unsigned long>(rng()));
    return gen.get_z_range(p);
  }
};

/// Dense polynomial over a prime field F, ascending coefficients, trimmed.
template <class F>
struct ModPoly {
  using Elem = typename F::Elem;
  std::vector<Elem> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Elem& lc() const { return c.back(); }
  bool operator==(const ModPoly&) const = default;
};

template <class F>
class ModPolyRing {
 public:
  using Elem = typename F::Elem;
  using Poly = ModPoly<F>;

  explicit ModPolyRing(F field) : f_(std::move(field)) {}
  const F& field() const { return f_; }

  void trim(Poly& a) const {
    while (!a.c.empty() && f_.is_zero(a.c.back())) a.c.pop_back();
  }
  Poly make(std::vector<Elem> c) const {
    Poly p{std::move(c)};
    trim(p);
    return p;
  }
  Poly one() const { return make({f_.one()}); }
  Poly x() const { return make({f_.zero(), f_.one()}); }
  Poly constant(Elem v) const { return make({v}); }

  Poly add(const Poly& a, const Poly& b) const {
    std::vector<Elem> c(std::max(a.c.size(), b.c.size()), f_.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] = f_.add(c[i], b.c[i]);
    return make(std::move(c));
  }
  Poly sub(const Poly& a, const Poly& b) const {
    std::vector<Elem> c(std::max(a.c.size(), b.c.size()), f_.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] = f_.sub(c[i], b.c[i]);
    return make(std::move(c));
  }
  Poly mul(const Poly& a, const Poly& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Elem> c(a.c.size() + b.c.size() - 1, f_.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (f_.is_zero(a.c[i])) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] = f_.add(c[i + j], f_.mul(a.c[i], b.c[j]));
    }
    return make(std::move(c));
  }
  Poly scale(const Poly& a, const Elem& s) const {
    std::vector<Elem> c = a.c;
    for (auto& v : c) v = f_.mul(v, s);
    return make(std::move(c));
  }
  Poly monic(const Poly& a) const { return a.is_zero() ? a : scale(a, f_.inv(a.lc())); }

  std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const {
    if (b.is_zero()) throw std::domain_error("mod-p polynomial division by zero");
    std::vector<Elem> r = a.c;
    const int db = b.degree();
    if (a.degree() < db) return {Poly{}, a};
    std::vector<Elem> q(a.degree() - db + 1, f_.zero());
    const Elem ilc = f_.inv(b.lc());
    for (int i = a.degree(); i >= db; --i) {
      const Elem m = f_.mul(r[i], ilc);
      q[i - db] = m;
      if (f_.is_zero(m)) continue;
      for (int j = 0; j <= db; ++j) r[i - db + j] = f_.sub(r[i - db + j], f_.mul(m, b.c[j]));
    }
    r.resize(db);
    return {make(std::move(q)), make(std::move(r))};
  }
  Poly rem(const Poly& a, const Poly& b) const { return divmod(a, b).second; }
  Poly quo(const Poly& a, const Poly& b) const { return divmod(a, b).first; }

  /// Monic gcd.
  Poly gcd(Poly a, Poly b) const {
    while (!b.is_zero()) {
      Poly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  /// s, t with s*a + t*b = gcd(a, b) (monic), deg s < deg b, deg t < deg a.
  std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) const {
    Poly r0 = a, r1 = b, s0 = one(), s1{}, t0{}, t1 = one();
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      Poly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const Elem il = f_.inv(r0.lc());
    return {scale(r0, il), scale(s0, il), scale(t0, il)};
  }

  Poly derivative(const Poly& a) const {
    std::vector<Elem> d;
    for (std::size_t i = 1; i < a.c.size(); ++i) d.push_back(f_.mul(a.c[i], f_.from(static_cast<long>(i))));
    return make(std::move(d));
  }

  Elem eval(const Poly& a, const Elem& x) const {
    Elem acc = f_.zero();
    for (std::size_t i = a.c.size(); i-- > 0;) acc = f_.add(f_.mul(acc, x), a.c[i]);
    return acc;
  }

  Poly mulmod(const Poly& a, const Poly& b, const Poly& m) const { return rem(mul(a, b), m); }

  Poly powmod(Poly base, BigInt e, const Poly& m) const {
    Poly r = rem(one(), m);
    base = rem(base, m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = mulmod(r, base, m);
      base = mulmod(base, base, m);
      e >>= 1;
    }
    return r;
  }

  bool is_squarefree(const Poly& a) const {
    if (a.degree() <= 0) return true;
    return gcd(a, derivative(a)).degree() == 0;
  }

  /// Distinct-degree factorization of a monic squarefree polynomial: pairs (product of all
  /// irreducible factors of degree d, d).
  std::vector<std::pair<Poly, int>> distinct_degree(Poly a) const {
    std::vector<std::pair<Poly, int>> out;
    const BigInt p = f_.modulus();
    Poly h = rem(x(), a);
    for (int d = 1; 2 * d <= a.degree(); ++d) {
      h = powmod(h, p, a);
      Poly g = gcd(a, sub(h, x()));
      if (g.degree() > 0) {
        out.emplace_back(g, d);
        a = quo(a, g);
        h = rem(h, a);
      }
    }
    if (a.degree() > 0) out.emplace_back(a, a.degree());
    return out;
  }

  /// Cantor-Zassenhaus splitting of a monic product of irreducibles of degree d (odd p).
  template <class Rng>
  std::vector<Poly> equal_degree(const Poly& a, int d, Rng& rng) const {
    if (a.degree() == d) return {a};
    const BigInt p = f_.modulus();
    if (p == 2) throw std::invalid_argument("equal-degree splitting needs odd p");
    const BigInt e = (big_pow(p, static_cast<unsigned long>(d)) - 1) / 2;
    while (true) {
      std::vector<Elem> rc(a.degree());
      for (auto& v : rc) v = f_.random(rng);
      Poly r = make(std::move(rc));
      if (r.degree() <= 0) continue;
      Poly g = gcd(a, r);
      if (g.degree() <= 0) {
        Poly s = sub(powmod(r, e, a), one());
        g = gcd(a, s);
      }
      if (g.degree() > 0 && g.degree() < a.degree()) {
        auto left = equal_degree(g, d, rng);
        auto right = equal_degree(quo(a, g), d, rng);
        left.insert(left.end(), right.begin(), right.end());
        return left;
      }
    }
  }

  /// Monic irreducible factors of a monic squarefree polynomial (odd p).
  template <class Rng>
  std::vector<Poly> factor_squarefree(const Poly& a, Rng& rng) const {
    std::vector<Poly> out;
    for (const auto& [g, d] : distinct_degree(a)) {
      auto parts = equal_degree(g, d, rng);
      out.insert(out.end(), parts.begin(), parts.end());
    }
    return out;
  }

  /// Roots in F_p of a nonzero polynomial (without multiplicity).
  template <class Rng>
  std::vector<Elem> roots(const Poly& a, Rng& rng) const {
    const Poly m = monic(a);
    if (m.degree() <= 0) return {};
    const BigInt p = f_.modulus();
    Poly g = gcd(m, sub(powmod(x(), p, m), x()));
    std::vector<Elem> out;
    if (g.degree() <= 0) return out;
    if (p == 2) {
      for (long v = 0; v < 2; ++v)
        if (f_.is_zero(eval(g, f_.from(v)))) out.push_back(f_.from(v));
      return out;
    }
    for (const auto& l : equal_degree(g, 1, rng)) out.push_back(f_.neg(l.c[0]));
    return out;
  }

 private:
  F f_;
};

}  // namespace ramlab
