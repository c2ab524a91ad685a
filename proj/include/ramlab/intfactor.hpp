#pragma once

// Primality (Miller-Rabin), integer factorization (trial division, Pollard-Brent) and
// p-adic valuations.

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ramlab/bigint.hpp"

namespace ramlab {

struct IntFactorization {
  std::vector<std::pair<BigInt, int>> factors;  // ascending primes
  BigInt cofactor = 1;                          // unfactored part (> 1 only when incomplete)
  bool complete = true;

  std::vector<BigInt> primes() const {
    std::vector<BigInt> out;
    for (const auto& [p, e] : factors) out.push_back(p);
    return out;
  }
};

struct FactorOptions {
  std::uint64_t trial_bound = 1'000'000;
  std::uint64_t rho_budget = 20'000'000;  // total Pollard-Brent iterations
  std::uint64_t seed = 0xfac7;
};

namespace detail {

inline const std::vector<std::uint32_t>& small_primes(std::uint64_t bound) {
  static const std::vector<std::uint32_t> primes = [] {
    const std::uint32_t n = 1'000'000;
    std::vector<bool> comp(n + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= n; ++i) {
      if (comp[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j <= n; j += i) comp[j] = true;
    }
    return out;
  }();
  if (bound > 1'000'000) throw std::invalid_argument("trial bound above 10^6");
  return primes;
}

inline bool miller_rabin_round(const BigInt& n, const BigInt& d, unsigned long s, const BigInt& a) {
  BigInt x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const BigInt nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == nm1) return true;
  }
  return false;
}

}  // namespace detail

/// Deterministic for n < 3.317e24 (witnesses: the primes up to 41); otherwise 64 rounds with
/// seeded random bases.
inline bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  static const unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned p : small) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  BigInt d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  static const BigInt det_bound("3317044064679887385961981");
  if (n < det_bound) {
    for (unsigned p : small)
      if (!detail::miller_rabin_round(n, d, s, BigInt(p))) return false;
    return true;
  }
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  gmp_randclass gen(gmp_randinit_default);
  gen.seed(static_cast<unsigned long>(rng()));
  const BigInt range = n - 3;
  for (int round = 0; round < 64; ++round) {
    const BigInt a = gen.get_z_range(range) + 2;
    if (!detail::miller_rabin_round(n, d, s, a)) return false;
  }
  return true;
}

namespace detail {

/// Pollard-Brent; returns a nontrivial factor or 0 when the budget runs out.
inline BigInt pollard_brent(const BigInt& n, std::uint64_t& budget, std::mt19937_64& rng) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  while (budget > 0) {
    const BigInt c = BigInt(static_cast<unsigned long>(rng() % 1'000'000 + 1));
    BigInt y = BigInt(static_cast<unsigned long>(rng() % 1'000'000 + 2)) % n;
    const std::uint64_t m = 128;
    BigInt g = 1, q = 1, x, ys;
    std::uint64_t r = 1;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      budget = budget > r ? budget - r : 0;
      std::uint64_t k = 0;
      do {
        ys = y;
        const std::uint64_t steps = std::min(r - k, m);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          q = q * big_abs(BigInt(x - y)) % n;
        }
        budget = budget > steps ? budget - steps : 0;
        g = big_gcd(q, n);
        k += steps;
      } while (k < r && g == 1 && budget > 0);
      r *= 2;
    } while (g == 1 && budget > 0);
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = big_gcd(big_abs(BigInt(x - ys)), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

}  // namespace detail

/// Factorization of |n|. Trial division up to the bound, then Pollard-Brent with an
/// iteration budget; leftover composites make the result incomplete.
inline IntFactorization factor_integer(const BigInt& n_in, const FactorOptions& opt = {}) {
  if (n_in == 0) throw std::domain_error("factor_integer of zero");
  IntFactorization out;
  BigInt n = big_abs(n_in);
  std::vector<std::pair<BigInt, int>> found;
  for (std::uint32_t p : detail::small_primes(opt.trial_bound)) {
    if (p > opt.trial_bound) break;
    if (BigInt(p) * p > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      const int e = static_cast<int>(remove_factor(n, BigInt(p)));
      found.emplace_back(BigInt(p), e);
    }
  }
  std::uint64_t budget = opt.rho_budget;
  std::mt19937_64 rng(opt.seed);
  std::vector<BigInt> stack;
  if (n > 1) stack.push_back(n);
  BigInt cofactor = 1;
  while (!stack.empty()) {
    BigInt m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (is_prime(m)) {
      found.emplace_back(m, 1);
      continue;
    }
    // peel off perfect powers before running rho
    BigInt root;
    bool split = false;
    for (unsigned long k = 2; k <= 64 && !split; ++k)
      if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) {
        for (unsigned long i = 0; i < k; ++i) stack.push_back(root);
        split = true;
      }
    if (split) continue;
    BigInt f = detail::pollard_brent(m, budget, rng);
    if (f == 0) {
      cofactor *= m;
      continue;
    }
    stack.push_back(f);
    stack.push_back(div_exact(m, f));
  }
  std::sort(found.begin(), found.end());
  for (const auto& [p, e] : found) {
    if (!out.factors.empty() && out.factors.back().first == p)
      out.factors.back().second += e;
    else
      out.factors.emplace_back(p, e);
  }
  out.cofactor = cofactor;
  out.complete = cofactor == 1;
  return out;
}

/// v_p(x) = v_p(num) - v_p(den); p must be prime.
inline long padic_valuation(const BigRat& x, const BigInt& p) {
  if (x == 0) throw std::domain_error("valuation of zero");
  if (!is_prime(p)) throw std::invalid_argument("padic_valuation: " + p.get_str() + " is not prime");
  return int_valuation(x.get_num(), p) - int_valuation(x.get_den(), p);
}

}  // namespace ramlab
