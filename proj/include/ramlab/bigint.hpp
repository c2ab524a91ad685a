#pragma once

// Exact integers and rationals. Backed by GMP's C++ classes.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ramlab {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

inline BigRat make_rat(long num) { return BigRat(num); }

/// Parses "p", "-p", or "p/q" (decimal). Throws std::invalid_argument.
inline BigRat parse_rational(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("empty rational");
  s = s.substr(first, last - first + 1);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto check_digits = [&](const std::string& part) {
    std::size_t i = (!part.empty() && part[0] == '-') ? 1 : 0;
    if (i == part.size()) throw std::invalid_argument("malformed rational: " + std::string(text));
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw std::invalid_argument("malformed rational: " + std::string(text));
  };
  if (slash == std::string::npos) {
    check_digits(s);
    return BigRat(BigInt(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  check_digits(num);
  check_digits(den);
  if (den[0] == '-') throw std::invalid_argument("negative denominator: " + std::string(text));
  BigInt d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return make_rat(BigInt(num), d);
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const BigRat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigRat rat_pow(const BigRat& base, long exp) {
  BigRat b = base;
  if (exp < 0) {
    if (b == 0) throw std::domain_error("zero to a negative power");
    b = 1 / b;
    exp = -exp;
  }
  BigRat r(1);
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

inline BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

/// Exact quotient; caller guarantees divisibility.
inline BigInt div_exact(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Non-negative residue of a modulo m (m > 0).
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool fits_u64(const BigInt& v) {
  return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigInt& v) {
  if (!fits_u64(v)) throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

inline BigInt from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

/// Multiplicity of p in n (n != 0, p > 1); divides n by that power in place.
inline long remove_factor(BigInt& n, const BigInt& p) {
  BigInt r;
  auto count = mpz_remove(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  n = r;
  return static_cast<long>(count);
}

inline long int_valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  BigInt m = n;
  return remove_factor(m, p);
}

/// Chinese remaindering of x = r1 mod m1, x = r2 mod m2 with coprime moduli.
inline BigInt crt_pair(const BigInt& r1, const BigInt& m1, const BigInt& r2, const BigInt& m2) {
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t()) == 0)
    throw std::domain_error("crt moduli not coprime");
  BigInt k = mod_floor(BigInt((r2 - r1) * inv), m2);
  return mod_floor(BigInt(r1 + m1 * k), BigInt(m1 * m2));
}

}  // namespace ramlab
