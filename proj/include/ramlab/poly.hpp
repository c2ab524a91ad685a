#pragma once

// Univariate polynomials over Q, with integer-polynomial helpers for subresultants.
//
// Resultant convention: res(f, g) = lc(f)^deg(g) * prod over roots a of f of g(a), which is
// the Sylvester determinant with f's rows first. So res(X-1, X-2) = -1.

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ramlab/bigint.hpp"

namespace ramlab {

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static UniPoly constant(const BigRat& v) { return UniPoly(std::vector<BigRat>{v}); }
  static UniPoly monomial(const BigRat& v, std::size_t k) {
    std::vector<BigRat> c(k + 1);
    c[k] = v;
    return UniPoly(std::move(c));
  }
  static UniPoly x() { return monomial(1, 1); }
  /// (X - r)
  static UniPoly linear_root(const BigRat& r) { return UniPoly(std::vector<BigRat>{-r, 1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<BigRat>& coeffs() const { return c_; }
  BigRat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRat(0); }
  const BigRat& lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  BigRat eval(const BigRat& x) const {
    BigRat acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  UniPoly derivative() const {
    std::vector<BigRat> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return UniPoly(std::move(d));
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    UniPoly out = *this;
    const BigRat l = lc();
    for (auto& v : out.c_) v /= l;
    return out;
  }

  UniPoly operator-() const {
    UniPoly out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<BigRat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const BigRat& s, const UniPoly& a) {
    std::vector<BigRat> c = a.c_;
    for (auto& v : c) v *= s;
    return UniPoly(std::move(c));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder over Q.
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<BigRat> r = a.c_;
    const int db = b.degree();
    if (a.degree() < db) return {UniPoly{}, a};
    std::vector<BigRat> q(a.degree() - db + 1);
    for (int i = a.degree(); i >= db; --i) {
      const BigRat f = r[i] / b.c_[db];
      q[i - db] = f;
      if (f == 0) continue;
      for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
    }
    r.resize(db);
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
  }
  friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

  std::string to_string(const std::string& var = "X") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const BigRat& v = c_[i];
      if (v == 0) continue;
      BigRat mag = abs(v);
      if (first) {
        if (v < 0) os << "-";
      } else {
        os << (v < 0 ? " - " : " + ");
      }
      first = false;
      const bool unit = mag == 1;
      if (!unit || i == 0) os << ramlab::to_string(mag);
      if (i > 0) {
        if (!unit) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  std::vector<BigRat> c_;
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

inline UniPoly pow(const UniPoly& f, unsigned k) {
  UniPoly r = UniPoly::constant(1), b = f;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

/// f(g(X)).
inline UniPoly compose(const UniPoly& f, const UniPoly& g) {
  UniPoly acc;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * g + UniPoly::constant(f.coeffs()[i]);
  return acc;
}

/// X^n f(1/X) for n >= deg f.
inline UniPoly reverse(const UniPoly& f, std::size_t n) {
  if (f.degree() > static_cast<int>(n)) throw std::invalid_argument("reverse: n below degree");
  std::vector<BigRat> c(n + 1);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) c[n - i] = f.coeffs()[i];
  return UniPoly(std::move(c));
}

/// f(X + s).
inline UniPoly shift(const UniPoly& f, const BigRat& s) { return compose(f, UniPoly(std::vector<BigRat>{s, 1})); }

// ---- integer polynomials -------------------------------------------------------------

using ZPoly = std::vector<BigInt>;  // ascending, trimmed

namespace zpoly {

inline void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

inline BigInt content(const ZPoly& a) {
  BigInt g = 0;
  for (const auto& v : a) g = big_gcd(g, v);
  return g;
}

/// Divides by the content and makes the leading coefficient positive.
inline ZPoly primitive(ZPoly a) {
  trim(a);
  if (a.empty()) return a;
  BigInt g = content(a);
  if (a.back() < 0) g = -g;
  for (auto& v : a) v = div_exact(v, g);
  return a;
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
inline ZPoly prem(ZPoly a, const ZPoly& b) {
  const int db = deg(b);
  if (db < 0) throw std::domain_error("prem by zero");
  int da = deg(a);
  if (da < db) return a;
  const BigInt& l = b.back();
  int e = da - db + 1;
  while (da >= db) {
    const BigInt lead = a[da];
    for (auto& v : a) v *= l;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= lead * b[j];
    --e;
    trim(a);
    da = deg(a);
  }
  if (e > 0) {
    const BigInt m = big_pow(l, static_cast<unsigned long>(e));
    for (auto& v : a) v *= m;
  }
  return a;
}

/// Exact quotient of a by b over Z, or false if b does not divide a.
inline bool divides(const ZPoly& b, const ZPoly& a, ZPoly* quotient = nullptr) {
  if (b.empty()) throw std::domain_error("divides: zero divisor");
  ZPoly r = a;
  const int db = deg(b);
  if (deg(r) < db) {
    if (quotient) quotient->clear();
    return r.empty();
  }
  ZPoly q(deg(r) - db + 1);
  for (int i = deg(r); i >= db; --i) {
    if (r[i] == 0) continue;
    BigInt f;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    f = div_exact(r[i], b.back());
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
  }
  trim(r);
  if (!r.empty()) return false;
  trim(q);
  if (quotient) *quotient = std::move(q);
  return true;
}

/// Primitive gcd over Z (positive leading coefficient).
inline ZPoly gcd(ZPoly a, ZPoly b) {
  trim(a);
  trim(b);
  if (a.empty()) return primitive(b);
  if (b.empty()) return primitive(a);
  const BigInt c = big_gcd(content(a), content(b));
  a = primitive(a);
  b = primitive(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = prem(a, b);
    a = std::move(b);
    b = primitive(std::move(r));
  }
  a = primitive(a);
  for (auto& v : a) v *= c;
  return a;
}

inline BigInt eval(const ZPoly& a, const BigInt& x) {
  BigInt acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
  return acc;
}

}  // namespace zpoly

/// Writes f = scale * z with z an integer polynomial of content 1 and positive leading
/// coefficient. Returns scale.
inline BigRat to_primitive_z(const UniPoly& f, ZPoly& z) {
  z.clear();
  if (f.is_zero()) return 0;
  BigInt den = 1;
  for (const auto& v : f.coeffs()) den = big_lcm(den, v.get_den());
  for (const auto& v : f.coeffs()) z.push_back(v.get_num() * div_exact(den, v.get_den()));
  const BigInt c = zpoly::content(z) * (z.back() < 0 ? -1 : 1);
  for (auto& v : z) v = div_exact(v, c);
  return make_rat(c, den);
}

inline UniPoly from_z(const ZPoly& z) {
  std::vector<BigRat> c;
  for (const auto& v : z) c.emplace_back(v);
  return UniPoly(std::move(c));
}

/// Integer polynomial with content 1 and positive leading coefficient, as a UniPoly.
inline UniPoly integral_primitive(const UniPoly& f) {
  ZPoly z;
  to_primitive_z(f, z);
  return from_z(z);
}

/// Monic gcd over Q (zero when both inputs are zero).
inline UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  ZPoly za, zb;
  to_primitive_z(a, za);
  to_primitive_z(b, zb);
  return from_z(zpoly::gcd(za, zb)).monic();
}

namespace detail {

// Subresultant PRS resultant of integer polynomials (Cohen, Algorithm 3.3.7).
inline BigInt resultant_z(ZPoly A, ZPoly B) {
  zpoly::trim(A);
  zpoly::trim(B);
  if (A.empty() || B.empty()) return 0;
  int s = 1;
  if (zpoly::deg(A) < zpoly::deg(B)) {
    std::swap(A, B);
    if ((zpoly::deg(A) % 2 == 1) && (zpoly::deg(B) % 2 == 1)) s = -1;
  }
  if (zpoly::deg(B) == 0) return s * big_pow(B[0], static_cast<unsigned long>(zpoly::deg(A)));
  const BigInt a = zpoly::content(A), b = zpoly::content(B);
  for (auto& v : A) v = div_exact(v, a);
  for (auto& v : B) v = div_exact(v, b);
  const BigInt t = big_pow(a, static_cast<unsigned long>(zpoly::deg(B))) *
                   big_pow(b, static_cast<unsigned long>(zpoly::deg(A)));
  BigInt g = 1, h = 1;
  while (true) {
    const int delta = zpoly::deg(A) - zpoly::deg(B);
    if ((zpoly::deg(A) % 2 == 1) && (zpoly::deg(B) % 2 == 1)) s = -s;
    ZPoly R = zpoly::prem(A, B);
    A = std::move(B);
    if (R.empty()) return 0;
    const BigInt divisor = g * big_pow(h, static_cast<unsigned long>(delta));
    for (auto& v : R) v = div_exact(v, divisor);
    B = std::move(R);
    g = A.back();
    // h <- h^(1-delta) g^delta
    if (delta == 0) {
      // h unchanged
    } else {
      h = div_exact(big_pow(g, static_cast<unsigned long>(delta)), big_pow(h, static_cast<unsigned long>(delta - 1)));
    }
    if (zpoly::deg(B) <= 0) break;
  }
  const int dA = zpoly::deg(A);
  // h <- lc(B)^deg(A) h^(1 - deg(A))
  const BigInt hh = div_exact(big_pow(B.back(), static_cast<unsigned long>(dA)), big_pow(h, static_cast<unsigned long>(dA - 1)));
  return s * t * hh;
}

}  // namespace detail

inline BigInt resultant(const ZPoly& f, const ZPoly& g) { return detail::resultant_z(f, g); }

/// res(f, g) over Q; see the convention at the top of this file.
inline BigRat resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant of the zero polynomial");
  if (f.degree() == 0) return rat_pow(f.lc(), g.degree());
  if (g.degree() == 0) return rat_pow(g.lc(), f.degree());
  ZPoly zf, zg;
  const BigRat cf = to_primitive_z(f, zf), cg = to_primitive_z(g, zg);
  return rat_pow(cf, g.degree()) * rat_pow(cg, f.degree()) * BigRat(detail::resultant_z(zf, zg));
}

/// (-1)^(n(n-1)/2) res(f, f') / lc(f). Degree-0 input has discriminant 1.
inline BigRat discriminant(const UniPoly& f) {
  const int n = f.degree();
  if (n < 0) throw std::domain_error("discriminant of the zero polynomial");
  if (n == 0) return 1;
  if (n == 1) return 1;
  BigRat r = resultant(f, f.derivative()) / f.lc();
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

/// Yun's algorithm: f = lc(f) * prod g_i^m_i with monic, squarefree, pairwise coprime g_i,
/// returned by increasing multiplicity.
inline std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  std::vector<std::pair<UniPoly, int>> out;
  if (f.degree() == 0) return out;
  const UniPoly df = f.derivative();
  const UniPoly a0 = gcd(f, df);
  UniPoly b = f.monic() / a0;
  UniPoly c = (1 / f.lc()) * df / a0;
  UniPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const UniPoly a = gcd(b, d);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a, i);
  }
  return out;
}

inline UniPoly squarefree_part(const UniPoly& f) {
  UniPoly p = UniPoly::constant(1);
  for (const auto& [g, m] : squarefree_decomposition(f)) p = p * g;
  return p;
}

inline bool is_squarefree(const UniPoly& f) { return gcd(f, f.derivative()).degree() == 0; }

}  // namespace ramlab
