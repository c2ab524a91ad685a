#pragma once

// Bivariate polynomials f(t, X) over Q, stored sparsely as (i, j) -> coefficient of t^i X^j.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ramlab/poly.hpp"

namespace ramlab {

class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (power of t, power of X)

  BiPoly() = default;

  void add_term(int i, int j, const BigRat& c) {
    if (i < 0 || j < 0) throw std::invalid_argument("BiPoly: negative exponent");
    if (c == 0) return;
    BigRat& slot = terms_[{i, j}];
    slot += c;
    if (slot == 0) terms_.erase({i, j});
  }

  /// sum_j coeffs[j](t) X^j
  static BiPoly from_x_coeffs(const std::vector<UniPoly>& coeffs) {
    BiPoly f;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      for (std::size_t i = 0; i < coeffs[j].coeffs().size(); ++i)
        f.add_term(static_cast<int>(i), static_cast<int>(j), coeffs[j].coeffs()[i]);
    return f;
  }

  /// A(X) + t B(X)
  static BiPoly linear_in_t(const UniPoly& A, const UniPoly& B) {
    BiPoly f;
    for (std::size_t j = 0; j < A.coeffs().size(); ++j) f.add_term(0, static_cast<int>(j), A.coeffs()[j]);
    for (std::size_t j = 0; j < B.coeffs().size(); ++j) f.add_term(1, static_cast<int>(j), B.coeffs()[j]);
    return f;
  }

  const std::map<Key, BigRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int deg_t() const {
    int d = -1;
    for (const auto& [k, v] : terms_) d = std::max(d, k.first);
    return d;
  }
  int deg_x() const {
    int d = -1;
    for (const auto& [k, v] : terms_) d = std::max(d, k.second);
    return d;
  }

  /// Coefficient of X^j as a polynomial in t.
  UniPoly coeff_x(int j) const {
    std::vector<BigRat> c(std::max(deg_t() + 1, 0));
    for (const auto& [k, v] : terms_)
      if (k.second == j) c[k.first] = v;
    return UniPoly(std::move(c));
  }

  std::vector<UniPoly> x_coeffs() const {
    std::vector<UniPoly> out;
    for (int j = 0; j <= deg_x(); ++j) out.push_back(coeff_x(j));
    return out;
  }

  UniPoly lc_x() const { return coeff_x(deg_x()); }

  /// f(a, X).
  UniPoly specialize_t(const BigRat& a) const {
    std::vector<BigRat> c(std::max(deg_x() + 1, 0));
    for (const auto& [k, v] : terms_) c[k.second] += v * rat_pow(a, k.first);
    return UniPoly(std::move(c));
  }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  std::string to_string(const std::string& tvar = "t", const std::string& xvar = "X") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto [i, j] = it->first;
      const BigRat& v = it->second;
      os << (first ? (v < 0 ? "-" : "") : (v < 0 ? " - " : " + "));
      first = false;
      const BigRat mag = abs(v);
      const bool mono = i > 0 || j > 0;
      if (mag != 1 || !mono) os << ramlab::to_string(mag) << (mono ? "*" : "");
      if (i > 0) os << tvar << (i > 1 ? "^" + std::to_string(i) : "") << (j > 0 ? "*" : "");
      if (j > 0) os << xvar << (j > 1 ? "^" + std::to_string(j) : "");
    }
    return os.str();
  }

 private:
  std::map<Key, BigRat> terms_;
};

/// Parses lines "i j p/q" (coefficient p/q of t^i X^j); '#' starts a comment.
inline BiPoly parse_bipoly(const std::string& text) {
  BiPoly f;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string a, b, c, extra;
    if (!(ls >> a)) continue;
    if (!(ls >> b >> c) || (ls >> extra))
      throw std::invalid_argument("bipoly line " + std::to_string(lineno) + ": expected 'i j p/q'");
    try {
      const int i = std::stoi(a), j = std::stoi(b);
      f.add_term(i, j, parse_rational(c));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("bipoly line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return f;
}

inline std::string format_bipoly(const BiPoly& f) {
  std::ostringstream os;
  for (const auto& [k, v] : f.terms()) os << k.first << " " << k.second << " " << to_string(v) << "\n";
  return os.str();
}

/// Newton interpolation through (xs[k], ys[k]) with distinct xs.
inline UniPoly interpolate(const std::vector<BigRat>& xs, const std::vector<BigRat>& ys) {
  const std::size_t n = xs.size();
  std::vector<BigRat> dd = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t k = n - 1; k >= level; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);
      if (k == level) break;
    }
  UniPoly acc;
  for (std::size_t k = n; k-- > 0;) acc = acc * UniPoly::linear_root(xs[k]) + UniPoly::constant(dd[k]);
  return acc;
}

namespace detail {

/// Integer points 0, 1, -1, 2, -2, ... at which `ok` holds, `count` of them.
template <class Pred>
std::vector<BigRat> good_points(std::size_t count, Pred ok) {
  std::vector<BigRat> out;
  for (long k = 0; out.size() < count; ++k) {
    const long v = (k % 2 == 0) ? -(k / 2) : (k + 1) / 2;
    const BigRat t(v);
    if (ok(t)) out.push_back(t);
  }
  return out;
}

}  // namespace detail

/// disc_X f as a polynomial in t, by evaluation at points where lc_X does not vanish and
/// interpolation; the degree is at most (2n-2) deg_t f.
inline UniPoly disc_x(const BiPoly& f) {
  const int n = f.deg_x();
  if (n < 1) throw std::domain_error("disc_x: degree in X must be positive");
  const UniPoly lc = f.lc_x();
  const std::size_t bound = static_cast<std::size_t>((2 * n - 2) * std::max(f.deg_t(), 0));
  const auto ts = detail::good_points(bound + 1, [&](const BigRat& t) { return lc.eval(t) != 0; });
  std::vector<BigRat> vs;
  for (const auto& t : ts) vs.push_back(discriminant(f.specialize_t(t)));
  return interpolate(ts, vs);
}

/// res_X(A, B) as a polynomial in t, using the formal X-degrees of A and B.
inline UniPoly resultant_x(const BiPoly& A, const BiPoly& B) {
  const int a = A.deg_x(), b = B.deg_x();
  if (a < 0 || b < 0) throw std::domain_error("resultant_x of zero");
  const UniPoly la = A.lc_x(), lb = B.lc_x();
  const std::size_t bound =
      static_cast<std::size_t>(a * std::max(B.deg_t(), 0) + b * std::max(A.deg_t(), 0));
  const auto ts = detail::good_points(bound + 1, [&](const BigRat& t) { return la.eval(t) != 0 && lb.eval(t) != 0; });
  std::vector<BigRat> vs;
  for (const auto& t : ts) vs.push_back(resultant(A.specialize_t(t), B.specialize_t(t)));
  return interpolate(ts, vs);
}

}  // namespace ramlab
