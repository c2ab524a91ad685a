#pragma once

// Covers of the t-line: a bivariate polynomial f(t, X) or a rational map t = p(x)/q(x).
// Branch points and ramification types.

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ramlab/bipoly.hpp"
#include "ramlab/factor_poly.hpp"

namespace ramlab {

struct GroupHint {
  std::string name;
  BigInt order;
};

struct Cover {
  enum class Kind { poly, ratmap };
  Kind kind = Kind::poly;
  BiPoly f;    // poly: f(t, X)
  UniPoly p, q;  // ratmap: t = p(x)/q(x)
  std::optional<GroupHint> hint;

  static Cover from_poly(BiPoly f, std::optional<GroupHint> hint = std::nullopt) {
    Cover c;
    c.kind = Kind::poly;
    c.f = std::move(f);
    c.hint = std::move(hint);
    c.validate();
    return c;
  }
  static Cover from_ratmap(UniPoly p, UniPoly q, std::optional<GroupHint> hint = std::nullopt) {
    Cover c;
    c.kind = Kind::ratmap;
    c.p = std::move(p);
    c.q = std::move(q);
    c.hint = std::move(hint);
    c.validate();
    return c;
  }

  int degree() const { return kind == Kind::poly ? f.deg_x() : std::max(p.degree(), q.degree()); }

  /// The defining polynomial; p(X) - t q(X) for a rational map.
  BiPoly as_poly() const {
    if (kind == Kind::poly) return f;
    return BiPoly::linear_in_t(p, -q);
  }

  /// f(a, X).
  UniPoly specialize(const BigRat& a) const {
    if (kind == Kind::poly) return f.specialize_t(a);
    return p - a * q;
  }

  /// For a poly cover of the form A(X) + t B(X), the equivalent rational map t = -A/B.
  std::optional<Cover> linear_ratmap() const {
    if (kind == Kind::ratmap) return *this;
    if (f.deg_t() != 1) return std::nullopt;
    std::vector<BigRat> a(f.deg_x() + 1), b(f.deg_x() + 1);
    for (const auto& [k, v] : f.terms()) (k.first == 0 ? a : b)[k.second] = v;
    return from_ratmap(-UniPoly(a), UniPoly(b), hint);
  }

 private:
  void validate() const {
    if (kind == Kind::poly) {
      if (f.deg_x() < 1) throw std::invalid_argument("cover polynomial must have positive degree in X");
      if (f.deg_t() < 1) throw std::invalid_argument("cover polynomial must involve t");
      if (disc_x(f).is_zero()) throw std::invalid_argument("cover polynomial is inseparable in X");
    } else {
      if (q.is_zero()) throw std::invalid_argument("rational map with zero denominator");
      if (std::max(p.degree(), q.degree()) < 1) throw std::invalid_argument("rational map is constant");
      if (gcd(p, q).degree() > 0) throw std::invalid_argument("rational map numerator and denominator share a factor");
    }
  }
};

inline std::vector<BigRat> parse_coefficient_line(const std::string& line) {
  std::vector<BigRat> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(parse_rational(tok));
  return out;
}

/// Cover file: first line "poly" or "ratmap"; optional "hint <name> <order>" line; then
/// BiPoly lines "i j p/q" (poly) or two lines of ascending coefficients of p and q (ratmap).
inline Cover parse_cover(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> body;
  std::optional<std::string> kind;
  std::optional<GroupHint> hint;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (!kind) {
      if (head != "poly" && head != "ratmap") throw std::invalid_argument("cover file must start with 'poly' or 'ratmap'");
      kind = head;
      continue;
    }
    if (head == "hint") {
      GroupHint h;
      std::string order;
      if (!(ls >> h.name >> order)) throw std::invalid_argument("hint line: expected 'hint <name> <order>'");
      h.order = BigInt(order);
      hint = h;
      continue;
    }
    body.push_back(line);
  }
  if (!kind) throw std::invalid_argument("empty cover file");
  if (*kind == "poly") {
    std::string joined;
    for (const auto& l : body) joined += l + "\n";
    return Cover::from_poly(parse_bipoly(joined), hint);
  }
  if (body.size() != 2) throw std::invalid_argument("ratmap cover needs exactly two coefficient lines");
  return Cover::from_ratmap(UniPoly(parse_coefficient_line(body[0])), UniPoly(parse_coefficient_line(body[1])), hint);
}

inline Cover load_cover(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cover file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_cover(ss.str());
}

struct BranchPoint {
  enum class Kind { rational, algebraic, infinity };
  Kind kind = Kind::rational;
  BigRat value;     // rational kind
  UniPoly minpoly;  // integral primitive polynomial in t (finite kinds)
  bool certified = true;  // false: a discriminant root whose ramification was not decided

  static BranchPoint infinity() {
    BranchPoint b;
    b.kind = Kind::infinity;
    return b;
  }
  /// Finite point(s) given by an irreducible polynomial in t.
  static BranchPoint from_factor(const UniPoly& h) {
    BranchPoint b;
    b.minpoly = integral_primitive(h);
    if (h.degree() == 1) {
      b.kind = Kind::rational;
      b.value = -h.coeff(0) / h.coeff(1);
    } else {
      b.kind = Kind::algebraic;
    }
    return b;
  }
  static BranchPoint rational_point(const BigRat& v) { return from_factor(UniPoly::linear_root(v)); }

  /// Number of geometric points this entry stands for.
  int geometric_count() const { return kind == Kind::algebraic ? minpoly.degree() : 1; }

  bool contains(const BigRat& a) const { return kind != Kind::infinity && minpoly.eval(a) == 0; }

  std::string label() const {
    switch (kind) {
      case Kind::infinity: return "inf";
      case Kind::rational: return to_string(value);
      case Kind::algebraic: return "root of " + minpoly.to_string("t");
    }
    return "?";
  }

  friend bool operator==(const BranchPoint& a, const BranchPoint& b) {
    return a.kind == b.kind && (a.kind == Kind::infinity || a.minpoly == b.minpoly);
  }
};

struct RamificationEntry {
  BranchPoint point;
  std::vector<int> indices;  // over one geometric point; descending, sums to the degree
  std::uint64_t e = 1;       // lcm of indices
};

struct RamificationType {
  int degree = 0;
  std::vector<RamificationEntry> entries;

  /// sum over geometric branch points of sum(index - 1); 2 deg - 2 for a genus-0 cover.
  long riemann_hurwitz_sum() const {
    long s = 0;
    for (const auto& en : entries) {
      long local = 0;
      for (int i : en.indices) local += i - 1;
      s += local * en.point.geometric_count();
    }
    return s;
  }
  int geometric_branch_point_count() const {
    int n = 0;
    for (const auto& en : entries) n += en.point.geometric_count();
    return n;
  }
};

namespace detail {

/// Removes from w every root shared with q.
inline UniPoly strip_common_roots(UniPoly w, const UniPoly& q) {
  while (true) {
    const UniPoly g = gcd(w, q);
    if (g.degree() <= 0) return w;
    w = w / g;
  }
}

inline bool point_less(const BranchPoint& a, const BranchPoint& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.kind == BranchPoint::Kind::rational) return a.value < b.value;
  if (a.kind == BranchPoint::Kind::infinity) return false;
  if (a.minpoly.degree() != b.minpoly.degree()) return a.minpoly.degree() < b.minpoly.degree();
  return a.minpoly.coeffs() < b.minpoly.coeffs();
}

inline bool entry_less(const RamificationEntry& a, const RamificationEntry& b) { return point_less(a.point, b.point); }

inline void finish_entry(RamificationEntry& en, int degree) {
  int sum = std::accumulate(en.indices.begin(), en.indices.end(), 0);
  if (sum > degree) throw std::logic_error("ramification indices exceed the cover degree");
  while (sum < degree) {
    en.indices.push_back(1);
    ++sum;
  }
  std::sort(en.indices.rbegin(), en.indices.rend());
  en.e = 1;
  for (int i : en.indices) en.e = std::lcm(en.e, static_cast<std::uint64_t>(i));
}

/// Exact ramification type of t = p/q.
inline RamificationType ratmap_type(const UniPoly& p, const UniPoly& q, const PolyFactorOptions& opt) {
  const int d = std::max(p.degree(), q.degree());
  RamificationType rt;
  rt.degree = d;
  std::vector<RamificationEntry> finite;
  auto entry_for = [&](const UniPoly& h) -> RamificationEntry& {
    const BranchPoint bp = BranchPoint::from_factor(h);
    for (auto& en : finite)
      if (en.point == bp) return en;
    finite.push_back({bp, {}, 1});
    return finite.back();
  };

  // finite critical points: roots of W = p'q - pq' that are not poles
  const UniPoly W = strip_common_roots(p.derivative() * q - p * q.derivative(), q);
  const BiPoly pt = BiPoly::linear_in_t(p, -q);
  for (const auto& [g, m] : squarefree_decomposition(W)) {
    // R(t) = res_x(g, p - t q) vanishes at the critical values of the roots of g, with
    // multiplicity = number of those roots over each value
    BiPoly G;
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) G.add_term(0, static_cast<int>(j), g.coeffs()[j]);
    const UniPoly R = resultant_x(G, pt);
    for (const auto& [h, k] : factor_rational_poly(R, opt)) {
      auto& en = entry_for(h);
      for (int c = 0; c < k; ++c) en.indices.push_back(m + 1);
    }
  }
  // x = infinity when it maps to a finite value
  if (p.degree() < q.degree()) {
    entry_for(UniPoly::x()).indices.push_back(q.degree() - p.degree());
  } else if (p.degree() == q.degree()) {
    const BigRat t0 = p.lc() / q.lc();
    const int k = q.degree() - (p - t0 * q).degree();
    entry_for(UniPoly::linear_root(t0)).indices.push_back(k);
  }
  // fiber over t = infinity: poles of p/q, and x = infinity when deg p > deg q
  RamificationEntry inf{BranchPoint::infinity(), {}, 1};
  for (const auto& [g, m] : squarefree_decomposition(q))
    for (int c = 0; c < g.degree(); ++c) inf.indices.push_back(m);
  if (p.degree() > q.degree()) inf.indices.push_back(p.degree() - q.degree());

  for (auto& en : finite) finish_entry(en, d);
  finish_entry(inf, d);
  std::sort(finite.begin(), finite.end(), entry_less);
  for (auto& en : finite)
    if (en.e > 1) rt.entries.push_back(std::move(en));
  if (inf.e > 1) rt.entries.push_back(std::move(inf));
  return rt;
}

/// v_infinity of disc_X f after the substitution t = 1/s, X = Y s^-w that keeps the leading
/// X-coefficient a unit at s = 0.
inline long disc_valuation_at_infinity(const BiPoly& f, const UniPoly& disc) {
  const int n = f.deg_x();
  const auto coeffs = f.x_coeffs();
  const long dn = coeffs[n].degree();
  long w = 0;
  for (int j = 0; j < n; ++j) {
    if (coeffs[j].is_zero()) continue;
    const long num = coeffs[j].degree() - dn, den = n - j;
    w = std::max(w, num > 0 ? (num + den - 1) / den : 0L);
  }
  return (2L * n - 2) * dn + static_cast<long>(n) * (n - 1) * w - disc.degree();
}

}  // namespace detail

/// Exact ramification type for rational maps, t-linear polynomial covers and covers of
/// degree 2 in X. Other polynomial covers raise std::invalid_argument.
inline RamificationType ramification_indices(const Cover& c, const PolyFactorOptions& opt = {}) {
  if (auto r = c.linear_ratmap()) return detail::ratmap_type(r->p, r->q, opt);
  if (c.f.deg_x() == 2) {
    // splitting field K(t)(sqrt(disc)): ramified exactly where disc has odd valuation
    const UniPoly D = disc_x(c.f);
    RamificationType rt;
    rt.degree = 2;
    for (const auto& [h, m] : factor_rational_poly(D, opt))
      if (m % 2 == 1) rt.entries.push_back({BranchPoint::from_factor(h), {2}, 2});
    std::sort(rt.entries.begin(), rt.entries.end(), detail::entry_less);
    if (D.degree() % 2 == 1) rt.entries.push_back({BranchPoint::infinity(), {2}, 2});
    return rt;
  }
  throw std::invalid_argument(
      "ramification_indices: polynomial covers are supported when linear in t or of degree 2 in X");
}

/// Branch points. Exact whenever ramification_indices is; otherwise every irreducible factor
/// of disc_X(f) * lc_X(f) is reported, certified when the discriminant has odd valuation there.
inline std::vector<BranchPoint> branch_points(const Cover& c, const PolyFactorOptions& opt = {}) {
  std::vector<BranchPoint> out;
  if (c.linear_ratmap() || c.f.deg_x() == 2) {
    for (const auto& en : ramification_indices(c, opt).entries) out.push_back(en.point);
    return out;
  }
  const UniPoly D = disc_x(c.f);
  const UniPoly lc = c.f.lc_x();
  std::map<std::vector<BigRat>, std::pair<UniPoly, int>> cand;  // keyed by monic factor
  for (const auto& [h, m] : factor_rational_poly(D, opt)) cand[h.coeffs()] = {h, m};
  if (lc.degree() > 0)
    for (const auto& [h, m] : factor_rational_poly(lc, opt))
      if (!cand.count(h.coeffs())) cand[h.coeffs()] = {h, 0};
  for (const auto& [key, hm] : cand) {
    BranchPoint bp = BranchPoint::from_factor(hm.first);
    bp.certified = hm.second % 2 == 1 && lc.eval(0) != 0 && (lc.degree() <= 0 || gcd(lc, hm.first).degree() == 0);
    out.push_back(bp);
  }
  std::sort(out.begin(), out.end(), detail::point_less);
  const long v = detail::disc_valuation_at_infinity(c.f, D);
  if (v > 0) {
    BranchPoint inf = BranchPoint::infinity();
    inf.certified = v % 2 == 1;
    out.push_back(inf);
  }
  return out;
}

}  // namespace ramlab
