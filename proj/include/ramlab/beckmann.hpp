#pragma once

// Specializations of covers: inertia prediction at primes, local unramifiedness checks,
// universally ramified primes, specialization search and pullback bookkeeping.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ramlab/cover.hpp"
#include "ramlab/intfactor.hpp"
#include "ramlab/modpoly.hpp"

namespace ramlab {

inline std::uint64_t abhyankar_index(std::uint64_t e1, std::uint64_t e2) {
  if (e1 == 0 || e2 == 0) throw std::invalid_argument("abhyankar_index: indices must be positive");
  return e1 / std::gcd(e1, e2);
}

// ---------------------------------------------------------------------------------------
// ramification-type bookkeeping

struct TypeEntry {
  std::string label;  // empty: an unnamed branch point
  std::uint64_t e = 1;
  friend bool operator==(const TypeEntry&, const TypeEntry&) = default;
};

inline std::string normalize_point_label(const std::string& s) {
  if (s.empty()) return s;
  if (s == "inf" || s == "infinity" || s == "oo" || s == "∞") return "inf";
  return to_string(parse_rational(s));
}

/// "2,2,3@inf,5@0" -> entries; a label after '@' names the branch point.
inline std::vector<TypeEntry> parse_type(const std::string& text) {
  std::vector<TypeEntry> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t("));
    item.erase(item.find_last_not_of(" \t)") + 1);
    if (item.empty()) throw std::invalid_argument("ramification type: empty entry");
    TypeEntry en;
    const auto at = item.find('@');
    const std::string num = item.substr(0, at);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("ramification type: bad index '" + num + "'");
    en.e = std::stoull(num);
    if (en.e == 0) throw std::invalid_argument("ramification type: index must be positive");
    if (at != std::string::npos) en.label = normalize_point_label(item.substr(at + 1));
    out.push_back(en);
  }
  if (out.empty()) throw std::invalid_argument("ramification type: no entries");
  return out;
}

inline std::string format_type(const std::vector<TypeEntry>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i].e);
    if (!t[i].label.empty()) s += "@" + t[i].label;
  }
  return s + ")";
}

/// Entries of a computed type; an algebraic branch point contributes one entry per conjugate.
inline std::vector<TypeEntry> type_entries(const RamificationType& rt) {
  std::vector<TypeEntry> out;
  for (const auto& en : rt.entries) {
    const bool named = en.point.kind != BranchPoint::Kind::algebraic;
    for (int k = 0; k < en.point.geometric_count(); ++k) out.push_back({named ? en.point.label() : "", en.e});
  }
  return out;
}

/// Type after pulling back along a degree-d cyclic cover of the line totally ramified over
/// the two points in `at` (u^d = c t). Other branch points split into d points with the same
/// index; at the distinguished points e becomes abhyankar_index(e, d) and disappears at 1.
inline std::vector<TypeEntry> pullback_type(const std::vector<TypeEntry>& type, std::uint64_t d,
                                            const std::pair<std::string, std::string>& at) {
  if (d < 2) throw std::invalid_argument("pullback_type: degree must be at least 2");
  const std::string a = normalize_point_label(at.first), b = normalize_point_label(at.second);
  if (a.empty() || b.empty() || a == b) throw std::invalid_argument("pullback_type: need two distinct points");
  std::set<std::string> seen;
  for (const auto& en : type) {
    if (en.e == 0) throw std::invalid_argument("pullback_type: index must be positive");
    if (!en.label.empty() && !seen.insert(en.label).second)
      throw std::invalid_argument("pullback_type: point " + en.label + " listed twice");
  }
  std::vector<TypeEntry> out, tail;
  for (const auto& en : type) {
    if (en.label == a || en.label == b) {
      const std::uint64_t e = abhyankar_index(en.e, d);
      if (e > 1) tail.push_back({en.label, e});
    } else {
      for (std::uint64_t k = 0; k < d; ++k) out.push_back({"", en.e});
    }
  }
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

// ---------------------------------------------------------------------------------------
// intersection multiplicities

/// I_p(a, bp): v_p(a - b) for a rational point, v_p(g(a)) for a point with integral minimal
/// polynomial g, and max(0, -v_p(a)) at infinity (or -v_p(a) = v_p(1/a) when signed).
inline long intersection_multiplicity(const BigRat& a, const BranchPoint& bp, const BigInt& p,
                                      bool signed_at_infinity = false) {
  if (!is_prime(p)) throw std::invalid_argument("intersection_multiplicity: " + p.get_str() + " is not prime");
  if (bp.kind == BranchPoint::Kind::infinity) {
    if (a == 0) return 0;
    const long v = -padic_valuation(a, p);
    return signed_at_infinity ? v : std::max(0L, v);
  }
  if (bp.contains(a)) throw std::invalid_argument("intersection_multiplicity: a is the branch point");
  return padic_valuation(bp.minpoly.eval(a), p);
}

// ---------------------------------------------------------------------------------------
// local checks at a prime

enum class LocalVerdict { unramified, ramified, inconclusive };

inline std::string to_string(LocalVerdict v) {
  switch (v) {
    case LocalVerdict::unramified: return "unramified";
    case LocalVerdict::ramified: return "ramified";
    case LocalVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct UnramifiedCheck {
  LocalVerdict verdict = LocalVerdict::inconclusive;
  bool squarefree_mod_p = false;  // reduction squarefree of full degree
  bool degenerate = false;        // leading coefficient vanishes mod p
  bool unramified() const { return verdict == LocalVerdict::unramified; }
};

namespace detail {

inline LocalVerdict combine(LocalVerdict a, LocalVerdict b) {
  if (a == LocalVerdict::ramified || b == LocalVerdict::ramified) return LocalVerdict::ramified;
  if (a == LocalVerdict::inconclusive || b == LocalVerdict::inconclusive) return LocalVerdict::inconclusive;
  return LocalVerdict::unramified;
}

inline ZPoly taylor_shift(const ZPoly& f, const BigInt& c) {
  ZPoly r;
  for (std::size_t i = f.size(); i-- > 0;) {
    ZPoly next(r.size() + 1);
    for (std::size_t j = 0; j < r.size(); ++j) {
      next[j + 1] += r[j];
      next[j] += c * r[j];
    }
    next[0] += f[i];
    r = std::move(next);
  }
  zpoly::trim(r);
  return r;
}

class LocalCertifier {
 public:
  explicit LocalCertifier(const BigInt& p) : p_(p), ring_(BigPrimeField(p)), rng_(0x10ca1) {}

  /// Decides whether all roots of F (primitive, squarefree over Q) generate unramified
  /// extensions of Q_p.
  LocalVerdict run(const ZPoly& F) {
    const int n = zpoly::deg(F);
    LocalVerdict v = certify(F, 0, false);
    if (v != LocalVerdict::ramified && reduce_mod_p(ring_, F).degree() < n) {
      ZPoly rev(F.rbegin(), F.rend());
      v = combine(v, certify(rev, 0, true));
    }
    return v;
  }

 private:
  static constexpr int depth_cap = 64;

  // Roots of F in the residue disc of 0 only (only_zero) or of every p-integral root.
  LocalVerdict certify(const ZPoly& F, int depth, bool only_zero) {
    if (depth > depth_cap) return LocalVerdict::inconclusive;
    LocalVerdict res = LocalVerdict::unramified;
    std::vector<std::pair<BigInt, int>> clusters;
    if (only_zero) {
      int m = 0;
      while (m < static_cast<int>(F.size()) && mpz_divisible_p(F[m].get_mpz_t(), p_.get_mpz_t())) ++m;
      if (m >= 2) clusters.emplace_back(BigInt(0), m);
    } else {
      auto rest = ring_.monic(reduce_mod_p(ring_, F));
      if (rest.degree() <= 0) return res;
      for (const auto& c : ring_.roots(rest, rng_)) {
        const auto lin = ring_.make({ring_.field().neg(c), ring_.field().one()});
        int m = 0;
        while (true) {
          auto [q, r] = ring_.divmod(rest, lin);
          if (!r.is_zero()) break;
          rest = q;
          ++m;
        }
        if (m >= 2) clusters.emplace_back(c, m);
      }
      if (rest.degree() > 0 && !ring_.is_squarefree(rest)) res = LocalVerdict::inconclusive;
    }
    for (auto [c, m] : clusters) {
      ZPoly H = c == 0 ? F : taylor_shift(F, c);
      while (!H.empty() && H[0] == 0 && m > 0) {  // c itself is a root
        H.erase(H.begin());
        --m;
      }
      if (m <= 1) continue;
      std::vector<long> v(m + 1, -1);
      for (int j = 0; j <= m; ++j)
        if (H[j] != 0) v[j] = int_valuation(H[j], p_);
      // lower Newton polygon over 0..m; every root valuation must be an integer
      long k = 0;
      for (int i = 0; i < m;) {
        int best = -1;
        for (int j = i + 1; j <= m; ++j) {
          if (v[j] < 0) continue;
          // slope (v[j]-v[i])/(j-i) minimal, ties to the farthest point
          if (best < 0 || (v[j] - v[i]) * (best - i) <= (v[best] - v[i]) * (j - i)) best = j;
        }
        const long drop = v[i] - v[best], len = best - i;
        if (drop % len != 0) return LocalVerdict::ramified;
        k = drop / len;
        i = best;
      }
      // K(Y) = H(p^k Y) / p^(m k): its reduction has degree m and sees exactly this cluster
      ZPoly K(H.size());
      const BigInt pk = big_pow(p_, static_cast<unsigned long>(k));
      for (std::size_t j = 0; j < H.size(); ++j) {
        const long shift = static_cast<long>(j) - m;
        K[j] = shift >= 0 ? H[j] * big_pow(pk, static_cast<unsigned long>(shift))
                          : div_exact(H[j], big_pow(pk, static_cast<unsigned long>(-shift)));
      }
      res = combine(res, certify(K, depth + 1, false));
      if (res == LocalVerdict::ramified) return res;
    }
    return res;
  }

  BigInt p_;
  ModPolyRing<BigPrimeField> ring_;
  std::mt19937_64 rng_;
};

inline UnramifiedCheck check_integral(const ZPoly& F, const BigInt& p) {
  if (!is_prime(p)) throw std::invalid_argument("unramified_check: " + p.get_str() + " is not prime");
  UnramifiedCheck out;
  const ModPolyRing<BigPrimeField> R{BigPrimeField(p)};
  const auto Fb = reduce_mod_p(R, F);
  out.degenerate = Fb.degree() < zpoly::deg(F);
  out.squarefree_mod_p = !out.degenerate && R.is_squarefree(Fb);
  out.verdict = out.squarefree_mod_p ? LocalVerdict::unramified : LocalCertifier(p).run(F);
  return out;
}

}  // namespace detail

/// f(a, X) scaled to a primitive integer polynomial. Throws when a is a branch point or the
/// specialization drops degree.
inline ZPoly integral_specialization(const Cover& c, const BigRat& a) {
  const UniPoly fa = c.specialize(a);
  if (fa.degree() != c.degree()) throw std::invalid_argument("specialization at " + to_string(a) + " drops degree");
  if (discriminant(fa) == 0) throw std::invalid_argument(to_string(a) + " is a branch point");
  ZPoly z;
  to_primitive_z(fa, z);
  return z;
}

inline BigRat specialization_discriminant(const Cover& c, const BigRat& a) {
  const UniPoly fa = c.specialize(a);
  if (fa.degree() != c.degree()) throw std::invalid_argument("specialization at " + to_string(a) + " drops degree");
  const BigRat d = discriminant(fa);
  if (d == 0) throw std::invalid_argument(to_string(a) + " is a branch point");
  return d;
}

/// Whether p is unramified in the splitting field of f(a, X). The reduction test (squarefree
/// of full degree mod p) is tried first; otherwise each cluster of p-adically close roots is
/// resolved by Newton polygons.
inline UnramifiedCheck unramified_check(const Cover& c, const BigRat& a, const BigInt& p) {
  return detail::check_integral(integral_specialization(c, a), p);
}

// ---------------------------------------------------------------------------------------
// bad primes and inertia prediction

struct PrimeSet {
  std::set<BigInt> primes;
  bool complete = true;  // false when some integer could not be fully factored
};

namespace detail {

inline void add_prime_factors(PrimeSet& s, const BigInt& n, const FactorOptions& fo) {
  if (n == 0) return;
  const auto fac = factor_integer(n, fo);
  for (const auto& [q, e] : fac.factors) s.primes.insert(q);
  if (!fac.complete) s.complete = false;
}

}  // namespace detail

/// Primes outside of which inertia prediction is trusted. A conservative superset: primes of
/// the group order hint, of the coefficients, of the content of the discriminant, and primes
/// where distinct branch points (or a branch point and infinity) meet modulo p.
inline PrimeSet bad_prime_superset(const Cover& c, const FactorOptions& fo = {}, const PolyFactorOptions& po = {}) {
  PrimeSet out;
  if (c.hint) detail::add_prime_factors(out, c.hint->order, fo);
  const BiPoly f = c.as_poly();
  BigInt den = 1, num = 0;
  for (const auto& [k, v] : f.terms()) {
    den = big_lcm(den, v.get_den());
    detail::add_prime_factors(out, v.get_num(), fo);
    detail::add_prime_factors(out, v.get_den(), fo);
  }
  BiPoly fz;
  for (const auto& [k, v] : f.terms()) num = big_gcd(num, BigInt(v.get_num() * (den / v.get_den())));
  for (const auto& [k, v] : f.terms()) fz.add_term(k.first, k.second, BigRat(v * den / num));

  const UniPoly D = disc_x(fz);
  BigInt content = 0;
  for (const auto& v : D.coeffs()) content = big_gcd(content, v.get_num());
  detail::add_prime_factors(out, content, fo);

  const UniPoly lc = fz.lc_x();
  const UniPoly sq = integral_primitive(squarefree_part(lc.degree() > 0 ? D * lc : D));
  if (sq.degree() >= 1) {
    detail::add_prime_factors(out, sq.lc().get_num(), fo);
    if (sq.degree() >= 2) detail::add_prime_factors(out, discriminant(sq).get_num(), fo);
  }
  // a discriminant of the squarefree part covers collisions between factors; leading
  // coefficients of the factors cover collisions with infinity
  for (const auto& [g, m] : factor_rational_poly(sq, po))
    detail::add_prime_factors(out, integral_primitive(g).lc().get_num(), fo);
  return out;
}

struct PrimePrediction {
  long nu = 0;
  BranchPoint branch;
  std::uint64_t e = 1;
  bool bad = false;                              // in the bad superset: no claim
  std::optional<std::uint64_t> predicted_order;  // e / gcd(e, nu) at good primes
};

struct Evidence {
  bool squarefree_mod_p = false;
  LocalVerdict verdict = LocalVerdict::inconclusive;
};

struct SpecializationReport {
  BigRat a;
  PrimeSet bad;
  std::map<BigInt, PrimePrediction> per_prime;  // primes with some positive nu
  std::map<BigInt, Evidence> evidence;
  std::vector<BigInt> conflicts;  // good primes with positive nu at several branch points
  bool factorization_complete = true;

  std::set<BigInt> predicted_ramified() const {
    std::set<BigInt> s;
    for (const auto& [p, pp] : per_prime)
      if (pp.predicted_order && *pp.predicted_order > 1) s.insert(p);
    return s;
  }
};

/// Inertia prediction for the specialization t = a: at a good prime p meeting exactly one
/// branch point a_i (nu = I_p(a, a_i) > 0), inertia is generated by the nu-th power of a
/// generator of inertia at a_i, hence has order e_i / gcd(e_i, nu).
inline SpecializationReport predict_inertia(const Cover& c, const BigRat& a, const FactorOptions& fo = {},
                                            const PolyFactorOptions& po = {}) {
  const RamificationType rt = ramification_indices(c, po);
  for (const auto& en : rt.entries)
    if (en.point.contains(a)) throw std::invalid_argument(to_string(a) + " is a branch point");
  const ZPoly Fa = integral_specialization(c, a);

  SpecializationReport rep;
  rep.a = a;
  rep.bad = bad_prime_superset(c, fo, po);
  rep.factorization_complete = rep.bad.complete;

  // candidate primes: those dividing g_i(a) for a finite branch point, or the denominator of a
  PrimeSet cand;
  for (const auto& en : rt.entries) {
    if (en.point.kind == BranchPoint::Kind::infinity)
      detail::add_prime_factors(cand, a.get_den(), fo);
    else
      detail::add_prime_factors(cand, en.point.minpoly.eval(a).get_num(), fo);
  }
  if (!cand.complete) rep.factorization_complete = false;

  for (const auto& p : cand.primes) {
    std::vector<const RamificationEntry*> hits;
    std::vector<long> nus;
    for (const auto& en : rt.entries) {
      const long nu = intersection_multiplicity(a, en.point, p);
      if (nu > 0) {
        hits.push_back(&en);
        nus.push_back(nu);
      }
    }
    if (hits.empty()) continue;
    const bool bad = rep.bad.primes.count(p) > 0;
    if (hits.size() > 1 && !bad) rep.conflicts.push_back(p);
    PrimePrediction pp;
    pp.nu = nus[0];
    pp.branch = hits[0]->point;
    pp.e = hits[0]->e;
    pp.bad = bad || hits.size() > 1;
    if (!pp.bad) pp.predicted_order = pp.e / std::gcd(pp.e, static_cast<std::uint64_t>(pp.nu));
    rep.per_prime[p] = pp;
    const auto chk = detail::check_integral(Fa, p);
    rep.evidence[p] = {chk.squarefree_mod_p, chk.verdict};
  }
  return rep;
}

// ---------------------------------------------------------------------------------------
// universally ramified primes

struct UdiscReport {
  PrimeSet remaining;                  // primes ramified in every given specialization
  BigInt discriminant_gcd;             // gcd of the integral specialization discriminants
  std::map<BigInt, BigRat> cleared_by; // prime -> a at which it was shown unramified
};

/// Primes that may ramify in every specialization t = a for a in `as`: the prime support of
/// the gcd of the specialization discriminants, minus primes shown unramified at some a.
/// An empty result with complete factorization shows no prime is universally ramified.
inline UdiscReport universally_ramified_bound(const Cover& c, const std::vector<BigRat>& as,
                                              const FactorOptions& fo = {}) {
  if (as.size() < 2) throw std::invalid_argument("universally_ramified_bound needs at least two values");
  std::vector<ZPoly> specs;
  BigInt g = 0;
  for (const auto& a : as) {
    specs.push_back(integral_specialization(c, a));
    g = big_gcd(g, big_abs(BigInt(discriminant(from_z(specs.back())).get_num())));
  }
  UdiscReport rep;
  rep.discriminant_gcd = g;
  PrimeSet support;
  detail::add_prime_factors(support, g, fo);
  rep.remaining.complete = support.complete;
  for (const auto& p : support.primes) {
    bool cleared = false;
    for (std::size_t i = 0; i < as.size() && !cleared; ++i)
      if (detail::check_integral(specs[i], p).unramified()) {
        rep.cleared_by[p] = as[i];
        cleared = true;
      }
    if (!cleared) rep.remaining.primes.insert(p);
  }
  return rep;
}

// ---------------------------------------------------------------------------------------
// specialization search

struct SearchOptions {
  int max_exponent = 8;                  // residue classes modulo at most p^8
  std::uint64_t candidate_cap = 1'000'000;
  std::uint64_t residue_cap = 4096;      // residues tried per (p, k)
  int lifts = 4;                         // lifts tested before a residue class is locked
};

struct SearchResult {
  std::vector<BigRat> values;
  std::map<BigInt, std::pair<BigInt, BigInt>> locks;  // p -> (residue, modulus)
  bool exhausted = false;                             // fewer than requested were found
};

/// Integers a, not branch points, with p unramified in the splitting field of f(a, X) for
/// every p in S. Each returned value is verified.
inline SearchResult specialize_search(const Cover& c, const std::set<BigInt>& S, std::size_t count,
                                      const SearchOptions& opt = {}) {
  SearchResult out;
  auto passes = [&](const BigInt& a, const BigInt& p) -> bool {
    try {
      return detail::check_integral(integral_specialization(c, BigRat(a)), p).unramified();
    } catch (const std::invalid_argument&) {
      return false;
    }
  };
  auto admissible = [&](const BigInt& a) {
    try {
      integral_specialization(c, BigRat(a));
      return true;
    } catch (const std::invalid_argument&) {
      return false;
    }
  };
  BigInt R = 0, M = 1;
  for (const auto& p : S) {
    if (!is_prime(p)) throw std::invalid_argument("specialize_search: " + p.get_str() + " is not prime");
    bool locked = false;
    BigInt pk = 1;
    for (int k = 1; k <= opt.max_exponent && !locked; ++k) {
      pk *= p;
      for (BigInt r = 0; r < pk && r < from_u64(opt.residue_cap) && !locked; ++r) {
        int ok = 0, tried = 0;
        for (long i = 0; tried < opt.lifts && i < 4L * opt.lifts; ++i) {
          const BigInt a = r + pk * i;
          if (!admissible(a)) continue;
          ++tried;
          if (!passes(a, p)) break;
          ++ok;
        }
        if (tried == opt.lifts && ok == opt.lifts) {
          out.locks[p] = {r, pk};
          R = crt_pair(R, M, r, pk);
          M *= pk;
          locked = true;
        }
      }
    }
  }
  for (std::uint64_t i = 0; i < opt.candidate_cap && out.values.size() < count; ++i) {
    const long step = (i % 2 == 0) ? -static_cast<long>(i / 2) : static_cast<long>((i + 1) / 2);
    const BigInt a = R + M * step;
    if (!admissible(a)) continue;
    bool ok = true;
    for (const auto& p : S)
      if (!passes(a, p)) {
        ok = false;
        break;
      }
    if (ok) out.values.emplace_back(a);
  }
  out.exhausted = out.values.size() < count;
  return out;
}

// ---------------------------------------------------------------------------------------
// covers with transposition inertia

struct WreathCover {
  BiPoly f;          // in (u, T): u plays t, T plays X
  UniPoly disc;      // disc_T f in Q[u]
  bool squarefree_disc = false;
  UniPoly square_factor;  // gcd(disc, disc') when not squarefree
};

/// f(u, T) = (T - alpha_1)...(T - alpha_n) - u (T - beta_1)...(T - beta_n).
inline WreathCover wreath_cover_poly(const std::vector<BigRat>& alphas, const std::vector<BigRat>& betas) {
  if (alphas.empty() || alphas.size() != betas.size())
    throw std::invalid_argument("wreath_cover_poly: need equally many alphas and betas");
  std::set<BigRat> seen;
  for (const auto& v : alphas)
    if (!seen.insert(v).second) throw std::invalid_argument("wreath_cover_poly: alphas must be distinct");
  for (const auto& v : betas)
    if (!seen.insert(v).second) throw std::invalid_argument("wreath_cover_poly: betas must be distinct and disjoint from alphas");
  UniPoly A = UniPoly::constant(1), B = UniPoly::constant(1);
  for (const auto& v : alphas) A = A * UniPoly::linear_root(v);
  for (const auto& v : betas) B = B * UniPoly::linear_root(v);
  WreathCover w;
  w.f = BiPoly::linear_in_t(A, -B);
  w.disc = alphas.size() == 1 ? UniPoly::constant(1) : disc_x(w.f);
  w.squarefree_disc = is_squarefree(w.disc);
  if (!w.squarefree_disc) w.square_factor = gcd(w.disc, w.disc.derivative());
  return w;
}

}  // namespace ramlab
