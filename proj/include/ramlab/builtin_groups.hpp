#pragma once

// Named groups (S(n), A(n), C(n), D(n), PSL(2,q), PGL(2,q), PSp(2m,p), PGSp(2m,p), M11),
// generator files, and the data directory.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramlab/permgroup.hpp"

#ifndef RAMLAB_DEFAULT_DATA_DIR
#define RAMLAB_DEFAULT_DATA_DIR "data"
#endif

namespace ramlab {

/// Bundled data directory; RAMLAB_DATA overrides the compiled-in default.
inline std::filesystem::path data_dir() {
  if (const char* env = std::getenv("RAMLAB_DATA"); env != nullptr && *env != '\0') return env;
  return RAMLAB_DEFAULT_DATA_DIR;
}

inline PermGroup symmetric_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("S(n) needs n >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(parse_cycles("(1,2)", n));
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
    gens.push_back(Permutation::from_images(img));
  }
  return PermGroup(n, std::move(gens), "S(" + std::to_string(n) + ")");
}

inline PermGroup alternating_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("A(n) needs n >= 1");
  std::vector<Permutation> gens;
  if (n >= 3) {
    gens.push_back(parse_cycles("(1,2,3)", n));
    // (1..n) for odd n, (2..n) for even n
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    const std::size_t first = (n % 2 == 1) ? 0 : 1;
    for (std::size_t i = first; i < n; ++i) img[i] = static_cast<Point>(i + 1 < n ? i + 1 : first);
    if (n > 3) gens.push_back(Permutation::from_images(img));
  }
  return PermGroup(n, std::move(gens), "A(" + std::to_string(n) + ")");
}

inline PermGroup cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("C(n) needs n >= 1");
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Permutation::from_images(img)}, "C(" + std::to_string(n) + ")");
}

/// Dihedral group of order 2n acting on the n vertices of an n-gon (n >= 3).
inline PermGroup dihedral_group(std::size_t n) {
  if (n < 3) throw std::invalid_argument("D(n) needs n >= 3");
  std::vector<Point> rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    refl[i] = static_cast<Point>((n - i) % n);
  }
  return PermGroup(n, {Permutation::from_images(rot), Permutation::from_images(refl)},
                   "D(" + std::to_string(n) + ")");
}

namespace detail {

inline bool is_small_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  std::vector<std::uint64_t> fac;
  std::uint64_t m = p - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      fac.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) fac.push_back(m);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto f : fac)
      if (powmod_u64(g, (p - 1) / f, p) == 1) ok = false;
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

/// Moebius map x -> (a x + b)/(c x + d) on P^1(F_q); point q stands for infinity.
inline Permutation moebius(std::uint64_t q, std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  std::vector<Point> img(q + 1);
  auto inv = [&](std::uint64_t v) { return powmod_u64(v, q - 2, q); };
  for (std::uint64_t x = 0; x <= q; ++x) {
    std::uint64_t num, den;
    if (x == q) {
      num = a;
      den = c;
    } else {
      num = (a * x + b) % q;
      den = (c * x + d) % q;
    }
    img[x] = static_cast<Point>(den == 0 ? q : num * inv(den) % q);
  }
  return Permutation::from_images(std::move(img));
}

/// Replaces a generating set by two random elements that still generate, when possible.
inline std::vector<Permutation> two_generators(std::size_t degree, const std::vector<Permutation>& gens,
                                               std::uint64_t seed) {
  const PermGroup full(degree, gens);
  const BigInt target = full.order();
  RandomElements rnd(gens, degree, seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Permutation> pair{rnd.next(), rnd.next()};
    if (StabChain(degree, pair).order() == target) return pair;
  }
  return gens;
}

}  // namespace detail

/// PSL(2,q) or PGL(2,q) on the q+1 points of the projective line; q prime.
inline PermGroup projective_linear_group(std::uint64_t q, bool full) {
  if (!detail::is_small_prime(q) || q > 65000)
    throw std::invalid_argument("PSL/PGL(2,q): q must be a prime below 65000");
  const std::uint64_t z = detail::primitive_root(q);
  const std::uint64_t scale = full ? z : z * z % q;
  std::vector<Permutation> gens{detail::moebius(q, 1, 1, 0, 1), detail::moebius(q, scale, 0, 0, 1),
                                detail::moebius(q, 0, q - 1, 1, 0)};
  return PermGroup(q + 1, std::move(gens),
                   std::string(full ? "PGL(2," : "PSL(2,") + std::to_string(q) + ")");
}

/// PSp(2m,p) (and, with `similitudes`, PGSp(2m,p) = PSp(2m,p).2 for odd p) acting on the
/// projective points of F_p^{2m}. Built from all symplectic transvections, then reduced
/// to two generators with a fixed seed.
inline PermGroup symplectic_group(std::size_t two_m, std::uint64_t p, bool similitudes) {
  if (two_m < 2 || two_m % 2 != 0) throw std::invalid_argument("PSp: dimension must be even");
  if (!detail::is_small_prime(p)) throw std::invalid_argument("PSp: p must be prime");
  const std::size_t m = two_m / 2;
  std::size_t npoints_all = 1;
  for (std::size_t i = 0; i < two_m; ++i) npoints_all *= p;
  if (npoints_all > 200000) throw std::invalid_argument("PSp: field too large for this construction");

  using Vec = std::vector<std::uint64_t>;
  auto decode = [&](std::size_t code) {
    Vec v(two_m);
    for (std::size_t i = 0; i < two_m; ++i) {
      v[i] = code % p;
      code /= p;
    }
    return v;
  };
  auto normalize = [&](Vec v) {
    std::size_t i = 0;
    while (i < two_m && v[i] == 0) ++i;
    const std::uint64_t inv = detail::powmod_u64(v[i], p - 2, p);
    for (auto& x : v) x = x * inv % p;
    return v;
  };
  std::vector<Vec> points;
  std::map<Vec, Point> index;
  for (std::size_t code = 1; code < npoints_all; ++code) {
    Vec v = decode(code);
    if (normalize(v) != v) continue;
    index[v] = static_cast<Point>(points.size());
    points.push_back(v);
  }
  const std::size_t n = points.size();
  auto form = [&](const Vec& x, const Vec& y) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < m; ++i) s += x[i] * y[m + i] % p + (p - x[m + i] * y[i] % p);
    return s % p;
  };
  auto as_permutation = [&](auto&& linear_map) {
    std::vector<Point> img(n);
    for (std::size_t k = 0; k < n; ++k) img[k] = index.at(normalize(linear_map(points[k])));
    return Permutation::from_images(std::move(img));
  };
  std::vector<Permutation> gens;
  for (const auto& v : points)
    gens.push_back(as_permutation([&](const Vec& x) {
      Vec y = x;
      const std::uint64_t c = form(x, v);
      for (std::size_t i = 0; i < two_m; ++i) y[i] = (y[i] + c * v[i]) % p;
      return y;
    }));
  std::string name = "PSp(" + std::to_string(two_m) + "," + std::to_string(p) + ")";
  if (similitudes && p > 2) {
    // diag(1,..,1, z,..,z) with z a non-square scales the form by z
    const std::uint64_t z = detail::primitive_root(p);
    gens.push_back(as_permutation([&](const Vec& x) {
      Vec y = x;
      for (std::size_t i = m; i < two_m; ++i) y[i] = y[i] * z % p;
      return y;
    }));
    name = "PGSp(" + std::to_string(two_m) + "," + std::to_string(p) + ")";
  }
  return PermGroup(n, detail::two_generators(n, gens, 20240611), name);
}

/// |PSp(2m,p)|.
inline BigInt symplectic_order(std::size_t m, std::uint64_t p) {
  BigInt P = from_u64(p);
  BigInt n = big_pow(P, static_cast<unsigned long>(m * m));
  for (std::size_t i = 1; i <= m; ++i) n *= big_pow(P, static_cast<unsigned long>(2 * i)) - 1;
  if (p % 2 == 1) n /= 2;
  return n;
}

struct GeneratorFile {
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  std::optional<BigInt> expected_order;
  std::optional<BigInt> expected_derived_index;
  std::string name;
};

/// Parses a generator file: one permutation per line in cycle notation, blank lines and
/// '#' comments ignored. Comment lines of the form "# order: N", "# derived-index: N",
/// "# degree: N" and "# name: X" are read as metadata.
inline GeneratorFile parse_generator_text(const std::string& text) {
  GeneratorFile out;
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  static const std::regex meta(R"(^#\s*(order|derived-index|degree|name)\s*:\s*(\S+)\s*$)");
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::smatch m;
    if (std::regex_match(line, m, meta)) {
      if (m[1] == "order") out.expected_order = BigInt(m[2].str());
      else if (m[1] == "derived-index") out.expected_derived_index = BigInt(m[2].str());
      else if (m[1] == "degree") out.degree = std::stoul(m[2].str());
      else out.name = m[2].str();
      continue;
    }
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    lines.push_back(line);
  }
  std::size_t max_pt = 0;
  for (const auto& l : lines) max_pt = std::max(max_pt, max_point_in_cycles(l));
  if (out.degree == 0) out.degree = std::max<std::size_t>(max_pt, 1);
  if (max_pt > out.degree) throw std::invalid_argument("generator file: point exceeds declared degree");
  for (const auto& l : lines) out.gens.push_back(parse_cycles(l, out.degree));
  return out;
}

/// Loads a generator file and checks its declared order and derived-subgroup index.
inline PermGroup load_generator_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open generator file: " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  GeneratorFile f = parse_generator_text(ss.str());
  PermGroup g(f.degree, f.gens, f.name.empty() ? path.stem().string() : f.name);
  if (f.expected_order && g.order() != *f.expected_order)
    throw std::runtime_error("generator file " + path.string() + ": order " + g.order().get_str() +
                             " != declared " + f.expected_order->get_str());
  if (f.expected_derived_index) {
    const BigInt idx = g.order() / derived_subgroup(g).order();
    if (idx != *f.expected_derived_index)
      throw std::runtime_error("generator file " + path.string() + ": derived-subgroup index " +
                               idx.get_str() + " != declared " + f.expected_derived_index->get_str());
  }
  return g;
}

inline std::string format_generator_file(const PermGroup& g, const std::vector<std::string>& comments) {
  std::ostringstream os;
  for (const auto& c : comments) os << "# " << c << "\n";
  os << "# degree: " << g.degree() << "\n";
  for (const auto& x : g.generators()) os << x.to_cycle_string() << "\n";
  return os.str();
}

/// Groups shipped as data files, keyed by builtin name.
inline const std::map<std::string, std::string>& bundled_group_files() {
  static const std::map<std::string, std::string> files{
      {"M11", "groups/M11.gens"},
      {"PSp4(3).2", "groups/PSp4_3.2.gens"},
      {"PSp6(2)", "groups/PSp6_2.gens"},
  };
  return files;
}

/// Resolves a builtin name (strict grammar NAME(args), or a bundled name such as M11)
/// or, failing that, a generator file path.
inline PermGroup group_from_spec(const std::string& spec) {
  static const std::regex call(R"(^([A-Za-z]+)\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)$)");
  std::smatch m;
  if (auto it = bundled_group_files().find(spec); it != bundled_group_files().end())
    return load_generator_file(data_dir() / it->second).renamed(spec);
  if (std::regex_match(spec, m, call)) {
    const std::string name = m[1];
    const std::uint64_t a = std::stoull(m[2]);
    const bool two = m[3].matched;
    const std::uint64_t b = two ? std::stoull(m[3]) : 0;
    if (!two) {
      if (name == "S") return symmetric_group(a);
      if (name == "A") return alternating_group(a);
      if (name == "C") return cyclic_group(a);
      if (name == "D") return dihedral_group(a);
    } else {
      if (name == "PSL" && a == 2) return projective_linear_group(b, false);
      if (name == "PGL" && a == 2) return projective_linear_group(b, true);
      if (name == "PSp") return symplectic_group(a, b, false);
      if (name == "PGSp") return symplectic_group(a, b, true);
    }
    throw std::invalid_argument("unknown builtin group: " + spec);
  }
  if (std::filesystem::exists(spec)) return load_generator_file(spec);
  throw std::invalid_argument("not a builtin group or readable file: " + spec);
}

}  // namespace ramlab
