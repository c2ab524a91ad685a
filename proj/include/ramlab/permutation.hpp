#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ramlab {

using Point = std::uint16_t;

/// A bijection of {0, ..., degree-1}. Text I/O uses 1-based cycle notation.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::size_t degree) : images_(degree) {
    if (degree == 0) throw std::invalid_argument("permutation degree must be positive");
    if (degree > 65535) throw std::invalid_argument("permutation degree too large");
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  /// Builds from 0-based images; throws unless the images form a bijection.
  static Permutation from_images(std::vector<Point> images) {
    if (images.empty()) throw std::invalid_argument("permutation degree must be positive");
    std::vector<bool> seen(images.size(), false);
    for (Point p : images) {
      if (p >= images.size() || seen[p]) throw std::invalid_argument("images are not a bijection");
      seen[p] = true;
    }
    Permutation out;
    out.images_ = std::move(images);
    return out;
  }

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  Point operator[](Point p) const { return images_[p]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
    return out;
  }

  /// Cycle lengths including fixed points, sorted descending.
  std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> lens;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
  }

  /// Element order: lcm of the cycle lengths.
  std::uint64_t order() const {
    std::uint64_t acc = 1;
    for (auto len : cycle_type()) acc = std::lcm(acc, static_cast<std::uint64_t>(len));
    return acc;
  }

  bool is_even() const {
    std::size_t transpositions = 0;
    for (auto len : cycle_type()) transpositions += len - 1;
    return transpositions % 2 == 0;
  }

  /// g^k for any integer k.
  Permutation pow(long long k) const {
    const std::size_t n = images_.size();
    Permutation out(n);
    std::vector<bool> seen(n, false);
    std::vector<Point> cycle;
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[i]) continue;
      cycle.clear();
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        cycle.push_back(static_cast<Point>(j));
      }
      const long long len = static_cast<long long>(cycle.size());
      const long long shift = ((k % len) + len) % len;
      for (long long c = 0; c < len; ++c) out.images_[cycle[c]] = cycle[(c + shift) % len];
    }
    return out;
  }

  /// Disjoint-cycle notation, 1-based; identity prints as "()".
  std::string to_cycle_string() const {
    std::ostringstream os;
    std::vector<bool> seen(images_.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      any = true;
      os << '(';
      bool first = true;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (!first) os << ',';
        os << j + 1;
        first = false;
      }
      os << ')';
    }
    if (!any) os << "()";
    return os.str();
  }

  /// Raw bytes of the image sequence; used as the canonical hash key.
  std::string_view bytes() const {
    return {reinterpret_cast<const char*>(images_.data()), images_.size() * sizeof(Point)};
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Point> images_;
  friend Permutation compose(const Permutation& a, const Permutation& b);
  friend void compose_into(Permutation& out, const Permutation& a, const Permutation& b);
};

/// (a∘b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
  Permutation out;
  out.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) out.images_[i] = a.images_[b.images_[i]];
  return out;
}

/// Like compose() but reuses `out`'s storage; `out` must not alias a or b.
inline void compose_into(Permutation& out, const Permutation& a, const Permutation& b) {
  out.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) out.images_[i] = a.images_[b.images_[i]];
}

inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

/// h g h^-1
inline Permutation conjugate(const Permutation& g, const Permutation& h) {
  return compose(compose(h, g), h.inverse());
}

inline bool commute(const Permutation& a, const Permutation& b) { return compose(a, b) == compose(b, a); }

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return std::hash<std::string_view>{}(p.bytes()); }
};

/// Parses 1-based disjoint (or not) cycle notation such as "(1,2,3)(4,5)". Products of
/// overlapping cycles are composed right to left. Points beyond `degree` are rejected.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation result(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
  };
  std::vector<Permutation> cycles;
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<std::size_t> pts;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (start == i) throw std::invalid_argument("expected point in cycle notation: " + std::string(text));
      std::size_t v = std::stoul(std::string(text.substr(start, i - start)));
      if (v == 0 || v > degree) throw std::invalid_argument("point out of range in: " + std::string(text));
      pts.push_back(v - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    if (i >= text.size()) throw std::invalid_argument("unterminated cycle: " + std::string(text));
    ++i;
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    std::vector<bool> used(degree, false);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (used[pts[k]]) throw std::invalid_argument("repeated point in cycle: " + std::string(text));
      used[pts[k]] = true;
      img[pts[k]] = static_cast<Point>(pts[(k + 1) % pts.size()]);
    }
    cycles.push_back(Permutation::from_images(std::move(img)));
    skip_ws();
  }
  for (const auto& c : cycles) result = compose(result, c);
  return result;
}

/// Largest point mentioned in cycle notation (1-based), 0 if none.
inline std::size_t max_point_in_cycles(std::string_view text) {
  std::size_t best = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] >= '0' && text[i] <= '9') {
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      best = std::max<std::size_t>(best, std::stoul(std::string(text.substr(start, i - start))));
    } else {
      ++i;
    }
  }
  return best;
}

}  // namespace ramlab
