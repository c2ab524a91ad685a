#pragma once

// Flat hashed storage for every element of a permutation group.

#include <cstdint>
#include <cstring>
#include <functional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "ramlab/permutation.hpp"

namespace ramlab {

/// Stores permutations of one degree as packed image sequences (1 byte per point when the
/// degree is at most 256, otherwise 2) with an open-addressing index on top.
class ElementStore {
 public:
  static constexpr std::uint32_t npos = 0xffffffffu;

  ElementStore(std::size_t degree, std::size_t expected) : degree_(degree), width_(degree <= 256 ? 1 : 2) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap *= 2;
    table_.assign(cap, npos);
    data_.reserve(expected * degree_ * width_);
    scratch_.resize(degree_ * width_);
  }

  std::size_t size() const { return count_; }
  std::size_t degree() const { return degree_; }

  /// Index of the stored element, inserting it if new.
  std::uint32_t insert(std::span<const Point> images) {
    encode(images, scratch_.data());
    std::size_t slot = probe(scratch_.data());
    if (table_[slot] != npos) return table_[slot];
    if (count_ + 1 > table_.size() / 2) {
      grow();
      slot = probe(scratch_.data());
    }
    data_.insert(data_.end(), scratch_.begin(), scratch_.end());
    table_[slot] = static_cast<std::uint32_t>(count_);
    return static_cast<std::uint32_t>(count_++);
  }

  std::uint32_t find(std::span<const Point> images) const {
    std::vector<std::uint8_t> key(degree_ * width_);
    encode(images, key.data());
    return table_[probe(key.data())];
  }

  std::uint32_t find(const Permutation& g) const { return find(g.images()); }

  void images_of(std::uint32_t idx, std::vector<Point>& out) const {
    out.resize(degree_);
    const std::uint8_t* p = record(idx);
    if (width_ == 1) {
      for (std::size_t i = 0; i < degree_; ++i) out[i] = p[i];
    } else {
      for (std::size_t i = 0; i < degree_; ++i) out[i] = static_cast<Point>(p[2 * i] | (p[2 * i + 1] << 8));
    }
  }

  Permutation at(std::uint32_t idx) const {
    std::vector<Point> img;
    images_of(idx, img);
    return Permutation::from_images(std::move(img));
  }

 private:
  std::size_t degree_;
  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> data_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint8_t> scratch_;

  const std::uint8_t* record(std::uint32_t idx) const { return data_.data() + std::size_t(idx) * degree_ * width_; }

  void encode(std::span<const Point> images, std::uint8_t* out) const {
    if (images.size() != degree_) throw std::invalid_argument("element store: degree mismatch");
    if (width_ == 1) {
      for (std::size_t i = 0; i < degree_; ++i) out[i] = static_cast<std::uint8_t>(images[i]);
    } else {
      for (std::size_t i = 0; i < degree_; ++i) {
        out[2 * i] = static_cast<std::uint8_t>(images[i] & 0xff);
        out[2 * i + 1] = static_cast<std::uint8_t>(images[i] >> 8);
      }
    }
  }

  std::size_t hash_key(const std::uint8_t* key) const {
    return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(key), degree_ * width_));
  }

  std::size_t probe(const std::uint8_t* key) const {
    const std::size_t mask = table_.size() - 1;
    const std::size_t len = degree_ * width_;
    for (std::size_t slot = hash_key(key) & mask;; slot = (slot + 1) & mask) {
      const std::uint32_t idx = table_[slot];
      if (idx == npos || std::memcmp(record(idx), key, len) == 0) return slot;
    }
  }

  void grow() {
    std::vector<std::uint32_t> old = std::move(table_);
    table_.assign(old.size() * 2, npos);
    const std::size_t mask = table_.size() - 1;
    for (std::uint32_t idx : old) {
      if (idx == npos) continue;
      std::size_t slot = hash_key(record(idx)) & mask;
      while (table_[slot] != npos) slot = (slot + 1) & mask;
      table_[slot] = idx;
    }
  }
};

}  // namespace ramlab
