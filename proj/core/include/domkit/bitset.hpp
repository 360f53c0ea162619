#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace domkit {

/// Fixed-universe bit vector used for vertex sets. The universe is the host
/// graph's vertex range 0..n-1; all binary operations require equal universes.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {
    assert(universe >= 0);
  }

  static VertexSet of(int universe, std::initializer_list<int> vertices) {
    VertexSet s(universe);
    for (int v : vertices) s.set(v);
    return s;
  }

  int universe() const { return universe_; }

  bool test(int v) const {
    assert(v >= 0 && v < universe_);
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void set(int v) {
    assert(v >= 0 && v < universe_);
    words_[v >> 6] |= uint64_t{1} << (v & 63);
  }
  void reset(int v) {
    assert(v >= 0 && v < universe_);
    words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : words_) {
      if (w) return false;
    }
    return true;
  }

  /// Lowest member, or -1 when empty.
  int lowest() const {
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    }
    return -1;
  }

  bool intersects(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Complement within the universe.
  VertexSet complement() const {
    VertexSet r(universe_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        int v = static_cast<int>(i * 64 + std::countr_zero(w));
        f(v);
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  uint64_t word(size_t i) const { return i < words_.size() ? words_[i] : 0; }

 private:
  void trim() {
    if (words_.empty()) return;
    int rem = universe_ & 63;
    if (rem) words_.back() &= (uint64_t{1} << rem) - 1;
  }

  int universe_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace domkit
