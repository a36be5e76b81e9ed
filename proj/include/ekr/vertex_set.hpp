#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace ekr {

using Vertex = std::uint32_t;

inline constexpr std::size_t kMaxVertices = 512;

// Fixed-universe bitset of vertex indices. Every family member is one of
// these; the universe cap is enforced when graphs are built.
class VertexSet {
 public:
  static constexpr std::size_t kWords = kMaxVertices / 64;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }
  template <class Range>
  static VertexSet from_range(const Range& vs) {
    VertexSet s;
    for (auto v : vs) s.insert(static_cast<Vertex>(v));
    return s;
  }

  bool contains(Vertex v) const noexcept {
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void insert(Vertex v) noexcept {
    auto& w = words_[v >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (!(w & bit)) {
      w |= bit;
      ++size_;
    }
  }
  void erase(Vertex v) noexcept {
    auto& w = words_[v >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (w & bit) {
      w &= ~bit;
      --size_;
    }
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool intersects(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  std::size_t intersection_size(const VertexSet& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < kWords; ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }
  bool is_subset_of(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  VertexSet operator&(const VertexSet& o) const noexcept {
    return combine(o, [](auto a, auto b) { return a & b; });
  }
  VertexSet operator|(const VertexSet& o) const noexcept {
    return combine(o, [](auto a, auto b) { return a | b; });
  }
  VertexSet operator-(const VertexSet& o) const noexcept {
    return combine(o, [](auto a, auto b) { return a & ~b; });
  }

  // Smallest member, or kMaxVertices when empty.
  Vertex first() const noexcept { return next_from(0); }
  // Smallest member >= v, or kMaxVertices.
  Vertex next_from(Vertex v) const noexcept {
    if (v >= kMaxVertices) return kMaxVertices;
    std::size_t wi = v >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (w) return static_cast<Vertex>(wi * 64 + std::countr_zero(w));
      if (++wi == kWords) return kMaxVertices;
      w = words_[wi];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < kWords; ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f(static_cast<Vertex>(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size_);
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  bool operator==(const VertexSet& o) const noexcept {
    return words_ == o.words_;
  }

  // Lexicographic order on the ascending index sequences.
  std::strong_ordering operator<=>(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < kWords; ++i) {
      const std::uint64_t diff = words_[i] ^ o.words_[i];
      if (!diff) continue;
      const unsigned bit = static_cast<unsigned>(std::countr_zero(diff));
      const Vertex x = static_cast<Vertex>(i * 64 + bit);
      const bool mine = (words_[i] >> bit) & 1u;
      const VertexSet& other = mine ? o : *this;
      // The side holding x is smaller unless the other side stops before x.
      const bool other_continues = other.next_from(x + 1) != kMaxVertices;
      if (mine) {
        return other_continues ? std::strong_ordering::less
                               : std::strong_ordering::greater;
      }
      return other_continues ? std::strong_ordering::greater
                             : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }

 private:
  template <class Op>
  VertexSet combine(const VertexSet& o, Op op) const noexcept {
    VertexSet r;
    for (std::size_t i = 0; i < kWords; ++i) {
      r.words_[i] = op(words_[i], o.words_[i]);
      r.size_ += static_cast<std::uint32_t>(std::popcount(r.words_[i]));
    }
    return r;
  }

  std::array<std::uint64_t, kWords> words_{};
  std::uint32_t size_ = 0;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace ekr
