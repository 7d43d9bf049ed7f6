#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace sfvs {

using Vertex = int;

/// Fixed-universe bitset over vertex ids 0..universe-1.
///
/// Ordering via operator<=> is a storage order suitable for map keys;
/// lex_less() gives the order of the sorted member lists.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void insert(Vertex v) noexcept { words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) noexcept { words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t count() const noexcept;
  bool empty() const noexcept;

  /// Smallest member, or -1.
  Vertex first() const noexcept;
  /// Smallest member strictly greater than v, or -1.
  Vertex next(Vertex v) const noexcept;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const;

  bool is_subset_of(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;

  VertexSet& operator|=(const VertexSet& other) noexcept;
  VertexSet& operator&=(const VertexSet& other) noexcept;
  VertexSet& operator-=(const VertexSet& other) noexcept;
  VertexSet complement() const;

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

  std::size_t hash() const noexcept;

 private:
  void trim() noexcept;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// True iff the ascending member list of a precedes that of b lexicographically.
bool lex_less(const VertexSet& a, const VertexSet& b) noexcept;

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace sfvs
