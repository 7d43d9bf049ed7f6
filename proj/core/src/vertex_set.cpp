#include "sfvs/vertex_set.hpp"

#include <cassert>

namespace sfvs {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

void VertexSet::trim() noexcept {
  if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_)
    if (w) return false;
  return true;
}

Vertex VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
  return -1;
}

Vertex VertexSet::next(Vertex v) const noexcept {
  std::size_t pos = static_cast<std::size_t>(v) + 1;
  if (pos >= universe_) return -1;
  std::size_t w = pos >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (pos & 63));
  while (true) {
    if (bits) return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    if (++w >= words_.size()) return -1;
    bits = words_[w];
  }
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet c(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
  c.trim();
  return c;
}

std::size_t VertexSet::hash() const noexcept {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
  return h;
}

bool lex_less(const VertexSet& a, const VertexSet& b) noexcept {
  // The first element of the symmetric difference decides, unless the set
  // holding it is otherwise a strict extension of the other (prefix rule).
  const VertexSet diff = (a - b) | (b - a);
  const Vertex d = diff.first();
  if (d < 0) return false;
  if (a.contains(d)) return b.next(d) >= 0;
  return a.next(d) < 0;
}

}  // namespace sfvs
