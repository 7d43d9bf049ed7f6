#include <array>
#include <vector>

#include "sfvs/checker.hpp"
#include "sfvs/errors.hpp"
#include "sfvs/reduced_solver.hpp"

namespace sfvs {

namespace {

constexpr std::size_t kSlots = 32;  // count (2 bits) | edge | terminal | terminal_edge

std::size_t encode(const Signature& s) {
  return s.count | (std::size_t{s.edge} << 2) | (std::size_t{s.terminal} << 3) |
         (std::size_t{s.terminal_edge} << 4);
}

Signature decode(std::size_t code) {
  return {static_cast<std::uint8_t>(code & 3), ((code >> 2) & 1) != 0, ((code >> 3) & 1) != 0,
          ((code >> 4) & 1) != 0};
}

std::uint8_t saturating_count(std::uint8_t a, std::uint8_t b) {
  return static_cast<std::uint8_t>(std::min(2, a + b));
}

Signature leaf_signature(bool selected, bool terminal) {
  if (!selected) return {};
  return {1, false, terminal, false};
}

struct Cell {
  bool valid = false;
  mpq_class weight;
  std::uint8_t left = 0;
  std::uint8_t right = 0;
};

}  // namespace

Signature union_signature(const Signature& a, const Signature& b) {
  return {saturating_count(a.count, b.count), a.edge || b.edge, a.terminal || b.terminal,
          a.terminal_edge || b.terminal_edge};
}

std::optional<Signature> join_signature(const Signature& a, const Signature& b) {
  if (a.count == 0) return b;
  if (b.count == 0) return a;
  // Two vertices on each side form a C4; an edge on one side plus any vertex
  // on the other forms a triangle.
  if (a.count == 2 && b.count == 2 && (a.terminal || b.terminal)) return std::nullopt;
  if (a.edge && (a.terminal_edge || b.terminal)) return std::nullopt;
  if (b.edge && (b.terminal_edge || a.terminal)) return std::nullopt;
  Signature s;
  s.count = saturating_count(a.count, b.count);
  s.edge = true;
  s.terminal = a.terminal || b.terminal;
  s.terminal_edge = a.terminal_edge || b.terminal_edge || a.terminal || b.terminal;
  return s;
}

bool cograph_signature_feasible(const Cotree& cotree, const VertexSet& terminals, const VertexSet& selected) {
  std::vector<Signature> sig(cotree.nodes().size());
  for (std::size_t id = 0; id < sig.size(); ++id) {
    const auto& nd = cotree.nodes()[id];
    if (nd.kind == CotreeKind::Leaf) {
      sig[id] = leaf_signature(selected.contains(nd.vertex), terminals.contains(nd.vertex));
      continue;
    }
    const auto& l = sig[static_cast<std::size_t>(nd.left)];
    const auto& r = sig[static_cast<std::size_t>(nd.right)];
    if (nd.kind == CotreeKind::Union) {
      sig[id] = union_signature(l, r);
    } else {
      auto j = join_signature(l, r);
      if (!j) return false;
      sig[id] = *j;
    }
  }
  return true;
}

Solution max_tforest_cograph(const Cotree& cotree, const Instance& inst) {
  if (cotree.vertices().universe() != static_cast<std::size_t>(inst.order()))
    throw InputError("cotree and instance disagree on the vertex count");
  const auto& nodes = cotree.nodes();
  if (nodes.empty()) {
    Solution empty;
    empty.forest = VertexSet(static_cast<std::size_t>(inst.order()));
    empty.certified = true;
    return empty;
  }

  std::vector<std::array<Cell, kSlots>> table(nodes.size());
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    const auto& nd = nodes[id];
    auto& cells = table[id];
    if (nd.kind == CotreeKind::Leaf) {
      const bool t = inst.is_terminal(nd.vertex);
      cells[encode(leaf_signature(false, t))] = {true, 0, 0, 0};
      cells[encode(leaf_signature(true, t))] = {true, inst.weight(nd.vertex).value(), 1, 0};
      continue;
    }
    const auto& left = table[static_cast<std::size_t>(nd.left)];
    const auto& right = table[static_cast<std::size_t>(nd.right)];
    for (std::size_t a = 0; a < kSlots; ++a) {
      if (!left[a].valid) continue;
      for (std::size_t b = 0; b < kSlots; ++b) {
        if (!right[b].valid) continue;
        std::optional<Signature> merged = nd.kind == CotreeKind::Union
                                              ? std::optional<Signature>(union_signature(decode(a), decode(b)))
                                              : join_signature(decode(a), decode(b));
        if (!merged) continue;
        mpq_class w = left[a].weight + right[b].weight;
        Cell& cell = cells[encode(*merged)];
        if (!cell.valid || w > cell.weight)
          cell = {true, std::move(w), static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)};
      }
    }
  }

  const auto root = static_cast<std::size_t>(cotree.root());
  std::size_t best = kSlots;
  for (std::size_t s = 0; s < kSlots; ++s)
    if (table[root][s].valid && (best == kSlots || table[root][s].weight > table[root][best].weight)) best = s;

  VertexSet forest(static_cast<std::size_t>(inst.order()));
  std::vector<std::pair<std::size_t, std::size_t>> stack{{root, best}};
  while (!stack.empty()) {
    auto [id, slot] = stack.back();
    stack.pop_back();
    const auto& nd = nodes[id];
    const Cell& cell = table[id][slot];
    if (nd.kind == CotreeKind::Leaf) {
      if (cell.left) forest.insert(nd.vertex);
      continue;
    }
    stack.emplace_back(static_cast<std::size_t>(nd.left), cell.left);
    stack.emplace_back(static_cast<std::size_t>(nd.right), cell.right);
  }

  auto certified = certify(inst, std::move(forest));
  if (!certified) throw std::logic_error("cograph DP produced a selection with a T-cycle");
  return *std::move(certified);
}

}  // namespace sfvs
