#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "sfvs/checker.hpp"
#include "sfvs/errors.hpp"
#include "sfvs/reduced_solver.hpp"

namespace sfvs {

namespace {

// Bit i stands for the i-th modulator vertex.
using Mask = std::uint32_t;
constexpr int kMaskBits = 30;

enum class PieceKind : std::uint8_t { Blob, TSingle, TStar, Hub };

struct Leaf {
  bool terminal = false;
  Mask mask = 0;

  auto operator<=>(const Leaf&) const = default;
};

// A component of the vertices selected below a cotree node, reduced to what
// cycles through T can observe.
//   Blob     T-free; `big` when it has two or more vertices.
//   TSingle  one T-vertex.
//   TStar    T-vertex with pendant leaves; cannot take part in a join.
//   Hub      T-free core with pendant T-leaves; cannot take part in a join.
// at1: modulator vertices adjacent to the core (or centre). at2: T modulator
// vertices with two or more core neighbours. Leaves without modulator
// neighbours are pendant for good and are not recorded.
struct Piece {
  PieceKind kind = PieceKind::Blob;
  bool big = false;
  Mask at1 = 0;
  Mask at2 = 0;
  std::vector<std::pair<Leaf, std::uint8_t>> leaves;

  bool closed() const { return kind == PieceKind::TStar || kind == PieceKind::Hub; }
  bool single() const { return kind == PieceKind::TSingle || (kind == PieceKind::Blob && !big); }
  bool inert() const { return closed() && at1 == 0 && leaves.empty(); }

  auto operator<=>(const Piece&) const = default;
};

Piece make_piece(PieceKind kind, bool big = false, Mask at1 = 0) {
  Piece p;
  p.kind = kind;
  p.big = big;
  p.at1 = at1;
  return p;
}

// Sorted multiset with multiplicities capped at two.
using Bag = std::vector<std::pair<Piece, std::uint8_t>>;

template <typename T>
void add_capped(std::vector<std::pair<T, std::uint8_t>>& bag, T item, int mult) {
  auto it = std::lower_bound(bag.begin(), bag.end(), item, [](const auto& e, const T& x) { return e.first < x; });
  if (it != bag.end() && it->first == item) {
    it->second = static_cast<std::uint8_t>(std::min(2, it->second + mult));
  } else {
    bag.insert(it, {std::move(item), static_cast<std::uint8_t>(std::min(2, mult))});
  }
}

void add_piece(Bag& bag, Piece p, int mult) {
  if (p.inert()) {
    // Only its presence matters: it blocks joins.
    p = make_piece(PieceKind::Hub);
    mult = 1;
    auto it = std::lower_bound(bag.begin(), bag.end(), p, [](const auto& e, const Piece& x) { return e.first < x; });
    if (it != bag.end() && it->first == p) return;
  }
  add_capped(bag, std::move(p), mult);
}

void absorb_blob(Piece& core, const Piece& p, int mult, Mask tmask) {
  core.at2 |= p.at2 | (core.at1 & p.at1);
  if (mult > 1) core.at2 |= p.at1;
  core.at1 |= p.at1;
  core.at2 &= tmask;
}

Bag union_bags(const Bag& a, const Bag& b) {
  Bag out = a;
  for (const auto& [p, m] : b) add_piece(out, p, m);
  return out;
}

std::optional<Bag> join_bags(const Bag& a, const Bag& b, Mask tmask) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  bool has_t = false;
  for (const Bag* side : {&a, &b})
    for (const auto& [p, m] : *side) {
      if (p.closed()) return std::nullopt;
      has_t = has_t || p.kind == PieceKind::TSingle;
    }

  if (!has_t) {
    Piece blob = make_piece(PieceKind::Blob, true);
    for (const Bag* side : {&a, &b})
      for (const auto& [p, m] : *side) absorb_blob(blob, p, m, tmask);
    return Bag{{std::move(blob), 1}};
  }

  // With a T-vertex present, two vertices on each side would close a C4.
  auto is_single = [](const Bag& x) { return x.size() == 1 && x[0].second == 1 && x[0].first.single(); };
  const Bag* centre_side = nullptr;
  const Bag* rest = nullptr;
  if (is_single(a) && (!is_single(b) || a[0].first.kind == PieceKind::TSingle || b[0].first.kind != PieceKind::TSingle)) {
    centre_side = &a;
    rest = &b;
  } else if (is_single(b)) {
    centre_side = &b;
    rest = &a;
  } else {
    return std::nullopt;
  }
  const Piece& centre = (*centre_side)[0].first;

  Bag out;
  if (centre.kind == PieceKind::TSingle) {
    // The T-centre sees every vertex on the other side, which must be independent.
    Piece star = make_piece(PieceKind::TStar, false, centre.at1);
    for (const auto& [p, m] : *rest) {
      if (p.big) return std::nullopt;
      if (p.at1 != 0) add_capped(star.leaves, Leaf{p.kind == PieceKind::TSingle, p.at1}, m);
    }
    add_piece(out, std::move(star), 1);
  } else {
    // A non-T centre: T-vertices opposite it must stay isolated there, and the
    // T-free parts fuse with the centre.
    Piece hub = make_piece(PieceKind::Hub, true, centre.at1);
    for (const auto& [p, m] : *rest) {
      if (p.kind == PieceKind::Blob) {
        absorb_blob(hub, p, m, tmask);
      } else if (p.at1 != 0) {
        add_capped(hub.leaves, Leaf{true, p.at1}, m);
      }
    }
    add_piece(out, std::move(hub), 1);
  }
  return out;
}

// Fixed kept part M of the modulator; decides bags by building a small graph
// with the same cycle structure through T and checking it.
class Realizer {
 public:
  Realizer(int p, std::vector<Edge> modulator_edges, Mask kept_terminals)
      : p_(p), base_edges_(std::move(modulator_edges)), tmask_(kept_terminals) {}

  Mask tmask() const { return tmask_; }

  bool feasible(const Bag& bag) {
    auto it = cache_.find(bag);
    if (it != cache_.end()) return it->second;
    const bool ok = check(bag);
    cache_.emplace(bag, ok);
    return ok;
  }

 private:
  bool check(const Bag& bag) const {
    std::vector<Edge> edges = base_edges_;
    std::vector<char> terminal(static_cast<std::size_t>(p_), 0);
    for (int i = 0; i < p_; ++i) terminal[static_cast<std::size_t>(i)] = (tmask_ >> i) & 1;
    int next = p_;
    auto fresh = [&](bool t) {
      terminal.push_back(t ? 1 : 0);
      return next++;
    };
    auto attach = [&](int v, Mask m) {
      for (int i = 0; i < p_; ++i)
        if ((m >> i) & 1) edges.emplace_back(i, v);
    };
    auto blob_core = [&](const Piece& p) {
      const int b1 = fresh(false);
      attach(b1, p.at1);
      if (p.at2 != 0) {
        const int b2 = fresh(false);
        edges.emplace_back(b1, b2);
        attach(b2, p.at2);
      }
      return b1;
    };
    for (const auto& [p, mult] : bag)
      for (int copy = 0; copy < mult; ++copy) {
        int anchor = -1;
        switch (p.kind) {
          case PieceKind::Blob:
            blob_core(p);
            break;
          case PieceKind::TSingle:
          case PieceKind::TStar:
            anchor = fresh(true);
            attach(anchor, p.at1);
            break;
          case PieceKind::Hub:
            anchor = blob_core(p);
            break;
        }
        for (const auto& [leaf, lm] : p.leaves)
          for (int k = 0; k < lm; ++k) {
            const int v = fresh(leaf.terminal);
            edges.emplace_back(anchor, v);
            attach(v, leaf.mask);
          }
      }
    const Graph g = Graph::from_edges(next, edges);
    VertexSet t(static_cast<std::size_t>(next));
    for (int v = 0; v < next; ++v)
      if (terminal[static_cast<std::size_t>(v)]) t.insert(v);
    return is_t_forest(g, t).accepted;
  }

  int p_;
  std::vector<Edge> base_edges_;
  Mask tmask_;
  std::map<Bag, bool> cache_;
};

struct Entry {
  mpq_class weight;
  const Bag* left = nullptr;
  const Bag* right = nullptr;
  bool take = false;
};
using Table = std::map<Bag, Entry>;

struct Best {
  VertexSet selected;
  mpq_class weight;
};

// Best selection of cotree vertices next to the kept modulator set.
std::optional<Best> run_dp(const ModulatorDecomposition& dec, const Instance& inst, const std::vector<Vertex>& pverts,
                           Mask kept, const VertexSet& required, Realizer& realizer) {
  const Graph& g = inst.graph();
  const auto& nodes = dec.cotree.nodes();
  VertexSet selected(static_cast<std::size_t>(inst.order()));
  if (nodes.empty()) return Best{selected, 0};

  auto mask_of = [&](Vertex v) {
    Mask m = 0;
    for (std::size_t i = 0; i < pverts.size(); ++i)
      if (((kept >> i) & 1) && g.adjacent(v, pverts[i])) m |= Mask{1} << i;
    return m;
  };

  std::vector<Table> tables(nodes.size());
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    const auto& nd = nodes[id];
    Table& table = tables[id];
    if (nd.kind == CotreeKind::Leaf) {
      if (!required.contains(nd.vertex)) table.emplace(Bag{}, Entry{});
      Piece p = make_piece(inst.is_terminal(nd.vertex) ? PieceKind::TSingle : PieceKind::Blob, false, mask_of(nd.vertex));
      Bag one{{std::move(p), 1}};
      if (realizer.feasible(one)) table.emplace(std::move(one), Entry{inst.weight(nd.vertex).value(), nullptr, nullptr, true});
    } else {
      const Table& left = tables[static_cast<std::size_t>(nd.left)];
      const Table& right = tables[static_cast<std::size_t>(nd.right)];
      for (const auto& [ka, ea] : left)
        for (const auto& [kb, eb] : right) {
          std::optional<Bag> merged = nd.kind == CotreeKind::Union ? std::optional<Bag>(union_bags(ka, kb))
                                                                   : join_bags(ka, kb, realizer.tmask());
          if (!merged || !realizer.feasible(*merged)) continue;
          mpq_class w = ea.weight + eb.weight;
          auto [it, inserted] = table.try_emplace(std::move(*merged));
          if (inserted || w > it->second.weight) it->second = Entry{std::move(w), &ka, &kb, false};
        }
    }
    if (table.empty()) return std::nullopt;
  }

  const Table& root = tables.back();
  const std::pair<const Bag, Entry>* best = nullptr;
  for (const auto& kv : root)
    if (!best || kv.second.weight > best->second.weight) best = &kv;

  std::vector<std::pair<std::size_t, const Bag*>> stack{{nodes.size() - 1, &best->first}};
  while (!stack.empty()) {
    auto [id, key] = stack.back();
    stack.pop_back();
    const Entry& e = tables[id].at(*key);
    const auto& nd = nodes[id];
    if (nd.kind == CotreeKind::Leaf) {
      if (e.take) selected.insert(nd.vertex);
      continue;
    }
    stack.emplace_back(static_cast<std::size_t>(nd.left), e.left);
    stack.emplace_back(static_cast<std::size_t>(nd.right), e.right);
  }
  return Best{std::move(selected), best->second.weight};
}

}  // namespace

std::optional<Solution> max_tforest_with_modulator(const ModulatorDecomposition& dec, const Instance& inst,
                                                   const VertexSet& required, int max_modulator) {
  const Graph& g = inst.graph();
  if (dec.modulator.universe() != static_cast<std::size_t>(inst.order()) ||
      dec.cotree.vertices().universe() != static_cast<std::size_t>(inst.order()))
    throw InputError("decomposition and instance disagree on the vertex count");
  if (dec.modulator.intersects(dec.cotree.vertices())) throw InputError("modulator overlaps the cotree");
  if (!required.is_subset_of(dec.domain())) throw InputError("required vertices lie outside the domain");

  const std::vector<Vertex> pverts = dec.modulator.to_vector();
  const int p = static_cast<int>(pverts.size());
  if (p > std::min(max_modulator, kMaskBits))
    throw CapacityError("modulator has " + std::to_string(p) + " vertices; limit is " +
                        std::to_string(std::min(max_modulator, kMaskBits)));

  Mask forced = 0;
  Mask terminals = 0;
  for (int i = 0; i < p; ++i) {
    if (required.contains(pverts[static_cast<std::size_t>(i)])) forced |= Mask{1} << i;
    if (inst.is_terminal(pverts[static_cast<std::size_t>(i)])) terminals |= Mask{1} << i;
  }

  std::optional<Solution> best;
  const Mask limit = p == 0 ? 1 : Mask{1} << p;
  for (Mask kept = 0; kept < limit; ++kept) {
    if ((kept & forced) != forced) continue;
    VertexSet mset(static_cast<std::size_t>(inst.order()));
    std::vector<Edge> edges;
    for (int i = 0; i < p; ++i) {
      if (!((kept >> i) & 1)) continue;
      mset.insert(pverts[static_cast<std::size_t>(i)]);
      for (int j = i + 1; j < p; ++j)
        if (((kept >> j) & 1) && g.adjacent(pverts[static_cast<std::size_t>(i)], pverts[static_cast<std::size_t>(j)]))
          edges.emplace_back(i, j);
    }
    if (!is_t_forest(g, mset, inst.terminals())) continue;

    Realizer realizer(p, std::move(edges), kept & terminals);
    auto found = run_dp(dec, inst, pverts, kept, required, realizer);
    if (!found) continue;
    VertexSet forest = found->selected | mset;
    auto certified = certify(inst, std::move(forest));
    if (!certified) throw std::logic_error("modulator DP produced a selection with a T-cycle");
    keep_better(best, std::move(certified));
  }
  return best;
}

}  // namespace sfvs
