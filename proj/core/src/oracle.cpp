#include "sfvs/oracle.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "sfvs/errors.hpp"

namespace sfvs {

namespace {

using Mask = std::uint32_t;

// The instance restricted to a small domain, with bitmask adjacency.
struct Small {
  std::vector<Vertex> verts;
  std::vector<Mask> adj;
  Mask terminals = 0;
  Mask required = 0;
  std::vector<mpz_class> weight;  // scaled to integers
};

Small shrink(const Instance& inst, const VertexSet& domain, const VertexSet& required) {
  Small s;
  s.verts = domain.to_vector();
  if (static_cast<int>(s.verts.size()) > kBruteForceCap)
    throw CapacityError("brute force is limited to " + std::to_string(kBruteForceCap) + " vertices, got " +
                        std::to_string(s.verts.size()));
  const auto k = s.verts.size();
  s.adj.assign(k, 0);
  std::vector<Rational> ws;
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex v = s.verts[i];
    for (std::size_t j = 0; j < k; ++j)
      if (inst.graph().adjacent(v, s.verts[j])) s.adj[i] |= Mask{1} << j;
    if (inst.is_terminal(v)) s.terminals |= Mask{1} << i;
    if (required.contains(v)) s.required |= Mask{1} << i;
    ws.push_back(inst.weight(v));
  }
  const mpz_class scale = common_denominator(ws);
  for (const auto& w : ws) s.weight.push_back(w.value().get_num() * (scale / w.value().get_den()));
  return s;
}

// Contraction test: merge the non-T vertices along their edges, then every
// edge with a T endpoint must join two different classes.
bool acyclic_through_t(const Small& s, Mask keep) {
  int parent[32];
  for (int i = 0; i < 32; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const Mask plain = keep & ~s.terminals;
  for (Mask m = plain; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    for (Mask n = s.adj[static_cast<std::size_t>(v)] & plain & ~((Mask{2} << v) - 1); n; n &= n - 1)
      parent[find(v)] = find(std::countr_zero(n));
  }
  for (Mask m = keep & s.terminals; m; m &= m - 1) {
    const int t = std::countr_zero(m);
    // each T-T edge once, from its smaller end
    const Mask later_t = s.terminals & ~((Mask{2} << t) - 1);
    for (Mask n = s.adj[static_cast<std::size_t>(t)] & keep & (~s.terminals | later_t); n; n &= n - 1) {
      const int a = find(t);
      const int b = find(std::countr_zero(n));
      if (a == b) return false;
      parent[a] = b;
    }
  }
  return true;
}

// Include-first depth-first search; T-forests are closed under taking
// induced subgraphs, so a rejected partial selection prunes its subtree.
class Search {
 public:
  Search(const Small& s, const std::function<bool(Mask)>* accept) : s_(s), accept_(accept) {
    const auto k = s_.verts.size();
    suffix_.assign(k + 1, 0);
    for (std::size_t i = k; i-- > 0;) suffix_[i] = suffix_[i + 1] + s_.weight[i];
  }

  std::optional<Mask> run() {
    if (!acyclic_through_t(s_, s_.required)) return std::nullopt;
    visit(0, 0, 0);
    return best_;
  }

 private:
  void visit(std::size_t i, Mask chosen, const mpz_class& weight) {
    if (best_ && !accept_ && weight + suffix_[i] < best_weight_) return;
    if (i == s_.verts.size()) {
      if (accept_ && !(*accept_)(chosen)) return;
      // Include-first order reaches lexicographically smaller lists first.
      if (!best_ || weight > best_weight_) {
        best_ = chosen;
        best_weight_ = weight;
      }
      return;
    }
    const Mask bit = Mask{1} << i;
    if (acyclic_through_t(s_, chosen | bit)) visit(i + 1, chosen | bit, weight + s_.weight[i]);
    if (!(s_.required & bit)) visit(i + 1, chosen, weight);
  }

  const Small& s_;
  const std::function<bool(Mask)>* accept_;
  std::vector<mpz_class> suffix_;
  std::optional<Mask> best_;
  mpz_class best_weight_;
};

Solution to_solution(const Instance& inst, const Small& s, Mask m) {
  VertexSet forest(static_cast<std::size_t>(inst.order()));
  for (; m; m &= m - 1) forest.insert(s.verts[static_cast<std::size_t>(std::countr_zero(m))]);
  auto certified = certify(inst, std::move(forest));
  if (!certified) throw std::logic_error("brute force selected a set with a T-cycle");
  return *std::move(certified);
}

}  // namespace

std::optional<Solution> brute_force_max_tforest(const Instance& inst, const VertexSet& domain,
                                                const VertexSet& required) {
  if (!required.is_subset_of(domain)) throw InputError("required vertices lie outside the domain");
  const Small s = shrink(inst, domain, required);
  auto best = Search(s, nullptr).run();
  if (!best) return std::nullopt;
  return to_solution(inst, s, *best);
}

Solution brute_force_max_tforest(const Instance& inst) {
  const VertexSet none(static_cast<std::size_t>(inst.order()));
  return *brute_force_max_tforest(inst, inst.graph().vertices(), none);
}

std::optional<Solution> brute_force_best(const Instance& inst, const std::function<bool(const VertexSet&)>& accept) {
  const VertexSet all = inst.graph().vertices();
  const Small s = shrink(inst, all, VertexSet(all.universe()));
  const std::function<bool(Mask)> on_mask = [&](Mask m) {
    VertexSet f(all.universe());
    for (; m; m &= m - 1) f.insert(s.verts[static_cast<std::size_t>(std::countr_zero(m))]);
    return accept(f);
  };
  auto best = Search(s, &on_mask).run();
  if (!best) return std::nullopt;
  return to_solution(inst, s, *best);
}

}  // namespace sfvs
