#include "sfvs/flow_cut.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <vector>

#include "sfvs/errors.hpp"

namespace sfvs {

namespace {

// Dinic's blocking-flow max-flow on an explicit residual network.
template <typename Cap>
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adj_(nodes), level_(nodes), cursor_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, const Cap& capacity) {
    adj_[from].push_back(arcs_.size());
    arcs_.push_back({to, capacity});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back({from, Cap(0)});
  }

  Cap max_flow(std::size_t s, std::size_t t, const Cap& infinity) {
    Cap total = 0;
    while (levels(s, t)) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      while (true) {
        Cap pushed = augment(s, t, infinity);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  /// Nodes reachable from s in the residual network.
  std::vector<char> reachable(std::size_t s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t id : adj_[v]) {
        const auto& arc = arcs_[id];
        if (arc.residual > 0 && !seen[arc.to]) {
          seen[arc.to] = 1;
          stack.push_back(arc.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    Cap residual;
  };

  bool levels(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<std::size_t> queue{s};
    level_[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t v = queue[head];
      for (std::size_t id : adj_[v]) {
        const auto& arc = arcs_[id];
        if (arc.residual > 0 && level_[arc.to] < 0) {
          level_[arc.to] = level_[v] + 1;
          queue.push_back(arc.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  Cap augment(std::size_t v, std::size_t t, const Cap& limit) {
    if (v == t) return limit;
    for (auto& i = cursor_[v]; i < adj_[v].size(); ++i) {
      const std::size_t id = adj_[v][i];
      Arc& arc = arcs_[id];
      if (arc.residual <= 0 || level_[arc.to] != level_[v] + 1) continue;
      Cap pushed = augment(arc.to, t, std::min(limit, arc.residual));
      if (pushed > 0) {
        arcs_[id].residual -= pushed;
        arcs_[id ^ 1].residual += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

template <typename Cap>
VertexSet solve_split_network(const CutInstance& inst, const VertexSet& alive,
                              const std::vector<mpz_class>& scaled, const mpz_class& infinity) {
  const auto n = static_cast<std::size_t>(inst.graph.order());
  auto to_cap = [](const mpz_class& z) -> Cap {
    if constexpr (std::is_same_v<Cap, mpz_class>) {
      return z;
    } else {
      return static_cast<Cap>(z.get_si());
    }
  };
  const Cap inf = to_cap(infinity);
  auto in_node = [](Vertex v) { return 2 * static_cast<std::size_t>(v); };
  auto out_node = [&](Vertex v) {
    return (v == inst.source || v == inst.sink) ? 2 * static_cast<std::size_t>(v) : 2 * static_cast<std::size_t>(v) + 1;
  };

  FlowNetwork<Cap> net(2 * n);
  alive.for_each([&](Vertex v) {
    if (v != inst.source && v != inst.sink) net.add_arc(in_node(v), out_node(v), to_cap(scaled[static_cast<std::size_t>(v)]));
    for (Vertex w : inst.graph.neighbours(v))
      if (alive.contains(w)) net.add_arc(out_node(v), in_node(w), inf);
  });
  net.max_flow(in_node(inst.source), in_node(inst.sink), inf);
  const auto seen = net.reachable(in_node(inst.source));

  VertexSet cut(n);
  alive.for_each([&](Vertex v) {
    if (v == inst.source || v == inst.sink) return;
    if (seen[in_node(v)] && !seen[out_node(v)]) cut.insert(v);
  });
  return cut;
}

}  // namespace

CutResult min_weight_vertex_cut(const CutInstance& inst) {
  const Graph& g = inst.graph;
  g.check_vertex(inst.source);
  g.check_vertex(inst.sink);
  if (inst.weights.size() != static_cast<std::size_t>(g.order()))
    throw InputError("weight vector does not match the graph");
  const VertexSet alive = inst.alive.value_or(g.vertices());
  if (!alive.contains(inst.source) || !alive.contains(inst.sink))
    throw InputError("cut terminal is not part of the graph");
  if (inst.source == inst.sink) throw InfeasibleError("cut terminals coincide");
  if (g.adjacent(inst.source, inst.sink)) throw InfeasibleError("cut terminals are adjacent");

  std::vector<Rational> relevant;
  alive.for_each([&](Vertex v) {
    if (v == inst.source || v == inst.sink) return;
    const Rational& w = inst.weights[static_cast<std::size_t>(v)];
    if (!w.is_positive()) throw InputError("vertex cut weights must be positive");
    relevant.push_back(w);
  });
  const mpz_class scale = common_denominator(relevant);
  std::vector<mpz_class> scaled(static_cast<std::size_t>(g.order()), 0);
  mpz_class total = 0;
  alive.for_each([&](Vertex v) {
    if (v == inst.source || v == inst.sink) return;
    const auto& q = inst.weights[static_cast<std::size_t>(v)].value();
    mpz_class s = q.get_num() * (scale / q.get_den());
    total += s;
    scaled[static_cast<std::size_t>(v)] = std::move(s);
  });
  const mpz_class infinity = total + 1;

  CutResult result;
  if (infinity < mpz_class(std::numeric_limits<std::int64_t>::max() / 4)) {
    result.cut = solve_split_network<std::int64_t>(inst, alive, scaled, infinity);
  } else {
    result.cut = solve_split_network<mpz_class>(inst, alive, scaled, infinity);
  }
  mpq_class weight = 0;
  result.cut.for_each([&](Vertex v) { weight += inst.weights[static_cast<std::size_t>(v)].value(); });
  result.weight = Rational(std::move(weight));
  return result;
}

}  // namespace sfvs
