#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sfvs/graph.hpp"

namespace sfvs {

enum class CotreeKind : std::uint8_t { Leaf, Union, Join };

struct CotreeNode {
  CotreeKind kind = CotreeKind::Leaf;
  Vertex vertex = -1;  // leaves only
  int left = -1;
  int right = -1;
};

/// Binary cotree: u and v are adjacent iff their lowest common ancestor is a Join.
///
/// Leaves carry vertex ids of the host graph, so a cotree may cover only a
/// subset of that graph's vertices. Children always precede their parent in
/// node order; the root is the last node.
class Cotree {
 public:
  Cotree() = default;
  Cotree(std::vector<CotreeNode> nodes, int host_order);

  const std::vector<CotreeNode>& nodes() const noexcept { return nodes_; }
  const CotreeNode& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  int root() const noexcept { return static_cast<int>(nodes_.size()) - 1; }
  bool empty() const noexcept { return nodes_.empty(); }
  /// Vertices at the leaves, as a subset of the host graph's vertices.
  const VertexSet& vertices() const noexcept { return vertices_; }
  int leaf_count() const noexcept { return static_cast<int>(vertices_.count()); }

  /// Adjacency as encoded by the tree (LCA kind).
  bool joined(Vertex u, Vertex v) const;
  /// Exhaustive pairwise comparison with G[vertices()].
  bool realizes(const Graph& g) const;

  /// Graph on host_order vertices whose edges are encoded by this cotree.
  Graph to_graph() const;

 private:
  std::vector<CotreeNode> nodes_;
  VertexSet vertices_;
  std::vector<int> parent_;
  std::vector<int> depth_;
  std::vector<int> leaf_of_;
};

/// Induced path a-b-c-d.
using InducedP4 = std::array<Vertex, 4>;

struct CotreeBuild {
  std::optional<Cotree> cotree;
  InducedP4 p4{-1, -1, -1, -1};

  bool ok() const noexcept { return cotree.has_value(); }
};

/// Cotree of G (or of G[keep]); on failure an induced P4 is reported instead.
CotreeBuild build_cotree(const Graph& g);
CotreeBuild build_cotree(const Graph& g, const VertexSet& keep);

bool is_cograph(const Graph& g, const VertexSet& keep);

/// s pairwise non-adjacent vertices followed by an induced path of four,
/// with no edges between the two groups.
struct PatternWitness {
  int s = 0;
  std::vector<Vertex> vertices;
};

/// Exhaustive search for an induced sP1+P4.
std::optional<PatternWitness> find_induced_sp1_p4(const Graph& g, int s);

/// True iff the listed vertices induce exactly the edges of sP1+P4.
bool is_valid_pattern(const Graph& g, const PatternWitness& w);

}  // namespace sfvs
