#pragma once

#include "permlab/perm.hpp"

#include <string>
#include <utility>
#include <vector>

namespace permlab {

/// Simple undirected graph on vertices 0..n-1 (printed 1-based).
class InversionGraph {
public:
  explicit InversionGraph(int vertices = 0);

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[u][v] != 0; }

  int vertex_count() const { return n_; }
  int degree(int v) const;
  bool is_connected() const;
  bool is_path() const;
  /// Edges (u < v), sorted.
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const { return edges().size(); }

  /// DOT text; vertex labels are 1-based positions.
  std::string dot(const std::string &name = "G") const;

  /// Path on n vertices 0-1-...-(n-1).
  static InversionGraph path(int n);
  static InversionGraph complete(int n);

private:
  int n_;
  std::vector<std::vector<char>> adj_;
};

/// Vertex i ~ j iff i < j and π(i) > π(j).
InversionGraph inversion_graph(const Permutation &pi);

inline constexpr int kMaxInducedSubgraphVertices = 16;

/// Exhaustive search for an injection preserving edges and non-edges.
/// Throws ResourceError if `big` exceeds `max_vertices`.
bool is_induced_subgraph(const InversionGraph &small, const InversionGraph &big,
                         int max_vertices = kMaxInducedSubgraphVertices);

} // namespace permlab
