#include "permlab/graph.hpp"

#include "permlab/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace permlab {

InversionGraph::InversionGraph(int vertices)
    : n_(vertices), adj_(vertices, std::vector<char>(vertices, 0)) {}

void InversionGraph::add_edge(int u, int v) {
  if (u == v)
    return;
  adj_[u][v] = adj_[v][u] = 1;
}

int InversionGraph::degree(int v) const {
  return static_cast<int>(std::count(adj_[v].begin(), adj_[v].end(), 1));
}

bool InversionGraph::is_connected() const {
  if (n_ == 0)
    return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n_; ++v)
      if (adj_[u][v] && !seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == n_;
}

bool InversionGraph::is_path() const {
  if (n_ == 1)
    return true;
  int ends = 0;
  for (int v = 0; v < n_; ++v) {
    int d = degree(v);
    if (d == 1)
      ++ends;
    else if (d != 2)
      return false;
  }
  return ends == 2 && is_connected();
}

std::vector<std::pair<int, int>> InversionGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adj_[u][v])
        out.emplace_back(u, v);
  return out;
}

std::string InversionGraph::dot(const std::string &name) const {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < n_; ++v)
    os << "  " << v + 1 << ";\n";
  for (auto [u, v] : edges())
    os << "  " << u + 1 << " -- " << v + 1 << ";\n";
  os << "}\n";
  return os.str();
}

InversionGraph InversionGraph::path(int n) {
  InversionGraph g(n);
  for (int i = 0; i + 1 < n; ++i)
    g.add_edge(i, i + 1);
  return g;
}

InversionGraph InversionGraph::complete(int n) {
  InversionGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      g.add_edge(i, j);
  return g;
}

InversionGraph inversion_graph(const Permutation &pi) {
  InversionGraph g(pi.size());
  for (int i = 0; i < pi.size(); ++i)
    for (int j = i + 1; j < pi.size(); ++j)
      if (pi[i] > pi[j])
        g.add_edge(i, j);
  return g;
}

bool is_induced_subgraph(const InversionGraph &small, const InversionGraph &big,
                         int max_vertices) {
  const int k = small.vertex_count();
  const int n = big.vertex_count();
  if (n > max_vertices)
    throw ResourceError("induced subgraph search: " + std::to_string(n) +
                        " vertices above limit " + std::to_string(max_vertices));
  if (k > n)
    return false;
  if (k == 0)
    return true;

  // Map small vertices in decreasing degree order; a vertex of degree d can
  // only land on a vertex of degree >= d.
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i)
    order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return small.degree(a) > small.degree(b);
  });
  std::vector<int> big_degree(n);
  for (int v = 0; v < n; ++v)
    big_degree[v] = big.degree(v);

  std::vector<int> image(k, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> place = [&](int idx) {
    if (idx == k)
      return true;
    const int u = order[idx];
    const int du = small.degree(u);
    for (int v = 0; v < n; ++v) {
      if (used[v] || big_degree[v] < du)
        continue;
      bool ok = true;
      for (int j = 0; j < idx && ok; ++j) {
        int w = order[j];
        ok = small.adjacent(u, w) == big.adjacent(v, image[w]);
      }
      if (!ok)
        continue;
      image[u] = v;
      used[v] = 1;
      if (place(idx + 1))
        return true;
      used[v] = 0;
      image[u] = -1;
    }
    return false;
  };
  return place(0);
}

} // namespace permlab
