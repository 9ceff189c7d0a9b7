#include "apsp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "apsp/errors.hpp"

namespace apsp {

namespace {

std::string edge_str(const Edge& e) {
  return std::to_string(e.src + 1) + " -> " + std::to_string(e.dst + 1);
}

}  // namespace

EdgeListGraph::EdgeListGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw ValidationError("vertex count must be >= 1");
  for (const Edge& e : edges_) {
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
      throw ValidationError("edge endpoint out of range: " + edge_str(e));
    if (e.src == e.dst)
      throw ValidationError("self loop not allowed: " + edge_str(e));
    if (e.weight > Weight::kMaxFiniteMagnitude || e.weight < -Weight::kMaxFiniteMagnitude)
      throw ValidationError("edge weight out of bounds: " + edge_str(e) +
                            " (w=" + std::to_string(e.weight) + ")");
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges_.size());
  for (const Edge& e : edges_) pairs.emplace_back(e.src, e.dst);
  std::sort(pairs.begin(), pairs.end());
  const auto dup = std::adjacent_find(pairs.begin(), pairs.end());
  if (dup != pairs.end())
    throw ValidationError("duplicate edge: " + std::to_string(dup->first + 1) +
                          " -> " + std::to_string(dup->second + 1));
}

AdjacencyListGraph::AdjacencyListGraph(const EdgeListGraph& g) {
  build(g.vertex_count(), g.edges());
}

AdjacencyListGraph::AdjacencyListGraph(int n, const std::vector<Edge>& edges) {
  build(n, edges);
}

void AdjacencyListGraph::build(int n, const std::vector<Edge>& edges) {
  n_ = n;
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges) ++offsets_[static_cast<std::size_t>(e.src) + 1];
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  arcs_.resize(edges.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) arcs_[cursor[e.src]++] = {e.dst, e.weight};
}

std::size_t DynAdjacency::total_in_entries() const {
  std::size_t total = 0;
  for (const auto& list : in_) total += list.size();
  return total;
}

std::size_t DynAdjacency::total_out_entries() const {
  std::size_t total = 0;
  for (const auto& list : out_) total += list.size();
  return total;
}

DistanceMatrix matrix_from_edges(const EdgeListGraph& g) {
  DistanceMatrix m(g.vertex_count());
  for (const Edge& e : g.edges()) m(e.src, e.dst) = Weight::finite(e.weight);
  return m;
}

EdgeListGraph edges_from_matrix(const DistanceMatrix& m) {
  const int n = m.size();
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && m(i, j).is_finite()) edges.push_back({i, j, m(i, j).value()});
    }
  }
  return EdgeListGraph(n, std::move(edges));
}

DynAdjacency adjacency_from_matrix(const DistanceMatrix& m) {
  const int n = m.size();
  DynAdjacency adj(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && m(i, j).is_finite()) adj.add_edge(i, j);
    }
  }
  return adj;
}

std::int64_t count_finite_off_diagonal(const DistanceMatrix& m) {
  const int n = m.size();
  std::int64_t count = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && m(i, j).is_finite()) ++count;
    }
  }
  return count;
}

}  // namespace apsp
