#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "apsp/distance_matrix.hpp"
#include "apsp/weight.hpp"

namespace apsp {

// One directed edge with a finite weight. Vertex ids are 0-based internally;
// file formats and log output use 1-based ids.
struct Edge {
  int src;
  int dst;
  std::int64_t weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Directed weighted graph as a plain edge list. Construction validates:
// ids in range, no self loops, at most one edge per ordered (src, dst) pair,
// |weight| <= Weight::kMaxFiniteMagnitude. Throws ValidationError.
class EdgeListGraph {
 public:
  EdgeListGraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
};

// Per-vertex outgoing arcs in CSR layout; the input form for the
// single-source baselines.
class AdjacencyListGraph {
 public:
  struct Arc {
    int dst;
    std::int64_t weight;
  };

  explicit AdjacencyListGraph(const EdgeListGraph& g);

  // Assembles directly from arcs grouped by construction order; used for
  // internally built graphs (Johnson's augmented graph). Inputs are trusted.
  AdjacencyListGraph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  std::int64_t arc_count() const { return static_cast<std::int64_t>(arcs_.size()); }

  std::span<const Arc> out(int v) const {
    return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
  }

 private:
  void build(int n, const std::vector<Edge>& edges);

  int n_;
  std::vector<std::size_t> offsets_;  // n_ + 1 entries
  std::vector<Arc> arcs_;
};

// Append-only per-vertex predecessor/successor lists. Lists never contain
// duplicates or the vertex itself; add_edge is the single mutation point, so
// j in out(i) <=> i in in(j) holds by construction.
class DynAdjacency {
 public:
  explicit DynAdjacency(int n) : in_(n), out_(n) {}

  int vertex_count() const { return static_cast<int>(in_.size()); }

  std::span<const int> in(int v) const { return in_[v]; }
  std::span<const int> out(int v) const { return out_[v]; }

  std::size_t in_degree(int v) const { return in_[v].size(); }
  std::size_t out_degree(int v) const { return out_[v].size(); }

  // Caller guarantees the pair is new (in the algorithms this is the
  // infinity-to-finite transition of the matrix cell).
  void add_edge(int src, int dst) {
    assert(src != dst);
    out_[src].push_back(dst);
    in_[dst].push_back(src);
  }

  std::size_t total_in_entries() const;
  std::size_t total_out_entries() const;

 private:
  std::vector<std::vector<int>> in_;
  std::vector<std::vector<int>> out_;
};

// Initial distance matrix for a graph: zero diagonal, edge weights, infinity
// elsewhere.
DistanceMatrix matrix_from_edges(const EdgeListGraph& g);

// The finite off-diagonal cells of a matrix as an edge list.
EdgeListGraph edges_from_matrix(const DistanceMatrix& m);

// In/out lists of the finite off-diagonal cells, filled by a row-major scan
// (so every list is in ascending order initially).
DynAdjacency adjacency_from_matrix(const DistanceMatrix& m);

// Number of finite off-diagonal cells.
std::int64_t count_finite_off_diagonal(const DistanceMatrix& m);

}  // namespace apsp
