#include "apsp/bellman_ford.hpp"

#include <cassert>
#include <vector>

#include "apsp/errors.hpp"

namespace apsp {

SsspResult bellman_ford(const AdjacencyListGraph& g, int source,
                        BaselineStats* stats) {
  const int n = g.vertex_count();
  assert(source >= 0 && source < n);

  SsspResult result;
  result.source = source;
  result.dist.assign(n, Weight::infinity());
  result.dist[source] = Weight::finite(0);
  std::vector<int> pred(n, -1);

  BaselineStats local;

  for (int round = 0; round < n - 1; ++round) {
    for (int u = 0; u < n; ++u) {
      const Weight du = result.dist[u];
      local.edge_relaxations += g.out(u).size();
      if (du.is_infinite()) continue;
      for (const auto& arc : g.out(u)) {
        const Weight cand = Weight::finite(du.value() + arc.weight);
        if (cand < result.dist[arc.dst]) {
          result.dist[arc.dst] = cand;
          pred[arc.dst] = u;
        }
      }
    }
  }

  // Detection round: any still-relaxable edge means a reachable negative
  // cycle. Walking n predecessor steps from the improvable vertex lands on
  // the cycle itself.
  for (int u = 0; u < n; ++u) {
    const Weight du = result.dist[u];
    local.edge_relaxations += g.out(u).size();
    if (du.is_infinite()) continue;
    for (const auto& arc : g.out(u)) {
      const Weight cand = Weight::finite(du.value() + arc.weight);
      if (cand < result.dist[arc.dst]) {
        pred[arc.dst] = u;
        int x = arc.dst;
        for (int step = 0; step < n && pred[x] != -1; ++step) x = pred[x];
        if (stats) *stats += local;
        throw NegativeCycleError(x);
      }
    }
  }

  if (stats) *stats += local;
  return result;
}

}  // namespace apsp
