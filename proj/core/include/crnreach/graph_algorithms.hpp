// Copyright 2026 The crnreach Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <queue>
#include <utility>
#include <vector>

#include "crnreach/crn.hpp"

namespace crnreach {

/// Directed flow network with unbounded-integer capacities, solved with
/// shortest augmenting paths (Edmonds-Karp). The number of augmentations is
/// bounded by O(V*E) independent of capacity magnitudes.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

  /// Returns an edge handle usable with flow().
  std::size_t addEdge(std::size_t from, std::size_t to, Count capacity) {
    const std::size_t e = to_.size();
    to_.push_back(to);
    cap_.push_back(std::move(capacity));
    adj_[from].push_back(e);
    to_.push_back(from);
    cap_.push_back(0);
    adj_[to].push_back(e + 1);
    original_.push_back(cap_[e]);
    original_.push_back(0);
    return e;
  }

  Count maxFlow(std::size_t source, std::size_t sink) {
    Count total = 0;
    if (source == sink) return total;
    std::vector<std::ptrdiff_t> via(adj_.size());
    for (;;) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<std::size_t> q;
      q.push(source);
      via[source] = static_cast<std::ptrdiff_t>(adj_.size());  // sentinel
      while (!q.empty() && via[sink] == -1) {
        const std::size_t v = q.front();
        q.pop();
        for (std::size_t e : adj_[v]) {
          if (cap_[e] > 0 && via[to_[e]] == -1) {
            via[to_[e]] = static_cast<std::ptrdiff_t>(e);
            q.push(to_[e]);
          }
        }
      }
      if (via[sink] == -1) break;
      Count bottleneck = -1;
      for (std::size_t v = sink; v != source; v = to_[static_cast<std::size_t>(via[v]) ^ 1]) {
        const auto& c = cap_[static_cast<std::size_t>(via[v])];
        if (bottleneck < 0 || c < bottleneck) bottleneck = c;
      }
      for (std::size_t v = sink; v != source; v = to_[static_cast<std::size_t>(via[v]) ^ 1]) {
        const auto e = static_cast<std::size_t>(via[v]);
        cap_[e] -= bottleneck;
        cap_[e ^ 1] += bottleneck;
      }
      total += bottleneck;
    }
    return total;
  }

  /// Flow currently routed through an edge returned by addEdge.
  Count flow(std::size_t edge) const { return original_[edge] - cap_[edge]; }

 private:
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> to_;
  std::vector<Count> cap_;
  std::vector<Count> original_;
};

/// Maximum cardinality matching in a general graph (Edmonds' blossom
/// algorithm, BFS variant, O(V^3)). `neighbours(v, visit)` must call
/// `visit(w)` for every neighbour w of v. Returns mate[v] or -1.
template <class Neighbours>
std::vector<long> maximumMatching(std::size_t n, Neighbours&& neighbours) {
  std::vector<long> match(n, -1), parent(n), base(n);
  std::vector<char> used(n), blossom(n), onPath(n);

  // Greedy start.
  for (std::size_t v = 0; v < n; ++v) {
    if (match[v] != -1) continue;
    bool done = false;
    neighbours(v, [&](std::size_t w) {
      if (!done && w != v && match[w] == -1) {
        match[v] = static_cast<long>(w);
        match[w] = static_cast<long>(v);
        done = true;
      }
    });
  }

  auto lca = [&](long a, long b) {
    std::fill(onPath.begin(), onPath.end(), 0);
    for (;;) {
      a = base[a];
      onPath[a] = 1;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (onPath[b]) return b;
      b = parent[match[b]];
    }
  };
  auto markPath = [&](long v, long b, long child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };
  auto findPath = [&](long root) -> long {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (std::size_t i = 0; i < n; ++i) base[i] = static_cast<long>(i);
    used[root] = 1;
    std::queue<long> q;
    q.push(root);
    while (!q.empty()) {
      const long v = q.front();
      q.pop();
      long found = -1;
      neighbours(static_cast<std::size_t>(v), [&](std::size_t wu) {
        const long to = static_cast<long>(wu);
        if (found != -1 || to == v) return;
        if (base[v] == base[to] || match[v] == to) return;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          const long curbase = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          markPath(v, curbase, to);
          markPath(to, curbase, v);
          for (std::size_t i = 0; i < n; ++i) {
            if (blossom[base[i]]) {
              base[i] = curbase;
              if (!used[i]) {
                used[i] = 1;
                q.push(static_cast<long>(i));
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) {
            found = to;
            return;
          }
          used[match[to]] = 1;
          q.push(match[to]);
        }
      });
      if (found != -1) return found;
    }
    return -1;
  };

  for (std::size_t v = 0; v < n; ++v) {
    if (match[v] != -1) continue;
    long u = findPath(static_cast<long>(v));
    while (u != -1) {
      const long pv = parent[u];
      const long ppv = match[pv];
      match[u] = pv;
      match[pv] = u;
      u = ppv;
    }
  }
  return match;
}

}  // namespace crnreach
