// Copyright 2026 The qgraph Authors
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

#include "qgraph/cycles.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "qgraph/errors.hpp"

namespace qgraph {
namespace {

// Tarjan SCC restricted to nodes >= lower; returns the component of `lower`.
std::vector<bool> component_of(const Digraph& graph, std::size_t lower) {
  const std::size_t n = graph.size();
  std::vector<long> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false), result(n, false);
  std::vector<std::size_t> stack;
  long counter = 0;

  std::function<void(std::size_t)> connect = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (auto w : graph[v]) {
      if (w < lower) continue;
      if (index[w] < 0) {
        connect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      if (std::find(comp.begin(), comp.end(), lower) != comp.end())
        for (auto x : comp) result[x] = true;
    }
  };
  connect(lower);
  return result;
}

class Johnson {
 public:
  Johnson(const Digraph& graph, std::size_t cap) : graph_(graph), cap_(cap) {}

  std::vector<std::vector<std::size_t>> run() {
    const std::size_t n = graph_.size();
    for (std::size_t s = 0; s < n; ++s) {
      in_scc_ = component_of(graph_, s);
      start_ = s;
      blocked_.assign(n, false);
      blocked_by_.assign(n, {});
      circuit(s);
    }
    return std::move(cycles_);
  }

 private:
  void unblock(std::size_t u) {
    blocked_[u] = false;
    auto waiting = std::move(blocked_by_[u]);
    blocked_by_[u].clear();
    for (auto w : waiting)
      if (blocked_[w]) unblock(w);
  }

  bool circuit(std::size_t v) {
    bool found = false;
    path_.push_back(v);
    blocked_[v] = true;
    for (auto w : graph_[v]) {
      if (w < start_ || !in_scc_[w]) continue;
      if (w == start_) {
        cycles_.push_back(path_);
        if (cycles_.size() > cap_) {
          throw Error(ErrorCode::kCapExceeded, "more than " + std::to_string(cap_) + " periodic orbits");
        }
        found = true;
      } else if (!blocked_[w] && circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (auto w : graph_[v]) {
        if (w < start_ || !in_scc_[w]) continue;
        blocked_by_[w].insert(v);
      }
    }
    path_.pop_back();
    return found;
  }

  const Digraph& graph_;
  std::size_t cap_;
  std::size_t start_ = 0;
  std::vector<bool> in_scc_;
  std::vector<bool> blocked_;
  std::vector<std::set<std::size_t>> blocked_by_;
  std::vector<std::size_t> path_;
  std::vector<std::vector<std::size_t>> cycles_;
};

}  // namespace

std::vector<std::vector<std::size_t>> simple_cycles(const Digraph& graph, std::size_t cap) {
  return Johnson(graph, cap).run();
}

}  // namespace qgraph
