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

#include "qgraph/bounds.hpp"

#include <algorithm>

#include "qgraph/bond_graph.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/reduction.hpp"
#include "qgraph/secular.hpp"

namespace qgraph {
namespace {

void require_standard_equilateral(const MetricGraph& g) {
  require_valid(g);
  if (!structural_flags(g).equilateral) throw Error(ErrorCode::kPreconditionViolated, "graph is not equilateral");
  for (const auto& v : g.vertices()) {
    if (is_general(v.coupling)) {
      throw Error(ErrorCode::kPreconditionViolated, "vertex " + v.id + " has general coupling");
    }
  }
}

}  // namespace

MainBound bound_main(const MetricGraph& g) {
  require_reducible(g);
  const StructuralFlags flags = structural_flags(g);
  MainBound b;
  b.edge_count = g.edge_count();
  b.n_bal = balanced_vertex_indices(g).size();
  b.n_nonneig = flags.balanced_nonneighbor_count;
  b.ell = flags.common_length.value_or(Rational(0));
  b.volume = b.ell * static_cast<long>(b.edge_count);
  b.bound_bal = b.volume - b.ell * static_cast<long>(b.n_bal) / 2;
  b.bound_main = b.volume - b.ell * static_cast<long>(b.n_bal + b.n_nonneig) / 2;
  return b;
}

std::vector<VertexSquare> detect_balanced_squares(const MetricGraph& g) {
  require_valid(g);
  const auto bal = balanced_vertex_indices(g);
  const std::size_t n = bal.size();
  std::vector<VertexSquare> squares;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          const std::array<std::size_t, 4> q{bal[a], bal[b], bal[c], bal[d]};
          // The three ways to close a 4-cycle through q[0], starting there.
          const std::array<VertexSquare, 3> orders{{{q[0], q[1], q[2], q[3]},
                                                    {q[0], q[1], q[3], q[2]},
                                                    {q[0], q[2], q[1], q[3]}}};
          for (const auto& o : orders) {
            const bool cycle = are_neighbors(g, o[0], o[1]) && are_neighbors(g, o[1], o[2]) &&
                               are_neighbors(g, o[2], o[3]) && are_neighbors(g, o[3], o[0]);
            const bool diagonal = are_neighbors(g, o[0], o[2]) || are_neighbors(g, o[1], o[3]);
            if (cycle && !diagonal) {
              VertexSquare s = o;
              if (s[3] < s[1]) std::swap(s[1], s[3]);
              squares.push_back(s);
            }
          }
        }
  return squares;
}

RankCriterion check_rank_criterion(const MetricGraph& g) {
  require_standard_equilateral(g);
  const RationalMatrix s = exact_bond_scattering(g);
  RankCriterion rc;
  rc.rank_s = det_rank(s).rank;
  rc.rank_s2 = det_rank(s * s).rank;
  rc.strict = rc.rank_s2 < rc.rank_s;
  const std::size_t expected = s.rows() - balanced_vertex_indices(g).size();
  if (rc.rank_s != expected) {
    throw Error(ErrorCode::kInternal, "rank(S) = " + std::to_string(rc.rank_s) + ", expected 2N - n_bal = " +
                                          std::to_string(expected));
  }
  return rc;
}

BoundReport bound_report(const MetricGraph& g) {
  BoundReport r;
  r.main = bound_main(g);
  r.squares = detect_balanced_squares(g);
  if (!r.squares.empty()) r.bound_square = r.main.ell * (static_cast<long>(r.main.edge_count) - 3);
  r.w_actual = classify_weyl(g).effective_size;
  r.rank = check_rank_criterion(g);
  if (r.w_actual > r.main.bound_main || (r.bound_square && r.w_actual > *r.bound_square)) {
    throw Error(ErrorCode::kInternal, "effective size exceeds a structural bound");
  }
  return r;
}

}  // namespace qgraph
