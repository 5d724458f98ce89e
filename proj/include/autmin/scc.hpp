#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "autmin/automaton.hpp"

namespace autmin {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

/// Plain adjacency-list digraph over nodes 0..size()-1.
using Digraph = std::vector<std::vector<std::uint32_t>>;

struct GraphSccs {
  std::vector<std::size_t> component;  // node -> component id
  std::size_t count = 0;
  std::vector<bool> nontrivial;  // more than one node or a self-loop
};

/// Iterative Tarjan. Component ids are a topological order of the
/// condensation: every edge u->v has component[u] <= component[v].
GraphSccs strongly_connected_components(const Digraph& g);

/// Nodes that can reach some node in `targets` (targets included).
std::vector<bool> backward_reachable(const Digraph& g,
                                     const std::vector<bool>& targets);

struct SccDecomposition {
  std::vector<std::size_t> scc_of;  // extended state index -> SCC, npos if unreachable
  std::vector<std::vector<StateRef>> sccs;
  std::vector<std::size_t> topo_rank;
  std::vector<bool> trivial;

  std::size_t of(StateRef q, std::size_t n) const { return scc_of[q.extended(n)]; }
};

/// SCCs of (Q+, T) restricted to the reachable plain states plus both sinks.
/// Plain SCCs get distinct ranks 0..k-1 in topological order; Top and
/// Bottom share rank k.
SccDecomposition scc_decompose(const Automaton& a);

}  // namespace autmin
