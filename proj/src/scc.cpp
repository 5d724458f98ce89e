#include "autmin/scc.hpp"

#include <algorithm>

namespace autmin {

GraphSccs strongly_connected_components(const Digraph& g) {
  const std::size_t n = g.size();
  constexpr std::size_t kUnvisited = npos;
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), finished(n, npos);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::size_t>> frames;  // node, next edge
  std::size_t counter = 0;
  std::size_t emitted = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next < g[v].size()) {
        std::uint32_t w = g[v][next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      std::uint32_t done = v;
      frames.pop_back();
      if (!frames.empty())
        low[frames.back().first] = std::min(low[frames.back().first], low[done]);
      if (low[done] == index[done]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          finished[w] = emitted;
        } while (w != done);
        ++emitted;
      }
    }
  }

  // Tarjan emits sinks first; flip to get a topological numbering.
  GraphSccs out;
  out.count = emitted;
  out.component.resize(n);
  std::vector<std::size_t> members(emitted, 0);
  for (std::size_t v = 0; v < n; ++v) {
    out.component[v] = emitted - 1 - finished[v];
    ++members[out.component[v]];
  }
  out.nontrivial.assign(emitted, false);
  for (std::size_t c = 0; c < emitted; ++c) out.nontrivial[c] = members[c] > 1;
  for (std::size_t v = 0; v < n; ++v)
    for (std::uint32_t w : g[v])
      if (w == v) out.nontrivial[out.component[v]] = true;
  return out;
}

std::vector<bool> backward_reachable(const Digraph& g,
                                     const std::vector<bool>& targets) {
  const std::size_t n = g.size();
  Digraph reverse(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::uint32_t w : g[v]) reverse[w].push_back(static_cast<std::uint32_t>(v));
  std::vector<bool> hit = targets;
  std::vector<std::uint32_t> stack;
  for (std::size_t v = 0; v < n; ++v)
    if (hit[v]) stack.push_back(static_cast<std::uint32_t>(v));
  while (!stack.empty()) {
    std::uint32_t v = stack.back();
    stack.pop_back();
    for (std::uint32_t u : reverse[v])
      if (!hit[u]) {
        hit[u] = true;
        stack.push_back(u);
      }
  }
  return hit;
}

SccDecomposition scc_decompose(const Automaton& a) {
  const std::size_t n = a.state_count();
  // Reachable plain states first, then the two sinks.
  std::vector<std::size_t> node_of(n + 2, npos);
  std::vector<StateRef> states;
  if (a.initial().is_plain()) {
    node_of[a.initial().index()] = 0;
    states.push_back(a.initial());
    for (std::size_t head = 0; head < states.size(); ++head)
      for (std::size_t s = 0; s < a.alphabet_size(); ++s) {
        StateRef t = a.successor(states[head], s);
        if (t.is_plain() && node_of[t.index()] == npos) {
          node_of[t.index()] = states.size();
          states.push_back(t);
        }
      }
  }
  const std::size_t plain_nodes = states.size();
  for (StateRef sink : {StateRef::top(), StateRef::bottom()}) {
    node_of[sink.extended(n)] = states.size();
    states.push_back(sink);
  }

  Digraph g(states.size());
  for (std::size_t v = 0; v < states.size(); ++v) {
    for (std::size_t s = 0; s < a.alphabet_size(); ++s)
      g[v].push_back(static_cast<std::uint32_t>(node_of[a.successor(states[v], s).extended(n)]));
    std::sort(g[v].begin(), g[v].end());
    g[v].erase(std::unique(g[v].begin(), g[v].end()), g[v].end());
  }
  GraphSccs raw = strongly_connected_components(g);

  // Renumber: plain SCCs by topological order, then Top, then Bottom.
  std::vector<std::size_t> plain_comps;
  for (std::size_t v = 0; v < plain_nodes; ++v) plain_comps.push_back(raw.component[v]);
  std::sort(plain_comps.begin(), plain_comps.end());
  plain_comps.erase(std::unique(plain_comps.begin(), plain_comps.end()), plain_comps.end());
  std::vector<std::size_t> remap(raw.count, npos);
  for (std::size_t i = 0; i < plain_comps.size(); ++i) remap[plain_comps[i]] = i;
  const std::size_t k = plain_comps.size();
  remap[raw.component[plain_nodes]] = k;          // Top
  remap[raw.component[plain_nodes + 1]] = k + 1;  // Bottom

  SccDecomposition out;
  out.scc_of.assign(n + 2, npos);
  out.sccs.resize(k + 2);
  out.topo_rank.resize(k + 2);
  out.trivial.assign(k + 2, true);
  for (std::size_t v = 0; v < states.size(); ++v) {
    std::size_t c = remap[raw.component[v]];
    out.scc_of[states[v].extended(n)] = c;
    out.sccs[c].push_back(states[v]);
    out.trivial[c] = !raw.nontrivial[raw.component[v]];
  }
  for (auto& members : out.sccs)
    std::sort(members.begin(), members.end(), display_less);
  for (std::size_t c = 0; c < k; ++c) out.topo_rank[c] = c;
  out.topo_rank[k] = out.topo_rank[k + 1] = k;
  return out;
}

}  // namespace autmin
