#include "autmin/minimise.hpp"

#include <algorithm>
#include <utility>

#include "autmin/core.hpp"
#include "autmin/errors.hpp"
#include "autmin/scc.hpp"

namespace autmin {

namespace {

void require_final_states(const Automaton& a, const char* op) {
  if (a.mode() == Acceptance::parity)
    throw ModeError(std::string(op) + " is not defined for parity automata");
}

void require_buchi_or_cobuchi(const Automaton& a, const char* op) {
  if (a.mode() != Acceptance::buchi && a.mode() != Acceptance::cobuchi)
    throw ModeError(std::string(op) + " needs a Buchi or co-Buchi automaton");
}

}  // namespace

Automaton hopcroft_min(const Automaton& in) {
  require_final_states(in, "hopcroft_min");
  const Automaton a = reachable_part(in);
  const std::size_t n = a.state_count();
  const std::size_t total = n + 2;
  const std::size_t k = a.alphabet_size();

  // inverse[s][t]: sources reaching t on s (sinks included)
  std::vector<std::vector<std::vector<std::uint32_t>>> inverse(
      k, std::vector<std::vector<std::uint32_t>>(total));
  for (std::size_t v = 0; v < total; ++v)
    for (std::size_t s = 0; s < k; ++s) {
      StateRef t = a.successor(StateRef::from_extended(v, n), s);
      inverse[s][t.extended(n)].push_back(static_cast<std::uint32_t>(v));
    }

  std::vector<std::vector<std::uint32_t>> blocks(2);
  for (std::size_t v = 0; v < total; ++v)
    blocks[a.is_final(StateRef::from_extended(v, n)) ? 0 : 1].push_back(
        static_cast<std::uint32_t>(v));
  std::vector<std::size_t> block_of(total);
  for (std::size_t b = 0; b < 2; ++b)
    for (auto v : blocks[b]) block_of[v] = b;

  std::vector<std::vector<bool>> pending;
  std::vector<std::pair<std::size_t, std::size_t>> work;
  auto schedule = [&](std::size_t b, std::size_t s) {
    if (pending.size() <= b) pending.resize(b + 1, std::vector<bool>(k, false));
    if (!pending[b][s]) {
      pending[b][s] = true;
      work.emplace_back(b, s);
    }
  };
  pending.assign(2, std::vector<bool>(k, false));
  const std::size_t smaller = blocks[0].size() <= blocks[1].size() ? 0 : 1;
  for (std::size_t s = 0; s < k; ++s) schedule(smaller, s);

  std::vector<bool> marked(total, false);
  std::vector<std::size_t> hits(2, 0);
  while (!work.empty()) {
    auto [splitter, s] = work.back();
    work.pop_back();
    pending[splitter][s] = false;

    std::vector<std::uint32_t> pre;
    for (auto t : blocks[splitter])
      for (auto v : inverse[s][t])
        if (!marked[v]) {
          marked[v] = true;
          pre.push_back(v);
        }
    hits.resize(blocks.size(), 0);
    std::vector<std::size_t> touched;
    for (auto v : pre)
      if (hits[block_of[v]]++ == 0) touched.push_back(block_of[v]);

    for (std::size_t y : touched) {
      const std::size_t count = std::exchange(hits[y], 0);
      if (count == blocks[y].size()) continue;
      std::vector<std::uint32_t> in_part, out_part;
      for (auto v : blocks[y]) (marked[v] ? in_part : out_part).push_back(v);
      const std::size_t fresh = blocks.size();
      blocks[y] = std::move(out_part);
      blocks.push_back(std::move(in_part));
      for (auto v : blocks[fresh]) block_of[v] = fresh;
      pending.resize(blocks.size(), std::vector<bool>(k, false));
      for (std::size_t c = 0; c < k; ++c) {
        if (pending[y][c])
          schedule(fresh, c);
        else
          schedule(blocks[fresh].size() <= blocks[y].size() ? fresh : y, c);
      }
    }
    for (auto v : pre) marked[v] = false;
  }

  // Blocks holding a sink collapse into it; the rest become plain states.
  std::vector<StateRef> image(blocks.size());
  std::vector<std::size_t> leader;
  const std::size_t top_block = block_of[n];
  const std::size_t bottom_block = block_of[n + 1];
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b == top_block) {
      image[b] = StateRef::top();
    } else if (b == bottom_block) {
      image[b] = StateRef::bottom();
    } else {
      image[b] = StateRef::plain(leader.size());
      leader.push_back(blocks[b].front());
    }
  }
  Automaton out(a.alphabet(), leader.size(), a.mode());
  auto map = [&](StateRef q) { return image[block_of[q.extended(n)]]; };
  out.set_initial(map(a.initial()));
  for (std::size_t i = 0; i < leader.size(); ++i) {
    StateRef q = StateRef::plain(leader[i]);
    for (std::size_t s = 0; s < k; ++s) out.set_successor(i, s, map(a.successor(q, s)));
    out.set_final(i, a.is_final(q));
  }
  return canonicalize(out);
}

Ranking build_ranking(const Automaton& a) {
  const SccDecomposition d = scc_decompose(a);
  Ranking r;
  r.state_count = a.state_count();
  r.rank.assign(a.state_count() + 2, npos);
  for (std::size_t v = 0; v < a.state_count() + 2; ++v)
    if (d.scc_of[v] != npos) r.rank[v] = d.topo_rank[d.scc_of[v]];
  return r;
}

std::vector<StateRef> pick_representatives(const Partition& p, const Ranking& r) {
  std::vector<StateRef> reps;
  reps.reserve(p.classes.size());
  for (const auto& members : p.classes) {
    StateRef best = members.front();
    for (StateRef q : members)
      if (r.of(q) > r.of(best) || (r.of(q) == r.of(best) && display_less(q, best)))
        best = q;
    reps.push_back(best);
  }
  return reps;
}

Automaton rewire(const Automaton& b, const Partition& p,
                 const std::vector<StateRef>& reps) {
  const Ranking rank = build_ranking(b);
  Automaton c = b;
  c.set_initial(reps[p.of(b.initial())]);
  for (std::size_t q = 0; q < b.state_count(); ++q) {
    StateRef src = StateRef::plain(q);
    if (rank.of(src) == npos) continue;
    for (std::size_t s = 0; s < b.alphabet_size(); ++s) {
      StateRef rep = reps[p.of(b.successor(src, s))];
      bool same_scc = rep.is_plain() && rank.of(rep) == rank.of(src);
      if (!same_scc) c.set_successor(q, s, rep);
    }
  }
  return c;
}

Automaton relative_minimise(const Automaton& a) {
  require_final_states(a, "relative_minimise");
  const Automaton b = hopcroft_min(a.relabelled(Acceptance::finite));
  const Partition quotient = almost_equiv_quotient(b);
  const auto reps = pick_representatives(quotient, build_ranking(b));
  return hopcroft_min(rewire(b, quotient, reps)).relabelled(a.mode());
}

Automaton reduce_omega(const Automaton& a) {
  require_buchi_or_cobuchi(a, "reduce_omega");
  const Automaton b = hopcroft_min(a);
  const Partition quotient = omega_equiv_quotient(b);
  const auto reps = pick_representatives(quotient, build_ranking(b));
  return hopcroft_min(rewire(b, quotient, reps));
}

bool is_weak(const Automaton& a) {
  const SccDecomposition d = scc_decompose(a);
  for (const auto& members : d.sccs) {
    if (members.front().is_sink()) continue;
    const unsigned first = a.priority(members.front());
    for (StateRef q : members)
      if (a.priority(q) != first) return false;
  }
  return true;
}

Automaton normalize_weak_sccs(const Automaton& a) {
  require_buchi_or_cobuchi(a, "normalize_weak_sccs");
  const bool buchi = a.mode() == Acceptance::buchi;
  const std::size_t n = a.state_count();
  const SccDecomposition d = scc_decompose(a);
  Automaton out = a;
  for (std::size_t c = 0; c < d.sccs.size(); ++c) {
    const auto& members = d.sccs[c];
    if (d.trivial[c] || members.front().is_sink()) continue;
    // Buchi: every cycle in S meets F iff S \ F is acyclic.
    // co-Buchi: every cycle in S leaves F iff S n F is acyclic.
    std::vector<std::size_t> local(n, npos);
    std::vector<StateRef> part;
    for (StateRef q : members)
      if (a.is_final(q) != buchi) {
        local[q.index()] = part.size();
        part.push_back(q);
      }
    Digraph g(part.size());
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t s = 0; s < a.alphabet_size(); ++s) {
        StateRef t = a.successor(part[i], s);
        if (t.is_plain() && local[t.index()] != npos)
          g[i].push_back(static_cast<std::uint32_t>(local[t.index()]));
      }
    const GraphSccs sub = strongly_connected_components(g);
    const bool acyclic =
        std::none_of(sub.nontrivial.begin(), sub.nontrivial.end(), [](bool x) { return x; });
    if (acyclic)
      for (StateRef q : members) out.set_final(q.index(), buchi);
  }
  return out;
}

Automaton weak_minimise(const Automaton& a, bool require_weak) {
  require_buchi_or_cobuchi(a, "weak_minimise");
  if (require_weak && !is_weak(a)) throw ModeError("automaton is not weak");
  return relative_minimise(normalize_weak_sccs(a));
}

Automaton merge_into(const Automaton& a, std::size_t p, std::size_t q) {
  const std::size_t n = a.state_count();
  if (p >= n || q >= n || p == q) throw InputError("merge_into: bad state pair");
  auto map = [&](StateRef t) {
    if (!t.is_plain()) return t;
    std::size_t i = t.index() == p ? q : t.index();
    return StateRef::plain(i > p ? i - 1 : i);
  };
  Automaton out(a.alphabet(), n - 1, a.mode());
  out.set_initial(map(a.initial()));
  for (std::size_t old = 0; old < n; ++old) {
    if (old == p) continue;
    const std::size_t i = old > p ? old - 1 : old;
    StateRef src = StateRef::plain(old);
    for (std::size_t s = 0; s < a.alphabet_size(); ++s)
      out.set_successor(i, s, map(a.successor(src, s)));
    if (a.mode() == Acceptance::parity)
      out.set_priority(i, a.priority(src));
    else
      out.set_final(i, a.is_final(src));
  }
  return out;
}

Automaton greedy_merge(const Automaton& a) {
  if (a.mode() == Acceptance::finite)
    throw ModeError("greedy_merge needs an omega automaton");
  Automaton current = reachable_part(a);
  for (bool merged = true; merged;) {
    merged = false;
    const std::size_t n = current.state_count();
    const SccDecomposition d = scc_decompose(current);
    const Partition quotient = omega_equiv_quotient(current);
    for (std::size_t p = 0; p < n && !merged; ++p)
      for (std::size_t q = 0; q < n && !merged; ++q) {
        if (p == q) continue;
        StateRef sp = StateRef::plain(p), sq = StateRef::plain(q);
        if (d.of(sp, n) != d.of(sq, n) || !quotient.same(sp, sq)) continue;
        Automaton candidate = merge_into(current, p, q);
        if (omega_equiv(current, candidate)) {
          current = reachable_part(candidate);
          merged = true;
        }
      }
  }
  return current;
}

}  // namespace autmin
