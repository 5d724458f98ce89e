#include "autmin/equiv.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "autmin/core.hpp"
#include "autmin/errors.hpp"

namespace autmin {

Digraph PairGraph::digraph() const {
  Digraph g(size());
  for (std::size_t v = 0; v < size(); ++v) {
    for (std::size_t s = 0; s < alphabet_size; ++s) g[v].push_back(successor(v, s));
    std::sort(g[v].begin(), g[v].end());
    g[v].erase(std::unique(g[v].begin(), g[v].end()), g[v].end());
  }
  return g;
}

Word PairGraph::path_to(std::size_t pair) const {
  Word word;
  while (pair != 0) {
    word.push_back(parent_symbol[pair]);
    pair = parent[pair];
  }
  std::reverse(word.begin(), word.end());
  return word;
}

PairGraph product(const Automaton& a, const Automaton& b_in) {
  const Automaton b = align_alphabet(a, b_in);
  const std::size_t na = a.state_count() + 2;
  const std::size_t nb = b.state_count() + 2;
  const std::size_t k = a.alphabet_size();

  PairGraph g;
  g.alphabet_size = k;
  std::vector<std::uint32_t> id(na * nb, UINT32_MAX);
  auto visit = [&](StateRef p, StateRef q, std::uint32_t from, std::size_t sym) {
    std::size_t key = p.extended(na - 2) * nb + q.extended(nb - 2);
    if (id[key] == UINT32_MAX) {
      id[key] = static_cast<std::uint32_t>(g.pairs.size());
      g.pairs.emplace_back(p, q);
      g.parent.push_back(from);
      g.parent_symbol.push_back(static_cast<std::uint32_t>(sym));
    }
    return id[key];
  };
  visit(a.initial(), b.initial(), 0, 0);
  for (std::size_t head = 0; head < g.pairs.size(); ++head) {
    auto [p, q] = g.pairs[head];
    for (std::size_t s = 0; s < k; ++s) {
      std::uint32_t t = visit(a.successor(p, s), b.successor(q, s),
                              static_cast<std::uint32_t>(head), s);
      g.succ.push_back(t);
    }
  }
  return g;
}

namespace {

std::vector<std::string> decode(const Automaton& a, const Word& w) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (std::size_t s : w) out.push_back(a.alphabet()[s]);
  return out;
}

// Shortest symbol path from `from` to `to` through nodes with inside[v],
// taking at least one step.
Word inner_path(const PairGraph& g, std::size_t from, std::size_t to,
                const std::vector<bool>& inside) {
  std::vector<std::uint32_t> parent(g.size(), UINT32_MAX), via(g.size(), 0);
  std::deque<std::uint32_t> queue;
  auto expand = [&](std::size_t v) -> bool {
    for (std::size_t s = 0; s < g.alphabet_size; ++s) {
      std::uint32_t w = g.successor(v, s);
      if (!inside[w] || parent[w] != UINT32_MAX) continue;
      parent[w] = static_cast<std::uint32_t>(v);
      via[w] = static_cast<std::uint32_t>(s);
      if (w == to) return true;
      queue.push_back(w);
    }
    return false;
  };
  bool found = expand(from);
  while (!found && !queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    found = expand(v);
  }
  if (!found) throw std::logic_error("inner_path: target unreachable inside SCC");
  Word word;
  std::size_t v = to;
  do {
    word.push_back(via[v]);
    v = parent[v];
  } while (v != from);
  std::reverse(word.begin(), word.end());
  return word;
}

// All-pairs product of `a` with itself, nodes ext(p) * (n+2) + ext(q).
Digraph square_graph(const Automaton& a) {
  const std::size_t m = a.state_count() + 2;
  Digraph g(m * m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      auto& out = g[p * m + q];
      for (std::size_t s = 0; s < a.alphabet_size(); ++s) {
        StateRef tp = a.successor(StateRef::from_extended(p, m - 2), s);
        StateRef tq = a.successor(StateRef::from_extended(q, m - 2), s);
        out.push_back(static_cast<std::uint32_t>(tp.extended(m - 2) * m + tq.extended(m - 2)));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
  return g;
}

Digraph restricted(const Digraph& g, const std::vector<bool>& keep) {
  Digraph sub(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!keep[v]) continue;
    for (std::uint32_t w : g[v])
      if (keep[w]) sub[v].push_back(w);
  }
  return sub;
}

PairRelation to_relation(std::size_t n, const std::vector<bool>& bits) {
  PairRelation rel(n);
  const std::size_t m = n + 2;
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      if (bits[p * m + q]) rel.set_ext(p, q);
  return rel;
}

std::vector<bool> reachable_with_sinks(const Automaton& a) {
  auto reach = reachable_states(a);
  reach.push_back(true);
  reach.push_back(true);
  return reach;
}

}  // namespace

std::optional<DiffWitness> omega_diff_nonempty(const Automaton& p1,
                                               const Automaton& p2_in) {
  const Automaton p2 = align_alphabet(p1, p2_in);
  const PairGraph g = product(p1, p2);
  const std::size_t size = g.size();
  std::vector<unsigned> pr1(size), pr2(size);
  std::set<unsigned> evens, odds;
  for (std::size_t v = 0; v < size; ++v) {
    pr1[v] = p1.priority(g.pairs[v].first);
    pr2[v] = p2.priority(g.pairs[v].second);
    if (pr1[v] % 2 == 0) evens.insert(pr1[v]);
    if (pr2[v] % 2 == 1) odds.insert(pr2[v]);
  }
  const Digraph full = g.digraph();

  for (unsigned e : evens)
    for (unsigned o : odds) {
      std::vector<bool> allowed(size);
      for (std::size_t v = 0; v < size; ++v) allowed[v] = pr1[v] <= e && pr2[v] <= o;
      GraphSccs sccs = strongly_connected_components(restricted(full, allowed));
      std::vector<bool> has_e(sccs.count, false), has_o(sccs.count, false);
      for (std::size_t v = 0; v < size; ++v) {
        if (!allowed[v]) continue;
        if (pr1[v] == e) has_e[sccs.component[v]] = true;
        if (pr2[v] == o) has_o[sccs.component[v]] = true;
      }
      for (std::size_t anchor = 0; anchor < size; ++anchor) {
        std::size_t c = sccs.component[anchor];
        if (!allowed[anchor] || pr1[anchor] != e || !has_o[c] || !sccs.nontrivial[c])
          continue;
        std::vector<bool> inside(size);
        std::size_t other = npos;
        for (std::size_t v = 0; v < size; ++v) {
          inside[v] = allowed[v] && sccs.component[v] == c;
          if (inside[v] && other == npos && pr2[v] == o) other = v;
        }
        Word loop;
        if (other == anchor) {
          loop = inner_path(g, anchor, anchor, inside);
        } else {
          loop = inner_path(g, anchor, other, inside);
          Word back = inner_path(g, other, anchor, inside);
          loop.insert(loop.end(), back.begin(), back.end());
        }
        DiffWitness w;
        w.lasso.prefix = decode(p1, g.path_to(anchor));
        w.lasso.loop = decode(p1, loop);
        w.side = DiffWitness::Side::first;
        return w;
      }
    }
  return std::nullopt;
}

bool omega_equiv(const Automaton& a, const Automaton& b) {
  return !omega_diff_nonempty(a, b) && !omega_diff_nonempty(b, a);
}

std::optional<std::vector<std::string>> dfa_diff_word(const Automaton& a,
                                                      const Automaton& b) {
  const PairGraph g = product(a, b);
  for (std::size_t v = 0; v < g.size(); ++v)
    if (a.is_final(g.pairs[v].first) != b.is_final(g.pairs[v].second))
      return decode(a, g.path_to(v));
  return std::nullopt;
}

bool dfa_equiv(const Automaton& a, const Automaton& b) {
  return !dfa_diff_word(a, b).has_value();
}

Partition partition_from_relation(std::size_t n, const std::vector<bool>& reachable,
                                  const PairRelation& equivalent) {
  Partition p;
  p.state_count = n;
  p.class_of.assign(n + 2, npos);
  for (std::size_t v = 0; v < n + 2; ++v) {
    if (!reachable[v] || p.class_of[v] != npos) continue;
    const std::size_t c = p.classes.size();
    p.classes.emplace_back();
    for (std::size_t w = v; w < n + 2; ++w)
      if (reachable[w] && p.class_of[w] == npos && equivalent.contains_ext(v, w)) {
        p.class_of[w] = c;
        p.classes[c].push_back(StateRef::from_extended(w, n));
      }
  }
  return p;
}

PairRelation almost_inequivalence(const Automaton& a) {
  if (a.mode() == Acceptance::parity)
    throw ModeError("almost equivalence is defined on final-state automata");
  const std::size_t n = a.state_count();
  const std::size_t m = n + 2;
  const Digraph g = square_graph(a);
  const GraphSccs sccs = strongly_connected_components(g);
  std::vector<bool> target(m * m, false);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      std::size_t v = p * m + q;
      bool discordant = a.is_final(StateRef::from_extended(p, n)) !=
                        a.is_final(StateRef::from_extended(q, n));
      target[v] = discordant && sccs.nontrivial[sccs.component[v]];
    }
  return to_relation(n, backward_reachable(g, target));
}

Partition almost_equiv_quotient(const Automaton& a) {
  const PairRelation bad = almost_inequivalence(a);
  const std::size_t n = a.state_count();
  PairRelation eq(n);
  for (std::size_t p = 0; p < n + 2; ++p)
    for (std::size_t q = 0; q < n + 2; ++q) eq.set_ext(p, q, !bad.contains_ext(p, q));
  return partition_from_relation(n, reachable_with_sinks(a), eq);
}

PairRelation buchi_diff_states(const Automaton& b) {
  if (b.mode() != Acceptance::buchi && b.mode() != Acceptance::finite)
    throw ModeError("buchi_diff_states needs a Buchi automaton");
  const std::size_t n = b.state_count();
  const std::size_t m = n + 2;
  const Digraph g = square_graph(b);
  std::vector<unsigned> priority(m * m);
  std::vector<bool> keep(m * m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      bool fp = b.is_final(StateRef::from_extended(p, n));
      bool fq = b.is_final(StateRef::from_extended(q, n));
      priority[p * m + q] = fq ? 3 : (fp ? 2 : 1);
      keep[p * m + q] = !fq;
    }
  const GraphSccs sccs = strongly_connected_components(restricted(g, keep));
  std::vector<bool> target(m * m, false);
  for (std::size_t v = 0; v < m * m; ++v)
    target[v] = keep[v] && priority[v] == 2 && sccs.nontrivial[sccs.component[v]];
  return to_relation(n, backward_reachable(g, target));
}

PairRelation parity_diff_states(const Automaton& a) {
  const std::size_t n = a.state_count();
  const std::size_t m = n + 2;
  const Digraph g = square_graph(a);
  std::vector<unsigned> pr(m);
  std::set<unsigned> evens, odds;
  for (std::size_t v = 0; v < m; ++v) {
    pr[v] = a.priority(StateRef::from_extended(v, n));
    (pr[v] % 2 == 0 ? evens : odds).insert(pr[v]);
  }
  std::vector<bool> target(m * m, false);
  for (unsigned e : evens)
    for (unsigned o : odds) {
      std::vector<bool> allowed(m * m);
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) allowed[p * m + q] = pr[p] <= e && pr[q] <= o;
      const GraphSccs sccs = strongly_connected_components(restricted(g, allowed));
      std::vector<bool> has_e(sccs.count, false), has_o(sccs.count, false);
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
          std::size_t v = p * m + q;
          if (!allowed[v]) continue;
          if (pr[p] == e) has_e[sccs.component[v]] = true;
          if (pr[q] == o) has_o[sccs.component[v]] = true;
        }
      for (std::size_t v = 0; v < m * m; ++v) {
        std::size_t c = sccs.component[v];
        if (allowed[v] && sccs.nontrivial[c] && has_e[c] && has_o[c]) target[v] = true;
      }
    }
  return to_relation(n, backward_reachable(g, target));
}

Partition omega_equiv_quotient(const Automaton& a) {
  PairRelation diff;
  switch (a.mode()) {
    case Acceptance::buchi: diff = buchi_diff_states(a); break;
    case Acceptance::cobuchi:
    case Acceptance::parity: diff = parity_diff_states(a); break;
    case Acceptance::finite:
      throw ModeError("omega_equiv_quotient needs an omega automaton");
  }
  const std::size_t n = a.state_count();
  PairRelation eq(n);
  for (std::size_t p = 0; p < n + 2; ++p)
    for (std::size_t q = 0; q < n + 2; ++q)
      eq.set_ext(p, q, !diff.contains_ext(p, q) && !diff.contains_ext(q, p));
  return partition_from_relation(n, reachable_with_sinks(a), eq);
}

Automaton disjoint_union(const Automaton& a, const Automaton& b_in) {
  const Automaton b = align_alphabet(a, b_in);
  const bool parity = a.mode() == Acceptance::parity;
  if (parity != (b.mode() == Acceptance::parity))
    throw ModeError("disjoint_union needs matching acceptance kinds");
  const std::size_t na = a.state_count();
  const std::size_t nb = b.state_count();
  Automaton u(a.alphabet(), na + nb, a.mode());
  u.set_initial(a.initial());
  auto shift = [&](StateRef q, std::size_t by) {
    return q.is_plain() ? StateRef::plain(q.index() + by) : q;
  };
  for (std::size_t q = 0; q < na + nb; ++q) {
    const Automaton& src = q < na ? a : b;
    const std::size_t local = q < na ? q : q - na;
    const std::size_t by = q < na ? 0 : na;
    for (std::size_t s = 0; s < a.alphabet_size(); ++s)
      u.set_successor(q, s, shift(src.successor(StateRef::plain(local), s), by));
    if (parity)
      u.set_priority(q, src.priority(StateRef::plain(local)));
    else
      u.set_final(q, src.is_final(StateRef::plain(local)));
  }
  return u;
}

bool almost_equivalent(const Automaton& a, const Automaton& b) {
  const Automaton u = disjoint_union(a, b);
  StateRef ib = b.initial().is_plain()
                    ? StateRef::plain(b.initial().index() + a.state_count())
                    : b.initial();
  return !almost_inequivalence(u).contains(a.initial(), ib);
}

}  // namespace autmin
