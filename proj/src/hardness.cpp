#include "autmin/hardness.hpp"

#include <algorithm>
#include <set>

#include "autmin/core.hpp"
#include "autmin/equiv.hpp"
#include "autmin/errors.hpp"
#include "autmin/minimise.hpp"
#include "autmin/scc.hpp"

namespace autmin {

std::optional<std::size_t> Graph::find(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return i;
  return std::nullopt;
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  auto e = std::minmax(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::pair(e.first, e.second));
}

VertexSet Graph::resolve(std::span<const std::string> names) const {
  VertexSet out;
  for (const auto& name : names) {
    auto i = find(name);
    if (!i) throw InputError("unknown vertex '" + name + "'");
    out.push_back(*i);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> Graph::names(const VertexSet& set) const {
  std::vector<std::string> out;
  for (std::size_t v : set) out.push_back(vertices.at(v));
  return out;
}

void Graph::validate_simple() const {
  std::set<std::string> seen;
  for (const auto& name : vertices) {
    if (name.empty()) throw InputError("empty vertex name");
    if (name == kStopSymbol) throw InputError("vertex name '#' is reserved");
    if (!seen.insert(name).second) throw InputError("duplicate vertex '" + name + "'");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u >= size() || v >= size()) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("self-loop on '" + vertices[u] + "'");
    if (u > v) throw InputError("edge endpoints must be ordered");
    if (i > 0 && edges[i - 1] == edges[i])
      throw InputError("duplicate edge {" + vertices[u] + ", " + vertices[v] + "}");
  }
  if (initial && *initial >= size()) throw InputError("initial vertex out of range");
}

Graph make_graph(std::vector<std::string> vertices,
                 std::vector<std::pair<std::size_t, std::size_t>> edges,
                 std::optional<std::size_t> initial) {
  Graph g;
  g.vertices = std::move(vertices);
  for (auto [u, v] : edges) {
    if (u == v) throw InputError("self-loop in graph");
    g.edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.initial = initial;
  g.validate_simple();
  return g;
}

NiceGraph::NiceGraph(Graph g) : g_(std::move(g)) {
  g_.validate_simple();
  if (!g_.initial) throw InputError("nice graphs need an initial vertex");
  if (g_.size() < 2) throw InputError("nice graphs need more than one vertex");
  std::vector<std::vector<std::size_t>> adj(g_.size());
  for (auto [u, v] : g_.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(g_.size(), false);
  std::vector<std::size_t> stack{*g_.initial};
  seen[*g_.initial] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  if (count != g_.size()) throw InputError("graph is not connected");
}

NiceGraph make_nice(const Graph& g) {
  g.validate_simple();
  std::string hub = "v", spare = "v'";
  for (std::size_t k = 1; g.find(hub) || g.find(spare); ++k) {
    hub = "v_" + std::to_string(k);
    spare = "v'_" + std::to_string(k);
  }
  Graph out = g;
  const std::size_t h = out.vertices.size();
  out.vertices.push_back(hub);
  out.vertices.push_back(spare);
  for (std::size_t w = 0; w < h; ++w) out.edges.emplace_back(w, h);
  out.edges.emplace_back(h, h + 1);
  std::sort(out.edges.begin(), out.edges.end());
  out.initial = h;
  return NiceGraph(std::move(out));
}

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
  std::vector<bool> in(g.size(), false);
  for (std::size_t v : cover) {
    if (v >= g.size()) throw InputError("cover vertex out of range");
    in[v] = true;
  }
  return std::all_of(g.edges.begin(), g.edges.end(),
                     [&](auto e) { return in[e.first] || in[e.second]; });
}

VertexSet min_cover_bruteforce(const Graph& g) {
  const std::size_t n = g.size();
  if (n > kMaxCoverVertices)
    throw ResourceError("vertex cover search limited to " +
                        std::to_string(kMaxCoverVertices) + " vertices, got " +
                        std::to_string(n));
  for (std::size_t k = 0; k <= n; ++k) {
    // combinations of k indices in lexicographic order
    VertexSet pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      if (is_vertex_cover(g, pick)) return pick;
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {};
}

Automaton characteristic_dba(const NiceGraph& nice, const VertexSet& cover) {
  const Graph& g = nice.graph();
  if (!is_vertex_cover(g, cover)) throw InputError("vertex set is not a vertex cover");
  const std::size_t n = g.size();
  std::vector<std::size_t> accepting_of(n, npos);
  for (std::size_t j = 0; j < cover.size(); ++j) accepting_of[cover[j]] = 2 * n + j;

  std::vector<std::string> alphabet = g.vertices;
  alphabet.push_back(kStopSymbol);
  const std::size_t stop = n;
  Automaton b(std::move(alphabet), 2 * n + cover.size(), Acceptance::buchi);
  b.set_initial(StateRef::plain(nice.initial()));

  auto rejecting = [](std::size_t v) { return StateRef::plain(v); };
  auto stopped = [n](std::size_t v) { return StateRef::plain(n + v); };
  auto entered = [&](std::size_t v) {
    return accepting_of[v] != npos ? StateRef::plain(accepting_of[v]) : rejecting(v);
  };
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<StateRef> row(n + 1, StateRef::bottom());
    for (std::size_t w = 0; w < n; ++w) {
      if (w == v)
        row[w] = rejecting(v);
      else if (g.adjacent(v, w))
        row[w] = entered(w);
    }
    row[stop] = stopped(v);
    for (std::size_t s = 0; s <= n; ++s) {
      b.set_successor(rejecting(v).index(), s, row[s]);
      if (accepting_of[v] != npos) b.set_successor(accepting_of[v], s, row[s]);
      b.set_successor(stopped(v).index(), s, s == v ? StateRef::top() : StateRef::bottom());
    }
    if (accepting_of[v] != npos) b.set_final(accepting_of[v], true);
  }
  return b;
}

bool characteristic_member(const NiceGraph& nice, const Lasso& lasso) {
  const Graph& g = nice.graph();
  const std::size_t stop = g.size();
  auto encode = [&](const std::vector<std::string>& part) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (part[i] == kStopSymbol) {
        out.push_back(stop);
        continue;
      }
      auto v = g.find(part[i]);
      if (!v)
        throw InputError("unknown symbol '" + part[i] + "' at position " + std::to_string(i));
      out.push_back(*v);
    }
    return out;
  };
  const auto prefix = encode(lasso.prefix);
  const auto loop = encode(lasso.loop);
  if (loop.empty()) throw InputError("lasso loop must not be empty");
  auto at = [&](std::size_t i) {
    return i < prefix.size() ? prefix[i] : loop[(i - prefix.size()) % loop.size()];
  };

  // Walk the path v0* v1+ v2+ ... until the first stop symbol.
  std::size_t current = nice.initial();
  const std::size_t bound = prefix.size() + loop.size() * (g.size() + 2);
  for (std::size_t i = 0; i < bound; ++i) {
    std::size_t s = at(i);
    if (s == stop) return at(i + 1) == current;
    if (s == current) continue;
    if (!g.adjacent(current, s)) return false;
    current = s;
  }
  // No stop symbol ever: a trace-word iff the path keeps moving.
  return std::any_of(loop.begin(), loop.end(), [&](std::size_t s) { return s != loop.front(); });
}

VertexSet extract_cover(const Automaton& b, const NiceGraph& nice) {
  const Graph& g = nice.graph();
  const std::size_t n = b.state_count();
  std::vector<std::size_t> symbol(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto s = b.symbol_index(g.vertices[v]);
    if (!s) throw InputError("automaton alphabet lacks vertex '" + g.vertices[v] + "'");
    symbol[v] = *s;
  }
  std::vector<std::vector<std::size_t>> adj(g.size());
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  // (vertex, state) pairs reachable by path-shaped words
  std::vector<bool> seen(g.size() * (n + 2), false);
  std::vector<std::pair<std::size_t, StateRef>> stack;
  auto visit = [&](std::size_t v, StateRef q) {
    std::size_t key = v * (n + 2) + q.extended(n);
    if (!seen[key]) {
      seen[key] = true;
      stack.emplace_back(v, q);
    }
  };
  visit(nice.initial(), b.initial());
  VertexSet cover;
  while (!stack.empty()) {
    auto [v, q] = stack.back();
    stack.pop_back();
    if (b.is_final(q)) cover.push_back(v);
    visit(v, b.successor(q, symbol[v]));
    for (std::size_t w : adj[v]) visit(w, b.successor(q, symbol[w]));
  }
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  return cover;
}

namespace {

class CanonicalSearch {
 public:
  CanonicalSearch(const Automaton& reference, const SearchOptions& options)
      : ref_(reachable_part(reference)), opt_(options), k_(ref_.alphabet_size()) {
    if (ref_.mode() == Acceptance::parity)
      throw ModeError("canonical search does not enumerate parity automata");
    if (opt_.relation == SearchRelation::almost) {
      quotient_ = almost_equiv_quotient(ref_.relabelled(Acceptance::finite));
    } else {
      if (ref_.mode() == Acceptance::finite)
        throw ModeError("omega search needs a Buchi or co-Buchi reference");
      quotient_ = omega_equiv_quotient(ref_);
    }
    succ_.resize(quotient_.classes.size() * k_);
    for (std::size_t c = 0; c < quotient_.classes.size(); ++c)
      for (std::size_t s = 0; s < k_; ++s)
        succ_[c * k_ + s] = quotient_.of(ref_.successor(quotient_.classes[c].front(), s));
  }

  std::optional<Automaton> run() {
    for (std::size_t size = opt_.min_states; size <= opt_.max_states; ++size) {
      size_ = size;
      early_ = opt_.prune && opt_.relation == SearchRelation::omega;
      if (size == 0) {
        for (StateRef sink : {StateRef::top(), StateRef::bottom()}) {
          if (opt_.prune && quotient_.of(sink) != quotient_.of(ref_.initial())) continue;
          Automaton cand(ref_.alphabet(), 0, ref_.mode());
          cand.set_initial(sink);
          if (accepts(cand)) return cand;
        }
        continue;
      }
      table_.assign(size * k_, StateRef::bottom());
      cls_.assign(size, npos);
      cls_[0] = quotient_.of(ref_.initial());
      if (dfs(0, 1)) return found_;
    }
    return std::nullopt;
  }

 private:
  bool consistent(StateRef target, std::size_t expected) const {
    if (!opt_.prune) return true;
    if (target.is_plain()) return cls_[target.index()] == expected;
    return quotient_.of(target) == expected;
  }

  bool dfs(std::size_t slot, std::size_t discovered) {
    if (slot > 0 && early_ && !check_product(slot).viable) return false;
    if (slot == size_ * k_) return discovered == size_ && try_acceptance();
    const std::size_t state = slot / k_;
    const std::size_t sym = slot % k_;
    if (state >= discovered) return false;
    const std::size_t expected = opt_.prune ? succ_[cls_[state] * k_ + sym] : npos;

    for (std::size_t t = 0; t < discovered; ++t) {
      if (!consistent(StateRef::plain(t), expected)) continue;
      table_[slot] = StateRef::plain(t);
      if (dfs(slot + 1, discovered)) return true;
    }
    if (discovered < size_) {
      cls_[discovered] = expected;
      table_[slot] = StateRef::plain(discovered);
      if (dfs(slot + 1, discovered + 1)) return true;
      cls_[discovered] = npos;
    }
    for (StateRef sink : {StateRef::top(), StateRef::bottom()}) {
      if (!consistent(sink, expected)) continue;
      table_[slot] = sink;
      if (dfs(slot + 1, discovered)) return true;
    }
    return false;
  }

  bool try_acceptance() {
    Automaton cand(ref_.alphabet(), size_, ref_.mode());
    cand.set_initial(StateRef::plain(0));
    for (std::size_t q = 0; q < size_; ++q)
      for (std::size_t s = 0; s < k_; ++s) cand.set_successor(q, s, table_[q * k_ + s]);
    if (opt_.prune && opt_.relation == SearchRelation::omega) return try_omega_acceptance(cand);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size_); ++mask) {
      set_mask(cand, mask);
      if (accepts(cand)) {
        found_ = cand;
        return true;
      }
    }
    return false;
  }

  void set_mask(Automaton& cand, std::uint64_t mask) const {
    for (std::size_t q = 0; q < size_; ++q) cand.set_final(q, (mask >> q) & 1);
  }

  struct ProductCheck {
    bool viable = false;
    std::vector<std::pair<StateRef, StateRef>> pairs;
    Digraph g;
    std::uint64_t forbidden = 0;
  };

  // Büchi and co-Büchi readings both say: a lasso is accepted iff its cycle
  // meets (Büchi) or avoids (co-Büchi) a set of marked states, the final
  // states or their complement.  Two automata then agree iff every cycle of
  // their product meets the candidate's marks exactly when it meets the
  // reference's.  Cycles avoiding the reference marks forbid candidate marks,
  // and what remains is monotone in the candidate marks, so the largest
  // allowed mark set decides whether any acceptance set works.
  //
  // Only the first `filled` slots of the table are read.  Filling more slots
  // only adds product cycles, so a failure here survives every completion.
  ProductCheck check_product(std::size_t filled) const {
    ProductCheck out;
    const std::size_t nr = ref_.state_count();
    const std::size_t width = nr + 2;
    std::vector<std::size_t> id((size_ + 2) * width, npos);
    auto& pairs = out.pairs;
    auto visit = [&](StateRef x, StateRef r) {
      std::size_t key = x.extended(size_) * width + r.extended(nr);
      if (id[key] == npos) {
        id[key] = pairs.size();
        pairs.emplace_back(x, r);
      }
      return id[key];
    };
    visit(StateRef::plain(0), ref_.initial());
    for (std::size_t head = 0; head < pairs.size(); ++head) {
      auto [x, r] = pairs[head];
      std::vector<std::uint32_t> succ;
      for (std::size_t s = 0; s < k_; ++s) {
        StateRef y = x;
        if (x.is_plain()) {
          const std::size_t slot = x.index() * k_ + s;
          if (slot >= filled) continue;
          y = table_[slot];
        }
        succ.push_back(static_cast<std::uint32_t>(visit(y, ref_.successor(r, s))));
      }
      out.g.push_back(std::move(succ));
    }
    const std::size_t m = pairs.size();

    std::vector<bool> keep(m);
    for (std::size_t v = 0; v < m; ++v) keep[v] = !ref_marked(pairs[v].second);
    const GraphSccs free_of_ref = strongly_connected_components(restrict_to(out.g, keep));
    for (std::size_t v = 0; v < m; ++v) {
      if (!keep[v] || !free_of_ref.nontrivial[free_of_ref.component[v]]) continue;
      StateRef x = pairs[v].first;
      if (x.is_plain())
        out.forbidden |= std::uint64_t{1} << x.index();
      else if (sink_marked(x))
        return out;
    }
    out.viable = meets_marks(out, full_mask() & ~out.forbidden);
    return out;
  }

  bool ref_marked(StateRef r) const { return ref_.is_final(r) == (ref_.mode() == Acceptance::buchi); }
  // sinks: Top is final, Bottom is not
  bool sink_marked(StateRef x) const { return x.is_top() == (ref_.mode() == Acceptance::buchi); }
  std::uint64_t full_mask() const { return (std::uint64_t{1} << size_) - 1; }

  bool meets_marks(const ProductCheck& pc, std::uint64_t marks) const {
    const std::size_t m = pc.pairs.size();
    std::vector<bool> unmarked(m);
    for (std::size_t v = 0; v < m; ++v) {
      StateRef x = pc.pairs[v].first;
      unmarked[v] = x.is_plain() ? !((marks >> x.index()) & 1) : !sink_marked(x);
    }
    const GraphSccs sccs = strongly_connected_components(restrict_to(pc.g, unmarked));
    for (std::size_t v = 0; v < m; ++v)
      if (unmarked[v] && sccs.nontrivial[sccs.component[v]] && ref_marked(pc.pairs[v].second))
        return false;
    return true;
  }

  bool try_omega_acceptance(Automaton& cand) {
    const ProductCheck pc = check_product(size_ * k_);
    if (!pc.viable) return false;
    const bool buchi = ref_.mode() == Acceptance::buchi;
    const std::uint64_t full = full_mask();
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
      const std::uint64_t marks = buchi ? mask : full & ~mask;
      if ((marks & pc.forbidden) != 0 || !meets_marks(pc, marks)) continue;
      set_mask(cand, mask);
      if (opt_.require_weak && !is_weak(cand)) continue;
      found_ = cand;
      return true;
    }
    return false;
  }

  static Digraph restrict_to(const Digraph& g, const std::vector<bool>& keep) {
    Digraph sub(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (!keep[v]) continue;
      for (std::uint32_t w : g[v])
        if (keep[w]) sub[v].push_back(w);
    }
    return sub;
  }

  bool accepts(const Automaton& cand) const {
    if (opt_.require_weak && !is_weak(cand)) return false;
    if (opt_.relation == SearchRelation::almost) return almost_equivalent(cand, ref_);
    return omega_equiv(cand, ref_);
  }

  Automaton ref_;
  SearchOptions opt_;
  std::size_t k_;
  Partition quotient_;
  std::vector<std::size_t> succ_;
  std::size_t size_ = 0;
  bool early_ = false;
  std::vector<StateRef> table_;
  std::vector<std::size_t> cls_;
  Automaton found_;
};

}  // namespace

std::optional<Automaton> find_smallest_equivalent(const Automaton& reference,
                                                  const SearchOptions& options) {
  if (options.max_states > options.budget)
    throw ResourceError("search for up to " + std::to_string(options.max_states) +
                        " states exceeds the budget of " + std::to_string(options.budget));
  return CanonicalSearch(reference, options).run();
}

std::optional<Automaton> exact_min_dba(const Automaton& reference,
                                       std::size_t max_states, std::size_t budget) {
  if (reference.mode() != Acceptance::buchi)
    throw ModeError("exact_min_dba needs a Buchi automaton");
  SearchOptions opt;
  opt.max_states = max_states;
  opt.budget = budget;
  return find_smallest_equivalent(reference, opt);
}

VertexSet cover_via_minimisation(const NiceGraph& g, std::size_t budget) {
  VertexSet all(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) all[v] = v;
  const Automaton trivial = characteristic_dba(g, all);
  auto minimal = exact_min_dba(trivial, trivial.state_count(), budget);
  // the trivial-cover automaton itself is always a candidate
  return extract_cover(minimal ? *minimal : trivial, g);
}

}  // namespace autmin
