#include "autmin/core.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <set>

#include "autmin/errors.hpp"
#include "autmin/scc.hpp"

namespace autmin {

FiniteRun run_finite(const Automaton& a, const Word& word) {
  if (a.mode() == Acceptance::parity)
    throw ModeError("run_finite needs a finite-mode automaton");
  StateRef q = a.initial();
  for (std::size_t s : word) q = a.successor(q, s);
  return {q, a.is_final(q)};
}

FiniteRun run_finite(const Automaton& a, std::span<const std::string> word) {
  return run_finite(a, a.encode(word));
}

LassoRun run_lasso_from(const Automaton& a, StateRef from, const Word& prefix,
                        const Word& loop) {
  if (loop.empty()) throw InputError("lasso loop must not be empty");
  if (a.mode() == Acceptance::finite)
    throw ModeError("lasso runs need an omega automaton");
  StateRef q = from;
  for (std::size_t s : prefix) q = a.successor(q, s);

  const std::size_t n = a.state_count();
  const std::size_t period = loop.size();
  // step at which (state, loop position) was first seen, 0 = never
  std::vector<std::size_t> seen((n + 2) * period, 0);
  std::vector<unsigned> priorities;
  for (std::size_t step = 1;; ++step) {
    std::size_t pos = (step - 1) % period;
    std::size_t key = q.extended(n) * period + pos;
    if (seen[key] != 0) {
      unsigned best = 0;
      for (std::size_t i = seen[key] - 1; i < priorities.size(); ++i)
        best = std::max(best, priorities[i]);
      return {best % 2 == 0, best};
    }
    seen[key] = step;
    priorities.push_back(a.priority(q));
    q = a.successor(q, loop[pos]);
  }
}

LassoRun run_lasso(const Automaton& a, const Lasso& lasso) {
  return run_lasso_from(a, a.initial(), a.encode(lasso.prefix),
                        a.encode(lasso.loop));
}

Automaton view_as(const Automaton& a, Acceptance mode) {
  if (a.mode() == mode) return a;
  const std::size_t n = a.state_count();
  if (a.mode() != Acceptance::parity && mode != Acceptance::parity)
    return a.relabelled(mode);

  Automaton out(a.alphabet(), n, mode);
  out.set_initial(a.initial());
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t s = 0; s < a.alphabet_size(); ++s)
      out.set_successor(q, s, a.successor(StateRef::plain(q), s));

  if (mode == Acceptance::parity) {
    unsigned rejecting = a.mode() == Acceptance::cobuchi ? 3 : 1;
    for (std::size_t q = 0; q < n; ++q)
      out.set_priority(q, a.is_final(StateRef::plain(q)) ? 2 : rejecting);
    return out;
  }

  // parity -> finite/buchi/cobuchi: the image must fit {1,2} or {2,3}
  bool fits12 = true;
  bool fits23 = true;
  for (std::size_t q = 0; q < n; ++q) {
    unsigned p = a.priority(StateRef::plain(q));
    fits12 = fits12 && (p == 1 || p == 2);
    fits23 = fits23 && (p == 2 || p == 3);
  }
  bool ok = mode == Acceptance::buchi     ? fits12
            : mode == Acceptance::cobuchi ? fits23
                                          : (fits12 || fits23);
  if (!ok)
    throw ModeError("priority image does not fit " +
                    std::string(to_string(mode)) + " acceptance");
  for (std::size_t q = 0; q < n; ++q)
    out.set_final(q, a.priority(StateRef::plain(q)) == 2);
  return out;
}

Automaton normalize_priorities(const Automaton& a) {
  if (a.mode() != Acceptance::parity)
    throw ModeError("normalize_priorities needs a parity automaton");
  Automaton out = a;
  const std::size_t n = a.state_count();
  for (;;) {
    std::set<unsigned> used;
    for (std::size_t q = 0; q < n; ++q) used.insert(out.priority(StateRef::plain(q)));
    if (used.empty()) break;
    unsigned top = *used.rbegin();
    std::optional<unsigned> gap;
    for (unsigned p = 2; p < top; ++p)
      if (!used.contains(p)) {
        gap = p;
        break;
      }
    if (!gap) break;
    for (std::size_t q = 0; q < n; ++q) {
      unsigned p = out.priority(StateRef::plain(q));
      if (p > *gap) out.set_priority(q, p - 2);
    }
  }
  return out;
}

Automaton with_initial(const Automaton& a, StateRef q) {
  Automaton out = a;
  out.set_initial(q);
  return out;
}

std::vector<bool> reachable_states(const Automaton& a) {
  std::vector<bool> seen(a.state_count(), false);
  if (!a.initial().is_plain()) return seen;
  std::vector<std::size_t> stack{a.initial().index()};
  seen[a.initial().index()] = true;
  while (!stack.empty()) {
    std::size_t q = stack.back();
    stack.pop_back();
    for (std::size_t s = 0; s < a.alphabet_size(); ++s) {
      StateRef t = a.successor(StateRef::plain(q), s);
      if (t.is_plain() && !seen[t.index()]) {
        seen[t.index()] = true;
        stack.push_back(t.index());
      }
    }
  }
  return seen;
}

namespace {

// Copy of `a` restricted to `order` (old indices, in new numbering order)
// with its alphabet permuted by `symbols` (new position -> old index).
Automaton renumbered(const Automaton& a, const std::vector<std::size_t>& order,
                     const std::vector<std::size_t>& symbols) {
  const std::size_t n = a.state_count();
  std::vector<std::size_t> fresh(n, npos);
  for (std::size_t i = 0; i < order.size(); ++i) fresh[order[i]] = i;
  auto map = [&](StateRef q) {
    return q.is_plain() ? StateRef::plain(fresh[q.index()]) : q;
  };

  std::vector<std::string> alphabet;
  for (std::size_t s : symbols) alphabet.push_back(a.alphabet()[s]);
  Automaton out(std::move(alphabet), order.size(), a.mode());
  out.set_initial(map(a.initial()));
  for (std::size_t i = 0; i < order.size(); ++i) {
    StateRef q = StateRef::plain(order[i]);
    for (std::size_t s = 0; s < symbols.size(); ++s)
      out.set_successor(i, s, map(a.successor(q, symbols[s])));
    if (a.mode() == Acceptance::parity)
      out.set_priority(i, a.priority(q));
    else
      out.set_final(i, a.is_final(q));
  }
  return out;
}

std::vector<std::size_t> identity(std::size_t k) {
  std::vector<std::size_t> v(k);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

Automaton reachable_part(const Automaton& a) {
  auto reach = reachable_states(a);
  std::vector<std::size_t> order;
  for (std::size_t q = 0; q < a.state_count(); ++q)
    if (reach[q]) order.push_back(q);
  return renumbered(a, order, identity(a.alphabet_size()));
}

Automaton canonicalize(const Automaton& a) {
  std::vector<std::size_t> symbols = identity(a.alphabet_size());
  std::sort(symbols.begin(), symbols.end(), [&](std::size_t x, std::size_t y) {
    return a.alphabet()[x] < a.alphabet()[y];
  });

  std::vector<std::size_t> order;
  std::vector<bool> seen(a.state_count(), false);
  if (a.initial().is_plain()) {
    seen[a.initial().index()] = true;
    order.push_back(a.initial().index());
    for (std::size_t head = 0; head < order.size(); ++head)
      for (std::size_t s : symbols) {
        StateRef t = a.successor(StateRef::plain(order[head]), s);
        if (t.is_plain() && !seen[t.index()]) {
          seen[t.index()] = true;
          order.push_back(t.index());
        }
      }
  }
  return renumbered(a, order, symbols);
}

bool isomorphic(const Automaton& a, const Automaton& b) {
  return canonicalize(a) == canonicalize(b);
}

Automaton align_alphabet(const Automaton& a, const Automaton& b) {
  std::set<std::string> sa(a.alphabet().begin(), a.alphabet().end());
  std::set<std::string> sb(b.alphabet().begin(), b.alphabet().end());
  if (sa != sb) {
    std::vector<std::string> diff;
    std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                  std::back_inserter(diff));
    std::string listed;
    for (const auto& s : diff) listed += (listed.empty() ? "" : ", ") + s;
    throw InputError("alphabet mismatch: {" + listed + "}");
  }
  if (a.alphabet() == b.alphabet()) return b;
  std::vector<std::size_t> symbols;
  for (const auto& s : a.alphabet()) symbols.push_back(*b.symbol_index(s));
  return renumbered(b, identity(b.state_count()), symbols);
}

}  // namespace autmin
