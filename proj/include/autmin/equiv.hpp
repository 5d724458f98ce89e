#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autmin/automaton.hpp"
#include "autmin/scc.hpp"

namespace autmin {

/// Synchronous product of two automata over the same alphabet, restricted
/// to pairs reachable from the initial pair. Acceptance is left to callers.
struct PairGraph {
  std::size_t alphabet_size = 0;
  std::vector<std::pair<StateRef, StateRef>> pairs;  // BFS discovery order
  std::vector<std::uint32_t> succ;                   // pairs.size() * alphabet_size
  std::vector<std::uint32_t> parent;                 // BFS tree, root points to itself
  std::vector<std::uint32_t> parent_symbol;

  std::size_t size() const noexcept { return pairs.size(); }
  std::uint32_t successor(std::size_t pair, std::size_t symbol) const {
    return succ[pair * alphabet_size + symbol];
  }
  Digraph digraph() const;
  /// Shortest symbol path from the initial pair (index 0) to `pair`.
  Word path_to(std::size_t pair) const;
};

PairGraph product(const Automaton& a, const Automaton& b);

struct DiffWitness {
  enum class Side { first, second };
  Lasso lasso;
  Side side = Side::first;  // the automaton that accepts the lasso
};

/// A lasso in L(p1) \ L(p2), if there is one. Inputs of any omega mode are
/// read through their parity view.
std::optional<DiffWitness> omega_diff_nonempty(const Automaton& p1,
                                               const Automaton& p2);

bool omega_equiv(const Automaton& a, const Automaton& b);

/// A finite word accepted by exactly one of the two DFAs (shortest, BFS).
std::optional<std::vector<std::string>> dfa_diff_word(const Automaton& a,
                                                      const Automaton& b);
bool dfa_equiv(const Automaton& a, const Automaton& b);

/// Boolean relation on Q+ x Q+ of one automaton, indexed by extended index.
class PairRelation {
 public:
  PairRelation() = default;
  explicit PairRelation(std::size_t state_count)
      : n_(state_count), bits_((state_count + 2) * (state_count + 2)) {}

  std::size_t state_count() const noexcept { return n_; }
  bool contains(StateRef p, StateRef q) const {
    return bits_[p.extended(n_) * (n_ + 2) + q.extended(n_)];
  }
  bool contains_ext(std::size_t p, std::size_t q) const {
    return bits_[p * (n_ + 2) + q];
  }
  void set_ext(std::size_t p, std::size_t q, bool v = true) {
    bits_[p * (n_ + 2) + q] = v;
  }

  friend bool operator==(const PairRelation&, const PairRelation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> bits_;
};

/// Quotient of the reachable part of Q+ (both sinks always included).
struct Partition {
  std::size_t state_count = 0;
  std::vector<std::size_t> class_of;  // extended index -> class, npos if unreachable
  std::vector<std::vector<StateRef>> classes;

  std::size_t of(StateRef q) const { return class_of[q.extended(state_count)]; }
  bool same(StateRef p, StateRef q) const { return of(p) == of(q); }
};

/// Groups the reachable states of an n-state automaton by an equivalence
/// given as a predicate on extended indices. Classes are ordered by their
/// first member (plain ascending, then Top, then Bottom).
Partition partition_from_relation(std::size_t n, const std::vector<bool>& reachable,
                                  const PairRelation& equivalent);

/// Pairs (p,q) of the all-pairs product from which a discordant pair on a
/// cycle is reachable; p and q are almost equivalent iff (p,q) is absent.
PairRelation almost_inequivalence(const Automaton& a);

Partition almost_equiv_quotient(const Automaton& a);

/// Ordered pairs (p,q) with L(B_p) \ L(B_q) non-empty, via the 3/2/1
/// priority decoration of B x B.
PairRelation buchi_diff_states(const Automaton& b);

/// Same relation for any omega automaton, via the (even, odd) threshold
/// decomposition used by omega_diff_nonempty.
PairRelation parity_diff_states(const Automaton& a);

Partition omega_equiv_quotient(const Automaton& a);

/// Plain states of `a` followed by those of `b` (shifted); initial from `a`.
Automaton disjoint_union(const Automaton& a, const Automaton& b);

/// Almost equivalence of the initial states, decided on the disjoint union.
bool almost_equivalent(const Automaton& a, const Automaton& b);

}  // namespace autmin
