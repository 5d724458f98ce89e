#pragma once

#include <cstddef>
#include <vector>

#include "autmin/automaton.hpp"
#include "autmin/equiv.hpp"

namespace autmin {

/// Preorder on Q+ from the SCC condensation: equal rank iff same SCC
/// (plain states), reachability never decreases rank, sinks on top.
struct Ranking {
  std::size_t state_count = 0;
  std::vector<std::size_t> rank;  // extended index -> rank, npos if unreachable

  std::size_t of(StateRef q) const { return rank[q.extended(state_count)]; }
};

/// Minimal DFA for the finite-word language of the reachable part. Plain
/// states whose language is Sigma* or empty collapse into Top or Bottom.
/// The result is canonical (see canonicalize) and keeps the input's mode.
Automaton hopcroft_min(const Automaton& a);

Ranking build_ranking(const Automaton& a);

/// Per class, the member of maximal rank; ties go to the smallest index.
std::vector<StateRef> pick_representatives(const Partition& p, const Ranking& r);

/// Keeps q -> q' when q shares an SCC with the representative of q',
/// otherwise redirects to that representative. The initial state moves to
/// its representative.
Automaton rewire(const Automaton& b, const Partition& p,
                 const std::vector<StateRef>& reps);

/// Minimal automaton almost equivalent to `a` (read as a DFA). The input
/// mode is preserved on the output.
Automaton relative_minimise(const Automaton& a);

/// The relative-minimisation pipeline with omega-language equivalence in
/// place of almost equivalence. Buchi or co-Buchi input.
Automaton reduce_omega(const Automaton& a);

bool is_weak(const Automaton& a);

/// Makes every weak non-trivial SCC homogeneous (all accepting or all
/// rejecting) without changing the omega-language.
Automaton normalize_weak_sccs(const Automaton& a);

/// normalize_weak_sccs followed by relative_minimise. With `require_weak`,
/// a non-weak input raises ModeError.
Automaton weak_minimise(const Automaton& a, bool require_weak = true);

/// The automaton with every transition into p sent to q and p deleted.
Automaton merge_into(const Automaton& a, std::size_t p, std::size_t q);

/// Greedy SCC-local merging of omega-equivalent states, each merge kept
/// only if the language survives.
Automaton greedy_merge(const Automaton& a);

}  // namespace autmin
