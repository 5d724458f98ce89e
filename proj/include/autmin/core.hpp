#pragma once

#include <cstddef>
#include <vector>

#include "autmin/automaton.hpp"

namespace autmin {

struct FiniteRun {
  StateRef end;
  bool accepted = false;
};

struct LassoRun {
  bool accepted = false;
  unsigned cycle_max_priority = 0;
};

FiniteRun run_finite(const Automaton& a, std::span<const std::string> word);
FiniteRun run_finite(const Automaton& a, const Word& word);

/// Runs `a` from `from` on an indexed lasso. The simulation stops as soon as
/// a (state, loop position) pair repeats; the priorities on that cycle decide.
LassoRun run_lasso_from(const Automaton& a, StateRef from, const Word& prefix,
                        const Word& loop);
LassoRun run_lasso(const Automaton& a, const Lasso& lasso);

/// Checked acceptance conversion (transitions untouched).
Automaton view_as(const Automaton& a, Acceptance mode);

/// Closes priority gaps >= 2 by shifting everything above a gap down by two.
Automaton normalize_priorities(const Automaton& a);

Automaton with_initial(const Automaton& a, StateRef q);

/// Plain states reachable from the initial state, in index order.
std::vector<bool> reachable_states(const Automaton& a);

/// Drops unreachable plain states, keeping the relative order of the rest.
Automaton reachable_part(const Automaton& a);

/// Sorts the alphabet and renumbers reachable states in BFS discovery order
/// (successors explored in alphabet order). Isomorphic automata map to equal
/// values.
Automaton canonicalize(const Automaton& a);

bool isomorphic(const Automaton& a, const Automaton& b);

/// Copy of `b` with its alphabet permuted into the order of `a`. Throws
/// InputError listing the symmetric difference when the symbol sets differ.
Automaton align_alphabet(const Automaton& a, const Automaton& b);

}  // namespace autmin
