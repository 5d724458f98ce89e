#pragma once

#include <string>
#include <vector>

#include "autmin/automaton.hpp"
#include "autmin/hardness.hpp"

namespace fixture {

using autmin::Acceptance;
using autmin::Automaton;
using autmin::StateRef;

// s_a = 0 (final), s_b = 1; every a leads to s_a, every b to s_b.
inline Automaton infinitely_many(const std::string& letter, Acceptance mode = Acceptance::buchi) {
  Automaton a({"a", "b"}, 2, mode);
  const std::size_t hit = letter == "a" ? 0 : 1;
  for (std::size_t q = 0; q < 2; ++q) {
    a.set_successor(q, 0, StateRef::plain(0));
    a.set_successor(q, 1, StateRef::plain(1));
  }
  a.set_final(hit, true);
  return a;
}

inline Automaton sink_only(StateRef sink, Acceptance mode = Acceptance::buchi) {
  Automaton a({"a", "b"}, 0, mode);
  a.set_initial(sink);
  return a;
}

inline autmin::NiceGraph p2() {
  return autmin::NiceGraph(autmin::make_graph({"v0", "v1"}, {{0, 1}}, 0));
}

inline std::vector<std::string> w(std::initializer_list<const char*> syms) {
  return {syms.begin(), syms.end()};
}

}  // namespace fixture
