#include "autmin/automaton.hpp"

#include <algorithm>
#include <set>

#include "autmin/errors.hpp"

namespace autmin {

std::string to_string(StateRef s) {
  if (s.is_top()) return "TOP";
  if (s.is_bottom()) return "BOT";
  return std::to_string(s.index());
}

std::string_view to_string(Acceptance mode) {
  switch (mode) {
    case Acceptance::finite: return "finite";
    case Acceptance::buchi: return "buchi";
    case Acceptance::cobuchi: return "cobuchi";
    case Acceptance::parity: return "parity";
  }
  return "?";
}

std::optional<Acceptance> acceptance_from_string(std::string_view text) {
  if (text == "finite") return Acceptance::finite;
  if (text == "buchi") return Acceptance::buchi;
  if (text == "cobuchi") return Acceptance::cobuchi;
  if (text == "parity") return Acceptance::parity;
  return std::nullopt;
}

Automaton::Automaton(std::vector<std::string> alphabet, std::size_t state_count,
                     Acceptance mode)
    : alphabet_(std::move(alphabet)),
      states_(state_count),
      mode_(mode),
      initial_(state_count > 0 ? StateRef::plain(0) : StateRef::bottom()),
      delta_(state_count * alphabet_.size(), StateRef::bottom()) {
  if (mode == Acceptance::parity)
    priority_.assign(state_count, 1);
  else
    final_.assign(state_count, false);
}

void Automaton::set_initial(StateRef q) {
  if (q.is_plain() && q.index() >= states_)
    throw InputError("initial state " + to_string(q) + " out of range");
  initial_ = q;
}

void Automaton::set_successor(std::size_t q, std::size_t symbol,
                              StateRef target) {
  if (q >= states_ || symbol >= alphabet_.size() ||
      (target.is_plain() && target.index() >= states_))
    throw InputError("transition out of range");
  delta_[q * alphabet_.size() + symbol] = target;
}

bool Automaton::is_final(StateRef q) const {
  if (q.is_top()) return true;
  if (q.is_bottom()) return false;
  if (mode_ == Acceptance::parity)
    throw ModeError("final states are undefined for parity automata");
  return final_[q.index()];
}

void Automaton::set_final(std::size_t q, bool final) {
  if (mode_ == Acceptance::parity)
    throw ModeError("final states are undefined for parity automata");
  if (q >= states_) throw InputError("final state out of range");
  final_[q] = final;
}

void Automaton::set_priority(std::size_t q, unsigned priority) {
  if (mode_ != Acceptance::parity)
    throw ModeError("priorities are only stored for parity automata");
  if (q >= states_) throw InputError("priority for state out of range");
  priority_[q] = priority;
}

std::optional<std::size_t> Automaton::symbol_index(std::string_view name) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    if (alphabet_[i] == name) return i;
  return std::nullopt;
}

Word Automaton::encode(std::span<const std::string> word) const {
  Word out;
  out.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    auto s = symbol_index(word[i]);
    if (!s)
      throw InputError("unknown symbol '" + word[i] + "' at position " +
                       std::to_string(i));
    out.push_back(*s);
  }
  return out;
}

Automaton Automaton::relabelled(Acceptance mode) const {
  if ((mode == Acceptance::parity) != (mode_ == Acceptance::parity))
    throw ModeError("relabelling across parity needs view_as");
  Automaton out = *this;
  out.mode_ = mode;
  return out;
}

void Automaton::validate() const {
  if (alphabet_.empty()) throw InputError("alphabet must not be empty");
  std::set<std::string_view> seen;
  for (const auto& s : alphabet_) {
    if (s.empty()) throw InputError("alphabet symbols must be non-empty");
    if (!seen.insert(s).second)
      throw InputError("duplicate alphabet symbol '" + s + "'");
  }
  if (initial_.is_plain() && initial_.index() >= states_)
    throw InputError("initial state out of range");
  for (const auto& t : delta_)
    if (t.is_plain() && t.index() >= states_)
      throw InputError("transition target out of range");
}

}  // namespace autmin
