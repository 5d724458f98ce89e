#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace autmin {

/// A state of Q+ = Q plus the two sinks. Plain states are dense indices.
class StateRef {
 public:
  constexpr StateRef() noexcept = default;

  static constexpr StateRef plain(std::size_t index) noexcept {
    return StateRef(static_cast<std::int64_t>(index));
  }
  static constexpr StateRef top() noexcept { return StateRef(kTop); }
  static constexpr StateRef bottom() noexcept { return StateRef(kBottom); }

  constexpr bool is_plain() const noexcept { return code_ >= 0; }
  constexpr bool is_top() const noexcept { return code_ == kTop; }
  constexpr bool is_bottom() const noexcept { return code_ == kBottom; }
  constexpr bool is_sink() const noexcept { return code_ < 0; }

  /// Only meaningful for plain states.
  constexpr std::size_t index() const noexcept {
    return static_cast<std::size_t>(code_);
  }

  /// Dense index into Q+ for an automaton with `n` plain states:
  /// plain i -> i, Top -> n, Bottom -> n + 1.
  constexpr std::size_t extended(std::size_t n) const noexcept {
    return is_plain() ? index() : (is_top() ? n : n + 1);
  }
  static constexpr StateRef from_extended(std::size_t i,
                                          std::size_t n) noexcept {
    return i < n ? plain(i) : (i == n ? top() : bottom());
  }

  friend constexpr bool operator==(StateRef, StateRef) noexcept = default;

 private:
  static constexpr std::int64_t kTop = -1;
  static constexpr std::int64_t kBottom = -2;
  explicit constexpr StateRef(std::int64_t code) noexcept : code_(code) {}

  std::int64_t code_ = kBottom;
};

/// Ordering used for printing: plain states ascending, then Top, then Bottom.
constexpr bool display_less(StateRef a, StateRef b) noexcept {
  auto key = [](StateRef s) -> std::uint64_t {
    if (s.is_plain()) return s.index();
    return s.is_top() ? UINT64_MAX - 1 : UINT64_MAX;
  };
  return key(a) < key(b);
}

std::string to_string(StateRef s);

enum class Acceptance { finite, buchi, cobuchi, parity };

std::string_view to_string(Acceptance mode);
std::optional<Acceptance> acceptance_from_string(std::string_view text);

using Word = std::vector<std::size_t>;

/// Deterministic automaton with Top/Bottom sinks and one acceptance mode.
///
/// Transitions are total by construction (unset entries point to Bottom).
/// The sinks are never stored: they self-loop on every symbol, Top is
/// final/even and Bottom is non-final/odd. Final-state flags are kept for
/// the finite, Buchi and co-Buchi modes; priorities for the parity mode.
class Automaton {
 public:
  Automaton() = default;
  Automaton(std::vector<std::string> alphabet, std::size_t state_count,
            Acceptance mode);

  const std::vector<std::string>& alphabet() const noexcept {
    return alphabet_;
  }
  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
  std::size_t state_count() const noexcept { return states_; }
  Acceptance mode() const noexcept { return mode_; }

  StateRef initial() const noexcept { return initial_; }
  void set_initial(StateRef q);

  StateRef successor(StateRef q, std::size_t symbol) const {
    if (q.is_sink()) return q;
    return delta_[q.index() * alphabet_.size() + symbol];
  }
  void set_successor(std::size_t q, std::size_t symbol, StateRef target);

  /// F-membership under the sink rule. Not available in parity mode.
  bool is_final(StateRef q) const;
  void set_final(std::size_t q, bool final);

  /// Priority of a state under the mode's parity reading: Buchi uses
  /// {1,2}, co-Buchi {2,3}, parity the stored map. Finite automata are read
  /// as Buchi. Sinks: Top 2 / Bottom 1 (Buchi, finite), Top 2 / Bottom 3
  /// (co-Buchi), Top 0 / Bottom 1 (parity).
  unsigned priority(StateRef q) const {
    if (q.is_plain()) {
      switch (mode_) {
        case Acceptance::parity: return priority_[q.index()];
        case Acceptance::cobuchi: return final_[q.index()] ? 2 : 3;
        default: return final_[q.index()] ? 2 : 1;
      }
    }
    switch (mode_) {
      case Acceptance::parity: return q.is_top() ? 0 : 1;
      case Acceptance::cobuchi: return q.is_top() ? 2 : 3;
      default: return q.is_top() ? 2 : 1;
    }
  }
  void set_priority(std::size_t q, unsigned priority);

  std::optional<std::size_t> symbol_index(std::string_view name) const;

  /// Map symbol names to indices; unknown symbols raise InputError naming
  /// the symbol and its 0-based position.
  Word encode(std::span<const std::string> word) const;

  /// Acceptance-relabelled copy; no checks (see view_as for the checked
  /// conversion).
  Automaton relabelled(Acceptance mode) const;

  /// Throws InputError on an empty/duplicate alphabet or out-of-range
  /// state references.
  void validate() const;

  friend bool operator==(const Automaton&, const Automaton&) = default;

 private:
  std::vector<std::string> alphabet_;
  std::size_t states_ = 0;
  Acceptance mode_ = Acceptance::finite;
  StateRef initial_ = StateRef::bottom();
  std::vector<StateRef> delta_;
  std::vector<bool> final_;
  std::vector<unsigned> priority_;
};

/// An ultimately periodic word prefix . loop^omega over symbol names.
struct Lasso {
  std::vector<std::string> prefix;
  std::vector<std::string> loop;

  friend bool operator==(const Lasso&, const Lasso&) = default;
};

}  // namespace autmin
