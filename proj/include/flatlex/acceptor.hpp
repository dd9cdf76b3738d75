#ifndef FLATLEX_ACCEPTOR_HPP
#define FLATLEX_ACCEPTOR_HPP

#include <string_view>
#include <vector>

#include "flatlex/border_fn.hpp"

namespace flatlex {

// Where a transition goes: stuck (no move possible) or a state offset relative
// to the state the transition belongs to. Stuck is a distinguished value, not
// an absent entry; a border needs it to cancel an interval opened by an
// earlier border.
class Target {
 public:
  constexpr Target() = default;
  static constexpr Target stuck() { return Target(); }
  static constexpr Target shift(int offset) {
    Target t;
    t.stuck_ = false;
    t.offset_ = offset;
    return t;
  }

  constexpr bool is_stuck() const { return stuck_; }
  constexpr int offset() const { return offset_; }  // meaningful when !is_stuck()

  friend constexpr bool operator==(const Target&, const Target&) = default;

 private:
  int offset_ = 0;
  bool stuck_ = true;
};

struct AcceptorState {
  std::vector<int> eps;  // relative ε-offsets, sorted and unique
  BorderFunction<Target> trans;

  friend bool operator==(const AcceptorState&, const AcceptorState&) = default;
};

// A finite automaton stored flat: a sequence of states with relative state
// references. State 1 is the initial state; the single accepting state is
// n+1, just past the end, so a word is accepted by falling out of the
// sequence. No transition may re-enter state 1 or overshoot n+1. Because all
// references are relative, the regular operations combine acceptors by plain
// concatenation plus a few ε-offsets, never rewriting existing transitions.
class Acceptor {
 public:
  Acceptor(Alphabet alphabet, std::vector<AcceptorState> states);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<AcceptorState>& states() const { return states_; }
  std::size_t size() const { return states_.size(); }

  // 1-based, matching the convention that state numbers start at 1.
  const AcceptorState& state(int i) const { return states_[i - 1]; }

  // Nondeterministic simulation of the run relation: ε-closure interleaved
  // with symbol steps, with a visited set per consumed length so ε-cycles
  // terminate. Symbols outside the alphabet can never move, so they simply
  // kill the frontier.
  bool accepts(std::u32string_view word) const;

  friend bool operator==(const Acceptor&, const Acceptor&) = default;

 private:
  Alphabet alphabet_;
  std::vector<AcceptorState> states_;
};

// Accepts exactly the empty word (zero states).
Acceptor epsilon_acceptor(Alphabet alphabet);

// Accepts nothing: a single state that is stuck everywhere.
Acceptor empty_acceptor(Alphabet alphabet);

// One-state acceptor accepting exactly the single-symbol words on which phi
// evaluates to true.
Acceptor from_border(const BorderFunction<bool>& phi);

// Juxtaposition; relative references make renumbering unnecessary.
Acceptor concat(const Acceptor& a, const Acceptor& b);

// Adds an ε-transition from state `from` (1..n) to state `to` (2..n+1).
Acceptor add_eps(Acceptor a, int from, int to);

Acceptor union_(const Acceptor& a, const Acceptor& b);
Acceptor star(const Acceptor& a);
Acceptor plus(const Acceptor& a);
Acceptor optional(const Acceptor& a);

}  // namespace flatlex

#endif  // FLATLEX_ACCEPTOR_HPP
