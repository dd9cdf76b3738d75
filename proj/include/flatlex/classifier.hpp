#ifndef FLATLEX_CLASSIFIER_HPP
#define FLATLEX_CLASSIFIER_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "flatlex/acceptor.hpp"

namespace flatlex {

struct TokenClass {
  std::string name;

  friend auto operator<=>(const TokenClass&, const TokenClass&) = default;
  friend bool operator==(const TokenClass&, const TokenClass&) = default;
};

struct ClassifierState {
  std::vector<int> eps;  // relative ε-offsets, sorted and unique
  BorderFunction<Target> trans;
  TokenClass cls;

  friend bool operator==(const ClassifierState&, const ClassifierState&) = default;
};

// A flat automaton whose states carry token classes. State 1's class is the
// error class. Unlike acceptors there is no state n+1: transitions may target
// any state in [1, n] and a word is classified by where the longest useful
// run gets stuck.
class Classifier {
 public:
  Classifier(Alphabet alphabet, std::vector<ClassifierState> states);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<ClassifierState>& states() const { return states_; }
  std::size_t size() const { return states_.size(); }
  const ClassifierState& state(int i) const { return states_[i - 1]; }  // 1-based

  const TokenClass& error_class() const { return states_.front().cls; }
  bool deterministic() const;

  friend bool operator==(const Classifier&, const Classifier&) = default;

 private:
  Alphabet alphabet_;
  std::vector<ClassifierState> states_;
};

// Maximal non-error prefix of the classified input, with its token class.
// An empty lexeme always carries the error class.
struct Classification {
  std::u32string lexeme;
  TokenClass cls;

  friend bool operator==(const Classification&, const Classification&) = default;
};

// Classifies every word as e: a single state looping on every symbol.
Classifier error_classifier(Alphabet alphabet, TokenClass e);

// The acceptor's states labelled e, plus a transition-free sink labelled t;
// words the acceptor accepts reach the sink and classify as t.
Classifier lift_acceptor(const Acceptor& a, TokenClass e, TokenClass t);

// Appends the lifted acceptor and an ε-edge from state 1 to its start. Later
// additions win classification ties through the larger-state rule.
Classifier add_token(const Classifier& c, TokenClass t, const Acceptor& a);

// True when only error-labelled states are reachable from state 1 without
// consuming input. Classifying with an ill-formed classifier is refused,
// since it could classify the empty prefix as a real token.
bool well_formed(const Classifier& c);

// Reference classification semantics: simulates the frontier set per consumed
// symbol, records the largest reachable non-error state at each prefix
// length, and returns the longest prefix that recorded one. Falls back to
// (ε, error class) when no prefix qualifies.
Classification classify_nfa(const Classifier& c, std::u32string_view word);

}  // namespace flatlex

#endif  // FLATLEX_CLASSIFIER_HPP
