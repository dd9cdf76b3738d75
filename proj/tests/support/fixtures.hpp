#ifndef FLATLEX_TESTS_FIXTURES_HPP
#define FLATLEX_TESTS_FIXTURES_HPP

#include <climits>
#include <string>
#include <vector>

#include "flatlex/classifier.hpp"

// The worked automata used across the suites: the hand-written identifier and
// "while" acceptors, the ten-state identifier/while classifier built from
// them, and the seven-state deterministic identifiers/"for" classifier.

namespace flatlex::testsupport {

inline constexpr int kStuck = INT_MIN;  // stands for # in the tables below

inline BorderFunction<Target> fn(Alphabet a,
                                 std::vector<std::pair<Symbol, int>> raw) {
  std::vector<BorderFunction<Target>::Entry> entries;
  for (auto& [sym, off] : raw)
    entries.emplace_back(sym, off == kStuck ? Target::stuck() : Target::shift(off));
  return BorderFunction<Target>(a, std::move(entries));
}

// Identifier acceptor: a letter, then letters/digits/underscores, written as
// the two-state automaton with a self-loop on state 2.
inline Acceptor ex_identifier_acceptor(Alphabet a = {}) {
  return Acceptor(
      a,
      {
          AcceptorState{{},
                        fn(a, {{a.min, kStuck}, {'A', 1}, {'Z' + 1, kStuck}, {'a', 1}, {'z' + 1, kStuck}})},
          AcceptorState{{1},
                        fn(a, {{a.min, kStuck},
                               {'0', 0},
                               {'9' + 1, kStuck},
                               {'A', 0},
                               {'Z' + 1, kStuck},
                               {'_', 0},
                               {'_' + 1, kStuck},
                               {'a', 0},
                               {'z' + 1, kStuck}})},
      });
}

// Five states, one per letter of "while".
inline Acceptor ex_while_acceptor(Alphabet a = {}) {
  std::vector<AcceptorState> states;
  for (char32_t ch : std::u32string(U"while"))
    states.push_back(AcceptorState{{}, fn(a, {{a.min, kStuck}, {ch, 1}, {ch + 1, kStuck}})});
  return Acceptor(a, std::move(states));
}

// The ten-state classifier: identifiers as I, "while" as W, errors as E.
inline Classifier ex_id_while_classifier(Alphabet a = {}) {
  Classifier c = error_classifier(a, TokenClass{"E"});
  c = add_token(c, TokenClass{"I"}, ex_identifier_acceptor(a));
  c = add_token(c, TokenClass{"W"}, ex_while_acceptor(a));
  return c;
}

// The published seven-state deterministic classifier for lower-case
// identifiers and the keyword "for".
inline Classifier ex_id_for_dfa(Alphabet a = {}) {
  auto row = [&](std::vector<std::pair<Symbol, int>> raw, const char* cls) {
    return ClassifierState{{}, fn(a, std::move(raw)), TokenClass{cls}};
  };
  return Classifier(
      a,
      {
          row({{a.min, kStuck}, {'a', 1}, {'f', 2}, {'g', 1}, {'z' + 1, kStuck}}, "E"),
          row({{a.min, kStuck}, {'0', 2}, {'9' + 1, kStuck}, {'a', 3}, {'z' + 1, kStuck}}, "I"),
          row({{a.min, kStuck}, {'0', 1}, {'9' + 1, kStuck}, {'a', 2}, {'o', 3}, {'p', 2}, {'z' + 1, kStuck}}, "I"),
          row({{a.min, kStuck}, {'0', 0}, {'9' + 1, kStuck}, {'a', 1}, {'z' + 1, kStuck}}, "I"),
          row({{a.min, kStuck}, {'0', -1}, {'9' + 1, kStuck}, {'a', 0}, {'z' + 1, kStuck}}, "I"),
          row({{a.min, kStuck}, {'0', -2}, {'9' + 1, kStuck}, {'a', -1}, {'r', 1}, {'s', -1}, {'z' + 1, kStuck}}, "I"),
          row({{a.min, kStuck}, {'0', -3}, {'9' + 1, kStuck}, {'a', -2}, {'z' + 1, kStuck}}, "F"),
      });
}

// The nondeterministic identifiers/"for" classifier whose determinization is
// the seven-state table above: the identifier tail is the union of a letter
// class and a digit class (not one merged class), and state 1 is stuck
// everywhere.
inline Classifier ex_id_for_nfa(Alphabet a = {}) {
  Acceptor letter = from_border(and_(phi_geq(a, 'a'), phi_leq(a, 'z')));
  Acceptor digit = from_border(and_(phi_geq(a, '0'), phi_leq(a, '9')));
  Acceptor ident = concat(letter, star(union_(letter, digit)));

  Acceptor for_kw = epsilon_acceptor(a);
  for (char32_t ch : std::u32string(U"for"))
    for_kw = concat(for_kw, from_border(and_(phi_geq(a, ch), phi_leq(a, ch))));

  Classifier c = error_classifier(a, TokenClass{"E"});
  c = add_token(c, TokenClass{"I"}, ident);
  c = add_token(c, TokenClass{"F"}, for_kw);
  return c;
}

}  // namespace flatlex::testsupport

#endif  // FLATLEX_TESTS_FIXTURES_HPP
