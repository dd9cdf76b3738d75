#ifndef FLATLEX_DETERMINIZE_HPP
#define FLATLEX_DETERMINIZE_HPP

#include <vector>

#include "flatlex/classifier.hpp"

namespace flatlex {

// Sorted, duplicate-free set of 1-based classifier state numbers.
using StateSet = std::vector<int>;

// Least superset of `seed` closed under ε-transitions.
StateSet closure(const Classifier& c, const StateSet& seed);

// Union of the border-function domains of the states in s, ascending. These
// are the only symbols where subset-construction behavior can change; between
// two consecutive borders every transition is constant.
std::vector<Symbol> borders(const Classifier& c, const StateSet& s);

// Class of the largest non-error state in s; the error class when s is empty
// or contains only error states.
TokenClass class_of(const Classifier& c, const StateSet& s);

struct DeterminizeResult {
  Classifier classifier;
  // subsets[k] is the source-state set that became state k+1; the map from
  // sets to state numbers and this sequence stay mutually inverse during
  // construction.
  std::vector<StateSet> subsets;
};

// Subset construction over border functions. Discovered sets become states in
// discovery order (state 1 = closure({1})), transitions are evaluated only at
// the borders of the current set, stored relative, and minimized per state.
// The result is deterministic: every ε-set is empty.
DeterminizeResult determinize_with_subsets(const Classifier& c);
Classifier determinize(const Classifier& c);

// Deterministic runner with the same contract as classify_nfa: single pass,
// tracking the last position whose state carries a non-error class.
Classification classify_dfa(const Classifier& c, std::u32string_view word);

}  // namespace flatlex

#endif  // FLATLEX_DETERMINIZE_HPP
