#ifndef FLATLEX_MINIMIZE_HPP
#define FLATLEX_MINIMIZE_HPP

#include <map>
#include <vector>

#include "flatlex/classifier.hpp"

namespace flatlex {

// Disjoint classes covering states 1..n, plus the inverse index.
struct Partition {
  std::vector<std::vector<int>> classes;  // members sorted ascending
  std::vector<int> index;                 // index[s] = 0-based class position; [0] unused

  friend bool operator==(const Partition&, const Partition&) = default;
};

// Builds the index and validates that `classes` is a disjoint cover of 1..n.
Partition partition_from_classes(std::size_t n, std::vector<std::vector<int>> classes);

// back_transitions(c)[i] lists the states with a symbol transition into i,
// gathered from the stored border entries. Input must be deterministic.
std::vector<std::vector<int>> back_transitions(const Classifier& c);

// Per-state shortest distance to a state of each non-error token class.
// States that reach no non-error class get an empty map.
using ClassDistances = std::map<TokenClass, int>;
std::vector<ClassDistances> reachability(const Classifier& c);

enum class InitStrategy {
  by_class,         // group states by their token class
  by_reachability,  // group by (token class, reachability map): a finer start
                    // that removes most of the refinement work up front
};

// Groups states by equal key, classes ordered by first occurrence.
Partition initial_partition(const Classifier& c, InitStrategy strategy);

// Partition refinement: repeatedly splits classes whose members disagree on
// which class a symbol leads into, working from a stack of unchecked classes
// and keeping the larger half of every split in place. The result is the
// coarsest refinement of `init` in which equivalent states have, for every
// symbol, equivalent successors (stuck counts as equal only to stuck).
Partition hopcroft(const Classifier& c, Partition init);

// One state per class, classes sorted by minimal element so the class of
// state 1 stays first; representative transitions are remapped to class
// numbers and re-minimized.
Classifier quotient(const Classifier& c, const Partition& p);

// initial_partition → hopcroft → quotient.
Classifier minimize(const Classifier& c,
                    InitStrategy strategy = InitStrategy::by_reachability);

}  // namespace flatlex

#endif  // FLATLEX_MINIMIZE_HPP
