#include "flatlex/minimize.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "flatlex/determinize.hpp"

namespace flatlex {

namespace {

void require_deterministic(const Classifier& c, const char* who) {
  if (!c.deterministic())
    throw std::invalid_argument(std::string(who) + ": classifier is not deterministic");
}

void validate_partition(const Classifier& c, const Partition& p, const char* who) {
  const std::size_t n = c.size();
  if (p.index.size() != n + 1)
    throw std::invalid_argument(std::string(who) + ": partition index has wrong size");
  std::size_t covered = 0;
  for (std::size_t k = 0; k < p.classes.size(); ++k) {
    const auto& members = p.classes[k];
    if (members.empty())
      throw std::invalid_argument(std::string(who) + ": empty partition class");
    for (std::size_t m = 0; m < members.size(); ++m) {
      int s = members[m];
      if (s < 1 || s > static_cast<int>(n) ||
          (m > 0 && members[m - 1] >= s) ||
          p.index[s] != static_cast<int>(k))
        throw std::invalid_argument(std::string(who) + ": partition is not a sorted disjoint cover");
    }
    covered += members.size();
  }
  if (covered != n)
    throw std::invalid_argument(std::string(who) + ": partition does not cover all states");
}

}  // namespace

Partition partition_from_classes(std::size_t n, std::vector<std::vector<int>> classes) {
  Partition p;
  p.classes = std::move(classes);
  p.index.assign(n + 1, -1);
  std::size_t covered = 0;
  for (std::size_t k = 0; k < p.classes.size(); ++k) {
    auto& members = p.classes[k];
    std::sort(members.begin(), members.end());
    if (members.empty())
      throw std::invalid_argument("partition: empty class");
    for (std::size_t m = 0; m < members.size(); ++m) {
      int s = members[m];
      if (s < 1 || s > static_cast<int>(n))
        throw std::invalid_argument("partition: state out of range");
      if (m > 0 && members[m - 1] == s)
        throw std::invalid_argument("partition: duplicate state");
      if (p.index[s] != -1)
        throw std::invalid_argument("partition: classes overlap");
      p.index[s] = static_cast<int>(k);
    }
    covered += members.size();
  }
  if (covered != n)
    throw std::invalid_argument("partition: classes do not cover all states");
  return p;
}

std::vector<std::vector<int>> back_transitions(const Classifier& c) {
  require_deterministic(c, "back_transitions");
  const int n = static_cast<int>(c.size());
  std::vector<std::vector<int>> back(n + 1);
  for (int j = 1; j <= n; ++j)
    for (const auto& [sym, t] : c.state(j).trans.entries())
      if (!t.is_stuck()) back[j + t.offset()].push_back(j);
  for (auto& preds : back) {
    std::sort(preds.begin(), preds.end());
    preds.erase(std::unique(preds.begin(), preds.end()), preds.end());
  }
  return back;
}

std::vector<ClassDistances> reachability(const Classifier& c) {
  require_deterministic(c, "reachability");
  const int n = static_cast<int>(c.size());
  const TokenClass& err = c.error_class();
  auto back = back_transitions(c);

  std::vector<ClassDistances> rho(n + 1);
  for (int i = 1; i <= n; ++i)
    if (c.state(i).cls != err) rho[i].emplace(c.state(i).cls, 0);

  // Monotone relaxation: distances only decrease and are bounded by zero.
  std::vector<int> unchecked;
  std::vector<char> queued(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    unchecked.push_back(i);
    queued[i] = 1;
  }
  while (!unchecked.empty()) {
    int u = unchecked.back();
    unchecked.pop_back();
    queued[u] = 0;
    for (int i : back[u]) {
      bool changed = false;
      for (const auto& [cls, dist] : rho[u]) {
        auto [it, inserted] = rho[i].emplace(cls, dist + 1);
        if (!inserted && it->second > dist + 1) {
          it->second = dist + 1;
          changed = true;
        }
        changed = changed || inserted;
      }
      if (changed && !queued[i]) {
        unchecked.push_back(i);
        queued[i] = 1;
      }
    }
  }
  return rho;
}

Partition initial_partition(const Classifier& c, InitStrategy strategy) {
  require_deterministic(c, "initial_partition");
  const int n = static_cast<int>(c.size());

  std::vector<std::vector<int>> classes;
  if (strategy == InitStrategy::by_class) {
    std::map<TokenClass, int> position;
    for (int i = 1; i <= n; ++i) {
      auto [it, inserted] =
          position.try_emplace(c.state(i).cls, static_cast<int>(classes.size()));
      if (inserted) classes.emplace_back();
      classes[it->second].push_back(i);
    }
  } else {
    auto rho = reachability(c);
    std::map<std::pair<TokenClass, ClassDistances>, int> position;
    for (int i = 1; i <= n; ++i) {
      auto key = std::make_pair(c.state(i).cls, rho[i]);
      auto [it, inserted] =
          position.try_emplace(std::move(key), static_cast<int>(classes.size()));
      if (inserted) classes.emplace_back();
      classes[it->second].push_back(i);
    }
  }
  return partition_from_classes(c.size(), std::move(classes));
}

namespace {

// Splits every class that straddles F; the larger half keeps its position,
// the other half becomes a new class whose index goes onto the work stack.
void refine(Partition& p, const std::vector<int>& found, std::vector<int>& work) {
  std::map<int, std::vector<int>> hits;  // class position -> members in F
  for (int s : found) hits[p.index[s]].push_back(s);

  for (auto& [pos, in_f] : hits) {
    std::vector<int>& cls = p.classes[pos];
    if (in_f.size() == cls.size()) continue;

    std::vector<int> rest;
    rest.reserve(cls.size() - in_f.size());
    std::set_difference(cls.begin(), cls.end(), in_f.begin(), in_f.end(),
                        std::back_inserter(rest));
    std::vector<int> keep = std::move(in_f);
    if (keep.size() < rest.size()) keep.swap(rest);

    const int fresh = static_cast<int>(p.classes.size());
    for (int s : rest) p.index[s] = fresh;
    cls = std::move(keep);
    p.classes.push_back(std::move(rest));
    work.push_back(fresh);
  }
}

}  // namespace

Partition hopcroft(const Classifier& c, Partition init) {
  require_deterministic(c, "hopcroft");
  validate_partition(c, init, "hopcroft");

  auto back = back_transitions(c);
  Partition p = std::move(init);

  std::vector<int> work;
  for (std::size_t k = 0; k < p.classes.size(); ++k)
    work.push_back(static_cast<int>(k));

  while (!work.empty()) {
    const int u = work.back();
    work.pop_back();

    // States with a transition into the popped class.
    std::vector<int> sources;
    for (int i : p.classes[u])
      sources.insert(sources.end(), back[i].begin(), back[i].end());
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
    if (sources.empty()) continue;

    StateSet source_set(sources.begin(), sources.end());
    for (Symbol sym : borders(c, source_set)) {
      std::vector<int> found;
      for (int i : sources) {
        const Target& t = c.state(i).trans.eval_le(sym);
        if (!t.is_stuck() && p.index[i + t.offset()] == u) found.push_back(i);
      }
      if (!found.empty()) refine(p, found, work);
    }
  }
  return p;
}

Classifier quotient(const Classifier& c, const Partition& partition) {
  require_deterministic(c, "quotient");
  validate_partition(c, partition, "quotient");

  // Sort classes by their minimal element so the class of state 1 stays
  // first and the quotient keeps the original state order readable.
  std::vector<std::vector<int>> classes = partition.classes;
  std::sort(classes.begin(), classes.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  Partition p = partition_from_classes(c.size(), std::move(classes));

  // Transition consistency is hopcroft's postcondition; a violation here is a
  // bug in the caller's pipeline, not bad user input.
  for (const auto& members : p.classes) {
    const int rep = members.front();
    for (int other : members) {
      if (c.state(other).cls != c.state(rep).cls)
        throw std::logic_error("quotient: class labels disagree inside a partition class");
      for (Symbol sym : borders(c, StateSet{rep, other})) {
        const Target& tr = c.state(rep).trans.eval_le(sym);
        const Target& to = c.state(other).trans.eval_le(sym);
        if (tr.is_stuck() != to.is_stuck() ||
            (!tr.is_stuck() &&
             p.index[rep + tr.offset()] != p.index[other + to.offset()]))
          throw std::logic_error("quotient: partition is not transition-consistent");
      }
    }
  }

  std::vector<ClassifierState> states;
  states.reserve(p.classes.size());
  for (std::size_t k = 0; k < p.classes.size(); ++k) {
    const int rep = p.classes[k].front();
    std::vector<BorderFunction<Target>::Entry> entries;
    for (const auto& [sym, t] : c.state(rep).trans.entries()) {
      if (t.is_stuck()) {
        entries.emplace_back(sym, Target::stuck());
      } else {
        const int target_class = p.index[rep + t.offset()];
        entries.emplace_back(sym, Target::shift(target_class - static_cast<int>(k)));
      }
    }
    BorderFunction<Target> trans(c.alphabet(), std::move(entries));
    states.push_back(ClassifierState{{}, trans.minimized(), c.state(rep).cls});
  }
  return Classifier(c.alphabet(), std::move(states));
}

Classifier minimize(const Classifier& c, InitStrategy strategy) {
  return quotient(c, hopcroft(c, initial_partition(c, strategy)));
}

}  // namespace flatlex
