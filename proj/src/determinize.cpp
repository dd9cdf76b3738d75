#include "flatlex/determinize.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace flatlex {

StateSet closure(const Classifier& c, const StateSet& seed) {
  const int n = static_cast<int>(c.size());
  std::vector<char> in(n + 1, 0);
  std::vector<int> stack;
  for (int s : seed) {
    if (s < 1 || s > n) throw std::invalid_argument("closure: state out of range");
    if (!in[s]) {
      in[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int j : c.state(u).eps) {
      int v = u + j;
      if (!in[v]) {
        in[v] = 1;
        stack.push_back(v);
      }
    }
  }
  StateSet out;
  for (int s = 1; s <= n; ++s)
    if (in[s]) out.push_back(s);
  return out;
}

std::vector<Symbol> borders(const Classifier& c, const StateSet& s) {
  if (s.empty()) throw std::invalid_argument("borders: empty state set");
  std::vector<Symbol> out;
  for (int i : s)
    for (const auto& [sym, t] : c.state(i).trans.entries()) out.push_back(sym);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TokenClass class_of(const Classifier& c, const StateSet& s) {
  const TokenClass& err = c.error_class();
  for (auto it = s.rbegin(); it != s.rend(); ++it)
    if (c.state(*it).cls != err) return c.state(*it).cls;
  return err;
}

DeterminizeResult determinize_with_subsets(const Classifier& c) {
  if (!well_formed(c))
    throw std::invalid_argument("determinize: classifier is not well-formed");

  std::map<StateSet, int> number_of;      // discovered set -> state number
  std::vector<StateSet> subsets;          // inverse, by state number - 1
  StateSet start = closure(c, StateSet{1});
  number_of.emplace(start, 1);
  subsets.push_back(std::move(start));

  std::vector<ClassifierState> out;
  while (out.size() < subsets.size()) {
    const int i = static_cast<int>(out.size()) + 1;
    const StateSet current = subsets[i - 1];  // copy: subsets grows below

    std::vector<BorderFunction<Target>::Entry> entries;
    for (Symbol sym : borders(c, current)) {
      StateSet succ;
      for (int s : current) {
        const Target& t = c.state(s).trans.eval_le(sym);
        if (!t.is_stuck()) succ.push_back(s + t.offset());
      }
      std::sort(succ.begin(), succ.end());
      succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
      if (succ.empty()) {
        entries.emplace_back(sym, Target::stuck());
        continue;
      }
      StateSet closed = closure(c, succ);
      auto [it, inserted] =
          number_of.try_emplace(closed, static_cast<int>(subsets.size()) + 1);
      if (inserted) subsets.push_back(std::move(closed));
      entries.emplace_back(sym, Target::shift(it->second - i));
    }

    BorderFunction<Target> trans(c.alphabet(), std::move(entries));
    out.push_back(ClassifierState{{}, trans.minimized(), class_of(c, current)});
  }

  return DeterminizeResult{Classifier(c.alphabet(), std::move(out)),
                           std::move(subsets)};
}

Classifier determinize(const Classifier& c) {
  return determinize_with_subsets(c).classifier;
}

Classification classify_dfa(const Classifier& c, std::u32string_view word) {
  if (!c.deterministic())
    throw std::invalid_argument("classify_dfa: classifier is not deterministic");

  const TokenClass& err = c.error_class();
  int state = 1;
  std::size_t best_len = 0;
  int best_state = 0;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (!c.alphabet().contains(word[k])) break;
    const Target& t = c.state(state).trans.eval_le(word[k]);
    if (t.is_stuck()) break;
    state += t.offset();
    if (c.state(state).cls != err) {
      best_len = k + 1;
      best_state = state;
    }
  }
  if (best_state == 0) return Classification{std::u32string(), err};
  return Classification{std::u32string(word.substr(0, best_len)),
                        c.state(best_state).cls};
}

}  // namespace flatlex
