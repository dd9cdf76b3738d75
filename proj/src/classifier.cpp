#include "flatlex/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace flatlex {

namespace {

void check_target(int from, int target, int n) {
  if (target < 1 || target > n)
    throw std::invalid_argument(
        "classifier: transition from state " + std::to_string(from) +
        " targets state " + std::to_string(target) +
        ", outside the allowed range 1.." + std::to_string(n));
}

// ε-closure into a flag array sized n+1.
void close_into(const Classifier& c, int seed, std::vector<char>& in,
                std::vector<int>& stack) {
  if (in[seed]) return;
  in[seed] = 1;
  stack.push_back(seed);
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
}

}  // namespace

Classifier::Classifier(Alphabet alphabet, std::vector<ClassifierState> states)
    : alphabet_(alphabet), states_(std::move(states)) {
  const int n = static_cast<int>(states_.size());
  if (n < 1) throw std::invalid_argument("classifier: needs at least one state");
  for (int i = 1; i <= n; ++i) {
    const ClassifierState& st = states_[i - 1];
    if (!(st.trans.alphabet() == alphabet_))
      throw std::invalid_argument("classifier: state border function over a different alphabet");
    if (st.cls.name.empty())
      throw std::invalid_argument("classifier: token class names must be non-empty");
    for (std::size_t k = 0; k + 1 < st.eps.size(); ++k)
      if (st.eps[k] >= st.eps[k + 1])
        throw std::invalid_argument("classifier: eps offsets must be sorted and unique");
    for (int j : st.eps) check_target(i, i + j, n);
    for (const auto& [sym, t] : st.trans.entries())
      if (!t.is_stuck()) check_target(i, i + t.offset(), n);
  }
}

bool Classifier::deterministic() const {
  return std::all_of(states_.begin(), states_.end(),
                     [](const ClassifierState& s) { return s.eps.empty(); });
}

Classifier error_classifier(Alphabet alphabet, TokenClass e) {
  // Stuck everywhere: the error state must not consume symbols, or every
  // later token could restart behind arbitrary junk and classification of
  // any input would swallow it into one giant lexeme.
  BorderFunction<Target> dead(alphabet, {{alphabet.min, Target::stuck()}});
  return Classifier(alphabet, {ClassifierState{{}, std::move(dead), std::move(e)}});
}

Classifier lift_acceptor(const Acceptor& a, TokenClass e, TokenClass t) {
  std::vector<ClassifierState> states;
  states.reserve(a.size() + 1);
  for (const AcceptorState& s : a.states()) states.push_back({s.eps, s.trans, e});
  BorderFunction<Target> dead(a.alphabet(), {{a.alphabet().min, Target::stuck()}});
  states.push_back({{}, std::move(dead), std::move(t)});
  return Classifier(a.alphabet(), std::move(states));
}

Classifier add_token(const Classifier& c, TokenClass t, const Acceptor& a) {
  if (!(c.alphabet() == a.alphabet()))
    throw std::invalid_argument("add_token: classifier and acceptor over different alphabets");
  Classifier lifted = lift_acceptor(a, c.error_class(), std::move(t));

  std::vector<ClassifierState> states = c.states();
  const int offset = static_cast<int>(c.size());  // state 1 -> first appended state
  auto& eps1 = states[0].eps;
  auto it = std::lower_bound(eps1.begin(), eps1.end(), offset);
  if (it == eps1.end() || *it != offset) eps1.insert(it, offset);
  states.insert(states.end(), lifted.states().begin(), lifted.states().end());
  return Classifier(c.alphabet(), std::move(states));
}

bool well_formed(const Classifier& c) {
  const int n = static_cast<int>(c.size());
  std::vector<char> in(n + 1, 0);
  std::vector<int> stack;
  close_into(c, 1, in, stack);
  for (int s = 1; s <= n; ++s)
    if (in[s] && c.state(s).cls != c.error_class()) return false;
  return true;
}

Classification classify_nfa(const Classifier& c, std::u32string_view word) {
  if (!well_formed(c))
    throw std::invalid_argument("classify_nfa: classifier is not well-formed");

  const int n = static_cast<int>(c.size());
  const TokenClass& err = c.error_class();

  std::vector<char> cur(n + 1, 0);
  std::vector<char> next(n + 1, 0);
  std::vector<int> stack;

  std::size_t best_len = 0;
  int best_state = 0;
  auto note = [&](const std::vector<char>& in, std::size_t len) {
    for (int s = n; s >= 1; --s) {
      if (in[s] && c.state(s).cls != err) {
        best_len = len;
        best_state = s;
        return;
      }
    }
  };

  close_into(c, 1, cur, stack);
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (!c.alphabet().contains(word[k])) break;
    std::fill(next.begin(), next.end(), 0);
    bool any = false;
    for (int s = 1; s <= n; ++s) {
      if (!cur[s]) continue;
      const Target& t = c.state(s).trans.eval_le(word[k]);
      if (t.is_stuck()) continue;
      close_into(c, s + t.offset(), next, stack);
      any = true;
    }
    if (!any) break;
    cur.swap(next);
    note(cur, k + 1);
  }

  if (best_state == 0) return Classification{std::u32string(), err};
  return Classification{std::u32string(word.substr(0, best_len)),
                        c.state(best_state).cls};
}

}  // namespace flatlex
