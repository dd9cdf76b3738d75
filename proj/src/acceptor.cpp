#include "flatlex/acceptor.hpp"

#include <algorithm>
#include <stdexcept>

namespace flatlex {

namespace {

void insert_offset(std::vector<int>& eps, int offset) {
  auto it = std::lower_bound(eps.begin(), eps.end(), offset);
  if (it == eps.end() || *it != offset) eps.insert(it, offset);
}

void check_target(int from, int target, int n) {
  if (target < 2 || target > n + 1)
    throw std::invalid_argument(
        "acceptor: transition from state " + std::to_string(from) +
        " targets state " + std::to_string(target) +
        ", outside the allowed range 2.." + std::to_string(n + 1));
}

}  // namespace

Acceptor::Acceptor(Alphabet alphabet, std::vector<AcceptorState> states)
    : alphabet_(alphabet), states_(std::move(states)) {
  const int n = static_cast<int>(states_.size());
  for (int i = 1; i <= n; ++i) {
    const AcceptorState& st = states_[i - 1];
    if (!(st.trans.alphabet() == alphabet_))
      throw std::invalid_argument("acceptor: state border function over a different alphabet");
    for (std::size_t k = 0; k + 1 < st.eps.size(); ++k)
      if (st.eps[k] >= st.eps[k + 1])
        throw std::invalid_argument("acceptor: eps offsets must be sorted and unique");
    for (int j : st.eps) check_target(i, i + j, n);
    for (const auto& [sym, t] : st.trans.entries())
      if (!t.is_stuck()) check_target(i, i + t.offset(), n);
  }
}

bool Acceptor::accepts(std::u32string_view word) const {
  const int n = static_cast<int>(states_.size());
  const int accept = n + 1;

  std::vector<char> cur(n + 2, 0);
  std::vector<char> next(n + 2, 0);
  std::vector<int> stack;

  auto add_closed = [&](int s, std::vector<char>& in) {
    if (in[s]) return;
    in[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (u > n) continue;  // the accepting state has no outgoing edges
      for (int j : states_[u - 1].eps) {
        int v = u + j;
        if (!in[v]) {
          in[v] = 1;
          stack.push_back(v);
        }
      }
    }
  };

  add_closed(1, cur);
  for (char32_t sym : word) {
    if (!alphabet_.contains(sym)) return false;
    std::fill(next.begin(), next.end(), 0);
    bool any = false;
    for (int s = 1; s <= n; ++s) {
      if (!cur[s]) continue;
      const Target& t = states_[s - 1].trans.eval_le(sym);
      if (t.is_stuck()) continue;
      add_closed(s + t.offset(), next);
      any = true;
    }
    if (!any) return false;
    cur.swap(next);
  }
  return cur[accept] != 0;
}

Acceptor epsilon_acceptor(Alphabet alphabet) { return Acceptor(alphabet, {}); }

Acceptor empty_acceptor(Alphabet alphabet) { return from_border(phi_empty(alphabet)); }

Acceptor from_border(const BorderFunction<bool>& phi) {
  BorderFunction<Target> trans =
      phi.map([](const bool& b) { return b ? Target::shift(1) : Target::stuck(); });
  return Acceptor(phi.alphabet(), {AcceptorState{{}, std::move(trans)}});
}

Acceptor concat(const Acceptor& a, const Acceptor& b) {
  if (!(a.alphabet() == b.alphabet()))
    throw std::invalid_argument("concat: acceptors over different alphabets");
  std::vector<AcceptorState> states = a.states();
  states.insert(states.end(), b.states().begin(), b.states().end());
  return Acceptor(a.alphabet(), std::move(states));
}

Acceptor add_eps(Acceptor a, int from, int to) {
  const int n = static_cast<int>(a.size());
  if (from < 1 || from > n)
    throw std::invalid_argument("add_eps: source state out of range");
  if (to < 2 || to > n + 1)
    throw std::invalid_argument("add_eps: target state out of range");
  std::vector<AcceptorState> states = a.states();
  insert_offset(states[from - 1].eps, to - from);
  return Acceptor(a.alphabet(), std::move(states));
}

Acceptor union_(const Acceptor& a, const Acceptor& b) {
  const int n1 = static_cast<int>(a.size());
  const int n2 = static_cast<int>(b.size());
  Acceptor r = concat(concat(a, empty_acceptor(a.alphabet())), b);
  r = add_eps(std::move(r), 1, n1 + 2);
  r = add_eps(std::move(r), n1 + 1, n1 + n2 + 2);
  return r;
}

Acceptor star(const Acceptor& a) {
  const int n = static_cast<int>(a.size());
  Acceptor r = concat(concat(empty_acceptor(a.alphabet()), a), empty_acceptor(a.alphabet()));
  r = add_eps(std::move(r), 1, 2);
  r = add_eps(std::move(r), 2, n + 3);
  r = add_eps(std::move(r), n + 2, 2);
  return r;
}

Acceptor plus(const Acceptor& a) {
  const int n = static_cast<int>(a.size());
  Acceptor r = concat(concat(empty_acceptor(a.alphabet()), a), empty_acceptor(a.alphabet()));
  r = add_eps(std::move(r), 1, 2);
  r = add_eps(std::move(r), n + 2, 2);
  r = add_eps(std::move(r), n + 2, n + 3);
  return r;
}

Acceptor optional(const Acceptor& a) {
  if (a.size() == 0) return a;  // already accepts exactly the empty word
  return add_eps(a, 1, static_cast<int>(a.size()) + 1);
}

}  // namespace flatlex
