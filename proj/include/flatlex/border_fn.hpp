#ifndef FLATLEX_BORDER_FN_HPP
#define FLATLEX_BORDER_FN_HPP

#include <algorithm>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "flatlex/alphabet.hpp"

namespace flatlex {

// A border function stores only the symbols where a value changes. The value
// at any symbol is the value of the greatest stored border not above it
// (eval_le), so a handful of entries covers an arbitrarily large alphabet and
// intervals need no begin/end bookkeeping. Entries are sorted and the first
// one always sits at the alphabet minimum, which makes eval_le total.
template <typename V>
class BorderFunction {
 public:
  using Entry = std::pair<Symbol, V>;

  BorderFunction(Alphabet alphabet, std::vector<Entry> entries)
      : alphabet_(alphabet), entries_(std::move(entries)) {
    if (entries_.empty())
      throw std::invalid_argument("border function: needs at least one entry");
    if (entries_.front().first != alphabet_.min)
      throw std::invalid_argument(
          "border function: first entry must sit at the alphabet minimum");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (!alphabet_.contains(entries_[i].first))
        throw std::invalid_argument("border function: border outside alphabet");
      if (i > 0 && !(entries_[i - 1].first < entries_[i].first))
        throw std::invalid_argument(
            "border function: borders must strictly increase");
    }
  }

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Entry>& entries() const { return entries_; }

  // Value of the greatest border not above s.
  const V& eval_le(Symbol s) const {
    if (!alphabet_.contains(s))
      throw std::out_of_range("eval_le: symbol outside alphabet");
    auto it = std::upper_bound(
        entries_.begin(), entries_.end(), s,
        [](Symbol lhs, const Entry& e) { return lhs < e.first; });
    return std::prev(it)->second;
  }

  // Smallest equivalent border function: drops every entry whose value equals
  // the value of the nearest retained entry before it.
  BorderFunction minimized() const {
    std::vector<Entry> kept;
    kept.reserve(entries_.size());
    for (const Entry& e : entries_)
      if (kept.empty() || !(kept.back().second == e.second)) kept.push_back(e);
    return BorderFunction(alphabet_, std::move(kept));
  }

  // Applies f to every entry value, then minimizes.
  template <typename F>
  auto map(F f) const
      -> BorderFunction<std::decay_t<std::invoke_result_t<F, const V&>>> {
    using W = std::decay_t<std::invoke_result_t<F, const V&>>;
    std::vector<typename BorderFunction<W>::Entry> mapped;
    mapped.reserve(entries_.size());
    for (const Entry& e : entries_) mapped.emplace_back(e.first, f(e.second));
    return BorderFunction<W>(alphabet_, std::move(mapped)).minimized();
  }

  friend bool operator==(const BorderFunction&, const BorderFunction&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Entry> entries_;
};

// Pointwise pairing over the union of both domains. The raw result is kept as
// is; minimization happens only through a subsequent map().
template <typename V1, typename V2>
BorderFunction<std::pair<V1, V2>> product(const BorderFunction<V1>& f,
                                          const BorderFunction<V2>& g) {
  if (!(f.alphabet() == g.alphabet()))
    throw std::invalid_argument("product: border functions over different alphabets");
  const auto& a = f.entries();
  const auto& b = g.entries();
  std::vector<typename BorderFunction<std::pair<V1, V2>>::Entry> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  const V1* cur_a = nullptr;
  const V2* cur_b = nullptr;
  while (i < a.size() || j < b.size()) {
    Symbol s;
    if (j == b.size() || (i < a.size() && a[i].first <= b[j].first))
      s = a[i].first;
    else
      s = b[j].first;
    if (i < a.size() && a[i].first == s) cur_a = &a[i++].second;
    if (j < b.size() && b[j].first == s) cur_b = &b[j++].second;
    out.emplace_back(s, std::pair<V1, V2>(*cur_a, *cur_b));
  }
  return BorderFunction<std::pair<V1, V2>>(f.alphabet(), std::move(out));
}

// Boolean border functions, the building blocks for character classes.

inline BorderFunction<bool> phi_empty(Alphabet a) {
  return BorderFunction<bool>(a, {{a.min, false}});
}

inline BorderFunction<bool> phi_sigma(Alphabet a) {
  return BorderFunction<bool>(a, {{a.min, true}});
}

// True exactly at s and above.
inline BorderFunction<bool> phi_geq(Alphabet a, Symbol s) {
  if (!a.contains(s)) throw std::out_of_range("phi_geq: symbol outside alphabet");
  if (s == a.min) return phi_sigma(a);
  return BorderFunction<bool>(a, {{a.min, false}, {s, true}});
}

// True exactly at s and below.
inline BorderFunction<bool> phi_leq(Alphabet a, Symbol s) {
  if (!a.contains(s)) throw std::out_of_range("phi_leq: symbol outside alphabet");
  if (s == a.max) return phi_sigma(a);
  return BorderFunction<bool>(a, {{a.min, true}, {s + 1, false}});
}

inline BorderFunction<bool> and_(const BorderFunction<bool>& f,
                                 const BorderFunction<bool>& g) {
  return product(f, g).map(
      [](const std::pair<bool, bool>& p) { return p.first && p.second; });
}

inline BorderFunction<bool> or_(const BorderFunction<bool>& f,
                                const BorderFunction<bool>& g) {
  return product(f, g).map(
      [](const std::pair<bool, bool>& p) { return p.first || p.second; });
}

inline BorderFunction<bool> not_(const BorderFunction<bool>& f) {
  return f.map([](const bool& v) { return !v; });
}

inline BorderFunction<bool> minus(const BorderFunction<bool>& f,
                                  const BorderFunction<bool>& g) {
  return product(f, g).map(
      [](const std::pair<bool, bool>& p) { return p.first && !p.second; });
}

}  // namespace flatlex

#endif  // FLATLEX_BORDER_FN_HPP
