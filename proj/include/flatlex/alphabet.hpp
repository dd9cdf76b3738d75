#ifndef FLATLEX_ALPHABET_HPP
#define FLATLEX_ALPHABET_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace flatlex {

// Symbols are ordinals in a dense, totally ordered universe. For text
// alphabets the ordinal is the Unicode scalar value; test alphabets map
// whatever domain they need onto a small ordinal range.
using Symbol = char32_t;

inline constexpr Symbol unicode_max = 0x10FFFF;

// A dense interval [min, max] of symbols. min is the bottom element,
// written c_⊥ when automata are printed.
struct Alphabet {
  Symbol min = 0;
  Symbol max = unicode_max;

  bool contains(Symbol s) const { return min <= s && s <= max; }

  // Least symbol strictly greater than s; absent at the top element.
  std::optional<Symbol> successor(Symbol s) const {
    if (!contains(s))
      throw std::out_of_range("Alphabet::successor: symbol outside universe");
    if (s == max) return std::nullopt;
    return s + 1;
  }

  std::size_t size() const {
    return static_cast<std::size_t>(max) - static_cast<std::size_t>(min) + 1;
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

}  // namespace flatlex

#endif  // FLATLEX_ALPHABET_HPP
