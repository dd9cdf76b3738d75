#ifndef FLATLEX_RENDER_HPP
#define FLATLEX_RENDER_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "flatlex/classifier.hpp"

namespace flatlex {

// Human-readable automaton text, one line per state. State references are
// printed absolute, and a stuck border above the minimum prints as the
// predecessor symbol with a ^{+1} mark, so interval ends read naturally
// (e.g. (Z^{+1},#) instead of ([,#)).
struct PrintedAutomaton {
  std::vector<std::string> lines;

  std::string str() const;  // lines joined with '\n', trailing newline if any
};

PrintedAutomaton print_automaton(const Acceptor& a);
PrintedAutomaton print_automaton(const Classifier& c);

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line, const std::string& message);
};

// Line-oriented UTF-8 classifier file, LF endings:
//   flatclassifier v1 alphabet=<min>..<max> error=<class>
//   <idx>: eps=[<abs>,...] trans=[(<sym>,<abs>|#),...] class=<name>
// State references are absolute in the file and converted back to relative on
// read; writing is canonical, so equal classifiers produce identical bytes.
void write_automaton(const Classifier& c, std::ostream& out);
std::string automaton_to_string(const Classifier& c);
Classifier read_automaton(std::istream& in);
Classifier automaton_from_string(std::string_view text);

// Emits standalone scanner source for a deterministic, well-formed
// classifier. The only template currently provided is "cpp": a self-contained
// header defining
//   std::size_t next_token(const char32_t* data, std::size_t size,
//                          const char** cls);
// inside a namespace overridable via FLATLEX_SCANNER_NS. The emitted tables
// are the minimized border functions as sorted (symbol, target) arrays and
// the function replays classify_dfa exactly.
std::string emit_scanner(const Classifier& c, std::string_view template_name = "cpp");

}  // namespace flatlex

#endif  // FLATLEX_RENDER_HPP
