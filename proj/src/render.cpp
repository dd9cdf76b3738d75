#include "flatlex/render.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "flatlex/utf8.hpp"

namespace flatlex {

namespace {

bool plain_printable(Symbol s) { return s >= 0x21 && s <= 0x7E; }

std::string hex_escape(Symbol s) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(s));
  return buf;
}

// Pretty form: the alphabet minimum as c_⊥, printable ASCII bare, everything
// else escaped.
std::string pretty_symbol(const Alphabet& a, Symbol s) {
  if (s == a.min) return "c_\xE2\x8A\xA5";  // c_⊥
  if (plain_printable(s)) return std::string(1, static_cast<char>(s));
  return hex_escape(s);
}

template <typename State>
std::string pretty_state_line(const Alphabet& a, int idx, const State& st) {
  std::string line = std::to_string(idx) + ": {";
  for (std::size_t k = 0; k < st.eps.size(); ++k) {
    if (k) line += ", ";
    line += std::to_string(idx + st.eps[k]);
  }
  line += "} {";
  const auto& entries = st.trans.entries();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& [sym, target] = entries[k];
    if (k) line += ", ";
    line += '(';
    if (target.is_stuck() && sym != a.min)
      line += pretty_symbol(a, sym - 1) + "^{+1}";  // interval end, one past
    else
      line += pretty_symbol(a, sym);
    line += ',';
    line += target.is_stuck() ? "#" : std::to_string(idx + target.offset());
    line += ')';
  }
  line += '}';
  return line;
}

// File form: quoted printable ASCII or U+XXXX.
std::string file_symbol(Symbol s) {
  if (plain_printable(s)) {
    std::string out = "'";
    out.push_back(static_cast<char>(s));
    out += '\'';
    return out;
  }
  return hex_escape(s);
}

void check_class_name(const TokenClass& cls) {
  if (cls.name.empty())
    throw std::invalid_argument("automaton file: empty token class name");
  for (unsigned char ch : cls.name)
    if (ch <= 0x20 || ch == 0x7F)
      throw std::invalid_argument(
          "automaton file: token class names may not contain whitespace or control characters");
}

}  // namespace

std::string PrintedAutomaton::str() const {
  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

PrintedAutomaton print_automaton(const Acceptor& a) {
  PrintedAutomaton out;
  for (std::size_t i = 0; i < a.size(); ++i)
    out.lines.push_back(
        pretty_state_line(a.alphabet(), static_cast<int>(i) + 1, a.states()[i]));
  return out;
}

PrintedAutomaton print_automaton(const Classifier& c) {
  PrintedAutomaton out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::string line =
        pretty_state_line(c.alphabet(), static_cast<int>(i) + 1, c.states()[i]);
    line += ' ';
    line += c.states()[i].cls.name;
    out.lines.push_back(std::move(line));
  }
  return out;
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line(line) {}

void write_automaton(const Classifier& c, std::ostream& out) {
  check_class_name(c.error_class());
  out << "flatclassifier v1 alphabet=" << static_cast<std::uint32_t>(c.alphabet().min)
      << ".." << static_cast<std::uint32_t>(c.alphabet().max)
      << " error=" << c.error_class().name << "\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int idx = static_cast<int>(i) + 1;
    const ClassifierState& st = c.states()[i];
    check_class_name(st.cls);
    out << idx << ": eps=[";
    for (std::size_t k = 0; k < st.eps.size(); ++k) {
      if (k) out << ',';
      out << idx + st.eps[k];
    }
    out << "] trans=[";
    const auto& entries = st.trans.entries();
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const auto& [sym, target] = entries[k];
      if (k) out << ',';
      out << '(' << file_symbol(sym) << ',';
      if (target.is_stuck())
        out << '#';
      else
        out << idx + target.offset();
      out << ')';
    }
    out << "] class=" << st.cls.name << "\n";
  }
}

std::string automaton_to_string(const Classifier& c) {
  std::ostringstream out;
  write_automaton(c, out);
  return out.str();
}

namespace {

// Cursor over one line of the automaton file.
struct LineCursor {
  std::string_view text;
  std::size_t pos = 0;
  int line;

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line, message);
  }

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }

  void expect(char ch) {
    if (done() || text[pos] != ch)
      fail(std::string("expected '") + ch + "'");
    ++pos;
  }

  void expect(std::string_view lit) {
    if (text.substr(pos, lit.size()) != lit)
      fail("expected '" + std::string(lit) + "'");
    pos += lit.size();
  }

  bool consume(char ch) {
    if (!done() && text[pos] == ch) {
      ++pos;
      return true;
    }
    return false;
  }

  std::uint32_t number() {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos) fail("expected a number");
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }

  std::string word() {
    std::size_t start = pos;
    while (!done() && static_cast<unsigned char>(text[pos]) > 0x20 &&
           text[pos] != '\x7F')
      ++pos;
    if (start == pos) fail("expected a name");
    return std::string(text.substr(start, pos - start));
  }

  Symbol symbol() {
    if (consume('\'')) {
      if (done()) fail("unterminated quoted symbol");
      char ch = text[pos++];
      expect('\'');
      return static_cast<Symbol>(static_cast<unsigned char>(ch));
    }
    expect("U+");
    std::size_t start = pos;
    std::uint32_t value = 0;
    while (!done() && std::isxdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 16 + (std::isdigit(static_cast<unsigned char>(text[pos]))
                                ? text[pos] - '0'
                                : (std::toupper(static_cast<unsigned char>(text[pos])) - 'A' + 10));
      ++pos;
    }
    if (pos - start < 4 || pos - start > 6) fail("malformed U+XXXX symbol");
    return static_cast<Symbol>(value);
  }
};

struct RawState {
  std::vector<int> eps_abs;
  std::vector<std::pair<Symbol, std::optional<int>>> trans_abs;  // nullopt = #
  std::string cls;
  int line;
};

}  // namespace

Classifier read_automaton(std::istream& in) {
  std::string text(std::istreambuf_iterator<char>(in), {});
  return automaton_from_string(text);
}

Classifier automaton_from_string(std::string_view text) {
  // Split into lines, tolerating a missing final newline.
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (lines.empty()) throw ParseError(1, "empty automaton file");

  LineCursor header{lines[0], 0, 1};
  header.expect("flatclassifier v1 alphabet=");
  std::uint32_t min = header.number();
  header.expect("..");
  std::uint32_t max = header.number();
  header.expect(" error=");
  std::string error_name = header.word();
  if (!header.done()) header.fail("trailing characters after header");
  if (min > max || max > unicode_max)
    header.fail("invalid alphabet bounds");
  Alphabet alphabet{static_cast<Symbol>(min), static_cast<Symbol>(max)};

  std::vector<RawState> raw;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    if (lines[li].empty()) {
      if (li + 1 != lines.size())
        throw ParseError(static_cast<int>(li) + 1, "unexpected blank line");
      break;
    }
    LineCursor cur{lines[li], 0, static_cast<int>(li) + 1};
    std::uint32_t idx = cur.number();
    if (idx != raw.size() + 1) cur.fail("state lines must be numbered consecutively from 1");
    cur.expect(": eps=[");
    RawState st;
    st.line = cur.line;
    if (!cur.consume(']')) {
      do {
        st.eps_abs.push_back(static_cast<int>(cur.number()));
      } while (cur.consume(','));
      cur.expect(']');
    }
    cur.expect(" trans=[");
    if (!cur.consume(']')) {
      do {
        cur.expect('(');
        Symbol sym = cur.symbol();
        cur.expect(',');
        std::optional<int> target;
        if (!cur.consume('#')) target = static_cast<int>(cur.number());
        cur.expect(')');
        st.trans_abs.emplace_back(sym, target);
      } while (cur.consume(','));
      cur.expect(']');
    }
    cur.expect(" class=");
    st.cls = cur.word();
    if (!cur.done()) cur.fail("trailing characters after state line");
    raw.push_back(std::move(st));
  }

  if (raw.empty()) throw ParseError(1, "classifier needs at least one state");
  const int n = static_cast<int>(raw.size());
  if (raw[0].cls != error_name)
    throw ParseError(raw[0].line, "state 1 class does not match the header error class");

  std::vector<ClassifierState> states;
  states.reserve(raw.size());
  for (int i = 1; i <= n; ++i) {
    RawState& st = raw[i - 1];
    std::vector<int> eps;
    for (int abs : st.eps_abs) {
      if (abs < 1 || abs > n)
        throw ParseError(st.line, "eps target " + std::to_string(abs) + " outside 1.." + std::to_string(n));
      eps.push_back(abs - i);
    }
    for (std::size_t k = 0; k + 1 < eps.size(); ++k)
      if (eps[k] >= eps[k + 1]) throw ParseError(st.line, "eps targets must be sorted and unique");

    std::vector<BorderFunction<Target>::Entry> entries;
    for (std::size_t k = 0; k < st.trans_abs.size(); ++k) {
      const auto& [sym, target] = st.trans_abs[k];
      if (!alphabet.contains(sym)) throw ParseError(st.line, "border symbol outside alphabet");
      if (k == 0 && sym != alphabet.min)
        throw ParseError(st.line, "first border must be the alphabet minimum");
      if (k > 0 && st.trans_abs[k - 1].first >= sym)
        throw ParseError(st.line, "borders must strictly increase");
      if (target) {
        if (*target < 1 || *target > n)
          throw ParseError(st.line, "transition target " + std::to_string(*target) +
                                        " outside 1.." + std::to_string(n));
        entries.emplace_back(sym, Target::shift(*target - i));
      } else {
        entries.emplace_back(sym, Target::stuck());
      }
    }
    if (entries.empty()) throw ParseError(st.line, "state has no borders");

    states.push_back(ClassifierState{std::move(eps),
                                     BorderFunction<Target>(alphabet, std::move(entries)),
                                     TokenClass{std::move(st.cls)}});
  }

  try {
    return Classifier(alphabet, std::move(states));
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, e.what());
  }
}

namespace {

constexpr std::string_view kCppScannerTemplate = R"TPL(// Generated scanner. Do not edit.
//
// next_token() scans the longest prefix of [data, data+size) that classifies
// as a non-error token, returns its length and stores the token class name in
// *cls. A zero length with *cls = "@ERROR_NAME@" means no prefix qualified.
// Define FLATLEX_SCANNER_NS before including to rename the namespace.

#include <cstddef>
#include <cstdint>

#ifndef FLATLEX_SCANNER_NS
#define FLATLEX_SCANNER_NS flatlex_scanner
#endif

namespace FLATLEX_SCANNER_NS {

namespace tables {

struct Entry {
  char32_t sym;          // border symbol
  std::uint32_t target;  // absolute state, 0 = no transition
};

struct State {
  std::uint32_t first;  // index of the state's first entry
  std::uint32_t count;  // number of entries
  std::uint32_t cls;    // index into class_names
};

inline constexpr char32_t alphabet_min = @MIN@;
inline constexpr char32_t alphabet_max = @MAX@;
inline constexpr std::uint32_t error_class = 0;

inline constexpr const char* class_names[] = {
@CLASS_NAMES@};

inline constexpr Entry entries[] = {
@ENTRIES@};

inline constexpr State states[] = {
@STATES@};

}  // namespace tables

inline std::size_t next_token(const char32_t* data, std::size_t size,
                              const char** cls) {
  std::uint32_t state = 1;
  std::size_t best_len = 0;
  std::uint32_t best_cls = tables::error_class;
  for (std::size_t i = 0; i < size; ++i) {
    const char32_t c = data[i];
    if (c < tables::alphabet_min || c > tables::alphabet_max) break;
    const tables::State& st = tables::states[state - 1];
    // Greatest border not above c decides the move.
    const tables::Entry* lo = tables::entries + st.first;
    const tables::Entry* hi = lo + st.count;
    while (hi - lo > 1) {
      const tables::Entry* mid = lo + (hi - lo) / 2;
      if (mid->sym <= c)
        lo = mid;
      else
        hi = mid;
    }
    if (lo->target == 0) break;
    state = lo->target;
    const std::uint32_t c_cls = tables::states[state - 1].cls;
    if (c_cls != tables::error_class) {
      best_len = i + 1;
      best_cls = c_cls;
    }
  }
  if (cls) *cls = tables::class_names[best_cls];
  return best_len;
}

}  // namespace FLATLEX_SCANNER_NS
)TPL";

std::string escape_c_string(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '\\' || ch == '"') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

void substitute(std::string& text, std::string_view key, const std::string& value) {
  std::size_t pos = text.find(key);
  while (pos != std::string::npos) {
    text.replace(pos, key.size(), value);
    pos = text.find(key, pos + value.size());
  }
}

}  // namespace

std::string emit_scanner(const Classifier& c, std::string_view template_name) {
  if (template_name != "cpp")
    throw std::invalid_argument("emit_scanner: unknown template '" +
                                std::string(template_name) + "' (available: cpp)");
  if (!c.deterministic())
    throw std::invalid_argument("emit_scanner: classifier is not deterministic");
  if (!well_formed(c))
    throw std::invalid_argument("emit_scanner: classifier is not well-formed");

  // Class names dedup'd by first occurrence; state 1 owns index 0.
  std::vector<std::string> names;
  std::map<std::string, std::uint32_t> name_index;
  auto intern = [&](const std::string& name) {
    auto [it, inserted] = name_index.try_emplace(name, names.size());
    if (inserted) names.push_back(name);
    return it->second;
  };

  std::string class_rows, entry_rows, state_rows;
  std::uint32_t first = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const ClassifierState& st = c.states()[i];
    const std::uint32_t cls = intern(st.cls.name);
    const auto& entries = st.trans.entries();
    for (const auto& [sym, t] : entries) {
      const std::uint32_t target =
          t.is_stuck() ? 0u : static_cast<std::uint32_t>(static_cast<int>(i) + 1 + t.offset());
      entry_rows += "    {" + std::to_string(static_cast<std::uint32_t>(sym)) + "u, " +
                    std::to_string(target) + "u},\n";
    }
    state_rows += "    {" + std::to_string(first) + "u, " +
                  std::to_string(entries.size()) + "u, " + std::to_string(cls) + "u},\n";
    first += static_cast<std::uint32_t>(entries.size());
  }
  for (const std::string& name : names)
    class_rows += "    \"" + escape_c_string(name) + "\",\n";

  std::string out(kCppScannerTemplate);
  substitute(out, "@ERROR_NAME@", escape_c_string(c.error_class().name));
  substitute(out, "@MIN@", std::to_string(static_cast<std::uint32_t>(c.alphabet().min)));
  substitute(out, "@MAX@", std::to_string(static_cast<std::uint32_t>(c.alphabet().max)));
  substitute(out, "@CLASS_NAMES@", class_rows);
  substitute(out, "@ENTRIES@", entry_rows);
  substitute(out, "@STATES@", state_rows);
  return out;
}

}  // namespace flatlex
