#include <doctest.h>

#include <sstream>

#include "flatlex/determinize.hpp"
#include "flatlex/minimize.hpp"
#include "flatlex/render.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace flatlex;
using namespace flatlex::testsupport;

namespace {
const Alphabet kTiny{U'a', U'd'};
}

TEST_CASE("pretty printing uses absolute states and the +1 convention") {
  PrintedAutomaton p = print_automaton(ex_while_acceptor());
  REQUIRE(p.lines.size() == 5);
  CHECK(p.lines[0] == "1: {} {(c_\xE2\x8A\xA5,#), (w,2), (w^{+1},#)}");
  CHECK(p.lines[4] == "5: {} {(c_\xE2\x8A\xA5,#), (e,6), (e^{+1},#)}");
}

TEST_CASE("the empty acceptor prints no rows") {
  CHECK(print_automaton(epsilon_acceptor({})).lines.empty());
  CHECK(print_automaton(epsilon_acceptor({})).str() == "");
}

TEST_CASE("classifier rows append the token class and absolute eps targets") {
  PrintedAutomaton p = print_automaton(ex_id_while_classifier());
  REQUIRE(p.lines.size() == 10);
  CHECK(p.lines[0] == "1: {2, 5} {(c_\xE2\x8A\xA5,#)} E");
  CHECK(p.lines[2] ==
        "3: {4} {(c_\xE2\x8A\xA5,#), (0,3), (9^{+1},#), (A,3), (Z^{+1},#), "
        "(_,3), (_^{+1},#), (a,3), (z^{+1},#)} E");
  CHECK(p.lines[9] == "10: {} {(c_\xE2\x8A\xA5,#)} W");
}

TEST_CASE("non-printable symbols render as code point escapes") {
  Alphabet a{9, 32};  // tab .. space
  BorderFunction<Target> f(a, {{9, Target::stuck()}, {10, Target::shift(1)}, {11, Target::stuck()}});
  Acceptor acc(a, {AcceptorState{{}, f}, AcceptorState{{}, BorderFunction<Target>(a, {{9, Target::stuck()}})}});
  PrintedAutomaton p = print_automaton(acc);
  CHECK(p.lines[0] == "1: {} {(c_\xE2\x8A\xA5,#), (U+000A,2), (U+000A^{+1},#)}");
}

TEST_CASE("written automata read back structurally equal") {
  Rng rng(51);
  for (int round = 0; round < 40; ++round) {
    Classifier c = random_classifier(kTiny, 4, rng);
    std::string text = automaton_to_string(c);
    Classifier back = automaton_from_string(text);
    CHECK(back == c);
    CHECK(automaton_to_string(back) == text);  // canonical bytes

    Classifier d = determinize(c);
    CHECK(automaton_from_string(automaton_to_string(d)) == d);
  }
}

TEST_CASE("write_automaton works through streams") {
  Classifier c = ex_id_while_classifier();
  std::ostringstream sink;
  write_automaton(c, sink);
  std::istringstream source(sink.str());
  CHECK(read_automaton(source) == c);
}

TEST_CASE("the reader rejects malformed files with line numbers") {
  auto read = [](std::string text) { return automaton_from_string(text); };

  CHECK_THROWS_WITH_AS(read(""), "line 1: empty automaton file", ParseError);
  CHECK_THROWS_AS(read("flatmess v9\n"), ParseError);
  // header only: no states
  CHECK_THROWS_AS(read("flatclassifier v1 alphabet=0..127 error=E\n"), ParseError);

  std::string good = automaton_to_string(ex_id_while_classifier());
  CHECK(read(good) == ex_id_while_classifier());

  // transition past the last state
  std::string overshoot = good;
  auto pos = overshoot.find("('w',6)");
  REQUIRE(pos != std::string::npos);
  overshoot.replace(pos, 7, "('w',11)");
  try {
    read(overshoot);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 6);
  }

  // unsorted borders
  std::string unsorted = good;
  pos = unsorted.find("trans=[(U+0000,#),('w',6)");
  REQUIRE(pos != std::string::npos);
  unsorted.replace(pos, std::string("trans=[(U+0000,#),('w',6)").size(),
                   "trans=[(U+0000,#),('w',6),('a',6)");
  CHECK_THROWS_AS(read(unsorted), ParseError);

  // error class mismatch between header and state 1
  std::string mismatch = good;
  pos = mismatch.find("error=E");
  mismatch.replace(pos, 7, "error=X");
  CHECK_THROWS_AS(read(mismatch), ParseError);
}

TEST_CASE("emitted scanner source embeds the classifier tables") {
  Classifier c = minimize(determinize(ex_id_for_nfa()));
  std::string src = emit_scanner(c);
  CHECK(src.find("FLATLEX_SCANNER_NS") != std::string::npos);
  CHECK(src.find("\"E\",") != std::string::npos);
  CHECK(src.find("\"I\",") != std::string::npos);
  CHECK(src.find("\"F\",") != std::string::npos);
  CHECK(src.find("next_token") != std::string::npos);

  std::string trivial = emit_scanner(error_classifier({}, TokenClass{"E"}));
  CHECK(trivial.find("{0u, 0u},") != std::string::npos);  // single stuck entry

  CHECK_THROWS_AS(emit_scanner(ex_id_while_classifier()), std::invalid_argument);
  CHECK_THROWS_AS(emit_scanner(c, "fortran"), std::invalid_argument);
}
