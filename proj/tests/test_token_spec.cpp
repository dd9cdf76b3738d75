#include <doctest.h>

#include "flatlex/determinize.hpp"
#include "flatlex/token_spec.hpp"
#include "support/fixtures.hpp"

using namespace flatlex;
using namespace flatlex::testsupport;

namespace {

TokenSpec parse(const std::string& text) { return parse_spec(text); }

int error_line(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const SpecError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("a class-star rule builds the composed identifier expression") {
  TokenSpec spec = parse("error E;\ntoken I = [a-zA-Z][a-zA-Z0-9_]*;\n");
  REQUIRE(spec.rules.size() == 1);
  CHECK(spec.rules[0].cls == TokenClass{"I"});
  CHECK(spec.rules[0].pattern == "[a-zA-Z][a-zA-Z0-9_]*");

  Alphabet a{};
  auto letter = or_(and_(phi_geq(a, 'a'), phi_leq(a, 'z')),
                    and_(phi_geq(a, 'A'), phi_leq(a, 'Z')));
  auto ident_char = or_(or_(letter, and_(phi_geq(a, '0'), phi_leq(a, '9'))),
                        and_(phi_geq(a, '_'), phi_leq(a, '_')));
  CHECK(spec.rules[0].acceptor ==
        concat(from_border(letter), star(from_border(ident_char))));
}

TEST_CASE("character classes fold left through the union combinator") {
  // [a-zA-Z] must be or_(a-z, A-Z) in that order
  TokenSpec spec = parse("error E;\ntoken L = [a-zA-Z];\n");
  Alphabet a{};
  CHECK(spec.rules[0].acceptor ==
        from_border(or_(or_(phi_empty(a), and_(phi_geq(a, 'a'), phi_leq(a, 'z'))),
                        and_(phi_geq(a, 'A'), phi_leq(a, 'Z')))));
}

TEST_CASE("a quoted keyword builds the chain acceptor") {
  TokenSpec spec = parse("error E;\ntoken W = \"while\";\n");
  CHECK(spec.rules[0].acceptor == ex_while_acceptor());
}

TEST_CASE("rules that accept the empty word are rejected") {
  CHECK_THROWS_AS(parse("error E;\ntoken BAD = a*;\n"), SpecError);
  CHECK(error_line("error E;\ntoken BAD = a*;\n") == 2);
  try {
    parse("error E;\ntoken BAD = (x|y?)z?;\n");
    FAIL("expected rejection");
  } catch (const SpecError& e) {
    CHECK(std::string(e.what()).find("empty word") != std::string::npos);
  }
  // plus is the fix the diagnostic suggests
  CHECK(parse("error E;\ntoken OK = a+;\n").rules.size() == 1);
}

TEST_CASE("empty-language rules warn but parse") {
  TokenSpec spec = parse("alphabet 97..122;\nerror E;\ntoken DEAD = [^a-z];\n");
  REQUIRE(spec.warnings.size() == 1);
  CHECK(spec.warnings[0].find("DEAD") != std::string::npos);
  CHECK(spec.warnings[0].find("line 3") != std::string::npos);
}

TEST_CASE("alphabet bounds apply to the whole spec") {
  TokenSpec spec = parse("alphabet 97..100;\nerror E;\ntoken A = [a-d]+;\n");
  CHECK(spec.alphabet == Alphabet{97, 100});
  CHECK(spec.rules[0].acceptor.alphabet() == Alphabet{97, 100});
  CHECK(error_line("alphabet 97..100;\nerror E;\ntoken A = z;\n") == 3);
  CHECK(error_line("error E;\nalphabet 0..9;\n") == 2);
  CHECK(error_line("alphabet 100..97;\nerror E;\n") == 1);
}

TEST_CASE("escapes inside atoms, classes and strings") {
  TokenSpec spec = parse(
      "error E;\n"
      "token NL = \\n;\n"
      "token TAB = [\\t];\n"
      "token DASH = [a\\-z];\n"
      "token BRACKET = [\\]];\n"
      "token QUOTE = \"\\\"\";\n"
      "token UNI = \\u0041;\n");
  CHECK(spec.rules[0].acceptor.accepts(U"\n"));
  CHECK(spec.rules[1].acceptor.accepts(U"\t"));
  CHECK(spec.rules[2].acceptor.accepts(U"-"));
  CHECK(spec.rules[2].acceptor.accepts(U"a"));
  CHECK_FALSE(spec.rules[2].acceptor.accepts(U"b"));
  CHECK(spec.rules[3].acceptor.accepts(U"]"));
  CHECK(spec.rules[4].acceptor.accepts(U"\""));
  CHECK(spec.rules[5].acceptor.accepts(U"A"));

  CHECK_THROWS_AS(parse("error E;\ntoken S = \\uD800;\n"), SpecError);
  CHECK_THROWS_AS(parse("error E;\ntoken S = \\q;\n"), SpecError);
  CHECK_THROWS_AS(parse("error E;\ntoken S = \\u00;\n"), SpecError);
}

TEST_CASE("negated classes and dot") {
  TokenSpec spec = parse("error E;\ntoken NOTA = [^a];\ntoken ANY = .;\n");
  CHECK_FALSE(spec.rules[0].acceptor.accepts(U"a"));
  CHECK(spec.rules[0].acceptor.accepts(U"b"));
  CHECK(spec.rules[0].acceptor.accepts(U"\n"));
  CHECK(spec.rules[1].acceptor.accepts(U"a"));
  CHECK(spec.rules[1].acceptor.accepts(U"\n"));
  CHECK_FALSE(spec.rules[1].acceptor.accepts(U"ab"));
}

TEST_CASE("whitespace and comments are insignificant between atoms") {
  TokenSpec a = parse("error E;\ntoken T = ab | cd;\n");
  TokenSpec b = parse("error E;\ntoken T = a b|c d ;  # trailing comment\n");
  CHECK(a.rules[0].acceptor == b.rules[0].acceptor);

  TokenSpec with_class = parse("error E;\ntoken WS = [ \t]+;\n");
  CHECK(with_class.rules[0].acceptor.accepts(U" "));
  CHECK(with_class.rules[0].acceptor.accepts(U"\t \t"));
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse("error E;\ntoken T = (ab;\n");
    FAIL("expected error");
  } catch (const SpecError& e) {
    CHECK(e.line == 2);
    CHECK(e.col > 1);
  }
  CHECK_THROWS_AS(parse("token T = a;\n"), SpecError);            // error first
  CHECK_THROWS_AS(parse("error E;\nerror F;\n"), SpecError);      // duplicate
  CHECK_THROWS_AS(parse("error E;\ntoken T = [z-a];\n"), SpecError);
  CHECK_THROWS_AS(parse("error E;\ntoken T = [];\n"), SpecError);
  CHECK_THROWS_AS(parse("error E;\ntoken T = \"abc;\n"), SpecError);
  CHECK_THROWS_AS(parse("error E;\ntoken T = *a;\n"), SpecError);
  CHECK_THROWS_AS(parse("error E;\ntoken T = a || b;\n"), SpecError);
  CHECK_THROWS_AS(parse("error E;\nbogus X;\n"), SpecError);
  CHECK_THROWS_AS(parse("error E;\ntoken T = a\n"), SpecError);   // missing ;
  CHECK_THROWS_AS(parse("error E"), SpecError);
  CHECK_THROWS_AS(parse(""), SpecError);
}

TEST_CASE("later rules win ties through the larger-state rule") {
  TokenSpec spec = parse("error E;\ntoken A = ab;\ntoken B = ab;\n");
  Classifier c = build_classifier(spec);
  CHECK(well_formed(c));
  CHECK(classify_nfa(c, U"ab").cls == TokenClass{"B"});
  CHECK(classify_dfa(determinize(c), U"ab").cls == TokenClass{"B"});
}

TEST_CASE("build_classifier wires the rules in file order") {
  TokenSpec spec =
      parse("error E;\ntoken I = [a-zA-Z][a-zA-Z0-9_]*;\ntoken W = \"while\";\n");
  Classifier c = build_classifier(spec);
  CHECK(c.error_class() == TokenClass{"E"});
  CHECK(well_formed(c));
  CHECK(classify_nfa(c, U"while").cls == TokenClass{"W"});
  CHECK(classify_nfa(c, U"whilst").cls == TokenClass{"I"});
  // the composed identifier acceptor carries two extra glue states, so the
  // classifier is the ten-state table plus those two
  CHECK(c.size() == 12);
}
