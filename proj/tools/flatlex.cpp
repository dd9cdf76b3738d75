#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "flatlex/determinize.hpp"
#include "flatlex/minimize.hpp"
#include "flatlex/render.hpp"
#include "flatlex/token_spec.hpp"
#include "flatlex/utf8.hpp"

namespace {

using namespace flatlex;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

Classifier load_automaton(const std::string& path) {
  return automaton_from_string(read_file(path));
}

int run_build(const std::string& spec_path, const std::string& out_path,
              bool no_minimize, const std::string& init) {
  TokenSpec spec = parse_spec(read_file(spec_path));
  for (const std::string& w : spec.warnings) std::cerr << "warning: " << w << "\n";

  Classifier nfa = build_classifier(spec);
  std::cout << "nfa states: " << nfa.size() << "\n";

  Classifier dfa = determinize(nfa);
  std::cout << "dfa states: " << dfa.size() << "\n";

  Classifier result = dfa;
  if (!no_minimize) {
    InitStrategy strategy = init == "by_class" ? InitStrategy::by_class
                                               : InitStrategy::by_reachability;
    result = minimize(dfa, strategy);
    double reduction =
        100.0 * static_cast<double>(dfa.size() - result.size()) /
        static_cast<double>(dfa.size());
    char line[128];
    std::snprintf(line, sizeof line, "minimized states: %zu (%.1f%% reduction)",
                  result.size(), reduction);
    std::cout << line << "\n";
  }

  write_file(out_path, automaton_to_string(result));
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int run_print(const std::string& automaton_path) {
  std::cout << print_automaton(load_automaton(automaton_path)).str();
  return 0;
}

int run_tokenize(const std::string& automaton_path, const std::string& input_path) {
  Classifier c = load_automaton(automaton_path);
  if (!c.deterministic())
    throw std::invalid_argument(
        "automaton is not deterministic; rebuild it with 'flatlex build'");

  const std::string input = read_file(input_path);

  // Scalar stream with byte offsets; invalid bytes become out-of-alphabet
  // sentinels that can never match, so they fall out as error tokens.
  std::u32string scalars;
  std::vector<std::size_t> offset;
  for (std::size_t pos = 0; pos < input.size();) {
    auto d = utf8::decode(input, pos);
    scalars.push_back(d.ok ? d.scalar : static_cast<char32_t>(0xFFFFFFFF));
    offset.push_back(pos);
    pos += d.length;
  }
  offset.push_back(input.size());

  std::string out;
  std::size_t pos = 0;
  while (pos < scalars.size()) {
    Classification r = classify_dfa(c, std::u32string_view(scalars).substr(pos));
    std::size_t len = r.lexeme.size();
    const std::string& cls = len == 0 ? c.error_class().name : r.cls.name;
    if (len == 0) len = 1;  // panic-mode resync: skip one symbol as an error token
    out += cls;
    out += '\t';
    out += std::to_string(offset[pos]);
    out += '\t';
    out.append(input, offset[pos], offset[pos + len] - offset[pos]);
    out += '\n';
    pos += len;
  }
  std::cout << out;
  return 0;
}

int run_emit(const std::string& automaton_path, const std::string& out_path,
             const std::string& tpl) {
  Classifier c = load_automaton(automaton_path);
  write_file(out_path, emit_scanner(c, tpl));
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flatlex: tokenizer generator built on flat automata"};
  app.require_subcommand(1);

  std::string spec_path, automaton_path, input_path, out_path;
  std::string init = "by_reachability";
  std::string tpl = "cpp";
  bool no_minimize = false;

  CLI::App* build = app.add_subcommand(
      "build", "compile a token spec into a deterministic classifier");
  build->add_option("spec", spec_path, "token spec file")->required();
  build->add_option("-o,--output", out_path, "automaton file to write")->required();
  build->add_flag("--no-minimize", no_minimize, "skip state minimization");
  build->add_option("--init", init, "initial partition strategy")
      ->check(CLI::IsMember({"by_class", "by_reachability"}))
      ->capture_default_str();

  CLI::App* print = app.add_subcommand("print", "pretty-print an automaton file");
  print->add_option("automaton", automaton_path, "automaton file")->required();

  CLI::App* tokenize =
      app.add_subcommand("tokenize", "split an input file into tokens");
  tokenize->add_option("automaton", automaton_path, "automaton file")->required();
  tokenize->add_option("input", input_path, "input file")->required();

  CLI::App* emit =
      app.add_subcommand("emit", "emit standalone scanner source code");
  emit->add_option("automaton", automaton_path, "automaton file")->required();
  emit->add_option("-o,--output", out_path, "source file to write")->required();
  emit->add_option("--template", tpl, "code template")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (build->parsed()) return run_build(spec_path, out_path, no_minimize, init);
    if (print->parsed()) return run_print(automaton_path);
    if (tokenize->parsed()) return run_tokenize(automaton_path, input_path);
    if (emit->parsed()) return run_emit(automaton_path, out_path, tpl);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
