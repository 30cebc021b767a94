// Command-line front end: parsing, saturation, proof search with
// countermodel fallback, the operator square, and mood tables.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "syllog/syllog.hpp"

namespace {

struct RunConfig {
  int system = 5;
  syllog::Rational threshold{3, 4};
  int max_universe = 5;
  long long max_steps = -1;  // negative: no cap
  bool structured = false;

  syllog::QuantitySystem make_system() const {
    return syllog::QuantitySystem(system);
  }
  syllog::Semantics make_semantics() const {
    return syllog::Semantics(threshold);
  }
  std::optional<std::size_t> step_cap() const {
    if (max_steps < 0) return std::nullopt;
    return static_cast<std::size_t>(max_steps);
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw syllog::error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

// Loads a knowledge base, reporting per-line diagnostics on stderr.
syllog::KbParseResult load_kb(const std::string& path,
                              const syllog::QuantitySystem& sys) {
  syllog::KbParseResult result = syllog::parse_kb(read_file(path), sys);
  for (const syllog::KbDiagnostic& d : result.errors)
    std::cerr << path << ":" << d.line << ": error: " << d.message << "\n";
  return result;
}

std::string premise_list(const syllog::ProofStep& step) {
  std::string out;
  for (std::size_t p : step.premises) {
    if (!out.empty()) out += ',';
    out += std::to_string(p + 1);  // display indices are 1-based
  }
  return out;
}

std::string step_label(const syllog::ProofStep& step) {
  std::string out = "[";
  out += syllog::rule_name(step.rule);
  const std::string premises = premise_list(step);
  if (!premises.empty()) out += " " + premises;
  out += "]";
  return out;
}

int cmd_parse(const std::string& path, const RunConfig& config) {
  const auto sys = config.make_system();
  const syllog::KbParseResult result = load_kb(path, sys);
  for (std::size_t i = 0; i < result.kb.statements.size(); ++i) {
    const syllog::Statement& s = result.kb.statements[i];
    const syllog::CategoryDerivation derivation = syllog::typecheck(s);
    if (config.structured) {
      nlohmann::json record;
      record["line"] = result.lines[i];
      record["statement"] = syllog::render(s);
      record["category"] = derivation.category.to_string();
      std::cout << record.dump() << "\n";
      continue;
    }
    std::cout << result.lines[i] << ": " << syllog::render(s) << "\n";
    std::istringstream tree(syllog::format_derivation(derivation));
    for (std::string line; std::getline(tree, line);)
      std::cout << "    " << line << "\n";
  }
  if (!config.structured)
    std::cout << result.kb.statements.size() << " statements\n";
  return result.errors.empty() ? 0 : 1;
}

int cmd_saturate(const std::string& path, const RunConfig& config) {
  const auto sys = config.make_system();
  const syllog::KbParseResult input = load_kb(path, sys);
  if (!input.errors.empty()) return 1;

  const syllog::Closure closure = syllog::saturate(input.kb, config.step_cap());
  for (std::size_t i = 0; i < closure.entries.size(); ++i) {
    const syllog::ClosureEntry& entry = closure.entries[i];
    if (config.structured) {
      nlohmann::json record;
      record["index"] = i + 1;
      record["statement"] = syllog::render(entry.statement);
      record["rule"] = syllog::rule_name(entry.step.rule);
      auto premises = nlohmann::json::array();
      for (std::size_t p : entry.step.premises) premises.push_back(p + 1);
      record["premises"] = std::move(premises);
      std::cout << record.dump() << "\n";
      continue;
    }
    std::cout << i + 1 << ". " << syllog::render(entry.statement) << "  "
              << step_label(entry.step) << "\n";
  }
  if (closure.inconsistent && closure.contradiction) {
    const auto [pos, neg] = *closure.contradiction;
    std::cerr << "warning: knowledge base is inconsistent: derived both "
              << syllog::render(closure.entries[pos].statement) << " and "
              << syllog::render(closure.entries[neg].statement) << "\n";
  }
  return 0;
}

void print_proof(const syllog::ProofNode& node, int depth) {
  std::cout << std::string(static_cast<std::size_t>(depth) * 2, ' ')
            << syllog::render(node.statement) << "  ["
            << syllog::rule_name(node.rule) << "]\n";
  for (const syllog::ProofNode& premise : node.premises)
    print_proof(premise, depth + 1);
}

void print_proof_structured(const syllog::ProofNode& node, int depth) {
  nlohmann::json record;
  record["depth"] = depth;
  record["statement"] = syllog::render(node.statement);
  record["rule"] = syllog::rule_name(node.rule);
  std::cout << record.dump() << "\n";
  for (const syllog::ProofNode& premise : node.premises)
    print_proof_structured(premise, depth + 1);
}

int cmd_prove(const std::string& path, const std::string& goal_text,
              const RunConfig& config) {
  const auto sys = config.make_system();
  const syllog::KbParseResult input = load_kb(path, sys);
  if (!input.errors.empty()) return 3;
  const syllog::Statement goal = syllog::parse(goal_text, sys);

  if (const auto proof =
          syllog::prove(input.kb, goal, config.step_cap())) {
    if (config.structured)
      print_proof_structured(*proof, 0);
    else
      print_proof(*proof, 0);
    return 0;
  }

  const auto model = syllog::find_countermodel(
      input.kb.statements, goal, config.make_semantics(), config.max_universe);
  if (model) {
    if (config.structured) {
      nlohmann::json record;
      record["result"] = "countermodel";
      record["universe"] = model->universe_size;
      auto extensions = nlohmann::json::object();
      for (const auto& [name, bits] : model->extensions) {
        auto elements = nlohmann::json::array();
        for (int e = 0; e < model->universe_size; ++e)
          if (bits >> e & 1) elements.push_back(e);
        extensions[name] = std::move(elements);
      }
      record["extensions"] = std::move(extensions);
      std::cout << record.dump() << "\n";
    } else {
      std::cout << "not derivable, countermodel found\n"
                << model->to_string() << "\n";
    }
    return 1;
  }
  if (config.structured) {
    nlohmann::json record;
    record["result"] = "no_countermodel";
    record["max_universe"] = config.max_universe;
    std::cout << record.dump() << "\n";
  } else {
    std::cout << "not derivable, no countermodel up to m="
              << config.max_universe << "\n";
  }
  return 2;
}

int cmd_square(const std::string& name, const RunConfig& config) {
  const auto sys = config.make_system();
  const syllog::Quantifier q = sys.lookup(name);
  const syllog::Quantifier contrary = sys.contrary(q);
  const syllog::Quantifier mirror = sys.mirror(q);
  const syllog::Quantifier contradictory = sys.contradictory(q);

  if (config.structured) {
    nlohmann::json record;
    record["quantifier"] = syllog::surface_name(q.letter);
    record["contrary"] = syllog::surface_name(contrary.letter);
    record["mirror"] = syllog::surface_name(mirror.letter);
    record["contradictory"] = syllog::surface_name(contradictory.letter);
    auto chain = nlohmann::json::array();
    for (const syllog::Quantifier& link : sys.chain(q.polarity))
      chain.push_back(syllog::surface_name(link.letter));
    record["chain"] = std::move(chain);
    std::cout << record.dump() << "\n";
    return 0;
  }

  std::cout << "quantifier:    " << syllog::surface_name(q.letter) << "\n"
            << "contrary:      " << syllog::surface_name(contrary.letter)
            << "\n"
            << "mirror:        " << syllog::surface_name(mirror.letter) << "\n"
            << "contradictory: " << syllog::surface_name(contradictory.letter)
            << "\n";
  std::cout << "chain:         ";
  bool first = true;
  for (const syllog::Quantifier& link : sys.chain(q.polarity)) {
    if (!first) std::cout << " -> ";
    first = false;
    if (link.letter == q.letter)
      std::cout << "[" << syllog::surface_name(link.letter) << "]";
    else
      std::cout << syllog::surface_name(link.letter);
  }
  std::cout << "\n";
  return 0;
}

int cmd_moods(int figure, const RunConfig& config) {
  const auto sys = config.make_system();
  std::vector<syllog::MoodRow> rows;
  for (int f = figure != 0 ? figure : 1; f <= (figure != 0 ? figure : 4); ++f) {
    const auto figure_rows = syllog::enumerate_valid_moods(
        sys, f, config.make_semantics(), config.max_universe);
    rows.insert(rows.end(), figure_rows.begin(), figure_rows.end());
  }

  if (config.structured)
    std::cout << syllog::mood_table_csv(rows);
  else
    std::cout << syllog::format_mood_table(rows);

  bool sound = true;
  bool complete = true;
  for (const syllog::MoodRow& r : rows) {
    if (r.derivable && !r.valid) sound = false;
    if (r.valid && !r.derivable) complete = false;
  }
  if (!sound) return 1;
  if (sys.size() == 2 && !complete) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deduction engine for syllogisms with intermediate quantifiers"};
  app.require_subcommand(1);

  RunConfig config;
  std::string threshold_text;
  app.add_option("--system", config.system, "Quantity system (2 or 5)")
      ->check(CLI::IsMember({2, 5}))
      ->capture_default_str();
  app.add_option("--threshold-f", threshold_text,
                 "Fractional threshold as P/Q, with 1/2 < P/Q < 1")
      ->option_text("P/Q");
  app.add_option("--max-universe", config.max_universe,
                 "Largest universe size tried in model search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-steps", config.max_steps,
                 "Cap on the number of statements in a closure");
  app.add_flag("--structured", config.structured,
               "Emit line-structured records instead of plain text");

  std::string kb_path;
  std::string goal_text;
  std::string quantifier_name;
  int figure = 0;

  CLI::App* parse_cmd =
      app.add_subcommand("parse", "Parse a knowledge base and show categories");
  parse_cmd->add_option("file", kb_path, "Knowledge base file")->required();

  CLI::App* saturate_cmd =
      app.add_subcommand("saturate", "Compute and list the deductive closure");
  saturate_cmd->add_option("file", kb_path, "Knowledge base file")->required();

  CLI::App* prove_cmd = app.add_subcommand(
      "prove", "Derive a goal or search for a countermodel");
  prove_cmd->add_option("file", kb_path, "Knowledge base file")->required();
  prove_cmd->add_option("goal", goal_text, "Goal statement")->required();

  CLI::App* square_cmd = app.add_subcommand(
      "square", "Show a quantifier's place in the square of opposition");
  square_cmd->add_option("quantifier", quantifier_name, "Quantifier name")
      ->required();

  CLI::App* moods_cmd =
      app.add_subcommand("moods", "Tabulate valid and derivable moods");
  moods_cmd->add_option("--figure", figure, "Restrict to one figure (1-4)")
      ->check(CLI::Range(1, 4));

  for (CLI::App* sub : {parse_cmd, saturate_cmd, prove_cmd, square_cmd, moods_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the error message
    return code == 0 ? 0 : 1;
  }

  try {
    if (!threshold_text.empty()) {
      const auto slash = threshold_text.find('/');
      if (slash == std::string::npos)
        throw syllog::error("--threshold-f expects P/Q, got " + threshold_text);
      config.threshold =
          syllog::Rational(std::stoll(threshold_text.substr(0, slash)),
                           std::stoll(threshold_text.substr(slash + 1)));
      config.make_semantics();  // validate the range up front
    }

    if (parse_cmd->parsed()) return cmd_parse(kb_path, config);
    if (saturate_cmd->parsed()) return cmd_saturate(kb_path, config);
    if (prove_cmd->parsed()) return cmd_prove(kb_path, goal_text, config);
    if (square_cmd->parsed()) return cmd_square(quantifier_name, config);
    if (moods_cmd->parsed()) return cmd_moods(figure, config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return prove_cmd->parsed() ? 3 : 1;
  }
  return 0;
}
