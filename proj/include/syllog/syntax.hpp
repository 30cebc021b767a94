#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "syllog/algebra.hpp"
#include "syllog/errors.hpp"

namespace syllog {

// Statement grammar, one per line in knowledge-base files:
//
//   statement  = [ '~' ] quantifier '(' term ')' '(' term ')'
//   quantifier = lowercase letter, then lowercase letters, digits, '_'
//   term       = uppercase letter, then letters, digits, '_'
//
// Whitespace is permitted around the statement and between '~' and the
// quantifier, nowhere else. Letters are restricted to the Roman alphabet.

struct Term {
  std::string text;

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

inline bool is_valid_term(std::string_view text) {
  if (text.empty() || text[0] < 'A' || text[0] > 'Z') return false;
  return std::all_of(text.begin(), text.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

// An optionally negated quantified proposition q(Subject)(Predicate).
// '~' is outer negation, read "it is not the case that".
struct Statement {
  bool negated = false;
  Quantifier quantifier{};
  Term subject;
  Term predicate;

  // Identity is the letter plus shape; rank/polarity are letter-derived
  // within the knowledge base's quantity system.
  auto key() const {
    return std::make_tuple(negated, quantifier.letter, subject.text,
                           predicate.text);
  }

  friend bool operator==(const Statement& a, const Statement& b) {
    return a.key() == b.key();
  }
  friend bool operator<(const Statement& a, const Statement& b) {
    return a.key() < b.key();
  }
};

/// Canonical surface form; parse(render(s)) == s.
inline std::string render(const Statement& s) {
  std::string out;
  if (s.negated) out += '~';
  out += surface_name(s.quantifier.letter);
  out += '(';
  out += s.subject.text;
  out += ")(";
  out += s.predicate.text;
  out += ')';
  return out;
}

namespace detail {

class Scanner {
 public:
  Scanner(std::string_view text, const QuantitySystem& sys)
      : text_(text), sys_(sys) {}

  Statement run() {
    Statement s;
    skip_ws();
    if (peek() == '~') {
      s.negated = true;
      ++pos_;
      skip_ws();  // '~' binds the whole proposition
    }
    s.quantifier = quantifier();
    s.subject = bracketed_term();
    s.predicate = bracketed_term();
    skip_ws();
    if (pos_ != text_.size())
      throw parse_error(parse_error::kind::trailing_garbage, pos_,
                        at() + "unexpected trailing input");
    return s;
  }

 private:
  static bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
  static bool is_word(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' ||
            text_[pos_] == '\n'))
      ++pos_;
  }
  std::string at() const {
    return "at position " + std::to_string(pos_) + ": ";
  }

  Quantifier quantifier() {
    const std::size_t start = pos_;
    if (!is_lower(peek()))
      throw parse_error(parse_error::kind::unknown_quantifier, pos_,
                        at() + "expected a quantifier");
    while (is_word(peek())) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    try {
      return sys_.lookup(name);
    } catch (const unknown_quantifier_error& e) {
      throw parse_error(parse_error::kind::unknown_quantifier, start,
                        "at position " + std::to_string(start) + ": " +
                            e.what());
    } catch (const not_in_system_error& e) {
      throw parse_error(parse_error::kind::not_in_system, start,
                        "at position " + std::to_string(start) + ": " +
                            e.what());
    }
  }

  Term bracketed_term() {
    if (peek() != '(')
      throw parse_error(parse_error::kind::malformed_delimiters, pos_,
                        at() + "expected '('");
    ++pos_;
    const std::size_t start = pos_;
    while (is_word(peek())) ++pos_;
    const std::string text(text_.substr(start, pos_ - start));
    if (!is_valid_term(text))
      throw parse_error(parse_error::kind::bad_term, start,
                        "at position " + std::to_string(start) + ": '" + text +
                            "' is not a term (terms start with a capital "
                            "letter)");
    if (peek() != ')')
      throw parse_error(parse_error::kind::malformed_delimiters, pos_,
                        at() + "expected ')'");
    ++pos_;
    return Term{text};
  }

  std::string_view text_;
  const QuantitySystem& sys_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses one statement in the concrete syntax above.
inline Statement parse(std::string_view text, const QuantitySystem& sys) {
  return detail::Scanner(text, sys).run();
}

// ---------------------------------------------------------------------------
// Categorial grammar: atoms Pp (proposition) and Pr (term), right-slash
// functors X/Y, combined by forward application only.

class Category {
 public:
  static Category atom(std::string name) {
    Category c;
    c.atom_ = std::move(name);
    return c;
  }
  static Category slash(Category result, Category argument) {
    Category c;
    c.result_ = std::make_shared<Category>(std::move(result));
    c.argument_ = std::make_shared<Category>(std::move(argument));
    return c;
  }

  bool is_atom() const { return !result_; }
  const std::string& atom_name() const { return atom_; }
  const Category& result() const { return *result_; }
  const Category& argument() const { return *argument_; }

  std::string to_string() const {
    if (is_atom()) return atom_;
    std::string lhs = result_->to_string();
    if (!result_->is_atom()) lhs = "(" + lhs + ")";
    std::string rhs = argument_->to_string();
    if (!argument_->is_atom()) rhs = "(" + rhs + ")";
    return lhs + "/" + rhs;
  }

  friend bool operator==(const Category& a, const Category& b) {
    if (a.is_atom() != b.is_atom()) return false;
    if (a.is_atom()) return a.atom_ == b.atom_;
    return *a.result_ == *b.result_ && *a.argument_ == *b.argument_;
  }

 private:
  std::string atom_;
  std::shared_ptr<const Category> result_;
  std::shared_ptr<const Category> argument_;
};

inline Category category_pp() { return Category::atom("Pp"); }
inline Category category_pr() { return Category::atom("Pr"); }

/// (Pp/Pr)/Pr, the type assigned to every quantifier.
inline Category category_quantifier() {
  return Category::slash(Category::slash(category_pp(), category_pr()),
                         category_pr());
}

// A derivation tree: leaves are typed tokens, internal nodes are forward
// applications (functor child first, argument child second).
struct DerivationNode {
  Category category;
  std::string token;                    // leaves only
  std::vector<DerivationNode> children;

  bool is_leaf() const { return children.empty(); }
};

using CategoryDerivation = DerivationNode;

inline DerivationNode leaf(std::string token, Category category) {
  return DerivationNode{std::move(category), std::move(token), {}};
}

/// Forward application X/Y, Y => X.
inline DerivationNode forward_apply(DerivationNode functor,
                                    DerivationNode argument) {
  if (functor.category.is_atom() ||
      !(functor.category.argument() == argument.category))
    throw error("forward application expects X/Y followed by Y, got " +
                functor.category.to_string() + " and " +
                argument.category.to_string());
  Category result = functor.category.result();
  DerivationNode node{std::move(result), {}, {}};
  node.children.push_back(std::move(functor));
  node.children.push_back(std::move(argument));
  return node;
}

/// Builds the two-step forward-application derivation of a statement;
/// the root category of a well-formed proposition is Pp.
inline CategoryDerivation typecheck(const Statement& s) {
  auto q = leaf(std::string(surface_name(s.quantifier.letter)),
                category_quantifier());
  auto subject = leaf("(" + s.subject.text + ")", category_pr());
  auto predicate = leaf("(" + s.predicate.text + ")", category_pr());
  auto partial = forward_apply(std::move(q), std::move(subject));
  return forward_apply(std::move(partial), std::move(predicate));
}

inline void format_derivation(const CategoryDerivation& node, std::string& out,
                              int depth) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  if (node.is_leaf()) {
    out += node.token;
    out += " : ";
  }
  out += node.category.to_string();
  out += '\n';
  for (const auto& child : node.children)
    format_derivation(child, out, depth + 1);
}

inline std::string format_derivation(const CategoryDerivation& root) {
  std::string out;
  format_derivation(root, out, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Knowledge bases

// A deduplicated set of statements over one quantity system.
struct KnowledgeBase {
  QuantitySystem system;
  std::vector<Statement> statements;  // insertion order

  explicit KnowledgeBase(QuantitySystem sys = QuantitySystem(5))
      : system(std::move(sys)) {}

  bool contains(const Statement& s) const {
    return std::find(statements.begin(), statements.end(), s) !=
           statements.end();
  }

  /// Adds a statement unless already present; the quantifier must belong
  /// to the system.
  bool add(const Statement& s) {
    if (!system.contains(s.quantifier))
      throw not_in_system_error(
          std::string(surface_name(s.quantifier.letter)) +
          " does not belong to the knowledge base's quantity system");
    if (contains(s)) return false;
    statements.push_back(s);
    return true;
  }
};

struct KbDiagnostic {
  int line = 0;  // 1-based
  std::string message;
};

struct KbParseResult {
  KnowledgeBase kb;
  std::vector<int> lines;  // source line of each kb statement
  std::vector<KbDiagnostic> errors;
};

/// Loads a knowledge-base file: one statement per non-blank line, '#'
/// starts a comment line, duplicates are dropped. Bad lines are reported
/// in `errors` and do not prevent the rest from loading.
inline KbParseResult parse_kb(std::string_view text,
                              const QuantitySystem& sys) {
  KbParseResult result{KnowledgeBase(sys), {}, {}};
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;

    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      if (pos > text.size()) break;
      continue;
    }
    try {
      const Statement s = parse(line, sys);
      if (result.kb.add(s)) result.lines.push_back(line_no);
    } catch (const parse_error& e) {
      result.errors.push_back(KbDiagnostic{line_no, e.what()});
    }
    if (pos > text.size()) break;
  }
  return result;
}

}  // namespace syllog
