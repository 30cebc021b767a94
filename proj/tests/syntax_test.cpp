#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "syllog/errors.hpp"
#include "syllog/syntax.hpp"

using namespace syllog;

namespace {

const QuantitySystem kFive(5);
const QuantitySystem kTwo(2);

std::string random_term(std::mt19937& rng) {
  static constexpr char kFirst[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  static constexpr char kRest[] =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_";
  std::uniform_int_distribution<std::size_t> first(0, sizeof(kFirst) - 2);
  std::uniform_int_distribution<std::size_t> rest(0, sizeof(kRest) - 2);
  std::uniform_int_distribution<int> len(0, 8);
  std::string out(1, kFirst[first(rng)]);
  for (int i = len(rng); i > 0; --i) out += kRest[rest(rng)];
  return out;
}

Statement random_statement(std::mt19937& rng, const QuantitySystem& sys) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::size_t> pick(0, sys.size() - 1);
  const bool negative = coin(rng) == 1;
  const Quantifier q = negative ? sys.negatives()[pick(rng)]
                                : sys.affirmatives()[pick(rng)];
  return Statement{coin(rng) == 1, q, Term{random_term(rng)},
                   Term{random_term(rng)}};
}

}  // namespace

TEST_CASE("parse accepts the concrete syntax", "[syntax]") {
  SECTION("plain statement") {
    const Statement s = parse("most(Humans)(Write_name)", kFive);
    CHECK_FALSE(s.negated);
    CHECK(s.quantifier.letter == Letter::T);
    CHECK(s.subject.text == "Humans");
    CHECK(s.predicate.text == "Write_name");
  }

  SECTION("negated statement") {
    const Statement s = parse("~all(Men)(Astronauts)", kFive);
    CHECK(s.negated);
    CHECK(s.quantifier.letter == Letter::A);
  }

  SECTION("surrounding whitespace and space after the negation sign") {
    CHECK(parse("  some(X)(Y)\n", kFive) == parse("some(X)(Y)", kFive));
    CHECK(parse("~ \t all(X)(Y)", kFive) == parse("~all(X)(Y)", kFive));
  }

  SECTION("terms may contain digits and underscores") {
    const Statement s = parse("few(B2)(Very_long_name_9)", kFive);
    CHECK(s.subject.text == "B2");
    CHECK(s.predicate.text == "Very_long_name_9");
  }
}

TEST_CASE("parse reports positioned, classified errors", "[syntax]") {
  auto kind_of = [](const std::string& text, const QuantitySystem& sys) {
    try {
      parse(text, sys);
    } catch (const parse_error& e) {
      return e.error_kind();
    }
    FAIL("expected a parse error for: " << text);
    return parse_error::kind::trailing_garbage;
  };

  CHECK(kind_of("all(men)(X)", kFive) == parse_error::kind::bad_term);
  CHECK(kind_of("all(X)()", kFive) == parse_error::kind::bad_term);
  CHECK(kind_of("every(X)(Y)", kFive) == parse_error::kind::unknown_quantifier);
  CHECK(kind_of("(X)(Y)", kFive) == parse_error::kind::unknown_quantifier);
  CHECK(kind_of("most(X)(Y)", kTwo) == parse_error::kind::not_in_system);
  CHECK(kind_of("all X)(Y)", kFive) == parse_error::kind::malformed_delimiters);
  CHECK(kind_of("all(X(Y)", kFive) == parse_error::kind::malformed_delimiters);
  CHECK(kind_of("all(X)(Y", kFive) == parse_error::kind::malformed_delimiters);
  CHECK(kind_of("all(X)(Y) junk", kFive) ==
        parse_error::kind::trailing_garbage);
  CHECK(kind_of("all(X)(Y)(Z)", kFive) == parse_error::kind::trailing_garbage);

  SECTION("positions point at the offending character") {
    try {
      parse("all(men)(X)", kFive);
      FAIL("expected a parse error");
    } catch (const parse_error& e) {
      CHECK(e.position() == 4);
      CHECK(std::string(e.what()).find("men") != std::string::npos);
    }
  }
}

TEST_CASE("render produces the canonical concrete syntax", "[syntax]") {
  const Statement s = parse(" ~ all(Men)(Astronauts) ", kFive);
  CHECK(render(s) == "~all(Men)(Astronauts)");
  CHECK(render(parse("most(Humans)(Able_to_write)", kFive)) ==
        "most(Humans)(Able_to_write)");
}

TEST_CASE("parse and render are mutually inverse", "[syntax]") {
  std::mt19937 rng(0xC0FFEE);
  for (int i = 0; i < 200; ++i) {
    const Statement s = random_statement(rng, kFive);
    CHECK(parse(render(s), kFive) == s);
  }
  for (int i = 0; i < 50; ++i) {
    const Statement s = random_statement(rng, kTwo);
    CHECK(parse(render(s), kTwo) == s);
  }
}

TEST_CASE("typechecking derives Pp by two forward applications", "[syntax]") {
  const Statement s = parse("~all(Men)(Astronauts)", kFive);
  const CategoryDerivation d = typecheck(s);

  CHECK(d.category == category_pp());
  REQUIRE(d.children.size() == 2);
  CHECK(d.children[0].category ==
        Category::slash(category_pp(), category_pr()));
  CHECK(d.children[1].category == category_pr());
  CHECK(d.children[1].token == "(Astronauts)");
  REQUIRE(d.children[0].children.size() == 2);
  CHECK(d.children[0].children[0].category == category_quantifier());
  CHECK(d.children[0].children[0].token == "all");
  CHECK(d.children[0].children[1].token == "(Men)");

  CHECK(category_quantifier().to_string() == "(Pp/Pr)/Pr");
  CHECK(format_derivation(d) ==
        "Pp\n"
        "  Pp/Pr\n"
        "    all : (Pp/Pr)/Pr\n"
        "    (Men) : Pr\n"
        "  (Astronauts) : Pr\n");
}

TEST_CASE("forward application rejects ill-typed pairs", "[syntax]") {
  auto pp = leaf("p", category_pp());
  auto pr = leaf("(X)", category_pr());
  CHECK_THROWS_AS(forward_apply(pp, pr), error);
  auto q = leaf("all", category_quantifier());
  CHECK_THROWS_AS(forward_apply(std::move(q), std::move(pp)), error);
}

TEST_CASE("knowledge bases load line by line", "[syntax]") {
  const std::string text =
      "# premises from the writing example\n"
      "most(Humans)(Write_name)\n"
      "\n"
      "all(Write_name)(Able_to_write)\n"
      "all(men)(X)\n"
      "most(Humans)(Write_name)\n";
  const KbParseResult result = parse_kb(text, kFive);

  REQUIRE(result.kb.statements.size() == 2);
  CHECK(render(result.kb.statements[0]) == "most(Humans)(Write_name)");
  CHECK(render(result.kb.statements[1]) == "all(Write_name)(Able_to_write)");
  CHECK(result.lines == std::vector<int>{2, 4});

  REQUIRE(result.errors.size() == 1);
  CHECK(result.errors[0].line == 5);
  CHECK(result.errors[0].message.find("term") != std::string::npos);

  CHECK(result.kb.contains(parse("most(Humans)(Write_name)", kFive)));
  CHECK_FALSE(result.kb.contains(parse("some(Humans)(Write_name)", kFive)));
}

TEST_CASE("knowledge bases reject quantifiers outside their system",
          "[syntax]") {
  KnowledgeBase kb(kTwo);
  CHECK(kb.add(parse("all(X)(Y)", kTwo)));
  CHECK_FALSE(kb.add(parse("all(X)(Y)", kTwo)));  // duplicate
  CHECK_THROWS_AS(kb.add(parse("most(X)(Y)", kFive)), not_in_system_error);
}
