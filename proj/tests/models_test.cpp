#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "syllog/errors.hpp"
#include "syllog/models.hpp"
#include "syllog/syntax.hpp"

using namespace syllog;

namespace {

const QuantitySystem kFive(5);
const QuantitySystem kTwo(2);

std::vector<Statement> premises(const std::vector<std::string>& lines,
                                const QuantitySystem& sys = kFive) {
  std::vector<Statement> out;
  for (const std::string& line : lines) out.push_back(parse(line, sys));
  return out;
}

Statement stmt(const std::string& text, const QuantitySystem& sys = kFive) {
  return parse(text, sys);
}

FiniteModel model(int m,
                  std::vector<std::pair<std::string, std::uint64_t>> ext) {
  return FiniteModel{m, std::move(ext)};
}

}  // namespace

TEST_CASE("rationals normalise on construction", "[models]") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -4) == Rational(-3, 4));
  CHECK(Rational(0, 7) == Rational(0, 1));
  CHECK(to_string(Rational(6, 8)) == "3/4");
  CHECK_THROWS_AS(Rational(1, 0), error);
}

TEST_CASE("the threshold must lie strictly between 1/2 and 1", "[models]") {
  CHECK(Semantics().threshold == Rational(3, 4));
  CHECK_NOTHROW(Semantics(Rational(2, 3)));
  CHECK_NOTHROW(Semantics(Rational(9, 10)));
  CHECK_THROWS_AS(Semantics(Rational(1, 2)), error);
  CHECK_THROWS_AS(Semantics(Rational(1, 1)), error);
  CHECK_THROWS_AS(Semantics(Rational(1, 3)), error);
  CHECK_THROWS_AS(Semantics(Rational(5, 4)), error);
}

TEST_CASE("eval applies the fractional band conditions", "[models]") {
  const Semantics sem;

  SECTION("identical full extensions make all true") {
    const auto m = model(3, {{"X", 0b111}, {"Y", 0b111}});
    CHECK(eval(m, stmt("all(X)(Y)"), sem));
    CHECK(eval(m, stmt("some(X)(Y)"), sem));
    CHECK_FALSE(eval(m, stmt("no(X)(Y)"), sem));
  }

  SECTION("a two-thirds majority satisfies most but not almost_all") {
    const auto m = model(3, {{"X", 0b111}, {"Y", 0b011}});
    CHECK(eval(m, stmt("most(X)(Y)"), sem));
    CHECK_FALSE(eval(m, stmt("almost_all(X)(Y)"), sem));
    CHECK(eval(m, stmt("many(X)(Y)"), sem));
    CHECK(eval(m, stmt("many_not(X)(Y)"), sem));
    CHECK_FALSE(eval(m, stmt("most_not(X)(Y)"), sem));
  }

  SECTION("disjoint extensions and the negation complement") {
    const auto m = model(4, {{"X", 0b0011}, {"Y", 0b1100}});
    CHECK_FALSE(eval(m, stmt("some(X)(Y)"), sem));
    CHECK(eval(m, stmt("~some(X)(Y)"), sem));
    CHECK(eval(m, stmt("no(X)(Y)"), sem));
    CHECK(eval(m, stmt("few(X)(Y)"), sem));
  }

  SECTION("boundary ratios with the default threshold") {
    // r = 3/4 exactly: almost_all is strict, many_not is non-strict.
    const auto m = model(4, {{"X", 0b1111}, {"Y", 0b0111}});
    CHECK_FALSE(eval(m, stmt("almost_all(X)(Y)"), sem));
    CHECK(eval(m, stmt("many_not(X)(Y)"), sem));
    // r = 1/4 exactly: many is non-strict, few is strict.
    const auto m2 = model(4, {{"X", 0b1111}, {"Y", 0b0001}});
    CHECK(eval(m2, stmt("many(X)(Y)"), sem));
    CHECK_FALSE(eval(m2, stmt("few(X)(Y)"), sem));
    // r = 1/2 exactly: most strict, most_not non-strict.
    const auto m3 = model(4, {{"X", 0b1111}, {"Y", 0b0011}});
    CHECK_FALSE(eval(m3, stmt("most(X)(Y)"), sem));
    CHECK(eval(m3, stmt("most_not(X)(Y)"), sem));
  }

  SECTION("a different threshold moves the bands") {
    const Semantics two_thirds{Rational(2, 3)};
    const auto m = model(4, {{"X", 0b1111}, {"Y", 0b0111}});  // r = 3/4
    CHECK(eval(m, stmt("almost_all(X)(Y)"), two_thirds));
    CHECK_FALSE(eval(m, stmt("many_not(X)(Y)"), two_thirds));
  }

  SECTION("unknown terms and empty extensions are errors") {
    const auto m = model(2, {{"X", 0b01}, {"Y", 0b00}});
    CHECK_THROWS_AS(eval(m, stmt("all(X)(Z)"), sem), unknown_term_error);
    CHECK_THROWS_AS(eval(m, stmt("all(X)(Y)"), sem), error);
  }
}

TEST_CASE("find_countermodel searches smallest-first", "[models]") {
  SECTION("Barbara has no countermodel") {
    CHECK_FALSE(find_countermodel(premises({"all(M)(P)", "all(S)(M)"}),
                                  stmt("all(S)(P)")));
  }

  SECTION("some does not convert to all") {
    const auto m =
        find_countermodel(premises({"some(X)(Y)"}), stmt("all(X)(Y)"));
    REQUIRE(m);
    CHECK(m->universe_size == 2);
    CHECK(m->find_extension("X") == 0b11);
    CHECK(m->find_extension("Y") == 0b01);
    CHECK(m->to_string() == "m=2: X={0,1}, Y={0}");
  }

  SECTION("all does not convert") {
    const auto m =
        find_countermodel(premises({"all(X)(Y)"}), stmt("all(Y)(X)"));
    REQUIRE(m);
    CHECK(m->to_string() == "m=2: X={0}, Y={0,1}");
  }

  SECTION("self-overlap is unfalsifiable under existential import") {
    CHECK_FALSE(find_countermodel({}, stmt("some(X)(X)")));
  }

  SECTION("bounds are validated") {
    CHECK_THROWS_AS(
        find_countermodel(premises({"all(X)(Y)"}), stmt("all(Y)(X)"),
                          Semantics(), 0),
        error);
    CHECK_THROWS_AS(
        find_countermodel(premises({"all(A)(B)", "all(C)(D)", "all(E)(F)"}),
                          stmt("some(A)(G)")),
        too_many_terms_error);
  }
}

TEST_CASE("entails agrees with exhaustive countermodel search", "[models]") {
  CHECK(entails(premises({"all(M)(P)", "all(S)(M)"}), stmt("all(S)(P)")));
  CHECK_FALSE(entails(premises({"all(X)(Y)"}), stmt("all(Y)(X)")));
  CHECK(entails(premises({"most(G)(A)", "most(G)(B)"}), stmt("some(B)(A)")));
  CHECK(entails(premises({"most(X)(Y)"}), stmt("some(Y)(X)")));

  SECTION("antitone in the premise set") {
    const auto base = premises({"most(G)(A)"});
    const Statement goal = stmt("some(G)(A)");
    CHECK(entails(base, goal));
    auto extended = base;
    extended.push_back(stmt("few(G)(B)"));
    CHECK(entails(extended, goal));
  }
}

TEST_CASE("square relations hold in every small model", "[models]") {
  const Semantics sem;
  for (int m = 1; m <= 3; ++m) {
    const std::uint64_t top = (std::uint64_t{1} << m) - 1;
    for (std::uint64_t x = 1; x <= top; ++x) {
      for (std::uint64_t y = 1; y <= top; ++y) {
        const FiniteModel mod{m, {{"X", x}, {"Y", y}}};
        auto truth = [&](const Quantifier& q) {
          return eval(mod, Statement{false, q, Term{"X"}, Term{"Y"}}, sem);
        };
        for (const Quantifier& q : kFive.affirmatives()) {
          CHECK(truth(q) != truth(kFive.contradictory(q)));
          if (q.rank + 1 < 5)
            CHECK((!truth(q) || truth(kFive.affirmatives()[q.rank + 1])));
          if (q.rank <= 2)
            CHECK_FALSE((truth(q) && truth(kFive.contrary(q))));
          if (q.rank >= 3) CHECK((truth(q) || truth(kFive.contrary(q))));
        }
        for (const Quantifier& q : kFive.negatives()) {
          CHECK(truth(q) != truth(kFive.contradictory(q)));
          if (q.rank + 1 < 5)
            CHECK((!truth(q) || truth(kFive.negatives()[q.rank + 1])));
        }
      }
    }
  }
}

TEST_CASE("mood premises follow the four figure layouts", "[models]") {
  const Quantifier a = kFive.by_letter(Letter::A);
  const Quantifier t = kFive.by_letter(Letter::T);

  const auto [f1p1, f1p2] = mood_premises(1, a, t);
  CHECK(render(f1p1) == "all(M)(P)");
  CHECK(render(f1p2) == "most(S)(M)");
  const auto [f2p1, f2p2] = mood_premises(2, a, t);
  CHECK(render(f2p1) == "all(P)(M)");
  CHECK(render(f2p2) == "most(S)(M)");
  const auto [f3p1, f3p2] = mood_premises(3, a, t);
  CHECK(render(f3p1) == "all(M)(P)");
  CHECK(render(f3p2) == "most(M)(S)");
  const auto [f4p1, f4p2] = mood_premises(4, a, t);
  CHECK(render(f4p1) == "all(P)(M)");
  CHECK(render(f4p2) == "most(M)(S)");

  CHECK_THROWS_AS(mood_premises(0, a, t), error);
  CHECK_THROWS_AS(mood_premises(5, a, t), error);
}

TEST_CASE("the classical figure-1 moods are valid and derivable",
          "[models]") {
  const auto rows = enumerate_valid_moods(kTwo, 1);
  auto has = [&](Letter p1, Letter p2, Letter c) {
    for (const MoodRow& r : rows)
      if (r.premise1 == p1 && r.premise2 == p2 && r.conclusion == c)
        return r.valid && r.derivable;
    return false;
  };
  CHECK(has(Letter::A, Letter::A, Letter::A));  // Barbara
  CHECK(has(Letter::E, Letter::A, Letter::E));  // Celarent
  CHECK(has(Letter::A, Letter::I, Letter::I));  // Darii
  CHECK(has(Letter::E, Letter::I, Letter::O));  // Ferio
  CHECK_THROWS_AS(enumerate_valid_moods(kTwo, 0), error);
}

TEST_CASE("figure 1 with a no/almost_all premise pair tops out at few",
          "[models]") {
  const auto rows = enumerate_valid_moods(kFive, 1);
  bool found_few = false;
  for (const MoodRow& r : rows) {
    if (r.premise1 != Letter::E || r.premise2 != Letter::P) continue;
    if (r.conclusion == Letter::B) {
      found_few = true;
      CHECK(r.derivable);
      CHECK(r.valid);
    }
    // Nothing stronger than few is derivable from this pair.
    if (r.conclusion == Letter::E) CHECK_FALSE(r.derivable);
  }
  CHECK(found_few);
}

TEST_CASE("mood tables render aligned text and CSV", "[models]") {
  const auto rows = enumerate_valid_moods(kTwo, 1);
  const std::string table = format_mood_table(rows);
  CHECK(table.find("figure  p1  p2  concl  valid  derivable\n") == 0);
  CHECK(table.find("mismatch") == std::string::npos);

  const std::string csv = mood_table_csv(rows);
  CHECK(csv.find("figure,q_p1,q_p2,q_c,valid,derivable\n") == 0);
  CHECK(csv.find("1,all,all,all,true,true\n") != std::string::npos);
  CHECK(csv.find("1,no,all,no,true,true\n") != std::string::npos);

  const MoodRow mismatch{1, Letter::A, Letter::A, Letter::E, true, false};
  const std::vector<MoodRow> one{mismatch};
  CHECK(format_mood_table(one).find("<-- mismatch") != std::string::npos);
}
