#pragma once

#include <bit>
#include <cstdint>
#include <iomanip>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "syllog/algebra.hpp"
#include "syllog/engine.hpp"
#include "syllog/errors.hpp"
#include "syllog/syntax.hpp"

namespace syllog {

// Exact fraction, kept normalized with a positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw error("rational denominator must be nonzero");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Rational&, const Rational&) = default;
};

inline std::string to_string(const Rational& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

// Evaluation parameters. The threshold f splits the unit interval into the
// bands that give "almost all" / "many" (and their negative counterparts)
// their meaning; it must sit strictly between 1/2 and 1 so that the five
// affirmative bands are nested and each contradictory pair is exact.
struct Semantics {
  Rational threshold;

  explicit Semantics(Rational f = Rational(3, 4)) : threshold(f) {
    if (2 * threshold.num <= threshold.den || threshold.num >= threshold.den)
      throw error("threshold " + to_string(threshold) +
                  " must lie strictly between 1/2 and 1");
  }
};

/// Truth of a bare quantifier over subject size s > 0 and overlap
/// c = |subject ∩ predicate|, by cross-multiplied band comparisons
/// (ratio = c/s, f = p/q):
///   all: ratio = 1        no:       ratio = 0
///   almost_all: ratio > f few:      ratio < 1-f
///   most: ratio > 1/2     most_not: ratio <= 1/2
///   many: ratio >= 1-f    many_not: ratio <= f
///   some: ratio > 0       some_not: ratio < 1
inline bool letter_truth(Letter letter, long long c, long long s,
                         const Rational& f) {
  const long long p = f.num;
  const long long q = f.den;
  switch (letter) {
    case Letter::A: return c == s;
    case Letter::P: return c * q > p * s;
    case Letter::T: return 2 * c > s;
    case Letter::K: return c * q >= (q - p) * s;
    case Letter::I: return c > 0;
    case Letter::E: return c == 0;
    case Letter::B: return c * q < (q - p) * s;
    case Letter::D: return 2 * c <= s;
    case Letter::G: return c * q <= p * s;
    case Letter::O: return c < s;
  }
  throw error("unhandled quantity letter");
}

// A finite interpretation: universe {0, ..., universe_size-1} with one
// bitmask extension per term, in first-mention order.
struct FiniteModel {
  int universe_size = 0;
  std::vector<std::pair<std::string, std::uint64_t>> extensions;

  std::optional<std::uint64_t> find_extension(const std::string& term) const {
    for (const auto& [name, bits] : extensions)
      if (name == term) return bits;
    return std::nullopt;
  }

  std::string to_string() const {
    std::string out = "m=" + std::to_string(universe_size) + ":";
    bool first_term = true;
    for (const auto& [name, bits] : extensions) {
      out += first_term ? " " : ", ";
      first_term = false;
      out += name + "={";
      bool first_elem = true;
      for (int e = 0; e < universe_size; ++e) {
        if (!(bits >> e & 1)) continue;
        if (!first_elem) out += ',';
        first_elem = false;
        out += std::to_string(e);
      }
      out += '}';
    }
    return out;
  }
};

/// Truth of a statement in a model. Every term must denote a nonempty
/// subset of the universe (existential import); a negated statement is
/// true exactly when its body is false.
inline bool eval(const FiniteModel& model, const Statement& s,
                 const Semantics& sem = Semantics()) {
  const std::uint64_t universe =
      model.universe_size >= 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << model.universe_size) - 1;
  auto extension = [&](const Term& t) {
    const auto bits = model.find_extension(t.text);
    if (!bits)
      throw unknown_term_error("term " + t.text +
                               " has no extension in the model");
    const std::uint64_t masked = *bits & universe;
    if (masked == 0)
      throw error("term " + t.text +
                  " denotes the empty set; terms must be nonempty");
    return masked;
  };
  const std::uint64_t subject = extension(s.subject);
  const std::uint64_t predicate = extension(s.predicate);
  const bool truth =
      letter_truth(s.quantifier.letter, std::popcount(subject & predicate),
                   std::popcount(subject), sem.threshold);
  return s.negated ? !truth : truth;
}

inline constexpr std::size_t kMaxModelTerms = 4;

namespace detail {

inline std::vector<std::string> collect_terms(
    std::span<const Statement> premises, const Statement& conclusion) {
  std::vector<std::string> terms;
  auto note = [&](const Term& t) {
    for (const std::string& seen : terms)
      if (seen == t.text) return;
    terms.push_back(t.text);
  };
  for (const Statement& s : premises) {
    note(s.subject);
    note(s.predicate);
  }
  note(conclusion.subject);
  note(conclusion.predicate);
  return terms;
}

}  // namespace detail

/// Smallest model (by universe size, then by the lexicographic order of
/// the term extensions) satisfying every premise while falsifying the
/// conclusion, or nullopt if none exists up to max_universe elements.
inline std::optional<FiniteModel> find_countermodel(
    std::span<const Statement> premises, const Statement& conclusion,
    const Semantics& sem = Semantics(), int max_universe = 5) {
  if (max_universe < 1 || max_universe > 63)
    throw error("max_universe must be between 1 and 63");
  const std::vector<std::string> terms =
      detail::collect_terms(premises, conclusion);
  if (terms.size() > kMaxModelTerms)
    throw too_many_terms_error(
        "model search handles at most " + std::to_string(kMaxModelTerms) +
        " distinct terms, got " + std::to_string(terms.size()));

  for (int m = 1; m <= max_universe; ++m) {
    const std::uint64_t top = (std::uint64_t{1} << m) - 1;
    FiniteModel model{m, {}};
    for (const std::string& t : terms) model.extensions.emplace_back(t, 1);
    for (;;) {
      const bool premises_hold = [&] {
        for (const Statement& s : premises)
          if (!eval(model, s, sem)) return false;
        return true;
      }();
      if (premises_hold && !eval(model, conclusion, sem)) return model;

      // Advance the odometer, last term fastest.
      std::size_t i = terms.size();
      while (i > 0 && model.extensions[i - 1].second == top)
        model.extensions[--i].second = 1;
      if (i == 0) break;
      ++model.extensions[i - 1].second;
    }
  }
  return std::nullopt;
}

/// Bounded semantic entailment: true when no countermodel with at most
/// max_universe elements exists.
inline bool entails(std::span<const Statement> premises,
                    const Statement& conclusion,
                    const Semantics& sem = Semantics(), int max_universe = 5) {
  return !find_countermodel(premises, conclusion, sem, max_universe)
              .has_value();
}

// One syllogistic mood: premise quantifiers, conclusion quantifier and
// figure, with the semantic and proof-theoretic verdicts side by side.
struct MoodRow {
  int figure = 1;
  Letter premise1{};
  Letter premise2{};
  Letter conclusion{};
  bool valid = false;
  bool derivable = false;

  friend bool operator==(const MoodRow&, const MoodRow&) = default;
};

/// The two premises of a mood in the given figure, over the conventional
/// terms S (minor), M (middle), P (major). The first premise is the major
/// one; the conclusion is always about (S)(P).
inline std::pair<Statement, Statement> mood_premises(int figure,
                                                     const Quantifier& q1,
                                                     const Quantifier& q2) {
  const Term s{"S"}, m{"M"}, p{"P"};
  switch (figure) {
    case 1: return {Statement{false, q1, m, p}, Statement{false, q2, s, m}};
    case 2: return {Statement{false, q1, p, m}, Statement{false, q2, s, m}};
    case 3: return {Statement{false, q1, m, p}, Statement{false, q2, m, s}};
    case 4: return {Statement{false, q1, p, m}, Statement{false, q2, m, s}};
    default: throw error("figure must be between 1 and 4");
  }
}

/// Sweeps every mood of one figure and keeps the rows where the
/// conclusion is semantically valid, derivable by the rules, or both.
inline std::vector<MoodRow> enumerate_valid_moods(
    const QuantitySystem& sys, int figure, const Semantics& sem = Semantics(),
    int max_universe = 5) {
  if (figure < 1 || figure > 4) throw error("figure must be between 1 and 4");
  std::vector<Quantifier> order;
  for (const Quantifier& q : sys.affirmatives()) order.push_back(q);
  for (const Quantifier& q : sys.negatives()) order.push_back(q);

  std::vector<MoodRow> rows;
  for (const Quantifier& q1 : order) {
    for (const Quantifier& q2 : order) {
      const auto [p1, p2] = mood_premises(figure, q1, q2);
      KnowledgeBase kb(sys);
      kb.add(p1);
      kb.add(p2);
      const Closure closure = saturate(kb);
      for (const Quantifier& qc : order) {
        const Statement conclusion{false, qc, Term{"S"}, Term{"P"}};
        MoodRow row{figure, q1.letter, q2.letter, qc.letter,
                    entails(kb.statements, conclusion, sem, max_universe),
                    closure.contains(conclusion)};
        if (row.valid || row.derivable) rows.push_back(row);
      }
    }
  }
  return rows;
}

/// Plain-text mood table, one row per mood, letters in classic order
/// (premise1, premise2, conclusion). Rows where the semantic and
/// proof-theoretic verdicts disagree are flagged.
inline std::string format_mood_table(std::span<const MoodRow> rows) {
  std::ostringstream out;
  out << "figure  p1  p2  concl  valid  derivable\n";
  for (const MoodRow& r : rows) {
    out << std::left << std::setw(8) << r.figure << std::setw(4)
        << letter_code(r.premise1) << std::setw(4) << letter_code(r.premise2)
        << std::setw(7) << letter_code(r.conclusion) << std::setw(7)
        << (r.valid ? "yes" : "no") << (r.derivable ? "yes" : "no");
    if (r.valid != r.derivable) out << "  <-- mismatch";
    out << '\n';
  }
  return std::move(out).str();
}

/// The same table as comma-separated values with a header row; quantifier
/// columns carry the surface names.
inline std::string mood_table_csv(std::span<const MoodRow> rows) {
  std::string out = "figure,q_p1,q_p2,q_c,valid,derivable\n";
  for (const MoodRow& r : rows) {
    out += std::to_string(r.figure);
    out += ',';
    out += surface_name(r.premise1);
    out += ',';
    out += surface_name(r.premise2);
    out += ',';
    out += surface_name(r.conclusion);
    out += ',';
    out += r.valid ? "true" : "false";
    out += ',';
    out += r.derivable ? "true" : "false";
    out += '\n';
  }
  return out;
}

}  // namespace syllog
