#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "syllog/algebra.hpp"
#include "syllog/errors.hpp"
#include "syllog/syntax.hpp"

namespace syllog {

// Rule labels as they appear in proof output. Figure rules I..IV act on
// the four syllogistic figures; CONTRA_* encode the contradictory edges of
// the square; ExI.* walk the implication chains; META is the shortcut that
// negates everything at least as strong as a conclusion's contradictory.
enum class Rule {
  premise,
  i_a,
  i_e,
  ii_a,
  ii_e,
  iii_a,
  iii_e,
  iv_a,
  iv_ae,
  iv_e,
  contra_pos,
  contra_neg,
  exi_a,
  exi_e,
  meta,
};

inline std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::premise: return "PREMISE";
    case Rule::i_a: return "I.A";
    case Rule::i_e: return "I.E";
    case Rule::ii_a: return "II.A";
    case Rule::ii_e: return "II.E";
    case Rule::iii_a: return "III.A";
    case Rule::iii_e: return "III.E";
    case Rule::iv_a: return "IV.A";
    case Rule::iv_ae: return "IV.Æ";
    case Rule::iv_e: return "IV.E";
    case Rule::contra_pos: return "CONTRA_POS";
    case Rule::contra_neg: return "CONTRA_NEG";
    case Rule::exi_a: return "ExI.A";
    case Rule::exi_e: return "ExI.E";
    case Rule::meta: return "META";
  }
  return "?";
}

enum class TriggerKind { subset, disjoint };

// A subsumption fact extracted from a non-negated all/no statement:
// all(left)(right) reads left ⊑ right, no(left)(right) reads left ⊑ ¬right.
struct Trigger {
  TriggerKind kind{};
  Term left;
  Term right;
  std::size_t source = 0;  // index of the originating statement

  friend bool operator==(const Trigger&, const Trigger&) = default;
};

inline std::vector<Trigger> triggers_from(std::span<const Statement> statements) {
  std::vector<Trigger> out;
  for (std::size_t i = 0; i < statements.size(); ++i) {
    const Statement& s = statements[i];
    if (s.negated) continue;
    if (s.quantifier.letter == Letter::A)
      out.push_back(Trigger{TriggerKind::subset, s.subject, s.predicate, i});
    else if (s.quantifier.letter == Letter::E)
      out.push_back(Trigger{TriggerKind::disjoint, s.subject, s.predicate, i});
  }
  return out;
}

inline std::vector<Trigger> triggers_of(const KnowledgeBase& kb) {
  return triggers_from(kb.statements);
}

struct ProofStep {
  Rule rule = Rule::premise;
  std::vector<std::size_t> premises;  // indices of earlier statements

  friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

namespace detail {

inline bool is_affirmative(const Statement& s) {
  return s.quantifier.polarity == Polarity::affirmative;
}
inline bool is_negative(const Statement& s) {
  return s.quantifier.polarity == Polarity::negative;
}

// Runs one round of every rule over the given statements, emitting each
// derived (statement, rule, premises) candidate. Deterministic order:
// chain rules, contradictory rules, then the figure rules, statements in
// index order within each.
template <typename Emit>
void apply_rules_once(const QuantitySystem& sys,
                      std::span<const Statement> statements, Emit&& emit) {
  const auto triggers = triggers_from(statements);

  // ExI.A: q_i(X)(Y), q_i ⊑ q_j  ⊢  q_j(X)(Y)
  for (std::size_t i = 0; i < statements.size(); ++i) {
    const Statement& s = statements[i];
    if (s.negated) continue;
    for (const Quantifier& weaker : sys.chain(s.quantifier.polarity)) {
      if (weaker.rank <= s.quantifier.rank) continue;
      emit(Statement{false, weaker, s.subject, s.predicate}, Rule::exi_a,
           std::vector<std::size_t>{i});
    }
  }

  // ExI.E: ~q_i(X)(Y), q_j ⊑ q_i  ⊢  ~q_j(X)(Y)
  for (std::size_t i = 0; i < statements.size(); ++i) {
    const Statement& s = statements[i];
    if (!s.negated) continue;
    for (const Quantifier& stronger : sys.chain(s.quantifier.polarity)) {
      if (stronger.rank >= s.quantifier.rank) continue;
      emit(Statement{true, stronger, s.subject, s.predicate}, Rule::exi_e,
           std::vector<std::size_t>{i});
    }
  }

  // CONTRA_POS: q(X)(Y)  ⊢  ~contradictory(q)(X)(Y)
  for (std::size_t i = 0; i < statements.size(); ++i) {
    const Statement& s = statements[i];
    if (s.negated) continue;
    emit(Statement{true, sys.contradictory(s.quantifier), s.subject,
                   s.predicate},
         Rule::contra_pos, std::vector<std::size_t>{i});
  }

  // CONTRA_NEG: ~q(X)(Y)  ⊢  contradictory(q)(X)(Y)
  for (std::size_t i = 0; i < statements.size(); ++i) {
    const Statement& s = statements[i];
    if (!s.negated) continue;
    emit(Statement{false, sys.contradictory(s.quantifier), s.subject,
                   s.predicate},
         Rule::contra_neg, std::vector<std::size_t>{i});
  }

  // I.A: q(c)(b), b ⊑ a  ⊢  q(c)(a)   for affirmative q
  for (std::size_t i = 0; i < statements.size(); ++i) {
    const Statement& s = statements[i];
    if (s.negated || !is_affirmative(s)) continue;
    for (const Trigger& t : triggers) {
      if (t.kind != TriggerKind::subset || t.left != s.predicate) continue;
      emit(Statement{false, s.quantifier, s.subject, t.right}, Rule::i_a,
           std::vector<std::size_t>{i, t.source});
    }
  }

  // I.E: q(c)(b), b ⊑ ¬a  ⊢  q^(c)(a)   for affirmative q
  for (std::size_t i = 0; i < statements.size(); ++i) {
    const Statement& s = statements[i];
    if (s.negated || !is_affirmative(s)) continue;
    for (const Trigger& t : triggers) {
      if (t.kind != TriggerKind::disjoint || t.left != s.predicate) continue;
      emit(Statement{false, sys.contrary(s.quantifier), s.subject, t.right},
           Rule::i_e, std::vector<std::size_t>{i, t.source});
    }
  }

  // II.A: q1(c)(a), b ⊑ a  ⊢  q1(c)(b)   for negative q1
  for (std::size_t i = 0; i < statements.size(); ++i) {
    const Statement& s = statements[i];
    if (s.negated || !is_negative(s)) continue;
    for (const Trigger& t : triggers) {
      if (t.kind != TriggerKind::subset || t.right != s.predicate) continue;
      emit(Statement{false, s.quantifier, s.subject, t.left}, Rule::ii_a,
           std::vector<std::size_t>{i, t.source});
    }
  }

  // II.E: q2(c)(a), b ⊑ ¬a  ⊢  q2^(c)(b)   for affirmative q2
  for (std::size_t i = 0; i < statements.size(); ++i) {
    const Statement& s = statements[i];
    if (s.negated || !is_affirmative(s)) continue;
    for (const Trigger& t : triggers) {
      if (t.kind != TriggerKind::disjoint || t.right != s.predicate) continue;
      emit(Statement{false, sys.contrary(s.quantifier), s.subject, t.left},
           Rule::ii_e, std::vector<std::size_t>{i, t.source});
    }
  }

  // III.A: q1(c)(a), q2(c)(b), q2 ⊑ q1*  ⊢  I(b)(a)   both affirmative
  // III.E: q1(c)(a), q2(c)(b), q2 ⊑ (q1^)*  ⊢  O(b)(a)   q1 negative,
  //        q2 affirmative
  for (std::size_t i = 0; i < statements.size(); ++i) {
    const Statement& s1 = statements[i];
    if (s1.negated) continue;
    for (std::size_t k = 0; k < statements.size(); ++k) {
      const Statement& s2 = statements[k];
      if (s2.negated || !is_affirmative(s2)) continue;
      if (s1.subject != s2.subject) continue;
      if (is_affirmative(s1)) {
        if (!sys.implies(s2.quantifier, sys.mirror(s1.quantifier))) continue;
        emit(Statement{false, sys.by_letter(Letter::I), s2.predicate,
                       s1.predicate},
             Rule::iii_a, std::vector<std::size_t>{i, k});
      } else {
        if (!sys.implies(s2.quantifier,
                         sys.mirror(sys.contrary(s1.quantifier))))
          continue;
        emit(Statement{false, sys.by_letter(Letter::O), s2.predicate,
                       s1.predicate},
             Rule::iii_e, std::vector<std::size_t>{i, k});
      }
    }
  }

  // IV.A: q1(a)(b), b ⊑ c  ⊢  I(c)(a)   for affirmative q1
  for (std::size_t i = 0; i < statements.size(); ++i) {
    const Statement& s = statements[i];
    if (s.negated || !is_affirmative(s)) continue;
    for (const Trigger& t : triggers) {
      if (t.kind != TriggerKind::subset || t.left != s.predicate) continue;
      emit(Statement{false, sys.by_letter(Letter::I), t.right, s.subject},
           Rule::iv_a, std::vector<std::size_t>{i, t.source});
    }
  }

  // IV.Æ: a ⊑ b, b ⊑ ¬c  ⊢  E(c)(a)
  for (const Trigger& t1 : triggers) {
    if (t1.kind != TriggerKind::subset) continue;
    for (const Trigger& t2 : triggers) {
      if (t2.kind != TriggerKind::disjoint || t2.left != t1.right) continue;
      emit(Statement{false, sys.by_letter(Letter::E), t2.right, t1.left},
           Rule::iv_ae, std::vector<std::size_t>{t1.source, t2.source});
    }
  }

  // IV.E: a ⊑ ¬b, q2(b)(c)  ⊢  O(c)(a)   for affirmative q2
  for (const Trigger& t : triggers) {
    if (t.kind != TriggerKind::disjoint) continue;
    for (std::size_t i = 0; i < statements.size(); ++i) {
      const Statement& s = statements[i];
      if (s.negated || !is_affirmative(s)) continue;
      if (s.subject != t.right) continue;
      emit(Statement{false, sys.by_letter(Letter::O), s.predicate, t.left},
           Rule::iv_e, std::vector<std::size_t>{t.source, i});
    }
  }
}

}  // namespace detail

/// Every statement derivable by exactly one rule application to the
/// current knowledge base, with its justification; statements already in
/// the base (or already produced this round) are omitted.
inline std::vector<std::pair<Statement, ProofStep>> infer_once(
    const KnowledgeBase& kb) {
  std::vector<std::pair<Statement, ProofStep>> out;
  detail::apply_rules_once(
      kb.system, kb.statements,
      [&](Statement s, Rule rule, std::vector<std::size_t> premises) {
        if (kb.contains(s)) return;
        for (const auto& [seen, step] : out)
          if (seen == s) return;
        out.emplace_back(std::move(s),
                         ProofStep{rule, std::move(premises)});
      });
  return out;
}

struct ClosureEntry {
  Statement statement;
  ProofStep step;                     // first derivation found
  std::vector<ProofStep> alternates;  // later derivations, bounded
};

struct Closure {
  std::vector<ClosureEntry> entries;
  bool fixpoint_reached = false;
  bool inconsistent = false;
  // Indices of a witnessing pair (s, ~s) when inconsistent.
  std::optional<std::pair<std::size_t, std::size_t>> contradiction;

  std::optional<std::size_t> find(const Statement& s) const {
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (entries[i].statement == s) return i;
    return std::nullopt;
  }
  bool contains(const Statement& s) const { return find(s).has_value(); }

  std::vector<Statement> statements() const {
    std::vector<Statement> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.statement);
    return out;
  }
};

inline constexpr std::size_t kMaxAlternateProofs = 3;

/// Least fixpoint of infer_once containing the knowledge base. Always
/// terminates: the statement space is bounded by 2·|quantifiers|·|terms|².
/// Deriving both s and ~s flags the closure inconsistent without stopping.
inline Closure saturate(const KnowledgeBase& kb,
                        std::optional<std::size_t> max_statements = {}) {
  Closure closure;
  std::map<decltype(std::declval<Statement>().key()), std::size_t> index;

  auto note_contradiction = [&](std::size_t added) {
    if (closure.inconsistent) return;
    Statement twin = closure.entries[added].statement;
    twin.negated = !twin.negated;
    if (auto other = closure.find(twin)) {
      closure.inconsistent = true;
      const std::size_t pos = twin.negated ? added : *other;
      const std::size_t neg = twin.negated ? *other : added;
      closure.contradiction = std::make_pair(pos, neg);
    }
  };

  auto insert = [&](const Statement& s, ProofStep step) {
    auto [it, fresh] = index.try_emplace(s.key(), closure.entries.size());
    if (fresh) {
      closure.entries.push_back(ClosureEntry{s, std::move(step), {}});
      note_contradiction(it->second);
      return true;
    }
    auto& entry = closure.entries[it->second];
    if (entry.alternates.size() < kMaxAlternateProofs &&
        !(entry.step == step) &&
        std::find(entry.alternates.begin(), entry.alternates.end(), step) ==
            entry.alternates.end())
      entry.alternates.push_back(std::move(step));
    return false;
  };

  auto over_cap = [&] {
    return max_statements && closure.entries.size() > *max_statements;
  };

  for (const Statement& s : kb.statements) {
    if (!kb.system.contains(s.quantifier))
      throw not_in_system_error(
          std::string(surface_name(s.quantifier.letter)) +
          " does not belong to the knowledge base's quantity system");
    insert(s, ProofStep{Rule::premise, {}});
  }
  if (over_cap())
    throw step_limit_error("statement cap " +
                           std::to_string(*max_statements) +
                           " exceeded before saturation");

  std::vector<Statement> snapshot = closure.statements();
  for (;;) {
    std::size_t added = 0;
    detail::apply_rules_once(
        kb.system, snapshot,
        [&](Statement s, Rule rule, std::vector<std::size_t> premises) {
          if (insert(s, ProofStep{rule, std::move(premises)})) ++added;
        });
    if (added == 0) {
      closure.fixpoint_reached = true;
      break;
    }
    if (over_cap())
      throw step_limit_error("statement cap " +
                             std::to_string(*max_statements) +
                             " exceeded during saturation");
    snapshot = closure.statements();
  }
  return closure;
}

// A proof tree unwound from closure justifications; leaves are premises.
struct ProofNode {
  Statement statement;
  Rule rule = Rule::premise;
  std::vector<ProofNode> premises;
};

namespace detail {

inline ProofNode unwind_proof(const Closure& closure, std::size_t idx) {
  const ClosureEntry& entry = closure.entries[idx];
  ProofNode node{entry.statement, entry.step.rule, {}};
  for (std::size_t p : entry.step.premises)
    node.premises.push_back(unwind_proof(closure, p));
  return node;
}

}  // namespace detail

/// Membership-based proof search: saturates the base and, if the goal is
/// in the closure, unwinds its justifications into a finite tree.
inline std::optional<ProofNode> prove(const KnowledgeBase& kb,
                                      const Statement& goal,
                                      std::optional<std::size_t> max_statements = {}) {
  const Closure closure = saturate(kb, max_statements);
  if (auto idx = closure.find(goal))
    return detail::unwind_proof(closure, *idx);
  return std::nullopt;
}

/// For a non-negated statement of the closure, the propositions the
/// square forces to be false: ~q_x(X)(Y) for every q_x at least as strong
/// as the contradictory of the statement's quantifier. Coincides with one
/// CONTRA_POS step followed by ExI.E saturation.
inline std::vector<Statement> metaresult(const KnowledgeBase& kb,
                                         const Statement& derived) {
  if (derived.negated)
    throw not_in_closure_error("metaresult expects a non-negated statement");
  const Closure closure = saturate(kb);
  if (!closure.contains(derived))
    throw not_in_closure_error("statement " + render(derived) +
                               " is not derivable from the knowledge base");
  const Quantifier bound = kb.system.contradictory(derived.quantifier);
  std::vector<Statement> out;
  for (const Quantifier& q : kb.system.chain(bound.polarity)) {
    if (q.rank > bound.rank) continue;
    out.push_back(Statement{true, q, derived.subject, derived.predicate});
  }
  return out;
}

}  // namespace syllog
