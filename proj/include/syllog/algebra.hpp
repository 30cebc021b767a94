#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "syllog/errors.hpp"

namespace syllog {

// The ten quantifier letters. A..I is the affirmative chain, E..O the
// negative chain, each listed from logically strongest to weakest.
enum class Letter : std::uint8_t { A, P, T, K, I, E, B, D, G, O };

enum class Polarity : std::uint8_t { affirmative, negative };

// A quantifier symbol relative to a quantity system: its letter, which
// chain it sits on, and its rank in that chain (0 = strongest).
struct Quantifier {
  Letter letter{};
  Polarity polarity{};
  int rank = 0;

  friend bool operator==(const Quantifier&, const Quantifier&) = default;
};

namespace detail {

struct LetterInfo {
  Letter letter;
  std::string_view name;
  Polarity polarity;
  int rank5;  // rank in the 5-quantity chain
  int rank2;  // rank in the 2-quantity chain, -1 if absent
};

inline constexpr std::array<LetterInfo, 10> kLetters{{
    {Letter::A, "all", Polarity::affirmative, 0, 0},
    {Letter::P, "almost_all", Polarity::affirmative, 1, -1},
    {Letter::T, "most", Polarity::affirmative, 2, -1},
    {Letter::K, "many", Polarity::affirmative, 3, -1},
    {Letter::I, "some", Polarity::affirmative, 4, 1},
    {Letter::E, "no", Polarity::negative, 0, 0},
    {Letter::B, "few", Polarity::negative, 1, -1},
    {Letter::D, "most_not", Polarity::negative, 2, -1},
    {Letter::G, "many_not", Polarity::negative, 3, -1},
    {Letter::O, "some_not", Polarity::negative, 4, 1},
}};

inline const LetterInfo& info(Letter l) {
  return kLetters[static_cast<std::size_t>(l)];
}

}  // namespace detail

/// Canonical surface token of a letter ("all", "almost_all", ...).
inline std::string_view surface_name(Letter l) { return detail::info(l).name; }

/// One-character code of a letter ('A', 'P', ...).
inline char letter_code(Letter l) {
  constexpr std::string_view codes = "APTKIEBDGO";
  return codes[static_cast<std::size_t>(l)];
}

// A quantity system: the two implication-ordered chains of quantifiers.
// Only the 5-quantity system (A,P,T,K,I / E,B,D,G,O) and its 2-quantity
// restriction (A,I / E,O) are constructible.
class QuantitySystem {
 public:
  explicit QuantitySystem(int quantities = 5) : n_(quantities) {
    if (quantities != 2 && quantities != 5)
      throw error("quantity system size must be 2 or 5, got " +
                  std::to_string(quantities));
    for (const auto& li : detail::kLetters) {
      const int rank = quantities == 5 ? li.rank5 : li.rank2;
      if (rank < 0) continue;
      auto& chain =
          li.polarity == Polarity::affirmative ? affirmative_ : negative_;
      chain.push_back(Quantifier{li.letter, li.polarity, rank});
    }
  }

  int size() const noexcept { return n_; }

  std::span<const Quantifier> affirmatives() const noexcept {
    return affirmative_;
  }
  std::span<const Quantifier> negatives() const noexcept { return negative_; }
  std::span<const Quantifier> chain(Polarity p) const noexcept {
    return p == Polarity::affirmative ? affirmatives() : negatives();
  }

  bool contains(const Quantifier& q) const noexcept {
    for (const auto& c : chain(q.polarity))
      if (c == q) return true;
    return false;
  }

  /// The system's symbol for a letter; not-in-system if the letter only
  /// exists in the larger system.
  Quantifier by_letter(Letter l) const {
    const auto& li = detail::info(l);
    const int rank = n_ == 5 ? li.rank5 : li.rank2;
    if (rank < 0)
      throw not_in_system_error(std::string(li.name) + " is not in the " +
                                std::to_string(n_) + "-quantity system");
    return Quantifier{l, li.polarity, rank};
  }

  /// Resolves a surface name ("most") or letter code ("T") to a symbol.
  Quantifier lookup(std::string_view name) const {
    for (const auto& li : detail::kLetters) {
      const bool by_code = name.size() == 1 && name[0] == letter_code(li.letter);
      if (li.name == name || by_code) return by_letter(li.letter);
    }
    throw unknown_quantifier_error("unknown quantifier: " + std::string(name));
  }

  /// Contrariness operator q^: same rank on the opposite chain.
  Quantifier contrary(const Quantifier& q) const {
    require(q);
    const Polarity other = q.polarity == Polarity::affirmative
                               ? Polarity::negative
                               : Polarity::affirmative;
    return chain(other)[static_cast<std::size_t>(q.rank)];
  }

  /// Mirroring operator q*: the element at the reflected rank of the same
  /// chain (the specular element with respect to the chain's centre).
  Quantifier mirror(const Quantifier& q) const {
    require(q);
    return chain(q.polarity)[static_cast<std::size_t>(n_ - 1 - q.rank)];
  }

  /// Contradictory negation: mirror of the contrary (equivalently the
  /// contrary of the mirror).
  Quantifier contradictory(const Quantifier& q) const {
    return mirror(contrary(q));
  }

  /// Chain order as logical implication: q1 implies q2 iff they share a
  /// chain and q1 is at least as strong. Cross-polarity pairs are
  /// unrelated and yield false.
  bool implies(const Quantifier& q1, const Quantifier& q2) const {
    require(q1);
    require(q2);
    return q1.polarity == q2.polarity && q1.rank <= q2.rank;
  }

  friend bool operator==(const QuantitySystem& a, const QuantitySystem& b) {
    return a.n_ == b.n_;
  }

 private:
  void require(const Quantifier& q) const {
    if (!contains(q))
      throw not_in_system_error(std::string(surface_name(q.letter)) +
                                " does not belong to the " +
                                std::to_string(n_) + "-quantity system");
  }

  int n_;
  std::vector<Quantifier> affirmative_;
  std::vector<Quantifier> negative_;
};

}  // namespace syllog
