#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace syllog {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Name is not one of the ten quantifier tokens of the lexicon.
class unknown_quantifier_error : public error {
 public:
  using error::error;
};

// Symbol exists in the lexicon but not in the active quantity system
// (e.g. "most" in the 2-quantity system).
class not_in_system_error : public error {
 public:
  using error::error;
};

class unknown_term_error : public error {
 public:
  using error::error;
};

class too_many_terms_error : public error {
 public:
  using error::error;
};

class step_limit_error : public error {
 public:
  using error::error;
};

class not_in_closure_error : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  enum class kind {
    bad_term,
    unknown_quantifier,
    not_in_system,
    malformed_delimiters,
    trailing_garbage,
  };

  parse_error(kind k, std::size_t position, const std::string& message)
      : error(message), kind_(k), position_(position) {}

  kind error_kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  kind kind_;
  std::size_t position_;
};

}  // namespace syllog
