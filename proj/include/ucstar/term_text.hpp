#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ucstar/term.hpp"

namespace ucstar {

/// Term syntax error; `position` is a 0-based character offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string const& what)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the textual term syntax
///
///   term     := "0" | [sign] monomial (sign monomial)*
///   monomial := coeff | coeff "*" word | word
///   coeff    := rational | "(" [rational] [sign] [rational] "i" ")" | "(" rational ")"
///   word     := letter ("." letter)*
///   letter   := [a-zA-Z][a-zA-Z0-9_]* ["'"]
///
/// where `'` marks the adjoint. If `known` is given, every generator name must
/// belong to it.
Term parse_term(std::string_view text, std::set<std::string> const* known = nullptr);

Word parse_word(std::string_view text);

std::string to_string(Word const& w);
/// Canonical text; `parse_term(to_string(t)) == t`.
std::string to_string(Term const& t);

bool is_identifier(std::string_view s);

}  // namespace ucstar
