#pragma once

// Polynomial expressions: integer and p/q literals, + - * / ^, parentheses.
// Division is only by a nonzero constant; exponents are nonnegative integer
// literals; implicit multiplication is not accepted.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "liftscope/bipoly.hpp"
#include "liftscope/errors.hpp"
#include "liftscope/unipoly.hpp"

namespace liftscope {

class ParseError : public InputError {
 public:
  ParseError(std::size_t pos, const std::string& msg);
  /// Zero-based character offset into the source text.
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

struct ParsedPoly {
  UniPoly poly;
  /// Variable name; empty for a constant expression with no variable given.
  std::string var;
};

/// Parses a polynomial in one variable. When var is given only that name is
/// accepted; otherwise the variable is inferred from the text.
ParsedPoly parse_poly(std::string_view text, std::optional<std::string_view> var = std::nullopt);

/// Parses a polynomial in the two named variables.
BiPoly parse_bipoly(std::string_view text, std::string_view xvar = "x", std::string_view yvar = "y");

}  // namespace liftscope
