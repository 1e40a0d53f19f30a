#include "liftscope/parse.hpp"

#include <cctype>
#include <vector>

namespace liftscope {

ParseError::ParseError(std::size_t pos, const std::string& msg)
    : InputError("at column " + std::to_string(pos + 1) + ": " + msg), pos_(pos) {}

namespace {

// Recursive descent over a bivariate value; the variable-name policy is
// applied in the identifier rule.
class Parser {
 public:
  Parser(std::string_view text, std::vector<std::string> vars, bool infer)
      : s_(text), vars_(std::move(vars)), infer_(infer) {}

  BiPoly parse() {
    BiPoly v = expr();
    skip();
    if (i_ < s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

  const std::vector<std::string>& vars() const { return vars_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(i_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const { throw ParseError(pos, msg); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  BiPoly expr() {
    BiPoly v = term();
    while (true) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  BiPoly term() {
    BiPoly v = unary();
    while (true) {
      skip();
      std::size_t at = i_;
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        BiPoly d = unary();
        if (d.is_zero()) fail_at(at, "division by zero");
        if (d.deg_y() != 0 || d.deg_x() != 0) fail_at(at, "division by a non-constant");
        v = v * Rational(1 / d.leading_coeff());
      } else {
        skip();
        if (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '(')) {
          fail("implicit multiplication is not allowed; use '*'");
        }
        return v;
      }
    }
  }

  BiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  BiPoly power() {
    BiPoly base = primary();
    if (!accept('^')) return base;
    skip();
    std::size_t at = i_;
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      fail("exponent must be a nonnegative integer literal");
    }
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ - start > 4) fail_at(at, "exponent too large");
    unsigned e = unsigned(std::stoul(std::string(s_.substr(start, i_ - start))));
    skip();
    if (i_ < s_.size() && s_[i_] == '.') fail("exponent must be a nonnegative integer literal");
    BiPoly acc = BiPoly::monomial(1, 0, 0);
    for (unsigned k = 0; k < e; ++k) acc = acc * base;
    return acc;
  }

  BiPoly primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      BiPoly v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ < s_.size() && s_[i_] == '.') fail("decimal literals are not supported; write p/q");
      Integer z(std::string(s_.substr(start, i_ - start)));
      return BiPoly::monomial(Rational(z), 0, 0);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string name(s_.substr(start, i_ - start));
      for (std::size_t k = 0; k < vars_.size(); ++k) {
        if (vars_[k] == name) return k == 0 ? BiPoly::monomial(1, 1, 0) : BiPoly::monomial(1, 0, 1);
      }
      if (infer_ && vars_.empty()) {
        vars_.push_back(name);
        return BiPoly::monomial(1, 1, 0);
      }
      if (infer_) fail_at(start, "more than one variable ('" + vars_[0] + "' and '" + name + "')");
      fail_at(start, "unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::vector<std::string> vars_;
  bool infer_;
};

}  // namespace

ParsedPoly parse_poly(std::string_view text, std::optional<std::string_view> var) {
  std::vector<std::string> vars;
  if (var) vars.emplace_back(*var);
  Parser p(text, vars, !var.has_value());
  BiPoly v = p.parse();
  ParsedPoly out;
  out.poly = v.y_coeff(0);
  out.var = p.vars().empty() ? std::string() : p.vars()[0];
  return out;
}

BiPoly parse_bipoly(std::string_view text, std::string_view xvar, std::string_view yvar) {
  Parser p(text, {std::string(xvar), std::string(yvar)}, false);
  return p.parse();
}

}  // namespace liftscope
