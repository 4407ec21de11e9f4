#include <cctype>

#include "genus1/polynomial.hpp"

namespace genus1 {

Variables make_variables(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_variables(const Variables& a, const Variables& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

std::size_t variable_index(const Variables& vars, std::string_view name) {
  if (vars) {
    for (std::size_t i = 0; i < vars->size(); ++i)
      if ((*vars)[i] == name) return i;
  }
  throw DomainError("unknown variable '" + std::string(name) + "'");
}

std::string monomial_to_string(const Exponents& e, const Variables& vars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += (*vars)[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const Variables& vars) : text_(text), vars_(vars) {}

  RationalPolynomial parse() {
    RationalPolynomial result(vars_);
    skip_space();
    if (at_end()) throw error("empty polynomial");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      auto [coeff, exps] = term();
      result.add_term(exps, negative ? -coeff : coeff);
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') throw error("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return result;
  }

 private:
  std::pair<Rational, Exponents> term() {
    Rational coeff(1);
    Exponents exps(vars_->size(), 0);
    for (;;) {
      skip_space();
      if (at_end()) throw error("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= number();
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        const std::string name = identifier();
        std::size_t idx = 0;
        try {
          idx = variable_index(vars_, name);
        } catch (const DomainError&) {
          throw error("unknown variable '" + name + "'");
        }
        std::uint32_t power = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          power = static_cast<std::uint32_t>(digits_value());
        }
        exps[idx] += power;
      } else {
        throw error(std::string("unexpected character '") + peek() + "'");
      }
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return {coeff, exps};
  }

  Rational number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    try {
      return Rational::parse(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      throw error(e.detail());
    }
  }

  unsigned long digits_value() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_ || pos_ - start > 6) throw error("expected a small exponent");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  ParseError error(const std::string& why) const {
    return ParseError(ParseErrorKind::MalformedPolynomial,
                      "'" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  const Variables& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalPolynomial parse_polynomial(std::string_view text, const Variables& vars) {
  if (!vars) throw DomainError("parse_polynomial needs a variable list");
  return PolynomialParser(text, vars).parse();
}

}  // namespace genus1
