#include "ucstar/term_text.hpp"

#include <cctype>

namespace ucstar {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::set<std::string> const* known) : s_(text), known_(known) {}

  Term parse_term() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty term");
    Term out;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError(pos_, "expected '+' or '-'");
      }
      auto [w, c] = parse_monomial();
      out.add_word(w, sign < 0 ? -c : c);
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return out;
  }

  Word parse_word_only() {
    skip_ws();
    Word w = parse_word();
    skip_ws();
    if (!at_end()) throw ParseError(pos_, "trailing input");
    return w;
  }

 private:
  std::pair<Word, Coefficient> parse_monomial() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') {
      Coefficient k = parse_coefficient();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        return {parse_word(), k};
      }
      return {Word{}, k};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return {parse_word(), Coefficient(1)};
    throw ParseError(pos_, "expected coefficient or generator");
  }

  Rational parse_rational() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected number");
    std::string num(s_.substr(start, pos_ - start));
    if (peek() == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (dstart == pos_) throw ParseError(pos_, "expected denominator");
      std::string den(s_.substr(dstart, pos_ - dstart));
      if (den.find_first_not_of('0') == std::string::npos) throw ParseError(dstart, "zero denominator");
      Rational q(num + "/" + den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  // "(" a [+-] b "i" ")" with either part optional, or a plain rational.
  Coefficient parse_coefficient() {
    if (peek() != '(') return Coefficient(parse_rational());
    std::size_t open = pos_++;
    skip_ws();
    Rational re(0), im(0);
    bool have_re = false;
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      skip_ws();
    }
    if (peek() == 'i') {
      ++pos_;
      im = sign;
    } else {
      Rational a = parse_rational();
      skip_ws();
      if (peek() == 'i') {
        ++pos_;
        im = sign * a;
      } else {
        re = sign * a;
        have_re = true;
      }
    }
    skip_ws();
    if (have_re && (peek() == '+' || peek() == '-')) {
      int s2 = peek() == '-' ? -1 : 1;
      ++pos_;
      skip_ws();
      Rational b(1);
      if (peek() != 'i') b = parse_rational();
      skip_ws();
      if (peek() != 'i') throw ParseError(pos_, "expected 'i'");
      ++pos_;
      im = s2 * b;
      skip_ws();
    }
    if (peek() != ')') throw ParseError(pos_, "unbalanced '(' opened at " + std::to_string(open));
    ++pos_;
    return Coefficient(re, im);
  }

  Word parse_word() {
    std::vector<Letter> letters;
    while (true) {
      skip_ws();
      std::size_t start = pos_;
      if (!std::isalpha(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "expected generator name");
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (known_ && !known_->count(name)) throw ParseError(start, "unknown generator '" + name + "'");
      bool starred = false;
      if (peek() == '\'') {
        starred = true;
        ++pos_;
      }
      letters.push_back({std::move(name), starred});
      std::size_t save = pos_;
      skip_ws();
      if (peek() != '.') {
        pos_ = save;
        break;
      }
      ++pos_;
    }
    return Word(std::move(letters));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  std::string_view s_;
  std::set<std::string> const* known_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text, std::set<std::string> const* known) {
  return Parser(text, known).parse_term();
}

Word parse_word(std::string_view text) { return Parser(text, nullptr).parse_word_only(); }

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string to_string(Word const& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += w[i].gen;
    if (w[i].star) out += '\'';
  }
  return out;
}

std::string to_string(Term const& t) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto const& [w, c] : t) {
    Coefficient k = c;
    bool negative = k.is_real() && sgn(k.re) < 0;
    if (negative) k = -k;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += k.str();
    } else {
      if (!(k == Coefficient(1))) out += k.str() + "*";
      out += to_string(w);
    }
  }
  return out;
}

}  // namespace ucstar
