#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ucstar/coefficient.hpp"

namespace ucstar {

/// A generator or its formal adjoint.
struct Letter {
  std::string gen;
  bool star = false;

  Letter adjoint() const { return {gen, !star}; }

  friend bool operator==(Letter const&, Letter const&) = default;
  friend std::strong_ordering operator<=>(Letter const& a, Letter const& b) {
    if (auto c = a.gen <=> b.gen; c != 0) return c;
    return a.star <=> b.star;
  }
};

inline Letter gen(std::string name) { return {std::move(name), false}; }
inline Letter star(std::string name) { return {std::move(name), true}; }

/// Monomial of the free *-algebra. The empty word is the unit.
class Word {
 public:
  Word() = default;
  Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter const& operator[](std::size_t i) const { return letters_[i]; }
  std::vector<Letter> const& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word adjoint() const;
  Word concat(Word const& other) const;
  Word subword(std::size_t pos, std::size_t len) const;
  /// True if `pattern` occurs starting at `pos`.
  bool matches_at(Word const& pattern, std::size_t pos) const;

  friend bool operator==(Word const&, Word const&) = default;
  /// Shortlex: length first, then letter sequence.
  friend std::strong_ordering operator<=>(Word const& a, Word const& b);

 private:
  std::vector<Letter> letters_;
};

/// Finite linear combination of words with nonzero exact coefficients.
class Term {
 public:
  using Map = std::map<Word, Coefficient>;

  Term() = default;
  Term(Word w, Coefficient c = Coefficient(1));
  Term(Letter l) : Term(Word{l}) {}

  static Term zero() { return {}; }
  static Term scalar(Coefficient c) { return Term(Word{}, std::move(c)); }
  static Term one() { return scalar(Coefficient(1)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Map const& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Coefficient of `w`, zero if absent.
  Coefficient coefficient(Word const& w) const;
  /// Adds c * w in place, dropping the entry if it cancels.
  void add_word(Word const& w, Coefficient const& c);

  Term& operator+=(Term const& o);
  Term& operator-=(Term const& o);

  friend Term operator+(Term a, Term const& b) { return a += b; }
  friend Term operator-(Term a, Term const& b) { return a -= b; }
  friend Term operator-(Term const& a) { return a.scaled(Coefficient(-1)); }
  friend Term operator*(Term const& a, Term const& b) { return a.mul(b); }
  friend Term operator*(Coefficient const& c, Term const& t) { return t.scaled(c); }

  Term scaled(Coefficient const& c) const;
  Term mul(Term const& o) const;
  Term adjoint() const;

  /// Largest word length in the support (0 for the zero term).
  std::size_t max_word_length() const;

  friend bool operator==(Term const&, Term const&) = default;

 private:
  Map terms_;
};

Term add(Term const& a, Term const& b);
Term mul(Term const& a, Term const& b);
Term adjoint(Term const& a);

/// Product of the given terms, left to right; the empty product is 1.
Term product(std::vector<Term> const& factors);

}  // namespace ucstar
