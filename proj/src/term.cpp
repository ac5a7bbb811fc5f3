#include "ucstar/term.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ucstar {

namespace {

std::string rational_str(Rational const& q) { return q.get_str(); }

}  // namespace

std::string Coefficient::str() const {
  if (is_real()) return rational_str(re);
  Rational a = abs(im);
  std::string imag = a == 1 ? std::string("i") : rational_str(a) + "i";
  if (sgn(re) == 0) return std::string("(") + (sgn(im) < 0 ? "-" : "") + imag + ")";
  return "(" + rational_str(re) + (sgn(im) < 0 ? "-" : "+") + imag + ")";
}

std::ostream& operator<<(std::ostream& os, Coefficient const& c) { return os << c.str(); }

Word Word::adjoint() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->adjoint());
  return Word(std::move(out));
}

Word Word::concat(Word const& other) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() + other.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

bool Word::matches_at(Word const& pattern, std::size_t pos) const {
  if (pos + pattern.size() > letters_.size()) return false;
  return std::equal(pattern.begin(), pattern.end(),
                    letters_.begin() + static_cast<std::ptrdiff_t>(pos));
}

std::strong_ordering operator<=>(Word const& a, Word const& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

Term::Term(Word w, Coefficient c) {
  if (!c.is_zero()) terms_.emplace(std::move(w), std::move(c));
}

Coefficient Term::coefficient(Word const& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Coefficient() : it->second;
}

void Term::add_word(Word const& w, Coefficient const& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Term& Term::operator+=(Term const& o) {
  for (auto const& [w, c] : o.terms_) add_word(w, c);
  return *this;
}

Term& Term::operator-=(Term const& o) {
  for (auto const& [w, c] : o.terms_) add_word(w, -c);
  return *this;
}

Term Term::scaled(Coefficient const& c) const {
  Term out;
  if (c.is_zero()) return out;
  for (auto const& [w, k] : terms_) out.terms_.emplace_hint(out.terms_.end(), w, k * c);
  return out;
}

Term Term::mul(Term const& o) const {
  Term out;
  for (auto const& [w1, c1] : terms_)
    for (auto const& [w2, c2] : o.terms_) out.add_word(w1.concat(w2), c1 * c2);
  return out;
}

Term Term::adjoint() const {
  Term out;
  for (auto const& [w, c] : terms_) out.terms_.emplace(w.adjoint(), c.conj());
  return out;
}

std::size_t Term::max_word_length() const {
  std::size_t n = 0;
  for (auto const& [w, c] : terms_) n = std::max(n, w.size());
  return n;
}

Term add(Term const& a, Term const& b) { return a + b; }
Term mul(Term const& a, Term const& b) { return a.mul(b); }
Term adjoint(Term const& a) { return a.adjoint(); }

Term product(std::vector<Term> const& factors) {
  Term out = Term::one();
  for (auto const& f : factors) out = out.mul(f);
  return out;
}

}  // namespace ucstar

namespace ucstar {

Coefficient Coefficient::inverse() const {
  Rational n = re * re + im * im;
  if (sgn(n) == 0) throw std::domain_error("division by zero coefficient");
  return {re / n, -im / n};
}

}  // namespace ucstar
