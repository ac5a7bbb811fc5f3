#pragma once

#include <random>
#include <string>
#include <vector>

#include "ucstar/term.hpp"

namespace ucstar::testing {

inline Term random_term(std::mt19937& rng, std::vector<std::string> const& gens, std::size_t max_words = 8,
                        std::size_t max_len = 6, bool allow_empty = false) {
  std::uniform_int_distribution<std::size_t> nwords(0, max_words);
  std::uniform_int_distribution<std::size_t> len(allow_empty ? 0 : 1, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  Term t;
  std::size_t n = nwords(rng);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Letter> w;
    std::size_t l = len(rng);
    for (std::size_t i = 0; i < l; ++i) w.push_back({gens[pick(rng)], coin(rng) == 1});
    Coefficient c(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    t.add_word(Word(w), c);
  }
  return t;
}

}  // namespace ucstar::testing
