#include "ucstar/span.hpp"

namespace ucstar {

Term ExactSpan::reduce(Term t) const {
  // Subtracting a row only touches words at or below its pivot, so one
  // descending sweep suffices.
  std::optional<Word> bound;
  while (!t.is_zero()) {
    auto const& terms = t.terms();
    auto it = bound ? terms.lower_bound(*bound) : terms.end();
    bool found = false;
    while (it != terms.begin()) {
      --it;
      auto row = rows_.find(it->first);
      if (row == rows_.end()) continue;
      Coefficient f = it->second / row->second.coefficient(it->first);
      bound = it->first;
      t -= f * row->second;
      found = true;
      break;
    }
    if (!found) break;
  }
  return t;
}

bool ExactSpan::insert(Term const& t) {
  Term r = reduce(t);
  if (r.is_zero()) return false;
  Word pivot = std::prev(r.terms().end())->first;
  rows_.emplace(std::move(pivot), std::move(r));
  return true;
}

}  // namespace ucstar
