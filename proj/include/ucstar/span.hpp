#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ucstar/term.hpp"

namespace ucstar {

/// Exact row-echelon basis of a subspace of the free *-algebra, each row keyed
/// by its largest word.
class ExactSpan {
 public:
  /// Remainder of t after elimination; zero iff t lies in the span.
  Term reduce(Term t) const;
  /// Adds t if independent; returns whether the dimension grew.
  bool insert(Term const& t);
  bool contains(Term const& t) const { return reduce(t).is_zero(); }
  std::size_t dim() const { return rows_.size(); }

 private:
  std::map<Word, Term> rows_;
};

}  // namespace ucstar
