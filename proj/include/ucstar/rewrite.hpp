#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ucstar/presentation.hpp"
#include "ucstar/term.hpp"
#include "ucstar/zero_one_matrix.hpp"

namespace ucstar {

/// Generator kinds plus per-generator weights used by the termination measure.
struct Signature {
  std::map<std::string, GeneratorKind> kinds;
  std::map<std::string, long> weights;

  /// Letters of unknown generators are treated as partial isometries.
  GeneratorKind kind(std::string const& name) const;
  long weight(std::string const& name) const;
  /// True for letters that carry gauge degree (partial isometries, isometries).
  bool graded(std::string const& name) const;

  void merge(Signature const& other);
};

/// Gauge degree: unstarred graded letters minus starred ones.
long degree(Word const& w, Signature const& sig);

/// Termination measure (inversions, length, weight, shortlex word), where an
/// inversion is a starred graded letter before an unstarred graded letter.
struct Measure {
  long inversions = 0;
  std::size_t length = 0;
  long weight = 0;
  long starred = 0;
  long unstarred = 0;
};
Measure measure(Word const& w, Signature const& sig);

struct Rule {
  std::string name;
  Word pattern;
  Term replacement;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string term, std::size_t steps)
      : std::runtime_error("rewrite step budget of " + std::to_string(steps) + " exceeded at " + term),
        term_(std::move(term)) {}
  std::string const& term() const { return term_; }

 private:
  std::string term_;
};

/// Ordered rules. Construction rejects any rule whose replacement words are
/// not strictly below the pattern in every context under `measure`.
class RuleSet {
 public:
  RuleSet() = default;
  RuleSet(std::string name, Signature sig, std::vector<Rule> rules);

  std::string const& name() const { return name_; }
  Signature const& signature() const { return sig_; }
  std::vector<Rule> const& rules() const { return rules_; }
  bool degree_homogeneous() const { return homogeneous_; }

  /// Concatenation; earlier rule sets keep priority.
  friend RuleSet combine(std::string name, std::vector<RuleSet> const& parts);

  /// Indices of rules whose pattern starts with `l`, in priority order.
  std::vector<std::size_t> const& rules_starting_with(Letter const& l) const;

 private:
  std::string name_;
  Signature sig_;
  std::vector<Rule> rules_;
  std::map<Letter, std::vector<std::size_t>> by_first_;
  bool homogeneous_ = true;
};

RuleSet combine(std::string name, std::vector<RuleSet> const& parts);

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

/// Fixed point of leftmost rule application (ties at a position broken by rule
/// priority). `trace`, when given, receives one line per rule application.
Term normalize(Term const& t, RuleSet const& rs, std::size_t budget = kDefaultStepBudget,
               std::ostream* trace = nullptr);

/// True iff normalize(lhs - rhs) is zero. A false verdict means "not
/// derivable by these rules", not "different in the algebra".
bool check_identity(Term const& lhs, Term const& rhs, RuleSet const& rs, std::size_t budget = kDefaultStepBudget);

bool is_fixed(Term const& t, Signature const& sig);
/// Degree-zero part of t (conditional expectation onto the gauge-fixed part).
Term expectation(Term const& t, Signature const& sig);

// Built-in rule sets. Unless stated otherwise the generators are named in the
// argument lists.

/// p' -> p, p.p -> p.
RuleSet projection_rules(std::vector<std::string> const& names);
/// Projection rules plus q_j.q_i -> q_i.q_j whenever q_i < q_j by name.
RuleSet commuting_projection_rules(std::vector<std::string> const& names);
/// s.s'.s -> s, s'.s.s' -> s'.
RuleSet partial_isometry_rules(std::vector<std::string> const& names);
/// one -> 1, one' -> 1.
RuleSet unit_rules(std::string const& unit);
/// Isometries with mutually orthogonal ranges: S_i'.S_j -> delta_ij, plus unit rules.
RuleSet cuntz_rules(std::vector<std::string> const& names, std::string const& unit);

/// Exel-Laca rules for a row-finite A on T1..Tn: partial isometry rules,
/// EL2 (T_i.T_i'.T_j.T_j' -> 0), orthogonal ranges (T_i'.T_j -> 0) and CK2
/// (T_i'.T_i -> sum_j A_ij T_j.T_j'), plus unit rules for `one`.
RuleSet el_rules_rowfinite(ZeroOneMatrix const& A);

}  // namespace ucstar
