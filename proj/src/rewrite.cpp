#include "ucstar/rewrite.hpp"

#include <functional>
#include <ostream>

#include "ucstar/term_text.hpp"

namespace ucstar {

GeneratorKind Signature::kind(std::string const& name) const {
  auto it = kinds.find(name);
  return it == kinds.end() ? GeneratorKind::partial_isometry : it->second;
}

long Signature::weight(std::string const& name) const {
  auto it = weights.find(name);
  return it == weights.end() ? 0 : it->second;
}

bool Signature::graded(std::string const& name) const {
  auto k = kind(name);
  return k == GeneratorKind::partial_isometry || k == GeneratorKind::isometry;
}

void Signature::merge(Signature const& other) {
  for (auto const& [k, v] : other.kinds) {
    auto [it, inserted] = kinds.emplace(k, v);
    if (!inserted && it->second != v) throw std::invalid_argument("conflicting kinds for generator '" + k + "'");
  }
  for (auto const& [k, v] : other.weights) weights[k] = v;
}

long degree(Word const& w, Signature const& sig) {
  long d = 0;
  for (auto const& l : w)
    if (sig.graded(l.gen)) d += l.star ? -1 : 1;
  return d;
}

Measure measure(Word const& w, Signature const& sig) {
  Measure m;
  m.length = w.size();
  for (auto const& l : w) {
    m.weight += sig.weight(l.gen);
    if (!sig.graded(l.gen)) continue;
    if (l.star) {
      ++m.starred;
    } else {
      ++m.unstarred;
      m.inversions += m.starred;
    }
  }
  return m;
}

namespace {

// Replacement word `w` is below `p` in every context: graded-letter counts do
// not grow, so context inversions cannot increase, and the tuple decreases.
bool strictly_below(Word const& w, Word const& p, Signature const& sig) {
  Measure a = measure(w, sig);
  Measure b = measure(p, sig);
  if (a.starred > b.starred || a.unstarred > b.unstarred) return false;
  if (a.inversions != b.inversions) return a.inversions < b.inversions;
  if (a.length != b.length) return a.length < b.length;
  if (a.weight != b.weight) return a.weight < b.weight;
  return w < p;
}

}  // namespace

RuleSet::RuleSet(std::string name, Signature sig, std::vector<Rule> rules)
    : name_(std::move(name)), sig_(std::move(sig)), rules_(std::move(rules)) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    auto const& r = rules_[i];
    if (r.pattern.empty()) throw std::invalid_argument("rule '" + r.name + "' has an empty pattern");
    long d = degree(r.pattern, sig_);
    for (auto const& [w, c] : r.replacement) {
      if (!strictly_below(w, r.pattern, sig_))
        throw std::invalid_argument("rule '" + r.name + "' does not decrease the termination measure: " +
                                    to_string(r.pattern) + " -> " + to_string(w));
      if (degree(w, sig_) != d) homogeneous_ = false;
    }
    by_first_[r.pattern[0]].push_back(i);
  }
}

std::vector<std::size_t> const& RuleSet::rules_starting_with(Letter const& l) const {
  static std::vector<std::size_t> const none;
  auto it = by_first_.find(l);
  return it == by_first_.end() ? none : it->second;
}

RuleSet combine(std::string name, std::vector<RuleSet> const& parts) {
  Signature sig;
  std::vector<Rule> rules;
  for (auto const& p : parts) {
    sig.merge(p.signature());
    rules.insert(rules.end(), p.rules().begin(), p.rules().end());
  }
  return RuleSet(std::move(name), std::move(sig), std::move(rules));
}

namespace {

class Normalizer {
 public:
  Normalizer(RuleSet const& rs, std::size_t budget, std::ostream* trace) : rs_(rs), budget_(budget), trace_(trace) {}

  Term const& word_nf(Word const& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    Term result;
    bool reduced = false;
    for (std::size_t pos = 0; pos < w.size() && !reduced; ++pos) {
      for (auto idx : rs_.rules_starting_with(w[pos])) {
        Rule const& r = rs_.rules()[idx];
        if (!w.matches_at(r.pattern, pos)) continue;
        if (++steps_ > budget_) throw BudgetExceeded(to_string(w), budget_);
        if (trace_) *trace_ << to_string(w) << "  --[" << r.name << "]-->  ";
        Word prefix = w.subword(0, pos);
        Word suffix = w.subword(pos + r.pattern.size(), w.size() - pos - r.pattern.size());
        Term next;
        for (auto const& [rw, rc] : r.replacement) next.add_word(prefix.concat(rw).concat(suffix), rc);
        if (trace_) *trace_ << to_string(next) << '\n';
        for (auto const& [nw, nc] : next) {
          Term const& sub = word_nf(nw);
          for (auto const& [sw, sc] : sub) result.add_word(sw, sc * nc);
        }
        reduced = true;
        break;
      }
    }
    if (!reduced) result = Term(w);
    return memo_.emplace(w, std::move(result)).first->second;
  }

 private:
  RuleSet const& rs_;
  std::size_t budget_;
  std::ostream* trace_;
  std::size_t steps_ = 0;
  std::map<Word, Term> memo_;
};

}  // namespace

Term normalize(Term const& t, RuleSet const& rs, std::size_t budget, std::ostream* trace) {
  Normalizer nf(rs, budget, trace);
  Term out;
  for (auto const& [w, c] : t) {
    Term const& sub = nf.word_nf(w);
    for (auto const& [sw, sc] : sub) out.add_word(sw, sc * c);
  }
  return out;
}

bool check_identity(Term const& lhs, Term const& rhs, RuleSet const& rs, std::size_t budget) {
  return normalize(lhs - rhs, rs, budget).is_zero();
}

bool is_fixed(Term const& t, Signature const& sig) {
  for (auto const& [w, c] : t)
    if (degree(w, sig) != 0) return false;
  return true;
}

Term expectation(Term const& t, Signature const& sig) {
  Term out;
  for (auto const& [w, c] : t)
    if (degree(w, sig) == 0) out.add_word(w, c);
  return out;
}

namespace {

Signature kinds_of(std::vector<std::string> const& names, GeneratorKind k) {
  Signature sig;
  for (auto const& n : names) sig.kinds[n] = k;
  return sig;
}

}  // namespace

RuleSet projection_rules(std::vector<std::string> const& names) {
  std::vector<Rule> rules;
  for (auto const& p : names) {
    rules.push_back({p + ":selfadjoint", Word{star(p)}, Term(gen(p))});
    rules.push_back({p + ":idempotent", Word{gen(p), gen(p)}, Term(gen(p))});
  }
  return RuleSet("projection", kinds_of(names, GeneratorKind::projection), std::move(rules));
}

RuleSet commuting_projection_rules(std::vector<std::string> const& names) {
  RuleSet base = projection_rules(names);
  std::vector<Rule> rules = base.rules();
  for (auto const& a : names)
    for (auto const& b : names)
      if (a < b) rules.push_back({b + ":commute:" + a, Word{gen(b), gen(a)}, Term(Word{gen(a), gen(b)})});
  return RuleSet("commuting-projection", base.signature(), std::move(rules));
}

RuleSet partial_isometry_rules(std::vector<std::string> const& names) {
  std::vector<Rule> rules;
  for (auto const& s : names) {
    rules.push_back({s + ":partial-isometry", Word{gen(s), star(s), gen(s)}, Term(gen(s))});
    rules.push_back({s + ":partial-isometry*", Word{star(s), gen(s), star(s)}, Term(star(s))});
  }
  return RuleSet("partial-isometry", kinds_of(names, GeneratorKind::partial_isometry), std::move(rules));
}

RuleSet unit_rules(std::string const& unit) {
  Signature sig;
  sig.kinds[unit] = GeneratorKind::unit;
  return RuleSet("unit", sig,
                 {{unit + ":unit", Word{gen(unit)}, Term::one()}, {unit + ":unit*", Word{star(unit)}, Term::one()}});
}

RuleSet cuntz_rules(std::vector<std::string> const& names, std::string const& unit) {
  std::vector<Rule> rules;
  for (auto const& a : names)
    for (auto const& b : names) {
      Word pat{star(a), gen(b)};
      rules.push_back({a + "'" + b, pat, a == b ? Term::one() : Term()});
    }
  RuleSet iso("isometry", kinds_of(names, GeneratorKind::isometry), std::move(rules));
  return combine("cuntz", {iso, unit_rules(unit)});
}

RuleSet el_rules_rowfinite(ZeroOneMatrix const& A) {
  if (A.infinite() && !A.row_finite_all()) {
    for (std::size_t i = 1; i <= A.size(); ++i)
      if (!A.row_known_finite(i))
        throw std::invalid_argument("matrix is not row-finite: row " + std::to_string(i) +
                                    " may have infinite support");
  }
  std::size_t n = A.size();
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(family_member("T", i));
  RuleSet pi = partial_isometry_rules(names);

  std::vector<Rule> el2;
  std::vector<Rule> orth;
  std::vector<Rule> ck2;
  for (std::size_t i = 1; i <= n; ++i) {
    auto const& ti = names[i - 1];
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      auto const& tj = names[j - 1];
      el2.push_back({"EL2:" + std::to_string(i) + ":" + std::to_string(j), Word{gen(ti), star(ti), gen(tj), star(tj)},
                     Term()});
      orth.push_back({"orth:" + std::to_string(i) + ":" + std::to_string(j), Word{star(ti), gen(tj)}, Term()});
    }
    Term rhs;
    for (std::size_t j = 1; j <= n; ++j)
      if (A(i, j)) rhs += Term(Word{gen(names[j - 1]), star(names[j - 1])});
    ck2.push_back({"CK2:" + std::to_string(i), Word{star(ti), gen(ti)}, rhs});
  }
  Signature sig = kinds_of(names, GeneratorKind::partial_isometry);
  std::vector<Rule> all = pi.rules();
  all.insert(all.end(), el2.begin(), el2.end());
  all.insert(all.end(), orth.begin(), orth.end());
  all.insert(all.end(), ck2.begin(), ck2.end());
  return combine("exel-laca", {RuleSet("exel-laca", sig, std::move(all)), unit_rules(std::string(kUnitName))});
}

}  // namespace ucstar
