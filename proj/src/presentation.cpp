#include "ucstar/presentation.hpp"

#include <algorithm>
#include <stdexcept>

#include "ucstar/term_text.hpp"

namespace ucstar {

std::string_view to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::projection: return "projection";
    case GeneratorKind::partial_isometry: return "partial_isometry";
    case GeneratorKind::isometry: return "isometry";
    case GeneratorKind::unit: return "unit";
  }
  return "?";
}

GeneratorKind parse_generator_kind(std::string_view s) {
  if (s == "projection") return GeneratorKind::projection;
  if (s == "partial_isometry" || s == "partial-isometry") return GeneratorKind::partial_isometry;
  if (s == "isometry") return GeneratorKind::isometry;
  if (s == "unit") return GeneratorKind::unit;
  throw std::invalid_argument("unknown generator kind '" + std::string(s) + "'");
}

std::string family_member(std::string_view prefix, std::size_t k) { return std::string(prefix) + std::to_string(k); }

NetIndex subset_index(std::vector<std::size_t> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

std::string to_string(NetIndex const& idx) {
  if (auto const* r = std::get_if<std::size_t>(&idx)) return std::to_string(*r);
  std::string out = "{";
  auto const& s = std::get<std::vector<std::size_t>>(idx);
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::vector<std::size_t> index_labels(NetIndex const& idx) {
  if (auto const* r = std::get_if<std::size_t>(&idx)) {
    std::vector<std::size_t> out(*r);
    for (std::size_t k = 0; k < *r; ++k) out[k] = k + 1;
    return out;
  }
  return std::get<std::vector<std::size_t>>(idx);
}

bool index_leq(IndexScheme const& scheme, NetIndex const& a, NetIndex const& b) {
  if (scheme.kind == SchemeKind::naturals) return std::get<std::size_t>(a) <= std::get<std::size_t>(b);
  auto const& x = std::get<std::vector<std::size_t>>(a);
  auto const& y = std::get<std::vector<std::size_t>>(b);
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

NetIndex index_join(NetIndex const& a, NetIndex const& b) {
  if (a.index() != b.index()) throw std::invalid_argument("indices from different schemes");
  if (auto const* r = std::get_if<std::size_t>(&a)) return std::max(*r, std::get<std::size_t>(b));
  auto x = std::get<std::vector<std::size_t>>(a);
  auto const& y = std::get<std::vector<std::size_t>>(b);
  x.insert(x.end(), y.begin(), y.end());
  return subset_index(std::move(x));
}

void check_in_scheme(IndexScheme const& scheme, NetIndex const& idx) {
  auto limit = scheme.label_count;
  if (scheme.kind == SchemeKind::naturals) {
    auto const* r = std::get_if<std::size_t>(&idx);
    if (!r) throw std::out_of_range("expected a natural-number index, got " + to_string(idx));
    if (*r < 1 || (limit && *r > *limit)) throw std::out_of_range("index " + to_string(idx) + " outside the scheme");
    return;
  }
  auto const* s = std::get_if<std::vector<std::size_t>>(&idx);
  if (!s) throw std::out_of_range("expected a finite-subset index, got " + to_string(idx));
  for (auto k : *s)
    if (k < 1 || (limit && k > *limit)) throw std::out_of_range("index " + to_string(idx) + " outside the scheme");
}

std::string_view to_string(CertificateTag t) {
  switch (t) {
    case CertificateTag::projection_defect: return "projection-defect";
    case CertificateTag::projection_difference: return "projection-difference";
    case CertificateTag::user: return "user";
  }
  return "?";
}

CertificateTag parse_certificate_tag(std::string_view s) {
  if (s == "projection-defect") return CertificateTag::projection_defect;
  if (s == "projection-difference") return CertificateTag::projection_difference;
  if (s == "user") return CertificateTag::user;
  throw std::invalid_argument("unknown certificate tag '" + std::string(s) + "'");
}

Term SotNet::summand(std::size_t k) const {
  std::string text;
  for (char c : summand_template) {
    if (c == '#') {
      text += std::to_string(k);
    } else {
      text += c;
    }
  }
  return parse_term(text);
}

Rational SotNet::weight(std::size_t k) const {
  if (weights.empty()) return 1;
  if (k < 1 || k > weights.size())
    throw std::out_of_range("net '" + id + "' has no weight for label " + std::to_string(k));
  return weights[k - 1];
}

Term SotNet::element(NetIndex const& idx) const {
  check_in_scheme(scheme, idx);
  Term out = base;
  for (auto k : index_labels(idx)) {
    Rational w = weight(k);
    if (sgn(w) != 0) out -= summand(k).scaled(Coefficient(w));
  }
  return out;
}

std::set<std::string> SotNet::generators_at(NetIndex const& idx) const {
  std::set<std::string> out;
  for (auto const& [w, c] : element(idx))
    for (auto const& l : w) out.insert(l.gen);
  return out;
}

std::vector<Term> sample_net(SotNet const& net, std::vector<NetIndex> const& schedule) {
  std::vector<Term> out;
  out.reserve(schedule.size());
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    check_in_scheme(net.scheme, schedule[i]);
    if (i > 0 && !index_leq(net.scheme, schedule[i - 1], schedule[i]))
      throw std::invalid_argument("schedule not ascending at " + to_string(schedule[i]));
    out.push_back(net.element(schedule[i]));
  }
  return out;
}

std::vector<NormRelation> kind_relations(Generator const& g, std::optional<std::string> const& unit) {
  Letter s = gen(g.name);
  Letter ss = star(g.name);
  switch (g.kind) {
    case GeneratorKind::projection:
      return {{g.name + ":selfadjoint", Term(s) - Term(ss), 0, RelationOrigin::kind_implied},
              {g.name + ":idempotent", Term(Word{s, s}) - Term(s), 0, RelationOrigin::kind_implied}};
    case GeneratorKind::partial_isometry:
      return {{g.name + ":partial-isometry", Term(Word{s, ss, s}) - Term(s), 0, RelationOrigin::kind_implied}};
    case GeneratorKind::isometry:
      if (!unit) throw std::invalid_argument("isometry '" + g.name + "' requires a unit generator");
      return {{g.name + ":isometry", Term(Word{ss, s}) - Term(gen(*unit)), 0, RelationOrigin::kind_implied}};
    case GeneratorKind::unit: return {};
  }
  return {};
}

std::vector<NormRelation> unit_relations(std::string const& unit, std::vector<std::string> const& others) {
  std::vector<NormRelation> out;
  for (auto const& g : others) {
    out.push_back({unit + ":left:" + g, Term(Word{gen(unit), gen(g)}) - Term(gen(g)), 0, RelationOrigin::unit});
    out.push_back({unit + ":right:" + g, Term(Word{gen(g), gen(unit)}) - Term(gen(g)), 0, RelationOrigin::unit});
  }
  return out;
}

GeneratingTriple GeneratingTriple::make(std::string name, std::vector<Generator> generators,
                                        std::vector<NormRelation> norm_relations, std::vector<SotNet> sot_relations,
                                        std::vector<GeneratorFamily> families) {
  GeneratingTriple t;
  t.name_ = std::move(name);
  std::set<std::string> seen;
  std::optional<std::string> unit;
  for (auto const& g : generators) {
    if (!is_identifier(g.name)) throw std::invalid_argument("invalid generator name '" + g.name + "'");
    if (!seen.insert(g.name).second) throw std::invalid_argument("duplicate generator '" + g.name + "'");
    if (g.kind == GeneratorKind::unit) {
      if (unit) throw std::invalid_argument("more than one unit generator");
      unit = g.name;
    }
  }
  for (auto const& f : families) {
    if (!is_identifier(f.prefix)) throw std::invalid_argument("invalid family prefix '" + f.prefix + "'");
    if (f.kind == GeneratorKind::unit) throw std::invalid_argument("a generator family cannot be a unit");
  }
  t.generators_ = std::move(generators);
  t.families_ = std::move(families);
  for (auto const& g : t.generators_)
    for (auto& r : kind_relations(g, unit)) t.norm_relations_.push_back(std::move(r));
  if (unit) {
    std::vector<std::string> others;
    for (auto const& g : t.generators_)
      if (g.kind != GeneratorKind::unit) others.push_back(g.name);
    for (auto& r : unit_relations(*unit, others)) t.norm_relations_.push_back(std::move(r));
  }
  std::set<std::string> ids;
  for (auto const& r : t.norm_relations_) ids.insert(r.id);
  for (auto const& r : norm_relations) {
    if (sgn(r.bound) < 0) throw std::invalid_argument("relation '" + r.id + "' has a negative bound");
    if (!ids.insert(r.id).second) throw std::invalid_argument("duplicate relation id '" + r.id + "'");
    t.validate_term(r.term, "relation '" + r.id + "'");
    t.norm_relations_.push_back(r);
  }
  t.user_relations_ = std::move(norm_relations);
  for (auto const& n : sot_relations) {
    if (!ids.insert(n.id).second) throw std::invalid_argument("duplicate relation id '" + n.id + "'");
    t.validate_term(n.base, "net '" + n.id + "'");
    if (n.certificate && sgn(n.certificate->bound) < 0)
      throw std::invalid_argument("net '" + n.id + "' has a negative certificate bound");
  }
  t.sot_relations_ = std::move(sot_relations);
  return t;
}

std::optional<std::string> GeneratingTriple::unit_name() const {
  for (auto const& g : generators_)
    if (g.kind == GeneratorKind::unit) return g.name;
  return std::nullopt;
}

std::optional<GeneratorKind> GeneratingTriple::kind_of(std::string_view name) const {
  for (auto const& g : generators_)
    if (g.name == name) return g.kind;
  for (auto const& f : families_) {
    if (name.size() <= f.prefix.size() || name.substr(0, f.prefix.size()) != f.prefix) continue;
    auto rest = name.substr(f.prefix.size());
    if (rest[0] == '0' || !std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; }))
      continue;
    if (f.count && std::stoul(std::string(rest)) > *f.count) continue;
    return f.kind;
  }
  return std::nullopt;
}

std::set<std::string> GeneratingTriple::generator_names(std::size_t family_limit) const {
  std::set<std::string> out;
  for (auto const& g : generators_) out.insert(g.name);
  for (auto const& f : families_) {
    std::size_t m = f.count ? std::min(*f.count, family_limit) : family_limit;
    for (std::size_t k = 1; k <= m; ++k) out.insert(family_member(f.prefix, k));
  }
  return out;
}

std::map<std::string, GeneratorKind> GeneratingTriple::signature(std::size_t family_limit) const {
  std::map<std::string, GeneratorKind> out;
  for (auto const& name : generator_names(family_limit)) out.emplace(name, *kind_of(name));
  return out;
}

void GeneratingTriple::validate_term(Term const& t, std::string const& where) const {
  bool unital = has_unit();
  for (auto const& [w, c] : t) {
    if (w.empty() && !unital)
      throw std::invalid_argument(where + " uses the unit in a presentation without a unit generator");
    for (auto const& l : w)
      if (!kind_of(l.gen)) throw std::invalid_argument(where + " uses undeclared generator '" + l.gen + "'");
  }
}

GeneratingTriple GeneratingTriple::truncate(std::size_t m) const {
  std::vector<Generator> gens;
  std::optional<Generator> unit;
  for (auto const& g : generators_) {
    if (g.kind == GeneratorKind::unit) {
      unit = g;
    } else {
      gens.push_back(g);
    }
  }
  for (auto const& f : families_) {
    std::size_t count = f.count ? std::min(*f.count, m) : m;
    for (std::size_t k = 1; k <= count; ++k) gens.push_back({family_member(f.prefix, k), f.kind});
  }
  if (unit) gens.push_back(*unit);
  std::vector<SotNet> nets = sot_relations_;
  for (auto& n : nets)
    if (!n.scheme.label_count || *n.scheme.label_count > m) n.scheme.label_count = m;
  return make(name_, std::move(gens), user_relations_, std::move(nets));
}

GeneratingTriple cuntz_triple(std::size_t n) {
  if (n < 2) throw std::invalid_argument("cuntz_triple needs n >= 2, got " + std::to_string(n));
  std::string const unit(kUnitName);
  std::vector<Generator> gens;
  Term sum;
  for (std::size_t i = 1; i <= n; ++i) {
    auto s = family_member("S", i);
    gens.push_back({s, GeneratorKind::isometry});
    sum += Term(Word{gen(s), star(s)});
  }
  gens.push_back({unit, GeneratorKind::unit});
  sum -= Term(gen(unit));
  return GeneratingTriple::make("cuntz-" + std::to_string(n), std::move(gens),
                                {{"cuntz-sum", sum, 0, RelationOrigin::builtin}}, {});
}

GeneratingTriple cuntz_infinity_triple() {
  std::string const unit(kUnitName);
  SotNet net;
  net.id = "cuntz-defect";
  net.scheme = {SchemeKind::naturals, std::nullopt};
  net.base = Term(gen(unit));
  net.summand_template = "T#.T#'";
  net.certificate = BoundCertificate{1, CertificateTag::projection_defect};
  return GeneratingTriple::make("cuntz-infinity", {{unit, GeneratorKind::unit}}, {}, {net},
                                {{"T", GeneratorKind::isometry, std::nullopt}});
}

GeneratingTriple exel_laca_triple(ZeroOneMatrix const& A, bool unital) {
  std::size_t n = A.size();
  std::string const unit(kUnitName);
  std::optional<std::size_t> labels = A.infinite() ? std::nullopt : std::optional<std::size_t>(n);
  std::vector<Generator> gens;
  for (std::size_t i = 1; i <= n; ++i) gens.push_back({family_member("T", i), GeneratorKind::partial_isometry});
  if (unital) gens.push_back({unit, GeneratorKind::unit});

  std::vector<NormRelation> rels;
  std::vector<SotNet> nets;
  if (unital) {
    SotNet ck1;
    ck1.id = "CK1";
    ck1.scheme = {SchemeKind::finite_subsets, labels};
    ck1.base = Term(gen(unit));
    ck1.summand_template = "T#.T#'";
    ck1.certificate = BoundCertificate{1, CertificateTag::projection_defect};
    nets.push_back(std::move(ck1));
  } else {
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) {
        if (i == j) continue;
        auto ti = family_member("T", i);
        auto tj = family_member("T", j);
        rels.push_back({"orth:" + std::to_string(i) + ":" + std::to_string(j), Term(Word{star(ti), gen(tj)}), 0,
                        RelationOrigin::builtin});
      }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    auto ti = family_member("T", i);
    SotNet ck2;
    ck2.id = "CK2:" + std::to_string(i);
    ck2.scheme = {SchemeKind::finite_subsets, labels};
    ck2.base = Term(Word{star(ti), gen(ti)});
    ck2.summand_template = "T#.T#'";
    for (std::size_t j = 1; j <= n; ++j) ck2.weights.emplace_back(A(i, j));
    ck2.certificate = BoundCertificate{2, CertificateTag::projection_difference};
    nets.push_back(std::move(ck2));
  }
  return GeneratingTriple::make(unital ? "exel-laca-unital" : "exel-laca", std::move(gens), std::move(rels),
                                std::move(nets));
}

}  // namespace ucstar
