#include "ucstar/ultragraph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ucstar/term_text.hpp"

namespace ucstar {

namespace {

bool alnum_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c); });
}

}  // namespace

std::vector<std::size_t> set_members(VertexSet A) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; A; ++k, A >>= 1)
    if (A & 1u) out.push_back(k);
  return out;
}

Ultragraph::Ultragraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw std::invalid_argument("ultragraph without vertices");
  if (vertices_.size() > kMaxVertices)
    throw std::invalid_argument("ultragraph has more than " + std::to_string(kMaxVertices) + " vertices");
  std::set<std::string> seen;
  for (auto const& v : vertices_) {
    if (!alnum_name(v)) throw std::invalid_argument("vertex name '" + v + "' is not alphanumeric");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate vertex '" + v + "'");
  }
  std::set<std::string> enames;
  for (auto const& e : edges_) {
    if (!alnum_name(e.name)) throw std::invalid_argument("edge name '" + e.name + "' is not alphanumeric");
    if (!enames.insert(e.name).second) throw std::invalid_argument("duplicate edge '" + e.name + "'");
    if (e.source >= vertices_.size()) throw std::invalid_argument("edge '" + e.name + "' has an unknown source");
    if (e.range == 0) throw std::invalid_argument("edge '" + e.name + "' has an empty range");
    if (e.range & ~all_vertices()) throw std::invalid_argument("edge '" + e.name + "' has an unknown range vertex");
  }
}

std::size_t Ultragraph::vertex_index(std::string_view name) const {
  for (std::size_t k = 0; k < vertices_.size(); ++k)
    if (vertices_[k] == name) return k;
  throw std::invalid_argument("unknown vertex '" + std::string(name) + "'");
}

std::size_t Ultragraph::edge_index(std::string_view name) const {
  for (std::size_t k = 0; k < edges_.size(); ++k)
    if (edges_[k].name == name) return k;
  throw std::invalid_argument("unknown edge '" + std::string(name) + "'");
}

std::string Ultragraph::projection_name(VertexSet A) const {
  std::string s = "p_";
  bool first = true;
  for (auto k : set_members(A)) {
    if (!first) s += '_';
    s += vertices_[k];
    first = false;
  }
  return s;
}

Ultragraph Ultragraph::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> vertices;
  std::vector<std::tuple<std::string, std::string, std::vector<std::string>>> raw;
  auto fail = [&](std::string const& what) {
    throw std::invalid_argument("ultragraph line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "vertices") {
      if (!vertices.empty()) fail("vertices declared twice");
      for (std::string v; ls >> v;) vertices.push_back(v);
      if (vertices.empty()) fail("no vertices");
    } else if (kw == "edge") {
      std::string name, src, arrow;
      if (!(ls >> name >> src >> arrow) || arrow != "->") fail("expected 'edge <name> <source> -> {v,...}'");
      std::string rest, tok;
      while (ls >> tok) rest += tok;
      if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}') fail("range must be written {v1,v2,...}");
      std::vector<std::string> range;
      std::istringstream rs(rest.substr(1, rest.size() - 2));
      for (std::string v; std::getline(rs, v, ',');) range.push_back(v);
      raw.emplace_back(name, src, range);
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  if (vertices.empty()) throw std::invalid_argument("ultragraph: missing 'vertices' line");
  Ultragraph probe(vertices, {});
  std::vector<Edge> edges;
  for (auto const& [name, src, range] : raw) {
    Edge e{name, probe.vertex_index(src), 0};
    for (auto const& v : range) e.range |= VertexSet{1} << probe.vertex_index(v);
    edges.push_back(e);
  }
  return Ultragraph(std::move(vertices), std::move(edges));
}

std::string Ultragraph::str() const {
  std::ostringstream os;
  os << "vertices";
  for (auto const& v : vertices_) os << ' ' << v;
  os << '\n';
  for (auto const& e : edges_) {
    os << "edge " << e.name << ' ' << vertices_[e.source] << " -> {";
    bool first = true;
    for (auto k : set_members(e.range)) {
      os << (first ? "" : ",") << vertices_[k];
      first = false;
    }
    os << "}\n";
  }
  return os.str();
}

std::vector<VertexSet> g0_closure(Ultragraph const& G) {
  std::set<VertexSet> fam{0};
  for (std::size_t v = 0; v < G.vertices().size(); ++v) fam.insert(VertexSet{1} << v);
  for (auto const& e : G.edges()) fam.insert(e.range);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<VertexSet> cur(fam.begin(), fam.end());
    for (std::size_t a = 0; a < cur.size(); ++a)
      for (std::size_t b = a + 1; b < cur.size(); ++b) {
        grew |= fam.insert(cur[a] | cur[b]).second;
        grew |= fam.insert(cur[a] & cur[b]).second;
      }
  }
  std::vector<VertexSet> out(fam.begin(), fam.end());
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    return std::pair(std::popcount(a), a) < std::pair(std::popcount(b), b);
  });
  return out;
}

std::vector<Path> enumerate_paths(Ultragraph const& G, std::size_t n) {
  if (n == 0) throw std::invalid_argument("path length must be at least 1");
  auto const& E = G.edges();
  std::vector<Path> cur;
  for (std::size_t e = 0; e < E.size(); ++e) cur.push_back({e});
  for (std::size_t len = 1; len < n; ++len) {
    std::vector<Path> next;
    for (auto const& p : cur)
      for (std::size_t f = 0; f < E.size(); ++f)
        if (E[p.back()].range >> E[f].source & 1u) {
          Path q = p;
          q.push_back(f);
          next.push_back(std::move(q));
        }
    cur = std::move(next);
  }
  return cur;
}

namespace {

constexpr std::size_t kMaxTripleVertices = 8;

void check_triple_size(Ultragraph const& G) {
  if (G.vertices().size() > kMaxTripleVertices)
    throw std::invalid_argument("ultragraph relations are materialized for at most " +
                                std::to_string(kMaxTripleVertices) + " vertices");
}

Term pterm(Ultragraph const& G, VertexSet A) { return Term(gen(G.projection_name(A))); }
Term sterm(Ultragraph const& G, std::size_t e) { return Term(gen(G.edge_name(e))); }
Term sstar(Ultragraph const& G, std::size_t e) { return Term(star(G.edge_name(e))); }

}  // namespace

GeneratingTriple ultragraph_triple(Ultragraph const& G) {
  check_triple_size(G);
  auto closure = g0_closure(G);
  std::vector<Generator> gens;
  for (auto A : closure) gens.push_back({G.projection_name(A), GeneratorKind::projection});
  for (std::size_t e = 0; e < G.edges().size(); ++e) gens.push_back({G.edge_name(e), GeneratorKind::partial_isometry});

  std::vector<NormRelation> rels;
  rels.push_back({"(1):empty", pterm(G, 0), 0, RelationOrigin::builtin});
  for (std::size_t a = 0; a < closure.size(); ++a)
    for (std::size_t b = a + 1; b < closure.size(); ++b) {
      VertexSet A = closure[a], B = closure[b];
      if (!A || !B) continue;
      std::string tag = G.projection_name(A) + ":" + G.projection_name(B);
      rels.push_back({"(1):meet:" + tag, pterm(G, A & B) - pterm(G, A) * pterm(G, B), 0, RelationOrigin::builtin});
      rels.push_back({"(1):join:" + tag, pterm(G, A | B) - pterm(G, A) - pterm(G, B) + pterm(G, A & B), 0,
                      RelationOrigin::builtin});
    }
  auto const& E = G.edges();
  for (std::size_t e = 0; e < E.size(); ++e)
    rels.push_back({"(2):" + E[e].name, sstar(G, e) * sterm(G, e) - pterm(G, E[e].range), 0, RelationOrigin::builtin});
  for (std::size_t v = 0; v < G.vertices().size(); ++v) {
    Term sum;
    for (std::size_t e = 0; e < E.size(); ++e)
      if (E[e].source == v) sum += sterm(G, e) * sstar(G, e);
    if (sum.is_zero()) continue;
    rels.push_back({"(3):" + G.vertices()[v], pterm(G, VertexSet{1} << v) - sum, 0, RelationOrigin::builtin});
  }
  for (std::size_t e = 0; e < E.size(); ++e)
    for (std::size_t f = e + 1; f < E.size(); ++f)
      rels.push_back({"orth:" + E[e].name + ":" + E[f].name, sstar(G, e) * sterm(G, f), 0, RelationOrigin::builtin});
  return GeneratingTriple::make("ultragraph", std::move(gens), std::move(rels), {});
}

RuleSet ultragraph_rules(Ultragraph const& G) {
  check_triple_size(G);
  auto closure = g0_closure(G);
  auto const& E = G.edges();
  std::size_t nv = G.vertices().size();
  Signature sig;
  for (auto A : closure) {
    sig.kinds[G.projection_name(A)] = GeneratorKind::projection;
    sig.weights[G.projection_name(A)] = std::popcount(A);
  }
  for (std::size_t e = 0; e < E.size(); ++e) sig.kinds[G.edge_name(e)] = GeneratorKind::partial_isometry;

  auto pv = [&](std::size_t v) { return G.projection_name(VertexSet{1} << v); };
  auto se = [&](std::size_t e) { return G.edge_name(e); };
  auto in_range = [&](std::size_t e, std::size_t v) { return (E[e].range >> v) & 1u; };
  auto vsum = [&](VertexSet A) {
    Term t;
    for (auto v : set_members(A)) t += Term(gen(pv(v)));
    return t;
  };

  std::vector<Rule> rules;
  for (auto A : closure) rules.push_back({G.projection_name(A) + ":selfadjoint", Word{star(G.projection_name(A))}, Term(gen(G.projection_name(A)))});
  for (auto A : closure) {
    if (A == 0) rules.push_back({"p_empty", Word{gen(G.projection_name(A))}, Term()});
    else if (std::popcount(A) >= 2) rules.push_back({G.projection_name(A) + ":split", Word{gen(G.projection_name(A))}, vsum(A)});
  }
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t w = 0; w < nv; ++w)
      rules.push_back({"vertex:" + pv(v) + "." + pv(w), Word{gen(pv(v)), gen(pv(w))}, v == w ? Term(gen(pv(v))) : Term()});
  for (std::size_t e = 0; e < E.size(); ++e)
    rules.push_back({"(2):" + se(e), Word{star(se(e)), gen(se(e))}, vsum(E[e].range)});
  for (std::size_t e = 0; e < E.size(); ++e)
    for (std::size_t f = 0; f < E.size(); ++f)
      if (e != f) rules.push_back({"orth:" + se(e) + ":" + se(f), Word{star(se(e)), gen(se(f))}, Term()});
  for (std::size_t e = 0; e < E.size(); ++e)
    for (std::size_t v = 0; v < nv; ++v) {
      if (!in_range(e, v)) {
        rules.push_back({"range:" + se(e) + "." + pv(v), Word{gen(se(e)), gen(pv(v))}, Term()});
        rules.push_back({"range:" + pv(v) + "." + se(e) + "'", Word{gen(pv(v)), star(se(e))}, Term()});
      }
      bool src = E[e].source == v;
      rules.push_back({"source:" + pv(v) + "." + se(e), Word{gen(pv(v)), gen(se(e))}, src ? Term(gen(se(e))) : Term()});
      rules.push_back({"source:" + se(e) + "'." + pv(v), Word{star(se(e)), gen(pv(v))}, src ? Term(star(se(e))) : Term()});
    }
  for (std::size_t e = 0; e < E.size(); ++e)
    for (std::size_t f = 0; f < E.size(); ++f)
      if (!in_range(e, E[f].source)) {
        rules.push_back({"path:" + se(e) + "." + se(f), Word{gen(se(e)), gen(se(f))}, Term()});
        rules.push_back({"path:" + se(f) + "'." + se(e) + "'", Word{star(se(f)), star(se(e))}, Term()});
      }
  return RuleSet("ultragraph", std::move(sig), std::move(rules));
}

namespace {

// Inserts sum_{v in r(alpha_last) & r(beta_last)} p_v into words without a
// middle projection.
Term expand_middle(Term const& t, Ultragraph const& G) {
  std::map<std::string, std::size_t> edge_of;
  for (std::size_t e = 0; e < G.edges().size(); ++e) edge_of[G.edge_name(e)] = e;
  Term out;
  for (auto const& [w, c] : t) {
    bool has_p = false;
    for (auto const& l : w) has_p = has_p || !edge_of.count(l.gen);
    if (has_p || w.empty()) {
      out.add_word(w, c);
      continue;
    }
    std::size_t split = 0;
    while (split < w.size() && !w[split].star) ++split;
    VertexSet S = G.all_vertices();
    if (split > 0) S &= G.edges()[edge_of.at(w[split - 1].gen)].range;
    if (split < w.size()) S &= G.edges()[edge_of.at(w[split].gen)].range;
    Word a = w.subword(0, split);
    Word b = w.subword(split, w.size() - split);
    for (auto v : set_members(S)) out.add_word(a.concat(Word{gen(G.projection_name(VertexSet{1} << v))}).concat(b), c);
  }
  return out;
}

}  // namespace

Term ultragraph_canonical(Term const& t, Ultragraph const& G, RuleSet const& rules) {
  return normalize(expand_middle(normalize(t, rules), G), rules);
}

Representation ultragraph_rep(Ultragraph const& G, std::size_t L) {
  if (L < 3) throw std::invalid_argument("ultragraph model depth must be at least 3");
  auto const& E = G.edges();
  std::vector<Path> paths;
  for (std::size_t len = 1; len <= L; ++len) {
    auto p = enumerate_paths(G, len);
    paths.insert(paths.end(), p.begin(), p.end());
  }
  if (paths.empty()) throw std::invalid_argument("ultragraph has no edges");
  std::map<Path, std::size_t> index;
  Representation rep;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    index[paths[k]] = k;
    std::string label = "(";
    for (std::size_t i = 0; i < paths[k].size(); ++i) label += (i ? "," : "") + E[paths[k][i]].name;
    rep.basis_labels.push_back(label + ")");
    rep.interior.push_back(paths[k].size() >= 2 && paths[k].size() < L);
  }
  std::size_t dim = paths.size();
  for (VertexSet A : g0_closure(G)) {
    std::vector<Complex> d(dim);
    for (std::size_t k = 0; k < dim; ++k) d[k] = (A >> E[paths[k].front()].source) & 1u ? 1.0 : 0.0;
    rep.assign.emplace(G.projection_name(A), SparseOperator::diagonal(d));
  }
  for (std::size_t e = 0; e < E.size(); ++e) {
    std::vector<SparseOperator::Entry> en;
    for (std::size_t k = 0; k < dim; ++k) {
      Path const& a = paths[k];
      if (a.size() >= L || !((E[e].range >> E[a.front()].source) & 1u)) continue;
      Path p{e};
      p.insert(p.end(), a.begin(), a.end());
      en.push_back({index.at(p), k, 1.0});
    }
    rep.assign.emplace(G.edge_name(e), SparseOperator::from_entries(dim, en));
  }
  rep.model_tag = "ultragraph L=" + std::to_string(L);
  rep.params = {{"m", std::to_string(E.size())}, {"L", std::to_string(L)}};
  return rep;
}

Term ultragraph_monomial(Ultragraph const& G, Path const& alpha, VertexSet A, Path const& beta) {
  std::vector<Letter> w;
  for (auto e : alpha) w.push_back(gen(G.edge_name(e)));
  w.push_back(gen(G.projection_name(A)));
  for (auto it = beta.rbegin(); it != beta.rend(); ++it) w.push_back(star(G.edge_name(*it)));
  return Term(Word(std::move(w)));
}

}  // namespace ucstar
