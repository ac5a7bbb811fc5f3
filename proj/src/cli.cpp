#include "ucstar/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "ucstar/models.hpp"
#include "ucstar/proj_lattice.hpp"
#include "ucstar/term_text.hpp"
#include "ucstar/ultragraph.hpp"

namespace ucstar {

namespace {

constexpr std::size_t kFamilyNameLimit = 64;

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

// Whitespace-separated tokens; "..." groups (quotes removed, escapes \" and \\).
std::vector<Token> tokenize(std::string const& line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    Token t{"", i + 1};
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
      if (line[i] == '"') {
        std::size_t open = i++;
        while (i < line.size() && line[i] != '"') {
          if (line[i] == '\\' && i + 1 < line.size()) ++i;
          t.text += line[i++];
        }
        if (i >= line.size()) throw ConfigError(lineno, open + 1, "unterminated quote");
        ++i;
      } else {
        t.text += line[i++];
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::string strip_comment(std::string const& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"' && (i == 0 || line[i - 1] != '\\')) quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

std::string quote(std::string const& s) {
  bool plain = !s.empty() && std::none_of(s.begin(), s.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '"' || c == '#' || c == '\\';
  });
  if (plain) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') q += '\\';
    q += c;
  }
  return q + '"';
}

std::size_t parse_count(std::string const& s, std::size_t line, std::size_t col, std::string const& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ConfigError(line, col, what + " must be a nonnegative integer, got '" + s + "'");
  return std::stoul(s);
}

std::vector<std::size_t> parse_list(std::string const& s, std::size_t line, std::size_t col,
                                    std::string const& what) {
  std::vector<std::size_t> out;
  std::istringstream in(s);
  for (std::string item; std::getline(in, item, ',');) out.push_back(parse_count(item, line, col, what));
  return out;
}

Rational parse_rational(std::string const& s, std::size_t line, std::size_t col) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ConfigError(line, col, "expected a rational number, got '" + s + "'");
  q.canonicalize();
  return q;
}

Directive directive(std::vector<Token> const& toks, std::size_t from, std::size_t lineno) {
  Directive d;
  if (toks.size() <= from) throw ConfigError(lineno, 1, "missing name");
  d.kind = toks[from].text;
  for (std::size_t k = from + 1; k < toks.size(); ++k) {
    auto eq = toks[k].text.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ConfigError(lineno, toks[k].column, "expected key=value, got '" + toks[k].text + "'");
    d.params[toks[k].text.substr(0, eq)] = toks[k].text.substr(eq + 1);
  }
  return d;
}

bool parse_bool(std::string const& s, std::size_t line) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw ConfigError(line, 1, "expected true or false, got '" + s + "'");
}

std::string read_file(std::filesystem::path const& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path resolve(std::filesystem::path const& base, std::string const& file) {
  std::filesystem::path p(file);
  return p.is_absolute() || base.empty() ? p : base / p;
}

std::string const& require(Directive const& d, std::string const& key, std::size_t line) {
  auto it = d.params.find(key);
  if (it == d.params.end()) throw ConfigError(line, 1, "'" + d.kind + "' needs " + key + "=");
  return it->second;
}

GeneratingTriple builtin_triple(Directive const& d, std::filesystem::path const& base, std::size_t line) {
  for (auto const& [k, v] : d.params) {
    static std::map<std::string, std::set<std::string>> const allowed{
        {"cuntz", {"n"}}, {"cuntz-infinity", {}}, {"exel-laca", {"matrix", "unital"}}, {"ultragraph", {"file"}}};
    auto a = allowed.find(d.kind);
    if (a != allowed.end() && !a->second.count(k))
      throw ConfigError(line, 1, "unknown parameter '" + k + "' for builtin " + d.kind);
  }
  try {
    if (d.kind == "cuntz") return cuntz_triple(parse_count(require(d, "n", line), line, 1, "n"));
    if (d.kind == "cuntz-infinity") return cuntz_infinity_triple();
    if (d.kind == "exel-laca") {
      bool unital = d.params.count("unital") ? parse_bool(d.params.at("unital"), line) : true;
      return exel_laca_triple(ZeroOneMatrix::from_rows(require(d, "matrix", line)), unital);
    }
    if (d.kind == "ultragraph")
      return ultragraph_triple(Ultragraph::parse(read_file(resolve(base, require(d, "file", line)))));
  } catch (ConfigError const&) {
    throw;
  } catch (std::exception const& e) {
    throw ConfigError(line, 1, e.what());
  }
  throw ConfigError(line, 1, "unknown builtin '" + d.kind + "'");
}

struct PendingTerm {
  std::size_t line;
  std::size_t column;
  std::string text;
};

Term parse_at(PendingTerm const& p, std::set<std::string> const& known) {
  try {
    return parse_term(p.text, &known);
  } catch (ParseError const& e) {
    std::string msg = e.what();
    auto at = msg.rfind(" at position ");
    if (at != std::string::npos) msg.erase(at);
    throw ConfigError(p.line, p.column + e.position(), msg);
  }
}

bool nets_equal(SotNet const& a, SotNet const& b) {
  return a.id == b.id && a.scheme == b.scheme && a.base == b.base && a.summand_template == b.summand_template &&
         a.weights == b.weights && a.certificate == b.certificate;
}

}  // namespace

bool operator==(PresentationFile const& a, PresentationFile const& b) {
  if (a.nets.size() != b.nets.size()) return false;
  for (std::size_t k = 0; k < a.nets.size(); ++k)
    if (!nets_equal(a.nets[k], b.nets[k])) return false;
  return a.name == b.name && a.builtin == b.builtin && a.generators == b.generators && a.relations == b.relations &&
         a.model == b.model && a.overrides == b.overrides && a.schedule == b.schedule;
}

PresentationFile parse_presentation(std::string_view text, std::filesystem::path base_dir) {
  PresentationFile f;
  f.base_dir = std::move(base_dir);
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  std::set<std::string> known;
  std::size_t builtin_line = 0;

  struct PendingRelation {
    std::string id;
    PendingTerm term;
    Rational bound;
  };
  struct PendingNet {
    SotNet net;
    PendingTerm base;
    PendingTerm summand;
  };
  std::vector<PendingRelation> rels;
  std::vector<PendingNet> nets;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    auto toks = tokenize(line, lineno);
    if (toks.empty()) continue;
    std::string const& kw = toks[0].text;
    if (kw == "presentation") {
      if (toks.size() != 2) throw ConfigError(lineno, 1, "expected 'presentation <name>'");
      f.name = toks[1].text;
    } else if (kw == "builtin") {
      if (f.builtin) throw ConfigError(lineno, 1, "only one builtin per file");
      f.builtin = directive(toks, 1, lineno);
      builtin_line = lineno;
      GeneratingTriple t = builtin_triple(*f.builtin, f.base_dir, lineno);
      for (auto const& n : t.generator_names(kFamilyNameLimit)) known.insert(n);
    } else if (kw == "generator") {
      if (toks.size() != 3) throw ConfigError(lineno, 1, "expected 'generator <name> <kind>'");
      if (!is_identifier(toks[1].text)) throw ConfigError(lineno, toks[1].column, "invalid generator name");
      try {
        f.generators.push_back({toks[1].text, parse_generator_kind(toks[2].text)});
      } catch (std::exception const& e) {
        throw ConfigError(lineno, toks[2].column, e.what());
      }
      known.insert(toks[1].text);
    } else if (kw == "relation") {
      if (toks.size() < 3) throw ConfigError(lineno, 1, "expected 'relation <id> <term> [<= bound]'");
      std::size_t start = toks[2].column - 1;
      std::string body = line.substr(start);
      Rational bound{0};
      if (auto le = body.rfind("<="); le != std::string::npos) {
        std::string b = body.substr(le + 2);
        b.erase(0, b.find_first_not_of(" \t"));
        b.erase(b.find_last_not_of(" \t\r") + 1);
        bound = parse_rational(b, lineno, start + le + 3);
        body.erase(le);
      }
      body.erase(body.find_last_not_of(" \t\r") + 1);
      rels.push_back({toks[1].text, {lineno, start + 1, body}, bound});
    } else if (kw == "sot") {
      if (toks.size() < 2) throw ConfigError(lineno, 1, "expected 'sot <id> ...'");
      Directive d = directive(toks, 1, lineno);
      PendingNet p;
      p.net.id = d.kind;
      auto col_of = [&](std::string const& key) {
        for (auto const& t : toks)
          if (t.text.rfind(key + "=", 0) == 0) return t.column + key.size();
        return std::size_t{1};
      };
      std::string scheme = require(d, "scheme", lineno);
      if (scheme == "naturals") {
        p.net.scheme = {SchemeKind::naturals, std::nullopt};
      } else if (scheme.rfind("subsets", 0) == 0) {
        p.net.scheme = {SchemeKind::finite_subsets, std::nullopt};
        if (scheme.size() > 7) {
          if (scheme[7] != ':') throw ConfigError(lineno, col_of("scheme"), "expected subsets or subsets:<n>");
          p.net.scheme.label_count = parse_count(scheme.substr(8), lineno, col_of("scheme"), "label count");
        }
      } else {
        throw ConfigError(lineno, col_of("scheme"), "unknown scheme '" + scheme + "'");
      }
      p.base = {lineno, col_of("base") + 1, require(d, "base", lineno)};
      p.summand = {lineno, col_of("summand") + 1, require(d, "summand", lineno)};
      p.net.summand_template = p.summand.text;
      if (d.params.count("weights"))
        for (auto const& w : parse_list(d.params.at("weights"), lineno, col_of("weights"), "weight"))
          p.net.weights.emplace_back(static_cast<long>(w));
      std::string cert = require(d, "certificate", lineno);
      if (cert != "none") {
        BoundCertificate c{parse_rational(cert, lineno, col_of("certificate")), CertificateTag::user};
        if (d.params.count("tag")) {
          try {
            c.tag = parse_certificate_tag(d.params.at("tag"));
          } catch (std::exception const& e) {
            throw ConfigError(lineno, col_of("tag"), e.what());
          }
        }
        p.net.certificate = c;
      } else if (d.params.count("tag")) {
        throw ConfigError(lineno, col_of("tag"), "tag given without a certificate");
      }
      for (auto const& [k, v] : d.params)
        if (k != "scheme" && k != "base" && k != "summand" && k != "weights" && k != "certificate" && k != "tag")
          throw ConfigError(lineno, col_of(k), "unknown sot parameter '" + k + "'");
      nets.push_back(std::move(p));
    } else if (kw == "model") {
      if (f.model) throw ConfigError(lineno, 1, "only one model per file");
      f.model = directive(toks, 1, lineno);
    } else if (kw == "override") {
      if (toks.size() < 3) throw ConfigError(lineno, 1, "expected 'override <gen> add r c re im' or 'file=...'");
      OverrideLine o{toks[1].text, std::nullopt, {}};
      if (toks[2].text == "add") {
        if (toks.size() != 7) throw ConfigError(lineno, toks[2].column, "expected 'add <row> <col> <re> <im>'");
        try {
          o.add.push_back({std::stoul(toks[3].text), std::stoul(toks[4].text),
                           Complex(std::stod(toks[5].text), std::stod(toks[6].text))});
        } catch (std::exception const&) {
          throw ConfigError(lineno, toks[3].column, "malformed override entry");
        }
      } else if (toks[2].text.rfind("file=", 0) == 0 && toks.size() == 3) {
        o.file = toks[2].text.substr(5);
      } else {
        throw ConfigError(lineno, toks[2].column, "expected 'add' or 'file='");
      }
      f.overrides.push_back(std::move(o));
    } else if (kw == "schedule") {
      if (toks.size() != 2) throw ConfigError(lineno, 1, "expected 'schedule 1,2,3'");
      f.schedule = parse_list(toks[1].text, lineno, toks[1].column, "schedule entry");
    } else {
      throw ConfigError(lineno, toks[0].column, "unknown keyword '" + kw + "'");
    }
  }
  (void)builtin_line;

  for (auto const& r : rels) f.relations.push_back({r.id, parse_at(r.term, known), r.bound});
  for (auto& p : nets) {
    p.net.base = parse_at(p.base, known);
    if (p.summand.text.find('#') == std::string::npos)
      throw ConfigError(p.summand.line, p.summand.column, "summand template needs a '#' placeholder");
    std::string probe = p.summand.text;
    for (std::size_t k = 0; (k = probe.find('#', k)) != std::string::npos;) probe.replace(k, 1, "1");
    parse_at({p.summand.line, p.summand.column, probe}, known);
    f.nets.push_back(std::move(p.net));
  }
  return f;
}

PresentationFile load_presentation(std::filesystem::path const& path) {
  return parse_presentation(read_file(path), path.parent_path());
}

std::string print_presentation(PresentationFile const& f) {
  std::ostringstream os;
  auto dir = [&](char const* kw, Directive const& d) {
    os << kw << ' ' << d.kind;
    for (auto const& [k, v] : d.params) os << ' ' << k << '=' << quote(v);
    os << '\n';
  };
  if (!f.name.empty()) os << "presentation " << f.name << '\n';
  if (f.builtin) dir("builtin", *f.builtin);
  for (auto const& g : f.generators) os << "generator " << g.name << ' ' << to_string(g.kind) << '\n';
  for (auto const& r : f.relations) {
    os << "relation " << r.id << ' ' << to_string(r.term);
    if (sgn(r.bound) != 0) os << " <= " << r.bound.get_str();
    os << '\n';
  }
  for (auto const& n : f.nets) {
    os << "sot " << n.id << " scheme=";
    if (n.scheme.kind == SchemeKind::naturals) {
      os << "naturals";
    } else {
      os << "subsets";
      if (n.scheme.label_count) os << ':' << *n.scheme.label_count;
    }
    os << " base=" << quote(to_string(n.base)) << " summand=" << quote(n.summand_template);
    if (!n.weights.empty()) {
      os << " weights=";
      for (std::size_t k = 0; k < n.weights.size(); ++k) os << (k ? "," : "") << n.weights[k].get_str();
    }
    if (n.certificate)
      os << " certificate=" << n.certificate->bound.get_str() << " tag=" << to_string(n.certificate->tag);
    else
      os << " certificate=none";
    os << '\n';
  }
  if (f.model) dir("model", *f.model);
  for (auto const& o : f.overrides) {
    os << "override " << o.generator;
    if (o.file) {
      os << " file=" << quote(*o.file) << '\n';
    } else {
      for (auto const& e : o.add)
        os << " add " << e.row << ' ' << e.col << ' ' << std::setprecision(17) << e.value.real() << ' '
           << e.value.imag();
      os << '\n';
    }
  }
  if (!f.schedule.empty()) {
    os << "schedule ";
    for (std::size_t k = 0; k < f.schedule.size(); ++k) os << (k ? "," : "") << f.schedule[k];
    os << '\n';
  }
  return os.str();
}

GeneratingTriple build_triple(PresentationFile const& f, std::optional<std::size_t> letters) {
  std::vector<Generator> gens;
  std::vector<NormRelation> rels;
  std::vector<SotNet> nets;
  std::vector<GeneratorFamily> families;
  std::string name = f.name.empty() ? "presentation" : f.name;
  if (f.builtin) {
    GeneratingTriple b = builtin_triple(*f.builtin, f.base_dir, 0);
    gens = b.generators();
    for (auto const& r : b.norm_relations())
      if (r.origin == RelationOrigin::builtin || r.origin == RelationOrigin::user) rels.push_back(r);
    nets = b.sot_relations();
    families = b.families();
  }
  gens.insert(gens.end(), f.generators.begin(), f.generators.end());
  for (auto const& r : f.relations) rels.push_back({r.id, r.term, r.bound, RelationOrigin::user});
  nets.insert(nets.end(), f.nets.begin(), f.nets.end());
  GeneratingTriple t = GeneratingTriple::make(name, std::move(gens), std::move(rels), std::move(nets), families);
  if (!t.families().empty()) {
    if (!letters) throw std::invalid_argument("presentation has countable generator families; set letters");
    t = t.truncate(*letters);
  }
  return t;
}

Representation build_model(PresentationFile const& f, RunConfig const& config) {
  if (!f.model) throw std::invalid_argument("no model declared");
  Directive const& d = *f.model;
  auto param = [&](std::string const& key) -> std::optional<std::size_t> {
    if (!d.params.count(key)) return std::nullopt;
    return parse_count(d.params.at(key), 0, 0, key);
  };
  auto need = [&](std::optional<std::size_t> v, char const* what) {
    if (!v) throw std::invalid_argument(std::string("model needs ") + what);
    return *v;
  };
  std::size_t depth = need(config.depth ? config.depth : param("depth"), "depth");
  Representation rep;
  if (d.kind == "fock") {
    rep = fock_rep(need(config.letters ? config.letters : param("letters"), "letters"), depth);
  } else if (d.kind == "fock-infinity") {
    rep = fock_infinity_rep(need(config.letters ? config.letters : param("letters"), "letters"), depth);
  } else if (d.kind == "pathspace") {
    if (!d.params.count("matrix")) throw std::invalid_argument("pathspace model needs matrix=");
    bool unital = d.params.count("unital") ? d.params.at("unital") == "true" : true;
    rep = pathspace_rep(ZeroOneMatrix::from_rows(d.params.at("matrix")), depth, unital);
  } else if (d.kind == "ultragraph") {
    if (!d.params.count("file")) throw std::invalid_argument("ultragraph model needs file=");
    rep = ultragraph_rep(Ultragraph::parse(read_file(resolve(f.base_dir, d.params.at("file")))), depth);
  } else {
    throw std::invalid_argument("unknown model '" + d.kind + "'");
  }
  for (auto const& o : f.overrides) {
    if (o.file) {
      std::ifstream in(resolve(f.base_dir, *o.file));
      if (!in) throw std::invalid_argument("cannot open override file " + *o.file);
      SparseOperator op = read_coo(in);
      if (op.dim() != rep.dim())
        throw std::invalid_argument("override for '" + o.generator + "' has dimension " + std::to_string(op.dim()));
      rep.assign.insert_or_assign(o.generator, std::move(op));
    } else {
      auto it = rep.assign.find(o.generator);
      SparseOperator base = it == rep.assign.end() ? SparseOperator(rep.dim()) : it->second;
      rep.assign.insert_or_assign(o.generator, base + SparseOperator::from_entries(rep.dim(), o.add));
    }
    rep.model_tag += " +override(" + o.generator + ")";
  }
  rep.validate();
  return rep;
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

std::string join(std::vector<std::string> const& v, char sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? std::string(1, sep) : "") + v[k];
  return s;
}

void text_report(std::ostream& out, std::string const& name, Representation const& rep,
                 std::vector<CheckReport> const& reports, int code) {
  std::string m = rep.params.count("m") ? rep.params.at("m") : "-";
  std::string L = rep.params.count("L") ? rep.params.at("L") : "-";
  out << "presentation " << name << " model=" << quote(rep.model_tag) << " dim=" << rep.dim() << " m=" << m
      << " L=" << L << " interior_fraction=" << fmt(rep.interior_fraction()) << '\n';
  std::map<std::string, int> tally;
  for (auto const& r : reports) {
    std::string verdict = r.note == "refused" ? "refused" : std::string(to_string(r.verdict));
    ++tally[verdict];
    out << "relation " << r.id << " kind=" << r.kind << " verdict=" << verdict << " residual=" << fmt(r.residual)
        << " bound=" << fmt(r.bound);
    if (r.kind == "norm") out << " full=" << fmt(r.full_residual) << " interior=" << fmt(r.interior_residual);
    if (r.kind == "sot") {
      out << " schedule=" << quote(join(r.schedule, ';')) << " certificate_max=" << fmt(r.certificate_max);
      std::vector<std::string> conv;
      for (auto const& c : r.convergence) conv.push_back(c.label + ":" + (c.index ? *c.index : "none"));
      if (!conv.empty()) out << " convergence=" << quote(join(conv, ' '));
    }
    out << " m=" << m << " L=" << L << " interior_fraction=" << fmt(r.interior_fraction);
    if (r.witness) out << " witness=" << quote(*r.witness);
    out << '\n';
  }
  out << "summary checks=" << reports.size();
  for (auto const& [k, v] : tally) out << ' ' << k << '=' << v;
  out << " exit=" << code << '\n';
}

void machine_report(std::ostream& out, std::string const& name, Representation const& rep,
                    std::vector<CheckReport> const& reports, int code) {
  nlohmann::json doc;
  doc["presentation"] = name;
  doc["model"] = rep.model_tag;
  doc["dim"] = rep.dim();
  doc["params"] = rep.params;
  doc["interior_fraction"] = rep.interior_fraction();
  doc["records"] = nlohmann::json::array();
  for (auto const& r : reports) {
    nlohmann::json j;
    j["id"] = r.id;
    j["kind"] = r.kind;
    j["verdict"] = r.note == "refused" ? "refused" : std::string(to_string(r.verdict));
    j["residual"] = r.residual;
    j["schedule"] = r.schedule;
    j["interior_fraction"] = r.interior_fraction;
    j["bound"] = r.bound;
    j["tolerance"] = r.tolerance;
    if (r.kind == "norm") {
      j["full_residual"] = r.full_residual;
      j["interior_residual"] = r.interior_residual;
    }
    if (r.kind == "sot") {
      j["certificate_max"] = r.certificate_max;
      nlohmann::json conv = nlohmann::json::object();
      for (auto const& c : r.convergence) conv[c.label] = c.index ? nlohmann::json(*c.index) : nlohmann::json();
      j["convergence"] = conv;
    }
    if (r.witness) j["witness"] = *r.witness;
    j["params"] = r.params;
    doc["records"].push_back(j);
  }
  doc["exit"] = code;
  out << doc.dump(2) << '\n';
}

}  // namespace

int cmd_check(std::filesystem::path const& file, RunConfig const& config, std::ostream& out, std::ostream& err) {
  if (!(config.tol > 0) || !(config.eps > 0)) {
    err << "error: tolerances must be positive\n";
    return 2;
  }
  PresentationFile f;
  GeneratingTriple triple;
  Representation rep;
  CheckConfig cc{config.tol, config.eps, {}};
  try {
    f = load_presentation(file);
    rep = build_model(f, config);
    std::optional<std::size_t> letters;
    if (rep.params.count("m")) letters = std::stoul(rep.params.at("m"));
    triple = build_triple(f, letters);
    for (auto const& g : triple.generator_names())
      if (!rep.assign.count(g)) throw std::invalid_argument("model assigns no operator to generator '" + g + "'");
    cc.schedule = config.schedule ? *config.schedule : f.schedule;
    if (!triple.sot_relations().empty() && cc.schedule.empty())
      throw std::invalid_argument("SOT relations present but no schedule given");
  } catch (ConfigError const& e) {
    err << file.string() << ": " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    err << file.string() << ": " << e.what() << '\n';
    return 2;
  }
  std::vector<CheckReport> reports;
  try {
    reports = run_checks(rep, triple, cc);
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  int code = std::all_of(reports.begin(), reports.end(), [](CheckReport const& r) { return r.ok(); }) ? 0 : 1;
  if (config.format == OutputFormat::machine)
    machine_report(out, triple.name(), rep, reports, code);
  else
    text_report(out, triple.name(), rep, reports, code);
  return code;
}

int cmd_atoms(std::size_t n, std::string const& prefix, std::ostream& out, std::ostream& err) {
  if (n == 0 || n > kMaxAtomFamily) {
    err << "error: n must be in 1.." << kMaxAtomFamily << ", got " << n << '\n';
    return 2;
  }
  if (!is_identifier(prefix)) {
    err << "error: invalid prefix '" << prefix << "'\n";
    return 2;
  }
  auto names = projection_names(n, prefix);
  RuleSet rules = commuting_projection_rules(names);
  for (SubsetMask X = 1; X < (SubsetMask{1} << n); ++X) {
    std::vector<std::string> members;
    for (auto k : mask_elements(X)) members.push_back(std::to_string(k));
    out << "atom {" << join(members, ',') << "} = " << to_string(atom_term(X, names)) << '\n';
  }
  bool ok = true;
  for (std::size_t i = 1; i <= n; ++i) {
    Term r = normalize(reconstruct(i, names), rules);
    bool good = r == Term(gen(names[i - 1]));
    ok = ok && good;
    out << "reconstruct " << names[i - 1] << " = " << to_string(r) << (good ? " ok" : " MISMATCH") << '\n';
  }
  return ok ? 0 : 1;
}

RuleSet ruleset_by_name(std::string const& name, Term const& t) {
  std::set<std::string> letters;
  for (auto const& [w, c] : t)
    for (auto const& l : w) letters.insert(l.gen);
  std::vector<std::string> names(letters.begin(), letters.end());
  if (name == "pi") return partial_isometry_rules(names);
  if (name == "proj") return projection_rules(names);
  if (name == "proj-commute") return commuting_projection_rules(names);
  auto colon = name.find(':');
  std::string head = name.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  if (head == "cuntz") {
    std::size_t n = std::stoul(arg);
    if (n < 2) throw std::invalid_argument("cuntz rules need n >= 2");
    std::vector<std::string> s;
    for (std::size_t i = 1; i <= n; ++i) s.push_back(family_member("S", i));
    return cuntz_rules(s, std::string(kUnitName));
  }
  if (head == "el") return el_rules_rowfinite(ZeroOneMatrix::from_rows(arg));
  if (head == "ultragraph") return ultragraph_rules(Ultragraph::parse(read_file(arg)));
  throw std::invalid_argument("unknown rule set '" + name + "'");
}

int cmd_normalize(std::string const& term, std::string const& ruleset, std::ostream& out, std::ostream& err,
                  std::ostream* trace) {
  Term t;
  try {
    t = parse_term(term);
  } catch (ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  try {
    RuleSet rs = ruleset_by_name(ruleset, t);
    out << to_string(normalize(t, rs, kDefaultStepBudget, trace)) << '\n';
  } catch (BudgetExceeded const& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

int cmd_paths(std::string const& source, std::size_t length, std::ostream& out, std::ostream& err) {
  try {
    if (std::filesystem::exists(source)) {
      Ultragraph G = Ultragraph::parse(read_file(source));
      for (auto const& p : enumerate_paths(G, length)) {
        std::vector<std::string> names;
        for (auto e : p) names.push_back(G.edges()[e].name);
        out << '(' << join(names, ',') << ")\n";
      }
    } else {
      for (auto const& p : enumerate_paths(ZeroOneMatrix::from_rows(source), length)) out << path_label(p) << '\n';
    }
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace ucstar
