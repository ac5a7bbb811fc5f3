#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ucstar/matrep.hpp"
#include "ucstar/presentation.hpp"
#include "ucstar/rewrite.hpp"

namespace ucstar {

/// Presentation file error with a 1-based line and column.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, std::size_t column, std::string const& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// `keyword key=value ...`; values may be double-quoted.
struct Directive {
  std::string kind;
  std::map<std::string, std::string> params;
  friend bool operator==(Directive const&, Directive const&) = default;
};

struct RelationLine {
  std::string id;
  Term term;
  Rational bound{0};
  friend bool operator==(RelationLine const& a, RelationLine const& b) {
    return a.id == b.id && a.term == b.term && a.bound == b.bound;
  }
};

struct OverrideLine {
  std::string generator;
  /// Replacement operator file (relative to the presentation), or
  std::optional<std::string> file;
  /// entries added to the model operator.
  std::vector<SparseOperator::Entry> add;
  friend bool operator==(OverrideLine const& a, OverrideLine const& b) {
    if (a.generator != b.generator || a.file != b.file || a.add.size() != b.add.size()) return false;
    for (std::size_t k = 0; k < a.add.size(); ++k)
      if (a.add[k].row != b.add[k].row || a.add[k].col != b.add[k].col || a.add[k].value != b.add[k].value)
        return false;
    return true;
  }
};

/// Line-oriented presentation file:
///
///   presentation <name>
///   builtin cuntz n=2 | cuntz-infinity | exel-laca matrix=11,10 unital=true | ultragraph file=g.ug
///   generator <name> <projection|partial_isometry|isometry|unit>
///   relation <id> <term> [<= <bound>]
///   sot <id> scheme=naturals|subsets[:n] base="<term>" summand="<template>" [weights=1,0,..]
///       certificate=<q>|none [tag=projection-defect|projection-difference|user]
///   model fock letters=<n> depth=<L> | fock-infinity letters=<m> depth=<L>
///       | pathspace matrix=<rows> depth=<L> [unital=true|false] | ultragraph file=<f> depth=<L>
///   override <gen> add <row> <col> <re> <im> | override <gen> file=<coo>
///   schedule 1,2,3
///
/// `#` starts a comment.
struct PresentationFile {
  std::string name;
  std::optional<Directive> builtin;
  std::vector<Generator> generators;
  std::vector<RelationLine> relations;
  std::vector<SotNet> nets;
  std::optional<Directive> model;
  std::vector<OverrideLine> overrides;
  std::vector<std::size_t> schedule;
  /// Directory for relative file references.
  std::filesystem::path base_dir;

  friend bool operator==(PresentationFile const& a, PresentationFile const& b);
};

PresentationFile parse_presentation(std::string_view text, std::filesystem::path base_dir = {});
PresentationFile load_presentation(std::filesystem::path const& path);
/// Canonical text; parse_presentation(print_presentation(f)) == f.
std::string print_presentation(PresentationFile const& f);

/// The generating triple of the file (builtin merged with declared
/// generators, relations and nets). Families are materialized to `letters`.
GeneratingTriple build_triple(PresentationFile const& f, std::optional<std::size_t> letters = std::nullopt);

enum class OutputFormat { text, machine };

struct RunConfig {
  double tol = kDefaultTol;
  double eps = kDefaultEps;
  std::optional<std::vector<std::size_t>> schedule;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> letters;
  OutputFormat format = OutputFormat::text;
};

Representation build_model(PresentationFile const& f, RunConfig const& config);

/// Exit 0 when every check passes or interior-passes, 1 on any failure or
/// refusal, 2 on parse or configuration errors.
int cmd_check(std::filesystem::path const& file, RunConfig const& config, std::ostream& out, std::ostream& err);

/// All 2^n - 1 atoms of q1..qn and the reconstruction identities.
int cmd_atoms(std::size_t n, std::string const& prefix, std::ostream& out, std::ostream& err);

/// Rule sets: pi, proj, proj-commute, cuntz:<n>, el:<rows>, ultragraph:<file>.
RuleSet ruleset_by_name(std::string const& name, Term const& t);
int cmd_normalize(std::string const& term, std::string const& ruleset, std::ostream& out, std::ostream& err,
                  std::ostream* trace = nullptr);

/// Compatible paths of a 0-1 matrix (rows spec) or an ultragraph file.
int cmd_paths(std::string const& source, std::size_t length, std::ostream& out, std::ostream& err);

}  // namespace ucstar
