// ucstar: check presentations against truncated models, list projection
// atoms, normalize terms.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ucstar/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ucstar: generators, relations and truncated representations"};
  app.require_subcommand(1);

  ucstar::RunConfig cfg;
  std::string file;
  std::string format = "text";
  std::vector<std::size_t> schedule;
  std::size_t depth = 0;
  std::size_t letters = 0;
  auto* check = app.add_subcommand("check", "run every relation check of a presentation file");
  check->add_option("file", file, "presentation file")->required();
  check->add_option("--tol", cfg.tol, "norm tolerance")->capture_default_str();
  check->add_option("--eps", cfg.eps, "SOT convergence threshold")->capture_default_str();
  check->add_option("--schedule", schedule, "SOT schedule, e.g. 1,2,3")->delimiter(',');
  check->add_option("--depth", depth, "override model depth L");
  check->add_option("--letters", letters, "override letter count m");
  check->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));

  std::size_t n = 0;
  std::string prefix = "q";
  auto* atoms = app.add_subcommand("atoms", "atoms of n commuting projections");
  atoms->add_option("n", n, "number of projections")->required();
  atoms->add_option("--prefix", prefix, "generator prefix")->capture_default_str();

  std::string term, rules;
  std::string trace_file;
  auto* norm = app.add_subcommand("normalize", "normal form of a term");
  norm->add_option("term", term, "term text, e.g. \"s.s'.s\"")->required();
  norm->add_option("rules,--rules", rules, "pi | proj | proj-commute | cuntz:<n> | el:<rows> | ultragraph:<file>");
  norm->add_option("--trace", trace_file, "write rewrite steps to this file ('-' for stderr)");

  std::string source;
  std::size_t length = 1;
  auto* paths = app.add_subcommand("paths", "compatible paths of a 0-1 matrix or ultragraph");
  paths->add_option("source", source, "matrix rows (11,10) or ultragraph file")->required();
  paths->add_option("length", length, "path length")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*check) {
    if (!schedule.empty()) cfg.schedule = schedule;
    if (depth) cfg.depth = depth;
    if (letters) cfg.letters = letters;
    cfg.format = format == "machine" ? ucstar::OutputFormat::machine : ucstar::OutputFormat::text;
    return ucstar::cmd_check(file, cfg, std::cout, std::cerr);
  }
  if (*atoms) return ucstar::cmd_atoms(n, prefix, std::cout, std::cerr);
  if (*norm) {
    if (rules.empty()) {
      std::cerr << "error: no rule set given\n";
      return 2;
    }
    std::ofstream tf;
    std::ostream* trace = nullptr;
    if (trace_file == "-") {
      trace = &std::cerr;
    } else if (!trace_file.empty()) {
      tf.open(trace_file);
      trace = &tf;
    }
    return ucstar::cmd_normalize(term, rules, std::cout, std::cerr, trace);
  }
  if (*paths) return ucstar::cmd_paths(source, length, std::cout, std::cerr);
  return 2;
}
