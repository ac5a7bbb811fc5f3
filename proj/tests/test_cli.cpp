#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "ucstar/cli.hpp"
#include "ucstar/term_text.hpp"

using namespace ucstar;

namespace {

std::filesystem::path data(std::string const& name) { return std::filesystem::path(UCSTAR_DATA_DIR) / name; }

std::size_t count_prefix(std::string const& text, std::string const& prefix) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) n += line.rfind(prefix, 0) == 0;
  return n;
}

struct Run {
  int code;
  std::string out, err;
};

Run check(std::string const& file, RunConfig cfg = {}) {
  std::ostringstream out, err;
  int code = cmd_check(data(file), cfg, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("presentation files round trip") {
  for (auto name : {"cuntz2.pres", "cuntz_infinity.pres", "exel_laca.pres", "ultragraph.pres", "corrupted.pres",
                    "user_pi.pres"}) {
    PresentationFile f = load_presentation(data(name));
    PresentationFile g = parse_presentation(print_presentation(f), f.base_dir);
    CHECK_MESSAGE(f == g, name);
  }
}

TEST_CASE("parse errors carry positions") {
  try {
    load_presentation(data("unknown_generator.pres"));
    build_triple(load_presentation(data("unknown_generator.pres")));
    FAIL("accepted an unknown generator");
  } catch (ConfigError const& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 14);
    CHECK(std::string(e.what()).find("unknown generator 't'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_presentation("presentation x\nfrobnicate\n"), ConfigError);
  try {
    parse_presentation("presentation x\ngenerator s wibble\n");
    FAIL("accepted a bad kind");
  } catch (ConfigError const& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("check exit codes and report lines") {
  Run c2 = check("cuntz2.pres");
  CHECK(c2.code == 0);
  CHECK(count_prefix(c2.out, "relation ") == build_triple(load_presentation(data("cuntz2.pres"))).norm_relations().size());
  CHECK(count_prefix(c2.out, "summary ") == 1);

  Run inf = check("cuntz_infinity.pres");
  CHECK(inf.code == 0);
  CHECK(inf.out.find("kind=sot") != std::string::npos);

  Run el = check("exel_laca.pres");
  CHECK(el.code == 0);
  Run ug = check("ultragraph.pres");
  CHECK(ug.code == 0);
  Run user = check("user_pi.pres");
  CHECK(user.code == 0);

  Run bad = check("corrupted.pres");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("verdict=fail") != std::string::npos);
  CHECK(bad.out.find("witness=") != std::string::npos);

  Run unknown = check("unknown_generator.pres");
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("line 3, column 14") != std::string::npos);

  CHECK(check("missing.pres").code == 2);

  RunConfig no_sched;
  no_sched.schedule = std::vector<std::size_t>{};
  CHECK(check("cuntz_infinity.pres", no_sched).code == 2);
}

TEST_CASE("machine output") {
  RunConfig cfg;
  cfg.format = OutputFormat::machine;
  Run r = check("cuntz_infinity.pres", cfg);
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.contains("records"));
  for (auto const& rec : j["records"]) {
    CHECK(rec.contains("id"));
    CHECK(rec.contains("kind"));
    CHECK(rec.contains("verdict"));
    CHECK(rec.contains("residual"));
    CHECK(rec.contains("interior_fraction"));
    if (rec["kind"] == "sot") CHECK(rec["schedule"].size() == 4);
  }
}

TEST_CASE("atoms, normalize and paths commands") {
  std::ostringstream out, err;
  CHECK(cmd_atoms(2, "q", out, err) == 0);
  CHECK(count_prefix(out.str(), "atom ") == 3);
  std::ostringstream o2, e2;
  CHECK(cmd_atoms(21, "q", o2, e2) == 2);
  CHECK(cmd_atoms(0, "q", o2, e2) == 2);

  std::ostringstream o3, e3;
  CHECK(cmd_normalize("s.s'.s", "pi", o3, e3) == 0);
  CHECK(o3.str() == "s\n");
  std::ostringstream o4, e4;
  CHECK(cmd_normalize("T1.T1'.T2.T2'", "el:11,10", o4, e4) == 0);
  CHECK(o4.str() == "0\n");
  std::ostringstream o5, e5;
  CHECK(cmd_normalize("s.(", "pi", o5, e5) == 2);
  CHECK(cmd_normalize("s", "nonsense", o5, e5) == 2);

  std::ostringstream o6, e6;
  CHECK(cmd_paths("11,10", 2, o6, e6) == 0);
  CHECK(o6.str() == "(1,1)\n(1,2)\n(2,1)\n");
  std::ostringstream o7, e7;
  CHECK(cmd_paths(data("three_vertex.ug").string(), 1, o7, e7) == 0);
  CHECK(count_prefix(o7.str(), "(") == 4);
}
