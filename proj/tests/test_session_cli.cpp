#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gradec/cli.hpp"
#include "gradec/session.hpp"
#include "support.hpp"

using namespace gradec;
using namespace gradec::testing;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::path(::testing::TempDir()) / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
  auto pos = text.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  if (pos != std::string::npos) text.replace(pos, from.size(), to);
  return text;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Session, HeckeFixtureShape) {
  Session s = load_fixture("hecke_s2");
  EXPECT_EQ(s.algebra->dim(), 2u);
  EXPECT_EQ(s.modules.size(), 2u);
  EXPECT_EQ(s.specializations.size(), 2u);
  EXPECT_EQ(s.towers.size(), 1u);
}

TEST(Session, HeckeS3FixtureHasThreeSimples) {
  Session s = load_fixture("hecke_s3_e3");
  std::vector<std::size_t> dims;
  for (const auto& m : s.generic_modules()) dims.push_back(m.dim());
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 1, 2}));
  std::size_t squares = 0;
  for (auto d : dims) squares += d * d;
  EXPECT_EQ(squares, s.algebra->dim());
}

TEST(Session, EveryFixtureValidates) {
  for (const auto& name : fixture_names()) {
    Session s = load_fixture(name);
    for (const auto& [object, report] : validate_session(s)) EXPECT_TRUE(report.ok()) << name << " " << object;
  }
  EXPECT_EQ(error_of([] { fixture_text("missing"); }), ErrorKind::UnknownFixture);
}

TEST(Session, EmitIsIdempotent) {
  for (const auto& name : fixture_names()) {
    std::string once = emit_session(parse_session(fixture_text(name)));
    std::string twice = emit_session(parse_session(once));
    EXPECT_EQ(once, twice) << name;
  }
}

TEST(Session, EmptyObjectListsRequiredKeys) {
  try {
    parse_session("{}");
    FAIL() << "accepted an empty session";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SchemaError);
    for (const auto& key : {"name", "ring", "algebra"}) EXPECT_TRUE(contains(e.what(), key)) << e.what();
  }
}

TEST(Session, UndeclaredVariableIsLocated) {
  std::string text = replace_once(fixture_text("hecke_s2"), "\"T\": \"v-1\"", "\"T\": \"w-1\"");
  try {
    parse_session(text);
    FAIL() << "accepted an undeclared variable";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UndeclaredVariable);
    EXPECT_TRUE(contains(e.what(), "T*T")) << e.what();
  }
}

TEST(Session, StructuralErrors) {
  std::string fermion = fixture_text("fermion");
  EXPECT_EQ(error_of([&] { parse_session(replace_once(fermion, "\"format\"", "\"colour\": 1, \"format\"")); }),
            ErrorKind::SchemaError);
  EXPECT_EQ(error_of([&] { parse_session(replace_once(fermion, "\"name\": \"a1\"", "\"name\": \"a0\"")); }),
            ErrorKind::ValidationError);
  EXPECT_EQ(error_of([&] { parse_session(replace_once(fermion, "\"theta\": \"a0\"", "\"theta\": \"nope\"")); }),
            ErrorKind::UnknownName);
  EXPECT_EQ(error_of([&] { parse_session("{ not json"); }), ErrorKind::SyntaxError);
  // division is refused in structure constants
  EXPECT_EQ(error_of([&] { parse_session(replace_once(fermion, "\"y\": \"a\"", "\"y\": \"a/2\"")); }),
            ErrorKind::SyntaxError);
}

TEST(Cli, FermionDecomposeJson) {
  CliResult r = run({"--fixture", "fermion", "decompose", "--module", "V", "--spec", "a0", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "\"matrix\":[[{\"0\":1,\"1\":1}]]")) << r.out;
}

TEST(Cli, FactorcheckReportsAllMatrices) {
  CliResult r = run({"--fixture", "hecke_s2", "factorcheck", "--tower", "t1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "PASS: D_θ′ = D_{θ,θ′}·D_θ")) << r.out;
  for (const auto& label : {"D_theta (v1q)", "D_theta' (v1f2)", "D_theta,theta' (through ZZ)"}) EXPECT_TRUE(contains(r.out, label)) << label;
}

TEST(Cli, CorruptedSessionFailsValidation) {
  std::string text = replace_once(fixture_text("fermion"), "\"degrees\": [0, 1],", "\"degrees\": [0, 0],");
  std::string path = write_temp("corrupted.json", text);
  CliResult r = run({"--session", path, "validate"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "action of x (degree 1) is not homogeneous: entry (1,0)")) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"--fixture", "fermion", "validate"}).code, 0);
  EXPECT_EQ(run({"--fixture", "nope", "validate"}).code, 1);
  EXPECT_EQ(run({"--fixture", "fermion", "frobnicate"}).code, 1);
  EXPECT_EQ(run({"--fixture", "fermion", "decompose"}).code, 1);  // --spec is required
  CliResult nonsplit = run({"--fixture", "nonsplit_rotation", "simples"});
  EXPECT_EQ(nonsplit.code, 2);
  EXPECT_TRUE(contains(nonsplit.err, "NotSplit")) << nonsplit.err;
  CliResult json = run({"--fixture", "nonsplit_rotation", "simples", "--format", "json"});
  EXPECT_TRUE(contains(json.out, "\"kind\":\"NotSplit\"")) << json.out;
  EXPECT_EQ(run({"--session", write_temp("empty.json", "{}"), "validate"}).code, 1);
}

TEST(Cli, EveryFixtureRunsThePipeline) {
  for (const auto& name : fixture_names()) {
    Session s = load_fixture(name);
    EXPECT_EQ(run({"--fixture", name, "validate"}).code, 0) << name;
    for (const auto& theta : s.specializations) {
      for (const auto& cmd : {"specialize", "simples", "decompose", "diagram"}) {
        CliResult r = run({"--fixture", name, cmd, "--spec", theta.name});
        EXPECT_EQ(r.code, 0) << name << " " << cmd << " " << theta.name << ": " << r.err;
      }
    }
    for (const auto& t : s.towers) EXPECT_EQ(run({"--fixture", name, "factorcheck", "--tower", t.name}).code, 0);
  }
}

TEST(Cli, JsonOutputIsByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--fixture", "hecke_s3_e3", "decompose", "--spec", "zeta3", "--format", "json", "--seed", "5"},
           {"--fixture", "hecke_s2_tower", "factorcheck", "--tower", "t2", "--format", "json"},
           {"--fixture", "fermion", "fingerprint", "--format", "json"}}) {
    CliResult a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, FixturesListing) {
  CliResult r = run({"fixtures"});
  EXPECT_EQ(r.code, 0);
  for (const auto& name : fixture_names()) EXPECT_TRUE(contains(r.out, name));
  CliResult shown = run({"fixtures", "--show", "fermion"});
  EXPECT_EQ(shown.code, 0);
  EXPECT_NO_THROW(parse_session(shown.out));
}
