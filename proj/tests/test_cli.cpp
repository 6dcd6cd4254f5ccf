#include "ghecke/cli.hpp"
#include "ghecke/config.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ghecke;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("ghecke_unit_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

fs::path write(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void expect_error_at(const std::string& text, std::size_t line, std::size_t column) {
  try {
    parse_config(text, "t.cfg");
    FAIL("no error for: " << text);
  } catch (const ConfigError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("parse a full configuration") {
    auto cfg = parse_config(
        "# comment\n"
        "datum { type=\"A1xA1\", k={alpha1=1, alpha2=3/2} }\n"
        "gamma { g1={perm=[2,1], matrix=[[0,1],[1,0]]} }\n"
        "run { command=\"hp\", truncation=8, n_max=3 }\n"
        "induce { P=[1], delta=\"St\", lambda_re=[0,1/2], extended=false }\n"
        "molien { class=2, form_degree=1 }\n");
    CHECK(cfg.type == "A1xA1");
    REQUIRE(cfg.k.has_value());
    CHECK((*cfg.k)[1] == Rational(3, 2));
    CHECK(cfg.gamma.size() == 1);
    CHECK(cfg.command == "hp");
    CHECK(cfg.truncation == 8);
    CHECK(cfg.n_max == 3);
    CHECK(cfg.induce.subset == std::vector<std::size_t>{0});
    CHECK(cfg.induce.delta == "St");
    CHECK_FALSE(cfg.induce.extended);
    CHECK(cfg.molien.class_index == std::optional<std::size_t>{1});
    CHECK(cfg.group()->size() == 8);
    CHECK(cfg.datum().rank() == 2);
  }

  TEST_CASE("positions of errors") {
    expect_error_at("datum { type=\"A1\", k={alpha2=1} }", 1, 23);
    expect_error_at("datum { type=\"A1\",\n  colour=1 }", 2, 3);
    expect_error_at("weather { }", 1, 1);
    expect_error_at("run { command=\"fly\" }", 1, 15);
    expect_error_at("datum { type=\"A1\" \n", 2, 1);
    expect_error_at("run { truncation=1/2 }", 1, 18);
    CHECK_THROWS_AS(parse_config("datum { type=\"A1\" }").algebra(), std::invalid_argument);
  }

  TEST_CASE("parameter lists") {
    CHECK(parse_parameter_list("2", 3) == std::vector<Rational>{2, 2, 2});
    CHECK(parse_parameter_list("1,3/2", 2) == std::vector<Rational>{1, Rational(3, 2)});
    CHECK_THROWS(parse_parameter_list("1,2,3", 2));
  }

  TEST_CASE("catalog entries") {
    auto alg = parse_config("datum { type=\"A1\", k=1 }").algebra();
    auto cat = parse_catalog("entry { P=[1], dim=1, note=\"St\", s1=[[-1]], x1=[[-1/2]] }", alg);
    REQUIRE(cat.size() == 1);
    CHECK(cat[0].note == "St");
    CHECK(cat[0].subset == std::vector<std::size_t>{0});
    CHECK_THROWS(parse_catalog("entry { P=[1], dim=1, s1=[[-1]], x1=[[3]] }", alg));
    CHECK_THROWS_AS(parse_catalog("other { }", alg), ConfigError);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("exit codes and reports") {
    auto dir = scratch("exit");
    auto cfg = write(dir / "a1.cfg", "datum { type=\"A1\", k=1 }\nrun { command=\"verify-basis\" }\n");
    std::ostringstream out, err;
    CliOptions o;
    o.config_path = cfg.string();
    o.out_dir = (dir / "out").string();
    CHECK(run(o, out, err) == kExitOk);
    auto report = nlohmann::json::parse(slurp(dir / "out" / "verify-basis.json"));
    CHECK(report.at("schema") == kReportSchema);
    CHECK(fs::exists(dir / "out" / "verify-basis.csv"));
    CHECK(err.str().rfind("cache miss", 0) == 0);

    auto bad = write(dir / "bad.cfg", "datum { type=\"A1\", k={alpha2=1} }\n");
    o.config_path = bad.string();
    std::ostringstream out2, err2;
    CHECK(run(o, out2, err2) == kExitError);
    CHECK(err2.str().find("bad.cfg:1:") != std::string::npos);

    CliOptions none;
    none.out_dir = o.out_dir;
    std::ostringstream out3, err3;
    CHECK(run(none, out3, err3) == kExitError);
  }

  TEST_CASE("cache hits reproduce the report") {
    auto dir = scratch("cache");
    auto cfg = write(dir / "a2.cfg", "datum { type=\"A2\", k=1 }\n");
    CliOptions o;
    o.command = "hp";
    o.config_path = cfg.string();
    o.out_dir = (dir / "out").string();
    std::ostringstream out1, err1, out2, err2;
    CHECK(run(o, out1, err1) == kExitOk);
    const std::string first = slurp(dir / "out" / "hp.json");
    CHECK(run(o, out2, err2) == kExitOk);
    CHECK(err2.str().rfind("cache hit", 0) == 0);
    CHECK(slurp(dir / "out" / "hp.json") == first);
    CHECK(out1.str() == out2.str());
    o.k_override = "2";
    std::ostringstream out3, err3;
    CHECK(run(o, out3, err3) == kExitOk);
    CHECK(err3.str().rfind("cache miss", 0) == 0);
  }

  TEST_CASE("sha256") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  }
}
