#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "motivic/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = motivic::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("sym-power") {
  auto r = cli({"sym-power", "1+7L+L^2", "2"});
  CHECK(r.code == 0);
  auto j = json_of(r);
  CHECK(j["powers"][1] == "1 + 7*L + 29*L^2 + 7*L^3 + L^4");

  auto one = json_of(cli({"sym-power", "1", "5"}));
  for (const auto& c : one["powers"]) CHECK(c == "1");

  auto v = cli({"sym-power", "1+[V]", "2", "--table", fixture("odp_table.toml")});
  CHECK(v.code == 2);
  CHECK(v.err.find("measure") != std::string::npos);
  CHECK(v.err.find("--sym2") != std::string::npos);

  CHECK(cli({"sym-power", "1+L", "9"}).code == 1);
  CHECK(cli({"--truncation", "9", "sym-power", "1+L", "9"}).code == 0);
  CHECK(cli({"sym-power", "1+", "2"}).code == 1);
}

TEST_CASE("truncation from the environment") {
  setenv("MOTIVIC_TRUNCATION", "3", 1);
  CHECK(cli({"sym-power", "1+L", "4"}).code == 1);
  CHECK(cli({"sym-power", "1+L", "3"}).code == 0);
  setenv("MOTIVIC_TRUNCATION", "junk", 1);
  CHECK(cli({"sym-power", "1+L", "2"}).code == 1);
  unsetenv("MOTIVIC_TRUNCATION");
}

TEST_CASE("measure") {
  auto p = json_of(cli({"measure", "1+7L+L^2", "--sym2"}));
  CHECK(p["value"] == "1 + 7*t^2 + t^4");
  CHECK(p["sym2"] == "1 + 7*t^2 + 29*t^4 + 7*t^6 + t^8");
  auto hd = json_of(cli({"measure", "1-L+L^3+L[V]", "--kind", "hodge-deligne", "--table", fixture("odp_table.toml")}));
  CHECK(hd["value"] == "1 - 4*u^2*v - 4*u*v^2 + u^2*v^2 + u^3*v^3");
  auto pc = json_of(cli({"measure", "1+2L+3L^2+2L^3+L^4", "--kind", "point-count", "--q", "2"}));
  CHECK(pc["value"] == "49");
  CHECK(cli({"measure", "1+L", "--kind", "point-count", "--q", "6"}).code == 1);
  CHECK(cli({"measure", "1+L", "--kind", "nonsense"}).code == 1);
}

TEST_CASE("check-yfy fixtures and exit codes") {
  auto cubic = cli({"check-yfy", fixture("cubic_surface.toml")});
  CHECK(cubic.code == 0);
  auto j = json_of(cubic);
  CHECK(j["fano_report"]["p_fano"] == "27");
  CHECK(j["fano_report"]["dim_fano"] == 0);
  CHECK(j["fano_class"]["fano_class"] == "27");

  auto pencil = cli({"check-yfy", fixture("quadric_pencil.toml")});
  CHECK(pencil.code == 2);
  CHECK(json_of(pencil)["verdict"]["branch"] == "excluded_family_case");

  CHECK(cli({"check-yfy", fixture("malformed.toml")}).code == 1);
  CHECK(cli({"check-yfy", fixture("does_not_exist.toml")}).code == 1);

  // divisibility violation from odd cohomology
  CHECK(cli({"check-yfy", "--poincare", "1+t+t^2+t^3+t^4", "--m", "2"}).code == 2);
  CHECK(cli({"check-yfy", "--poincare", "1+7t^2+t^4"}).code == 1);
  CHECK(cli({"check-yfy", "--class", "1+7L+L^2", "--m", "2"}).code == 0);
}

TEST_CASE("batch mode is ordered by filename") {
  auto r = cli({"check-yfy", "--batch", fixture("batch")});
  CHECK(r.code == 2);
  auto j = json_of(r);
  REQUIRE(j.size() == 3);
  std::vector<std::string> files;
  for (const auto& e : j) files.push_back(e["file"]);
  CHECK(std::is_sorted(files.begin(), files.end()));
  CHECK(j[0]["exit_code"] == 0);
  CHECK(j[1]["exit_code"] == 1);
  CHECK(j[2]["exit_code"] == 2);
  // repeated runs give the same bytes
  for (int i = 0; i < 5; ++i) CHECK(cli({"check-yfy", "--batch", fixture("batch")}).out == r.out);
  CHECK(cli({"check-yfy", "--batch", fixture("cubic_surface.toml")}).code == 1);
}

TEST_CASE("classify") {
  auto h = cli({"classify", fixture("hypersurface.toml")});
  CHECK(h.code == 0);
  CHECK(json_of(h)["verdict"]["branch"] == "cubic_hypersurface");
  CHECK(json_of(h)["expected_fano_dim"] == 12);
  auto c = cli({"classify", fixture("ci22.toml")});
  CHECK(c.code == 2);
  CHECK(json_of(c)["verdict"]["branch"] == "excluded_22_ci");
  CHECK_FALSE(json_of(c)["verdict"].contains("citations"));
  auto e = json_of(cli({"--explain", "classify", fixture("ci22.toml")}));
  CHECK_FALSE(e["verdict"]["citations"].empty());
  CHECK(cli({"classify", fixture("cubic_surface.toml")}).code == 1);
}

TEST_CASE("kernel") {
  auto r = cli({"kernel", "t1=1+7x+x^2", "t2=1+7x+29x^2+7x^3+x^4", "--member", "t1^2 + (-7x+27)t1 - t2 - 189x - 27",
                "--equals", "t1-1-7x-x^2", "--equals", "t2-1-7x-29x^2-7x^3-x^4"});
  CHECK(r.code == 0);
  auto j = json_of(r);
  CHECK(j["members"][0]["member"] == true);
  CHECK(j["equals"] == true);
  CHECK(cli({"kernel", "t1"}).code == 1);
  auto g = json_of(cli({"kernel", "t1=x^2", "--order", "grevlex"}));
  CHECK(g["kernel"]["order"] == "grevlex");
}

TEST_CASE("case-study") {
  auto r = cli({"case-study", "odp-threefold"});
  CHECK(r.code == 0);
  CHECK(json_of(r)["overall"] == true);
  CHECK(cli({"case-study", "cubic-surface"}).code == 0);
  auto bad = cli({"case-study", "nope"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("cubic-surface") != std::string::npos);
  CHECK(bad.err.find("nongen") != std::string::npos);
  // a failing certificate is a mathematical conclusion
  CHECK(cli({"case-study", "quadric-family", "--m", "5"}).code == 2);
}

TEST_CASE("generated-by") {
  auto yes = json_of(cli({"generated-by", "5*(a+b)^2 - 2*(a+b)", "--by", "a+b"}));
  CHECK(yes["generated"] == true);
  CHECK(yes["a"] == "-2*X1 + 5*X1^2");
  auto no = cli({"generated-by", "x^3", "--by", "x^2"});
  CHECK(no.code == 0);
  CHECK(json_of(no)["generated"] == false);
}

TEST_CASE("config files") {
  auto r = cli({"--config", fixture("config_text.toml"), "sym-power", "1+L", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("[c^(1)]", 0) == 0);
  // the command line wins over the file
  auto j = cli({"--config", fixture("config_text.toml"), "--format", "json", "sym-power", "1+L", "2"});
  CHECK_NOTHROW(json_of(j));
  CHECK(cli({"--config", fixture("malformed.toml"), "sym-power", "1", "1"}).code == 1);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("JSON output round-trips byte for byte") {
  std::vector<std::vector<std::string>> runs = {
      {"sym-power", "1+7L+L^2", "3"},
      {"measure", "1-L+L^3+L[V]", "--kind", "hodge-deligne", "--sym2", "--table", fixture("odp_table.toml")},
      {"check-yfy", fixture("cubic_surface.toml")},
      {"check-yfy", "--batch", fixture("batch")},
      {"--explain", "classify", fixture("ci22.toml")},
      {"kernel", "t1=1+7x+x^2", "t2=x^3"},
      {"--explain", "case-study", "nongen"},
      {"case-study", "plane-family", "--m", "7"},
      {"generated-by", "x^4+x^2", "--by", "x^2"},
  };
  for (const auto& args : runs) {
    auto r = cli(args);
    CHECK(nlohmann::json::parse(r.out).dump(2) + "\n" == r.out);
  }
}
