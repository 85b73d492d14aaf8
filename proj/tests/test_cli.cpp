#include <doctest.h>

#include "cli.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace coxsupport;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// Compares with tests/golden/<name>.json; COXSUPPORT_UPDATE_GOLDEN=1 rewrites the file.
void check_golden(const std::string& name, const std::vector<std::string>& args) {
  Run r = run(args);
  REQUIRE(r.code == 0);
  const std::string path = std::string(COXSUPPORT_GOLDEN_DIR) + "/" + name + ".json";
  const char* update = std::getenv("COXSUPPORT_UPDATE_GOLDEN");
  if (update && std::string(update) == "1") {
    std::ofstream(path) << r.out;
  }
  INFO("golden file " << path);
  CHECK(r.out == read_file(path));
}

void check_schema(const json& env) {
  REQUIRE(env.is_object());
  CHECK(env.at("schema") == "coxsupport/1");
  CHECK(env.at("command").at("name").is_string());
  CHECK(env.at("command").at("args").is_array());
  const auto& t = env.at("type");
  CHECK(t.at("name").is_string());
  CHECK(t.at("rank").is_number_integer());
  CHECK(t.at("order").is_string());
  CHECK(t.at("degrees").is_array());
  CHECK(env.at("result").is_object());
  for (const auto& p : env.at("provenance")) CHECK(p.is_string());
  for (const char* key : {"c", "c1", "c2"}) {
    if (env["result"].contains(key)) {
      const auto& v = env["result"][key];
      REQUIRE(v.is_string());
      CHECK_NOTHROW(parse_rational(v.get<std::string>()));
    }
  }
}

const std::vector<std::pair<std::string, std::vector<std::string>>> kGolden = {
    {"degrees_H4", {"degrees", "H4", "--json"}},
    {"roots_B2", {"roots", "B2", "--json"}},
    {"poincare_F4_two", {"poincare", "F4", "--two", "--json"}},
    {"support_B2", {"support", "B2", "--c", "1/2", "--json"}},
    {"sigma_F4", {"sigma", "F4", "--c1", "1/2", "--c2", "1/2", "--verify", "--json"}},
    {"mm_B2", {"mm", "B2", "--c1", "-1/2", "--c2", "-1/4", "--json"}},
    {"trig_B2", {"trig", "B2", "--c", "1/2", "--json"}},
    {"elliptic_H3", {"elliptic", "H3", "--m", "10", "--verify", "--json"}},
    {"oracle_quotient_B2", {"oracle", "quotient", "B2", "--c", "1/2", "--dmax", "8", "--json"}},
};

}  // namespace

TEST_CASE("golden envelopes") {
  for (const auto& [name, args] : kGolden) {
    check_golden(name, args);
    check_schema(json::parse(run(args).out));
  }
}

TEST_CASE("envelope round trip") {
  for (const auto& [name, args] : kGolden) {
    json env = json::parse(run(args).out);
    CHECK(json::parse(env.dump()) == env);
    CHECK(env["command"]["name"] == args[0]);
  }
}

TEST_CASE("command examples") {
  auto support = json::parse(run({"support", "B2", "--c", "1/2", "--json"}).out);
  CHECK(support["result"]["finite_dim"] == true);
  auto sigma = json::parse(run({"sigma", "F4", "--c1", "1/2", "--c2", "1/2", "--json"}).out);
  CHECK(sigma["result"]["member"] == true);
  CHECK(sigma["result"]["witness"] == "2a");
  auto mm = json::parse(run({"mm", "A1", "--c", "-1/2", "--numeric", "--json"}).out);
  CHECK(mm["result"]["exact"] == "Γ(2)/Γ(3/2)");
  CHECK(mm["result"]["numeric"]["value"].get<double>() == doctest::Approx(1.128379).epsilon(1e-6));
  auto fd = json::parse(run({"finite-dim", "H3", "--max", "12", "--json"}).out);
  CHECK(fd["result"]["denominators"] == json::array({2, 6, 10}));
  CHECK(run({"support", "B3", "--c1", "1/2", "--c2", "1/4", "--verify"}).code == 0);
  CHECK(run({"support", "H3", "--c", "1/10", "--verify"}).code == 0);
  CHECK(run({"poincare", "H3", "--verify"}).code == 0);
  CHECK(run({"oracle", "relations", "A2", "--c", "1/3", "--dmax", "3"}).out.find("hold") != std::string::npos);
  CHECK(run({"trig", "B2", "--c", "1/2", "--point", "1/2,1/2"}).out.find("in support: yes") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"--help"}).code == cli::kExitOk);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"degrees", "Q7"}).code == cli::kExitUsage);
  CHECK(run({"support", "A2", "--c", "0.5"}).code == cli::kExitUsage);
  CHECK(run({"support", "A2", "--c", "1/2", "--c1", "1/3"}).code == cli::kExitUsage);
  CHECK(run({"elliptic", "A2", "--m", "1"}).code == cli::kExitUsage);
  CHECK(run({"elliptic", "E8", "--m", "30", "--verify"}).code == cli::kExitScope);
  CHECK(run({"mm", "A1", "--c", "1/2", "--numeric"}).code == cli::kExitScope);
  CHECK(run({"trig", "H3", "--c", "1/2"}).code == cli::kExitScope);
  Run r = run({"elliptic", "E8", "--m", "30", "--verify"});
  CHECK(r.err.find("696729600") != std::string::npos);
}

TEST_CASE("sigma plot") {
  const auto w = CoxeterType::parse("B2");
  const auto pic = sigma_picture(w, Rational(-1), Rational(2));
  const std::string svg = cli::sigma_svg(w, Rational(-1), Rational(2), ParamPair{make_rational(1, 4), make_rational(1, 4)});
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::size_t families = 0;
  for (std::size_t pos = 0; (pos = svg.find("<title>family", pos)) != std::string::npos; ++pos) ++families;
  CHECK(families == pic.segments.size());
  CHECK(svg.find("query (1/4, 1/4)") != std::string::npos);
}
