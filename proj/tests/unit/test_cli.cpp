#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "gdc/errors.hpp"
#include "ideal_file.hpp"

using namespace gdc;
using namespace gdc::cli;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result gdc_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return default_data_dir() + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents) {
  const std::string path = std::string(GDC_TEST_TMP) + "/" + name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("ideal file parsing") {
  const auto f = parse_ideal_file("ring: x y\nchar: 0\ngens:\nx^2 - y\n\nx*y\n");
  CHECK(f.ring->size() == 2);
  CHECK(f.ideal.generators().size() == 2);

  auto expect_error = [](const std::string& text, std::size_t line, std::size_t column) {
    try {
      parse_ideal_file(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
    }
  };
  expect_error("ring: x y\nchar: 2\ngens:\nx\n", 2, 1);
  expect_error("ring: x y\nchar: 0\ngens:\nx + q\n", 4, 5);
  expect_error("ring: x y\nchar: 0\ngens:\nx\n  y +* x\n", 5, 6);
  expect_error("rng: x y\nchar: 0\ngens:\n", 1, 1);
  expect_error("ring: x x\nchar: 0\ngens:\n", 1, 1);
  expect_error("ring: x y\n", 2, 1);
}

TEST_CASE("component files") {
  const auto r = make_ring({"x", "y", "u", "v"});
  const auto vars = parse_component_file("x, y\nu,v\n", r);
  CHECK(vars.all_variable_primes());
  CHECK(vars.size() == 2);
  const auto general = parse_component_file("x - u, y - v\n", r);
  CHECK(general.has_trusted());
  CHECK_THROWS_AS(parse_component_file("x, y\nx\n", r), InvalidInput);
}

TEST_CASE("spec command examples") {
  auto r = gdc_run({"minprimes", data("patty.ideal")});
  CHECK(r.code == 0);
  CHECK(r.out.find("(x, y)") != std::string::npos);
  CHECK(r.out.find("(u, v)") != std::string::npos);

  r = gdc_run({"cdim", "--proj", data("es.ideal")});
  CHECK(r.code == 0);
  CHECK(r.out.find("c(Z) = 0") != std::string::npos);

  r = gdc_run({"verify-martina", "--weight-for", "lex", data("conca.ideal"), "--json"});
  CHECK(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["inputs"]["c_ideal"] == 3);
  CHECK(doc["inputs"]["c_initial"] == 2);
}

TEST_CASE("text and json reports carry the same numbers") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"cdim", "--proj", data("es.ideal")},
                                                                {"cdim", data("patty.ideal")},
                                                                {"verify-skinner", "--weight-for", "lex", data("conca.ideal")}}) {
    auto text = gdc_run(args);
    auto with_json = args;
    with_json.push_back("--json");
    auto js = gdc_run(with_json);
    CHECK(text.code == js.code);
    const auto doc = json::parse(js.out);
    CHECK(text.out == render_text(doc));
    if (doc.contains("c")) CHECK(text.out.find("c = " + std::to_string(doc["c"].get<int>())) != std::string::npos);
    if (doc.contains("lhs")) CHECK(text.out.find("lhs = " + std::to_string(doc["lhs"].get<int>())) != std::string::npos);
  }
}

TEST_CASE("every command runs") {
  const auto conca = data("conca.ideal");
  CHECK(gdc_run({"gb", "--order", "lex", conca}).code == 0);
  CHECK(gdc_run({"lt", "--order", "grlex", conca}).code == 0);
  CHECK(gdc_run({"initial", "--weight", "1,0,0,0,0,0", conca}).code == 0);
  CHECK(gdc_run({"homogenize", "--weight", "1,2,3,1,1,1", conca}).code == 0);
  CHECK(gdc_run({"weight-for", "--order", "lex", conca}).code == 0);
  CHECK(gdc_run({"gin", "--seed", "5", conca}).code == 0);
  CHECK(gdc_run({"verify-ks", "--weight-for", "grevlex", data("twisted-cubic.ideal")}).code == 0);
  const auto cm = gdc_run({"cm-check", "--order", "lex", conca, "--json"});
  CHECK(cm.code == 0);
  CHECK(json::parse(cm.out)["witnesses"][0]["localization"] == "(x1, x3, x4, x5, x6)");
  const auto comp = temp_file("patty.components", "x, y\nu, v\n");
  const auto sup = gdc_run({"cdim", "--component", comp, data("patty.ideal"), "--json"});
  CHECK(sup.code == 0);
  CHECK(json::parse(sup.out)["source"] == "supplied");
}

TEST_CASE("input errors exit with 2") {
  CHECK(gdc_run({"frobnicate", data("patty.ideal")}).code == 2);
  CHECK(gdc_run({"gb", "/nonexistent/file.ideal"}).code == 2);
  CHECK(gdc_run({"gb", "--order", "revlex", data("patty.ideal")}).code == 2);
  CHECK(gdc_run({"verify-martina", data("conca.ideal")}).code == 2);
  CHECK(gdc_run({"verify-martina", "--weight", "1,0,1,1,1,1", data("conca.ideal")}).code == 2);
  CHECK(gdc_run({"verify-skinner", "--weight", "1,1,1,1", data("twisted-cubic.ideal")}).code == 2);
  const auto bad = temp_file("corrupt.ideal", "ring: x1 x2\nchar: 0\ngens:\nx1 * * x2\n");
  const auto r = gdc_run({"gb", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find(":4:") != std::string::npos);
  const auto wrong = temp_file("wrong.components", "x\nu\n");
  CHECK(gdc_run({"cdim", "--component", wrong, data("patty.ideal")}).code == 2);
  const auto budget = gdc_run({"gb", "--order", "lex", "--budget", "2", data("conca.ideal"), "--json"});
  CHECK(budget.code == 2);
  CHECK(json::parse(budget.out)["kind"] == "budget");
  set_default_step_budget(0);
}

TEST_CASE("reproduce-paper with a corrupted data directory") {
  const std::string dir = std::string(GDC_TEST_TMP) + "/corrupt-data";
  std::filesystem::create_directories(dir);
  for (const char* name : {"patty.ideal", "es.ideal", "twisted-cubic.ideal"})
    std::filesystem::copy_file(data(name), dir + "/" + name, std::filesystem::copy_options::overwrite_existing);
  std::ofstream(dir + "/conca.ideal") << "ring: x1 x2 x3 x4 x5 x6\nchar: 0\ngens:\nx1*x5 + x2*x6 + x4^^2\n";
  const auto r = gdc_run({"reproduce-paper", "--data-dir", dir});
  CHECK(r.code == 2);
  CHECK(r.err.find("conca.ideal:4:") != std::string::npos);
}
