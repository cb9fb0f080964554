#include <doctest.h>

#include "bgglab/report.hpp"

using namespace bgglab;

TEST_CASE("report layout") {
  Report r("kernel", json{{"n_max", 3}}, 7);
  r.add("a", true, {{"x", 1}});
  r.add({"b", Status::Skipped, json::object()});
  r.note("casimir", "H^2+2H+4u-u+");
  const json j = r.to_json();
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"schema", "version", "command", "seed", "parameters", "notes", "checks", "summary"});
  CHECK(j["schema"] == 1);
  CHECK(j["version"] == "bgg-lab 0.1.0");
  CHECK(j["seed"] == 7);
  CHECK(j["checks"][1]["status"] == "skipped");
  CHECK(j["summary"]["all_pass"] == true);
  CHECK(r.count(Status::Pass) == 1);
  r.add("c", false);
  CHECK_FALSE(r.all_pass());
  CHECK(r.dump().back() == '\n');
  CHECK(r.dump() == r.dump());
}

TEST_CASE("exact values serialize as strings") {
  CHECK(to_json(make_rational(-3, 4)) == "-3/4");
  CHECK(to_json(RatFunc::linear(1, -1).inverse()).get<std::string>().find("k-1") != std::string::npos);
  QkMatrix m(1, 2);
  m(0, 1) = RatFunc::k();
  CHECK(to_json(m) == json::array({json::array({"0", "k"})}));
  CHECK(to_json(std::vector<std::size_t>{1, 2}) == json::array({1, 2}));
}
