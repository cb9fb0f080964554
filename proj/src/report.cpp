#include "bgglab/report.hpp"

#include <algorithm>

#ifndef BGGLAB_VERSION
#define BGGLAB_VERSION "0.0.0"
#endif

namespace bgglab {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

std::string version_string() { return std::string("bgg-lab ") + BGGLAB_VERSION; }

Report::Report(std::string command, json parameters, std::uint64_t seed)
    : command_(std::move(command)), parameters_(std::move(parameters)), seed_(seed) {}

void Report::add(CheckRecord rec) { checks_.push_back(std::move(rec)); }

void Report::add(std::string name, bool ok, json data) {
  checks_.push_back({std::move(name), verdict(ok), std::move(data)});
}

void Report::note(const std::string& key, json value) { notes_[key] = std::move(value); }

bool Report::all_pass() const {
  return std::none_of(checks_.begin(), checks_.end(), [](const CheckRecord& c) { return c.status == Status::Fail; });
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [s](const CheckRecord& c) { return c.status == s; }));
}

json Report::to_json() const {
  json j;
  j["schema"] = 1;
  j["version"] = version_string();
  j["command"] = command_;
  j["seed"] = seed_;
  j["parameters"] = parameters_;
  if (!notes_.empty()) j["notes"] = notes_;
  json checks = json::array();
  for (const auto& c : checks_) {
    json r;
    r["name"] = c.name;
    r["status"] = to_string(c.status);
    r["data"] = c.data;
    checks.push_back(std::move(r));
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"pass", count(Status::Pass)},
                  {"fail", count(Status::Fail)},
                  {"skipped", count(Status::Skipped)},
                  {"all_pass", all_pass()}};
  return j;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

json to_json(const Rational& q) { return q.get_str(); }

json to_json(const RatFunc& f) { return f.str(); }

json to_json(const QkMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const PBWVector& v) {
  json terms = json::array();
  for (const auto& [key, c] : v.terms()) terms.push_back({{"a", key.a}, {"i", key.i}, {"w", key.w}, {"coeff", c.str()}});
  return terms;
}

json to_json(const OracleResult& r) {
  json pts = json::array();
  for (const auto& p : r.points) pts.push_back({{"k", p.k.get_str()}, {"rank", p.rank}});
  return {{"symbolic_rank", r.symbolic_rank}, {"points", pts}, {"agree", r.agree}};
}

json to_json(const std::vector<std::size_t>& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

}  // namespace bgglab
