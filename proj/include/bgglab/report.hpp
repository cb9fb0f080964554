// Machine-readable reports. Exact values are rendered as strings, so a report
// never contains floating point and is byte-identical across reruns.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bgglab/linalg.hpp"
#include "bgglab/verma.hpp"

namespace bgglab {

using json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct CheckRecord {
  std::string name;
  Status status = Status::Pass;
  json data = json::object();
};

inline Status verdict(bool ok) { return ok ? Status::Pass : Status::Fail; }

class Report {
 public:
  Report(std::string command, json parameters, std::uint64_t seed);

  void add(CheckRecord rec);
  void add(std::string name, bool ok, json data = json::object());
  void note(const std::string& key, json value);

  const std::vector<CheckRecord>& checks() const { return checks_; }
  bool all_pass() const;
  std::size_t count(Status s) const;
  json to_json() const;
  std::string dump() const;

 private:
  std::string command_;
  json parameters_;
  std::uint64_t seed_;
  json notes_ = json::object();
  std::vector<CheckRecord> checks_;
};

std::string version_string();

json to_json(const Rational& q);
json to_json(const RatFunc& f);
json to_json(const QkMatrix& m);
json to_json(const PBWVector& v);
json to_json(const OracleResult& r);
json to_json(const std::vector<std::size_t>& v);

}  // namespace bgglab
