// Verification drivers shared by the CLI, the acceptance test and the Python module.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bgglab/complexes.hpp"
#include "bgglab/homology.hpp"
#include "bgglab/report.hpp"
#include "bgglab/weyl.hpp"

namespace bgglab {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::optional<int> n_max;
  std::optional<int> s_max;
  std::optional<int> t_min;
  std::optional<int> t_max;
  int oracle_points = 3;
  std::uint64_t seed = 0;
  std::string type = "A";
  int rank = 1;
  std::string weight;     // Dynkin labels, comma separated
  std::string parabolic;  // 1-based simple root indices, comma separated
  std::string chi = "k";
  std::string out;

  /// Throws ConfigError on out-of-range values.
  void validate() const;
  json to_json() const;
};

/// Records every symbolic rank together with its numeric check.
class OracleLog {
 public:
  OracleLog(int points, std::uint64_t seed) : points_(points), seed_(seed) {}
  void record(const std::string& label, const QkMatrix& m, std::size_t symbolic_rank);
  const std::vector<std::pair<std::string, OracleResult>>& entries() const { return entries_; }
  bool all_agree() const;
  int points() const { return points_; }

 private:
  int points_;
  std::uint64_t seed_;
  std::vector<std::pair<std::string, OracleResult>> entries_;
};

struct SuiteContext {
  int n_cap = 8;
  int s_cap = 5;
  std::uint64_t seed = 0;
  OracleLog oracle;
  std::map<std::pair<int, int>, CutResult> cuts;

  SuiteContext(int n_cap_, int s_cap_, int oracle_points, std::uint64_t seed_)
      : n_cap(n_cap_), s_cap(s_cap_), seed(seed_), oracle(oracle_points, seed_) {}
  explicit SuiteContext(const RunConfig& cfg);
  const CutResult& cut(int n, int s);
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // 0 when the criterion carries no runtime bound
  std::function<CheckRecord(SuiteContext&)> run;
};

/// The ten acceptance criteria, in order; criterion 9 summarizes the oracle
/// records left by 1-8.
const std::vector<Criterion>& acceptance_criteria();

/// Runs fn and turns an exception into a failing record.
CheckRecord guarded(const std::string& name, const std::function<CheckRecord()>& fn);

CentralCharacter parse_chi(const std::string& text);
std::vector<Rational> parse_rational_list(const std::string& text);
std::vector<int> parse_index_list(const std::string& text);

Report cmd_kernel(const RunConfig& cfg);
Report cmd_cut(const RunConfig& cfg);
Report cmd_shape(const RunConfig& cfg);
Report cmd_suite(const RunConfig& cfg);
Report cmd_homology(const RunConfig& cfg);
Report cmd_pairing(const RunConfig& cfg);

/// Subspaces spanned by the columns agree.
bool same_column_span(const QkMatrix& a, const QkMatrix& b);

}  // namespace bgglab
