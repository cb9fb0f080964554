#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bgglab/suite.hpp"

using namespace bgglab;

namespace {

struct Flags {
  std::optional<int> n_max, s_max, t_min, t_max, oracle_points, rank;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> type, weight, parabolic, chi, out;
  std::string config;
};

void add_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON file with default parameters");
  sub->add_option("--n-max", f.n_max, "largest truncation n");
  sub->add_option("--s-max", f.s_max, "largest truncation s");
  sub->add_option("--t-min", f.t_min, "lowest weight index in the cut window");
  sub->add_option("--t-max", f.t_max, "highest weight index in the cut window");
  sub->add_option("--oracle-points", f.oracle_points, "specializations per symbolic rank");
  sub->add_option("--seed", f.seed, "seed for the oracle points and random maps");
  sub->add_option("--type", f.type, "root system type (A or C)");
  sub->add_option("--rank", f.rank, "root system rank");
  sub->add_option("--weight", f.weight, "Dynkin labels, comma separated");
  sub->add_option("--parabolic", f.parabolic, "simple roots in the Levi, 1-based, comma separated");
  sub->add_option("--chi", f.chi, "central character: k, other, or an affine weight such as -k-2");
  sub->add_option("--out", f.out, "write the report here instead of stdout");
}

template <class T>
void take(const json& j, const char* key, std::optional<T>& dst) {
  if (j.contains(key) && !j[key].is_null()) dst = j[key].get<T>();
}

RunConfig resolve(const Flags& f) {
  RunConfig cfg;
  if (const char* env = std::getenv("BGGLAB_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw ConfigError(std::string("BGGLAB_SEED is not an unsigned integer: ") + env);
    }
  }
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw ConfigError("cannot read config file " + f.config);
    json j;
    try {
      j = json::parse(in);
      take(j, "n_max", cfg.n_max);
      take(j, "s_max", cfg.s_max);
      take(j, "t_min", cfg.t_min);
      take(j, "t_max", cfg.t_max);
      if (j.contains("oracle_points")) cfg.oracle_points = j["oracle_points"].get<int>();
      if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
      if (j.contains("type")) cfg.type = j["type"].get<std::string>();
      if (j.contains("rank")) cfg.rank = j["rank"].get<int>();
      if (j.contains("weight")) cfg.weight = j["weight"].get<std::string>();
      if (j.contains("parabolic")) cfg.parabolic = j["parabolic"].get<std::string>();
      if (j.contains("chi")) cfg.chi = j["chi"].get<std::string>();
      if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    } catch (const json::exception& e) {
      throw ConfigError("config file " + f.config + ": " + e.what());
    }
  }
  if (f.n_max) cfg.n_max = f.n_max;
  if (f.s_max) cfg.s_max = f.s_max;
  if (f.t_min) cfg.t_min = f.t_min;
  if (f.t_max) cfg.t_max = f.t_max;
  if (f.oracle_points) cfg.oracle_points = *f.oracle_points;
  if (f.seed) cfg.seed = *f.seed;
  if (f.type) cfg.type = *f.type;
  if (f.rank) cfg.rank = *f.rank;
  if (f.weight) cfg.weight = *f.weight;
  if (f.parabolic) cfg.parabolic = *f.parabolic;
  if (f.chi) cfg.chi = *f.chi;
  if (f.out) cfg.out = *f.out;
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for truncated BGG-type complexes of sl2 modules"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::pair<std::string, Report (*)(const RunConfig&)>> commands = {
      {"kernel", cmd_kernel},     {"cut", cmd_cut},           {"shape", cmd_shape},
      {"suite", cmd_suite},       {"homology", cmd_homology}, {"pairing", cmd_pairing}};
  const std::map<std::string, std::string> help = {
      {"kernel", "kernel dimension, generator and surjectivity of the Koszul-type map"},
      {"cut", "split off the chi part of B_{n,s} and check it carries the homology"},
      {"shape", "Weyl group dot orbits and parabolic BGG shapes"},
      {"suite", "run all acceptance criteria"},
      {"homology", "Betti numbers of B_{n,s}"},
      {"pairing", "homology pairing and adjointness"}};
  for (const auto& [name, fn] : commands) add_flags(app.add_subcommand(name, help.at(name)), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (const auto& [name, fn] : commands) {
    if (!app.got_subcommand(name)) continue;
    try {
      const RunConfig cfg = resolve(flags);
      const Report rep = fn(cfg);
      const std::string text = rep.dump();
      if (cfg.out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(cfg.out);
        if (!out) throw ConfigError("cannot write " + cfg.out);
        out << text;
      }
      return rep.all_pass() ? 0 : 1;
    } catch (const ConfigError& e) {
      std::cerr << "bgg-lab: " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "bgg-lab: " << e.what() << "\n";
      return 1;
    }
  }
  return 2;
}
