#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bgglab/suite.hpp"

namespace py = pybind11;
using namespace bgglab;

namespace {

std::vector<std::vector<std::string>> entries(const QkMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c).str());
  return out;
}

py::list terms_of(const PBWVector& v) {
  py::list out;
  for (const auto& [key, c] : v.terms()) out.append(py::make_tuple(key.a, key.i, key.w, c.str()));
  return out;
}

PBWVector vector_from(const std::vector<std::tuple<int, int, int, std::string>>& terms) {
  PBWVector v;
  for (const auto& [a, i, w, c] : terms) v.add_term({a, i, w}, RatFunc(parse_rational(c)));
  return v;
}

std::vector<std::string> labels_of(const RootSystemData& rs, const Vec& v) {
  std::vector<std::string> out;
  for (const auto& q : ambient_to_dynkin(rs, v)) out.push_back(q.get_str());
  return out;
}

RunConfig config_from(const std::string& text) {
  const json j = json::parse(text);
  RunConfig cfg;
  auto opt = [&](const char* key, std::optional<int>& dst) {
    if (j.contains(key) && !j[key].is_null()) dst = j[key].get<int>();
  };
  opt("n_max", cfg.n_max);
  opt("s_max", cfg.s_max);
  opt("t_min", cfg.t_min);
  opt("t_max", cfg.t_max);
  if (j.contains("oracle_points")) cfg.oracle_points = j["oracle_points"].get<int>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("type")) cfg.type = j["type"].get<std::string>();
  if (j.contains("rank")) cfg.rank = j["rank"].get<int>();
  if (j.contains("weight")) cfg.weight = j["weight"].get<std::string>();
  if (j.contains("parabolic")) cfg.parabolic = j["parabolic"].get<std::string>();
  if (j.contains("chi")) cfg.chi = j["chi"].get<std::string>();
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_bgglab, m) {
  m.attr("__version__") = BGGLAB_VERSION;
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<RatFunc>(m, "RatFunc")
      .def(py::init([](const std::string& text) { return parse_affine_weight(text); }), py::arg("affine"))
      .def_static("k", &RatFunc::k)
      .def_static("linear", [](const std::string& a, const std::string& b) {
        return RatFunc::linear(parse_rational(a), parse_rational(b));
      })
      .def("__add__", [](const RatFunc& a, const RatFunc& b) { return a + b; })
      .def("__sub__", [](const RatFunc& a, const RatFunc& b) { return a - b; })
      .def("__mul__", [](const RatFunc& a, const RatFunc& b) { return a * b; })
      .def("__truediv__", [](const RatFunc& a, const RatFunc& b) { return a / b; })
      .def("__neg__", [](const RatFunc& a) { return -a; })
      .def("__eq__", [](const RatFunc& a, const RatFunc& b) { return a == b; })
      .def("__str__", &RatFunc::str)
      .def("__repr__", [](const RatFunc& f) { return "RatFunc(" + f.str() + ")"; })
      .def("at", [](const RatFunc& f, const std::string& q) { return specialize(f, parse_rational(q)).get_str(); });

  py::class_<QkMatrix>(m, "Matrix")
      .def_property_readonly("rows", &QkMatrix::rows)
      .def_property_readonly("cols", &QkMatrix::cols)
      .def("entries", &entries)
      .def("rank", [](const QkMatrix& a) { return rank(a); })
      .def("nullspace", [](const QkMatrix& a) { return nullspace(a); })
      .def("rref", [](const QkMatrix& a) { return rref(a).rref; })
      .def("__matmul__", [](const QkMatrix& a, const QkMatrix& b) { return a * b; })
      .def("__eq__", [](const QkMatrix& a, const QkMatrix& b) { return a == b; })
      .def("is_zero", &QkMatrix::is_zero)
      .def("__repr__", [](const QkMatrix& a) {
        return "Matrix(" + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ")";
      });

  m.def("xi", &xi, py::arg("N"), py::arg("n"), "Matrix of the map U_{n-1} V_{N+1} -> U_n V_N");
  m.def("kernel_generator", [](int N) { return terms_of(kernel_generator(N)); }, py::arg("N"));
  m.def("kernel_basis", &kernel_basis_from_generator, py::arg("n"), py::arg("N"));
  m.def(
      "surjectivity_witness",
      [](int N, int n, const std::vector<std::tuple<int, int, int, std::string>>& target) {
        return terms_of(surjectivity_witness(N, n, vector_from(target)));
      },
      py::arg("N"), py::arg("n"), py::arg("target"));
  m.def(
      "boundary_complex",
      [](int n, int s) {
        ComplexPtr c = build_B(n, s);
        return py::dict(py::arg("dims") = py::make_tuple(c->dim(1), c->dim(0)), py::arg("diff") = c->diff(1));
      },
      py::arg("n"), py::arg("s"));
  m.def(
      "homology_dims", [](int n, int s) { return homology(*build_B(n, s)).dims(); }, py::arg("n"), py::arg("s"));
  m.def(
      "cut",
      [](int n, int s, const std::string& chi) {
        CutResult r = bgg_cut(build_B(n, s), parse_chi(chi));
        py::dict d;
        d["sub_dims"] = py::make_tuple(r.sub->dim(1), r.sub->dim(0));
        d["quotient_dims"] = py::make_tuple(r.quotient->dim(1), r.quotient->dim(0));
        d["sub_homology"] = homology(*r.sub).dims();
        d["quotient_homology"] = homology(*r.quotient).dims();
        d["quasi_iso"] = is_quasi_iso(r.inclusion);
        d["quotient_zero_on_homology"] = is_zero_on_homology(r.projection);
        d["uncut_weights"] = r.uncut_weights;
        return d;
      },
      py::arg("n"), py::arg("s"), py::arg("chi") = "k");
  m.def("central_character", [](const std::string& weight) { return parse_chi(weight).value; }, py::arg("weight"));
  m.def(
      "specialize", [](const QkMatrix& a, const std::string& q) {
        QMatrix s = specialize(a, parse_rational(q));
        std::vector<std::vector<std::string>> out(s.rows());
        for (std::size_t r = 0; r < s.rows(); ++r)
          for (std::size_t c = 0; c < s.cols(); ++c) out[r].push_back(s(r, c).get_str());
        return out;
      },
      py::arg("matrix"), py::arg("k"));
  m.def(
      "rank_oracle",
      [](const QkMatrix& a, int points, std::uint64_t seed) {
        OracleResult r = rank_oracle(a, rank(a), points, seed);
        py::list pts;
        for (const auto& p : r.points) pts.append(py::make_tuple(p.k.get_str(), p.rank));
        return py::dict(py::arg("symbolic_rank") = r.symbolic_rank, py::arg("points") = pts,
                        py::arg("agree") = r.agree);
      },
      py::arg("matrix"), py::arg("points") = 3, py::arg("seed") = 0);

  m.def(
      "dot_orbit",
      [](const std::string& type, int rank, const std::vector<std::string>& weight) {
        RootSystemData rs = make_root_system(parse_root_type(type), rank);
        std::vector<Rational> labels;
        for (const auto& w : weight) labels.push_back(parse_rational(w));
        const Vec lam = dynkin_to_ambient(rs, labels);
        std::vector<std::pair<int, std::vector<std::string>>> out;
        for (const auto& w : generate_weyl(rs)) out.emplace_back(w.length, labels_of(rs, dot_action(rs, w, lam)));
        return out;
      },
      py::arg("type"), py::arg("rank"), py::arg("weight"));
  m.def(
      "weyl_length_histogram",
      [](const std::string& type, int rank) {
        return length_histogram(generate_weyl(make_root_system(parse_root_type(type), rank)));
      },
      py::arg("type"), py::arg("rank"));
  m.def(
      "bgg_shape",
      [](const std::string& type, int rank, const std::vector<std::string>& weight, const std::vector<int>& parabolic) {
        RootSystemData rs = make_root_system(parse_root_type(type), rank);
        std::vector<Rational> labels;
        for (const auto& w : weight) labels.push_back(parse_rational(w));
        BggShape sh = bgg_shape(rs, parabolic, dynkin_to_ambient(rs, labels));
        std::map<int, std::vector<std::vector<std::string>>> terms;
        for (const auto& [d, ws] : sh.terms)
          for (const auto& w : ws) terms[d].push_back(labels_of(rs, w));
        return py::dict(py::arg("terms") = terms, py::arg("counts") = sh.counts);
      },
      py::arg("type"), py::arg("rank"), py::arg("weight"), py::arg("parabolic") = std::vector<int>{});

  m.def("_run", [](const std::string& command, const std::string& config) {
    static const std::map<std::string, Report (*)(const RunConfig&)> commands = {
        {"kernel", cmd_kernel}, {"cut", cmd_cut},           {"shape", cmd_shape},
        {"suite", cmd_suite},   {"homology", cmd_homology}, {"pairing", cmd_pairing}};
    auto it = commands.find(command);
    if (it == commands.end()) throw ConfigError("unknown command " + command);
    RunConfig cfg = config_from(config);
    py::gil_scoped_release release;
    return it->second(cfg).dump();
  });
  m.def("_acceptance", [](std::uint64_t seed) {
    RunConfig cfg;
    cfg.seed = seed;
    py::gil_scoped_release release;
    return cmd_suite(cfg).dump();
  });
}
