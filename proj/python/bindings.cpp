#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "btau/suite.hpp"

namespace py = pybind11;
using namespace btau;

namespace {

std::vector<std::string> coefficients(const QSeries& s) {
  std::vector<std::string> out;
  for (const auto& c : s.coeffs()) out.push_back(to_string(c));
  return out;
}

py::dict qdim_report(const QDimReport& r) {
  py::dict d;
  d["tag"] = r.tag;
  d["l"] = r.l;
  d["order"] = r.order;
  d["lhs"] = coefficients(r.lhs);
  d["rhs"] = coefficients(r.rhs);
  d["equal_through"] = r.equal_through;
  d["equal"] = r.equal();
  return d;
}

std::vector<Rational> parse_all(const std::vector<std::string>& values) {
  std::vector<Rational> out;
  for (const auto& v : values) out.push_back(parse_rational(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact checks for charged free bosons and their tau functions";

  py::register_exception<Error>(m, "BtauError", PyExc_ValueError);

  m.def(
      "verify_identity",
      [](const std::string& identity, int l, int order) { return qdim_report(verify_identity(parse_identity(identity), l, order)); },
      py::arg("identity"), py::arg("l") = 0, py::arg("order") = 40);

  m.def(
      "verify_space",
      [](const std::string& space, int l, int order) {
        Space s;
        if (space == "M") s = Space::M;
        else if (space == "Fbar") s = Space::Fbar;
        else if (space == "F") s = Space::F;
        else throw Error("unknown space");
        return qdim_report(verify_space(s, l, order));
      },
      py::arg("space"), py::arg("l") = 0, py::arg("order") = 40);

  m.def(
      "fock_census", [](int l, int order) { return coefficients(fock_census(l, order)); }, py::arg("l"), py::arg("order"));

  m.def(
      "borchardt",
      [](const std::vector<std::string>& z, const std::vector<std::string>& w) {
        const Outcome o = borchardt_record(PointConfig{parse_all(z), parse_all(w)});
        return o.detail.dump();
      },
      py::arg("z"), py::arg("w"),
      "JSON record of one Borchardt evaluation; points are rational strings such as \"-3/2\".");

  m.def("suite_names", &suite_names);

  m.def(
      "run_suite",
      [](const std::string& suite, int degree, int p_window, int param_order, int order, std::uint64_t seed,
         std::optional<int> trials, std::optional<int> l, std::optional<int> n, std::optional<std::string> identity,
         int threads) {
        RunConfig cfg;
        cfg.degree = degree;
        cfg.p_window = p_window;
        cfg.param_order = param_order;
        cfg.order = order;
        cfg.seed = seed;
        cfg.trials = trials;
        cfg.l = l;
        cfg.n = n;
        cfg.identity = identity;
        cfg.json = true;
        cfg.validate();
        SuiteReport report;
        {
          py::gil_scoped_release release;
          report = run_suite(suite, cfg, threads > 0 ? threads : worker_count());
        }
        return emit(report, true);
      },
      py::arg("suite"), py::kw_only(), py::arg("degree") = 8, py::arg("p_window") = 6, py::arg("param_order") = 3,
      py::arg("order") = 40, py::arg("seed") = 0, py::arg("trials") = py::none(), py::arg("l") = py::none(),
      py::arg("n") = py::none(), py::arg("identity") = py::none(), py::arg("threads") = 0,
      "Runs a suite and returns its JSON report text.");
}
