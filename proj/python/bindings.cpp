#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wlnash/cycles.hpp"
#include "wlnash/equilibrium.hpp"
#include "wlnash/game.hpp"
#include "wlnash/harness.hpp"
#include "wlnash/json_io.hpp"
#include "wlnash/lemke_howson.hpp"
#include "wlnash/regime.hpp"

namespace py = pybind11;
using namespace wlnash;

namespace {

// Structured results cross the boundary as JSON documents; fractions stay
// "num/den" strings and the Python package turns them into Fraction.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

std::vector<std::vector<int>> rows_of(const BitMatrix& m) {
  std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.test(i, j) ? 1 : 0;
  return out;
}

}  // namespace

PYBIND11_MODULE(_wlnash, m) {
  m.doc() = "Exact Nash equilibria of win-lose bimatrix games";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<WinLoseGame>(m, "Game")
      .def(py::init(&WinLoseGame::from_rows), py::arg("a"), py::arg("b"))
      .def_property_readonly("n", &WinLoseGame::n)
      .def_property_readonly("a", [](const WinLoseGame& g) { return rows_of(g.a_bits()); })
      .def_property_readonly("b", [](const WinLoseGame& g) { return rows_of(g.b_bits()); })
      .def("to_wlg",
           [](const WinLoseGame& g) {
             std::ostringstream out;
             write_wlg(out, g);
             return out.str();
           })
      .def_static("from_wlg",
                  [](const std::string& text) {
                    std::istringstream in(text);
                    return read_wlg(in);
                  })
      .def("__eq__", [](const WinLoseGame& x, const WinLoseGame& y) { return x == y; })
      .def("__repr__", [](const WinLoseGame& g) { return "Game(n=" + std::to_string(g.n()) + ")"; });

  m.def("generate", [](std::size_t n, double p, std::uint64_t seed) { return generate_game({n, p, seed}); },
        py::arg("n"), py::arg("p"), py::arg("seed") = 0);

  m.def("pne_search",
        [](const WinLoseGame& g) -> std::optional<std::pair<std::size_t, std::size_t>> {
          if (auto pp = pne_search(g)) return std::make_pair(pp->row, pp->col);
          return std::nullopt;
        });

  m.def("classify_regime", [](std::uint64_t n, double p) { return to_py(to_json(classify_regime(n, p))); },
        py::arg("n"), py::arg("p"));

  m.def(
      "find_stable_cycle",
      [](const WinLoseGame& g, std::size_t ell, std::size_t budget) -> py::object {
        const auto res = find_stable_cycle(to_digraph(g), ell, budget);
        if (!res.cycle) return py::none();
        return to_py(to_json(*res.cycle));
      },
      py::arg("game"), py::arg("ell"), py::arg("budget") = 0);

  m.def(
      "solve_lh",
      [](const WinLoseGame& g, std::size_t label) {
        const auto r = solve_lh(g, label);
        return to_py(Json{{"profile", to_json(r.profile)}, {"pivots", r.pivots}, {"path", r.path}});
      },
      py::arg("game"), py::arg("label") = 1);

  m.def(
      "solve",
      [](const WinLoseGame& g, std::optional<double> p, std::optional<int> force_ell,
         std::size_t label, bool exhaustive_supports) {
        BenchConfig c;
        c.n = g.n();
        c.p = p.value_or(game_density(g));
        c.force_ell = force_ell;
        const RegimePlan plan = bench_plan(c);
        const auto r = run_generic(g, plan, RunOptions{exhaustive_supports, label, 0, false});
        Json rec = to_json(r.record);
        rec["p"] = c.p;
        return to_py(Json{{"profile", to_json(r.profile)}, {"plan", to_json(plan)}, {"record", rec}});
      },
      py::arg("game"), py::arg("p") = std::nullopt, py::arg("force_ell") = std::nullopt,
      py::arg("label") = 1, py::arg("exhaustive_supports") = false);

  m.def("verify", [](const WinLoseGame& g, const py::object& profile) {
    return to_py(to_json(verify_ne(g, profile_from_json(from_py(profile)))));
  });

  m.def("bounds", [](double n, double p, int ell) { return to_py(bounds_report(n, p, ell)); },
        py::arg("n"), py::arg("p"), py::arg("ell") = 2);

  m.def(
      "bench",
      [](std::size_t n, double p, std::size_t trials, std::uint64_t seed, std::size_t threads,
         bool deterministic) {
        BenchConfig c;
        c.n = n;
        c.p = p;
        c.trials = trials;
        c.base_seed = seed;
        c.threads = threads;
        c.deterministic = deterministic;
        BenchResult res;
        {
          py::gil_scoped_release release;
          res = bench(c);
        }
        Json records = Json::array();
        for (const auto& r : res.records) records.push_back(to_json(r));
        return to_py(Json{{"records", records}, {"summary", to_json(res.summary)}});
      },
      py::arg("n"), py::arg("p"), py::arg("trials") = 1, py::arg("seed") = 0,
      py::arg("threads") = 1, py::arg("deterministic") = false);

  m.def("oracle_sweep", [](std::size_t n_max) {
    SweepReport rep;
    {
      py::gil_scoped_release release;
      rep = oracle_sweep(n_max);
    }
    return to_py(to_json(rep));
  });
}
