#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <sstream>

#include "wordmetrics/acceptance.hpp"
#include "wordmetrics/action.hpp"
#include "wordmetrics/catalog.hpp"
#include "wordmetrics/cli.hpp"
#include "wordmetrics/invariants.hpp"
#include "wordmetrics/metric.hpp"
#include "wordmetrics/spec_io.hpp"
#include "wordmetrics/star_set.hpp"
#include "wordmetrics/subset_algebra.hpp"

namespace py = pybind11;
using namespace wordmetrics;

namespace {

// Extended naturals cross the boundary as int, with infinity as math.inf.
py::object to_py(ExtNat v) {
  if (v.is_infinite()) {
    return py::float_(INFINITY);
  }
  return py::int_(v.value());
}

ExtNat from_py(const py::handle& h) {
  if (py::isinstance<py::float_>(h)) {
    const double d = h.cast<double>();
    if (std::isinf(d) && d > 0) {
      return kInfinity;
    }
    throw py::value_error("expected a nonnegative int or math.inf");
  }
  const long long v = h.cast<long long>();
  if (v < 0) {
    throw py::value_error("expected a nonnegative int or math.inf");
  }
  return ExtNat(static_cast<std::uint64_t>(v));
}

py::list to_py(const std::vector<ExtNat>& v) {
  py::list out;
  for (ExtNat x : v) {
    out.append(to_py(x));
  }
  return out;
}

py::list to_py(const MetricTable& t) {
  py::list rows;
  for (std::size_t i = 0; i < t.size; ++i) {
    py::list row;
    for (std::size_t j = 0; j < t.size; ++j) {
      row.append(to_py(t.at(i, j)));
    }
    rows.append(row);
  }
  return rows;
}

Subset in_group(const FiniteGroup& g, const std::vector<Elem>& elems) {
  for (Elem x : elems) {
    if (x >= g.order()) {
      throw py::index_error("element " + std::to_string(x) + " is not in " + g.name());
    }
  }
  return g.subset(elems);
}

Subset in_star(const StarSet& x, const std::vector<Elem>& elems) {
  for (Elem e : elems) {
    if (e >= x.size()) {
      throw py::index_error("element " + std::to_string(e) + " is outside the carrier");
    }
  }
  return x.subset(elems);
}

// pybind11 holders must be non-const; groups are never mutated through them.
using PyGroup = std::shared_ptr<FiniteGroup>;
PyGroup to_holder(const GroupPtr& g) { return std::const_pointer_cast<FiniteGroup>(g); }

py::object json_to_py(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_wordmetrics, m) {
  m.doc() = "Word metrics on finite groups, group actions and star-sets";

  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<GroupAxiomError>(m, "GroupAxiomError", PyExc_ValueError);
  py::register_exception<StarSetError>(m, "StarSetError", PyExc_ValueError);

  py::class_<FiniteGroup, PyGroup>(m, "Group")
      .def_static(
          "from_spec", [](const std::string& spec) { return to_holder(parse_group_argument(spec)); },
          py::arg("spec"), "Inline JSON, a JSON file path, or a catalog name such as \"S3\".")
      .def_static("cyclic", [](std::size_t n) { return to_holder(cyclic(n)); })
      .def_static("dihedral", [](std::size_t n) { return to_holder(dihedral(n)); })
      .def_static("symmetric", [](std::size_t n) { return to_holder(symmetric(n)); })
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def(
          "word_lengths",
          [](const FiniteGroup& g, const std::vector<Elem>& s) {
            return to_py(word_lengths(g, in_group(g, s)));
          },
          py::arg("s"))
      .def(
          "word_metric",
          [](const FiniteGroup& g, const std::vector<Elem>& s, Elem x, Elem y) {
            if (x >= g.order() || y >= g.order()) {
              throw py::index_error("element out of range");
            }
            return to_py(word_metric(g, in_group(g, s), x, y));
          },
          py::arg("s"), py::arg("x"), py::arg("y"))
      .def(
          "metric_table",
          [](const FiniteGroup& g, const std::vector<Elem>& s) {
            return to_py(word_metric_table(g, in_group(g, s)));
          },
          py::arg("s"))
      .def(
          "power",
          [](const FiniteGroup& g, const std::vector<Elem>& s, const py::object& n) {
            return power(g, in_group(g, s), from_py(n)).elements();
          },
          py::arg("s"), py::arg("n"))
      .def(
          "ball",
          [](const FiniteGroup& g, const std::vector<Elem>& s, const std::vector<Elem>& a,
             const py::object& r) {
            return ball(g, in_group(g, s), in_group(g, a), from_py(r)).elements();
          },
          py::arg("s"), py::arg("a"), py::arg("r"))
      .def(
          "nu_H",
          [](const FiniteGroup& g, const std::vector<Elem>& s, const std::vector<Elem>& t) {
            return to_py(nu_H(g, in_group(g, s), in_group(g, t)));
          },
          py::arg("s"), py::arg("t"))
      .def(
          "is_metric",
          [](const FiniteGroup& g, const std::vector<Elem>& s) {
            return check_metric_axioms(word_metric_table(g, in_group(g, s))).is_metric();
          },
          py::arg("s"))
      .def("__repr__", [](const FiniteGroup& g) {
        return "<Group " + g.name() + " of order " + std::to_string(g.order()) + ">";
      });

  m.def("catalog_names", &catalog_names);
  m.def(
      "rank_n",
      [](const FiniteGroup& g, std::size_t cap) { return to_py(rank_n(g, cap).value); },
      py::arg("group"), py::arg("cap") = 4);
  m.def(
      "diam_nfg", [](const FiniteGroup& g) { return to_py(diam_nfg(g).value); },
      py::arg("group"));
  m.def(
      "delta", [](const FiniteGroup& g) { return to_py(delta(g).value); }, py::arg("group"));

  py::class_<StarSet>(m, "StarSet")
      .def_static("from_spec", &parse_star_set_argument, py::arg("spec"))
      .def_static("dihedral_quandle", &StarSet::dihedral_quandle)
      .def_property_readonly("size", &StarSet::size)
      .def("is_quandle", &StarSet::is_quandle)
      .def(
          "powers",
          [](const StarSet& x, const std::vector<Elem>& s, std::uint64_t n) {
            std::vector<std::vector<Elem>> out;
            for (const Subset& p : star_powers(x, in_star(x, s), n)) {
              out.push_back(p.elements());
            }
            return out;
          },
          py::arg("s"), py::arg("n"), "[S^0, S^1, ..., S^n]")
      .def(
          "word_lengths",
          [](const StarSet& x, const std::vector<Elem>& s) {
            return to_py(star_word_lengths(x, in_star(x, s)));
          },
          py::arg("s"))
      .def(
          "distance",
          [](const StarSet& x, const std::vector<Elem>& s, Elem a, Elem b, bool left_normed) {
            if (a >= x.size() || b >= x.size()) {
              throw py::index_error("element out of range");
            }
            return to_py(star_word_metric(x, in_star(x, s), a, b,
                                          left_normed ? StarMetricVariant::left_normed
                                                      : StarMetricVariant::all_parenthesizations));
          },
          py::arg("s"), py::arg("a"), py::arg("b"), py::arg("left_normed") = false);

  py::class_<GroupAction>(m, "GroupAction")
      .def_static("from_spec", &parse_action_argument, py::arg("spec"))
      .def_property_readonly("carrier", &GroupAction::carrier)
      .def_property_readonly("group", [](const GroupAction& a) { return to_holder(a.group()); })
      .def(
          "metric_table",
          [](const GroupAction& a, const std::vector<Elem>& s) {
            return to_py(action_metric_table(a, in_group(*a.group(), s)));
          },
          py::arg("s"));

  m.def(
      "run_criterion",
      [](int number, std::size_t max_order, std::uint64_t seed) {
        AcceptanceOptions o;
        o.max_order = max_order;
        o.seed = seed;
        CriterionResult r;
        {
          py::gil_scoped_release release;
          r = run_criterion(number, o);
        }
        py::dict d;
        d["number"] = r.number;
        d["title"] = r.title;
        d["passed"] = r.passed();
        d["report"] = json_to_py(r.report.to_json());
        return d;
      },
      py::arg("number"), py::arg("max_order") = 16, py::arg("seed") = 0);

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "wordmetrics");
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Returns (exit_code, stdout, stderr).");
}
