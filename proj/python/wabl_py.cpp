#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wabl/errors.hpp"
#include "wabl/fuzzy_core.hpp"
#include "wabl/level_weights.hpp"
#include "wabl/ranking.hpp"
#include "wabl/wabl_engine.hpp"

#include <sstream>

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

wabl::Dispatch dispatch_for(bool force_summation) {
  return force_summation ? wabl::Dispatch::ForceSummation : wabl::Dispatch::PreferClosedForm;
}

wabl::RankingScheme make_scheme(std::optional<long long> t, std::optional<unsigned> k,
                                std::optional<std::vector<std::pair<double, double>>> weights, bool force_summation) {
  wabl::RankingScheme scheme;
  if (t.has_value() != k.has_value()) {
    throw wabl::DomainError("t and k must be given together");
  }
  if (t) {
    scheme.pattern = wabl::EqualSpacedScheme(*t, wabl::PatternExponent{*k});
  }
  if (weights) {
    std::vector<double> alphas, masses;
    for (const auto &[a, m] : *weights) {
      alphas.push_back(a);
      masses.push_back(m);
    }
    scheme.explicit_weights = wabl::explicit_weights(wabl::LevelSet(std::move(alphas)), std::move(masses));
  }
  scheme.dispatch = dispatch_for(force_summation);
  return scheme;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "WABL defuzzification of trapezoidal and discrete fuzzy numbers";

  auto base = py::register_exception<wabl::Error>(m, "WablError", PyExc_ValueError);
  py::register_exception<wabl::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<wabl::EmptyCutError>(m, "EmptyCutError", base.ptr());
  py::register_exception<wabl::NormalizationError>(m, "NormalizationError", base.ptr());

  py::class_<wabl::Interval>(m, "Interval")
      .def(py::init<double, double>(), "lo"_a, "hi"_a)
      .def_readonly("lo", &wabl::Interval::lo)
      .def_readonly("hi", &wabl::Interval::hi)
      .def("__iter__", [](const wabl::Interval &i) { return py::iter(py::make_tuple(i.lo, i.hi)); })
      .def("__repr__", [](const wabl::Interval &i) {
        std::ostringstream os;
        os << "Interval(" << i.lo << ", " << i.hi << ")";
        return os.str();
      });

  py::class_<wabl::TrapezoidalFN>(m, "TrapezoidalFN")
      .def(py::init<double, double, double, double>(), "l"_a, "m_l"_a, "m_r"_a, "r"_a)
      .def_static("triangle", &wabl::TrapezoidalFN::triangle, "l"_a, "m"_a, "r"_a)
      .def_property_readonly("l", &wabl::TrapezoidalFN::l)
      .def_property_readonly("m_l", &wabl::TrapezoidalFN::m_l)
      .def_property_readonly("m_r", &wabl::TrapezoidalFN::m_r)
      .def_property_readonly("r", &wabl::TrapezoidalFN::r)
      .def("membership", [](const wabl::TrapezoidalFN &fn, double x) { return wabl::membership(fn, x); }, "x"_a)
      .def("lr_bounds", [](const wabl::TrapezoidalFN &fn, double a) { return wabl::lr_bounds(fn, a); }, "alpha"_a)
      .def("__eq__", [](const wabl::TrapezoidalFN &a, const wabl::TrapezoidalFN &b) { return a == b; })
      .def("__repr__", [](const wabl::TrapezoidalFN &fn) {
        std::ostringstream os;
        os << "TrapezoidalFN(" << fn.l() << ", " << fn.m_l() << ", " << fn.m_r() << ", " << fn.r() << ")";
        return os.str();
      });

  py::class_<wabl::DiscreteFN>(m, "DiscreteFN")
      .def(py::init([](const std::vector<std::pair<double, double>> &points, bool relaxed) {
             std::vector<wabl::DiscretePoint> pts;
             for (const auto &[x, mu] : points) {
               pts.push_back({x, mu});
             }
             return wabl::DiscreteFN(std::move(pts), relaxed ? wabl::DiscreteFN::Normality::Relaxed
                                                             : wabl::DiscreteFN::Normality::Strict);
           }),
           "points"_a, "relaxed"_a = false)
      .def_property_readonly("points",
                             [](const wabl::DiscreteFN &fn) {
                               std::vector<std::pair<double, double>> out;
                               for (const auto &p : fn.points()) {
                                 out.emplace_back(p.x, p.mu);
                               }
                               return out;
                             })
      .def_property_readonly("max_membership", &wabl::DiscreteFN::max_membership)
      .def_property_readonly("relaxed", &wabl::DiscreteFN::relaxed)
      .def("alpha_cut", [](const wabl::DiscreteFN &fn, double a) { return wabl::alpha_cut(fn, a); }, "alpha"_a)
      .def("native_levels", [](const wabl::DiscreteFN &fn) {
        const auto levels = wabl::native_levels(fn);
        return std::vector<double>(levels.alphas().begin(), levels.alphas().end());
      });

  m.def(
      "discretize",
      [](const wabl::TrapezoidalFN &fn, const std::vector<double> &universe) { return wabl::discretize(fn, universe); },
      "fn"_a, "universe"_a);

  m.def(
      "pattern_weights",
      [](long long t, unsigned k) {
        const auto w = wabl::pattern_weights(wabl::EqualSpacedScheme(t, wabl::PatternExponent{k}));
        return py::make_tuple(std::vector<double>(w.levels().alphas().begin(), w.levels().alphas().end()),
                              std::vector<double>(w.masses().begin(), w.masses().end()));
      },
      "t"_a, "k"_a, "Levels alpha_i = i/t and masses p_i = i^k / Q.");
  m.def(
      "normalize", [](const std::vector<double> &raw) { return wabl::normalize(raw); }, "raw"_a);
  m.def(
      "continuous_density", [](unsigned k, double a) { return wabl::continuous_density(wabl::PatternExponent{k}, a); },
      "k"_a, "alpha"_a);

  py::class_<wabl::LevelTerm>(m, "LevelTerm")
      .def_readonly("alpha", &wabl::LevelTerm::alpha)
      .def_readonly("mass", &wabl::LevelTerm::mass)
      .def_readonly("cut", &wabl::LevelTerm::cut)
      .def_readonly("mean", &wabl::LevelTerm::mean)
      .def_readonly("native_level", &wabl::LevelTerm::native_level);

  py::class_<wabl::WablResult>(m, "WablResult")
      .def_readonly("value", &wabl::WablResult::value)
      .def_property_readonly("path", [](const wabl::WablResult &r) { return std::string(wabl::to_string(r.path)); })
      .def_readonly("breakdown", &wabl::WablResult::breakdown);

  m.def(
      "wabl_discrete",
      [](const wabl::DiscreteFN &fn, const std::vector<double> &levels, const std::vector<double> &masses, double c) {
        return wabl::wabl_discrete(fn, wabl::explicit_weights(wabl::LevelSet(levels), masses), wabl::OptimismConfig(c));
      },
      "fn"_a, "levels"_a, "masses"_a, "c"_a);
  m.def(
      "wabl_trapezoid_pattern",
      [](const wabl::TrapezoidalFN &fn, long long t, unsigned k, double c, bool force_summation) {
        return wabl::wabl_trapezoid_pattern(fn, wabl::EqualSpacedScheme(t, wabl::PatternExponent{k}),
                                            wabl::OptimismConfig(c), dispatch_for(force_summation));
      },
      "fn"_a, "t"_a, "k"_a, "c"_a, "force_summation"_a = false);
  m.def(
      "closed_form_constant",
      [](const wabl::TrapezoidalFN &fn, double c) { return wabl::closed_form_constant(fn, wabl::OptimismConfig(c)); },
      "fn"_a, "c"_a);
  m.def(
      "closed_form_linear",
      [](const wabl::TrapezoidalFN &fn, long long t, double c) {
        return wabl::closed_form_linear(fn, t, wabl::OptimismConfig(c));
      },
      "fn"_a, "t"_a, "c"_a);
  m.def(
      "closed_form_quadratic",
      [](const wabl::TrapezoidalFN &fn, long long t, double c) {
        return wabl::closed_form_quadratic(fn, t, wabl::OptimismConfig(c));
      },
      "fn"_a, "t"_a, "c"_a);
  m.def(
      "wabl_continuous_closed",
      [](const wabl::TrapezoidalFN &fn, unsigned k, double c) {
        return wabl::wabl_continuous_closed(fn, wabl::PatternExponent{k}, wabl::OptimismConfig(c));
      },
      "fn"_a, "k"_a, "c"_a);
  m.def(
      "wabl_continuous_quadrature",
      [](const wabl::TrapezoidalFN &fn, unsigned k, double c) {
        return wabl::wabl_continuous_quadrature(fn, wabl::PatternExponent{k}, wabl::OptimismConfig(c));
      },
      "fn"_a, "k"_a, "c"_a);
  m.def(
      "sum_means",
      [](const wabl::TrapezoidalFN &fn, long long t, double c) { return wabl::sum_means(fn, t, wabl::OptimismConfig(c)); },
      "fn"_a, "t"_a, "c"_a);
  m.def(
      "weighted_sum_means",
      [](const wabl::TrapezoidalFN &fn, long long t, double c) {
        return wabl::weighted_sum_means(fn, t, wabl::OptimismConfig(c));
      },
      "fn"_a, "t"_a, "c"_a);

  m.def(
      "rank_alternatives",
      [](const std::vector<std::pair<std::string, py::object>> &alts, double c, std::optional<long long> t, std::optional<unsigned> k,
         std::optional<std::vector<std::pair<double, double>>> weights, bool force_summation) {
        std::vector<wabl::Alternative> in;
        for (const auto &[id, fn] : alts) {
          if (py::isinstance<wabl::TrapezoidalFN>(fn)) {
            in.push_back({id, fn.cast<wabl::TrapezoidalFN>()});
          } else if (py::isinstance<wabl::DiscreteFN>(fn)) {
            in.push_back({id, fn.cast<wabl::DiscreteFN>()});
          } else {
            throw py::type_error("alternative '" + id + "' is neither TrapezoidalFN nor DiscreteFN");
          }
        }
        const auto ranking =
            wabl::rank_alternatives(in, make_scheme(t, k, weights, force_summation), wabl::OptimismConfig(c));
        py::list out;
        for (const auto &e : ranking) {
          out.append(py::make_tuple(e.rank, e.id, e.value));
        }
        return out;
      },
      "alternatives"_a, "c"_a, "t"_a = py::none(), "k"_a = py::none(), "weights"_a = py::none(),
      "force_summation"_a = false, "List of (rank, id, value) tuples, best first.");
}
