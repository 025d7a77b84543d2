#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>

#include "cvxdual/limits.hpp"
#include "cvxdual/runner.hpp"

namespace py = pybind11;
using namespace cvxdual;

namespace {

std::vector<Space> ladder_from_list(const std::vector<int>& schedule) {
    return make_truncation_ladder(std::span<const int>(schedule.data(), schedule.size()));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dual representations of increasing convex functionals on finite spaces";
    m.attr("__version__") = kVersion;

    py::register_exception<usage_error>(m, "UsageError", PyExc_ValueError);
    py::register_exception<cvxdual::domain_error>(m, "DomainError", PyExc_ArithmeticError);
    py::register_exception<degenerate_error>(m, "DegenerateError", PyExc_RuntimeError);
    py::register_exception<sequence_error>(m, "SequenceError", PyExc_ValueError);
    py::register_exception<certification_error>(m, "CertificationError", PyExc_RuntimeError);

    py::class_<ExtReal>(m, "ExtReal")
        .def(py::init<double>())
        .def_static("infinity", &ExtReal::infinity)
        .def_property_readonly("finite", &ExtReal::is_finite)
        .def("__float__",
             [](const ExtReal& x) {
                 return x.is_finite() ? x.value() : std::numeric_limits<double>::infinity();
             })
        .def("__repr__", [](const ExtReal& x) { return "ExtReal(" + to_string(x) + ")"; });

    py::class_<Space>(m, "Space")
        .def(py::init<int>(), py::arg("size"))
        .def(py::init<int, std::vector<int>, std::optional<int>>(), py::arg("size"),
             py::arg("compact_prefixes"), py::arg("ladder_tag") = std::nullopt)
        .def_property_readonly("size", &Space::size)
        .def_property_readonly("compact_prefixes",
                               [](const Space& s) {
                                   return std::vector<int>(s.compact_prefixes().begin(),
                                                           s.compact_prefixes().end());
                               })
        .def_property_readonly("ladder_tag", &Space::ladder_tag)
        .def("__eq__", [](const Space& a, const Space& b) { return a == b; })
        .def("__repr__",
             [](const Space& s) { return "Space(size=" + std::to_string(s.size()) + ")"; });

    py::class_<Func>(m, "Func")
        .def(py::init<Space, std::vector<double>>(), py::arg("space"), py::arg("values"))
        .def_static("constant", &Func::constant, py::arg("space"), py::arg("value"))
        .def_static("zero", &Func::zero, py::arg("space"))
        .def_static("unit", &Func::unit, py::arg("space"), py::arg("point"))
        .def_property_readonly("space", &Func::space)
        .def_property_readonly("values",
                               [](const Func& f) {
                                   return std::vector<double>(f.values().begin(),
                                                              f.values().end());
                               })
        .def("at", &Func::at, py::arg("point"))
        .def("min", &Func::min_value)
        .def("max", &Func::max_value)
        .def("__add__", [](const Func& f, const Func& g) { return f + g; })
        .def("__add__", [](const Func& f, double c) { return f + c; })
        .def("__mul__", [](const Func& f, double c) { return f * c; })
        .def("__len__", &Func::size);

    py::class_<Measure>(m, "Measure")
        .def(py::init<Space, std::vector<double>>(), py::arg("space"), py::arg("weights"))
        .def_property_readonly("space", &Measure::space)
        .def_property_readonly("weights",
                               [](const Measure& mu) {
                                   return std::vector<double>(mu.weights().begin(),
                                                              mu.weights().end());
                               })
        .def("total_mass", &Measure::total_mass)
        .def("prefix_mass", &Measure::prefix_mass, py::arg("m"))
        .def("at", &Measure::at, py::arg("point"))
        .def("__len__", &Measure::size);

    // core operations
    m.def("pairing", &pairing, py::arg("f"), py::arg("mu"));
    m.def("lattice_min", &lattice_min, py::arg("f"), py::arg("g"));
    m.def("lattice_min_one", &lattice_min_one, py::arg("f"));
    m.def("dirac", &dirac, py::arg("space"), py::arg("point"));
    m.def("make_truncation_ladder", &ladder_from_list, py::arg("schedule"));
    m.def("default_ladder_schedule", &default_ladder_schedule, py::arg("max_exponent") = 12);
    m.def(
        "profile_func",
        [](const Space& space, const std::function<double(int)>& recipe) {
            return profile_func(space, recipe);
        },
        py::arg("space"), py::arg("recipe"));

    // functionals
    py::enum_<FunctionalKind>(m, "FunctionalKind")
        .value("linear", FunctionalKind::linear)
        .value("sup", FunctionalKind::sup)
        .value("entropic", FunctionalKind::entropic)
        .value("indicator_p", FunctionalKind::indicator_p)
        .value("worst_case", FunctionalKind::worst_case)
        .value("combinator", FunctionalKind::combinator);

    py::class_<Functional>(m, "Functional")
        .def_property_readonly("space", &Functional::space)
        .def_property_readonly("kind", &Functional::kind)
        .def_property_readonly("translation_invariant", &Functional::translation_invariant)
        .def_property_readonly("has_closed_form_conjugate",
                               &Functional::has_closed_form_conjugate)
        .def("__call__", [](const Functional& phi, const Func& f) { return phi(f); })
        .def("closed_form_conjugate", &Functional::closed_form_conjugate, py::arg("mu"));

    m.def("make_sup_functional", &make_sup_functional, py::arg("space"));
    m.def("make_indicator_p", &make_indicator_p, py::arg("space"));
    m.def("make_entropic", &make_entropic, py::arg("space"), py::arg("reference"));
    m.def("make_linear", &make_linear, py::arg("nu"));
    m.def("make_worst_case", &make_worst_case, py::arg("scenarios"));
    m.def("functional_max", &functional_max, py::arg("a"), py::arg("b"));
    m.def("functional_mix", &functional_mix, py::arg("a"), py::arg("b"), py::arg("lam"));

    m.def("in_interior", py::overload_cast<const Functional&, const Func&>(&in_interior),
          py::arg("phi"), py::arg("f"));
    m.def("directional_derivative", &directional_derivative, py::arg("phi"), py::arg("f"),
          py::arg("g"));
    m.def(
        "has_translation_property",
        [](const Functional& phi, const std::vector<Func>& samples, double tol) {
            return has_translation_property(phi, samples, tol);
        },
        py::arg("phi"), py::arg("samples"), py::arg("tol") = 1e-10);

    // duality
    py::class_<ConjugateResult>(m, "ConjugateResult")
        .def_readonly("value", &ConjugateResult::value)
        .def_readonly("maximizer", &ConjugateResult::maximizer)
        .def_readonly("diverged", &ConjugateResult::diverged)
        .def_readonly("box_radius_used", &ConjugateResult::box_radius_used);

    py::class_<RepresentationReport>(m, "RepresentationReport")
        .def_readonly("lhs", &RepresentationReport::lhs)
        .def_readonly("rhs", &RepresentationReport::rhs)
        .def_readonly("gap", &RepresentationReport::gap)
        .def_readonly("witness", &RepresentationReport::witness)
        .def_readonly("fenchel_young_violations",
                      &RepresentationReport::fenchel_young_violations)
        .def_readonly("conjugate_closed_form", &RepresentationReport::conjugate_closed_form);

    m.def(
        "conjugate",
        [](const Functional& phi, const Measure& mu, double box_radius, std::uint64_t seed) {
            ConjugateOptions options;
            options.box_radius = box_radius;
            options.seed = seed;
            return conjugate(phi, mu, options);
        },
        py::arg("phi"), py::arg("mu"), py::arg("box_radius") = 8.0,
        py::arg("seed") = 0x5eedULL);
    m.def("subgradient", &subgradient, py::arg("phi"), py::arg("f"));
    m.def(
        "verify_maxrep",
        [](const Functional& phi, const Func& f, double tol, std::uint64_t seed) {
            MaxrepOptions options;
            options.tol = tol;
            options.seed = seed;
            return verify_maxrep(phi, f, options);
        },
        py::arg("phi"), py::arg("f"), py::arg("tol") = 1e-6, py::arg("seed") = 0x5eedULL);
    m.def(
        "dual_value_grid",
        [](const Functional& phi, const Func& f, const std::vector<Measure>& samples) {
            return dual_value_grid(phi, f, samples);
        },
        py::arg("phi"), py::arg("f"), py::arg("samples"));
    m.def(
        "probability_mass_check",
        [](const Functional& phi, const Func& f, double tol) {
            return probability_mass_check(phi, f, tol);
        },
        py::arg("phi"), py::arg("f"), py::arg("tol") = 1e-8);

    // limits
    py::enum_<SequenceDirection>(m, "SequenceDirection")
        .value("down", SequenceDirection::down)
        .value("up", SequenceDirection::up);

    py::enum_<ResidualShape>(m, "ResidualShape")
        .value("geometric", ResidualShape::geometric)
        .value("harmonic", ResidualShape::harmonic)
        .value("harmonic_capped", ResidualShape::harmonic_capped);

    py::enum_<ConditionId>(m, "ConditionId")
        .value("i", ConditionId::i)
        .value("ii", ConditionId::ii)
        .value("iii", ConditionId::iii)
        .value("v", ConditionId::v)
        .value("vi", ConditionId::vi)
        .value("tightness", ConditionId::tightness);

    py::class_<MonotoneSequence>(m, "MonotoneSequence")
        .def(py::init<Func, std::function<Func(int)>, SequenceDirection>(), py::arg("target"),
             py::arg("term"), py::arg("direction"))
        .def_static("down_to", &MonotoneSequence::down_to, py::arg("target"),
                    py::arg("residual"), py::arg("shape"), py::arg("cap_rank") = 48)
        .def_static("up_to", &MonotoneSequence::up_to, py::arg("target"), py::arg("residual"),
                    py::arg("shape"), py::arg("cap_rank") = 48)
        .def_static("down_to_zero", &MonotoneSequence::down_to_zero, py::arg("residual"),
                    py::arg("shape"), py::arg("cap_rank") = 48)
        .def_property_readonly("target", &MonotoneSequence::target)
        .def_property_readonly("direction", &MonotoneSequence::direction)
        .def("term", &MonotoneSequence::term, py::arg("n"));

    py::class_<ConditionVerdict>(m, "ConditionVerdict")
        .def_readonly("condition", &ConditionVerdict::condition)
        .def_readonly("passed", &ConditionVerdict::passed)
        .def_readonly("witness_epsilon", &ConditionVerdict::witness_epsilon)
        .def_readonly("trace", &ConditionVerdict::trace);

    py::class_<EscapeDiagnostic>(m, "EscapeDiagnostic")
        .def_readonly("ladder", &EscapeDiagnostic::ladder)
        .def_readonly("per_rung_witness", &EscapeDiagnostic::per_rung_witness)
        .def_readonly("mass_on_prefix", &EscapeDiagnostic::mass_on_prefix)
        .def_readonly("escape_detected", &EscapeDiagnostic::escape_detected);

    py::class_<StepApproximation>(m, "StepApproximation")
        .def_readonly("partition", &StepApproximation::partition)
        .def_readonly("levels", &StepApproximation::levels)
        .def_readonly("step", &StepApproximation::step);

    m.def(
        "check_condition",
        [](const Functional& phi, const MonotoneSequence& seq, ConditionId condition,
           const std::optional<Func>& base_point, int max_rank, double tol) {
            CheckOptions options;
            options.max_rank = max_rank;
            options.tol = tol;
            return check_condition(phi, seq, condition, base_point, options);
        },
        py::arg("phi"), py::arg("seq"), py::arg("condition"),
        py::arg("base_point") = std::nullopt, py::arg("max_rank") = 64, py::arg("tol") = 1e-8);
    m.def(
        "mass_escape_diagnostic",
        [](const std::function<double(int)>& profile, const std::vector<Space>& ladder) {
            return mass_escape_diagnostic(profile, ladder);
        },
        py::arg("profile"), py::arg("ladder"));
    m.def(
        "dirac_ladder_diagnostic",
        [](const std::vector<Space>& ladder) { return dirac_ladder_diagnostic(ladder); },
        py::arg("ladder"));
    m.def(
        "tightness_check",
        [](const Functional& phi, double M, const std::vector<Space>& ladder, double tol) {
            CheckOptions options;
            options.tol = tol;
            return tightness_check(phi, M, ladder, options);
        },
        py::arg("phi"), py::arg("M"), py::arg("ladder"), py::arg("tol") = 1e-6);
    m.def(
        "check_regular",
        [](const Measure& mu, double tol, int subset_samples, std::uint64_t seed) {
            RegularityOptions options;
            options.tol = tol;
            options.subset_samples = subset_samples;
            options.seed = seed;
            return check_regular(mu, options);
        },
        py::arg("mu"), py::arg("tol") = 1e-10, py::arg("subset_samples") = 32,
        py::arg("seed") = 0x5eedULL);
    m.def("step_approximation", &step_approximation, py::arg("f"), py::arg("delta"));
    m.def("step_pairing_inequality_check", &step_pairing_inequality_check, py::arg("f"), py::arg("mu"),
          py::arg("delta"));
    m.def(
        "lower_regularization",
        [](const Functional& phi, const Func& f, const std::vector<Func>& family) {
            return lower_regularization(phi, f, family);
        },
        py::arg("phi"), py::arg("f"), py::arg("test_family"));

    // suite runner
    m.def(
        "run_default_suites",
        [](std::uint64_t seed, bool quick) {
            SuiteConfig config;
            config.seed = seed;
            if (quick) config.apply_quick();
            const RunReport report = run_suites(config);
            py::dict out;
            out["passed"] = report.passed_count();
            out["failed"] = report.failed_count();
            out["jsonl"] = report.to_jsonl();
            return out;
        },
        py::arg("seed") = 42, py::arg("quick") = true);
}
