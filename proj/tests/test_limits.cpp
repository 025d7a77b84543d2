#include <cmath>
#include <vector>

#include "cvxdual/limits.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cvxdual;
using namespace cvxdual::testutil;

TEST_SUITE_BEGIN("limits");

TEST_CASE("condition (ii): entropic continuity along decreasing sequences") {
    const Space space(6);
    const Functional ent = make_entropic(space, geometric_probability(space));
    Rng rng(151);
    const Func f = random_func(space, rng);
    const auto seq = MonotoneSequence::down_to(f, Func::constant(space, 1.0),
                                               ResidualShape::harmonic_capped);
    const ConditionVerdict v = check_condition(ent, seq, ConditionId::ii);
    CHECK(v.passed);
    REQUIRE(v.trace.size() == 64);
    for (std::size_t i = 1; i < v.trace.size(); ++i)
        CHECK(v.trace[i].value() <= v.trace[i - 1].value() + 1e-12);
    CHECK(std::fabs(v.trace.back().value() - ent(f).value()) <= 1e-8);
}

TEST_CASE("condition (iii): indicator passes with witness epsilon one half") {
    const Space space(4);
    const Functional ind = make_indicator_p(space);
    const Func base = Func::constant(space, -1.0);
    const auto seq = MonotoneSequence::down_to_zero(Func::constant(space, 1.0),
                                                    ResidualShape::harmonic);
    const ConditionVerdict v = check_condition(ind, seq, ConditionId::iii, base);
    CHECK(v.passed);
    REQUIRE(v.witness_epsilon.has_value());
    CHECK(*v.witness_epsilon == 0.5);
}

TEST_CASE("condition (ii) failure trace for the indicator functional") {
    const Space space(4);
    const Functional ind = make_indicator_p(space);
    const Func base = Func::constant(space, -1.0 / 64.0);
    const auto seq = MonotoneSequence::down_to(base, Func::constant(space, 2.0),
                                               ResidualShape::harmonic);
    const ConditionVerdict v = check_condition(ind, seq, ConditionId::ii);
    CHECK_FALSE(v.passed);
    REQUIRE(v.trace.size() == 64);
    for (const ExtReal& t : v.trace) CHECK_FALSE(t.is_finite());  // jumps to +inf below rank 128
}

TEST_CASE("condition (vi): sup continuity along increasing sequences") {
    const Space space(6);
    const Functional s = make_sup_functional(space);
    Rng rng(157);
    for (int t = 0; t < 20; ++t) {
        const Func f = random_func(space, rng);
        const Func residual = random_func(space, rng, 0.0, 1.0);
        const ResidualShape shape =
            rng.coin() ? ResidualShape::geometric : ResidualShape::harmonic_capped;
        const ConditionVerdict v =
            check_condition(s, MonotoneSequence::up_to(f, residual, shape), ConditionId::vi);
        CHECK(v.passed);
    }
}

TEST_CASE("condition (i): existence search over interior samples") {
    const Space space(4);
    const Functional ent = make_entropic(space, uniform_probability(space));
    const auto seq = MonotoneSequence::down_to(Func::zero(space), Func::constant(space, 0.5),
                                               ResidualShape::geometric);
    CHECK(check_condition(ent, seq, ConditionId::i).passed);
}

TEST_CASE("invalid sequences fail structurally") {
    const Space space(3);
    const Functional ent = make_entropic(space, uniform_probability(space));
    const Func target = Func::zero(space);
    // Alternating generator: not pointwise monotone.
    const MonotoneSequence bad(
        target, [target](int n) { return target + (n % 2 == 0 ? 1.0 / n : 2.0 / n); },
        SequenceDirection::down);
    CHECK_THROWS_AS(check_condition(ent, bad, ConditionId::ii), sequence_error);

    // (iii) demands a zero target.
    const auto nonzero = MonotoneSequence::down_to(
        Func::constant(space, 1.0), Func::constant(space, 1.0), ResidualShape::harmonic);
    CHECK_THROWS_AS(check_condition(ent, nonzero, ConditionId::iii, target), usage_error);
}

TEST_CASE("mass escape along the truncation ladder") {
    const auto schedule = default_ladder_schedule(12);
    const auto ladder =
        make_truncation_ladder(std::span<const int>(schedule.data(), schedule.size()));

    SUBCASE("the non-attaining profile escapes") {
        const EscapeDiagnostic diag =
            mass_escape_diagnostic([](int m) { return 1.0 - 1.0 / m; }, ladder);
        CHECK(diag.escape_detected);
        REQUIRE(diag.per_rung_witness.size() == ladder.size());
        for (std::size_t k = 0; k < ladder.size(); ++k) {
            const Measure& w = diag.per_rung_witness[k];
            const int last = ladder[k].size();
            CHECK(w.at(last) == 1.0);               // Dirac at the rung's end
            CHECK(w.prefix_mass(last - 1) == 0.0);  // nothing below it
        }
        // For a fixed prefix the mass vanishes once the rung outgrows it.
        for (std::size_t k = 1; k < diag.mass_on_prefix.size(); ++k)
            for (std::size_t j = 0; j < k; ++j) CHECK(diag.mass_on_prefix[k][j] == 0.0);
    }

    SUBCASE("an attaining profile pins the witness and defeats escape") {
        const EscapeDiagnostic diag = mass_escape_diagnostic(
            [](int m) { return 1.0 - 1.0 / std::min(m, 3); }, ladder);
        CHECK_FALSE(diag.escape_detected);
        for (std::size_t k = 1; k < ladder.size(); ++k)
            CHECK(diag.per_rung_witness[k].at(3) == 1.0);  // stabilized at dirac(3)
    }

    SUBCASE("uniform witnesses are strictly suboptimal by the averaging gap") {
        for (const Space& rung : ladder) {
            const int k = rung.size();
            const Func f = profile_func(rung, [](int m) { return 1.0 - 1.0 / m; });
            const Functional s = make_sup_functional(rung);
            // phi*(uniform) = 0, so the dual value is the plain average.
            std::vector<Measure> samples = {uniform_probability(rung)};
            const auto dual = dual_value_grid(s, f, samples);
            REQUIRE(dual.has_value());
            double expected_gap = 0.0;  // (1/k) sum of (f(k) - f(i))
            for (int i = 1; i <= k; ++i) expected_gap += (1.0 - 1.0 / k) - (1.0 - 1.0 / i);
            expected_gap /= k;
            if (k > 1) CHECK(expected_gap > 0.0);
            CHECK(std::fabs((s(f).value() - *dual) - expected_gap) <= 1e-12);
        }
    }

    SUBCASE("decreasing profiles are rejected") {
        CHECK_THROWS_AS(mass_escape_diagnostic([](int m) { return 1.0 / m; }, ladder),
                        usage_error);
    }
}

TEST_CASE("tightness along the ladder") {
    const auto schedule = default_ladder_schedule(12);
    const auto ladder =
        make_truncation_ladder(std::span<const int>(schedule.data(), schedule.size()));
    const Space& top = ladder.back();
    const Measure p = geometric_probability(top);

    SUBCASE("entropic with geometric reference is tight") {
        const Functional ent = make_entropic(top, p);
        const ConditionVerdict v = tightness_check(ent, 2.0, ladder);
        CHECK(v.passed);
        // Closed-form tail oracle: log(1 + (e^M - 1) * tail(p, s_j)).
        for (std::size_t j = 0; j + 1 < ladder.size(); ++j) {
            double tail = 1.0;
            for (int i = 0; i < ladder[j].size(); ++i)
                tail -= p.weights()[static_cast<std::size_t>(i)];
            const double expected = std::log1p((std::exp(2.0) - 1.0) * std::max(tail, 0.0));
            CHECK(std::fabs(v.trace[j].value() - expected) <= 1e-9);
        }
        CHECK(v.trace.back().value() <= 1e-6);
    }

    SUBCASE("sup is not tight: the trace is constant at M") {
        const Functional s = make_sup_functional(top);
        const ConditionVerdict v = tightness_check(s, 2.0, ladder);
        CHECK_FALSE(v.passed);
        for (const ExtReal& t : v.trace) CHECK(t.value() == 2.0);
    }

    SUBCASE("linear functionals are tight at the tail-sum speed") {
        std::vector<double> w(p.weights().begin(), p.weights().end());
        for (double& x : w) x *= 2.0;
        const Functional lin = make_linear(Measure(top, std::move(w)));
        const ConditionVerdict v = tightness_check(lin, 2.0, ladder);
        CHECK(v.passed);
        for (std::size_t j = 0; j + 1 < ladder.size(); ++j) {
            double tail = 2.0;
            for (int i = 0; i < ladder[j].size(); ++i)
                tail -= 2.0 * p.weights()[static_cast<std::size_t>(i)];
            CHECK(std::fabs(v.trace[j].value() - 2.0 * std::max(tail, 0.0)) <= 1e-9);
        }
    }

    SUBCASE("preconditions") {
        const Functional s = make_sup_functional(top);
        CHECK_THROWS_AS(tightness_check(s, 0.5, ladder), usage_error);
        const Functional ind = make_indicator_p(top);
        CHECK_NOTHROW(tightness_check(ind, 1.0, ladder));  // phi(0) = 0 is finite
    }
}

TEST_CASE("inner regularity against the designated compact family") {
    const auto schedule = default_ladder_schedule(12);
    const auto ladder =
        make_truncation_ladder(std::span<const int>(schedule.data(), schedule.size()));
    const Space& top = ladder.back();

    CHECK(check_regular(geometric_probability(top)));
    CHECK(check_regular(dirac(top, 1)));

    const EscapeDiagnostic diag = dirac_ladder_diagnostic(ladder);
    CHECK(diag.escape_detected);
    for (std::size_t k = 0; k < diag.mass_on_prefix.size(); ++k)
        for (std::size_t j = 0; j < k; ++j) CHECK(diag.mass_on_prefix[k][j] == 0.0);
}

TEST_CASE("regularity is monotone in the compact family") {
    Rng rng(163);
    for (int t = 0; t < 30; ++t) {
        const Space coarse(16, {2, 5});
        const Space fine(16, {2, 5, 9, 13});
        std::vector<double> w(16);
        for (double& x : w) x = rng.coin() ? rng.uniform(0.0, 1.0) : 0.0;
        const Measure on_coarse(coarse, w);
        const Measure on_fine(fine, w);
        if (check_regular(on_coarse)) CHECK(check_regular(on_fine));
    }
}

TEST_CASE("step approximation") {
    SUBCASE("constant functions collapse to one cell") {
        const Space space(5);
        const StepApproximation a = step_approximation(Func::constant(space, 3.25), 0.7);
        CHECK(a.levels.size() == 1);
        CHECK(a.levels[0] == 3.25);
        for (int i = 1; i <= 5; ++i) CHECK(a.step.at(i) == 3.25);
    }

    SUBCASE("the worked three-point example") {
        const Space space(3);
        const StepApproximation a = step_approximation(Func(space, {0.0, 0.3, 0.9}), 0.5);
        REQUIRE(a.levels.size() == 2);
        CHECK(a.levels[0] == 0.0);
        CHECK(a.levels[1] == 0.5);
        CHECK(a.step.at(1) == 0.0);
        CHECK(a.step.at(2) == 0.0);
        CHECK(a.step.at(3) == 0.5);
    }

    SUBCASE("random functions satisfy the exact sandwich") {
        const Space space(100);
        Rng rng(167);
        for (int t = 0; t < 50; ++t) {
            const Func f = random_func(space, rng, -1.0, 1.0);
            const double delta = 0.05;
            const StepApproximation a = step_approximation(f, delta);
            CHECK(pointwise_leq(a.step, f));
            for (int i = 1; i <= space.size(); ++i) CHECK(f.at(i) <= a.step.at(i) + delta);
            const int bound =
                static_cast<int>(std::ceil((f.max_value() - f.min_value()) / delta)) + 1;
            CHECK(static_cast<int>(a.levels.size()) <= bound);
            std::size_t covered = 0;
            for (const auto& cell : a.partition) covered += cell.size();
            CHECK(covered == static_cast<std::size_t>(space.size()));
        }
    }

    SUBCASE("delta must be positive") {
        const Space space(3);
        CHECK_THROWS_AS(step_approximation(Func::zero(space), 0.0), usage_error);
    }
}

TEST_CASE("pairing inequality for the step approximation") {
    const Space space(100);
    Rng rng(173);

    SUBCASE("random measures") {
        for (int t = 0; t < 50; ++t) {
            const Func f = random_func(space, rng, -1.0, 1.0);
            const Measure mu = random_measure(space, rng, 1.0);
            CHECK(step_pairing_inequality_check(f, mu, 0.05));
        }
    }

    SUBCASE("a step function on the grid leaves the full slack") {
        const Func f = profile_func(space, [](int m) { return 0.05 * (m % 4); });
        const Measure mu = random_measure(space, rng, 1.0);
        const StepApproximation a = step_approximation(f, 0.05);
        CHECK(pairing(f, mu) == pairing(a.step, mu));
        CHECK(step_pairing_inequality_check(f, mu, 0.05));
    }

    SUBCASE("the zero measure reduces to 0 <= delta") {
        const Func f = random_func(space, rng);
        const Measure zero(space, std::vector<double>(100, 0.0));
        CHECK(step_pairing_inequality_check(f, zero, 0.05));
    }
}

TEST_CASE("lower regularization") {
    const Space space(6);
    const Measure p = geometric_probability(space);
    const Functional ent = make_entropic(space, p);
    Rng rng(179);
    const Func f = random_func(space, rng);

    SUBCASE("the function itself as the family gives phi(f)") {
        std::vector<Func> family = {f};
        const auto v = lower_regularization(ent, f, family);
        REQUIRE(v.has_value());
        CHECK(*v == ent(f).value());
    }

    SUBCASE("step families approach phi(f) at translation speed") {
        std::vector<Func> family;
        for (int j = 1; j <= 10; ++j)
            family.push_back(step_approximation(f, std::ldexp(1.0, -j)).step);
        const auto v = lower_regularization(ent, f, family);
        REQUIRE(v.has_value());
        CHECK(*v <= ent(f).value() + 1e-12);
        CHECK(ent(f).value() - *v <= std::ldexp(1.0, -10) + 1e-12);
    }

    SUBCASE("monotone in the family") {
        std::vector<Func> small, large;
        for (int j = 1; j <= 3; ++j)
            small.push_back(step_approximation(f, std::ldexp(1.0, -j)).step);
        large = small;
        for (int j = 4; j <= 8; ++j)
            large.push_back(step_approximation(f, std::ldexp(1.0, -j)).step);
        const auto vs = lower_regularization(ent, f, small);
        const auto vl = lower_regularization(ent, f, large);
        REQUIRE(vs.has_value());
        REQUIRE(vl.has_value());
        CHECK(*vl >= *vs);
    }

    SUBCASE("indicator at a boundary-touching function") {
        const Functional ind = make_indicator_p(space);
        const Func touching = Func::zero(space);  // max f = 0 exactly
        std::vector<Func> family;
        for (int j = 1; j <= 6; ++j) family.push_back(touching + (-std::ldexp(1.0, -j)));
        const auto v = lower_regularization(ind, touching, family);
        REQUIRE(v.has_value());
        CHECK(*v == 0.0);
        CHECK(ind(touching).value() == 0.0);
    }

    SUBCASE("no admissible member") {
        std::vector<Func> family = {f + 1.0};  // strictly above f
        CHECK_FALSE(lower_regularization(ent, f, family).has_value());
    }
}

TEST_SUITE_END();
