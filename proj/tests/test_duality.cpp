#include <cmath>
#include <limits>
#include <vector>

#include "cvxdual/duality.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cvxdual;
using namespace cvxdual::testutil;

namespace {

/// Brute-force conjugate on n=2: refining grid search over the f-plane.
double grid_search_conjugate_2d(const Functional& phi, const Measure& mu) {
    double cx = 0.0, cy = 0.0, half = 8.0;
    double best = -std::numeric_limits<double>::infinity();
    const auto w = mu.weights();
    for (int level = 0; level < 6; ++level) {
        double bx = cx, by = cy;
        for (int i = 0; i <= 100; ++i) {
            for (int j = 0; j <= 100; ++j) {
                const double x = cx - half + 2.0 * half * i / 100.0;
                const double y = cy - half + 2.0 * half * j / 100.0;
                const ExtReal v = phi(Func(phi.space(), {x, y}));
                if (!v.is_finite()) continue;
                const double value = w[0] * x + w[1] * y - v.value();
                if (value > best) {
                    best = value;
                    bx = x;
                    by = y;
                }
            }
        }
        cx = bx;
        cy = by;
        half = 3.0 * half / 100.0;
    }
    return best;
}

std::vector<std::pair<Measure, double>> default_scenarios(const Space& space) {
    std::vector<std::pair<Measure, double>> scenarios;
    scenarios.emplace_back(uniform_probability(space), 0.0);
    scenarios.emplace_back(geometric_probability(space), 0.3);
    return scenarios;
}

}  // namespace

TEST_SUITE_BEGIN("duality");

TEST_CASE("sup conjugate vanishes on probability measures") {
    const Space space(8);
    const Functional s = make_sup_functional(space);

    const ConjugateResult at_dirac = conjugate(s, dirac(space, 3));
    CHECK(at_dirac.value.is_finite());
    CHECK_FALSE(at_dirac.diverged);
    CHECK(std::fabs(at_dirac.value.value()) <= 1e-8);
    REQUIRE(at_dirac.maximizer.has_value());
    CHECK(std::fabs(pairing(*at_dirac.maximizer, dirac(space, 3)) -
                    s(*at_dirac.maximizer).value() - at_dirac.value.value()) <= 1e-12);

    Rng rng(71);
    for (int t = 0; t < 10; ++t) {
        const ConjugateResult r = conjugate(s, random_probability(space, rng));
        CHECK(r.value.is_finite());
        CHECK(std::fabs(r.value.value()) <= 1e-8);
    }
}

TEST_CASE("sup conjugate diverges off the probability simplex") {
    const Space space(8);
    const Functional s = make_sup_functional(space);
    std::vector<double> w(8, 1.5 / 8.0);
    const ConjugateResult r = conjugate(s, Measure(space, std::move(w)));
    CHECK(r.diverged);
    CHECK_FALSE(r.value.is_finite());
    CHECK_FALSE(r.maximizer.has_value());

    std::vector<double> small(8, 0.5 / 8.0);
    CHECK(conjugate(s, Measure(space, std::move(small))).diverged);
}

TEST_CASE("entropic conjugate recovers relative entropy") {
    const Space space(2);
    const Measure p = uniform_probability(space);
    const Functional ent = make_entropic(space, p);
    Rng rng(73);
    for (int t = 0; t < 6; ++t) {
        const Measure mu = random_probability(space, rng);
        const double kl = kl_divergence_oracle(mu, p);

        const ExtReal closed = ent.closed_form_conjugate(mu);
        CHECK(std::fabs(closed.value() - kl) <= 1e-12);

        const double grid = grid_search_conjugate_2d(ent, mu);
        CHECK(std::fabs(grid - kl) <= 1e-5);

        const ConjugateResult numeric = conjugate(ent, mu);
        CHECK(numeric.value.is_finite());
        CHECK(std::fabs(numeric.value.value() - kl) <= 1e-5);
    }
}

TEST_CASE("entropic conjugate diverges off the simplex") {
    const Space space(4);
    const Functional ent = make_entropic(space, uniform_probability(space));
    std::vector<double> w(4, 0.4);  // mass 1.6
    const ConjugateResult r = conjugate(ent, Measure(space, std::move(w)));
    CHECK(r.diverged);
}

TEST_CASE("conjugate reports +inf along any negative coordinate") {
    const Space space(5);
    const Measure p = geometric_probability(space);
    const Functional catalog[] = {make_sup_functional(space), make_indicator_p(space),
                                  make_entropic(space, p), make_linear(p),
                                  make_worst_case(default_scenarios(space))};
    Rng rng(79);
    for (const Functional& phi : catalog) {
        std::vector<double> w(5);
        for (double& x : w) x = rng.uniform(0.0, 0.6);
        w[static_cast<std::size_t>(rng.uniform_int(0, 4))] = rng.uniform(-1.5, -0.3);
        const ConjugateResult r = conjugate(phi, std::span<const double>(w));
        CHECK(r.diverged);
    }
}

TEST_CASE("conjugate convexity via the closed forms") {
    const Space space(6);
    const Measure p = geometric_probability(space);
    const Functional ent = make_entropic(space, p);
    Rng rng(83);
    for (int t = 0; t < 200; ++t) {
        const Measure a = random_probability(space, rng);
        const Measure b = random_probability(space, rng);
        const double lambda = rng.next_double();
        std::vector<double> mixed(static_cast<std::size_t>(space.size()));
        for (std::size_t i = 0; i < mixed.size(); ++i)
            mixed[i] = lambda * a.weights()[i] + (1.0 - lambda) * b.weights()[i];
        const double lhs = ent.closed_form_conjugate(Measure(space, std::move(mixed))).value();
        const double rhs = lambda * ent.closed_form_conjugate(a).value() +
                           (1.0 - lambda) * ent.closed_form_conjugate(b).value();
        CHECK(lhs <= rhs + 1e-8);
    }
}

TEST_CASE("worst-case conjugate solves the scenario program") {
    const Space space(8);
    const Measure u = uniform_probability(space);
    const Measure g = geometric_probability(space);
    std::vector<std::pair<Measure, double>> scenarios;
    scenarios.emplace_back(u, 0.1);
    scenarios.emplace_back(g, 0.4);
    const Functional wc = make_worst_case(scenarios);
    REQUIRE(wc.has_closed_form_conjugate());

    CHECK(std::fabs(wc.closed_form_conjugate(u).value() - 0.1) <= 1e-9);
    CHECK(std::fabs(wc.closed_form_conjugate(g).value() - 0.4) <= 1e-9);

    std::vector<double> mixed(static_cast<std::size_t>(space.size()));
    for (std::size_t i = 0; i < mixed.size(); ++i)
        mixed[i] = 0.5 * u.weights()[i] + 0.5 * g.weights()[i];
    CHECK(std::fabs(wc.closed_form_conjugate(Measure(space, std::move(mixed))).value() - 0.25) <=
          1e-9);

    Rng rng(89);
    const Measure off_hull = random_measure(space, rng);
    CHECK_FALSE(wc.closed_form_conjugate(off_hull).is_finite());
}

TEST_CASE("subgradient of a linear functional is its measure") {
    const Space space(6);
    const Measure nu = geometric_probability(space);
    const Functional lin = make_linear(nu);
    Rng rng(97);
    for (int t = 0; t < 5; ++t) {
        const Measure sg = subgradient(lin, random_func(space, rng));
        for (std::size_t i = 0; i < sg.weights().size(); ++i)
            CHECK(std::fabs(sg.weights()[i] - nu.weights()[i]) <= 1e-9);
    }
}

TEST_CASE("subgradient of entropic is the Gibbs measure") {
    const Space space(5);
    const Measure p = geometric_probability(space);
    const Functional ent = make_entropic(space, p);
    Rng rng(101);
    for (int t = 0; t < 10; ++t) {
        const Func f = random_func(space, rng);
        const Measure sg = subgradient(ent, f);
        const auto gibbs = gibbs_weights(p, f);
        for (std::size_t i = 0; i < gibbs.size(); ++i)
            CHECK(std::fabs(sg.weights()[i] - gibbs[i]) <= 1e-6);
        CHECK(std::fabs(sg.total_mass() - 1.0) <= 1e-9);
    }
}

TEST_CASE("subgradient of sup picks the argmax Dirac") {
    const Space space(6);
    const Functional s = make_sup_functional(space);
    Rng rng(103);
    for (int t = 0; t < 10; ++t) {
        Func base = random_func(space, rng);
        const int argmax = 1 + rng.uniform_int(0, 5);
        std::vector<double> v(base.values().begin(), base.values().end());
        v[static_cast<std::size_t>(argmax - 1)] = base.max_value() + 1.0;  // unique argmax
        const Func f(space, std::move(v));
        const Measure sg = subgradient(s, f);
        CHECK(sg.at(argmax) == 1.0);
        CHECK(sg.total_mass() == 1.0);

        // Independent route: the dual grid over all Dirac measures attains
        // the same value at the same index.
        std::vector<Measure> diracs;
        for (int i = 1; i <= space.size(); ++i) diracs.push_back(dirac(space, i));
        const auto dual_best = dual_value_grid(s, f, diracs);
        REQUIRE(dual_best.has_value());
        CHECK(*dual_best == pairing(f, sg));
    }
}

TEST_CASE("sup ties resolve to the lowest argmax index, shift-invariantly") {
    const Space space(4);
    const Functional s = make_sup_functional(space);
    const Func tie(space, {0.3, 0.7, 0.7, 0.1});
    const Measure sg = subgradient(s, tie);
    CHECK(sg.at(2) == 1.0);
    CHECK(sg.total_mass() == 1.0);

    for (double c : {-2.0, 0.5, 3.0}) {
        const Measure shifted = subgradient(s, tie + c);
        CHECK(shifted.at(2) == 1.0);  // witness index invariant under translation
    }
}

TEST_CASE("verify_maxrep certifies the catalog") {
    const Space space(5);
    const Measure p = geometric_probability(space);
    Rng rng(107);

    SUBCASE("linear: equality case of Fenchel-Young") {
        const Functional lin = make_linear(p);
        const RepresentationReport rep = verify_maxrep(lin, random_func(space, rng));
        CHECK(std::fabs(rep.gap) <= 1e-9);
        CHECK(rep.fenchel_young_violations == 0);
        for (std::size_t i = 0; i < p.weights().size(); ++i)
            CHECK(std::fabs(rep.witness.weights()[i] - p.weights()[i]) <= 1e-9);
    }

    SUBCASE("indicator: zero measure attains the representation") {
        const Functional ind = make_indicator_p(space);
        const Func f = Func::constant(space, -1.0);
        const RepresentationReport rep = verify_maxrep(ind, f);
        CHECK(rep.lhs.value() == 0.0);
        CHECK(rep.gap == 0.0);
        CHECK(rep.witness.total_mass() == 0.0);
        CHECK(rep.fenchel_young_violations == 0);
    }

    SUBCASE("entropic: gap within 1e-6 on random interior points") {
        const Functional ent = make_entropic(space, p);
        for (int t = 0; t < 20; ++t) {
            const RepresentationReport rep = verify_maxrep(ent, random_func(space, rng));
            CHECK(std::fabs(rep.gap) <= 1e-6);
            CHECK(rep.fenchel_young_violations == 0);
        }
    }

    SUBCASE("worst case: scenario vertex witness") {
        const Functional wc = make_worst_case(default_scenarios(space));
        for (int t = 0; t < 10; ++t) {
            const RepresentationReport rep = verify_maxrep(wc, random_func(space, rng));
            CHECK(std::fabs(rep.gap) <= 1e-6);
        }
    }
}

TEST_CASE("verify_maxrep rejects non-interior points") {
    const Space space(3);
    const Functional ind = make_indicator_p(space);
    CHECK_THROWS_AS(verify_maxrep(ind, Func::zero(space)), cvxdual::domain_error);
}

TEST_CASE("dual value grid") {
    const Space space(6);
    const Functional s = make_sup_functional(space);
    Rng rng(109);

    SUBCASE("all Dirac samples recover the sup exactly") {
        for (int t = 0; t < 10; ++t) {
            const Func f = random_func(space, rng);
            std::vector<Measure> diracs;
            for (int i = 1; i <= space.size(); ++i) diracs.push_back(dirac(space, i));
            const auto v = dual_value_grid(s, f, diracs);
            REQUIRE(v.has_value());
            CHECK(*v == f.max_value());
        }
    }

    SUBCASE("zero measure gives the infimum bound for the indicator") {
        const Functional ind = make_indicator_p(space);
        std::vector<Measure> zero = {Measure(space, std::vector<double>(6, 0.0))};
        const auto v = dual_value_grid(ind, random_func(space, rng), zero);
        REQUIRE(v.has_value());
        CHECK(*v == 0.0);
    }

    SUBCASE("the zero measure contributes nothing for the sup functional") {
        std::vector<Measure> zero = {Measure(space, std::vector<double>(6, 0.0))};
        CHECK_FALSE(dual_value_grid(s, random_func(space, rng), zero).has_value());
    }

    SUBCASE("dense simplex grid approaches the entropic value from below") {
        const Space three(3);
        const Functional ent = make_entropic(three, uniform_probability(three));
        std::vector<Measure> grid;
        const int divisions = 45;
        for (int a = 0; a <= divisions; ++a)
            for (int b = 0; a + b <= divisions; ++b) {
                const double x = static_cast<double>(a) / divisions;
                const double y = static_cast<double>(b) / divisions;
                const double z = std::max(0.0, 1.0 - x - y);
                grid.push_back(Measure(three, {x, y, z}));
            }
        for (int t = 0; t < 5; ++t) {
            const Func f = random_func(three, rng, -0.5, 0.5);
            const double value = ent(f).value();
            const auto v = dual_value_grid(ent, f, grid);
            REQUIRE(v.has_value());
            CHECK(*v <= value + 1e-9);  // weak duality
            CHECK(*v >= value - 1e-3);  // dense sampling reaches the value
        }
    }
}

TEST_CASE("probability mass of maxrep witnesses") {
    const Space space(6);
    const Measure p = geometric_probability(space);
    Rng rng(113);

    CHECK(probability_mass_check(make_entropic(space, p), random_func(space, rng)));
    CHECK(probability_mass_check(make_sup_functional(space),
                                 random_func(space, rng) + Func::unit(space, 2) * 5.0));
    CHECK(probability_mass_check(make_worst_case(default_scenarios(space)),
                                 random_func(space, rng)));

    std::vector<double> doubled(p.weights().begin(), p.weights().end());
    for (double& w : doubled) w *= 2.0;
    const Functional lin2 = make_linear(Measure(space, std::move(doubled)));
    CHECK_THROWS_AS(probability_mass_check(lin2, random_func(space, rng)), usage_error);
}

TEST_CASE("weak duality on sampled pairs, extended-real aware") {
    const Space space(8);
    const Measure p = geometric_probability(space);
    const Functional catalog[] = {make_sup_functional(space), make_indicator_p(space),
                                  make_entropic(space, p), make_linear(p),
                                  make_worst_case(default_scenarios(space))};
    Rng rng(127);
    for (const Functional& phi : catalog) {
        int violations = 0;
        for (int t = 0; t < 2000; ++t) {
            const Func f = random_func(space, rng, -3.0, 3.0);
            const Measure mu =
                rng.coin() ? random_probability(space, rng) : random_measure(space, rng);
            const ExtReal lhs = phi(f);
            const ExtReal conj = phi.closed_form_conjugate(mu);
            if (!lhs.is_finite() || !conj.is_finite()) continue;
            if (pairing(f, mu) > lhs.value() + conj.value() + 1e-9) ++violations;
        }
        CHECK(violations == 0);
    }
}

TEST_CASE("biconjugation at desk scale: the witness value reaches phi(f)") {
    const Space space(5);
    const Measure p = geometric_probability(space);
    const Functional catalog[] = {make_sup_functional(space), make_entropic(space, p),
                                  make_linear(p), make_worst_case(default_scenarios(space))};
    Rng rng(131);
    for (const Functional& phi : catalog) {
        for (int t = 0; t < 5; ++t) {
            Func f = random_func(space, rng);
            if (phi.kind() == FunctionalKind::sup) f = f + Func::unit(space, 1) * 5.0;
            const RepresentationReport rep = verify_maxrep(phi, f);
            const double witness_value =
                pairing(f, rep.witness) - conjugate_value(phi, rep.witness).value();
            CHECK(witness_value >= phi(f).value() - 1e-6);
            CHECK(witness_value <= phi(f).value() + 1e-6);
        }
    }
}

TEST_CASE("degenerate conjugate raises") {
    const Space space(3);
    const Functional nowhere(space, FunctionalKind::combinator,
                             [](std::span<const double>) { return ExtReal::infinity(); });
    std::vector<double> w(3, 0.1);
    CHECK_THROWS_AS(conjugate(nowhere, std::span<const double>(w)), degenerate_error);
}

TEST_SUITE_END();
