#include "cvxdual/limits.hpp"

#include <algorithm>
#include <cmath>

#include "cvxdual/rng.hpp"

namespace cvxdual {

namespace {

double shape_weight(ResidualShape shape, int n, int cap_rank) {
    switch (shape) {
        case ResidualShape::geometric:
            return std::ldexp(1.0, 1 - n);  // 1, 1/2, 1/4, ...
        case ResidualShape::harmonic:
            return 1.0 / static_cast<double>(n);
        case ResidualShape::harmonic_capped: {
            if (n >= cap_rank) return 0.0;
            const double cap = static_cast<double>(cap_rank);
            return (1.0 / n - 1.0 / cap) / (1.0 - 1.0 / cap);  // normalized to 1 at n = 1
        }
    }
    return 0.0;
}

void require_nonnegative_residual(const Func& residual) {
    for (double v : residual.values())
        if (v < 0.0) throw usage_error("MonotoneSequence: residual must be nonnegative");
}

/// Consume the sequence up to max_rank, checking the structural invariants
/// (side of the target, pointwise monotonicity between consecutive terms).
std::vector<Func> materialize(const MonotoneSequence& seq, int max_rank) {
    std::vector<Func> terms;
    terms.reserve(static_cast<std::size_t>(max_rank));
    for (int n = 1; n <= max_rank; ++n) {
        Func t = seq.term(n);
        if (t.space() != seq.target().space())
            throw sequence_error("monotone sequence: term space mismatch");
        if (seq.direction() == SequenceDirection::down) {
            if (!pointwise_leq(seq.target(), t))
                throw sequence_error("monotone sequence: down-term below its target");
            if (!terms.empty() && !pointwise_leq(t, terms.back()))
                throw sequence_error("monotone sequence: down-terms must be non-increasing");
        } else {
            if (!pointwise_leq(t, seq.target()))
                throw sequence_error("monotone sequence: up-term above its target");
            if (!terms.empty() && !pointwise_leq(terms.back(), t))
                throw sequence_error("monotone sequence: up-terms must be non-decreasing");
        }
        terms.push_back(std::move(t));
    }
    return terms;
}

bool trace_monotone(const std::vector<ExtReal>& trace, SequenceDirection direction, double tol) {
    for (std::size_t i = 1; i < trace.size(); ++i) {
        const ExtReal& prev = trace[i - 1];
        const ExtReal& cur = trace[i];
        if (direction == SequenceDirection::down) {
            // Non-increasing: allow cur <= prev + tol (inf dominates all).
            if (!prev.is_finite()) continue;
            if (!cur.is_finite()) return false;
            if (cur.value() > prev.value() + tol) return false;
        } else {
            if (!cur.is_finite()) continue;
            if (!prev.is_finite()) return false;
            if (cur.value() < prev.value() - tol) return false;
        }
    }
    return true;
}

ConditionVerdict downward_trace_verdict(const Functional& phi, const Func& target,
                                        const std::vector<Func>& terms, ConditionId id,
                                        const CheckOptions& options) {
    const ExtReal at_target = phi(target);
    if (!at_target.is_finite())
        throw domain_error("check_condition: phi(target) is not finite");
    ConditionVerdict verdict;
    verdict.condition = id;
    for (const Func& t : terms) verdict.trace.push_back(phi(t));
    if (!trace_monotone(verdict.trace, SequenceDirection::down, options.tol))
        throw sequence_error("check_condition: non-monotone trace (sequence invalid)");
    const ExtReal gap = ext_abs_gap(verdict.trace.back(), at_target);
    verdict.passed = gap.is_finite() && gap.value() <= options.tol;
    return verdict;
}

}  // namespace

std::string condition_name(ConditionId id) {
    switch (id) {
        case ConditionId::i: return "i";
        case ConditionId::ii: return "ii";
        case ConditionId::iii: return "iii";
        case ConditionId::v: return "v";
        case ConditionId::vi: return "vi";
        case ConditionId::tightness: return "tightness";
    }
    return "?";
}

MonotoneSequence::MonotoneSequence(Func target, std::function<Func(int)> term,
                                   SequenceDirection direction)
    : target_(std::move(target)), term_(std::move(term)), direction_(direction) {
    if (!term_) throw usage_error("MonotoneSequence: term generator required");
}

Func MonotoneSequence::term(int n) const {
    if (n < 1) throw usage_error("MonotoneSequence: rank must be >= 1");
    return term_(n);
}

MonotoneSequence MonotoneSequence::down_to(const Func& target, const Func& residual,
                                           ResidualShape shape, int cap_rank) {
    if (!target.same_space(residual)) throw usage_error("MonotoneSequence: space mismatch");
    require_nonnegative_residual(residual);
    auto gen = [target, residual, shape, cap_rank](int n) {
        return target + residual * shape_weight(shape, n, cap_rank);
    };
    return MonotoneSequence(target, gen, SequenceDirection::down);
}

MonotoneSequence MonotoneSequence::up_to(const Func& target, const Func& residual,
                                         ResidualShape shape, int cap_rank) {
    if (!target.same_space(residual)) throw usage_error("MonotoneSequence: space mismatch");
    require_nonnegative_residual(residual);
    auto gen = [target, residual, shape, cap_rank](int n) {
        return target + residual * (-shape_weight(shape, n, cap_rank));
    };
    return MonotoneSequence(target, gen, SequenceDirection::up);
}

MonotoneSequence MonotoneSequence::down_to_zero(const Func& residual, ResidualShape shape,
                                                int cap_rank) {
    return down_to(Func::zero(residual.space()), residual, shape, cap_rank);
}

ConditionVerdict check_condition(const Functional& phi, const MonotoneSequence& seq,
                                 ConditionId condition, const std::optional<Func>& base_point,
                                 const CheckOptions& options) {
    switch (condition) {
        case ConditionId::ii: {
            if (seq.direction() != SequenceDirection::down)
                throw usage_error("check_condition(ii): down-sequence required");
            const auto terms = materialize(seq, options.max_rank);
            return downward_trace_verdict(phi, seq.target(), terms, ConditionId::ii, options);
        }
        case ConditionId::vi: {
            if (seq.direction() != SequenceDirection::up)
                throw usage_error("check_condition(vi): up-sequence required");
            const auto terms = materialize(seq, options.max_rank);
            const ExtReal at_target = phi(seq.target());
            if (!at_target.is_finite())
                throw domain_error("check_condition: phi(target) is not finite");
            ConditionVerdict verdict;
            verdict.condition = ConditionId::vi;
            for (const Func& t : terms) verdict.trace.push_back(phi(t));
            if (!trace_monotone(verdict.trace, SequenceDirection::up, options.tol))
                throw sequence_error("check_condition: non-monotone trace (sequence invalid)");
            const ExtReal gap = ext_abs_gap(verdict.trace.back(), at_target);
            verdict.passed = gap.is_finite() && gap.value() <= options.tol;
            return verdict;
        }
        case ConditionId::iii: {
            if (seq.direction() != SequenceDirection::down)
                throw usage_error("check_condition(iii): down-sequence required");
            if (seq.target().sup_norm() != 0.0)
                throw usage_error("check_condition(iii): sequence target must be 0");
            if (!base_point)
                throw usage_error("check_condition(iii): interior base point required");
            const Func& f = *base_point;
            const ExtReal at_f = phi(f);
            if (!at_f.is_finite()) throw domain_error("check_condition(iii): phi(f) is not finite");
            const auto terms = materialize(seq, options.max_rank);

            ConditionVerdict verdict;
            verdict.condition = ConditionId::iii;
            for (int j = 0; j <= 20; ++j) {
                const double eps = std::ldexp(1.0, -j);
                // Domain margin: the doubled first term must stay finite, so
                // the recorded epsilon never touches the domain boundary.
                if (!phi(f + terms.front() * (2.0 * eps)).is_finite()) continue;
                std::vector<ExtReal> trace;
                trace.reserve(terms.size());
                bool finite = true;
                for (const Func& t : terms) {
                    const ExtReal v = phi(f + t * eps);
                    if (!v.is_finite()) {
                        finite = false;
                        break;
                    }
                    trace.push_back(v);
                }
                if (!finite) continue;
                if (!trace_monotone(trace, SequenceDirection::down, options.tol)) continue;
                const double gap = std::fabs(trace.back().value() - at_f.value());
                if (gap <= options.tol) {
                    verdict.passed = true;
                    verdict.witness_epsilon = eps;
                    verdict.trace = std::move(trace);
                    return verdict;
                }
                if (verdict.trace.empty()) verdict.trace = trace;  // keep one for diagnostics
            }
            verdict.passed = false;
            return verdict;
        }
        case ConditionId::i: {
            if (seq.direction() != SequenceDirection::down)
                throw usage_error("check_condition(i): down-sequence required");
            const auto terms = materialize(seq, options.max_rank);
            // Residuals of the supplied sequence, replayed from sampled
            // interior base points: a 16-point existence search.
            std::vector<Func> residuals;
            residuals.reserve(terms.size());
            for (const Func& t : terms) residuals.push_back(t - seq.target());

            std::vector<Func> candidates;
            candidates.push_back(seq.target());
            for (double c : {-0.25, -0.5, -1.0}) candidates.push_back(seq.target() + c);
            Rng rng(0xba5e011ULL);
            while (candidates.size() < 16) {
                std::vector<double> d(static_cast<std::size_t>(phi.space().size()));
                for (double& x : d) x = rng.uniform(-0.5, 0.5);
                candidates.push_back(seq.target() + Func(phi.space(), std::move(d)));
            }

            ConditionVerdict verdict;
            verdict.condition = ConditionId::i;
            for (const Func& f0 : candidates) {
                if (!in_interior(phi, f0)) continue;
                std::vector<Func> shifted;
                shifted.reserve(residuals.size());
                for (const Func& r : residuals) shifted.push_back(f0 + r);
                ConditionVerdict inner;
                try {
                    inner = downward_trace_verdict(phi, f0, shifted, ConditionId::i, options);
                } catch (const domain_error&) {
                    continue;
                }
                if (inner.passed) return inner;
                if (verdict.trace.empty()) verdict.trace = inner.trace;
            }
            verdict.passed = false;
            return verdict;
        }
        case ConditionId::v:
        case ConditionId::tightness:
            throw usage_error(
                "check_condition: condition '" + condition_name(condition) +
                "' is handled by the duality module / tightness_check, not the sequence checker");
    }
    throw usage_error("check_condition: unknown condition");
}

EscapeDiagnostic mass_escape_diagnostic(const std::function<double(int)>& profile,
                                        std::span<const Space> ladder) {
    if (ladder.empty()) throw usage_error("mass_escape_diagnostic: empty ladder");
    const int top = ladder.back().size();
    double prev = profile(1);
    for (int m = 2; m <= top; ++m) {
        const double cur = profile(m);
        if (cur < prev) throw usage_error("mass_escape_diagnostic: profile must be non-decreasing");
        prev = cur;
    }

    EscapeDiagnostic diag;
    diag.ladder.assign(ladder.begin(), ladder.end());
    for (const Space& rung : ladder) {
        const Functional sup = make_sup_functional(rung);
        const Func f = profile_func(rung, profile);
        diag.per_rung_witness.push_back(subgradient(sup, f));
    }
    for (std::size_t k = 0; k < diag.per_rung_witness.size(); ++k) {
        std::vector<double> row;
        for (std::size_t j = 0; j <= k; ++j)
            row.push_back(diag.per_rung_witness[k].prefix_mass(ladder[j].size()));
        diag.mass_on_prefix.push_back(std::move(row));
    }
    const Measure& top_witness = diag.per_rung_witness.back();
    diag.escape_detected = top_witness.prefix_mass(top / 2) == 0.0;
    return diag;
}

EscapeDiagnostic dirac_ladder_diagnostic(std::span<const Space> ladder) {
    if (ladder.empty()) throw usage_error("dirac_ladder_diagnostic: empty ladder");
    EscapeDiagnostic diag;
    diag.ladder.assign(ladder.begin(), ladder.end());
    for (const Space& rung : ladder)
        diag.per_rung_witness.push_back(dirac(rung, rung.size()));
    for (std::size_t k = 0; k < diag.per_rung_witness.size(); ++k) {
        std::vector<double> row;
        for (std::size_t j = 0; j <= k; ++j)
            row.push_back(diag.per_rung_witness[k].prefix_mass(ladder[j].size()));
        diag.mass_on_prefix.push_back(std::move(row));
    }
    diag.escape_detected =
        diag.per_rung_witness.back().prefix_mass(ladder.back().size() / 2) == 0.0;
    return diag;
}

ConditionVerdict tightness_check(const Functional& phi, double M, std::span<const Space> ladder,
                                 const CheckOptions& options) {
    if (M < 1.0) throw usage_error("tightness_check: M >= 1 required");
    if (ladder.size() < 2) throw usage_error("tightness_check: ladder needs at least two rungs");
    const Space& top = ladder.back();
    if (phi.space() != top) throw usage_error("tightness_check: phi must live on the top rung");

    const ExtReal at_zero = phi(Func::zero(top));
    if (!at_zero.is_finite()) throw domain_error("tightness_check: phi(0) is not finite");

    ConditionVerdict verdict;
    verdict.condition = ConditionId::tightness;
    for (std::size_t j = 0; j + 1 < ladder.size(); ++j) {
        const int prefix = ladder[j].size();
        std::vector<double> v(static_cast<std::size_t>(top.size()), 0.0);
        for (int i = prefix; i < top.size(); ++i) v[static_cast<std::size_t>(i)] = M;
        verdict.trace.push_back(phi(Func(top, std::move(v))));
    }
    const bool monotone = trace_monotone(verdict.trace, SequenceDirection::down, options.tol);
    const ExtReal gap = ext_abs_gap(verdict.trace.back(), at_zero);
    verdict.passed = monotone && gap.is_finite() && gap.value() <= options.tol;
    return verdict;
}

bool check_regular(const Measure& mu, const RegularityOptions& options) {
    const Space& space = mu.space();
    const auto prefixes = space.compact_prefixes();
    const double total = mu.total_mass();

    double best = 0.0;
    for (int m : prefixes) best = std::max(best, mu.prefix_mass(m));
    if (best < total - options.tol) return false;

    Rng rng(options.seed);
    for (int s = 0; s < options.subset_samples; ++s) {
        std::vector<bool> in_set(static_cast<std::size_t>(space.size()));
        double mass_a = 0.0;
        for (int i = 0; i < space.size(); ++i) {
            in_set[static_cast<std::size_t>(i)] = rng.coin();
            if (in_set[static_cast<std::size_t>(i)]) mass_a += mu.weights()[static_cast<std::size_t>(i)];
        }
        double best_inner = 0.0;
        for (int m : prefixes) {
            double inner = 0.0;
            for (int i = 0; i < m; ++i)
                if (in_set[static_cast<std::size_t>(i)]) inner += mu.weights()[static_cast<std::size_t>(i)];
            best_inner = std::max(best_inner, inner);
        }
        if (best_inner < mass_a - options.tol) return false;
    }
    return true;
}

StepApproximation step_approximation(const Func& f, double delta) {
    if (!(delta > 0.0)) throw usage_error("step_approximation: delta > 0 required");
    const double lo = f.min_value();
    const double hi = f.max_value();
    const int raw_cells = static_cast<int>(std::ceil((hi - lo) / delta)) + 1;

    std::vector<std::vector<int>> cells(static_cast<std::size_t>(raw_cells));
    const auto values = f.values();
    std::vector<int> cell_of(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        int m = static_cast<int>(std::floor((values[i] - lo) / delta));
        m = std::clamp(m, 0, raw_cells - 1);
        // Repair floating-point boundary misplacement so the exact sandwich
        // comparisons hold cell by cell.
        while (m > 0 && values[i] < lo + m * delta) --m;
        while (m + 1 < raw_cells && values[i] >= lo + (m + 1) * delta) ++m;
        cells[static_cast<std::size_t>(m)].push_back(static_cast<int>(i) + 1);
        cell_of[i] = m;
    }

    StepApproximation out{.partition = {}, .levels = {}, .step = f};
    std::vector<double> step_values(values.size());
    std::vector<int> remap(static_cast<std::size_t>(raw_cells), -1);
    for (int m = 0; m < raw_cells; ++m) {
        if (cells[static_cast<std::size_t>(m)].empty()) continue;
        remap[static_cast<std::size_t>(m)] = static_cast<int>(out.levels.size());
        out.levels.push_back(lo + m * delta);
        out.partition.push_back(std::move(cells[static_cast<std::size_t>(m)]));
    }
    for (std::size_t i = 0; i < values.size(); ++i)
        step_values[i] = out.levels[static_cast<std::size_t>(remap[static_cast<std::size_t>(cell_of[i])])];
    out.step = Func(f.space(), std::move(step_values));
    return out;
}

bool step_pairing_inequality_check(const Func& f, const Measure& mu, double delta) {
    if (f.space() != mu.space()) throw usage_error("step_pairing_inequality_check: space mismatch");
    const StepApproximation approx = step_approximation(f, delta);
    // On a discrete space the closed inner sets equal the partition cells, so
    // the inner function h coincides with the step function g.
    const double lhs = pairing(f, mu);
    const double rhs = pairing(approx.step, mu) + delta * (mu.total_mass() + 1.0);
    return lhs <= rhs;
}

std::optional<double> lower_regularization(const Functional& phi, const Func& f,
                                           std::span<const Func> test_family) {
    if (test_family.empty()) throw usage_error("lower_regularization: nonempty family required");
    std::optional<double> best;
    for (const Func& g : test_family) {
        if (g.space() != f.space()) throw usage_error("lower_regularization: space mismatch");
        if (!pointwise_leq(g, f)) continue;
        const ExtReal v = phi(g);
        if (!v.is_finite()) continue;
        if (!best || v.value() > *best) best = v.value();
    }
    return best;
}

}  // namespace cvxdual
