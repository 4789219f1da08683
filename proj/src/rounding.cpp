#include "happylab/rounding.hpp"

#include <algorithm>

#include "happylab/errors.hpp"
#include "happylab/rng.hpp"

namespace happylab {

namespace {

const Rat kHalf = Rat(1, 2);

// Strict upper level sets at an arbitrary threshold in [0, 1].
ThresholdSets sets_at(const FractionalLabeling& y, const Rat& t) {
    ThresholdSets s;
    s.above.assign(y.k, VertexSet(y.n));
    s.labeled = VertexSet(y.n);
    for (int i = 1; i <= y.k; ++i)
        for (int v = 0; v < y.n; ++v)
            if (y.at(v, i) > t) {
                s.above[i - 1].set(v);
                s.labeled.set(v);
            }
    s.residual = s.labeled.complement();
    return s;
}

Coloring color_from_sets(const ThresholdSets& s, int n, int k, int fallback) {
    Coloring col;
    col.label.assign(n, fallback);
    for (int i = 1; i <= k; ++i)
        s.above[i - 1].for_each([&](int v) { col.label[v] = i; });
    return col;
}

}  // namespace

ThresholdSets level_sets(const FractionalLabeling& y, const Rat& theta) {
    if (theta <= kHalf || theta > 1)
        throw ThetaOutOfRange("theta must lie in (1/2, 1]");
    ThresholdSets s = sets_at(y, theta);
    s.residual_mirror = sets_at(y, Rat(1) - theta).residual;
    return s;
}

RoundingOutcome round_random(const Instance& inst, const FractionalLabeling& y, uint64_t seed) {
    check_labeling(inst, y);
    Rng rng(seed);
    RoundingOutcome out;
    out.theta = rng.theta();
    out.fallback_label = rng.label(inst.k);
    ThresholdSets s = sets_at(y, out.theta);
    out.coloring = color_from_sets(s, inst.n, inst.k, out.fallback_label);
    out.value_muhv = evaluate(inst, out.coloring, Objective::Muhv);
    out.value_mhv = inst.total_weight - out.value_muhv;
    return out;
}

std::pair<RoundingOutcome, RoundingDistribution> round_derandomized(const Instance& inst,
                                                                    const FractionalLabeling& y,
                                                                    Objective obj) {
    check_labeling(inst, y);

    // Breakpoints: distinct entries strictly inside (1/2, 1). The outcome is
    // constant between consecutive ones.
    std::vector<Rat> cuts;
    for (const Rat& e : y.value)
        if (e > kHalf && e < 1) cuts.push_back(e);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Rat> edges;
    edges.reserve(cuts.size() + 2);
    edges.push_back(kHalf);
    for (auto& c : cuts) edges.push_back(c);
    edges.push_back(Rat(1));

    const int intervals = int(edges.size()) - 1;
    struct IntervalCells {
        std::vector<RoundingDistribution::Cell> cells;
        std::vector<Coloring> colorings;
        std::vector<Rat> muhv;
    };
    std::vector<IntervalCells> per_interval(intervals);

#pragma omp parallel for schedule(dynamic) if (intervals > 8)
    for (int s = 0; s < intervals; ++s) {
        const Rat& lo = edges[s];
        const Rat& hi = edges[s + 1];
        Rat rep = (lo + hi) / 2;
        Rat base_prob = 2 * (hi - lo);  // theta density on (1/2, 1) is 2
        ThresholdSets sets = sets_at(y, rep);
        IntervalCells& bucket = per_interval[s];
        if (sets.residual.empty()) {
            Coloring col = color_from_sets(sets, inst.n, inst.k, 1);
            Rat muhv = evaluate(inst, col, Objective::Muhv);
            Rat value = obj == Objective::Muhv ? muhv : inst.total_weight - muhv;
            bucket.cells.push_back({lo, hi, 0, base_prob, value});
            bucket.colorings.push_back(std::move(col));
            bucket.muhv.push_back(std::move(muhv));
        } else {
            for (int fb = 1; fb <= inst.k; ++fb) {
                Coloring col = color_from_sets(sets, inst.n, inst.k, fb);
                Rat muhv = evaluate(inst, col, Objective::Muhv);
                Rat value = obj == Objective::Muhv ? muhv : inst.total_weight - muhv;
                bucket.cells.push_back({lo, hi, fb, base_prob / inst.k, value});
                bucket.colorings.push_back(std::move(col));
                bucket.muhv.push_back(std::move(muhv));
            }
        }
    }

    RoundingDistribution dist;
    dist.objective = obj;
    dist.expectation = 0;
    int best_interval = -1, best_cell = -1;
    const bool minimize = obj == Objective::Muhv;
    for (int s = 0; s < intervals; ++s) {
        for (size_t c = 0; c < per_interval[s].cells.size(); ++c) {
            const auto& cell = per_interval[s].cells[c];
            dist.expectation += cell.probability * cell.value;
            bool better = best_interval < 0;
            if (!better) {
                const Rat& cur = per_interval[best_interval].cells[best_cell].value;
                better = minimize ? cell.value < cur : cell.value > cur;
            }
            if (better) {
                best_interval = s;
                best_cell = int(c);
            }
            dist.cells.push_back(cell);
        }
    }

    const auto& win = per_interval[best_interval];
    RoundingOutcome out;
    out.theta = (win.cells[best_cell].theta_lo + win.cells[best_cell].theta_hi) / 2;
    out.fallback_label = std::max(win.cells[best_cell].fallback_label, 1);
    out.coloring = win.colorings[best_cell];
    out.value_muhv = win.muhv[best_cell];
    out.value_mhv = inst.total_weight - out.value_muhv;
    return {std::move(out), std::move(dist)};
}

ApproxRun solve_approx(const Instance& inst, Objective obj, const ApproxOptions& opts) {
    LinearProgram lp = obj == Objective::Muhv ? build_lp_muhv(inst) : build_lp_mhv(inst);
    LpSolution sol = solve_lp(lp, opts.lp);
    if (sol.status != LpSolution::Status::Optimal)
        throw SolverFailure("relaxation LP did not solve to optimality");

    ApproxRun run;
    run.lp_value = sol.objective;
    run.labeling = extract_labeling(inst, sol, opts.lp.mode == SolveOptions::Mode::Float);
    if (opts.mode == ApproxOptions::Mode::Random) {
        run.outcome = round_random(inst, run.labeling, opts.seed);
    } else {
        auto [best, dist] = round_derandomized(inst, run.labeling, obj);
        run.outcome = std::move(best);
        run.distribution = std::move(dist);
    }
    return run;
}

}  // namespace happylab
