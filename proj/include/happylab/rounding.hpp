#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "happylab/lovasz.hpp"
#include "happylab/lp.hpp"
#include "happylab/relaxation.hpp"

namespace happylab {

// Threshold sets of a labeling at theta: per-label strict upper level sets,
// their union, the residual, and the residual at the mirrored threshold
// 1-theta (a diagnostic; the rounding itself never uses it). For
// theta > 1/2 the per-label sets are pairwise disjoint.
struct ThresholdSets {
    std::vector<VertexSet> above;  // index i-1 holds label i
    VertexSet labeled;
    VertexSet residual;
    VertexSet residual_mirror;
};

ThresholdSets level_sets(const FractionalLabeling& y, const Rat& theta);

struct RoundingOutcome {
    Rat theta;
    int fallback_label = 1;  // unused when the residual was empty
    Coloring coloring;
    Rat value_mhv;
    Rat value_muhv;
};

// Exact distribution of the randomized rounding: theta uniform on (1/2, 1),
// fallback label uniform on {1..k}. The outcome is constant on the intervals
// between consecutive distinct entries of y, so the distribution is a finite
// list of (interval × fallback) cells; cells whose residual is empty collapse
// across fallback labels.
struct RoundingDistribution {
    Objective objective;
    struct Cell {
        Rat theta_lo, theta_hi;
        int fallback_label;  // 0 when the residual is empty
        Rat probability;
        Rat value;
    };
    std::vector<Cell> cells;
    Rat expectation;
};

// One seeded draw: theta from the open interval (1/2, 1) — the closed end
// would let the fallback overwrite pre-colored vertices, and it carries
// probability zero — then the fallback label. Labels every above-set with its
// label and the residual with the fallback.
RoundingOutcome round_random(const Instance& inst, const FractionalLabeling& y, uint64_t seed);

// Enumerates every cell, computes the exact expectation, and returns the best
// cell's outcome (min for Muhv, max for Mhv; ties to the earliest cell).
std::pair<RoundingOutcome, RoundingDistribution> round_derandomized(const Instance& inst,
                                                                    const FractionalLabeling& y,
                                                                    Objective obj);

struct ApproxOptions {
    enum class Mode { Random, Derandomized };
    Mode mode = Mode::Derandomized;
    uint64_t seed = 0;
    SolveOptions lp;
};

struct ApproxRun {
    RoundingOutcome outcome;
    Rat lp_value;
    FractionalLabeling labeling;
    std::optional<RoundingDistribution> distribution;  // derandomized mode only
};

// Full pipeline: build and solve the matching LP, extract the fractional
// labeling, round. Approximation guarantees: 2 - 2/k for Muhv, 2/k for Mhv.
ApproxRun solve_approx(const Instance& inst, Objective obj, const ApproxOptions& opts = {});

}  // namespace happylab
