#pragma once

#include <functional>
#include <vector>

#include "happylab/instance.hpp"

namespace happylab {

// Wraps a set-function evaluator h: 2^V -> Q with h(∅) = 0 (checked at wrap
// time). prefix_values, when present, returns h on all prefixes of a vertex
// order in one sweep; the graph-induced f and g use it to make a whole
// extension evaluation cost one incremental pass instead of n fresh calls.
// Evaluators must be reentrant.
struct SetFunctionHandle {
    enum class Orientation { Submodular, Supermodular, Unknown };

    int ground_size = 0;
    Orientation orientation = Orientation::Unknown;
    std::function<Rat(const VertexSet&)> eval;
    std::function<std::vector<Rat>(const std::vector<int>&)> prefix_values;  // optional
};

SetFunctionHandle make_set_function(int ground_size, std::function<Rat(const VertexSet&)> eval,
                                    SetFunctionHandle::Orientation orientation);

SetFunctionHandle boundary_weight_function(const Instance& inst);   // f, submodular
SetFunctionHandle interior_weight_function(const Instance& inst);   // g, supermodular

// Lovász extension via the level-set integral: ∫₀¹ h({v : y_v >= t}) dt,
// evaluated exactly as a finite sum over the distinct values of y. Defined
// for any y in [0,1]^n; agrees with h on indicator vectors.
Rat lovasz_value(const SetFunctionHandle& h, const std::vector<Rat>& y);

// The telescoping form over a sorted permutation; requires max(y) = 1 and
// min(y) = 0. Cross-check path against lovasz_value.
Rat lovasz_value_telescoping(const SetFunctionHandle& h, const std::vector<Rat>& y);

// Row-stochastic n×k matrix of label shares; column i is the argument fed to
// the extension of f or g.
struct FractionalLabeling {
    int n = 0;
    int k = 0;
    std::vector<Rat> value;  // row-major n*k

    FractionalLabeling() = default;
    FractionalLabeling(int n_, int k_) : n(n_), k(k_), value(size_t(n_) * k_, Rat(0)) {}

    Rat& at(int v, int label) { return value[size_t(v) * k + label - 1]; }
    const Rat& at(int v, int label) const { return value[size_t(v) * k + label - 1]; }

    std::vector<Rat> column(int label) const {
        std::vector<Rat> col(n);
        for (int v = 0; v < n; ++v) col[v] = at(v, label);
        return col;
    }
};

// Invariants: entries in [0,1], rows sum to exactly 1, pre-colored vertices
// carry an indicator row. Throws InvariantViolation.
void check_labeling(const Instance& inst, const FractionalLabeling& y);

FractionalLabeling labeling_from_coloring(const Instance& inst, const Coloring& col);

// Muhv: Σ_i f̂(y_i); Mhv: Σ_i ĝ(y_i). The two sum to w(V) for any feasible y.
Rat relaxation_objective(const Instance& inst, const FractionalLabeling& y, Objective obj);

}  // namespace happylab
