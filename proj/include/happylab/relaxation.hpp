#pragma once

#include "happylab/instance.hpp"
#include "happylab/lovasz.hpp"
#include "happylab/lp.hpp"

namespace happylab {

// LP relaxations of the two objectives over the common labeling polytope
// (row sums 1, pre-color indicators, nonnegativity).
//
// Variable layout, shared by both builders and relied on by
// extract_labeling: first the y-block (vertex-major, label-minor), then the
// per-vertex-per-label auxiliary block (z or x, same order), then the
// per-vertex aggregate block.
//
// build_lp_mhv linearizes z_v_i = min over the closed neighborhood of y as
// z_v_i <= y_u_i for every u in N[v]; a maximization optimum attains the min.
// build_lp_muhv uses x_v_i >= y_v_i - y_u_i over open neighborhoods.
LinearProgram build_lp_mhv(const Instance& inst);
LinearProgram build_lp_muhv(const Instance& inst);

// Reads the y-block of an optimal solution back into a labeling. On the
// float solver path the entries are repaired to an exactly feasible point
// (pre-color rows reset to indicators, rows renormalized).
FractionalLabeling extract_labeling(const Instance& inst, const LpSolution& sol,
                                    bool repair = false);

// LP-optimal auxiliary values for a given feasible labeling:
// tighten_mhv:  z_v_i = min over N[v] of y;   objective Σ w_v Σ_i z_v_i.
// tighten_muhv: x_v_i = max(0, y_v_i - min over N(v) of y); isolated vertices
//               get 0. Objective Σ w_v Σ_i x_v_i.
// Per Theorems relating the LPs to the extensions, the objectives equal
// Σ_i ĝ(y_i) and Σ_i f̂(y_i) respectively, exactly.
struct AuxiliaryValues {
    std::vector<Rat> per_vertex_label;  // row-major n*k
    std::vector<Rat> per_vertex;
    Rat objective;

    const Rat& at(int v, int label, int k) const { return per_vertex_label[size_t(v) * k + label - 1]; }
};

AuxiliaryValues tighten_mhv(const Instance& inst, const FractionalLabeling& y);
AuxiliaryValues tighten_muhv(const Instance& inst, const FractionalLabeling& y);

}  // namespace happylab
