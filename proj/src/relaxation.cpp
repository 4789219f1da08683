#include "happylab/relaxation.hpp"

#include <algorithm>

#include "happylab/errors.hpp"

namespace happylab {

namespace {

std::string yname(int v, int i) {
    return "y_" + std::to_string(v + 1) + "_" + std::to_string(i);
}

// Adds the y-block and the polytope rows shared by both relaxations.
void add_labeling_polytope(const Instance& inst, LinearProgram& lp) {
    for (int v = 0; v < inst.n; ++v)
        for (int i = 1; i <= inst.k; ++i) lp.add_var(yname(v, i));
    for (int v = 0; v < inst.n; ++v) {
        std::vector<std::pair<int, Rat>> row;
        row.reserve(inst.k);
        for (int i = 1; i <= inst.k; ++i) row.emplace_back(v * inst.k + i - 1, Rat(1));
        lp.add_row(std::move(row), Rel::Eq, Rat(1));
    }
    for (int v = 0; v < inst.n; ++v)
        if (inst.precolor[v] != 0)
            lp.add_row({{v * inst.k + inst.precolor[v] - 1, Rat(1)}}, Rel::Eq, Rat(1));
}

}  // namespace

LinearProgram build_lp_mhv(const Instance& inst) {
    LinearProgram lp;
    lp.sense = Sense::Maximize;
    add_labeling_polytope(inst, lp);

    const int zbase = inst.n * inst.k;
    for (int v = 0; v < inst.n; ++v)
        for (int i = 1; i <= inst.k; ++i)
            lp.add_var("z_" + std::to_string(v + 1) + "_" + std::to_string(i));
    for (int v = 0; v < inst.n; ++v) {
        int zv = lp.add_var("z_" + std::to_string(v + 1));
        lp.set_objective(zv, inst.weight[v]);
    }

    // z_v_i <= y_u_i over the closed neighborhood (v first, then sorted).
    for (int v = 0; v < inst.n; ++v) {
        for (int i = 1; i <= inst.k; ++i) {
            const int zvi = zbase + v * inst.k + i - 1;
            lp.add_row({{zvi, Rat(1)}, {v * inst.k + i - 1, Rat(-1)}}, Rel::Le, Rat(0));
            for (int u : inst.adj[v])
                lp.add_row({{zvi, Rat(1)}, {u * inst.k + i - 1, Rat(-1)}}, Rel::Le, Rat(0));
        }
    }
    const int aggbase = zbase + inst.n * inst.k;
    for (int v = 0; v < inst.n; ++v) {
        std::vector<std::pair<int, Rat>> row{{aggbase + v, Rat(1)}};
        for (int i = 1; i <= inst.k; ++i) row.emplace_back(zbase + v * inst.k + i - 1, Rat(-1));
        lp.add_row(std::move(row), Rel::Eq, Rat(0));
    }
    return lp;
}

LinearProgram build_lp_muhv(const Instance& inst) {
    LinearProgram lp;
    lp.sense = Sense::Minimize;
    add_labeling_polytope(inst, lp);

    const int xbase = inst.n * inst.k;
    for (int v = 0; v < inst.n; ++v)
        for (int i = 1; i <= inst.k; ++i)
            lp.add_var("x_" + std::to_string(v + 1) + "_" + std::to_string(i));
    for (int v = 0; v < inst.n; ++v) {
        int xv = lp.add_var("x_" + std::to_string(v + 1));
        lp.set_objective(xv, inst.weight[v]);
    }

    // x_v_i >= y_v_i - y_u_i over the open neighborhood.
    for (int v = 0; v < inst.n; ++v) {
        for (int i = 1; i <= inst.k; ++i) {
            const int xvi = xbase + v * inst.k + i - 1;
            for (int u : inst.adj[v])
                lp.add_row({{xvi, Rat(1)}, {v * inst.k + i - 1, Rat(-1)}, {u * inst.k + i - 1, Rat(1)}},
                           Rel::Ge, Rat(0));
        }
    }
    const int aggbase = xbase + inst.n * inst.k;
    for (int v = 0; v < inst.n; ++v) {
        std::vector<std::pair<int, Rat>> row{{aggbase + v, Rat(1)}};
        for (int i = 1; i <= inst.k; ++i) row.emplace_back(xbase + v * inst.k + i - 1, Rat(-1));
        lp.add_row(std::move(row), Rel::Eq, Rat(0));
    }
    return lp;
}

FractionalLabeling extract_labeling(const Instance& inst, const LpSolution& sol, bool repair) {
    if (sol.status != LpSolution::Status::Optimal)
        throw SolverFailure("no optimal LP solution to extract a labeling from");
    if (int(sol.value.size()) < inst.n * inst.k)
        throw SolverFailure("LP solution is missing the labeling block");
    FractionalLabeling y(inst.n, inst.k);
    for (int v = 0; v < inst.n; ++v)
        for (int i = 1; i <= inst.k; ++i) y.at(v, i) = sol.value[v * inst.k + i - 1];
    if (repair) {
        for (int v = 0; v < inst.n; ++v) {
            if (inst.precolor[v] != 0) {
                for (int i = 1; i <= inst.k; ++i) y.at(v, i) = Rat(i == inst.precolor[v] ? 1 : 0);
                continue;
            }
            Rat row_sum = 0;
            for (int i = 1; i <= inst.k; ++i) {
                Rat& e = y.at(v, i);
                if (sgn(e) < 0) e = 0;
                if (e > 1) e = 1;
                row_sum += e;
            }
            if (sgn(row_sum) == 0) {
                y.at(v, 1) = 1;
            } else if (row_sum != 1) {
                for (int i = 1; i <= inst.k; ++i) y.at(v, i) /= row_sum;
            }
        }
    }
    check_labeling(inst, y);
    return y;
}

AuxiliaryValues tighten_mhv(const Instance& inst, const FractionalLabeling& y) {
    check_labeling(inst, y);
    AuxiliaryValues out;
    out.per_vertex_label.assign(size_t(inst.n) * inst.k, Rat(0));
    out.per_vertex.assign(inst.n, Rat(0));
    out.objective = 0;
    for (int v = 0; v < inst.n; ++v) {
        for (int i = 1; i <= inst.k; ++i) {
            Rat z = y.at(v, i);
            for (int u : inst.adj[v]) z = std::min(z, y.at(u, i));
            out.per_vertex[v] += z;
            out.per_vertex_label[size_t(v) * inst.k + i - 1] = std::move(z);
        }
        out.objective += inst.weight[v] * out.per_vertex[v];
    }
    return out;
}

AuxiliaryValues tighten_muhv(const Instance& inst, const FractionalLabeling& y) {
    check_labeling(inst, y);
    AuxiliaryValues out;
    out.per_vertex_label.assign(size_t(inst.n) * inst.k, Rat(0));
    out.per_vertex.assign(inst.n, Rat(0));
    out.objective = 0;
    for (int v = 0; v < inst.n; ++v) {
        for (int i = 1; i <= inst.k; ++i) {
            Rat x(0);
            if (!inst.adj[v].empty()) {
                Rat low = y.at(inst.adj[v][0], i);
                for (int u : inst.adj[v]) low = std::min(low, y.at(u, i));
                x = y.at(v, i) - low;
                if (sgn(x) < 0) x = 0;
            }
            out.per_vertex[v] += x;
            out.per_vertex_label[size_t(v) * inst.k + i - 1] = std::move(x);
        }
        out.objective += inst.weight[v] * out.per_vertex[v];
    }
    return out;
}

}  // namespace happylab
