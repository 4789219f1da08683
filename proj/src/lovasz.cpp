#include "happylab/lovasz.hpp"

#include <algorithm>
#include <numeric>

#include "happylab/errors.hpp"

namespace happylab {

SetFunctionHandle make_set_function(int ground_size, std::function<Rat(const VertexSet&)> eval,
                                    SetFunctionHandle::Orientation orientation) {
    SetFunctionHandle h;
    h.ground_size = ground_size;
    h.orientation = orientation;
    h.eval = std::move(eval);
    if (sgn(h.eval(VertexSet(ground_size))) != 0)
        throw InvariantViolation("set function must vanish on the empty set");
    return h;
}

namespace {

// One pass over a vertex order maintaining the boundary weight of the growing
// prefix. outside[u] counts u's neighbors not yet absorbed; a prefix member
// is boundary exactly while outside[u] > 0.
std::vector<Rat> boundary_prefix_values(const Instance& inst, const std::vector<int>& order) {
    std::vector<int> outside(inst.n);
    for (int v = 0; v < inst.n; ++v) outside[v] = int(inst.adj[v].size());
    std::vector<char> in_prefix(inst.n, 0);
    std::vector<Rat> values(order.size());
    Rat f = 0;
    for (size_t j = 0; j < order.size(); ++j) {
        int v = order[j];
        for (int u : inst.adj[v]) {
            if (--outside[u] == 0 && in_prefix[u]) f -= inst.weight[u];
        }
        in_prefix[v] = 1;
        if (outside[v] > 0) f += inst.weight[v];
        values[j] = f;
    }
    return values;
}

}  // namespace

SetFunctionHandle boundary_weight_function(const Instance& inst) {
    SetFunctionHandle h;
    h.ground_size = inst.n;
    h.orientation = SetFunctionHandle::Orientation::Submodular;
    h.eval = [&inst](const VertexSet& x) { return boundary_weight(inst, x); };
    h.prefix_values = [&inst](const std::vector<int>& order) {
        return boundary_prefix_values(inst, order);
    };
    return h;
}

SetFunctionHandle interior_weight_function(const Instance& inst) {
    SetFunctionHandle h;
    h.ground_size = inst.n;
    h.orientation = SetFunctionHandle::Orientation::Supermodular;
    h.eval = [&inst](const VertexSet& x) { return interior_weight(inst, x); };
    h.prefix_values = [&inst](const std::vector<int>& order) {
        std::vector<Rat> values = boundary_prefix_values(inst, order);
        Rat wsum = 0;  // g(prefix) = w(prefix) - f(prefix)
        for (size_t j = 0; j < order.size(); ++j) {
            wsum += inst.weight[order[j]];
            values[j] = wsum - values[j];
        }
        return values;
    };
    return h;
}

namespace {

std::vector<int> descending_order(const std::vector<Rat>& y) {
    std::vector<int> order(y.size());
    std::iota(order.begin(), order.end(), 0);
    // Ties broken by vertex index; the value is tie-independent.
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return y[a] > y[b]; });
    return order;
}

void check_unit_range(const std::vector<Rat>& y) {
    for (const Rat& v : y)
        if (sgn(v) < 0 || v > 1) throw OutOfRange("extension argument outside [0,1]");
}

std::vector<Rat> prefix_values_of(const SetFunctionHandle& h, const std::vector<int>& order) {
    if (h.prefix_values) return h.prefix_values(order);
    std::vector<Rat> values(order.size());
    VertexSet prefix(h.ground_size);
    for (size_t j = 0; j < order.size(); ++j) {
        prefix.set(order[j]);
        values[j] = h.eval(prefix);
    }
    return values;
}

}  // namespace

Rat lovasz_value(const SetFunctionHandle& h, const std::vector<Rat>& y) {
    if (int(y.size()) != h.ground_size) throw InvariantViolation("argument size mismatch");
    check_unit_range(y);
    std::vector<int> order = descending_order(y);
    std::vector<Rat> values = prefix_values_of(h, order);
    Rat total = 0;
    for (size_t j = 0; j < order.size(); ++j) {
        const Rat& cur = y[order[j]];
        const Rat next = j + 1 < order.size() ? y[order[j + 1]] : Rat(0);
        if (cur != next) total += (cur - next) * values[j];
    }
    return total;
}

Rat lovasz_value_telescoping(const SetFunctionHandle& h, const std::vector<Rat>& y) {
    if (int(y.size()) != h.ground_size) throw InvariantViolation("argument size mismatch");
    check_unit_range(y);
    std::vector<int> order = descending_order(y);
    if (order.empty() || y[order.front()] != 1 || sgn(y[order.back()]) != 0)
        throw InvariantViolation("telescoping form requires an entry at 1 and an entry at 0");
    std::vector<Rat> values = prefix_values_of(h, order);
    Rat total = 0;
    for (size_t j = 0; j + 1 < order.size(); ++j) {
        const Rat& cur = y[order[j]];
        const Rat& next = y[order[j + 1]];
        if (cur != next) total += (cur - next) * values[j];
    }
    return total;
}

void check_labeling(const Instance& inst, const FractionalLabeling& y) {
    if (y.n != inst.n || y.k != inst.k) throw InvariantViolation("labeling shape mismatch");
    for (int v = 0; v < inst.n; ++v) {
        Rat row_sum = 0;
        for (int i = 1; i <= inst.k; ++i) {
            const Rat& e = y.at(v, i);
            if (sgn(e) < 0 || e > 1) throw InvariantViolation("labeling entry outside [0,1]");
            row_sum += e;
        }
        if (row_sum != 1)
            throw InvariantViolation("row " + std::to_string(v + 1) + " does not sum to 1");
        if (inst.precolor[v] != 0 && y.at(v, inst.precolor[v]) != 1)
            throw InvariantViolation("pre-colored vertex " + std::to_string(v + 1) +
                                     " must carry an indicator row");
    }
}

FractionalLabeling labeling_from_coloring(const Instance& inst, const Coloring& col) {
    check_coloring(inst, col);
    FractionalLabeling y(inst.n, inst.k);
    for (int v = 0; v < inst.n; ++v) y.at(v, col.label[v]) = 1;
    return y;
}

Rat relaxation_objective(const Instance& inst, const FractionalLabeling& y, Objective obj) {
    check_labeling(inst, y);
    SetFunctionHandle h =
        obj == Objective::Muhv ? boundary_weight_function(inst) : interior_weight_function(inst);
    Rat total = 0;
    for (int i = 1; i <= inst.k; ++i) total += lovasz_value(h, y.column(i));
    return total;
}

}  // namespace happylab
