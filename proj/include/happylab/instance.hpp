#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "happylab/rational.hpp"
#include "happylab/vertex_set.hpp"

namespace happylab {

enum class Objective { Mhv, Muhv };

const char* objective_name(Objective o);
Objective objective_from_name(const std::string& s);

// Vertex-weighted graph with a partial coloring. Vertices are 0-based in the
// API and 1-based in files; labels are 1..k everywhere, with precolor 0
// meaning uncolored. Immutable after validate_instance(); all queries are
// pure and safe for concurrent readers.
struct Instance {
    int n = 0;
    int k = 0;
    std::vector<Rat> weight;
    std::vector<int> precolor;                // 0 = uncolored, else 1..k
    std::vector<std::pair<int, int>> edges;   // normalized u < v, sorted, unique

    // Derived by validate_instance().
    std::vector<std::vector<int>> adj;        // sorted neighbor lists
    std::vector<VertexSet> nbr;               // neighbor masks
    std::vector<int> uncolored;               // ascending vertex ids
    std::vector<std::vector<int>> label_class;  // label i -> pre-colored vertices (index i-1)
    Rat total_weight;
    int max_degree = 0;

    int num_edges() const { return int(edges.size()); }
};

// Normalizes edges, builds the derived structure, and enforces the instance
// invariants: endpoints in range, no self-loops or duplicates, weights >= 0,
// and every label pre-assigned to at least one vertex.
Instance validate_instance(Instance raw);

Instance make_instance(int n, int k, std::vector<std::pair<int, int>> edges,
                       std::vector<Rat> weights, std::vector<int> precolor);

// Total assignment of labels; must agree with the precoloring.
struct Coloring {
    std::vector<int> label;  // 1..k per vertex
};

// ∂(X): members of X with at least one neighbor outside X.
VertexSet boundary(const Instance& inst, const VertexSet& x);

// ι(X) = X \ ∂(X).
VertexSet interior(const Instance& inst, const VertexSet& x);

// f(X) = w(∂(X)). Submodular.
Rat boundary_weight(const Instance& inst, const VertexSet& x);

// g(X) = w(ι(X)) = w(X) - f(X). Supermodular.
Rat interior_weight(const Instance& inst, const VertexSet& x);

// Vertices whose every neighbor shares their label.
VertexSet happy_set(const Instance& inst, const Coloring& col);

// Mhv: total weight of happy vertices; Muhv: of unhappy ones. The two sum to
// w(V) for any total coloring.
Rat evaluate(const Instance& inst, const Coloring& col, Objective obj);

// S_1..S_k as vertex sets (index i-1 holds label i).
std::vector<VertexSet> partition_of(const Instance& inst, const Coloring& col);

void check_coloring(const Instance& inst, const Coloring& col);

// "happygraph v1" text format:
//   line 1: n m k
//   line 2: n weights (decimal or p/q)
//   line 3: n precolor codes (0 = uncolored)
//   then m lines "u v" with 1-based endpoints.
// '#' starts a comment anywhere; blank lines are skipped. The writer is
// canonical, so write(parse(write(x))) == write(x) byte for byte.
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Instance& inst);
std::string instance_to_string(const Instance& inst);

}  // namespace happylab
