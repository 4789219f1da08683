#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "happylab/rational.hpp"

namespace happylab {

enum class Sense { Minimize, Maximize };
enum class Rel { Le, Eq, Ge };

// Dense LP container. Variables have finite lower bounds (default 0) and
// optional upper bounds; constraints reference registered variables.
struct LinearProgram {
    Sense sense = Sense::Minimize;
    std::vector<std::string> var_name;
    std::vector<Rat> objective;
    std::vector<Rat> lower;
    std::vector<std::optional<Rat>> upper;

    struct Row {
        std::vector<std::pair<int, Rat>> terms;
        Rel rel = Rel::Le;
        Rat rhs;
    };
    std::vector<Row> rows;

    int add_var(const std::string& name, Rat lo = Rat(0));
    int var(const std::string& name) const;  // throws if unknown
    int num_vars() const { return int(var_name.size()); }
    void set_objective(int v, Rat coef) { objective[v] = std::move(coef); }
    void add_row(std::vector<std::pair<int, Rat>> terms, Rel rel, Rat rhs);

private:
    std::map<std::string, int> index_;
};

struct LpSolution {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Optimal;
    std::vector<Rat> value;  // one per registered variable when Optimal
    Rat objective;
    int pivots = 0;
};

struct SolveOptions {
    enum class Mode { ExactRational, Float };
    Mode mode = Mode::ExactRational;
    bool presolve = true;
    // Pure Bland pricing. Off by default: Dantzig pricing with an automatic
    // permanent switch to Bland once a degenerate streak is detected, which
    // keeps the termination guarantee.
    bool bland_only = false;
    double tol = 1e-9;  // float-path feasibility tolerance
    int max_pivots = 200000;
    // Delegates to an external solver behind the same contract; the returned
    // solution still goes through the constraint self-check.
    std::function<LpSolution(const LinearProgram&)> delegate;
};

// Two-phase dense simplex. Exact rational arithmetic by default; the float
// path runs the same tableau over doubles. Every returned optimal solution is
// verified against all constraints (exactly, or within tol on the float path)
// before it leaves this function.
LpSolution solve_lp(const LinearProgram& lp, const SolveOptions& opts = {});

// Free-form LP interchange text (objective / constraints / bounds sections)
// for external cross-checks. Coefficients are rendered as decimals.
void write_lp_format(std::ostream& out, const LinearProgram& lp);

}  // namespace happylab
