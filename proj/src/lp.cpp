#include "happylab/lp.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "happylab/errors.hpp"

namespace happylab {

int LinearProgram::add_var(const std::string& name, Rat lo) {
    if (index_.count(name)) throw BadParameters("duplicate variable '" + name + "'");
    int id = int(var_name.size());
    index_[name] = id;
    var_name.push_back(name);
    objective.emplace_back(0);
    lower.push_back(std::move(lo));
    upper.emplace_back();
    return id;
}

int LinearProgram::var(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw BadParameters("unknown variable '" + name + "'");
    return it->second;
}

void LinearProgram::add_row(std::vector<std::pair<int, Rat>> terms, Rel rel, Rat rhs) {
    for (auto& [v, c] : terms)
        if (v < 0 || v >= num_vars()) throw BadParameters("constraint references unknown variable");
    rows.push_back(Row{std::move(terms), rel, std::move(rhs)});
}

namespace {

// ---- scalar policy -------------------------------------------------------

struct RatOps {
    using T = Rat;
    static T from_rat(const Rat& r) { return r; }
    static bool is_zero(const T& x) { return sgn(x) == 0; }
    static bool is_neg(const T& x) { return sgn(x) < 0; }
    static bool is_pos(const T& x) { return sgn(x) > 0; }
};

struct DoubleOps {
    using T = double;
    static constexpr double eps = 1e-9;
    static T from_rat(const Rat& r) { return r.get_d(); }
    static bool is_zero(const T& x) { return std::abs(x) <= eps; }
    static bool is_neg(const T& x) { return x < -eps; }
    static bool is_pos(const T& x) { return x > eps; }
};

// ---- presolved form ------------------------------------------------------

// Fixed-variable elimination: singleton rows fold into bounds, zero-sum
// equality rows with uniform coefficient sign pin their variables, and fixed
// values substitute into the remaining rows. Keeps the reduced LP small
// enough that pre-colored vertices cost nothing at solve time.
struct Reduced {
    bool infeasible = false;
    std::vector<char> fixed;
    std::vector<Rat> fixed_value;
    std::vector<Rat> lo, hi;           // hi entry meaningful only when has_hi
    std::vector<char> has_hi;
    struct Row {
        std::vector<std::pair<int, Rat>> terms;
        Rel rel;
        Rat rhs;
    };
    std::vector<Row> rows;
};

Reduced presolve(const LinearProgram& lp, bool enabled) {
    const int n = lp.num_vars();
    Reduced red;
    red.fixed.assign(n, 0);
    red.fixed_value.assign(n, Rat(0));
    red.lo = lp.lower;
    red.lo.resize(n);
    red.hi.assign(n, Rat(0));
    red.has_hi.assign(n, 0);
    for (int v = 0; v < n; ++v)
        if (lp.upper[v]) {
            red.has_hi[v] = 1;
            red.hi[v] = *lp.upper[v];
        }
    red.rows.reserve(lp.rows.size());
    for (const auto& r : lp.rows) red.rows.push_back({r.terms, r.rel, r.rhs});

    auto tighten_lo = [&](int v, const Rat& b) {
        if (b > red.lo[v]) red.lo[v] = b;
    };
    auto tighten_hi = [&](int v, const Rat& b) {
        if (!red.has_hi[v] || b < red.hi[v]) {
            red.has_hi[v] = 1;
            red.hi[v] = b;
        }
    };

    if (!enabled) {
        for (int v = 0; v < n; ++v)
            if (red.has_hi[v] && red.lo[v] > red.hi[v]) red.infeasible = true;
        return red;
    }

    bool changed = true;
    while (changed && !red.infeasible) {
        changed = false;

        // Derive fixings from bounds.
        for (int v = 0; v < n && !red.infeasible; ++v) {
            if (red.fixed[v] || !red.has_hi[v]) continue;
            if (red.lo[v] > red.hi[v]) {
                red.infeasible = true;
            } else if (red.lo[v] == red.hi[v]) {
                red.fixed[v] = 1;
                red.fixed_value[v] = red.lo[v];
                changed = true;
            }
        }
        if (red.infeasible) break;

        std::vector<Reduced::Row> kept;
        kept.reserve(red.rows.size());
        for (auto& row : red.rows) {
            if (red.infeasible) break;
            Rat rhs = row.rhs;
            std::vector<std::pair<int, Rat>> live;
            for (auto& [v, c] : row.terms) {
                if (sgn(c) == 0) continue;
                if (red.fixed[v])
                    rhs -= c * red.fixed_value[v];
                else
                    live.emplace_back(v, c);
            }
            if (live.empty()) {
                int s = sgn(rhs);
                bool ok = (row.rel == Rel::Eq && s == 0) || (row.rel == Rel::Le && s >= 0) ||
                          (row.rel == Rel::Ge && s <= 0);
                if (!ok) red.infeasible = true;
                changed = true;
                continue;
            }
            if (live.size() == 1) {
                auto& [v, c] = live[0];
                Rat b = rhs / c;
                Rel rel = row.rel;
                if (sgn(c) < 0 && rel != Rel::Eq) rel = (rel == Rel::Le) ? Rel::Ge : Rel::Le;
                if (rel == Rel::Eq) {
                    tighten_lo(v, b);
                    tighten_hi(v, b);
                } else if (rel == Rel::Le) {
                    tighten_hi(v, b);
                } else {
                    tighten_lo(v, b);
                }
                changed = true;
                continue;
            }
            if (row.rel == Rel::Eq && sgn(rhs) == 0) {
                int s = sgn(live[0].second);
                bool uniform = true;
                for (auto& [v, c] : live) uniform = uniform && sgn(c) == s;
                bool at_zero = true;
                for (auto& [v, c] : live) at_zero = at_zero && sgn(red.lo[v]) == 0;
                if (uniform && at_zero) {
                    // Sum of same-signed nonnegative terms equals zero.
                    for (auto& [v, c] : live) {
                        red.fixed[v] = 1;
                        red.fixed_value[v] = 0;
                    }
                    changed = true;
                    continue;
                }
                bool feasible_zero = uniform;
                for (auto& [v, c] : live) feasible_zero = feasible_zero && sgn(red.lo[v]) > 0;
                if (feasible_zero) {
                    red.infeasible = true;
                    continue;
                }
            }
            kept.push_back({std::move(live), row.rel, std::move(rhs)});
        }
        red.rows = std::move(kept);
    }

    // Fixed values must respect their own bounds.
    for (int v = 0; v < n && !red.infeasible; ++v) {
        if (!red.fixed[v]) continue;
        if (red.fixed_value[v] < lp.lower[v]) red.infeasible = true;
        if (lp.upper[v] && red.fixed_value[v] > *lp.upper[v]) red.infeasible = true;
    }
    return red;
}

// ---- standard-form tableau ----------------------------------------------

template <class Ops>
struct Simplex {
    using T = typename Ops::T;

    int m = 0;
    int structurals = 0;
    int ncols = 0;  // structurals + slacks (+ artificials during phase 1)
    int first_artificial = 0;
    std::vector<std::vector<T>> a;  // m rows, ncols + 1 (rhs last)
    std::vector<T> cost;            // reduced costs; cost[ncols] = -objective
    std::vector<int> basis;
    std::vector<char> is_basic;
    int pivots = 0;
    int max_pivots = 200000;
    bool bland = false;
    int degenerate_streak = 0;
    int bland_threshold = 0;

    T& rhs(int i) { return a[i][cols()]; }
    int cols() const { return int(a.empty() ? 0 : a[0].size() - 1); }

    void pivot(int r, int e) {
        auto& row = a[r];
        T p = row[e];
        for (auto& x : row)
            if (!Ops::is_zero(x)) x /= p;
        row[e] = T(1);
        for (int i = 0; i < m; ++i) {
            if (i == r) continue;
            T f = a[i][e];
            if (Ops::is_zero(f)) continue;
            auto& ri = a[i];
            for (size_t j = 0; j < row.size(); ++j)
                if (!Ops::is_zero(row[j])) ri[j] -= f * row[j];
            ri[e] = T(0);
        }
        T f = cost[e];
        if (!Ops::is_zero(f)) {
            for (size_t j = 0; j < row.size(); ++j)
                if (!Ops::is_zero(row[j])) cost[j] -= f * row[j];
            cost[e] = T(0);
        }
        is_basic[basis[r]] = 0;
        basis[r] = e;
        is_basic[e] = 1;
        ++pivots;
    }

    int entering(int limit_cols) {
        int best = -1;
        for (int j = 0; j < limit_cols; ++j) {
            if (is_basic[j] || !Ops::is_neg(cost[j])) continue;
            if (bland) return j;
            if (best < 0 || cost[j] < cost[best]) best = j;
        }
        return best;
    }

    // Min-ratio row; ties to the smallest basic index. Returns -1 if the
    // column is unbounded.
    int leaving(int e) {
        int best = -1;
        for (int i = 0; i < m; ++i) {
            if (!Ops::is_pos(a[i][e])) continue;
            if (best < 0) {
                best = i;
                continue;
            }
            T lhs = rhs(i) * a[best][e];
            T rhscmp = rhs(best) * a[i][e];
            if (lhs < rhscmp || (lhs == rhscmp && basis[i] < basis[best])) best = i;
        }
        return best;
    }

    // Returns true when optimal, throws on pivot-limit; sets *unbounded.
    bool iterate(int limit_cols, bool* unbounded) {
        *unbounded = false;
        for (;;) {
            int e = entering(limit_cols);
            if (e < 0) return true;
            int r = leaving(e);
            if (r < 0) {
                *unbounded = true;
                return false;
            }
            bool degenerate = Ops::is_zero(rhs(r));
            pivot(r, e);
            if (degenerate) {
                if (++degenerate_streak > bland_threshold) bland = true;
            } else {
                degenerate_streak = 0;
            }
            if (pivots > max_pivots)
                throw SolverFailure("simplex pivot limit exceeded (" + std::to_string(pivots) +
                                    " pivots)");
        }
    }
};

enum class CoreStatus { Optimal, Infeasible, Unbounded };

// Solves min c·x, rows over x >= 0, rhs-normalized. Rows arrive as
// (terms, rel, rhs) on the reduced variable space.
template <class Ops>
CoreStatus simplex_core(const std::vector<Reduced::Row>& rows, const std::vector<Rat>& obj,
                        int nvars, bool bland_only, int max_pivots, std::vector<Rat>* out,
                        Rat* out_obj, int* out_pivots) {
    using T = typename Ops::T;
    const int m = int(rows.size());

    // Canonical row kinds: Le rhs>=0 -> slack, Ge rhs>0 -> surplus+artificial,
    // Eq rhs>=0 -> artificial. Ge rows are first flipped to Le when possible.
    struct NRow {
        std::vector<std::pair<int, Rat>> terms;
        Rat rhs;
        int kind;  // 0 slack, 1 surplus+artificial, 2 artificial
    };
    std::vector<NRow> nrows(m);
    int num_slack = 0, num_art = 0;
    for (int i = 0; i < m; ++i) {
        auto terms = rows[i].terms;
        Rat rhs = rows[i].rhs;
        Rel rel = rows[i].rel;
        if (rel == Rel::Ge) {
            for (auto& [v, c] : terms) c = -c;
            rhs = -rhs;
            rel = Rel::Le;
        }
        if (rel == Rel::Le) {
            if (sgn(rhs) >= 0) {
                nrows[i] = {std::move(terms), std::move(rhs), 0};
                ++num_slack;
            } else {
                for (auto& [v, c] : terms) c = -c;
                nrows[i] = {std::move(terms), -rhs, 1};
                ++num_slack;
                ++num_art;
            }
        } else {
            if (sgn(rhs) < 0) {
                for (auto& [v, c] : terms) c = -c;
                rhs = -rhs;
            }
            nrows[i] = {std::move(terms), std::move(rhs), 2};
            ++num_art;
        }
    }

    Simplex<Ops> sx;
    sx.m = m;
    sx.structurals = nvars;
    sx.first_artificial = nvars + num_slack;
    sx.max_pivots = max_pivots;
    sx.bland = bland_only;
    const int total = nvars + num_slack + num_art;
    sx.bland_threshold = 100 + 10 * (m + total);
    sx.a.assign(m, std::vector<T>(total + 1, T(0)));
    sx.basis.assign(m, -1);
    sx.is_basic.assign(total, 0);

    int slack_at = nvars, art_at = nvars + num_slack;
    for (int i = 0; i < m; ++i) {
        for (auto& [v, c] : nrows[i].terms) sx.a[i][v] += Ops::from_rat(c);
        sx.a[i][total] = Ops::from_rat(nrows[i].rhs);
        if (nrows[i].kind == 0) {
            sx.a[i][slack_at] = T(1);
            sx.basis[i] = slack_at++;
        } else if (nrows[i].kind == 1) {
            sx.a[i][slack_at] = T(-1);
            ++slack_at;
            sx.a[i][art_at] = T(1);
            sx.basis[i] = art_at++;
        } else {
            sx.a[i][art_at] = T(1);
            sx.basis[i] = art_at++;
        }
        sx.is_basic[sx.basis[i]] = 1;
    }

    // Phase 1.
    if (num_art > 0) {
        sx.cost.assign(total + 1, T(0));
        for (int j = sx.first_artificial; j < total; ++j) sx.cost[j] = T(1);
        for (int i = 0; i < m; ++i) {
            if (sx.basis[i] < sx.first_artificial) continue;
            for (int j = 0; j <= total; ++j)
                if (!Ops::is_zero(sx.a[i][j])) sx.cost[j] -= sx.a[i][j];
        }
        // Artificials never need to re-enter, so pricing stops before them.
        bool unbounded = false;
        sx.iterate(sx.first_artificial, &unbounded);
        if (unbounded) throw SolverFailure("phase 1 reported unbounded");
        T p1 = -sx.cost[total];
        if (!Ops::is_zero(p1)) return CoreStatus::Infeasible;

        // Drive artificials out of the basis; rows that cannot pivot are
        // redundant and dropped.
        std::vector<int> keep;
        for (int i = 0; i < m; ++i) {
            if (sx.basis[i] < sx.first_artificial) {
                keep.push_back(i);
                continue;
            }
            int e = -1;
            for (int j = 0; j < sx.first_artificial; ++j)
                if (!sx.is_basic[j] && !Ops::is_zero(sx.a[i][j])) {
                    e = j;
                    break;
                }
            if (e >= 0) {
                sx.pivot(i, e);
                keep.push_back(i);
            }
        }
        if (int(keep.size()) != m) {
            std::vector<std::vector<T>> rows2;
            std::vector<int> basis2;
            rows2.reserve(keep.size());
            for (int i : keep) {
                rows2.push_back(std::move(sx.a[i]));
                basis2.push_back(sx.basis[i]);
            }
            sx.a = std::move(rows2);
            sx.basis = std::move(basis2);
            sx.m = int(sx.a.size());
        }
        // Truncate artificial columns.
        for (auto& row : sx.a) {
            row[sx.first_artificial] = row[total];
            row.resize(sx.first_artificial + 1);
        }
        sx.is_basic.resize(sx.first_artificial);
    }

    const int cols2 = sx.first_artificial;  // structurals + slacks
    sx.cost.assign(cols2 + 1, T(0));
    for (int v = 0; v < nvars; ++v) sx.cost[v] = Ops::from_rat(obj[v]);
    for (int i = 0; i < sx.m; ++i) {
        T cb = sx.basis[i] < nvars ? Ops::from_rat(obj[sx.basis[i]]) : T(0);
        if (Ops::is_zero(cb)) continue;
        for (int j = 0; j <= cols2; ++j)
            if (!Ops::is_zero(sx.a[i][j])) sx.cost[j] -= cb * sx.a[i][j];
    }
    sx.degenerate_streak = 0;
    bool unbounded = false;
    sx.iterate(cols2, &unbounded);
    *out_pivots = sx.pivots;
    if (unbounded) return CoreStatus::Unbounded;

    std::vector<Rat> x(nvars, Rat(0));
    for (int i = 0; i < sx.m; ++i)
        if (sx.basis[i] < nvars) x[sx.basis[i]] = Rat(sx.a[i][cols2]);
    Rat objective = 0;
    for (int v = 0; v < nvars; ++v)
        if (sgn(obj[v]) != 0) objective += obj[v] * x[v];
    *out = std::move(x);
    *out_obj = std::move(objective);
    return CoreStatus::Optimal;
}

void self_check(const LinearProgram& lp, const LpSolution& sol, const SolveOptions& opts) {
    const bool exact = opts.mode == SolveOptions::Mode::ExactRational;
    const Rat tol = exact ? Rat(0) : rat_from_string("1/1000000000");
    for (int v = 0; v < lp.num_vars(); ++v) {
        if (sol.value[v] < lp.lower[v] - tol)
            throw SolverFailure("solution violates lower bound of " + lp.var_name[v]);
        if (lp.upper[v] && sol.value[v] > *lp.upper[v] + tol)
            throw SolverFailure("solution violates upper bound of " + lp.var_name[v]);
    }
    for (size_t i = 0; i < lp.rows.size(); ++i) {
        Rat lhs = 0;
        for (auto& [v, c] : lp.rows[i].terms) lhs += c * sol.value[v];
        const Rat& rhs = lp.rows[i].rhs;
        bool ok = true;
        switch (lp.rows[i].rel) {
            case Rel::Le: ok = lhs <= rhs + tol; break;
            case Rel::Ge: ok = lhs >= rhs - tol; break;
            case Rel::Eq: ok = lhs >= rhs - tol && lhs <= rhs + tol; break;
        }
        if (!ok) throw SolverFailure("solution violates constraint " + std::to_string(i));
    }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const SolveOptions& opts) {
    if (opts.delegate) {
        LpSolution sol = opts.delegate(lp);
        if (sol.status == LpSolution::Status::Optimal) self_check(lp, sol, opts);
        return sol;
    }

    Reduced red = presolve(lp, opts.presolve);
    LpSolution sol;
    if (red.infeasible) {
        sol.status = LpSolution::Status::Infeasible;
        return sol;
    }

    // Map live variables into a compact space and shift lower bounds to zero.
    const int n = lp.num_vars();
    std::vector<int> to_new(n, -1);
    std::vector<int> to_old;
    for (int v = 0; v < n; ++v)
        if (!red.fixed[v]) {
            to_new[v] = int(to_old.size());
            to_old.push_back(v);
        }
    const int nred = int(to_old.size());

    std::vector<Reduced::Row> rows;
    rows.reserve(red.rows.size() + nred);
    for (auto& row : red.rows) {
        Reduced::Row r;
        r.rel = row.rel;
        r.rhs = row.rhs;
        for (auto& [v, c] : row.terms) {
            r.rhs -= c * red.lo[v];
            r.terms.emplace_back(to_new[v], c);
        }
        rows.push_back(std::move(r));
    }
    for (int v = 0; v < n; ++v) {
        if (red.fixed[v] || !red.has_hi[v]) continue;
        rows.push_back({{{to_new[v], Rat(1)}}, Rel::Le, red.hi[v] - red.lo[v]});
    }

    std::vector<Rat> obj(nred, Rat(0));
    const bool maximize = lp.sense == Sense::Maximize;
    for (int v = 0; v < n; ++v)
        if (!red.fixed[v]) obj[to_new[v]] = maximize ? Rat(-lp.objective[v]) : lp.objective[v];

    std::vector<Rat> xred;
    Rat core_obj;
    int pivots = 0;
    CoreStatus st = opts.mode == SolveOptions::Mode::ExactRational
                        ? simplex_core<RatOps>(rows, obj, nred, opts.bland_only, opts.max_pivots,
                                               &xred, &core_obj, &pivots)
                        : simplex_core<DoubleOps>(rows, obj, nred, opts.bland_only, opts.max_pivots,
                                                  &xred, &core_obj, &pivots);
    sol.pivots = pivots;
    if (st == CoreStatus::Infeasible) {
        sol.status = LpSolution::Status::Infeasible;
        return sol;
    }
    if (st == CoreStatus::Unbounded) {
        sol.status = LpSolution::Status::Unbounded;
        return sol;
    }

    sol.status = LpSolution::Status::Optimal;
    sol.value.assign(n, Rat(0));
    for (int v = 0; v < n; ++v)
        sol.value[v] = red.fixed[v] ? red.fixed_value[v] : Rat(xred[to_new[v]] + red.lo[v]);
    sol.objective = 0;
    for (int v = 0; v < n; ++v)
        if (sgn(lp.objective[v]) != 0) sol.objective += lp.objective[v] * sol.value[v];
    self_check(lp, sol, opts);
    return sol;
}

void write_lp_format(std::ostream& out, const LinearProgram& lp) {
    auto coef = [](const Rat& c) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", c.get_d());
        return std::string(buf);
    };
    auto emit_terms = [&](const std::vector<std::pair<int, Rat>>& terms) {
        std::string s;
        bool first = true;
        for (auto& [v, c] : terms) {
            if (sgn(c) == 0) continue;
            if (first) {
                s += (sgn(c) < 0 ? "- " : "");
                first = false;
            } else {
                s += sgn(c) < 0 ? " - " : " + ";
            }
            Rat ac = abs(c);
            if (ac != 1) s += coef(ac) + " ";
            s += lp.var_name[v];
        }
        if (first) s = lp.var_name.empty() ? std::string("0") : "0 " + lp.var_name[0];
        return s;
    };

    out << (lp.sense == Sense::Maximize ? "Maximize" : "Minimize") << "\n obj: ";
    std::vector<std::pair<int, Rat>> objterms;
    for (int v = 0; v < lp.num_vars(); ++v)
        if (sgn(lp.objective[v]) != 0) objterms.emplace_back(v, lp.objective[v]);
    out << emit_terms(objterms) << "\nSubject To\n";
    for (size_t i = 0; i < lp.rows.size(); ++i) {
        const auto& r = lp.rows[i];
        const char* rel = r.rel == Rel::Le ? "<=" : (r.rel == Rel::Ge ? ">=" : "=");
        out << " c" << i + 1 << ": " << emit_terms(r.terms) << ' ' << rel << ' ' << coef(r.rhs)
            << '\n';
    }
    out << "Bounds\n";
    for (int v = 0; v < lp.num_vars(); ++v) {
        out << ' ' << coef(lp.lower[v]) << " <= " << lp.var_name[v];
        if (lp.upper[v]) out << " <= " << coef(*lp.upper[v]);
        out << '\n';
    }
    out << "End\n";
}

}  // namespace happylab
