#include "happylab/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "happylab/errors.hpp"

namespace happylab {

const char* objective_name(Objective o) {
    return o == Objective::Mhv ? "mhv" : "muhv";
}

Objective objective_from_name(const std::string& s) {
    if (s == "mhv") return Objective::Mhv;
    if (s == "muhv") return Objective::Muhv;
    throw BadParameters("unknown objective '" + s + "' (expected mhv or muhv)");
}

Instance validate_instance(Instance inst) {
    if (inst.n <= 0) throw ValidationError("instance needs at least one vertex");
    if (inst.k < 2) throw ValidationError("instance needs k >= 2 labels");
    if (int(inst.weight.size()) != inst.n) throw ValidationError("weight list size mismatch");
    if (int(inst.precolor.size()) != inst.n) throw ValidationError("precolor list size mismatch");

    for (int v = 0; v < inst.n; ++v) {
        if (sgn(inst.weight[v]) < 0)
            throw NegativeWeight("vertex " + std::to_string(v + 1) + " has negative weight");
        if (inst.precolor[v] < 0 || inst.precolor[v] > inst.k)
            throw ValidationError("vertex " + std::to_string(v + 1) + " has precolor outside 0..k");
    }

    for (auto& [u, v] : inst.edges) {
        if (u < 0 || u >= inst.n || v < 0 || v >= inst.n)
            throw BadEdge("edge endpoint outside 1.." + std::to_string(inst.n));
        if (u == v) throw BadEdge("self-loop at vertex " + std::to_string(u + 1));
        if (u > v) std::swap(u, v);
    }
    std::sort(inst.edges.begin(), inst.edges.end());
    if (std::adjacent_find(inst.edges.begin(), inst.edges.end()) != inst.edges.end())
        throw BadEdge("duplicate edge");

    inst.label_class.assign(inst.k, {});
    for (int v = 0; v < inst.n; ++v)
        if (inst.precolor[v] > 0) inst.label_class[inst.precolor[v] - 1].push_back(v);
    for (int i = 1; i <= inst.k; ++i)
        if (inst.label_class[i - 1].empty()) throw EmptyLabelClass(i);

    inst.adj.assign(inst.n, {});
    inst.nbr.assign(inst.n, VertexSet(inst.n));
    for (auto [u, v] : inst.edges) {
        inst.adj[u].push_back(v);
        inst.adj[v].push_back(u);
        inst.nbr[u].set(v);
        inst.nbr[v].set(u);
    }
    inst.max_degree = 0;
    for (auto& a : inst.adj) {
        std::sort(a.begin(), a.end());
        inst.max_degree = std::max(inst.max_degree, int(a.size()));
    }

    inst.uncolored.clear();
    for (int v = 0; v < inst.n; ++v)
        if (inst.precolor[v] == 0) inst.uncolored.push_back(v);

    inst.total_weight = 0;
    for (auto& w : inst.weight) inst.total_weight += w;
    return inst;
}

Instance make_instance(int n, int k, std::vector<std::pair<int, int>> edges,
                       std::vector<Rat> weights, std::vector<int> precolor) {
    Instance inst;
    inst.n = n;
    inst.k = k;
    inst.edges = std::move(edges);
    inst.weight = std::move(weights);
    inst.precolor = std::move(precolor);
    return validate_instance(std::move(inst));
}

VertexSet boundary(const Instance& inst, const VertexSet& x) {
    VertexSet b(inst.n);
    x.for_each([&](int v) {
        if (!inst.nbr[v].subset_of(x)) b.set(v);
    });
    return b;
}

VertexSet interior(const Instance& inst, const VertexSet& x) {
    return x.minus(boundary(inst, x));
}

Rat boundary_weight(const Instance& inst, const VertexSet& x) {
    Rat f = 0;
    x.for_each([&](int v) {
        if (!inst.nbr[v].subset_of(x)) f += inst.weight[v];
    });
    return f;
}

Rat interior_weight(const Instance& inst, const VertexSet& x) {
    Rat g = 0;
    x.for_each([&](int v) {
        if (inst.nbr[v].subset_of(x)) g += inst.weight[v];
    });
    return g;
}

void check_coloring(const Instance& inst, const Coloring& col) {
    if (int(col.label.size()) != inst.n) throw InvariantViolation("coloring size mismatch");
    for (int v = 0; v < inst.n; ++v) {
        if (col.label[v] < 1 || col.label[v] > inst.k)
            throw InvariantViolation("vertex " + std::to_string(v + 1) + " has label outside 1..k");
        if (inst.precolor[v] != 0 && col.label[v] != inst.precolor[v])
            throw PrecolorViolation("vertex " + std::to_string(v + 1) +
                                    " contradicts its pre-assigned label");
    }
}

VertexSet happy_set(const Instance& inst, const Coloring& col) {
    VertexSet h(inst.n);
    for (int v = 0; v < inst.n; ++v) {
        bool happy = true;
        for (int u : inst.adj[v])
            if (col.label[u] != col.label[v]) {
                happy = false;
                break;
            }
        if (happy) h.set(v);
    }
    return h;
}

Rat evaluate(const Instance& inst, const Coloring& col, Objective obj) {
    check_coloring(inst, col);
    Rat value = 0;
    for (int v = 0; v < inst.n; ++v) {
        bool happy = true;
        for (int u : inst.adj[v])
            if (col.label[u] != col.label[v]) {
                happy = false;
                break;
            }
        if (happy == (obj == Objective::Mhv)) value += inst.weight[v];
    }
    return value;
}

std::vector<VertexSet> partition_of(const Instance& inst, const Coloring& col) {
    std::vector<VertexSet> parts(inst.k, VertexSet(inst.n));
    for (int v = 0; v < inst.n; ++v) parts[col.label[v] - 1].set(v);
    return parts;
}

namespace {

// Token stream over the format: strips '#' comments, skips blank lines.
struct TokenReader {
    std::istream& in;
    std::istringstream line;
    int lineno = 0;

    explicit TokenReader(std::istream& s) : in(s) {}

    std::string next() {
        std::string tok;
        while (!(line >> tok)) {
            std::string raw;
            if (!std::getline(in, raw)) throw ParseError("unexpected end of file");
            ++lineno;
            if (size_t h = raw.find('#'); h != std::string::npos) raw.erase(h);
            line = std::istringstream(raw);
        }
        return tok;
    }

    long integer() {
        std::string tok = next();
        try {
            size_t pos = 0;
            long v = std::stol(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": expected integer, got '" + tok + "'");
        }
    }

    Rat rational() { return rat_from_string(next()); }
};

}  // namespace

Instance read_instance(std::istream& in) {
    TokenReader r(in);
    Instance inst;
    inst.n = int(r.integer());
    long m = r.integer();
    inst.k = int(r.integer());
    if (inst.n <= 0 || m < 0 || inst.k < 2) throw ParseError("bad happygraph header");
    inst.weight.resize(inst.n);
    for (auto& w : inst.weight) w = r.rational();
    inst.precolor.resize(inst.n);
    for (auto& c : inst.precolor) c = int(r.integer());
    inst.edges.reserve(m);
    for (long e = 0; e < m; ++e) {
        int u = int(r.integer()), v = int(r.integer());
        inst.edges.emplace_back(u - 1, v - 1);
    }
    return validate_instance(std::move(inst));
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
    out << inst.n << ' ' << inst.num_edges() << ' ' << inst.k << '\n';
    for (int v = 0; v < inst.n; ++v) out << (v ? " " : "") << rat_to_string(inst.weight[v]);
    out << '\n';
    for (int v = 0; v < inst.n; ++v) out << (v ? " " : "") << inst.precolor[v];
    out << '\n';
    for (auto [u, v] : inst.edges) out << u + 1 << ' ' << v + 1 << '\n';
}

std::string instance_to_string(const Instance& inst) {
    std::ostringstream os;
    write_instance(os, inst);
    return os.str();
}

}  // namespace happylab
