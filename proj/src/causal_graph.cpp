#include "polyplan/causal_graph.hpp"

#include "polyplan/errors.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <queue>

using namespace std;

namespace polyplan {
CausalGraph::CausalGraph(
    vector<string> vertex_names_, const set<pair<VariableId, VariableId>> &edges)
    : vertex_names(move(vertex_names_)), edge_set(edges),
      predecessors(vertex_names.size()) {
    for (const auto &[from, to] : edge_set) {
        if (from.index >= vertex_names.size() || to.index >= vertex_names.size())
            throw StructuralError("edge refers to an unknown vertex");
        if (from == to)
            throw StructuralError("self-loop on '" + vertex_names[from.index] + "'");
        predecessors[to.index].push_back(from);
    }
}

const vector<VariableId> &CausalGraph::parents(VariableId v) const {
    if (v.index >= vertex_names.size())
        throw StructuralError("unknown vertex #" + to_string(v.index));
    return predecessors[v.index];
}

CausalGraph build_causal_graph(const PlanningInstance &inst) {
    set<pair<VariableId, VariableId>> edges;
    for (const Operator &op : inst.operators()) {
        // The implicit pre-condition only mentions post_var, which would be
        // a self-loop.
        for (const auto &[var, value] : op.prv)
            edges.emplace(var, op.post_var);
    }
    return CausalGraph(inst.variables(), edges);
}

namespace {
class UnionFind {
    vector<size_t> parent;
    vector<size_t> rank;

public:
    explicit UnionFind(size_t n) : parent(n), rank(n, 0) {
        iota(parent.begin(), parent.end(), 0);
    }

    size_t find(size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // Returns false if a and b were already connected.
    bool unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (rank[a] < rank[b])
            swap(a, b);
        parent[b] = a;
        if (rank[a] == rank[b])
            ++rank[a];
        return true;
    }
};

// Path from source to target in an undirected forest.
vector<VariableId> forest_path(
    const vector<vector<size_t>> &forest, size_t source, size_t target) {
    const size_t none = forest.size();
    vector<size_t> came_from(forest.size(), none);
    came_from[source] = source;
    queue<size_t> open;
    open.push(source);
    while (!open.empty()) {
        size_t v = open.front();
        open.pop();
        if (v == target)
            break;
        for (size_t w : forest[v]) {
            if (came_from[w] == none) {
                came_from[w] = v;
                open.push(w);
            }
        }
    }
    vector<VariableId> path;
    for (size_t v = target; v != source; v = came_from[v])
        path.push_back(VariableId{static_cast<uint32_t>(v)});
    path.push_back(VariableId{static_cast<uint32_t>(source)});
    reverse(path.begin(), path.end());
    return path;
}
}

GraphReport classify(const CausalGraph &graph) {
    const size_t n = graph.num_vertices();
    GraphReport report;
    report.indegree_of.assign(n, 0);
    vector<vector<size_t>> successors(n);
    for (const auto &[from, to] : graph.edges()) {
        ++report.indegree_of[to.index];
        successors[from.index].push_back(to.index);
    }
    report.max_indegree = n ? *max_element(report.indegree_of.begin(),
                                           report.indegree_of.end()) : 0;

    // Kahn's algorithm
    vector<size_t> remaining = report.indegree_of;
    vector<size_t> sources;
    for (size_t v = 0; v < n; ++v) {
        if (remaining[v] == 0)
            sources.push_back(v);
    }
    size_t removed = 0;
    while (!sources.empty()) {
        size_t v = sources.back();
        sources.pop_back();
        ++removed;
        for (size_t w : successors[v]) {
            if (--remaining[w] == 0)
                sources.push_back(w);
        }
    }
    report.is_dag = removed == n;

    // Antiparallel edges are two distinct undirected edges, so they close
    // a cycle of length two.
    UnionFind components(n);
    vector<vector<size_t>> forest(n);
    for (const auto &[from, to] : graph.edges()) {
        if (components.unite(from.index, to.index)) {
            forest[from.index].push_back(to.index);
            forest[to.index].push_back(from.index);
        } else {
            report.undirected_cycle_witness = forest_path(forest, from.index, to.index);
            break;
        }
    }
    report.is_polytree = report.is_dag && !report.undirected_cycle_witness;
    return report;
}

size_t indegree(const CausalGraph &graph, VariableId v) {
    return graph.parents(v).size();
}

static string dot_quote(const string &name) {
    string quoted = "\"";
    for (char c : name) {
        if (c == '"' || c == '\\')
            quoted += '\\';
        quoted += c;
    }
    return quoted + "\"";
}

void write_dot(ostream &out, const CausalGraph &graph) {
    out << "digraph causal_graph {\n";
    for (const string &name : graph.names())
        out << "  " << dot_quote(name) << ";\n";
    for (const auto &[from, to] : graph.edges())
        out << "  " << dot_quote(graph.names()[from.index]) << " -> "
            << dot_quote(graph.names()[to.index]) << ";\n";
    out << "}\n";
}
}
