#ifndef POLYPLAN_CAUSAL_GRAPH_HPP
#define POLYPLAN_CAUSAL_GRAPH_HPP

#include "sas.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace polyplan {

// Directed graph over the state variables of an instance. There is an edge
// x -> y when some operator changing y has x among its prevail conditions.
class CausalGraph {
    std::vector<std::string> vertex_names;
    std::set<std::pair<VariableId, VariableId>> edge_set;
    std::vector<std::vector<VariableId>> predecessors;

public:
    // Throws StructuralError on self-loops or edges to unknown vertices.
    CausalGraph(std::vector<std::string> vertex_names,
                const std::set<std::pair<VariableId, VariableId>> &edges);

    std::size_t num_vertices() const {return vertex_names.size();}
    const std::vector<std::string> &names() const {return vertex_names;}
    const std::set<std::pair<VariableId, VariableId>> &edges() const {return edge_set;}
    bool has_edge(VariableId from, VariableId to) const {
        return edge_set.count({from, to}) != 0;
    }
    const std::vector<VariableId> &parents(VariableId v) const;
};

struct GraphReport {
    bool is_dag = false;
    bool is_polytree = false;
    std::size_t max_indegree = 0;
    std::vector<std::size_t> indegree_of;
    // A closed walk v0, v1, ..., vm (v0 adjacent to vm) in the underlying
    // undirected graph; present iff the graph is not a polytree because of
    // an undirected cycle.
    std::optional<std::vector<VariableId>> undirected_cycle_witness;
};

CausalGraph build_causal_graph(const PlanningInstance &inst);
GraphReport classify(const CausalGraph &graph);
// Throws StructuralError if v is not a vertex of graph.
std::size_t indegree(const CausalGraph &graph, VariableId v);

// Graphviz rendering: one "a" -> "b"; line per edge.
void write_dot(std::ostream &out, const CausalGraph &graph);
}

#endif
