#include "oracles.hpp"

#include "polyplan/causal_graph.hpp"
#include "polyplan/chain.hpp"
#include "polyplan/errors.hpp"
#include "polyplan/reduction.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

using namespace polyplan;
using polyplan::testing::cnf;
using polyplan::testing::var;

namespace {
using EdgeSet = std::set<std::pair<VariableId, VariableId>>;

CausalGraph graph_of(std::size_t n, const EdgeSet &edges) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back("n" + std::to_string(i));
    return CausalGraph(names, edges);
}

std::set<std::pair<std::string, std::string>> named_edges(const CausalGraph &g) {
    std::set<std::pair<std::string, std::string>> result;
    for (const auto &[from, to] : g.edges())
        result.emplace(g.names()[from.index], g.names()[to.index]);
    return result;
}

// A forest has exactly n - c edges; antiparallel pairs count twice.
bool forest_by_counting(std::size_t n, const EdgeSet &edges) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto &[a, b] : edges) {
        adj[a.index].push_back(b.index);
        adj[b.index].push_back(a.index);
    }
    std::vector<bool> seen(n, false);
    std::size_t components = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        ++components;
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return edges.size() == n - components;
}
}

TEST_CASE("chain gadget causal graph is a path") {
    CausalGraph g = build_causal_graph(build_chain_instance({2}));
    CHECK(named_edges(g) == std::set<std::pair<std::string, std::string>>{{"v1", "v2"}, {"v2", "v3"}});
    GraphReport report = classify(g);
    CHECK(report.is_polytree);
    CHECK(report.max_indegree == 1);
}

TEST_CASE("prevail-free operators give no edges") {
    PlanningInstance inst({"a", "b"},
                          {Operator{"a1", {}, var(0), true}, Operator{"b0", {}, var(1), false}},
                          TotalState(2), {});
    CHECK(build_causal_graph(inst).edges().empty());
}

TEST_CASE("reduction of a 3x3 formula has the figure-one causal graph") {
    CnfFormula f = cnf(3, {{1, -2, -3}, {-1, 2, 3}, {1, 2, -3}});
    Reduction r = reduce_formula(f);
    CausalGraph g = build_causal_graph(r.instance);
    std::set<std::pair<std::string, std::string>> expected;
    for (const char *lit : {"vx1", "vnx1", "vx2", "vnx2", "vx3", "vnx3", "vc1", "vc2", "vc3"})
        expected.emplace(lit, "v1");
    for (int j = 1; j <= 3; ++j)
        expected.emplace("vcp" + std::to_string(j), "vc" + std::to_string(j));
    for (int i = 1; i < 5; ++i)
        expected.emplace("v" + std::to_string(i), "v" + std::to_string(i + 1));
    CHECK(named_edges(g) == expected);

    GraphReport report = classify(g);
    CHECK(report.is_polytree);
    CHECK(report.is_dag);
    CHECK(report.max_indegree == 9);
    CHECK(indegree(g, r.instance.variable("v1")) == 9);
    CHECK(indegree(g, r.instance.variable("v5")) == 1);
    CHECK(indegree(g, r.instance.variable("vx1")) == 0);
}

TEST_CASE("classify small graphs") {
    SUBCASE("triangle") {
        GraphReport r = classify(graph_of(3, {{var(0), var(1)}, {var(1), var(2)}, {var(0), var(2)}}));
        CHECK(r.is_dag);
        CHECK_FALSE(r.is_polytree);
        REQUIRE(r.undirected_cycle_witness);
        std::vector<VariableId> cycle = *r.undirected_cycle_witness;
        std::sort(cycle.begin(), cycle.end());
        CHECK(cycle == std::vector<VariableId>{var(0), var(1), var(2)});
    }
    SUBCASE("single vertex") {
        GraphReport r = classify(graph_of(1, {}));
        CHECK(r.is_polytree);
        CHECK(r.max_indegree == 0);
        CHECK_FALSE(r.undirected_cycle_witness);
    }
    SUBCASE("antiparallel pair") {
        GraphReport r = classify(graph_of(2, {{var(0), var(1)}, {var(1), var(0)}}));
        CHECK_FALSE(r.is_dag);
        CHECK_FALSE(r.is_polytree);
        REQUIRE(r.undirected_cycle_witness);
        CHECK(r.undirected_cycle_witness->size() == 2);
    }
    SUBCASE("diamond is a DAG but not a polytree") {
        GraphReport r = classify(graph_of(
            4, {{var(0), var(1)}, {var(0), var(2)}, {var(1), var(3)}, {var(2), var(3)}}));
        CHECK(r.is_dag);
        CHECK_FALSE(r.is_polytree);
        CHECK(r.max_indegree == 2);
        CHECK(r.indegree_of == std::vector<std::size_t>{0, 1, 1, 2});
    }
    SUBCASE("in-star is a polytree") {
        GraphReport r = classify(graph_of(4, {{var(1), var(0)}, {var(2), var(0)}, {var(3), var(0)}}));
        CHECK(r.is_polytree);
        CHECK(r.max_indegree == 3);
    }
}

TEST_CASE("self-loops and unknown vertices are structural errors") {
    CHECK_THROWS_AS(graph_of(2, {{var(0), var(0)}}), StructuralError);
    CHECK_THROWS_AS(graph_of(2, {{var(0), var(4)}}), StructuralError);
    CHECK_THROWS_AS(indegree(graph_of(2, {}), var(2)), StructuralError);
    CHECK(indegree(graph_of(2, {}), var(1)) == 0);
}

TEST_CASE("classify on random graphs: witness, counting oracle and relabeling") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t n = 1 + rng() % 7;
        EdgeSet edges;
        std::size_t m = rng() % (n + 2);
        for (std::size_t e = 0; e < m; ++e) {
            std::uint32_t a = rng() % n, b = rng() % n;
            if (a != b)
                edges.emplace(var(a), var(b));
        }
        GraphReport r = classify(graph_of(n, edges));
        CHECK(r.is_polytree == forest_by_counting(n, edges));
        if (r.is_polytree)
            CHECK(r.is_dag);
        CHECK(r.max_indegree == *std::max_element(r.indegree_of.begin(), r.indegree_of.end()));

        if (r.undirected_cycle_witness) {
            // Consecutive witness vertices (cyclically) are adjacent.
            const auto &w = *r.undirected_cycle_witness;
            auto adjacent = [&edges](VariableId a, VariableId b) {
                return edges.count({a, b}) || edges.count({b, a});
            };
            for (std::size_t i = 0; i < w.size(); ++i)
                CHECK(adjacent(w[i], w[(i + 1) % w.size()]));
        }

        std::vector<std::uint32_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        EdgeSet relabeled;
        for (const auto &[a, b] : edges)
            relabeled.emplace(var(perm[a.index]), var(perm[b.index]));
        GraphReport r2 = classify(graph_of(n, relabeled));
        CHECK(r2.is_polytree == r.is_polytree);
        CHECK(r2.is_dag == r.is_dag);
        CHECK(r2.max_indegree == r.max_indegree);
    }
}

TEST_CASE("DOT export lists every vertex and edge") {
    std::ostringstream out;
    write_dot(out, build_causal_graph(build_chain_instance({2})));
    CHECK(out.str() ==
          "digraph causal_graph {\n"
          "  \"v1\";\n  \"v2\";\n  \"v3\";\n"
          "  \"v1\" -> \"v2\";\n  \"v2\" -> \"v3\";\n"
          "}\n");
}
