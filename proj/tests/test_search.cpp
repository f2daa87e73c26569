#include "oracles.hpp"

#include "polyplan/chain.hpp"
#include "polyplan/errors.hpp"
#include "polyplan/reduction.hpp"
#include "polyplan/search.hpp"

#include <doctest.h>

#include <random>

using namespace polyplan;
using polyplan::testing::cnf;
using polyplan::testing::var;

namespace {
PlanningInstance random_instance(std::mt19937 &rng, std::uint32_t num_vars, std::size_t num_ops) {
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < num_vars; ++i)
        names.push_back("u" + std::to_string(i));
    std::vector<Operator> ops;
    for (std::size_t o = 0; o < num_ops; ++o) {
        Operator op;
        op.name = "o" + std::to_string(o);
        op.post_var = var(rng() % num_vars);
        op.post_val = rng() & 1;
        for (std::uint32_t i = 0; i < num_vars; ++i) {
            if (var(i) != op.post_var && rng() % 3 == 0)
                op.prv.set(var(i), rng() & 1);
        }
        ops.push_back(op);
    }
    TotalState init(num_vars);
    PartialState goal;
    for (std::uint32_t i = 0; i < num_vars; ++i) {
        init.set(var(i), rng() & 1);
        if (rng() % 2 == 0)
            goal.set(var(i), rng() & 1);
    }
    return PlanningInstance(names, ops, init, goal);
}

std::set<OperatorIndex> named(const PlanningInstance &inst, std::initializer_list<const char *> names) {
    std::set<OperatorIndex> result;
    for (const char *name : names)
        result.insert(*inst.find_operator(name));
    return result;
}
}

TEST_CASE("shortest plan on the chain gadget") {
    PlanningInstance k2 = build_chain_instance({2});
    SearchResult r = find_shortest_plan(k2);
    REQUIRE(r.outcome == SearchOutcome::plan_found);
    CHECK(r.plan->steps.size() == 6);
    CHECK(validate_plan(k2, *r.plan).valid);
    CHECK(testing::shortest_plan_length(k2, 8) == std::size_t(6));

    for (std::size_t k = 1; k <= 4; ++k) {
        SearchResult rk = find_shortest_plan(build_chain_instance({k}));
        REQUIRE(rk.plan);
        CHECK(rk.plan->steps.size() == k * (2 * k - 1));
    }
}

TEST_CASE("unsatisfiable formula has no plan") {
    CnfFormula f = cnf(1, {{1}, {-1}});
    Reduction r = reduce_formula(f);
    CHECK(r.instance.num_variables() == 9);
    SearchResult result = find_shortest_plan(r.instance);
    CHECK(result.outcome == SearchOutcome::no_plan);
    CHECK_FALSE(result.plan);
    CHECK(count_reachable(r.instance) <= 512);
    CHECK(count_reachable(r.instance) == testing::reachable_states(r.instance).size());
}

TEST_CASE("goal already satisfied gives the empty plan") {
    PlanningInstance inst({"a"}, {Operator{"up", {}, var(0), true}}, TotalState(1),
                          PartialState{{var(0), false}});
    SearchResult r = find_shortest_plan(inst);
    REQUIRE(r.outcome == SearchOutcome::plan_found);
    CHECK(r.plan->steps.empty());
    CHECK(min_switch_cost(inst, {0}) == std::size_t(0));
}

TEST_CASE("min_switch_cost on the chain gadget") {
    CHECK(min_switch_cost(build_chain_instance({1}), {1}) == std::size_t(1));
    for (std::size_t k = 1; k <= 4; ++k) {
        PlanningInstance inst = build_chain_instance({k});
        std::set<OperatorIndex> charged = named(inst, {"beta_1"});
        CAPTURE(k);
        CHECK(min_switch_cost(inst, charged) == k);
        CHECK(testing::min_charge(inst, charged) == k);
        CostResult full = find_min_cost_plan(inst, charged);
        REQUIRE(full.plan);
        CHECK(validate_plan(inst, *full.plan).valid);
        CHECK(switch_count(inst, *full.plan, var(0)) == k);
    }
}

TEST_CASE("min_switch_cost on a reduced instance charges group-3 operators") {
    CnfFormula f = cnf(3, {{1, 2, -3}, {-1, 3}, {2}});
    Reduction r = reduce_formula(f);
    std::set<OperatorIndex> fires;
    for (const ClauseGadget &g : r.map.clauses)
        fires.insert(g.fire_ops.begin(), g.fire_ops.end());
    CHECK(min_switch_cost(r.instance, fires) == std::size_t(3));
    CHECK(testing::min_charge(r.instance, fires) == std::size_t(3));
}

TEST_CASE("zero-cost cycles terminate") {
    CHECK(min_switch_cost(build_chain_instance({3}), {}) == std::size_t(0));
    CHECK_FALSE(min_switch_cost(reduce_formula(cnf(1, {{1}, {-1}})).instance, {}));
}

TEST_CASE("count_reachable") {
    CHECK(count_reachable(build_chain_instance({1})) == 2);
    PlanningInstance k2 = build_chain_instance({2});
    CHECK(testing::reachable_states(k2).size() == 8);
    CHECK(count_reachable(k2) == 8);
    CHECK(count_reachable(PlanningInstance({"a", "b"}, {}, TotalState(2), {})) == 1);
    SearchBudget one_step;
    one_step.max_steps = 1;
    CHECK(count_reachable(k2, one_step) == 2);
}

TEST_CASE("budgets") {
    PlanningInstance k2 = build_chain_instance({2});
    SearchBudget tiny;
    tiny.max_states = 3;
    CHECK(find_shortest_plan(k2, tiny).outcome == SearchOutcome::budget_exceeded);
    CHECK_THROWS_AS(count_reachable(k2, tiny), BudgetError);
    CHECK_THROWS_AS(min_switch_cost(k2, {0}, tiny), BudgetError);

    SearchBudget shallow;
    shallow.max_steps = 5;
    CHECK(find_shortest_plan(k2, shallow).outcome == SearchOutcome::budget_exceeded);
    shallow.max_steps = 6;
    CHECK(find_shortest_plan(k2, shallow).outcome == SearchOutcome::plan_found);

    // Exactly enough room for the whole space still proves unsolvability.
    PlanningInstance unsolvable({"a"}, {}, TotalState(1), PartialState{{var(0), true}});
    SearchBudget single;
    single.max_states = 1;
    CHECK(find_shortest_plan(unsolvable, single).outcome == SearchOutcome::no_plan);

    SearchBudget zero;
    zero.max_states = 0;
    CHECK_THROWS_AS(find_shortest_plan(k2, zero), ArgumentError);
}

TEST_CASE("breadth-first plans are valid, minimal and deterministic on random instances") {
    std::mt19937 rng(31337);
    std::size_t found = 0, unsolvable = 0;
    for (int trial = 0; trial < 150; ++trial) {
        PlanningInstance inst = random_instance(rng, 2 + rng() % 5, 2 + rng() % 10);
        SearchResult r = find_shortest_plan(inst);
        std::optional<std::size_t> oracle = testing::shortest_plan_length(inst, 12);
        if (r.outcome == SearchOutcome::plan_found) {
            ++found;
            CHECK(validate_plan(inst, *r.plan).valid);
            CHECK(oracle == r.plan->steps.size());
            CHECK(find_shortest_plan(inst).plan == r.plan);
        } else {
            ++unsolvable;
            CHECK(r.outcome == SearchOutcome::no_plan);
            CHECK_FALSE(testing::complete_to_goal(inst, inst.init()));
        }
        CHECK(count_reachable(inst) == testing::reachable_states(inst).size());
        std::set<OperatorIndex> charged;
        for (OperatorIndex o = 0; o < inst.operators().size(); o += 2)
            charged.insert(o);
        CHECK(min_switch_cost(inst, charged) == testing::min_charge(inst, charged));
    }
    CHECK(found > 20);
    CHECK(unsolvable > 5);
}

TEST_CASE("clause tokens are used at most once in oracle plans") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        CnfFormula f = sample_formula({3, 1 + seed % 3, seed, 1, 3});
        Reduction r = reduce_formula(f);
        SearchResult result = find_shortest_plan(r.instance);
        if (!result.plan)
            continue;
        Trajectory t = simulate(r.instance, *result.plan);
        for (const ClauseGadget &g : r.map.clauses) {
            std::size_t drops = 0;
            for (std::size_t i = 1; i < t.states.size(); ++i) {
                if (t.states[i - 1].get(g.token) && !t.states[i].get(g.token))
                    ++drops;
            }
            CHECK(drops <= 1);
        }
    }
}
