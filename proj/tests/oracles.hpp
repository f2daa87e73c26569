#ifndef POLYPLAN_TESTS_ORACLES_HPP
#define POLYPLAN_TESTS_ORACLES_HPP

// Reference procedures used only by the tests. They go through the plain
// sas-core state API and share no code with the search module.

#include "polyplan/cnf.hpp"
#include "polyplan/sas.hpp"

#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace polyplan::testing {

inline VariableId var(std::uint32_t index) {
    return VariableId{index};
}

// Formula from DIMACS-style signed integers.
inline CnfFormula cnf(std::size_t n, std::initializer_list<std::initializer_list<int>> clauses) {
    std::vector<Clause> list;
    for (const auto &clause : clauses) {
        Clause c;
        for (int lit : clause)
            c.push_back(Literal{static_cast<std::uint32_t>(std::abs(lit)), lit < 0});
        list.push_back(c);
    }
    return CnfFormula(n, list);
}

inline std::vector<bool> unpack(const TotalState &state) {
    std::vector<bool> bits;
    for (std::uint32_t i = 0; i < state.size(); ++i)
        bits.push_back(state.get(VariableId{i}));
    return bits;
}

// Every satisfying assignment, by direct clause evaluation.
inline std::vector<Assignment> all_models(const CnfFormula &formula) {
    std::vector<Assignment> models;
    const std::size_t n = formula.num_vars();
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
        std::vector<bool> values(n);
        for (std::size_t x = 0; x < n; ++x)
            values[x] = (bits >> (n - 1 - x)) & 1;
        bool ok = true;
        for (const Clause &clause : formula.clauses()) {
            bool clause_ok = false;
            for (const Literal &lit : clause)
                clause_ok = clause_ok || (values[lit.var - 1] == !lit.negated);
            ok = ok && clause_ok;
        }
        if (ok)
            models.emplace_back(values);
    }
    return models;
}

// Depth-first enumeration of the reachable state space.
inline std::set<std::vector<bool>> reachable_states(const PlanningInstance &inst) {
    std::set<std::vector<bool>> seen;
    std::vector<TotalState> stack{inst.init()};
    seen.insert(unpack(inst.init()));
    while (!stack.empty()) {
        TotalState state = stack.back();
        stack.pop_back();
        for (const Operator &op : inst.operators()) {
            if (!applicable(op, state))
                continue;
            TotalState next = apply(op, state);
            if (seen.insert(unpack(next)).second)
                stack.push_back(next);
        }
    }
    return seen;
}

namespace detail {
inline bool depth_limited(const PlanningInstance &inst, const TotalState &state,
                          std::size_t remaining) {
    if (subsumes(inst.goal(), state))
        return true;
    if (remaining == 0)
        return false;
    for (const Operator &op : inst.operators()) {
        if (applicable(op, state) && depth_limited(inst, apply(op, state), remaining - 1))
            return true;
    }
    return false;
}
}

// Iterative deepening: length of the shortest valid plan up to max_length.
inline std::optional<std::size_t> shortest_plan_length(const PlanningInstance &inst,
                                                       std::size_t max_length) {
    for (std::size_t limit = 0; limit <= max_length; ++limit) {
        if (detail::depth_limited(inst, inst.init(), limit))
            return limit;
    }
    return std::nullopt;
}

// Shortest operator sequence from start to a goal state, by a plain
// breadth-first search over explicit states.
inline std::optional<Plan> complete_to_goal(const PlanningInstance &inst, const TotalState &start) {
    std::map<std::vector<bool>, std::pair<std::vector<bool>, OperatorIndex>> came_from;
    std::vector<TotalState> frontier{start};
    came_from[unpack(start)] = {unpack(start), 0};
    auto trace = [&](std::vector<bool> bits) {
        Plan plan;
        while (bits != unpack(start)) {
            auto [prev, op] = came_from[bits];
            plan.steps.insert(plan.steps.begin(), op);
            bits = prev;
        }
        return plan;
    };
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        TotalState state = frontier[head];
        if (subsumes(inst.goal(), state))
            return trace(unpack(state));
        for (OperatorIndex o = 0; o < inst.operators().size(); ++o) {
            const Operator &op = inst.operators()[o];
            if (!applicable(op, state))
                continue;
            TotalState next = apply(op, state);
            if (came_from.emplace(unpack(next), std::make_pair(unpack(state), o)).second)
                frontier.push_back(next);
        }
    }
    return std::nullopt;
}

// Minimum charge over all valid plans by Bellman-Ford style relaxation on
// the explicit reachable state graph.
inline std::optional<std::size_t> min_charge(const PlanningInstance &inst,
                                             const std::set<OperatorIndex> &charged) {
    std::set<std::vector<bool>> states = reachable_states(inst);
    std::map<std::vector<bool>, std::size_t> best;
    const std::size_t infinity = std::numeric_limits<std::size_t>::max();
    for (const auto &s : states)
        best[s] = infinity;
    best[unpack(inst.init())] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto &bits : states) {
            if (best[bits] == infinity)
                continue;
            TotalState state(bits.size());
            for (std::uint32_t i = 0; i < bits.size(); ++i)
                state.set(VariableId{i}, bits[i]);
            for (OperatorIndex o = 0; o < inst.operators().size(); ++o) {
                const Operator &op = inst.operators()[o];
                if (!applicable(op, state))
                    continue;
                std::vector<bool> next = unpack(apply(op, state));
                std::size_t cost = best[bits] + (charged.count(o) ? 1 : 0);
                if (cost < best[next]) {
                    best[next] = cost;
                    changed = true;
                }
            }
        }
    }
    std::optional<std::size_t> result;
    for (const auto &[bits, cost] : best) {
        if (cost == infinity)
            continue;
        bool goal = true;
        for (const auto &[v, value] : inst.goal())
            goal = goal && bits[v.index] == value;
        if (goal && (!result || cost < *result))
            result = cost;
    }
    return result;
}
}

#endif
