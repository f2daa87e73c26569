#include "polyplan/search.hpp"

#include "polyplan/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <span>
#include <tuple>
#include <unordered_set>
#include <vector>

using namespace std;

namespace polyplan {
const char *to_string(SearchOutcome outcome) {
    switch (outcome) {
    case SearchOutcome::plan_found:
        return "plan_found";
    case SearchOutcome::no_plan:
        return "no_plan";
    case SearchOutcome::budget_exceeded:
        return "budget_exceeded";
    }
    return "?";
}

namespace {
using StateId = uint32_t;

// Conditions as (mask, value) word pairs so that a test is one AND and
// compare per word.
struct Condition {
    vector<uint64_t> mask;
    vector<uint64_t> value;

    Condition(const PartialState &s, size_t num_words)
        : mask(num_words, 0), value(num_words, 0) {
        for (const auto &[var, bit] : s) {
            mask[var.index / 64] |= uint64_t(1) << (var.index % 64);
            if (bit)
                value[var.index / 64] |= uint64_t(1) << (var.index % 64);
        }
    }

    bool holds(span<const uint64_t> state) const {
        for (size_t w = 0; w < mask.size(); ++w) {
            if ((state[w] & mask[w]) != value[w])
                return false;
        }
        return true;
    }
};

struct CompiledOperator {
    Condition condition; // prevail plus implicit pre-condition
    size_t word;
    uint64_t bit;
};

/*
  Interning table for packed total states. States live contiguously in
  one arena and are identified by their insertion order.
*/
class StateRegistry {
    size_t num_words;
    vector<uint64_t> arena;

    struct Hash {
        const StateRegistry *registry;
        size_t operator()(StateId id) const {
            uint64_t h = 0x9e3779b97f4a7c15ULL;
            for (uint64_t w : registry->get(id)) {
                h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
                h *= 0xff51afd7ed558ccdULL;
            }
            return static_cast<size_t>(h ^ (h >> 33));
        }
    };
    struct Equal {
        const StateRegistry *registry;
        bool operator()(StateId a, StateId b) const {
            span<const uint64_t> x = registry->get(a);
            span<const uint64_t> y = registry->get(b);
            return equal(x.begin(), x.end(), y.begin());
        }
    };
    unordered_set<StateId, Hash, Equal> index;

public:
    explicit StateRegistry(size_t num_words)
        : num_words(max<size_t>(num_words, 1)), index(64, Hash{this}, Equal{this}) {}
    StateRegistry(const StateRegistry &) = delete;
    StateRegistry &operator=(const StateRegistry &) = delete;

    size_t size() const {return arena.size() / num_words;}

    span<const uint64_t> get(StateId id) const {
        return span<const uint64_t>(arena.data() + size_t(id) * num_words, num_words);
    }

    // Returns the id of state and whether it was new.
    pair<StateId, bool> insert(span<const uint64_t> state) {
        StateId id = static_cast<StateId>(size());
        arena.insert(arena.end(), state.begin(), state.end());
        auto [it, inserted] = index.insert(id);
        if (!inserted)
            arena.resize(arena.size() - num_words);
        return {*it, inserted};
    }
};

struct CompiledTask {
    size_t num_words;
    vector<CompiledOperator> ops;
    Condition goal;
    vector<uint64_t> init;

    explicit CompiledTask(const PlanningInstance &inst)
        : num_words(max<size_t>((inst.num_variables() + 63) / 64, 1)),
          goal(inst.goal(), num_words) {
        for (const Operator &op : inst.operators()) {
            PartialState condition = merge(op.prv, implicit_pre(op));
            ops.push_back(CompiledOperator{
                Condition(condition, num_words), op.post_var.index / 64u,
                uint64_t(1) << (op.post_var.index % 64)});
        }
        init.assign(num_words, 0);
        span<const uint64_t> words = inst.init().data();
        copy(words.begin(), words.end(), init.begin());
    }
};

void check_budget(const SearchBudget &budget) {
    if (budget.max_states < 1)
        throw ArgumentError("search budget needs max_states >= 1");
}

Plan trace_back(StateId goal, const vector<StateId> &parent,
                const vector<OperatorIndex> &via) {
    Plan plan;
    for (StateId s = goal; s != 0; s = parent[s])
        plan.steps.push_back(via[s]);
    reverse(plan.steps.begin(), plan.steps.end());
    return plan;
}
}

SearchResult find_shortest_plan(const PlanningInstance &inst, const SearchBudget &budget) {
    check_budget(budget);
    CompiledTask task(inst);
    StateRegistry registry(task.num_words);
    vector<StateId> parent;
    vector<OperatorIndex> via;
    vector<size_t> depth;

    SearchResult result;
    auto found = [&](StateId goal) {
        result.outcome = SearchOutcome::plan_found;
        result.plan = trace_back(goal, parent, via);
        return result;
    };

    registry.insert(task.init);
    parent.push_back(0);
    via.push_back(0);
    depth.push_back(0);
    if (task.goal.holds(registry.get(0)))
        return found(0);

    bool truncated = false;
    vector<uint64_t> successor(task.num_words);
    // Ids are assigned in discovery order, so the registry doubles as the
    // breadth-first queue.
    for (StateId current = 0; current < registry.size(); ++current) {
        if (budget.max_steps && depth[current] >= *budget.max_steps) {
            truncated = true;
            continue;
        }
        ++result.states_expanded;
        for (OperatorIndex o = 0; o < task.ops.size(); ++o) {
            const CompiledOperator &op = task.ops[o];
            span<const uint64_t> state = registry.get(current);
            if (!op.condition.holds(state))
                continue;
            copy(state.begin(), state.end(), successor.begin());
            successor[op.word] ^= op.bit;
            auto [id, is_new] = registry.insert(successor);
            if (!is_new)
                continue;
            if (registry.size() > budget.max_states) {
                result.outcome = SearchOutcome::budget_exceeded;
                return result;
            }
            parent.push_back(current);
            via.push_back(o);
            depth.push_back(depth[current] + 1);
            if (task.goal.holds(registry.get(id)))
                return found(id);
        }
    }
    result.outcome = truncated ? SearchOutcome::budget_exceeded : SearchOutcome::no_plan;
    return result;
}

CostResult find_min_cost_plan(const PlanningInstance &inst, const set<OperatorIndex> &charged,
                              const SearchBudget &budget) {
    check_budget(budget);
    for (OperatorIndex o : charged)
        inst.get_operator(o);
    CompiledTask task(inst);
    StateRegistry registry(task.num_words);
    vector<StateId> parent{0};
    vector<OperatorIndex> via{0};
    vector<size_t> cost{0};
    vector<bool> settled{false};
    registry.insert(task.init);

    // (cost, insertion order, state)
    using Entry = tuple<size_t, uint64_t, StateId>;
    priority_queue<Entry, vector<Entry>, greater<Entry>> open;
    uint64_t pushes = 0;
    open.emplace(0, pushes++, 0);

    CostResult result;
    vector<uint64_t> successor(task.num_words);
    while (!open.empty()) {
        auto [g, order, current] = open.top();
        open.pop();
        if (settled[current] || g > cost[current])
            continue;
        settled[current] = true;
        if (task.goal.holds(registry.get(current))) {
            result.cost = g;
            result.plan = trace_back(current, parent, via);
            return result;
        }
        ++result.states_expanded;
        for (OperatorIndex o = 0; o < task.ops.size(); ++o) {
            const CompiledOperator &op = task.ops[o];
            span<const uint64_t> state = registry.get(current);
            if (!op.condition.holds(state))
                continue;
            copy(state.begin(), state.end(), successor.begin());
            successor[op.word] ^= op.bit;
            size_t next_cost = g + (charged.count(o) ? 1 : 0);
            auto [id, is_new] = registry.insert(successor);
            if (is_new && registry.size() > budget.max_states)
                throw BudgetError(
                    "uniform-cost search exceeded " + std::to_string(budget.max_states) +
                    " states", result.states_expanded);
            if (is_new) {
                parent.push_back(current);
                via.push_back(o);
                cost.push_back(next_cost);
                settled.push_back(false);
            } else if (settled[id] || next_cost >= cost[id]) {
                continue;
            } else {
                parent[id] = current;
                via[id] = o;
                cost[id] = next_cost;
            }
            open.emplace(next_cost, pushes++, id);
        }
    }
    return result;
}

optional<size_t> min_switch_cost(const PlanningInstance &inst, const set<OperatorIndex> &charged,
                                 const SearchBudget &budget) {
    return find_min_cost_plan(inst, charged, budget).cost;
}

size_t count_reachable(const PlanningInstance &inst, const SearchBudget &budget) {
    check_budget(budget);
    CompiledTask task(inst);
    StateRegistry registry(task.num_words);
    vector<size_t> depth{0};
    registry.insert(task.init);
    vector<uint64_t> successor(task.num_words);
    for (StateId current = 0; current < registry.size(); ++current) {
        if (budget.max_steps && depth[current] >= *budget.max_steps)
            continue;
        for (const CompiledOperator &op : task.ops) {
            span<const uint64_t> state = registry.get(current);
            if (!op.condition.holds(state))
                continue;
            copy(state.begin(), state.end(), successor.begin());
            successor[op.word] ^= op.bit;
            auto [id, is_new] = registry.insert(successor);
            if (!is_new)
                continue;
            if (registry.size() > budget.max_states)
                throw BudgetError(
                    "more than " + std::to_string(budget.max_states) + " reachable states",
                    current + 1);
            depth.push_back(depth[current] + 1);
        }
    }
    return registry.size();
}
}
