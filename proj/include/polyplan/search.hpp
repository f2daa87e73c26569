#ifndef POLYPLAN_SEARCH_HPP
#define POLYPLAN_SEARCH_HPP

#include "sas.hpp"

#include <cstddef>
#include <optional>
#include <set>

// Exhaustive searches over the total states reachable from the initial
// state. Intended for small instances; every search is bounded by a budget.
namespace polyplan {

struct SearchBudget {
    // Maximum number of distinct states stored.
    std::size_t max_states = std::size_t(1) << 22;
    // Optional bound on plan length (breadth-first searches only).
    std::optional<std::size_t> max_steps;
};

enum class SearchOutcome {plan_found, no_plan, budget_exceeded};

const char *to_string(SearchOutcome outcome);

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::no_plan;
    std::optional<Plan> plan;
    std::size_t states_expanded = 0;
};

/*
  Breadth-first search. Operators are tried in index order and a state
  keeps the first predecessor that reached it, so the returned plan is the
  shortest one and is deterministic. no_plan means the reachable space was
  exhausted; if states had to be dropped because of max_steps or max_states
  the outcome is budget_exceeded instead.
*/
SearchResult find_shortest_plan(const PlanningInstance &inst, const SearchBudget &budget = {});

struct CostResult {
    std::optional<std::size_t> cost;
    std::optional<Plan> plan;
    std::size_t states_expanded = 0;
};

// Uniform-cost search where each operator in charged costs 1 and all others
// are free. Throws BudgetError when more than max_states states are stored.
CostResult find_min_cost_plan(const PlanningInstance &inst,
                              const std::set<OperatorIndex> &charged,
                              const SearchBudget &budget = {});

// Minimum number of charged actions over all valid plans; nullopt when no
// valid plan exists.
std::optional<std::size_t> min_switch_cost(const PlanningInstance &inst,
                                           const std::set<OperatorIndex> &charged,
                                           const SearchBudget &budget = {});

// Number of distinct states reachable from init (within max_steps steps if
// given). Throws BudgetError when more than max_states are found.
std::size_t count_reachable(const PlanningInstance &inst, const SearchBudget &budget = {});
}

#endif
