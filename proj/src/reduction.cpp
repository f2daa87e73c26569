#include "polyplan/reduction.hpp"

#include "polyplan/chain.hpp"
#include "polyplan/errors.hpp"

#include <algorithm>

using namespace std;

namespace polyplan {
const char *to_string(TotalizeMode mode) {
    switch (mode) {
    case TotalizeMode::none:
        return "none";
    case TotalizeMode::paper:
        return "paper";
    case TotalizeMode::swapped:
        return "swapped";
    }
    return "?";
}

TotalizeMode parse_totalize_mode(const string &text) {
    for (TotalizeMode mode : {TotalizeMode::none, TotalizeMode::paper, TotalizeMode::swapped}) {
        if (text == to_string(mode))
            return mode;
    }
    throw ArgumentError("unknown totalize mode '" + text + "'");
}

vector<uint32_t> clause_variables(const Clause &clause) {
    vector<uint32_t> vars;
    for (const Literal &lit : clause)
        vars.push_back(lit.var);
    sort(vars.begin(), vars.end());
    vars.erase(unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

static bool satisfies(const Clause &clause, const PartialAssignment &pa) {
    return any_of(clause.begin(), clause.end(), [&pa](const Literal &lit) {
        return any_of(pa.begin(), pa.end(), [&lit](const auto &binding) {
            return binding.first == lit.var && satisfies(lit, binding.second);
        });
    });
}

vector<PartialAssignment> satisfying_partial_assignments(const Clause &clause) {
    vector<uint32_t> vars = clause_variables(clause);
    const size_t m = vars.size();
    vector<PartialAssignment> result;
    for (uint32_t bits = 0; bits < (1u << m); ++bits) {
        PartialAssignment pa;
        for (size_t i = 0; i < m; ++i)
            pa.emplace_back(vars[i], (bits >> (m - 1 - i)) & 1);
        if (satisfies(clause, pa))
            result.push_back(move(pa));
    }
    return result;
}

PartialState group3_prevail(const ReductionMap &map, size_t clause_index,
                            const Clause &clause, const PartialAssignment &pa) {
    if (clause_index >= map.clauses.size())
        throw ArgumentError("clause index " + std::to_string(clause_index) + " out of range");
    vector<uint32_t> vars = clause_variables(clause);
    vector<uint32_t> assigned;
    for (const auto &binding : pa)
        assigned.push_back(binding.first);
    if (assigned != vars)
        throw ArgumentError("partial assignment does not cover exactly the clause variables");
    if (!satisfies(clause, pa))
        throw ArgumentError("partial assignment does not satisfy the clause");

    PartialState prv;
    prv.set(map.clauses[clause_index].token, true);
    for (const auto &[x, value] : pa) {
        if (x < 1 || x > map.variables.size())
            throw ArgumentError("variable " + std::to_string(x) + " is not in the map");
        prv.set(map.variables[x - 1].positive, value);
        prv.set(map.variables[x - 1].negative, !value);
    }
    return prv;
}

namespace {
class InstanceBuilder {
public:
    vector<string> names;
    vector<Operator> ops;
    vector<OperatorOrigin> origins;

    VariableId add_variable(string name) {
        names.push_back(move(name));
        return VariableId{static_cast<uint32_t>(names.size() - 1)};
    }

    OperatorIndex add_operator(string name, PartialState prv, VariableId var,
                               bool value, OperatorOrigin origin) {
        ops.push_back(Operator{move(name), move(prv), var, value});
        origins.push_back(move(origin));
        return ops.size() - 1;
    }
};

string fire_name(size_t clause_index, const PartialAssignment &pa) {
    string name = "fire_c" + std::to_string(clause_index + 1);
    for (const auto &[x, value] : pa)
        name += "_x" + std::to_string(x) + (value ? "t" : "f");
    return name;
}
}

Reduction reduce_formula(const CnfFormula &formula, TotalizeMode mode) {
    const size_t n = formula.num_vars();
    const size_t k = formula.num_clauses();
    if (k < 1)
        throw ArgumentError("formula needs at least one clause");
    const size_t chain_length = 2 * k - 1;

    InstanceBuilder builder;
    ReductionMap map;
    map.mode = mode;

    for (size_t x = 1; x <= n; ++x) {
        LiteralGadget gadget;
        gadget.positive = builder.add_variable("vx" + std::to_string(x));
        gadget.negative = builder.add_variable("vnx" + std::to_string(x));
        map.variables.push_back(gadget);
    }
    for (size_t j = 1; j <= k; ++j) {
        ClauseGadget gadget;
        gadget.token = builder.add_variable("vc" + std::to_string(j));
        gadget.latch = builder.add_variable("vcp" + std::to_string(j));
        map.clauses.push_back(gadget);
    }
    for (size_t i = 1; i <= chain_length; ++i)
        map.chain.push_back(builder.add_variable(chain_variable_name(i)));
    const VariableId v1 = map.chain.front();

    // (1)
    for (uint32_t x = 1; x <= n; ++x) {
        LiteralGadget &gadget = map.variables[x - 1];
        OperatorOrigin origin{1, x, nullopt, nullopt, nullopt};
        gadget.set_positive = builder.add_operator(
            "set_vx" + std::to_string(x), {}, gadget.positive, true, origin);
        gadget.set_negative = builder.add_operator(
            "set_vnx" + std::to_string(x), {}, gadget.negative, true, origin);
    }
    // (2) and (3), clause by clause
    for (size_t j = 0; j < k; ++j) {
        ClauseGadget &gadget = map.clauses[j];
        const string suffix = "_c" + std::to_string(j + 1);
        OperatorOrigin origin{2, nullopt, j, nullopt, nullopt};
        gadget.latch_op = builder.add_operator(
            "latch" + suffix, {}, gadget.latch, true, origin);
        gadget.raise_op = builder.add_operator(
            "raise" + suffix, {{gadget.latch, false}}, gadget.token, true, origin);
        gadget.lower_op = builder.add_operator(
            "lower" + suffix, {{gadget.latch, true}}, gadget.token, false, origin);

        const Clause &clause = formula.clauses()[j];
        for (PartialAssignment &pa : satisfying_partial_assignments(clause)) {
            PartialState prv = group3_prevail(map, j, clause, pa);
            string name = fire_name(j, pa);
            gadget.fire_ops.push_back(builder.add_operator(
                move(name), move(prv), v1, true,
                OperatorOrigin{3, nullopt, j, move(pa), nullopt}));
        }
    }
    // (4)
    PartialState all_tokens_down;
    for (const ClauseGadget &gadget : map.clauses)
        all_tokens_down.set(gadget.token, false);
    map.reset_op = builder.add_operator(
        "reset_v1", move(all_tokens_down), v1, false,
        OperatorOrigin{4, nullopt, nullopt, nullopt, nullopt});
    // (5)
    for (size_t i = 2; i <= chain_length; ++i) {
        OperatorOrigin origin{5, nullopt, nullopt, nullopt, i};
        VariableId prev = map.chain[i - 2];
        VariableId cur = map.chain[i - 1];
        map.alpha_ops.push_back(builder.add_operator(
            "alpha_" + std::to_string(i), {{prev, false}}, cur, false, origin));
        map.beta_ops.push_back(builder.add_operator(
            "beta_" + std::to_string(i), {{prev, true}}, cur, true, origin));
    }
    map.origins = builder.origins;

    PartialState goal;
    for (size_t i = 1; i <= chain_length; ++i)
        goal.set(map.chain[i - 1], i % 2 == 1);
    if (mode != TotalizeMode::none) {
        for (const LiteralGadget &gadget : map.variables) {
            goal.set(gadget.positive, true);
            goal.set(gadget.negative, true);
        }
        const bool token_value = mode == TotalizeMode::paper;
        for (const ClauseGadget &gadget : map.clauses) {
            goal.set(gadget.token, token_value);
            goal.set(gadget.latch, !token_value);
        }
    }

    const size_t num_vars = builder.names.size();
    PlanningInstance instance(move(builder.names), move(builder.ops),
                              TotalState(num_vars), move(goal));
    return Reduction{move(instance), move(map)};
}

static void check_map(const CnfFormula &formula, const ReductionMap &map) {
    if (reduce_formula(formula, map.mode).map != map)
        throw ArgumentError("reduction map was not produced from this formula");
}

Plan witness_plan(const CnfFormula &formula, const ReductionMap &map,
                  const Assignment &sigma) {
    check_map(formula, map);
    if (!satisfies(formula, sigma))
        throw ArgumentError("assignment does not satisfy the formula");

    Plan plan;
    auto push = [&plan](OperatorIndex op) {plan.steps.push_back(op);};
    for (uint32_t x = 1; x <= formula.num_vars(); ++x) {
        const LiteralGadget &gadget = map.variables[x - 1];
        push(sigma.value(x) ? gadget.set_positive : gadget.set_negative);
    }

    const size_t k = formula.num_clauses();
    const size_t chain_length = 2 * k - 1;
    for (size_t j = 0; j < k; ++j) {
        const ClauseGadget &gadget = map.clauses[j];
        const Clause &clause = formula.clauses()[j];
        vector<PartialAssignment> patterns = satisfying_partial_assignments(clause);
        PartialAssignment restricted;
        for (uint32_t x : clause_variables(clause))
            restricted.emplace_back(x, sigma.value(x));
        auto match = find(patterns.begin(), patterns.end(), restricted);

        push(gadget.raise_op);
        push(gadget.fire_ops[match - patterns.begin()]);
        // The fire operator plays beta_1 of the chain's telescoping plan,
        // reset_v1 plays alpha_1.
        const size_t top = chain_length - 2 * j;
        for (size_t i = 2; i <= top; ++i)
            push(map.beta_ops[i - 2]);
        if (j + 1 < k) {
            push(gadget.latch_op);
            push(gadget.lower_op);
            push(map.reset_op);
            for (size_t i = 2; i < top; ++i)
                push(map.alpha_ops[i - 2]);
        }
    }

    if (map.mode == TotalizeMode::swapped) {
        push(map.clauses.back().latch_op);
        push(map.clauses.back().lower_op);
    }
    if (map.mode != TotalizeMode::none) {
        for (uint32_t x = 1; x <= formula.num_vars(); ++x) {
            const LiteralGadget &gadget = map.variables[x - 1];
            push(sigma.value(x) ? gadget.set_negative : gadget.set_positive);
        }
    }
    return plan;
}

Assignment extract_assignment(const CnfFormula &formula, const ReductionMap &map,
                              const Plan &plan) {
    Reduction reduction = reduce_formula(formula, map.mode);
    if (reduction.map != map)
        throw ArgumentError("reduction map was not produced from this formula");
    ValidationReport report = validate_plan(reduction.instance, plan);
    if (!report.valid)
        throw ArgumentError("plan is not valid for the reduced instance");

    Trajectory trajectory = simulate(reduction.instance, plan);
    Assignment sigma(vector<bool>(formula.num_vars(), false));
    for (uint32_t x = 1; x <= formula.num_vars(); ++x) {
        const LiteralGadget &gadget = map.variables[x - 1];
        for (const TotalState &state : trajectory.states) {
            if (state.get(gadget.positive) && !state.get(gadget.negative)) {
                sigma.set(x, true);
                break;
            }
        }
    }
    return sigma;
}
}
