#include "polyplan/sas.hpp"

#include "polyplan/errors.hpp"

#include <algorithm>
#include <cctype>

using namespace std;

namespace polyplan {
optional<bool> PartialState::get(VariableId var) const {
    auto it = bindings.find(var);
    if (it == bindings.end())
        return nullopt;
    return it->second;
}

TotalState::TotalState(size_t num_vars)
    : words((num_vars + 63) / 64, 0), width(num_vars) {
}

static void check_in_range(VariableId var, size_t width) {
    if (var.index >= width)
        throw StructuralError(
            "unknown variable #" + to_string(var.index) + " (state has " +
            to_string(width) + " variables)");
}

bool TotalState::get(VariableId var) const {
    check_in_range(var, width);
    return (words[var.index / 64] >> (var.index % 64)) & 1;
}

void TotalState::set(VariableId var, bool value) {
    check_in_range(var, width);
    uint64_t bit = uint64_t(1) << (var.index % 64);
    if (value)
        words[var.index / 64] |= bit;
    else
        words[var.index / 64] &= ~bit;
}

static bool valid_name(const string &name) {
    return !name.empty() && none_of(name.begin(), name.end(), [](unsigned char c) {
        return isspace(c);
    });
}

PlanningInstance::PlanningInstance(
    vector<string> variable_names_, vector<Operator> operators,
    TotalState init, PartialState goal)
    : variable_names(move(variable_names_)), ops(move(operators)),
      initial(move(init)), goal_state(move(goal)) {
    for (size_t i = 0; i < variable_names.size(); ++i) {
        const string &name = variable_names[i];
        if (!valid_name(name))
            throw StructuralError("invalid variable name '" + name + "'");
        VariableId id{static_cast<uint32_t>(i)};
        if (!variable_by_name.emplace(name, id).second)
            throw StructuralError("duplicate variable '" + name + "'");
    }
    if (initial.size() != variable_names.size())
        throw StructuralError("initial state does not cover every variable");

    auto check_partial = [this](const PartialState &s, const string &where) {
        for (const auto &[var, value] : s) {
            if (var.index >= variable_names.size())
                throw StructuralError(
                    where + " refers to unknown variable #" + to_string(var.index));
        }
    };
    check_partial(goal_state, "goal");
    for (size_t i = 0; i < ops.size(); ++i) {
        const Operator &op = ops[i];
        if (!valid_name(op.name))
            throw StructuralError("invalid operator name '" + op.name + "'");
        if (!operator_by_name.emplace(op.name, i).second)
            throw StructuralError("duplicate operator '" + op.name + "'");
        check_partial(op.prv, "operator '" + op.name + "'");
        if (op.post_var.index >= variable_names.size())
            throw StructuralError(
                "operator '" + op.name + "' changes an unknown variable");
        if (op.prv.defines(op.post_var))
            throw StructuralError(
                "operator '" + op.name + "' has its post variable among its prevail conditions");
    }
}

const Operator &PlanningInstance::get_operator(OperatorIndex index) const {
    if (index >= ops.size())
        throw StructuralError("operator reference " + to_string(index) + " out of range");
    return ops[index];
}

const string &PlanningInstance::variable_name(VariableId var) const {
    check_in_range(var, variable_names.size());
    return variable_names[var.index];
}

optional<VariableId> PlanningInstance::find_variable(string_view name) const {
    auto it = variable_by_name.find(string(name));
    if (it == variable_by_name.end())
        return nullopt;
    return it->second;
}

VariableId PlanningInstance::variable(string_view name) const {
    if (auto var = find_variable(name))
        return *var;
    throw StructuralError("unknown variable '" + string(name) + "'");
}

optional<OperatorIndex> PlanningInstance::find_operator(string_view name) const {
    auto it = operator_by_name.find(string(name));
    if (it == operator_by_name.end())
        return nullopt;
    return it->second;
}

bool PlanningInstance::operator==(const PlanningInstance &other) const {
    return variable_names == other.variable_names && ops == other.ops &&
           initial == other.initial && goal_state == other.goal_state;
}

PartialState merge(const PartialState &s, const PartialState &s2) {
    PartialState result = s;
    for (const auto &[var, value] : s2)
        result.set(var, value);
    return result;
}

bool subsumes(const PartialState &s, const PartialState &t) {
    return all_of(s.begin(), s.end(), [&t](const auto &binding) {
        return t.get(binding.first) == binding.second;
    });
}

bool subsumes(const PartialState &s, const TotalState &t) {
    return all_of(s.begin(), s.end(), [&t](const auto &binding) {
        return t.get(binding.first) == binding.second;
    });
}

PartialState implicit_pre(const Operator &op) {
    return PartialState{{op.post_var, !op.post_val}};
}

bool applicable(const Operator &op, const TotalState &state) {
    return state.get(op.post_var) != op.post_val && subsumes(op.prv, state);
}

TotalState apply(const Operator &op, const TotalState &state) {
    if (!applicable(op, state))
        throw ApplicationError(op.name);
    TotalState result = state;
    result.set(op.post_var, op.post_val);
    return result;
}

void check_plan_references(const PlanningInstance &inst, const Plan &plan) {
    for (size_t i = 0; i < plan.steps.size(); ++i) {
        if (plan.steps[i] >= inst.operators().size())
            throw StructuralError(
                "plan step " + to_string(i) + " refers to unknown operator #" +
                to_string(plan.steps[i]));
    }
}

Trajectory simulate(const PlanningInstance &inst, const Plan &plan) {
    check_plan_references(inst, plan);
    Trajectory trajectory;
    trajectory.states.push_back(inst.init());
    for (size_t i = 0; i < plan.steps.size(); ++i) {
        const Operator &op = inst.operators()[plan.steps[i]];
        const TotalState &current = trajectory.states.back();
        if (!applicable(op, current)) {
            trajectory.halted_at = i;
            break;
        }
        trajectory.states.push_back(apply(op, current));
    }
    return trajectory;
}

ValidationReport validate_plan(const PlanningInstance &inst, const Plan &plan) {
    Trajectory trajectory = simulate(inst, plan);
    ValidationReport report;
    report.final_state = trajectory.states.back();
    if (trajectory.halted_at) {
        report.failed_step = trajectory.halted_at;
        report.reason = FailureReason::inapplicable;
    } else if (!subsumes(inst.goal(), report.final_state)) {
        report.reason = FailureReason::goal_unmet;
    } else {
        report.valid = true;
    }
    return report;
}

bool cpnet_translatable(const PlanningInstance &inst) {
    // Operators setting a variable to 1, grouped by variable.
    map<VariableId, vector<const PartialState *>> raising;
    for (const Operator &op : inst.operators()) {
        if (op.post_val)
            raising[op.post_var].push_back(&op.prv);
    }
    for (const Operator &op : inst.operators()) {
        if (op.post_val)
            continue;
        auto it = raising.find(op.post_var);
        if (it == raising.end())
            continue;
        for (const PartialState *prv : it->second) {
            if (*prv == op.prv)
                return false;
        }
    }
    return true;
}
}
