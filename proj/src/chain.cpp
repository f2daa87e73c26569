#include "polyplan/chain.hpp"

#include "polyplan/errors.hpp"

using namespace std;

namespace polyplan {
string chain_variable_name(size_t i) {
    return "v" + to_string(i);
}

static void check_spec(ChainSpec spec) {
    if (spec.k < 1)
        throw ArgumentError("chain gadget needs k >= 1");
}

PlanningInstance build_chain_instance(ChainSpec spec) {
    check_spec(spec);
    const size_t length = 2 * spec.k - 1;
    vector<string> names;
    for (size_t i = 1; i <= length; ++i)
        names.push_back(chain_variable_name(i));

    auto var = [](size_t i) {return VariableId{static_cast<uint32_t>(i - 1)};};
    vector<Operator> ops;
    for (bool value : {false, true}) {
        for (size_t i = 1; i <= length; ++i) {
            Operator op;
            op.name = (value ? "beta_" : "alpha_") + to_string(i);
            op.post_var = var(i);
            op.post_val = value;
            if (i > 1)
                op.prv.set(var(i - 1), value);
            ops.push_back(move(op));
        }
    }
    PartialState goal;
    for (size_t i = 1; i <= length; ++i)
        goal.set(var(i), i % 2 == 1);
    return PlanningInstance(move(names), move(ops), TotalState(length), move(goal));
}

Plan optimal_chain_plan(ChainSpec spec) {
    check_spec(spec);
    const size_t length = 2 * spec.k - 1;
    auto alpha = [](size_t i) {return i - 1;};
    auto beta = [length](size_t i) {return length + i - 1;};
    Plan plan;
    for (size_t top = length; top >= 1; --top) {
        bool raise = top % 2 == 1;
        for (size_t i = 1; i <= top; ++i)
            plan.steps.push_back(raise ? beta(i) : alpha(i));
    }
    return plan;
}

size_t switch_count(const PlanningInstance &inst, const Plan &plan, VariableId v) {
    if (v.index >= inst.num_variables())
        throw StructuralError("unknown variable #" + to_string(v.index));
    Trajectory trajectory = simulate(inst, plan);
    size_t count = 0;
    for (size_t i = 1; i < trajectory.states.size(); ++i) {
        if (!trajectory.states[i - 1].get(v) && trajectory.states[i].get(v))
            ++count;
    }
    return count;
}

vector<VariableId> chain_variables(const PlanningInstance &inst) {
    vector<VariableId> vars;
    while (auto var = inst.find_variable(chain_variable_name(vars.size() + 1)))
        vars.push_back(*var);
    if (vars.empty())
        throw StructuralError("instance has no chain variable v1");
    return vars;
}

LambdaProfile lambda_profile(const PlanningInstance &inst, const Plan &plan) {
    vector<VariableId> vars = chain_variables(inst);
    Trajectory trajectory = simulate(inst, plan);
    LambdaProfile profile;
    profile.lambda.assign(vars.size(), 0);
    for (size_t step = 1; step < trajectory.states.size(); ++step) {
        for (size_t i = 0; i < vars.size(); ++i) {
            if (trajectory.states[step - 1].get(vars[i]) != trajectory.states[step].get(vars[i]))
                ++profile.lambda[i];
        }
    }
    return profile;
}
}
