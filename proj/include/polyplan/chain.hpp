#ifndef POLYPLAN_CHAIN_HPP
#define POLYPLAN_CHAIN_HPP

#include "sas.hpp"

#include <cstddef>
#include <string>
#include <vector>

/*
  The chain gadget: variables v1..v(2k-1), all initially 0, with goal
  v_i = i mod 2. Operators alpha_i / beta_i set v_i to 0 / 1, and for i > 1
  require v(i-1) to already hold the value being written. Any valid plan
  must switch v1 from 0 to 1 at least k times.
*/
namespace polyplan {

struct ChainSpec {
    std::size_t k = 1;
};

struct LambdaProfile {
    // lambda[i - 1] is the number of applied actions that changed v_i.
    std::vector<std::size_t> lambda;

    bool operator==(const LambdaProfile &) const = default;
};

// Name of the i-th chain variable (1-based), shared with the reduction.
std::string chain_variable_name(std::size_t i);

// Operators are ordered alpha_1..alpha_(2k-1), beta_1..beta_(2k-1).
// Throws ArgumentError if k < 1.
PlanningInstance build_chain_instance(ChainSpec spec);

// B_(2k-1), A_(2k-2), B_(2k-3), ..., A_2, B_1 with A_i = alpha_1..alpha_i
// and B_i = beta_1..beta_i, as indices into build_chain_instance(spec).
Plan optimal_chain_plan(ChainSpec spec);

// Number of 0 -> 1 transitions of v along the simulated trajectory. Steps
// from the first inapplicable one onwards are ignored.
std::size_t switch_count(const PlanningInstance &inst, const Plan &plan, VariableId v);

// The variables named v1, v2, ... in inst, stopping at the first gap.
// Throws StructuralError if inst has no variable named v1.
std::vector<VariableId> chain_variables(const PlanningInstance &inst);

// Per-chain-variable change counts along the simulated trajectory, with the
// same truncation rule as switch_count.
LambdaProfile lambda_profile(const PlanningInstance &inst, const Plan &plan);
}

#endif
