#ifndef POLYPLAN_REDUCTION_HPP
#define POLYPLAN_REDUCTION_HPP

#include "cnf.hpp"
#include "sas.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

/*
  Compiles a CNF formula F with n variables and k clauses into a planning
  instance P_F with a polytree causal graph such that P_F has a valid plan
  iff F is satisfiable.

  State variables (all initially 0):
    vx<i>, vnx<i>   literal latches for formula variable i; once set to 1
                    they stay 1
    vc<j>, vcp<j>   clause token and its one-way latch; vc<j> can go
                    0 -> 1 -> 0 only once
    v1..v(2k-1)     the chain gadget, goal v_i = i mod 2

  Operator groups:
    1  set_vx<i>, set_vnx<i>
    2  latch_c<j> = <vcp<j> <- 1>, raise_c<j> = <{vcp<j>=0}, vc<j> <- 1>,
       lower_c<j> = <{vcp<j>=1}, vc<j> <- 0>
    3  fire_c<j>_... : one per partial assignment satisfying clause j,
       post v1 <- 1, prevails vc<j>=1 plus agreement of every clause variable
    4  reset_v1 = <{vc<j>=0 for all j}, v1 <- 0>
    5  alpha_i, beta_i of the chain for 2 <= i <= 2k-1
*/
namespace polyplan {

enum class TotalizeMode {none, paper, swapped};

const char *to_string(TotalizeMode mode);
// Throws ArgumentError on anything but "none", "paper" or "swapped".
TotalizeMode parse_totalize_mode(const std::string &text);

// Values for the distinct variables of a clause, sorted by variable.
using PartialAssignment = std::vector<std::pair<std::uint32_t, bool>>;

struct OperatorOrigin {
    int group = 0;
    std::optional<std::uint32_t> variable; // group 1
    std::optional<std::size_t> clause; // groups 2 and 3, 0-based
    std::optional<PartialAssignment> assignment; // group 3
    std::optional<std::size_t> chain_index; // group 5, 1-based i

    bool operator==(const OperatorOrigin &) const = default;
};

struct ClauseGadget {
    VariableId token; // vc
    VariableId latch; // vcp
    OperatorIndex latch_op = 0;
    OperatorIndex raise_op = 0;
    OperatorIndex lower_op = 0;
    // Group-3 operators in lexicographic order of their partial assignment.
    std::vector<OperatorIndex> fire_ops;

    bool operator==(const ClauseGadget &) const = default;
};

struct LiteralGadget {
    VariableId positive; // vx
    VariableId negative; // vnx
    OperatorIndex set_positive = 0;
    OperatorIndex set_negative = 0;

    bool operator==(const LiteralGadget &) const = default;
};

struct ReductionMap {
    TotalizeMode mode = TotalizeMode::none;
    std::vector<LiteralGadget> variables; // index x - 1
    std::vector<ClauseGadget> clauses; // index j
    std::vector<VariableId> chain; // chain[i - 1] is v_i
    OperatorIndex reset_op = 0;
    // Chain operators for i >= 2; index i - 2.
    std::vector<OperatorIndex> alpha_ops;
    std::vector<OperatorIndex> beta_ops;
    std::vector<OperatorOrigin> origins; // one per operator

    bool operator==(const ReductionMap &) const = default;
};

struct Reduction {
    PlanningInstance instance;
    ReductionMap map;
};

// Distinct variables of the clause in increasing order.
std::vector<std::uint32_t> clause_variables(const Clause &clause);
// Partial assignments over clause_variables(clause) that satisfy the
// clause, lexicographic with the smallest variable most significant.
std::vector<PartialAssignment> satisfying_partial_assignments(const Clause &clause);

Reduction reduce_formula(const CnfFormula &formula, TotalizeMode mode = TotalizeMode::none);

// Prevail conditions of the group-3 operator for clause j and pa: the
// clause token at 1 plus vx = pa(x), vnx = 1 - pa(x) for each clause
// variable x. Throws ArgumentError unless pa covers exactly the clause's
// variables and satisfies the clause.
PartialState group3_prevail(const ReductionMap &map, std::size_t clause_index,
                            const Clause &clause, const PartialAssignment &pa);

/*
  Plan for P_F built from a satisfying assignment: commit the literal
  latches to sigma, then fire the clauses in formula order, interleaving
  the chain gadget's telescoping plan between consecutive v1 switches.
  Under swapped totalization the last clause is latched and lowered; under
  either totalization the unused literal latches are set at the end. The
  result is valid for modes none and swapped; under paper it is valid
  only when k = 1. Throws ArgumentError if sigma does not satisfy F.
*/
Plan witness_plan(const CnfFormula &formula, const ReductionMap &map,
                  const Assignment &sigma);

// sigma(x) = 1 iff {vx = 1, vnx = 0} holds at some point of the plan's
// execution. Throws ArgumentError if the plan is not valid for P_F or the
// map was not produced from formula.
Assignment extract_assignment(const CnfFormula &formula, const ReductionMap &map,
                              const Plan &plan);
}

#endif
