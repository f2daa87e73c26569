#ifndef POLYPLAN_SAS_HPP
#define POLYPLAN_SAS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

/*
  Planning instances over binary state variables with unary operators.

  An operator is stored as its prevail conditions plus a single
  post-condition. The pre-condition is never stored: with binary domains
  and unary operators it is always the negation of the post-condition
  (see implicit_pre).
*/
namespace polyplan {

struct VariableId {
    std::uint32_t index = 0;

    auto operator<=>(const VariableId &) const = default;
};

using OperatorIndex = std::size_t;

// Sparse assignment of bits to a subset of the variables.
class PartialState {
    std::map<VariableId, bool> bindings;

public:
    using const_iterator = std::map<VariableId, bool>::const_iterator;

    PartialState() = default;
    PartialState(std::initializer_list<std::pair<const VariableId, bool>> init)
        : bindings(init) {}

    // Binds var to value, replacing any previous binding of var.
    void set(VariableId var, bool value) {bindings[var] = value;}
    std::optional<bool> get(VariableId var) const;
    bool defines(VariableId var) const {return bindings.count(var) != 0;}

    std::size_t size() const {return bindings.size();}
    bool empty() const {return bindings.empty();}
    const_iterator begin() const {return bindings.begin();}
    const_iterator end() const {return bindings.end();}

    bool operator==(const PartialState &) const = default;
};

// Fixed-width bit vector holding one bit per variable of an instance.
class TotalState {
    std::vector<std::uint64_t> words;
    std::size_t width = 0;

public:
    TotalState() = default;
    // All-zero state over num_vars variables.
    explicit TotalState(std::size_t num_vars);

    std::size_t size() const {return width;}
    bool get(VariableId var) const;
    void set(VariableId var, bool value);
    std::span<const std::uint64_t> data() const {return words;}

    bool operator==(const TotalState &) const = default;
};

struct Operator {
    std::string name;
    PartialState prv;
    VariableId post_var;
    bool post_val = true;

    bool operator==(const Operator &) const = default;
};

struct Plan {
    std::vector<OperatorIndex> steps;

    bool operator==(const Plan &) const = default;
};

class PlanningInstance {
    std::vector<std::string> variable_names;
    std::vector<Operator> ops;
    TotalState initial;
    PartialState goal_state;
    std::unordered_map<std::string, VariableId> variable_by_name;
    std::unordered_map<std::string, OperatorIndex> operator_by_name;

public:
    /*
      Throws StructuralError unless: variable names are unique, non-empty
      and free of whitespace; operator names are unique and non-empty;
      init covers exactly the variables; every variable referenced by an
      operator or the goal exists; no operator mentions its post variable
      among its prevail conditions.
    */
    PlanningInstance(
        std::vector<std::string> variable_names, std::vector<Operator> operators,
        TotalState init, PartialState goal);

    std::size_t num_variables() const {return variable_names.size();}
    const std::vector<std::string> &variables() const {return variable_names;}
    const std::vector<Operator> &operators() const {return ops;}
    const Operator &get_operator(OperatorIndex index) const;
    const TotalState &init() const {return initial;}
    const PartialState &goal() const {return goal_state;}

    const std::string &variable_name(VariableId var) const;
    std::optional<VariableId> find_variable(std::string_view name) const;
    // Like find_variable but throws StructuralError when absent.
    VariableId variable(std::string_view name) const;
    std::optional<OperatorIndex> find_operator(std::string_view name) const;

    bool operator==(const PlanningInstance &other) const;
};

enum class FailureReason {inapplicable, goal_unmet};

struct ValidationReport {
    bool valid = false;
    std::optional<std::size_t> failed_step;
    std::optional<FailureReason> reason;
    TotalState final_state;
};

// States visited while executing a plan, stopping at the first
// inapplicable step.
struct Trajectory {
    // states[0] is the initial state; states[i + 1] follows step i.
    std::vector<TotalState> states;
    std::optional<std::size_t> halted_at;
};

// S ⊕ S2: bindings of s2 take preference over those of s.
PartialState merge(const PartialState &s, const PartialState &s2);
// s ⊆ t
bool subsumes(const PartialState &s, const PartialState &t);
// s ⊆ t for a total state t. Throws StructuralError if s mentions a
// variable outside t.
bool subsumes(const PartialState &s, const TotalState &t);

PartialState implicit_pre(const Operator &op);
bool applicable(const Operator &op, const TotalState &state);
// Throws ApplicationError when op is not applicable to state.
TotalState apply(const Operator &op, const TotalState &state);

// Throws StructuralError if a step does not resolve in inst.
void check_plan_references(const PlanningInstance &inst, const Plan &plan);
Trajectory simulate(const PlanningInstance &inst, const Plan &plan);
ValidationReport validate_plan(const PlanningInstance &inst, const Plan &plan);

// True iff no two operators with the same post variable and opposite
// post values have equal prevail conditions.
bool cpnet_translatable(const PlanningInstance &inst);
}

#endif
