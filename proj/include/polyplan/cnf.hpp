#ifndef POLYPLAN_CNF_HPP
#define POLYPLAN_CNF_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace polyplan {

struct Literal {
    std::uint32_t var = 1; // 1-based formula variable
    bool negated = false;

    bool operator==(const Literal &) const = default;
};

using Clause = std::vector<Literal>;

/*
  A CNF formula whose clauses mention between one and three distinct
  variables. Duplicate literals are dropped on construction; tautological
  clauses, empty clauses, clauses over more than three variables and
  out-of-range variables raise ArgumentError.
*/
class CnfFormula {
    std::size_t n = 0;
    std::vector<Clause> clause_list;

public:
    CnfFormula(std::size_t num_vars, std::vector<Clause> clauses);

    std::size_t num_vars() const {return n;}
    std::size_t num_clauses() const {return clause_list.size();}
    const std::vector<Clause> &clauses() const {return clause_list;}

    bool operator==(const CnfFormula &) const = default;
};

// Truth values for formula variables 1..n.
class Assignment {
    std::vector<bool> values;

public:
    Assignment() = default;
    explicit Assignment(std::vector<bool> values) : values(std::move(values)) {}

    std::size_t size() const {return values.size();}
    // x is 1-based.
    bool value(std::uint32_t x) const {return values.at(x - 1);}
    void set(std::uint32_t x, bool v) {values.at(x - 1) = v;}

    bool operator==(const Assignment &) const = default;
};

bool satisfies(const Literal &lit, bool value);
bool satisfies(const Clause &clause, const Assignment &sigma);
// False when sigma does not cover every formula variable.
bool satisfies(const CnfFormula &formula, const Assignment &sigma);

inline constexpr std::size_t brute_force_max_vars = 24;

// First satisfying assignment in lexicographic order, x1 being the most
// significant variable. Throws BudgetError when n exceeds
// brute_force_max_vars.
std::optional<Assignment> sat_brute_force(const CnfFormula &formula);

struct SampleSpec {
    std::size_t num_vars = 3;
    std::size_t num_clauses = 3;
    std::uint64_t seed = 0;
    // Clause widths are drawn uniformly from [min_width, max_width],
    // clamped to num_vars.
    std::size_t min_width = 3;
    std::size_t max_width = 3;
};

// Random formula; the output depends only on spec, on every platform.
CnfFormula sample_formula(const SampleSpec &spec);
}

#endif
