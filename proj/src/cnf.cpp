#include "polyplan/cnf.hpp"

#include "polyplan/errors.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

using namespace std;

namespace polyplan {
CnfFormula::CnfFormula(size_t num_vars, vector<Clause> clauses) : n(num_vars) {
    clause_list.reserve(clauses.size());
    for (size_t j = 0; j < clauses.size(); ++j) {
        Clause deduped;
        for (const Literal &lit : clauses[j]) {
            if (lit.var < 1 || lit.var > n)
                throw ArgumentError(
                    "clause " + to_string(j + 1) + " uses variable " +
                    to_string(lit.var) + " outside 1.." + to_string(n));
            bool seen = false;
            for (const Literal &other : deduped) {
                if (other.var != lit.var)
                    continue;
                if (other.negated != lit.negated)
                    throw ArgumentError(
                        "clause " + to_string(j + 1) + " is tautological in variable " +
                        to_string(lit.var));
                seen = true;
            }
            if (!seen)
                deduped.push_back(lit);
        }
        if (deduped.empty())
            throw ArgumentError("clause " + to_string(j + 1) + " is empty");
        if (deduped.size() > 3)
            throw ArgumentError(
                "clause " + to_string(j + 1) + " has more than 3 distinct variables");
        clause_list.push_back(move(deduped));
    }
}

bool satisfies(const Literal &lit, bool value) {
    return value != lit.negated;
}

bool satisfies(const Clause &clause, const Assignment &sigma) {
    return any_of(clause.begin(), clause.end(), [&sigma](const Literal &lit) {
        return satisfies(lit, sigma.value(lit.var));
    });
}

bool satisfies(const CnfFormula &formula, const Assignment &sigma) {
    if (sigma.size() != formula.num_vars())
        return false;
    return all_of(formula.clauses().begin(), formula.clauses().end(),
                  [&sigma](const Clause &clause) {return satisfies(clause, sigma);});
}

optional<Assignment> sat_brute_force(const CnfFormula &formula) {
    const size_t n = formula.num_vars();
    if (n > brute_force_max_vars)
        throw BudgetError(
            "brute-force SAT is limited to " + to_string(brute_force_max_vars) +
            " variables, formula has " + to_string(n), 0);
    Assignment sigma(vector<bool>(n, false));
    for (uint64_t bits = 0; bits < (uint64_t(1) << n); ++bits) {
        for (size_t x = 1; x <= n; ++x)
            sigma.set(x, (bits >> (n - x)) & 1);
        if (satisfies(formula, sigma))
            return sigma;
    }
    return nullopt;
}

namespace {
// Uniform draw from [0, bound) using only the raw engine output, which the
// standard pins down exactly (unlike the distribution classes).
uint64_t draw_below(mt19937_64 &rng, uint64_t bound) {
    const uint64_t limit = numeric_limits<uint64_t>::max() -
                           numeric_limits<uint64_t>::max() % bound;
    uint64_t value;
    do {
        value = rng();
    } while (value >= limit);
    return value % bound;
}
}

CnfFormula sample_formula(const SampleSpec &spec) {
    if (spec.num_vars < 1)
        throw ArgumentError("sample needs at least one variable");
    if (spec.min_width < 1 || spec.min_width > spec.max_width || spec.max_width > 3)
        throw ArgumentError("clause widths must satisfy 1 <= min <= max <= 3");
    const size_t max_width = min(spec.max_width, spec.num_vars);
    const size_t min_width = min(spec.min_width, max_width);

    mt19937_64 rng(spec.seed);
    vector<Clause> clauses;
    for (size_t j = 0; j < spec.num_clauses; ++j) {
        size_t width = min_width + draw_below(rng, max_width - min_width + 1);
        set<uint32_t> used;
        Clause clause;
        while (clause.size() < width) {
            uint32_t var = static_cast<uint32_t>(1 + draw_below(rng, spec.num_vars));
            if (!used.insert(var).second)
                continue;
            clause.push_back(Literal{var, draw_below(rng, 2) == 1});
        }
        clauses.push_back(move(clause));
    }
    return CnfFormula(spec.num_vars, move(clauses));
}
}
