#include "polyplan/formats.hpp"

#include "polyplan/errors.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <vector>

using namespace std;

namespace polyplan {
using std::to_string;

namespace {
struct Line {
    size_t number;
    vector<string> tokens;
};

vector<string> split(string_view text, char separator) {
    vector<string> parts;
    size_t start = 0;
    while (true) {
        size_t end = text.find(separator, start);
        parts.emplace_back(text.substr(start, end - start));
        if (end == string_view::npos)
            break;
        start = end + 1;
    }
    return parts;
}

vector<string> tokenize(string_view line) {
    vector<string> tokens;
    istringstream in{string(line)};
    string token;
    while (in >> token)
        tokens.push_back(token);
    return tokens;
}

// Non-empty lines with '#' comments removed.
vector<Line> read_lines(string_view text) {
    vector<Line> lines;
    vector<string> raw = split(text, '\n');
    for (size_t i = 0; i < raw.size(); ++i) {
        string_view line = raw[i];
        line = line.substr(0, line.find('#'));
        vector<string> tokens = tokenize(line);
        if (!tokens.empty())
            lines.push_back(Line{i + 1, move(tokens)});
    }
    return lines;
}

template<typename Int>
optional<Int> to_int(string_view text) {
    Int value{};
    auto [ptr, ec] = from_chars(text.data(), text.data() + text.size(), value);
    if (ec != errc() || ptr != text.data() + text.size())
        return nullopt;
    return value;
}

bool parse_bit(string_view text, size_t line) {
    if (text == "0")
        return false;
    if (text == "1")
        return true;
    throw ParseError(line, "expected 0 or 1, got '" + string(text) + "'");
}

pair<string, bool> parse_binding(string_view text, size_t line) {
    size_t eq = text.find('=');
    if (eq == string_view::npos || eq == 0)
        throw ParseError(line, "expected <name>=<bit>, got '" + string(text) + "'");
    return {string(text.substr(0, eq)), parse_bit(text.substr(eq + 1), line)};
}

void expect_arity(const Line &line, size_t count) {
    if (line.tokens.size() != count)
        throw ParseError(
            line.number, "'" + line.tokens[0] + "' expects " + to_string(count - 1) +
            " argument(s)");
}
}

CnfFormula parse_dimacs(string_view text) {
    optional<size_t> num_vars, num_clauses;
    size_t header_line = 0;
    vector<Clause> clauses;
    Clause pending;
    size_t last_line = 0;

    vector<string> raw = split(text, '\n');
    for (size_t i = 0; i < raw.size(); ++i) {
        const size_t line_no = i + 1;
        vector<string> tokens = tokenize(raw[i]);
        if (tokens.empty() || tokens[0][0] == 'c')
            continue;
        if (tokens[0] == "%")
            break;
        last_line = line_no;
        if (tokens[0] == "p") {
            if (num_vars)
                throw ParseError(line_no, "duplicate problem line");
            if (tokens.size() != 4 || tokens[1] != "cnf")
                throw ParseError(line_no, "expected 'p cnf <vars> <clauses>'");
            num_vars = to_int<size_t>(tokens[2]);
            num_clauses = to_int<size_t>(tokens[3]);
            if (!num_vars || !num_clauses)
                throw ParseError(line_no, "malformed problem line");
            header_line = line_no;
            continue;
        }
        if (!num_vars)
            throw ParseError(line_no, "clause before the 'p cnf' problem line");
        for (const string &token : tokens) {
            optional<long long> value = to_int<long long>(token);
            if (!value)
                throw ParseError(line_no, "expected an integer literal, got '" + token + "'");
            if (*value == 0) {
                if (pending.empty())
                    throw ParseError(line_no, "empty clause");
                if (pending.size() > 3)
                    throw ParseError(line_no, "clause has more than 3 distinct variables");
                clauses.push_back(move(pending));
                pending.clear();
                continue;
            }
            unsigned long long var = *value < 0 ? -*value : *value;
            if (var > *num_vars)
                throw ParseError(
                    line_no, "variable " + to_string(var) + " exceeds declared " +
                    to_string(*num_vars));
            Literal lit{static_cast<uint32_t>(var), *value < 0};
            bool duplicate = false;
            for (const Literal &other : pending) {
                if (other.var != lit.var)
                    continue;
                if (other.negated != lit.negated)
                    throw ParseError(line_no, "tautological clause on variable " + to_string(var));
                duplicate = true;
            }
            if (!duplicate)
                pending.push_back(lit);
        }
    }
    if (!num_vars)
        throw ParseError(0, "missing 'p cnf' problem line");
    if (!pending.empty())
        throw ParseError(last_line, "last clause is not terminated by 0");
    if (clauses.size() != *num_clauses)
        throw ParseError(
            header_line, "header declares " + to_string(*num_clauses) + " clauses, found " +
            to_string(clauses.size()));
    return CnfFormula(*num_vars, move(clauses));
}

string render_dimacs(const CnfFormula &formula, string_view comment) {
    ostringstream out;
    if (!comment.empty())
        out << "c " << comment << "\n";
    out << "p cnf " << formula.num_vars() << " " << formula.num_clauses() << "\n";
    for (const Clause &clause : formula.clauses()) {
        for (const Literal &lit : clause)
            out << (lit.negated ? "-" : "") << lit.var << " ";
        out << "0\n";
    }
    return out.str();
}

PlanningInstance parse_instance(string_view text) {
    vector<string> names;
    map<string, VariableId> ids;
    vector<Operator> ops;
    vector<optional<bool>> init;
    PartialState goal;

    auto lookup = [&ids](const string &name, size_t line) {
        auto it = ids.find(name);
        if (it == ids.end())
            throw ParseError(line, "unknown variable '" + name + "'");
        return it->second;
    };

    for (const Line &line : read_lines(text)) {
        const string &keyword = line.tokens[0];
        if (keyword == "var") {
            expect_arity(line, 2);
            const string &name = line.tokens[1];
            if (name.find_first_of("=,") != string::npos)
                throw ParseError(line.number, "variable names may not contain '=' or ','");
            VariableId id{static_cast<uint32_t>(names.size())};
            if (!ids.emplace(name, id).second)
                throw ParseError(line.number, "duplicate variable '" + name + "'");
            names.push_back(name);
            init.emplace_back();
        } else if (keyword == "init" || keyword == "goal") {
            expect_arity(line, 2);
            auto [name, value] = parse_binding(line.tokens[1], line.number);
            VariableId var = lookup(name, line.number);
            if (keyword == "init") {
                if (init[var.index])
                    throw ParseError(line.number, "duplicate init for '" + name + "'");
                init[var.index] = value;
            } else {
                if (goal.defines(var))
                    throw ParseError(line.number, "duplicate goal for '" + name + "'");
                goal.set(var, value);
            }
        } else if (keyword == "op") {
            if ((line.tokens.size() != 4 && line.tokens.size() != 6) || line.tokens[2] != "post" ||
                (line.tokens.size() == 6 && line.tokens[4] != "prv"))
                throw ParseError(
                    line.number, "expected 'op <name> post <var>=<bit> [prv <var>=<bit>,...]'");
            Operator op;
            op.name = line.tokens[1];
            auto [post_name, post_value] = parse_binding(line.tokens[3], line.number);
            op.post_var = lookup(post_name, line.number);
            op.post_val = post_value;
            if (line.tokens.size() == 6) {
                for (const string &binding : split(line.tokens[5], ',')) {
                    auto [name, value] = parse_binding(binding, line.number);
                    VariableId var = lookup(name, line.number);
                    if (op.prv.defines(var) || var == op.post_var)
                        throw ParseError(
                            line.number, "variable '" + name + "' repeated in operator '" +
                            op.name + "'");
                    op.prv.set(var, value);
                }
            }
            ops.push_back(move(op));
        } else {
            throw ParseError(line.number, "unknown keyword '" + keyword + "'");
        }
    }

    TotalState initial(names.size());
    for (size_t i = 0; i < names.size(); ++i) {
        if (!init[i])
            throw ParseError(0, "no init value for variable '" + names[i] + "'");
        initial.set(VariableId{static_cast<uint32_t>(i)}, *init[i]);
    }
    try {
        return PlanningInstance(move(names), move(ops), move(initial), move(goal));
    } catch (const StructuralError &e) {
        throw ParseError(0, e.what());
    }
}

string render_instance(const PlanningInstance &inst) {
    ostringstream out;
    auto binding = [&inst](VariableId var, bool value) {
        return inst.variable_name(var) + "=" + (value ? "1" : "0");
    };
    for (const string &name : inst.variables())
        out << "var " << name << "\n";
    for (uint32_t i = 0; i < inst.num_variables(); ++i) {
        VariableId var{i};
        out << "init " << binding(var, inst.init().get(var)) << "\n";
    }
    for (const auto &[var, value] : inst.goal())
        out << "goal " << binding(var, value) << "\n";
    for (const Operator &op : inst.operators()) {
        out << "op " << op.name << " post " << binding(op.post_var, op.post_val);
        if (!op.prv.empty()) {
            out << " prv ";
            bool first = true;
            for (const auto &[var, value] : op.prv) {
                out << (first ? "" : ",") << binding(var, value);
                first = false;
            }
        }
        out << "\n";
    }
    return out.str();
}

Plan parse_plan(string_view text, const PlanningInstance &inst) {
    Plan plan;
    for (const Line &line : read_lines(text)) {
        if (line.tokens.size() != 1)
            throw ParseError(line.number, "expected one operator name per line");
        optional<OperatorIndex> op = inst.find_operator(line.tokens[0]);
        if (!op)
            throw ParseError(line.number, "unknown operator '" + line.tokens[0] + "'");
        plan.steps.push_back(*op);
    }
    return plan;
}

string render_plan(const Plan &plan, const PlanningInstance &inst) {
    string out;
    for (OperatorIndex step : plan.steps)
        out += inst.get_operator(step).name + "\n";
    return out;
}

Assignment parse_assignment(string_view text, size_t num_vars) {
    vector<optional<bool>> values(num_vars);
    for (const Line &line : read_lines(text)) {
        if (line.tokens.size() != 1)
            throw ParseError(line.number, "expected x<i>=<0|1>");
        auto [name, value] = parse_binding(line.tokens[0], line.number);
        optional<size_t> x = name.size() > 1 && name[0] == 'x'
                                 ? to_int<size_t>(string_view(name).substr(1))
                                 : nullopt;
        if (!x || *x < 1 || *x > num_vars)
            throw ParseError(line.number, "unknown formula variable '" + name + "'");
        if (values[*x - 1])
            throw ParseError(line.number, "duplicate value for '" + name + "'");
        values[*x - 1] = value;
    }
    vector<bool> bits;
    for (size_t x = 1; x <= num_vars; ++x) {
        if (!values[x - 1])
            throw ParseError(0, "no value for x" + to_string(x));
        bits.push_back(*values[x - 1]);
    }
    return Assignment(move(bits));
}

string render_assignment(const Assignment &sigma) {
    string out;
    for (uint32_t x = 1; x <= sigma.size(); ++x)
        out += "x" + to_string(x) + "=" + (sigma.value(x) ? "1" : "0") + "\n";
    return out;
}

string render_map(const ReductionMap &map, const PlanningInstance &inst) {
    ostringstream out;
    auto var = [&inst](VariableId v) {return inst.variable_name(v);};
    auto op = [&inst](OperatorIndex o) {return inst.get_operator(o).name;};
    out << "mode " << to_string(map.mode) << "\n";
    for (size_t x = 1; x <= map.variables.size(); ++x) {
        const LiteralGadget &g = map.variables[x - 1];
        out << "literal " << x << " " << var(g.positive) << " " << var(g.negative) << " "
            << op(g.set_positive) << " " << op(g.set_negative) << "\n";
    }
    for (size_t j = 1; j <= map.clauses.size(); ++j) {
        const ClauseGadget &g = map.clauses[j - 1];
        out << "clause " << j << " " << var(g.token) << " " << var(g.latch) << " "
            << op(g.latch_op) << " " << op(g.raise_op) << " " << op(g.lower_op);
        for (OperatorIndex fire : g.fire_ops)
            out << " " << op(fire);
        out << "\n";
    }
    out << "chain";
    for (VariableId v : map.chain)
        out << " " << var(v);
    out << "\nreset " << op(map.reset_op) << "\nalpha";
    for (OperatorIndex o : map.alpha_ops)
        out << " " << op(o);
    out << "\nbeta";
    for (OperatorIndex o : map.beta_ops)
        out << " " << op(o);
    out << "\n";
    for (size_t o = 0; o < map.origins.size(); ++o) {
        const OperatorOrigin &origin = map.origins[o];
        out << "op " << op(o) << " group=" << origin.group;
        if (origin.variable)
            out << " var=" << *origin.variable;
        if (origin.clause)
            out << " clause=" << *origin.clause + 1;
        if (origin.assignment) {
            out << " assign=";
            bool first = true;
            for (const auto &[x, value] : *origin.assignment) {
                out << (first ? "" : ",") << x << ":" << (value ? 1 : 0);
                first = false;
            }
        }
        if (origin.chain_index)
            out << " index=" << *origin.chain_index;
        out << "\n";
    }
    return out.str();
}

TotalizeMode parse_map_mode(string_view text) {
    for (const Line &line : read_lines(text)) {
        if (line.tokens[0] != "mode")
            continue;
        expect_arity(line, 2);
        try {
            return parse_totalize_mode(line.tokens[1]);
        } catch (const ArgumentError &e) {
            throw ParseError(line.number, e.what());
        }
    }
    throw ParseError(0, "map has no 'mode' line");
}

ReductionMap parse_map(string_view text, const PlanningInstance &inst) {
    ReductionMap map;
    map.mode = parse_map_mode(text);
    map.origins.resize(inst.operators().size());
    vector<bool> has_origin(inst.operators().size(), false);

    for (const Line &line : read_lines(text)) {
        const size_t n = line.number;
        auto var = [&](size_t i) {
            optional<VariableId> v = inst.find_variable(line.tokens.at(i));
            if (!v)
                throw ParseError(n, "unknown variable '" + line.tokens[i] + "'");
            return *v;
        };
        auto op = [&](size_t i) {
            optional<OperatorIndex> o = inst.find_operator(line.tokens.at(i));
            if (!o)
                throw ParseError(n, "unknown operator '" + line.tokens[i] + "'");
            return *o;
        };
        auto ordinal = [&](size_t i, size_t expected) {
            optional<size_t> value = to_int<size_t>(line.tokens.at(i));
            if (!value || *value != expected)
                throw ParseError(n, "expected entry number " + to_string(expected));
        };

        const string &keyword = line.tokens[0];
        if (keyword == "mode") {
            continue;
        } else if (keyword == "literal") {
            expect_arity(line, 6);
            ordinal(1, map.variables.size() + 1);
            map.variables.push_back(LiteralGadget{var(2), var(3), op(4), op(5)});
        } else if (keyword == "clause") {
            if (line.tokens.size() < 7)
                throw ParseError(n, "clause entry is too short");
            ordinal(1, map.clauses.size() + 1);
            ClauseGadget g{var(2), var(3), op(4), op(5), op(6), {}};
            for (size_t i = 7; i < line.tokens.size(); ++i)
                g.fire_ops.push_back(op(i));
            map.clauses.push_back(move(g));
        } else if (keyword == "chain") {
            for (size_t i = 1; i < line.tokens.size(); ++i)
                map.chain.push_back(var(i));
        } else if (keyword == "reset") {
            expect_arity(line, 2);
            map.reset_op = op(1);
        } else if (keyword == "alpha" || keyword == "beta") {
            auto &target = keyword == "alpha" ? map.alpha_ops : map.beta_ops;
            for (size_t i = 1; i < line.tokens.size(); ++i)
                target.push_back(op(i));
        } else if (keyword == "op") {
            if (line.tokens.size() < 3)
                throw ParseError(n, "op entry is too short");
            OperatorIndex o = op(1);
            OperatorOrigin origin;
            for (size_t i = 2; i < line.tokens.size(); ++i) {
                const string &token = line.tokens[i];
                size_t eq = token.find('=');
                if (eq == string::npos)
                    throw ParseError(n, "expected key=value, got '" + token + "'");
                string key = token.substr(0, eq);
                string value = token.substr(eq + 1);
                auto number = [&]() {
                    optional<size_t> v = to_int<size_t>(value);
                    if (!v)
                        throw ParseError(n, "expected a number for '" + key + "'");
                    return *v;
                };
                if (key == "group") {
                    origin.group = static_cast<int>(number());
                } else if (key == "var") {
                    origin.variable = static_cast<uint32_t>(number());
                } else if (key == "clause") {
                    size_t j = number();
                    if (j < 1)
                        throw ParseError(n, "clause numbers start at 1");
                    origin.clause = j - 1;
                } else if (key == "index") {
                    origin.chain_index = number();
                } else if (key == "assign") {
                    PartialAssignment pa;
                    for (const string &part : split(value, ',')) {
                        size_t colon = part.find(':');
                        optional<uint32_t> x = colon == string::npos
                                                   ? nullopt
                                                   : to_int<uint32_t>(string_view(part).substr(0, colon));
                        if (!x)
                            throw ParseError(n, "expected <var>:<bit>, got '" + part + "'");
                        pa.emplace_back(*x, parse_bit(string_view(part).substr(colon + 1), n));
                    }
                    origin.assignment = move(pa);
                } else {
                    throw ParseError(n, "unknown key '" + key + "'");
                }
            }
            if (has_origin[o])
                throw ParseError(n, "duplicate origin for '" + line.tokens[1] + "'");
            has_origin[o] = true;
            map.origins[o] = move(origin);
        } else {
            throw ParseError(n, "unknown keyword '" + keyword + "'");
        }
    }
    for (size_t o = 0; o < has_origin.size(); ++o) {
        if (!has_origin[o])
            throw ParseError(0, "no origin for operator '" + inst.get_operator(o).name + "'");
    }
    return map;
}
}
