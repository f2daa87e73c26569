#include "polyplan/cli.hpp"

#include "polyplan/causal_graph.hpp"
#include "polyplan/chain.hpp"
#include "polyplan/errors.hpp"
#include "polyplan/formats.hpp"
#include "polyplan/reduction.hpp"
#include "polyplan/search.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

using namespace std;

namespace polyplan::cli {
using std::to_string;
using polyplan::to_string;

namespace {
struct FileError : Error {
    int code;
    FileError(const string &what, int code) : Error(what), code(code) {}
};

string read_file(const string &path) {
    ifstream in(path, ios::binary);
    if (!in)
        throw FileError("cannot read '" + path + "'", no_input);
    ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const string &path, const string &content) {
    ofstream file(path, ios::binary);
    if (!file || !(file << content))
        throw FileError("cannot write '" + path + "'", cannot_create);
}

// Writes to path if given, else to out.
void emit(const string &path, const string &content, ostream &out) {
    if (path.empty())
        out << content;
    else
        write_file(path, content);
}

// Prefixes parse errors with the file they came from.
template<typename F>
auto parsing(const string &path, F &&parse) {
    try {
        return parse(read_file(path));
    } catch (const ParseError &e) {
        throw ParseError(0, path + ": " + e.what());
    }
}

SearchBudget make_budget(size_t max_states, size_t max_steps) {
    SearchBudget budget;
    budget.max_states = max_states;
    if (max_steps)
        budget.max_steps = max_steps;
    return budget;
}

struct Options {
    string cnf, instance, plan, assignment, map, output, dot, plan_output, ops;
    string totalize = "none";
    size_t k = 0;
    size_t max_states = SearchBudget{}.max_states;
    size_t max_steps = 0;
    size_t vars = 3, clauses = 3, min_width = 3, max_width = 3;
    uint64_t seed = 0;
};

int cmd_reduce(const Options &o, ostream &out) {
    CnfFormula formula = parsing(o.cnf, parse_dimacs);
    Reduction reduction = reduce_formula(formula, parse_totalize_mode(o.totalize));
    emit(o.output, render_instance(reduction.instance), out);
    string map_path = !o.map.empty() ? o.map : o.output.empty() ? "" : o.output + ".map";
    if (!map_path.empty())
        write_file(map_path, render_map(reduction.map, reduction.instance));
    return success;
}

int cmd_gadget(const Options &o, ostream &out) {
    ChainSpec spec{o.k};
    PlanningInstance inst = build_chain_instance(spec);
    emit(o.output, render_instance(inst), out);
    string plan_path = !o.plan_output.empty() ? o.plan_output
                       : o.output.empty() ? "" : o.output + ".plan";
    if (!plan_path.empty())
        write_file(plan_path, render_plan(optimal_chain_plan(spec), inst));
    return success;
}

int cmd_solve(const Options &o, ostream &out) {
    PlanningInstance inst = parsing(o.instance, parse_instance);
    SearchResult result = find_shortest_plan(inst, make_budget(o.max_states, o.max_steps));
    switch (result.outcome) {
    case SearchOutcome::plan_found: {
        string plan = render_plan(*result.plan, inst);
        out << "PLAN\n" << plan;
        if (!o.plan_output.empty())
            write_file(o.plan_output, plan);
        return success;
    }
    case SearchOutcome::no_plan:
        out << "NOPLAN\n";
        return negative;
    case SearchOutcome::budget_exceeded:
        out << "BUDGET\n";
        return budget_exceeded;
    }
    return negative;
}

int cmd_validate(const Options &o, ostream &out) {
    PlanningInstance inst = parsing(o.instance, parse_instance);
    Plan plan = parsing(o.plan, [&inst](const string &text) {return parse_plan(text, inst);});
    ValidationReport report = validate_plan(inst, plan);
    if (report.valid) {
        out << "VALID\n";
        return success;
    }
    if (report.reason == FailureReason::inapplicable)
        out << "INVALID step " << *report.failed_step << " "
            << inst.get_operator(plan.steps[*report.failed_step]).name << " inapplicable\n";
    else
        out << "INVALID goal unmet\n";
    return negative;
}

int cmd_analyze(const Options &o, ostream &out) {
    PlanningInstance inst = parsing(o.instance, parse_instance);
    CausalGraph graph = build_causal_graph(inst);
    GraphReport report = classify(graph);
    out << "variables: " << graph.num_vertices() << "\n"
        << "edges: " << graph.edges().size() << "\n"
        << "dag: " << (report.is_dag ? "yes" : "no") << "\n"
        << "polytree: " << (report.is_polytree ? "yes" : "no") << "\n"
        << "max indegree: " << report.max_indegree << "\n";
    if (report.undirected_cycle_witness) {
        out << "cycle:";
        for (VariableId v : *report.undirected_cycle_witness)
            out << " " << graph.names()[v.index];
        out << "\n";
    }
    for (size_t v = 0; v < graph.num_vertices(); ++v)
        out << "indegree " << graph.names()[v] << " " << report.indegree_of[v] << "\n";
    if (!o.dot.empty()) {
        ostringstream dot;
        write_dot(dot, graph);
        write_file(o.dot, dot.str());
    }
    return success;
}

int cmd_witness(const Options &o, ostream &out) {
    CnfFormula formula = parsing(o.cnf, parse_dimacs);
    Assignment sigma = parsing(o.assignment, [&formula](const string &text) {
        return parse_assignment(text, formula.num_vars());
    });
    Reduction reduction = reduce_formula(formula, parse_totalize_mode(o.totalize));
    Plan plan = witness_plan(formula, reduction.map, sigma);
    emit(o.output, render_plan(plan, reduction.instance), out);
    return success;
}

int cmd_extract(const Options &o, ostream &out) {
    CnfFormula formula = parsing(o.cnf, parse_dimacs);
    Reduction reduction = reduce_formula(formula, parsing(o.map, parse_map_mode));
    ReductionMap map = parsing(o.map, [&reduction](const string &text) {
        return parse_map(text, reduction.instance);
    });
    Plan plan = parsing(o.plan, [&reduction](const string &text) {
        return parse_plan(text, reduction.instance);
    });
    emit(o.output, render_assignment(extract_assignment(formula, map, plan)), out);
    return success;
}

int cmd_minswitch(const Options &o, ostream &out) {
    PlanningInstance inst = parsing(o.instance, parse_instance);
    set<OperatorIndex> charged;
    istringstream names(o.ops);
    string name;
    while (getline(names, name, ',')) {
        if (name.empty())
            continue;
        optional<OperatorIndex> op = inst.find_operator(name);
        if (!op)
            throw ArgumentError("unknown operator '" + name + "'");
        charged.insert(*op);
    }
    optional<size_t> cost = min_switch_cost(inst, charged, make_budget(o.max_states, 0));
    if (!cost) {
        out << "NOPLAN\n";
        return negative;
    }
    out << *cost << "\n";
    return success;
}

int cmd_sample(const Options &o, ostream &out) {
    SampleSpec spec{o.vars, o.clauses, o.seed, o.min_width, o.max_width};
    CnfFormula formula = sample_formula(spec);
    string comment = "sample vars=" + to_string(o.vars) + " clauses=" + to_string(o.clauses) +
                     " seed=" + to_string(o.seed);
    emit(o.output, render_dimacs(formula, comment), out);
    return success;
}
}

int run(const vector<string> &args, ostream &out, ostream &err) {
    CLI::App app{"Polytree planning toolkit: reductions, gadgets and exhaustive search"};
    app.require_subcommand(1);
    Options o;

    const vector<string> modes{"none", "paper", "swapped"};
    auto add_budget = [&o](CLI::App *sub) {
        sub->add_option("--max-states", o.max_states, "State budget")
            ->check(CLI::PositiveNumber);
    };

    auto *reduce = app.add_subcommand("reduce", "Compile a DIMACS CNF into a planning instance");
    reduce->add_option("cnf", o.cnf)->required();
    reduce->add_option("--totalize", o.totalize)->check(CLI::IsMember(modes));
    reduce->add_option("-o,--output", o.output, "Instance file (map goes to <output>.map)");
    reduce->add_option("--map", o.map, "Map sidecar path");

    auto *gadget = app.add_subcommand("gadget", "Emit the chain gadget and its optimal plan");
    gadget->add_option("k", o.k)->required()->check(CLI::PositiveNumber);
    gadget->add_option("-o,--output", o.output, "Instance file (plan goes to <output>.plan)");
    gadget->add_option("--plan", o.plan_output, "Plan file path");

    auto *solve = app.add_subcommand("solve", "Breadth-first search for a shortest plan");
    solve->add_option("instance", o.instance)->required();
    add_budget(solve);
    solve->add_option("--max-steps", o.max_steps, "Plan length bound")->check(CLI::PositiveNumber);
    solve->add_option("--plan", o.plan_output, "Also write the plan to this file");

    auto *validate = app.add_subcommand("validate", "Check a plan against an instance");
    validate->add_option("instance", o.instance)->required();
    validate->add_option("plan", o.plan)->required();

    auto *analyze = app.add_subcommand("analyze", "Classify the causal graph of an instance");
    analyze->add_option("instance", o.instance)->required();
    analyze->add_option("--dot", o.dot, "Write the causal graph in DOT format");

    auto *witness = app.add_subcommand("witness", "Plan for the reduced instance from an assignment");
    witness->add_option("cnf", o.cnf)->required();
    witness->add_option("assignment", o.assignment)->required();
    witness->add_option("--totalize", o.totalize)->check(CLI::IsMember(modes));
    witness->add_option("-o,--output", o.output);

    auto *extract = app.add_subcommand("extract", "Satisfying assignment from a valid plan");
    extract->add_option("cnf", o.cnf)->required();
    extract->add_option("map", o.map)->required();
    extract->add_option("plan", o.plan)->required();
    extract->add_option("-o,--output", o.output);

    auto *minswitch = app.add_subcommand("minswitch", "Minimum number of charged actions");
    minswitch->add_option("instance", o.instance)->required();
    minswitch->add_option("--ops", o.ops, "Comma-separated charged operator names")->required();
    add_budget(minswitch);

    auto *sample = app.add_subcommand("sample", "Random CNF in DIMACS format");
    sample->add_option("--vars", o.vars)->required()->check(CLI::PositiveNumber);
    sample->add_option("--clauses", o.clauses)->required();
    sample->add_option("--seed", o.seed)->required();
    sample->add_option("--min-width", o.min_width)->check(CLI::Range(1, 3));
    sample->add_option("--max-width", o.max_width)->check(CLI::Range(1, 3));
    sample->add_option("-o,--output", o.output);

    vector<const char *> argv;
    for (const string &arg : args)
        argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? success : usage_error;
    }

    try {
        if (*reduce)
            return cmd_reduce(o, out);
        if (*gadget)
            return cmd_gadget(o, out);
        if (*solve)
            return cmd_solve(o, out);
        if (*validate)
            return cmd_validate(o, out);
        if (*analyze)
            return cmd_analyze(o, out);
        if (*witness)
            return cmd_witness(o, out);
        if (*extract)
            return cmd_extract(o, out);
        if (*minswitch)
            return cmd_minswitch(o, out);
        if (*sample)
            return cmd_sample(o, out);
    } catch (const FileError &e) {
        err << "error: " << e.what() << "\n";
        return e.code;
    } catch (const BudgetError &e) {
        out << "BUDGET\n";
        err << "error: " << e.what() << " (" << e.states_expanded() << " states expanded)\n";
        return budget_exceeded;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return data_error;
    }
    return usage_error;
}
}
