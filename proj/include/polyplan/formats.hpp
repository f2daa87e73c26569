#ifndef POLYPLAN_FORMATS_HPP
#define POLYPLAN_FORMATS_HPP

#include "cnf.hpp"
#include "reduction.hpp"
#include "sas.hpp"

#include <string>
#include <string_view>

/*
  Text formats. All are line based; '#' starts a comment that runs to the
  end of the line (DIMACS uses 'c' lines instead). Parsers throw ParseError
  carrying the 1-based line number of the offending line.

  Instance file:
    var <name>                                  one per variable, in order
    init <name>=<0|1>                           every variable exactly once
    goal <name>=<0|1>                           any subset
    op <name> post <var>=<bit> [prv <var>=<bit>[,<var>=<bit>...]]
  Plan file: one operator name per line.
  Assignment file: x<i>=<0|1>, one line per formula variable.
*/
namespace polyplan {

CnfFormula parse_dimacs(std::string_view text);
std::string render_dimacs(const CnfFormula &formula, std::string_view comment = {});

PlanningInstance parse_instance(std::string_view text);
std::string render_instance(const PlanningInstance &inst);

Plan parse_plan(std::string_view text, const PlanningInstance &inst);
std::string render_plan(const Plan &plan, const PlanningInstance &inst);

Assignment parse_assignment(std::string_view text, std::size_t num_vars);
std::string render_assignment(const Assignment &sigma);

/*
  Reduction map sidecar:
    mode <none|paper|swapped>
    literal <x> <vx> <vnx> <set_vx op> <set_vnx op>
    clause <j> <vc> <vcp> <latch op> <raise op> <lower op> <fire op>...
    chain <v1> ... <v(2k-1)>
    reset <op>
    alpha <op>...
    beta <op>...
    op <name> group=<g> [var=<x>] [clause=<j>] [assign=<x>:<bit>,...] [index=<i>]
  Clause numbers are 1-based. Names are resolved against inst.
*/
std::string render_map(const ReductionMap &map, const PlanningInstance &inst);
ReductionMap parse_map(std::string_view text, const PlanningInstance &inst);
// Only the mode line of a map sidecar.
TotalizeMode parse_map_mode(std::string_view text);
}

#endif
