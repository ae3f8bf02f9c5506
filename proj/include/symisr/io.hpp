#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symisr/reconfig.hpp"
#include "symisr/reductions.hpp"

namespace symisr {

struct InstanceFile {
  Instance instance;
  std::vector<std::string> comments;  // text after "c ", in file order
  std::optional<std::string> class_hint;  // from a "c class <name>" line
};

// Line grammar:
//   c <text>          comment
//   p symisr <n> <m>  header, exactly once, before any e/s/t/k line
//   e <u> <v>         exactly m times
//   s <v...> | s -    source, exactly once
//   t <v...> | t -    target, exactly once
//   k <int>           optional budget
// Blank lines are skipped. Malformed input throws ParseError; endpoint
// sets with internal edges throw NotIndependent.
InstanceFile parse_instance(std::istream& in);
InstanceFile read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Instance& inst,
                    const std::vector<std::string>& comments = {});

// "len <count>" followed by one set per line, "-" for the empty set.
ReconfigSequence parse_sequence(std::istream& in);
ReconfigSequence read_sequence_file(const std::string& path);
void write_sequence(std::ostream& out, const ReconfigSequence& seq);

// Graph from a DIMACS "p edge" / "p col" file, or the graph part of an
// instance file.
Graph parse_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

// DIMACS CNF: "p cnf <n> <m>", clauses terminated by 0.
CnfFormula parse_cnf(std::istream& in);
CnfFormula read_cnf_file(const std::string& path);

std::string roles_json(const SplitReduction& r);
std::string roles_json(const PlanarReduction& r);

}  // namespace symisr
