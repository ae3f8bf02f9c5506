#include "symisr/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symisr/generators.hpp"
#include "symisr/io.hpp"
#include "symisr/recognition.hpp"
#include "symisr/reductions.hpp"
#include "symisr/solvers.hpp"

namespace symisr {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kSemantic = 2;
constexpr int kUnsupported = 3;

struct Options {
  std::string file;
  std::string solver = "auto";
  bool witness = false;
  bool json = false;
  std::string sequence;
  std::string kind;
  std::string output;
  int k = 0;
  std::string cls;
  int n = 9;
  int trials = 200;
  std::uint64_t seed = 0;
  int threads = 1;
  int t = 1;
  bool cycle = false;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InvalidInput("cannot write " + path);
  f << text;
}

int cmd_solve(const Options& o, std::ostream& out) {
  auto choice = parse_solver_choice(o.solver);
  if (!choice) throw InvalidInput("unknown solver '" + o.solver + "'");
  InstanceFile file = read_instance_file(o.file);
  SolveResult r = solve(file.instance, *choice);
  if (o.json) {
    nlohmann::ordered_json j;
    j["length"] = r.length;
    j["solver"] = r.solver_used;
    j["cc_bound"] = r.cc_bound;
    if (r.witness) {
      auto sets = nlohmann::ordered_json::array();
      for (const auto& s : r.witness->sets) sets.push_back(s.items());
      j["witness"] = sets;
    } else {
      j["witness"] = nullptr;
    }
    out << j.dump() << '\n';
    return kOk;
  }
  out << "length " << r.length << '\n' << "solver " << r.solver_used << '\n' << "cc_bound " << r.cc_bound << '\n';
  if (o.witness) {
    if (r.witness) {
      write_sequence(out, *r.witness);
    } else {
      out << "c no witness from solver " << r.solver_used << '\n';
    }
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  InstanceFile file = read_instance_file(o.file);
  ReconfigSequence seq = read_sequence_file(o.sequence);
  ValidationReport rep = validate_sequence(file.instance, seq);
  if (rep.ok) {
    out << "ok ℓ=" << rep.steps << '\n';
    return kOk;
  }
  out << "violation at " << rep.index << ": " << rep.reason << '\n';
  return kSemantic;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  std::optional<Instance> inst;
  std::string roles;
  std::vector<std::string> comments;
  if (o.kind == "ds") {
    SplitReduction r = reduce_ds(read_graph_file(o.file), o.k);
    comments = {"class split", "dominating set reduction k=" + std::to_string(o.k)};
    roles = roles_json(r);
    inst = r.instance;
  } else if (o.kind == "cnf") {
    PlanarReduction r = reduce_cnf(read_cnf_file(o.file));
    comments = {"3-sat reduction"};
    roles = roles_json(r);
    inst = r.instance;
  } else {
    throw InvalidInput("reduction kind must be ds or cnf");
  }
  std::ostringstream text;
  write_instance(text, *inst, comments);
  write_file(o.output, text.str());
  write_file(o.output + ".roles.json", roles);
  out << "vertices " << inst->graph.order() << '\n'
      << "edges " << inst->graph.size() << '\n'
      << "budget " << *inst->budget << '\n';
  return kOk;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
  auto cls = parse_graph_class(o.cls);
  if (!cls) throw InvalidInput("unknown class '" + o.cls + "'");
  FuzzSummary s = run_fuzz({*cls, o.n, o.trials, o.seed, o.threads}, out);
  return s.mismatches == 0 ? kOk : kSemantic;
}

int cmd_classify(const Options& o, std::ostream& out) {
  GraphClassReport r = classify(read_graph_file(o.file));
  auto flag = [&](const char* name, bool v) { out << name << ' ' << (v ? "true" : "false") << '\n'; };
  flag("connected", r.connected);
  flag("path", r.path);
  flag("cycle", r.cycle);
  flag("tree", r.tree);
  flag("forest", r.forest);
  flag("block", r.block);
  flag("split", r.split);
  flag("cograph", r.cograph);
  flag("bipartite", r.bipartite);
  flag("bipartite_chain", r.bipartite_chain);
  flag("join", r.join);
  if (r.p4) out << "p4 " << (*r.p4)[0] << ' ' << (*r.p4)[1] << ' ' << (*r.p4)[2] << ' ' << (*r.p4)[3] << '\n';
  return kOk;
}

int cmd_bound(const Options& o, std::ostream& out) {
  out << "cc_bound " << cc_bound(read_instance_file(o.file).instance) << '\n';
  return kOk;
}

int cmd_gen_remark(const Options& o, std::ostream& out) {
  Instance inst = gen_remark(o.t, o.cycle);
  std::vector<std::string> comments{std::string("remark caterpillar t=") + std::to_string(o.t) +
                                    (o.cycle ? " cyclic" : "")};
  if (o.output.empty()) {
    write_instance(out, inst, comments);
  } else {
    std::ostringstream text;
    write_instance(text, inst, comments);
    write_file(o.output, text.str());
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shortest independent set reconfiguration under symmetric-difference flips"};
  app.name("symisr");
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Shortest sequence length for an instance file");
  solve->add_option("file", o.file)->required();
  solve->add_option("--solver", o.solver, "auto|path|cycle|tree|block|cograph|chain|oracle");
  solve->add_flag("--witness", o.witness, "Print a witness sequence");
  solve->add_flag("--json", o.json, "JSON output");

  auto* verify = app.add_subcommand("verify", "Check a sequence file against an instance");
  verify->add_option("file", o.file)->required();
  verify->add_option("--sequence", o.sequence)->required();

  auto* reduce = app.add_subcommand("reduce", "Generate a hardness-reduction instance");
  reduce->add_option("kind", o.kind, "ds|cnf")->required();
  reduce->add_option("input", o.file)->required();
  reduce->add_option("--k", o.k, "Dominating set size bound");
  reduce->add_option("-o,--output", o.output)->required();

  auto* fuzz = app.add_subcommand("fuzz", "Compare a class solver with the oracle on random instances");
  fuzz->add_option("--class", o.cls)->required();
  fuzz->add_option("--n", o.n, "Maximum vertex count");
  fuzz->add_option("--trials", o.trials);
  fuzz->add_option("--seed", o.seed);
  fuzz->add_option("--threads", o.threads);

  auto* cls = app.add_subcommand("classify", "Report graph class membership");
  cls->add_option("file", o.file)->required();

  auto* bound = app.add_subcommand("bound", "Number of components of the symmetric difference");
  bound->add_option("file", o.file)->required();

  auto* remark = app.add_subcommand("gen-remark", "Caterpillar instance with a large component bound");
  remark->add_option("--t", o.t)->required();
  remark->add_flag("--cycle", o.cycle);
  remark->add_option("-o,--output", o.output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (reduce->parsed()) {
      if (o.kind == "ds" && reduce->count("--k") == 0) throw InvalidInput("reduce ds needs --k");
      return cmd_reduce(o, out);
    }
    if (fuzz->parsed()) return cmd_fuzz(o, out);
    if (cls->parsed()) return cmd_classify(o, out);
    if (bound->parsed()) return cmd_bound(o, out);
    if (remark->parsed()) return cmd_gen_remark(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotIndependent& e) {
    err << "error: " << e.what() << '\n';
    return kSemantic;
  } catch (const WrongClass& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupported;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupported;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace symisr
