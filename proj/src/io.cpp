#include "symisr/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace symisr {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

long long to_int(const std::string& tok, std::size_t line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return v;
}

int to_vertex(const std::string& tok, std::size_t line, int n) {
  long long v = to_int(tok, line);
  if (v < 1 || v > n) throw ParseError(line, "vertex " + tok + " out of range 1.." + std::to_string(n));
  return static_cast<int>(v);
}

VertexSet parse_set(const std::vector<std::string>& toks, std::size_t first, std::size_t line, int n) {
  if (toks.size() == first) throw ParseError(line, "empty set must be written as '-'");
  if (toks.size() == first + 1 && toks[first] == "-") return {};
  std::vector<Vertex> vs;
  for (std::size_t i = first; i < toks.size(); ++i) vs.push_back(to_vertex(toks[i], line, n));
  VertexSet s(vs);
  if (s.size() != vs.size()) throw ParseError(line, "repeated vertex in set");
  return s;
}

std::string set_line(const VertexSet& s) {
  if (s.empty()) return "-";
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return in;
}

// Shared header/edge reader for instance and DIMACS graph files.
struct GraphReader {
  std::optional<int> n;
  long long m = 0;
  std::vector<Edge> edges;

  bool header(const std::vector<std::string>& toks, std::size_t line, bool allow_dimacs) {
    if (toks[0] != "p") return false;
    if (n) throw ParseError(line, "duplicate header");
    bool ok = toks.size() == 4 && (toks[1] == "symisr" || (allow_dimacs && (toks[1] == "edge" || toks[1] == "col")));
    if (!ok) throw ParseError(line, "expected 'p symisr <n> <m>'");
    long long nv = to_int(toks[2], line);
    m = to_int(toks[3], line);
    if (nv < 1) throw ParseError(line, "vertex count must be positive");
    if (m < 0) throw ParseError(line, "edge count must be nonnegative");
    n = static_cast<int>(nv);
    return true;
  }

  void edge(const std::vector<std::string>& toks, std::size_t line) {
    if (!n) throw ParseError(line, "edge before header");
    if (toks.size() != 3) throw ParseError(line, "expected 'e <u> <v>'");
    int u = to_vertex(toks[1], line, *n), v = to_vertex(toks[2], line, *n);
    if (u == v) throw ParseError(line, "self-loop at vertex " + toks[1]);
    if (static_cast<long long>(edges.size()) >= m) throw ParseError(line, "more edges than the header declares");
    edges.emplace_back(u, v);
  }

  Graph finish(std::size_t line) const {
    if (!n) throw ParseError(line, "missing header");
    if (static_cast<long long>(edges.size()) != m) {
      throw ParseError(line, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    return Graph::build(*n, edges);
  }
};

}  // namespace

InstanceFile parse_instance(std::istream& in) {
  GraphReader gr;
  std::optional<VertexSet> s, t;
  std::optional<int> k;
  std::vector<std::string> comments;
  std::optional<std::string> hint;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto toks = tokens(raw);
    if (toks.empty()) continue;
    const std::string& kind = toks[0];
    if (kind == "c") {
      auto pos = raw.find('c');
      std::string text = raw.substr(pos + 1);
      if (!text.empty() && text.front() == ' ') text.erase(0, 1);
      comments.push_back(text);
      if (toks.size() >= 3 && toks[1] == "class") hint = toks[2];
      continue;
    }
    if (gr.header(toks, line, false)) continue;
    if (kind == "e") {
      gr.edge(toks, line);
    } else if (kind == "s" || kind == "t") {
      if (!gr.n) throw ParseError(line, "set before header");
      auto& slot = kind == "s" ? s : t;
      if (slot) throw ParseError(line, "duplicate '" + kind + "' line");
      slot = parse_set(toks, 1, line, *gr.n);
    } else if (kind == "k") {
      if (!gr.n) throw ParseError(line, "budget before header");
      if (k) throw ParseError(line, "duplicate 'k' line");
      if (toks.size() != 2) throw ParseError(line, "expected 'k <int>'");
      long long v = to_int(toks[1], line);
      if (v < 0) throw ParseError(line, "budget must be nonnegative");
      k = static_cast<int>(v);
    } else {
      throw ParseError(line, "unknown line kind '" + kind + "'");
    }
  }
  Graph g = gr.finish(line);
  if (!s) throw ParseError(line, "missing 's' line");
  if (!t) throw ParseError(line, "missing 't' line");
  return InstanceFile{make_instance(std::move(g), *s, *t, k), std::move(comments), hint};
}

InstanceFile read_instance_file(const std::string& path) {
  auto in = open(path);
  return parse_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  auto edges = inst.graph.edges();
  out << "p symisr " << inst.graph.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u << ' ' << v << '\n';
  out << "s " << set_line(inst.source) << '\n';
  out << "t " << set_line(inst.target) << '\n';
  if (inst.budget) out << "k " << *inst.budget << '\n';
}

ReconfigSequence parse_sequence(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  std::optional<long long> count;
  ReconfigSequence seq;
  while (std::getline(in, raw)) {
    ++line;
    auto toks = tokens(raw);
    if (toks.empty()) continue;
    if (!count) {
      if (toks.size() != 2 || toks[0] != "len") throw ParseError(line, "expected 'len <count>'");
      count = to_int(toks[1], line);
      if (*count < 1) throw ParseError(line, "sequence needs at least one set");
      continue;
    }
    if (static_cast<long long>(seq.sets.size()) == *count) throw ParseError(line, "more sets than 'len' declares");
    seq.sets.push_back(parse_set(toks, 0, line, 1 << 30));
  }
  if (!count) throw ParseError(line, "missing 'len' line");
  if (static_cast<long long>(seq.sets.size()) != *count) {
    throw ParseError(line, "'len' declares " + std::to_string(*count) + " sets, found " + std::to_string(seq.sets.size()));
  }
  return seq;
}

ReconfigSequence read_sequence_file(const std::string& path) {
  auto in = open(path);
  return parse_sequence(in);
}

void write_sequence(std::ostream& out, const ReconfigSequence& seq) {
  out << "len " << seq.sets.size() << '\n';
  for (const auto& s : seq.sets) out << set_line(s) << '\n';
}

Graph parse_graph(std::istream& in) {
  GraphReader gr;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto toks = tokens(raw);
    if (toks.empty() || toks[0] == "c") continue;
    if (gr.header(toks, line, true)) continue;
    if (toks[0] == "e") {
      gr.edge(toks, line);
    } else if (toks[0] == "s" || toks[0] == "t" || toks[0] == "k") {
      continue;
    } else {
      throw ParseError(line, "unknown line kind '" + toks[0] + "'");
    }
  }
  return gr.finish(line);
}

Graph read_graph_file(const std::string& path) {
  auto in = open(path);
  return parse_graph(in);
}

CnfFormula parse_cnf(std::istream& in) {
  CnfFormula f;
  std::optional<long long> m;
  std::vector<int> clause;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto toks = tokens(raw);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "%") break;
    if (toks[0] == "p") {
      if (m) throw ParseError(line, "duplicate header");
      if (toks.size() != 4 || toks[1] != "cnf") throw ParseError(line, "expected 'p cnf <n> <m>'");
      long long n = to_int(toks[2], line);
      m = to_int(toks[3], line);
      if (n < 0 || *m < 0) throw ParseError(line, "counts must be nonnegative");
      f.num_vars = static_cast<int>(n);
      continue;
    }
    if (!m) throw ParseError(line, "clause before header");
    for (const auto& tok : toks) {
      long long lit = to_int(tok, line);
      if (lit == 0) {
        f.clauses.push_back(clause);
        clause.clear();
        continue;
      }
      if (lit < -f.num_vars || lit > f.num_vars) throw ParseError(line, "literal " + tok + " out of range");
      clause.push_back(static_cast<int>(lit));
    }
  }
  if (!m) throw ParseError(line, "missing header");
  if (!clause.empty()) throw ParseError(line, "last clause is not terminated by 0");
  if (static_cast<long long>(f.clauses.size()) != *m) {
    throw ParseError(line, "header declares " + std::to_string(*m) + " clauses, found " + std::to_string(f.clauses.size()));
  }
  return f;
}

CnfFormula read_cnf_file(const std::string& path) {
  auto in = open(path);
  return parse_cnf(in);
}

std::string roles_json(const SplitReduction& r) {
  nlohmann::ordered_json j;
  j["kind"] = "split";
  j["n"] = r.n;
  j["k"] = r.k;
  j["k_prime"] = r.k_prime;
  j["x"] = r.x;
  j["y"] = r.y;
  j["z1"] = r.z1;
  j["z2"] = r.z2;
  return j.dump(2) + "\n";
}

std::string roles_json(const PlanarReduction& r) {
  nlohmann::ordered_json j;
  j["kind"] = "planar";
  j["y"] = r.y;
  j["x_true"] = r.x_true;
  j["x_false"] = r.x_false;
  j["c"] = r.c;
  j["c_prime"] = r.c_prime;
  auto occ = nlohmann::ordered_json::array();
  for (const auto& o : r.occurrences) {
    occ.push_back({{"clause", o.clause}, {"literal", o.literal}, {"a", o.a}, {"b", o.b}});
  }
  j["occurrences"] = occ;
  return j.dump(2) + "\n";
}

}  // namespace symisr
