#include "svx/graph_io.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace svx {

Digraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("graph parse error at line " + std::to_string(lineno) +
                                ": " + why);
  };

  int n = -1;
  bool undirected = false;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string tag, kind;
      long count = 0;
      if (!(ls >> tag >> count >> kind) || tag != "n") fail("malformed header");
      if (count < 1) fail("vertex count must be positive");
      if (kind == "directed")
        undirected = false;
      else if (kind == "undirected")
        undirected = true;
      else
        fail("expected 'directed' or 'undirected'");
      std::string rest;
      if (ls >> rest) fail("trailing tokens in header");
      n = static_cast<int>(count);
      continue;
    }
    long u = -1, v = -1;
    std::string w;
    if (!(ls >> u >> v >> w)) fail("expected 'u v w'");
    std::string rest;
    if (ls >> rest) fail("trailing tokens in edge line");
    if (u < 0 || u >= n || v < 0 || v >= n) fail("vertex index out of range");
    if (undirected && u > v) std::swap(u, v);
    if (!seen.insert({static_cast<int>(u), static_cast<int>(v)}).second)
      fail("duplicate edge line");
    Rat weight;
    try {
      weight = Rat::from_decimal(w);
    } catch (const std::exception& e) {
      fail(e.what());
    }
    if (weight.sign() <= 0) fail("edge weight must be positive");
    edges.push_back({static_cast<int>(u), static_cast<int>(v), weight});
  }
  if (n < 0) throw std::invalid_argument("graph parse error: missing header");
  return undirected ? Digraph::undirected(n, edges) : Digraph::directed(n, edges);
}

std::string serialize_graph(const Digraph& g) {
  std::ostringstream out;
  out << "n " << g.size() << (g.undirected_flag() ? " undirected" : " directed") << "\n";
  for (const Edge& e : g.edges()) {
    if (g.undirected_flag() && e.from > e.to) continue;
    out << e.from << "\t" << e.to << "\t" << e.weight.decimal_str() << "\n";
  }
  return out.str();
}

Json spectrum_json(const Spectrum& s) {
  Json j = Json::object();
  Json sig = Json::array();
  for (double x : s.sigmas) sig.push_back(x);
  j["sigmas"] = std::move(sig);
  if (s.mus) {
    Json mus = Json::array();
    for (double x : *s.mus) mus.push_back(x);
    j["mus"] = std::move(mus);
  } else {
    j["mus"] = nullptr;
  }
  j["residual"] = s.residual;
  return j;
}

Json vertex_set_json(const VertexSet& s) {
  Json arr = Json::array();
  for (int v : s.indices()) arr.push_back(static_cast<long long>(v));
  return arr;
}

Json rat_json(const Rat& r) {
  Json j = Json::object();
  j["exact"] = r.fraction_str();
  j["approx"] = r.to_double();
  return j;
}

Json certificate_json(const Certificate& c) {
  Json j = Json::object();
  j["S"] = vertex_set_json(c.cut.S);
  j["T"] = vertex_set_json(c.cut.T);
  j["value"] = c.cut.value.fraction_str();
  j["value_approx"] = c.cut.value.to_double();
  j["sigma2"] = c.sigma2;
  j["bound"] = c.bound;
  j["satisfied"] = c.satisfied;
  return j;
}

}  // namespace svx
