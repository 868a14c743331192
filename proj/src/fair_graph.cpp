#include "sfi/fair_graph.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>
#include <stdexcept>

namespace sfi {

FairGraph::FairGraph(BaseParam param, std::vector<std::string> vertices, std::vector<GraphEdge> edges,
                     const std::vector<std::pair<std::string, std::string>>& involution_pairs)
    : param_(std::move(param)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_index_.emplace(vertices_[i], i).second)
      throw std::invalid_argument("duplicate vertex id '" + vertices_[i] + "'");
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const GraphEdge& a, const GraphEdge& b) { return a.id < b.id; });
  out_.resize(vertices_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const GraphEdge& edge = edges_[e];
    if (!edge_index_.emplace(edge.id, e).second)
      throw std::invalid_argument("duplicate edge id '" + edge.id + "'");
    const auto s = find_vertex(edge.src);
    const auto t = find_vertex(edge.dst);
    if (!s) throw std::invalid_argument("edge '" + edge.id + "' has unknown source '" + edge.src + "'");
    if (!t) throw std::invalid_argument("edge '" + edge.id + "' has unknown target '" + edge.dst + "'");
    src_.push_back(*s);
    dst_.push_back(*t);
    out_[*s].push_back(e);
  }
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  involution_.assign(edges_.size(), unset);
  for (const auto& [a, b] : involution_pairs) {
    const auto ea = find_edge(a);
    const auto eb = find_edge(b);
    if (!ea) throw std::invalid_argument("involution names unknown edge '" + a + "'");
    if (!eb) throw std::invalid_argument("involution names unknown edge '" + b + "'");
    if (involution_[*ea] != unset) throw std::invalid_argument("edge '" + a + "' appears twice in the involution");
    if (*eb != *ea && involution_[*eb] != unset)
      throw std::invalid_argument("edge '" + b + "' appears twice in the involution");
    involution_[*ea] = *eb;
    involution_[*eb] = *ea;
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (involution_[e] == unset) throw std::invalid_argument("edge '" + edges_[e].id + "' has no involution partner");
  }
}

std::optional<std::size_t> FairGraph::find_vertex(std::string_view id) const {
  const auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FairGraph::find_edge(std::string_view id) const {
  const auto it = edge_index_.find(id);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> FairGraph::involution_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (involution_[e] >= e) out.emplace_back(e, involution_[e]);
  return out;
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::involution: return "involution";
    case Violation::Kind::balance: return "balance";
    case Violation::Kind::fairness: return "fairness";
    case Violation::Kind::weight: return "weight";
  }
  return "unknown";
}

std::vector<Violation> validate(const FairGraph& g) {
  std::vector<Violation> out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const GraphEdge& edge = g.edges()[e];
    if (edge.half_weight.sign() <= 0) {
      out.push_back({Violation::Kind::weight, edge.id, edge.half_weight,
                     "half-weight must be positive"});
    }
  }
  for (const auto& [a, b] : g.involution_pairs()) {
    const GraphEdge& ea = g.edges()[a];
    const GraphEdge& eb = g.edges()[b];
    if (g.src(a) != g.dst(b) || g.dst(a) != g.src(b)) {
      out.push_back({Violation::Kind::involution, ea.id, Rational(0),
                     "involution partner '" + eb.id + "' does not swap source and target"});
    }
    const Rational defect = g.weight(a) * g.weight(b) - Rational(1);
    if (!defect.is_zero()) {
      out.push_back({Violation::Kind::balance, ea.id, defect,
                     "W(" + ea.id + ")W(" + eb.id + ") - 1 = " + defect.to_string()});
    }
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    Rational sum;
    for (std::size_t e : g.out_edges(v)) sum += g.weight(e);
    const Rational defect = sum - g.delta();
    if (!defect.is_zero()) {
      out.push_back({Violation::Kind::fairness, g.vertices()[v], defect,
                     "outgoing weight " + sum.to_string() + " minus delta " + g.delta().to_string() +
                         " = " + defect.to_string()});
    }
  }
  return out;
}

namespace {

Rational require_r(const BaseParam& p, const char* who) {
  if (p.has_r()) return *p.r();
  if (p.delta() == Rational(2)) return Rational(1);
  throw std::invalid_argument(std::string(who) + " needs a rational half-weight base r");
}

}  // namespace

FairGraph cycle_family(int n, const BaseParam& p) {
  if (n < 2) throw std::invalid_argument("cycle_family needs n >= 2");
  const Rational r = require_r(p, "cycle_family");
  std::vector<std::string> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<GraphEdge> edges;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i) {
    const std::string a = vertices[static_cast<std::size_t>(i)];
    const std::string b = vertices[static_cast<std::size_t>((i + 1) % n)];
    const std::string fwd = "f" + std::to_string(i);
    const std::string bwd = "b" + std::to_string(i);
    edges.push_back({fwd, a, b, r.inverse()});
    edges.push_back({bwd, b, a, r});
    pairs.emplace_back(fwd, bwd);
  }
  return FairGraph(BaseParam::from_r(r), std::move(vertices), std::move(edges), pairs);
}

FairGraph bouquet(int k, const BaseParam& p) {
  if (k < 1) throw std::invalid_argument("bouquet needs k >= 1");
  std::vector<GraphEdge> edges;
  std::vector<std::pair<std::string, std::string>> pairs;
  auto add_pair = [&](int i, const Rational& w) {
    const std::string e = "e" + std::to_string(i);
    const std::string ebar = e + "bar";
    edges.push_back({e, "v", "v", w});
    edges.push_back({ebar, "v", "v", w.inverse()});
    pairs.emplace_back(e, ebar);
  };
  if (k == 1) {
    const Rational r = require_r(p, "bouquet(1)");
    add_pair(0, r);
    return FairGraph(BaseParam::from_r(r), {"v"}, std::move(edges), pairs);
  }
  if (p.delta() != Rational(2 * k))
    throw std::invalid_argument("bouquet(" + std::to_string(k) + ") with unit weights needs delta = " +
                                std::to_string(2 * k) + ", got " + p.delta().to_string());
  for (int i = 0; i < k; ++i) add_pair(i, Rational(1));
  return FairGraph(BaseParam::from_delta(Rational(2 * k)), {"v"}, std::move(edges), pairs);
}

FairGraph from_dimension_function(const UndirectedGraph& graph,
                                  const std::map<std::string, Rational>& dimension,
                                  const Rational& delta) {
  for (const auto& v : graph.vertices) {
    const auto it = dimension.find(v);
    if (it == dimension.end()) throw std::invalid_argument("no dimension for vertex '" + v + "'");
    if (it->second.sign() <= 0) throw std::invalid_argument("dimension of '" + v + "' must be positive");
  }
  std::vector<GraphEdge> edges;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const auto& [u, w] = graph.edges[i];
    if (!dimension.contains(u) || !dimension.contains(w))
      throw std::invalid_argument("undirected edge " + std::to_string(i) + " names an unknown vertex");
    const Rational ratio = dimension.at(w) / dimension.at(u);
    const std::string fwd = "e" + std::to_string(i);
    const std::string bwd = fwd + "r";
    edges.push_back({fwd, u, w, ratio});
    edges.push_back({bwd, w, u, ratio.inverse()});
    pairs.emplace_back(fwd, bwd);
  }
  FairGraph g(BaseParam::from_delta(delta), graph.vertices, std::move(edges), pairs);
  for (const auto& violation : validate(g)) {
    if (violation.kind == Violation::Kind::fairness)
      throw std::invalid_argument("d^2 is not a delta-eigenvector at '" + violation.subject +
                                  "': " + violation.message);
  }
  return g;
}

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

std::string require_string(const json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(where + ": expected a string");
  return value.get<std::string>();
}

Rational require_rational(const json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(where + ": expected an exact rational string, not " +
                                           std::string(value.type_name()));
  try {
    return Rational::parse(value.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<std::string> read_vertex_list(const json& doc) {
  const json& vertices = require(doc, "vertices", "graph");
  if (!vertices.is_array()) throw ParseError("vertices: expected an array");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::string id = require_string(vertices[i], "vertices[" + std::to_string(i) + "]");
    if (!seen.insert(id).second) throw ParseError("vertices: duplicate vertex id '" + id + "'");
    out.push_back(std::move(id));
  }
  return out;
}

}  // namespace

FairGraph read_graph(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("graph: top level must be an object");

  std::optional<Rational> r;
  std::optional<Rational> delta;
  if (doc.contains("r")) r = require_rational(doc["r"], "r");
  if (doc.contains("delta")) delta = require_rational(doc["delta"], "delta");
  if (!r && !delta) throw ParseError("graph: one of 'r' or 'delta' is required");
  BaseParam param = r ? BaseParam::from_r(*r) : BaseParam::from_delta(*delta);
  if (r && delta && *delta != param.delta())
    throw ParseError("delta: " + delta->to_string() + " disagrees with r = " + r->to_string());

  std::vector<std::string> vertices = read_vertex_list(doc);

  const json& edges = require(doc, "edges", "graph");
  if (!edges.is_array()) throw ParseError("edges: expected an array");
  std::vector<GraphEdge> parsed_edges;
  std::set<std::string> edge_ids;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    if (!e.is_object()) throw ParseError(where + ": expected an object");
    GraphEdge edge{require_string(require(e, "id", where), where + ".id"),
                   require_string(require(e, "src", where), where + ".src"),
                   require_string(require(e, "dst", where), where + ".dst"),
                   require_rational(require(e, "half_weight", where), where + ".half_weight")};
    if (!edge_ids.insert(edge.id).second) throw ParseError(where + ": duplicate edge id '" + edge.id + "'");
    parsed_edges.push_back(std::move(edge));
  }

  const json& involution = require(doc, "involution", "graph");
  if (!involution.is_array()) throw ParseError("involution: expected an array");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < involution.size(); ++i) {
    const std::string where = "involution[" + std::to_string(i) + "]";
    const json& pr = involution[i];
    if (!pr.is_array() || pr.size() != 2) throw ParseError(where + ": expected a 2-element array");
    pairs.emplace_back(require_string(pr[0], where + "[0]"), require_string(pr[1], where + "[1]"));
  }

  try {
    return FairGraph(std::move(param), std::move(vertices), std::move(parsed_edges), pairs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("graph: ") + e.what());
  }
}

std::string write_graph(const FairGraph& g) {
  nlohmann::ordered_json doc;
  if (g.param().has_r()) {
    doc["r"] = g.param().r()->to_string();
  } else {
    doc["delta"] = g.delta().to_string();
  }
  doc["vertices"] = g.vertices();
  auto edges = nlohmann::ordered_json::array();
  for (const GraphEdge& e : g.edges()) {
    nlohmann::ordered_json item;
    item["id"] = e.id;
    item["src"] = e.src;
    item["dst"] = e.dst;
    item["half_weight"] = e.half_weight.to_string();
    edges.push_back(std::move(item));
  }
  doc["edges"] = std::move(edges);
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& [a, b] : g.involution_pairs())
    pairs.push_back({g.edges()[a].id, g.edges()[b].id});
  doc["involution"] = std::move(pairs);
  return doc.dump(2) + "\n";
}

DimensionData read_dimension_data(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("dimension data: top level must be an object");
  DimensionData out;
  out.delta = require_rational(require(doc, "delta", "dimension data"), "delta");
  out.graph.vertices = read_vertex_list(doc);
  const json& edges = require(doc, "edges", "dimension data");
  if (!edges.is_array()) throw ParseError("edges: expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!edges[i].is_array() || edges[i].size() != 2) throw ParseError(where + ": expected [u, w]");
    out.graph.edges.emplace_back(require_string(edges[i][0], where + "[0]"),
                                 require_string(edges[i][1], where + "[1]"));
  }
  const json& dims = require(doc, "dimension", "dimension data");
  if (!dims.is_object()) throw ParseError("dimension: expected an object");
  for (const auto& [key, value] : dims.items())
    out.dimension.emplace(key, require_rational(value, "dimension." + key));
  return out;
}

}  // namespace sfi
