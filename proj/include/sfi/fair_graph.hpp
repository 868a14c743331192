#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sfi/rational.hpp"

namespace sfi {

struct GraphEdge {
  std::string id;
  std::string src;
  std::string dst;
  // w(e); the weight is W(e) = w(e)^2.
  Rational half_weight;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

// Finite oriented weighted graph with an edge involution, the data of a
// fair and balanced delta-graph.
//
// Construction only checks structure (ids resolve, the involution covers
// every edge exactly once). The fairness and balance conditions are checked
// by validate(), which reports violations as data.
class FairGraph {
 public:
  FairGraph(BaseParam param, std::vector<std::string> vertices, std::vector<GraphEdge> edges,
            const std::vector<std::pair<std::string, std::string>>& involution_pairs);

  const BaseParam& param() const { return param_; }
  const Rational& delta() const { return param_.delta(); }

  // Sorted lexicographically.
  const std::vector<std::string>& vertices() const { return vertices_; }
  // Sorted lexicographically by id.
  const std::vector<GraphEdge>& edges() const { return edges_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;

  std::size_t src(std::size_t e) const { return src_[e]; }
  std::size_t dst(std::size_t e) const { return dst_[e]; }
  std::size_t reverse(std::size_t e) const { return involution_[e]; }
  const Rational& half_weight(std::size_t e) const { return edges_[e].half_weight; }
  Rational weight(std::size_t e) const { return edges_[e].half_weight * edges_[e].half_weight; }

  // Outgoing edge indices of a vertex, in edge-id order.
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }

  // Unordered involution pairs (smaller index first), each listed once.
  std::vector<std::pair<std::size_t, std::size_t>> involution_pairs() const;

  friend bool operator==(const FairGraph& a, const FairGraph& b) {
    return a.param_ == b.param_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_ &&
           a.involution_ == b.involution_;
  }

 private:
  BaseParam param_;
  std::vector<std::string> vertices_;
  std::vector<GraphEdge> edges_;
  std::map<std::string, std::size_t, std::less<>> vertex_index_;
  std::map<std::string, std::size_t, std::less<>> edge_index_;
  std::vector<std::size_t> src_;
  std::vector<std::size_t> dst_;
  std::vector<std::size_t> involution_;
  std::vector<std::vector<std::size_t>> out_;
};

struct Violation {
  enum class Kind { involution, balance, fairness, weight };
  Kind kind;
  // Offending vertex or edge id.
  std::string subject;
  // Exact defect: for fairness sum - delta, for balance W(e)W(ebar) - 1.
  Rational defect;
  std::string message;
};

std::string to_string(Violation::Kind kind);

// Empty exactly when the graph is fair and balanced.
std::vector<Violation> validate(const FairGraph& g);

// n vertices on a cycle; each adjacent pair carries an edge i -> i+1 with
// half-weight 1/r and its reverse with half-weight r.
FairGraph cycle_family(int n, const BaseParam& p);

// One vertex with k self-loop pairs. k = 1 uses half-weights r, 1/r (any r);
// k >= 2 needs unit weights and delta = 2k.
FairGraph bouquet(int k, const BaseParam& p);

struct UndirectedGraph {
  std::vector<std::string> vertices;
  // Each entry is one undirected edge; self-loops allowed, parallel edges allowed.
  std::vector<std::pair<std::string, std::string>> edges;
};

// Turns each undirected edge into an opposite pair with half-weights
// d(t)/d(s), after checking sum over neighbours d(t)^2 / d(v)^2 = delta.
// Throws std::invalid_argument when the eigenvector condition fails.
FairGraph from_dimension_function(const UndirectedGraph& graph,
                                  const std::map<std::string, Rational>& dimension,
                                  const Rational& delta);

struct DimensionData {
  UndirectedGraph graph;
  std::map<std::string, Rational> dimension;
  Rational delta;
};

// JSON graph file. Throws ParseError naming the offending field.
FairGraph read_graph(std::string_view text);
std::string write_graph(const FairGraph& g);

// JSON dimension-function file: {"delta", "vertices", "edges": [[u,w],...], "dimension": {v: d}}.
DimensionData read_dimension_data(std::string_view text);

}  // namespace sfi
