#pragma once

#include "ldp/matrix.hpp"
#include "ldp/rational.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ldp {

struct Vertex {
  std::string id;
  int weight = 2;  // self-intersection is -weight

  bool operator==(const Vertex&) const = default;
};

enum class Shape { Empty, Chain, Star };

/// A weighted dual graph whose shape is a chain or a star with three branches.
///
/// Construction validates the shape. Vertex order is whatever the caller
/// supplied; `canonical()` returns the normalized ordering used for printing,
/// comparison and the closed-form formulas: chains end to end, stars with the
/// center first and then each branch listed from the center outward.
class WeightedDualGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  WeightedDualGraph() = default;
  WeightedDualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  static WeightedDualGraph chain(const std::vector<int>& weights);
  /// Branches are listed from the center outward. Empty branches are allowed;
  /// with fewer than three nonempty branches the result is a chain.
  static WeightedDualGraph star(int center, const std::array<std::vector<int>, 3>& branches);

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int weight(std::size_t i) const { return vertices_[i].weight; }
  std::vector<int> weights() const;
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_[i]; }
  std::size_t degree(std::size_t i) const { return adjacency_[i].size(); }
  bool adjacent(std::size_t i, std::size_t j) const;

  Shape shape() const { return shape_; }
  /// Star only.
  std::size_t center() const;
  /// Star: the three branches as vertex indices from the center outward.
  std::vector<std::vector<std::size_t>> branches() const;
  /// Chain: vertex indices end to end, starting from the lower-indexed end.
  std::vector<std::size_t> chain_order() const;

  WeightedDualGraph canonical() const;
  bool is_canonical() const;

  /// Equality of labeled graphs: same weights in the same order and same edges.
  /// Ids are ignored.
  bool operator==(const WeightedDualGraph& other) const;

 private:
  void build();

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  Shape shape_ = Shape::Empty;
  std::size_t center_ = 0;
};

/// Diagonal -weight, 1 for adjacent pairs.
IntMatrix intersection_matrix(const WeightedDualGraph& g);

/// True iff all leading principal minors alternate in sign starting negative.
bool is_negative_definite(const IntMatrix& m);
bool is_negative_definite(const WeightedDualGraph& g);

/// |det M|, with the empty graph giving 1. Throws NotNegativeDefinite.
Integer graph_determinant(const WeightedDualGraph& g);

/// A multiset of nonempty graphs, stored canonically and sorted.
class DynkinType {
 public:
  DynkinType() = default;
  explicit DynkinType(std::vector<WeightedDualGraph> components);

  const std::vector<WeightedDualGraph>& components() const { return components_; }
  std::size_t vertex_count() const;
  /// Block-diagonal intersection matrix of all components in order.
  IntMatrix intersection_matrix() const;

  bool operator==(const DynkinType& other) const { return components_ == other.components_; }

 private:
  std::vector<WeightedDualGraph> components_;
};

/// Every chain and three-branch star with 1..max_vertices vertices and weights
/// in [2, max_weight], one canonical representative per isomorphism class.
std::vector<WeightedDualGraph> enumerate_graphs(std::size_t max_vertices, int max_weight);

/// Grammar (whitespace ignored):
///   dynkin := item ('+' item)*      item := [multiplier >= 2] graph
///   graph  := chain | star          chain := '[' run (',' run)* ']'
///   run    := int | int '^' int     star := '[' int ';' chain ',' chain ',' chain ']'
/// Throws ParseError carrying a byte offset.
DynkinType parse_dynkin(std::string_view text);

std::string format_graph(const WeightedDualGraph& g);
/// Canonical notation: equal components grouped as "k[...]", runs of three or
/// more equal weights written "w^r".
std::string format_dynkin(const DynkinType& t);

}  // namespace ldp
