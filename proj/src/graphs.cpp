#include "ldp/graphs.hpp"

#include "ldp/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <tuple>

namespace ldp {

WeightedDualGraph::WeightedDualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  build();
}

void WeightedDualGraph::build() {
  const std::size_t n = vertices_.size();
  std::set<std::string> ids;
  for (const auto& v : vertices_) {
    if (v.weight < 2) {
      throw Error(ErrorKind::InvalidArgument,
                  "vertex '" + v.id + "' has weight " + std::to_string(v.weight) + " < 2");
    }
    if (!ids.insert(v.id).second) throw Error(ErrorKind::InvalidArgument, "duplicate vertex id '" + v.id + "'");
  }
  for (auto& e : edges_) {
    if (e.first >= n || e.second >= n) throw Error(ErrorKind::InvalidArgument, "edge refers to a missing vertex");
    if (e.first == e.second) throw Error(ErrorKind::InvalidArgument, "loops are not allowed");
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error(ErrorKind::InvalidArgument, "multiple edges are not allowed");
  }
  adjacency_.assign(n, {});
  for (const auto& [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());

  if (n == 0) {
    shape_ = Shape::Empty;
    return;
  }
  if (edges_.size() != n - 1) throw Error(ErrorKind::InvalidArgument, "graph is not a tree");
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adjacency_[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) throw Error(ErrorKind::InvalidArgument, "graph is not connected");

  std::size_t branch_points = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (degree(i) > 3) throw Error(ErrorKind::InvalidArgument, "vertex of degree > 3");
    if (degree(i) == 3) {
      ++branch_points;
      center_ = i;
    }
  }
  if (branch_points > 1) throw Error(ErrorKind::InvalidArgument, "graph has more than one branch point");
  shape_ = branch_points == 1 ? Shape::Star : Shape::Chain;
}

WeightedDualGraph WeightedDualGraph::chain(const std::vector<int>& weights) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    vs.push_back({"v" + std::to_string(i), weights[i]});
    if (i > 0) es.emplace_back(i - 1, i);
  }
  return WeightedDualGraph(std::move(vs), std::move(es));
}

WeightedDualGraph WeightedDualGraph::star(int center, const std::array<std::vector<int>, 3>& branches) {
  std::vector<Vertex> vs{{"v0", center}};
  std::vector<Edge> es;
  for (const auto& branch : branches) {
    std::size_t prev = 0;
    for (int w : branch) {
      std::size_t idx = vs.size();
      vs.push_back({"v" + std::to_string(idx), w});
      es.emplace_back(prev, idx);
      prev = idx;
    }
  }
  return WeightedDualGraph(std::move(vs), std::move(es));
}

std::vector<int> WeightedDualGraph::weights() const {
  std::vector<int> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.weight);
  return out;
}

bool WeightedDualGraph::adjacent(std::size_t i, std::size_t j) const {
  return std::binary_search(adjacency_[i].begin(), adjacency_[i].end(), j);
}

std::size_t WeightedDualGraph::center() const {
  if (shape_ != Shape::Star) throw Error(ErrorKind::InvalidArgument, "graph is not a star");
  return center_;
}

std::vector<std::vector<std::size_t>> WeightedDualGraph::branches() const {
  if (shape_ != Shape::Star) throw Error(ErrorKind::InvalidArgument, "graph is not a star");
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start : adjacency_[center_]) {
    std::vector<std::size_t> path{start};
    std::size_t prev = center_;
    std::size_t cur = start;
    while (true) {
      std::size_t next = cur;
      for (std::size_t w : adjacency_[cur])
        if (w != prev) next = w;
      if (next == cur) break;
      prev = cur;
      cur = next;
      path.push_back(cur);
    }
    out.push_back(std::move(path));
  }
  return out;
}

std::vector<std::size_t> WeightedDualGraph::chain_order() const {
  if (shape_ == Shape::Empty) return {};
  if (shape_ != Shape::Chain) throw Error(ErrorKind::InvalidArgument, "graph is not a chain");
  std::size_t start = 0;
  while (degree(start) > 1) ++start;
  std::vector<std::size_t> order{start};
  std::size_t prev = start;
  std::size_t cur = start;
  while (order.size() < size()) {
    for (std::size_t w : adjacency_[cur])
      if (w != prev) {
        prev = cur;
        cur = w;
        break;
      }
    order.push_back(cur);
  }
  return order;
}

namespace {

std::vector<int> weights_of(const WeightedDualGraph& g, const std::vector<std::size_t>& idx) {
  std::vector<int> out;
  for (std::size_t i : idx) out.push_back(g.weight(i));
  return out;
}

}  // namespace

WeightedDualGraph WeightedDualGraph::canonical() const {
  switch (shape_) {
    case Shape::Empty:
      return {};
    case Shape::Chain: {
      auto w = weights_of(*this, chain_order());
      auto r = std::vector<int>(w.rbegin(), w.rend());
      return chain(std::min(w, r));
    }
    case Shape::Star: {
      std::vector<std::vector<int>> bs;
      for (const auto& b : branches()) bs.push_back(weights_of(*this, b));
      std::sort(bs.begin(), bs.end(), [](const auto& x, const auto& y) {
        return std::make_pair(x.size(), x) < std::make_pair(y.size(), y);
      });
      return star(weight(center_), {bs[0], bs[1], bs[2]});
    }
  }
  return {};
}

bool WeightedDualGraph::is_canonical() const { return *this == canonical(); }

bool WeightedDualGraph::operator==(const WeightedDualGraph& other) const {
  return weights() == other.weights() && edges_ == other.edges_;
}

IntMatrix intersection_matrix(const WeightedDualGraph& g) {
  IntMatrix m(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) m(i, i) = -g.weight(i);
  for (const auto& [a, b] : g.edges()) {
    m(a, b) = 1;
    m(b, a) = 1;
  }
  return m;
}

bool is_negative_definite(const IntMatrix& m) {
  auto minors = leading_principal_minors(m);
  if (minors.size() != m.rows()) return false;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    bool want_negative = k % 2 == 0;
    if (want_negative ? minors[k] >= 0 : minors[k] <= 0) return false;
  }
  return true;
}

bool is_negative_definite(const WeightedDualGraph& g) { return is_negative_definite(intersection_matrix(g)); }

Integer graph_determinant(const WeightedDualGraph& g) {
  if (g.empty()) return 1;
  IntMatrix m = intersection_matrix(g);
  if (!is_negative_definite(m)) throw Error(ErrorKind::NotNegativeDefinite, "graph " + format_graph(g) + " is not negative definite");
  return abs(determinant(m));
}

namespace {

auto component_key(const WeightedDualGraph& g) {
  std::vector<std::size_t> lengths;
  if (g.shape() == Shape::Star)
    for (const auto& b : g.branches()) lengths.push_back(b.size());
  return std::make_tuple(-static_cast<long>(g.size()), static_cast<int>(g.shape()), lengths, g.weights());
}

}  // namespace

DynkinType::DynkinType(std::vector<WeightedDualGraph> components) {
  for (auto& c : components) {
    if (c.empty()) throw Error(ErrorKind::InvalidArgument, "Dynkin type components must be nonempty");
    if (!is_negative_definite(c)) {
      throw Error(ErrorKind::NotNegativeDefinite, "component " + format_graph(c) + " is not negative definite");
    }
    components_.push_back(c.canonical());
  }
  std::sort(components_.begin(), components_.end(),
            [](const auto& a, const auto& b) { return component_key(a) < component_key(b); });
}

std::size_t DynkinType::vertex_count() const {
  std::size_t n = 0;
  for (const auto& c : components_) n += c.size();
  return n;
}

IntMatrix DynkinType::intersection_matrix() const {
  IntMatrix out(vertex_count(), vertex_count());
  std::size_t offset = 0;
  for (const auto& c : components_) {
    IntMatrix m = ldp::intersection_matrix(c);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) out(offset + i, offset + j) = m(i, j);
    offset += c.size();
  }
  return out;
}

namespace {

// Odometer over weight sequences of a fixed length.
bool next_sequence(std::vector<int>& w, int max_weight) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] < max_weight) {
      ++w[i];
      return true;
    }
    w[i] = 2;
  }
  return false;
}

std::vector<std::vector<int>> sequences(std::size_t len, int max_weight) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(len, 2);
  do {
    out.push_back(w);
  } while (next_sequence(w, max_weight));
  return out;
}

}  // namespace

std::vector<WeightedDualGraph> enumerate_graphs(std::size_t max_vertices, int max_weight) {
  std::vector<WeightedDualGraph> out;
  for (std::size_t len = 1; len <= max_vertices; ++len)
    for (const auto& w : sequences(len, max_weight))
      if (w <= std::vector<int>(w.rbegin(), w.rend())) out.push_back(WeightedDualGraph::chain(w));

  auto branch_less = [](const std::vector<int>& x, const std::vector<int>& y) {
    return std::make_pair(x.size(), x) < std::make_pair(y.size(), y);
  };
  for (std::size_t l1 = 1; 1 + 3 * l1 <= max_vertices; ++l1)
    for (std::size_t l2 = l1; 1 + l1 + 2 * l2 <= max_vertices; ++l2)
      for (std::size_t l3 = l2; 1 + l1 + l2 + l3 <= max_vertices; ++l3) {
        auto s1 = sequences(l1, max_weight);
        auto s2 = sequences(l2, max_weight);
        auto s3 = sequences(l3, max_weight);
        for (int c = 2; c <= max_weight; ++c)
          for (const auto& b1 : s1)
            for (const auto& b2 : s2) {
              if (branch_less(b2, b1)) continue;
              for (const auto& b3 : s3) {
                if (branch_less(b3, b2)) continue;
                out.push_back(WeightedDualGraph::star(c, {b1, b2, b3}));
              }
            }
      }
  return out;
}

// ---- parser -------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  DynkinType parse() {
    std::vector<WeightedDualGraph> components;
    skip_ws();
    if (pos_ == text_.size()) fail("empty input");
    while (true) {
      parse_item(components);
      skip_ws();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != '+') fail(std::string("expected '+' or end of input, found '") + text_[pos_] + "'");
      ++pos_;
    }
    return DynkinType(std::move(components));
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }
  [[noreturn]] void fail_at(std::size_t offset, const std::string& message) const {
    throw ParseError(offset, message);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size()) fail(std::string("expected '") + c + "', found end of input");
    if (text_[pos_] != c) fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    ++pos_;
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  long parse_int(std::size_t* start = nullptr) {
    skip_ws();
    if (!at_digit()) {
      if (pos_ >= text_.size()) fail("expected an integer, found end of input");
      fail(std::string("expected an integer, found '") + text_[pos_] + "'");
    }
    if (start) *start = pos_;
    std::size_t begin = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (pos_ - begin >= 6) fail_at(begin, "integer too large");
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  int parse_weight() {
    std::size_t start = 0;
    long w = parse_int(&start);
    if (w < 2) fail_at(start, "weight " + std::to_string(w) + " is less than 2");
    return static_cast<int>(w);
  }

  // chain body after '[' has been consumed and the first weight already read.
  std::vector<int> parse_runs_after(int first) {
    std::vector<int> out;
    append_run(out, first);
    while (peek(',')) {
      ++pos_;
      append_run(out, parse_weight());
    }
    expect(']');
    return out;
  }

  void append_run(std::vector<int>& out, int weight) {
    if (peek('^')) {
      ++pos_;
      std::size_t start = 0;
      long reps = parse_int(&start);
      if (reps > 1000) fail_at(start, "repetition count too large");
      out.insert(out.end(), static_cast<std::size_t>(reps), weight);
    } else {
      out.push_back(weight);
    }
  }

  std::vector<int> parse_chain() {
    expect('[');
    return parse_runs_after(parse_weight());
  }

  void parse_item(std::vector<WeightedDualGraph>& components) {
    long multiplier = 1;
    if (at_digit()) {
      std::size_t start = 0;
      multiplier = parse_int(&start);
      if (multiplier < 2) fail_at(start, "multiplier must be at least 2");
    }
    expect('[');
    int first = parse_weight();
    WeightedDualGraph graph;
    if (peek(';')) {
      ++pos_;
      std::array<std::vector<int>, 3> branches;
      for (std::size_t b = 0; b < 3; ++b) {
        if (b > 0) {
          skip_ws();
          if (peek(']')) fail("a star needs exactly three branches, found " + std::to_string(b));
          expect(',');
        }
        branches[b] = parse_chain();
      }
      if (peek(',')) fail("a star needs exactly three branches, found more");
      expect(']');
      graph = WeightedDualGraph::star(first, branches);
    } else {
      graph = WeightedDualGraph::chain(parse_runs_after(first));
    }
    if (graph.empty()) return;
    for (long k = 0; k < multiplier; ++k) components.push_back(graph);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_runs(const std::vector<int>& weights) {
  std::string out = "[";
  std::size_t i = 0;
  bool first = true;
  while (i < weights.size()) {
    std::size_t j = i;
    while (j < weights.size() && weights[j] == weights[i]) ++j;
    std::size_t run = j - i;
    if (run >= 3) {
      if (!first) out += ",";
      out += std::to_string(weights[i]) + "^" + std::to_string(run);
      first = false;
    } else {
      for (std::size_t k = i; k < j; ++k) {
        if (!first) out += ",";
        out += std::to_string(weights[k]);
        first = false;
      }
    }
    i = j;
  }
  return out + "]";
}

}  // namespace

DynkinType parse_dynkin(std::string_view text) { return Parser(text).parse(); }

std::string format_graph(const WeightedDualGraph& g) {
  switch (g.shape()) {
    case Shape::Empty:
      return "[]";
    case Shape::Chain:
      return format_runs(weights_of(g, g.chain_order()));
    case Shape::Star: {
      std::string out = "[" + std::to_string(g.weight(g.center())) + ";";
      bool first = true;
      for (const auto& b : g.branches()) {
        if (!first) out += ",";
        out += format_runs(weights_of(g, b));
        first = false;
      }
      return out + "]";
    }
  }
  return "[]";
}

std::string format_dynkin(const DynkinType& t) {
  std::string out;
  const auto& cs = t.components();
  std::size_t i = 0;
  while (i < cs.size()) {
    std::size_t j = i;
    while (j < cs.size() && cs[j] == cs[i]) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += format_graph(cs[i]);
    i = j;
  }
  return out;
}

}  // namespace ldp
