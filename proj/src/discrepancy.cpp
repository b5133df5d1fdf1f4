#include "ldp/discrepancy.hpp"

#include "ldp/error.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>

namespace ldp {

// ---- solver --------------------------------------------------------------

DiscrepancySolver::DiscrepancySolver(const WeightedDualGraph& g) : graph_(g) {
  if (g.empty()) throw Error(ErrorKind::InvalidArgument, "graph must be nonempty");
  IntMatrix m = intersection_matrix(g);
  if (!is_negative_definite(m)) {
    throw Error(ErrorKind::NotNegativeDefinite, "graph " + format_graph(g) + " is not negative definite");
  }
  det_ = abs(determinant(m));
  RatMatrix inv = inverse(to_rational(m));
  const std::size_t n = g.size();
  adj_ = IntMatrix(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Rational v = -inv(r, c) * det_;
      adj_(r, c) = numerator(v);
    }
  scaled_e_.assign(n, Integer(0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) scaled_e_[r] += adj_(r, c) * (g.weight(c) - 2);
}

void DiscrepancySolver::check(const IncidenceVector& a) const {
  if (a.size() != graph_.size()) {
    throw Error(ErrorKind::IndexMismatch, "incidence vector has " + std::to_string(a.size()) +
                                              " entries but the graph has " + std::to_string(graph_.size()) +
                                              " vertices");
  }
  for (int x : a)
    if (x < 0) throw Error(ErrorKind::InvalidArgument, "incidence entries must be nonnegative");
}

std::vector<Rational> DiscrepancySolver::discrepancies() const {
  std::vector<Rational> e;
  for (const auto& x : scaled_e_) e.emplace_back(x, det_);
  return e;
}

DiscrepancyData DiscrepancySolver::pair_coefficients(const IncidenceVector& a) const {
  check(a);
  const std::size_t n = graph_.size();
  DiscrepancyData out;
  for (std::size_t r = 0; r < n; ++r) {
    Integer sd = 0;
    for (std::size_t c = 0; c < n; ++c)
      if (a[c] != 0) sd += adj_(r, c) * a[c];
    Rational d(sd, det_);
    Rational e(scaled_e_[r], det_);
    out.d.push_back(d);
    out.e.push_back(e);
    out.b.push_back(d + e);
    out.f.push_back(1 - (d + e));
  }
  return out;
}

Rational DiscrepancySolver::pairing(const IncidenceVector& a) const {
  check(a);
  const std::size_t n = graph_.size();
  Integer acc = 0;
  for (std::size_t r = 0; r < n; ++r) {
    if (a[r] == 0) continue;
    Integer row = scaled_e_[r];
    for (std::size_t c = 0; c < n; ++c)
      if (a[c] != 0) row += adj_(r, c) * a[c];
    acc += row * a[r];
  }
  return Rational(acc, det_);
}

std::vector<Rational> discrepancies(const WeightedDualGraph& g) { return DiscrepancySolver(g).discrepancies(); }

DiscrepancyData pair_coefficients(const WeightedDualGraph& g, const IncidenceVector& a) {
  return DiscrepancySolver(g).pair_coefficients(a);
}

Rational incidence_pairing(const WeightedDualGraph& g, const IncidenceVector& a) {
  return DiscrepancySolver(g).pairing(a);
}

Rational selfint_kc(const WeightedDualGraph& g, const IncidenceVector& a, int pa) {
  if (pa < 0) throw Error(ErrorKind::InvalidArgument, "arithmetic genus must be nonnegative");
  Rational base(2 * (pa - 1));
  if (g.empty()) {
    if (!a.empty()) throw Error(ErrorKind::IndexMismatch, "empty graph takes an empty incidence vector");
    return base;
  }
  return base + incidence_pairing(g, a);
}

// ---- classification ------------------------------------------------------

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::LogResolution: return "LogResolution";
    case Verdict::AlmostLC_a: return "AlmostLC_a";
    case Verdict::AlmostLC_b: return "AlmostLC_b";
    case Verdict::AlmostLC_c: return "AlmostLC_c";
    case Verdict::Rejected: return "Rejected";
  }
  return "Unknown";
}

namespace {

std::vector<std::size_t> support_of(const IncidenceVector& a) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s.push_back(i);
  return s;
}

// Position of a vertex in the star: branch index and distance from the center.
struct BranchPos {
  std::size_t branch = 0;
  std::size_t pos = 0;
};

std::optional<BranchPos> locate(const std::vector<std::vector<std::size_t>>& branches, std::size_t v) {
  for (std::size_t b = 0; b < branches.size(); ++b)
    for (std::size_t p = 0; p < branches[b].size(); ++p)
      if (branches[b][p] == v) return BranchPos{b, p};
  return std::nullopt;
}

bool is_chain_end(const WeightedDualGraph& g, std::size_t v) { return g.degree(v) <= 1; }

}  // namespace

std::string support_case(const WeightedDualGraph& g, const IncidenceVector& a) {
  auto s = support_of(a);
  if (s.empty()) return "none";
  if (g.shape() == Shape::Chain) {
    if (s.size() == 1) return "1a";
    if (s.size() == 2) return "1b";
    return "1c";
  }
  std::size_t c = g.center();
  bool has_center = std::find(s.begin(), s.end(), c) != s.end();
  if (s.size() == 1) return has_center ? "2a" : "2b";
  if (s.size() == 2) {
    if (has_center) return "2e";
    auto br = g.branches();
    auto p = locate(br, s[0]);
    auto q = locate(br, s[1]);
    return p->branch == q->branch ? "2d" : "2c";
  }
  return "2f";
}

IncidenceClassification classify_incidence(const WeightedDualGraph& g, const IncidenceVector& a) {
  return classify_incidence(DiscrepancySolver(g), a);
}

IncidenceClassification classify_incidence(const DiscrepancySolver& solver, const IncidenceVector& a) {
  const WeightedDualGraph& g = solver.graph();
  IncidenceClassification out;
  out.pairing = solver.pairing(a);
  out.witness = support_case(g, a);
  auto s = support_of(a);
  if (s.empty()) {
    out.verdict = Verdict::LogResolution;
    return out;
  }
  if (out.pairing > 2) {
    out.verdict = Verdict::Rejected;
    return out;
  }
  if (s.size() == 1 && a[s[0]] == 1) {
    out.verdict = Verdict::LogResolution;
    return out;
  }
  if (s.size() == 1 && a[s[0]] == 2 && g.size() == 1) {
    out.verdict = Verdict::AlmostLC_a;
    out.alternatives = {Verdict::AlmostLC_b, Verdict::LogResolution};
    return out;
  }
  if (s.size() == 2 && g.shape() == Shape::Chain && a[s[0]] == 1 && a[s[1]] == 1 && is_chain_end(g, s[0]) &&
      is_chain_end(g, s[1])) {
    if (g.size() == 2) {
      out.verdict = Verdict::AlmostLC_c;
      out.alternatives = {Verdict::LogResolution};
    } else {
      out.verdict = Verdict::LogResolution;
    }
    return out;
  }
  throw std::logic_error("classify_incidence: <a,b> <= 2 on a support outside the admissible patterns");
}

// ---- closed forms --------------------------------------------------------

namespace {

// |det| of principal submatrices, memoized by vertex subset.
class DetCache {
 public:
  explicit DetCache(const WeightedDualGraph& g) : m_(intersection_matrix(g)) {}

  Rational operator()(const std::vector<std::size_t>& idx) const {
    if (idx.empty()) return 1;
    std::uint64_t mask = 0;
    for (auto i : idx) mask |= std::uint64_t{1} << i;
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    std::vector<std::size_t> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    Rational value(abs(determinant(m_.principal(sorted))));
    cache_.emplace(mask, value);
    return value;
  }

 private:
  IntMatrix m_;
  mutable std::unordered_map<std::uint64_t, Rational> cache_;
};

std::vector<std::size_t> slice(const std::vector<std::size_t>& v, std::size_t from, std::size_t to) {
  if (from >= to) return {};
  return std::vector<std::size_t>(v.begin() + static_cast<long>(from), v.begin() + static_cast<long>(to));
}

std::vector<std::size_t> join(std::initializer_list<std::vector<std::size_t>> parts) {
  std::vector<std::size_t> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<std::size_t> all_but(std::size_t n, const std::vector<std::size_t>& removed) {
  std::vector<bool> drop(n, false);
  for (auto r : removed) drop[r] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!drop[i]) out.push_back(i);
  return out;
}

// Connected components of g - v, each listed starting at the neighbor of v.
std::vector<std::vector<std::size_t>> arms(const WeightedDualGraph& g, std::size_t v) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start : g.neighbors(v)) {
    std::vector<std::size_t> path{start};
    std::size_t prev = v;
    std::size_t cur = start;
    while (true) {
      std::size_t next = cur;
      for (std::size_t w : g.neighbors(cur))
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

void chain_forms(const WeightedDualGraph& g, const IncidenceVector& a, std::size_t vertex,
                 const std::vector<std::size_t>& s, const DetCache& D, std::vector<ClosedFormValue>& out) {
  const auto order = g.chain_order();
  std::vector<std::size_t> pos(g.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  const Rational total = D(order);
  const std::size_t p = pos[vertex];

  if (s.size() == 1 && s[0] == vertex) {
    auto g1 = slice(order, 0, p);
    auto g2 = slice(order, p + 1, order.size());
    Rational d1 = D(g1), d2 = D(g2);
    out.push_back({"1a", d1 * d2 / total * (1 / d1 + 1 / d2 - a[vertex])});
  }

  if (s.size() == 2 && a[s[0]] == 1 && a[s[1]] == 1 && (s[0] == vertex || s[1] == vertex)) {
    std::size_t other = s[0] == vertex ? s[1] : s[0];
    std::size_t q = pos[other];
    std::vector<std::size_t> g1, g2, g3;
    if (p < q) {
      g1 = slice(order, 0, p);
      g2 = slice(order, p + 1, q);
      g3 = slice(order, q + 1, order.size());
    } else {
      g1 = slice(order, p + 1, order.size());
      g2 = slice(order, q + 1, p);
      g3 = slice(order, 0, q);
    }
    Rational d1 = D(g1), d3 = D(g3), d23 = D(join({g2, {other}, g3}));
    out.push_back({"1b", d1 * d23 / total * ((1 - d1) / d1 + (1 - d3) / d23)});
  }
}

void star_forms(const WeightedDualGraph& g, const IncidenceVector& a, std::size_t vertex,
                const std::vector<std::size_t>& s, const DetCache& D, std::vector<ClosedFormValue>& out) {
  const std::size_t c = g.center();
  const auto br = g.branches();
  const std::size_t n = g.size();
  const Rational total = D(all_but(n, {}));
  auto has = [&](std::size_t v) { return std::find(s.begin(), s.end(), v) != s.end(); };

  if (s.size() == 1 && s[0] == c && vertex == c) {
    Rational d1 = D(br[0]), d2 = D(br[1]), d3 = D(br[2]);
    out.push_back({"2a", d1 * d2 * d3 / total * (1 / d1 + 1 / d2 + 1 / d3 - (1 + a[c]))});
  }

  auto vp = vertex == c ? std::nullopt : locate(br, vertex);

  if (s.size() == 1 && s[0] == vertex && vp) {
    const auto& b1 = br[vp->branch];
    auto g11 = slice(b1, vp->pos + 1, b1.size());
    auto gp = all_but(n, join({g11, {vertex}}));
    Rational d2 = D(br[(vp->branch + 1) % 3]), d3 = D(br[(vp->branch + 2) % 3]);
    Rational d11 = D(g11), dp = D(gp);
    out.push_back({"2b", d11 * dp / total * ((1 - (d3 - 1) * (d2 - 1)) / dp + 1 / d11 - a[vertex])});
  }

  if (s.size() == 2 && a[s[0]] == 1 && a[s[1]] == 1 && has(vertex)) {
    std::size_t other = s[0] == vertex ? s[1] : s[0];
    auto op = other == c ? std::nullopt : locate(br, other);

    if (vp && op && vp->branch != op->branch) {
      const auto& b1 = br[vp->branch];
      const auto& b2 = br[op->branch];
      const auto& b3 = br[3 - vp->branch - op->branch];
      auto g11 = slice(b1, vp->pos + 1, b1.size());
      auto g21 = slice(b2, op->pos + 1, b2.size());
      auto gp = all_but(n, join({g11, {vertex}}));
      Rational d2 = D(b2), d3 = D(b3), d11 = D(g11), d21 = D(g21), dp = D(gp);
      out.push_back({"2c", dp * d11 / total *
                               ((1 - (d2 - 1) * (d3 - 1)) / dp + (1 - d11) / d11 - d21 * d3 / dp)});
    }

    if (vp && op && vp->branch == op->branch) {
      const auto& b1 = br[vp->branch];
      Rational d2 = D(br[(vp->branch + 1) % 3]), d3 = D(br[(vp->branch + 2) % 3]);
      Rational core = 1 - (d2 - 1) * (d3 - 1);
      // v1 is the outer support vertex, v2 the inner one.
      const BranchPos vb = vp.value(), ob = op.value();
      bool vertex_outer = vb.pos > ob.pos;
      std::size_t v1 = vertex_outer ? vertex : other;
      std::size_t v2 = vertex_outer ? other : vertex;
      std::size_t p1 = std::max(vb.pos, ob.pos);
      std::size_t p2 = std::min(vb.pos, ob.pos);
      auto g11 = slice(b1, p1 + 1, b1.size());
      auto g12 = slice(b1, p2 + 1, p1);
      auto ga = all_but(n, join({g11, {v1}}));
      auto gb = all_but(n, join({g11, {v1}, g12, {v2}}));
      auto gc = join({g11, {v1}, g12});
      Rational d11 = D(g11), da = D(ga), db = D(gb), dc = D(gc);
      if (vertex == v1) {
        out.push_back({"2d", d11 * da / total * (core / da + (1 - d11) / d11 - db / da)});
      } else {
        out.push_back({"2d", db * dc / total * (core / db + (1 - dc) / dc - d11 / dc)});
      }
    }

    if ((vp && other == c) || (vertex == c && op)) {
      BranchPos bp = vp ? *vp : *op;
      std::size_t v1 = vp ? vertex : other;
      const auto& b1 = br[bp.branch];
      auto g11 = slice(b1, bp.pos + 1, b1.size());
      Rational d1 = D(b1), d2 = D(br[(bp.branch + 1) % 3]), d3 = D(br[(bp.branch + 2) % 3]);
      Rational d11 = D(g11);
      if (vertex == v1) {
        auto gp = all_but(n, join({g11, {v1}}));
        Rational dp = D(gp);
        out.push_back({"2e", dp * d11 / total *
                                 ((1 - (d2 - 1) * (d3 - 1)) / dp + (1 - d11) / d11 - d2 * d3 / dp)});
      } else {
        out.push_back({"2e", d1 * d2 * d3 / total * (1 / d1 + 1 / d2 + 1 / d3 - 2 - d11 / d1)});
      }
    }
  }
}

// Log discrepancy of a vertex v0 when a single curve meets, with a = 1, the
// far end of one arm of v0 (or v0 itself when that arm is empty).
void central_form(const WeightedDualGraph& g, const IncidenceVector& a, std::size_t vertex,
                  const std::vector<std::size_t>& s, const DetCache& D, std::vector<ClosedFormValue>& out) {
  if (s.size() != 1 || a[s[0]] != 1) return;
  auto parts = arms(g, vertex);
  // Every arm must be a chain attached to `vertex` by one of its ends.
  for (const auto& p : parts)
    for (std::size_t v : p)
      if (g.degree(v) > 2) return;
  std::vector<std::size_t> g1;
  std::vector<std::vector<std::size_t>> rest;
  for (auto& p : parts) {
    if (s[0] != vertex && p.back() == s[0]) {
      g1 = p;
    } else {
      rest.push_back(p);
    }
  }
  if (s[0] != vertex && g1.empty()) return;
  if (rest.size() > 2) return;
  while (rest.size() < 2) rest.emplace_back();
  const Rational total = D(all_but(g.size(), {}));
  Rational d1 = D(g1), d2 = D(rest[0]), d3 = D(rest[1]);
  out.push_back({"central", d1 * d2 * d3 / total * (1 / d2 + 1 / d3 - 1)});
}

}  // namespace

struct ClosedFormEvaluator::Impl {
  explicit Impl(const WeightedDualGraph& graph) : g(graph), dets(graph) {}
  WeightedDualGraph g;
  DetCache dets;
};

ClosedFormEvaluator::ClosedFormEvaluator(const WeightedDualGraph& g) {
  if (g.empty()) throw Error(ErrorKind::InvalidArgument, "graph must be nonempty");
  if (g.size() > 64) throw Error(ErrorKind::InvalidArgument, "graph too large for closed forms");
  if (!is_negative_definite(g)) {
    throw Error(ErrorKind::NotNegativeDefinite, "graph " + format_graph(g) + " is not negative definite");
  }
  impl_ = std::make_shared<Impl>(g);
}

std::vector<ClosedFormValue> ClosedFormEvaluator::matches(const IncidenceVector& a, std::size_t vertex) const {
  const auto& g = impl_->g;
  if (a.size() != g.size()) throw Error(ErrorKind::IndexMismatch, "incidence vector length differs from graph size");
  if (vertex >= g.size()) throw Error(ErrorKind::IndexMismatch, "vertex index out of range");
  auto s = support_of(a);
  std::vector<ClosedFormValue> out;
  if (s.empty()) return out;
  if (g.shape() == Shape::Chain) {
    chain_forms(g, a, vertex, s, impl_->dets, out);
  } else {
    star_forms(g, a, vertex, s, impl_->dets, out);
  }
  central_form(g, a, vertex, s, impl_->dets, out);
  return out;
}

std::vector<ClosedFormValue> closed_form_matches(const WeightedDualGraph& g, const IncidenceVector& a,
                                                 std::size_t vertex) {
  return ClosedFormEvaluator(g).matches(a, vertex);
}

Rational closed_form_f(const WeightedDualGraph& g, const IncidenceVector& a, std::size_t vertex) {
  auto matches = closed_form_matches(g, a, vertex);
  if (matches.empty()) {
    throw Error(ErrorKind::UnsupportedConfiguration,
                "no closed form applies to " + format_graph(g) + " at vertex " + std::to_string(vertex));
  }
  return matches.front().value;
}

// ---- exhaustive sweep ----------------------------------------------------

bool admissible_pattern(const WeightedDualGraph& g, const IncidenceVector& a) {
  auto s = support_of(a);
  if (s.size() == 1) return a[s[0]] == 1 || (a[s[0]] == 2 && g.size() == 1);
  if (s.size() == 2) {
    return g.shape() == Shape::Chain && a[s[0]] == 1 && a[s[1]] == 1 && is_chain_end(g, s[0]) &&
           is_chain_end(g, s[1]);
  }
  return false;
}

namespace {

void incidence_vectors(std::size_t n, int max_sum, std::vector<IncidenceVector>& out) {
  IncidenceVector a(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == n) {
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      a[i] = v;
      self(self, i + 1, remaining - v);
    }
    a[i] = 0;
  };
  rec(rec, 0, max_sum);
}

void note(IncidenceSweepReport& r, const std::string& what) {
  if (r.failures.size() < 20) r.failures.push_back(what);
}

std::string describe(const WeightedDualGraph& g, const IncidenceVector& a) {
  std::string out = format_graph(g) + " a=(";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + std::to_string(a[i]);
  return out + ")";
}

}  // namespace

IncidenceSweepReport incidence_sweep(std::size_t max_vertices, int max_weight, int max_a) {
  IncidenceSweepReport report;
  for (const auto& g : enumerate_graphs(max_vertices, max_weight)) {
    ++report.graphs;
    DiscrepancySolver solver(g);
    ClosedFormEvaluator closed(g);
    std::vector<IncidenceVector> vectors;
    incidence_vectors(g.size(), max_a, vectors);
    std::map<IncidenceVector, Rational> pairings;
    for (const auto& a : vectors) pairings.emplace(a, solver.pairing(a));

    for (const auto& a : vectors) {
      if (support_of(a).empty()) continue;
      ++report.vectors;
      const Rational& ab = pairings.at(a);
      bool small = ab <= 2;
      if (small) ++report.admissible_hits;
      if (small && !admissible_pattern(g, a)) {
        ++report.pattern_violations;
        note(report, "pattern: " + describe(g, a) + " <a,b>=" + to_string(ab));
      }
      try {
        bool accepted = classify_incidence(solver, a).verdict != Verdict::Rejected;
        if (accepted != small) {
          ++report.classifier_disagreements;
          note(report, "classifier: " + describe(g, a));
        }
      } catch (const std::logic_error&) {
        ++report.classifier_disagreements;
        note(report, "classifier threw: " + describe(g, a));
      }
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        IncidenceVector lower = a;
        --lower[i];
        if (!(pairings.at(lower) < ab)) {
          ++report.monotonicity_violations;
          note(report, "monotonicity: " + describe(g, a));
        }
      }
      if (support_of(a).size() > 2) continue;
      auto data = solver.pair_coefficients(a);
      for (std::size_t v = 0; v < g.size(); ++v) {
        for (const auto& cf : closed.matches(a, v)) {
          ++report.closed_form_checks;
          ++report.closed_form_counts[cf.label];
          if (cf.value != data.f[v]) {
            ++report.closed_form_mismatches;
            note(report, "closed form " + cf.label + ": " + describe(g, a) + " vertex " + std::to_string(v) +
                             " got " + to_string(cf.value) + " want " + to_string(data.f[v]));
          }
        }
      }
    }
  }
  return report;
}

// ---- thresholds and global invariants ------------------------------------

LctResult lct_min_resolution(const WeightedDualGraph& g, const IncidenceVector& a) {
  DiscrepancySolver solver(g);
  auto data = solver.pair_coefficients(a);
  if (support_of(a).empty()) throw Error(ErrorKind::ZeroIncidence, "lct needs a nonzero incidence vector");
  std::optional<Rational> best;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (data.d[i] <= 0) continue;
    Rational c = (1 - data.e[i]) / data.d[i];
    if (!best || c < *best) best = c;
  }
  LctResult out;
  out.value = *best;
  out.exact = classify_incidence(g, a).verdict == Verdict::LogResolution;
  return out;
}

Integer cartier_index(const DynkinType& t) {
  Integer r = 1;
  for (const auto& c : t.components())
    for (const auto& e : discrepancies(c)) r = lcm(r, denominator(e));
  return r;
}

Rational anticanonical_selfint(const DynkinType& t) {
  Rational k2(9 - static_cast<long>(t.vertex_count()));
  for (const auto& c : t.components()) {
    auto e = discrepancies(c);
    for (std::size_t i = 0; i < c.size(); ++i) k2 += e[i] * (c.weight(i) - 2);
  }
  return k2;
}

HuntChoice select_hunt_divisor(const DynkinType& t) {
  std::optional<HuntChoice> best;
  bool any_positive = false;
  const auto& comps = t.components();
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const auto& g = comps[ci];
    auto e = discrepancies(g);
    for (const auto& x : e)
      if (x > 0) any_positive = true;
    std::vector<std::size_t> candidates;
    if (g.shape() == Shape::Star) {
      candidates.push_back(g.center());
    } else {
      for (std::size_t v : g.chain_order())
        if (g.weight(v) != 2) candidates.push_back(v);
    }
    for (std::size_t v : candidates)
      if (!best || e[v] > best->coefficient) best = HuntChoice{ci, v, e[v]};
  }
  if (!any_positive || !best) throw Error(ErrorKind::AllDuVal, "every singularity is Du Val; no hunt divisor");
  return *best;
}

}  // namespace ldp
