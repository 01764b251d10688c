#include "orbiklt/dual_graph.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "orbiklt/errors.hpp"

namespace orbiklt {

namespace {

std::vector<std::vector<std::size_t>> adjacency(const DualGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.size());
  for (const auto& [i, j] : g.edges()) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  return adj;
}

bool has_parallel_edges(const DualGraph& g) {
  std::set<Edge> seen;
  for (auto [i, j] : g.edges()) {
    if (i > j) std::swap(i, j);
    if (!seen.insert({i, j}).second) return true;
  }
  return false;
}

bool is_simple_tree(const DualGraph& g) {
  return !has_parallel_edges(g) && g.edges().size() + 1 == g.size();
}

bool all_minus_two(const DualGraph& g) {
  return std::all_of(g.vertices().begin(), g.vertices().end(), [](const WhiteVertex& v) { return v.e == 2; });
}

// Arms of a tree with exactly one vertex of degree 3 and none higher.
struct Fork {
  std::size_t center = 0;
  // Each arm lists its vertices outward from the center.
  std::vector<std::vector<std::size_t>> arms;
};

std::optional<Fork> find_fork(const DualGraph& g) {
  const auto adj = adjacency(g);
  std::optional<std::size_t> center;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (adj[v].size() > 3) return std::nullopt;
    if (adj[v].size() == 3) {
      if (center) return std::nullopt;
      center = v;
    }
  }
  if (!center) return std::nullopt;
  Fork fork{*center, {}};
  for (std::size_t start : adj[*center]) {
    std::vector<std::size_t> arm{start};
    std::size_t prev = *center;
    std::size_t cur = start;
    while (adj[cur].size() == 2) {
      const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      arm.push_back(cur);
    }
    fork.arms.push_back(std::move(arm));
  }
  std::sort(fork.arms.begin(), fork.arms.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return fork;
}

bool is_dynkin_tree(const DualGraph& g) {
  if (!chain_order(g).empty()) return true;  // A_n
  const auto fork = find_fork(g);
  if (!fork) return false;
  const std::size_t a = fork->arms[0].size();
  const std::size_t b = fork->arms[1].size();
  const std::size_t c = fork->arms[2].size();
  if (a == 1 && b == 1) return true;              // D_n
  return a == 1 && b == 2 && c >= 2 && c <= 4;    // E_6, E_7, E_8
}

bool is_fork_half_weights(const DualGraph& g) {
  const auto fork = find_fork(g);
  if (!fork) return false;
  if (fork->arms[0].size() != 1 || fork->arms[1].size() != 1) return false;
  const std::size_t at = g.branches().front().vertex;
  // The boundary meets the far end of the long arm; for D_4 every arm is
  // the long arm.
  for (const auto& arm : fork->arms) {
    if (arm.size() == fork->arms[2].size() && arm.back() == at) return true;
  }
  return false;
}

struct OrientedChain {
  std::vector<std::size_t> order;  // starts at the m1 end
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
};

// Orientation and end multiplicities of a ChainTwoBlackEnds candidate.
std::optional<OrientedChain> two_black_ends(const DualGraph& g) {
  if (has_parallel_edges(g) || g.branches().size() != 2) return std::nullopt;
  const auto order = chain_order(g);
  if (order.empty()) return std::nullopt;
  const auto& br = g.branches();
  if (br[0].intersection != 1 || br[1].intersection != 1) return std::nullopt;
  for (const auto& v : g.vertices()) {
    if (v.e < 2) return std::nullopt;
  }
  OrientedChain oc{order, br[0].mult.value(), br[1].mult.value()};
  if (order.size() == 1) return br[0].vertex == 0 && br[1].vertex == 0 ? std::optional(oc) : std::nullopt;

  const std::size_t first = order.front();
  const std::size_t last = order.back();
  if (br[0].vertex == first && br[1].vertex == last) {
    // already oriented
  } else if (br[0].vertex == last && br[1].vertex == first) {
    std::swap(oc.m1, oc.m2);
  } else {
    return std::nullopt;
  }
  for (std::size_t k = 1; k + 1 < order.size(); ++k) {
    if (g.vertices()[order[k]].e != 2) return std::nullopt;
  }
  const std::int64_t e1 = g.vertices()[first].e;
  const std::int64_t en = g.vertices()[last].e;
  if ((e1 - 1) * oc.m1 != (en - 1) * oc.m2) return std::nullopt;
  return oc;
}

}  // namespace

DualGraph::DualGraph(std::vector<WhiteVertex> vertices, std::vector<Edge> edges,
                     std::vector<BranchAttachment> branches)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), branches_(std::move(branches)) {
  if (vertices_.empty()) throw InvalidArgument("dual graph needs at least one white vertex");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].e < 1) {
      throw InvalidArgument("vertex " + std::to_string(i) + ": e must be >= 1, got " + std::to_string(vertices_[i].e));
    }
  }
  for (const auto& [i, j] : edges_) {
    if (i >= vertices_.size() || j >= vertices_.size()) {
      throw InvalidArgument("edge (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }
    if (i == j) throw InvalidArgument("self-loop on vertex " + std::to_string(i));
  }
  for (std::size_t k = 0; k < branches_.size(); ++k) {
    const auto& b = branches_[k];
    if (b.vertex >= vertices_.size()) throw InvalidArgument("branch " + std::to_string(k) + ": vertex out of range");
    if (b.mult.value() < 2) throw InvalidArgument("branch " + std::to_string(k) + ": multiplicity must be >= 2");
    if (b.intersection < 1) throw InvalidArgument("branch " + std::to_string(k) + ": intersection must be >= 1");
  }
  // connectivity
  const auto adj = adjacency(*this);
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertices_.size()) throw InvalidArgument("white graph is not connected");
}

DualGraph DualGraph::chain(const std::vector<std::int64_t>& e, std::vector<BranchAttachment> branches) {
  std::vector<WhiteVertex> vs;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < e.size(); ++i) {
    vs.push_back({e[i]});
    if (i) es.emplace_back(i - 1, i);
  }
  return DualGraph(std::move(vs), std::move(es), std::move(branches));
}

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::ChainTwoBlackEnds: return "ChainTwoBlackEnds";
    case GraphClass::ForkHalfWeights: return "ForkHalfWeights";
    case GraphClass::ChainOneBlackEnd: return "ChainOneBlackEnd";
    case GraphClass::DuValDynkin: return "DuValDynkin";
    case GraphClass::Unrecognized: return "Unrecognized";
  }
  return "Unrecognized";
}

IntMatrix intersection_matrix(const DualGraph& g) {
  const std::size_t n = g.size();
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = -g.vertices()[i].e;
  for (const auto& [i, j] : g.edges()) {
    ++m[i][j];
    ++m[j][i];
  }
  return m;
}

bool is_negative_definite(const DualGraph& g) {
  // Gaussian elimination on -M without pivoting: the k-th pivot is the ratio
  // of consecutive leading minors, so all minors are positive iff all
  // pivots are.
  const auto m = intersection_matrix(g);
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(-m[i][j]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].sign() <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

std::vector<Rational> adjunction_degrees(const DualGraph& g) {
  std::vector<Rational> d;
  d.reserve(g.size());
  for (const auto& v : g.vertices()) d.emplace_back(v.e - 2);
  for (const auto& b : g.branches()) d[b.vertex] += coeff(b.mult) * Rational(b.intersection);
  return d;
}

DiscrepancyResult solve_discrepancies(const DualGraph& g) {
  if (!is_negative_definite(g)) {
    throw NotNegativeDefinite("intersection form is not negative definite; not a contractible configuration");
  }
  const auto m = intersection_matrix(g);
  const std::size_t n = m.size();
  DiscrepancyResult res;
  res.d = adjunction_degrees(g);

  // Augmented system [M | d]. Negative definiteness keeps every leading
  // pivot nonzero, so no row exchanges are needed.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
    a[i][n] = res.d[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  res.a.assign(n, Rational(0));
  for (std::size_t k = n; k-- > 0;) {
    Rational s = a[k][n];
    for (std::size_t j = k + 1; j < n; ++j) s -= a[k][j] * res.a[j];
    res.a[k] = s / a[k][k];
  }
  const Rational minus_one(-1);
  res.is_klt = std::all_of(res.a.begin(), res.a.end(), [&](const Rational& x) { return x > minus_one; });
  return res;
}

std::vector<std::size_t> chain_order(const DualGraph& g) {
  if (!is_simple_tree(g)) return {};
  if (g.size() == 1) return {0};
  const auto adj = adjacency(g);
  std::vector<std::size_t> ends;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (adj[v].size() > 2) return {};
    if (adj[v].size() == 1) ends.push_back(v);
  }
  if (ends.size() != 2) return {};
  std::vector<std::size_t> order{ends.front()};
  std::size_t prev = ends.front();
  std::size_t cur = adj[prev][0];
  order.push_back(cur);
  while (adj[cur].size() == 2) {
    const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  return order;
}

GraphClass classify_graph(const DualGraph& g) {
  if (!is_simple_tree(g)) return GraphClass::Unrecognized;
  for (const auto& b : g.branches()) {
    if (b.intersection != 1) return GraphClass::Unrecognized;
  }
  switch (g.branches().size()) {
    case 0:
      return all_minus_two(g) && is_dynkin_tree(g) ? GraphClass::DuValDynkin : GraphClass::Unrecognized;
    case 1: {
      if (!all_minus_two(g)) return GraphClass::Unrecognized;
      const auto order = chain_order(g);
      const std::size_t at = g.branches().front().vertex;
      if (!order.empty()) {
        return at == order.front() || at == order.back() ? GraphClass::ChainOneBlackEnd : GraphClass::Unrecognized;
      }
      return is_fork_half_weights(g) ? GraphClass::ForkHalfWeights : GraphClass::Unrecognized;
    }
    case 2:
      return two_black_ends(g) ? GraphClass::ChainTwoBlackEnds : GraphClass::Unrecognized;
    default:
      return GraphClass::Unrecognized;
  }
}

CyclicType cyclic_invariants(const DualGraph& g) {
  const auto oc = two_black_ends(g);
  if (!oc) throw WrongClass("cyclic invariants need a ChainTwoBlackEnds graph, got " + to_string(classify_graph(g)));
  const auto n = static_cast<std::int64_t>(oc->order.size());
  const std::int64_t e1 = g.vertices()[oc->order.front()].e;
  const std::int64_t en = g.vertices()[oc->order.back()].e;
  if (n == 1) return hj_evaluate(HjChain({e1}));  // the closed formula degenerates on one vertex
  return {(n - 1) * (e1 - 1) * (en - 1) + (e1 - 1) + (en - 1), (n - 1) * (e1 - 1) + 1};
}

std::int64_t local_group_order(const DualGraph& g) {
  const auto oc = two_black_ends(g);
  if (!oc) {
    throw Unsupported("no closed local group order for class " + to_string(classify_graph(g)));
  }
  return cyclic_invariants(g).n * oc->m1 * oc->m2;
}

}  // namespace orbiklt
