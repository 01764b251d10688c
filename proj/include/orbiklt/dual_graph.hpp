#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orbiklt/exact_core.hpp"
#include "orbiklt/rational.hpp"

namespace orbiklt {

/// Exceptional curve of a resolution: a smooth rational curve with
/// self-intersection -e.
struct WhiteVertex {
  std::int64_t e = 2;
};

/// Strict transform of a boundary component (a "black dot") meeting the
/// white vertex `vertex` transversally in `intersection` points.
struct BranchAttachment {
  std::size_t vertex = 0;
  Multiplicity mult{2};
  std::int64_t intersection = 1;
};

using Edge = std::pair<std::size_t, std::size_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Extended dual graph of a resolution. Validated on construction: the
/// white graph is nonempty and connected, has no self-loops, every e >= 1,
/// and every branch has multiplicity >= 2 and intersection >= 1.
/// Parallel edges are allowed.
class DualGraph {
 public:
  DualGraph(std::vector<WhiteVertex> vertices, std::vector<Edge> edges,
            std::vector<BranchAttachment> branches = {});

  const std::vector<WhiteVertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<BranchAttachment>& branches() const { return branches_; }
  std::size_t size() const { return vertices_.size(); }

  /// Convenience: a chain with edges (0,1), (1,2), ...
  static DualGraph chain(const std::vector<std::int64_t>& e, std::vector<BranchAttachment> branches = {});

 private:
  std::vector<WhiteVertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<BranchAttachment> branches_;
};

struct DiscrepancyResult {
  std::vector<Rational> a;  // discrepancies, indexed like the vertices
  std::vector<Rational> d;  // adjunction degrees (K + boundary) . E_j
  bool is_klt = false;
};

enum class GraphClass { ChainTwoBlackEnds, ForkHalfWeights, ChainOneBlackEnd, DuValDynkin, Unrecognized };

std::string to_string(GraphClass c);

/// M_jj = -e_j, M_ij = number of edges between i and j.
IntMatrix intersection_matrix(const DualGraph& g);

/// True iff every leading principal minor of -M is positive (exact).
bool is_negative_definite(const DualGraph& g);

/// d_j = (e_j - 2) + sum over branches at j of (1 - 1/m) * intersection.
/// Assumes rational white curves and transversal crossings.
std::vector<Rational> adjunction_degrees(const DualGraph& g);

/// Solves M a = d exactly. klt iff every a_i > -1 (a_i = -1 is not klt).
/// Throws NotNegativeDefinite when the form is not negative definite.
DiscrepancyResult solve_discrepancies(const DualGraph& g);

/// Matches the graph against the known klt shapes with nonzero boundary
/// (chain with black ends, fork of (-2)-curves with one black end, chain of
/// (-2)-curves with one black end) and the Du Val Dynkin diagrams. Graphs
/// with parallel edges are always Unrecognized.
GraphClass classify_graph(const DualGraph& g);

/// (N, q) of the cyclic quotient singularity of a ChainTwoBlackEnds graph.
/// The m1 end is the chain end with the smaller vertex index; for a single
/// vertex it is the first listed branch. Throws WrongClass otherwise.
CyclicType cyclic_invariants(const DualGraph& g);

/// N * m1 * m2 for ChainTwoBlackEnds graphs. Throws Unsupported for every
/// other class.
std::int64_t local_group_order(const DualGraph& g);

/// Vertex order of a chain, starting at the end with the smaller index.
/// Empty if the white graph is not a simple path.
std::vector<std::size_t> chain_order(const DualGraph& g);

}  // namespace orbiklt
