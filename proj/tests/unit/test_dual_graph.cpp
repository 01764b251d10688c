#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orbiklt/dual_graph.hpp"
#include "orbiklt/errors.hpp"

using namespace orbiklt;

namespace {

std::vector<std::string> strs(const std::vector<Rational>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

BranchAttachment br(std::size_t v, std::int64_t m, std::int64_t k = 1) { return {v, Multiplicity(m), k}; }

oracle::Matrix to_oracle(const IntMatrix& m) {
  oracle::Matrix out;
  for (const auto& row : m) {
    out.emplace_back();
    for (auto x : row) out.back().emplace_back(static_cast<long>(x));
  }
  return out;
}

}  // namespace

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(DualGraph({}, {}, {}), InvalidArgument);
  CHECK_THROWS_AS(DualGraph({{2}, {2}}, {}, {}), InvalidArgument);
  CHECK_THROWS_AS(DualGraph({{2}}, {{0, 0}}, {}), InvalidArgument);
  CHECK_THROWS_AS(DualGraph({{2}}, {{0, 1}}, {}), InvalidArgument);
  CHECK_THROWS_AS(DualGraph({{0}}, {}, {}), InvalidArgument);
  CHECK_THROWS_AS(DualGraph({{2}}, {}, {br(0, 1)}), InvalidArgument);
  CHECK_THROWS_AS(DualGraph({{2}}, {}, {br(3, 2)}), InvalidArgument);
}

TEST_CASE("intersection matrix") {
  const auto g = DualGraph::chain({3, 2, 2});
  CHECK(intersection_matrix(g) == IntMatrix{{-3, 1, 0}, {1, -2, 1}, {0, 1, -2}});
  const DualGraph dbl({{2}, {2}}, {{0, 1}, {0, 1}}, {});
  CHECK(intersection_matrix(dbl) == IntMatrix{{-2, 2}, {2, -2}});
  CHECK_FALSE(is_negative_definite(dbl));
}

TEST_CASE("solve_discrepancies examples") {
  const auto a1 = solve_discrepancies(DualGraph::chain({2}));
  CHECK(strs(a1.a) == std::vector<std::string>{"0"});
  CHECK(a1.is_klt);

  const auto c = solve_discrepancies(DualGraph::chain({3, 2, 2}, {br(0, 2), br(2, 4)}));
  CHECK(strs(c.a) == std::vector<std::string>{"-3/4", "-3/4", "-3/4"});
  CHECK(strs(c.d) == std::vector<std::string>{"3/2", "0", "3/4"});
  CHECK(c.is_klt);

  const auto f2 = solve_discrepancies(DualGraph::chain({4, 1, 2}, {br(0, 2), br(1, 4)}));
  CHECK(strs(f2.a) == std::vector<std::string>{"-1", "-3/2", "-3/4"});
  CHECK(strs(f2.d) == std::vector<std::string>{"5/2", "-1/4", "0"});
  CHECK_FALSE(f2.is_klt);

  CHECK_THROWS_AS(solve_discrepancies(DualGraph::chain({1, 1})), NotNegativeDefinite);
  // A single (-1)-curve contracts to a smooth point.
  CHECK(strs(solve_discrepancies(DualGraph::chain({1})).a) == std::vector<std::string>{"1"});
}

TEST_CASE("branch intersection numbers scale the boundary term") {
  const auto g = DualGraph::chain({3}, {br(0, 2, 2)});
  const auto r = solve_discrepancies(g);
  // d = (3 - 2) + 2 * 1/2 = 2, a = -2/3.
  CHECK(strs(r.d) == std::vector<std::string>{"2"});
  CHECK(strs(r.a) == std::vector<std::string>{"-2/3"});
}

TEST_CASE("solver agrees with Cramer's rule on random negative definite graphs") {
  std::mt19937_64 rng(7);
  int checked = 0;
  while (checked < 200) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<WhiteVertex> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back({static_cast<std::int64_t>(1 + rng() % 5)});
    std::vector<Edge> e;
    for (std::size_t i = 1; i < n; ++i) e.emplace_back(rng() % i, i);
    std::vector<BranchAttachment> b;
    for (int k = rng() % 3; k > 0; --k) b.push_back(br(rng() % n, 2 + rng() % 6, 1 + rng() % 2));
    const DualGraph g(v, e, b);
    const auto m = to_oracle(intersection_matrix(g));
    const bool nd = oracle::negative_definite(m);
    CHECK(is_negative_definite(g) == nd);
    if (!nd) {
      CHECK_THROWS_AS(solve_discrepancies(g), NotNegativeDefinite);
      continue;
    }
    const auto r = solve_discrepancies(g);
    std::vector<mpq_class> rhs;
    for (const auto& d : r.d) rhs.emplace_back(d.str());
    const auto x = oracle::cramer_solve(m, rhs);
    REQUIRE(x);
    for (std::size_t i = 0; i < n; ++i) CHECK(r.a[i].str() == (*x)[i].get_str());
    ++checked;
  }
}

TEST_CASE("classify_graph") {
  CHECK(classify_graph(DualGraph::chain({2})) == GraphClass::DuValDynkin);
  CHECK(classify_graph(DualGraph::chain({2, 2, 2, 2})) == GraphClass::DuValDynkin);
  // D_4 and E_6.
  CHECK(classify_graph(DualGraph({{2}, {2}, {2}, {2}}, {{0, 1}, {0, 2}, {0, 3}}, {})) == GraphClass::DuValDynkin);
  CHECK(classify_graph(DualGraph({{2}, {2}, {2}, {2}, {2}, {2}}, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}}, {})) ==
        GraphClass::DuValDynkin);
  // Extended D_4 is not Dynkin.
  CHECK(classify_graph(DualGraph({{2}, {2}, {2}, {2}, {2}}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, {})) ==
        GraphClass::Unrecognized);
  CHECK(classify_graph(DualGraph::chain({3})) == GraphClass::Unrecognized);

  CHECK(classify_graph(DualGraph::chain({2, 2}, {br(0, 2), br(1, 2)})) == GraphClass::ChainTwoBlackEnds);
  CHECK(classify_graph(DualGraph::chain({3, 2, 2}, {br(0, 2), br(2, 4)})) == GraphClass::ChainTwoBlackEnds);
  // (e1 - 1) m1 = (en - 1) m2 fails.
  CHECK(classify_graph(DualGraph::chain({3, 2, 2}, {br(0, 2), br(2, 3)})) == GraphClass::Unrecognized);
  // Interior curve with e != 2.
  CHECK(classify_graph(DualGraph::chain({2, 3, 2}, {br(0, 2), br(2, 2)})) == GraphClass::Unrecognized);

  CHECK(classify_graph(DualGraph::chain({2, 2, 2}, {br(2, 3)})) == GraphClass::ChainOneBlackEnd);
  CHECK(classify_graph(DualGraph::chain({2, 2, 2}, {br(1, 3)})) == GraphClass::Unrecognized);

  const DualGraph fork({{2}, {2}, {2}, {2}, {2}}, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}, {br(4, 2)});
  CHECK(classify_graph(fork) == GraphClass::ForkHalfWeights);
  const DualGraph fork3({{2}, {2}, {2}, {2}, {2}}, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}, {br(4, 3)});
  CHECK(classify_graph(fork3) == GraphClass::ForkHalfWeights);
  const DualGraph fork_short({{2}, {2}, {2}, {2}, {2}}, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}, {br(1, 2)});
  CHECK(classify_graph(fork_short) == GraphClass::Unrecognized);

  CHECK(classify_graph(DualGraph::chain({4, 1, 2}, {br(0, 2), br(1, 4)})) == GraphClass::Unrecognized);
}

TEST_CASE("cyclic invariants and local group order") {
  CHECK(cyclic_invariants(DualGraph::chain({2, 2}, {br(0, 2), br(1, 2)})) == CyclicType{3, 2});
  const auto c = DualGraph::chain({3, 2, 2}, {br(0, 2), br(2, 4)});
  CHECK(cyclic_invariants(c) == CyclicType{7, 5});
  CHECK(hj_expand(7, 5).reversed() == HjChain({3, 2, 2}));
  CHECK(local_group_order(c) == 7 * 2 * 4);
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto g = DualGraph::chain(std::vector<std::int64_t>(n, 2), {br(0, 3), br(n - 1, 3)});
    REQUIRE(classify_graph(g) == GraphClass::ChainTwoBlackEnds);
    const auto nq = cyclic_invariants(g);
    CHECK(nq == CyclicType{static_cast<std::int64_t>(n + 1), static_cast<std::int64_t>(n)});
  }
  CHECK_THROWS_AS(cyclic_invariants(DualGraph::chain({2})), WrongClass);
  CHECK_THROWS_AS(local_group_order(DualGraph::chain({2})), Unsupported);
}

TEST_CASE("closed cyclic formulas match the chain's continued fraction") {
  for (std::int64_t n = 2; n <= 7; ++n) {
    for (std::int64_t e1 = 2; e1 <= 6; ++e1) {
      for (std::int64_t en = 2; en <= 6; ++en) {
        for (std::int64_t m2 = 2; m2 <= 12; ++m2) {
          if (((en - 1) * m2) % (e1 - 1) != 0) continue;
          const std::int64_t m1 = (en - 1) * m2 / (e1 - 1);
          if (m1 < 2) continue;
          std::vector<std::int64_t> e(n, 2);
          e.front() = e1;
          e.back() = en;
          const auto g = DualGraph::chain(e, {br(0, m1), br(n - 1, m2)});
          REQUIRE(classify_graph(g) == GraphClass::ChainTwoBlackEnds);
          const auto nq = cyclic_invariants(g);
          const auto direct = hj_evaluate(HjChain(e));
          CHECK(nq.n == direct.n);
          // The closed q is the one of the reversed chain (read from the m1 end).
          CHECK(nq.q == hj_evaluate(HjChain(e).reversed()).q);
        }
      }
    }
  }
}
