#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orbiklt/errors.hpp"
#include "orbiklt/germ.hpp"

using namespace orbiklt;

namespace {

GermBranch S(std::int64_t m) { return GermBranch::smooth(m); }
GermBranch C(std::int64_t p, std::int64_t q, std::int64_t m) { return GermBranch::cusp(p, q, m); }

std::string cls(const GermConfig& g) { return to_string(classify_germ(g)); }

}  // namespace

TEST_CASE("germ validation") {
  CHECK_THROWS_AS(C(2, 4, 2), InvalidArgument);
  CHECK_THROWS_AS(C(1, 3, 2), InvalidArgument);
  CHECK_THROWS_AS(S(1), InvalidArgument);
  CHECK(C(3, 2, 5).p == 2);
  CHECK(C(3, 2, 5).origin_multiplicity() == 2);
  CHECK_THROWS_AS(GermConfig({S(2), S(2)}, {{0, 1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(GermConfig({S(2), S(2)}, {{0, 0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(GermConfig({S(2), S(2)}, {{0, 5, 1}}), InvalidArgument);
  // Two cusps of multiplicity 2 meet with intersection at least 4.
  CHECK_THROWS_AS(GermConfig({C(2, 3, 2), C(2, 5, 2)}, {{0, 1, 3}}), InvalidArgument);
  // A line meets a (2,5)-cusp with multiplicity 2, 4 (k*p < q) or 5.
  CHECK_NOTHROW(GermConfig({C(2, 5, 2), S(2)}, {{0, 1, 4}}));
  CHECK_NOTHROW(GermConfig({C(2, 5, 2), S(2)}, {{0, 1, 5}}));
  CHECK_THROWS_AS(GermConfig({C(2, 5, 2), S(2)}, {{0, 1, 3}}), InvalidArgument);
  CHECK_THROWS_AS(GermConfig({C(2, 5, 2), S(2)}, {{0, 1, 6}}), InvalidArgument);
  // Smooth triples: the two smallest tangency orders agree.
  CHECK_NOTHROW(GermConfig({S(2), S(2), S(2)}, {{0, 1, 3}, {0, 2, 1}, {1, 2, 1}}));
  CHECK_THROWS_AS(GermConfig({S(2), S(2), S(2)}, {{0, 1, 3}, {0, 2, 2}, {1, 2, 1}}), InvalidArgument);
  CHECK(GermConfig({C(2, 3, 2), S(3)}).contact(0, 1) == 2);
}

TEST_CASE("blowup discrepancy") {
  CHECK(blowup_discrepancy(GermConfig({S(2), S(3)})).str() == "-1/6");
  CHECK(blowup_discrepancy(GermConfig({C(2, 3, 6)})).str() == "-2/3");
  CHECK(blowup_discrepancy(GermConfig({S(2), S(2), S(2), S(2)})).str() == "-1");
  CHECK(blowup_discrepancy(GermConfig{}).str() == "1");
}

TEST_CASE("tangent family inequality") {
  auto m = [](std::vector<std::int64_t> v) {
    std::vector<Multiplicity> out;
    for (auto x : v) out.emplace_back(x);
    return out;
  };
  CHECK(tangent_family_klt(1, m({100, 100})));
  CHECK(tangent_family_klt(3, m({2, 5})));
  CHECK_FALSE(tangent_family_klt(3, m({2, 6})));
  CHECK(tangent_family_klt(2, m({3, 5})));
  CHECK_FALSE(tangent_family_klt(2, m({3, 6})));
  CHECK_FALSE(tangent_family_klt(2, m({4, 4})));
  CHECK(tangent_family_klt(1, m({2, 3, 5})));
  CHECK_FALSE(tangent_family_klt(1, m({2, 3, 6})));
  CHECK_FALSE(tangent_family_klt(1, m({2, 2, 2, 2})));
}

TEST_CASE("tangent family inequality matches the explicit resolution") {
  for (std::int64_t t = 1; t <= 6; ++t) {
    for (std::int64_t a = 2; a <= 9; ++a) {
      for (std::int64_t b = a; b <= 9; ++b) {
        for (std::int64_t c = 1; c <= 9; ++c) {
          std::vector<std::int64_t> ms{a, b};
          if (c >= 2) ms.push_back(c);
          std::vector<Multiplicity> mm;
          for (auto x : ms) mm.emplace_back(x);
          CHECK(tangent_family_klt(t, mm) == oracle::tangent_family_klt_by_resolution(t, ms));
        }
      }
    }
  }
}

TEST_CASE("catalogue classes of the reference germs") {
  CHECK(cls(GermConfig{}) == "Empty");
  CHECK(cls(GermConfig({S(9)})) == "SingleSmooth(9)");
  CHECK(cls(GermConfig({S(5), S(2), S(3)})) == "TransversalTriple(2,3,5)");
  CHECK(cls(GermConfig({S(2), S(3), S(6)})) == "NotKlt");
  CHECK(cls(GermConfig({S(2), S(2), S(17)})) == "TransversalTriple(2,2,17)");
  CHECK(cls(GermConfig({S(2), S(5)}, {{0, 1, 3}})) == "TangentFamily(3,2,5)");
  CHECK(cls(GermConfig({S(3), S(5)}, {{0, 1, 2}})) == "TangentFamily(2,3,5)");
  CHECK(cls(GermConfig({S(7), S(11)})) == "TangentFamily(1,7,11)");
  CHECK(cls(GermConfig({C(2, 3, 5)})) == "SingleCusp(2,3,5)");
  CHECK(cls(GermConfig({C(2, 3, 6)})) == "NotKlt");
  CHECK(cls(GermConfig({C(2, 7, 3)})) == "NotKlt");
  CHECK(cls(GermConfig({C(2, 7, 2)})) == "SingleCusp(2,7,2)");
  CHECK(cls(GermConfig({C(2, 5, 3)})) == "SingleCusp(2,5,3)");
  CHECK(cls(GermConfig({C(2, 5, 4)})) == "NotKlt");
  CHECK(cls(GermConfig({C(3, 4, 2)})) == "HigherCusp(3,4)");
  CHECK(cls(GermConfig({C(3, 5, 2)})) == "HigherCusp(3,5)");
  CHECK(cls(GermConfig({C(3, 7, 2)})) == "NotKlt");
  CHECK(cls(GermConfig({C(3, 4, 3)})) == "NotKlt");
  CHECK(cls(GermConfig({C(2, 5, 2), S(2)}, {{0, 1, 2}})) == "CuspPlusSmoothContact2(5,2)");
  CHECK(cls(GermConfig({C(2, 3, 2), S(2)}, {{0, 1, 3}})) == "CuspPlusSmoothContact3");
  CHECK(cls(GermConfig({C(2, 3, 2), S(3)}, {{0, 1, 3}})) == "NotKlt");
  CHECK(cls(GermConfig({S(2), S(3), S(3)}, {{1, 2, 2}})) == "NotKlt");
  CHECK(cls(GermConfig({S(2), S(2), S(3)}, {{1, 2, 2}})) == "TangentPairPlusTransversal(2,3,2,2)");
  CHECK(cls(GermConfig({S(2), S(2), S(3)}, {{0, 1, 2}})) == "TangentPairPlusTransversal(2,2,2,3)");
}

TEST_CASE("klt decision and class agree on the reference germs") {
  const std::vector<GermConfig> gs{
      GermConfig({S(2), S(3), S(5)}),         GermConfig({C(2, 3, 5)}),
      GermConfig({C(2, 3, 6)}),               GermConfig({C(3, 4, 2)}),
      GermConfig({S(2), S(2), S(2), S(2)}),   GermConfig({C(2, 3, 2), S(2)}, {{0, 1, 3}}),
      GermConfig({S(2), S(3)}, {{0, 1, 5}}),  GermConfig({S(2), S(3)}, {{0, 1, 6}}),
      GermConfig({C(2, 5, 2), S(3)}, {{0, 1, 4}}),
  };
  for (const auto& g : gs) CHECK(is_klt_germ(g) == !is_not_klt(classify_germ(g)));
}

TEST_CASE("classification is invariant under branch permutations") {
  std::mt19937 rng(3);
  EnumerationBounds b{5, 3, 5, 3};
  int n = 0;
  for_each_germ(b, [&](const GermConfig& g) {
    if (++n % 7) return;
    std::vector<std::size_t> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const GermConfig h = g.permuted(perm);
    CHECK(h.canonical() == g);
    CHECK(is_klt_germ(h) == is_klt_germ(g));
    CHECK(to_string(classify_germ(h)) == to_string(classify_germ(g)));
  });
  CHECK(n > 100);
}

TEST_CASE("cover over a cusp") {
  const auto v = etale_cover_over_cusp(2, 3, Multiplicity(5));
  CHECK(v.equation == "z^5 = y^3 - x^2");
  CHECK(v.exponent_sum.str() == "31/30");
  CHECK(v.klt);
  CHECK(v.du_val_type == "E_8");
  CHECK(etale_cover_over_cusp(2, 3, Multiplicity(4)).du_val_type == "E_7");
  CHECK(etale_cover_over_cusp(2, 3, Multiplicity(3)).du_val_type == "E_6");
  CHECK(etale_cover_over_cusp(2, 5, Multiplicity(2)).du_val_type == "A_4");
  CHECK_FALSE(etale_cover_over_cusp(2, 3, Multiplicity(6)).klt);
  CHECK_THROWS_AS(etale_cover_over_cusp(2, 2, Multiplicity(3)), InvalidArgument);
  CHECK_THROWS_AS(etale_cover_over_cusp(2, 4, Multiplicity(3)), InvalidArgument);
}

TEST_CASE("cover split of a tangent branch") {
  auto s = cover_split_tangent(2, Multiplicity(4));
  CHECK(s.d == 2);
  CHECK(s.p_reduced == 1);
  CHECK(s.m1_reduced == 2);
  CHECK(s.smooth);
  s = cover_split_tangent(3, Multiplicity(3));
  CHECK(s.d == 3);
  CHECK(s.smooth);
  s = cover_split_tangent(2, Multiplicity(3));
  CHECK(s.d == 1);
  CHECK_FALSE(s.smooth);
  for (std::int64_t p = 2; p <= 12; ++p) {
    for (std::int64_t m = 2; m <= 12; ++m) {
      const auto r = cover_split_tangent(p, Multiplicity(m));
      const auto o = oracle::split_by_monodromy(p, m);
      CHECK(r.d == o.count);
      CHECK(r.smooth == o.all_smooth);
    }
  }
}

TEST_CASE("enumeration examples") {
  CHECK(enumerate_tangent_family(2, 3, 9) ==
        std::vector<std::vector<std::int64_t>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}});
  const auto triples = enumerate_klt_germs({5, 1, 2, 3});
  std::vector<std::string> names;
  for (const auto& g : triples) {
    if (std::holds_alternative<germ_class::TransversalTriple>(g.cls)) names.push_back(to_string(g.cls));
  }
  CHECK(names == std::vector<std::string>{"TransversalTriple(2,2,2)", "TransversalTriple(2,2,3)",
                                          "TransversalTriple(2,2,4)", "TransversalTriple(2,2,5)",
                                          "TransversalTriple(2,3,3)", "TransversalTriple(2,3,4)",
                                          "TransversalTriple(2,3,5)"});
  std::vector<std::string> singles;
  for (const auto& g : enumerate_klt_germs({3, 1, 2, 1})) singles.push_back(to_string(g.cls));
  CHECK(singles == std::vector<std::string>{"Empty", "SingleSmooth(2)", "SingleSmooth(3)"});
}

TEST_CASE("every enumerated klt germ passes the first blow-up test") {
  for (const auto& g : enumerate_klt_germs({6, 4, 6, 3})) CHECK(blowup_discrepancy(g.config) > Rational(-1));
}

TEST_CASE("for_each_germ visits each configuration once") {
  std::vector<std::vector<std::int64_t>> keys;
  for_each_germ({4, 3, 5, 3}, [&](const GermConfig& g) { keys.push_back(g.key()); });
  auto sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}
