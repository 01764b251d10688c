#include "doctest.h"
#include "oracles.hpp"
#include "orbiklt/errors.hpp"
#include "orbiklt/orbibase.hpp"

using namespace orbiklt;

namespace {

std::optional<std::int64_t> coset_order(const OrbifoldCurve& c) {
  const auto p = curve_group(c).presentation;
  return oracle::group_order(static_cast<int>(p.generators.size()), p.relators);
}

FibrationData fibration(std::int64_t g, std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> fibers) {
  FibrationData f;
  f.base_genus = g;
  int k = 0;
  for (const auto& comps : fibers) {
    FiberData fd;
    for (auto [fm, om] : comps) fd.components.push_back({fm, Multiplicity(om)});
    f.marked_fibers["y" + std::to_string(k++)] = fd;
  }
  return f;
}

}  // namespace

TEST_CASE("orbifold curve validation and ordering") {
  const OrbifoldCurve c(0, {5, 2, 3});
  CHECK(c.mults() == std::vector<std::int64_t>{2, 3, 5});
  CHECK_THROWS_AS(OrbifoldCurve(-1, {}), InvalidArgument);
  CHECK_THROWS_AS(OrbifoldCurve(0, {1}), InvalidArgument);
}

TEST_CASE("degree and trichotomy") {
  CHECK(curve_degree(OrbifoldCurve(0, {2, 3, 5})).str() == "-1/30");
  CHECK(curve_degree(OrbifoldCurve(0, {2, 3, 7})).str() == "1/42");
  CHECK(curve_degree(OrbifoldCurve(1, {})).str() == "0");
  CHECK(curve_group(OrbifoldCurve(0, {2, 3, 6})).trichotomy == Trichotomy::Euclidean);
  CHECK(curve_group(OrbifoldCurve(0, {2, 3, 7})).trichotomy == Trichotomy::Hyperbolic);
  CHECK(curve_group(OrbifoldCurve(0, {})).trichotomy == Trichotomy::Spherical);
  CHECK(curve_group(OrbifoldCurve(2, {})).trichotomy == Trichotomy::Hyperbolic);
  CHECK(is_special_curve(OrbifoldCurve(0, {2, 2, 2, 2})));
  CHECK_FALSE(is_special_curve(OrbifoldCurve(0, {2, 2, 2, 3})));
}

TEST_CASE("group orders agree with coset enumeration") {
  for (auto ms : std::vector<std::vector<std::int64_t>>{{2, 3, 5}, {2, 3, 4}, {2, 3, 3}, {2, 2, 7}, {3, 3}, {4, 6},
                                                        {5}, {}}) {
    const OrbifoldCurve c(0, ms);
    const auto info = curve_group(c);
    REQUIRE(info.order);
    CHECK(coset_order(c) == info.order);
  }
  CHECK(curve_group(OrbifoldCurve(0, {4, 6})).order == 2);
  CHECK(curve_group(OrbifoldCurve(0, {4, 6})).bad_orbifold);
  CHECK(curve_group(OrbifoldCurve(0, {5})).order == 1);
  CHECK(curve_group(OrbifoldCurve(0, {5})).bad_orbifold);
  CHECK_FALSE(curve_group(OrbifoldCurve(0, {5, 5})).bad_orbifold);
  CHECK_FALSE(curve_group(OrbifoldCurve(0, {2, 3, 6})).order);
  CHECK_FALSE(curve_group(OrbifoldCurve(1, {})).order);
}

TEST_CASE("almost abelian ranks follow the abelianization of the Euclidean groups") {
  const auto torus = curve_group(OrbifoldCurve(1, {}));
  CHECK(torus.almost_abelian);
  CHECK(torus.rank == 2);
  const auto p = torus.presentation;
  CHECK(oracle::abelianization_rank(static_cast<int>(p.generators.size()), p.relators) == 2);
  CHECK(curve_group(OrbifoldCurve(0, {2, 3, 6})).rank == 2);
  CHECK(curve_group(OrbifoldCurve(0, {2, 3, 5})).rank == 0);
  CHECK_FALSE(curve_group(OrbifoldCurve(0, {2, 3, 7})).almost_abelian);
  CHECK_FALSE(curve_group(OrbifoldCurve(0, {2, 3, 7})).rank);
  const auto g2 = curve_group(OrbifoldCurve(2, {})).presentation;
  CHECK(oracle::abelianization_rank(static_cast<int>(g2.generators.size()), g2.relators) == 4);
}

TEST_CASE("presentation text") {
  CHECK(to_string(curve_group(OrbifoldCurve(1, {3})).presentation) == "<a1,b1,c1 | a1*b1*a1^-1*b1^-1*c1, c1^3>");
}

TEST_CASE("fiber multiplicity is a gcd of products") {
  FiberData fd{{{2, Multiplicity(3)}, {3, Multiplicity(2)}}};
  CHECK(fiber_multiplicity(fd) == 6);
  FiberData fd2{{{2, Multiplicity(1)}, {4, Multiplicity(1)}}};
  CHECK(fiber_multiplicity(fd2) == 2);
  CHECK_THROWS_AS(fiber_multiplicity(FiberData{}), InvalidArgument);
}

TEST_CASE("orbifold base and general type") {
  const auto direct = fibration(1, {{{1, 3}}});
  CHECK(orbifold_base(direct) == OrbifoldCurve(1, {3}));
  CHECK(is_general_type_fibration(direct));
  const auto blown = fibration(1, {{{1, 3}, {1, 1}}});
  CHECK(orbifold_base(blown) == OrbifoldCurve(1, {}));
  CHECK_FALSE(is_general_type_fibration(blown));
  const auto p1 = fibration(0, {{{2, 1}}, {{3, 1}}, {{7, 1}}});
  CHECK(is_general_type_fibration(p1));
  CHECK(is_special_orbisurface(Kappa::One, {blown}));
  CHECK_FALSE(is_special_orbisurface(Kappa::One, {blown, direct}));
  CHECK_FALSE(is_special_orbisurface(Kappa::Two, {}));
}

TEST_CASE("kappa text") {
  CHECK(parse_kappa("-inf") == Kappa::NegInfinity);
  CHECK(to_string(Kappa::One) == "1");
  CHECK_THROWS_AS(parse_kappa("3"), InvalidArgument);
}

TEST_CASE("verdict tree") {
  SurfaceSummary s;
  s.kappa = Kappa::Zero;
  s.outcome = outcome::Nef{};
  auto v = abelianity_verdict(s, true);
  CHECK(v.branch == VerdictBranch::Kappa0Nef);
  CHECK(v.kind == VerdictKind::AlmostAbelian);
  CHECK(v.rank_bound == 4);
  CHECK(v.even_rank);

  s.kappa = Kappa::NegInfinity;
  s.outcome = outcome::DelPezzo{};
  v = abelianity_verdict(s, true);
  CHECK(v.branch == VerdictBranch::DelPezzo);
  CHECK(v.kind == VerdictKind::Finite);
  CHECK(v.rank_bound == 0);

  s.outcome = outcome::MoriFiberOverCurve{OrbifoldCurve(1, {})};
  CHECK(abelianity_verdict(s, true).branch == VerdictBranch::MoriFiber);
  s.outcome = outcome::MoriFiberOverCurve{OrbifoldCurve(2, {})};
  CHECK_THROWS_AS(abelianity_verdict(s, true), NotSpecial);

  s.kappa = Kappa::One;
  s.outcome = outcome::Nef{};
  s.kappa1_fibration = EllipticFibration{fibration(0, {{{2, 1}}, {{2, 1}}}), OrbifoldCurve(1, {})};
  CHECK(abelianity_verdict(s, true).branch == VerdictBranch::Kappa1Fibration);
  s.kappa1_fibration->fiber = OrbifoldCurve(2, {});
  CHECK_THROWS_AS(abelianity_verdict(s, true), InvalidArgument);
  s.kappa1_fibration = EllipticFibration{fibration(0, {{{2, 1}}, {{2, 1}}, {{2, 1}}, {{2, 1}}, {{2, 1}}}),
                                         OrbifoldCurve(1, {})};
  CHECK_THROWS_AS(abelianity_verdict(s, true), NotSpecial);

  s = SurfaceSummary{};
  s.kappa = Kappa::Two;
  CHECK_THROWS_AS(abelianity_verdict(s, true), NotSpecial);
  s.kappa = Kappa::Zero;
  CHECK_THROWS_AS(abelianity_verdict(s, false), NotSpecial);
  s.kappa = Kappa::NegInfinity;
  s.outcome = outcome::Nef{};
  CHECK_THROWS_AS(abelianity_verdict(s, true), InvalidArgument);
}
