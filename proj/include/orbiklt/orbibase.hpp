#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orbiklt/exact_core.hpp"
#include "orbiklt/rational.hpp"

namespace orbiklt {

/// Smooth compact curve of genus g with marked points of multiplicities
/// m_j >= 2. Only the multiset of multiplicities matters; it is kept sorted.
class OrbifoldCurve {
 public:
  OrbifoldCurve(std::int64_t genus, std::vector<std::int64_t> mults);

  std::int64_t genus() const { return genus_; }
  const std::vector<std::int64_t>& mults() const { return mults_; }

  friend bool operator==(const OrbifoldCurve&, const OrbifoldCurve&) = default;

 private:
  std::int64_t genus_;
  std::vector<std::int64_t> mults_;
};

std::string to_string(const OrbifoldCurve& c);

enum class Trichotomy { Hyperbolic, Euclidean, Spherical };
std::string to_string(Trichotomy t);

/// Finitely presented group. Words are sequences of signed generator
/// indices: k+1 for generator k, -(k+1) for its inverse.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> relators;
};

std::string to_string(const Presentation& p);

struct CurveGroupInfo {
  Rational degree;
  Trichotomy trichotomy = Trichotomy::Hyperbolic;
  Presentation presentation;
  std::optional<std::int64_t> order;  // nullopt: infinite
  bool almost_abelian = false;
  std::optional<std::int64_t> rank;   // nullopt: not applicable (hyperbolic)
  /// Genus 0 with one mark, or two unequal marks: not a global quotient.
  bool bad_orbifold = false;
};

/// deg(K_C + Delta) = 2g - 2 + sum (1 - 1/m_j).
Rational curve_degree(const OrbifoldCurve& c);

/// Standard presentation <a_i, b_i, c_j | prod [a_i,b_i] prod c_j, c_j^{m_j}>
/// and its coarse invariants. Orders: genus 0 with at most two marks gives
/// the cyclic quotient of the presentation (gcd of the two marks, trivial
/// for fewer); genus 0 spherical triples give 2/|degree|; all else infinite.
CurveGroupInfo curve_group(const OrbifoldCurve& c);

/// Rational or elliptic in the orbifold sense: degree <= 0.
bool is_special_curve(const OrbifoldCurve& c);

struct FiberComponent {
  std::int64_t fiber_mult = 1;  // multiplicity of F_i in f^*(y)
  Multiplicity orb_mult{1};     // orbifold multiplicity of F_i on the surface
};

struct FiberData {
  std::vector<FiberComponent> components;
};

/// Fibration of a surface onto a curve of genus base_genus; only fibers
/// over the listed points can be multiple.
struct FibrationData {
  std::int64_t base_genus = 0;
  std::map<std::string, FiberData> marked_fibers;
};

/// gcd over components of fiber_mult * orb_mult.
std::int64_t fiber_multiplicity(const FiberData& fd);

/// The base curve, marked at each point whose fiber multiplicity is >= 2.
OrbifoldCurve orbifold_base(const FibrationData& f);

/// The orbifold base has positive canonical degree.
bool is_general_type_fibration(const FibrationData& f);

enum class Kappa { NegInfinity, Zero, One, Two };
std::string to_string(Kappa k);
Kappa parse_kappa(const std::string& text);

/// kappa < 2 and none of the supplied fibrations is of general type. The
/// answer is relative to the supplied list; fibrations are never searched.
bool is_special_orbisurface(Kappa kappa, const std::vector<FibrationData>& fibrations);

namespace outcome {
struct Nef {};
struct MoriFiberOverCurve {
  OrbifoldCurve base;
};
struct DelPezzo {};
}  // namespace outcome

using MinimalModelOutcome = std::variant<outcome::Nef, outcome::MoriFiberOverCurve, outcome::DelPezzo>;

struct EllipticFibration {
  FibrationData fibration;
  OrbifoldCurve fiber;  // general orbifold fiber
};

/// Input to the abelianity decision tree. The minimal-model outcome and
/// kappa are supplied, not computed.
struct SurfaceSummary {
  Kappa kappa = Kappa::Zero;
  MinimalModelOutcome outcome = outcome::Nef{};
  std::optional<EllipticFibration> kappa1_fibration;
};

enum class VerdictKind { AlmostAbelian, Finite };
enum class VerdictBranch { Kappa1Fibration, MoriFiber, Kappa0Nef, DelPezzo };
std::string to_string(VerdictKind k);
std::string to_string(VerdictBranch b);

struct Verdict {
  VerdictKind kind = VerdictKind::AlmostAbelian;
  VerdictBranch branch = VerdictBranch::Kappa0Nef;
  std::int64_t rank_bound = 4;
  bool even_rank = true;
  std::string rationale;
};

/// Almost-abelianity of pi_1 of a special 2-dimensional orbifold, following
/// the case split on kappa and the minimal model. Throws NotSpecial when
/// `special` is false or kappa = 2, InvalidArgument on inconsistent input.
Verdict abelianity_verdict(const SurfaceSummary& s, bool special);

}  // namespace orbiklt
