#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "orbiklt/exact_core.hpp"
#include "orbiklt/rational.hpp"

namespace orbiklt {

enum class BranchKind { Smooth = 0, Cusp = 1 };

/// Irreducible boundary germ through the origin of a smooth surface: either
/// smooth, or a (p,q)-cusp y^q = x^p with p, q coprime. Cusp exponents are
/// stored with p < q.
struct GermBranch {
  BranchKind kind = BranchKind::Smooth;
  std::int64_t p = 1;
  std::int64_t q = 1;
  Multiplicity mult{2};

  static GermBranch smooth(std::int64_t m);
  static GermBranch cusp(std::int64_t p, std::int64_t q, std::int64_t m);

  /// Multiplicity of the curve germ at the origin: 1, or min(p, q).
  std::int64_t origin_multiplicity() const { return kind == BranchKind::Smooth ? 1 : p; }

  friend auto operator<=>(const GermBranch& a, const GermBranch& b) {
    return std::tuple(static_cast<int>(a.kind), a.mult.value(), a.p, a.q) <=>
           std::tuple(static_cast<int>(b.kind), b.mult.value(), b.p, b.q);
  }
  friend bool operator==(const GermBranch&, const GermBranch&) = default;
};

/// Intersection multiplicity of branches i and j.
struct Contact {
  std::size_t i = 0;
  std::size_t j = 0;
  std::int64_t t = 1;
};

/// Germ of an integral pair on a smooth surface. Pairs without an explicit
/// contact get the generic intersection multiplicity t_i * t_j (1 for two
/// smooth branches).
///
/// Construction rejects configurations that cannot occur: contact below
/// t_i * t_j, a smooth/cusp contact outside {k*p < q} u {q}, and smooth
/// triples violating the ultrametric rule (the two smallest of the three
/// pairwise tangency orders are equal).
class GermConfig {
 public:
  GermConfig() = default;
  explicit GermConfig(std::vector<GermBranch> branches, const std::vector<Contact>& contacts = {});

  const std::vector<GermBranch>& branches() const { return branches_; }
  std::size_t size() const { return branches_.size(); }
  std::int64_t contact(std::size_t i, std::size_t j) const { return contact_[i][j]; }

  /// Same germ reordered so that new branch k is old branch perm[k].
  GermConfig permuted(const std::vector<std::size_t>& perm) const;

  /// Branches sorted by (kind, multiplicity, p, q); among equal branches,
  /// the lexicographically smallest contact matrix.
  GermConfig canonical() const;

  /// Flattened canonical description, used as a deterministic sort key.
  std::vector<std::int64_t> key() const;

  friend bool operator==(const GermConfig&, const GermConfig&) = default;

 private:
  std::vector<GermBranch> branches_;
  std::vector<std::vector<std::int64_t>> contact_;
};

std::string to_string(const GermConfig& g);

namespace germ_class {
struct Empty {
  friend auto operator<=>(const Empty&, const Empty&) = default;
};
struct SingleSmooth {
  std::int64_t m;
  friend auto operator<=>(const SingleSmooth&, const SingleSmooth&) = default;
};
struct TransversalTriple {
  std::int64_t m1, m2, m3;
  friend auto operator<=>(const TransversalTriple&, const TransversalTriple&) = default;
};
struct TangentFamily {
  std::int64_t t;
  std::vector<std::int64_t> mults;
  friend auto operator<=>(const TangentFamily&, const TangentFamily&) = default;
};
struct SingleCusp {
  std::int64_t p, q, m;
  friend auto operator<=>(const SingleCusp&, const SingleCusp&) = default;
};
struct CuspPlusSmoothContact2 {
  std::int64_t q, m2;
  friend auto operator<=>(const CuspPlusSmoothContact2&, const CuspPlusSmoothContact2&) = default;
};
struct CuspPlusSmoothContact3 {
  friend auto operator<=>(const CuspPlusSmoothContact3&, const CuspPlusSmoothContact3&) = default;
};
struct HigherCusp {
  std::int64_t p, q;
  friend auto operator<=>(const HigherCusp&, const HigherCusp&) = default;
};
/// Two smooth branches (multiplicities m <= n) tangent to order p, and a
/// third smooth branch of multiplicity r transversal to both.
struct TangentPairPlusTransversal {
  std::int64_t m, n, p, r;
  friend auto operator<=>(const TangentPairPlusTransversal&, const TangentPairPlusTransversal&) = default;
};
struct NotKlt {
  friend auto operator<=>(const NotKlt&, const NotKlt&) = default;
};
}  // namespace germ_class

using GermClass = std::variant<germ_class::Empty, germ_class::SingleSmooth, germ_class::TransversalTriple,
                               germ_class::TangentFamily, germ_class::SingleCusp, germ_class::CuspPlusSmoothContact2,
                               germ_class::CuspPlusSmoothContact3, germ_class::HigherCusp,
                               germ_class::TangentPairPlusTransversal, germ_class::NotKlt>;

std::string class_name(const GermClass& c);
std::vector<std::int64_t> class_parameters(const GermClass& c);
/// "Name(p1,p2,...)" or "Name" when the class has no parameters.
std::string to_string(const GermClass& c);
inline bool is_not_klt(const GermClass& c) { return std::holds_alternative<germ_class::NotKlt>(c); }

/// Coefficient of the first exceptional curve after blowing up the origin:
/// c = 1 - sum_k t_k (1 - 1/m_k).
Rational blowup_discrepancy(const GermConfig& g);

/// Smooth branches with pairwise contact order t are klt iff
/// sum_k (1 - 1/m_k) < 1 + 1/t.
bool tangent_family_klt(std::int64_t t, const std::vector<Multiplicity>& mults);

/// klt decision by reduction: first blow-up, then orbifold etale covers down
/// to a single cusp or a family of tangent smooth branches.
bool is_klt_germ(const GermConfig& g);

/// Every catalogue class whose shape and numerical condition the germ meets.
/// A well-formed catalogue yields at most one.
std::vector<GermClass> catalogue_matches(const GermConfig& g);

/// The unique catalogue class of the germ, or NotKlt.
GermClass classify_germ(const GermConfig& g);

/// Cover z^m = y^q - x^p of a smooth germ branched to order m along a
/// (p,q)-cusp.
struct CoverVerdict {
  std::int64_t p = 0, q = 0, m = 0;
  std::string equation;
  Rational exponent_sum;   // 1/p + 1/q + 1/m
  bool klt = false;        // exponent_sum > 1
  std::string du_val_type; // "smooth", "A_n", "E_6", "E_7", "E_8"; empty when not klt
};

/// Requires p, q >= 1 coprime and m >= 2.
CoverVerdict etale_cover_over_cusp(std::int64_t p, std::int64_t q, Multiplicity m);

/// Two smooth branches tangent to order p; the cover v^{m1} = u branched
/// along the first turns the second into v^{m1} = u^p.
struct SplitResult {
  std::int64_t d = 0;            // gcd(m1, p): number of components
  std::int64_t p_reduced = 0;    // p / d
  std::int64_t m1_reduced = 0;   // m1 / d
  bool smooth = false;
};

/// Requires p >= 2 and m1 >= 2.
SplitResult cover_split_tangent(std::int64_t p, Multiplicity m1);

struct EnumerationBounds {
  std::int64_t max_mult = 7;
  std::int64_t max_contact = 4;
  std::int64_t max_cusp_exp = 7;
  std::size_t max_branches = 3;
};

/// Visits every valid canonical germ configuration within the bounds, each
/// isomorphism class exactly once.
void for_each_germ(const EnumerationBounds& bounds, const std::function<void(const GermConfig&)>& visit);

struct ClassifiedGerm {
  GermConfig config;
  GermClass cls;
};

/// All klt germs within the bounds with their classes, sorted by class and
/// then by configuration.
std::vector<ClassifiedGerm> enumerate_klt_germs(const EnumerationBounds& bounds);

/// Sorted multiplicity tuples m_1 <= ... <= m_r (each <= max_mult) for which
/// r smooth branches with pairwise contact t form a klt germ.
std::vector<std::vector<std::int64_t>> enumerate_tangent_family(std::size_t r, std::int64_t t, std::int64_t max_mult);

}  // namespace orbiklt
