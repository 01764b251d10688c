#include "orbiklt/germ.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "orbiklt/errors.hpp"

namespace orbiklt {

namespace {

bool is_smooth(const GermBranch& b) { return b.kind == BranchKind::Smooth; }

// Intersection multiplicities a smooth germ can have with the cusp
// x = s^p, y = s^q (p < q): k*p for k*p < q, or q.
bool valid_smooth_cusp_contact(const GermBranch& cusp, std::int64_t t) {
  if (t == cusp.q) return true;
  return t < cusp.q && t % cusp.p == 0;
}

Rational inv(std::int64_t n) { return Rational(1, n); }

std::vector<Multiplicity> mults_of(const GermConfig& g, std::initializer_list<std::size_t> idx) {
  std::vector<Multiplicity> out;
  for (auto i : idx) out.push_back(g.branches()[i].mult);
  return out;
}

std::vector<Multiplicity> all_mults(const GermConfig& g) {
  std::vector<Multiplicity> out;
  for (const auto& b : g.branches()) out.push_back(b.mult);
  return out;
}

}  // namespace

GermBranch GermBranch::smooth(std::int64_t m) {
  if (m < 2) throw InvalidArgument("branch multiplicity must be >= 2");
  return GermBranch{BranchKind::Smooth, 1, 1, Multiplicity(m)};
}

GermBranch GermBranch::cusp(std::int64_t p, std::int64_t q, std::int64_t m) {
  if (p > q) std::swap(p, q);
  if (p < 2 || std::gcd(p, q) != 1) {
    throw InvalidArgument("cusp exponents must be coprime and >= 2, got (" + std::to_string(p) + "," +
                          std::to_string(q) + ")");
  }
  if (m < 2) throw InvalidArgument("branch multiplicity must be >= 2");
  return GermBranch{BranchKind::Cusp, p, q, Multiplicity(m)};
}

GermConfig::GermConfig(std::vector<GermBranch> branches, const std::vector<Contact>& contacts)
    : branches_(std::move(branches)) {
  const std::size_t r = branches_.size();
  for (std::size_t k = 0; k < r; ++k) {
    auto& b = branches_[k];
    const std::string where = "branch " + std::to_string(k) + ": ";
    if (b.mult.value() < 2) throw InvalidArgument(where + "multiplicity must be >= 2");
    if (b.kind == BranchKind::Smooth) {
      b.p = b.q = 1;
      continue;
    }
    if (b.p > b.q) std::swap(b.p, b.q);
    if (b.p < 2 || std::gcd(b.p, b.q) != 1) {
      throw InvalidArgument(where + "cusp exponents must be coprime and >= 2, got (" + std::to_string(b.p) + "," +
                            std::to_string(b.q) + ")");
    }
  }

  contact_.assign(r, std::vector<std::int64_t>(r, 0));
  std::vector<std::vector<bool>> given(r, std::vector<bool>(r, false));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (i != j) contact_[i][j] = branches_[i].origin_multiplicity() * branches_[j].origin_multiplicity();
    }
  }
  for (const auto& c : contacts) {
    if (c.i >= r || c.j >= r || c.i == c.j) {
      throw InvalidArgument("contact (" + std::to_string(c.i) + "," + std::to_string(c.j) + ") is not a branch pair");
    }
    if (given[c.i][c.j] && contact_[c.i][c.j] != c.t) {
      throw InvalidArgument("conflicting contacts for pair (" + std::to_string(c.i) + "," + std::to_string(c.j) + ")");
    }
    given[c.i][c.j] = given[c.j][c.i] = true;
    contact_[c.i][c.j] = contact_[c.j][c.i] = c.t;
  }

  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const auto& bi = branches_[i];
      const auto& bj = branches_[j];
      const std::int64_t t = contact_[i][j];
      const std::string pair = "contact (" + std::to_string(i) + "," + std::to_string(j) + ")=" + std::to_string(t);
      if (t < bi.origin_multiplicity() * bj.origin_multiplicity()) {
        throw InvalidArgument(pair + " is below the product of the origin multiplicities");
      }
      if (is_smooth(bi) != is_smooth(bj)) {
        const auto& cusp = is_smooth(bi) ? bj : bi;
        if (!valid_smooth_cusp_contact(cusp, t)) {
          throw InvalidArgument(pair + " is impossible between a smooth branch and a (" + std::to_string(cusp.p) +
                                "," + std::to_string(cusp.q) + ")-cusp");
        }
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      for (std::size_t k = j + 1; k < r; ++k) {
        if (!is_smooth(branches_[i]) || !is_smooth(branches_[j]) || !is_smooth(branches_[k])) continue;
        std::int64_t c[3] = {contact_[i][j], contact_[i][k], contact_[j][k]};
        std::sort(c, c + 3);
        if (c[0] != c[1]) {
          throw InvalidArgument("smooth branches " + std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + " have inconsistent tangency orders");
        }
      }
    }
  }
}

GermConfig GermConfig::permuted(const std::vector<std::size_t>& perm) const {
  const std::size_t r = size();
  if (perm.size() != r) throw InvalidArgument("permutation size mismatch");
  GermConfig out;
  out.branches_.reserve(r);
  for (auto k : perm) out.branches_.push_back(branches_.at(k));
  out.contact_.assign(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) out.contact_[a][b] = contact_[perm[a]][perm[b]];
  }
  return out;
}

GermConfig GermConfig::canonical() const {
  const std::size_t r = size();
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](auto a, auto b) { return branches_[a] < branches_[b]; });

  // Blocks of equal branches may be permuted freely; keep the smallest
  // contact matrix.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t s = 0; s < r;) {
    std::size_t e = s + 1;
    while (e < r && branches_[perm[e]] == branches_[perm[s]]) ++e;
    if (e - s > 1) blocks.emplace_back(s, e);
    s = e;
  }
  GermConfig best = permuted(perm);
  if (blocks.empty()) return best;
  for (auto& [s, e] : blocks) std::sort(perm.begin() + s, perm.begin() + e);

  // Odometer over the permutations of every block.
  while (true) {
    GermConfig cand = permuted(perm);
    if (cand.contact_ < best.contact_) best = std::move(cand);
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto [s, e] = blocks[b];
      if (std::next_permutation(perm.begin() + s, perm.begin() + e)) break;
    }
    if (b == blocks.size()) break;
  }
  return best;
}

std::vector<std::int64_t> GermConfig::key() const {
  const GermConfig c = canonical();
  std::vector<std::int64_t> k{static_cast<std::int64_t>(c.size())};
  for (const auto& b : c.branches_) {
    k.insert(k.end(), {static_cast<std::int64_t>(b.kind), b.mult.value(), b.p, b.q});
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) k.push_back(c.contact_[i][j]);
  }
  return k;
}

std::string to_string(const GermConfig& g) {
  std::string out = "branches=[";
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto& b = g.branches()[k];
    if (k) out += ", ";
    if (is_smooth(b)) {
      out += "smooth m=" + std::to_string(b.mult.value());
    } else {
      out += "cusp(" + std::to_string(b.p) + "," + std::to_string(b.q) + ") m=" + std::to_string(b.mult.value());
    }
  }
  out += "] contact=[";
  bool first = true;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!first) out += ", ";
      first = false;
      out += "(" + std::to_string(i) + "," + std::to_string(j) + "):" + std::to_string(g.contact(i, j));
    }
  }
  return out + "]";
}

std::string class_name(const GermClass& c) {
  using namespace germ_class;
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Empty>) return "Empty";
        else if constexpr (std::is_same_v<T, SingleSmooth>) return "SingleSmooth";
        else if constexpr (std::is_same_v<T, TransversalTriple>) return "TransversalTriple";
        else if constexpr (std::is_same_v<T, TangentFamily>) return "TangentFamily";
        else if constexpr (std::is_same_v<T, SingleCusp>) return "SingleCusp";
        else if constexpr (std::is_same_v<T, CuspPlusSmoothContact2>) return "CuspPlusSmoothContact2";
        else if constexpr (std::is_same_v<T, CuspPlusSmoothContact3>) return "CuspPlusSmoothContact3";
        else if constexpr (std::is_same_v<T, HigherCusp>) return "HigherCusp";
        else if constexpr (std::is_same_v<T, TangentPairPlusTransversal>) return "TangentPairPlusTransversal";
        else return "NotKlt";
      },
      c);
}

std::vector<std::int64_t> class_parameters(const GermClass& c) {
  using namespace germ_class;
  return std::visit(
      [](const auto& v) -> std::vector<std::int64_t> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SingleSmooth>) return {v.m};
        else if constexpr (std::is_same_v<T, TransversalTriple>) return {v.m1, v.m2, v.m3};
        else if constexpr (std::is_same_v<T, TangentFamily>) {
          std::vector<std::int64_t> out{v.t};
          out.insert(out.end(), v.mults.begin(), v.mults.end());
          return out;
        } else if constexpr (std::is_same_v<T, SingleCusp>) return {v.p, v.q, v.m};
        else if constexpr (std::is_same_v<T, CuspPlusSmoothContact2>) return {v.q, v.m2};
        else if constexpr (std::is_same_v<T, HigherCusp>) return {v.p, v.q};
        else if constexpr (std::is_same_v<T, TangentPairPlusTransversal>) return {v.m, v.n, v.p, v.r};
        else return {};
      },
      c);
}

std::string to_string(const GermClass& c) {
  std::string out = class_name(c);
  const auto params = class_parameters(c);
  if (params.empty()) return out;
  out += "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(params[i]);
  }
  return out + ")";
}

Rational blowup_discrepancy(const GermConfig& g) {
  Rational c(1);
  for (const auto& b : g.branches()) c -= Rational(b.origin_multiplicity()) * coeff(b.mult);
  return c;
}

bool tangent_family_klt(std::int64_t t, const std::vector<Multiplicity>& mults) {
  if (t < 1) throw InvalidArgument("contact order must be >= 1");
  Rational lhs(0);
  for (auto m : mults) lhs += coeff(m);
  return lhs < Rational(1) + inv(t);
}

bool is_klt_germ(const GermConfig& g) {
  const std::size_t r = g.size();
  if (r == 0) return true;
  if (blowup_discrepancy(g) <= Rational(-1)) return false;

  const auto cusps = std::count_if(g.branches().begin(), g.branches().end(), [](const auto& b) { return !is_smooth(b); });
  if (cusps == 0) {
    if (r == 1) return true;
    if (r == 2) return tangent_family_klt(g.contact(0, 1), all_mults(g));
    if (r == 3) {
      const std::int64_t c01 = g.contact(0, 1), c02 = g.contact(0, 2), c12 = g.contact(1, 2);
      const std::int64_t lo = std::min({c01, c02, c12});
      const std::int64_t hi = std::max({c01, c02, c12});
      if (lo >= 2 || lo == hi) return tangent_family_klt(lo, all_mults(g));
      // One tangent pair and a transversal third branch: the cover branched
      // to order m_k along the third branch multiplies the tangency order.
      std::size_t i = 0, j = 1, k = 2;
      if (c02 == hi) {
        j = 2;
        k = 1;
      } else if (c12 == hi) {
        i = 1;
        j = 2;
        k = 0;
      }
      return tangent_family_klt(hi * g.branches()[k].mult.value(), mults_of(g, {i, j}));
    }
    std::int64_t lo = g.contact(0, 1);
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = a + 1; b < r; ++b) lo = std::min(lo, g.contact(a, b));
    }
    return tangent_family_klt(lo, all_mults(g));
  }
  if (cusps == 1 && r == 1) {
    const auto& b = g.branches()[0];
    return etale_cover_over_cusp(b.p, b.q, b.mult).klt;
  }
  if (cusps == 1 && r == 2) {
    const std::size_t ci = is_smooth(g.branches()[0]) ? 1 : 0;
    const auto& cusp = g.branches()[ci];
    const auto& line = g.branches()[1 - ci];
    if (cusp.p != 2) return false;
    const std::int64_t q = cusp.q;
    const std::int64_t m1 = cusp.mult.value();
    const std::int64_t m2 = line.mult.value();
    // Cover branched to order m2 along the smooth branch.
    if (g.contact(0, 1) == 2) return Rational(1, 2) + inv(q * m2) + inv(m1) > Rational(1);
    return std::gcd(q, m2) == 1 && inv(q) + inv(2 * m2) + inv(m1) > Rational(1);
  }
  return false;
}

namespace {

using namespace germ_class;
using Matcher = std::optional<GermClass> (*)(const GermConfig&);

// Matchers assume a canonical configuration: smooth branches first, each
// group sorted by multiplicity.

std::size_t cusp_count(const GermConfig& g) {
  return static_cast<std::size_t>(
      std::count_if(g.branches().begin(), g.branches().end(), [](const auto& b) { return !is_smooth(b); }));
}

std::optional<GermClass> match_empty(const GermConfig& g) {
  if (g.size() == 0) return Empty{};
  return std::nullopt;
}

std::optional<GermClass> match_single_smooth(const GermConfig& g) {
  if (g.size() == 1 && cusp_count(g) == 0) return SingleSmooth{g.branches()[0].mult.value()};
  return std::nullopt;
}

std::optional<GermClass> match_single_cusp(const GermConfig& g) {
  if (g.size() != 1 || cusp_count(g) != 1) return std::nullopt;
  const auto& b = g.branches()[0];
  if (b.p != 2) return std::nullopt;
  if (Rational(1, 2) + inv(b.q) + inv(b.mult.value()) > Rational(1)) return SingleCusp{b.p, b.q, b.mult.value()};
  return std::nullopt;
}

std::optional<GermClass> match_higher_cusp(const GermConfig& g) {
  if (g.size() != 1 || cusp_count(g) != 1) return std::nullopt;
  const auto& b = g.branches()[0];
  if (b.p == 3 && (b.q == 4 || b.q == 5) && b.mult.value() == 2) return HigherCusp{b.p, b.q};
  return std::nullopt;
}

std::optional<GermClass> match_tangent_family(const GermConfig& g) {
  if (g.size() != 2 || cusp_count(g) != 0) return std::nullopt;
  const std::int64_t t = g.contact(0, 1);
  const std::int64_t m1 = g.branches()[0].mult.value();
  const std::int64_t m2 = g.branches()[1].mult.value();
  if (inv(m1) + inv(m2) + inv(t) > Rational(1)) return TangentFamily{t, {m1, m2}};
  return std::nullopt;
}

std::optional<GermClass> match_transversal_triple(const GermConfig& g) {
  if (g.size() != 3 || cusp_count(g) != 0) return std::nullopt;
  if (g.contact(0, 1) != 1 || g.contact(0, 2) != 1 || g.contact(1, 2) != 1) return std::nullopt;
  const auto& b = g.branches();
  if (inv(b[0].mult.value()) + inv(b[1].mult.value()) + inv(b[2].mult.value()) > Rational(1)) {
    return TransversalTriple{b[0].mult.value(), b[1].mult.value(), b[2].mult.value()};
  }
  return std::nullopt;
}

std::optional<GermClass> match_tangent_pair_plus_transversal(const GermConfig& g) {
  if (g.size() != 3 || cusp_count(g) != 0) return std::nullopt;
  // exactly one pair tangent, the third branch transversal to both
  const std::size_t pairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  std::optional<GermClass> found;
  for (const auto& pr : pairs) {
    const std::size_t i = pr[0], j = pr[1], k = pr[2];
    if (g.contact(i, j) < 2 || g.contact(i, k) != 1 || g.contact(j, k) != 1) continue;
    const std::int64_t m = g.branches()[i].mult.value();
    const std::int64_t n = g.branches()[j].mult.value();
    const std::int64_t p = g.contact(i, j);
    const std::int64_t r = g.branches()[k].mult.value();
    if (inv(m) + inv(n) + inv(r * p) > Rational(1)) found = TangentPairPlusTransversal{std::min(m, n), std::max(m, n), p, r};
  }
  return found;
}

std::optional<GermClass> match_cusp_plus_smooth_2(const GermConfig& g) {
  if (g.size() != 2 || cusp_count(g) != 1) return std::nullopt;
  const auto& line = g.branches()[0];
  const auto& cusp = g.branches()[1];
  if (cusp.p == 2 && cusp.q % 2 == 1 && cusp.mult.value() == 2 && g.contact(0, 1) == 2) {
    return CuspPlusSmoothContact2{cusp.q, line.mult.value()};
  }
  return std::nullopt;
}

std::optional<GermClass> match_cusp_plus_smooth_3(const GermConfig& g) {
  if (g.size() != 2 || cusp_count(g) != 1) return std::nullopt;
  const auto& line = g.branches()[0];
  const auto& cusp = g.branches()[1];
  if (cusp.p == 2 && cusp.q == 3 && cusp.mult.value() == 2 && line.mult.value() == 2 && g.contact(0, 1) == 3) {
    return CuspPlusSmoothContact3{};
  }
  return std::nullopt;
}

constexpr Matcher kCatalogue[] = {
    match_empty,          match_single_smooth,      match_transversal_triple, match_tangent_family,
    match_single_cusp,    match_cusp_plus_smooth_2, match_cusp_plus_smooth_3, match_higher_cusp,
    match_tangent_pair_plus_transversal,
};

}  // namespace

std::vector<GermClass> catalogue_matches(const GermConfig& g) {
  const GermConfig c = g.canonical();
  std::vector<GermClass> out;
  for (auto matcher : kCatalogue) {
    if (auto m = matcher(c)) out.push_back(std::move(*m));
  }
  return out;
}

GermClass classify_germ(const GermConfig& g) {
  auto matches = catalogue_matches(g);
  if (matches.empty()) return NotKlt{};
  return std::move(matches.front());
}

CoverVerdict etale_cover_over_cusp(std::int64_t p, std::int64_t q, Multiplicity m) {
  if (p < 1 || q < 1) throw InvalidArgument("cusp exponents must be positive");
  if (std::gcd(p, q) != 1) {
    throw InvalidArgument("NonCoprime: cusp exponents (" + std::to_string(p) + "," + std::to_string(q) +
                          ") are not coprime");
  }
  if (m.value() < 2) throw InvalidArgument("cover degree must be >= 2");
  CoverVerdict v;
  v.p = p;
  v.q = q;
  v.m = m.value();
  v.equation = "z^" + std::to_string(v.m) + " = y^" + std::to_string(q) + " - x^" + std::to_string(p);
  v.exponent_sum = inv(p) + inv(q) + inv(v.m);
  v.klt = v.exponent_sum > Rational(1);
  if (v.klt) {
    std::int64_t e[3] = {p, q, v.m};
    std::sort(e, e + 3);
    if (e[0] == 1) v.du_val_type = "smooth";
    else if (e[1] == 2) v.du_val_type = "A_" + std::to_string(e[2] - 1);
    else v.du_val_type = "E_" + std::to_string(e[2] + 3);  // (2,3,3|4|5)
  }
  return v;
}

SplitResult cover_split_tangent(std::int64_t p, Multiplicity m1) {
  if (p < 2) throw InvalidArgument("tangency order must be >= 2");
  if (m1.value() < 2) throw InvalidArgument("multiplicity must be >= 2");
  SplitResult s;
  const std::int64_t m = m1.value();
  s.d = std::gcd(m, p);
  s.p_reduced = p / s.d;
  s.m1_reduced = m / s.d;
  s.smooth = (p == m && m == s.d) || (p == s.d && s.d != m) || (m == s.d && s.d != p);
  return s;
}

void for_each_germ(const EnumerationBounds& bounds, const std::function<void(const GermConfig&)>& visit) {
  if (bounds.max_mult < 2 || bounds.max_contact < 1 || bounds.max_cusp_exp < 2) {
    throw InvalidArgument("enumeration bounds too small");
  }
  std::vector<GermBranch> types;
  for (std::int64_t m = 2; m <= bounds.max_mult; ++m) types.push_back(GermBranch::smooth(m));
  for (std::int64_t p = 2; p <= bounds.max_cusp_exp; ++p) {
    for (std::int64_t q = p + 1; q <= bounds.max_cusp_exp; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t m = 2; m <= bounds.max_mult; ++m) types.push_back(GermBranch::cusp(p, q, m));
    }
  }
  std::sort(types.begin(), types.end());

  auto options = [&](const GermBranch& a, const GermBranch& b) {
    std::vector<std::int64_t> out;
    const std::int64_t lo = a.origin_multiplicity() * b.origin_multiplicity();
    for (std::int64_t t = lo; t <= bounds.max_contact; ++t) {
      if (is_smooth(a) != is_smooth(b) && !valid_smooth_cusp_contact(is_smooth(a) ? b : a, t)) continue;
      out.push_back(t);
    }
    return out;
  };

  std::vector<std::size_t> pick;
  std::vector<GermBranch> branches;
  std::vector<Contact> contacts;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<std::int64_t>> pair_options;

  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == pairs.size()) {
      std::optional<GermConfig> cfg;
      try {
        cfg.emplace(branches, contacts);
      } catch (const InvalidArgument&) {
        return;
      }
      if (cfg->canonical() == *cfg) visit(*cfg);
      return;
    }
    for (auto t : pair_options[k]) {
      contacts[k].t = t;
      assign(k + 1);
    }
  };

  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t remaining) {
    if (remaining == 0) {
      branches.clear();
      for (auto i : pick) branches.push_back(types[i]);
      pairs.clear();
      pair_options.clear();
      contacts.clear();
      for (std::size_t j = 0; j < branches.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          pairs.emplace_back(i, j);
          pair_options.push_back(options(branches[i], branches[j]));
          if (pair_options.back().empty()) return;
          contacts.push_back({i, j, 0});
        }
      }
      assign(0);
      return;
    }
    for (std::size_t i = start; i < types.size(); ++i) {
      pick.push_back(i);
      choose(i, remaining - 1);
      pick.pop_back();
    }
  };

  for (std::size_t r = 0; r <= bounds.max_branches; ++r) choose(0, r);
}

std::vector<ClassifiedGerm> enumerate_klt_germs(const EnumerationBounds& bounds) {
  std::vector<ClassifiedGerm> out;
  for_each_germ(bounds, [&](const GermConfig& g) {
    if (is_klt_germ(g)) out.push_back({g, classify_germ(g)});
  });
  std::sort(out.begin(), out.end(), [](const ClassifiedGerm& a, const ClassifiedGerm& b) {
    if (a.cls != b.cls) return a.cls < b.cls;
    return a.config.key() < b.config.key();
  });
  return out;
}

std::vector<std::vector<std::int64_t>> enumerate_tangent_family(std::size_t r, std::int64_t t, std::int64_t max_mult) {
  if (t < 1) throw InvalidArgument("contact order must be >= 1");
  if (max_mult < 2) throw InvalidArgument("max multiplicity must be >= 2");
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> mults;
  std::function<void(std::int64_t)> rec = [&](std::int64_t from) {
    if (mults.size() == r) {
      std::vector<GermBranch> branches;
      for (auto m : mults) branches.push_back(GermBranch::smooth(m));
      std::vector<Contact> contacts;
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) contacts.push_back({i, j, t});
      }
      if (is_klt_germ(GermConfig(std::move(branches), contacts))) out.push_back(mults);
      return;
    }
    for (std::int64_t m = from; m <= max_mult; ++m) {
      mults.push_back(m);
      rec(m);
      mults.pop_back();
    }
  };
  rec(2);
  return out;
}

}  // namespace orbiklt
