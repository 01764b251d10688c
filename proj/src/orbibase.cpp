#include "orbiklt/orbibase.hpp"

#include <algorithm>
#include <numeric>

#include "orbiklt/errors.hpp"

namespace orbiklt {

OrbifoldCurve::OrbifoldCurve(std::int64_t genus, std::vector<std::int64_t> mults)
    : genus_(genus), mults_(std::move(mults)) {
  if (genus_ < 0) throw InvalidArgument("genus must be >= 0");
  for (auto m : mults_) {
    if (m < 2) throw InvalidArgument("marked multiplicities must be >= 2, got " + std::to_string(m));
  }
  std::sort(mults_.begin(), mults_.end());
}

std::string to_string(const OrbifoldCurve& c) {
  std::string out = "(g=" + std::to_string(c.genus()) + ", mults=(";
  for (std::size_t i = 0; i < c.mults().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c.mults()[i]);
  }
  return out + "))";
}

std::string to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::Hyperbolic: return "Hyperbolic";
    case Trichotomy::Euclidean: return "Euclidean";
    case Trichotomy::Spherical: return "Spherical";
  }
  return "Hyperbolic";
}

std::string to_string(const Presentation& p) {
  auto word = [&](const std::vector<int>& w) {
    std::string out;
    // Collapse runs of one generator into powers.
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!out.empty()) out += "*";
      out += p.generators[static_cast<std::size_t>(std::abs(w[i]) - 1)];
      const auto run = static_cast<long>(j - i);
      const long power = w[i] < 0 ? -run : run;
      if (power != 1) out += "^" + std::to_string(power);
      i = j;
    }
    return out.empty() ? std::string("1") : out;
  };
  std::string out = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ",";
    out += p.generators[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i) out += ", ";
    out += word(p.relators[i]);
  }
  return out + ">";
}

Rational curve_degree(const OrbifoldCurve& c) {
  Rational d(2 * c.genus() - 2);
  for (auto m : c.mults()) d += coeff(Multiplicity(m));
  return d;
}

CurveGroupInfo curve_group(const OrbifoldCurve& c) {
  CurveGroupInfo info;
  info.degree = curve_degree(c);
  info.trichotomy = info.degree.sign() > 0 ? Trichotomy::Hyperbolic
                    : info.degree.is_zero() ? Trichotomy::Euclidean
                                            : Trichotomy::Spherical;

  auto& pres = info.presentation;
  const auto g = static_cast<int>(c.genus());
  const auto r = static_cast<int>(c.mults().size());
  for (int i = 1; i <= g; ++i) {
    pres.generators.push_back("a" + std::to_string(i));
    pres.generators.push_back("b" + std::to_string(i));
  }
  for (int j = 1; j <= r; ++j) pres.generators.push_back("c" + std::to_string(j));
  std::vector<int> surface;
  for (int i = 0; i < g; ++i) {
    const int a = 2 * i + 1;
    const int b = 2 * i + 2;
    surface.insert(surface.end(), {a, b, -a, -b});
  }
  for (int j = 0; j < r; ++j) surface.push_back(2 * g + j + 1);
  pres.relators.push_back(surface);
  for (int j = 0; j < r; ++j) {
    pres.relators.emplace_back(static_cast<std::size_t>(c.mults()[static_cast<std::size_t>(j)]), 2 * g + j + 1);
  }

  const auto& m = c.mults();
  if (c.genus() == 0 && r <= 2) {
    // c_1 c_2 = 1 leaves a cyclic group of order gcd(m_1, m_2); with one
    // mark the generator itself is killed.
    info.order = r == 2 ? std::gcd(m[0], m[1]) : 1;
    info.bad_orbifold = r == 1 || (r == 2 && m[0] != m[1]);
  } else if (c.genus() == 0 && r == 3 && info.trichotomy == Trichotomy::Spherical) {
    const Rational order = Rational(2) / (-info.degree);
    if (!order.is_integer()) throw std::logic_error("spherical triangle group with non-integral order");
    info.order = order.numerator().get_si();
  }
  info.almost_abelian = info.trichotomy != Trichotomy::Hyperbolic;
  if (info.trichotomy == Trichotomy::Euclidean) info.rank = 2;
  if (info.trichotomy == Trichotomy::Spherical) info.rank = 0;
  return info;
}

bool is_special_curve(const OrbifoldCurve& c) { return curve_degree(c).sign() <= 0; }

std::int64_t fiber_multiplicity(const FiberData& fd) {
  if (fd.components.empty()) throw InvalidArgument("fiber needs at least one component");
  std::vector<std::int64_t> products;
  for (const auto& comp : fd.components) {
    if (comp.fiber_mult < 1) throw InvalidArgument("fiber multiplicities must be >= 1");
    products.push_back(comp.fiber_mult * comp.orb_mult.value());
  }
  return gcd_list(products);
}

OrbifoldCurve orbifold_base(const FibrationData& f) {
  std::vector<std::int64_t> marks;
  for (const auto& [label, fiber] : f.marked_fibers) {
    const std::int64_t m = fiber_multiplicity(fiber);
    if (m >= 2) marks.push_back(m);
  }
  return OrbifoldCurve(f.base_genus, std::move(marks));
}

bool is_general_type_fibration(const FibrationData& f) { return curve_degree(orbifold_base(f)).sign() > 0; }

std::string to_string(Kappa k) {
  switch (k) {
    case Kappa::NegInfinity: return "-inf";
    case Kappa::Zero: return "0";
    case Kappa::One: return "1";
    case Kappa::Two: return "2";
  }
  return "-inf";
}

Kappa parse_kappa(const std::string& text) {
  if (text == "-inf" || text == "-infinity" || text == "neginf") return Kappa::NegInfinity;
  if (text == "0") return Kappa::Zero;
  if (text == "1") return Kappa::One;
  if (text == "2") return Kappa::Two;
  throw InvalidArgument("kappa must be one of -inf, 0, 1, 2; got '" + text + "'");
}

bool is_special_orbisurface(Kappa kappa, const std::vector<FibrationData>& fibrations) {
  if (kappa == Kappa::Two) return false;
  return std::none_of(fibrations.begin(), fibrations.end(), is_general_type_fibration);
}

std::string to_string(VerdictKind k) { return k == VerdictKind::Finite ? "Finite" : "AlmostAbelian"; }

std::string to_string(VerdictBranch b) {
  switch (b) {
    case VerdictBranch::Kappa1Fibration: return "Kappa1Fibration";
    case VerdictBranch::MoriFiber: return "MoriFiber";
    case VerdictBranch::Kappa0Nef: return "Kappa0Nef";
    case VerdictBranch::DelPezzo: return "DelPezzo";
  }
  return "Kappa0Nef";
}

Verdict abelianity_verdict(const SurfaceSummary& s, bool special) {
  if (!special) throw NotSpecial("surface is not special: no abelianity verdict");
  if (s.kappa == Kappa::Two) throw NotSpecial("kappa = 2: surface is not special, no abelianity verdict");
  if (s.kappa == Kappa::NegInfinity && std::holds_alternative<outcome::Nef>(s.outcome)) {
    throw InvalidArgument("kappa = -inf is incompatible with a nef minimal model");
  }

  Verdict v;
  if (s.kappa == Kappa::One) {
    if (s.kappa1_fibration) {
      const auto& fib = *s.kappa1_fibration;
      if (curve_group(fib.fiber).trichotomy != Trichotomy::Euclidean) {
        throw InvalidArgument("kappa = 1 needs an orbifold-elliptic general fiber (degree 0), got " +
                              to_string(fib.fiber));
      }
      if (!is_special_curve(orbifold_base(fib.fibration))) {
        throw NotSpecial("orbifold base " + to_string(orbifold_base(fib.fibration)) +
                         " is of general type: surface is not special");
      }
    }
    v.branch = VerdictBranch::Kappa1Fibration;
    v.rationale =
        "kappa = 1: the Iitaka fibration has orbifold-elliptic general fibers, whose group is almost abelian; "
        "pi1(X,Delta) is an extension of the special orbifold base's group by the fiber's image, hence almost "
        "abelian";
    return v;
  }

  return std::visit(
      [&](const auto& out) -> Verdict {
        using T = std::decay_t<decltype(out)>;
        if constexpr (std::is_same_v<T, outcome::MoriFiberOverCurve>) {
          if (s.kappa != Kappa::NegInfinity) throw InvalidArgument("a Mori fiber space has kappa = -inf");
          if (!is_special_curve(out.base)) {
            throw NotSpecial("Mori fibration base " + to_string(out.base) + " is of general type");
          }
          v.branch = VerdictBranch::MoriFiber;
          v.rationale =
              "Mori fiber space over a special curve: the fibers are rational, so pi1(X,Delta) is an extension of "
              "an almost abelian base group by a finite or trivial fiber image, hence almost abelian";
        } else if constexpr (std::is_same_v<T, outcome::DelPezzo>) {
          if (s.kappa != Kappa::NegInfinity) throw InvalidArgument("a log del Pezzo minimal model has kappa = -inf");
          v.kind = VerdictKind::Finite;
          v.branch = VerdictBranch::DelPezzo;
          v.rank_bound = 0;
          v.rationale =
              "log del Pezzo minimal model (S,D): c1 > 0 gives a finite orbifold group, and pi1(S,D) surjects "
              "onto pi1(X,Delta) through the minimal-model morphism";
        } else {
          v.branch = VerdictBranch::Kappa0Nef;
          v.rationale =
              "kappa = 0 with K_S + D nef: semi-ample and then torsion, so (S,D) is Ricci-flat and pi1(S,D) is "
              "almost abelian of even rank at most 4; it surjects onto pi1(X,Delta) through the minimal-model "
              "morphism";
        }
        return v;
      },
      s.outcome);
}

}  // namespace orbiklt
