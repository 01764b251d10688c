#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbiklt/commands.hpp"
#include "orbiklt/dual_graph.hpp"
#include "orbiklt/errors.hpp"
#include "orbiklt/exact_core.hpp"
#include "orbiklt/germ.hpp"
#include "orbiklt/orbibase.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace orbiklt;

namespace {

using BranchTuple = std::tuple<std::size_t, std::int64_t, std::int64_t>;

py::object fraction(const Rational& r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(r.str());
}

py::list fractions(const std::vector<Rational>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(fraction(x));
  return out;
}

DualGraph make_graph(const std::vector<std::int64_t>& vertices, const std::vector<Edge>& edges,
                     const std::vector<BranchTuple>& branches) {
  std::vector<WhiteVertex> v;
  for (auto e : vertices) v.push_back({e});
  std::vector<BranchAttachment> b;
  for (const auto& [vertex, mult, inter] : branches) b.push_back({vertex, Multiplicity(mult), inter});
  return DualGraph(v, edges, b);
}

// Branches as dicts: {"kind": "smooth"|"cusp", "p", "q", "mult"}.
GermConfig make_germ(const std::vector<py::dict>& branches,
                     const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>& contacts) {
  std::vector<GermBranch> bs;
  for (const auto& d : branches) {
    const auto kind = d["kind"].cast<std::string>();
    const auto mult = d["mult"].cast<std::int64_t>();
    if (kind == "smooth") {
      bs.push_back(GermBranch::smooth(mult));
    } else if (kind == "cusp") {
      bs.push_back(GermBranch::cusp(d["p"].cast<std::int64_t>(), d["q"].cast<std::int64_t>(), mult));
    } else {
      throw InvalidArgument("branch kind must be 'smooth' or 'cusp', got '" + kind + "'");
    }
  }
  std::vector<Contact> cs;
  for (const auto& [i, j, t] : contacts) cs.push_back({i, j, t});
  return GermConfig(std::move(bs), cs);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact klt, discrepancy and orbifold-group computations for surface pairs";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<NotNegativeDefinite>(m, "NotNegativeDefinite", error.ptr());
  py::register_exception<WrongClass>(m, "WrongClass", error.ptr());
  py::register_exception<Unsupported>(m, "Unsupported", error.ptr());
  py::register_exception<NotSpecial>(m, "NotSpecial", error.ptr());

  m.def("hj_expand", [](std::int64_t n, std::int64_t q) { return hj_expand(n, q).entries(); }, "n"_a, "q"_a,
        "Hirzebruch-Jung chain of n/q");
  m.def(
      "hj_evaluate",
      [](const std::vector<std::int64_t>& chain) {
        const auto nq = hj_evaluate(HjChain(chain));
        return std::make_pair(nq.n, nq.q);
      },
      "chain"_a, "(N, q) with N/q = e1 - 1/(e2 - ...)");

  m.def(
      "solve_discrepancies",
      [](const std::vector<std::int64_t>& vertices, const std::vector<Edge>& edges,
         const std::vector<BranchTuple>& branches) {
        const auto g = make_graph(vertices, edges, branches);
        const auto r = solve_discrepancies(g);
        return py::dict("a"_a = fractions(r.a), "d"_a = fractions(r.d), "is_klt"_a = r.is_klt,
                        "graph_class"_a = to_string(classify_graph(g)));
      },
      "vertices"_a, "edges"_a, "branches"_a = std::vector<BranchTuple>{},
      "Discrepancies of a dual graph. vertices: self-intersections -E^2; branches: (vertex, mult, inter)");
  m.def(
      "classify_graph",
      [](const std::vector<std::int64_t>& vertices, const std::vector<Edge>& edges,
         const std::vector<BranchTuple>& branches) { return to_string(classify_graph(make_graph(vertices, edges, branches))); },
      "vertices"_a, "edges"_a, "branches"_a = std::vector<BranchTuple>{});
  m.def(
      "cyclic_invariants",
      [](const std::vector<std::int64_t>& vertices, const std::vector<Edge>& edges,
         const std::vector<BranchTuple>& branches) {
        const auto g = make_graph(vertices, edges, branches);
        const auto nq = cyclic_invariants(g);
        return py::dict("N"_a = nq.n, "q"_a = nq.q, "order"_a = local_group_order(g));
      },
      "vertices"_a, "edges"_a, "branches"_a);

  m.def(
      "classify_germ",
      [](const std::vector<py::dict>& branches, const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>& contacts) {
        const auto g = make_germ(branches, contacts);
        const auto c = classify_germ(g);
        return py::dict("class"_a = class_name(c), "parameters"_a = class_parameters(c), "is_klt"_a = is_klt_germ(g),
                        "blowup_discrepancy"_a = fraction(blowup_discrepancy(g)));
      },
      "branches"_a, "contacts"_a = std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>{});
  m.def("enumerate_tangent_family", &enumerate_tangent_family, "branches"_a, "contact"_a, "max_mult"_a);
  m.def(
      "etale_cover_over_cusp",
      [](std::int64_t p, std::int64_t q, std::int64_t mult) {
        const auto v = etale_cover_over_cusp(p, q, Multiplicity(mult));
        return py::dict("equation"_a = v.equation, "exponent_sum"_a = fraction(v.exponent_sum), "klt"_a = v.klt,
                        "du_val_type"_a = v.du_val_type);
      },
      "p"_a, "q"_a, "mult"_a);
  m.def(
      "cover_split_tangent",
      [](std::int64_t p, std::int64_t m1) {
        const auto s = cover_split_tangent(p, Multiplicity(m1));
        return py::dict("d"_a = s.d, "p_reduced"_a = s.p_reduced, "m1_reduced"_a = s.m1_reduced, "smooth"_a = s.smooth);
      },
      "p"_a, "m1"_a);

  m.def(
      "curve_group",
      [](std::int64_t genus, const std::vector<std::int64_t>& mults) {
        const auto info = curve_group(OrbifoldCurve(genus, mults));
        return py::dict("degree"_a = fraction(info.degree), "trichotomy"_a = to_string(info.trichotomy),
                        "presentation"_a = to_string(info.presentation), "order"_a = info.order,
                        "almost_abelian"_a = info.almost_abelian, "rank"_a = info.rank,
                        "bad_orbifold"_a = info.bad_orbifold);
      },
      "genus"_a, "mults"_a = std::vector<std::int64_t>{}, "order is None when the group is infinite");
  m.def(
      "orbifold_base",
      [](std::int64_t base_genus, const std::map<std::string, std::vector<std::pair<std::int64_t, std::int64_t>>>& fibers) {
        FibrationData f;
        f.base_genus = base_genus;
        for (const auto& [label, comps] : fibers) {
          FiberData fd;
          for (const auto& [fm, om] : comps) fd.components.push_back({fm, Multiplicity(om)});
          f.marked_fibers[label] = fd;
        }
        const auto base = orbifold_base(f);
        return py::dict("genus"_a = base.genus(), "mults"_a = base.mults(), "degree"_a = fraction(curve_degree(base)),
                        "general_type"_a = is_general_type_fibration(f));
      },
      "base_genus"_a, "fibers"_a, "fibers: point label -> [(fiber multiplicity, orbifold multiplicity), ...]");

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"orbiklt"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return std::make_tuple(code, out.str(), err.str());
      },
      "args"_a, "Run a command-line invocation in process; returns (exit code, stdout, stderr)");
}
