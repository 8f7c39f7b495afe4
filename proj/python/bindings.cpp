#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "cell600/errors.hpp"
#include "cell600/ngons.hpp"
#include "cell600/parity.hpp"
#include "cell600/report.hpp"
#include "cell600/scan.hpp"

namespace py = pybind11;
using namespace cell600;

namespace {

// "600cell", "peres24" or a path to a ray file.
RaySet load(const std::string& catalog) {
  if (catalog == "600cell") return build_600cell_rays();
  if (catalog == "peres24") return build_peres24();
  return load_rayset(catalog);
}

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::optional<std::vector<RayId>> resolve_subset(const std::optional<std::string>& name,
                                                 const std::optional<std::vector<RayId>>& ids) {
  if (ids) return ids;
  if (!name) return std::nullopt;
  if (*name == "A") return builtin_sets().set_a;
  if (*name == "B") return builtin_sets().set_b;
  throw py::value_error("subset must be 'A', 'B' or a list of ray ids");
}

OrthoGraph restricted(const RaySet& rays, const std::optional<std::vector<RayId>>& subset) {
  const OrthoGraph g = orthogonality_graph(rays);
  return subset ? induced_subgraph(g, *subset) : g;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.attr("__version__") = kVersion;

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_ValueError);

  m.def(
      "rays",
      [](const std::string& catalog) {
        const RaySet rs = load(catalog);
        py::list out;
        for (const Ray& r : rs.rays()) {
          py::list exact;
          for (const GoldenNum& c : r.components) exact.append(c.to_string());
          out.append(py::dict(py::arg("id") = r.id, py::arg("exact") = exact, py::arg("vector") = r.to_double()));
        }
        return out;
      },
      py::arg("catalog") = "600cell", "Rays of a catalog with exact and floating-point components.");

  m.def(
      "builtin_sets",
      [] {
        const BuiltinSets& s = builtin_sets();
        return py::dict(py::arg("A") = s.set_a, py::arg("B") = s.set_b);
      },
      "The two 30-ray parity-proof halves of the 600-cell.");

  m.def(
      "bases",
      [](const std::string& catalog, std::optional<std::string> subset, std::optional<std::vector<RayId>> ids) {
        const RaySet rs = load(catalog);
        std::vector<std::array<RayId, 4>> out;
        for (const Basis& b : enumerate_bases(restricted(rs, resolve_subset(subset, ids)))) out.push_back(b.ids);
        return out;
      },
      py::arg("catalog") = "600cell", py::arg("subset") = py::none(), py::arg("ids") = py::none(),
      "Orthogonal bases (4-cliques), sorted.");

  m.def(
      "count_ngons",
      [](int n, const std::string& catalog, std::optional<std::string> subset, std::optional<std::vector<RayId>> ids,
         unsigned threads) {
        const RaySet rs = load(catalog);
        const OrthoGraph g = restricted(rs, resolve_subset(subset, ids));
        py::gil_scoped_release release;
        return count_ngons(g, n, threads);
      },
      py::arg("n"), py::arg("catalog") = "600cell", py::arg("subset") = py::none(), py::arg("ids") = py::none(),
      py::arg("threads") = 0u, "Number of induced n-cycles.");

  m.def(
      "census",
      [](int n, const std::string& catalog, std::optional<std::string> subset, std::optional<std::vector<RayId>> ids,
         unsigned threads) {
        const RaySet rs = load(catalog);
        const auto chosen = resolve_subset(subset, ids);
        const OrthoGraph g = orthogonality_graph(rs);
        ConflictCensus c;
        {
          py::gil_scoped_release release;
          c = classify_conflicts(rs, g, n, chosen, subset.value_or(chosen ? "custom" : "all"), threads);
        }
        return to_python(to_json(c));
      },
      py::arg("n"), py::arg("catalog") = "600cell", py::arg("subset") = py::none(), py::arg("ids") = py::none(),
      py::arg("threads") = 0u, "Conflict census of the n-gons, grouped by largest eigenvalue.");

  m.def(
      "verify_parity",
      [](const std::vector<RayId>& ids, const std::string& catalog) {
        return to_python(to_json(verify_parity_proof(load(catalog), ids)));
      },
      py::arg("ids"), py::arg("catalog") = "600cell", "Parity-proof verdict for a ray subset.");

  m.def(
      "parity_splits",
      [](const std::string& catalog) {
        const RaySet rs = load(catalog);
        std::vector<ParitySplit> splits;
        {
          py::gil_scoped_release release;
          splits = enumerate_parity_splits(rs);
        }
        py::list out;
        for (const ParitySplit& s : splits) out.append(py::make_tuple(s.first.subset, s.second.subset));
        return out;
      },
      py::arg("catalog") = "600cell", "All splits into two complementary parity-proof halves.");

  m.def(
      "violation_value",
      [](const std::array<double, 4>& r, const std::string& set, int n) {
        const RaySet rs = build_600cell_rays();
        const auto subset = resolve_subset(set == "all" ? std::nullopt : std::optional<std::string>(set), {});
        return conflict_family(rs, subset, n, set).value(r);
      },
      py::arg("r"), py::arg("set") = "A", py::arg("n") = 5,
      "max over the conflict n-gons of a 600-cell half of r^T S r.");

  m.def(
      "scan",
      [](const std::string& set, double step_deg, bool refine, const std::string& catalog, unsigned threads) {
        const RaySet rs = load(catalog);
        const auto subset = resolve_subset(set == "all" ? std::nullopt : std::optional<std::string>(set), {});
        ScanReport r;
        {
          py::gil_scoped_release release;
          const OperatorFamily family = conflict_family(rs, subset, 5, set, threads);
          r = scan_universality(family, MeshSpec::degrees(step_deg), {refine, 11, threads});
        }
        return to_python(to_json(r));
      },
      py::arg("set") = "A", py::arg("step_deg") = 1.0, py::arg("refine") = true, py::arg("catalog") = "600cell",
      py::arg("threads") = 0u, "Mesh scan plus refinement of the minimum over r of the violation value.");

  m.def(
      "report",
      [](const std::string& catalog, int n_min, int n_max, bool scans, double step_deg, bool refine,
         unsigned threads) {
        ReportOptions o;
        o.n_min = n_min;
        o.n_max = n_max;
        o.scans = scans;
        o.step_deg = step_deg;
        o.refine = refine;
        o.threads = threads;
        const RaySet rs = load(catalog);
        ReportBundle b;
        {
          py::gil_scoped_release release;
          b = build_report(rs, o);
        }
        return to_python(to_json(b));
      },
      py::arg("catalog") = "600cell", py::arg("n_min") = 5, py::arg("n_max") = 15, py::arg("scans") = true,
      py::arg("step_deg") = 1.0, py::arg("refine") = true, py::arg("threads") = 0u,
      "Full reproduction report with checks against the published values.");
}
