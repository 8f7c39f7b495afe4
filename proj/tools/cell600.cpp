// Command-line front end: rays, ngons, census, parity, scan, report.
//
// Exit status: 0 when every check passes, 1 when a reproduced value misses
// its published counterpart (or a scan minimum is not above the classical
// bound), 2 on usage or input errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cell600/errors.hpp"
#include "cell600/report.hpp"

namespace {

using namespace cell600;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  std::string rays_path;
  std::string catalog = "600cell";
  std::string format = "text";
  unsigned threads = 0;
  bool seedless = false;
};

RaySet load_catalog(const Globals& g) {
  if (!g.rays_path.empty()) return load_rayset(g.rays_path);
  if (g.catalog == "peres24") return build_peres24();
  return build_600cell_rays();
}

/// "A", "B", or a comma list of ids and ranges ("1,2,5-9").
std::vector<RayId> parse_subset(const std::string& text, const RaySet& rays) {
  const bool builtin = rays == build_600cell_rays();
  if (text == "A" || text == "B") {
    if (!builtin) throw std::invalid_argument("sets A and B are defined for the built-in 600-cell only");
    return text == "A" ? builtin_sets().set_a : builtin_sets().set_b;
  }
  std::vector<RayId> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-', 1);
    if (dash == std::string::npos) {
      ids.push_back(std::stoi(item));
    } else {
      const int lo = std::stoi(item.substr(0, dash));
      const int hi = std::stoi(item.substr(dash + 1));
      for (int id = lo; id <= hi; ++id) ids.push_back(id);
    }
  }
  for (RayId id : ids) rays.index_of(id);
  if (ids.empty()) throw std::invalid_argument("empty id list '" + text + "'");
  return ids;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string ids_text(std::span<const RayId> ids, char sep = ' ') {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(ids[i]);
  }
  return out;
}

int cmd_rays(const Globals& g, bool graph) {
  const RaySet rays = load_catalog(g);
  const OrthoGraph og = orthogonality_graph(rays);
  if (g.format == "json") {
    json list = json::array();
    for (const Ray& r : rays.rays()) {
      json comps = json::array();
      for (const GoldenNum& c : r.components) comps.push_back(c.to_string());
      json row = {{"id", r.id}, {"components", comps}, {"norm_squared", r.norm_squared().to_string()}};
      if (graph) {
        json nb = json::array();
        for (std::size_t v : og.neighbors(rays.index_of(r.id))) nb.push_back(og.label(v));
        row["orthogonal"] = nb;
      }
      list.push_back(row);
    }
    print_json({{"catalog", rays.name()}, {"rays", list}});
  } else if (g.format == "csv") {
    std::cout << "id,c1,c2,c3,c4\n";
    for (const Ray& r : rays.rays()) {
      std::cout << r.id;
      for (const GoldenNum& c : r.components) std::cout << "," << c;
      std::cout << "\n";
    }
  } else {
    for (const Ray& r : rays.rays()) {
      std::cout << format_ray(r);
      if (graph) {
        std::vector<RayId> nb;
        for (std::size_t v : og.neighbors(rays.index_of(r.id))) nb.push_back(og.label(v));
        std::cout << "  # orthogonal to " << ids_text(nb, ',');
      }
      std::cout << "\n";
    }
  }
  return kOk;
}

OrthoGraph subset_graph(const RaySet& rays, const std::string& subset) {
  OrthoGraph g = orthogonality_graph(rays);
  if (subset.empty()) return g;
  return induced_subgraph(g, parse_subset(subset, rays));
}

int cmd_ngons(const Globals& gl, int n, const std::string& subset, const std::string& emit) {
  const RaySet rays = load_catalog(gl);
  const OrthoGraph g = subset_graph(rays, subset);
  std::uint64_t count = 0;
  if (!emit.empty()) {
    std::ofstream out(emit);
    if (!out) throw std::runtime_error("cannot write " + emit);
    for_each_ngon(g, n, [&](std::span<const std::size_t> cycle) {
      out << ids_text(to_ngon(g, cycle).cycle(), ',') << "\n";
      ++count;
    });
  } else {
    count = count_ngons(g, n, gl.threads);
  }
  const std::string label = subset.empty() ? "all" : subset;
  if (gl.format == "json") {
    print_json({{"n", n}, {"subset", label}, {"count", count}});
  } else if (gl.format == "csv") {
    std::cout << "n,subset,count\n" << n << "," << label << "," << count << "\n";
  } else {
    std::cout << n << "-gons in " << label << ": " << count << "\n";
  }
  return kOk;
}

int cmd_census(const Globals& gl, int n, const std::string& subset) {
  const RaySet rays = load_catalog(gl);
  const OrthoGraph g = subset_graph(rays, subset);
  const ConflictCensus census =
      classify_conflicts(ProjectorTable(rays), g, n, subset.empty() ? "all" : subset, gl.threads);
  if (gl.format == "json") {
    print_json(to_json(census));
  } else if (gl.format == "csv") {
    std::cout << "n,subset,lambda_max,count,conflict,example_cycle\n";
    for (const SpectrumClass& c : census.all_classes) {
      std::cout << n << "," << census.subset << "," << c.lambda_max << "," << c.count << "," << (c.conflict ? 1 : 0)
                << "," << ids_text(c.example.cycle()) << "\n";
    }
  } else {
    std::cout << n << "-gons in " << census.subset << ": " << census.total_ngons << ", conflict: "
              << census.total_conflicts << " (bound " << classical_bound(n) << ")\n";
    std::cout << "  max eigenvalue   number   conflict   example\n";
    for (const SpectrumClass& c : census.all_classes) {
      char head[64];
      std::snprintf(head, sizeof head, "  %.6f %10llu   %-8s  ", c.lambda_max,
                    static_cast<unsigned long long>(c.count), c.conflict ? "yes" : "no");
      std::cout << head << ids_text(c.example.cycle()) << "\n";
    }
  }
  return kOk;
}

int cmd_parity(const Globals& gl, const std::string& verify, bool splits, bool list) {
  const RaySet rays = load_catalog(gl);
  const OrthoGraph g = orthogonality_graph(rays);
  const auto bases = enumerate_bases(g);
  int status = kOk;
  json out = json::object();
  if (!verify.empty()) {
    const ParityReport report = verify_parity_proof(bases, parse_subset(verify, rays));
    if (!report.parity_proof) status = kCheckFailed;
    if (gl.format == "json") {
      out["verify"] = to_json(report);
    } else {
      std::cout << "subset (" << report.subset.size() << " rays): " << report.bases.size() << " bases, "
                << (report.odd_basis_count() ? "odd" : "even") << " count, "
                << (report.uniform_multiplicity_two() ? "every ray in exactly 2 bases" : "multiplicities not all 2")
                << "\nverdict: " << (report.parity_proof ? "parity proof" : "not a parity proof") << "\n";
      for (const Basis& b : report.bases) std::cout << "  " << ids_text(b.ids) << "\n";
    }
  }
  if (splits) {
    const auto found = enumerate_parity_splits(g, bases);
    if (gl.format == "json") {
      json s = {{"count", found.size()}};
      if (list) {
        json halves = json::array();
        for (const ParitySplit& sp : found) halves.push_back({sp.first.subset, sp.second.subset});
        s["splits"] = halves;
      }
      out["splits"] = s;
    } else if (gl.format == "csv") {
      std::cout << "split,half,ids\n";
      for (std::size_t i = 0; i < found.size(); ++i) {
        std::cout << i + 1 << ",1," << ids_text(found[i].first.subset) << "\n";
        std::cout << i + 1 << ",2," << ids_text(found[i].second.subset) << "\n";
      }
    } else {
      std::cout << "parity-proof splits: " << found.size() << "\n";
      if (list) {
        for (const ParitySplit& sp : found) {
          std::cout << "  " << ids_text(sp.first.subset, ',') << " | " << ids_text(sp.second.subset, ',') << "\n";
        }
      }
    }
  }
  if (gl.format == "json") print_json(out);
  return status;
}

int cmd_scan(const Globals& gl, const std::string& set, double step_deg, bool refine, bool timing) {
  const RaySet rays = load_catalog(gl);
  std::optional<std::vector<RayId>> subset;
  if (set != "all") subset = parse_subset(set, rays);
  const OperatorFamily family = conflict_family(rays, subset, 5, set, gl.threads);
  if (family.empty()) throw std::invalid_argument("set " + set + " has no conflict pentagons");
  std::cerr << "[scan] " << family.size() << " conflict pentagons, step " << step_deg << " deg" << std::endl;
  const ScanReport report = scan_universality(family, MeshSpec::degrees(step_deg), {refine, 11, gl.threads});
  if (gl.format == "json") {
    print_json(to_json(report, timing));
  } else {
    std::printf("set %s: %zu operators, %zu mesh nodes\n", set.c_str(), report.family_size, report.nodes);
    std::printf("  mesh minimum    %.9f at (%.6f, %.6f, %.6f)\n", report.mesh_min, report.mesh_argmin.phi,
                report.mesh_argmin.theta1, report.mesh_argmin.theta2);
    if (report.refined) {
      std::printf("  refined minimum %.9f at (%.6f, %.6f, %.6f)\n", report.refined_min, report.refined_argmin.phi,
                  report.refined_argmin.theta1, report.refined_argmin.theta2);
    }
    std::printf("  universal violation: %s\n", report.minimum() > 2.0 ? "yes" : "no");
    if (timing) std::printf("  %.2f s\n", report.seconds);
  }
  return report.minimum() > 2.0 ? kOk : kCheckFailed;
}

int cmd_report(const Globals& gl, ReportOptions options, const std::string& out_path) {
  const RaySet rays = load_catalog(gl);
  options.threads = gl.threads;
  options.progress = true;
  const ReportBundle bundle = build_report(rays, options);
  std::string text = gl.format == "json" ? to_json(bundle, options.timing).dump(2) + "\n" : format_report_text(bundle);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
  return bundle.all_checks_pass() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 600-cell ray system: N-gons, conflict spectra, parity proofs, universality scan"};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--rays", gl.rays_path, "Ray file (`ID: c1 c2 c3 c4` per line); default is the built-in catalog");
  app.add_option("--catalog", gl.catalog, "Built-in catalog")->check(CLI::IsMember({"600cell", "peres24"}));
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--threads", gl.threads, "Worker threads (0 = all cores)");
  app.add_flag("--seedless", gl.seedless, "Reserved; every algorithm is deterministic");

  auto* rays_cmd = app.add_subcommand("rays", "Print the ray catalog");
  bool list = false;
  bool graph = false;
  rays_cmd->add_flag("--list", list, "List every ray (the default action)");
  rays_cmd->add_flag("--graph", graph, "Append each ray's orthogonal partners");

  auto* ngons_cmd = app.add_subcommand("ngons", "Count or emit chordless N-cycles");
  int ngon_n = 5;
  std::string subset;
  std::string emit;
  ngons_cmd->add_option("--n", ngon_n, "Cycle length (>= 5)")->required();
  ngons_cmd->add_option("--subset", subset, "A, B, or a comma list of ids/ranges");
  ngons_cmd->add_option("--emit", emit, "Write one canonical cycle per line to this file");

  auto* census_cmd = app.add_subcommand("census", "Eigenvalue classes and conflict counts of N-gon operators");
  int census_n = 5;
  census_cmd->add_option("--n", census_n, "Cycle length (>= 5)")->required();
  census_cmd->add_option("--subset", subset, "A, B, or a comma list of ids/ranges");

  auto* parity_cmd = app.add_subcommand("parity", "Kochen-Specker parity proofs");
  std::string verify;
  bool splits = false;
  bool list_splits = false;
  parity_cmd->add_option("--verify", verify, "A, B, or a comma list of ids/ranges");
  parity_cmd->add_flag("--splits", splits, "Enumerate splits into two parity-proof halves");
  parity_cmd->add_flag("--list", list_splits, "With --splits, print every split");

  auto* scan_cmd = app.add_subcommand("scan", "Minimum over real rays of the largest conflict-pentagon expectation");
  std::string set = "A";
  double step_deg = 1.0;
  bool refine = false;
  bool timing = false;
  scan_cmd->add_option("--set", set, "A, B, all, or a comma list of ids/ranges");
  scan_cmd->add_option("--step-deg", step_deg, "Mesh step in degrees")->check(CLI::PositiveNumber);
  scan_cmd->add_flag("--refine", refine, "Refine the lowest mesh minima with Nelder-Mead");
  scan_cmd->add_flag("--timing", timing, "Report wall-clock time");

  auto* report_cmd = app.add_subcommand("report", "Reproduce every table and the universality scans");
  ReportOptions options;
  bool full = false;
  bool quick = false;
  bool no_scan = false;
  bool no_refine = false;
  std::string out_path;
  report_cmd->add_flag("--full", full, "Force N = 5..15 and both refined scans, overriding other flags");
  report_cmd->add_flag("--quick", quick, "N = 5..7 and no scans");
  report_cmd->add_option("--n-min", options.n_min, "Smallest N");
  report_cmd->add_option("--n-max", options.n_max, "Largest N");
  report_cmd->add_option("--step-deg", options.step_deg, "Scan mesh step in degrees")->check(CLI::PositiveNumber);
  report_cmd->add_flag("--no-scan", no_scan, "Skip the universality scans");
  report_cmd->add_flag("--no-refine", no_refine, "Skip scan refinement");
  report_cmd->add_flag("--timing", options.timing, "Include wall-clock timings");
  report_cmd->add_option("--out", out_path, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*rays_cmd) return cmd_rays(gl, graph);
    if (*ngons_cmd) return cmd_ngons(gl, ngon_n, subset, emit);
    if (*census_cmd) return cmd_census(gl, census_n, subset);
    if (*parity_cmd) {
      if (verify.empty() && !splits) {
        std::cerr << "parity: give --verify and/or --splits\n";
        return kUsage;
      }
      return cmd_parity(gl, verify, splits, list_splits);
    }
    if (*scan_cmd) return cmd_scan(gl, set, step_deg, refine, timing);
    if (*report_cmd) {
      options.scans = !no_scan;
      options.refine = !no_refine;
      if (quick) {
        options.n_max = std::min(options.n_max, 7);
        options.scans = false;
      }
      if (full) {
        options.n_min = 5;
        options.n_max = 15;
        options.scans = true;
        options.refine = true;
      }
      return cmd_report(gl, options, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
