#include "cell600/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>

namespace cell600 {

using nlohmann::json;

json to_json(const NGon& gon) { return json(std::vector<RayId>(gon.cycle().begin(), gon.cycle().end())); }

namespace {

json classes_json(const std::vector<SpectrumClass>& classes) {
  json out = json::array();
  for (const SpectrumClass& c : classes) {
    out.push_back({{"lambda_max", c.lambda_max}, {"count", c.count}, {"example_cycle", to_json(c.example)}});
  }
  return out;
}

}  // namespace

json to_json(const ConflictCensus& census) {
  json all = classes_json(census.all_classes);
  for (std::size_t i = 0; i < census.all_classes.size(); ++i) all[i]["conflict"] = census.all_classes[i].conflict;
  return {{"n", census.n},
          {"subset", census.subset},
          {"classes", classes_json(census.classes)},
          {"total_ngons", census.total_ngons},
          {"total_conflicts", census.total_conflicts},
          {"classical_bound", classical_bound(census.n)},
          {"max_lambda", census.max_lambda},
          {"all_classes", all}};
}

json to_json(const ParityReport& report) {
  json bases = json::array();
  for (const Basis& b : report.bases) bases.push_back(b.ids);
  json mult = json::object();
  for (const auto& [id, m] : report.multiplicity) mult[std::to_string(id)] = m;
  return {{"subset", report.subset},
          {"bases", bases},
          {"basis_count", report.bases.size()},
          {"multiplicity", mult},
          {"odd_basis_count", report.odd_basis_count()},
          {"uniform_multiplicity_two", report.uniform_multiplicity_two()},
          {"parity_proof", report.parity_proof}};
}

json to_json(const Angles& angles) {
  return {{"phi", angles.phi}, {"theta1", angles.theta1}, {"theta2", angles.theta2}};
}

json to_json(const ScanReport& report, bool with_timing) {
  json starts = json::array();
  for (const RefinedStart& s : report.starts) {
    starts.push_back({{"start", to_json(s.start)},
                      {"start_value", s.start_value},
                      {"refined", to_json(s.result.angles)},
                      {"refined_value", s.result.value},
                      {"evaluations", s.result.evaluations}});
  }
  json out = {{"family", report.family},
              {"family_size", report.family_size},
              {"mesh",
               {{"phi_step", report.mesh.phi_step},
                {"theta1_step", report.mesh.theta1_step},
                {"theta2_step", report.mesh.theta2_step},
                {"nodes", report.nodes}}},
              {"mesh_min", report.mesh_min},
              {"mesh_argmin", to_json(report.mesh_argmin)},
              {"refined", report.refined},
              {"minimum", report.minimum()},
              {"classical_bound", 2},
              {"universal", report.minimum() > 2.0}};
  if (report.refined) {
    out["refined_min"] = report.refined_min;
    out["refined_argmin"] = to_json(report.refined_argmin);
    out["refine_starts"] = starts;
  }
  if (with_timing) out["seconds"] = report.seconds;
  return out;
}

OperatorFamily conflict_family(const RaySet& rays, const std::optional<std::vector<RayId>>& subset, int n,
                               std::string label, unsigned threads) {
  const ProjectorTable projectors(rays);
  OrthoGraph g = orthogonality_graph(rays);
  if (subset) g = induced_subgraph(g, *subset);
  const auto ops = ngon_operators(projectors, g, n, true, threads);
  std::vector<SymMatrix4> matrices;
  matrices.reserve(ops.size());
  for (const GonOperator& op : ops) matrices.push_back(op.matrix);
  return OperatorFamily(matrices, std::move(label));
}

namespace published {

// N-gon census of the 600-cell, indexed by n - 5.
constexpr std::array<std::uint64_t, 11> kNgons = {22'320, 94'200, 302'400, 432'000, 436'800, 862'560,
                                                   410'400, 175'800, 302'400, 43'200,  33'120};
constexpr std::array<std::uint64_t, 11> kConflicts = {18'000, 0, 14'400, 0, 0, 0, 0, 0, 0, 0, 0};
constexpr std::array<std::uint64_t, 11> kPerHalf = {1'200, 2'100, 3'030, 1'110, 630, 0, 0, 0, 0, 0, 8};

using ClassList = std::vector<std::pair<double, std::uint64_t>>;
const ClassList kPentagonsA = {{2.1778, 210}, {2.1142, 420}, {2.0850, 360}};
const ClassList kPentagonsB = {{2.1778, 180}, {2.1142, 420}, {2.0850, 360}};
const ClassList kHeptagonsA = {{3.005, 120}};
const ClassList kHeptagonsB = {{3.043, 120}, {3.005, 60}};

constexpr std::size_t kBases = 75;
constexpr std::size_t kBasesPerHalf = 15;
constexpr std::size_t kSplits = 120;
constexpr double kMaxPentagon = 2.1778;
constexpr double kVA = 2.059;
constexpr double kVB = 2.020;
constexpr double kEigenTolerance = 5e-4;
constexpr double kScanTolerance = 5e-3;

}  // namespace published

namespace {

std::string fmt(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string classes_text(const std::vector<SpectrumClass>& classes) {
  std::string out = "{";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) out += ", ";
    out += fmt(classes[i].lambda_max, 4) + ": " + std::to_string(classes[i].count);
  }
  return out + "}";
}

std::string classes_text(const published::ClassList& classes) {
  std::string out = "{";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) out += ", ";
    out += fmt(classes[i].first, 4) + ": " + std::to_string(classes[i].second);
  }
  return out + "}";
}

bool classes_match(const std::vector<SpectrumClass>& got, const published::ClassList& want) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (std::abs(got[i].lambda_max - want[i].first) > published::kEigenTolerance) return false;
    if (got[i].count != want[i].second) return false;
  }
  return true;
}

void check_count(ReportBundle& b, std::string name, std::uint64_t expected, std::uint64_t actual) {
  b.checks.push_back({std::move(name), std::to_string(expected), std::to_string(actual), expected == actual});
}

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

bool ReportBundle::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

ReportBundle build_report(const RaySet& rays, const ReportOptions& options) {
  auto progress = [&](const std::string& msg) {
    if (options.progress) std::cerr << "[report] " << msg << std::endl;
  };
  Stopwatch clock;
  ReportBundle b;
  b.catalog = rays.name();
  b.rays = rays.size();
  const bool is_600cell = rays == build_600cell_rays();

  const OrthoGraph g = orthogonality_graph(rays);
  b.edges = g.edge_count();
  std::set<std::size_t> degrees;
  for (std::size_t v = 0; v < g.size(); ++v) degrees.insert(g.degree(v));
  b.degrees.assign(degrees.begin(), degrees.end());
  const std::vector<Basis> bases = enumerate_bases(g);
  b.bases = bases.size();
  b.timing["graph"] = clock.lap();

  const BuiltinSets& sets = builtin_sets();
  if (is_600cell) {
    check_count(b, "bases in the 600-cell", published::kBases, b.bases);
    progress("parity");
    b.parity_a = verify_parity_proof(bases, sets.set_a);
    b.parity_b = verify_parity_proof(bases, sets.set_b);
    b.checks.push_back({"set A is a parity proof with 15 bases", "true",
                        b.parity_a->parity_proof && b.parity_a->bases.size() == published::kBasesPerHalf ? "true" : "false",
                        b.parity_a->parity_proof && b.parity_a->bases.size() == published::kBasesPerHalf});
    b.checks.push_back({"set B is a parity proof with 15 bases", "true",
                        b.parity_b->parity_proof && b.parity_b->bases.size() == published::kBasesPerHalf ? "true" : "false",
                        b.parity_b->parity_proof && b.parity_b->bases.size() == published::kBasesPerHalf});
  } else {
    b.skipped.push_back("parity of sets A/B (not the built-in 600-cell catalog)");
  }
  progress("parity splits");
  const auto splits = enumerate_parity_splits(g, bases);
  b.splits = splits.size();
  if (is_600cell) {
    check_count(b, "parity splits", published::kSplits, splits.size());
    const bool found = std::any_of(splits.begin(), splits.end(), [&](const ParitySplit& s) {
      return s.first.subset == sets.set_a && s.second.subset == sets.set_b;
    });
    b.splits_contain_ab = found;
    b.checks.push_back({"splits include (A, B)", "true", found ? "true" : "false", found});
  }
  b.timing["parity"] = clock.lap();

  const ProjectorTable projectors(rays);
  std::optional<OrthoGraph> graph_a;
  std::optional<OrthoGraph> graph_b;
  if (is_600cell) {
    graph_a = induced_subgraph(g, sets.set_a);
    graph_b = induced_subgraph(g, sets.set_b);
  }
  for (int n = std::max(options.n_min, 5); n <= options.n_max; ++n) {
    if (static_cast<std::size_t>(n) > g.size()) {
      b.skipped.push_back("n = " + std::to_string(n) + " exceeds the catalog size");
      continue;
    }
    progress("census n = " + std::to_string(n));
    b.census_all[n] = classify_conflicts(projectors, g, n, "all", options.threads);
    if (!is_600cell) continue;
    b.census_a[n] = classify_conflicts(projectors, *graph_a, n, "A", options.threads);
    b.census_b[n] = classify_conflicts(projectors, *graph_b, n, "B", options.threads);
    if (n > 15) continue;
    const auto idx = static_cast<std::size_t>(n - 5);
    const std::string tag = std::to_string(n) + "-gons";
    check_count(b, tag + " in the 600-cell", published::kNgons[idx], b.census_all[n].total_ngons);
    check_count(b, "conflict " + tag + " in the 600-cell", published::kConflicts[idx],
                b.census_all[n].total_conflicts);
    check_count(b, tag + " in set A", published::kPerHalf[idx], b.census_a[n].total_ngons);
    check_count(b, tag + " in set B", published::kPerHalf[idx], b.census_b[n].total_ngons);
    if (n == 5 || n == 7) {
      const auto& want_a = n == 5 ? published::kPentagonsA : published::kHeptagonsA;
      const auto& want_b = n == 5 ? published::kPentagonsB : published::kHeptagonsB;
      b.checks.push_back({"conflict " + tag + " classes in set A", classes_text(want_a),
                          classes_text(b.census_a[n].classes), classes_match(b.census_a[n].classes, want_a)});
      b.checks.push_back({"conflict " + tag + " classes in set B", classes_text(want_b),
                          classes_text(b.census_b[n].classes), classes_match(b.census_b[n].classes, want_b)});
    }
    if (n == 5) {
      const double top = b.census_all[n].max_lambda;
      b.checks.push_back({"largest pentagon eigenvalue", fmt(published::kMaxPentagon, 4), fmt(top),
                          std::abs(top - published::kMaxPentagon) <= published::kEigenTolerance});
    }
  }
  if (!is_600cell) b.skipped.push_back("census of sets A/B (not the built-in 600-cell catalog)");
  b.timing["census"] = clock.lap();

  if (options.scans && is_600cell) {
    const MeshSpec mesh = MeshSpec::degrees(options.step_deg);
    const ScanOptions scan_options{options.refine, 11, options.threads};
    const std::pair<const std::vector<RayId>*, double> halves[] = {{&sets.set_a, published::kVA},
                                                                   {&sets.set_b, published::kVB}};
    for (const auto& [set, want] : halves) {
      const bool is_a = set == &sets.set_a;
      const std::string label = is_a ? "A" : "B";
      progress("scan set " + label);
      const OperatorFamily family = conflict_family(rays, *set, 5, label, options.threads);
      ScanReport scan = scan_universality(family, mesh, scan_options);
      const double got = scan.minimum();
      b.checks.push_back({"V_" + label + " minimum", fmt(want, 3) + " +- " + fmt(published::kScanTolerance, 3),
                          fmt(got), std::abs(got - want) <= published::kScanTolerance});
      b.checks.push_back({"V_" + label + " > 2 everywhere", "true", got > 2.0 ? "true" : "false", got > 2.0});
      (is_a ? b.scan_a : b.scan_b) = std::move(scan);
    }
  } else if (options.scans) {
    b.skipped.push_back("universality scans (sets A/B are defined for the 600-cell only)");
  } else {
    b.skipped.push_back("universality scans (disabled)");
  }
  b.timing["scan"] = clock.lap();
  return b;
}

json to_json(const ReportBundle& b, bool with_timing) {
  json census = json::array();
  for (const auto& [n, c] : b.census_all) {
    json row = {{"n", n}, {"all", to_json(c)}};
    if (auto it = b.census_a.find(n); it != b.census_a.end()) row["A"] = to_json(it->second);
    if (auto it = b.census_b.find(n); it != b.census_b.end()) row["B"] = to_json(it->second);
    census.push_back(row);
  }
  json checks = json::array();
  for (const Check& c : b.checks) {
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  }
  json out = {{"version", kVersion},
              {"catalog", {{"name", b.catalog}, {"rays", b.rays}, {"edges", b.edges}, {"degrees", b.degrees}, {"bases", b.bases}}},
              {"census", census},
              {"checks", checks},
              {"all_checks_pass", b.all_checks_pass()},
              {"skipped", b.skipped}};
  json parity = json::object();
  if (b.parity_a) parity["A"] = to_json(*b.parity_a);
  if (b.parity_b) parity["B"] = to_json(*b.parity_b);
  if (b.splits) parity["splits"] = *b.splits;
  if (b.splits_contain_ab) parity["splits_contain_AB"] = *b.splits_contain_ab;
  out["parity"] = parity;
  json scans = json::object();
  if (b.scan_a) scans["A"] = to_json(*b.scan_a, with_timing);
  if (b.scan_b) scans["B"] = to_json(*b.scan_b, with_timing);
  out["scans"] = scans;
  if (with_timing) out["timing"] = b.timing;
  return out;
}

std::string format_report_text(const ReportBundle& b) {
  std::ostringstream os;
  os << "catalog " << b.catalog << ": " << b.rays << " rays, " << b.edges << " orthogonal pairs, " << b.bases
     << " bases\n";
  if (b.parity_a && b.parity_b) {
    os << "\nparity proofs\n";
    os << "  set A: " << b.parity_a->bases.size() << " bases, " << (b.parity_a->parity_proof ? "parity proof" : "not a proof")
       << "\n";
    os << "  set B: " << b.parity_b->bases.size() << " bases, " << (b.parity_b->parity_proof ? "parity proof" : "not a proof")
       << "\n";
  }
  if (b.splits) os << "  splits into two parity-proof halves: " << *b.splits << "\n";

  if (!b.census_all.empty()) {
    os << "\n   N   N-gons   conflict   in A   in B\n";
    for (const auto& [n, c] : b.census_all) {
      char line[128];
      const auto a = b.census_a.find(n);
      const auto bb = b.census_b.find(n);
      std::snprintf(line, sizeof line, "  %2d %8llu %10llu %6s %6s\n", n,
                    static_cast<unsigned long long>(c.total_ngons), static_cast<unsigned long long>(c.total_conflicts),
                    a == b.census_a.end() ? "-" : std::to_string(a->second.total_ngons).c_str(),
                    bb == b.census_b.end() ? "-" : std::to_string(bb->second.total_ngons).c_str());
      os << line;
    }
  }
  for (const auto* half : {&b.census_a, &b.census_b}) {
    const std::string label = half == &b.census_a ? "A" : "B";
    for (const auto& [n, c] : *half) {
      if (c.classes.empty()) continue;
      os << "\nconflict " << n << "-gons in set " << label << "\n  max eigenvalue   number   example\n";
      for (const SpectrumClass& cls : c.classes) {
        os << "  " << fmt(cls.lambda_max, 4) << "       " << cls.count << "     ";
        for (RayId id : cls.example.cycle()) os << " " << id;
        os << "\n";
      }
    }
  }
  for (const auto* scan : {&b.scan_a, &b.scan_b}) {
    if (!*scan) continue;
    const ScanReport& s = **scan;
    os << "\nscan set " << s.family << " (" << s.family_size << " operators, " << s.nodes << " nodes): mesh min "
       << fmt(s.mesh_min) << (s.refined ? ", refined min " + fmt(s.refined_min) : std::string()) << "\n";
  }
  if (!b.skipped.empty()) {
    os << "\nskipped\n";
    for (const std::string& s : b.skipped) os << "  " << s << "\n";
  }
  if (!b.checks.empty()) {
    os << "\nchecks\n";
    for (const Check& c : b.checks) {
      os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": expected " << c.expected << ", got " << c.actual
         << "\n";
    }
  }
  return os.str();
}

}  // namespace cell600
