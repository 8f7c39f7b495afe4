#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cell600/parity.hpp"
#include "cell600/scan.hpp"
#include "cell600/spectra.hpp"

namespace cell600 {

inline constexpr const char* kVersion = "1.0.0";

nlohmann::json to_json(const NGon& gon);
nlohmann::json to_json(const ConflictCensus& census);
nlohmann::json to_json(const ParityReport& report);
nlohmann::json to_json(const Angles& angles);
nlohmann::json to_json(const ScanReport& report, bool with_timing = false);

/// One reproduced quantity compared against its published value.
struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ReportOptions {
  int n_min = 5;
  int n_max = 15;
  bool scans = true;
  double step_deg = 1.0;
  bool refine = true;
  unsigned threads = 1;
  bool timing = false;
  bool progress = false;  // progress lines on stderr
};

/// Everything the report subcommand reproduces for one catalog. Sections
/// that do not apply (the A/B halves and scans for a foreign catalog, n-gon
/// sizes above the vertex count) are listed in `skipped`.
struct ReportBundle {
  std::string catalog;
  std::size_t rays = 0;
  std::size_t edges = 0;
  std::vector<std::size_t> degrees;  // distinct vertex degrees
  std::size_t bases = 0;
  std::optional<ParityReport> parity_a;
  std::optional<ParityReport> parity_b;
  std::optional<std::size_t> splits;
  std::optional<bool> splits_contain_ab;
  std::map<int, ConflictCensus> census_all;
  std::map<int, ConflictCensus> census_a;
  std::map<int, ConflictCensus> census_b;
  std::optional<ScanReport> scan_a;
  std::optional<ScanReport> scan_b;
  std::vector<std::string> skipped;
  std::vector<Check> checks;
  std::map<std::string, double> timing;  // seconds per stage

  bool all_checks_pass() const;
};

/// Runs the pipeline: graph, bases, parity of the built-in halves, split
/// enumeration, n-gon census for n in [n_min, n_max] over the catalog and
/// both halves, then the universality scans. Published values are checked
/// only for the built-in 600-cell catalog.
ReportBundle build_report(const RaySet& rays, const ReportOptions& options);

nlohmann::json to_json(const ReportBundle& bundle, bool with_timing = false);
std::string format_report_text(const ReportBundle& bundle);

/// Conflict-pentagon (or n-gon) operators of a built-in half or of the whole
/// catalog, the family the universality scan maximizes over.
OperatorFamily conflict_family(const RaySet& rays, const std::optional<std::vector<RayId>>& subset, int n,
                               std::string label, unsigned threads = 1);

}  // namespace cell600
