#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cell600/spectra.hpp"

namespace cell600 {

/// Angles (phi, theta1, theta2) of a point on the unit 3-sphere.
struct Angles {
  double phi = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;

  friend auto operator<=>(const Angles&, const Angles&) = default;
};

/// r = (cos phi sin t1 sin t2, sin phi sin t1 sin t2, cos t1 sin t2, cos t2).
Vec4 spherical_to_vector(double phi, double theta1, double theta2);
inline Vec4 spherical_to_vector(const Angles& a) { return spherical_to_vector(a.phi, a.theta1, a.theta2); }

/// Angles of a nonzero vector (normalized first); inverse of spherical_to_vector.
Angles vector_to_angles(const Vec4& r);

/// Regular grid over phi in [0, pi), theta1 in [0, pi], theta2 in [0, pi].
/// Together with r -> -r these ranges reach every real ray.
struct MeshSpec {
  double phi_step = 0.0;
  double theta1_step = 0.0;
  double theta2_step = 0.0;

  /// Same step on every axis, in degrees.
  static MeshSpec degrees(double step_deg);

  /// Throws std::invalid_argument for a non-positive step.
  void validate() const;
  std::size_t phi_count() const;
  std::size_t theta1_count() const;
  std::size_t theta2_count() const;
  std::size_t node_count() const { return phi_count() * theta1_count() * theta2_count(); }
  Angles node(std::size_t i, std::size_t j, std::size_t k) const;
};

/// Quadratic forms r^T M r stored as ten coefficient columns so the maximum
/// over many operators vectorizes.
class OperatorFamily {
 public:
  OperatorFamily() = default;
  explicit OperatorFamily(std::span<const SymMatrix4> operators, std::string label = "custom");

  const std::string& label() const { return label_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::span<const SymMatrix4> operators() const { return operators_; }

  /// max over the family of r^T M r. Throws std::invalid_argument when empty.
  double value(const Vec4& r) const;

 private:
  std::string label_;
  std::size_t size_ = 0;
  std::size_t padded_ = 0;
  std::vector<SymMatrix4> operators_;
  std::array<std::vector<double>, 10> coeff_;
};

/// Reference implementation: max over the family of r^T M r, summed term by
/// term. Throws std::invalid_argument for an empty family.
double violation_value(const Vec4& r, std::span<const SymMatrix4> family);

struct RefineResult {
  Angles angles;
  double value = 0.0;
  int evaluations = 0;
};

/// Nelder-Mead descent over (phi, theta1, theta2) from `start`, initial
/// simplex scale 0.01 rad. Stops when the simplex diameter drops below 1e-8
/// or after 10^4 evaluations. Deterministic; never worse than the start.
RefineResult refine_minimum(const OperatorFamily& family, const Angles& start);

struct ScanOptions {
  bool refine = true;
  std::size_t refine_starts = 11;
  unsigned threads = 1;
};

struct RefinedStart {
  Angles start;
  double start_value = 0.0;
  RefineResult result;
};

struct ScanReport {
  std::string family;
  std::size_t family_size = 0;
  MeshSpec mesh;
  std::size_t nodes = 0;
  double mesh_min = 0.0;
  Angles mesh_argmin;
  bool refined = false;
  double refined_min = 0.0;
  Angles refined_argmin;
  std::vector<RefinedStart> starts;
  double seconds = 0.0;

  /// refined_min when refinement ran, otherwise mesh_min.
  double minimum() const { return refined ? refined_min : mesh_min; }
};

/// Evaluates the family on every mesh node and records the minimum of V.
/// Refinement starts from the lowest mesh-local minima (the global one first)
/// and keeps the best result. Ties break on lexicographic node order.
ScanReport scan_universality(const OperatorFamily& family, const MeshSpec& mesh, const ScanOptions& options = {});

}  // namespace cell600
