#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cell600/ngons.hpp"
#include "cell600/rays.hpp"

namespace cell600 {

/// Real symmetric 4x4 matrix, row-major.
struct SymMatrix4 {
  std::array<double, 16> a{};

  double operator()(std::size_t i, std::size_t j) const { return a[i * 4 + j]; }
  double& operator()(std::size_t i, std::size_t j) { return a[i * 4 + j]; }
  double trace() const { return a[0] + a[5] + a[10] + a[15]; }

  static SymMatrix4 identity();
  friend bool operator==(const SymMatrix4&, const SymMatrix4&) = default;
};

using Vec4 = std::array<double, 4>;

struct Spectrum {
  std::array<double, 4> eigenvalues{};  // descending
  Vec4 max_eigenvector{};               // unit, sign fixed so the largest |component| is positive
  double residual = 0.0;                // ||m v - lambda v|| for the max pair
  int sweeps = 0;

  double max() const { return eigenvalues[0]; }
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rank-1 projectors of a catalog, kept exactly as integer golden pairs over
/// one common denominator: P_k(i,j) = (num_a + num_b t) / denominator. Sums of
/// projectors are then exact int64 arithmetic; overflow throws OverflowError.
class ProjectorTable {
 public:
  explicit ProjectorTable(const RaySet& rays);

  const RaySet& rays() const { return *rays_; }
  std::int64_t denominator() const { return denominator_; }

  /// Sum of the projectors of the given rays (by id), converted to floating
  /// point once. Throws InvariantError for an unknown id.
  SymMatrix4 sum(std::span<const RayId> ids) const;
  /// Same, by catalog position.
  SymMatrix4 sum_positions(std::span<const std::size_t> positions) const;

 private:
  struct Entry {
    std::int64_t a;
    std::int64_t b;
  };
  const RaySet* rays_;
  std::int64_t denominator_ = 1;
  std::vector<std::array<Entry, 10>> upper_;  // upper triangle per ray
};

/// Sum of |v><v| / <v|v> over the n-gon's rays.
SymMatrix4 ngon_operator(const RaySet& rays, const NGon& gon);

inline constexpr int kMaxJacobiSweeps = 50;

/// Cyclic Jacobi eigen-decomposition. Stops when the off-diagonal Frobenius
/// norm drops below 1e-13 (scaled by max(1, ||m||)); throws ConvergenceError
/// after `max_sweeps` sweeps, which non-finite input always reaches.
Spectrum max_eigen(const SymMatrix4& m, int max_sweeps = kMaxJacobiSweeps);

/// r^T m r for a unit vector r; throws std::invalid_argument when
/// | ||r|| - 1 | > 1e-9.
double expectation(const SymMatrix4& m, const Vec4& r);

inline constexpr double kConflictEpsilon = 1e-9;
inline constexpr double kClassResolution = 1e-6;

struct SpectrumClass {
  double lambda_max = 0.0;  // rounded to kClassResolution
  std::uint64_t count = 0;
  NGon example;             // least canonical cycle of the class
  bool conflict = false;
};

struct ConflictCensus {
  int n = 0;
  std::string subset;  // "all", "A", "B" or "custom"
  std::uint64_t total_ngons = 0;
  std::uint64_t total_conflicts = 0;
  double max_lambda = 0.0;
  std::vector<SpectrumClass> classes;      // conflict classes, lambda descending
  std::vector<SpectrumClass> all_classes;  // every n-gon, lambda descending
};

/// Enumerates n-gons of g (already restricted to the subset of interest),
/// computes each operator's largest eigenvalue and groups them. An n-gon is a
/// conflict iff lambda_max > classical_bound(n) + kConflictEpsilon.
ConflictCensus classify_conflicts(const ProjectorTable& projectors, const OrthoGraph& g, int n,
                                  std::string subset_label = "all", unsigned threads = 1);

/// Convenience overload: builds the table and restricts g to `subset` when given.
ConflictCensus classify_conflicts(const RaySet& rays, const OrthoGraph& g, int n,
                                  const std::optional<std::vector<RayId>>& subset,
                                  std::string subset_label = "custom", unsigned threads = 1);

/// An n-gon together with its operator.
struct GonOperator {
  NGon gon;
  SymMatrix4 matrix;
  double lambda_max = 0.0;
};

/// Operators of all n-gons of g, optionally keeping only conflict n-gons,
/// sorted by canonical cycle.
std::vector<GonOperator> ngon_operators(const ProjectorTable& projectors, const OrthoGraph& g, int n,
                                        bool conflicts_only, unsigned threads = 1);

}  // namespace cell600
