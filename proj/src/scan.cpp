#include "cell600/scan.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "cell600/ngons.hpp"

namespace cell600 {

Vec4 spherical_to_vector(double phi, double theta1, double theta2) {
  const double s2 = std::sin(theta2);
  const double s1s2 = std::sin(theta1) * s2;
  return {std::cos(phi) * s1s2, std::sin(phi) * s1s2, std::cos(theta1) * s2, std::cos(theta2)};
}

Angles vector_to_angles(const Vec4& r) {
  const double norm = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2] + r[3] * r[3]);
  const double w = std::clamp(r[3] / norm, -1.0, 1.0);
  const double theta2 = std::acos(w);
  const double rho = std::hypot(r[0], r[1], r[2]) / norm;
  const double theta1 = rho == 0.0 ? 0.0 : std::acos(std::clamp(r[2] / norm / rho, -1.0, 1.0));
  const double phi = std::atan2(r[1], r[0]);
  return {phi, theta1, theta2};
}

MeshSpec MeshSpec::degrees(double step_deg) {
  const double step = step_deg * std::numbers::pi / 180.0;
  return {step, step, step};
}

void MeshSpec::validate() const {
  if (!(phi_step > 0.0) || !(theta1_step > 0.0) || !(theta2_step > 0.0)) {
    throw std::invalid_argument("mesh steps must be positive");
  }
}

namespace {

// Nodes k * step with k * step < pi (half-open) or <= pi (closed), allowing
// for rounding in the step.
std::size_t axis_count(double step, bool closed) {
  constexpr double kSlack = 1e-12;
  const double span = closed ? std::numbers::pi + kSlack : std::numbers::pi - kSlack;
  return static_cast<std::size_t>(std::floor(span / step)) + 1;
}

}  // namespace

std::size_t MeshSpec::phi_count() const { return axis_count(phi_step, false); }
std::size_t MeshSpec::theta1_count() const { return axis_count(theta1_step, true); }
std::size_t MeshSpec::theta2_count() const { return axis_count(theta2_step, true); }

Angles MeshSpec::node(std::size_t i, std::size_t j, std::size_t k) const {
  return {static_cast<double>(i) * phi_step, static_cast<double>(j) * theta1_step,
          static_cast<double>(k) * theta2_step};
}

namespace {

constexpr std::size_t kLanes = 8;

constexpr std::array<std::pair<std::size_t, std::size_t>, 10> kTerms = {{
    {0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
}};

std::array<double, 10> monomials(const Vec4& r) {
  std::array<double, 10> m{};
  for (std::size_t t = 0; t < kTerms.size(); ++t) {
    const auto [i, j] = kTerms[t];
    m[t] = (i == j ? 1.0 : 2.0) * r[i] * r[j];
  }
  return m;
}

}  // namespace

OperatorFamily::OperatorFamily(std::span<const SymMatrix4> operators, std::string label)
    : label_(std::move(label)), size_(operators.size()), operators_(operators.begin(), operators.end()) {
  padded_ = (size_ + kLanes - 1) / kLanes * kLanes;
  for (std::size_t t = 0; t < kTerms.size(); ++t) {
    const auto [i, j] = kTerms[t];
    coeff_[t].resize(padded_);
    for (std::size_t k = 0; k < padded_; ++k) {
      // Padding repeats the first operator, which leaves the maximum unchanged.
      const SymMatrix4& m = operators_[k < size_ ? k : 0];
      coeff_[t][k] = m(i, j);
    }
  }
}

double OperatorFamily::value(const Vec4& r) const {
  if (empty()) throw std::invalid_argument("violation value of an empty operator family");
  const std::array<double, 10> m = monomials(r);
  std::array<double, kLanes> best;
  best.fill(-std::numeric_limits<double>::infinity());
  const double* c[10];
  for (std::size_t t = 0; t < 10; ++t) c[t] = coeff_[t].data();
  for (std::size_t k = 0; k < padded_; k += kLanes) {
    for (std::size_t l = 0; l < kLanes; ++l) {
      const std::size_t q = k + l;
      double v = c[0][q] * m[0];
      v += c[1][q] * m[1];
      v += c[2][q] * m[2];
      v += c[3][q] * m[3];
      v += c[4][q] * m[4];
      v += c[5][q] * m[5];
      v += c[6][q] * m[6];
      v += c[7][q] * m[7];
      v += c[8][q] * m[8];
      v += c[9][q] * m[9];
      best[l] = v > best[l] ? v : best[l];
    }
  }
  return *std::max_element(best.begin(), best.end());
}

double violation_value(const Vec4& r, std::span<const SymMatrix4> family) {
  if (family.empty()) throw std::invalid_argument("violation value of an empty operator family");
  double best = -std::numeric_limits<double>::infinity();
  for (const SymMatrix4& m : family) {
    double sum = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) sum += r[i] * m(i, j) * r[j];
    }
    best = std::max(best, sum);
  }
  return best;
}

namespace {

using Point = std::array<double, 3>;

Angles to_angles(const Point& p) { return {p[0], p[1], p[2]}; }

}  // namespace

RefineResult refine_minimum(const OperatorFamily& family, const Angles& start) {
  constexpr double kScale = 0.01;
  constexpr double kDiameter = 1e-8;
  constexpr int kMaxEvaluations = 10'000;

  int evaluations = 0;
  auto f = [&](const Point& p) {
    ++evaluations;
    return family.value(spherical_to_vector(p[0], p[1], p[2]));
  };

  std::array<Point, 4> x;
  std::array<double, 4> fx{};
  x[0] = {start.phi, start.theta1, start.theta2};
  for (std::size_t i = 1; i < 4; ++i) {
    x[i] = x[0];
    x[i][i - 1] += kScale;
  }
  for (std::size_t i = 0; i < 4; ++i) fx[i] = f(x[i]);

  auto order = [&] {
    std::array<std::size_t, 4> idx{0, 1, 2, 3};
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    std::array<Point, 4> xs;
    std::array<double, 4> fs{};
    for (std::size_t i = 0; i < 4; ++i) {
      xs[i] = x[idx[i]];
      fs[i] = fx[idx[i]];
    }
    x = xs;
    fx = fs;
  };
  auto diameter = [&] {
    double d = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < 3; ++k) s += (x[i][k] - x[j][k]) * (x[i][k] - x[j][k]);
        d = std::max(d, std::sqrt(s));
      }
    }
    return d;
  };
  auto along = [](const Point& from, const Point& to, double t) {
    Point p;
    for (std::size_t k = 0; k < 3; ++k) p[k] = from[k] + t * (to[k] - from[k]);
    return p;
  };

  order();
  while (diameter() >= kDiameter && evaluations < kMaxEvaluations) {
    Point centroid{};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t k = 0; k < 3; ++k) centroid[k] += x[i][k] / 3.0;
    }
    const Point reflected = along(centroid, x[3], -1.0);
    const double fr = f(reflected);
    if (fr < fx[0]) {
      const Point expanded = along(centroid, x[3], -2.0);
      const double fe = f(expanded);
      if (fe < fr) {
        x[3] = expanded;
        fx[3] = fe;
      } else {
        x[3] = reflected;
        fx[3] = fr;
      }
    } else if (fr < fx[2]) {
      x[3] = reflected;
      fx[3] = fr;
    } else {
      const bool outside = fr < fx[3];
      const Point contracted = outside ? along(centroid, reflected, 0.5) : along(centroid, x[3], 0.5);
      const double fc = f(contracted);
      if (outside ? fc <= fr : fc < fx[3]) {
        x[3] = contracted;
        fx[3] = fc;
      } else {
        for (std::size_t i = 1; i < 4; ++i) {
          x[i] = along(x[0], x[i], 0.5);
          fx[i] = f(x[i]);
        }
      }
    }
    order();
  }
  return {to_angles(x[0]), fx[0], evaluations};
}

ScanReport scan_universality(const OperatorFamily& family, const MeshSpec& mesh, const ScanOptions& options) {
  mesh.validate();
  if (family.empty()) throw std::invalid_argument("scan of an empty operator family");
  const auto t0 = std::chrono::steady_clock::now();

  const std::size_t np = mesh.phi_count();
  const std::size_t n1 = mesh.theta1_count();
  const std::size_t n2 = mesh.theta2_count();
  std::vector<double> grid(np * n1 * n2);
  auto flat = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * n1 + j) * n2 + k; };

  std::vector<double> sin1(n1), cos1(n1), sin2(n2), cos2(n2);
  for (std::size_t j = 0; j < n1; ++j) {
    sin1[j] = std::sin(static_cast<double>(j) * mesh.theta1_step);
    cos1[j] = std::cos(static_cast<double>(j) * mesh.theta1_step);
  }
  for (std::size_t k = 0; k < n2; ++k) {
    sin2[k] = std::sin(static_cast<double>(k) * mesh.theta2_step);
    cos2[k] = std::cos(static_cast<double>(k) * mesh.theta2_step);
  }

  auto evaluate_slice = [&](std::size_t i) {
    const double phi = static_cast<double>(i) * mesh.phi_step;
    const double cp = std::cos(phi);
    const double sp = std::sin(phi);
    for (std::size_t j = 0; j < n1; ++j) {
      for (std::size_t k = 0; k < n2; ++k) {
        const double s12 = sin1[j] * sin2[k];
        grid[flat(i, j, k)] = family.value({cp * s12, sp * s12, cos1[j] * sin2[k], cos2[k]});
      }
    }
  };
  const unsigned workers = std::min<unsigned>(resolve_threads(options.threads), static_cast<unsigned>(np));
  if (workers <= 1) {
    for (std::size_t i = 0; i < np; ++i) evaluate_slice(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < np; i = next++) evaluate_slice(i);
      });
    }
  }

  ScanReport report;
  report.family = family.label();
  report.family_size = family.size();
  report.mesh = mesh;
  report.nodes = grid.size();

  // Mesh-local minima over face neighbours, lowest first, node order on ties.
  std::vector<std::pair<double, std::size_t>> minima;
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = 0; j < n1; ++j) {
      for (std::size_t k = 0; k < n2; ++k) {
        const double v = grid[flat(i, j, k)];
        const bool local_min = (i == 0 || grid[flat(i - 1, j, k)] >= v) && (i + 1 == np || grid[flat(i + 1, j, k)] >= v) &&
                               (j == 0 || grid[flat(i, j - 1, k)] >= v) && (j + 1 == n1 || grid[flat(i, j + 1, k)] >= v) &&
                               (k == 0 || grid[flat(i, j, k - 1)] >= v) && (k + 1 == n2 || grid[flat(i, j, k + 1)] >= v);
        if (local_min) minima.emplace_back(v, flat(i, j, k));
      }
    }
  }
  std::sort(minima.begin(), minima.end());
  auto node_angles = [&](std::size_t index) {
    const std::size_t k = index % n2;
    const std::size_t j = (index / n2) % n1;
    const std::size_t i = index / (n1 * n2);
    return mesh.node(i, j, k);
  };
  report.mesh_min = minima.front().first;
  report.mesh_argmin = node_angles(minima.front().second);

  if (options.refine) {
    report.refined = true;
    report.refined_min = report.mesh_min;
    report.refined_argmin = report.mesh_argmin;
    const std::size_t starts = std::min(options.refine_starts, minima.size());
    for (std::size_t s = 0; s < starts; ++s) {
      const Angles start = node_angles(minima[s].second);
      RefineResult result = refine_minimum(family, start);
      if (result.value < report.refined_min) {
        report.refined_min = result.value;
        report.refined_argmin = result.angles;
      }
      report.starts.push_back({start, minima[s].first, result});
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace cell600
