#include "cell600/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cell600/errors.hpp"

namespace cell600 {

SymMatrix4 SymMatrix4::identity() {
  SymMatrix4 m;
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

namespace {

constexpr std::array<std::pair<std::size_t, std::size_t>, 10> kUpper = {{
    {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3},
}};

std::int64_t checked_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw OverflowError("projector numerator exceeds 64 bits");
  return z.get_si();
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) throw OverflowError("projector sum overflows 64 bits");
  return out;
}

}  // namespace

ProjectorTable::ProjectorTable(const RaySet& rays) : rays_(&rays) {
  std::vector<std::array<GoldenNum, 10>> exact;
  exact.reserve(rays.size());
  mpz_class lcm = 1;
  for (const Ray& r : rays.rays()) {
    const GoldenNum inv = GoldenNum(1) / r.norm_squared();
    std::array<GoldenNum, 10> entries;
    for (std::size_t k = 0; k < kUpper.size(); ++k) {
      const auto [i, j] = kUpper[k];
      entries[k] = r.components[i] * r.components[j] * inv;
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), entries[k].rational_part().get_den_mpz_t());
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), entries[k].tau_part().get_den_mpz_t());
    }
    exact.push_back(std::move(entries));
  }
  denominator_ = checked_int64(lcm);
  upper_.reserve(exact.size());
  for (const auto& entries : exact) {
    std::array<Entry, 10> scaled{};
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const mpq_class a = entries[k].rational_part() * lcm;
      const mpq_class b = entries[k].tau_part() * lcm;
      scaled[k] = {checked_int64(a.get_num()), checked_int64(b.get_num())};
    }
    upper_.push_back(scaled);
  }
}

SymMatrix4 ProjectorTable::sum_positions(std::span<const std::size_t> positions) const {
  std::array<Entry, 10> total{};
  for (std::size_t p : positions) {
    const auto& entries = upper_.at(p);
    for (std::size_t k = 0; k < total.size(); ++k) {
      total[k].a = checked_add(total[k].a, entries[k].a);
      total[k].b = checked_add(total[k].b, entries[k].b);
    }
  }
  constexpr long double kTau = (1.0L + 2.236067977499789696409173668731276235L) / 2.0L;
  const auto denom = static_cast<long double>(denominator_);
  SymMatrix4 m;
  for (std::size_t k = 0; k < kUpper.size(); ++k) {
    const auto [i, j] = kUpper[k];
    const long double value =
        (static_cast<long double>(total[k].a) + static_cast<long double>(total[k].b) * kTau) / denom;
    m(i, j) = static_cast<double>(value);
    m(j, i) = m(i, j);
  }
  return m;
}

SymMatrix4 ProjectorTable::sum(std::span<const RayId> ids) const {
  std::vector<std::size_t> positions;
  positions.reserve(ids.size());
  for (RayId id : ids) positions.push_back(rays_->index_of(id));
  return sum_positions(positions);
}

SymMatrix4 ngon_operator(const RaySet& rays, const NGon& gon) {
  return ProjectorTable(rays).sum(gon.cycle());
}

Spectrum max_eigen(const SymMatrix4& m, int max_sweeps) {
  constexpr double kTolerance = 1e-13;
  SymMatrix4 a = m;
  SymMatrix4 v = SymMatrix4::identity();

  double frob = 0.0;
  for (double x : m.a) frob += x * x;
  const double threshold = kTolerance * std::max(1.0, std::sqrt(frob));

  auto off_norm = [&a] {
    double s = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) s += 2.0 * a(i, j) * a(i, j);
    }
    return std::sqrt(s);
  };

  int sweeps = 0;
  while (!(off_norm() <= threshold)) {
    if (sweeps >= max_sweeps) {
      throw ConvergenceError("Jacobi iteration did not converge in " + std::to_string(max_sweeps) + " sweeps");
    }
    ++sweeps;
    for (std::size_t p = 0; p < 4; ++p) {
      for (std::size_t q = p + 1; q < 4; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < 4; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < 4; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::array<std::size_t, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(), [&a](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

  Spectrum out;
  out.sweeps = sweeps;
  for (std::size_t i = 0; i < 4; ++i) out.eigenvalues[i] = a(order[i], order[i]);
  const std::size_t top = order[0];
  std::size_t big = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    out.max_eigenvector[k] = v(k, top);
    if (std::abs(v(k, top)) > std::abs(v(big, top))) big = k;
  }
  if (out.max_eigenvector[big] < 0) {
    for (double& x : out.max_eigenvector) x = -x;
  }
  double res = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    double mv = 0.0;
    for (std::size_t k = 0; k < 4; ++k) mv += m(i, k) * out.max_eigenvector[k];
    const double d = mv - out.eigenvalues[0] * out.max_eigenvector[i];
    res += d * d;
  }
  out.residual = std::sqrt(res);
  return out;
}

double expectation(const SymMatrix4& m, const Vec4& r) {
  const double norm = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2] + r[3] * r[3]);
  if (std::abs(norm - 1.0) > 1e-9) {
    throw std::invalid_argument("expectation needs a unit vector, got norm " + std::to_string(norm));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) sum += r[i] * m(i, j) * r[j];
  }
  return sum;
}

namespace {

struct ClassAcc {
  std::uint64_t count = 0;
  std::vector<RayId> example;
  bool conflict = false;
};

using CensusAcc = std::map<std::int64_t, ClassAcc>;

std::vector<std::size_t> catalog_positions(const ProjectorTable& projectors, const OrthoGraph& g) {
  std::vector<std::size_t> positions;
  positions.reserve(g.size());
  for (RayId id : g.labels()) positions.push_back(projectors.rays().index_of(id));
  return positions;
}

}  // namespace

ConflictCensus classify_conflicts(const ProjectorTable& projectors, const OrthoGraph& g, int n,
                                  std::string subset_label, unsigned threads) {
  check_ngon_size(g, n);
  const std::vector<std::size_t> positions = catalog_positions(projectors, g);
  const double bound = classical_bound(n) + kConflictEpsilon;

  auto visit = [&](CensusAcc& acc, std::span<const std::size_t> cycle) {
    std::vector<std::size_t> pos(cycle.size());
    for (std::size_t i = 0; i < cycle.size(); ++i) pos[i] = positions[cycle[i]];
    const double lambda = max_eigen(projectors.sum_positions(pos)).max();
    const auto key = static_cast<std::int64_t>(std::llround(lambda / kClassResolution));
    ClassAcc& cls = acc[key];
    ++cls.count;
    cls.conflict = lambda > bound;
    NGon gon = to_ngon(g, cycle);
    std::vector<RayId> ids(gon.cycle().begin(), gon.cycle().end());
    if (cls.example.empty() || ids < cls.example) cls.example = std::move(ids);
  };
  auto merge = [](CensusAcc& into, CensusAcc&& from) {
    for (auto& [key, cls] : from) {
      ClassAcc& dst = into[key];
      dst.count += cls.count;
      dst.conflict = dst.conflict || cls.conflict;
      if (dst.example.empty() || (!cls.example.empty() && cls.example < dst.example)) {
        dst.example = std::move(cls.example);
      }
    }
  };
  const CensusAcc acc = reduce_ngons(g, n, threads, CensusAcc{}, visit, merge);

  ConflictCensus census;
  census.n = n;
  census.subset = std::move(subset_label);
  for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
    const auto& [key, cls] = *it;
    SpectrumClass out{static_cast<double>(key) * kClassResolution, cls.count, NGon(cls.example), cls.conflict};
    census.total_ngons += cls.count;
    if (cls.conflict) {
      census.total_conflicts += cls.count;
      census.classes.push_back(out);
    }
    census.all_classes.push_back(std::move(out));
  }
  if (!census.all_classes.empty()) census.max_lambda = census.all_classes.front().lambda_max;
  return census;
}

ConflictCensus classify_conflicts(const RaySet& rays, const OrthoGraph& g, int n,
                                  const std::optional<std::vector<RayId>>& subset, std::string subset_label,
                                  unsigned threads) {
  const ProjectorTable projectors(rays);
  if (!subset) return classify_conflicts(projectors, g, n, std::move(subset_label), threads);
  return classify_conflicts(projectors, induced_subgraph(g, *subset), n, std::move(subset_label), threads);
}

std::vector<GonOperator> ngon_operators(const ProjectorTable& projectors, const OrthoGraph& g, int n,
                                        bool conflicts_only, unsigned threads) {
  const std::vector<std::size_t> positions = catalog_positions(projectors, g);
  const double bound = classical_bound(n) + kConflictEpsilon;
  using Acc = std::vector<GonOperator>;
  Acc ops = reduce_ngons(
      g, n, threads, Acc{},
      [&](Acc& acc, std::span<const std::size_t> cycle) {
        std::vector<std::size_t> pos;
        pos.reserve(cycle.size());
        for (std::size_t v : cycle) pos.push_back(positions[v]);
        SymMatrix4 m = projectors.sum_positions(pos);
        const double lambda = max_eigen(m).max();
        if (conflicts_only && !(lambda > bound)) return;
        acc.push_back({to_ngon(g, cycle), m, lambda});
      },
      [](Acc& into, Acc&& from) {
        into.insert(into.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
      });
  std::sort(ops.begin(), ops.end(), [](const GonOperator& x, const GonOperator& y) { return x.gon < y.gon; });
  return ops;
}

}  // namespace cell600
