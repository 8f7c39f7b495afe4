#include "cell600/parity.hpp"

#include <algorithm>

namespace cell600 {

bool ParityReport::uniform_multiplicity_two() const {
  if (multiplicity.size() != subset.size()) return false;
  return std::all_of(multiplicity.begin(), multiplicity.end(), [](const auto& kv) { return kv.second == 2; });
}

ParityReport verify_parity_proof(std::span<const Basis> all_bases, std::span<const RayId> ids) {
  ParityReport report;
  report.subset.assign(ids.begin(), ids.end());
  std::sort(report.subset.begin(), report.subset.end());
  report.subset.erase(std::unique(report.subset.begin(), report.subset.end()), report.subset.end());
  auto inside = [&](RayId id) { return std::binary_search(report.subset.begin(), report.subset.end(), id); };

  for (const Basis& b : all_bases) {
    if (std::all_of(b.ids.begin(), b.ids.end(), inside)) report.bases.push_back(b);
  }
  for (RayId id : report.subset) report.multiplicity[id] = 0;
  for (const Basis& b : report.bases) {
    for (RayId id : b.ids) ++report.multiplicity[id];
  }
  report.parity_proof = !report.subset.empty() && report.odd_basis_count() && report.uniform_multiplicity_two();
  return report;
}

ParityReport verify_parity_proof(const RaySet& rays, std::span<const RayId> ids) {
  for (RayId id : ids) rays.index_of(id);
  const auto bases = enumerate_bases(orthogonality_graph(rays));
  return verify_parity_proof(bases, ids);
}

namespace {

class SplitSearch {
 public:
  SplitSearch(const OrthoGraph& g, std::span<const Basis> bases)
      : g_(g), bases_(bases), rays_of_(bases.size()), bases_of_(g.size()), mult_(g.size(), 0),
        state_(g.size(), State::kUndecided), chosen_(bases.size(), false) {
    for (std::size_t b = 0; b < bases.size(); ++b) {
      for (std::size_t k = 0; k < 4; ++k) {
        const std::size_t v = g.index_of(bases[b].ids[k]);
        rays_of_[b][k] = v;
        bases_of_[v].push_back(b);
      }
    }
    target_ = g.size() / 2;
  }

  std::vector<ParitySplit> run() {
    if (g_.size() == 0 || g_.size() % 2 != 0) return {};
    open_ray(0);
    std::sort(splits_.begin(), splits_.end(),
              [](const ParitySplit& x, const ParitySplit& y) { return x.first.subset < y.first.subset; });
    return std::move(splits_);
  }

 private:
  enum class State { kUndecided, kIn, kOut };

  bool available(std::size_t b) const {
    if (chosen_[b]) return false;
    return std::all_of(rays_of_[b].begin(), rays_of_[b].end(),
                       [&](std::size_t v) { return state_[v] != State::kOut && mult_[v] < 2; });
  }

  std::vector<std::size_t> options(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t b : bases_of_[v]) {
      if (available(b)) out.push_back(b);
    }
    return out;
  }

  void choose(std::size_t b) {
    chosen_[b] = true;
    for (std::size_t v : rays_of_[b]) {
      if (mult_[v]++ == 0) {
        state_[v] = State::kIn;
        ++in_count_;
      }
    }
  }

  void unchoose(std::size_t b) {
    chosen_[b] = false;
    for (std::size_t v : rays_of_[b]) {
      if (--mult_[v] == 0) {
        state_[v] = State::kUndecided;
        --in_count_;
      }
    }
  }

  // An unchosen basis lying inside the half that can no longer be chosen
  // (one of its rays is already covered twice) would be a third basis there.
  bool stray_basis_inside() const {
    for (std::size_t b = 0; b < bases_.size(); ++b) {
      if (chosen_[b]) continue;
      bool inside = true;
      bool full = false;
      for (std::size_t v : rays_of_[b]) {
        inside = inside && state_[v] == State::kIn;
        full = full || mult_[v] == 2;
      }
      if (inside && full) return true;
    }
    return false;
  }

  // Opens ray v with two new bases, then continues the search.
  void open_ray(std::size_t v) {
    const auto opts = options(v);
    for (std::size_t i = 0; i < opts.size(); ++i) {
      choose(opts[i]);
      for (std::size_t j = i + 1; j < opts.size(); ++j) {
        if (!available(opts[j])) continue;
        choose(opts[j]);
        search();
        unchoose(opts[j]);
      }
      unchoose(opts[i]);
    }
  }

  void search() {
    if (in_count_ > target_ || stray_basis_inside()) return;

    // Most constrained ray still covered only once.
    std::size_t best = g_.size();
    std::vector<std::size_t> best_opts;
    for (std::size_t v = 0; v < g_.size(); ++v) {
      if (mult_[v] != 1) continue;
      auto opts = options(v);
      if (best == g_.size() || opts.size() < best_opts.size()) {
        best = v;
        best_opts = std::move(opts);
        if (best_opts.empty()) return;
      }
    }
    if (best != g_.size()) {
      for (std::size_t b : best_opts) {
        choose(b);
        search();
        unchoose(b);
      }
      return;
    }

    if (in_count_ == target_) {
      record();
      return;
    }
    auto undecided = std::find(state_.begin(), state_.end(), State::kUndecided);
    if (undecided == state_.end()) return;
    const auto v = static_cast<std::size_t>(undecided - state_.begin());
    state_[v] = State::kOut;
    ++out_count_;
    if (out_count_ <= g_.size() - target_) search();
    --out_count_;
    state_[v] = State::kUndecided;
    open_ray(v);
  }

  void record() {
    std::vector<RayId> half;
    std::vector<RayId> rest;
    for (std::size_t v = 0; v < g_.size(); ++v) {
      (state_[v] == State::kIn ? half : rest).push_back(g_.label(v));
    }
    ParitySplit split{verify_parity_proof(bases_, half), verify_parity_proof(bases_, rest)};
    if (split.first.parity_proof && split.second.parity_proof) splits_.push_back(std::move(split));
  }

  const OrthoGraph& g_;
  std::span<const Basis> bases_;
  std::vector<std::array<std::size_t, 4>> rays_of_;
  std::vector<std::vector<std::size_t>> bases_of_;
  std::vector<int> mult_;
  std::vector<State> state_;
  std::vector<bool> chosen_;
  std::size_t target_ = 0;
  std::size_t in_count_ = 0;
  std::size_t out_count_ = 0;
  std::vector<ParitySplit> splits_;
};

}  // namespace

std::vector<ParitySplit> enumerate_parity_splits(const OrthoGraph& g, std::span<const Basis> bases) {
  return SplitSearch(g, bases).run();
}

std::vector<ParitySplit> enumerate_parity_splits(const RaySet& rays) {
  const OrthoGraph g = orthogonality_graph(rays);
  const auto bases = enumerate_bases(g);
  return enumerate_parity_splits(g, bases);
}

namespace {

Basis make_basis(RayId a, RayId b, RayId c, RayId d) {
  Basis basis{{a, b, c, d}};
  std::sort(basis.ids.begin(), basis.ids.end());
  return basis;
}

std::vector<RayId> rays_of(const std::vector<Basis>& bases) {
  std::vector<RayId> ids;
  for (const Basis& b : bases) ids.insert(ids.end(), b.ids.begin(), b.ids.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

BuiltinSets make_builtin_sets() {
  BuiltinSets sets;
  sets.bases_a = {
      make_basis(1, 2, 3, 4),     make_basis(14, 60, 34, 1),  make_basis(48, 5, 32, 58),
      make_basis(13, 14, 15, 16), make_basis(13, 32, 50, 41), make_basis(19, 25, 6, 50),
      make_basis(41, 42, 43, 44), make_basis(25, 44, 2, 53),  make_basis(34, 19, 48, 54),
      make_basis(31, 42, 51, 16), make_basis(58, 36, 15, 4),  make_basis(46, 31, 60, 6),
      make_basis(43, 54, 3, 28),  make_basis(36, 53, 20, 46), make_basis(20, 5, 51, 28),
  };
  sets.bases_b = {
      make_basis(9, 10, 11, 12),  make_basis(7, 18, 27, 52),  make_basis(9, 35, 39, 52),
      make_basis(21, 22, 23, 24), make_basis(18, 47, 33, 55), make_basis(12, 29, 56, 22),
      make_basis(37, 38, 39, 40), make_basis(30, 59, 45, 7),  make_basis(59, 26, 37, 21),
      make_basis(56, 45, 17, 35), make_basis(49, 8, 26, 17),  make_basis(11, 38, 49, 33),
      make_basis(8, 57, 29, 47),  make_basis(57, 23, 27, 40), make_basis(10, 55, 24, 30),
  };
  sets.set_a = rays_of(sets.bases_a);
  sets.set_b = rays_of(sets.bases_b);
  return sets;
}

}  // namespace

const BuiltinSets& builtin_sets() {
  static const BuiltinSets sets = make_builtin_sets();
  return sets;
}

}  // namespace cell600
