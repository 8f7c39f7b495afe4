#include "cell600/ngons.hpp"

#include <stdexcept>
#include <string>

namespace cell600 {

std::vector<Basis> enumerate_bases(const OrthoGraph& g) {
  const std::size_t n = g.size();
  std::vector<Basis> bases;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          if (!g.adjacent(a, d) || !g.adjacent(b, d) || !g.adjacent(c, d)) continue;
          Basis basis{{g.label(a), g.label(b), g.label(c), g.label(d)}};
          std::sort(basis.ids.begin(), basis.ids.end());
          bases.push_back(basis);
        }
      }
    }
  }
  std::sort(bases.begin(), bases.end());
  return bases;
}

std::vector<RayId> canonical_cycle(std::span<const RayId> cycle) {
  const std::size_t n = cycle.size();
  std::vector<RayId> best(cycle.begin(), cycle.end());
  std::vector<RayId> candidate(n);
  for (std::size_t start = 0; start < n; ++start) {
    for (int dir : {1, -1}) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t step = dir > 0 ? i : n - i;
        candidate[i] = cycle[(start + step) % n];
      }
      if (candidate < best) best = candidate;
    }
  }
  return best;
}

bool is_chordless_cycle(const OrthoGraph& g, std::span<const RayId> cycle) {
  const std::size_t n = cycle.size();
  if (n < 4) return false;
  std::vector<std::size_t> local;
  local.reserve(n);
  for (RayId id : cycle) {
    if (!g.has_label(id)) return false;
    local.push_back(g.index_of(id));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (local[i] == local[j]) return false;
      const bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
      if (g.adjacent(local[i], local[j]) != consecutive) return false;
    }
  }
  return true;
}

int classical_bound(int n) { return n / 2; }

void check_ngon_size(const OrthoGraph& g, int n) {
  if (n < 5) throw std::invalid_argument("n-gons need n >= 5, got " + std::to_string(n));
  if (static_cast<std::size_t>(n) > g.size()) {
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the vertex count " +
                                std::to_string(g.size()));
  }
}

namespace {

// Depth-first extension of induced paths rooted at the least cycle vertex.
// blocked[d] holds the path vertices plus the neighbours of every interior
// path vertex except the last, i.e. everything a new vertex must avoid.
class CycleSearch {
 public:
  CycleSearch(const OrthoGraph& g, int n, std::size_t root,
              const std::function<void(std::span<const std::size_t>)>& visit)
      : g_(g), n_(static_cast<std::size_t>(n)), root_(root), words_(g.words()), visit_(visit),
        path_(n_), blocked_((n_ + 1) * words_, 0), above_root_(words_, 0),
        candidates_(n_, std::vector<std::uint64_t>(words_)) {
    for (std::size_t v = root + 1; v < g.size(); ++v) above_root_[v / 64] |= std::uint64_t{1} << (v % 64);
  }

  void run() {
    path_[0] = root_;
    const auto root_row = g_.row(root_);
    // blocked_[0]: nothing interior yet, root itself is outside above_root_.
    std::vector<std::uint64_t> first(words_);
    for (std::size_t w = 0; w < words_; ++w) first[w] = root_row[w] & above_root_[w];
    for_each_bit(first, [&](std::size_t p1) {
      path_[1] = p1;
      std::uint64_t* b1 = level(1);
      for (std::size_t w = 0; w < words_; ++w) b1[w] = 0;
      b1[p1 / 64] |= std::uint64_t{1} << (p1 % 64);
      extend(1);
    });
  }

 private:
  std::uint64_t* level(std::size_t d) { return blocked_.data() + d * words_; }

  // path_[0..depth] is fixed; choose path_[depth + 1].
  void extend(std::size_t depth) {
    const std::size_t last = path_[depth];
    const std::uint64_t* blocked = level(depth);
    const auto last_row = g_.row(last);
    const auto root_row = g_.row(root_);
    const bool closing = depth + 1 == n_ - 1;
    std::vector<std::uint64_t>& cand = candidates_[depth];
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = last_row[w] & above_root_[w] & ~blocked[w];
      bits &= closing ? root_row[w] : ~root_row[w];
      cand[w] = bits;
    }
    if (closing) {
      for_each_bit(cand, [&](std::size_t v) {
        if (v <= path_[1]) return;
        path_[depth + 1] = v;
        visit_(std::span<const std::size_t>(path_.data(), n_));
      });
      return;
    }
    // Moving `last` into the interior blocks its neighbours from here on.
    std::uint64_t* next = level(depth + 1);
    for_each_bit(cand, [&](std::size_t v) {
      path_[depth + 1] = v;
      for (std::size_t w = 0; w < words_; ++w) next[w] = blocked[w] | last_row[w];
      next[v / 64] |= std::uint64_t{1} << (v % 64);
      extend(depth + 1);
    });
  }

  template <class Fn>
  static void for_each_bit(const std::vector<std::uint64_t>& bits, Fn&& fn) {
    for (std::size_t w = 0; w < bits.size(); ++w) {
      std::uint64_t word = bits[w];
      while (word != 0) {
        const auto bit = static_cast<std::size_t>(__builtin_ctzll(word));
        word &= word - 1;
        fn(w * 64 + bit);
      }
    }
  }

  const OrthoGraph& g_;
  std::size_t n_;
  std::size_t root_;
  std::size_t words_;
  const std::function<void(std::span<const std::size_t>)>& visit_;
  std::vector<std::size_t> path_;
  std::vector<std::uint64_t> blocked_;
  std::vector<std::uint64_t> above_root_;
  std::vector<std::vector<std::uint64_t>> candidates_;
};

}  // namespace

void for_each_ngon_at_root(const OrthoGraph& g, int n, std::size_t root,
                           const std::function<void(std::span<const std::size_t>)>& visit) {
  check_ngon_size(g, n);
  CycleSearch(g, n, root, visit).run();
}

void for_each_ngon(const OrthoGraph& g, int n,
                   const std::function<void(std::span<const std::size_t>)>& visit) {
  check_ngon_size(g, n);
  for (std::size_t root = 0; root < g.size(); ++root) CycleSearch(g, n, root, visit).run();
}

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  return std::max(1U, std::thread::hardware_concurrency());
}

std::uint64_t count_ngons(const OrthoGraph& g, int n, unsigned threads) {
  return reduce_ngons(
      g, n, threads, std::uint64_t{0}, [](std::uint64_t& acc, std::span<const std::size_t>) { ++acc; },
      [](std::uint64_t& into, std::uint64_t from) { into += from; });
}

NGon to_ngon(const OrthoGraph& g, std::span<const std::size_t> local_cycle) {
  std::vector<RayId> ids;
  ids.reserve(local_cycle.size());
  for (std::size_t v : local_cycle) ids.push_back(g.label(v));
  return NGon(ids);
}

std::vector<NGon> enumerate_ngons(const OrthoGraph& g, int n, unsigned threads) {
  auto gons = reduce_ngons(
      g, n, threads, std::vector<NGon>{},
      [&g](std::vector<NGon>& acc, std::span<const std::size_t> cycle) { acc.push_back(to_ngon(g, cycle)); },
      [](std::vector<NGon>& into, std::vector<NGon>&& from) {
        into.insert(into.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
      });
  std::sort(gons.begin(), gons.end());
  return gons;
}

}  // namespace cell600
