#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <span>
#include <thread>
#include <vector>

#include "cell600/rays.hpp"

namespace cell600 {

/// Four mutually orthogonal rays, ids ascending.
struct Basis {
  std::array<RayId, 4> ids{};

  bool contains(RayId id) const { return std::find(ids.begin(), ids.end(), id) != ids.end(); }
  friend auto operator<=>(const Basis&, const Basis&) = default;
};

/// All 4-cliques of g, each once, sorted.
std::vector<Basis> enumerate_bases(const OrthoGraph& g);

/// Lexicographically least of the 2n rotations and reflections of a cycle.
std::vector<RayId> canonical_cycle(std::span<const RayId> cycle);

/// An induced (chordless) cycle of n >= 5 rays, kept in canonical form.
class NGon {
 public:
  NGon() = default;
  explicit NGon(std::span<const RayId> cycle) : cycle_(canonical_cycle(cycle)) {}

  std::size_t n() const { return cycle_.size(); }
  std::span<const RayId> cycle() const { return cycle_; }

  friend auto operator<=>(const NGon&, const NGon&) = default;

 private:
  std::vector<RayId> cycle_;
};

/// Checks the cycle against g: consecutive vertices adjacent, all other
/// pairs non-adjacent. Takes ray ids.
bool is_chordless_cycle(const OrthoGraph& g, std::span<const RayId> cycle);

/// Largest number of pairwise non-adjacent vertices of an n-cycle, floor(n/2).
/// Noncontextual assignments cannot push an n-gon operator's mean above it.
int classical_bound(int n);

/// Throws std::invalid_argument unless 5 <= n <= g.size().
void check_ngon_size(const OrthoGraph& g, int n);

/// Visits every chordless n-cycle whose least local index is `root`, once.
/// The visitor receives local vertex indices: root first, then the path, with
/// path[1] < path[n-1].
void for_each_ngon_at_root(const OrthoGraph& g, int n, std::size_t root,
                           const std::function<void(std::span<const std::size_t>)>& visit);

/// Visits every chordless n-cycle of g once, single-threaded, roots in order.
void for_each_ngon(const OrthoGraph& g, int n,
                   const std::function<void(std::span<const std::size_t>)>& visit);

/// Parallel fold over all chordless n-cycles. Each worker folds its roots into
/// its own accumulator with `visit(acc, local_cycle)`; accumulators are then
/// combined with `merge(into, from)` in worker order. The result is
/// deterministic when `merge` is commutative. threads == 0 means hardware
/// concurrency.
template <class Acc, class Visit, class Merge>
Acc reduce_ngons(const OrthoGraph& g, int n, unsigned threads, Acc init, Visit visit, Merge merge);

std::uint64_t count_ngons(const OrthoGraph& g, int n, unsigned threads = 1);

/// Materialized, sorted canonical n-gons.
std::vector<NGon> enumerate_ngons(const OrthoGraph& g, int n, unsigned threads = 1);

/// Ray-id cycle for a local-index cycle, in canonical form.
NGon to_ngon(const OrthoGraph& g, std::span<const std::size_t> local_cycle);

unsigned resolve_threads(unsigned threads);

// ---------------------------------------------------------------------------

template <class Acc, class Visit, class Merge>
Acc reduce_ngons(const OrthoGraph& g, int n, unsigned threads, Acc init, Visit visit, Merge merge) {
  check_ngon_size(g, n);
  const unsigned workers = std::min<unsigned>(resolve_threads(threads),
                                              static_cast<unsigned>(std::max<std::size_t>(g.size(), 1)));
  std::vector<Acc> partial(workers, init);
  std::atomic<std::size_t> next_root{0};
  auto work = [&](unsigned w) {
    Acc& acc = partial[w];
    const std::function<void(std::span<const std::size_t>)> fn =
        [&](std::span<const std::size_t> cycle) { visit(acc, cycle); };
    for (std::size_t root = next_root++; root < g.size(); root = next_root++) {
      for_each_ngon_at_root(g, n, root, fn);
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  Acc result = std::move(init);
  for (Acc& acc : partial) merge(result, std::move(acc));
  return result;
}

}  // namespace cell600
