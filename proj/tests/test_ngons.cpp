#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cell600/ngons.hpp"
#include "cell600/parity.hpp"

using namespace cell600;

namespace {

OrthoGraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<RayId> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  std::bernoulli_distribution edge(p);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) adj[i][j] = adj[j][i] = edge(rng);
  }
  return OrthoGraph(labels, [&](std::size_t i, std::size_t j) { return adj[i][j]; });
}

// Oracle: an n-subset carries exactly one chordless n-cycle iff its induced
// subgraph is connected and 2-regular.
std::uint64_t brute_force_chordless(const OrthoGraph& g, int n) {
  const std::size_t size = g.size();
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1U << size); ++mask) {
    if (__builtin_popcount(mask) != n) continue;
    std::vector<std::size_t> vs;
    for (std::size_t v = 0; v < size; ++v) {
      if (mask >> v & 1U) vs.push_back(v);
    }
    bool two_regular = true;
    for (std::size_t v : vs) {
      int d = 0;
      for (std::size_t u : vs) d += g.adjacent(u, v) ? 1 : 0;
      two_regular = two_regular && d == 2;
    }
    if (!two_regular) continue;
    std::vector<bool> seen(size, false);
    std::vector<std::size_t> stack{vs.front()};
    seen[vs.front()] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      ++reached;
      for (std::size_t u : vs) {
        if (!seen[u] && g.adjacent(u, v)) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    if (reached == vs.size()) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("bases") {
  const OrthoGraph g = orthogonality_graph(build_600cell_rays());
  const auto bases = enumerate_bases(g);
  CHECK(bases.size() == 75);
  CHECK(std::binary_search(bases.begin(), bases.end(), Basis{{1, 2, 3, 4}}));
  CHECK(std::adjacent_find(bases.begin(), bases.end()) == bases.end());

  // C5 has no triangles, hence no 4-cliques.
  const OrthoGraph c5({1, 2, 3, 4, 5}, [](std::size_t i, std::size_t j) { return j - i == 1 || j - i == 4; });
  CHECK(enumerate_bases(c5).empty());
}

TEST_CASE("classical bound") {
  CHECK(classical_bound(5) == 2);
  CHECK(classical_bound(7) == 3);
  CHECK(classical_bound(8) == 4);
  CHECK(classical_bound(15) == 7);
}

TEST_CASE("n-gon counts in the 600-cell") {
  const RaySet rays = build_600cell_rays();
  const OrthoGraph g = orthogonality_graph(rays);
  CHECK(count_ngons(g, 5) == 22'320);
  CHECK(count_ngons(g, 10) == 862'560);
  const OrthoGraph a = induced_subgraph(g, builtin_sets().set_a);
  CHECK(count_ngons(a, 5) == 1'200);
  CHECK(count_ngons(a, 15) == 8);
}

TEST_CASE("size guard") {
  const OrthoGraph g = orthogonality_graph(build_600cell_rays());
  CHECK_THROWS_AS(count_ngons(g, 4), std::invalid_argument);
  CHECK_THROWS_AS(count_ngons(g, 61), std::invalid_argument);
}

TEST_CASE("emitted cycles are chordless under the exact Gram matrix") {
  const RaySet rays = build_600cell_rays();
  const OrthoGraph g = orthogonality_graph(rays);
  for (int n : {5, 7}) {
    const auto gons = enumerate_ngons(g, n);
    CHECK(std::adjacent_find(gons.begin(), gons.end()) == gons.end());
    for (const NGon& gon : gons) {
      const auto c = gon.cycle();
      bool ok = true;
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) {
          const bool consecutive = j == i + 1 || (i == 0 && j == c.size() - 1);
          const bool orthogonal = golden_is_zero(inner_product(rays.by_id(c[i]), rays.by_id(c[j])));
          ok = ok && orthogonal == consecutive;
        }
      }
      CHECK(ok);
      CHECK(std::vector<RayId>(c.begin(), c.end()) == canonical_cycle(c));
    }
  }
}

TEST_CASE("canonical form is invariant under rotations and reflections") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RayId> cycle(5 + trial % 8);
    std::iota(cycle.begin(), cycle.end(), 1);
    std::shuffle(cycle.begin(), cycle.end(), rng);
    const auto canon = canonical_cycle(cycle);
    std::vector<RayId> moved = cycle;
    std::rotate(moved.begin(), moved.begin() + static_cast<long>(rng() % moved.size()), moved.end());
    if (rng() % 2) std::reverse(moved.begin(), moved.end());
    CHECK(canonical_cycle(moved) == canon);
    CHECK(canon.front() == *std::min_element(cycle.begin(), cycle.end()));
    CHECK(canon[1] < canon.back());
  }
  CHECK(canonical_cycle(std::vector<RayId>{1, 34, 41, 13, 2}) == std::vector<RayId>{1, 2, 13, 41, 34});
}

TEST_CASE("counts do not depend on vertex order") {
  const RaySet rays = build_600cell_rays();
  const OrthoGraph g = orthogonality_graph(rays);
  std::vector<Ray> shuffled(rays.rays().begin(), rays.rays().end());
  std::mt19937_64 rng(17);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  // Fresh ids too, so neither position nor label order matches the original.
  std::vector<RayId> ids(shuffled.size());
  std::iota(ids.begin(), ids.end(), 101);
  std::shuffle(ids.begin(), ids.end(), rng);
  for (std::size_t i = 0; i < shuffled.size(); ++i) shuffled[i].id = ids[i];
  const OrthoGraph h = orthogonality_graph(RaySet("relabelled", shuffled));
  for (int n = 5; n <= 8; ++n) CHECK(count_ngons(h, n) == count_ngons(g, n));
}

TEST_CASE("agrees with brute force on random small graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t size = 6 + static_cast<std::size_t>(trial % 7);
    const double p = 0.25 + 0.05 * (trial % 6);
    const OrthoGraph g = random_graph(rng, size, p);
    for (int n = 5; n <= static_cast<int>(size); ++n) {
      CHECK_MESSAGE(count_ngons(g, n) == brute_force_chordless(g, n), "trial " << trial << " n " << n);
    }
  }
}

TEST_CASE("parallel fold matches the serial one") {
  const OrthoGraph g = orthogonality_graph(build_600cell_rays());
  CHECK(count_ngons(g, 6, 4) == 94'200);
  CHECK(enumerate_ngons(g, 5, 3) == enumerate_ngons(g, 5, 1));
}
