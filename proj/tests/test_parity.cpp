#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cell600/parity.hpp"

using namespace cell600;

TEST_CASE("built-in halves") {
  const auto& sets = builtin_sets();
  CHECK(sets.bases_a.front() == Basis{{1, 2, 3, 4}});
  CHECK(sets.bases_b.front() == Basis{{9, 10, 11, 12}});
  CHECK(sets.bases_a.size() == 15);
  CHECK(sets.bases_b.size() == 15);
  REQUIRE(sets.set_a.size() == 30);
  REQUIRE(sets.set_b.size() == 30);
  std::vector<RayId> both = sets.set_a;
  both.insert(both.end(), sets.set_b.begin(), sets.set_b.end());
  std::sort(both.begin(), both.end());
  std::vector<RayId> all(60);
  std::iota(all.begin(), all.end(), 1);
  CHECK(both == all);
}

TEST_CASE("listed bases are orthogonal and are exactly the bases inside each half") {
  const RaySet rays = build_600cell_rays();
  const OrthoGraph g = orthogonality_graph(rays);
  const auto bases = enumerate_bases(g);
  const auto& sets = builtin_sets();
  for (const auto* listed : {&sets.bases_a, &sets.bases_b}) {
    for (const Basis& b : *listed) CHECK(std::binary_search(bases.begin(), bases.end(), b));
  }
  for (const auto& [ids, listed] : {std::pair{&sets.set_a, &sets.bases_a}, std::pair{&sets.set_b, &sets.bases_b}}) {
    auto found = enumerate_bases(induced_subgraph(g, *ids));
    auto want = *listed;
    std::sort(want.begin(), want.end());
    CHECK(found == want);
  }
}

TEST_CASE("parity verdicts") {
  const RaySet rays = build_600cell_rays();
  const auto& sets = builtin_sets();
  for (const auto* half : {&sets.set_a, &sets.set_b}) {
    const ParityReport r = verify_parity_proof(rays, *half);
    CHECK(r.parity_proof);
    CHECK(r.bases.size() == 15);
    CHECK(r.odd_basis_count());
    for (const auto& [id, m] : r.multiplicity) CHECK(m == 2);
  }
  std::vector<RayId> first(30);
  std::iota(first.begin(), first.end(), 1);
  const ParityReport generic = verify_parity_proof(rays, first);
  CHECK_FALSE(generic.parity_proof);
  CHECK(generic.bases.size() == 7);
  CHECK_FALSE(generic.uniform_multiplicity_two());
  CHECK_THROWS(verify_parity_proof(rays, std::vector<RayId>{1, 70}));
}

TEST_CASE("split enumeration") {
  const RaySet rays = build_600cell_rays();
  const OrthoGraph g = orthogonality_graph(rays);
  const auto bases = enumerate_bases(g);
  const auto splits = enumerate_parity_splits(g, bases);
  REQUIRE(splits.size() == 120);
  const auto& sets = builtin_sets();
  bool found = false;
  for (const ParitySplit& s : splits) {
    CHECK(s.first.parity_proof);
    CHECK(s.second.parity_proof);
    CHECK(s.first.bases.size() == 15);
    CHECK(s.second.bases.size() == 15);
    CHECK(s.first.subset.size() == 30);
    CHECK(s.first.subset.front() == 1);
    std::vector<RayId> all;
    std::set_union(s.first.subset.begin(), s.first.subset.end(), s.second.subset.begin(), s.second.subset.end(),
                   std::back_inserter(all));
    CHECK(all.size() == 60);
    found = found || (s.first.subset == sets.set_a && s.second.subset == sets.set_b);
  }
  CHECK(found);

  // Same split set whatever order the bases come in.
  std::vector<Basis> shuffled = bases;
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto again = enumerate_parity_splits(g, shuffled);
    REQUIRE(again.size() == splits.size());
    for (std::size_t i = 0; i < splits.size(); ++i) CHECK(again[i].first.subset == splits[i].first.subset);
  }
}

TEST_CASE("Peres-24 has no parity splits") {
  // Regression constant from the split search.
  const RaySet peres = build_peres24();
  CHECK(enumerate_bases(orthogonality_graph(peres)).size() == 24);
  CHECK(enumerate_parity_splits(peres).empty());
}
