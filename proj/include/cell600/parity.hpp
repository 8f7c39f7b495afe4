#pragma once

#include <map>
#include <span>
#include <vector>

#include "cell600/ngons.hpp"
#include "cell600/rays.hpp"

namespace cell600 {

/// Outcome of checking a ray subset for a Kochen-Specker parity proof: an odd
/// number of bases inside the subset with every subset ray in exactly two of
/// them. A failing check is a verdict, not an error.
struct ParityReport {
  std::vector<RayId> subset;              // sorted
  std::vector<Basis> bases;               // every basis lying inside the subset
  std::map<RayId, int> multiplicity;      // subset ray -> number of bases containing it
  bool parity_proof = false;

  bool odd_basis_count() const { return bases.size() % 2 == 1; }
  bool uniform_multiplicity_two() const;
};

ParityReport verify_parity_proof(std::span<const Basis> all_bases, std::span<const RayId> ids);
ParityReport verify_parity_proof(const RaySet& rays, std::span<const RayId> ids);

/// Two complementary halves of a catalog, both parity proofs. `first` holds
/// the first catalog ray, which makes the pair unordered.
struct ParitySplit {
  ParityReport first;
  ParityReport second;
};

/// All splits of the catalog into two complementary halves of equal size that
/// are both parity proofs. Searches over bases: starting from the smallest
/// ray, bases are added so that every chosen ray is covered exactly twice,
/// always extending the ray with the fewest remaining options. Halves are
/// verified against all bases afterwards.
std::vector<ParitySplit> enumerate_parity_splits(const OrthoGraph& g, std::span<const Basis> bases);
std::vector<ParitySplit> enumerate_parity_splits(const RaySet& rays);

/// The two 30-ray halves of the 600-cell listed with their 15 bases each, in
/// table order.
struct BuiltinSets {
  std::vector<RayId> set_a;
  std::vector<RayId> set_b;
  std::vector<Basis> bases_a;
  std::vector<Basis> bases_b;
};

const BuiltinSets& builtin_sets();

}  // namespace cell600
