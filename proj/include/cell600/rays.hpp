#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cell600/golden.hpp"

namespace cell600 {

using RayId = int;

/// A real ray in R^4, identified up to a nonzero scalar, with an exact
/// golden representative.
struct Ray {
  RayId id = 0;
  std::array<GoldenNum, 4> components;

  GoldenNum norm_squared() const;
  std::array<double, 4> to_double() const;

  friend bool operator==(const Ray&, const Ray&) = default;
};

GoldenNum inner_product(const Ray& u, const Ray& v);

/// True when u = c * v for some nonzero real c.
bool proportional(const Ray& u, const Ray& v);

/// An ordered catalog of rays with unique ids and no two rays proportional.
class RaySet {
 public:
  RaySet() = default;
  /// Validates the catalog; throws InvariantError naming the offending id.
  RaySet(std::string name, std::vector<Ray> rays);

  const std::string& name() const { return name_; }
  std::span<const Ray> rays() const { return rays_; }
  std::size_t size() const { return rays_.size(); }
  const Ray& operator[](std::size_t i) const { return rays_[i]; }

  bool contains(RayId id) const;
  /// Throws InvariantError for an unknown id.
  const Ray& by_id(RayId id) const;
  std::size_t index_of(RayId id) const;

  friend bool operator==(const RaySet& x, const RaySet& y) { return x.rays_ == y.rays_; }

 private:
  std::string name_;
  std::vector<Ray> rays_;
  std::vector<std::int32_t> index_;  // id -> position, -1 if absent
};

/// The 60 rays of the 600-cell (one per antipodal vertex pair), ids 1..60,
/// in the standard numbering with components over {0, +-1, +-2, +-t, +-k}.
RaySet build_600cell_rays();

/// The 24 rays of Peres: 4 axis rays, 12 rays of type (1,+-1,0,0) and 8 of
/// type (1,+-1,+-1,+-1). Axis rays are scaled to (2,0,0,0); the (1,+-1,0,0)
/// family has squared norm 2 because sqrt2 is not in Q(sqrt5).
RaySet build_peres24();

/// Orthogonality graph of a ray catalog. Vertices are local indices
/// 0..n-1; each carries the ray id it came from.
class OrthoGraph {
 public:
  OrthoGraph() = default;
  /// Builds from a vertex labelling and a symmetric adjacency predicate
  /// over local indices.
  template <class EdgeFn>
  OrthoGraph(std::vector<RayId> labels, EdgeFn&& edge);

  std::size_t size() const { return labels_.size(); }
  std::size_t words() const { return words_; }
  RayId label(std::size_t v) const { return labels_[v]; }
  std::span<const RayId> labels() const { return labels_; }
  /// Local index of a ray id; throws InvariantError when absent.
  std::size_t index_of(RayId id) const;
  bool has_label(RayId id) const;

  bool adjacent(std::size_t u, std::size_t v) const {
    return (adjacency_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  /// Bit row of neighbours of v, `words()` 64-bit words long.
  std::span<const std::uint64_t> row(std::size_t v) const {
    return {adjacency_.data() + v * words_, words_};
  }
  std::size_t degree(std::size_t v) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::size_t edge_count() const;

  friend bool operator==(const OrthoGraph&, const OrthoGraph&) = default;

 private:
  std::vector<RayId> labels_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adjacency_;
};

/// Edge (i, j) iff the exact inner product vanishes and i != j.
OrthoGraph orthogonality_graph(const RaySet& rays);

/// Restriction of g to the given ray ids (order of g preserved). Throws
/// InvariantError for an id not in g.
OrthoGraph induced_subgraph(const OrthoGraph& g, std::span<const RayId> ids);

/// Parses the ray-file format: one `ID: c1 c2 c3 c4` per line, golden
/// components, `#` starting a comment. Throws ParseError (with line and
/// column) or InvariantError.
RaySet parse_rayset(std::istream& in, std::string name = "custom");
RaySet parse_rayset(std::string_view text, std::string name = "custom");
RaySet load_rayset(const std::filesystem::path& path);

/// Inverse of parse_rayset.
std::string format_rayset(const RaySet& rays);
std::string format_ray(const Ray& ray);

// ---------------------------------------------------------------------------

template <class EdgeFn>
OrthoGraph::OrthoGraph(std::vector<RayId> labels, EdgeFn&& edge)
    : labels_(std::move(labels)), words_((labels_.size() + 63) / 64) {
  const std::size_t n = labels_.size();
  adjacency_.assign(n * words_, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!edge(i, j)) continue;
      adjacency_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
      adjacency_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
}

}  // namespace cell600
