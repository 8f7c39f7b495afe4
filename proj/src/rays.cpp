#include "cell600/rays.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "cell600/errors.hpp"

namespace cell600 {

GoldenNum Ray::norm_squared() const { return inner_product(*this, *this); }

std::array<double, 4> Ray::to_double() const {
  return {components[0].to_double(), components[1].to_double(), components[2].to_double(),
          components[3].to_double()};
}

GoldenNum inner_product(const Ray& u, const Ray& v) {
  GoldenNum sum;
  for (std::size_t i = 0; i < 4; ++i) sum += u.components[i] * v.components[i];
  return sum;
}

bool proportional(const Ray& u, const Ray& v) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const GoldenNum minor = u.components[i] * v.components[j] - u.components[j] * v.components[i];
      if (!minor.is_zero()) return false;
    }
  }
  return true;
}

RaySet::RaySet(std::string name, std::vector<Ray> rays) : name_(std::move(name)), rays_(std::move(rays)) {
  RayId max_id = 0;
  for (const Ray& r : rays_) {
    if (r.id <= 0) throw InvariantError("ray ids must be positive", r.id);
    if (r.norm_squared().is_zero()) throw InvariantError("zero vector", r.id);
    max_id = std::max(max_id, r.id);
  }
  index_.assign(static_cast<std::size_t>(max_id) + 1, -1);
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    auto& slot = index_[static_cast<std::size_t>(rays_[i].id)];
    if (slot != -1) throw InvariantError("duplicate ray id", rays_[i].id);
    slot = static_cast<std::int32_t>(i);
  }
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    for (std::size_t j = i + 1; j < rays_.size(); ++j) {
      if (proportional(rays_[i], rays_[j])) {
        throw InvariantError("ray proportional to ray " + std::to_string(rays_[i].id), rays_[j].id);
      }
    }
  }
}

bool RaySet::contains(RayId id) const {
  return id > 0 && static_cast<std::size_t>(id) < index_.size() && index_[static_cast<std::size_t>(id)] >= 0;
}

std::size_t RaySet::index_of(RayId id) const {
  if (!contains(id)) throw InvariantError("unknown ray id in catalog " + name_, id);
  return static_cast<std::size_t>(index_[static_cast<std::size_t>(id)]);
}

const Ray& RaySet::by_id(RayId id) const { return rays_[index_of(id)]; }

namespace {

// One line per ray; components in the golden textual form.
constexpr std::string_view k600CellTable = R"(
 1: 2 0 0 0
 2: 0 2 0 0
 3: 0 0 2 0
 4: 0 0 0 2
 5: 1 1 1 1
 6: 1 1 -1 -1
 7: 1 -1 1 -1
 8: 1 -1 -1 1
 9: 1 -1 -1 -1
10: 1 -1 1 1
11: 1 1 -1 1
12: 1 1 1 -1
13: k 0 -t -1
14: 0 k 1 -t
15: t -1 k 0
16: 1 t 0 k
17: t k 0 -1
18: 1 0 k t
19: k -t -1 0
20: 0 1 -t k
21: 1 k t 0
22: t 0 -1 k
23: 0 t -k -1
24: k -1 0 -t
25: t 0 1 k
26: 0 t -k 1
27: 1 -k -t 0
28: k 1 0 -t
29: 0 k 1 t
30: t 1 -k 0
31: k 0 t -1
32: 1 -t 0 k
33: t -k 0 -1
34: 0 1 -t -k
35: 1 0 -k t
36: k t 1 0
37: t 0 -1 -k
38: 0 t k -1
39: 1 -k t 0
40: k 1 0 t
41: t 1 k 0
42: 0 k -1 -t
43: 1 -t 0 -k
44: k 0 -t 1
45: 0 1 t k
46: t -k 0 1
47: k t -1 0
48: 1 0 k -t
49: k 0 t 1
50: 0 k -1 t
51: t -1 -k 0
52: 1 t 0 -k
53: 1 0 -k -t
54: t k 0 1
55: 0 1 t -k
56: k -t 1 0
57: t 0 1 -k
58: 1 k -t 0
59: k -1 0 t
60: 0 t k 1
)";

}  // namespace

RaySet build_600cell_rays() { return parse_rayset(k600CellTable, "600-cell"); }

RaySet build_peres24() {
  std::vector<Ray> rays;
  RayId id = 1;
  auto add = [&](std::array<long, 4> c) {
    rays.push_back(Ray{id++, {GoldenNum(c[0]), GoldenNum(c[1]), GoldenNum(c[2]), GoldenNum(c[3])}});
  };
  for (std::size_t axis = 0; axis < 4; ++axis) {
    std::array<long, 4> c{};
    c[axis] = 2;
    add(c);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      for (long s : {1L, -1L}) {
        std::array<long, 4> c{};
        c[i] = 1;
        c[j] = s;
        add(c);
      }
    }
  }
  for (long s1 : {1L, -1L}) {
    for (long s2 : {1L, -1L}) {
      for (long s3 : {1L, -1L}) add({1, s1, s2, s3});
    }
  }
  return RaySet("peres-24", std::move(rays));
}

std::size_t OrthoGraph::index_of(RayId id) const {
  auto it = std::find(labels_.begin(), labels_.end(), id);
  if (it == labels_.end()) throw InvariantError("ray id not in graph", id);
  return static_cast<std::size_t>(it - labels_.begin());
}

bool OrthoGraph::has_label(RayId id) const {
  return std::find(labels_.begin(), labels_.end(), id) != labels_.end();
}

std::size_t OrthoGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::uint64_t w : row(v)) d += static_cast<std::size_t>(__builtin_popcountll(w));
  return d;
}

std::vector<std::size_t> OrthoGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < size(); ++u) {
    if (adjacent(v, u)) out.push_back(u);
  }
  return out;
}

std::size_t OrthoGraph::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t v = 0; v < size(); ++v) twice += degree(v);
  return twice / 2;
}

OrthoGraph orthogonality_graph(const RaySet& rays) {
  std::vector<RayId> labels;
  labels.reserve(rays.size());
  for (const Ray& r : rays.rays()) labels.push_back(r.id);
  return OrthoGraph(std::move(labels), [&](std::size_t i, std::size_t j) {
    return golden_is_zero(inner_product(rays[i], rays[j]));
  });
}

OrthoGraph induced_subgraph(const OrthoGraph& g, std::span<const RayId> ids) {
  std::vector<bool> keep(g.size(), false);
  for (RayId id : ids) keep[g.index_of(id)] = true;
  std::vector<std::size_t> kept;
  std::vector<RayId> labels;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!keep[v]) continue;
    kept.push_back(v);
    labels.push_back(g.label(v));
  }
  return OrthoGraph(std::move(labels),
                    [&](std::size_t i, std::size_t j) { return g.adjacent(kept[i], kept[j]); });
}

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line, std::size_t offset) {
  std::vector<Token> tokens;
  std::size_t i = offset;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

}  // namespace

RaySet parse_rayset(std::istream& in, std::string name) {
  std::vector<Ray> rays;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'ID:'", line_no, 1);
    const auto id_tokens = split_tokens(line.substr(0, colon), 0);
    if (id_tokens.size() != 1) throw ParseError("expected a single ray id before ':'", line_no, 1);
    const Token& id_token = id_tokens.front();
    RayId id = 0;
    for (char c : id_token.text) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || id > 100'000'000) {
        throw ParseError("ray id must be a positive integer", line_no, id_token.column);
      }
      id = id * 10 + (c - '0');
    }

    const auto tokens = split_tokens(line, colon + 1);
    if (tokens.size() != 4) {
      const int column = tokens.size() > 4 ? tokens[4].column : static_cast<int>(line.size()) + 1;
      throw ParseError("expected 4 components, found " + std::to_string(tokens.size()), line_no,
                       column);
    }
    Ray ray{id, {}};
    for (std::size_t i = 0; i < 4; ++i) {
      try {
        ray.components[i] = parse_golden(tokens[i].text);
      } catch (const ParseError& e) {
        throw ParseError(e.message(), line_no, tokens[i].column + e.column() - 1);
      }
    }
    rays.push_back(std::move(ray));
  }
  return RaySet(std::move(name), std::move(rays));
}

RaySet parse_rayset(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  return parse_rayset(in, std::move(name));
}

RaySet load_rayset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ray file " + path.string());
  return parse_rayset(in, path.filename().string());
}

std::string format_ray(const Ray& ray) {
  std::string out = std::to_string(ray.id) + ":";
  for (const GoldenNum& c : ray.components) out += " " + c.to_string();
  return out;
}

std::string format_rayset(const RaySet& rays) {
  std::string out = "# " + rays.name() + "\n";
  for (const Ray& r : rays.rays()) out += format_ray(r) + "\n";
  return out;
}

}  // namespace cell600
