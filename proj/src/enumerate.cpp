#include "brauer/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace brauer {

std::optional<std::size_t> TreeFamily::find(const std::string& code) const {
  const auto it = std::find(codes.begin(), codes.end(), code);
  if (it == codes.end()) return std::nullopt;
  return static_cast<std::size_t>(it - codes.begin());
}

namespace {

std::vector<BrauerTree> grow_shapes(int n) {
  std::vector<BrauerTree> shapes{BrauerTree::from_vertices({{"v0", 1, {1}}, {"v1", 1, {1}}})};
  for (int k = 1; k < n; ++k) {
    std::vector<BrauerTree> next;
    std::set<std::string> seen;
    const EdgeId fresh = k + 1;
    for (const auto& t : shapes) {
      for (VertexIndex v = 0; v < t.vertex_count(); ++v) {
        for (std::size_t pos = 0; pos < t.valency(v); ++pos) {
          std::vector<Vertex> raw = t.vertices();
          auto& c = raw[v].cyclic;
          c.insert(c.begin() + static_cast<long>(pos) + 1, fresh);
          raw.push_back({"v" + std::to_string(raw.size()), 1, {fresh}});
          auto grown = BrauerTree::from_vertices(std::move(raw));
          if (seen.insert(canonical_code(grown, IsoMode::Unlabeled)).second) {
            next.push_back(std::move(grown));
          }
        }
      }
    }
    shapes = std::move(next);
  }
  return shapes;
}

}  // namespace

TreeFamily all_trees(int n, std::optional<int> multiplicity, IsoMode mode) {
  if (n < 1 || n > kMaxEnumerationEdges) {
    throw BrauerError("SizeLimit: edge count must be in 1.." + std::to_string(kMaxEnumerationEdges));
  }
  if (mode == IsoMode::Labeled && n > kMaxLabeledEdges) {
    throw BrauerError("SizeLimit: labeled families are limited to " + std::to_string(kMaxLabeledEdges) + " edges");
  }
  if (multiplicity && *multiplicity < 2) throw BrauerError("exceptional multiplicity must be at least 2");

  TreeFamily family;
  family.edge_count = n;
  family.exceptional_multiplicity = multiplicity;
  family.mode = mode;

  std::vector<BrauerTree> weighted;
  for (const auto& shape : grow_shapes(n)) {
    if (!multiplicity) {
      weighted.push_back(shape);
      continue;
    }
    for (VertexIndex v = 0; v < shape.vertex_count(); ++v) {
      std::vector<Vertex> raw = shape.vertices();
      raw[v].multiplicity = *multiplicity;
      weighted.push_back(BrauerTree::from_vertices(std::move(raw)));
    }
  }

  std::set<std::string> seen;
  auto add = [&](BrauerTree t) {
    auto code = canonical_code(t, mode);
    if (seen.insert(code).second) {
      family.members.push_back(std::move(t));
      family.codes.push_back(std::move(code));
    }
  };
  for (auto& t : weighted) {
    if (mode == IsoMode::Unlabeled) {
      add(std::move(t));
      continue;
    }
    LabelPermutation perm = identity_permutation(n);
    do {
      add(relabel(t, perm));
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
  }
  return family;
}

MutationGraph mutation_graph(const TreeFamily& family) {
  MutationGraph g;
  g.nodes = family.codes;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < family.codes.size(); ++k) index.emplace(family.codes[k], k);

  for (std::size_t s = 0; s < family.members.size(); ++s) {
    std::set<std::size_t> targets;
    for (EdgeId i = 1; i <= family.edge_count; ++i) {
      const auto code = canonical_code(mutate(family.members[s], i), family.mode);
      const auto it = index.find(code);
      if (it == index.end()) throw BrauerError("mutation left the family: " + code);
      if (family.mode == IsoMode::Unlabeled && !targets.insert(it->second).second) continue;
      g.arrows.push_back({s, i, it->second});
    }
  }
  return g;
}

int orbit_order(const BrauerTree& t, EdgeId i) {
  const auto start = canonical_code(t, IsoMode::Labeled);
  BrauerTree cur = mutate(t, i);
  // Mutation permutes a finite set; 10^6 is far beyond any orbit at n <= 8.
  for (int s = 1; s < 1'000'000; ++s) {
    if (canonical_code(cur, IsoMode::Labeled) == start) return s;
    cur = mutate(cur, i);
  }
  throw BrauerError("orbit did not close");
}

}  // namespace brauer
