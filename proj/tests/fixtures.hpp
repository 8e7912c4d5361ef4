#pragma once

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "brauer/tree.hpp"

namespace fixtures {

using brauer::BrauerTree;

inline BrauerTree p3() {
  return BrauerTree::from_vertices({{"v0", 1, {1}}, {"v1", 1, {1, 2}}, {"v2", 1, {2, 3}}, {"v3", 1, {3}}});
}

inline BrauerTree s3(int centre_mult = 1, std::vector<int> cyclic = {1, 2, 3}) {
  return BrauerTree::from_vertices(
      {{"c", centre_mult, cyclic}, {"l1", 1, {1}}, {"l2", 1, {2}}, {"l3", 1, {3}}});
}

inline BrauerTree s3e() { return s3(2); }

inline BrauerTree t1() { return BrauerTree::from_vertices({{"a", 1, {1}}, {"b", 1, {1}}}); }

// Multiset of (multiplicity, cyclic list rotated to its minimum); vertex ids
// and order are ignored. Two trees with the same key are labeled-isomorphic.
using ShapeKey = std::vector<std::pair<int, std::vector<int>>>;

inline ShapeKey shape_key(const std::vector<brauer::Vertex>& vertices) {
  ShapeKey key;
  for (const auto& v : vertices) {
    auto c = v.cyclic;
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    key.emplace_back(v.multiplicity, c);
  }
  std::sort(key.begin(), key.end());
  return key;
}

inline ShapeKey shape_key(const BrauerTree& t) { return shape_key(t.vertices()); }

inline ShapeKey relabel_key(const ShapeKey& key, const std::vector<int>& perm) {
  std::vector<brauer::Vertex> vs;
  for (const auto& [m, c] : key) {
    brauer::Vertex v{"", m, {}};
    for (int e : c) v.cyclic.push_back(perm[static_cast<std::size_t>(e)]);
    vs.push_back(v);
  }
  return shape_key(vs);
}

// Minimum key over all n! relabelings: an unlabeled invariant that does not
// share code with the library's canonical form.
inline ShapeKey unlabeled_key(const ShapeKey& key, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) perm[static_cast<std::size_t>(i)] = i;
  ShapeKey best = key;
  while (std::next_permutation(perm.begin() + 1, perm.end())) best = std::min(best, relabel_key(key, perm));
  return best;
}

// Every labeled Brauer tree with n edges and no exceptional vertex, by brute
// force: all vertex-labeled trees on n+1 vertices (Pruefer codes), all edge
// labelings, all rotation systems; collected as shape keys.
inline std::set<ShapeKey> brute_force_labeled(int n) {
  const int nv = n + 1;
  std::set<ShapeKey> out;
  if (n == 1) {
    out.insert(shape_key(std::vector<brauer::Vertex>{{"", 1, {1}}, {"", 1, {1}}}));
    return out;
  }
  std::vector<int> code(static_cast<std::size_t>(n - 1), 0);
  while (true) {
    // decode Pruefer sequence
    std::vector<int> degree(static_cast<std::size_t>(nv), 1);
    for (int x : code) ++degree[static_cast<std::size_t>(x)];
    std::vector<std::pair<int, int>> edges;
    auto deg = degree;
    for (int x : code) {
      for (int leaf = 0; leaf < nv; ++leaf) {
        if (deg[static_cast<std::size_t>(leaf)] == 1) {
          edges.emplace_back(leaf, x);
          --deg[static_cast<std::size_t>(leaf)];
          --deg[static_cast<std::size_t>(x)];
          break;
        }
      }
    }
    std::vector<int> last;
    for (int v = 0; v < nv; ++v)
      if (deg[static_cast<std::size_t>(v)] == 1) last.push_back(v);
    edges.emplace_back(last[0], last[1]);

    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
    do {
      std::vector<std::vector<int>> around(static_cast<std::size_t>(nv));
      for (std::size_t e = 0; e < edges.size(); ++e) {
        around[static_cast<std::size_t>(edges[e].first)].push_back(labels[e]);
        around[static_cast<std::size_t>(edges[e].second)].push_back(labels[e]);
      }
      for (auto& a : around) std::sort(a.begin(), a.end());
      // odometer over rotation systems: permute everything after the first edge
      std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == around.size()) {
          std::vector<brauer::Vertex> vs;
          for (const auto& a : around) vs.push_back({"", 1, a});
          out.insert(shape_key(vs));
          return;
        }
        auto& a = around[v];
        std::sort(a.begin() + 1, a.end());
        do {
          rec(v + 1);
        } while (a.size() > 2 && std::next_permutation(a.begin() + 1, a.end()));
      };
      rec(0);
    } while (std::next_permutation(labels.begin(), labels.end()));

    // next code
    std::size_t k = 0;
    while (k < code.size() && ++code[k] == nv) code[k++] = 0;
    if (k == code.size()) break;
  }
  return out;
}

// Places multiplicity m at each vertex of each key in turn.
inline std::set<ShapeKey> with_exceptional(const std::set<ShapeKey>& keys, int m) {
  std::set<ShapeKey> out;
  for (const auto& key : keys) {
    for (std::size_t v = 0; v < key.size(); ++v) {
      auto k = key;
      k[v].first = m;
      std::sort(k.begin(), k.end());
      out.insert(k);
    }
  }
  return out;
}

inline std::set<ShapeKey> quotient_by_relabeling(const std::set<ShapeKey>& keys, int n) {
  std::set<ShapeKey> out;
  for (const auto& k : keys) out.insert(unlabeled_key(k, n));
  return out;
}

inline std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("brauer_tests_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace fixtures
