#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brauer/tree.hpp"

namespace brauer {

inline constexpr int kMaxEnumerationEdges = 8;
inline constexpr int kMaxLabeledEdges = 6;

struct TreeFamily {
  int edge_count = 0;
  std::optional<int> exceptional_multiplicity;  // placed at every vertex in turn
  IsoMode mode = IsoMode::Unlabeled;
  std::vector<BrauerTree> members;
  std::vector<std::string> codes;  // canonical_code of each member, same order

  [[nodiscard]] std::optional<std::size_t> find(const std::string& code) const;
};

// Every Brauer tree with n edges up to isomorphism in the given mode.
// Shapes are grown by attaching a new leaf edge at every corner of every
// smaller shape and deduplicating by canonical code.
[[nodiscard]] TreeFamily all_trees(int n, std::optional<int> multiplicity, IsoMode mode);

struct MutationArrow {
  std::size_t source;
  EdgeId edge;
  std::size_t target;
};

struct MutationGraph {
  std::vector<std::string> nodes;
  std::vector<MutationArrow> arrows;
};

[[nodiscard]] MutationGraph mutation_graph(const TreeFamily& family);

// Smallest s >= 1 with mu_i^s(t) labeled-isomorphic to t.
[[nodiscard]] int orbit_order(const BrauerTree& t, EdgeId i);

}  // namespace brauer
