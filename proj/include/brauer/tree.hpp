#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace brauer {

using EdgeId = int;              // edges are labelled 1..n
using VertexIndex = std::size_t; // position in BrauerTree::vertices()

class BrauerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Vertex {
  std::string id;
  int multiplicity = 1;
  std::vector<EdgeId> cyclic;  // clockwise

  bool operator==(const Vertex&) const = default;
};

enum class TreeIssueKind {
  EdgeCountMismatch,
  LoopEdge,
  NotATree,
  MultipleExceptional,
  BadMultiplicity,
  DuplicateVertexId,
};

struct TreeIssue {
  TreeIssueKind kind;
  std::string message;
};

[[nodiscard]] const char* to_string(TreeIssueKind kind);

struct ValidationResult;

/// A ribbon tree with vertex multiplicities: every vertex carries the
/// clockwise cyclic order of its incident edges. Vertex order is stable
/// under mutation (edges move, vertices do not), so a VertexIndex stays
/// meaningful across a mutation sequence.
class BrauerTree {
 public:
  [[nodiscard]] static ValidationResult validate(std::vector<Vertex> raw);
  // Throws BrauerError listing every issue.
  [[nodiscard]] static BrauerTree from_vertices(std::vector<Vertex> raw);

  [[nodiscard]] int edge_count() const { return edge_count_; }
  [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
  [[nodiscard]] const std::vector<Vertex>& vertices() const { return vertices_; }
  [[nodiscard]] const Vertex& vertex(VertexIndex v) const { return vertices_.at(v); }
  [[nodiscard]] std::optional<VertexIndex> find_vertex(const std::string& id) const;

  [[nodiscard]] bool has_edge(EdgeId i) const { return i >= 1 && i <= edge_count_; }
  [[nodiscard]] std::array<VertexIndex, 2> ends(EdgeId i) const;
  [[nodiscard]] VertexIndex other_end(EdgeId i, VertexIndex v) const;
  [[nodiscard]] std::size_t valency(VertexIndex v) const { return vertex(v).cyclic.size(); }
  [[nodiscard]] int multiplicity(VertexIndex v) const { return vertex(v).multiplicity; }
  [[nodiscard]] std::optional<VertexIndex> exceptional_vertex() const;

  // Edge after i in the clockwise order at v; i itself at a valency-1 vertex.
  [[nodiscard]] EdgeId successor(VertexIndex v, EdgeId i) const;
  // Edge reached after `steps` clockwise steps from i around v.
  [[nodiscard]] EdgeId rotate(VertexIndex v, EdgeId i, long steps) const;
  [[nodiscard]] bool incident(VertexIndex v, EdgeId i) const;
  // The vertex shared by two distinct edges, if any.
  [[nodiscard]] std::optional<VertexIndex> common_vertex(EdgeId i, EdgeId j) const;

  // Structural equality: same vertex ids, multiplicities, and cyclic lists up
  // to rotation; vertex order is irrelevant.
  bool operator==(const BrauerTree& other) const;

 private:
  BrauerTree() = default;
  std::vector<Vertex> vertices_;
  int edge_count_ = 0;
  std::vector<std::array<VertexIndex, 2>> ends_;  // index 0 unused
};

struct ValidationResult {
  std::optional<BrauerTree> tree;
  std::vector<TreeIssue> issues;

  [[nodiscard]] bool ok() const { return issues.empty(); }
  [[nodiscard]] bool has(TreeIssueKind kind) const;
};

[[nodiscard]] bool follows(const BrauerTree& t, EdgeId i, EdgeId j);
[[nodiscard]] BrauerTree mutate(const BrauerTree& t, EdgeId i);
[[nodiscard]] bool is_star(const BrauerTree& t, VertexIndex v);
[[nodiscard]] bool is_star(const BrauerTree& t);

// Relabels edges: edge i becomes perm[i] (perm[0] unused).
using LabelPermutation = std::vector<EdgeId>;
[[nodiscard]] LabelPermutation identity_permutation(int n);
[[nodiscard]] LabelPermutation compose(const LabelPermutation& outer,
                                       const LabelPermutation& inner);
[[nodiscard]] LabelPermutation inverse(const LabelPermutation& p);
[[nodiscard]] BrauerTree relabel(const BrauerTree& t, const LabelPermutation& perm);

enum class IsoMode { Labeled, Unlabeled };

[[nodiscard]] std::string canonical_code(const BrauerTree& t, IsoMode mode);
// Edge-label witness mapping t1's labels to t2's; identity in labeled mode.
[[nodiscard]] std::optional<LabelPermutation> isomorphic(const BrauerTree& t1,
                                                         const BrauerTree& t2,
                                                         IsoMode mode);

// Greedy mutation sequence turning t into a star centred at v.
[[nodiscard]] std::vector<EdgeId> to_star_sequence(const BrauerTree& t, VertexIndex v);

}  // namespace brauer
