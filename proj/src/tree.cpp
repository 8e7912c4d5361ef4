#include "brauer/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace brauer {

const char* to_string(TreeIssueKind kind) {
  switch (kind) {
    case TreeIssueKind::EdgeCountMismatch: return "EdgeCountMismatch";
    case TreeIssueKind::LoopEdge: return "LoopEdge";
    case TreeIssueKind::NotATree: return "NotATree";
    case TreeIssueKind::MultipleExceptional: return "MultipleExceptional";
    case TreeIssueKind::BadMultiplicity: return "BadMultiplicity";
    case TreeIssueKind::DuplicateVertexId: return "DuplicateVertexId";
  }
  return "?";
}

bool ValidationResult::has(TreeIssueKind kind) const {
  return std::any_of(issues.begin(), issues.end(),
                     [kind](const TreeIssue& x) { return x.kind == kind; });
}

ValidationResult BrauerTree::validate(std::vector<Vertex> raw) {
  ValidationResult result;
  auto report = [&](TreeIssueKind kind, std::string msg) {
    result.issues.push_back({kind, std::move(msg)});
  };

  std::set<std::string> ids;
  int exceptional = 0;
  for (const auto& v : raw) {
    if (!ids.insert(v.id).second) report(TreeIssueKind::DuplicateVertexId, "vertex id '" + v.id + "' repeated");
    if (v.multiplicity < 1) {
      report(TreeIssueKind::BadMultiplicity,
             "vertex '" + v.id + "' has multiplicity " + std::to_string(v.multiplicity));
    }
    if (v.multiplicity > 1) ++exceptional;
  }
  if (exceptional > 1) {
    report(TreeIssueKind::MultipleExceptional,
           std::to_string(exceptional) + " vertices have multiplicity > 1");
  }

  int n = 0;
  std::map<EdgeId, std::vector<VertexIndex>> occurrences;
  for (VertexIndex v = 0; v < raw.size(); ++v) {
    for (EdgeId e : raw[v].cyclic) {
      occurrences[e].push_back(v);
      n = std::max(n, e);
    }
  }
  if (n == 0) report(TreeIssueKind::EdgeCountMismatch, "tree has no edges");

  bool edges_ok = n > 0;
  for (const auto& [e, where] : occurrences) {
    if (e < 1) {
      report(TreeIssueKind::EdgeCountMismatch, "edge label " + std::to_string(e) + " is not positive");
      edges_ok = false;
    }
  }
  for (EdgeId e = 1; e <= n; ++e) {
    auto it = occurrences.find(e);
    const std::size_t count = it == occurrences.end() ? 0 : it->second.size();
    if (count != 2) {
      report(TreeIssueKind::EdgeCountMismatch,
             "edge " + std::to_string(e) + " occurs " + std::to_string(count) + " times");
      edges_ok = false;
    } else if (it->second[0] == it->second[1]) {
      report(TreeIssueKind::LoopEdge,
             "edge " + std::to_string(e) + " has both ends at '" + raw[it->second[0]].id + "'");
      edges_ok = false;
    }
  }

  if (edges_ok) {
    std::vector<VertexIndex> parent(raw.size());
    std::iota(parent.begin(), parent.end(), VertexIndex{0});
    auto find = [&](VertexIndex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool cycle = false;
    for (EdgeId e = 1; e <= n; ++e) {
      const auto a = find(occurrences[e][0]);
      const auto b = find(occurrences[e][1]);
      if (a == b) cycle = true;
      parent[a] = b;
    }
    std::set<VertexIndex> roots;
    for (VertexIndex v = 0; v < raw.size(); ++v) roots.insert(find(v));
    if (cycle) report(TreeIssueKind::NotATree, "edges form a cycle");
    if (roots.size() > 1) report(TreeIssueKind::NotATree, "graph is disconnected");
    if (raw.size() != static_cast<std::size_t>(n) + 1 && !cycle && roots.size() == 1) {
      report(TreeIssueKind::NotATree, "vertex count is not edge count + 1");
    }
  } else if (raw.empty()) {
    report(TreeIssueKind::NotATree, "no vertices");
  }

  if (!result.issues.empty()) return result;

  BrauerTree t;
  t.edge_count_ = n;
  t.ends_.assign(static_cast<std::size_t>(n) + 1, {0, 0});
  for (EdgeId e = 1; e <= n; ++e) t.ends_[e] = {occurrences[e][0], occurrences[e][1]};
  t.vertices_ = std::move(raw);
  result.tree = std::move(t);
  return result;
}

BrauerTree BrauerTree::from_vertices(std::vector<Vertex> raw) {
  auto result = validate(std::move(raw));
  if (!result.ok()) {
    std::ostringstream os;
    os << "invalid Brauer tree:";
    for (const auto& issue : result.issues) os << " [" << to_string(issue.kind) << "] " << issue.message << ";";
    throw BrauerError(os.str());
  }
  return std::move(*result.tree);
}

std::optional<VertexIndex> BrauerTree::find_vertex(const std::string& id) const {
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].id == id) return v;
  }
  return std::nullopt;
}

std::array<VertexIndex, 2> BrauerTree::ends(EdgeId i) const {
  if (!has_edge(i)) throw BrauerError("unknown edge " + std::to_string(i));
  return ends_[i];
}

VertexIndex BrauerTree::other_end(EdgeId i, VertexIndex v) const {
  const auto e = ends(i);
  if (e[0] == v) return e[1];
  if (e[1] == v) return e[0];
  throw BrauerError("edge " + std::to_string(i) + " is not incident to vertex '" + vertex(v).id + "'");
}

std::optional<VertexIndex> BrauerTree::exceptional_vertex() const {
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].multiplicity > 1) return v;
  }
  return std::nullopt;
}

EdgeId BrauerTree::rotate(VertexIndex v, EdgeId i, long steps) const {
  const auto& c = vertex(v).cyclic;
  const auto it = std::find(c.begin(), c.end(), i);
  if (it == c.end()) {
    throw BrauerError("edge " + std::to_string(i) + " is not incident to vertex '" + vertex(v).id + "'");
  }
  const long len = static_cast<long>(c.size());
  const long pos = ((it - c.begin()) + steps % len + len) % len;
  return c[static_cast<std::size_t>(pos)];
}

EdgeId BrauerTree::successor(VertexIndex v, EdgeId i) const { return rotate(v, i, 1); }

bool BrauerTree::incident(VertexIndex v, EdgeId i) const {
  const auto& c = vertex(v).cyclic;
  return std::find(c.begin(), c.end(), i) != c.end();
}

std::optional<VertexIndex> BrauerTree::common_vertex(EdgeId i, EdgeId j) const {
  if (i == j) return std::nullopt;
  for (VertexIndex a : ends(i)) {
    for (VertexIndex b : ends(j)) {
      if (a == b) return a;
    }
  }
  return std::nullopt;
}

namespace {

std::vector<EdgeId> rotated_to_min(std::vector<EdgeId> c) {
  if (!c.empty()) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  return c;
}

}  // namespace

bool BrauerTree::operator==(const BrauerTree& other) const {
  if (edge_count_ != other.edge_count_ || vertices_.size() != other.vertices_.size()) return false;
  for (const auto& v : vertices_) {
    const auto w = other.find_vertex(v.id);
    if (!w) return false;
    const auto& ov = other.vertices_[*w];
    if (ov.multiplicity != v.multiplicity || rotated_to_min(ov.cyclic) != rotated_to_min(v.cyclic)) {
      return false;
    }
  }
  return true;
}

bool follows(const BrauerTree& t, EdgeId i, EdgeId j) {
  if (!t.has_edge(i) || !t.has_edge(j)) throw BrauerError("unknown edge");
  for (VertexIndex v : t.ends(i)) {
    if (t.valency(v) >= 2 && t.successor(v, i) == j) return true;
  }
  return false;
}

BrauerTree mutate(const BrauerTree& t, EdgeId i) {
  if (!t.has_edge(i)) throw BrauerError("unknown edge " + std::to_string(i));
  struct Move {
    VertexIndex from;
    VertexIndex to;
    EdgeId after;
  };
  std::vector<Move> moves;
  for (VertexIndex v : t.ends(i)) {
    if (t.valency(v) < 2) continue;
    const EdgeId x = t.successor(v, i);
    moves.push_back({v, t.other_end(x, v), x});
  }

  std::vector<Vertex> out = t.vertices();
  for (const auto& m : moves) {
    auto& from = out[m.from].cyclic;
    from.erase(std::find(from.begin(), from.end(), i));
  }
  for (const auto& m : moves) {
    auto& to = out[m.to].cyclic;
    to.insert(std::find(to.begin(), to.end(), m.after) + 1, i);
  }
  return BrauerTree::from_vertices(std::move(out));
}

bool is_star(const BrauerTree& t, VertexIndex v) {
  return t.valency(v) == static_cast<std::size_t>(t.edge_count());
}

bool is_star(const BrauerTree& t) {
  for (VertexIndex v = 0; v < t.vertex_count(); ++v) {
    if (is_star(t, v)) return true;
  }
  return false;
}

LabelPermutation identity_permutation(int n) {
  LabelPermutation p(static_cast<std::size_t>(n) + 1);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

LabelPermutation compose(const LabelPermutation& outer, const LabelPermutation& inner) {
  if (outer.size() != inner.size()) throw BrauerError("permutation size mismatch");
  LabelPermutation p(inner.size());
  for (std::size_t i = 1; i < inner.size(); ++i) p[i] = outer.at(static_cast<std::size_t>(inner[i]));
  return p;
}

LabelPermutation inverse(const LabelPermutation& p) {
  LabelPermutation q(p.size());
  for (std::size_t i = 1; i < p.size(); ++i) q.at(static_cast<std::size_t>(p[i])) = static_cast<EdgeId>(i);
  return q;
}

BrauerTree relabel(const BrauerTree& t, const LabelPermutation& perm) {
  if (perm.size() != static_cast<std::size_t>(t.edge_count()) + 1) {
    throw BrauerError("permutation size does not match edge count");
  }
  std::vector<Vertex> out = t.vertices();
  for (auto& v : out) {
    for (auto& e : v.cyclic) e = perm[static_cast<std::size_t>(e)];
  }
  return BrauerTree::from_vertices(std::move(out));
}

namespace {

constexpr int kOpen = -1;
constexpr int kClose = -2;
constexpr int kEdge = -3;  // edge token in unlabeled mode

struct Traversal {
  std::vector<int> tokens;
  std::vector<EdgeId> edge_order;
};

void encode_child(const BrauerTree& t, VertexIndex w, EdgeId via, IsoMode mode, Traversal& out) {
  out.tokens.push_back(kOpen);
  out.tokens.push_back(t.multiplicity(w));
  const long len = static_cast<long>(t.valency(w));
  for (long k = 1; k < len; ++k) {
    const EdgeId y = t.rotate(w, via, k);
    out.tokens.push_back(mode == IsoMode::Labeled ? y : kEdge);
    out.edge_order.push_back(y);
    encode_child(t, t.other_end(y, w), y, mode, out);
  }
  out.tokens.push_back(kClose);
}

Traversal encode_flag(const BrauerTree& t, VertexIndex v, EdgeId start, IsoMode mode) {
  Traversal out;
  out.tokens.push_back(kOpen);
  out.tokens.push_back(t.multiplicity(v));
  const long len = static_cast<long>(t.valency(v));
  for (long k = 0; k < len; ++k) {
    const EdgeId x = t.rotate(v, start, k);
    out.tokens.push_back(mode == IsoMode::Labeled ? x : kEdge);
    out.edge_order.push_back(x);
    encode_child(t, t.other_end(x, v), x, mode, out);
  }
  out.tokens.push_back(kClose);
  return out;
}

Traversal minimal_traversal(const BrauerTree& t, IsoMode mode) {
  std::optional<Traversal> best;
  for (VertexIndex v = 0; v < t.vertex_count(); ++v) {
    for (EdgeId e : t.vertex(v).cyclic) {
      auto cand = encode_flag(t, v, e, mode);
      if (!best || cand.tokens < best->tokens) best = std::move(cand);
    }
  }
  return std::move(*best);
}

}  // namespace

std::string canonical_code(const BrauerTree& t, IsoMode mode) {
  const auto tr = minimal_traversal(t, mode);
  std::string s;
  for (int tok : tr.tokens) {
    switch (tok) {
      case kOpen: s += '('; break;
      case kClose: s += ')'; break;
      case kEdge: s += 'e'; break;
      default:
        s += std::to_string(tok);
        s += ' ';
    }
  }
  return s;
}

std::optional<LabelPermutation> isomorphic(const BrauerTree& t1, const BrauerTree& t2, IsoMode mode) {
  if (t1.edge_count() != t2.edge_count()) return std::nullopt;
  const auto a = minimal_traversal(t1, mode);
  const auto b = minimal_traversal(t2, mode);
  if (a.tokens != b.tokens) return std::nullopt;
  if (mode == IsoMode::Labeled) return identity_permutation(t1.edge_count());
  LabelPermutation p(static_cast<std::size_t>(t1.edge_count()) + 1, 0);
  for (std::size_t k = 0; k < a.edge_order.size(); ++k) {
    p[static_cast<std::size_t>(a.edge_order[k])] = b.edge_order[k];
  }
  return p;
}

std::vector<EdgeId> to_star_sequence(const BrauerTree& t, VertexIndex v) {
  if (v >= t.vertex_count()) throw BrauerError("unknown vertex index");
  std::vector<EdgeId> seq;
  BrauerTree cur = t;
  while (!is_star(cur, v)) {
    std::optional<EdgeId> pick;
    for (EdgeId i = 1; i <= cur.edge_count() && !pick; ++i) {
      if (cur.incident(v, i)) continue;
      for (VertexIndex u : cur.ends(i)) {
        if (cur.valency(u) < 2) continue;
        const EdgeId j = cur.successor(u, i);
        if (cur.other_end(j, u) == v) {
          pick = i;
          break;
        }
      }
    }
    if (!pick) throw BrauerError("NoCandidate: no edge is followed by an edge ending at the target vertex");
    seq.push_back(*pick);
    cur = mutate(cur, *pick);
    if (seq.size() > static_cast<std::size_t>(t.edge_count())) {
      throw BrauerError("NoCandidate: greedy sequence failed to terminate");
    }
  }
  return seq;
}

}  // namespace brauer
