#include "brauer/cartan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace brauer {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (rows[i].size() != rows.size()) throw BrauerError("matrix is not square");
    for (int j = 0; j < n; ++j) m(i + 1, j + 1) = rows[i][j];
  }
  return m;
}

std::size_t IntMatrix::index(EdgeId i, EdgeId j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw BrauerError("matrix index out of range");
  return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1);
}

std::vector<std::vector<int>> IntMatrix::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) out[i - 1][j - 1] = (*this)(i, j);
  return out;
}

bool IntMatrix::symmetric() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (int i = 1; i <= m.size(); ++i) {
    os << (i > 1 ? "," : "") << '[';
    for (int j = 1; j <= m.size(); ++j) os << (j > 1 ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

IntMatrix cartan_formula(const BrauerTree& t) {
  const int n = t.edge_count();
  IntMatrix c(n);
  for (EdgeId i = 1; i <= n; ++i) {
    const auto e = t.ends(i);
    c(i, i) = t.multiplicity(e[0]) + t.multiplicity(e[1]);
    for (EdgeId j = 1; j <= n; ++j) {
      if (const auto v = t.common_vertex(i, j)) c(i, j) = t.multiplicity(*v);
    }
  }
  return c;
}

IntMatrix ext_formula(const BrauerTree& t) {
  const int n = t.edge_count();
  IntMatrix x(n);
  if (n == 1) {
    x(1, 1) = 1;
    return x;
  }
  for (EdgeId i = 1; i <= n; ++i) {
    for (VertexIndex v : t.ends(i)) {
      if (t.valency(v) >= 2) {
        x(i, t.successor(v, i)) = 1;
      } else if (t.multiplicity(v) > 1) {
        x(i, i) = 1;
      }
    }
  }
  return x;
}

namespace {

[[noreturn]] void inconsistent(const std::string& why) {
  throw BrauerError("Inconsistent: " + why);
}

// The vertex-sides of edge i: maximal cliques of {j != i : C_ij != 0} under
// the relation C_jk != 0. Edges at different ends of i never share a vertex.
std::vector<std::vector<EdgeId>> sides_of(const IntMatrix& c, EdgeId i) {
  const int n = c.size();
  std::vector<EdgeId> near;
  for (EdgeId j = 1; j <= n; ++j) {
    if (j != i && c(i, j) != 0) near.push_back(j);
  }
  std::vector<std::vector<EdgeId>> sides;
  std::set<EdgeId> seen;
  for (EdgeId j : near) {
    if (seen.count(j)) continue;
    std::vector<EdgeId> side;
    for (EdgeId k : near) {
      if (k == j || c(j, k) != 0) {
        side.push_back(k);
        seen.insert(k);
      }
    }
    sides.push_back(std::move(side));
  }
  if (sides.size() > 2) inconsistent("edge " + std::to_string(i) + " has more than two sides");
  for (const auto& s : sides) {
    for (EdgeId a : s)
      for (EdgeId b : s)
        if (a != b && c(a, b) == 0) inconsistent("side of edge " + std::to_string(i) + " is not a clique");
  }
  for (std::size_t a = 0; a < sides.size(); ++a)
    for (std::size_t b = a + 1; b < sides.size(); ++b)
      for (EdgeId x : sides[a])
        for (EdgeId y : sides[b])
          if (c(x, y) != 0) inconsistent("sides of edge " + std::to_string(i) + " are not separated");
  return sides;
}

// Cyclic order (i, i^1, ..., i^a) obtained by chaining Ext-successors.
std::vector<EdgeId> chain_cycle(const IntMatrix& x, EdgeId i, const std::vector<EdgeId>& side) {
  std::vector<EdgeId> members = side;
  members.push_back(i);
  std::vector<EdgeId> cycle{i};
  EdgeId cur = i;
  for (std::size_t step = 0; step < members.size(); ++step) {
    std::optional<EdgeId> next;
    for (EdgeId cand : members) {
      if (cand == cur || x(cur, cand) == 0) continue;
      if (next) inconsistent("edge " + std::to_string(cur) + " has two successors");
      next = cand;
    }
    if (!next) inconsistent("edge " + std::to_string(cur) + " has no successor");
    if (*next == i) break;
    if (std::find(cycle.begin(), cycle.end(), *next) != cycle.end()) inconsistent("successor chain does not close");
    cycle.push_back(*next);
    cur = *next;
  }
  if (cycle.size() != members.size()) inconsistent("successor chain misses edges");
  if (x(cycle.back(), i) == 0) inconsistent("successor chain does not return");
  return cycle;
}

std::vector<EdgeId> rotated_to_min(std::vector<EdgeId> c) {
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  return c;
}

}  // namespace

BrauerTree reconstruct(const IntMatrix& c, const IntMatrix& x) {
  const int n = c.size();
  if (n < 1) inconsistent("empty matrix");
  if (x.size() != n) inconsistent("Cartan and Ext sizes differ");
  if (!c.symmetric()) inconsistent("Cartan matrix is not symmetric");
  for (EdgeId i = 1; i <= n; ++i) {
    for (EdgeId j = 1; j <= n; ++j) {
      if (x(i, j) != 0 && x(i, j) != 1) inconsistent("Ext entries must be 0 or 1");
      if (c(i, j) < 0) inconsistent("negative Cartan entry");
    }
  }

  std::vector<Vertex> vertices;
  auto fresh_id = [&]() { return "v" + std::to_string(vertices.size()); };

  if (n == 1) {
    if (c(1, 1) < 2) inconsistent("diagonal Cartan entry below 2");
    vertices.push_back({fresh_id(), c(1, 1) - 1, {1}});
    vertices.push_back({fresh_id(), 1, {1}});
  } else {
    std::map<std::set<EdgeId>, VertexIndex> by_edges;
    std::vector<std::vector<VertexIndex>> ends(static_cast<std::size_t>(n) + 1);
    std::vector<std::pair<EdgeId, VertexIndex>> leaves;

    for (EdgeId i = 1; i <= n; ++i) {
      const auto sides = sides_of(c, i);
      if (sides.empty()) inconsistent("edge " + std::to_string(i) + " is isolated");
      for (const auto& side : sides) {
        auto cycle = chain_cycle(x, i, side);
        const std::set<EdgeId> key(cycle.begin(), cycle.end());
        auto it = by_edges.find(key);
        if (it == by_edges.end()) {
          int mult = c(cycle[0], cycle[1]);
          for (EdgeId a : cycle)
            for (EdgeId b : cycle)
              if (a != b && c(a, b) != mult) inconsistent("multiplicities disagree around a vertex");
          it = by_edges.emplace(key, vertices.size()).first;
          vertices.push_back({fresh_id(), mult, std::move(cycle)});
        } else if (rotated_to_min(vertices[it->second].cyclic) != rotated_to_min(cycle)) {
          inconsistent("cyclic orders disagree at a shared vertex");
        }
        ends[i].push_back(it->second);
      }
      if (sides.size() == 1) {
        leaves.emplace_back(i, vertices.size());
        vertices.push_back({fresh_id(), 1, {i}});
      }
    }
    for (const auto& [edge, leaf] : leaves) {
      const int other = vertices[ends[edge].front()].multiplicity;
      const int m = c(edge, edge) - other;
      if (m < 1) inconsistent("leaf multiplicity of edge " + std::to_string(edge) + " is not positive");
      vertices[leaf].multiplicity = m;
    }
  }

  auto result = BrauerTree::validate(vertices);
  if (!result.ok()) inconsistent(std::string("rebuilt data is not a Brauer tree (") + to_string(result.issues.front().kind) + ")");
  BrauerTree t = std::move(*result.tree);
  if (cartan_formula(t) != c) inconsistent("rebuilt tree does not reproduce the Cartan matrix");
  if (ext_formula(t) != x) inconsistent("rebuilt tree does not reproduce the Ext data");
  return t;
}

}  // namespace brauer
