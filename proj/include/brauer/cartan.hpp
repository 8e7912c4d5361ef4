#pragma once

#include <ostream>
#include <vector>

#include "brauer/tree.hpp"

namespace brauer {

// Square integer matrix indexed by edge labels 1..n.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n)
      : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

  static IntMatrix from_rows(const std::vector<std::vector<int>>& rows);

  [[nodiscard]] int size() const { return n_; }
  int& operator()(EdgeId i, EdgeId j) { return data_.at(index(i, j)); }
  int operator()(EdgeId i, EdgeId j) const { return data_.at(index(i, j)); }

  [[nodiscard]] std::vector<std::vector<int>> rows() const;
  [[nodiscard]] bool symmetric() const;
  bool operator==(const IntMatrix&) const = default;

 private:
  [[nodiscard]] std::size_t index(EdgeId i, EdgeId j) const;
  int n_ = 0;
  std::vector<int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// C_ii = m_u + m_v for the ends u, v of i; C_ij = m_v for a shared vertex v.
[[nodiscard]] IntMatrix cartan_formula(const BrauerTree& t);

// Arrow counts of the quiver read off the ribbon structure: i -> j whenever
// j follows i at a vertex of valency >= 2, plus a loop at i for an
// exceptional leaf end, plus the socle loop of the single-edge tree.
[[nodiscard]] IntMatrix ext_formula(const BrauerTree& t);

// Rebuilds the Brauer tree from its Cartan matrix and Ext-quiver. Vertex ids
// of the output are v0, v1, ... in discovery order. Throws BrauerError
// ("Inconsistent: ...") when the data does not come from a Brauer tree.
[[nodiscard]] BrauerTree reconstruct(const IntMatrix& cartan, const IntMatrix& ext);

}  // namespace brauer
