#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "brauer/cartan.hpp"
#include "brauer/linalg.hpp"
#include "brauer/tree.hpp"

namespace brauer {

// Sorted (basis index, nonzero coefficient) pairs.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

// A basis element b lies in the corner e_left * A * e_right.
struct BasisLabel {
  EdgeId left = 0;
  EdgeId right = 0;
  std::string name;
};

/// Finite-dimensional basic algebra over Q given by structure constants on a
/// basis adapted to a complete set of primitive orthogonal idempotents
/// e_1..e_n, each of which is itself a basis element.
class StructureAlgebra {
 public:
  StructureAlgebra() = default;
  StructureAlgebra(int idempotent_count, std::vector<BasisLabel> basis,
                   std::vector<std::size_t> idempotents);

  [[nodiscard]] std::size_t dimension() const { return basis_.size(); }
  [[nodiscard]] int idempotent_count() const { return idempotent_count_; }
  [[nodiscard]] const BasisLabel& label(std::size_t b) const { return basis_.at(b); }
  [[nodiscard]] const std::vector<BasisLabel>& basis() const { return basis_; }
  [[nodiscard]] std::size_t idempotent(EdgeId i) const { return idempotents_.at(static_cast<std::size_t>(i - 1)); }

  void set_product(std::size_t a, std::size_t b, SparseVector value);
  [[nodiscard]] const SparseVector& product(std::size_t a, std::size_t b) const {
    return table_[a * basis_.size() + b];
  }

  [[nodiscard]] Vector unit_vector(std::size_t b) const;
  // Bilinear extension of the table.
  [[nodiscard]] Vector multiply(const Vector& x, const Vector& y) const;

  // Indices of basis elements in e_left * A * e_right.
  [[nodiscard]] std::vector<std::size_t> corner(EdgeId left, EdgeId right) const;

  // Empty when the table is associative, the idempotents are orthogonal and
  // sum to the unit, and every product respects the corner labels.
  [[nodiscard]] std::vector<std::string> structure_errors() const;

 private:
  int idempotent_count_ = 0;
  std::vector<BasisLabel> basis_;
  std::vector<std::size_t> idempotents_;
  std::vector<SparseVector> table_;
};

// Basis elements of a Brauer tree algebra. A walk Step(i, v, t) starts at
// edge i and turns t times clockwise around the endpoint v; it lies in
// e_i * A * e_{sigma_v^t(i)}.
struct BasisElement {
  enum class Kind { Idempotent, Step, Socle };
  Kind kind = Kind::Idempotent;
  EdgeId edge = 0;
  VertexIndex vertex = 0;  // Step only
  int steps = 0;           // Step only

  bool operator==(const BasisElement&) const = default;
};

struct TreeAlgebra {
  BrauerTree tree;
  StructureAlgebra algebra;
  std::vector<BasisElement> elements;  // parallel to algebra.basis()

  [[nodiscard]] std::size_t index_of(const BasisElement& b) const;
  [[nodiscard]] EdgeId target(const BasisElement& b) const;
};

[[nodiscard]] TreeAlgebra build_algebra(const BrauerTree& t);

// Entry (i, j) = dim Hom(P_i, P_j) = dim e_j * A * e_i.
[[nodiscard]] IntMatrix cartan_count(const StructureAlgebra& a);

// Jacobson radical as the kernel of the trace form (x, y) -> Tr(L_{xy}).
[[nodiscard]] Subspace radical(const StructureAlgebra& a);

// Entry (l, m) = dim e_l * (rad / rad^2) * e_m = dim Ext^1(S_l, S_m).
[[nodiscard]] IntMatrix quiver(const StructureAlgebra& a);

// The local algebra e_i * A * e_i.
[[nodiscard]] StructureAlgebra corner_algebra(const StructureAlgebra& a, EdgeId i);

}  // namespace brauer
