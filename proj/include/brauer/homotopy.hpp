#pragma once

#include <set>
#include <string>
#include <vector>

#include "brauer/algebra.hpp"
#include "brauer/linalg.hpp"

namespace brauer {

// Matrix of algebra elements (dense coordinate vectors); entry (row, col) is
// a map from the col-th summand of the source to the row-th summand of the
// target, acting by left multiplication.
using ElementMatrix = std::vector<std::vector<Vector>>;

/// Complex of projectives P^0 -> P^1 concentrated in degrees 0 and 1.
/// Summands are named by edge labels: an entry j stands for P_j = e_j A.
struct TwoTermComplex {
  std::vector<EdgeId> degree0;
  std::vector<EdgeId> degree1;
  ElementMatrix differential;  // degree1.size() x degree0.size()

  [[nodiscard]] bool is_stalk() const { return degree0.empty() || degree1.empty(); }
};

// One complex per edge 1..n: stalks P_i for i in E0, and the minimal
// projective presentation Q_i -> P_i of e_i A / e_i A e A otherwise, where e
// is the sum of the idempotents in E0.
[[nodiscard]] std::vector<TwoTermComplex> or_complex(const StructureAlgebra& a,
                                                     const std::set<EdgeId>& e0);

// Coordinates for matrices of maps between two direct sums of projectives.
class MapSpace {
 public:
  MapSpace(const StructureAlgebra& a, std::vector<EdgeId> source, std::vector<EdgeId> target);

  [[nodiscard]] std::size_t dim() const { return coords_.size(); }
  [[nodiscard]] ElementMatrix to_matrix(const Vector& coords) const;
  [[nodiscard]] ElementMatrix basis_matrix(std::size_t k) const;
  [[nodiscard]] Vector to_coords(const ElementMatrix& m) const;

 private:
  struct Coord {
    std::size_t row;
    std::size_t col;
    std::size_t basis;
  };
  const StructureAlgebra* algebra_;
  std::vector<EdgeId> source_;
  std::vector<EdgeId> target_;
  std::vector<Coord> coords_;
};

[[nodiscard]] ElementMatrix compose(const StructureAlgebra& a, const ElementMatrix& outer,
                                    const ElementMatrix& inner);

/// Degree-k maps from `source` to `target[k]` modulo null-homotopic maps,
/// with k in {-1, 0, 1}. Ambient coordinates are the component maps in
/// increasing source degree.
class HomClassSpace {
 public:
  HomClassSpace(const StructureAlgebra& a, const TwoTermComplex& source,
                const TwoTermComplex& target, int shift, const std::vector<Vector>& seeds = {});

  [[nodiscard]] int shift() const { return shift_; }
  [[nodiscard]] const Subspace& chain_maps() const { return chain_maps_; }
  [[nodiscard]] const Subspace& null_homotopic() const { return null_homotopic_; }
  [[nodiscard]] const std::vector<Vector>& representatives() const { return representatives_; }
  [[nodiscard]] std::size_t class_dim() const { return representatives_.size(); }

  // Coefficients on the representatives of the class of a chain map.
  [[nodiscard]] Vector class_coordinates(const Vector& chain_map) const;

  // Degree-0 only: component matrices of an ambient vector and back.
  [[nodiscard]] std::pair<ElementMatrix, ElementMatrix> components(const Vector& v) const;
  [[nodiscard]] Vector from_components(const ElementMatrix& f0, const ElementMatrix& f1) const;

 private:
  int shift_;
  std::vector<MapSpace> parts_;
  Subspace chain_maps_;
  Subspace null_homotopic_;
  std::vector<Vector> representatives_;
  CoordinateSolver solver_;
};

[[nodiscard]] Subspace chain_map_space(const StructureAlgebra& a, const TwoTermComplex& c1,
                                       const TwoTermComplex& c2, int shift);
[[nodiscard]] Subspace homotopy_trivial_space(const StructureAlgebra& a, const TwoTermComplex& c1,
                                              const TwoTermComplex& c2, int shift);
[[nodiscard]] std::size_t hom_class_dim(const StructureAlgebra& a, const TwoTermComplex& c1,
                                        const TwoTermComplex& c2, int shift);

// Ambient coordinates of the identity chain map of c.
[[nodiscard]] Vector identity_chain_map(const StructureAlgebra& a, const TwoTermComplex& c);

/// End of the direct sum of the complexes in the homotopy category. Summand k
/// is labelled by edge k + 1; the basis element names record the pair of
/// summands, and multiplication is composition (x * y = x after y).
[[nodiscard]] StructureAlgebra endomorphism_algebra(const StructureAlgebra& a,
                                                    const std::vector<TwoTermComplex>& summands);

struct TiltingReport {
  bool hom_vanishing = true;
  bool indecomposable = true;
  bool summand_count = true;
  std::vector<std::string> failures;
  // Generation of K^b(proj A) is not checked.
  static constexpr const char* kScope = "checked: Hom(T,T[k]) = 0 for k = +-1, summands indecomposable, summand count; not checked: generation";

  [[nodiscard]] bool passed() const { return hom_vanishing && indecomposable && summand_count; }
};

[[nodiscard]] TiltingReport tilting_report(const StructureAlgebra& a,
                                           const std::vector<TwoTermComplex>& summands);
// Same, reusing an already computed endomorphism_algebra(a, summands).
[[nodiscard]] TiltingReport tilting_report(const StructureAlgebra& a,
                                           const std::vector<TwoTermComplex>& summands,
                                           const StructureAlgebra& end);

// Closed-form Cartan matrix of End(T(E \ {i})) from the Cartan matrix of A_G:
// unchanged away from i, C_il -> sum_x C_xl - C_il over the successors x of i,
// and C_ii -> dim of the square of that alternating sum.
[[nodiscard]] IntMatrix cartan_mutation_formula(const BrauerTree& t, EdgeId i);

}  // namespace brauer
