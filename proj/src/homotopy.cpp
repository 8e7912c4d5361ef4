#include "brauer/homotopy.hpp"

#include <algorithm>
#include <map>

namespace brauer {

namespace {

Vector zero_element(const StructureAlgebra& a) { return Vector(a.dimension()); }

ElementMatrix zero_matrix(const StructureAlgebra& a, std::size_t rows, std::size_t cols) {
  return ElementMatrix(rows, std::vector<Vector>(cols, zero_element(a)));
}

ElementMatrix subtract(ElementMatrix x, const ElementMatrix& y) {
  for (std::size_t r = 0; r < x.size(); ++r)
    for (std::size_t c = 0; c < x[r].size(); ++c)
      for (std::size_t k = 0; k < x[r][c].size(); ++k) x[r][c][k] -= y[r][c][k];
  return x;
}

Vector concat(const Vector& x, const Vector& y) {
  Vector out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

// Matrix whose columns are the images of the basis vectors of `domain`.
template <typename F>
Matrix operator_matrix(std::size_t domain, std::size_t codomain, F&& image_of_basis) {
  Matrix m(codomain, domain);
  for (std::size_t k = 0; k < domain; ++k) m.set_column(k, image_of_basis(k));
  return m;
}

}  // namespace

MapSpace::MapSpace(const StructureAlgebra& a, std::vector<EdgeId> source, std::vector<EdgeId> target)
    : algebra_(&a), source_(std::move(source)), target_(std::move(target)) {
  for (std::size_t r = 0; r < target_.size(); ++r) {
    for (std::size_t c = 0; c < source_.size(); ++c) {
      for (std::size_t b : a.corner(target_[r], source_[c])) coords_.push_back({r, c, b});
    }
  }
}

ElementMatrix MapSpace::to_matrix(const Vector& coords) const {
  auto m = zero_matrix(*algebra_, target_.size(), source_.size());
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (sgn(coords[k]) == 0) continue;
    m[coords_[k].row][coords_[k].col][coords_[k].basis] += coords[k];
  }
  return m;
}

ElementMatrix MapSpace::basis_matrix(std::size_t k) const {
  Vector e(dim());
  e[k] = 1;
  return to_matrix(e);
}

Vector MapSpace::to_coords(const ElementMatrix& m) const {
  Vector out(dim());
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> where;
  for (std::size_t k = 0; k < coords_.size(); ++k) where[{coords_[k].row, coords_[k].col, coords_[k].basis}] = k;
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m[r].size(); ++c) {
      for (std::size_t b = 0; b < m[r][c].size(); ++b) {
        if (sgn(m[r][c][b]) == 0) continue;
        const auto it = where.find({r, c, b});
        if (it == where.end()) throw BrauerError("map entry outside its Hom space");
        out[it->second] = m[r][c][b];
      }
    }
  }
  return out;
}

ElementMatrix compose(const StructureAlgebra& a, const ElementMatrix& outer, const ElementMatrix& inner) {
  const std::size_t rows = outer.size();
  const std::size_t mid = inner.size();
  const std::size_t cols = mid == 0 ? 0 : inner[0].size();
  if (rows > 0 && outer[0].size() != mid) throw BrauerError("matrix shapes do not compose");
  auto out = zero_matrix(a, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t k = 0; k < mid; ++k) {
        if (is_zero(outer[r][k]) || is_zero(inner[k][c])) continue;
        const auto p = a.multiply(outer[r][k], inner[k][c]);
        for (std::size_t b = 0; b < p.size(); ++b) out[r][c][b] += p[b];
      }
  return out;
}

namespace {

// Empty-shape aware composition: an operator sum over an empty middle sum is
// the zero matrix of the outer shape.
ElementMatrix compose_shaped(const StructureAlgebra& a, const ElementMatrix& outer,
                             const ElementMatrix& inner, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) return zero_matrix(a, rows, cols);
  if (inner.empty()) return zero_matrix(a, rows, cols);
  return compose(a, outer, inner);
}

struct Spaces {
  Subspace chain;
  Subspace null;
  std::vector<MapSpace> parts;
};

Spaces compute_spaces(const StructureAlgebra& a, const TwoTermComplex& c1, const TwoTermComplex& c2, int shift) {
  const auto& d1 = c1.differential;
  const auto& d2 = c2.differential;
  Spaces s;
  switch (shift) {
    case 0: {
      MapSpace h0(a, c1.degree0, c2.degree0);
      MapSpace h1(a, c1.degree1, c2.degree1);
      MapSpace cond(a, c1.degree0, c2.degree1);
      const std::size_t amb = h0.dim() + h1.dim();
      // d2 f0 - f1 d1 = 0
      auto condition = operator_matrix(amb, cond.dim(), [&](std::size_t k) {
        if (k < h0.dim()) {
          return cond.to_coords(compose_shaped(a, d2, h0.basis_matrix(k), c2.degree1.size(), c1.degree0.size()));
        }
        const auto f1 = h1.basis_matrix(k - h0.dim());
        auto neg = compose_shaped(a, f1, d1, c2.degree1.size(), c1.degree0.size());
        return cond.to_coords(subtract(zero_matrix(a, c2.degree1.size(), c1.degree0.size()), neg));
      });
      s.chain = Subspace::kernel(condition);
      // h: C1^1 -> C2^0 gives (h d1, d2 h)
      MapSpace hs(a, c1.degree1, c2.degree0);
      auto homotopies = operator_matrix(hs.dim(), amb, [&](std::size_t k) {
        const auto h = hs.basis_matrix(k);
        return concat(h0.to_coords(compose_shaped(a, h, d1, c2.degree0.size(), c1.degree0.size())),
                      h1.to_coords(compose_shaped(a, d2, h, c2.degree1.size(), c1.degree1.size())));
      });
      s.null = Subspace::image(homotopies);
      s.parts = {std::move(h0), std::move(h1)};
      break;
    }
    case 1: {
      MapSpace f(a, c1.degree0, c2.degree1);
      s.chain = Subspace::kernel(Matrix(0, f.dim()));
      MapSpace h0(a, c1.degree0, c2.degree0);
      MapSpace h1(a, c1.degree1, c2.degree1);
      // d2 h0 - h1 d1
      auto homotopies = operator_matrix(h0.dim() + h1.dim(), f.dim(), [&](std::size_t k) {
        if (k < h0.dim()) {
          return f.to_coords(compose_shaped(a, d2, h0.basis_matrix(k), c2.degree1.size(), c1.degree0.size()));
        }
        auto neg = compose_shaped(a, h1.basis_matrix(k - h0.dim()), d1, c2.degree1.size(), c1.degree0.size());
        return f.to_coords(subtract(zero_matrix(a, c2.degree1.size(), c1.degree0.size()), neg));
      });
      s.null = Subspace::image(homotopies);
      s.parts = {std::move(f)};
      break;
    }
    case -1: {
      MapSpace f(a, c1.degree1, c2.degree0);
      MapSpace left(a, c1.degree1, c2.degree1);
      MapSpace right(a, c1.degree0, c2.degree0);
      // d2 f = 0 and f d1 = 0
      auto condition = operator_matrix(f.dim(), left.dim() + right.dim(), [&](std::size_t k) {
        const auto m = f.basis_matrix(k);
        return concat(left.to_coords(compose_shaped(a, d2, m, c2.degree1.size(), c1.degree1.size())),
                      right.to_coords(compose_shaped(a, m, d1, c2.degree0.size(), c1.degree0.size())));
      });
      s.chain = Subspace::kernel(condition);
      s.null = Subspace(f.dim());
      s.parts = {std::move(f)};
      break;
    }
    default:
      throw BrauerError("two-term complexes only have Homs in shifts -1, 0, 1");
  }
  return s;
}

}  // namespace

HomClassSpace::HomClassSpace(const StructureAlgebra& a, const TwoTermComplex& source,
                             const TwoTermComplex& target, int shift, const std::vector<Vector>& seeds)
    : shift_(shift) {
  auto s = compute_spaces(a, source, target, shift);
  chain_maps_ = std::move(s.chain);
  null_homotopic_ = std::move(s.null);
  parts_ = std::move(s.parts);
  if (!chain_maps_.contains(null_homotopic_)) throw BrauerError("null-homotopic maps are not chain maps");

  // Extend the null-homotopic echelon basis: seeds first, then the chain-map
  // echelon basis in order.
  std::vector<Vector> generators = null_homotopic_.basis();
  Subspace current = null_homotopic_;
  auto try_add = [&](const Vector& v) {
    if (current.contains(v)) return;
    representatives_.push_back(v);
    generators.push_back(v);
    current = Subspace::span(chain_maps_.ambient(), generators);
  };
  for (const auto& v : seeds) {
    if (!chain_maps_.contains(v)) throw BrauerError("seed is not a chain map");
    try_add(v);
  }
  for (const auto& v : chain_maps_.basis()) try_add(v);
  solver_ = CoordinateSolver(chain_maps_.ambient(), std::move(generators));
}

Vector HomClassSpace::class_coordinates(const Vector& chain_map) const {
  const auto coeffs = solver_.solve(chain_map);
  if (!coeffs) throw BrauerError("NotClosed: vector is not a chain map");
  const std::size_t skip = null_homotopic_.dim();
  return Vector(coeffs->begin() + static_cast<long>(skip), coeffs->end());
}

std::pair<ElementMatrix, ElementMatrix> HomClassSpace::components(const Vector& v) const {
  if (shift_ != 0) throw BrauerError("components are only defined for degree-0 maps");
  const auto n0 = parts_[0].dim();
  Vector x(v.begin(), v.begin() + static_cast<long>(n0));
  Vector y(v.begin() + static_cast<long>(n0), v.end());
  return {parts_[0].to_matrix(x), parts_[1].to_matrix(y)};
}

Vector HomClassSpace::from_components(const ElementMatrix& f0, const ElementMatrix& f1) const {
  if (shift_ != 0) throw BrauerError("components are only defined for degree-0 maps");
  return concat(parts_[0].to_coords(f0), parts_[1].to_coords(f1));
}

Subspace chain_map_space(const StructureAlgebra& a, const TwoTermComplex& c1, const TwoTermComplex& c2, int shift) {
  return compute_spaces(a, c1, c2, shift).chain;
}

Subspace homotopy_trivial_space(const StructureAlgebra& a, const TwoTermComplex& c1, const TwoTermComplex& c2,
                                int shift) {
  return compute_spaces(a, c1, c2, shift).null;
}

std::size_t hom_class_dim(const StructureAlgebra& a, const TwoTermComplex& c1, const TwoTermComplex& c2, int shift) {
  const auto s = compute_spaces(a, c1, c2, shift);
  return s.chain.dim() - s.null.dim();
}

Vector identity_chain_map(const StructureAlgebra& a, const TwoTermComplex& c) {
  auto diag = [&](const std::vector<EdgeId>& summands) {
    auto m = zero_matrix(a, summands.size(), summands.size());
    for (std::size_t k = 0; k < summands.size(); ++k) m[k][k][a.idempotent(summands[k])] = 1;
    return m;
  };
  return concat(MapSpace(a, c.degree0, c.degree0).to_coords(diag(c.degree0)),
                MapSpace(a, c.degree1, c.degree1).to_coords(diag(c.degree1)));
}

std::vector<TwoTermComplex> or_complex(const StructureAlgebra& a, const std::set<EdgeId>& e0) {
  const int n = a.idempotent_count();
  const std::size_t d = a.dimension();
  const auto rad = radical(a);
  std::vector<TwoTermComplex> out;

  for (EdgeId i = 1; i <= n; ++i) {
    if (e0.count(i)) {
      out.push_back({{i}, {}, {}});
      continue;
    }
    // N = e_i A e A
    std::vector<Vector> gens;
    for (EdgeId j : e0) {
      for (std::size_t x : a.corner(i, j)) {
        gens.push_back(a.unit_vector(x));
        for (std::size_t y = 0; y < d; ++y) {
          const auto& p = a.product(x, y);
          if (p.empty()) continue;
          Vector v(d);
          for (const auto& [k, coeff] : p) v[k] = coeff;
          gens.push_back(std::move(v));
        }
      }
    }
    const auto n_space = Subspace::span(d, gens);
    std::vector<Vector> n_rad;
    for (const auto& v : n_space.basis())
      for (const auto& r : rad.basis()) n_rad.push_back(a.multiply(v, r));

    TwoTermComplex c;
    c.degree1 = {i};
    std::vector<Vector> top;
    for (EdgeId j = 1; j <= n; ++j) {
      const auto cols = a.corner(i, j);
      auto project = [&](const Vector& v) {
        Vector p(d);
        for (std::size_t x : cols) p[x] = v[x];
        return p;
      };
      std::vector<Vector> n_j;
      for (const auto& v : n_space.basis()) n_j.push_back(project(v));
      std::vector<Vector> span = {};
      for (const auto& v : n_rad) span.push_back(project(v));
      Subspace current = Subspace::span(d, span);
      const auto n_j_space = Subspace::span(d, n_j);
      for (const auto& v : n_j_space.basis()) {
        if (current.contains(v)) continue;
        c.degree0.push_back(j);
        top.push_back(v);
        span.push_back(v);
        current = Subspace::span(d, span);
      }
    }
    c.differential = {top};
    out.push_back(std::move(c));
  }
  return out;
}

StructureAlgebra endomorphism_algebra(const StructureAlgebra& a, const std::vector<TwoTermComplex>& summands) {
  const int n = static_cast<int>(summands.size());
  // spaces[{src, dst}] for 1-based summand labels
  std::map<std::pair<EdgeId, EdgeId>, HomClassSpace> spaces;
  for (EdgeId src = 1; src <= n; ++src) {
    for (EdgeId dst = 1; dst <= n; ++dst) {
      std::vector<Vector> seeds;
      if (src == dst) seeds.push_back(identity_chain_map(a, summands[src - 1]));
      spaces.emplace(std::make_pair(src, dst),
                     HomClassSpace(a, summands[src - 1], summands[dst - 1], 0, seeds));
    }
  }

  struct Entry {
    EdgeId src;
    EdgeId dst;
    std::size_t rep;
  };
  std::vector<Entry> entries;
  std::vector<BasisLabel> labels;
  std::vector<std::size_t> idempotents(static_cast<std::size_t>(n));
  std::map<std::tuple<EdgeId, EdgeId, std::size_t>, std::size_t> index;
  for (EdgeId dst = 1; dst <= n; ++dst) {
    for (EdgeId src = 1; src <= n; ++src) {
      const auto& space = spaces.at({src, dst});
      for (std::size_t k = 0; k < space.class_dim(); ++k) {
        index[{src, dst, k}] = entries.size();
        if (src == dst && k == 0) idempotents[static_cast<std::size_t>(src - 1)] = entries.size();
        entries.push_back({src, dst, k});
        labels.push_back({dst, src, "T" + std::to_string(src) + "->T" + std::to_string(dst) + "#" + std::to_string(k)});
      }
    }
  }

  StructureAlgebra b(n, std::move(labels), std::move(idempotents));
  for (std::size_t x = 0; x < entries.size(); ++x) {
    for (std::size_t y = 0; y < entries.size(); ++y) {
      const auto& ex = entries[x];  // T_b -> T_c
      const auto& ey = entries[y];  // T_a -> T_b
      if (ex.src != ey.dst) continue;
      const auto& sx = spaces.at({ex.src, ex.dst});
      const auto& sy = spaces.at({ey.src, ey.dst});
      const auto& target = spaces.at({ey.src, ex.dst});
      const auto [x0, x1] = sx.components(sx.representatives()[ex.rep]);
      const auto [y0, y1] = sy.components(sy.representatives()[ey.rep]);
      const auto& cs = summands[ey.src - 1];
      const auto& ct = summands[ex.dst - 1];
      const auto f0 = compose_shaped(a, x0, y0, ct.degree0.size(), cs.degree0.size());
      const auto f1 = compose_shaped(a, x1, y1, ct.degree1.size(), cs.degree1.size());
      const auto coords = target.class_coordinates(target.from_components(f0, f1));
      SparseVector p;
      for (std::size_t k = 0; k < coords.size(); ++k) {
        if (sgn(coords[k]) != 0) p.emplace_back(index.at({ey.src, ex.dst, k}), coords[k]);
      }
      b.set_product(x, y, std::move(p));
    }
  }
  return b;
}

TiltingReport tilting_report(const StructureAlgebra& a, const std::vector<TwoTermComplex>& summands) {
  if (summands.empty()) return tilting_report(a, summands, StructureAlgebra{});
  return tilting_report(a, summands, endomorphism_algebra(a, summands));
}

TiltingReport tilting_report(const StructureAlgebra& a, const std::vector<TwoTermComplex>& summands,
                             const StructureAlgebra& end) {
  TiltingReport r;
  const int n = a.idempotent_count();
  if (static_cast<int>(summands.size()) != n) {
    r.summand_count = false;
    r.failures.push_back("expected " + std::to_string(n) + " summands, got " + std::to_string(summands.size()));
  }
  for (std::size_t s = 0; s < summands.size(); ++s) {
    for (std::size_t t = 0; t < summands.size(); ++t) {
      for (int k : {-1, 1}) {
        const auto dim = hom_class_dim(a, summands[s], summands[t], k);
        if (dim != 0) {
          r.hom_vanishing = false;
          r.failures.push_back("Hom(T" + std::to_string(s + 1) + ", T" + std::to_string(t + 1) + "[" +
                               std::to_string(k) + "]) has dimension " + std::to_string(dim));
        }
      }
    }
  }
  if (!summands.empty()) {
    for (EdgeId i = 1; i <= static_cast<int>(summands.size()); ++i) {
      const auto local = corner_algebra(end, i);
      const auto codim = local.dimension() - radical(local).dim();
      if (codim != 1) {
        r.indecomposable = false;
        r.failures.push_back("End(T" + std::to_string(i) + ") is not local (radical codimension " +
                             std::to_string(codim) + ")");
      }
    }
  }
  return r;
}

IntMatrix cartan_mutation_formula(const BrauerTree& t, EdgeId i) {
  if (!t.has_edge(i)) throw BrauerError("unknown edge " + std::to_string(i));
  const auto c = cartan_formula(t);
  const int n = t.edge_count();
  std::vector<EdgeId> succ;
  for (VertexIndex v : t.ends(i)) {
    if (t.valency(v) >= 2) succ.push_back(t.successor(v, i));
  }
  IntMatrix b = c;
  for (EdgeId l = 1; l <= n; ++l) {
    if (l == i) continue;
    int value = -c(i, l);
    for (EdgeId x : succ) value += c(x, l);
    b(i, l) = value;
    b(l, i) = value;
  }
  int diag = c(i, i);
  for (std::size_t p = 0; p < succ.size(); ++p) {
    diag += c(succ[p], succ[p]) - 2 * c(i, succ[p]);
    for (std::size_t q = p + 1; q < succ.size(); ++q) diag += 2 * c(succ[p], succ[q]);
  }
  b(i, i) = diag;
  return b;
}

}  // namespace brauer
