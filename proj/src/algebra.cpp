#include "brauer/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace brauer {

StructureAlgebra::StructureAlgebra(int idempotent_count, std::vector<BasisLabel> basis,
                                   std::vector<std::size_t> idempotents)
    : idempotent_count_(idempotent_count),
      basis_(std::move(basis)),
      idempotents_(std::move(idempotents)),
      table_(basis_.size() * basis_.size()) {
  if (idempotents_.size() != static_cast<std::size_t>(idempotent_count_)) {
    throw BrauerError("one idempotent per label is required");
  }
  for (int i = 1; i <= idempotent_count_; ++i) {
    const auto& l = basis_.at(idempotent(i));
    if (l.left != i || l.right != i) throw BrauerError("idempotent outside its diagonal corner");
  }
}

void StructureAlgebra::set_product(std::size_t a, std::size_t b, SparseVector value) {
  std::erase_if(value, [](const auto& entry) { return sgn(entry.second) == 0; });
  std::sort(value.begin(), value.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  table_.at(a * basis_.size() + b) = std::move(value);
}

Vector StructureAlgebra::unit_vector(std::size_t b) const {
  Vector v(dimension());
  v.at(b) = 1;
  return v;
}

Vector StructureAlgebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t d = dimension();
  Vector out(d);
  for (std::size_t a = 0; a < d; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (std::size_t b = 0; b < d; ++b) {
      if (sgn(y[b]) == 0) continue;
      const auto& p = product(a, b);
      if (p.empty()) continue;
      const Rational f = x[a] * y[b];
      for (const auto& [c, coeff] : p) out[c] += f * coeff;
    }
  }
  return out;
}

std::vector<std::size_t> StructureAlgebra::corner(EdgeId left, EdgeId right) const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    if (basis_[b].left == left && basis_[b].right == right) out.push_back(b);
  }
  return out;
}

std::vector<std::string> StructureAlgebra::structure_errors() const {
  std::vector<std::string> errors;
  const std::size_t d = dimension();
  auto name = [&](std::size_t b) { return basis_[b].name; };

  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      for (const auto& [c, coeff] : product(a, b)) {
        if (basis_[a].right != basis_[b].left || basis_[c].left != basis_[a].left ||
            basis_[c].right != basis_[b].right) {
          errors.push_back("product " + name(a) + "*" + name(b) + " leaves its corner");
        }
      }
    }
  }

  for (std::size_t b = 0; b < d; ++b) {
    for (int i = 1; i <= idempotent_count_; ++i) {
      const auto e = idempotent(i);
      const SparseVector self{{b, Rational(1)}};
      const SparseVector& left = product(e, b);
      const SparseVector& right = product(b, e);
      if (left != (basis_[b].left == i ? self : SparseVector{})) errors.push_back("e_" + std::to_string(i) + " acts wrongly on the left of " + name(b));
      if (right != (basis_[b].right == i ? self : SparseVector{})) errors.push_back("e_" + std::to_string(i) + " acts wrongly on the right of " + name(b));
    }
  }

  // (ab)c = a(bc) on basis triples.
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const auto& ab = product(a, b);
      for (std::size_t c = 0; c < d; ++c) {
        std::map<std::size_t, Rational> lhs;
        std::map<std::size_t, Rational> rhs;
        for (const auto& [k, x] : ab)
          for (const auto& [l, y] : product(k, c)) lhs[l] += x * y;
        for (const auto& [k, x] : product(b, c))
          for (const auto& [l, y] : product(a, k)) rhs[l] += x * y;
        std::erase_if(lhs, [](const auto& e) { return sgn(e.second) == 0; });
        std::erase_if(rhs, [](const auto& e) { return sgn(e.second) == 0; });
        if (lhs != rhs) {
          errors.push_back("associativity fails on " + name(a) + "," + name(b) + "," + name(c));
          if (errors.size() > 20) return errors;
        }
      }
    }
  }
  return errors;
}

std::size_t TreeAlgebra::index_of(const BasisElement& b) const {
  const auto it = std::find(elements.begin(), elements.end(), b);
  if (it == elements.end()) throw BrauerError("not a basis element of this algebra");
  return static_cast<std::size_t>(it - elements.begin());
}

EdgeId TreeAlgebra::target(const BasisElement& b) const {
  if (b.kind == BasisElement::Kind::Step) return tree.rotate(b.vertex, b.edge, b.steps);
  return b.edge;
}

namespace {

std::string element_name(const BrauerTree& t, const BasisElement& b) {
  std::ostringstream os;
  switch (b.kind) {
    case BasisElement::Kind::Idempotent: os << "e" << b.edge; break;
    case BasisElement::Kind::Step: os << "w(" << b.edge << "," << t.vertex(b.vertex).id << "," << b.steps << ")"; break;
    case BasisElement::Kind::Socle: os << "soc" << b.edge; break;
  }
  return os.str();
}

// Full walk length around v: m_v * val(v).
int walk_length(const BrauerTree& t, VertexIndex v) {
  return t.multiplicity(v) * static_cast<int>(t.valency(v));
}

}  // namespace

TreeAlgebra build_algebra(const BrauerTree& t) {
  const int n = t.edge_count();
  std::vector<BasisElement> elements;
  for (EdgeId i = 1; i <= n; ++i) elements.push_back({BasisElement::Kind::Idempotent, i, 0, 0});
  for (EdgeId i = 1; i <= n; ++i) {
    auto ends = t.ends(i);
    std::sort(ends.begin(), ends.end());
    for (VertexIndex v : ends) {
      for (int s = 1; s < walk_length(t, v); ++s) elements.push_back({BasisElement::Kind::Step, i, v, s});
    }
  }
  for (EdgeId i = 1; i <= n; ++i) elements.push_back({BasisElement::Kind::Socle, i, 0, 0});

  TreeAlgebra out{t, {}, elements};
  std::vector<BasisLabel> labels;
  std::vector<std::size_t> idempotents;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const auto& b = elements[k];
    labels.push_back({b.edge, out.target(b), element_name(t, b)});
    if (b.kind == BasisElement::Kind::Idempotent) idempotents.push_back(k);
  }
  out.algebra = StructureAlgebra(n, std::move(labels), std::move(idempotents));

  std::map<std::tuple<EdgeId, VertexIndex, int>, std::size_t> step_index;
  std::vector<std::size_t> socle_index(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const auto& b = elements[k];
    if (b.kind == BasisElement::Kind::Step) step_index[{b.edge, b.vertex, b.steps}] = k;
    if (b.kind == BasisElement::Kind::Socle) socle_index[b.edge] = k;
  }

  using Kind = BasisElement::Kind;
  for (std::size_t a = 0; a < elements.size(); ++a) {
    const auto& x = elements[a];
    const auto& lx = out.algebra.label(a);
    for (std::size_t b = 0; b < elements.size(); ++b) {
      const auto& y = elements[b];
      const auto& ly = out.algebra.label(b);
      if (lx.right != ly.left) continue;
      if (x.kind == Kind::Idempotent) {
        out.algebra.set_product(a, b, {{b, Rational(1)}});
      } else if (y.kind == Kind::Idempotent) {
        out.algebra.set_product(a, b, {{a, Rational(1)}});
      } else if (x.kind == Kind::Step && y.kind == Kind::Step && x.vertex == y.vertex) {
        const int total = x.steps + y.steps;
        const int full = walk_length(t, x.vertex);
        if (total < full) {
          out.algebra.set_product(a, b, {{step_index.at({x.edge, x.vertex, total}), Rational(1)}});
        } else if (total == full) {
          out.algebra.set_product(a, b, {{socle_index[x.edge], Rational(1)}});
        }
      }
    }
  }
  return out;
}

IntMatrix cartan_count(const StructureAlgebra& a) {
  const int n = a.idempotent_count();
  IntMatrix c(n);
  for (const auto& l : a.basis()) c(l.right, l.left) += 1;
  return c;
}

namespace {

// Radical intersected with each corner; key (left, right).
std::map<std::pair<EdgeId, EdgeId>, std::vector<Vector>> radical_by_corner(const StructureAlgebra& a) {
  const std::size_t d = a.dimension();
  const int n = a.idempotent_count();

  // trace[c] = Tr(L_{b_c})
  std::vector<Rational> trace(d);
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t k = 0; k < d; ++k) {
      for (const auto& [idx, coeff] : a.product(c, k)) {
        if (idx == k) trace[c] += coeff;
      }
    }
  }
  auto form = [&](std::size_t x, std::size_t y) {
    Rational s = 0;
    for (const auto& [c, coeff] : a.product(x, y)) s += coeff * trace[c];
    return s;
  };

  // The form pairs corner (l, r) only with corner (r, l).
  std::map<std::pair<EdgeId, EdgeId>, std::vector<Vector>> out;
  for (EdgeId l = 1; l <= n; ++l) {
    for (EdgeId r = 1; r <= n; ++r) {
      const auto cols = a.corner(l, r);
      const auto rows = a.corner(r, l);
      Matrix m(rows.size(), cols.size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = form(cols[j], rows[i]);
      const auto ker = Subspace::kernel(m);
      auto& bucket = out[{l, r}];
      for (const auto& v : ker.basis()) {
        Vector full(d);
        for (std::size_t j = 0; j < cols.size(); ++j) full[cols[j]] = v[j];
        bucket.push_back(std::move(full));
      }
    }
  }
  return out;
}

}  // namespace

Subspace radical(const StructureAlgebra& a) {
  std::vector<Vector> all;
  for (auto& [key, vs] : radical_by_corner(a)) {
    for (auto& v : vs) all.push_back(std::move(v));
  }
  return Subspace::span(a.dimension(), all);
}

IntMatrix quiver(const StructureAlgebra& a) {
  const int n = a.idempotent_count();
  const auto rad = radical_by_corner(a);
  IntMatrix q(n);
  for (EdgeId l = 1; l <= n; ++l) {
    for (EdgeId m = 1; m <= n; ++m) {
      std::vector<Vector> squares;
      for (EdgeId k = 1; k <= n; ++k) {
        for (const auto& x : rad.at({l, k}))
          for (const auto& y : rad.at({k, m})) squares.push_back(a.multiply(x, y));
      }
      const auto sq = Subspace::span(a.dimension(), squares);
      q(l, m) = static_cast<int>(rad.at({l, m}).size() - sq.dim());
    }
  }
  return q;
}

StructureAlgebra corner_algebra(const StructureAlgebra& a, EdgeId i) {
  const auto idx = a.corner(i, i);
  std::map<std::size_t, std::size_t> local;
  std::vector<BasisLabel> labels;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    local[idx[k]] = k;
    labels.push_back({1, 1, a.label(idx[k]).name});
  }
  StructureAlgebra out(1, std::move(labels), {local.at(a.idempotent(i))});
  for (std::size_t x = 0; x < idx.size(); ++x) {
    for (std::size_t y = 0; y < idx.size(); ++y) {
      SparseVector p;
      for (const auto& [c, coeff] : a.product(idx[x], idx[y])) p.emplace_back(local.at(c), coeff);
      out.set_product(x, y, std::move(p));
    }
  }
  return out;
}

}  // namespace brauer
