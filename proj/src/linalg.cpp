#include "brauer/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace brauer {

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw std::invalid_argument("column size mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector size mismatch");
  Vector y(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(x[c]) == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (sgn(a) != 0) y[r] += a * x[c];
    }
  }
  return y;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

namespace {

// In-place reduced row echelon form of a list of rows. Returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vector>& rows, std::size_t width) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && sgn(rows[sel][col]) == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    Vector& p = rows[rank];
    const Rational inv = 1 / p[col];
    for (std::size_t c = col; c < width; ++c) {
      if (sgn(p[c]) != 0) p[c] *= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][col]) == 0) continue;
      const Rational f = rows[r][col];
      for (std::size_t c = col; c < width; ++c) {
        if (sgn(p[c]) != 0) rows[r][c] -= f * p[c];
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

}  // namespace

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s(ambient);
  std::vector<Vector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw std::invalid_argument("vector size mismatch");
    if (!is_zero(v)) rows.push_back(v);
  }
  s.pivots_ = rref(rows, ambient);
  s.basis_ = std::move(rows);
  return s;
}

Subspace Subspace::kernel(const Matrix& m) {
  std::vector<Vector> rows(m.rows(), Vector(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  const auto pivots = rref(rows, m.cols());

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> null_vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rows[k][free];
    null_vectors.push_back(std::move(v));
  }
  return span(m.cols(), null_vectors);
}

Subspace Subspace::image(const Matrix& m) {
  std::vector<Vector> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return span(m.rows(), cols);
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector size mismatch");
  Vector r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Rational f = r[pivots_[k]];
    if (sgn(f) == 0) continue;
    const Vector& b = basis_[k];
    for (std::size_t c = pivots_[k]; c < ambient_; ++c) {
      if (sgn(b[c]) != 0) r[c] -= f * b[c];
    }
  }
  return r;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vector& v) { return contains(v); });
}

CoordinateSolver::CoordinateSolver(std::size_t ambient, std::vector<Vector> generators)
    : ambient_(ambient), generators_(std::move(generators)) {
  const std::size_t g = generators_.size();
  echelon_ = generators_;
  transform_.assign(g, Vector(g));
  for (std::size_t k = 0; k < g; ++k) transform_[k][k] = 1;

  std::size_t rank = 0;
  for (std::size_t col = 0; col < ambient_ && rank < g; ++col) {
    std::size_t sel = rank;
    while (sel < g && sgn(echelon_[sel][col]) == 0) ++sel;
    if (sel == g) continue;
    std::swap(echelon_[rank], echelon_[sel]);
    std::swap(transform_[rank], transform_[sel]);
    const Rational inv = 1 / echelon_[rank][col];
    for (auto& x : echelon_[rank]) x *= inv;
    for (auto& x : transform_[rank]) x *= inv;
    for (std::size_t r = 0; r < g; ++r) {
      if (r == rank || sgn(echelon_[r][col]) == 0) continue;
      const Rational f = echelon_[r][col];
      for (std::size_t c = 0; c < ambient_; ++c) echelon_[r][c] -= f * echelon_[rank][c];
      for (std::size_t c = 0; c < g; ++c) transform_[r][c] -= f * transform_[rank][c];
    }
    pivots_.push_back(col);
    ++rank;
  }
  if (rank != g) throw std::invalid_argument("generators are linearly dependent");
}

std::optional<Vector> CoordinateSolver::solve(const Vector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector size mismatch");
  Vector rest = v;
  Vector coeffs(generators_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Rational f = rest[pivots_[k]];
    if (sgn(f) == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (sgn(echelon_[k][c]) != 0) rest[c] -= f * echelon_[k][c];
    }
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (sgn(transform_[k][j]) != 0) coeffs[j] += f * transform_[k][j];
    }
  }
  if (!is_zero(rest)) return std::nullopt;
  return coeffs;
}

}  // namespace brauer
