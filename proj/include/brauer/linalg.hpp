#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace brauer {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void set_column(std::size_t c, const Vector& v);
  [[nodiscard]] Vector column(std::size_t c) const;
  [[nodiscard]] Vector apply(const Vector& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

[[nodiscard]] bool is_zero(const Vector& v);

// A linear subspace of Q^ambient, stored as a basis in reduced row echelon
// form. Pivot columns are strictly increasing, so two equal subspaces always
// have identical bases.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  // {x : m x = 0}
  static Subspace kernel(const Matrix& m);
  // Image of `m` restricted to the given subspace (or the whole domain).
  static Subspace image(const Matrix& m);

  [[nodiscard]] std::size_t ambient() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Vector>& basis() const { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Remainder of v after elimination against the echelon basis; zero iff v
  // lies in the subspace.
  [[nodiscard]] Vector reduce(const Vector& v) const;
  [[nodiscard]] bool contains(const Vector& v) const { return is_zero(reduce(v)); }
  [[nodiscard]] bool contains(const Subspace& other) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

// Expresses vectors in terms of a fixed list of linearly independent vectors.
class CoordinateSolver {
 public:
  CoordinateSolver() = default;
  CoordinateSolver(std::size_t ambient, std::vector<Vector> generators);

  [[nodiscard]] std::size_t size() const { return generators_.size(); }
  [[nodiscard]] const std::vector<Vector>& generators() const { return generators_; }

  // Coefficients c with sum c_k g_k = v, or nullopt when v is outside the span.
  [[nodiscard]] std::optional<Vector> solve(const Vector& v) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> generators_;
  // echelon_[k] = sum_j transform_[k][j] * generators_[j]
  std::vector<Vector> echelon_;
  std::vector<Vector> transform_;
  std::vector<std::size_t> pivots_;
};

}  // namespace brauer
