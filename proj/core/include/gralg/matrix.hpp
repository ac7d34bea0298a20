#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "gralg/field.hpp"

namespace gralg {

using Vector = std::vector<Scalar>;

Vector zero_vector(Field field, std::size_t n);
bool is_zero(const Vector& v);

/// Sparse matrix over a single field. Zero entries are never stored.
class Matrix {
 public:
  using Index = std::pair<std::size_t, std::size_t>;
  using Entries = std::map<Index, Scalar>;

  explicit Matrix(Field field = Field::rational(), std::size_t rows = 0, std::size_t cols = 0)
      : field_(field), rows_(rows), cols_(cols) {}

  static Matrix identity(Field field, std::size_t n);
  /// Dense construction from integer literals, mostly for tests and fixtures.
  static Matrix from_ints(Field field, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }
  const Entries& entries() const noexcept { return entries_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void add_to(std::size_t r, std::size_t c, const Scalar& v);

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> dense_rows() const;

  Matrix transpose() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Vector apply(const Vector& v) const;

  /// Rows of a stacked on top of rows of b.
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix hstack(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  void check_index(std::size_t r, std::size_t c) const;

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  Entries entries_;
};

/// Kronecker product; the left factor indexes the most significant digit.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace gralg
