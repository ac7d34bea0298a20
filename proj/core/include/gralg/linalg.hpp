#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "gralg/field.hpp"
#include "gralg/matrix.hpp"

namespace gralg {

/// Reduced row echelon form of a matrix together with its pivot columns.
struct Echelon {
  Matrix rref;                      // only the nonzero rows
  std::vector<std::size_t> pivots;  // strictly increasing
};

/// Exact rank. Over Q this runs fraction-free Bareiss elimination on an
/// integer-scaled copy; over GF(p) plain elimination.
std::size_t rank(const Matrix& m);

/// Determinant of a square matrix (Bareiss over Q).
Scalar determinant(const Matrix& m);

/// Reduced row echelon form via sparse elimination.
Echelon row_reduce(const Matrix& m);

Matrix inverse(const Matrix& m);

class Subspace;

/// Null space {v : m v = 0} as a canonical subspace of F^cols.
Subspace kernel_basis(const Matrix& m);

/// A linear subspace of F^n, stored by its unique reduced echelon basis so
/// that equality of subspaces is equality of representations.
class Subspace {
 public:
  explicit Subspace(Field field = Field::rational(), std::size_t ambient_dim = 0);

  static Subspace zero(Field field, std::size_t n) { return Subspace(field, n); }
  static Subspace full(Field field, std::size_t n);
  static Subspace span(Field field, std::size_t n, const std::vector<Vector>& vectors);
  /// Row space of m.
  static Subspace row_space(const Matrix& m);
  /// Coordinate subspace spanned by the listed standard basis vectors.
  static Subspace coordinate(Field field, std::size_t n, const std::vector<std::size_t>& axes);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim(); }

  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::vector<Vector> basis_vectors() const { return basis_.dense_rows(); }

  /// Normal form of v modulo the subspace: zero at every pivot column.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& w) const;

  /// Image under a linear map F^ambient -> F^m.rows.
  Subspace image(const Matrix& m) const;
  /// Linear functionals vanishing on the subspace, as a subspace of F^n.
  Subspace annihilator() const;

  friend bool operator==(const Subspace&, const Subspace&);
  /// Total order consistent with enumerate_subspaces: dimension, pivot set,
  /// then entries.
  friend bool operator<(const Subspace&, const Subspace&);

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  friend Subspace kernel_basis(const Matrix&);
  friend Subspace subspace_sum(const Subspace&, const Subspace&);

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace subspace_intersect(const Subspace& u, const Subspace& w);
/// dim(u / w); requires w ⊆ u.
std::size_t quotient_dim(const Subspace& u, const Subspace& w);

/// Every dim-dimensional subspace of GF(p)^ambient_dim exactly once.
/// Order: pivot sets in lexicographic order, then free entries as base-p
/// digits read row by row, left to right. Throws Unsupported over Q.
std::vector<Subspace> enumerate_subspaces(std::size_t ambient_dim, std::size_t dim, Field field);

/// Streaming variant; the callback returns false to stop early.
void for_each_subspace(std::size_t ambient_dim, std::size_t dim, Field field,
                       const std::function<bool(const Subspace&)>& visit);

}  // namespace gralg
