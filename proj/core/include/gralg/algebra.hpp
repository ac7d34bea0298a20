#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gralg/graded.hpp"
#include "gralg/linalg.hpp"

namespace gralg {

/// Basis names per degree; empty when the algebra carries no labels.
using BasisLabels = std::vector<std::vector<std::string>>;

/// A = (V, μ) restricted to positive degrees; μ ∘ μ = 0 holds for every
/// constructed value.
class GradedAlgebra {
 public:
  const Field& field() const noexcept { return mu_.field(); }
  const GradedVectorSpace& space() const noexcept { return mu_.space(); }
  std::size_t q() const noexcept { return space().q(); }
  std::size_t dim(std::size_t degree) const noexcept { return space().dim(degree); }
  const MultilinearOp& mu() const noexcept { return mu_; }
  const BasisLabels& labels() const noexcept { return labels_; }

  /// μ restricted to A_i ⊗ A_j; a d_{i+j} x (d_i d_j) matrix.
  Matrix product_block(std::size_t i, std::size_t j) const;
  /// μ(a, b) for a ∈ A_i, b ∈ A_j; the zero vector of length 0 if i + j > q.
  Vector multiply(std::size_t i, const Vector& a, std::size_t j, const Vector& b) const;
  /// span μ(U ⊗ W) ⊆ A_{i+j}.
  Subspace product_space(std::size_t i, const Subspace& u, std::size_t j, const Subspace& w) const;

  friend bool operator==(const GradedAlgebra& a, const GradedAlgebra& b) {
    return a.mu_ == b.mu_ && a.labels_ == b.labels_;
  }

 private:
  friend GradedAlgebra new_algebra(const MultilinearOp& mu, BasisLabels labels);
  GradedAlgebra(MultilinearOp mu, BasisLabels labels)
      : mu_(std::move(mu)), labels_(std::move(labels)) {}

  MultilinearOp mu_;
  BasisLabels labels_;
};

/// Accepts μ iff μ ∘ μ = 0; otherwise throws NotAssociative with the first
/// violating basis triple (in composition and column order).
GradedAlgebra new_algebra(const MultilinearOp& mu, BasisLabels labels = {});

/// One subspace of A_i per degree i (index i - 1).
using GradedSubspace = std::vector<Subspace>;

GradedSubspace zero_graded(const GradedAlgebra& a);
/// A_{≥k}.
GradedSubspace tail(const GradedAlgebra& a, std::size_t k);
bool graded_contains(const GradedSubspace& outer, const GradedSubspace& inner);
GradedSubspace graded_sum(const GradedSubspace& u, const GradedSubspace& w);
bool graded_is_zero(const GradedSubspace& u);
std::vector<std::size_t> graded_dims(const GradedSubspace& u);
/// μ(A_j ⊗ U_i) ⊆ U_{i+j} and μ(U_i ⊗ A_j) ⊆ U_{i+j} for all i, j.
bool is_two_sided_ideal(const GradedAlgebra& a, const GradedSubspace& u);

/// A two-sided graded ideal of a specific algebra.
class GradedIdeal {
 public:
  GradedIdeal(std::shared_ptr<const GradedAlgebra> algebra, GradedSubspace pieces);

  const GradedAlgebra& algebra() const noexcept { return *algebra_; }
  const std::shared_ptr<const GradedAlgebra>& algebra_ptr() const noexcept { return algebra_; }
  const GradedSubspace& pieces() const noexcept { return pieces_; }
  const Subspace& piece(std::size_t degree) const { return pieces_.at(degree - 1); }
  std::vector<std::size_t> dims() const { return graded_dims(pieces_); }
  bool is_zero() const { return graded_is_zero(pieces_); }

  friend bool operator==(const GradedIdeal& a, const GradedIdeal& b) {
    return *a.algebra_ == *b.algebra_ && a.pieces_ == b.pieces_;
  }

 private:
  std::shared_ptr<const GradedAlgebra> algebra_;
  GradedSubspace pieces_;
};

/// Truncated commutative polynomial algebra on n_vars degree-1 variables;
/// monomials of each degree in lexicographic order (x² , xy, y² for two
/// variables).
GradedAlgebra polynomial_algebra(std::size_t n_vars, std::size_t q, Field field);

/// k<x, y>/(yx − λxy) truncated at q, basis x^a y^b with a descending.
GradedAlgebra skew_plane(const Scalar& lambda, std::size_t q);

/// Truncated free associative algebra; basis words in lexicographic order.
GradedAlgebra free_algebra(std::size_t n_gens, std::size_t q, Field field);

struct HomogeneousElement {
  std::size_t degree = 0;
  Vector coords;
};

/// A / (relations). The complement basis in each degree consists of the
/// ambient basis elements that are not leading (pivot) columns of the
/// ideal's reduced echelon basis.
GradedAlgebra quotient(const GradedAlgebra& a, const std::vector<HomogeneousElement>& relations);

/// Smallest two-sided ideal containing the generator subspaces.
GradedIdeal ideal_generated_by(const GradedAlgebra& a,
                               const std::map<std::size_t, Subspace>& generators);
GradedIdeal ideal_generated_by(const std::shared_ptr<const GradedAlgebra>& a,
                               const GradedSubspace& generators);

/// Σ_{a+b=n} μ(I_a ⊗ J_b), closed to a two-sided ideal.
GradedIdeal ideal_product(const GradedIdeal& i, const GradedIdeal& j);

GradedAlgebra truncate(const GradedAlgebra& a, std::size_t q);

bool is_generated_in_degree_one(const GradedAlgebra& a);

/// The largest two-sided ideal with zero degree-q piece.
GradedIdeal top_vanishing_ideal(const GradedAlgebra& a);
/// True iff some nonzero ideal vanishes in degree q.
bool has_top_vanishing_ideal(const GradedAlgebra& a);

}  // namespace gralg
