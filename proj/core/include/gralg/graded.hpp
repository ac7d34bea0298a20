#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "gralg/field.hpp"
#include "gralg/linalg.hpp"
#include "gralg/matrix.hpp"

namespace gralg {

/// Positively graded vector space V = V_1 ⊕ ... ⊕ V_q truncated at degree q.
/// Degree zero is implicit and never stored.
class GradedVectorSpace {
 public:
  GradedVectorSpace() = default;
  explicit GradedVectorSpace(std::vector<std::size_t> dims) : dims_(std::move(dims)) {}

  /// Truncation bound q.
  std::size_t q() const noexcept { return dims_.size(); }
  /// dim V_degree; zero outside 1..q.
  std::size_t dim(std::size_t degree) const noexcept {
    return degree >= 1 && degree <= dims_.size() ? dims_[degree - 1] : 0;
  }
  std::size_t total_dim() const noexcept;
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }

  GradedVectorSpace truncate(std::size_t q) const;

  friend bool operator==(const GradedVectorSpace&, const GradedVectorSpace&) = default;

 private:
  std::vector<std::size_t> dims_;
};

/// Ordered tuple (n_0, ..., n_p) of positive degrees naming the tensor block
/// V_{n_0} ⊗ ... ⊗ V_{n_p} -> V_{n_0 + ... + n_p}.
using DegreeComposition = std::vector<std::size_t>;

std::size_t target_degree(const DegreeComposition& c);

/// All compositions of n into `parts` positive parts, lexicographic order.
std::vector<DegreeComposition> compositions_of(std::size_t n, std::size_t parts);

/// All compositions with `parts` parts and target degree ≤ q, ordered by
/// target degree then lexicographically.
std::vector<DegreeComposition> compositions_up_to(std::size_t q, std::size_t parts);

/// Mixed-radix indexing of a tensor basis; the leftmost factor is the most
/// significant digit.
class TensorShape {
 public:
  TensorShape(const GradedVectorSpace& space, const DegreeComposition& c);
  explicit TensorShape(std::vector<std::size_t> radices) : radices_(std::move(radices)) {}

  std::size_t size() const noexcept;
  std::size_t encode(const std::vector<std::size_t>& digits) const;
  std::vector<std::size_t> decode(std::size_t index) const;

 private:
  std::vector<std::size_t> radices_;
};

/// dim L^p = Σ over compositions with p+1 parts of (∏ d_{n_i}) · d_{Σ n_i}.
std::size_t dim_L(const GradedVectorSpace& space, std::size_t p);
/// The internal-degree-n summand of L^p.
std::size_t dim_L(const GradedVectorSpace& space, std::size_t p, std::size_t n);

/// A degree-preserving (p+1)-ary operation on V, i.e. an element of L^p.
/// Stored blockwise: one sparse d_{Σ n_i} x ∏ d_{n_i} matrix per composition.
class MultilinearOp {
 public:
  MultilinearOp(Field field, GradedVectorSpace space, std::size_t arity_index);

  const Field& field() const noexcept { return field_; }
  const GradedVectorSpace& space() const noexcept { return space_; }
  /// p, where the operation takes p + 1 arguments.
  std::size_t arity_index() const noexcept { return p_; }
  std::size_t arity() const noexcept { return p_ + 1; }

  const std::map<DegreeComposition, Matrix>& blocks() const noexcept { return blocks_; }
  bool is_zero() const noexcept { return blocks_.empty(); }

  /// Zero matrix of the right shape when the block is not stored.
  Matrix block(const DegreeComposition& c) const;
  void set_block(const DegreeComposition& c, Matrix m);

  Scalar entry(const DegreeComposition& c, std::size_t row, std::size_t col) const;
  void set_entry(const DegreeComposition& c, std::size_t row, std::size_t col, const Scalar& v);
  void add_entry(const DegreeComposition& c, std::size_t row, std::size_t col, const Scalar& v);

  /// Flattened coordinates of the internal-degree-n summand: compositions of
  /// n in lexicographic order, each block row-major.
  Vector coordinates(std::size_t n) const;
  void set_coordinates(std::size_t n, const Vector& coords);
  /// The summand of internal degree n only.
  MultilinearOp component(std::size_t n) const;

  MultilinearOp& operator+=(const MultilinearOp& o);
  MultilinearOp& operator-=(const MultilinearOp& o);
  MultilinearOp& operator*=(const Scalar& s);
  friend MultilinearOp operator+(MultilinearOp a, const MultilinearOp& b) { return a += b; }
  friend MultilinearOp operator-(MultilinearOp a, const MultilinearOp& b) { return a -= b; }
  friend MultilinearOp operator*(MultilinearOp a, const Scalar& s) { return a *= s; }
  MultilinearOp operator-() const;

  friend bool operator==(const MultilinearOp&, const MultilinearOp&);

 private:
  void check_block(const DegreeComposition& c) const;
  void require_compatible(const MultilinearOp& o) const;

  Field field_;
  GradedVectorSpace space_;
  std::size_t p_;
  std::map<DegreeComposition, Matrix> blocks_;
};

/// Gerstenhaber circle product:
/// (μ∘ν)(a_0..a_{p+q}) = Σ_i (−1)^{iq} μ(a_0, .., ν(a_i..a_{i+q}), .., a_{p+q}).
MultilinearOp circle(const MultilinearOp& mu, const MultilinearOp& nu);

/// [μ, ν] = μ∘ν − (−1)^{pq} ν∘μ.
MultilinearOp bracket(const MultilinearOp& mu, const MultilinearOp& nu);

struct TautologicalGamma {
  MultilinearOp op;
  /// Set over GF(p) with p ≤ q: distinct degrees coincide modulo p.
  bool degrees_collapse = false;
};

/// γ acting as multiplication by i on V_i.
TautologicalGamma tautological_gamma(Field field, const GradedVectorSpace& space);

/// g = (g_1, ..., g_q) in ∏ GL(V_i).
class GaugeElement {
 public:
  /// Throws InvalidArgument when a component is not square of the right size
  /// or not invertible.
  GaugeElement(Field field, GradedVectorSpace space, std::vector<Matrix> components);

  static GaugeElement identity(Field field, const GradedVectorSpace& space);
  /// Γ(t) = (t, t², ..., t^q).
  static GaugeElement tautological(Field field, const GradedVectorSpace& space, const Scalar& t);

  const Field& field() const noexcept { return field_; }
  const GradedVectorSpace& space() const noexcept { return space_; }
  const Matrix& component(std::size_t degree) const { return components_.at(degree - 1); }
  const Matrix& inverse_component(std::size_t degree) const { return inverses_.at(degree - 1); }

  friend GaugeElement operator*(const GaugeElement& g, const GaugeElement& h);

 private:
  Field field_;
  GradedVectorSpace space_;
  std::vector<Matrix> components_;
  std::vector<Matrix> inverses_;
};

/// (g∗φ)_c = g_{Σc} ∘ φ_c ∘ (g_{c_0}^{-1} ⊗ ... ⊗ g_{c_p}^{-1}).
MultilinearOp gauge_act(const GaugeElement& g, const MultilinearOp& phi);

}  // namespace gralg
