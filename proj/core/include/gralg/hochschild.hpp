#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gralg/algebra.hpp"
#include "gralg/errors.hpp"
#include "gralg/graded.hpp"

namespace gralg {

/// Twisted Hochschild differential d^μ: L^p -> L^{p+1}, evaluated from
///   (d^μα)(a_0..a_{p+1}) = α(a_0..a_p)a_{p+1} + (−1)^p a_0 α(a_1..a_{p+1})
///                          − (−1)^p Σ_i (−1)^i α(.., a_i a_{i+1}, ..).
/// Agrees with bracket(μ, α).
MultilinearOp differential(const GradedAlgebra& a, const MultilinearOp& alpha);

/// All coordinates of a p-cochain: coordinates(1), then coordinates(2), ...
Vector flat_coordinates(const MultilinearOp& alpha);
MultilinearOp from_flat_coordinates(Field field, const GradedVectorSpace& space, std::size_t p,
                                    const Vector& coords);
/// Offset of internal degree n inside flat_coordinates, for n = 1..q+1.
std::size_t flat_offset(const GradedVectorSpace& space, std::size_t p, std::size_t n);

/// Matrix of d^μ: L^p -> L^{p+1} in flat coordinates. The product terms raise
/// the target degree, so the matrix is block lower triangular in n rather
/// than block diagonal.
Matrix differential_matrix(const GradedAlgebra& a, std::size_t p);

/// Block of differential_matrix from internal degree n_in to n_out.
Matrix differential_block(const GradedAlgebra& a, std::size_t p, std::size_t n_out, std::size_t n_in);

struct CochainComplexSlice {
  std::size_t p_max = 0;
  std::vector<Matrix> maps;  // maps[p] = d_p, p = 0..p_max
};

CochainComplexSlice cochain_complex(const GradedAlgebra& a, std::size_t p_max);

/// The per-degree numbers refer to the filtration F_n = cochains vanishing
/// below internal degree n, which d^μ preserves. dim_by_internal_degree[n-1]
/// counts classes whose lowest nonzero degree is n; they add up to dim.
struct CohomologyGroup {
  std::size_t p = 0;  // H^p(L, d^μ) = HH^{p+1}_gr
  std::size_t dim = 0;
  std::size_t cochain_dim = 0;
  std::size_t rank = 0;  // rank of d_p
  std::vector<std::size_t> dim_by_internal_degree;  // index n - 1
  std::vector<std::size_t> cochain_dim_by_internal_degree;
  std::vector<MultilinearOp> representatives;  // ordered by lowest degree
};

struct CohomologyReport {
  Field field = Field::rational();
  std::size_t p_max = 0;
  std::vector<CohomologyGroup> groups;  // groups[p]

  std::vector<std::size_t> dims() const;
};

constexpr std::size_t default_p_max = 3;

/// Graded Hochschild cohomology for 0 ≤ p ≤ p_max. Representatives for
/// lowest degree n extend (ker d_p ∩ F_{n+1}) + im d_{p-1} greedily along the
/// reduced echelon basis of ker d_p ∩ F_n.
CohomologyReport cohomology(const GradedAlgebra& a, std::size_t p_max = default_p_max);

/// First basis triple on which the cocycle identity fails, if any.
std::optional<WitnessTriple> cocycle_violation(const GradedAlgebra& a, const MultilinearOp& alpha);
bool is_cocycle(const GradedAlgebra& a, const MultilinearOp& alpha);

/// α(a,b)c − α(a,bc) + α(ab,c) − aα(b,c) evaluated directly on basis triples.
/// Returned as an element of L^2; zero iff the first-order product is
/// associative modulo ε².
MultilinearOp cocycle_defect(const GradedAlgebra& a, const MultilinearOp& alpha);

/// a ∗ b = ab + ε α(a, b) on V ⊕ εV.
struct FirstOrderDeformation {
  MultilinearOp mu;
  MultilinearOp alpha;
  bool associative_mod_eps2 = false;
};

/// Throws NotCocycle with the violated triple unless α is a 2-cocycle.
FirstOrderDeformation deform(const GradedAlgebra& a, const MultilinearOp& alpha);

/// α − α' ∈ d^μ(L^0).
bool deformations_equivalent(const GradedAlgebra& a, const MultilinearOp& alpha,
                             const MultilinearOp& alpha_prime);

struct PrimaryObstruction {
  MultilinearOp representative;  // α ∘ α ∈ L^2
  bool closed = false;           // d^μ(α∘α) = 0
  bool exact = false;            // α∘α ∈ d^μ(L^1)
  bool vanishes_in_cohomology = false;
};

PrimaryObstruction primary_obstruction(const GradedAlgebra& a, const MultilinearOp& alpha);

/// Whether a (p+1)-cochain lies in d^μ(L^p).
bool in_image(const GradedAlgebra& a, std::size_t p, const MultilinearOp& beta);

/// Restriction of a cochain on V to V_{≤q}: blocks with target degree ≤ q.
MultilinearOp restrict_cochain(const MultilinearOp& alpha, const GradedVectorSpace& truncated);

struct TruncationComparison {
  std::size_t q = 0;
  std::size_t q_truncated = 0;
  bool chain_map = false;              // π ∘ d = d' ∘ π on every basis cochain
  bool low_blocks_identical = false;   // blocks of d_p between degrees ≤ q' agree
  CohomologyReport full;
  CohomologyReport truncated;
};

TruncationComparison compare_truncations(const GradedAlgebra& a, std::size_t q_truncated,
                                         std::size_t p_max = default_p_max);

}  // namespace gralg
