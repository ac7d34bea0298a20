#include <doctest.h>

#include "support.hpp"

using namespace gralg;
using namespace gralg::testing;

namespace {

const Field Q = Field::rational();
const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);

// α on ℚ[x]/(x⁴) = span{x, x², x³} given by its three possible entries.
MultilinearOp x4_cochain(long a11, long a12, long a21) {
  MultilinearOp alpha(Q, GradedVectorSpace({1, 1, 1}), 1);
  alpha.set_entry({1, 1}, 0, 0, Scalar(Q, a11));
  alpha.set_entry({1, 2}, 0, 0, Scalar(Q, a12));
  alpha.set_entry({2, 1}, 0, 0, Scalar(Q, a21));
  return alpha;
}

std::vector<GradedAlgebra> sample_algebras(Rng& rng, const Field& f, int count, std::size_t max_q,
                                           std::size_t max_d) {
  std::vector<GradedAlgebra> out;
  for (int t = 0; t < count; ++t) out.push_back(random_associative(f, random_space(rng, max_q, max_d), rng));
  return out;
}

}  // namespace

TEST_CASE("differential examples") {
  Rng rng(1);
  for (const auto& a : sample_algebras(rng, Q, 10, 4, 2))
    CHECK(differential(a, tautological_gamma(Q, a.space()).op).is_zero());

  const auto x3 = polynomial_algebra(1, 2, Q);
  const auto d0 = differential_matrix(x3, 0);
  CHECK(rank(d0) == 1);
  CHECK(d0.cols() == 2);
  CHECK(d0.rows() == 1);
  // β on V_1 alone already reaches the (1,1) block: d is not block diagonal.
  CHECK(d0 == Matrix::from_ints(Q, {{2, -1}}));
  CHECK(kernel_basis(d0) == Subspace::span(Q, 2, {{Scalar(Q, 1), Scalar(Q, 2)}}));
  CHECK(differential_block(x3, 0, 2, 1) == Matrix::from_ints(Q, {{2}}));
  MultilinearOp beta(Q, x3.space(), 0);
  beta.set_entry({1}, 0, 0, Scalar(Q, 1));
  beta.set_entry({2}, 0, 0, Scalar(Q, 2));
  CHECK(differential(x3, beta).is_zero());
  MultilinearOp beta1(Q, x3.space(), 0);
  beta1.set_entry({1}, 0, 0, Scalar(Q, 1));
  // (dβ)(x, x) = (2β_1 − β_2) x² with β = (1, 0).
  CHECK(differential(x3, beta1).entry({1, 1}, 0, 0) == Scalar(Q, 2));

  const auto zero = zero_algebra(Q, {2, 1, 2});
  for (std::size_t p = 0; p <= 2; ++p) CHECK(differential(zero, random_op(Q, zero.space(), p, rng)).is_zero());
}

TEST_CASE("cohomology fixtures") {
  const auto x3 = polynomial_algebra(1, 2, Q);
  const auto r = cohomology(x3, 2);
  CHECK(r.dims() == std::vector<std::size_t>{1, 0, 0});
  REQUIRE(r.groups[0].representatives.size() == 1);
  const auto& rep = r.groups[0].representatives[0];
  CHECK(differential(x3, rep).is_zero());
  CHECK(rep == tautological_gamma(Q, x3.space()).op);
  CHECK(r.groups[0].dim_by_internal_degree == std::vector<std::size_t>{1, 0});

  const auto zero = zero_algebra(Q, {1, 1});
  const auto z = cohomology(zero, 2);
  CHECK(z.groups[1].dim == 1);
  CHECK(z.groups[1].dim == dim_L(zero.space(), 1));
  CHECK(z.groups[0].dim == 2);
}

TEST_CASE("cocycle examples") {
  Rng rng(2);
  const auto p2 = polynomial_algebra(2, 2, Q);
  for (int t = 0; t < 10; ++t) CHECK(is_cocycle(p2, random_op(Q, p2.space(), 1, rng)));
  const auto x4 = polynomial_algebra(1, 3, Q);
  for (int t = 0; t < 10; ++t) CHECK(is_cocycle(x4, differential(x4, random_op(Q, x4.space(), 0, rng))));
  const auto bad = x4_cochain(1, 0, 1);
  CHECK_FALSE(is_cocycle(x4, bad));
  const auto w = cocycle_violation(x4, bad);
  REQUIRE(w);
  const WitnessTriple xxx{BasisRef{1, 1}, BasisRef{1, 1}, BasisRef{1, 1}};
  CHECK(*w == xxx);
  CHECK_FALSE(cocycle_defect(x4, bad).is_zero());
  CHECK_THROWS_AS(deform(x4, bad), NotCocycle);
}

TEST_CASE("first-order deformations") {
  const auto p2 = polynomial_algebra(2, 2, Q);
  const auto trivial = deform(p2, MultilinearOp(Q, p2.space(), 1));
  CHECK(trivial.alpha.is_zero());
  CHECK(trivial.associative_mod_eps2);

  // α(x, y) = xy, everything else zero: a first-order skew deformation.
  MultilinearOp skew(Q, p2.space(), 1);
  skew.set_entry({1, 1}, 1, 1, Scalar(Q, 1));
  const auto def = deform(p2, skew);
  CHECK(def.associative_mod_eps2);
  CHECK(def.mu == p2.mu());

  Rng rng(6);
  const auto x4 = polynomial_algebra(1, 3, Q);
  for (int t = 0; t < 10; ++t) {
    const auto beta = random_op(Q, x4.space(), 0, rng);
    const auto cob = differential(x4, beta);
    CHECK(deform(x4, cob).associative_mod_eps2);
    CHECK(deformations_equivalent(x4, cob, MultilinearOp(Q, x4.space(), 1)));
    const auto alpha = x4_cochain(1, 1, 1);  // α = μ is a cocycle
    CHECK(is_cocycle(x4, alpha));
    CHECK(deformations_equivalent(x4, alpha, alpha + cob));
  }
  // ℚ[x]/(x³): rank d_0 = 1 = dim L^1, so every cocycle is trivial.
  const auto x3 = polynomial_algebra(1, 2, Q);
  for (int t = 0; t < 5; ++t)
    CHECK(deformations_equivalent(x3, random_op(Q, x3.space(), 1, rng), MultilinearOp(Q, x3.space(), 1)));
  const auto mu = x4.mu();
  CHECK(deformations_equivalent(x4, mu, MultilinearOp(Q, x4.space(), 1)) == in_image(x4, 0, mu));
  // μ = d(β) for β = (1, 1, 1) on ℚ[x]/(x⁴): (dβ)(xⁱ, xʲ) = β_i + β_j − β_{i+j}.
  MultilinearOp ones(Q, x4.space(), 0);
  for (std::size_t n = 1; n <= 3; ++n) ones.set_entry({n}, 0, 0, Scalar(Q, 1));
  CHECK(differential(x4, ones) == mu);
  CHECK(in_image(x4, 0, mu));
}

TEST_CASE("primary obstruction") {
  Rng rng(7);
  const auto p2 = polynomial_algebra(2, 2, Q);
  for (int t = 0; t < 5; ++t) {
    const auto ob = primary_obstruction(p2, random_op(Q, p2.space(), 1, rng));
    CHECK(ob.representative.is_zero());
    CHECK(ob.vanishes_in_cohomology);
  }
  const auto x4 = polynomial_algebra(1, 3, Q);
  CHECK(primary_obstruction(x4, MultilinearOp(Q, x4.space(), 1)).vanishes_in_cohomology);
  for (int t = 0; t < 10; ++t) {
    const auto cob = differential(x4, random_op(Q, x4.space(), 0, rng));
    const auto ob = primary_obstruction(x4, cob);
    CHECK(ob.closed);
    CHECK(ob.vanishes_in_cohomology);
  }
  // Same on a larger q = 3 example over GF(5).
  const auto f = free_algebra(2, 3, F5);
  for (int t = 0; t < 3; ++t) {
    const auto cob = differential(f, random_op(F5, f.space(), 0, rng));
    CHECK(primary_obstruction(f, cob).vanishes_in_cohomology);
  }
}

TEST_CASE("truncation comparison") {
  const auto p3 = polynomial_algebra(2, 3, Q);
  const auto same = compare_truncations(p3, 3, 2);
  CHECK(same.chain_map);
  CHECK(same.low_blocks_identical);
  CHECK(same.full.dims() == same.truncated.dims());
  const auto cut = compare_truncations(p3, 2, 2);
  CHECK(cut.chain_map);
  CHECK(cut.low_blocks_identical);
  CHECK(cut.truncated.dims() == cohomology(polynomial_algebra(2, 2, Q), 2).dims());
  Rng rng(15);
  for (const auto& a : sample_algebras(rng, F5, 6, 4, 2)) {
    if (a.q() < 2) continue;
    const auto c = compare_truncations(a, a.q() - 1, 2);
    CHECK(c.chain_map);
    CHECK(c.low_blocks_identical);
  }
}

TEST_CASE("d squared vanishes and matches the bracket") {
  Rng rng(10);
  for (const auto& f : {F5, Q}) {
    for (const auto& a : sample_algebras(rng, f, f.is_finite() ? 25 : 10, 4, 2)) {
      for (std::size_t p = 0; p <= 2; ++p) {
        const auto alpha = random_op(f, a.space(), p, rng);
        const auto d = differential(a, alpha);
        CHECK(d == bracket(a.mu(), alpha));
        CHECK(differential(a, d).is_zero());
      }
    }
  }
}

TEST_CASE("gauge equivariance of the differential and invariance of cohomology") {
  Rng rng(12);
  for (const auto& f : {F3, Q}) {
    for (const auto& a : sample_algebras(rng, f, 8, 3, 2)) {
      const auto g = random_gauge(f, a.space(), rng);
      const auto b = conjugate(g, a);
      for (std::size_t p = 0; p <= 2; ++p) {
        const auto alpha = random_op(f, a.space(), p, rng);
        CHECK(differential(b, gauge_act(g, alpha)) == gauge_act(g, differential(a, alpha)));
      }
      CHECK(cohomology(a, 3).dims() == cohomology(b, 3).dims());
    }
  }
}

TEST_CASE("blockwise consistency and Euler characteristic") {
  Rng rng(13);
  for (const auto& f : {F5, Q}) {
    for (const auto& a : sample_algebras(rng, f, 8, 4, 2)) {
      const auto q = a.q();
      const auto r = cohomology(a, q);
      for (const auto& g : r.groups) {
        std::size_t sum = 0;
        for (auto d : g.dim_by_internal_degree) sum += d;
        CHECK(sum == g.dim);
        CHECK(g.representatives.size() == g.dim);
        for (const auto& rep : g.representatives) {
          CHECK(differential(a, rep).is_zero());
        }
        // Representatives come grouped by their lowest nonzero degree.
        std::size_t k = 0;
        for (std::size_t n = 1; n <= q; ++n)
          for (std::size_t j = 0; j < g.dim_by_internal_degree[n - 1]; ++j, ++k) {
            const auto& rep = g.representatives[k];
            for (std::size_t m = 1; m < n; ++m) CHECK(is_zero(rep.coordinates(m)));
            CHECK_FALSE(is_zero(rep.coordinates(n)));
          }
      }
      // L^p vanishes for p ≥ q, so p ≤ q covers the whole complex.
      long chi_h = 0, chi_l = 0;
      for (std::size_t p = 0; p <= q; ++p) {
        const long s = p % 2 ? -1 : 1;
        chi_h += s * static_cast<long>(r.groups[p].dim);
        chi_l += s * static_cast<long>(dim_L(a.space(), p));
      }
      CHECK(chi_h == chi_l);
    }
  }
}

TEST_CASE("complex slices compose to zero") {
  Rng rng(14);
  for (const auto& a : sample_algebras(rng, F5, 6, 4, 2)) {
    const auto s = cochain_complex(a, 3);
    for (std::size_t p = 1; p <= 3; ++p) CHECK((s.maps[p] * s.maps[p - 1]).is_zero());
    // Block lower triangular: nothing maps to a lower internal degree.
    for (std::size_t p = 0; p <= 2; ++p)
      for (std::size_t n_in = 2; n_in <= a.q(); ++n_in)
        for (std::size_t n_out = 1; n_out < n_in; ++n_out)
          CHECK(differential_block(a, p, n_out, n_in).is_zero());
  }
}
