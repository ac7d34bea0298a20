#pragma once

// Random generators and small helpers shared by the test binaries.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gralg/algebra.hpp"
#include "gralg/graded.hpp"
#include "gralg/hochschild.hpp"
#include "gralg/stability.hpp"

namespace gralg::testing {

using Rng = std::mt19937_64;

inline Scalar random_scalar(const Field& f, Rng& rng) {
  if (f.is_finite()) {
    std::uniform_int_distribution<long> d(0, static_cast<long>(f.characteristic()) - 1);
    return Scalar(f, d(rng));
  }
  std::uniform_int_distribution<long> num(-3, 3), den(1, 2);
  return Scalar(f, mpq_class(num(rng), den(rng)));
}

inline Scalar random_nonzero(const Field& f, Rng& rng) {
  for (;;) {
    auto s = random_scalar(f, rng);
    if (!s.is_zero()) return s;
  }
}

/// Each entry is nonzero with probability `density`.
inline MultilinearOp random_op(const Field& f, const GradedVectorSpace& space, std::size_t p, Rng& rng,
                               double density = 0.5) {
  MultilinearOp op(f, space, p);
  std::bernoulli_distribution keep(density);
  for (const auto& c : compositions_up_to(space.q(), p + 1)) {
    const auto rows = space.dim(target_degree(c));
    const auto cols = TensorShape(space, c).size();
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t k = 0; k < cols; ++k)
        if (keep(rng)) op.set_entry(c, r, k, random_scalar(f, rng));
  }
  return op;
}

inline Matrix random_invertible(const Field& f, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, random_scalar(f, rng));
    if (rank(m) == n) return m;
  }
}

inline GaugeElement random_gauge(const Field& f, const GradedVectorSpace& space, Rng& rng) {
  std::vector<Matrix> comps;
  for (std::size_t i = 1; i <= space.q(); ++i) comps.push_back(random_invertible(f, space.dim(i), rng));
  return GaugeElement(f, space, std::move(comps));
}

inline GradedVectorSpace random_space(Rng& rng, std::size_t max_q, std::size_t max_d) {
  std::uniform_int_distribution<std::size_t> qd(1, max_q), dd(1, max_d);
  std::vector<std::size_t> dims(qd(rng));
  for (auto& d : dims) d = dd(rng);
  return GradedVectorSpace(dims);
}

/// Samples sparse products until one is associative; gives up and returns
/// the zero product after `tries` attempts.
inline GradedAlgebra random_associative(const Field& f, const GradedVectorSpace& space, Rng& rng,
                                        int tries = 2000) {
  std::uniform_real_distribution<double> dens(0.05, 0.6);
  for (int t = 0; t < tries; ++t) {
    auto mu = random_op(f, space, 1, rng, dens(rng));
    if (circle(mu, mu).is_zero()) return new_algebra(mu);
  }
  return new_algebra(MultilinearOp(f, space, 1));
}

inline GradedAlgebra zero_algebra(const Field& f, std::vector<std::size_t> dims) {
  return new_algebra(MultilinearOp(f, GradedVectorSpace(std::move(dims)), 1));
}

/// ℚ[x]/(x^{q+1}) written in degrees 1..q.
inline GradedAlgebra truncated_polynomial(const Field& f, std::size_t q) {
  return polynomial_algebra(1, q, f);
}

inline GradedAlgebra conjugate(const GaugeElement& g, const GradedAlgebra& a) {
  return new_algebra(gauge_act(g, a.mu()));
}

/// A random descending flag of A_1 with proper nonzero pieces.
inline std::vector<Subspace> random_flag(const GradedAlgebra& a, std::size_t max_len, Rng& rng) {
  const auto d1 = a.dim(1);
  std::vector<Subspace> flag;
  if (d1 < 2) return flag;
  std::uniform_int_distribution<std::size_t> len_d(1, max_len);
  const auto len = len_d(rng);
  Subspace parent = Subspace::full(a.field(), d1);
  for (std::size_t k = 0; k < len; ++k) {
    const auto hi = k == 0 ? d1 - 1 : parent.dim();
    std::uniform_int_distribution<std::size_t> dim_d(1, hi);
    const auto e = dim_d(rng);
    for (;;) {
      Matrix coeffs(a.field(), e, parent.dim());
      for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < parent.dim(); ++j) coeffs.set(i, j, random_scalar(a.field(), rng));
      auto s = Subspace::row_space(coeffs * parent.basis());
      if (s.dim() == e) {
        parent = s;
        break;
      }
    }
    flag.push_back(parent);
  }
  return flag;
}

}  // namespace gralg::testing
