#include "gralg/algebra.hpp"

#include <algorithm>
#include <string>

#include "gralg/errors.hpp"

namespace gralg {

// ---- GradedAlgebra -------------------------------------------------------

GradedAlgebra new_algebra(const MultilinearOp& mu, BasisLabels labels) {
  if (mu.arity_index() != 1) throw InvalidArgument("a product must be a binary operation");
  if (!labels.empty()) {
    if (labels.size() != mu.space().q()) throw InvalidArgument("labels must cover every degree");
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i].size() != mu.space().dim(i + 1))
        throw InvalidArgument("label count differs from dimension in degree " + std::to_string(i + 1));
  }
  const auto assoc = circle(mu, mu);
  if (!assoc.is_zero()) {
    const auto& [c, m] = *assoc.blocks().begin();
    const auto col = m.entries().begin()->first.second;
    const auto digits = TensorShape(mu.space(), c).decode(col);
    WitnessTriple w;
    for (std::size_t k = 0; k < 3; ++k) w[k] = BasisRef{c[k], digits[k] + 1};
    throw NotAssociative(w);
  }
  return GradedAlgebra(mu, std::move(labels));
}

Matrix GradedAlgebra::product_block(std::size_t i, std::size_t j) const {
  if (i + j > q()) return Matrix(field(), 0, dim(i) * dim(j));
  return mu_.block({i, j});
}

Vector GradedAlgebra::multiply(std::size_t i, const Vector& a, std::size_t j, const Vector& b) const {
  if (a.size() != dim(i) || b.size() != dim(j))
    throw DimensionMismatch("factor lengths differ from degree dimensions");
  if (i + j > q()) return {};
  Vector t;
  t.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) t.push_back(x * y);
  return product_block(i, j).apply(t);
}

Subspace GradedAlgebra::product_space(std::size_t i, const Subspace& u, std::size_t j,
                                      const Subspace& w) const {
  if (i + j > q()) return Subspace(field(), 0);
  if (u.is_zero() || w.is_zero()) return Subspace(field(), dim(i + j));
  const Matrix t = kron(u.basis(), w.basis());
  return Subspace::row_space(t * product_block(i, j).transpose());
}

// ---- graded subspaces ----------------------------------------------------

GradedSubspace zero_graded(const GradedAlgebra& a) {
  GradedSubspace out;
  for (std::size_t i = 1; i <= a.q(); ++i) out.emplace_back(a.field(), a.dim(i));
  return out;
}

GradedSubspace tail(const GradedAlgebra& a, std::size_t k) {
  GradedSubspace out;
  for (std::size_t i = 1; i <= a.q(); ++i)
    out.push_back(i >= k ? Subspace::full(a.field(), a.dim(i)) : Subspace(a.field(), a.dim(i)));
  return out;
}

bool graded_contains(const GradedSubspace& outer, const GradedSubspace& inner) {
  if (outer.size() != inner.size()) throw DimensionMismatch("graded subspaces of different length");
  for (std::size_t i = 0; i < outer.size(); ++i)
    if (!outer[i].contains(inner[i])) return false;
  return true;
}

GradedSubspace graded_sum(const GradedSubspace& u, const GradedSubspace& w) {
  if (u.size() != w.size()) throw DimensionMismatch("graded subspaces of different length");
  GradedSubspace out;
  for (std::size_t i = 0; i < u.size(); ++i) out.push_back(subspace_sum(u[i], w[i]));
  return out;
}

bool graded_is_zero(const GradedSubspace& u) {
  return std::all_of(u.begin(), u.end(), [](const Subspace& s) { return s.is_zero(); });
}

std::vector<std::size_t> graded_dims(const GradedSubspace& u) {
  std::vector<std::size_t> d;
  for (const auto& s : u) d.push_back(s.dim());
  return d;
}

bool is_two_sided_ideal(const GradedAlgebra& a, const GradedSubspace& u) {
  if (u.size() != a.q()) return false;
  for (std::size_t i = 1; i <= a.q(); ++i) {
    for (std::size_t j = 1; i + j <= a.q(); ++j) {
      const auto full = Subspace::full(a.field(), a.dim(j));
      if (!u[i + j - 1].contains(a.product_space(j, full, i, u[i - 1]))) return false;
      if (!u[i + j - 1].contains(a.product_space(i, u[i - 1], j, full))) return false;
    }
  }
  return true;
}

GradedIdeal::GradedIdeal(std::shared_ptr<const GradedAlgebra> algebra, GradedSubspace pieces)
    : algebra_(std::move(algebra)), pieces_(std::move(pieces)) {
  if (pieces_.size() != algebra_->q()) throw DimensionMismatch("ideal needs one piece per degree");
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    if (pieces_[i].ambient_dim() != algebra_->dim(i + 1))
      throw DimensionMismatch("ideal piece in degree " + std::to_string(i + 1) +
                              " has the wrong ambient dimension");
}

// ---- constructors --------------------------------------------------------

namespace {

std::string var_name(std::size_t k, std::size_t n) {
  static const char* small[] = {"x", "y", "z"};
  return n <= 3 ? std::string(small[k]) : "x" + std::to_string(k + 1);
}

void exponent_tuples(std::size_t n_vars, std::size_t degree, std::vector<std::size_t>& cur,
                     std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() + 1 == n_vars) {
    cur.push_back(degree);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t e = degree + 1; e-- > 0;) {
    cur.push_back(e);
    exponent_tuples(n_vars, degree - e, cur, out);
    cur.pop_back();
  }
}

std::string monomial_label(const std::vector<std::size_t>& exps) {
  std::string s;
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] == 0) continue;
    s += var_name(k, exps.size());
    if (exps[k] > 1) s += "^" + std::to_string(exps[k]);
  }
  return s;
}

// Graded monomial bases of the commutative polynomial ring in n_vars
// variables up to degree q, descending lexicographic in exponents.
struct MonomialBasis {
  std::vector<std::vector<std::vector<std::size_t>>> by_degree;  // [deg-1][idx] -> exponents
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index;

  MonomialBasis(std::size_t n_vars, std::size_t q) {
    for (std::size_t i = 1; i <= q; ++i) {
      std::vector<std::vector<std::size_t>> tuples;
      std::vector<std::size_t> cur;
      exponent_tuples(n_vars, i, cur, tuples);
      std::map<std::vector<std::size_t>, std::size_t> idx;
      for (std::size_t k = 0; k < tuples.size(); ++k) idx.emplace(tuples[k], k);
      by_degree.push_back(std::move(tuples));
      index.push_back(std::move(idx));
    }
  }

  GradedVectorSpace space() const {
    std::vector<std::size_t> dims;
    for (const auto& d : by_degree) dims.push_back(d.size());
    return GradedVectorSpace(dims);
  }

  BasisLabels labels() const {
    BasisLabels out;
    for (const auto& d : by_degree) {
      std::vector<std::string> names;
      for (const auto& e : d) names.push_back(monomial_label(e));
      out.push_back(std::move(names));
    }
    return out;
  }
};

// Structure constants of x^a y^b · x^c y^d = λ^{bc} x^{a+c} y^{b+d}; λ = 1 gives
// the commutative product for any number of variables (the twist only
// applies with two variables).
GradedAlgebra monomial_algebra(std::size_t n_vars, std::size_t q, const Scalar& lambda) {
  const Field field = lambda.field();
  MonomialBasis basis(n_vars, q);
  const auto space = basis.space();
  MultilinearOp mu(field, space, 1);
  for (std::size_t i = 1; i <= q; ++i) {
    for (std::size_t j = 1; i + j <= q; ++j) {
      Matrix m(field, space.dim(i + j), space.dim(i) * space.dim(j));
      for (std::size_t a = 0; a < space.dim(i); ++a) {
        for (std::size_t b = 0; b < space.dim(j); ++b) {
          const auto& ea = basis.by_degree[i - 1][a];
          const auto& eb = basis.by_degree[j - 1][b];
          std::vector<std::size_t> sum(n_vars);
          for (std::size_t k = 0; k < n_vars; ++k) sum[k] = ea[k] + eb[k];
          Scalar coeff(field, 1);
          if (n_vars == 2)
            for (std::size_t t = 0; t < ea[1] * eb[0]; ++t) coeff *= lambda;
          m.set(basis.index[i + j - 1].at(sum), a * space.dim(j) + b, coeff);
        }
      }
      mu.set_block({i, j}, std::move(m));
    }
  }
  return new_algebra(mu, basis.labels());
}

}  // namespace

GradedAlgebra polynomial_algebra(std::size_t n_vars, std::size_t q, Field field) {
  if (n_vars == 0) throw InvalidArgument("polynomial algebra needs at least one variable");
  return monomial_algebra(n_vars, q, Scalar(field, 1));
}

GradedAlgebra skew_plane(const Scalar& lambda, std::size_t q) {
  if (lambda.is_zero()) throw InvalidArgument("skew parameter must be nonzero");
  return monomial_algebra(2, q, lambda);
}

GradedAlgebra free_algebra(std::size_t n_gens, std::size_t q, Field field) {
  if (n_gens == 0) throw InvalidArgument("free algebra needs at least one generator");
  std::vector<std::size_t> dims;
  std::size_t pw = 1;
  for (std::size_t i = 1; i <= q; ++i) dims.push_back(pw *= n_gens);
  const GradedVectorSpace space(dims);
  MultilinearOp mu(field, space, 1);
  const Scalar one(field, 1);
  for (std::size_t i = 1; i <= q; ++i) {
    for (std::size_t j = 1; i + j <= q; ++j) {
      Matrix m(field, space.dim(i + j), space.dim(i) * space.dim(j));
      for (std::size_t a = 0; a < space.dim(i); ++a)
        for (std::size_t b = 0; b < space.dim(j); ++b)
          m.set(a * space.dim(j) + b, a * space.dim(j) + b, one);
      mu.set_block({i, j}, std::move(m));
    }
  }
  BasisLabels labels;
  for (std::size_t i = 1; i <= q; ++i) {
    std::vector<std::string> words;
    const TensorShape shape(std::vector<std::size_t>(i, n_gens));
    for (std::size_t w = 0; w < space.dim(i); ++w) {
      std::string s;
      const auto letters = shape.decode(w);
      for (std::size_t k = 0; k < letters.size(); ++k) {
        if (k && n_gens > 3) s += "*";
        s += var_name(letters[k], n_gens);
      }
      words.push_back(std::move(s));
    }
    labels.push_back(std::move(words));
  }
  return new_algebra(mu, std::move(labels));
}

// ---- ideals --------------------------------------------------------------

GradedIdeal ideal_generated_by(const std::shared_ptr<const GradedAlgebra>& a,
                               const GradedSubspace& generators) {
  const auto& alg = *a;
  if (generators.size() != alg.q()) throw DimensionMismatch("generators need one piece per degree");
  GradedSubspace pieces = generators;
  std::vector<Subspace> full;
  for (std::size_t j = 1; j <= alg.q(); ++j) full.push_back(Subspace::full(alg.field(), alg.dim(j)));
  // Ascending passes until nothing grows; each piece only receives products
  // from lower degrees, so the second pass confirms the fixpoint.
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t n = 2; n <= alg.q(); ++n) {
      Subspace cur = pieces[n - 1];
      for (std::size_t j = 1; j < n; ++j) {
        const auto& src = pieces[n - j - 1];
        if (src.is_zero()) continue;
        cur = subspace_sum(cur, alg.product_space(j, full[j - 1], n - j, src));
        cur = subspace_sum(cur, alg.product_space(n - j, src, j, full[j - 1]));
      }
      if (!(cur == pieces[n - 1])) {
        pieces[n - 1] = std::move(cur);
        grew = true;
      }
    }
  }
  return GradedIdeal(a, std::move(pieces));
}

GradedIdeal ideal_generated_by(const GradedAlgebra& a,
                               const std::map<std::size_t, Subspace>& generators) {
  auto ptr = std::make_shared<const GradedAlgebra>(a);
  GradedSubspace gens = zero_graded(a);
  for (const auto& [deg, s] : generators) {
    if (deg < 1 || deg > a.q()) throw InvalidArgument("generator degree outside 1..q");
    if (s.ambient_dim() != a.dim(deg))
      throw DimensionMismatch("generator subspace has the wrong ambient dimension");
    gens[deg - 1] = subspace_sum(gens[deg - 1], s);
  }
  return ideal_generated_by(ptr, gens);
}

GradedIdeal ideal_product(const GradedIdeal& i, const GradedIdeal& j) {
  if (!(i.algebra() == j.algebra())) throw InvalidArgument("ideals belong to different algebras");
  const auto& alg = i.algebra();
  GradedSubspace prod = zero_graded(alg);
  for (std::size_t a = 1; a <= alg.q(); ++a)
    for (std::size_t b = 1; a + b <= alg.q(); ++b)
      prod[a + b - 1] =
          subspace_sum(prod[a + b - 1], alg.product_space(a, i.piece(a), b, j.piece(b)));
  return ideal_generated_by(i.algebra_ptr(), prod);
}

GradedAlgebra quotient(const GradedAlgebra& a, const std::vector<HomogeneousElement>& relations) {
  std::map<std::size_t, std::vector<Vector>> by_degree;
  for (const auto& r : relations) {
    if (r.degree < 1 || r.degree > a.q())
      throw InvalidArgument("relation degree " + std::to_string(r.degree) + " outside 1..q");
    if (r.coords.size() != a.dim(r.degree))
      throw DimensionMismatch("relation length differs from dimension of its degree");
    by_degree[r.degree].push_back(r.coords);
  }
  std::map<std::size_t, Subspace> gens;
  for (const auto& [deg, vecs] : by_degree) gens.emplace(deg, Subspace::span(a.field(), a.dim(deg), vecs));
  const auto ideal = ideal_generated_by(a, gens);

  // kept[i] = ambient basis indices of degree i+1 that survive.
  std::vector<std::vector<std::size_t>> kept(a.q());
  std::vector<std::size_t> dims;
  for (std::size_t i = 1; i <= a.q(); ++i) {
    const auto& piv = ideal.piece(i).pivots();
    for (std::size_t k = 0; k < a.dim(i); ++k)
      if (!std::binary_search(piv.begin(), piv.end(), k)) kept[i - 1].push_back(k);
    dims.push_back(kept[i - 1].size());
  }
  const GradedVectorSpace space(dims);
  MultilinearOp mu(a.field(), space, 1);
  for (std::size_t i = 1; i <= a.q(); ++i) {
    for (std::size_t j = 1; i + j <= a.q(); ++j) {
      const Matrix block = a.product_block(i, j);
      Matrix m(a.field(), space.dim(i + j), space.dim(i) * space.dim(j));
      for (std::size_t x = 0; x < kept[i - 1].size(); ++x) {
        for (std::size_t y = 0; y < kept[j - 1].size(); ++y) {
          const auto col = kept[i - 1][x] * a.dim(j) + kept[j - 1][y];
          const auto normal = ideal.piece(i + j).reduce(block.column(col));
          for (std::size_t z = 0; z < kept[i + j - 1].size(); ++z)
            m.set(z, x * space.dim(j) + y, normal[kept[i + j - 1][z]]);
        }
      }
      mu.set_block({i, j}, std::move(m));
    }
  }
  BasisLabels labels;
  if (!a.labels().empty()) {
    for (std::size_t i = 0; i < a.q(); ++i) {
      std::vector<std::string> names;
      for (auto k : kept[i]) names.push_back(a.labels()[i][k]);
      labels.push_back(std::move(names));
    }
  }
  return new_algebra(mu, std::move(labels));
}

GradedAlgebra truncate(const GradedAlgebra& a, std::size_t q) {
  if (q > a.q()) throw InvalidArgument("truncation degree exceeds the algebra's bound");
  const auto space = a.space().truncate(q);
  MultilinearOp mu(a.field(), space, 1);
  for (const auto& [c, m] : a.mu().blocks())
    if (target_degree(c) <= q) mu.set_block(c, m);
  BasisLabels labels;
  if (!a.labels().empty()) labels.assign(a.labels().begin(), a.labels().begin() + q);
  return new_algebra(mu, std::move(labels));
}

bool is_generated_in_degree_one(const GradedAlgebra& a) {
  if (a.q() == 0) return true;
  const auto ideal =
      ideal_generated_by(a, {{std::size_t{1}, Subspace::full(a.field(), a.dim(1))}});
  for (std::size_t i = 1; i <= a.q(); ++i)
    if (!ideal.piece(i).is_full()) return false;
  return true;
}

GradedIdeal top_vanishing_ideal(const GradedAlgebra& a) {
  const auto q = a.q();
  GradedSubspace j = zero_graded(a);
  // Descending: J_i = {v : A_k v ⊆ J_{i+k} and v A_k ⊆ J_{i+k} for all k}.
  for (std::size_t i = q; i-- > 1;) {
    const auto di = a.dim(i);
    Matrix constraints(a.field(), 0, di);
    for (std::size_t k = 1; i + k <= q; ++k) {
      const auto dk = a.dim(k);
      const auto ann = j[i + k - 1].annihilator().basis();
      if (ann.rows() == 0 || dk == 0) continue;
      const Matrix left = a.product_block(k, i);   // columns e_b ⊗ v
      const Matrix right = a.product_block(i, k);  // columns v ⊗ e_b
      for (std::size_t b = 0; b < dk; ++b) {
        Matrix l(a.field(), a.dim(i + k), di), r(a.field(), a.dim(i + k), di);
        for (const auto& [rc, val] : left.entries())
          if (rc.second / di == b) l.set(rc.first, rc.second % di, val);
        for (const auto& [rc, val] : right.entries())
          if (rc.second % dk == b) r.set(rc.first, rc.second / dk, val);
        constraints = Matrix::vstack(constraints, ann * l);
        constraints = Matrix::vstack(constraints, ann * r);
      }
    }
    j[i - 1] = kernel_basis(constraints);
  }
  return GradedIdeal(std::make_shared<const GradedAlgebra>(a), std::move(j));
}

bool has_top_vanishing_ideal(const GradedAlgebra& a) { return !top_vanishing_ideal(a).is_zero(); }

}  // namespace gralg
