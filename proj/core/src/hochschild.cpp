#include "gralg/hochschild.hpp"

#include <map>
#include <tuple>

namespace gralg {

namespace {

// One nonzero structure constant μ(e^i_left, e^j_right) ∋ val · e^{i+j}_out.
struct MuEntry {
  std::size_t out;
  std::size_t left;
  std::size_t right;
  Scalar val;
};

class ProductTable {
 public:
  explicit ProductTable(const GradedAlgebra& a) : a_(a) {
    for (std::size_t i = 1; i <= a.q(); ++i)
      for (std::size_t j = 1; i + j <= a.q(); ++j) {
        auto& list = table_[{i, j}];
        const auto dj = a.dim(j);
        const auto block = a.product_block(i, j);
        for (const auto& [rc, v] : block.entries())
          list.push_back(MuEntry{rc.first, rc.second / dj, rc.second % dj, v});
      }
  }

  const std::vector<MuEntry>& block(std::size_t i, std::size_t j) const {
    static const std::vector<MuEntry> empty;
    auto it = table_.find({i, j});
    return it == table_.end() ? empty : it->second;
  }

 private:
  const GradedAlgebra& a_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<MuEntry>> table_;
};

void require_on(const GradedAlgebra& a, const MultilinearOp& alpha) {
  if (!(a.field() == alpha.field())) throw FieldMismatch();
  if (!(a.space() == alpha.space())) throw DimensionMismatch("cochain lives on a different space");
}

class Accumulator {
 public:
  Accumulator(const GradedVectorSpace& space, Field field) : space_(space), field_(field) {}

  void add(const DegreeComposition& c, std::size_t row, const std::vector<std::size_t>& digits,
           const Scalar& v) {
    auto it = blocks_.find(c);
    if (it == blocks_.end())
      it = blocks_
               .emplace(c, std::make_pair(TensorShape(space_, c),
                                          Matrix(field_, space_.dim(target_degree(c)),
                                                 TensorShape(space_, c).size())))
               .first;
    it->second.second.add_to(row, it->second.first.encode(digits), v);
  }

  MultilinearOp finish(std::size_t p) {
    MultilinearOp out(field_, space_, p);
    for (auto& [c, sm] : blocks_) out.set_block(c, std::move(sm.second));
    return out;
  }

 private:
  const GradedVectorSpace& space_;
  Field field_;
  std::map<DegreeComposition, std::pair<TensorShape, Matrix>> blocks_;
};

}  // namespace

MultilinearOp differential(const GradedAlgebra& a, const MultilinearOp& alpha) {
  require_on(a, alpha);
  const auto& space = a.space();
  const Field field = a.field();
  const auto p = alpha.arity_index();
  const auto q = a.q();
  const ProductTable mu(a);
  const Scalar plus(field, 1), minus(field, -1);
  const Scalar sign_p = p % 2 ? minus : plus;
  Accumulator acc(space, field);

  for (const auto& [c, m] : alpha.blocks()) {
    const auto tgt = target_degree(c);
    const TensorShape shape(space, c);
    for (const auto& [rc, aval] : m.entries()) {
      const auto b = shape.decode(rc.second);
      for (std::size_t k = 1; tgt + k <= q; ++k) {
        // α(a_0..a_p) · a_{p+1}
        DegreeComposition right_c = c;
        right_c.push_back(k);
        for (const auto& e : mu.block(tgt, k)) {
          if (e.left != rc.first) continue;
          auto digits = b;
          digits.push_back(e.right);
          acc.add(right_c, e.out, digits, aval * e.val);
        }
        // (−1)^p a_0 · α(a_1..a_{p+1})
        DegreeComposition left_c{k};
        left_c.insert(left_c.end(), c.begin(), c.end());
        for (const auto& e : mu.block(k, tgt)) {
          if (e.right != rc.first) continue;
          std::vector<std::size_t> digits{e.left};
          digits.insert(digits.end(), b.begin(), b.end());
          acc.add(left_c, e.out, digits, sign_p * aval * e.val);
        }
      }
      // −(−1)^p Σ_i (−1)^i α(.., a_i a_{i+1}, ..)
      for (std::size_t i = 0; i <= p; ++i) {
        const Scalar sign = (p + i) % 2 ? plus : minus;
        for (std::size_t k = 1; k < c[i]; ++k) {
          const auto l = c[i] - k;
          DegreeComposition split(c.begin(), c.begin() + i);
          split.push_back(k);
          split.push_back(l);
          split.insert(split.end(), c.begin() + i + 1, c.end());
          for (const auto& e : mu.block(k, l)) {
            if (e.out != b[i]) continue;
            std::vector<std::size_t> digits(b.begin(), b.begin() + i);
            digits.push_back(e.left);
            digits.push_back(e.right);
            digits.insert(digits.end(), b.begin() + i + 1, b.end());
            acc.add(split, rc.first, digits, sign * aval * e.val);
          }
        }
      }
    }
  }
  return acc.finish(p + 1);
}

Vector flat_coordinates(const MultilinearOp& alpha) {
  Vector out;
  for (std::size_t n = 1; n <= alpha.space().q(); ++n) {
    auto c = alpha.coordinates(n);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

std::size_t flat_offset(const GradedVectorSpace& space, std::size_t p, std::size_t n) {
  std::size_t off = 0;
  for (std::size_t m = 1; m < n && m <= space.q(); ++m) off += dim_L(space, p, m);
  return off;
}

MultilinearOp from_flat_coordinates(Field field, const GradedVectorSpace& space, std::size_t p,
                                    const Vector& coords) {
  if (coords.size() != dim_L(space, p))
    throw DimensionMismatch("coordinate vector length differs from dim L^p");
  MultilinearOp out(field, space, p);
  for (std::size_t n = 1; n <= space.q(); ++n) {
    const auto lo = flat_offset(space, p, n), hi = flat_offset(space, p, n + 1);
    out.set_coordinates(n, Vector(coords.begin() + lo, coords.begin() + hi));
  }
  return out;
}

Matrix differential_matrix(const GradedAlgebra& a, std::size_t p) {
  const auto& space = a.space();
  const Field field = a.field();
  Matrix d(field, dim_L(space, p + 1), dim_L(space, p));
  std::size_t col = 0;
  for (std::size_t n = 1; n <= space.q(); ++n)
    for (const auto& c : compositions_of(n, p + 1)) {
      const auto r = space.dim(n);
      const auto k = TensorShape(space, c).size();
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k; ++j, ++col) {
          MultilinearOp e(field, space, p);
          e.set_entry(c, i, j, Scalar(field, 1));
          const auto image = flat_coordinates(differential(a, e));
          for (std::size_t t = 0; t < image.size(); ++t)
            if (!image[t].is_zero()) d.set(t, col, image[t]);
        }
    }
  return d;
}

namespace {

Matrix block_of(const Matrix& d, const GradedVectorSpace& space, std::size_t p, std::size_t n_out,
                std::size_t n_in) {
  const auto r0 = flat_offset(space, p + 1, n_out), c0 = flat_offset(space, p, n_in);
  Matrix out(d.field(), dim_L(space, p + 1, n_out), dim_L(space, p, n_in));
  for (const auto& [rc, v] : d.entries())
    if (rc.first >= r0 && rc.first < r0 + out.rows() && rc.second >= c0 && rc.second < c0 + out.cols())
      out.set(rc.first - r0, rc.second - c0, v);
  return out;
}

}  // namespace

Matrix differential_block(const GradedAlgebra& a, std::size_t p, std::size_t n_out, std::size_t n_in) {
  return block_of(differential_matrix(a, p), a.space(), p, n_out, n_in);
}

CochainComplexSlice cochain_complex(const GradedAlgebra& a, std::size_t p_max) {
  CochainComplexSlice s;
  s.p_max = p_max;
  for (std::size_t p = 0; p <= p_max; ++p) s.maps.push_back(differential_matrix(a, p));
  return s;
}

std::vector<std::size_t> CohomologyReport::dims() const {
  std::vector<std::size_t> out;
  for (const auto& g : groups) out.push_back(g.dim);
  return out;
}

CohomologyReport cohomology(const GradedAlgebra& a, std::size_t p_max) {
  const auto complex = cochain_complex(a, p_max);
  const auto& space = a.space();
  const auto q = a.q();
  CohomologyReport report;
  report.field = a.field();
  report.p_max = p_max;
  for (std::size_t p = 0; p <= p_max; ++p) {
    CohomologyGroup g;
    g.p = p;
    g.cochain_dim = dim_L(space, p);
    const auto ker = kernel_basis(complex.maps[p]);
    g.rank = g.cochain_dim - ker.dim();
    Subspace image(a.field(), g.cochain_dim);
    if (p > 0) image = Subspace::row_space(complex.maps[p - 1].transpose());
    g.dim = ker.dim() - image.dim();
    g.dim_by_internal_degree.assign(q, 0);
    for (std::size_t n = 1; n <= q; ++n) g.cochain_dim_by_internal_degree.push_back(dim_L(space, p, n));

    // Walk the filtration from the top: covered = (ker ∩ F_{n+1}) + im.
    std::vector<std::vector<MultilinearOp>> reps(q);
    Subspace covered = image;
    for (std::size_t n = q; n >= 1; --n) {
      std::vector<std::size_t> axes;
      for (auto i = flat_offset(space, p, n); i < g.cochain_dim; ++i) axes.push_back(i);
      const auto layer = subspace_intersect(ker, Subspace::coordinate(a.field(), g.cochain_dim, axes));
      for (const auto& v : layer.basis_vectors()) {
        if (covered.contains(v)) continue;
        covered = subspace_sum(covered, Subspace::span(a.field(), g.cochain_dim, {v}));
        reps[n - 1].push_back(from_flat_coordinates(a.field(), space, p, v));
        ++g.dim_by_internal_degree[n - 1];
      }
    }
    for (auto& r : reps)
      for (auto& op : r) g.representatives.push_back(std::move(op));
    report.groups.push_back(std::move(g));
  }
  return report;
}

std::optional<WitnessTriple> cocycle_violation(const GradedAlgebra& a, const MultilinearOp& alpha) {
  if (alpha.arity_index() != 1) throw InvalidArgument("cocycle checks apply to binary cochains");
  const auto d = differential(a, alpha);
  if (d.is_zero()) return std::nullopt;
  const auto& [c, m] = *d.blocks().begin();
  const auto digits = TensorShape(a.space(), c).decode(m.entries().begin()->first.second);
  WitnessTriple w;
  for (std::size_t k = 0; k < 3; ++k) w[k] = BasisRef{c[k], digits[k] + 1};
  return w;
}

bool is_cocycle(const GradedAlgebra& a, const MultilinearOp& alpha) {
  require_on(a, alpha);
  return differential(a, alpha).is_zero();
}

MultilinearOp cocycle_defect(const GradedAlgebra& a, const MultilinearOp& alpha) {
  require_on(a, alpha);
  if (alpha.arity_index() != 1) throw InvalidArgument("cocycle defect applies to binary cochains");
  const Field field = a.field();
  const auto& space = a.space();
  auto apply_alpha = [&](std::size_t i, const Vector& u, std::size_t j, const Vector& v) {
    Vector t;
    for (const auto& x : u)
      for (const auto& y : v) t.push_back(x * y);
    return alpha.block({i, j}).apply(t);
  };
  auto unit = [&](std::size_t deg, std::size_t idx) {
    Vector v = zero_vector(field, space.dim(deg));
    v[idx] = Scalar(field, 1);
    return v;
  };
  MultilinearOp out(field, space, 2);
  for (const auto& c : compositions_up_to(a.q(), 3)) {
    const auto [i, j, k] = std::tuple{c[0], c[1], c[2]};
    const TensorShape shape(space, c);
    Matrix block(field, space.dim(i + j + k), shape.size());
    for (std::size_t x = 0; x < space.dim(i); ++x)
      for (std::size_t y = 0; y < space.dim(j); ++y)
        for (std::size_t z = 0; z < space.dim(k); ++z) {
          const auto ea = unit(i, x), eb = unit(j, y), ec = unit(k, z);
          const auto ab = a.multiply(i, ea, j, eb);
          const auto bc = a.multiply(j, eb, k, ec);
          Vector total = a.multiply(i + j, apply_alpha(i, ea, j, eb), k, ec);
          const auto t2 = apply_alpha(i, ea, j + k, bc);
          const auto t3 = apply_alpha(i + j, ab, k, ec);
          const auto t4 = a.multiply(i, ea, j + k, apply_alpha(j, eb, k, ec));
          for (std::size_t r = 0; r < total.size(); ++r) total[r] += t3[r] - t2[r] - t4[r];
          for (std::size_t r = 0; r < total.size(); ++r)
            block.set(r, shape.encode({x, y, z}), total[r]);
        }
    out.set_block(c, std::move(block));
  }
  return out;
}

FirstOrderDeformation deform(const GradedAlgebra& a, const MultilinearOp& alpha) {
  require_on(a, alpha);
  if (auto w = cocycle_violation(a, alpha)) throw NotCocycle(*w);
  FirstOrderDeformation def{a.mu(), alpha, false};
  def.associative_mod_eps2 = cocycle_defect(a, alpha).is_zero();
  return def;
}

bool in_image(const GradedAlgebra& a, std::size_t p, const MultilinearOp& beta) {
  require_on(a, beta);
  if (beta.arity_index() != p + 1) throw DimensionMismatch("cochain has the wrong arity");
  if (beta.is_zero()) return true;
  const Matrix d = differential_matrix(a, p);
  const auto v = flat_coordinates(beta);
  Matrix col(a.field(), v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) col.set(i, 0, v[i]);
  return rank(Matrix::hstack(d, col)) == rank(d);
}

bool deformations_equivalent(const GradedAlgebra& a, const MultilinearOp& alpha,
                             const MultilinearOp& alpha_prime) {
  require_on(a, alpha);
  require_on(a, alpha_prime);
  return in_image(a, 0, alpha - alpha_prime);
}

PrimaryObstruction primary_obstruction(const GradedAlgebra& a, const MultilinearOp& alpha) {
  require_on(a, alpha);
  PrimaryObstruction ob{circle(alpha, alpha), false, false, false};
  ob.closed = differential(a, ob.representative).is_zero();
  ob.exact = in_image(a, 1, ob.representative);
  ob.vanishes_in_cohomology = ob.closed && ob.exact;
  return ob;
}

MultilinearOp restrict_cochain(const MultilinearOp& alpha, const GradedVectorSpace& truncated) {
  MultilinearOp out(alpha.field(), truncated, alpha.arity_index());
  for (const auto& [c, m] : alpha.blocks())
    if (target_degree(c) <= truncated.q()) out.set_block(c, m);
  return out;
}

TruncationComparison compare_truncations(const GradedAlgebra& a, std::size_t q_truncated,
                                         std::size_t p_max) {
  const auto small = truncate(a, q_truncated);
  TruncationComparison cmp;
  cmp.q = a.q();
  cmp.q_truncated = q_truncated;
  cmp.chain_map = true;
  cmp.low_blocks_identical = true;
  const auto& space = a.space();
  for (std::size_t p = 0; p <= p_max; ++p) {
    const auto d_full = differential_matrix(a, p), d_small = differential_matrix(small, p);
    for (std::size_t n_in = 1; n_in <= q_truncated; ++n_in)
      for (std::size_t n_out = n_in; n_out <= q_truncated; ++n_out)
        if (!(block_of(d_full, space, p, n_out, n_in) == block_of(d_small, small.space(), p, n_out, n_in)))
          cmp.low_blocks_identical = false;
    for (std::size_t n = 1; n <= a.q(); ++n) {
      for (const auto& c : compositions_of(n, p + 1)) {
        for (std::size_t i = 0; i < space.dim(n); ++i)
          for (std::size_t j = 0; j < TensorShape(space, c).size(); ++j) {
            MultilinearOp e(a.field(), space, p);
            e.set_entry(c, i, j, Scalar(a.field(), 1));
            const auto lhs = restrict_cochain(differential(a, e), small.space());
            const auto rhs = differential(small, restrict_cochain(e, small.space()));
            if (!(lhs == rhs)) cmp.chain_map = false;
          }
      }
    }
  }
  cmp.full = cohomology(a, p_max);
  cmp.truncated = cohomology(small, p_max);
  return cmp;
}

}  // namespace gralg
