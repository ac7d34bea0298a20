#include "gralg/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "gralg/errors.hpp"

namespace gralg {

namespace {

// ---- GF(p) sparse rows ---------------------------------------------------

using ModRow = std::vector<std::pair<std::size_t, std::uint64_t>>;

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t e = p - 2, acc = 1;
  a %= p;
  while (e) {
    if (e & 1) acc = acc * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return acc;
}

// x - f * y
ModRow sub_scaled(const ModRow& x, std::uint64_t f, const ModRow& y, std::uint64_t p) {
  ModRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else {
      const auto col = y[j].first;
      std::uint64_t v = (p - f * y[j].second % p) % p;
      if (i < x.size() && x[i].first == col) v = (v + x[i++].second) % p;
      ++j;
      if (v) out.emplace_back(col, v);
    }
  }
  return out;
}

void normalize(ModRow& r, std::uint64_t p) {
  const auto inv = inv_mod(r.front().second, p);
  for (auto& e : r) e.second = e.second * inv % p;
}

std::vector<ModRow> mod_rows(const Matrix& m) {
  std::vector<ModRow> rows(m.rows());
  for (const auto& [idx, val] : m.entries()) rows[idx.first].emplace_back(idx.second, val.residue());
  return rows;
}

// Echelon basis keyed by pivot column; rows normalized to leading 1.
std::map<std::size_t, ModRow> mod_echelon(std::vector<ModRow> rows, std::uint64_t p) {
  std::map<std::size_t, ModRow> piv;
  for (auto& r : rows) {
    while (!r.empty()) {
      auto it = piv.find(r.front().first);
      if (it == piv.end()) break;
      r = sub_scaled(r, r.front().second, it->second, p);
    }
    if (r.empty()) continue;
    normalize(r, p);
    piv.emplace(r.front().first, std::move(r));
  }
  return piv;
}

std::uint64_t lookup(const ModRow& r, std::size_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != r.end() && it->first == col) ? it->second : 0;
}

Echelon mod_rref(const Matrix& m) {
  const auto p = m.field().characteristic();
  auto piv = mod_echelon(mod_rows(m), p);
  for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
    const auto col = it->first;
    for (auto jt = piv.begin(); jt->first != col; ++jt) {
      const auto f = lookup(jt->second, col);
      if (f) jt->second = sub_scaled(jt->second, f, it->second, p);
    }
  }
  Echelon e{Matrix(m.field(), piv.size(), m.cols()), {}};
  std::size_t r = 0;
  for (const auto& [col, row] : piv) {
    e.pivots.push_back(col);
    for (const auto& [c, v] : row) e.rref.set(r, c, Scalar(m.field(), static_cast<long>(v)));
    ++r;
  }
  return e;
}

// ---- Q: integer rows, fraction-free -------------------------------------

using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

void make_primitive(IntRow& r) {
  if (r.empty()) return;
  mpz_class g = 0;
  for (const auto& e : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) break;
  }
  if (r.front().second < 0) g = -g;
  if (g != 1)
    for (auto& e : r) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

// a * x - b * y
IntRow combine(const mpz_class& a, const IntRow& x, const mpz_class& b, const IntRow& y) {
  IntRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else {
      const auto col = y[j].first;
      mpz_class v = -b * y[j].second;
      if (i < x.size() && x[i].first == col) v += a * x[i++].second;
      ++j;
      if (v != 0) out.emplace_back(col, std::move(v));
    }
  }
  return out;
}

std::vector<IntRow> int_rows(const Matrix& m) {
  std::vector<std::vector<std::pair<std::size_t, mpq_class>>> q(m.rows());
  for (const auto& [idx, val] : m.entries()) q[idx.first].emplace_back(idx.second, val.rational());
  std::vector<IntRow> rows(m.rows());
  for (std::size_t r = 0; r < q.size(); ++r) {
    mpz_class l = 1;
    for (const auto& e : q[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
    for (const auto& e : q[r]) {
      mpz_class v = e.second.get_num() * (l / e.second.get_den());
      rows[r].emplace_back(e.first, std::move(v));
    }
    make_primitive(rows[r]);
  }
  return rows;
}

const mpz_class* lookup(const IntRow& r, std::size_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != r.end() && it->first == col) ? &it->second : nullptr;
}

Echelon int_rref(const Matrix& m) {
  std::map<std::size_t, IntRow> piv;
  for (auto& r : int_rows(m)) {
    while (!r.empty()) {
      auto it = piv.find(r.front().first);
      if (it == piv.end()) break;
      const mpz_class a = it->second.front().second;
      const mpz_class b = r.front().second;
      r = combine(a, r, b, it->second);
      make_primitive(r);
    }
    if (r.empty()) continue;
    piv.emplace(r.front().first, std::move(r));
  }
  for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
    const auto col = it->first;
    for (auto jt = piv.begin(); jt->first != col; ++jt) {
      const mpz_class* f = lookup(jt->second, col);
      if (!f) continue;
      const mpz_class b = *f;
      jt->second = combine(it->second.front().second, jt->second, b, it->second);
      make_primitive(jt->second);
    }
  }
  Echelon e{Matrix(m.field(), piv.size(), m.cols()), {}};
  std::size_t r = 0;
  for (const auto& [col, row] : piv) {
    e.pivots.push_back(col);
    const mpz_class& lead = row.front().second;
    for (const auto& [c, v] : row) e.rref.set(r, c, Scalar(m.field(), mpq_class(v, lead)));
    ++r;
  }
  return e;
}

// Dense integer copy for Bareiss.
std::vector<std::vector<mpz_class>> dense_int(const Matrix& m) {
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols(), 0));
  auto rows = int_rows(m);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto& [c, v] : rows[r]) a[r][c] = v;
  return a;
}

// Bareiss elimination in place; returns the rank and the sign of the row
// permutation. Every intermediate entry is a minor of the input, so the
// division by the previous pivot is exact.
std::size_t bareiss(std::vector<std::vector<mpz_class>>& a, std::size_t cols, int& sign) {
  const std::size_t rows = a.size();
  mpz_class prev = 1;
  std::size_t r = 0;
  sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && a[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    if (pr != r) {
      std::swap(a[pr], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.field().is_finite())
    return mod_echelon(mod_rows(m), m.field().characteristic()).size();
  auto a = dense_int(m);
  int sign = 1;
  return bareiss(a, m.cols(), sign);
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const auto n = m.rows();
  if (n == 0) return Scalar(m.field(), 1);
  if (m.field().is_finite()) {
    const auto p = m.field().characteristic();
    auto dense = m.dense_rows();
    std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = dense[i][j].residue();
    std::uint64_t det = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t pr = c;
      while (pr < n && a[pr][c] == 0) ++pr;
      if (pr == n) return Scalar(m.field());
      if (pr != c) {
        std::swap(a[pr], a[c]);
        det = (p - det) % p;
      }
      det = det * a[c][c] % p;
      const auto inv = inv_mod(a[c][c], p);
      for (std::size_t i = c + 1; i < n; ++i) {
        const auto f = a[i][c] * inv % p;
        if (!f) continue;
        for (std::size_t j = c; j < n; ++j) a[i][j] = (a[i][j] + p - f * a[c][j] % p) % p;
      }
    }
    return Scalar(m.field(), static_cast<long>(det));
  }
  // Rows were scaled to integers; undo the scaling afterwards.
  mpq_class scale = 1;
  auto q = m.dense_rows();
  auto a = dense_int(m);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (a[r][c] != 0) {
        scale *= mpq_class(a[r][c]) / q[r][c].rational();
        break;
      }
    }
  }
  int sign = 1;
  if (bareiss(a, n, sign) < n) return Scalar(m.field());
  mpq_class det(a[n - 1][n - 1] * sign);
  det /= scale;
  return Scalar(m.field(), det);
}

Echelon row_reduce(const Matrix& m) {
  return m.field().is_finite() ? mod_rref(m) : int_rref(m);
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const auto n = m.rows();
  auto e = row_reduce(Matrix::hstack(m, Matrix::identity(m.field(), n)));
  if (e.pivots.size() < n || (n && e.pivots[n - 1] != n - 1))
    throw InvalidArgument("matrix is not invertible");
  Matrix inv(m.field(), n, n);
  for (const auto& [idx, val] : e.rref.entries())
    if (idx.second >= n) inv.set(idx.first, idx.second - n, val);
  return inv;
}

Subspace kernel_basis(const Matrix& m) {
  auto e = row_reduce(m);
  const auto n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> vecs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(m.field(), n);
    v[f] = Scalar(m.field(), 1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref.at(i, f);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(m.field(), n, vecs);
}

Subspace::Subspace(Field field, std::size_t ambient_dim) : basis_(field, 0, ambient_dim) {}

Subspace Subspace::full(Field field, std::size_t n) {
  std::vector<std::size_t> piv(n);
  std::iota(piv.begin(), piv.end(), std::size_t{0});
  return Subspace(Matrix::identity(field, n), std::move(piv));
}

Subspace Subspace::span(Field field, std::size_t n, const std::vector<Vector>& vectors) {
  return row_space(Matrix::from_rows(field, n, vectors));
}

Subspace Subspace::row_space(const Matrix& m) {
  auto e = row_reduce(m);
  return Subspace(std::move(e.rref), std::move(e.pivots));
}

Subspace Subspace::coordinate(Field field, std::size_t n, const std::vector<std::size_t>& axes) {
  Matrix m(field, axes.size(), n);
  for (std::size_t i = 0; i < axes.size(); ++i) m.set(i, axes[i], Scalar(field, 1));
  return row_space(m);
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("vector length differs from ambient dimension");
  Vector out = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar f = out[pivots_[i]];
    if (f.is_zero()) continue;
    for (auto it = basis_.entries().lower_bound({i, 0});
         it != basis_.entries().end() && it->first.first == i; ++it)
      out[it->first.second] -= f * it->second;
  }
  return out;
}

bool Subspace::contains(const Vector& v) const { return gralg::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& w) const {
  if (w.ambient_dim() != ambient_dim()) throw DimensionMismatch("ambient dimensions differ");
  if (w.dim() > dim()) return false;
  for (const auto& v : w.basis_vectors())
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::image(const Matrix& m) const {
  if (m.cols() != ambient_dim()) throw DimensionMismatch("map domain differs from ambient dimension");
  return row_space(basis_ * m.transpose());
}

Subspace Subspace::annihilator() const { return kernel_basis(basis_); }

bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  if (a.pivots_ != b.pivots_) return a.pivots_ < b.pivots_;
  const auto ra = a.basis_vectors();
  const auto rb = b.basis_vectors();
  for (std::size_t i = 0; i < ra.size(); ++i)
    for (std::size_t j = 0; j < ra[i].size(); ++j)
      if (ra[i][j] != rb[i][j]) return ra[i][j] < rb[i][j];
  return false;
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  if (!(u.field() == w.field())) throw FieldMismatch();
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("ambient dimensions differ");
  if (w.is_zero()) return u;
  if (u.is_zero()) return w;
  return Subspace::row_space(Matrix::vstack(u.basis_, w.basis_));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& w) {
  if (!(u.field() == w.field())) throw FieldMismatch();
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("ambient dimensions differ");
  return subspace_sum(u.annihilator(), w.annihilator()).annihilator();
}

std::size_t quotient_dim(const Subspace& u, const Subspace& w) {
  if (!u.contains(w)) throw InvalidArgument("quotient_dim requires w to be contained in u");
  return u.dim() - w.dim();
}

void for_each_subspace(std::size_t n, std::size_t k, Field field,
                       const std::function<bool(const Subspace&)>& visit) {
  if (!field.is_finite()) throw Unsupported("subspace enumeration needs a finite field");
  if (k > n) throw InvalidArgument("subspace dimension exceeds ambient dimension");
  const auto p = field.characteristic();
  std::vector<std::size_t> piv(k);
  std::iota(piv.begin(), piv.end(), std::size_t{0});
  while (true) {
    std::vector<bool> is_pivot(n, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = piv[i] + 1; c < n; ++c)
        if (!is_pivot[c]) free.emplace_back(i, c);
    std::vector<std::uint64_t> digits(free.size(), 0);
    while (true) {
      Matrix b(field, k, n);
      for (std::size_t i = 0; i < k; ++i) b.set(i, piv[i], Scalar(field, 1));
      for (std::size_t f = 0; f < free.size(); ++f)
        b.set(free[f].first, free[f].second, Scalar(field, static_cast<long>(digits[f])));
      if (!visit(Subspace::row_space(b))) return;
      // Odometer with the first free entry as the most significant digit.
      std::size_t f = free.size();
      while (f > 0 && digits[f - 1] + 1 == p) digits[--f] = 0;
      if (f == 0) break;
      ++digits[f - 1];
    }
    // Next k-combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
}

std::vector<Subspace> enumerate_subspaces(std::size_t n, std::size_t k, Field field) {
  std::vector<Subspace> out;
  for_each_subspace(n, k, field, [&](const Subspace& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace gralg
