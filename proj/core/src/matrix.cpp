#include "gralg/matrix.hpp"

#include <string>

#include "gralg/errors.hpp"

namespace gralg {

Vector zero_vector(Field field, std::size_t n) { return Vector(n, Scalar(field)); }

bool is_zero(const Vector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_.emplace(Index{i, i}, Scalar(field, 1));
  return m;
}

Matrix Matrix::from_ints(Field field, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  Matrix m(field, rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw DimensionMismatch("ragged matrix literal");
    std::size_t c = 0;
    for (long v : row) m.set(r, c++, Scalar(field, v));
    ++r;
  }
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void Matrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_)
    throw DimensionMismatch("matrix index (" + std::to_string(r) + ", " + std::to_string(c) +
                            ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  check_index(r, c);
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Scalar(field_) : it->second;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  check_index(r, c);
  if (!(v.field() == field_)) throw FieldMismatch();
  if (v.is_zero())
    entries_.erase({r, c});
  else
    entries_.insert_or_assign(Index{r, c}, v);
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& v) {
  check_index(r, c);
  if (!(v.field() == field_)) throw FieldMismatch();
  if (v.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(Index{r, c}, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

Vector Matrix::row(std::size_t r) const {
  Vector v = zero_vector(field_, cols_);
  for (auto it = entries_.lower_bound({r, 0}); it != entries_.end() && it->first.first == r; ++it)
    v[it->first.second] = it->second;
  return v;
}

Vector Matrix::column(std::size_t c) const {
  Vector v = zero_vector(field_, rows_);
  for (const auto& [idx, val] : entries_)
    if (idx.second == c) v[idx.first] = val;
  return v;
}

std::vector<Vector> Matrix::dense_rows() const {
  std::vector<Vector> out(rows_, zero_vector(field_, cols_));
  for (const auto& [idx, val] : entries_) out[idx.first][idx.second] = val;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (const auto& [idx, val] : entries_) t.entries_.emplace(Index{idx.second, idx.first}, val);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (!(field_ == o.field_)) throw FieldMismatch();
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (const auto& [idx, val] : o.entries_) add_to(idx.first, idx.second, val);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (!(field_ == o.field_)) throw FieldMismatch();
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (const auto& [idx, val] : o.entries_) add_to(idx.first, idx.second, -val);
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  if (!(field_ == s.field())) throw FieldMismatch();
  if (s.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [idx, val] : entries_) val *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch();
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product inner dimensions differ");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (const auto& [ia, va] : a.entries_) {
    const auto k = ia.second;
    for (auto it = b.entries_.lower_bound({k, 0}); it != b.entries_.end() && it->first.first == k;
         ++it)
      out.add_to(ia.first, it->first.second, va * it->second);
  }
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("vector length differs from column count");
  Vector out = zero_vector(field_, rows_);
  for (const auto& [idx, val] : entries_) out[idx.first] += val * v[idx.second];
  return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch();
  if (a.cols_ != b.cols_) throw DimensionMismatch("vstack column mismatch");
  Matrix out(a.field_, a.rows_ + b.rows_, a.cols_);
  out.entries_ = a.entries_;
  for (const auto& [idx, val] : b.entries_)
    out.entries_.emplace(Index{idx.first + a.rows_, idx.second}, val);
  return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch();
  if (a.rows_ != b.rows_) throw DimensionMismatch("hstack row mismatch");
  Matrix out(a.field_, a.rows_, a.cols_ + b.cols_);
  out.entries_ = a.entries_;
  for (const auto& [idx, val] : b.entries_)
    out.entries_.emplace(Index{idx.first, idx.second + a.cols_}, val);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw FieldMismatch();
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (const auto& [ia, va] : a.entries())
    for (const auto& [ib, vb] : b.entries())
      out.set(ia.first * b.rows() + ib.first, ia.second * b.cols() + ib.second, va * vb);
  return out;
}

}  // namespace gralg
