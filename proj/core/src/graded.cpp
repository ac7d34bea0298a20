#include "gralg/graded.hpp"

#include <numeric>
#include <string>

#include "gralg/errors.hpp"

namespace gralg {

std::size_t GradedVectorSpace::total_dim() const noexcept {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

GradedVectorSpace GradedVectorSpace::truncate(std::size_t q) const {
  if (q > dims_.size()) throw InvalidArgument("cannot truncate above the current bound");
  return GradedVectorSpace(std::vector<std::size_t>(dims_.begin(), dims_.begin() + q));
}

std::size_t target_degree(const DegreeComposition& c) {
  return std::accumulate(c.begin(), c.end(), std::size_t{0});
}

namespace {

void compose(std::size_t n, std::size_t parts, DegreeComposition& cur,
             std::vector<DegreeComposition>& out) {
  if (parts == 0) {
    if (n == 0) out.push_back(cur);
    return;
  }
  for (std::size_t first = 1; first + (parts - 1) <= n; ++first) {
    cur.push_back(first);
    compose(n - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<DegreeComposition> compositions_of(std::size_t n, std::size_t parts) {
  std::vector<DegreeComposition> out;
  if (parts == 0) return out;
  DegreeComposition cur;
  compose(n, parts, cur, out);
  return out;
}

std::vector<DegreeComposition> compositions_up_to(std::size_t q, std::size_t parts) {
  std::vector<DegreeComposition> out;
  for (std::size_t n = parts; n <= q; ++n) {
    auto c = compositions_of(n, parts);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

TensorShape::TensorShape(const GradedVectorSpace& space, const DegreeComposition& c) {
  radices_.reserve(c.size());
  for (auto n : c) radices_.push_back(space.dim(n));
}

std::size_t TensorShape::size() const noexcept {
  std::size_t s = 1;
  for (auto r : radices_) s *= r;
  return s;
}

std::size_t TensorShape::encode(const std::vector<std::size_t>& digits) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < radices_.size(); ++k) idx = idx * radices_[k] + digits[k];
  return idx;
}

std::vector<std::size_t> TensorShape::decode(std::size_t index) const {
  std::vector<std::size_t> digits(radices_.size());
  for (std::size_t k = radices_.size(); k-- > 0;) {
    digits[k] = index % radices_[k];
    index /= radices_[k];
  }
  return digits;
}

std::size_t dim_L(const GradedVectorSpace& space, std::size_t p, std::size_t n) {
  std::size_t total = 0;
  if (n > space.q()) return 0;
  for (const auto& c : compositions_of(n, p + 1))
    total += TensorShape(space, c).size() * space.dim(n);
  return total;
}

std::size_t dim_L(const GradedVectorSpace& space, std::size_t p) {
  std::size_t total = 0;
  for (std::size_t n = 1; n <= space.q(); ++n) total += dim_L(space, p, n);
  return total;
}

// ---- MultilinearOp -------------------------------------------------------

MultilinearOp::MultilinearOp(Field field, GradedVectorSpace space, std::size_t arity_index)
    : field_(field), space_(std::move(space)), p_(arity_index) {}

void MultilinearOp::check_block(const DegreeComposition& c) const {
  if (c.size() != p_ + 1)
    throw DimensionMismatch("composition has " + std::to_string(c.size()) + " parts, expected " +
                            std::to_string(p_ + 1));
  for (auto n : c)
    if (n == 0) throw DimensionMismatch("composition parts must be positive");
}

Matrix MultilinearOp::block(const DegreeComposition& c) const {
  check_block(c);
  auto it = blocks_.find(c);
  if (it != blocks_.end()) return it->second;
  return Matrix(field_, space_.dim(target_degree(c)), TensorShape(space_, c).size());
}

void MultilinearOp::set_block(const DegreeComposition& c, Matrix m) {
  check_block(c);
  if (!(m.field() == field_)) throw FieldMismatch();
  const auto rows = space_.dim(target_degree(c));
  const auto cols = TensorShape(space_, c).size();
  if (target_degree(c) > space_.q()) {
    if (!m.is_zero()) throw DimensionMismatch("nonzero block targets a degree above the truncation bound");
    return;
  }
  if (m.rows() != rows || m.cols() != cols)
    throw DimensionMismatch("block shape " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " differs from expected " +
                            std::to_string(rows) + "x" + std::to_string(cols));
  if (m.is_zero())
    blocks_.erase(c);
  else
    blocks_.insert_or_assign(c, std::move(m));
}

Scalar MultilinearOp::entry(const DegreeComposition& c, std::size_t row, std::size_t col) const {
  check_block(c);
  auto it = blocks_.find(c);
  if (it == blocks_.end()) {
    if (row >= space_.dim(target_degree(c)) || col >= TensorShape(space_, c).size())
      throw DimensionMismatch("entry index outside block");
    return Scalar(field_);
  }
  return it->second.at(row, col);
}

void MultilinearOp::set_entry(const DegreeComposition& c, std::size_t row, std::size_t col,
                              const Scalar& v) {
  Matrix b = block(c);
  b.set(row, col, v);
  set_block(c, std::move(b));
}

void MultilinearOp::add_entry(const DegreeComposition& c, std::size_t row, std::size_t col,
                              const Scalar& v) {
  if (v.is_zero()) return;
  check_block(c);
  auto it = blocks_.find(c);
  if (it == blocks_.end()) {
    set_entry(c, row, col, v);
    return;
  }
  it->second.add_to(row, col, v);
  if (it->second.is_zero()) blocks_.erase(it);
}

Vector MultilinearOp::coordinates(std::size_t n) const {
  Vector out;
  out.reserve(dim_L(space_, p_, n));
  for (const auto& c : compositions_of(n, p_ + 1)) {
    if (n > space_.q()) break;
    const auto b = block(c);
    const auto rows = b.dense_rows();
    for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

void MultilinearOp::set_coordinates(std::size_t n, const Vector& coords) {
  if (coords.size() != dim_L(space_, p_, n))
    throw DimensionMismatch("coordinate vector length differs from the block dimension");
  std::size_t pos = 0;
  if (n > space_.q()) return;
  for (const auto& c : compositions_of(n, p_ + 1)) {
    const auto rows = space_.dim(n);
    const auto cols = TensorShape(space_, c).size();
    Matrix m(field_, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t k = 0; k < cols; ++k) m.set(r, k, coords[pos++]);
    set_block(c, std::move(m));
  }
}

MultilinearOp MultilinearOp::component(std::size_t n) const {
  MultilinearOp out(field_, space_, p_);
  for (const auto& [c, m] : blocks_)
    if (target_degree(c) == n) out.blocks_.emplace(c, m);
  return out;
}

void MultilinearOp::require_compatible(const MultilinearOp& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch();
  if (!(space_ == o.space_)) throw DimensionMismatch("operations live on different spaces");
  if (p_ != o.p_) throw DimensionMismatch("operations have different arities");
}

MultilinearOp& MultilinearOp::operator+=(const MultilinearOp& o) {
  require_compatible(o);
  for (const auto& [c, m] : o.blocks_) {
    auto it = blocks_.find(c);
    if (it == blocks_.end()) {
      blocks_.emplace(c, m);
      continue;
    }
    it->second += m;
    if (it->second.is_zero()) blocks_.erase(it);
  }
  return *this;
}

MultilinearOp& MultilinearOp::operator-=(const MultilinearOp& o) {
  return *this += -o;
}

MultilinearOp& MultilinearOp::operator*=(const Scalar& s) {
  if (!(s.field() == field_)) throw FieldMismatch();
  if (s.is_zero()) {
    blocks_.clear();
    return *this;
  }
  for (auto& [c, m] : blocks_) m *= s;
  return *this;
}

MultilinearOp MultilinearOp::operator-() const {
  MultilinearOp out = *this;
  for (auto& [c, m] : out.blocks_) m *= Scalar(field_, -1);
  return out;
}

bool operator==(const MultilinearOp& a, const MultilinearOp& b) {
  return a.field_ == b.field_ && a.space_ == b.space_ && a.p_ == b.p_ && a.blocks_ == b.blocks_;
}

// ---- circle and bracket --------------------------------------------------

namespace {

using RowIndex = std::vector<std::vector<std::pair<std::size_t, Scalar>>>;

RowIndex index_by_row(const Matrix& m) {
  RowIndex idx(m.rows());
  for (const auto& [ij, v] : m.entries()) idx[ij.first].emplace_back(ij.second, v);
  return idx;
}

void require_same_space(const MultilinearOp& a, const MultilinearOp& b) {
  if (!(a.field() == b.field())) throw FieldMismatch();
  if (!(a.space() == b.space())) throw DimensionMismatch("operations live on different spaces");
}

}  // namespace

MultilinearOp circle(const MultilinearOp& mu, const MultilinearOp& nu) {
  require_same_space(mu, nu);
  const auto& space = mu.space();
  const auto p = mu.arity_index();
  const auto q = nu.arity_index();
  const Field field = mu.field();
  MultilinearOp out(field, space, p + q);

  // Group ν's blocks by target degree, each with a row index.
  std::map<std::size_t, std::vector<std::pair<const DegreeComposition*, RowIndex>>> inner;
  for (const auto& [c, m] : nu.blocks()) inner[target_degree(c)].emplace_back(&c, index_by_row(m));

  std::map<DegreeComposition, Matrix> acc;
  for (const auto& [mc, mm] : mu.blocks()) {
    const TensorShape mshape(space, mc);
    for (std::size_t i = 0; i <= p; ++i) {
      auto hit = inner.find(mc[i]);
      if (hit == inner.end()) continue;
      const Scalar sign(field, (i * q) % 2 == 0 ? 1 : -1);
      for (const auto& [nc, nrows] : hit->second) {
        DegreeComposition rc(mc.begin(), mc.begin() + i);
        rc.insert(rc.end(), nc->begin(), nc->end());
        rc.insert(rc.end(), mc.begin() + i + 1, mc.end());
        const TensorShape rshape(space, rc);
        auto [slot, fresh] = acc.try_emplace(rc, field, space.dim(target_degree(rc)), rshape.size());
        Matrix& target = slot->second;
        const TensorShape nshape(space, *nc);
        for (const auto& [rowcol, mval] : mm.entries()) {
          const auto mdigits = mshape.decode(rowcol.second);
          const auto& nentries = nrows[mdigits[i]];
          if (nentries.empty()) continue;
          const Scalar coeff = sign * mval;
          for (const auto& [ncol, nval] : nentries) {
            const auto ndigits = nshape.decode(ncol);
            std::vector<std::size_t> digits(mdigits.begin(), mdigits.begin() + i);
            digits.insert(digits.end(), ndigits.begin(), ndigits.end());
            digits.insert(digits.end(), mdigits.begin() + i + 1, mdigits.end());
            target.add_to(rowcol.first, rshape.encode(digits), coeff * nval);
          }
        }
      }
    }
  }
  for (auto& [c, m] : acc) out.set_block(c, std::move(m));
  return out;
}

MultilinearOp bracket(const MultilinearOp& mu, const MultilinearOp& nu) {
  require_same_space(mu, nu);
  const auto parity = (mu.arity_index() * nu.arity_index()) % 2;
  MultilinearOp out = circle(mu, nu);
  if (parity == 0)
    out -= circle(nu, mu);
  else
    out += circle(nu, mu);
  return out;
}

TautologicalGamma tautological_gamma(Field field, const GradedVectorSpace& space) {
  TautologicalGamma g{MultilinearOp(field, space, 0), false};
  for (std::size_t i = 1; i <= space.q(); ++i)
    g.op.set_block({i}, Matrix::identity(field, space.dim(i)) * Scalar(field, static_cast<long>(i)));
  g.degrees_collapse = field.is_finite() && field.characteristic() <= space.q();
  return g;
}

// ---- gauge group ---------------------------------------------------------

GaugeElement::GaugeElement(Field field, GradedVectorSpace space, std::vector<Matrix> components)
    : field_(field), space_(std::move(space)), components_(std::move(components)) {
  if (components_.size() != space_.q())
    throw InvalidArgument("gauge element needs one component per degree");
  inverses_.reserve(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto d = space_.dim(i + 1);
    const auto& g = components_[i];
    if (!(g.field() == field_)) throw FieldMismatch();
    if (g.rows() != d || g.cols() != d)
      throw InvalidArgument("gauge component in degree " + std::to_string(i + 1) +
                            " must be square of size " + std::to_string(d));
    try {
      inverses_.push_back(inverse(g));
    } catch (const InvalidArgument&) {
      throw InvalidArgument("gauge component in degree " + std::to_string(i + 1) +
                            " is not invertible");
    }
  }
}

GaugeElement GaugeElement::identity(Field field, const GradedVectorSpace& space) {
  std::vector<Matrix> comps;
  for (std::size_t i = 1; i <= space.q(); ++i) comps.push_back(Matrix::identity(field, space.dim(i)));
  return GaugeElement(field, space, std::move(comps));
}

GaugeElement GaugeElement::tautological(Field field, const GradedVectorSpace& space,
                                        const Scalar& t) {
  std::vector<Matrix> comps;
  Scalar power(field, 1);
  for (std::size_t i = 1; i <= space.q(); ++i) {
    power *= t;
    comps.push_back(Matrix::identity(field, space.dim(i)) * power);
  }
  return GaugeElement(field, space, std::move(comps));
}

GaugeElement operator*(const GaugeElement& g, const GaugeElement& h) {
  if (!(g.field_ == h.field_)) throw FieldMismatch();
  if (!(g.space_ == h.space_)) throw DimensionMismatch("gauge elements on different spaces");
  std::vector<Matrix> comps;
  for (std::size_t i = 0; i < g.components_.size(); ++i)
    comps.push_back(g.components_[i] * h.components_[i]);
  return GaugeElement(g.field_, g.space_, std::move(comps));
}

MultilinearOp gauge_act(const GaugeElement& g, const MultilinearOp& phi) {
  if (!(g.field() == phi.field())) throw FieldMismatch();
  if (!(g.space() == phi.space())) throw DimensionMismatch("gauge element and operation differ in space");
  MultilinearOp out(phi.field(), phi.space(), phi.arity_index());
  for (const auto& [c, m] : phi.blocks()) {
    Matrix right = g.inverse_component(c.front());
    for (std::size_t k = 1; k < c.size(); ++k) right = kron(right, g.inverse_component(c[k]));
    out.set_block(c, g.component(target_degree(c)) * m * right);
  }
  return out;
}

}  // namespace gralg
