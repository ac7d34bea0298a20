#include "gralg/field.hpp"

#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>

#include "gralg/errors.hpp"

namespace gralg {

std::string to_string(const WitnessTriple& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << ", ";
    os << "e^" << w[k].degree << "_" << w[k].index;
  }
  os << ')';
  return os.str();
}

NotAssociative::NotAssociative(WitnessTriple witness)
    : Error("product is not associative; witness " + to_string(witness)),
      witness_(witness) {}

NotCocycle::NotCocycle(WitnessTriple witness)
    : Error("cochain violates the cocycle identity; witness " + to_string(witness)),
      witness_(witness) {}

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class r = v % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) acc = acc * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return acc;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw InvalidArgument("field characteristic must be a prime below 2^31, got " +
                          std::to_string(p));
  return Field(Kind::Prime, p);
}

Field Field::parse(std::string_view text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "rational" || t == "q" || t == "rationals") return rational();
  std::string_view digits;
  if (t.rfind("gf(", 0) == 0 && t.back() == ')') {
    digits = std::string_view(t).substr(3, t.size() - 4);
  } else if (t.rfind("gf:", 0) == 0) {
    digits = std::string_view(t).substr(3);
  } else if (t.rfind("gf", 0) == 0) {
    digits = std::string_view(t).substr(2);
  } else {
    throw InvalidArgument("unknown field '" + std::string(text) + "'");
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
    throw InvalidArgument("unknown field '" + std::string(text) + "'");
  return prime(p);
}

std::string Field::tag() const {
  return is_rational() ? std::string("rational") : "gf(" + std::to_string(p_) + ")";
}

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field_.is_rational())
    q_ = value;
  else
    r_ = reduce(mpz_class(value), field_.characteristic());
}

Scalar::Scalar(Field field, const mpz_class& value) : field_(field) {
  if (field_.is_rational())
    q_ = value;
  else
    r_ = reduce(value, field_.characteristic());
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field_.is_rational()) {
    q_ = value;
    q_.canonicalize();
    return;
  }
  const auto p = field_.characteristic();
  const auto den = reduce(value.get_den(), p);
  if (den == 0)
    throw InvalidArgument("denominator vanishes in " + field_.tag());
  r_ = reduce(value.get_num(), p) * pow_mod(den, p - 2, p) % p;
}

Scalar Scalar::parse(Field field, std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  s = s.substr(b);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  mpq_class v;
  if (s.empty() || v.set_str(s, 10) != 0)
    throw InvalidArgument("malformed scalar '" + std::string(text) + "'");
  if (v.get_den() == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  v.canonicalize();
  return Scalar(field, v);
}

bool Scalar::is_zero() const noexcept {
  return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const noexcept {
  return field_.is_rational() ? q_ == 1 : r_ == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero");
  Scalar out(field_);
  if (field_.is_rational())
    out.q_ = 1 / q_;
  else
    out.r_ = pow_mod(r_, field_.characteristic() - 2, field_.characteristic());
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out(field_);
  if (field_.is_rational())
    out.q_ = -q_;
  else
    out.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational())
    q_ += o.q_;
  else
    r_ = (r_ + o.r_) % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational())
    q_ -= o.q_;
  else
    r_ = (r_ + field_.characteristic() - o.r_) % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    r_ = r_ * o.r_ % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (a.field_.is_rational()) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  return a.r_ <=> b.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace gralg
