#include "gralg/stability.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace gralg {

bool validate_parameter(const std::vector<std::int64_t>& theta, const std::vector<std::size_t>& dims) {
  if (theta.size() != dims.size()) return false;
  std::int64_t sum = 0, weighted = 0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const auto d = static_cast<std::int64_t>(dims[i]);
    sum += theta[i] * d;
    weighted += static_cast<std::int64_t>(i + 1) * theta[i] * d;
  }
  return sum < 0 && weighted == 0;
}

StabilityParameter standard_parameter(const std::vector<std::size_t>& dims) {
  const auto q = dims.size();
  if (q == 0 || dims.front() == 0)
    throw Rejected("A_1 = 0: no standard stability parameter exists");
  if (dims.back() == 0)
    throw Rejected("d_q = 0: if θ_q = 0 there are no stable algebras");
  StabilityParameter p{std::vector<std::int64_t>(q, 0)};
  if (q == 1) {
    // Only θ_1 is available and Σ i θ_i d_i = 0 forces θ_1 = 0.
    throw Rejected("q = 1 admits no stability parameter");
  }
  const auto top = static_cast<std::int64_t>(q * dims.back());
  const auto bottom = static_cast<std::int64_t>(dims.front());
  const auto g = std::gcd(top, bottom);
  p.theta.front() = -top / g;
  p.theta.back() = bottom / g;
  return p;
}

bool is_strongly_coprime(const std::vector<std::size_t>& dims) {
  std::size_t g = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) g = std::gcd(g, (i + 1) * dims[i]);
  return g == 1;
}

// ---- Filtration ----------------------------------------------------------

Filtration::Filtration(std::shared_ptr<const GradedAlgebra> algebra, std::vector<DegreeChain> degrees)
    : algebra_(std::move(algebra)), degrees_(std::move(degrees)) {
  const auto& a = *algebra_;
  if (degrees_.size() != a.q()) throw DimensionMismatch("filtration needs one chain per degree");
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    auto& ch = degrees_[i].chain;
    while (!ch.empty() && ch.back().is_zero()) ch.pop_back();
    for (std::size_t k = 0; k < ch.size(); ++k) {
      if (ch[k].ambient_dim() != a.dim(i + 1) || !(ch[k].field() == a.field()))
        throw DimensionMismatch("filtration piece does not live in A_" + std::to_string(i + 1));
      if (k && !ch[k - 1].contains(ch[k]))
        throw InvalidArgument("filtration is not descending in degree " + std::to_string(i + 1));
    }
  }
}

Filtration Filtration::from_levels(std::shared_ptr<const GradedAlgebra> algebra,
                                   const std::vector<GradedSubspace>& levels) {
  std::vector<DegreeChain> degrees(algebra->q());
  for (const auto& lvl : levels) {
    if (lvl.size() != algebra->q()) throw DimensionMismatch("level needs one piece per degree");
    for (std::size_t i = 0; i < lvl.size(); ++i) degrees[i].chain.push_back(lvl[i]);
  }
  return Filtration(std::move(algebra), std::move(degrees));
}

GradedSubspace Filtration::level(std::int64_t k) const {
  GradedSubspace out;
  const auto& a = *algebra_;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    const auto& dc = degrees_[i];
    const auto rel = k - dc.offset;
    if (rel <= 0)
      out.push_back(Subspace::full(a.field(), a.dim(i + 1)));
    else if (rel <= static_cast<std::int64_t>(dc.chain.size()))
      out.push_back(dc.chain[rel - 1]);
    else
      out.emplace_back(a.field(), a.dim(i + 1));
  }
  return out;
}

std::int64_t Filtration::length() const {
  std::int64_t len = 0;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (algebra_->dim(i + 1) == 0) continue;
    len = std::max(len, degrees_[i].offset + static_cast<std::int64_t>(degrees_[i].chain.size()));
  }
  return len;
}

std::vector<GradedSubspace> Filtration::levels() const {
  std::vector<GradedSubspace> out;
  for (std::int64_t k = 1; k <= length(); ++k) out.push_back(level(k));
  return out;
}

bool Filtration::zero_offsets() const {
  return std::all_of(degrees_.begin(), degrees_.end(),
                     [](const DegreeChain& d) { return d.offset == 0; });
}

WeightProfile weight_profile(const Filtration& f) {
  WeightProfile wp;
  const auto& a = f.algebra();
  for (std::size_t i = 0; i < a.q(); ++i) {
    const auto& dc = f.degrees()[i];
    const auto d = static_cast<std::int64_t>(a.dim(i + 1));
    std::int64_t w = dc.offset * d;
    for (const auto& s : dc.chain) w += static_cast<std::int64_t>(s.dim());
    wp.w.push_back(w);
    if (d == 0)
      wp.futaki.emplace_back(std::nullopt);
    else
      wp.futaki.emplace_back(mpq_class(w, static_cast<long>(i + 1) * d));
  }
  for (auto& f : wp.futaki)
    if (f) f->canonicalize();
  return wp;
}

std::int64_t hm_pairing(const StabilityParameter& theta, const WeightProfile& w) {
  if (theta.theta.size() != w.w.size()) throw DimensionMismatch("θ and weights differ in length");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.w.size(); ++i) s += theta.theta[i] * w.w[i];
  return s;
}

std::int64_t hm_pairing(const StabilityParameter& theta, const Filtration& f) {
  return hm_pairing(theta, weight_profile(f));
}

Filtration futaki_equivalence_shift(const Filtration& f, std::int64_t ell) {
  auto degrees = f.degrees();
  for (std::size_t i = 0; i < degrees.size(); ++i)
    degrees[i].offset += ell * static_cast<std::int64_t>(i + 1);
  return Filtration(f.algebra_ptr(), std::move(degrees));
}

// ---- standard families ---------------------------------------------------

Filtration tautological_filtration(const std::shared_ptr<const GradedAlgebra>& a) {
  std::vector<GradedSubspace> levels;
  for (std::size_t k = 1; k <= a->q(); ++k) levels.push_back(tail(*a, k));
  return Filtration::from_levels(a, levels);
}

namespace {

GradedSubspace raw_product(const GradedAlgebra& a, const GradedSubspace& u, const GradedSubspace& w) {
  GradedSubspace out = zero_graded(a);
  for (std::size_t i = 1; i <= a.q(); ++i) {
    if (u[i - 1].is_zero()) continue;
    for (std::size_t j = 1; i + j <= a.q(); ++j) {
      if (w[j - 1].is_zero()) continue;
      out[i + j - 1] = subspace_sum(out[i + j - 1], a.product_space(i, u[i - 1], j, w[j - 1]));
    }
  }
  return out;
}

}  // namespace

Filtration powers_filtration(const std::shared_ptr<const GradedAlgebra>& a) {
  std::vector<GradedSubspace> levels;
  GradedSubspace cur = tail(*a, 1);
  const GradedSubspace base = cur;
  while (!graded_is_zero(cur)) {
    levels.push_back(cur);
    cur = raw_product(*a, cur, base);
  }
  return Filtration::from_levels(a, levels);
}

Filtration admissible_closure(const std::shared_ptr<const GradedAlgebra>& a,
                              const std::vector<Subspace>& flag) {
  const auto& alg = *a;
  const auto r = flag.size();
  for (std::size_t k = 0; k < r; ++k) {
    if (flag[k].ambient_dim() != alg.dim(1)) throw DimensionMismatch("flag pieces must live in A_1");
    if (k && !flag[k - 1].contains(flag[k])) throw InvalidArgument("flag is not descending");
  }
  // Degree-i elements of I^(k) need k ≤ r·i, so K = r·q levels suffice.
  const auto big_k = r * alg.q();
  std::vector<GradedSubspace> ideal(big_k + 1, zero_graded(alg));
  for (std::size_t k = 1; k <= r; ++k) {
    GradedSubspace gens = zero_graded(alg);
    if (alg.q() >= 1) gens[0] = flag[k - 1];
    ideal[k] = ideal_generated_by(a, gens).pieces();
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = big_k; k-- > 1;) {
      auto s = graded_sum(ideal[k], ideal[k + 1]);
      if (!(s == ideal[k])) {
        ideal[k] = std::move(s);
        changed = true;
      }
    }
    for (std::size_t k = 1; k <= big_k; ++k) {
      if (graded_is_zero(ideal[k])) continue;
      for (std::size_t l = 1; k + l <= big_k; ++l) {
        if (graded_is_zero(ideal[l])) continue;
        auto s = graded_sum(ideal[k + l], raw_product(alg, ideal[k], ideal[l]));
        if (!(s == ideal[k + l])) {
          ideal[k + l] = std::move(s);
          changed = true;
        }
      }
    }
  }
  ideal.erase(ideal.begin());
  return Filtration::from_levels(a, ideal);
}

Filtration admissible_closure(const GradedAlgebra& a, const std::vector<Subspace>& flag) {
  return admissible_closure(std::make_shared<const GradedAlgebra>(a), flag);
}

bool is_admissible(const Filtration& f) {
  if (!f.zero_offsets()) return false;
  const auto& a = f.algebra();
  const auto levels = f.levels();
  const auto len = levels.size();
  auto level = [&](std::size_t k) { return k <= len ? levels[k - 1] : zero_graded(a); };
  for (std::size_t k = 1; k <= len; ++k) {
    if (!is_two_sided_ideal(a, levels[k - 1])) return false;
    if (!graded_contains(levels[k - 1], level(k + 1))) return false;
    for (std::size_t l = 1; l <= len; ++l)
      if (!graded_contains(level(k + l), raw_product(a, levels[k - 1], levels[l - 1]))) return false;
  }
  return true;
}

bool is_standard_nontrivial(const Filtration& f) {
  const auto& a = f.algebra();
  if (graded_is_zero(f.level(1))) return false;
  const auto last = std::max<std::int64_t>(static_cast<std::int64_t>(a.q()), f.length());
  for (std::int64_t k = 1; k <= last; ++k)
    if (!graded_contains(f.level(k), tail(a, static_cast<std::size_t>(k)))) return true;
  return false;
}

// ---- search --------------------------------------------------------------

std::string to_string(Strategy s) { return s == Strategy::Exhaustive ? "exhaustive" : "heuristic"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Unstable:
      return "UNSTABLE";
    case Verdict::StrictlySemistableWitness:
      return "STRICTLY-SEMISTABLE-WITNESS";
    case Verdict::NoDestabilizerFound:
      break;
  }
  return "NO-DESTABILIZER-FOUND";
}

namespace {

class Search {
 public:
  Search(std::shared_ptr<const GradedAlgebra> a, const StabilityParameter& theta,
         StabilityVerdict& out)
      : a_(std::move(a)), theta_(theta), out_(out) {}

  void consider(std::string origin, std::vector<Subspace> flag, Filtration f) {
    ++out_.candidates_examined;
    if (!is_standard_nontrivial(f)) return;
    ++out_.standard_candidates;
    auto w = weight_profile(f);
    const auto pairing = hm_pairing(theta_, w);
    if (out_.certificate && out_.certificate->pairing <= pairing) return;
    out_.certificate = Candidate{std::move(origin), std::move(flag), std::move(f), std::move(w), pairing};
  }

  void flag(const std::string& origin, const std::vector<Subspace>& flag) {
    consider(origin, flag, admissible_closure(a_, flag));
  }

  const std::shared_ptr<const GradedAlgebra>& algebra() const { return a_; }

 private:
  std::shared_ptr<const GradedAlgebra> a_;
  const StabilityParameter& theta_;
  StabilityVerdict& out_;
};

// Nonincreasing dimension profiles of the given length with entries in
// [1, top], lexicographic order.
void profiles(std::size_t length, std::size_t top, std::vector<std::size_t>& cur,
              const std::function<void(const std::vector<std::size_t>&)>& emit) {
  if (cur.size() == length) {
    emit(cur);
    return;
  }
  const auto hi = cur.empty() ? top : cur.back();
  for (std::size_t e = 1; e <= hi; ++e) {
    cur.push_back(e);
    profiles(length, top, cur, emit);
    cur.pop_back();
  }
}

Subspace embed(const Subspace& coords, const Subspace& in) {
  if (coords.is_zero()) return Subspace(in.field(), in.ambient_dim());
  return Subspace::row_space(coords.basis() * in.basis());
}

void flags_with_profile(const Field& field, const Subspace& ambient,
                        const std::vector<std::size_t>& profile, std::vector<Subspace>& cur,
                        const std::function<void(const std::vector<Subspace>&)>& emit) {
  if (cur.size() == profile.size()) {
    emit(cur);
    return;
  }
  const Subspace parent = cur.empty() ? ambient : cur.back();  // copy: cur grows below
  const auto e = profile[cur.size()];
  if (e == parent.dim() && !cur.empty()) {
    cur.push_back(parent);
    flags_with_profile(field, ambient, profile, cur, emit);
    cur.pop_back();
    return;
  }
  for_each_subspace(parent.dim(), e, field, [&](const Subspace& s) {
    cur.push_back(embed(s, parent));
    flags_with_profile(field, ambient, profile, cur, emit);
    cur.pop_back();
    return true;
  });
}

Scalar random_scalar(const Field& field, std::mt19937_64& rng) {
  if (field.is_finite()) {
    std::uniform_int_distribution<std::uint64_t> d(0, field.characteristic() - 1);
    return Scalar(field, static_cast<long>(d(rng)));
  }
  std::uniform_int_distribution<long> d(-3, 3);
  return Scalar(field, d(rng));
}

// Random e-dimensional subspace of `parent`.
Subspace random_subspace(const Field& field, const Subspace& parent, std::size_t e,
                         std::mt19937_64& rng) {
  while (true) {
    Matrix coeffs(field, e, parent.dim());
    for (std::size_t i = 0; i < e; ++i)
      for (std::size_t j = 0; j < parent.dim(); ++j) coeffs.set(i, j, random_scalar(field, rng));
    auto s = Subspace::row_space(coeffs * parent.basis());
    if (s.dim() == e) return s;
  }
}

}  // namespace

StabilityVerdict check_q_stability(const GradedAlgebra& a, const StabilityParameter& theta,
                                   const SearchOptions& options) {
  if (!validate_parameter(theta.theta, a.space().dims()))
    throw InvalidArgument("θ is not a stability parameter for dims of this algebra");
  if (options.strategy == Strategy::Exhaustive && !a.field().is_finite())
    throw Unsupported("exhaustive search needs a finite field; use the heuristic strategy over Q");
  const auto d1 = a.dim(1);
  if (d1 == 0) throw Rejected("not generated in degree 1: A_1 = 0 leaves no candidate flags");

  StabilityVerdict out;
  out.field = a.field();
  out.theta = theta;
  out.strategy = options.strategy;
  out.seed = options.seed;
  out.generated_in_degree_one = is_generated_in_degree_one(a);
  std::size_t max_d = 0;
  for (auto d : a.space().dims()) max_d = std::max(max_d, d);
  out.r_max = options.r_max ? options.r_max : a.q() * max_d;

  auto ptr = std::make_shared<const GradedAlgebra>(a);
  Search search(ptr, theta, out);
  search.consider("powers", {}, powers_filtration(ptr));

  const Field field = a.field();
  const auto a1 = Subspace::full(field, d1);
  if (d1 >= 2) {
    if (options.strategy == Strategy::Exhaustive) {
      for (std::size_t len = 1; len <= out.r_max; ++len) {
        std::vector<std::size_t> prof;
        profiles(len, d1 - 1, prof, [&](const std::vector<std::size_t>& p) {
          std::vector<Subspace> cur;
          flags_with_profile(field, a1, p, cur,
                             [&](const std::vector<Subspace>& f) { search.flag("flag", f); });
        });
      }
    } else {
      // Coordinate subspaces, each repeated up to r_max times, then the
      // standard coordinate flag.
      const std::size_t bits = std::min<std::size_t>(d1, 12);
      for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << bits); ++mask) {
        std::vector<std::size_t> axes;
        for (std::size_t b = 0; b < bits; ++b)
          if (mask >> b & 1) axes.push_back(b);
        const auto s = Subspace::coordinate(field, d1, axes);
        for (std::size_t m = 1; m <= out.r_max; ++m)
          search.flag("coordinate", std::vector<Subspace>(m, s));
      }
      std::vector<Subspace> standard;
      for (std::size_t e = d1 - 1; e >= 1; --e) {
        std::vector<std::size_t> axes(e);
        std::iota(axes.begin(), axes.end(), std::size_t{0});
        standard.push_back(Subspace::coordinate(field, d1, axes));
      }
      if (standard.size() <= out.r_max) search.flag("coordinate", standard);

      std::mt19937_64 rng(options.seed);
      for (std::size_t s = 0; s < options.random_samples; ++s) {
        std::uniform_int_distribution<std::size_t> len_d(1, out.r_max);
        const auto len = len_d(rng);
        std::vector<Subspace> f;
        Subspace parent = a1;
        for (std::size_t k = 0; k < len; ++k) {
          const auto hi = k == 0 ? d1 - 1 : parent.dim();
          std::uniform_int_distribution<std::size_t> dim_d(1, hi);
          parent = random_subspace(field, parent, dim_d(rng), rng);
          f.push_back(parent);
        }
        search.flag("random", f);
      }
    }
  }
  for (const auto& f : options.user_flags) search.flag("user", f);

  if (!out.certificate)
    out.verdict = Verdict::NoDestabilizerFound;
  else if (out.certificate->pairing < 0)
    out.verdict = Verdict::Unstable;
  else if (out.certificate->pairing == 0)
    out.verdict = Verdict::StrictlySemistableWitness;
  else
    out.verdict = Verdict::NoDestabilizerFound;
  return out;
}

}  // namespace gralg
