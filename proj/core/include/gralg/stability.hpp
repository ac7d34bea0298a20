#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gralg/algebra.hpp"
#include "gralg/errors.hpp"

namespace gralg {

/// Raised when the mathematics rules an input out (rather than a usage error):
/// no stability parameter exists, or A_1 = 0 leaves nothing to test.
class Rejected : public Error {
 public:
  using Error::Error;
};

/// Integer vector θ = (θ_1, ..., θ_q).
struct StabilityParameter {
  std::vector<std::int64_t> theta;
  friend bool operator==(const StabilityParameter&, const StabilityParameter&) = default;
};

/// Σ θ_i d_i < 0 and Σ i θ_i d_i = 0.
bool validate_parameter(const std::vector<std::int64_t>& theta, const std::vector<std::size_t>& dims);

/// θ_1 = −q d_q / g, θ_q = d_1 / g with g = gcd(q d_q, d_1), all other
/// entries zero. Throws Rejected when d_1 = 0 or d_q = 0.
StabilityParameter standard_parameter(const std::vector<std::size_t>& dims);

/// gcd(d_1, 2 d_2, ..., q d_q) = 1.
bool is_strongly_coprime(const std::vector<std::size_t>& dims);

/// A descending ℤ-filtration of each graded piece, stored per degree as an
/// offset o_i and a chain C_i[0] ⊇ C_i[1] ⊇ ...: V^(k)_i is V_i for
/// k ≤ o_i, C_i[k − o_i − 1] while that exists, and 0 afterwards.
/// Offsets are zero for filtrations built from levels; shifting to an
/// equivalent test configuration moves them.
class Filtration {
 public:
  struct DegreeChain {
    std::int64_t offset = 0;
    std::vector<Subspace> chain;
    friend bool operator==(const DegreeChain&, const DegreeChain&) = default;
  };

  Filtration(std::shared_ptr<const GradedAlgebra> algebra, std::vector<DegreeChain> degrees);
  /// levels[k - 1] = V^(k) for k = 1..r, zero afterwards.
  static Filtration from_levels(std::shared_ptr<const GradedAlgebra> algebra,
                                const std::vector<GradedSubspace>& levels);

  const GradedAlgebra& algebra() const noexcept { return *algebra_; }
  const std::shared_ptr<const GradedAlgebra>& algebra_ptr() const noexcept { return algebra_; }
  const std::vector<DegreeChain>& degrees() const noexcept { return degrees_; }

  GradedSubspace level(std::int64_t k) const;
  /// Largest k with V^(k) ≠ 0 (0 when V^(1) = 0 and offsets are zero).
  std::int64_t length() const;
  /// V^(1), ..., V^(length()).
  std::vector<GradedSubspace> levels() const;
  bool zero_offsets() const;

  friend bool operator==(const Filtration& a, const Filtration& b) {
    return *a.algebra_ == *b.algebra_ && a.degrees_ == b.degrees_;
  }

 private:
  std::shared_ptr<const GradedAlgebra> algebra_;
  std::vector<DegreeChain> degrees_;
};

struct WeightProfile {
  std::vector<std::int64_t> w;                  // w_i, index i − 1
  std::vector<std::optional<mpq_class>> futaki;  // F(i) = w_i / (i d_i); empty when d_i = 0
};

/// w_i = Σ_m m dim gr^m V_i, which equals Σ_{k≥1} dim V^(k)_i when the
/// offsets are zero.
WeightProfile weight_profile(const Filtration& f);

/// V^(k) = A_{≥k}.
Filtration tautological_filtration(const std::shared_ptr<const GradedAlgebra>& a);
/// I^(k) = (A_{≥1})^k.
Filtration powers_filtration(const std::shared_ptr<const GradedAlgebra>& a);

/// Smallest admissible family with I^(k)_1 ⊇ V^(k) for a descending flag of
/// subspaces of A_1.
Filtration admissible_closure(const std::shared_ptr<const GradedAlgebra>& a,
                              const std::vector<Subspace>& flag);
Filtration admissible_closure(const GradedAlgebra& a, const std::vector<Subspace>& flag);

/// Two-sided ideals, descending, I^(k) I^(l) ⊆ I^(k+l), eventually zero.
bool is_admissible(const Filtration& f);

/// V^(1) ≠ 0 and V^(k) ⊉ A_{≥k} for some k.
bool is_standard_nontrivial(const Filtration& f);

/// Σ θ_i w_i.
std::int64_t hm_pairing(const StabilityParameter& theta, const Filtration& f);
std::int64_t hm_pairing(const StabilityParameter& theta, const WeightProfile& w);

/// The equivalent filtration with upper grading shifted by ℓ·(degree):
/// w'_i = w_i + ℓ i d_i.
Filtration futaki_equivalence_shift(const Filtration& f, std::int64_t ell);

enum class Strategy { Exhaustive, Heuristic };
enum class Verdict { Unstable, StrictlySemistableWitness, NoDestabilizerFound };

std::string to_string(Strategy s);
std::string to_string(Verdict v);

struct SearchOptions {
  Strategy strategy = Strategy::Exhaustive;
  /// Maximum flag length; 0 selects q · max(d_i).
  std::size_t r_max = 0;
  std::uint64_t seed = 0;
  /// Random flags tried by the heuristic strategy.
  std::size_t random_samples = 64;
  /// Extra flags of A_1 tried by either strategy.
  std::vector<std::vector<Subspace>> user_flags;
};

struct Candidate {
  std::string origin;          // "powers", "flag", "coordinate", "random" or "user"
  std::vector<Subspace> flag;  // empty for the powers family
  Filtration filtration;
  WeightProfile weights;
  std::int64_t pairing = 0;
};

struct StabilityVerdict {
  Verdict verdict = Verdict::NoDestabilizerFound;
  std::optional<Candidate> certificate;
  Field field = Field::rational();
  StabilityParameter theta;
  Strategy strategy = Strategy::Exhaustive;
  std::size_t r_max = 0;
  std::uint64_t seed = 0;
  std::size_t candidates_examined = 0;
  std::size_t standard_candidates = 0;
  bool generated_in_degree_one = false;
};

/// Bounded search for destabilizing test configurations. Candidates are the
/// powers-of-A_{≥1} family and admissible closures of flags
/// A_1 ⊋ V^(1) ⊇ ... ⊇ V^(r) ⊋ 0 (r ≤ r_max); only standard nontrivial ones
/// are paired. The lowest pairing wins, ties going to the earliest candidate.
/// Throws InvalidArgument for an invalid θ, Unsupported for an exhaustive
/// search over Q and Rejected when A_1 = 0.
StabilityVerdict check_q_stability(const GradedAlgebra& a, const StabilityParameter& theta,
                                   const SearchOptions& options = {});

}  // namespace gralg
