#pragma once

// JSON reading and writing for algebras, cochains, flags and reports.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gralg/algebra.hpp"
#include "gralg/hochschild.hpp"
#include "gralg/stability.hpp"

namespace gralg::io {

using json = nlohmann::ordered_json;

inline constexpr const char* algebra_schema = "gralg/algebra/1";
inline constexpr const char* cochain_schema = "gralg/cochain/1";
inline constexpr const char* flags_schema = "gralg/flags/1";
inline constexpr const char* tool_version = "0.1.0";

/// Malformed JSON or a document that does not match its schema. `where` is
/// "line L, column C" for syntax errors and a JSON pointer otherwise.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

json parse_json(std::string_view text);

/// Two-space indented JSON in which any array that fits on one line of
/// about 100 columns is kept on one line. Ends with a newline.
std::string pretty(const json& doc);

struct LoadedAlgebra {
  GradedAlgebra algebra;
  /// Non-fatal remarks, e.g. a constructor whose dims differ from the
  /// declared ones.
  std::vector<std::string> notes;
};

/// `field_override` replaces the file's field before any constant is read.
LoadedAlgebra algebra_from_json(const json& doc, std::optional<Field> field_override = {});
LoadedAlgebra parse_algebra(std::string_view text, std::optional<Field> field_override = {});

/// Always written as explicit structure constants, sorted by (i, j, a, b, c).
json algebra_to_json(const GradedAlgebra& a);
std::string emit_algebra(const GradedAlgebra& a);

json field_to_json(const Field& f);
Field field_from_json(const json& j, const std::string& where);

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Field& f, const json& j, const std::string& where);

/// Entries as [[n_0..n_p], [a_0..a_p], c, "value"] with 1-based indices.
json op_to_json(const MultilinearOp& op);
MultilinearOp op_from_json(const Field& f, const GradedVectorSpace& space, std::size_t p,
                           const json& entries, const std::string& where);
/// A gralg/cochain/1 document for a binary cochain on the algebra's space.
MultilinearOp cochain_from_json(const GradedAlgebra& a, const json& doc);

json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Field& f, std::size_t ambient, const json& j,
                            const std::string& where);

/// {"schema": "gralg/flags/1", "flags": [[subspace, ...], ...]} with
/// subspaces of A_1 given by spanning rows.
std::vector<std::vector<Subspace>> flags_from_json(const GradedAlgebra& a, const json& doc);

json cohomology_to_json(const CohomologyReport& r, bool with_representatives = true);
json weights_to_json(const WeightProfile& w);
json filtration_to_json(const Filtration& f);
Filtration filtration_from_json(const std::shared_ptr<const GradedAlgebra>& a, const json& j);
json verdict_to_json(const StabilityVerdict& v);

struct CertificateCheck {
  bool present = false;
  bool admissible = false;
  bool standard_nontrivial = false;
  std::int64_t reported_pairing = 0;
  std::int64_t recomputed_pairing = 0;
  std::vector<std::int64_t> recomputed_weights;
  bool ok() const {
    return present && admissible && standard_nontrivial && reported_pairing == recomputed_pairing;
  }
};

/// Rebuilds the certificate of a stability result payload and recomputes its
/// weights and pairing.
CertificateCheck recheck_certificate(const GradedAlgebra& a, const json& result);

std::string sha256_hex(std::string_view bytes);

/// Writes to a sibling temporary and renames it into place.
void write_file_atomic(const std::string& path, std::string_view content);
std::string read_file(const std::string& path);

}  // namespace gralg::io
