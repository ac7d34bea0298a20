#include "gralg_io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace gralg::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where.empty() ? "/" : where, what);
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t to_count(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) fail(where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

std::size_t to_positive(const json& j, const std::string& where) {
  const auto v = to_count(j, where);
  if (v == 0) fail(where, "expected a positive integer");
  return v;
}

std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }
std::string at(const std::string& where, std::string_view key) { return where + "/" + std::string(key); }

std::vector<std::size_t> dims_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "dims must be a nonempty array");
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < j.size(); ++i) dims.push_back(to_count(j[i], at(where, i)));
  return dims;
}

GradedAlgebra build_constructor(const Field& field, const json& g, std::size_t q,
                                const std::string& where) {
  const auto& kind_j = member(g, "constructor", where);
  if (!kind_j.is_string()) fail(at(where, "constructor"), "expected a string");
  const auto kind = kind_j.get<std::string>();
  if (kind == "polynomial")
    return polynomial_algebra(to_positive(member(g, "variables", where), at(where, "variables")), q, field);
  if (kind == "free")
    return free_algebra(to_positive(member(g, "generators", where), at(where, "generators")), q, field);
  if (kind == "skew") {
    const auto lambda = scalar_from_json(field, member(g, "lambda", where), at(where, "lambda"));
    return skew_plane(lambda, q);
  }
  if (kind == "quotient") {
    const auto base = build_constructor(field, member(g, "base", where), q, at(where, "base"));
    const auto& rels = member(g, "relations", where);
    if (!rels.is_array()) fail(at(where, "relations"), "expected an array");
    std::vector<HomogeneousElement> relations;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      const auto w = at(at(where, "relations"), i);
      HomogeneousElement r;
      r.degree = to_positive(member(rels[i], "degree", w), at(w, "degree"));
      if (r.degree > q) fail(at(w, "degree"), "relation degree exceeds q");
      const auto& coords = member(rels[i], "coords", w);
      if (!coords.is_array() || coords.size() != base.dim(r.degree))
        fail(at(w, "coords"), "expected " + std::to_string(base.dim(r.degree)) + " coordinates");
      for (std::size_t k = 0; k < coords.size(); ++k)
        r.coords.push_back(scalar_from_json(field, coords[k], at(at(w, "coords"), k)));
      relations.push_back(std::move(r));
    }
    return quotient(base, relations);
  }
  fail(at(where, "constructor"), "unknown constructor \"" + kind + "\"");
}

BasisLabels labels_from_json(const json& j, const std::vector<std::size_t>& dims) {
  if (!j.is_array() || j.size() != dims.size()) fail("/labels", "expected one label list per degree");
  BasisLabels labels;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != dims[i])
      fail(at("/labels", i), "expected " + std::to_string(dims[i]) + " labels");
    std::vector<std::string> names;
    for (std::size_t k = 0; k < j[i].size(); ++k) {
      if (!j[i][k].is_string()) fail(at(at("/labels", i), k), "expected a string");
      names.push_back(j[i][k].get<std::string>());
    }
    labels.push_back(std::move(names));
  }
  return labels;
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 0;
    const auto end = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 0;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col + 1), msg);
  }
}

namespace {

void pretty_into(std::string& out, const json& j, std::size_t indent) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      out += pad + json(it.key()).dump() + ": ";
      pretty_into(out, it.value(), indent + 2);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
    return;
  }
  if (j.is_array() && !j.empty()) {
    const auto flat = j.dump();
    if (flat.size() + indent <= 100) {
      out += flat;
      return;
    }
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      pretty_into(out, j[k], indent + 2);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
    return;
  }
  out += j.dump();
}

}  // namespace

std::string pretty(const json& doc) {
  std::string out;
  pretty_into(out, doc, 0);
  return out + "\n";
}

json field_to_json(const Field& f) {
  if (f.is_rational()) return json{{"kind", "rational"}};
  return json{{"kind", "gf"}, {"prime", f.characteristic()}};
}

Field field_from_json(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Field::parse(j.get<std::string>());
    } catch (const Error& e) {
      fail(where, e.what());
    }
  }
  const auto& kind = member(j, "kind", where);
  if (kind == "rational") return Field::rational();
  if (kind == "gf") {
    try {
      return Field::prime(to_positive(member(j, "prime", where), at(where, "prime")));
    } catch (const InvalidArgument& e) {
      fail(at(where, "prime"), e.what());
    }
  }
  fail(at(where, "kind"), "expected \"rational\" or \"gf\"");
}

json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Field& f, const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Scalar(f, j.get<long>());
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
  fail(where, "expected an integer or a \"p/q\" string");
}

LoadedAlgebra algebra_from_json(const json& doc, std::optional<Field> field_override) {
  if (!doc.is_object()) fail("/", "expected an object");
  if (auto it = doc.find("schema"); it != doc.end() && *it != algebra_schema)
    fail("/schema", std::string("unsupported schema, expected \"") + algebra_schema + "\"");
  const Field field = field_override ? *field_override : field_from_json(member(doc, "field", ""), "/field");
  const auto dims = dims_from_json(member(doc, "dims", ""), "/dims");
  const GradedVectorSpace space(dims);
  const bool has_gen = doc.contains("generators");
  const bool has_sc = doc.contains("structure_constants");
  if (has_gen == has_sc) fail("/", "exactly one of \"generators\" and \"structure_constants\" is required");

  LoadedAlgebra out{GradedAlgebra(new_algebra(MultilinearOp(field, space, 1))), {}};
  BasisLabels labels;
  if (auto it = doc.find("labels"); it != doc.end()) labels = labels_from_json(*it, dims);

  if (has_gen) {
    auto built = build_constructor(field, doc["generators"], dims.size(), "/generators");
    if (built.space().dims() != dims) {
      std::ostringstream os;
      os << "constructor produced dims (";
      for (std::size_t i = 0; i < built.q(); ++i) os << (i ? "," : "") << built.dim(i + 1);
      os << ") which differ from the declared dims; using the constructed algebra";
      out.notes.push_back(os.str());
      labels.clear();
    }
    if (!labels.empty())
      built = new_algebra(built.mu(), labels);
    out.algebra = std::move(built);
    return out;
  }

  const auto& sc = doc["structure_constants"];
  if (!sc.is_array()) fail("/structure_constants", "expected an array");
  MultilinearOp mu(field, space, 1);
  for (std::size_t k = 0; k < sc.size(); ++k) {
    const auto w = at("/structure_constants", k);
    const auto& e = sc[k];
    if (!e.is_array() || e.size() != 6) fail(w, "expected [i, j, a, b, c, value]");
    const auto i = to_positive(e[0], at(w, 0)), j = to_positive(e[1], at(w, 1));
    if (i + j > dims.size()) fail(w, "degree i + j exceeds q");
    const auto a = to_positive(e[2], at(w, 2)), b = to_positive(e[3], at(w, 3)),
               c = to_positive(e[4], at(w, 4));
    if (a > space.dim(i) || b > space.dim(j) || c > space.dim(i + j)) fail(w, "basis index out of range");
    mu.add_entry({i, j}, c - 1, (a - 1) * space.dim(j) + (b - 1), scalar_from_json(field, e[5], at(w, 5)));
  }
  out.algebra = new_algebra(mu, labels);
  return out;
}

LoadedAlgebra parse_algebra(std::string_view text, std::optional<Field> field_override) {
  return algebra_from_json(parse_json(text), field_override);
}

json algebra_to_json(const GradedAlgebra& a) {
  json doc;
  doc["schema"] = algebra_schema;
  doc["field"] = field_to_json(a.field());
  doc["dims"] = a.space().dims();
  json sc = json::array();
  for (const auto& [c, m] : a.mu().blocks()) {
    const auto dj = a.dim(c[1]);
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::string>> rows;
    for (const auto& [rc, v] : m.entries())
      rows.emplace_back(rc.second / dj + 1, rc.second % dj + 1, rc.first + 1, v.to_string());
    std::sort(rows.begin(), rows.end());
    for (const auto& [x, y, z, v] : rows) sc.push_back(json::array({c[0], c[1], x, y, z, v}));
  }
  doc["structure_constants"] = std::move(sc);
  if (!a.labels().empty()) doc["labels"] = a.labels();
  return doc;
}

std::string emit_algebra(const GradedAlgebra& a) { return pretty(algebra_to_json(a)); }

json op_to_json(const MultilinearOp& op) {
  json entries = json::array();
  for (const auto& [c, m] : op.blocks()) {
    const TensorShape shape(op.space(), c);
    for (const auto& [rc, v] : m.entries()) {
      auto digits = shape.decode(rc.second);
      for (auto& d : digits) ++d;
      entries.push_back(json::array({c, digits, rc.first + 1, v.to_string()}));
    }
  }
  return entries;
}

MultilinearOp op_from_json(const Field& f, const GradedVectorSpace& space, std::size_t p,
                           const json& entries, const std::string& where) {
  if (!entries.is_array()) fail(where, "expected an array of entries");
  MultilinearOp op(f, space, p);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto w = at(where, k);
    const auto& e = entries[k];
    if (!e.is_array() || e.size() != 4 || !e[0].is_array() || !e[1].is_array() ||
        e[0].size() != p + 1 || e[1].size() != p + 1)
      fail(w, "expected [[degrees], [indices], output, value] with " + std::to_string(p + 1) + " inputs");
    DegreeComposition c;
    std::vector<std::size_t> digits;
    for (std::size_t t = 0; t <= p; ++t) {
      c.push_back(to_positive(e[0][t], at(at(w, 0), t)));
      digits.push_back(to_positive(e[1][t], at(at(w, 1), t)) - 1);
    }
    const auto tgt = target_degree(c);
    if (tgt > space.q()) fail(w, "target degree exceeds q");
    for (std::size_t t = 0; t <= p; ++t)
      if (digits[t] >= space.dim(c[t])) fail(at(w, 1), "basis index out of range");
    const auto out = to_positive(e[2], at(w, 2)) - 1;
    if (out >= space.dim(tgt)) fail(at(w, 2), "output index out of range");
    op.add_entry(c, out, TensorShape(space, c).encode(digits), scalar_from_json(f, e[3], at(w, 3)));
  }
  return op;
}

MultilinearOp cochain_from_json(const GradedAlgebra& a, const json& doc) {
  if (auto it = doc.find("schema"); it != doc.end() && *it != cochain_schema)
    fail("/schema", std::string("unsupported schema, expected \"") + cochain_schema + "\"");
  std::size_t p = 1;
  if (auto it = doc.find("arity_index"); it != doc.end()) p = to_count(*it, "/arity_index");
  if (p != 1) fail("/arity_index", "deformations use binary cochains (arity_index 1)");
  return op_from_json(a.field(), a.space(), p, member(doc, "entries", ""), "/entries");
}

json subspace_to_json(const Subspace& s) {
  json rows = json::array();
  for (const auto& v : s.basis_vectors()) {
    json row = json::array();
    for (const auto& x : v) row.push_back(x.to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Subspace subspace_from_json(const Field& f, std::size_t ambient, const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of spanning rows");
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto w = at(where, r);
    if (!j[r].is_array() || j[r].size() != ambient)
      fail(w, "expected a row of length " + std::to_string(ambient));
    Vector v;
    for (std::size_t c = 0; c < ambient; ++c) v.push_back(scalar_from_json(f, j[r][c], at(w, c)));
    rows.push_back(std::move(v));
  }
  return Subspace::span(f, ambient, rows);
}

std::vector<std::vector<Subspace>> flags_from_json(const GradedAlgebra& a, const json& doc) {
  if (auto it = doc.find("schema"); it != doc.end() && *it != flags_schema)
    fail("/schema", std::string("unsupported schema, expected \"") + flags_schema + "\"");
  const auto& flags = member(doc, "flags", "");
  if (!flags.is_array()) fail("/flags", "expected an array");
  std::vector<std::vector<Subspace>> out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    const auto w = at("/flags", i);
    if (!flags[i].is_array()) fail(w, "expected a list of subspaces");
    std::vector<Subspace> flag;
    for (std::size_t k = 0; k < flags[i].size(); ++k) {
      flag.push_back(subspace_from_json(a.field(), a.dim(1), flags[i][k], at(w, k)));
      if (k && !flag[k - 1].contains(flag[k])) fail(at(w, k), "flag is not descending");
    }
    out.push_back(std::move(flag));
  }
  return out;
}

json cohomology_to_json(const CohomologyReport& r, bool with_representatives) {
  json groups = json::array();
  json dims = json::array();
  for (const auto& g : r.groups) {
    json by_n = json::array();
    for (std::size_t n = 0; n < g.dim_by_internal_degree.size(); ++n)
      by_n.push_back({{"n", n + 1},
                      {"cochains", g.cochain_dim_by_internal_degree[n]},
                      {"dim", g.dim_by_internal_degree[n]}});
    json group{{"p", g.p},           {"hh_degree", g.p + 1},
               {"dim", g.dim},       {"cochains", g.cochain_dim},
               {"rank", g.rank},     {"by_lowest_internal_degree", std::move(by_n)}};
    if (with_representatives) {
      json reps = json::array();
      for (const auto& rep : g.representatives) reps.push_back(op_to_json(rep));
      group["representatives"] = std::move(reps);
    }
    groups.push_back(std::move(group));
    dims.push_back(g.dim);
  }
  return json{{"field", r.field.tag()}, {"p_max", r.p_max}, {"hh_dims", std::move(dims)},
              {"groups", std::move(groups)}};
}

json weights_to_json(const WeightProfile& w) {
  json futaki = json::array();
  for (const auto& f : w.futaki) futaki.push_back(f ? json(f->get_str()) : json(nullptr));
  return json{{"w", w.w}, {"futaki", std::move(futaki)}};
}

json filtration_to_json(const Filtration& f) {
  json levels = json::array();
  for (const auto& lvl : f.levels()) {
    json pieces = json::array();
    for (const auto& s : lvl) pieces.push_back(subspace_to_json(s));
    levels.push_back(std::move(pieces));
  }
  return levels;
}

Filtration filtration_from_json(const std::shared_ptr<const GradedAlgebra>& a, const json& j) {
  if (!j.is_array()) fail("/levels", "expected a list of levels");
  std::vector<GradedSubspace> levels;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto w = at("/levels", k);
    if (!j[k].is_array() || j[k].size() != a->q()) fail(w, "expected one piece per degree");
    GradedSubspace lvl;
    for (std::size_t i = 0; i < a->q(); ++i)
      lvl.push_back(subspace_from_json(a->field(), a->dim(i + 1), j[k][i], at(w, i)));
    levels.push_back(std::move(lvl));
  }
  return Filtration::from_levels(a, levels);
}

json verdict_to_json(const StabilityVerdict& v) {
  json bounds{{"r_max", v.r_max}, {"seed", v.seed}};
  json out{{"verdict", to_string(v.verdict)},
           {"field", v.field.tag()},
           {"theta", v.theta.theta},
           {"strategy", to_string(v.strategy)},
           {"bounds", std::move(bounds)},
           {"candidates_examined", v.candidates_examined},
           {"standard_candidates", v.standard_candidates},
           {"generated_in_degree_one", v.generated_in_degree_one}};
  if (v.certificate) {
    const auto& c = *v.certificate;
    json flag = json::array();
    for (const auto& s : c.flag) flag.push_back(subspace_to_json(s));
    out["certificate"] = json{{"origin", c.origin},
                              {"flag", std::move(flag)},
                              {"levels", filtration_to_json(c.filtration)},
                              {"weights", weights_to_json(c.weights)},
                              {"pairing", c.pairing}};
  } else {
    out["certificate"] = nullptr;
  }
  return out;
}

CertificateCheck recheck_certificate(const GradedAlgebra& a, const json& result) {
  CertificateCheck chk;
  auto it = result.find("certificate");
  if (it == result.end() || it->is_null()) return chk;
  chk.present = true;
  const auto ptr = std::make_shared<const GradedAlgebra>(a);
  const auto f = filtration_from_json(ptr, member(*it, "levels", "/certificate"));
  StabilityParameter theta{member(result, "theta", "").get<std::vector<std::int64_t>>()};
  const auto w = weight_profile(f);
  chk.admissible = is_admissible(f);
  chk.standard_nontrivial = is_standard_nontrivial(f);
  chk.reported_pairing = member(*it, "pairing", "/certificate").get<std::int64_t>();
  chk.recomputed_pairing = hm_pairing(theta, w);
  chk.recomputed_weights = w.w;
  return chk;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out.flush()) throw Error("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace gralg::io
