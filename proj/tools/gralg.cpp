#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gralg_io.hpp"

using namespace gralg;
using io::json;

namespace {

enum Exit { Ok = 0, Rejection = 1, Usage = 2 };

struct Common {
  std::string input;
  std::string field;
  std::string output;
  bool timing = false;
};

struct Context {
  Common common;
  std::string raw;
  std::optional<Field> field_override;
  std::optional<io::LoadedAlgebra> loaded;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

json witness_json(const WitnessTriple& w) {
  json out = json::array();
  for (const auto& b : w) out.push_back(json{{"degree", b.degree}, {"index", b.index}});
  return out;
}

void load(Context& ctx) {
  ctx.raw = io::read_file(ctx.common.input);
  if (!ctx.common.field.empty()) ctx.field_override = Field::parse(ctx.common.field);
  ctx.loaded = io::parse_algebra(ctx.raw, ctx.field_override);
}

void emit(const Context& ctx, const std::string& text) {
  if (ctx.common.output.empty())
    std::cout << text;
  else
    io::write_file_atomic(ctx.common.output, text);
}

void report(const Context& ctx, const std::string& command, json args, json result) {
  json doc;
  doc["tool"] = "gralg";
  doc["version"] = io::tool_version;
  doc["command"] = command;
  doc["args"] = std::move(args);
  json input{{"path", ctx.common.input}, {"sha256", io::sha256_hex(ctx.raw)}};
  if (ctx.loaded) input["algebra"] = io::algebra_to_json(ctx.loaded->algebra);
  doc["input"] = std::move(input);
  doc["field"] = ctx.loaded ? json(ctx.loaded->algebra.field().tag()) : json(nullptr);
  if (ctx.loaded && !ctx.loaded->notes.empty()) doc["notes"] = ctx.loaded->notes;
  doc["result"] = std::move(result);
  if (ctx.common.timing) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - ctx.start;
    doc["timing"] = json{{"seconds", dt.count()}};
  }
  emit(ctx, io::pretty(doc));
}

json common_args(const Context& ctx) {
  return json{{"field", ctx.common.field.empty() ? json(nullptr) : json(ctx.field_override->tag())}};
}

std::vector<std::int64_t> parse_theta(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InvalidArgument("malformed --theta entry '" + item + "'");
    }
  }
  return out;
}

// ---- commands ------------------------------------------------------------

int cmd_verify(Context& ctx) {
  ctx.raw = io::read_file(ctx.common.input);
  if (!ctx.common.field.empty()) ctx.field_override = Field::parse(ctx.common.field);
  try {
    ctx.loaded = io::parse_algebra(ctx.raw, ctx.field_override);
  } catch (const NotAssociative& e) {
    report(ctx, "verify", common_args(ctx),
           json{{"associative", false}, {"witness", witness_json(e.witness())}, {"message", e.what()}});
    return Rejection;
  }
  const auto& a = ctx.loaded->algebra;
  report(ctx, "verify", common_args(ctx),
         json{{"associative", true}, {"dims", a.space().dims()}, {"witness", nullptr}});
  return Ok;
}

int cmd_hh(Context& ctx, std::size_t p_max) {
  load(ctx);
  auto args = common_args(ctx);
  args["p_max"] = p_max;
  report(ctx, "hh", std::move(args), io::cohomology_to_json(cohomology(ctx.loaded->algebra, p_max)));
  return Ok;
}

struct CocycleChoice {
  std::optional<std::size_t> index;
  std::string file;
};

std::pair<MultilinearOp, json> choose_cocycle(const GradedAlgebra& a, const CocycleChoice& choice) {
  if (!choice.file.empty()) {
    const auto raw = io::read_file(choice.file);
    return {io::cochain_from_json(a, io::parse_json(raw)),
            json{{"file", choice.file}, {"sha256", io::sha256_hex(raw)}}};
  }
  const auto k = choice.index.value_or(0);
  if (k == 0) return {MultilinearOp(a.field(), a.space(), 1), json{{"representative", 0}}};
  const auto reps = cohomology(a, 1).groups[1].representatives;
  if (k > reps.size())
    throw InvalidArgument("--cocycle " + std::to_string(k) + " exceeds dim HH^2 = " +
                          std::to_string(reps.size()));
  return {reps[k - 1], json{{"representative", k}}};
}

int cmd_deform(Context& ctx, const CocycleChoice& choice, bool obstruct) {
  load(ctx);
  const auto& a = ctx.loaded->algebra;
  auto [alpha, source] = choose_cocycle(a, choice);
  auto args = common_args(ctx);
  args["cocycle"] = source;
  const char* name = obstruct ? "obstruct" : "deform";
  json result{{"cocycle", io::op_to_json(alpha)}};
  try {
    const auto def = deform(a, alpha);
    result["accepted"] = true;
    result["associative_mod_eps2"] = def.associative_mod_eps2;
    result["equivalent_to_trivial"] = deformations_equivalent(a, alpha, MultilinearOp(a.field(), a.space(), 1));
  } catch (const NotCocycle& e) {
    result["accepted"] = false;
    result["witness"] = witness_json(e.witness());
    result["message"] = e.what();
    report(ctx, name, std::move(args), std::move(result));
    return Rejection;
  }
  if (obstruct) {
    const auto ob = primary_obstruction(a, alpha);
    result["obstruction"] = json{{"representative", io::op_to_json(ob.representative)},
                                 {"closed", ob.closed},
                                 {"exact", ob.exact},
                                 {"vanishes_in_cohomology", ob.vanishes_in_cohomology}};
  }
  report(ctx, name, std::move(args), std::move(result));
  return Ok;
}

struct StabilityArgs {
  std::string theta;
  std::string strategy;
  std::size_t r_max = 0;
  std::uint64_t seed = 0;
  std::size_t samples = 64;
  std::string flags;
};

int cmd_stability(Context& ctx, const StabilityArgs& sa) {
  load(ctx);
  const auto& a = ctx.loaded->algebra;
  SearchOptions opt;
  opt.r_max = sa.r_max;
  opt.seed = sa.seed;
  opt.random_samples = sa.samples;
  if (sa.strategy.empty())
    opt.strategy = a.field().is_finite() ? Strategy::Exhaustive : Strategy::Heuristic;
  else if (sa.strategy == "exhaustive")
    opt.strategy = Strategy::Exhaustive;
  else if (sa.strategy == "heuristic")
    opt.strategy = Strategy::Heuristic;
  else
    throw InvalidArgument("--strategy must be exhaustive or heuristic");
  json args = common_args(ctx);
  if (!sa.flags.empty()) {
    const auto raw = io::read_file(sa.flags);
    opt.user_flags = io::flags_from_json(a, io::parse_json(raw));
    args["flags"] = json{{"file", sa.flags}, {"sha256", io::sha256_hex(raw)}};
  }
  StabilityParameter theta;
  try {
    theta = sa.theta.empty() ? standard_parameter(a.space().dims()) : StabilityParameter{parse_theta(sa.theta)};
  } catch (const Rejected& e) {
    report(ctx, "stability", std::move(args), json{{"verdict", nullptr}, {"rejected", e.what()}});
    return Rejection;
  }
  args["theta"] = theta.theta;
  args["theta_default"] = sa.theta.empty();
  args["strategy"] = to_string(opt.strategy);
  args["r_max"] = sa.r_max;
  args["seed"] = sa.seed;
  if (opt.strategy == Strategy::Heuristic) args["random_samples"] = sa.samples;
  try {
    const auto v = check_q_stability(a, theta, opt);
    auto result = io::verdict_to_json(v);
    if (opt.strategy == Strategy::Heuristic) result["bounds"]["random_samples"] = sa.samples;
    report(ctx, "stability", std::move(args), std::move(result));
  } catch (const Rejected& e) {
    report(ctx, "stability", std::move(args), json{{"verdict", nullptr}, {"rejected", e.what()}});
    return Rejection;
  }
  return Ok;
}

int cmd_truncate(Context& ctx, std::size_t q) {
  load(ctx);
  const auto& a = ctx.loaded->algebra;
  if (q == 0 || q > a.q())
    throw InvalidArgument("truncation degree must lie in 1.." + std::to_string(a.q()));
  emit(ctx, io::emit_algebra(truncate(a, q)));
  return Ok;
}

int cmd_info(Context& ctx) {
  load(ctx);
  const auto& a = ctx.loaded->algebra;
  const auto& space = a.space();
  json table = json::array();
  for (std::size_t p = 0; p <= default_p_max; ++p) {
    json by_n = json::array();
    for (std::size_t n = 1; n <= a.q(); ++n) by_n.push_back(dim_L(space, p, n));
    table.push_back(json{{"p", p}, {"dim", dim_L(space, p)}, {"by_internal_degree", std::move(by_n)}});
  }
  json result{{"dims", space.dims()},
              {"q", a.q()},
              {"total_dim", space.total_dim()},
              {"dim_L", std::move(table)},
              {"generated_in_degree_one", is_generated_in_degree_one(a)},
              {"has_top_vanishing_ideal", has_top_vanishing_ideal(a)},
              {"strongly_coprime", is_strongly_coprime(space.dims())}};
  try {
    result["standard_parameter"] = standard_parameter(space.dims()).theta;
  } catch (const Rejected& e) {
    result["standard_parameter"] = nullptr;
    result["standard_parameter_note"] = e.what();
  }
  const auto gamma = tautological_gamma(a.field(), space);
  result["gamma_degrees_collapse"] = gamma.degrees_collapse;
  report(ctx, "info", common_args(ctx), std::move(result));
  return Ok;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("input", c.input, "Algebra definition (JSON)")->required()->check(CLI::ExistingFile);
  sub->add_option("--field", c.field, "Override the field: rational or gf:<p>");
  sub->add_option("--output,-o", c.output, "Write the result here instead of stdout");
  sub->add_flag("--timing", c.timing, "Include wall-clock timing in the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite graded associative algebras"};
  app.set_version_flag("--version", io::tool_version);
  app.require_subcommand(1);

  Context ctx;
  std::size_t p_max = default_p_max;
  std::size_t trunc_q = 0;
  CocycleChoice cocycle;
  StabilityArgs sa;

  auto* verify = app.add_subcommand("verify", "Check associativity (the Maurer-Cartan equation)");
  add_common(verify, ctx.common);

  auto* hh = app.add_subcommand("hh", "Graded Hochschild cohomology");
  add_common(hh, ctx.common);
  hh->add_option("--p-max", p_max, "Highest p of H^p(L, d) to compute")->capture_default_str();

  auto* def = app.add_subcommand("deform", "First-order deformation along a 2-cocycle");
  auto* obs = app.add_subcommand("obstruct", "Primary obstruction of a 2-cocycle");
  for (auto* sub : {def, obs}) {
    add_common(sub, ctx.common);
    auto* idx = sub->add_option("--cocycle", cocycle.index,
                                "Use the k-th HH^2 representative (1-based); 0 is the zero cochain");
    auto* file = sub->add_option("--cocycle-file", cocycle.file, "Cochain document (gralg/cochain/1)")
                     ->check(CLI::ExistingFile);
    idx->excludes(file);
  }

  auto* stab = app.add_subcommand("stability", "Search for destabilizing test configurations");
  add_common(stab, ctx.common);
  stab->add_option("--theta", sa.theta, "Comma-separated stability parameter; default is the standard one");
  stab->add_option("--strategy", sa.strategy, "exhaustive (finite fields) or heuristic")
      ->check(CLI::IsMember({"exhaustive", "heuristic"}));
  stab->add_option("--r-max", sa.r_max, "Maximum flag length; 0 means q * max(d_i)");
  stab->add_option("--seed", sa.seed, "Seed for the heuristic strategy")->capture_default_str();
  stab->add_option("--samples", sa.samples, "Random flags tried by the heuristic strategy")
      ->capture_default_str();
  stab->add_option("--flags", sa.flags, "Extra flags of A_1 (gralg/flags/1)")->check(CLI::ExistingFile);

  auto* trunc = app.add_subcommand("truncate", "Emit the truncation A_{<=q'}");
  add_common(trunc, ctx.common);
  trunc->add_option("q", trunc_q, "New truncation degree")->required();

  auto* info = app.add_subcommand("info", "Dimensions and structural flags");
  add_common(info, ctx.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? Ok : Usage;
  }

  try {
    if (verify->parsed()) return cmd_verify(ctx);
    if (hh->parsed()) return cmd_hh(ctx, p_max);
    if (def->parsed()) return cmd_deform(ctx, cocycle, false);
    if (obs->parsed()) return cmd_deform(ctx, cocycle, true);
    if (stab->parsed()) return cmd_stability(ctx, sa);
    if (trunc->parsed()) return cmd_truncate(ctx, trunc_q);
    if (info->parsed()) return cmd_info(ctx);
  } catch (const io::ParseError& e) {
    std::cerr << "gralg: parse error at " << e.what() << "\n";
    return Usage;
  } catch (const NotAssociative& e) {
    std::cerr << "gralg: not associative: " << e.what() << "\n";
    return Rejection;
  } catch (const Unsupported& e) {
    std::cerr << "gralg: unsupported: " << e.what() << "\n";
    return Usage;
  } catch (const InvalidArgument& e) {
    std::cerr << "gralg: " << e.what() << "\n";
    return Usage;
  } catch (const Error& e) {
    std::cerr << "gralg: " << e.what() << "\n";
    return Usage;
  } catch (const std::exception& e) {
    std::cerr << "gralg: " << e.what() << "\n";
    return Usage;
  }
  return Usage;
}
