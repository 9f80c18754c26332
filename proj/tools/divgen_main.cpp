// divgen command line front end: deterministic generation of diverse
// solution collections, opposite points, structured-feasibility projection
// and small reproducible experiments. Every file-producing invocation also
// writes a .manifest.json sidecar that pins parameters, the RNG seed and
// content digests of all inputs and outputs; `divgen replay` re-executes a
// manifest and verifies the digests still match.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "divgen/diversity.hpp"
#include "divgen/genbin.hpp"
#include "divgen/genperm.hpp"
#include "divgen/lift.hpp"
#include "divgen/opposition.hpp"
#include "divgen/project.hpp"
#include "divgen/serialize.hpp"

namespace {

using namespace divgen;
using nlohmann::json;

constexpr const char* kToolVersion = "0.1.0";

int run_cli(const std::vector<std::string>& args, bool in_replay);

// ---------------------------------------------------------------------------
// Run manifest
// ---------------------------------------------------------------------------

class Manifest {
 public:
  Manifest(std::string subcommand, std::vector<std::string> argv)
      : subcommand_(std::move(subcommand)), argv_(std::move(argv)) {}

  void set_rng_seed(std::uint64_t seed) { rng_seed_ = seed; }
  void add_input(const std::string& path) { inputs_[path] = file_digest(path); }
  void add_output(const std::string& path) { outputs_[path] = file_digest(path); }

  void write(const std::string& path) const {
    json j{{"tool", "divgen"},
           {"version", kToolVersion},
           {"subcommand", subcommand_},
           {"argv", argv_},
           {"inputs", inputs_},
           {"outputs", outputs_}};
    if (rng_seed_) {
      j["rng_seed"] = *rng_seed_;
      j["rng_algorithm"] = Rng::kAlgorithm;
    }
    write_text_file(path, j.dump(2) + "\n");
  }

 private:
  std::string subcommand_;
  std::vector<std::string> argv_;
  std::map<std::string, std::string> inputs_;
  std::map<std::string, std::string> outputs_;
  std::optional<std::uint64_t> rng_seed_;
};

// Writes the primary payload to --out (manifest sidecar alongside) or to
// stdout (no sidecar).
void emit_output(const std::optional<std::string>& out_path, const std::string& payload,
                 Manifest& manifest) {
  if (!out_path) {
    std::cout << payload;
    return;
  }
  write_text_file(*out_path, payload);
  manifest.add_output(*out_path);
  manifest.write(*out_path + ".manifest.json");
}

// ---------------------------------------------------------------------------
// Shared option bundles
// ---------------------------------------------------------------------------

struct SeedOptions {
  std::string seed_file;
  std::string seed_kind;  // zeros | ones | random
  std::size_t n = 0;
};

void add_seed_options(CLI::App* cmd, SeedOptions& opts) {
  cmd->add_option("--seed-file", opts.seed_file, "seed solution file (CSV or JSON)");
  cmd->add_option("--seed", opts.seed_kind, "seed shorthand: zeros|ones|random")
      ->check(CLI::IsMember({"zeros", "ones", "random"}));
  cmd->add_option("--n", opts.n, "dimension (required with --seed)");
}

BinaryVector resolve_binary_seed(const SeedOptions& opts, Rng& rng, Manifest& manifest) {
  if (!opts.seed_file.empty()) {
    manifest.add_input(opts.seed_file);
    return load_binary_vector(opts.seed_file);
  }
  if (opts.n == 0) {
    throw std::invalid_argument("need --seed-file, or --seed with --n");
  }
  const std::string kind = opts.seed_kind.empty() ? "zeros" : opts.seed_kind;
  if (kind == "zeros") return BinaryVector::zeros(opts.n);
  if (kind == "ones") return BinaryVector::ones(opts.n);
  return BinaryVector::random(opts.n, rng);
}

std::uint64_t resolve_rng_seed(const CLI::App* cmd, std::uint64_t flag_value) {
  if (cmd->count("--rng-seed") > 0) return flag_value;
  if (const char* env = std::getenv("DIVGEN_RNG_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 1;
}

BoundedInterval parse_bounds_flag(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("--bounds wants 'L,U', got '" + text + "'");
  }
  BoundedInterval iv;
  iv.lower = std::stod(text.substr(0, comma));
  iv.upper = std::stod(text.substr(comma + 1));
  if (!(iv.lower <= iv.upper)) throw std::invalid_argument("--bounds has L > U");
  return iv;
}

template <typename CollectionT>
std::string render_collection(const CollectionT& c, const std::string& format) {
  for (const auto& member : c.members) {
    const ValidationReport r = validate(member);
    if (!r.ok()) {
      throw std::invalid_argument("generated member failed validation: " + r.joined());
    }
  }
  if (format == "json") {
    return json(c).dump(2) + "\n";
  }
  std::ostringstream os;
  write_collection_csv(os, c);
  return os.str();
}

std::string render_vector(const BoundedVector& x, const std::string& format) {
  if (format == "json") return json(x).dump(2) + "\n";
  std::ostringstream os;
  os << csv_header(x.size()) << "\n1";
  for (double v : x.values) os << ',' << format_value(v);
  os << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

struct GenerateOptions {
  SeedOptions seed;
  std::string out;
  std::string format = "csv";
  std::uint64_t rng_seed = 1;

  // first / first1a
  int h_max = 0;  // 0: derive from n
  std::uint64_t max_solutions = 0;
  int h_stride = 1;
  int q_stride = 1;
  bool augmented = false;

  // perm
  std::vector<int> h_values;
  bool sqrt_only = false;
  CLI::Option* reversals_opt = nullptr;
  bool reversals = false;

  // lift
  std::string rule = "r1";
  double lambda_l = 0.2;
  double lambda_u = 0.3;
  CLI::Option* lambda_l_opt = nullptr;
  CLI::Option* lambda_u_opt = nullptr;
  std::string lambda_interval;
  int midpoint_bit = 1;
  std::string generator = "sequential";
  std::string bounds_flag;
  bool integral = false;
};

void add_common_generate_options(CLI::App* cmd, GenerateOptions& o) {
  add_seed_options(cmd, o.seed);
  cmd->add_option("--out", o.out, "output path (default: stdout)");
  cmd->add_option("--format", o.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--rng-seed", o.rng_seed,
                  "RNG seed (fallback: DIVGEN_RNG_SEED, then 1)");
}

void add_first_options(CLI::App* cmd, GenerateOptions& o) {
  cmd->add_option("--h-max", o.h_max, "largest flip stride h* (default n/5, 1A: n/3)");
  cmd->add_option("--max-solutions", o.max_solutions, "emission cap (default unlimited)");
  cmd->add_option("--h-stride", o.h_stride, "increment between h values");
  cmd->add_option("--q-stride", o.q_stride, "increment between q phases");
}

FirstGenParams first_params(const GenerateOptions& o, std::size_t n, bool variant_1a) {
  FirstGenParams p;
  const int divisor = variant_1a ? 3 : 5;
  p.h_max = o.h_max > 0
                ? o.h_max
                : std::max(1, std::min(static_cast<int>(n) - 1,
                                       static_cast<int>(n) / divisor));
  p.max_solutions = o.max_solutions == 0 ? FirstGenParams::kUnlimited : o.max_solutions;
  p.h_stride = o.h_stride;
  p.q_stride = o.q_stride;
  p.variant = o.augmented ? FirstGenParams::Variant::Augmented1A
                          : FirstGenParams::Variant::Basic;
  return p;
}

int cmd_generate_binary(const GenerateOptions& o, const CLI::App* cmd,
                        const std::string& which,
                        const std::vector<std::string>& argv) {
  Manifest manifest("generate " + which, argv);
  const std::uint64_t seed_value = resolve_rng_seed(cmd, o.rng_seed);
  Rng rng(seed_value);
  if (o.seed.seed_kind == "random") manifest.set_rng_seed(seed_value);

  const BinaryVector seed = resolve_binary_seed(o.seed, rng, manifest);
  BinaryCollection c;
  if (which == "sequential") {
    c = sequential_generator(seed);
  } else if (which == "first") {
    c = first_generator(seed, first_params(o, seed.size(), false));
  } else {
    c = first_generator_1a(seed, first_params(o, seed.size(), true));
  }
  emit_output(o.out.empty() ? std::nullopt : std::optional(o.out),
              render_collection(c, o.format), manifest);
  return 0;
}

int cmd_generate_perm(const GenerateOptions& o, const std::vector<std::string>& argv) {
  Manifest manifest("generate perm", argv);
  Permutation seed;
  if (!o.seed.seed_file.empty()) {
    manifest.add_input(o.seed.seed_file);
    seed = load_permutation(o.seed.seed_file);
  } else if (o.seed.n > 0) {
    seed = Permutation::identity(o.seed.n);
  } else {
    throw std::invalid_argument("need --seed-file or --n");
  }
  require_valid(seed, "permutation seed");

  PermGenParams params;
  if (o.sqrt_only) {
    params.h_values = PermGenParams::sqrt_h_values(seed.size());
  } else {
    params.h_values = o.h_values;
  }
  // Reversals default on for the full default h range, off once specific
  // strides are requested; an explicit --reversals/--no-reversals wins.
  if (o.reversals_opt->count() > 0) {
    params.include_reversals = o.reversals;
  } else {
    params.include_reversals = params.h_values.empty();
  }
  const PermutationCollection c = generate_perm(seed, params);
  emit_output(o.out.empty() ? std::nullopt : std::optional(o.out),
              render_collection(c, o.format), manifest);
  return 0;
}

LambdaPolicy lift_lambda_policy(const GenerateOptions& o, std::uint64_t rng_seed) {
  if (!o.lambda_interval.empty()) {
    const BoundedInterval range = parse_bounds_flag(o.lambda_interval);
    return LambdaPolicy::per_component_random({range.lower, range.upper}, rng_seed);
  }
  if (o.lambda_l_opt->count() > 0 || o.lambda_u_opt->count() > 0) {
    return LambdaPolicy::fixed(o.lambda_l, o.lambda_u);
  }
  return LambdaPolicy::from_intervals();
}

int cmd_generate_lift(const GenerateOptions& o, const CLI::App* cmd,
                      const std::vector<std::string>& argv) {
  Manifest manifest("generate lift", argv);
  const std::uint64_t seed_value = resolve_rng_seed(cmd, o.rng_seed);

  if (o.seed.seed_file.empty()) {
    throw std::invalid_argument("generate lift needs --seed-file with a bounded seed");
  }
  manifest.add_input(o.seed.seed_file);
  BoundedVector seed;
  if (o.bounds_flag.empty()) {
    seed = load_bounded_vector(o.seed.seed_file);
  } else {
    seed = load_bounded_vector(o.seed.seed_file, parse_bounds_flag(o.bounds_flag),
                               o.integral);
  }
  require_valid(seed, "lift seed");

  LiftPolicy policy;
  policy.rule = o.rule == "r2" ? LiftPolicy::Rule::R2 : LiftPolicy::Rule::R1;
  policy.midpoint_bit = o.midpoint_bit;
  policy.lambda = lift_lambda_policy(o, seed_value);
  if (policy.lambda.kind == LambdaPolicy::Kind::PerComponentRandom) {
    manifest.set_rng_seed(seed_value);
  }

  const BinaryVector binary_seed = binarize_seed(seed, policy);
  BinaryCollection binary;
  if (o.generator == "sequential") {
    binary = sequential_generator(binary_seed);
  } else if (o.generator == "first") {
    binary = first_generator(binary_seed, first_params(o, seed.size(), false));
  } else {
    binary = first_generator_1a(binary_seed, first_params(o, seed.size(), true));
  }

  const BoundedCollection lifted = lift_collection(seed, binary, policy);
  emit_output(o.out.empty() ? std::nullopt : std::optional(o.out),
              render_collection(lifted, o.format), manifest);
  return 0;
}

// ---------------------------------------------------------------------------
// opposite
// ---------------------------------------------------------------------------

struct OppositeOptions {
  std::string input;
  std::string collection;
  std::string bounds_flag;
  bool integral = false;
  std::string out;
  std::string format = "csv";
  double lambda_l = 0.2;
  double lambda_u = 0.3;
  CLI::Option* lambda_l_opt = nullptr;
  CLI::Option* lambda_u_opt = nullptr;
  std::string tie = "upper";
  bool use_contracted = false;
};

BoundedVector load_opposite_input(const OppositeOptions& o, Manifest& manifest) {
  if (o.input.empty()) throw std::invalid_argument("--input is required");
  manifest.add_input(o.input);
  BoundedVector x;
  if (o.bounds_flag.empty()) {
    x = load_bounded_vector(o.input);
  } else {
    x = load_bounded_vector(o.input, parse_bounds_flag(o.bounds_flag), o.integral);
  }
  require_valid(x, "opposite input");
  return x;
}

int cmd_opposite(const OppositeOptions& o, const std::string& which,
                 const std::vector<std::string>& argv) {
  Manifest manifest("opposite " + which, argv);
  BoundedVector result;
  if (which == "obl") {
    const BoundedVector x = load_opposite_input(o, manifest);
    result = x;
    for (std::size_t j = 0; j < x.size(); ++j) {
      result.values[j] = obl_opposite(x.values[j], x.intervals[j]);
    }
  } else if (which == "dbl") {
    BoundedVector x = load_opposite_input(o, manifest);
    LambdaPolicy policy = (o.lambda_l_opt->count() > 0 || o.lambda_u_opt->count() > 0)
                              ? LambdaPolicy::fixed(o.lambda_l, o.lambda_u)
                              : LambdaPolicy::from_intervals();
    const MidpointTie tie =
        o.tie == "lower" ? MidpointTie::ChooseLower : MidpointTie::ChooseUpper;
    result = dbl_opposite_vector(x, policy, tie);
  } else {  // maxmin
    if (o.collection.empty()) throw std::invalid_argument("--collection is required");
    manifest.add_input(o.collection);
    BoundedCollection c;
    if (o.bounds_flag.empty()) {
      c = load_bounded_collection(o.collection);
    } else {
      c = load_bounded_collection(o.collection, parse_bounds_flag(o.bounds_flag),
                                  o.integral);
    }
    if (c.empty()) throw std::domain_error("maxmin needs a non-empty collection");
    result = maxmin_opposite(c, c.members.front().intervals, o.use_contracted);
  }
  emit_output(o.out.empty() ? std::nullopt : std::optional(o.out),
              render_vector(result, o.format), manifest);
  return 0;
}

// ---------------------------------------------------------------------------
// project
// ---------------------------------------------------------------------------

struct ProjectOptions {
  std::string constraints;
  std::string anchor;
  std::string mode = "unit";
  double beta = 1.0;
  std::string freq;
  bool jitter = false;
  std::uint64_t rng_seed = 1;
  std::string bounds_flag;
  bool integral = false;
  std::string out;
};

int cmd_project(const ProjectOptions& o, const CLI::App* cmd,
                const std::vector<std::string>& argv) {
  Manifest manifest("project", argv);
  if (o.constraints.empty() || o.anchor.empty()) {
    throw std::invalid_argument("--constraints and --anchor are required");
  }
  manifest.add_input(o.constraints);
  const ConstraintSystem cs = load_constraint_system(o.constraints);
  manifest.add_input(o.anchor);

  json payload;
  if (cs.kind == ConstraintSystem::Kind::Box) {
    BoundedVector anchor;
    if (o.bounds_flag.empty()) {
      anchor = load_bounded_vector(o.anchor, BoundedInterval(0.0, 1.0), o.integral);
    } else {
      anchor = load_bounded_vector(o.anchor, parse_bounds_flag(o.bounds_flag), o.integral);
    }
    const BoundedVector projected = project_box(anchor, cs.box_bounds);
    const ProximityObjective obj = l1_objective(anchor);
    payload = json{{"projected", projected.values},
                   {"objective", evaluate_proximity(obj, projected)},
                   {"kind", "box"}};
  } else {
    const BinaryVector anchor = load_binary_vector(o.anchor);
    ProximityObjective obj;
    std::optional<Rng> jitter_rng;
    if (o.mode == "frequency") {
      if (o.freq.empty()) throw std::invalid_argument("frequency mode needs --freq");
      manifest.add_input(o.freq);
      const FrequencyMemory mem = load_frequency_memory(o.freq);
      if (o.jitter) {
        const std::uint64_t seed_value = resolve_rng_seed(cmd, o.rng_seed);
        manifest.set_rng_seed(seed_value);
        jitter_rng.emplace(seed_value);
      }
      obj = build_coefficients(anchor, mem, o.beta,
                               jitter_rng ? &*jitter_rng : nullptr);
    } else {
      obj = build_coefficients(anchor);
    }
    BinaryVector projected;
    switch (cs.kind) {
      case ConstraintSystem::Kind::Gub: projected = project_gub(obj, cs); break;
      default: projected = project_generalized_multichoice(obj, cs); break;
    }
    payload = json{{"projected", projected.bits},
                   {"objective", evaluate_proximity(obj, projected)},
                   {"kind", cs.kind == ConstraintSystem::Kind::Gub ? "gub" : "multichoice"},
                   {"feasible", cs.satisfied_by(projected)}};
  }
  emit_output(o.out.empty() ? std::nullopt : std::optional(o.out),
              payload.dump(2) + "\n", manifest);
  return 0;
}

// ---------------------------------------------------------------------------
// experiment
// ---------------------------------------------------------------------------

struct ExperimentOptions {
  std::size_t n = 16;
  int trials = 10;
  std::uint64_t rng_seed = 1;
  std::string out_dir;
  std::size_t samples = 0;  // 0: match the sequential generator's count
  double lower = 0.0;
  double upper = 1.0;
  double lambda_l = 0.2;
  double lambda_u = 0.3;
  int steps = 100;
};

int cmd_experiment_divbench(const ExperimentOptions& o, const CLI::App* cmd,
                            const std::vector<std::string>& argv) {
  Manifest manifest("experiment divbench", argv);
  const std::uint64_t base_seed = resolve_rng_seed(cmd, o.rng_seed);
  manifest.set_rng_seed(base_seed);

  std::ostringstream os;
  os << "generator,trial,n," << kDiversityReportCsvHeader << '\n';
  auto row = [&](const char* name, int trial, const DiversityReport& r) {
    os << name << ',' << trial << ',' << o.n << ',' << to_csv_row(r) << '\n';
  };
  for (int trial = 0; trial < o.trials; ++trial) {
    // Per-trial derived seed keeps trials independent of evaluation order.
    Rng rng(derived_seed(base_seed, static_cast<std::uint64_t>(trial)));
    const BinaryVector seed = BinaryVector::random(o.n, rng);

    const BinaryCollection seq = sequential_generator(seed);
    FirstGenParams fp;
    fp.h_max = std::max(1, std::min(static_cast<int>(o.n) - 1,
                                    static_cast<int>(o.n) / 5));
    const BinaryCollection first = first_generator(seed, fp);

    BinaryCollection random_uniform;
    random_uniform.provenance.generator = "random-uniform";
    const std::size_t k = o.samples > 0 ? o.samples : seq.size();
    for (std::size_t i = 0; i < k; ++i) {
      random_uniform.members.push_back(BinaryVector::random(o.n, rng));
    }

    row("random-uniform", trial, report(random_uniform, seed));
    row("first", trial, report(first, seed));
    row("sequential", trial, report(seq, seed));
  }

  std::filesystem::create_directories(o.out_dir);
  const std::string out_path =
      (std::filesystem::path(o.out_dir) / "divbench.csv").string();
  write_text_file(out_path, os.str());
  manifest.add_output(out_path);
  manifest.write((std::filesystem::path(o.out_dir) / "manifest.json").string());
  return 0;
}

int cmd_experiment_degeneracy(const ExperimentOptions& o,
                              const std::vector<std::string>& argv) {
  Manifest manifest("experiment degeneracy", argv);
  const BoundedInterval iv(o.lower, o.upper, o.lambda_l, o.lambda_u);
  std::ostringstream os;
  os << "x_prime,obl_distance,dbl_distance\n";
  for (int i = 0; i <= o.steps; ++i) {
    const double x = o.lower + (o.upper - o.lower) * static_cast<double>(i) / o.steps;
    const double obl = std::abs(obl_opposite(x, iv) - x);
    const double dbl = std::abs(dbl_opposite(x, iv) - x);
    os << format_value(x) << ',' << format_value(obl) << ',' << format_value(dbl) << '\n';
  }
  std::filesystem::create_directories(o.out_dir);
  const std::string out_path =
      (std::filesystem::path(o.out_dir) / "degeneracy.csv").string();
  write_text_file(out_path, os.str());
  manifest.add_output(out_path);
  manifest.write((std::filesystem::path(o.out_dir) / "manifest.json").string());
  return 0;
}

// ---------------------------------------------------------------------------
// replay
// ---------------------------------------------------------------------------

int cmd_replay(const std::string& manifest_path) {
  const json m = json::parse(read_text_file(manifest_path));
  // Inputs must be unchanged for the replay to be meaningful.
  for (const auto& [path, digest_value] : m.at("inputs").items()) {
    if (file_digest(path) != digest_value.get<std::string>()) {
      std::cerr << "replay: input " << path << " changed since the recorded run\n";
      return 2;
    }
  }
  const std::vector<std::string> argv = m.at("argv").get<std::vector<std::string>>();
  const int code = run_cli(argv, /*in_replay=*/true);
  if (code != 0) return code;
  for (const auto& [path, digest_value] : m.at("outputs").items()) {
    if (file_digest(path) != digest_value.get<std::string>()) {
      std::cerr << "replay: output " << path << " does not reproduce\n";
      return 2;
    }
  }
  std::cout << "replay: outputs reproduce byte-identically\n";
  return 0;
}

// ---------------------------------------------------------------------------
// wiring
// ---------------------------------------------------------------------------

int run_cli(const std::vector<std::string>& args, bool in_replay) {
  CLI::App app{"diversification-based solution generators"};
  app.require_subcommand(1);

  GenerateOptions gen;
  OppositeOptions opp;
  ProjectOptions proj;
  ExperimentOptions exp;
  std::string replay_path;

  CLI::App* generate = app.add_subcommand("generate", "produce a diverse collection");
  generate->require_subcommand(1);
  CLI::App* g_first = generate->add_subcommand("first", "first diversification generator");
  CLI::App* g_first1a = generate->add_subcommand("first1a", "adjacent-pair 1A variant");
  CLI::App* g_seq = generate->add_subcommand("sequential", "sequential max/min generator");
  CLI::App* g_perm = generate->add_subcommand("perm", "permutation generator P(h)/P*(h)");
  CLI::App* g_lift = generate->add_subcommand("lift", "lift a binary collection to bounds");
  for (CLI::App* cmd : {g_first, g_first1a, g_seq, g_perm, g_lift}) {
    add_common_generate_options(cmd, gen);
  }
  for (CLI::App* cmd : {g_first, g_first1a, g_lift}) add_first_options(cmd, gen);
  g_first->add_flag("--augmented", gen.augmented, "append the 1A variants");
  g_perm->set_help_flag("--help", "print help");  // frees -h for the stride option
  g_perm->add_option("--h", gen.h_values, "stride value(s); default 1..n/2");
  g_perm->add_flag("--sqrt-only", gen.sqrt_only, "only the strides nearest sqrt(n)");
  gen.reversals_opt =
      g_perm->add_flag("--reversals,!--no-reversals", gen.reversals,
                       "emit P*(h) reversals (default: on for the full range)");
  g_lift->add_option("--rule", gen.rule, "lift rule: r1|r2")
      ->check(CLI::IsMember({"r1", "r2"}));
  gen.lambda_l_opt = g_lift->add_option("--lambda-l", gen.lambda_l, "fixed lambda_L");
  gen.lambda_u_opt = g_lift->add_option("--lambda-u", gen.lambda_u, "fixed lambda_U");
  g_lift->add_option("--lambda-interval", gen.lambda_interval,
                     "sample lambdas per component from 'A,B'");
  g_lift->add_option("--midpoint-bit", gen.midpoint_bit, "bit for seed values at midpoint")
      ->check(CLI::IsMember({0, 1}));
  g_lift->add_option("--generator", gen.generator, "binary generator behind the lift")
      ->check(CLI::IsMember({"first", "first1a", "sequential"}));
  g_lift->add_option("--bounds", gen.bounds_flag, "uniform bounds 'L,U' for CSV seeds");
  g_lift->add_flag("--integral", gen.integral, "treat components as integers");

  CLI::App* opposite = app.add_subcommand("opposite", "compute opposite points");
  opposite->require_subcommand(1);
  CLI::App* o_obl = opposite->add_subcommand("obl", "classical reflection U+L-x'");
  CLI::App* o_dbl = opposite->add_subcommand("dbl", "farthest contracted bound");
  CLI::App* o_maxmin = opposite->add_subcommand("maxmin", "max-min opposite of a collection");
  for (CLI::App* cmd : {o_obl, o_dbl, o_maxmin}) {
    cmd->add_option("--bounds", opp.bounds_flag, "uniform bounds 'L,U' for CSV inputs");
    cmd->add_flag("--integral", opp.integral, "treat components as integers");
    cmd->add_option("--out", opp.out, "output path (default: stdout)");
    cmd->add_option("--format", opp.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
  }
  for (CLI::App* cmd : {o_obl, o_dbl}) {
    cmd->add_option("--input", opp.input, "solution file (CSV or JSON)");
  }
  opp.lambda_l_opt = o_dbl->add_option("--lambda-l", opp.lambda_l, "override lambda_L");
  opp.lambda_u_opt = o_dbl->add_option("--lambda-u", opp.lambda_u, "override lambda_U");
  o_dbl->add_option("--tie", opp.tie, "midpoint tie: upper|lower")
      ->check(CLI::IsMember({"upper", "lower"}));
  o_maxmin->add_option("--collection", opp.collection, "collection file (CSV or JSON)");
  o_maxmin->add_flag("--use-contracted", opp.use_contracted,
                     "use contracted bounds as sentinels");

  CLI::App* project_cmd = app.add_subcommand("project", "project onto a feasible region");
  project_cmd->add_option("--constraints", proj.constraints, "constraint system JSON");
  project_cmd->add_option("--anchor", proj.anchor, "anchor solution file");
  project_cmd->add_option("--mode", proj.mode, "coefficient mode: unit|frequency")
      ->check(CLI::IsMember({"unit", "frequency"}));
  project_cmd->add_option("--beta", proj.beta, "frequency weighting strength");
  project_cmd->add_option("--freq", proj.freq, "frequency memory JSON");
  project_cmd->add_flag("--jitter", proj.jitter, "add seeded random jitter to magnitudes");
  project_cmd->add_option("--rng-seed", proj.rng_seed, "jitter seed");
  project_cmd->add_option("--bounds", proj.bounds_flag, "uniform bounds for box anchors");
  project_cmd->add_flag("--integral", proj.integral, "treat box anchor as integer-valued");
  project_cmd->add_option("--out", proj.out, "output path (default: stdout)");

  CLI::App* experiment = app.add_subcommand("experiment", "reproducible mini-benchmarks");
  experiment->require_subcommand(1);
  CLI::App* e_div = experiment->add_subcommand(
      "divbench", "diversity of generated vs random collections");
  e_div->add_option("--n", exp.n, "dimension");
  e_div->add_option("--trials", exp.trials, "number of trials");
  e_div->add_option("--rng-seed", exp.rng_seed, "base RNG seed");
  e_div->add_option("--samples", exp.samples,
                    "random-uniform sample count (default: match sequential)");
  e_div->add_option("--out", exp.out_dir, "output directory")->required();
  CLI::App* e_deg = experiment->add_subcommand(
      "degeneracy", "|opposite - x'| for OBL vs DBL across the interval");
  e_deg->add_option("--lower", exp.lower, "interval lower bound");
  e_deg->add_option("--upper", exp.upper, "interval upper bound");
  e_deg->add_option("--lambda-l", exp.lambda_l, "lambda_L");
  e_deg->add_option("--lambda-u", exp.lambda_u, "lambda_U");
  e_deg->add_option("--steps", exp.steps, "sweep resolution");
  e_deg->add_option("--out", exp.out_dir, "output directory")->required();

  CLI::App* replay = app.add_subcommand("replay", "re-run a manifest and verify digests");
  replay->add_option("manifest", replay_path, "manifest JSON path")->required();

  // Long-form help only; the short -h would shadow the --h stride option.
  app.set_help_flag("--help", "print help");
  for (CLI::App* sub : {generate, g_first, g_first1a, g_seq, g_perm, g_lift, opposite,
                        o_obl, o_dbl, o_maxmin, project_cmd, experiment, e_div, e_deg,
                        replay}) {
    sub->set_help_flag("--help", "print help");
  }

  try {
    // CLI11's vector overload consumes the args back to front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (g_first->parsed()) return cmd_generate_binary(gen, g_first, "first", args);
    if (g_first1a->parsed()) return cmd_generate_binary(gen, g_first1a, "first1a", args);
    if (g_seq->parsed()) return cmd_generate_binary(gen, g_seq, "sequential", args);
    if (g_perm->parsed()) return cmd_generate_perm(gen, args);
    if (g_lift->parsed()) return cmd_generate_lift(gen, g_lift, args);
    if (o_obl->parsed()) return cmd_opposite(opp, "obl", args);
    if (o_dbl->parsed()) return cmd_opposite(opp, "dbl", args);
    if (o_maxmin->parsed()) return cmd_opposite(opp, "maxmin", args);
    if (project_cmd->parsed()) return cmd_project(proj, project_cmd, args);
    if (e_div->parsed()) return cmd_experiment_divbench(exp, e_div, args);
    if (e_deg->parsed()) return cmd_experiment_degeneracy(exp, args);
    if (replay->parsed()) {
      if (in_replay) throw std::invalid_argument("nested replay is not allowed");
      return cmd_replay(replay_path);
    }
  } catch (const io_error& e) {
    std::cerr << "divgen: i/o error: " << e.what() << '\n';
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "divgen: i/o error: " << e.what() << '\n';
    return 3;
  } catch (const parse_error& e) {
    std::cerr << "divgen: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "divgen: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "divgen: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "divgen: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "divgen: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, /*in_replay=*/false);
}
