#include "chernform_cli/cli.hpp"

#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "chernform/chernform.hpp"

namespace chernform::cli {

namespace {

using io::json;

constexpr int kSchema = 1;

struct Globals {
  std::uint64_t seed = 0;
  int trials = 50;
  double tol = 1e-9;
  std::string mode = "float";
  std::string output = "json";
};

// Result of one subcommand: the JSON report, its text rendering and the exit code.
struct Outcome {
  json report;
  std::vector<std::string> text;
  int code = kPass;
};

ScalarMode scalar_mode(const Globals& g) { return g.mode == "exact" ? ScalarMode::Exact : ScalarMode::Float; }

json config_json(const Globals& g) {
  return {{"seed", g.seed}, {"trials", g.trials}, {"tol", g.tol}, {"mode", g.mode}};
}

json base_report(const std::string& command, const Globals& g) {
  return {{"schema", kSchema}, {"command", command}, {"config", config_json(g)}};
}

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

/// Inline JSON (starting with '{' or '[') or a file path.
json load_json(const std::string& text, const std::string& flag) {
  std::string body = text;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (text[first] != '{' && text[first] != '[')) {
    std::ifstream in(text);
    if (!in) throw InvalidInput(flag + ": cannot open '" + text + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw InvalidInput(flag + ": malformed JSON (" + e.what() + ")");
  }
}

json witness_json(const VerdictReport& v) {
  json out = json::array();
  for (const auto& x : v.witness) {
    json vec = json::array();
    for (const auto& z : x) vec.push_back({{"re", z.real()}, {"im", z.imag()}});
    out.push_back(std::move(vec));
  }
  return out;
}

json verdict_json(const VerdictReport& v) {
  json out = {{"pass", v.pass},         {"degree", v.degree},       {"trials", v.trials},
              {"min", v.min_value},     {"scale", v.scale},         {"threshold", v.threshold},
              {"imaginary_residual", v.imaginary_residual}};
  if (!v.pass) out["witness"] = witness_json(v);
  return out;
}

// ---------------------------------------------------------------------------
// Instances

struct RandomSpec {
  bool enabled = false;
  int n = 2;
  int r = 2;
  int m = 2;
  int instances = 1;
};

/// One ingested or generated instance, ready to run.
struct Instance {
  json embedded;  // re-ingestable form, stored under "instance"
  std::optional<CurvatureTensor> tensor;
  std::optional<CurvatureMatrix> matrix;
  std::uint64_t sampling_seed = 0;

  CurvatureMatrix curvature() const {
    if (tensor) return bott_chern_curvature(factor_from_tensor(*tensor));
    return *matrix;
  }
};

void add_instance_options(CLI::App* sub, std::string& instance_arg, RandomSpec& random, int& index) {
  sub->add_option("--instance", instance_arg,
                  "tensor {n,r,m,T}, curvature {n,r,omega}, or an earlier report (inline JSON or file)");
  sub->add_flag("--random", random.enabled, "generate seeded random tensor instances");
  sub->add_option("--n", random.n, "base dimension")->check(CLI::Range(1, kMaxBaseDim));
  sub->add_option("--r", random.r, "rank")->check(CLI::Range(1, 16));
  sub->add_option("--m", random.m, "columns of the factor A")->check(CLI::Range(1, 64));
  sub->add_option("--instances", random.instances, "number of random instances")->check(CLI::Range(1, 100000));
  sub->add_option("--index", index, "which instance of a multi-instance report to re-ingest")
      ->check(CLI::NonNegativeNumber);
}

json random_json(const RandomSpec& random, const Globals& g) {
  json out = {{"n", random.n},
              {"r", random.r},
              {"m", random.m},
              {"instances", random.instances},
              {"seed", g.seed},
              {"tensor_seed", "stream_seed(seed, 2k)"},
              {"sampling_seed", "stream_seed(seed, 2k+1)"}};
  out["distribution"] = scalar_mode(g) == ScalarMode::Float
                            ? "T entries i.i.d. standard complex normal, E|z|^2 = 1"
                            : "T entries with real and imaginary parts i.i.d. uniform on {-3,...,3}/2";
  return out;
}

/// Builds the instance list. An ingested report reuses its recorded sampling
/// seed unless --seed was given explicitly.
std::vector<Instance> gather_instances(const std::string& instance_arg, const RandomSpec& random, int index,
                                       const Globals& g, bool seed_given, json& report) {
  const ScalarMode mode = scalar_mode(g);
  std::vector<Instance> out;
  if (random.enabled == !instance_arg.empty())
    throw InvalidInput("exactly one of --instance or --random is required");
  if (random.enabled) {
    report["random"] = random_json(random, g);
    for (int k = 0; k < random.instances; ++k) {
      Instance inst;
      const auto kk = static_cast<std::uint64_t>(k);
      inst.tensor = random_tensor(random.n, random.r, random.m, mode, stream_seed(g.seed, 2 * kk));
      inst.embedded = io::tensor_to_json(*inst.tensor);
      inst.sampling_seed = stream_seed(g.seed, 2 * kk + 1);
      out.push_back(std::move(inst));
    }
    return out;
  }

  json j = load_json(instance_arg, "--instance");
  Instance inst;
  inst.sampling_seed = g.seed;
  if (j.is_object() && j.contains("schema") && j.contains("instances")) {
    const json& list = j["instances"];
    if (!list.is_array() || static_cast<std::size_t>(index) >= list.size())
      throw InvalidInput("--instance: report has no instance at index " + std::to_string(index));
    const json& entry = list[static_cast<std::size_t>(index)];
    if (!entry.contains("instance")) throw InvalidInput("--instance: instances[" + std::to_string(index) + "] has no \"instance\"");
    if (!seed_given && entry.contains("sampling_seed") && entry["sampling_seed"].is_number_unsigned())
      inst.sampling_seed = entry["sampling_seed"].get<std::uint64_t>();
    j = entry["instance"];
  }
  if (j.is_object() && j.contains("T")) {
    inst.tensor = io::tensor_from_json(j, mode);
    inst.embedded = io::tensor_to_json(*inst.tensor);
  } else if (j.is_object() && j.contains("omega")) {
    inst.matrix = io::curvature_from_json(j, mode);
    inst.embedded = io::curvature_to_json(*inst.matrix);
  } else {
    throw InvalidInput("instance: expected a tensor (field \"T\") or a curvature matrix (field \"omega\")");
  }
  out.push_back(std::move(inst));
  return out;
}

json instance_header(const Instance& inst) {
  return {{"instance", inst.embedded},
          {"instance_hash", io::content_hash(inst.embedded)},
          {"sampling_seed", inst.sampling_seed},
          {"witnessed", inst.tensor.has_value()}};
}

// ---------------------------------------------------------------------------
// Subcommands

Outcome forms_eval(const Globals& g, const std::string& form_arg, const std::string& vectors_arg) {
  const ScalarMode mode = scalar_mode(g);
  const Form phi = io::form_from_json(load_json(form_arg, "--form"), mode);
  Outcome o{base_report("forms eval", g), {}, kPass};
  o.report["form"] = io::form_to_json(phi);
  o.report["form_hash"] = io::content_hash(o.report["form"]);
  if (!vectors_arg.empty()) {
    const auto xs = io::vectors_from_json(load_json(vectors_arg, "--vectors"), mode, phi.base_dim());
    const Scalar value = evaluate(phi, xs);
    o.report["value"] = io::scalar_to_json(value);
    o.report["pass"] = true;
    o.text.push_back("value = " + value.to_string());
    return o;
  }
  const VerdictReport v = nonnegative_sampled(phi, {g.trials, g.seed, g.tol});
  o.report["sampling"] = {{"distribution", "X_b coordinates i.i.d. standard complex normal"},
                          {"seed", g.seed}};
  o.report["verdict"] = verdict_json(v);
  o.report["pass"] = v.pass;
  o.code = v.pass ? kPass : kCheckFailed;
  o.text.push_back(std::string("nonnegative: ") + verdict(v.pass) + "  min " + fmt(v.min_value) + "  threshold " +
                   fmt(v.threshold));
  return o;
}

Outcome curvature_build(const Globals& g, const std::string& instance_arg, const RandomSpec& random, int index,
                        bool seed_given) {
  Outcome o{base_report("curvature build", g), {}, kPass};
  const auto instances = gather_instances(instance_arg, random, index, g, seed_given, o.report);
  const bool exact = scalar_mode(g) == ScalarMode::Exact;
  json list = json::array();
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const Instance& inst = instances[k];
    const CurvatureMatrix omega = inst.curvature();
    const ChernFormSet cs = chern_forms(omega, exact ? PrefactorMode::Exact : PrefactorMode::Numeric);
    json entry = instance_header(inst);
    entry.erase("sampling_seed");
    entry["curvature"] = io::curvature_to_json(omega);
    json forms = json::array();
    for (int i = 1; i <= cs.top_degree(); ++i) forms.push_back(io::form_to_json(cs.c(i), false));
    entry["chern_forms"] = std::move(forms);
    entry["prefactor"] = exact ? "c_i stored as (sqrt(-1))^i * principal-minor sum; multiply by normalization"
                               : "c_i include (sqrt(-1)/2pi)^i";
    if (exact) {
      json norm = json::array();
      for (int i = 1; i <= cs.top_degree(); ++i) norm.push_back(cs.normalization(i));
      entry["normalization"] = std::move(norm);
    }
    const int n = omega.base_dim();
    json table = json::array();
    o.text.push_back("instance " + std::to_string(k) + " (" + entry["instance_hash"].get<std::string>() + ")");
    for (const Partition& lambda : partitions(n, omega.rank())) {
      const Scalar top = top_coefficient(chern_product(cs, lambda));
      const double value = top.real_d() * cs.normalization(n);
      json row = {{"lambda", lambda.to_string()}, {"top", value}};
      if (exact) row["top_exact"] = top.exact().re().get_str();
      table.push_back(std::move(row));
      o.text.push_back("  top(c" + lambda.to_string() + ") = " + fmt(value));
    }
    entry["top_coefficients"] = std::move(table);
    list.push_back(std::move(entry));
  }
  o.report["instances"] = std::move(list);
  o.report["pass"] = true;
  return o;
}

Outcome schur_table(const Globals& g, int weight, int rank) {
  Outcome o{base_report("schur table", g), {}, kPass};
  o.report["i"] = weight;
  o.report["r"] = rank;
  json rows = json::array();
  const auto names = chern_names(rank);
  for (const Partition& lambda : partitions(weight, rank)) {
    const std::string poly = schur_polynomial(lambda, rank).to_string(names);
    rows.push_back({{"lambda", lambda.to_string()}, {"schur", poly}});
    o.text.push_back("S" + lambda.to_string() + " = " + poly);
  }
  o.report["partitions"] = std::move(rows);
  o.report["pass"] = true;
  return o;
}

Outcome schur_verify(const Globals& g, const std::string& instance_arg, const RandomSpec& random, int index,
                     bool seed_given, int min_degree, int max_degree) {
  Outcome o{base_report("schur verify", g), {}, kPass};
  const auto instances = gather_instances(instance_arg, random, index, g, seed_given, o.report);
  o.report["sampling"] = {{"distribution", "X_b coordinates i.i.d. standard complex normal"},
                          {"entry_seed", "stream_seed(sampling_seed, entry index)"}};
  bool all = true;
  json list = json::array();
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const Instance& inst = instances[k];
    const ChernFormSet cs = chern_forms(inst.curvature());
    const SchurReport rep = verify_schur_nonnegativity(cs, min_degree, max_degree, {g.trials, inst.sampling_seed, g.tol});
    json entry = instance_header(inst);
    json rows = json::array();
    for (const SchurEntry& e : rep.entries)
      rows.push_back({{"degree", e.degree}, {"lambda", e.lambda.to_string()}, {"verdict", verdict_json(e.verdict)}});
    entry["entries"] = std::move(rows);
    entry["pass"] = rep.pass;
    all = all && rep.pass;
    o.text.push_back("instance " + std::to_string(k) + " (" + entry["instance_hash"].get<std::string>() + "): " +
                     verdict(rep.pass));
    for (const SchurEntry& e : rep.entries)
      o.text.push_back("  S" + e.lambda.to_string() + "  min " + fmt(e.verdict.min_value) + "  " + verdict(e.verdict.pass));
    list.push_back(std::move(entry));
  }
  o.report["instances"] = std::move(list);
  o.report["pass"] = all;
  o.code = all ? kPass : kCheckFailed;
  return o;
}

Outcome bounds_chain(const Globals& g, const std::string& instance_arg, const RandomSpec& random, int index,
                     bool seed_given, const std::string& lambda_arg) {
  Outcome o{base_report("bounds chain", g), {}, kPass};
  const auto instances = gather_instances(instance_arg, random, index, g, seed_given, o.report);
  bool all = true;
  json list = json::array();
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const Instance& inst = instances[k];
    const CurvatureMatrix omega = inst.curvature();
    const ChernFormSet cs = chern_forms(omega);
    std::vector<Partition> lambdas;
    if (!lambda_arg.empty()) {
      lambdas.push_back(Partition::parse(lambda_arg, omega.rank()));
    } else {
      for (int i = 1; i <= omega.base_dim(); ++i)
        for (const Partition& p : partitions(i, omega.rank())) lambdas.push_back(p);
    }
    json entry = instance_header(inst);
    json chains = json::array();
    bool pass = true;
    o.text.push_back("instance " + std::to_string(k) + " (" + entry["instance_hash"].get<std::string>() + ")");
    for (std::size_t c = 0; c < lambdas.size(); ++c) {
      const ChainReport rep =
          bounds_chain_check(cs, lambdas[c], {g.trials, stream_seed(inst.sampling_seed, c), g.tol});
      json steps = json::array();
      for (const ChainStep& s : rep.steps)
        steps.push_back({{"side", s.side == ChainSide::Lower ? "lower" : "upper"},
                         {"elementary", s.elementary},
                         {"statement", s.statement},
                         {"verdict", verdict_json(s.verdict)}});
      json chain = {{"lambda", rep.lambda.to_string()}, {"degree", rep.degree}, {"steps", std::move(steps)},
                    {"pass", rep.pass}};
      if (rep.top)
        chain["top"] = {{"c_n", rep.top->c_n},     {"c_lambda", rep.top->c_lambda}, {"c1_n", rep.top->c1_n},
                        {"scale", rep.top->scale}, {"pass", rep.top->pass}};
      chains.push_back(std::move(chain));
      pass = pass && rep.pass;
      std::string line = "  chain " + rep.lambda.to_string() + ": " + verdict(rep.pass) + " (" +
                         std::to_string(rep.steps.size()) + " steps)";
      if (rep.top)
        line += "  0 <= " + fmt(rep.top->c_n) + " <= " + fmt(rep.top->c_lambda) + " <= " + fmt(rep.top->c1_n);
      o.text.push_back(line);
    }
    entry["chains"] = std::move(chains);
    entry["pass"] = pass;
    all = all && pass;
    list.push_back(std::move(entry));
  }
  o.report["instances"] = std::move(list);
  o.report["pass"] = all;
  o.code = all ? kPass : kCheckFailed;
  return o;
}

std::vector<std::string> generator_names(const ModelManifold& m) {
  std::vector<std::string> names;
  for (int j = 0; j < m.num_generators(); ++j)
    names.push_back(m.num_generators() == 1 ? "x" : "x" + std::to_string(j + 1));
  return names;
}

json model_json(const ModelManifold& m) {
  const auto names = generator_names(m);
  json classes = json::array();
  for (const auto& c : m.tangent_chern()) classes.push_back(c.to_string(names));
  return {{"label", m.label()},
          {"dim", m.dim()},
          {"tangent_chern", std::move(classes)},
          {"tangent_globally_generated", m.tangent_globally_generated()},
          {"cotangent_globally_generated", m.cotangent_globally_generated()}};
}

std::string z_str(const mpz_class& z) { return z.get_str(); }

json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json rational_json(const mpq_class& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Outcome model_chern_numbers(const Globals& g, const std::string& model) {
  const ModelManifold m = parse_model(model);
  Outcome o{base_report("model chern-numbers", g), {}, kPass};
  o.report["model"] = model_json(m);
  const auto dual = dual_tangent_chern(m);
  json rows = json::array();
  for (const Partition& lambda : partitions(std::max(1, m.dim()), std::max(1, m.dim()))) {
    if (m.dim() == 0) break;
    const mpz_class v = chern_number(m, lambda);
    const mpz_class s = chern_number(m, lambda, &dual);
    rows.push_back({{"lambda", lambda.to_string()}, {"value", integer_json(v)}, {"signed", integer_json(s)}});
    o.text.push_back("c" + lambda.to_string() + "[" + m.label() + "] = " + z_str(v));
  }
  o.report["numbers"] = std::move(rows);
  o.report["pass"] = true;
  return o;
}

Outcome model_bounds(const Globals& g, const std::string& model, bool use_signed) {
  const ModelManifold m = parse_model(model);
  const NumberBoundsReport rep = verify_number_bounds(m, use_signed);
  Outcome o{base_report("model bounds", g), {}, rep.pass ? kPass : kCheckFailed};
  o.report["model"] = model_json(m);
  o.report["signed"] = rep.is_signed;
  json rows = json::array();
  std::string middle;
  for (const auto& [lambda, v] : rep.numbers) {
    rows.push_back({{"lambda", lambda.to_string()}, {"value", integer_json(v)}});
    middle += (middle.empty() ? "" : ", ") + z_str(v);
  }
  o.report["numbers"] = std::move(rows);
  o.report["lower"] = integer_json(rep.lower);
  o.report["upper"] = integer_json(rep.upper);
  o.report["ordering_pass"] = rep.ordering_pass;
  o.report["vanishing_applies"] = rep.vanishing_applies;
  o.report["vanishing_pass"] = rep.vanishing_pass;
  o.report["pass"] = rep.pass;
  o.report["table"] = "0 <= " + z_str(rep.lower) + " <= {" + middle + "} <= " + z_str(rep.upper);
  o.text.push_back(o.report["table"].get<std::string>() + "  " + verdict(rep.pass));
  if (rep.vanishing_applies) o.text.push_back(std::string("vanishing propagation: ") + verdict(rep.vanishing_pass));
  return o;
}

std::pair<long, long> parse_range(const std::string& text) {
  auto to_long = [&](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw InvalidInput("--m: expected an integer or a range a..b, got '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const long v = to_long(text);
    return {v, v};
  }
  const long lo = to_long(text.substr(0, dots));
  const long hi = to_long(text.substr(dots + 2));
  if (lo > hi) throw InvalidInput("--m: empty range '" + text + "'");
  if (hi - lo > 100000) throw InvalidInput("--m: range too long");
  return {lo, hi};
}

Outcome model_rr(const Globals& g, const std::string& model, const std::string& line, const std::string& range) {
  const ModelManifold m = parse_model(model);
  const RingElement l = parse_line(m, line);
  const auto [lo, hi] = parse_range(range);
  const auto names = generator_names(m);
  Outcome o{base_report("model rr", g), {}, kPass};
  o.report["model"] = model_json(m);
  o.report["line"] = line;
  o.report["line_c1"] = l.to_string(names);
  o.report["todd"] = todd_class(m).to_string(names);
  o.report["kodaira_leading"] = rational_json(kodaira_leading(m));
  json rows = json::array();
  for (long mm = lo; mm <= hi; ++mm) {
    const mpq_class chi = euler_characteristic(m, l, mm);
    rows.push_back({{"m", mm}, {"chi", rational_json(chi)}});
    o.text.push_back("chi(" + m.label() + ", " + line + "^" + std::to_string(mm) + ") = " + chi.get_str());
  }
  o.report["chi"] = std::move(rows);
  o.report["pass"] = true;
  return o;
}

void emit(const Outcome& o, const Globals& g, std::ostream& out) {
  if (g.output == "text") {
    for (const auto& line : o.text) out << line << '\n';
    out << (o.report.value("pass", false) ? "PASS" : "FAIL") << '\n';
  } else {
    out << o.report.dump(2) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chern and Schur forms, Chern numbers and Riemann-Roch checks", "chernform"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "base seed for sampling and random instances");
  app.add_option("--trials", g.trials, "samples per nonnegativity check")->check(CLI::PositiveNumber);
  app.add_option("--tol", g.tol, "relative tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--mode", g.mode, "scalar mode")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--output", g.output, "report format")->check(CLI::IsMember({"json", "text"}));

  auto group = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->require_subcommand(1);
    sub->fallthrough();
    return sub;
  };
  auto leaf = [](CLI::App* parent, const char* name, const char* help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };

  std::string form_arg, vectors_arg, instance_arg, lambda_arg, model, line = "K", range = "0";
  RandomSpec random;
  int index = 0, weight = 1, rank = 1, min_degree = 1, max_degree = kMaxBaseDim;
  bool use_signed = false;

  CLI::App* forms = group("forms", "differential forms");
  CLI::App* forms_eval_cmd = leaf(forms, "eval", "evaluate a form, or sample its nonnegativity");
  forms_eval_cmd->add_option("--form", form_arg, "form literal (inline JSON or file)")->required();
  forms_eval_cmd->add_option("--vectors", vectors_arg, "tangent vectors [[{re,im},...],...]");

  CLI::App* curv = group("curvature", "curvature matrices");
  CLI::App* curv_build = leaf(curv, "build", "curvature, Chern forms and top coefficients of an instance");
  add_instance_options(curv_build, instance_arg, random, index);

  CLI::App* schur = group("schur", "Schur polynomials and Schur forms");
  CLI::App* schur_table_cmd = leaf(schur, "table", "Schur polynomials of Gamma(i, r)");
  schur_table_cmd->add_option("--i", weight, "weight")->required()->check(CLI::Range(1, 12));
  schur_table_cmd->add_option("--r", rank, "rank bound")->required()->check(CLI::Range(1, 12));
  CLI::App* schur_verify_cmd = leaf(schur, "verify", "sample nonnegativity of every Schur form");
  add_instance_options(schur_verify_cmd, instance_arg, random, index);
  schur_verify_cmd->add_option("--min-degree", min_degree, "lowest degree i")->check(CLI::PositiveNumber);
  schur_verify_cmd->add_option("--max-degree", max_degree, "highest degree i")->check(CLI::PositiveNumber);

  CLI::App* bounds = group("bounds", "inequality chains between Chern forms");
  CLI::App* bounds_chain_cmd = leaf(bounds, "chain", "sample each step of 0 <= c_i <= c_lambda <= c_1^i");
  add_instance_options(bounds_chain_cmd, instance_arg, random, index);
  bounds_chain_cmd->add_option("--lambda", lambda_arg, "partition such as 2,1 (default: all)");

  CLI::App* model_cmd = group("model", "model manifolds");
  CLI::App* model_numbers = leaf(model_cmd, "chern-numbers", "all Chern numbers");
  model_numbers->add_option("--model", model, "e.g. CP3, T2, CP1xCP2")->required();
  CLI::App* model_bounds_cmd = leaf(model_cmd, "bounds", "0 <= c_n <= c_lambda <= c_1^n");
  model_bounds_cmd->add_option("--model", model, "model expression")->required();
  model_bounds_cmd->add_flag("--signed", use_signed, "use cotangent (signed) numbers");
  CLI::App* model_rr_cmd = leaf(model_cmd, "rr", "Riemann-Roch chi(M, L^m)");
  model_rr_cmd->add_option("--model", model, "model expression")->required();
  model_rr_cmd->add_option("--line", line, "K, O(d) or O(d1,...,dk)");
  model_rr_cmd->add_option("--m", range, "integer or range a..b");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  const bool seed_given = app.count("--seed") > 0;
  try {
    Outcome o;
    if (*forms_eval_cmd) {
      o = forms_eval(g, form_arg, vectors_arg);
    } else if (*curv_build) {
      o = curvature_build(g, instance_arg, random, index, seed_given);
    } else if (*schur_table_cmd) {
      o = schur_table(g, weight, rank);
    } else if (*schur_verify_cmd) {
      o = schur_verify(g, instance_arg, random, index, seed_given, min_degree, max_degree);
    } else if (*bounds_chain_cmd) {
      o = bounds_chain(g, instance_arg, random, index, seed_given, lambda_arg);
    } else if (*model_numbers) {
      o = model_chern_numbers(g, model);
    } else if (*model_bounds_cmd) {
      o = model_bounds(g, model, use_signed);
    } else {
      o = model_rr(g, model, line, range);
    }
    emit(o, g, out);
    return o.code;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace chernform::cli
