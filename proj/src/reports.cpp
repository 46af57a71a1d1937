#include "reports.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "certificates.hpp"
#include "error.hpp"
#include "fdalgebra.hpp"
#include "stable.hpp"
#include "towers.hpp"

namespace qci {

namespace {

std::uint64_t default_seed() {
  const char* env = std::getenv("QCI_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  require(end != nullptr && *end == '\0', ErrorCode::InvalidArgument,
          "QCI_SEED must be an unsigned integer");
  return static_cast<std::uint64_t>(v);
}

bool is_nonneg_int(const nlohmann::json& v) {
  return v.is_number_unsigned() ||
         (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

std::uint64_t get_uint(const nlohmann::json& cfg, const char* key,
                       std::uint64_t fallback) {
  if (!cfg.contains(key)) return fallback;
  const nlohmann::json& v = cfg.at(key);
  require(is_nonneg_int(v), ErrorCode::InvalidArgument,
          std::string(key) + " must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

std::string get_string(const nlohmann::json& cfg, const char* key) {
  require(cfg.contains(key), ErrorCode::InvalidArgument,
          std::string("missing required key ") + key);
  const nlohmann::json& v = cfg.at(key);
  require(v.is_string(), ErrorCode::InvalidArgument,
          std::string(key) + " must be a string");
  return v.get<std::string>();
}

PresentationPtr build_presentation(const nlohmann::json& cfg, const Field& f) {
  std::vector<std::uint32_t> exps;
  if (cfg.contains("exponents")) {
    const nlohmann::json& e = cfg.at("exponents");
    require(e.is_array() && !e.empty(), ErrorCode::InvalidArgument,
            "exponents must be a nonempty array");
    for (const nlohmann::json& x : e) {
      require(is_nonneg_int(x), ErrorCode::InvalidArgument,
              "exponents must be nonnegative integers");
      exps.push_back(x.get<std::uint32_t>());
    }
    require(!cfg.contains("n") ||
                get_uint(cfg, "n", 0) == exps.size(),
            ErrorCode::InvalidArgument, "n contradicts the exponent list");
  } else {
    const auto n = get_uint(cfg, "n", 0);
    const auto a = get_uint(cfg, "a", 0);
    require(n >= 1 && n <= 16, ErrorCode::InvalidArgument,
            "n must be between 1 and 16");
    require(a >= 2, ErrorCode::InvalidArgument, "a must be at least 2");
    exps.assign(static_cast<std::size_t>(n), static_cast<std::uint32_t>(a));
  }

  const std::size_t n = exps.size();
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<Scalar> comms;
  if (cfg.contains("commutators")) {
    const nlohmann::json& cj = cfg.at("commutators");
    require(cj.is_array() && cj.size() == pairs, ErrorCode::InvalidArgument,
            "commutators must list one scalar per generator pair");
    for (const nlohmann::json& s : cj) {
      require(s.is_string(), ErrorCode::InvalidArgument,
              "commutators must be scalar strings");
      comms.push_back(f.parse(s.get<std::string>()));
    }
  } else if (cfg.contains("q")) {
    const Scalar q = f.parse(get_string(cfg, "q"));
    comms.assign(pairs, q);
  } else {
    const bool same_exp =
        std::all_of(exps.begin(), exps.end(),
                    [&](std::uint32_t e) { return e == exps[0]; });
    if (pairs > 0 && same_exp)
      comms.assign(pairs, primitive_root_of_unity(f, exps[0]));
    else
      comms.assign(pairs, f.one());
  }
  return Presentation::create(f, std::move(exps), std::move(comms));
}

nlohmann::json echo_config(const ParsedConfig& c) {
  const PresentationPtr& p = c.presentation;
  nlohmann::json e;
  e["command"] = c.command;
  e["field"] = p->field.spec_string();
  e["n"] = p->n;
  e["exponents"] = p->exponents;
  nlohmann::json comms = nlohmann::json::array();
  for (const Scalar& s : p->commutators) comms.push_back(s.to_string());
  e["commutators"] = comms;
  e["seed"] = c.seed;
  e["trials"] = c.trials;
  return e;
}

nlohmann::json scalars_json(const std::vector<Scalar>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const Scalar& s : v) a.push_back(s.to_string());
  return a;
}

std::string render_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::uint32_t homogeneous_exponent_or_fail(const PresentationPtr& p) {
  std::uint32_t a = 0;
  require(p->is_homogeneous(&a), ErrorCode::InvalidArgument,
          "this command needs a homogeneous presentation (equal exponents, "
          "one primitive commutation scalar)");
  return a;
}

std::vector<Scalar> sample_tuple_sigma_nonzero(const PresentationPtr& p,
                                               Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Scalar> alpha = sample_tuple(p, rng);
    if (!linear_form(p, alpha).is_zero()) return alpha;
  }
  fail(ErrorCode::Internal, "sampling kept producing the zero form");
}

ModulePtr resolve_module(const PresentationPtr& p,
                         const nlohmann::json& spec, std::uint64_t seed,
                         nlohmann::json& echo) {
  std::string kind = "simple";
  if (spec.is_object() && spec.contains("kind"))
    kind = spec.at("kind").get<std::string>();
  else
    require(spec.is_null() || spec.is_object(), ErrorCode::InvalidArgument,
            "module spec must be an object");
  if (kind == "simple") {
    echo["kind"] = "simple";
    return simple_module(p);
  }
  if (kind == "cyclic") {
    std::vector<Scalar> beta;
    if (spec.contains("beta")) {
      const nlohmann::json& bj = spec.at("beta");
      require(bj.is_array() && bj.size() == p->n, ErrorCode::InvalidArgument,
              "beta must list one scalar per generator");
      for (const nlohmann::json& s : bj)
        beta.push_back(p->field.parse(s.get<std::string>()));
      require(!linear_form(p, beta).is_zero(), ErrorCode::InvalidArgument,
              "beta must give a nonzero linear form");
    } else {
      Rng rng = trial_rng(seed, 0x62657461u);
      beta = sample_tuple_sigma_nonzero(p, rng);
    }
    echo["beta"] = scalars_json(beta);
    echo["kind"] = "cyclic";
    return cyclic_quotient(p, linear_form(p, beta)).module;
  }
  if (kind == "file") {
    const std::string path = spec.at("path").get<std::string>();
    std::ifstream in(path);
    require(in.good(), ErrorCode::IoError, "cannot open module file " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::ParseError, std::string("module file: ") + e.what());
    }
    ModulePtr m = FdModule::from_json(j);
    check_same_presentation(m->pres, p);
    // rebuild over the configured presentation object
    m = FdModule::create(p, m->actions, true);
    echo["dim"] = m->dim;
    echo["kind"] = "file";
    echo["path"] = path;
    return m;
  }
  fail(ErrorCode::InvalidArgument, "unknown module kind " + kind);
}

// ---- verify-lemmas ----

RunResult cmd_verify_lemmas(const ParsedConfig& c) {
  const PresentationPtr& p = c.presentation;
  const std::uint32_t a = homogeneous_exponent_or_fail(p);
  nlohmann::json checks = nlohmann::json::array();
  bool all_pass = true;
  auto push_check = [&](const char* name, std::size_t runs,
                        std::size_t failures, nlohmann::json extra) {
    extra["check"] = name;
    extra["failures"] = failures;
    extra["pass"] = failures == 0;
    extra["runs"] = runs;
    checks.push_back(std::move(extra));
    all_pass = all_pass && failures == 0;
  };

  std::size_t fail_power = 0, fail_sum = 0;
  for (std::size_t t = 0; t < c.trials; ++t) {
    Rng rng = trial_rng(c.seed, t);
    const std::vector<Scalar> alpha = sample_tuple(p, rng);
    const Element sigma = linear_form(p, alpha);
    std::vector<Element> pw{Element::one(p)};
    for (std::uint32_t k = 1; k <= a; ++k) pw.push_back(pw.back() * sigma);
    if (!pw[a].is_zero()) ++fail_power;
    for (std::uint32_t i = 0; i < p->n; ++i) {
      Element total = Element::zero(p);
      const Element xi = Element::generator(p, i);
      for (std::uint32_t j = 0; j < a; ++j)
        total = total + pw[j] * xi * pw[a - 1 - j];
      if (!total.is_zero()) ++fail_sum;
    }
  }
  push_check("sigma-power-zero", c.trials, fail_power, {});
  push_check("sigma-sum-identity", c.trials * p->n, fail_sum, {});

  if (p->n % 2 == 0 && p->n >= 4) {
    std::size_t runs = 0, fails = 0;
    const std::size_t t_max = std::min<std::size_t>(c.trials, 25);
    for (std::size_t t = 0; t < t_max; ++t) {
      Rng rng = trial_rng(c.seed, 5000 + t);
      const Scalar a1 = sample_nonzero_scalar(p->field, rng);
      for (std::uint32_t i = 1; i < a; ++i) {
        ++runs;
        if (!free_part_power_identity(p, a1, i)) ++fails;
      }
    }
    push_check("free-part-power", runs, fails, {});
  }

  if (p->n % 2 == 0) {
    std::size_t runs = 0, fails = 0;
    const std::size_t t_max = std::min<std::size_t>(c.trials, 10);
    for (std::size_t t = 0; t < t_max; ++t) {
      Rng rng = trial_rng(c.seed, 6000 + t);
      std::vector<Scalar> alpha_tilde;
      for (std::uint32_t i = 0; i + 1 < p->n; ++i)
        alpha_tilde.push_back(sample_scalar(p->field, rng));
      ++runs;
      if (!substitution_consistency(p, alpha_tilde).pass) ++fails;
    }
    push_check("substitution-consistency", runs, fails, {});
  }

  {
    const std::size_t t_max = std::min<std::size_t>(c.trials, 15);
    const OpenSetSample s =
        sample_open_sets(p, regular_module(p), t_max, c.seed);
    nlohmann::json extra;
    extra["count_u1"] = s.count_u1;
    extra["count_u2"] = s.count_u2;
    extra["count_v"] = s.count_v;
    extra["generic_rank_sigma"] = s.generic_rank_sigma;
    extra["generic_rank_sigma_pow"] = s.generic_rank_sigma_pow;
    push_check("openset-implications", t_max,
               s.all_implications_hold ? 0 : 1, std::move(extra));
  }

  {
    std::size_t runs = 0, fails = 0;
    const std::size_t t_max = std::min<std::size_t>(c.trials, 4);
    for (std::size_t t = 0; t < t_max; ++t) {
      Rng rng = trial_rng(c.seed, 7000 + t);
      const std::vector<Scalar> alpha = sample_tuple_sigma_nonzero(p, rng);
      for (std::uint32_t v = 0; v < p->n; ++v) {
        ++runs;
        if (!periodicity_diagrams_check(p, alpha, v).pass) ++fails;
      }
    }
    push_check("factoring-squares", runs, fails, {});
  }

  nlohmann::json rep;
  rep["all_pass"] = all_pass;
  rep["checks"] = checks;
  rep["command"] = "verify-lemmas";
  rep["config"] = echo_config(c);
  rep["schema_version"] = 1;
  return RunResult{render_json(rep), all_pass ? 0 : 1};
}

// ---- sweep-membership ----

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    out += ch;
  }
  out += "\"";
  return out;
}

RunResult cmd_sweep_membership(const ParsedConfig& c) {
  const PresentationPtr& p = c.presentation;
  homogeneous_exponent_or_fail(p);
  require(p->n % 2 == 0, ErrorCode::OddCodimension,
          "membership sweeps need an even number of generators");

  std::vector<MembershipReport> rows;
  std::size_t members = 0, lambda_nonzero = 0, violations = 0;
  for (std::size_t t = 0; t < c.trials; ++t) {
    Rng rng = trial_rng(c.seed, t);
    const std::vector<Scalar> alpha = sample_tuple(p, rng);
    const Element w = witness_word(p, alpha);
    MembershipReport r = membership_two_sided(p, alpha, w);
    if (r.member) ++members;
    const bool nz = r.lambda_applicable && !r.lambda_coeff.is_zero();
    if (nz) ++lambda_nonzero;
    if (nz && r.member) ++violations;
    rows.push_back(std::move(r));
  }

  std::size_t dist_total = std::min<std::size_t>(c.trials, 25);
  std::size_t dist_outside = 0;
  for (std::size_t t = 0; t < dist_total; ++t) {
    Rng rng = trial_rng(c.seed, 9000 + t);
    const std::vector<Scalar> alpha =
        distinguished_tuple(p, sample_nonzero_scalar(p->field, rng));
    const Element w = witness_word(p, alpha);
    if (!membership_two_sided(p, alpha, w).member) ++dist_outside;
  }

  std::size_t reduced_total = std::min<std::size_t>(c.trials, 25);
  std::size_t reduced_outside = 0;
  for (std::size_t t = 0; t < reduced_total; ++t) {
    Rng rng = trial_rng(c.seed, 11000 + t);
    std::vector<Scalar> alpha_tilde;
    for (std::uint32_t i = 0; i + 1 < p->n; ++i)
      alpha_tilde.push_back(sample_scalar(p->field, rng));
    if (reduced_membership(p, alpha_tilde).outside) ++reduced_outside;
  }

  const std::size_t open_trials = std::min<std::size_t>(c.trials, 20);
  const OpenSetSample open =
      sample_open_sets(p, regular_module(p), open_trials, c.seed);

  const bool all_pass = violations == 0 && dist_outside == dist_total &&
                        open.all_implications_hold;

  if (c.format == "csv") {
    std::ostringstream out;
    out << "# schema_version=1\n# command=sweep-membership\n";
    out << "# field=" << p->field.spec_string() << " n=" << p->n
        << " seed=" << c.seed << " trials=" << c.trials << "\n";
    out << "alpha,member,lambda_applicable,lambda_coefficient,lambda_nonzero,"
           "degree,matrix_rows,matrix_cols\n";
    for (const MembershipReport& r : rows) {
      std::string al;
      for (std::size_t i = 0; i < r.alpha.size(); ++i) {
        if (i) al += " ";
        al += r.alpha[i].to_string();
      }
      out << csv_quote(al) << "," << (r.member ? 1 : 0) << ","
          << (r.lambda_applicable ? 1 : 0) << ","
          << csv_quote(r.lambda_coeff.to_string()) << ","
          << ((r.lambda_applicable && !r.lambda_coeff.is_zero()) ? 1 : 0)
          << "," << r.degree << "," << r.matrix_rows << "," << r.matrix_cols
          << "\n";
    }
    out << "# members=" << members << " outside=" << (rows.size() - members)
        << " lambda_nonzero=" << lambda_nonzero
        << " implication_violations=" << violations << "\n";
    out << "# distinguished_outside=" << dist_outside << "/" << dist_total
        << " reduced_outside=" << reduced_outside << "/" << reduced_total
        << "\n";
    out << "# count_u1=" << open.count_u1 << " count_u2=" << open.count_u2
        << " count_v=" << open.count_v << " open_trials=" << open_trials
        << "\n";
    out << "# all_pass=" << (all_pass ? 1 : 0) << "\n";
    return RunResult{out.str(), all_pass ? 0 : 1};
  }

  nlohmann::json rep;
  rep["all_pass"] = all_pass;
  rep["command"] = "sweep-membership";
  rep["config"] = echo_config(c);
  nlohmann::json rj = nlohmann::json::array();
  for (const MembershipReport& r : rows) rj.push_back(r.to_json());
  rep["rows"] = rj;
  nlohmann::json summary;
  summary["count_member"] = members;
  summary["count_outside"] = rows.size() - members;
  summary["distinguished_outside"] = dist_outside;
  summary["distinguished_trials"] = dist_total;
  summary["implication_violations"] = violations;
  summary["lambda_nonzero"] = lambda_nonzero;
  summary["reduced_outside"] = reduced_outside;
  summary["reduced_trials"] = reduced_total;
  rep["summary"] = summary;
  rep["open_sets"] = open.to_json();
  rep["schema_version"] = 1;
  return RunResult{render_json(rep), all_pass ? 0 : 1};
}

// ---- ghost ----

RunResult cmd_ghost(const ParsedConfig& c) {
  const PresentationPtr& p = c.presentation;
  homogeneous_exponent_or_fail(p);
  require(p->n % 2 == 0, ErrorCode::OddCodimension,
          "ghost chains need an even number of generators");
  nlohmann::json module_echo;
  const ModulePtr m = resolve_module(p, c.module_spec, c.seed, module_echo);

  nlohmann::json attempts = nlohmann::json::array();
  std::size_t scanned = 0, v_hits = 0, ghost_attempts = 0;
  bool found = false;
  GhostReport best;
  for (std::size_t t = 0; t < c.trials && !found; ++t) {
    Rng rng = trial_rng(c.seed, t);
    const std::vector<Scalar> alpha = sample_tuple(p, rng);
    ++scanned;
    if (linear_form(p, alpha).is_zero()) continue;
    const Element w = witness_word(p, alpha);
    if (membership_two_sided(p, alpha, w).member) continue;
    ++v_hits;
    if (ghost_attempts >= 8) continue;
    ++ghost_attempts;
    GhostReport g = ghost_chain_witness(p, alpha, m, c.window_lo, c.window_hi);
    nlohmann::json att;
    att["alpha"] = scalars_json(alpha);
    att["pass"] = g.pass;
    attempts.push_back(std::move(att));
    if (g.pass) {
      found = true;
      best = std::move(g);
    }
  }

  nlohmann::json rep;
  rep["attempts"] = attempts;
  rep["command"] = "ghost";
  nlohmann::json cfg = echo_config(c);
  cfg["module"] = module_echo;
  cfg["window"] = nlohmann::json::array({c.window_lo, c.window_hi});
  rep["config"] = cfg;
  rep["found"] = found;
  rep["ghost_attempts"] = ghost_attempts;
  rep["scanned"] = scanned;
  rep["v_hits"] = v_hits;
  if (found) {
    rep["ghost"] = best.to_json();
    rep["implied_lower_bound"] = best.implied_lower_bound;
  } else {
    rep["error"] = "NoAlphaFound";
  }
  rep["schema_version"] = 1;
  return RunResult{render_json(rep), found ? 0 : 1};
}

// ---- upper ----

nlohmann::json pd_json(const ProjDimension& pd) {
  nlohmann::json j;
  j["exact"] = pd.exact;
  j["value"] = pd.value;
  return j;
}

RunResult cmd_upper(const ParsedConfig& c) {
  const PresentationPtr& p = c.presentation;
  require(p->field.characteristic() == 0, ErrorCode::PositiveCharacteristic,
          "global dimension runs need characteristic zero");
  const std::uint32_t n = p->n;
  const std::uint32_t max_steps =
      c.max_steps > 0 ? c.max_steps : 2 * n + 4;

  const GeneratorModule g = auslander_generator(p);
  const SummandWitness witness = regular_summand_witness(g);

  const EndAlgebra graded_end = endomorphism_algebra(g, true);
  const EndAlgebra full_end = endomorphism_algebra(g, false);
  const GldimReport gld = global_dimension(graded_end.algebra, max_steps,
                                           graded_end.part_identity);
  const bool simples = simples_one_dimensional(graded_end.algebra);

  nlohmann::json rep;
  rep["bound_2n"] = 2 * n;
  rep["bracket_lower"] = n + 1;
  rep["bracket_upper"] = 2 * n;
  rep["command"] = "upper";
  nlohmann::json cfg = echo_config(c);
  cfg["max_steps"] = max_steps;
  rep["config"] = cfg;
  rep["dim_End"] = graded_end.algebra.dim;
  rep["dim_End_full"] = full_end.algebra.dim;
  rep["dim_M"] = g.graded.module->dim;
  rep["gldim"] = pd_json(gld.gldim);
  rep["gldim_report"] = gld.to_json();
  rep["graded"] = true;
  rep["regular_summand"] = nlohmann::json{
      {"iso_to_regular", witness.iso_to_regular},
      {"pass", witness.pass},
      {"split_identity", witness.split_identity}};
  rep["simples_one_dimensional"] = simples;

  bool extras_pass = true;
  if (c.full_gldim || full_end.algebra.dim <= 40) {
    const GldimReport gfull = global_dimension(full_end.algebra, max_steps,
                                               full_end.part_identity);
    nlohmann::json fj;
    fj["gldim"] = pd_json(gfull.gldim);
    fj["exceeds_graded"] =
        gfull.gldim.value > gld.gldim.value || !gfull.gldim.exact;
    rep["full"] = fj;
  }
  if (n >= 2) {
    const bool twist_ok = adjoined_matches_twisted_tensor(p);
    rep["twisted_tensor_consistent"] = twist_ok;
    std::vector<std::uint32_t> first(n - 1);
    std::iota(first.begin(), first.end(), 0u);
    const GeneratorModule m1 =
        auslander_generator(subalgebra(p, first).sub);
    const GeneratorModule m2 =
        auslander_generator_n1(p->field, p->exponents[n - 1]);
    const EndTensorReport et = end_tensor_factorizes(p, m1, m2, g);
    rep["end_tensor"] = et.to_json();
    extras_pass = twist_ok && et.pass;
  }

  const bool satisfied = gld.gldim.exact && gld.gldim.value <= 2 * n;
  rep["satisfied"] = satisfied;
  const bool all_pass = satisfied && simples && witness.pass && extras_pass;
  rep["all_pass"] = all_pass;
  rep["schema_version"] = 1;
  return RunResult{render_json(rep), all_pass ? 0 : 1};
}

// ---- tower ----

RunResult cmd_tower(const ParsedConfig& c) {
  const TowerReport tr = tower_report(c.presentation, c.order);
  nlohmann::json rep;
  rep["all_pass"] = tr.all_free;
  rep["command"] = "tower";
  nlohmann::json cfg = echo_config(c);
  cfg["order"] = tr.order;
  rep["config"] = cfg;
  rep["schema_version"] = 1;
  rep["tower"] = tr.to_json();
  return RunResult{render_json(rep), tr.all_free ? 0 : 1};
}

// ---- periodicity ----

RunResult cmd_periodicity(const ParsedConfig& c) {
  const PresentationPtr& p = c.presentation;
  homogeneous_exponent_or_fail(p);
  if (c.var_index >= 0)
    require(static_cast<std::uint32_t>(c.var_index) < p->n,
            ErrorCode::InvalidArgument, "var_index out of range");

  nlohmann::json rows = nlohmann::json::array();
  bool all_pass = true;
  for (std::size_t t = 0; t < c.trials; ++t) {
    Rng rng = trial_rng(c.seed, t);
    const std::vector<Scalar> alpha = sample_tuple_sigma_nonzero(p, rng);
    std::vector<std::uint32_t> vars;
    if (c.var_index >= 0)
      vars.push_back(static_cast<std::uint32_t>(c.var_index));
    else
      for (std::uint32_t v = 0; v < p->n; ++v) vars.push_back(v);
    for (std::uint32_t v : vars) {
      const PeriodicityReport r = periodicity_diagrams_check(p, alpha, v);
      all_pass = all_pass && r.pass;
      rows.push_back(r.to_json());
    }
  }

  nlohmann::json rep;
  rep["all_pass"] = all_pass;
  rep["command"] = "periodicity";
  nlohmann::json cfg = echo_config(c);
  if (c.var_index >= 0) cfg["var_index"] = c.var_index;
  rep["config"] = cfg;
  rep["rows"] = rows;
  rep["schema_version"] = 1;
  return RunResult{render_json(rep), all_pass ? 0 : 1};
}

}  // namespace

ParsedConfig parse_config(const nlohmann::json& cfg) {
  require(cfg.is_object(), ErrorCode::InvalidArgument,
          "configuration must be a JSON object");
  ParsedConfig out;
  out.command = get_string(cfg, "command");
  const Field f = Field::parse_spec(get_string(cfg, "field"));
  out.presentation = build_presentation(cfg, f);
  out.trials = static_cast<std::size_t>(get_uint(cfg, "trials", 20));
  require(out.trials >= 1 && out.trials <= 100000, ErrorCode::InvalidArgument,
          "trials must be between 1 and 100000");
  out.seed = cfg.contains("seed") ? get_uint(cfg, "seed", 0) : default_seed();
  if (cfg.contains("window")) {
    const nlohmann::json& w = cfg.at("window");
    require(w.is_array() && w.size() == 2 && w[0].is_number_integer() &&
                w[1].is_number_integer(),
            ErrorCode::InvalidArgument, "window must be [j0, j1]");
    out.window_lo = w[0].get<int>();
    out.window_hi = w[1].get<int>();
    require(out.window_lo <= out.window_hi, ErrorCode::WindowEmpty,
            "window must be nonempty");
  }
  if (cfg.contains("module")) out.module_spec = cfg.at("module");
  out.max_steps = static_cast<std::uint32_t>(get_uint(cfg, "max_steps", 0));
  if (cfg.contains("var_index"))
    out.var_index = static_cast<int>(get_uint(cfg, "var_index", 0));
  if (cfg.contains("order")) {
    const nlohmann::json& oj = cfg.at("order");
    require(oj.is_array(), ErrorCode::InvalidArgument,
            "order must be an array of generator indices");
    for (const nlohmann::json& x : oj) {
      require(is_nonneg_int(x), ErrorCode::InvalidArgument,
              "order entries must be nonnegative integers");
      out.order.push_back(x.get<std::uint32_t>());
    }
  }
  if (cfg.contains("format")) {
    out.format = get_string(cfg, "format");
    require(out.format == "json" || out.format == "csv",
            ErrorCode::InvalidArgument, "format must be json or csv");
  }
  if (cfg.contains("full_gldim")) {
    require(cfg.at("full_gldim").is_boolean(), ErrorCode::InvalidArgument,
            "full_gldim must be a boolean");
    out.full_gldim = cfg.at("full_gldim").get<bool>();
  }
  return out;
}

RunResult run_command(const nlohmann::json& config) {
  const ParsedConfig c = parse_config(config);
  require(c.format == "json" || c.command == "sweep-membership",
          ErrorCode::InvalidArgument,
          "csv output is only available for sweep-membership");
  if (c.command == "verify-lemmas") return cmd_verify_lemmas(c);
  if (c.command == "sweep-membership") return cmd_sweep_membership(c);
  if (c.command == "ghost") return cmd_ghost(c);
  if (c.command == "upper") return cmd_upper(c);
  if (c.command == "tower") return cmd_tower(c);
  if (c.command == "periodicity") return cmd_periodicity(c);
  fail(ErrorCode::InvalidArgument, "unknown command " + c.command);
}

RunResult run_command(const std::string& config_text) {
  nlohmann::json cfg;
  try {
    cfg = nlohmann::json::parse(config_text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError,
         std::string("configuration is not valid JSON: ") + e.what());
  }
  return run_command(cfg);
}

}  // namespace qci
