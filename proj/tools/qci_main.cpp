// Command line front end.  Options are assembled into a JSON configuration
// and handed to the shared library through its C interface; the library owns
// all validation and the exit-code contract (0 = checks passed, 1 = a
// mathematical check failed, 2 = unusable configuration or input).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qci.h"

namespace {

struct CommonOpts {
  std::string field;
  std::vector<std::uint32_t> exponents;
  std::uint32_t n = 0;
  std::uint32_t a = 0;
  std::vector<std::string> commutators;
  std::string q;
  std::uint64_t trials = 20;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string output;
};

struct CommonFlags {
  CLI::Option* n = nullptr;
  CLI::Option* a = nullptr;
  CLI::Option* exponents = nullptr;
  CLI::Option* commutators = nullptr;
  CLI::Option* q = nullptr;
  CLI::Option* trials = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* format = nullptr;
};

CommonFlags add_common(CLI::App* cmd, CommonOpts& o) {
  CommonFlags fl;
  cmd->add_option("--field", o.field,
                  "coefficient field, p:<prime> or cyclo:<a>")
      ->required();
  fl.n = cmd->add_option("--n", o.n, "number of generators");
  fl.a = cmd->add_option("--a", o.a, "common exponent (with --n)");
  fl.exponents = cmd->add_option("--exponents", o.exponents,
                                 "per-generator exponents a_1 .. a_n");
  fl.commutators = cmd->add_option(
      "--commutators", o.commutators,
      "scalars q_ij in pair order (1,2) (1,3) ... (n-1,n)");
  fl.q = cmd->add_option("--q", o.q, "one scalar used for every q_ij");
  fl.trials = cmd->add_option("--trials", o.trials,
                              "number of sampled coefficient tuples");
  fl.seed = cmd->add_option(
      "--seed", o.seed,
      "PRNG seed (default: QCI_SEED environment variable, else 0)");
  fl.format =
      cmd->add_option("--format", o.format, "report format: json or csv");
  cmd->add_option("--output", o.output,
                  "write the report to this file instead of stdout");
  return fl;
}

void fill_common(nlohmann::json& cfg, const CommonOpts& o,
                 const CommonFlags& fl) {
  cfg["field"] = o.field;
  if (fl.exponents->count() > 0) cfg["exponents"] = o.exponents;
  if (fl.n->count() > 0) cfg["n"] = o.n;
  if (fl.a->count() > 0) cfg["a"] = o.a;
  if (fl.commutators->count() > 0) cfg["commutators"] = o.commutators;
  if (fl.q->count() > 0) cfg["q"] = o.q;
  if (fl.trials->count() > 0) cfg["trials"] = o.trials;
  if (fl.seed->count() > 0) cfg["seed"] = o.seed;
  if (fl.format->count() > 0) cfg["format"] = o.format;
}

int emit(const std::string& report, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << report;
    return 0;
  }
  std::ofstream out(output_path);
  if (!out.good()) {
    std::cerr << "error: cannot open output file " << output_path << "\n";
    return 2;
  }
  out << report;
  return out.good() ? 0 : 2;
}

int run_config(const nlohmann::json& cfg, const std::string& output_path) {
  const std::string text = cfg.dump();
  char* report = nullptr;
  const int code = qci_run_command(text.c_str(), &report);
  if (code == 2) {
    std::cerr << "error: " << qci_last_error() << "\n";
    return 2;
  }
  const int emit_code = emit(report ? report : "", output_path);
  qci_string_free(report);
  return emit_code != 0 ? emit_code : code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks for quantum complete intersection algebras"};
  app.require_subcommand(1);

  CommonOpts o;
  nlohmann::json extra;  // command-specific keys

  struct Wired {
    CLI::App* cmd;
    CommonFlags flags;
  };
  std::vector<Wired> wired;
  auto wire = [&](const char* name, const char* desc) -> CLI::App* {
    CLI::App* cmd = app.add_subcommand(name, desc);
    wired.push_back({cmd, add_common(cmd, o)});
    return cmd;
  };

  wire("verify-lemmas",
       "check the defining identities of the homogeneous algebra on "
       "sampled coefficient tuples");

  wire("sweep-membership",
       "sample tuples alpha and decide whether the witness word lies in "
       "sigma*A + A*sigma");

  CLI::App* ghost = wire(
      "ghost",
      "search for a tuple whose chain of one-step maps is a ghost chain "
      "and certify the induced lower bound");
  std::vector<int> window;
  ghost->add_option("--window", window, "syzygy window j0 j1")
      ->expected(2);
  std::string module_kind;
  ghost->add_option("--module", module_kind,
                    "test module kind: simple, cyclic, or file");
  std::vector<std::string> beta;
  ghost->add_option("--beta", beta,
                    "coefficients of the cyclic test module's linear form");
  std::string module_file;
  ghost->add_option("--module-file", module_file,
                    "JSON file holding the test module");

  CLI::App* upper = wire(
      "upper",
      "build the generator-cogenerator, compute the global dimension of "
      "its graded endomorphism algebra, and compare with 2n");
  std::uint32_t max_steps = 0;
  CLI::Option* max_steps_opt = upper->add_option(
      "--max-steps", max_steps, "resolution length cap (default 2n+4)");
  bool full_gldim = false;
  upper->add_flag("--full-gldim", full_gldim,
                  "also resolve over the full (ungraded) endomorphism "
                  "algebra regardless of its size");

  CLI::App* tower = wire(
      "tower",
      "verify two-sided freeness along a chain of monomial subalgebras");
  std::vector<std::uint32_t> order;
  tower->add_option("--order", order,
                    "generator insertion order (default 0 1 ... n-1)");

  CLI::App* periodicity = wire(
      "periodicity",
      "check the commuting squares that make syzygies two-periodic");
  int var_index = -1;
  CLI::Option* var_opt = periodicity->add_option(
      "--var-index", var_index, "single generator to test (default: all)");

  CLI::App* runcfg = app.add_subcommand(
      "run", "run a command from a JSON configuration file");
  std::string config_path;
  runcfg->add_option("config", config_path, "path to the configuration, or -")
      ->required();
  std::string run_output;
  runcfg->add_option("--output", run_output,
                     "write the report to this file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  if (runcfg->parsed()) {
    std::string text;
    if (config_path == "-") {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      text = buf.str();
    } else {
      std::ifstream in(config_path);
      if (!in.good()) {
        std::cerr << "error: cannot open " << config_path << "\n";
        return 2;
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }
    char* report = nullptr;
    const int code = qci_run_command(text.c_str(), &report);
    if (code == 2) {
      std::cerr << "error: " << qci_last_error() << "\n";
      return 2;
    }
    const int emit_code = emit(report ? report : "", run_output);
    qci_string_free(report);
    return emit_code != 0 ? emit_code : code;
  }

  for (const Wired& w : wired) {
    if (!w.cmd->parsed()) continue;
    nlohmann::json cfg;
    cfg["command"] = w.cmd->get_name();
    fill_common(cfg, o, w.flags);

    if (w.cmd == ghost) {
      if (window.size() == 2)
        cfg["window"] = nlohmann::json::array({window[0], window[1]});
      nlohmann::json mod;
      if (!module_kind.empty()) mod["kind"] = module_kind;
      if (!beta.empty()) {
        mod["kind"] = "cyclic";
        mod["beta"] = beta;
      }
      if (!module_file.empty()) {
        mod["kind"] = "file";
        mod["path"] = module_file;
      }
      if (!mod.empty()) cfg["module"] = mod;
    } else if (w.cmd == upper) {
      if (max_steps_opt->count() > 0) cfg["max_steps"] = max_steps;
      if (full_gldim) cfg["full_gldim"] = true;
    } else if (w.cmd == tower) {
      if (!order.empty()) cfg["order"] = order;
    } else if (w.cmd == periodicity) {
      if (var_opt->count() > 0 && var_index >= 0)
        cfg["var_index"] = static_cast<std::uint32_t>(var_index);
    }
    return run_config(cfg, o.output);
  }

  std::cerr << "error: no command given\n";
  return 2;
}
