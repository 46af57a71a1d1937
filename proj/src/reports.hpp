#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "algebra.hpp"

namespace qci {

// Batch entry point shared by the shared-library surface and the command
// line.  The configuration is a JSON object; the result carries the rendered
// report plus the process exit code: 0 when every check passed, 1 when a
// mathematical check failed (the report is still produced).  Configuration
// problems throw, and the caller maps them to exit code 2.
//
// Recognized keys:
//   command      one of verify-lemmas, sweep-membership, ghost, upper,
//                tower, periodicity                                (required)
//   field        scalar field spec, e.g. "p:5" or "cyclo:3"        (required)
//   n, a         homogeneous shape: n generators, exponent a
//   exponents    explicit exponent list (alternative to n + a)
//   q            single commutation scalar for every pair
//   commutators  explicit scalar list, length n(n-1)/2
//   trials       sample count (default 20)
//   seed         sampling seed; falls back to the QCI_SEED environment
//                variable, then 0
//   window       [j0, j1] syzygy-shift window for ghost runs (default [-2,2])
//   module       {"kind":"simple"} or {"kind":"cyclic","beta":[...]} or
//                {"kind":"file","path":...} for ghost runs
//   max_steps    resolution cap for global dimension (default 2n+4)
//   var_index    generator index for periodicity ladders (default: all)
//   order        generator order for tower runs (default 0..n-1)
//   format       "json" (default) or "csv" where supported
//   full_gldim   force the global dimension of the full (ungraded)
//                endomorphism algebra in upper runs
struct RunResult {
  std::string report;
  int exit_code = 0;
};
RunResult run_command(const nlohmann::json& config);
RunResult run_command(const std::string& config_text);

// The resolved presentation and sampling parameters of a configuration;
// exposed for tests.
struct ParsedConfig {
  std::string command;
  PresentationPtr presentation;
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  int window_lo = -2, window_hi = 2;
  nlohmann::json module_spec;
  std::uint32_t max_steps = 0;  // 0: default 2n+4
  int var_index = -1;           // -1: every generator
  std::vector<std::uint32_t> order;
  std::string format = "json";
  bool full_gldim = false;
};
ParsedConfig parse_config(const nlohmann::json& config);

}  // namespace qci
