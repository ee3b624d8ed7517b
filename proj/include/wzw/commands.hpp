#pragma once

// Command orchestration shared by the C API and the command-line tool. Each
// command returns a rendered document and an exit status.

#include <string>

namespace wzw {

enum class OutputFormat { Text, Structured, Csv };

OutputFormat parse_format(const std::string& name);

struct RunConfig {
  int precision = 50;
  double tol = 1e-9;
  int truncation = 20;
  OutputFormat format = OutputFormat::Text;

  // precision >= 30, 0 < tol < 1e-3, 5 <= truncation <= 40
  void validate() const;
};

enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitParse = 2, kExitUnsupported = 3 };

struct CommandResult {
  int exit_code = kExitPass;
  std::string document;
};

// "suN@k x suN@k": modular data and its verification.
CommandResult cmd_modular(const std::string& spec, const RunConfig& cfg);
// Fusion coefficients, quantum dimensions, global index, Y-matrix, sigma-tilde.
CommandResult cmd_fusion(const std::string& spec, const RunConfig& cfg);
// "A x B / C" diagonal coset; table_path optionally replaces the vacuum multiplicities.
CommandResult cmd_coset(const std::string& spec, const RunConfig& cfg, const std::string& table_path = {},
                        bool use_oracle = false);
// Catalog name or custom "sub:ambient" pair; solver table, Z and invariant report.
CommandResult cmd_inclusion(const std::string& name, const RunConfig& cfg, const std::string& table_out = {});
// Catalog entries with ambient SU(M), M <= bound.
CommandResult cmd_catalog(int bound, const RunConfig& cfg);
// SU(2)_{k1} x SU(2)_{k2} branching functions through the truncation grade.
CommandResult cmd_oracle(int k1, int k2, const RunConfig& cfg);
// Modular and fusion checks over SU(N)_k for N <= max_rank, k <= max_level.
CommandResult cmd_suite(int max_rank, int max_level, const RunConfig& cfg);

}  // namespace wzw
