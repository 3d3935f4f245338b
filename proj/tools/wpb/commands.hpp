#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace wpbcli {

enum ExitCode : int { kPass = 0, kIdentityFailure = 1, kUsage = 2, kCapability = 3 };

struct RunConfig {
  unsigned precision_digits = 34;
  int n_max = 512;
  double tol = 1e-10;
  std::string format = "json";
  std::string out;
  bool no_meta = false;

  // check
  std::string scope = "all";
  std::string inject_fault;
  std::uint64_t seed = 20240611;

  // pair
  std::string left, right;

  // expand
  std::string kind;
  std::string f, g;
  std::string moments;
  std::string ordering = "phi_psi";
  std::string accel = "none";
  std::string interval = "-1,1";

  // bateman
  std::string m = "1", gamma = "1/2", k = "1";
  int T = 8;
  std::vector<int> T_list;
  std::string scan = "hamiltonian";
  std::string shift = "1/10";
  double sigma_threshold = 0.1;
};

struct CommandResult {
  nlohmann::json report;
  int exit_code = kPass;
  /// (N, partial sum, residual) rows for --format csv.
  std::optional<std::vector<std::vector<std::string>>> table;
};

CommandResult cmd_check(const RunConfig& cfg);
CommandResult cmd_pair(const RunConfig& cfg);
CommandResult cmd_expand(const RunConfig& cfg);
CommandResult cmd_bateman(const RunConfig& cfg);

}  // namespace wpbcli
