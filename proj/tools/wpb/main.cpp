// wpb: command-line front end for the weak pseudo-boson calculus library.
//
//   wpb check all
//   wpb pair phi:3 psi:3
//   wpb expand quasi --f gaussian:alpha=1 --g gaussian:alpha=1/2 --n-max 80
//   wpb bateman --m 1 --gamma 1/2 --k 1 --T 8 --scan hamiltonian

#include "commands.hpp"

#include "wpb/error.hpp"
#include "wpb/numeric.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#ifndef WPB_VERSION
#define WPB_VERSION "unknown"
#endif

using namespace wpbcli;

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

std::string render_csv(const std::vector<std::vector<std::string>>& rows) {
  std::string out = "N,S_N,residual\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return kPass;
  }
  std::ofstream file(path);
  if (!file) {
    std::cerr << "error: cannot write " << path << "\n";
    return kUsage;
  }
  file << text;
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and high-precision calculus for weak pseudo-bosons", "wpb"};
  app.require_subcommand(1);
  app.set_version_flag("--version", WPB_VERSION);

  RunConfig cfg;
  app.option_defaults()->always_capture_default();
  app.add_option("--precision-digits", cfg.precision_digits, "Decimal digits of working precision")
      ->check(CLI::Range(10u, 2000u));
  app.add_option("--n-max", cfg.n_max, "Series truncation N_max")->check(CLI::Range(0, 4096));
  app.add_option("--T", cfg.T, "Fock cutoff n1 + n2 <= T")->check(CLI::Range(2, 40));
  app.add_option("--tol", cfg.tol, "Convergence tolerance")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format (csv only for expand quasi)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out, "Write the report to this file instead of stdout");
  app.add_flag("--no-meta", cfg.no_meta, "Omit the timestamped meta block for byte-stable output");

  auto* check = app.add_subcommand("check", "Run the exact identity suites");
  check->fallthrough();
  check->add_option("scope", cfg.scope, "distrib, pairing, families or all")
      ->check(CLI::IsMember({"distrib", "pairing", "families", "all"}));
  check->add_option("--inject-fault", cfg.inject_fault, "Deliberately break an operator (x-sign)");
  check->add_option("--seed", cfg.seed, "Seed for the random members");

  auto* pair = app.add_subcommand("pair", "Evaluate the convolution pairing <F, G>");
  pair->fallthrough();
  pair->add_option("F", cfg.left, "Distribution spec or test-function label")->required();
  pair->add_option("G", cfg.right, "Distribution spec or test-function label")->required();

  auto* expand = app.add_subcommand("expand", "Taylor, dual Taylor and quasi-basis expansions");
  expand->fallthrough();
  expand->add_option("kind", cfg.kind, "taylor, dual or quasi")
      ->required()
      ->check(CLI::IsMember({"taylor", "dual", "quasi"}));
  expand->add_option("--f", cfg.f, "Test function label (or distribution spec for dual)");
  expand->add_option("--g", cfg.g, "Second test function for quasi");
  expand->add_option("--moments", cfg.moments, "Finite moment list for dual, e.g. 1,0,2");
  expand->add_option("--ordering", cfg.ordering, "phi_psi or psi_phi")
      ->check(CLI::IsMember({"phi_psi", "psi_phi"}));
  expand->add_option("--accel", cfg.accel, "none or euler")->check(CLI::IsMember({"none", "euler"}));
  expand->add_option("--interval", cfg.interval, "Sup-error interval a,b for taylor");

  auto* bateman = app.add_subcommand("bateman", "Two-mode Bateman oscillator checks");
  bateman->fallthrough();
  bateman->add_option("--m", cfg.m, "Mass");
  bateman->add_option("--gamma", cfg.gamma, "Damping");
  bateman->add_option("--k", cfg.k, "Stiffness");
  bateman->add_option("--T-list", cfg.T_list, "Cutoffs for the kernel scan")->delimiter(',');
  bateman->add_option("--scan", cfg.scan, "kernel, hamiltonian or vacuum")
      ->check(CLI::IsMember({"kernel", "hamiltonian", "vacuum"}));
  bateman->add_option("--shift", cfg.shift, "Offset of the perturbed vacuum candidate");
  bateman->add_option("--sigma-threshold", cfg.sigma_threshold, "Lower bound expected for sigma_min");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (cfg.format == "csv" && !(command == "expand" && cfg.kind == "quasi")) {
    std::cerr << "error: --format csv is only available for 'expand quasi'\n";
    return kUsage;
  }
  if (command == "expand" && cfg.kind == "quasi" && (cfg.f.empty() || cfg.g.empty())) {
    std::cerr << "error: expand quasi needs --f and --g\n";
    return kUsage;
  }
  if (command == "expand" && cfg.kind == "taylor" && cfg.f.empty()) {
    std::cerr << "error: expand taylor needs --f\n";
    return kUsage;
  }
  if (command == "expand" && cfg.kind == "dual" && cfg.f.empty() == cfg.moments.empty()) {
    std::cerr << "error: expand dual needs exactly one of --f or --moments\n";
    return kUsage;
  }

  CommandResult result;
  try {
    wpb::PrecisionScope precision(cfg.precision_digits);
    if (command == "check") {
      result = cmd_check(cfg);
    } else if (command == "pair") {
      result = cmd_pair(cfg);
    } else if (command == "expand") {
      result = cmd_expand(cfg);
    } else {
      result = cmd_bateman(cfg);
    }
  } catch (const wpb::UnresolvedSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const wpb::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const wpb::CapabilityMissing& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return kCapability;
  } catch (const wpb::Error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kCapability;
  }

  if (cfg.format == "csv") {
    const int io = emit(render_csv(*result.table), cfg.out);
    return io != kPass ? io : result.exit_code;
  }

  nlohmann::json report = {{"command", command}, {"precision_digits", cfg.precision_digits}};
  report.update(result.report);
  if (!cfg.no_meta) {
    report["meta"] = {{"tool", "wpb"}, {"version", WPB_VERSION}, {"generated_at", utc_timestamp()}};
  }
  const int io = emit(report.dump(2) + "\n", cfg.out);
  if (result.exit_code == kIdentityFailure) {
    for (const auto& name : result.report.value("failures", nlohmann::json::array())) {
      std::cerr << "identity failed: " << name.get<std::string>() << "\n";
    }
  }
  return io != kPass ? io : result.exit_code;
}
