#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wpb {

enum class CheckScope { distrib, pairing, families, all };

CheckScope parse_check_scope(const std::string& text);
std::string to_string(CheckScope scope);

struct CheckOptions {
  std::uint64_t seed = 20240611;
  /// Replaces x̂ with −x̂ inside the weak commutator suite; used to show that
  /// the harness notices a broken multiplication rule.
  bool inject_x_sign_fault = false;
};

struct CheckLine {
  std::string identity;
  bool passed = false;
  std::string detail;

  /// "identity: pass(detail)" or "identity: FAIL(detail)".
  std::string render() const;
};

struct CheckReport {
  CheckScope scope = CheckScope::all;
  std::vector<CheckLine> lines;

  bool passed() const;
  std::vector<std::string> failures() const;
};

CheckReport run_checks(CheckScope scope, const CheckOptions& options = {});

}  // namespace wpb
