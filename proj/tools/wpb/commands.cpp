#include "commands.hpp"

#include "wpb/bateman.hpp"
#include "wpb/checks.hpp"
#include "wpb/error.hpp"
#include "wpb/expansion.hpp"
#include "wpb/pairing.hpp"
#include "wpb/registry.hpp"
#include "wpb/serialization.hpp"

#include <sstream>

namespace wpbcli {

using nlohmann::json;
using wpb::Complex;
using wpb::Rational;
using wpb::Real;

namespace {

std::string str(const Real& x, const RunConfig& cfg) { return wpb::to_string(x, cfg.precision_digits); }
std::string str(const Complex& z, const RunConfig& cfg) { return wpb::to_string(z, cfg.precision_digits); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

json pairing_json(const wpb::PairingValue& v, const RunConfig& cfg) {
  json j;
  j["exact"] = v.exact();
  if (v.exact()) {
    j["value"] = v.exact_value().to_string();
    j["components"] = wpb::to_json(v.exact_value());
  } else {
    j["value"] = str(v.to_complex(), cfg);
  }
  return j;
}

wpb::PairingValue pair_operands(const wpb::Operand& a, const wpb::Operand& b, const RunConfig& cfg) {
  using Dist = wpb::WeakDistribution;
  using Fn = wpb::TestFunctionPtr;
  if (const auto* fa = std::get_if<Dist>(&a)) {
    if (const auto* fb = std::get_if<Dist>(&b)) return wpb::pair(*fa, *fb);
    return wpb::pair_dist_fn(*fa, *std::get<Fn>(b));
  }
  const Fn& fa = std::get<Fn>(a);
  if (const auto* fb = std::get_if<Dist>(&b)) return wpb::pair_fn_dist(*fa, *fb);
  return wpb::pair_fn_fn(*fa, *std::get<Fn>(b), std::min(cfg.tol, 1e-13));
}

json operand_json(const wpb::Operand& op) {
  if (const auto* d = std::get_if<wpb::WeakDistribution>(&op)) {
    return {{"kind", "distribution"}, {"text", d->to_string()}, {"exact", wpb::to_json(*d)}};
  }
  return {{"kind", "test_function"}, {"label", std::get<wpb::TestFunctionPtr>(op)->label()}};
}

std::pair<double, double> parse_interval(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw wpb::UnresolvedSpec("interval must be 'a,b', got '" + text + "'");
  const double a = static_cast<double>(wpb::parse_rational(parts[0]));
  const double b = static_cast<double>(wpb::parse_rational(parts[1]));
  if (!(a < b)) throw wpb::UnresolvedSpec("interval needs a < b, got '" + text + "'");
  return {a, b};
}

CommandResult expand_taylor(const RunConfig& cfg) {
  const auto f = wpb::resolve_test_function(cfg.f);
  const auto rec = wpb::taylor_reconstruct(*f, cfg.n_max, parse_interval(cfg.interval));
  json coeffs = json::array();
  for (std::size_t n = 0; n < rec.coefficients.size(); ++n) {
    json c = {{"n", n}, {"value", str(rec.coefficients[n], cfg)}};
    if (rec.exact) {
      const auto it = rec.exact->poly().find(static_cast<int>(n));
      c["exact"] = it == rec.exact->poly().end() ? "0" : it->second.to_string();
    }
    coeffs.push_back(std::move(c));
  }
  json report = {{"f", f->label()}, {"N", cfg.n_max}, {"coefficients", coeffs}, {"exact", rec.exact.has_value()}};
  if (rec.exact) report["polynomial"] = rec.exact->to_string();
  if (rec.sup_error) {
    report["interval"] = {rec.interval->first, rec.interval->second};
    report["sup_error"] = *rec.sup_error;
  }
  return {report, kPass, std::nullopt};
}

CommandResult expand_dual(const RunConfig& cfg) {
  wpb::MomentSequence mu;
  json source;
  if (!cfg.moments.empty()) {
    std::vector<wpb::ExactScalar> values;
    for (const auto& item : split(cfg.moments, ',')) values.push_back(wpb::parse_exact_scalar(item));
    mu = wpb::MomentSequence::finite(values);
    source = {{"moments", cfg.moments}};
  } else if (wpb::is_distribution_spec(cfg.f)) {
    mu = wpb::moments_of(wpb::resolve_distribution(cfg.f));
    source = {{"f", cfg.f}};
  } else {
    // A test function's moment sequence is only known term by term; its
    // support is never certified finite.
    const auto f = wpb::resolve_test_function(cfg.f);
    std::map<int, wpb::ExactScalar> known;
    for (int n = 0; n <= std::min(cfg.n_max, 16); ++n) {
      if (const auto q = f->moment_exact(n)) known.emplace(n, wpb::ExactScalar(*q));
    }
    mu = wpb::MomentSequence::unbounded(std::move(known));
    source = {{"f", f->label()}};
  }
  const wpb::WeakDistribution d = wpb::dual_taylor(mu);
  json report = {{"source", source}, {"distribution", d.to_string()}, {"exact", wpb::to_json(d)}};
  if (mu.support_bound) report["support_bound"] = *mu.support_bound;
  return {report, kPass, std::nullopt};
}

CommandResult expand_quasi(const RunConfig& cfg) {
  const auto f = wpb::resolve_test_function(cfg.f);
  const auto g = wpb::resolve_test_function(cfg.g);
  wpb::ScanOptions options;
  if (cfg.ordering == "phi_psi") {
    options.ordering = wpb::Ordering::phi_psi;
  } else if (cfg.ordering == "psi_phi") {
    options.ordering = wpb::Ordering::psi_phi;
  } else {
    throw wpb::UnresolvedSpec("ordering must be phi_psi or psi_phi");
  }
  if (cfg.accel == "none") {
    options.acceleration = wpb::Acceleration::none;
  } else if (cfg.accel == "euler") {
    options.acceleration = wpb::Acceleration::euler;
  } else {
    throw wpb::UnresolvedSpec("accel must be none or euler");
  }
  options.n_max = cfg.n_max;
  options.tolerance = cfg.tol;
  const auto rep = wpb::quasi_basis_scan(*f, *g, options);

  json sums = json::array();
  std::vector<std::vector<std::string>> table;
  for (std::size_t n = 0; n < rep.partial_sums.size(); ++n) {
    const std::string s = str(rep.partial_sums[n], cfg);
    const std::string r = wpb::to_string(rep.residuals[n], 6);
    sums.push_back({{"N", n}, {"term", str(rep.terms[n], cfg)}, {"S_N", s}, {"residual", r}});
    table.push_back({std::to_string(n), s, r});
  }
  json verdict = {{"kind", wpb::to_string(rep.verdict.kind)}, {"tolerance", rep.verdict.tolerance}};
  if (rep.verdict.converged_at) verdict["converged_at"] = *rep.verdict.converged_at;
  json report = {{"f", f->label()},
                 {"g", g->label()},
                 {"ordering", wpb::to_string(rep.ordering)},
                 {"acceleration", wpb::to_string(rep.acceleration)},
                 {"n_max", cfg.n_max},
                 {"value", str(rep.partial_sums.back(), cfg)},
                 {"reference", {{"value", str(rep.reference, cfg)}, {"note", rep.reference_note}}},
                 {"final_residual", wpb::to_string(rep.residuals.back(), 6)},
                 {"verdict", verdict},
                 {"partial_sums", sums}};
  return {report, kPass, std::move(table)};
}

json params_json(const wpb::BatemanParams& p, const RunConfig& cfg) {
  return {{"m", wpb::to_string(p.m())},
          {"gamma", wpb::to_string(p.gamma())},
          {"k", wpb::to_string(p.k())},
          {"omega_squared", wpb::to_string(p.omega_squared())},
          {"omega", str(p.omega(), cfg)}};
}

}  // namespace

CommandResult cmd_check(const RunConfig& cfg) {
  wpb::CheckOptions options;
  options.seed = cfg.seed;
  if (cfg.inject_fault == "x-sign") {
    options.inject_x_sign_fault = true;
  } else if (!cfg.inject_fault.empty()) {
    throw wpb::UnresolvedSpec("unknown fault '" + cfg.inject_fault + "' (known: x-sign)");
  }
  const auto report = wpb::run_checks(wpb::parse_check_scope(cfg.scope), options);
  json lines = json::array();
  json results = json::array();
  for (const auto& l : report.lines) {
    lines.push_back(l.render());
    results.push_back({{"identity", l.identity}, {"passed", l.passed}, {"detail", l.detail}});
  }
  json out = {{"scope", wpb::to_string(report.scope)},
              {"passed", report.passed()},
              {"failures", report.failures()},
              {"lines", lines},
              {"results", results}};
  if (options.inject_x_sign_fault) out["injected_fault"] = cfg.inject_fault;
  return {out, report.passed() ? kPass : kIdentityFailure, std::nullopt};
}

CommandResult cmd_pair(const RunConfig& cfg) {
  const wpb::Operand a = wpb::resolve_operand(cfg.left);
  const wpb::Operand b = wpb::resolve_operand(cfg.right);
  json report = pairing_json(pair_operands(a, b, cfg), cfg);
  report["F"] = operand_json(a);
  report["G"] = operand_json(b);
  return {report, kPass, std::nullopt};
}

CommandResult cmd_expand(const RunConfig& cfg) {
  CommandResult r;
  if (cfg.kind == "taylor") {
    r = expand_taylor(cfg);
  } else if (cfg.kind == "dual") {
    r = expand_dual(cfg);
  } else if (cfg.kind == "quasi") {
    r = expand_quasi(cfg);
  } else {
    throw wpb::UnresolvedSpec("expand kind must be taylor, dual or quasi");
  }
  r.report["kind"] = cfg.kind;
  return r;
}

CommandResult cmd_bateman(const RunConfig& cfg) {
  const auto params = wpb::BatemanParams::create(wpb::parse_rational(cfg.m), wpb::parse_rational(cfg.gamma),
                                                 wpb::parse_rational(cfg.k));
  json report = {{"params", params_json(params, cfg)}, {"scan", cfg.scan}};
  json residuals = json::object();
  json verdicts = json::object();
  bool ok = true;
  const double identity_tol = 1e-12;

  auto verdict = [&](const std::string& name, bool pass) {
    verdicts[name] = pass ? "pass" : "fail";
    ok = ok && pass;
  };

  if (cfg.scan == "hamiltonian") {
    const int T = cfg.T;
    report["T"] = T;
    const wpb::SafeSubspace safe{T - 2};
    const auto [a1, a2] = wpb::build_bosonic(T);
    const auto pb = wpb::build_pb(params, T);
    const auto one = wpb::FockOperator::identity(T);

    Real ccr = 0;
    const wpb::FockOperator* modes[2] = {&a1, &a2};
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        auto c = wpb::commutator(*modes[j], modes[k]->adjoint());
        if (j == k) c -= one;
        ccr = std::max(ccr, c.max_abs_on(safe));
      }
    }
    Real pb_rel = 0;
    const wpb::FockOperator* A[2] = {&pb.A1, &pb.A2};
    const wpb::FockOperator* B[2] = {&pb.B1, &pb.B2};
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        auto c = wpb::commutator(*A[j], *B[k]);
        if (j == k) c -= one;
        pb_rel = std::max(pb_rel, c.max_abs_on(safe));
      }
    }
    const Real cross = std::max(wpb::commutator(pb.A1, pb.A2).max_abs_on(safe),
                                wpb::commutator(pb.B1, pb.B2).max_abs_on(safe));
    const Real b_vs_adag = (pb.B1 - pb.A1.adjoint()).max_abs();
    const Real forms =
        (wpb::hamiltonian_bosonic(params, T) - wpb::hamiltonian_pb(params, T)).max_abs_on(safe);

    residuals["ccr"] = str(ccr, cfg);
    residuals["pseudo_bosonic_commutators"] = str(pb_rel, cfg);
    residuals["same_family_commutators"] = str(cross, cfg);
    residuals["hamiltonian_forms"] = str(forms, cfg);
    residuals["B1_minus_A1_dagger"] = str(b_vs_adag, cfg);
    verdict("ccr", ccr < identity_tol);
    verdict("pseudo_bosonic_commutators", pb_rel < identity_tol);
    verdict("same_family_commutators", cross < identity_tol);
    verdict("hamiltonian_forms", forms < identity_tol);
    verdict("B_not_A_dagger", b_vs_adag > 0.9);
  } else if (cfg.scan == "kernel") {
    std::vector<int> Ts = cfg.T_list.empty() ? std::vector<int>{cfg.T} : cfg.T_list;
    report["T"] = Ts;
    json table = json::array();
    bool pair_ok = true, dual_ok = true;
    for (const auto& row : wpb::joint_kernel_scan(params, Ts)) {
      table.push_back({{"T", row.cutoff},
                       {"sigma_pair_A", str(row.sigma_pair_a, cfg)},
                       {"sigma_A1_alone", str(row.sigma_single_a1, cfg)},
                       {"sigma_pair_B_dagger", str(row.sigma_pair_bdag, cfg)},
                       {"sigma_B1_dagger_alone", str(row.sigma_single_b1dag, cfg)}});
      pair_ok = pair_ok && row.sigma_pair_a > cfg.sigma_threshold;
      dual_ok = dual_ok && row.sigma_pair_bdag > cfg.sigma_threshold;
    }
    report["sigma_min_table"] = table;
    report["sigma_threshold"] = cfg.sigma_threshold;
    verdict("no_joint_kernel_A", pair_ok);
    verdict("no_joint_kernel_B_dagger", dual_ok);
  } else if (cfg.scan == "vacuum") {
    const Rational shift = wpb::parse_rational(cfg.shift);
    json battery = json::array();
    for (const auto& p : wpb::vacuum_battery()) battery.push_back(p.to_string());
    report["battery"] = battery;
    report["shift"] = wpb::to_string(shift);
    const double vac_tol = 1e-8;
    for (const auto which : {wpb::Vacuum::phi00, wpb::Vacuum::psi00}) {
      const std::string name = wpb::to_string(which);
      const auto exact = wpb::run_vacuum_battery(params, which);
      const auto moved = wpb::run_vacuum_battery(params, which, shift);
      residuals[name] = exact.max_residual;
      residuals[name + "_shifted"] = moved.max_residual;
      verdict(name + "_annihilated", exact.max_residual < vac_tol);
      verdict(name + "_shifted_rejected", moved.max_residual > vac_tol);
    }
  } else {
    throw wpb::UnresolvedSpec("scan must be kernel, hamiltonian or vacuum");
  }
  report["residuals"] = residuals;
  report["verdicts"] = verdicts;
  report["passed"] = ok;
  return {report, ok ? kPass : kIdentityFailure, std::nullopt};
}

}  // namespace wpbcli
