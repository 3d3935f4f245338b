#include "wpb/registry.hpp"

#include "wpb/error.hpp"

#include <charconv>
#include <string>

namespace wpb {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

int parse_index(std::string_view text, std::string_view spec) {
  const std::string t = trim(text);
  int value = -1;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || value < 0) {
    throw UnresolvedSpec("bad index '" + t + "' in '" + std::string(spec) + "'");
  }
  return value;
}

Rational parse_keyed(std::string_view text, std::string_view key, std::string_view spec) {
  const std::string t = trim(text);
  const std::string prefix = std::string(key) + "=";
  if (!starts_with(t, prefix)) {
    throw UnresolvedSpec("expected '" + prefix + "...' in '" + std::string(spec) + "'");
  }
  return parse_rational(std::string_view(t).substr(prefix.size()));
}

}  // namespace

ExactScalar parse_exact_scalar(std::string_view text) {
  std::string t;
  for (char ch : text) {
    if (ch != ' ') t.push_back(ch);
  }
  if (t.empty()) throw UnresolvedSpec("empty coefficient");
  if (t.back() != 'i') return ExactScalar(parse_rational(t));

  t.pop_back();
  // Split real and imaginary parts at the last sign that is not an exponent sign
  // or the leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = t.size(); i-- > 1;) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_part = [](const std::string& s) -> Rational {
    if (s.empty() || s == "+") return 1;
    if (s == "-") return -1;
    return parse_rational(s[0] == '+' ? s.substr(1) : s);
  };
  if (split == std::string::npos) return ExactScalar(0, imag_part(t));
  return ExactScalar(parse_rational(t.substr(0, split)), imag_part(t.substr(split)));
}

TestFunctionPtr resolve_test_function(std::string_view label) {
  const std::string s = trim(label);
  const auto colon = s.find(':');
  const std::string kind = s.substr(0, colon);
  const std::string_view args = colon == std::string::npos ? std::string_view() : std::string_view(s).substr(colon + 1);

  if (kind == "zero" && colon == std::string::npos) return make_zero();
  if (colon == std::string::npos) throw UnresolvedSpec("unknown test function '" + s + "'");

  if (kind == "gaussian") return make_gaussian(parse_keyed(args, "alpha", s));
  if (kind == "exp") return make_exponential(parse_keyed(args, "lambda", s));
  if (kind == "indicator") {
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) throw UnresolvedSpec("indicator needs 'a,b' in '" + s + "'");
    try {
      return make_indicator(parse_rational(trim(args.substr(0, comma))), parse_rational(trim(args.substr(comma + 1))));
    } catch (const InvalidArgument& e) {
      throw UnresolvedSpec(std::string(e.what()) + " in '" + s + "'");
    }
  }
  if (kind == "polygauss") {
    const auto pos = args.rfind(",alpha=");
    if (pos == std::string_view::npos) throw UnresolvedSpec("polygauss needs 'POLY,alpha=Q' in '" + s + "'");
    return make_poly_gaussian(parse_polynomial(args.substr(0, pos)), parse_keyed(args.substr(pos + 1), "alpha", s));
  }
  throw UnresolvedSpec("unknown test function '" + s + "'");
}

FamilyIndexVector resolve_span(std::string_view spec) {
  const std::string s = trim(spec);
  FamilyIndexVector v;
  std::string_view rest;
  if (starts_with(s, "span:phi:")) {
    v.basis = Basis::phi;
    rest = std::string_view(s).substr(9);
  } else if (starts_with(s, "span:psi:")) {
    v.basis = Basis::psi;
    rest = std::string_view(s).substr(9);
  } else {
    throw UnresolvedSpec("span literal must start with 'span:phi:' or 'span:psi:' in '" + s + "'");
  }
  const std::string body = trim(rest);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
    throw UnresolvedSpec("span literal needs braces in '" + s + "'");
  }
  std::string_view inner = std::string_view(body).substr(1, body.size() - 2);
  while (!trim(inner).empty()) {
    const auto comma = inner.find(',');
    const std::string_view item = inner.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw UnresolvedSpec("span entry needs 'k:c' in '" + s + "'");
    const int k = parse_index(item.substr(0, colon), s);
    ExactScalar c = parse_exact_scalar(item.substr(colon + 1));
    auto [it, inserted] = v.coeffs.emplace(k, c);
    if (!inserted) it->second = it->second + c;
    if (it->second.is_zero()) v.coeffs.erase(it);
    if (comma == std::string_view::npos) break;
    inner = inner.substr(comma + 1);
  }
  return v;
}

bool is_distribution_spec(std::string_view spec) {
  const std::string s = trim(spec);
  return starts_with(s, "phi:") || starts_with(s, "psi:") || starts_with(s, "x:") || starts_with(s, "delta:") ||
         starts_with(s, "span:");
}

WeakDistribution resolve_distribution(std::string_view spec) {
  const std::string s = trim(spec);
  const auto tail = [&](std::size_t n) { return std::string_view(s).substr(n); };
  if (starts_with(s, "phi:")) return phi(parse_index(tail(4), s));
  if (starts_with(s, "psi:")) return psi(parse_index(tail(4), s));
  if (starts_with(s, "x:")) return WeakDistribution::monomial(parse_index(tail(2), s));
  if (starts_with(s, "delta:")) return WeakDistribution::delta(parse_index(tail(6), s));
  if (starts_with(s, "span:")) return to_distribution(resolve_span(s));
  throw UnresolvedSpec("unknown distribution '" + s + "'");
}

Operand resolve_operand(std::string_view spec) {
  if (is_distribution_spec(spec)) return resolve_distribution(spec);
  return resolve_test_function(spec);
}

}  // namespace wpb
