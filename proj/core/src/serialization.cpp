#include "wpb/serialization.hpp"

#include "wpb/error.hpp"

namespace wpb {

namespace {

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const Rational q = parse_rational(s);
    if (denominator(q) != 1) throw UnresolvedSpec("expected an integer, got '" + s + "'");
    return numerator(q);
  }
  if (j.is_number_integer()) return Integer(j.get<long long>());
  throw UnresolvedSpec("expected an integer component, got " + j.dump());
}

Rational rational_from(const nlohmann::json& num, const nlohmann::json& den) {
  const Integer d = integer_from_json(den);
  if (d == 0) throw UnresolvedSpec("zero denominator in serialized scalar");
  return Rational(integer_from_json(num), d);
}

nlohmann::json coefficients_to_json(const WeakDistribution::Coefficients& c) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [n, v] : c) out[std::to_string(n)] = to_json(v);
  return out;
}

WeakDistribution::Coefficients coefficients_from_json(const nlohmann::json& j) {
  WeakDistribution::Coefficients out;
  if (j.is_null()) return out;
  if (!j.is_object()) throw UnresolvedSpec("coefficient block must be an object");
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || n < 0) throw UnresolvedSpec("bad coefficient index '" + key + "'");
    ExactScalar c = exact_scalar_from_json(value);
    if (!c.is_zero()) out.emplace(n, std::move(c));
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const ExactScalar& c) {
  return nlohmann::json::array({numerator(c.re()).str(), denominator(c.re()).str(),
                                numerator(c.im()).str(), denominator(c.im()).str(),
                                c.radical().str(), "1"});
}

ExactScalar exact_scalar_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 6) {
    throw UnresolvedSpec("exact scalar must be a 6-element array, got " + j.dump());
  }
  return ExactScalar::with_radical(rational_from(j[0], j[1]), rational_from(j[2], j[3]),
                                   rational_from(j[4], j[5]));
}

nlohmann::json to_json(const WeakDistribution& f) {
  return {{"poly", coefficients_to_json(f.poly())}, {"delta", coefficients_to_json(f.delta())}};
}

WeakDistribution weak_distribution_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw UnresolvedSpec("distribution must be a JSON object");
  const nlohmann::json none;
  return WeakDistribution(coefficients_from_json(j.contains("poly") ? j.at("poly") : none),
                          coefficients_from_json(j.contains("delta") ? j.at("delta") : none));
}

}  // namespace wpb
