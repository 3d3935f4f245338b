#include "wpb/weak_distribution.hpp"

#include "wpb/error.hpp"

#include <algorithm>

namespace wpb {

namespace {

void prune(WeakDistribution::Coefficients& c) {
  std::erase_if(c, [](const auto& kv) { return kv.second.is_zero(); });
}

void accumulate(WeakDistribution::Coefficients& into, int key, const ExactScalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = into.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) into.erase(it);
  }
}

void check_key(int key, const char* what) {
  if (key < 0) throw InvalidArgument(std::string("negative ") + what);
}

void check_cap(int order, OrderCap cap, const char* op) {
  if (order > cap.max_order) {
    throw OrderOverflow(std::string(op) + " would produce order " + std::to_string(order) +
                        " above the cap " + std::to_string(cap.max_order));
  }
}

}  // namespace

WeakDistribution::WeakDistribution(Coefficients poly, Coefficients delta)
    : poly_(std::move(poly)), delta_(std::move(delta)) {
  for (const auto& kv : poly_) check_key(kv.first, "degree");
  for (const auto& kv : delta_) check_key(kv.first, "delta order");
  prune(poly_);
  prune(delta_);
}

WeakDistribution WeakDistribution::monomial(int degree, ExactScalar coefficient) {
  check_key(degree, "degree");
  return WeakDistribution({{degree, std::move(coefficient)}}, {});
}

WeakDistribution WeakDistribution::delta(int order, ExactScalar coefficient) {
  check_key(order, "delta order");
  return WeakDistribution({}, {{order, std::move(coefficient)}});
}

ExactScalar WeakDistribution::poly_coefficient(int degree) const {
  auto it = poly_.find(degree);
  return it == poly_.end() ? ExactScalar{} : it->second;
}

ExactScalar WeakDistribution::delta_coefficient(int order) const {
  auto it = delta_.find(order);
  return it == delta_.end() ? ExactScalar{} : it->second;
}

int WeakDistribution::max_order() const noexcept {
  int out = -1;
  if (!poly_.empty()) out = std::max(out, poly_.rbegin()->first);
  if (!delta_.empty()) out = std::max(out, delta_.rbegin()->first);
  return out;
}

WeakDistribution WeakDistribution::operator-() const {
  WeakDistribution out = *this;
  for (auto& kv : out.poly_) kv.second = -kv.second;
  for (auto& kv : out.delta_) kv.second = -kv.second;
  return out;
}

WeakDistribution& WeakDistribution::operator+=(const WeakDistribution& o) {
  for (const auto& [k, v] : o.poly_) accumulate(poly_, k, v);
  for (const auto& [k, v] : o.delta_) accumulate(delta_, k, v);
  return *this;
}

WeakDistribution& WeakDistribution::operator-=(const WeakDistribution& o) { return *this += -o; }

WeakDistribution operator*(const ExactScalar& c, const WeakDistribution& f) {
  if (c.is_zero()) return {};
  WeakDistribution out = f;
  for (auto& kv : out.poly_) kv.second *= c;
  for (auto& kv : out.delta_) kv.second *= c;
  return out;
}

std::string WeakDistribution::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  auto term = [&out](const ExactScalar& c, const std::string& basis) {
    if (!out.empty()) out += " + ";
    std::string coeff = c.to_string();
    if (basis == "1") {
      out += coeff;
      return;
    }
    if (coeff == "1" || coeff == "-1") {
      out += (coeff == "-1" ? "-" : "") + basis;
      return;
    }
    if (coeff.find_first_of("+-", 1) != std::string::npos && coeff.front() != '(') coeff = "(" + coeff + ")";
    out += coeff + "*" + basis;
  };
  for (const auto& [n, c] : poly_) term(c, n == 0 ? std::string("1") : "x^" + std::to_string(n));
  for (const auto& [n, c] : delta_) term(c, "delta^(" + std::to_string(n) + ")");
  return out;
}

WeakDistribution add(const WeakDistribution& f, const WeakDistribution& g) { return f + g; }

WeakDistribution scale(const ExactScalar& c, const WeakDistribution& f) { return c * f; }

WeakDistribution apply_x(const WeakDistribution& f, OrderCap cap) {
  WeakDistribution::Coefficients poly;
  WeakDistribution::Coefficients delta;
  for (const auto& [n, c] : f.poly()) {
    check_cap(n + 1, cap, "apply_x");
    poly.emplace(n + 1, c);
  }
  // (x δ^(n))' = −n δ^(n), hence x δ^(n) = −n δ^(n−1) and x δ = 0
  for (const auto& [n, c] : f.delta()) {
    if (n == 0) continue;
    accumulate(delta, n - 1, ExactScalar(-n) * c);
  }
  return WeakDistribution(std::move(poly), std::move(delta));
}

WeakDistribution apply_D(const WeakDistribution& f, OrderCap cap) {
  WeakDistribution::Coefficients poly;
  WeakDistribution::Coefficients delta;
  for (const auto& [n, c] : f.poly()) {
    if (n == 0) continue;
    accumulate(poly, n - 1, ExactScalar(n) * c);
  }
  for (const auto& [n, c] : f.delta()) {
    check_cap(n + 1, cap, "apply_D");
    delta.emplace(n + 1, c);
  }
  return WeakDistribution(std::move(poly), std::move(delta));
}

WeakDistribution apply_atom(Ladder atom, const WeakDistribution& f, OrderCap cap) {
  switch (atom) {
    case Ladder::a:
      return apply_D(f, cap);
    case Ladder::a_dag:
      return -apply_D(f, cap);
    case Ladder::b:
    case Ladder::b_dag:
      return apply_x(f, cap);
  }
  throw InvalidArgument("unknown ladder atom");
}

WeakDistribution apply_word(const OperatorWord& word, const WeakDistribution& f, OrderCap cap) {
  WeakDistribution out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply_atom(*it, out, cap);
  return out;
}

WeakDistribution commutator_residual(const WeakDistribution& f, OrderCap cap) {
  const WeakDistribution ab = apply_word({Ladder::a, Ladder::b}, f, cap);
  const WeakDistribution ba = apply_word({Ladder::b, Ladder::a}, f, cap);
  return ab - ba - f;
}

std::string to_string(Ladder atom) {
  switch (atom) {
    case Ladder::a:
      return "a";
    case Ladder::b:
      return "b";
    case Ladder::a_dag:
      return "a_dag";
    case Ladder::b_dag:
      return "b_dag";
  }
  return "?";
}

}  // namespace wpb
