#include "multipoly/system.hpp"

#include <algorithm>
#include <sstream>

namespace multipoly {

LinearInequality::LinearInequality(std::map<VariableId, Rational> c, Rational r,
                                   std::string tag)
    : coeffs(std::move(c)), rhs(std::move(r)) {
  tags.push_back(std::move(tag));
  for (auto it = coeffs.begin(); it != coeffs.end();)
    it = it->second == 0 ? coeffs.erase(it) : std::next(it);
}

void LinearInequality::set_coeff(const VariableId& v, Rational value) {
  if (value == 0)
    coeffs.erase(v);
  else
    coeffs[v] = std::move(value);
}

Rational LinearInequality::coeff(const VariableId& v) const {
  auto it = coeffs.find(v);
  return it == coeffs.end() ? Rational(0) : it->second;
}

Rational LinearInequality::coefficient_sum() const {
  Rational sum(0);
  for (const auto& [v, c] : coeffs) sum += c;
  return sum;
}

bool LinearInequality::is_nonnegativity() const {
  return coeffs.size() == 1 && coeffs.begin()->second < 0 && rhs == 0;
}

std::string LinearInequality::canonical_key() const {
  // Scale by the lcm of denominators, then divide by the gcd of all
  // numerators including the right-hand side: the unique positive scaling
  // with coprime integer entries.
  BigInt lcm(1);
  for (const auto& [v, c] : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                            c.get_den().get_mpz_t());
  mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rhs.get_den().get_mpz_t());
  BigInt gcd(0);
  auto scaled = [&](const Rational& q) {
    BigInt v = q.get_num() * (lcm / q.get_den());
    return v;
  };
  std::vector<std::pair<std::string, BigInt>> entries;
  for (const auto& [v, c] : coeffs) {
    entries.emplace_back(v.name(), scaled(c));
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), entries.back().second.get_mpz_t());
  }
  BigInt b = scaled(rhs);
  mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), b.get_mpz_t());
  if (gcd == 0) gcd = 1;
  std::ostringstream key;
  for (const auto& [name, v] : entries) key << name << ':' << BigInt(v / gcd).get_str() << ';';
  key << "<=" << BigInt(b / gcd).get_str();
  return key.str();
}

void LinearInequality::normalize() {
  BigInt lcm(1);
  for (const auto& [v, c] : coeffs)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rhs.get_den().get_mpz_t());
  BigInt gcd(0);
  for (const auto& [v, c] : coeffs) {
    BigInt scaled = c.get_num() * (lcm / c.get_den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  BigInt scaled_rhs = rhs.get_num() * (lcm / rhs.get_den());
  mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled_rhs.get_mpz_t());
  if (gcd == 0) gcd = 1;
  Rational factor(lcm, gcd);
  factor.canonicalize();
  for (auto& [v, c] : coeffs) c *= factor;
  rhs *= factor;
}

Rational LinearInequality::evaluate(const std::map<VariableId, Rational>& point) const {
  Rational value(0);
  for (const auto& [v, c] : coeffs) {
    auto it = point.find(v);
    if (it != point.end()) value += c * it->second;
  }
  return value;
}

std::string LinearInequality::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, c] : coeffs) {
    if (c < 0) {
      out << (first ? "-" : " - ");
    } else if (!first) {
      out << " + ";
    }
    Rational mag = abs(c);
    if (mag != 1) out << rational_str(mag) << ' ';
    out << v.name();
    first = false;
  }
  if (first) out << '0';
  out << " <= " << rational_str(rhs);
  if (!tags.empty()) {
    out << "  [";
    for (std::size_t i = 0; i < tags.size(); ++i) out << (i ? "+" : "") << tags[i];
    out << ']';
  }
  return out.str();
}

InequalitySystem::InequalitySystem(std::vector<VariableId> variables) {
  for (auto& v : variables) add_variable(v);
}

bool InequalitySystem::has_variable(const VariableId& v) const {
  return variable_index_.count(v) > 0;
}

void InequalitySystem::add_variable(const VariableId& v) {
  if (variable_index_.emplace(v, variables_.size()).second) variables_.push_back(v);
}

bool InequalitySystem::add_row(LinearInequality row) {
  for (const auto& [v, c] : row.coeffs)
    if (!has_variable(v))
      throw std::invalid_argument("row references undeclared variable " + v.name());
  std::string key = row.canonical_key();
  auto [it, inserted] = row_index_.emplace(std::move(key), rows_.size());
  if (!inserted) {
    auto& existing = rows_[it->second].tags;
    for (auto& tag : row.tags)
      if (std::find(existing.begin(), existing.end(), tag) == existing.end())
        existing.push_back(tag);
    return false;
  }
  rows_.push_back(std::move(row));
  return true;
}

void InequalitySystem::merge(const InequalitySystem& other) {
  for (const auto& v : other.variables()) add_variable(v);
  for (const auto& row : other.rows()) add_row(row);
}

bool InequalitySystem::contains_row(const LinearInequality& row) const {
  return row_index_.count(row.canonical_key()) > 0;
}

std::map<std::string, int> InequalitySystem::tag_counts() const {
  std::map<std::string, int> counts;
  for (const auto& row : rows_)
    for (const auto& tag : row.tags) ++counts[tag];
  return counts;
}

std::string InequalitySystem::to_string() const {
  std::ostringstream out;
  for (const auto& row : rows_) out << row.to_string() << '\n';
  return out.str();
}

}  // namespace multipoly
