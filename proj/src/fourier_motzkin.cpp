#include "multipoly/fourier_motzkin.hpp"

namespace multipoly {

InequalitySystem fourier_motzkin_eliminate(const InequalitySystem& system,
                                           const VariableId& var) {
  if (!system.has_variable(var))
    throw std::invalid_argument("variable " + var.name() + " is not in the system");

  std::vector<const LinearInequality*> upper, lower, untouched;
  for (const LinearInequality& row : system.rows()) {
    Rational c = row.coeff(var);
    if (c > 0)
      upper.push_back(&row);  // bounds var from above
    else if (c < 0)
      lower.push_back(&row);
    else
      untouched.push_back(&row);
  }

  InequalitySystem out;
  for (const VariableId& v : system.variables())
    if (!(v == var)) out.add_variable(v);

  auto add = [&](LinearInequality row) {
    if (row.coeffs.empty() && row.rhs >= 0) return;  // 0 <= nonnegative
    row.normalize();
    out.add_row(std::move(row));
  };

  for (const LinearInequality* row : untouched) add(*row);

  for (const LinearInequality* up : upper) {
    const Rational cu = up->coeff(var);
    for (const LinearInequality* lo : lower) {
      const Rational cl = -lo->coeff(var);
      // cl * up + cu * lo cancels var; both multipliers are positive.
      std::map<VariableId, Rational> coeffs;
      for (const auto& [v, c] : up->coeffs) {
        if (v == var) continue;
        coeffs[v] += cl * c;
      }
      for (const auto& [v, c] : lo->coeffs) {
        if (v == var) continue;
        coeffs[v] += cu * c;
      }
      for (auto it = coeffs.begin(); it != coeffs.end();)
        it = it->second == 0 ? coeffs.erase(it) : std::next(it);
      add(LinearInequality(std::move(coeffs), cl * up->rhs + cu * lo->rhs, "fm"));
    }
  }
  return out;
}

}  // namespace multipoly
