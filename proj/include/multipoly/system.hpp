#ifndef MULTIPOLY_SYSTEM_HPP
#define MULTIPOLY_SYSTEM_HPP

#include <map>
#include <string>
#include <vector>

#include "multipoly/rational.hpp"
#include "multipoly/variable.hpp"

namespace multipoly {

using Objective = std::map<VariableId, Rational>;

/// Sparse row a.z <= rhs. Zero coefficients are never stored. `tags` records
/// which rule(s) produced the row; rows merged by deduplication keep every
/// contributing tag.
struct LinearInequality {
  std::map<VariableId, Rational> coeffs;
  Rational rhs;
  std::vector<std::string> tags;

  LinearInequality() : rhs(0) {}
  LinearInequality(std::map<VariableId, Rational> c, Rational r, std::string tag);

  void set_coeff(const VariableId& v, Rational value);
  Rational coeff(const VariableId& v) const;

  Rational coefficient_sum() const;

  /// Single negative coefficient with zero right-hand side, i.e. z_p >= 0.
  bool is_nonnegativity() const;

  /// Positive integer scaling with coprime entries; two rows describe the
  /// same halfspace exactly when their canonical keys match.
  std::string canonical_key() const;

  /// Rescales in place to the canonical coprime-integer form.
  void normalize();

  Rational evaluate(const std::map<VariableId, Rational>& point) const;

  std::string to_string() const;  // "-zE_1_2 + z3 <= 1  [r5]"
};

/// Ordered variable list plus rows. add_row keeps rows canonical-deduplicated
/// and never lets a row mention an undeclared variable.
class InequalitySystem {
 public:
  InequalitySystem() = default;
  explicit InequalitySystem(std::vector<VariableId> variables);

  const std::vector<VariableId>& variables() const { return variables_; }
  const std::vector<LinearInequality>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  bool has_variable(const VariableId& v) const;
  void add_variable(const VariableId& v);

  /// Returns false when an equal row was already present (tags are merged
  /// into the existing row in that case).
  bool add_row(LinearInequality row);

  /// Appends every row and variable of `other`.
  void merge(const InequalitySystem& other);

  bool contains_row(const LinearInequality& row) const;

  /// Rows carrying each tag; a merged row counts once per tag it carries.
  std::map<std::string, int> tag_counts() const;

  std::string to_string() const;

 private:
  std::vector<VariableId> variables_;
  std::map<VariableId, std::size_t> variable_index_;
  std::vector<LinearInequality> rows_;
  std::map<std::string, std::size_t> row_index_;  // canonical key -> row
};

}  // namespace multipoly

#endif
