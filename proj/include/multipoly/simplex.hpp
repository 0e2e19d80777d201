#ifndef MULTIPOLY_SIMPLEX_HPP
#define MULTIPOLY_SIMPLEX_HPP

#include <map>
#include <memory>
#include <vector>

#include "multipoly/system.hpp"

namespace multipoly {

enum class LpStatus { optimal, unbounded, infeasible };

const char* to_string(LpStatus s);

/// Exact LP result. When optimal, `point` satisfies every row of the solved
/// system exactly and is the basic solution of `basis` (one basic column per
/// row; structural columns come first, then slacks).
struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational objective;
  std::map<VariableId, Rational> point;
  std::vector<int> basis;
};

/// max c.x  s.t.  A x <= b, x >= 0, solved by primal simplex with Bland's
/// rule over exact rationals (integer pivoting with a fast word-size path
/// that escalates to arbitrary precision on overflow). Variables are
/// nonnegative; every system this project emits describes a subset of the
/// unit box, so the convention costs nothing. Identical inputs give
/// identical bases and solutions.
LpSolution solve_max(const InequalitySystem& system, const Objective& objective);

/// Matrix-level entry point (also used to re-solve duals in tests).
struct DenseLp {
  std::vector<std::vector<Rational>> rows;  // coefficients, one vector per row
  std::vector<Rational> rhs;
};

struct DenseSolution {
  LpStatus status = LpStatus::infeasible;
  Rational objective;
  std::vector<Rational> x;
  std::vector<int> basis;
};

DenseSolution solve_max_dense(const DenseLp& lp, const std::vector<Rational>& c);

/// Caches the matrix lowering of a system so that many objectives can be
/// solved against it cheaply. Not shareable mid-solve; distinct instances
/// may run concurrently.
class LpInstance {
 public:
  explicit LpInstance(const InequalitySystem& system);
  ~LpInstance();
  LpInstance(LpInstance&&) noexcept;
  LpInstance& operator=(LpInstance&&) noexcept;

  LpSolution solve(const Objective& objective) const;

  std::size_t num_rows() const;
  std::size_t num_vars() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace multipoly

#endif
