#include "multipoly/simplex.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace multipoly {

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::unbounded: return "unbounded";
    case LpStatus::infeasible: return "infeasible";
  }
  return "?";
}

namespace {

struct TableauOverflow {};

// Word-size integer backend with overflow detection. Any overflow aborts the
// solve, which then restarts on the arbitrary-precision backend.
struct I64Ops {
  using Int = long long;
  static Int from_bigint(const BigInt& v) {
    if (!v.fits_slong_p()) throw TableauOverflow{};
    return v.get_si();
  }
  static BigInt to_bigint(Int v) { return BigInt(static_cast<long>(v)); }
  static Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw TableauOverflow{};
    return r;
  }
  static Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw TableauOverflow{};
    return r;
  }
  static Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw TableauOverflow{};
    return r;
  }
  static Int divexact(Int a, Int b) {
    assert(b != 0 && a % b == 0);
    return a / b;
  }
  static int sign(Int a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }
};

struct MpzOps {
  using Int = BigInt;
  static Int from_bigint(const BigInt& v) { return v; }
  static BigInt to_bigint(const Int& v) { return v; }
  static Int add(const Int& a, const Int& b) { return a + b; }
  static Int sub(const Int& a, const Int& b) { return a - b; }
  static Int mul(const Int& a, const Int& b) { return a * b; }
  static Int divexact(const Int& a, const Int& b) {
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static int sign(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
};

struct CoreResult {
  LpStatus status = LpStatus::infeasible;
  Rational objective;                    // before objective descaling
  std::vector<Rational> x;
  std::vector<int> basis;
};

// Primal simplex over an integer tableau sharing one positive denominator
// (integer pivoting: entries stay determinants of the input, division in the
// pivot update is exact). Bland's rule in both phases; entering column is the
// smallest eligible index, leaving row breaks ratio ties on the smallest
// basic column.
template <class Ops>
class Tableau {
  using Int = typename Ops::Int;

 public:
  Tableau(const std::vector<std::vector<BigInt>>& A, const std::vector<BigInt>& b,
          const std::vector<BigInt>& c)
      : m_(A.size()), n_(c.size()) {
    slack0_ = n_;
    art0_ = n_ + m_;
    std::vector<std::size_t> art_rows;
    for (std::size_t i = 0; i < m_; ++i)
      if (mpz_sgn(b[i].get_mpz_t()) < 0) art_rows.push_back(i);
    n_art_ = art_rows.size();
    cols_ = n_ + m_ + n_art_;

    rows_.assign(m_, std::vector<Int>(cols_, Int(0)));
    rhs_.resize(m_, Int(0));
    basis_.resize(m_);
    den_ = Int(1);

    std::size_t next_art = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = mpz_sgn(b[i].get_mpz_t()) < 0;
      for (std::size_t j = 0; j < n_; ++j) {
        Int v = Ops::from_bigint(A[i][j]);
        rows_[i][j] = flip ? Ops::sub(Int(0), v) : v;
      }
      rows_[i][slack0_ + i] = flip ? Int(-1) : Int(1);
      Int bv = Ops::from_bigint(b[i]);
      rhs_[i] = flip ? Ops::sub(Int(0), bv) : bv;
      if (flip) {
        const std::size_t col = art0_ + next_art++;
        rows_[i][col] = Int(1);
        basis_[i] = static_cast<int>(col);
      } else {
        basis_[i] = static_cast<int>(slack0_ + i);
      }
    }

    zrow_.assign(cols_, Int(0));
    zrhs_ = Int(0);
    for (std::size_t j = 0; j < n_; ++j) zrow_[j] = Ops::sub(Int(0), Ops::from_bigint(c[j]));

    if (n_art_ > 0) {
      wrow_.assign(cols_, Int(0));
      wrhs_ = Int(0);
      for (std::size_t t = 0; t < n_art_; ++t) wrow_[art0_ + t] = Int(1);
      for (std::size_t i : art_rows) {
        for (std::size_t j = 0; j < cols_; ++j) wrow_[j] = Ops::sub(wrow_[j], rows_[i][j]);
        wrhs_ = Ops::sub(wrhs_, rhs_[i]);
      }
    }
  }

  CoreResult run() {
    CoreResult out;
    if (n_art_ > 0) {
      iterate(/*phase1=*/true);
      if (Ops::sign(wrhs_) < 0) {
        out.status = LpStatus::infeasible;
        return out;
      }
      if (!expel_artificials()) {
        out.status = LpStatus::infeasible;  // cannot happen with w == 0
        return out;
      }
    }
    if (!iterate(/*phase1=*/false)) {
      out.status = LpStatus::unbounded;
      return out;
    }
    out.status = LpStatus::optimal;
    std::vector<BigInt> num(n_, BigInt(0));
    const BigInt den = Ops::to_bigint(den_);
    for (std::size_t i = 0; i < m_; ++i)
      if (!dead_[i] && basis_[i] >= 0 && static_cast<std::size_t>(basis_[i]) < n_)
        num[basis_[i]] = Ops::to_bigint(rhs_[i]);
    out.x.reserve(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      Rational q(num[j], den);
      q.canonicalize();
      out.x.push_back(std::move(q));
    }
    {
      Rational obj(Ops::to_bigint(zrhs_), den);
      obj.canonicalize();
      out.objective = std::move(obj);
    }
    for (std::size_t i = 0; i < m_; ++i)
      if (!dead_[i]) out.basis.push_back(basis_[i]);
    return out;
  }

 private:
  // Bland: smallest eligible column with a negative cost-row entry.
  int pick_entering(const std::vector<Int>& cost) const {
    for (std::size_t j = 0; j < n_ + m_; ++j)
      if (Ops::sign(cost[j]) < 0) return static_cast<int>(j);
    return -1;
  }

  int pick_leaving(std::size_t s) const {
    int best = -1;
    for (std::size_t i = 0; i < m_; ++i) {
      if (dead_[i] || Ops::sign(rows_[i][s]) <= 0) continue;
      if (best < 0) {
        best = static_cast<int>(i);
        continue;
      }
      // rhs_i / a_is  vs  rhs_b / a_bs, all parts nonnegative / positive
      Int lhs = Ops::mul(rhs_[i], rows_[best][s]);
      Int rhsv = Ops::mul(rhs_[best], rows_[i][s]);
      if (lhs < rhsv || (lhs == rhsv && basis_[i] < basis_[best]))
        best = static_cast<int>(i);
    }
    return best;
  }

  void pivot(std::size_t r, std::size_t s) {
    const Int piv = rows_[r][s];
    assert(Ops::sign(piv) > 0);
    // Every row except the pivot row moves to the new shared denominator;
    // zero-factor rows still need the piv/den rescale.
    auto update_row = [&](std::vector<Int>& row, Int& row_rhs) {
      const Int factor = row[s];
      for (std::size_t j = 0; j < cols_; ++j)
        row[j] = Ops::divexact(Ops::sub(Ops::mul(row[j], piv), Ops::mul(factor, rows_[r][j])),
                               den_);
      row_rhs = Ops::divexact(Ops::sub(Ops::mul(row_rhs, piv), Ops::mul(factor, rhs_[r])), den_);
    };
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || dead_[i]) continue;
      update_row(rows_[i], rhs_[i]);
    }
    update_row(zrow_, zrhs_);
    if (!wrow_.empty()) update_row(wrow_, wrhs_);
    den_ = piv;
    basis_[r] = static_cast<int>(s);
  }

  // Returns false on unboundedness (phase 2 only; phase 1 is never unbounded).
  bool iterate(bool phase1) {
    const std::vector<Int>& cost = phase1 ? wrow_ : zrow_;
    for (;;) {
      if (phase1 && Ops::sign(wrhs_) == 0) return true;  // feasibility reached
      int s = pick_entering(cost);
      if (s < 0) return true;
      int r = pick_leaving(static_cast<std::size_t>(s));
      if (r < 0) {
        if (phase1) throw std::logic_error("phase-1 subproblem cannot be unbounded");
        return false;
      }
      pivot(static_cast<std::size_t>(r), static_cast<std::size_t>(s));
    }
  }

  // Drives basic artificials out (degenerate pivots) or drops redundant rows.
  bool expel_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (dead_[i] || static_cast<std::size_t>(basis_[i]) < art0_) continue;
      assert(Ops::sign(rhs_[i]) == 0);
      int target = -1;
      for (std::size_t j = 0; j < n_ + m_ && target < 0; ++j)
        if (Ops::sign(rows_[i][j]) > 0) target = static_cast<int>(j);
      if (target < 0) {
        // try a sign flip: the row is an equation, its orientation is free
        bool any = false;
        for (std::size_t j = 0; j < n_ + m_; ++j)
          if (Ops::sign(rows_[i][j]) != 0) any = true;
        if (!any) {
          dead_[i] = true;  // redundant constraint
          continue;
        }
        for (std::size_t j = 0; j < cols_; ++j) rows_[i][j] = Ops::sub(Int(0), rows_[i][j]);
        rhs_[i] = Ops::sub(Int(0), rhs_[i]);
        for (std::size_t j = 0; j < n_ + m_ && target < 0; ++j)
          if (Ops::sign(rows_[i][j]) > 0) target = static_cast<int>(j);
      }
      pivot(i, static_cast<std::size_t>(target));
    }
    return true;
  }

  std::size_t m_, n_, slack0_, art0_, n_art_ = 0, cols_ = 0;
  std::vector<std::vector<Int>> rows_;
  std::vector<Int> rhs_;
  std::vector<Int> zrow_, wrow_;
  Int zrhs_{0}, wrhs_{0};
  Int den_{1};
  std::vector<int> basis_;
  std::vector<char> dead_ = std::vector<char>(m_, 0);
};

template <class Ops>
CoreResult solve_with(const std::vector<std::vector<BigInt>>& A,
                      const std::vector<BigInt>& b, const std::vector<BigInt>& c) {
  Tableau<Ops> tableau(A, b, c);
  return tableau.run();
}

CoreResult solve_core(const std::vector<std::vector<BigInt>>& A,
                      const std::vector<BigInt>& b, const std::vector<BigInt>& c) {
  try {
    return solve_with<I64Ops>(A, b, c);
  } catch (const TableauOverflow&) {
    return solve_with<MpzOps>(A, b, c);
  }
}

// Clears denominators row by row (a positive row scaling leaves the halfspace
// unchanged). Objective scaling is returned so the optimum can be descaled.
void scale_row(const std::vector<Rational>& row, const Rational& rhs,
               std::vector<BigInt>& out, BigInt& out_rhs) {
  BigInt lcm(1);
  for (const Rational& q : row)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rhs.get_den().get_mpz_t());
  out.clear();
  out.reserve(row.size());
  for (const Rational& q : row) out.push_back(q.get_num() * (lcm / q.get_den()));
  out_rhs = rhs.get_num() * (lcm / rhs.get_den());
}

}  // namespace

struct LpInstance::Impl {
  std::vector<VariableId> vars;
  std::map<VariableId, std::size_t> var_index;
  std::vector<std::vector<BigInt>> A;
  std::vector<BigInt> b;
};

LpInstance::LpInstance(const InequalitySystem& system) : impl_(new Impl) {
  impl_->vars = system.variables();
  for (std::size_t j = 0; j < impl_->vars.size(); ++j)
    impl_->var_index.emplace(impl_->vars[j], j);
  const std::size_t n = impl_->vars.size();
  for (const LinearInequality& row : system.rows()) {
    std::vector<Rational> dense(n, Rational(0));
    for (const auto& [v, c] : row.coeffs) dense[impl_->var_index.at(v)] = c;
    std::vector<BigInt> scaled;
    BigInt srhs;
    scale_row(dense, row.rhs, scaled, srhs);
    impl_->A.push_back(std::move(scaled));
    impl_->b.push_back(std::move(srhs));
  }
}

LpInstance::~LpInstance() = default;
LpInstance::LpInstance(LpInstance&&) noexcept = default;
LpInstance& LpInstance::operator=(LpInstance&&) noexcept = default;

std::size_t LpInstance::num_rows() const { return impl_->A.size(); }
std::size_t LpInstance::num_vars() const { return impl_->vars.size(); }

LpSolution LpInstance::solve(const Objective& objective) const {
  const std::size_t n = impl_->vars.size();
  std::vector<Rational> c(n, Rational(0));
  for (const auto& [v, coeff] : objective) {
    auto it = impl_->var_index.find(v);
    if (it == impl_->var_index.end())
      throw std::invalid_argument("objective variable " + v.name() +
                                  " is not part of the system");
    c[it->second] = coeff;
  }
  BigInt c_scale(1);
  for (const Rational& q : c)
    mpz_lcm(c_scale.get_mpz_t(), c_scale.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<BigInt> c_int;
  c_int.reserve(n);
  for (const Rational& q : c) c_int.push_back(q.get_num() * (c_scale / q.get_den()));

  CoreResult core = solve_core(impl_->A, impl_->b, c_int);
  LpSolution out;
  out.status = core.status;
  if (core.status != LpStatus::optimal) return out;
  out.objective = core.objective / Rational(c_scale);
  out.basis = std::move(core.basis);
  for (std::size_t j = 0; j < n; ++j)
    out.point.emplace(impl_->vars[j], std::move(core.x[j]));
  return out;
}

LpSolution solve_max(const InequalitySystem& system, const Objective& objective) {
  return LpInstance(system).solve(objective);
}

DenseSolution solve_max_dense(const DenseLp& lp, const std::vector<Rational>& c) {
  std::vector<std::vector<BigInt>> A;
  std::vector<BigInt> b;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    std::vector<BigInt> scaled;
    BigInt srhs;
    scale_row(lp.rows[i], lp.rhs[i], scaled, srhs);
    A.push_back(std::move(scaled));
    b.push_back(std::move(srhs));
  }
  BigInt c_scale(1);
  for (const Rational& q : c)
    mpz_lcm(c_scale.get_mpz_t(), c_scale.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<BigInt> c_int;
  for (const Rational& q : c) c_int.push_back(q.get_num() * (c_scale / q.get_den()));

  CoreResult core = solve_core(A, b, c_int);
  DenseSolution out;
  out.status = core.status;
  if (core.status != LpStatus::optimal) return out;
  out.objective = core.objective / Rational(c_scale);
  out.x = std::move(core.x);
  out.basis = std::move(core.basis);
  return out;
}

}  // namespace multipoly
