#include "hstab/linprog.hpp"

#include <stdexcept>

namespace hstab {

namespace {

// Dense simplex tableau in minimize form: rows 0..m-1 hold B^{-1}A | B^{-1}b,
// the objective row holds reduced costs | -(objective value).
struct Tableau {
  int m, n;  // constraint rows, total columns (structural + artificial)
  std::vector<std::vector<Rational>> t;  // (m+1) x (n+1)
  std::vector<int> basis;                // basic column per row
  long iterations = 0;
  long guard;

  Tableau(int m_, int n_, long guard_) : m(m_), n(n_), guard(guard_) {
    t.assign(m + 1, std::vector<Rational>(n + 1));
    basis.assign(m, -1);
  }

  void pivot(int row, int col) {
    Rational inv = Rational(1) / t[row][col];
    for (int j = 0; j <= n; ++j) t[row][j] *= inv;
    for (int r = 0; r <= m; ++r) {
      if (r == row || t[r][col].is_zero()) continue;
      Rational f = t[r][col];
      for (int j = 0; j <= n; ++j) t[r][j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  // Bland's rule: entering column is the lowest-index negative reduced cost,
  // leaving row breaks ratio ties by lowest basic index. Returns:
  // 0 optimal, 1 unbounded.
  int run(const std::vector<bool>& allowed) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < n; ++j)
        if (allowed[j] && t[m][j].sign() < 0) { enter = j; break; }
      if (enter < 0) return 0;
      int leave = -1;
      Rational best;
      for (int r = 0; r < m; ++r) {
        if (t[r][enter].sign() <= 0) continue;
        Rational ratio = t[r][n] / t[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return 1;
      pivot(leave, enter);
      if (++iterations > guard)
        throw std::runtime_error("lp_solve: iteration guard tripped");
    }
  }

  // Rebuilds the objective row for costs c: reduced costs in the body,
  // -(objective value) in the rhs cell.
  void set_objective(const std::vector<Rational>& c) {
    for (int j = 0; j <= n; ++j)
      t[m][j] = j < static_cast<int>(c.size()) ? c[j] : Rational(0);
    for (int r = 0; r < m; ++r) {
      const Rational& cb = c[basis[r]];
      if (cb.is_zero()) continue;
      for (int j = 0; j <= n; ++j) t[m][j] -= cb * t[r][j];
    }
  }
};

}  // namespace

LpResult lp_solve(const LinearProgram& lp, long max_iterations) {
  const int m = lp.constraints.rows();
  const int nvars = lp.constraints.cols();
  if (static_cast<int>(lp.rhs.size()) != m ||
      static_cast<int>(lp.objective.size()) != nvars ||
      static_cast<int>(lp.nonneg.size()) != nvars)
    throw std::invalid_argument("lp_solve: malformed dimensions");

  // Expand free variables into positive/negative parts.
  std::vector<int> col_of_var(nvars), neg_col_of_var(nvars, -1);
  int ncols = 0;
  for (int j = 0; j < nvars; ++j) {
    col_of_var[j] = ncols++;
    if (!lp.nonneg[j]) neg_col_of_var[j] = ncols++;
  }
  const int nart = m;
  const int ntot = ncols + nart;

  Tableau tab(m, ntot, max_iterations);
  std::vector<int> row_sign(m, 1);
  for (int i = 0; i < m; ++i) {
    int s = lp.rhs[i].sign() < 0 ? -1 : 1;
    row_sign[i] = s;
    for (int j = 0; j < nvars; ++j) {
      Rational a = lp.constraints.at(i, j);
      if (s < 0) a = -a;
      tab.t[i][col_of_var[j]] = a;
      if (neg_col_of_var[j] >= 0) tab.t[i][neg_col_of_var[j]] = -a;
    }
    tab.t[i][ncols + i] = Rational(1);
    tab.t[i][ntot] = s < 0 ? -lp.rhs[i] : lp.rhs[i];
    tab.basis[i] = ncols + i;
  }

  // Phase one: minimize the artificial sum.
  std::vector<Rational> phase1_cost(ntot);
  for (int i = 0; i < nart; ++i) phase1_cost[ncols + i] = Rational(1);
  tab.set_objective(phase1_cost);
  std::vector<bool> allow_all(ntot, true);
  tab.run(allow_all);

  LpResult res;
  res.iterations = tab.iterations;
  Rational phase1_value = -tab.t[m][ntot];
  if (phase1_value.sign() > 0) {
    res.status = LpStatus::infeasible;
    res.dual.resize(m);
    // y_i = cost(artificial_i) - reduced_cost(artificial_i), unflipped.
    for (int i = 0; i < m; ++i) {
      Rational y = Rational(1) - tab.t[m][ncols + i];
      res.dual[i] = row_sign[i] < 0 ? -y : y;
    }
    return res;
  }

  // Drive lingering artificials out of the basis where a structural column
  // allows it; rows that stay artificial are redundant and pinned at zero.
  for (int r = 0; r < m; ++r) {
    if (tab.basis[r] < ncols) continue;
    for (int j = 0; j < ncols; ++j)
      if (!tab.t[r][j].is_zero()) { tab.pivot(r, j); break; }
  }

  // Phase two.
  const bool maximize = lp.sense == LpSense::maximize;
  std::vector<Rational> cost(ntot);
  for (int j = 0; j < nvars; ++j) {
    Rational c = maximize ? -lp.objective[j] : lp.objective[j];
    cost[col_of_var[j]] = c;
    if (neg_col_of_var[j] >= 0) cost[neg_col_of_var[j]] = -c;
  }
  tab.set_objective(cost);
  std::vector<bool> allowed(ntot, true);
  for (int i = 0; i < nart; ++i) allowed[ncols + i] = false;
  int rc = tab.run(allowed);
  res.iterations = tab.iterations;
  if (rc == 1) {
    res.status = LpStatus::unbounded;
    return res;
  }

  res.status = LpStatus::optimal;
  Rational value = -tab.t[m][ntot];
  res.optimum = maximize ? -value : value;
  res.witness.assign(nvars, Rational(0));
  std::vector<Rational> colval(ntot);
  for (int r = 0; r < m; ++r) colval[tab.basis[r]] = tab.t[r][ntot];
  for (int j = 0; j < nvars; ++j) {
    res.witness[j] = colval[col_of_var[j]];
    if (neg_col_of_var[j] >= 0) res.witness[j] -= colval[neg_col_of_var[j]];
  }
  res.dual.resize(m);
  for (int i = 0; i < m; ++i) {
    Rational y = -tab.t[m][ncols + i];  // artificial cost is zero in phase two
    if (maximize) y = -y;
    res.dual[i] = row_sign[i] < 0 ? -y : y;
  }
  return res;
}

}  // namespace hstab
