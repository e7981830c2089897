#include "kostant/simplex.hpp"

#include <stdexcept>

namespace kostant {

FeasibilityResult solve_equality_feasibility(const std::vector<std::vector<Rational>>& a,
                                             const std::vector<Rational>& b) {
  std::size_t m = a.size();
  if (b.size() != m) throw std::invalid_argument("rhs size mismatch");
  std::size_t n = m ? a[0].size() : 0;

  // Tableau columns: n originals, m artificials, rhs.  Rows flipped so the
  // rhs is nonnegative; the phase-I objective minimizes the artificials.
  std::size_t cols = n + m + 1;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    if (a[r].size() != n) throw std::invalid_argument("ragged constraint matrix");
    Rational flip = b[r].sign() < 0 ? Rational(-1) : Rational(1);
    for (std::size_t j = 0; j < n; ++j) t[r][j] = flip * a[r][j];
    t[r][n + r] = Rational(1);
    t[r][cols - 1] = flip * b[r];
    basis[r] = n + r;
  }

  auto is_artificial = [&](std::size_t j) { return j >= n && j < n + m; };
  for (;;) {
    // reduced cost of column j: c_j - sum over rows with artificial basis
    std::size_t enter = cols;  // Bland: smallest improving column
    for (std::size_t j = 0; j + 1 < cols && enter == cols; ++j) {
      if (is_artificial(j)) continue;  // never re-enter artificials
      Rational rc;
      for (std::size_t r = 0; r < m; ++r)
        if (is_artificial(basis[r])) rc -= t[r][j];
      if (rc.sign() < 0) enter = j;
    }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][enter].sign() <= 0) continue;
      Rational ratio = t[r][cols - 1] / t[r][enter];
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) throw std::logic_error("unbounded phase-I objective");

    Rational piv = t[leave][enter];
    for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || t[r][enter].is_zero()) continue;
      Rational f = t[r][enter];
      for (std::size_t j = 0; j < cols; ++j) t[r][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  Rational objective;
  for (std::size_t r = 0; r < m; ++r)
    if (is_artificial(basis[r])) objective += t[r][cols - 1];

  FeasibilityResult res;
  if (objective.is_zero()) {
    res.feasible = true;
    res.solution.assign(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r)
      if (basis[r] < n) res.solution[basis[r]] = t[r][cols - 1];
    // exact re-check
    for (std::size_t r = 0; r < m; ++r) {
      Rational lhs;
      for (std::size_t j = 0; j < n; ++j) lhs += a[r][j] * res.solution[j];
      if (lhs != b[r]) throw std::logic_error("simplex produced an invalid solution");
    }
  } else {
    // y^T = c_B B^{-1}; the artificial columns of the tableau carry B^{-1}
    // (up to the row flips, which are folded back here).
    res.dual.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      Rational y;
      for (std::size_t r = 0; r < m; ++r)
        if (is_artificial(basis[r])) y += t[r][n + i];
      res.dual[i] = b[i].sign() < 0 ? -y : y;
    }
    // exact certificate check: y^T A <= 0 on every column, y^T b > 0
    Rational yb;
    for (std::size_t r = 0; r < m; ++r) yb += res.dual[r] * b[r];
    if (yb.sign() <= 0) throw std::logic_error("invalid Farkas certificate");
    for (std::size_t j = 0; j < n; ++j) {
      Rational ya;
      for (std::size_t r = 0; r < m; ++r) ya += res.dual[r] * a[r][j];
      if (ya.sign() > 0) throw std::logic_error("invalid Farkas certificate");
    }
  }
  return res;
}

}  // namespace kostant
