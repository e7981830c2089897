#include "kostant/linalg.hpp"

namespace kostant {

Matrix invert(const Matrix& m) {
  std::size_t n = m.size();
  Matrix a = m;
  Matrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::vector<Rational> solve(const Matrix& m, const std::vector<Rational>& rhs) {
  Matrix inv = invert(m);
  std::size_t n = m.size();
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x[i] += inv[i][j] * rhs[j];
  return x;
}

Rational positive_ratio(const Vec& target, const Vec& v) {
  target.check_compatible(v);
  Rational r;
  bool have = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) {
      if (!target[i].is_zero()) return Rational(0);
      continue;
    }
    Rational q = target[i] / v[i];
    if (!have) {
      r = q;
      have = true;
    } else if (q != r) {
      return Rational(0);
    }
  }
  if (!have || r.sign() <= 0) return Rational(0);
  return r;
}

}  // namespace kostant
