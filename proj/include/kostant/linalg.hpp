#ifndef KOSTANT_LINALG_HPP
#define KOSTANT_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "kostant/rational.hpp"

namespace kostant {

// Coordinate basis a vector is expressed in.  Vectors in different bases
// never mix in arithmetic; mixing is a hard error.
enum class Basis { Epsilon, SimpleRoot, Delta };

inline const char* basis_name(Basis b) {
  switch (b) {
    case Basis::Epsilon: return "epsilon";
    case Basis::SimpleRoot: return "simple_root";
    case Basis::Delta: return "delta";
  }
  return "?";
}

struct Vec {
  Basis basis = Basis::Epsilon;
  std::vector<Rational> c;

  Vec() = default;
  Vec(Basis b, std::size_t n) : basis(b), c(n) {}
  Vec(Basis b, std::vector<Rational> coords) : basis(b), c(std::move(coords)) {}

  std::size_t size() const { return c.size(); }
  const Rational& operator[](std::size_t i) const { return c[i]; }
  Rational& operator[](std::size_t i) { return c[i]; }

  bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }

  void check_compatible(const Vec& o) const {
    if (basis != o.basis || c.size() != o.c.size())
      throw std::invalid_argument(std::string("vector basis mismatch: ") +
                                  basis_name(basis) + " vs " + basis_name(o.basis));
  }

  friend Vec operator+(const Vec& a, const Vec& b) {
    a.check_compatible(b);
    Vec r(a.basis, a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Vec operator-(const Vec& a, const Vec& b) {
    a.check_compatible(b);
    Vec r(a.basis, a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend Vec operator*(const Rational& s, const Vec& a) {
    Vec r(a.basis, a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = s * a.c[i];
    return r;
  }
  Vec operator-() const { return Rational(-1) * *this; }

  friend bool operator==(const Vec& a, const Vec& b) {
    return a.basis == b.basis && a.c == b.c;
  }
  friend bool operator<(const Vec& a, const Vec& b) {
    if (a.basis != b.basis) return a.basis < b.basis;
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    }
    return false;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += c[i].str();
    }
    return s + ")";
  }
};

using Matrix = std::vector<std::vector<Rational>>;

// Inverse via Gauss-Jordan; throws on a singular input.
Matrix invert(const Matrix& m);

// Solves m x = rhs for square nonsingular m.
std::vector<Rational> solve(const Matrix& m, const std::vector<Rational>& rhs);

// If `target` is a nonnegative rational combination r * v of `v` (r in Q_+,
// both nonzero and parallel), returns r; otherwise returns 0.
Rational positive_ratio(const Vec& target, const Vec& v);

}  // namespace kostant

#endif
