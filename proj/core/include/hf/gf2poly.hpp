#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hf {

// Polynomials over GF(2), bit i = coefficient of t^i.
struct Poly2 {
  std::vector<uint64_t> b;

  static Poly2 zero() { return {}; }
  static Poly2 one() { return from_monomial(0); }
  static Poly2 from_monomial(int e);

  bool is_zero() const;
  int degree() const;  // -1 for zero
  bool get(int i) const;
  void flip(int i);
  void trim();

  Poly2 operator+(const Poly2& o) const;
  Poly2 operator*(const Poly2& o) const;
  friend bool operator==(const Poly2& a, const Poly2& b);

  // quotient and remainder; divisor must be nonzero
  static std::pair<Poly2, Poly2> divmod(const Poly2& num, const Poly2& den);

  // strips the largest power of t dividing the polynomial (Laurent unit)
  Poly2 strip_t() const;

  std::string to_string() const;  // e.g. "1+t^2"
};

// Matrix over GF(2)[t] with column-echelon reduction, integer-HNF style.
struct PolyMat {
  int rows = 0, cols = 0;
  std::vector<Poly2> a;

  PolyMat() = default;
  PolyMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Poly2& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Poly2& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

struct PolyHermite {
  PolyMat H, U;  // A * U = H, U unimodular over GF(2)[t]
  int rank = 0;
  std::vector<int> pivot_row;
};

PolyHermite poly_hermite(const PolyMat& A);

// Solution of A x = b over GF(2)[t], if one exists.
bool poly_solve(const PolyMat& A, const std::vector<Poly2>& b, std::vector<Poly2>* x);

// Smith normal form divisors (nonzero diagonal entries, unnormalized).
std::vector<Poly2> poly_smith_divisors(PolyMat A);

}  // namespace hf
