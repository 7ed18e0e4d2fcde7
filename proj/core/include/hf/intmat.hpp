#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace hf {

using ivec = std::vector<long long>;

struct IMat {
  int rows = 0, cols = 0;
  std::vector<long long> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  long long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static IMat from_columns(const std::vector<ivec>& cols, int rows);
  ivec column(int j) const;
};

// Column-style Hermite form: A * U = H with U unimodular; pivot columns first
// (one per pivot row, positive pivot, entries left of a pivot reduced mod it),
// zero columns last. rank = number of pivot columns.
struct Hermite {
  IMat H, U;
  int rank = 0;
  std::vector<int> pivot_row;  // per pivot column
};

Hermite hermite(const IMat& A);

// An integer solution of A x = b, if one exists.
std::optional<ivec> solve_integer(const IMat& A, const ivec& b);

// Lattice basis of the integer kernel of A (columns of U over zero columns of H).
std::vector<ivec> kernel_basis(const IMat& A);

// Canonical basis of the lattice spanned by the given vectors: the nonzero
// columns of the Hermite form of their column matrix.
std::vector<ivec> lattice_canonical(const std::vector<ivec>& gens, int dim);

// Coordinates of v in the lattice spanned by basis (exact), if v lies in it.
std::optional<ivec> lattice_coordinates(const std::vector<ivec>& basis, const ivec& v);

}  // namespace hf
