#include "hf/intmat.hpp"

#include <cstdlib>
#include <numeric>

namespace hf {

IMat IMat::from_columns(const std::vector<ivec>& cols, int rows) {
  IMat m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  return m;
}

ivec IMat::column(int j) const {
  ivec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

static void col_axpy(IMat& m, int dst, int src, long long f) {
  if (f == 0) return;
  for (int i = 0; i < m.rows; ++i) m.at(i, dst) += f * m.at(i, src);
}

static void col_swap(IMat& m, int a, int b) {
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

static void col_neg(IMat& m, int j) {
  for (int i = 0; i < m.rows; ++i) m.at(i, j) = -m.at(i, j);
}

Hermite hermite(const IMat& A) {
  Hermite h;
  h.H = A;
  h.U = IMat(A.cols, A.cols);
  for (int j = 0; j < A.cols; ++j) h.U.at(j, j) = 1;

  int col = 0;
  for (int row = 0; row < A.rows && col < A.cols; ++row) {
    // Clear the row to a single gcd entry at `col` via Euclidean column ops.
    for (;;) {
      int piv = -1;
      for (int j = col; j < A.cols; ++j)
        if (h.H.at(row, j) != 0 &&
            (piv < 0 || std::llabs(h.H.at(row, j)) < std::llabs(h.H.at(row, piv))))
          piv = j;
      if (piv < 0) break;
      if (piv != col) {
        col_swap(h.H, col, piv);
        col_swap(h.U, col, piv);
      }
      bool clean = true;
      for (int j = col + 1; j < A.cols; ++j) {
        long long q = h.H.at(row, j) / h.H.at(row, col);
        col_axpy(h.H, j, col, -q);
        col_axpy(h.U, j, col, -q);
        if (h.H.at(row, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.H.at(row, col) == 0) continue;
    if (h.H.at(row, col) < 0) {
      col_neg(h.H, col);
      col_neg(h.U, col);
    }
    for (int j = 0; j < col; ++j) {
      long long q = h.H.at(row, j) / h.H.at(row, col);
      if (h.H.at(row, j) % h.H.at(row, col) < 0) q -= 1;
      col_axpy(h.H, j, col, -q);
      col_axpy(h.U, j, col, -q);
    }
    h.pivot_row.push_back(row);
    ++col;
  }
  h.rank = col;
  return h;
}

std::optional<ivec> solve_integer(const IMat& A, const ivec& b) {
  Hermite h = hermite(A);
  ivec y(A.cols, 0), r = b;
  for (int j = 0; j < h.rank; ++j) {
    int row = h.pivot_row[j];
    long long p = h.H.at(row, j);
    if (r[row] % p != 0) return std::nullopt;
    y[j] = r[row] / p;
    for (int i = 0; i < A.rows; ++i) r[i] -= y[j] * h.H.at(i, j);
  }
  for (int i = 0; i < A.rows; ++i)
    if (r[i] != 0) return std::nullopt;
  ivec x(A.cols, 0);
  for (int i = 0; i < A.cols; ++i)
    for (int j = 0; j < h.rank; ++j) x[i] += h.U.at(i, j) * y[j];
  return x;
}

std::vector<ivec> kernel_basis(const IMat& A) {
  Hermite h = hermite(A);
  std::vector<ivec> out;
  for (int j = h.rank; j < A.cols; ++j) out.push_back(h.U.column(j));
  return lattice_canonical(out, A.cols);
}

std::vector<ivec> lattice_canonical(const std::vector<ivec>& gens, int dim) {
  if (gens.empty()) return {};
  Hermite h = hermite(IMat::from_columns(gens, dim));
  std::vector<ivec> out;
  for (int j = 0; j < h.rank; ++j) out.push_back(h.H.column(j));
  return out;
}

std::optional<ivec> lattice_coordinates(const std::vector<ivec>& basis, const ivec& v) {
  if (basis.empty()) {
    for (long long x : v)
      if (x != 0) return std::nullopt;
    return ivec{};
  }
  IMat A = IMat::from_columns(basis, static_cast<int>(v.size()));
  return solve_integer(A, v);
}

}  // namespace hf
