#include "hf/gf2poly.hpp"

namespace hf {

Poly2 Poly2::from_monomial(int e) {
  Poly2 p;
  p.b.assign(e / 64 + 1, 0);
  p.b[e / 64] = uint64_t(1) << (e % 64);
  return p;
}

void Poly2::trim() {
  while (!b.empty() && b.back() == 0) b.pop_back();
}

bool Poly2::is_zero() const {
  for (uint64_t w : b)
    if (w) return false;
  return true;
}

int Poly2::degree() const {
  for (int w = static_cast<int>(b.size()) - 1; w >= 0; --w)
    if (b[w]) {
      int bit = 63;
      while (!((b[w] >> bit) & 1)) --bit;
      return w * 64 + bit;
    }
  return -1;
}

bool Poly2::get(int i) const {
  size_t w = static_cast<size_t>(i) / 64;
  return w < b.size() && ((b[w] >> (i % 64)) & 1);
}

void Poly2::flip(int i) {
  size_t w = static_cast<size_t>(i) / 64;
  if (w >= b.size()) b.resize(w + 1, 0);
  b[w] ^= uint64_t(1) << (i % 64);
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r = *this;
  if (o.b.size() > r.b.size()) r.b.resize(o.b.size(), 0);
  for (size_t i = 0; i < o.b.size(); ++i) r.b[i] ^= o.b[i];
  r.trim();
  return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 r;
  int da = degree(), db = o.degree();
  if (da < 0 || db < 0) return r;
  r.b.assign((da + db) / 64 + 1, 0);
  for (int i = 0; i <= da; ++i) {
    if (!get(i)) continue;
    int shift = i % 64, word = i / 64;
    for (size_t w = 0; w < o.b.size(); ++w) {
      r.b[word + w] ^= o.b[w] << shift;
      if (shift && word + w + 1 < r.b.size()) r.b[word + w + 1] ^= o.b[w] >> (64 - shift);
    }
  }
  r.trim();
  return r;
}

bool operator==(const Poly2& a, const Poly2& b) {
  size_t n = std::max(a.b.size(), b.b.size());
  for (size_t i = 0; i < n; ++i) {
    uint64_t x = i < a.b.size() ? a.b[i] : 0;
    uint64_t y = i < b.b.size() ? b.b[i] : 0;
    if (x != y) return false;
  }
  return true;
}

std::pair<Poly2, Poly2> Poly2::divmod(const Poly2& num, const Poly2& den) {
  int dd = den.degree();
  Poly2 q, r = num;
  int dr = r.degree();
  while (dr >= dd) {
    int shift = dr - dd;
    q.flip(shift);
    for (int i = 0; i <= dd; ++i)
      if (den.get(i)) r.flip(i + shift);
    dr = r.degree();
  }
  q.trim();
  r.trim();
  return {q, r};
}

Poly2 Poly2::strip_t() const {
  if (is_zero()) return *this;
  int low = 0;
  while (!get(low)) ++low;
  Poly2 r;
  int d = degree();
  for (int i = low; i <= d; ++i)
    if (get(i)) r.flip(i - low);
  return r;
}

std::string Poly2::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  int d = degree();
  for (int i = 0; i <= d; ++i) {
    if (!get(i)) continue;
    if (!s.empty()) s += "+";
    if (i == 0)
      s += "1";
    else if (i == 1)
      s += "t";
    else
      s += "t^" + std::to_string(i);
  }
  return s;
}

static void pcol_addmul(PolyMat& m, int dst, int src, const Poly2& f) {
  if (f.is_zero()) return;
  for (int i = 0; i < m.rows; ++i) m.at(i, dst) = m.at(i, dst) + f * m.at(i, src);
}

static void pcol_swap(PolyMat& m, int a, int b) {
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

PolyHermite poly_hermite(const PolyMat& A) {
  PolyHermite h;
  h.H = A;
  h.U = PolyMat(A.cols, A.cols);
  for (int j = 0; j < A.cols; ++j) h.U.at(j, j) = Poly2::one();

  int col = 0;
  for (int row = 0; row < A.rows && col < A.cols; ++row) {
    for (;;) {
      int piv = -1;
      for (int j = col; j < A.cols; ++j)
        if (!h.H.at(row, j).is_zero() &&
            (piv < 0 || h.H.at(row, j).degree() < h.H.at(row, piv).degree()))
          piv = j;
      if (piv < 0) break;
      if (piv != col) {
        pcol_swap(h.H, col, piv);
        pcol_swap(h.U, col, piv);
      }
      bool clean = true;
      for (int j = col + 1; j < A.cols; ++j) {
        if (h.H.at(row, j).is_zero()) continue;
        auto [q, r] = Poly2::divmod(h.H.at(row, j), h.H.at(row, col));
        pcol_addmul(h.H, j, col, q);
        pcol_addmul(h.U, j, col, q);
        if (!h.H.at(row, j).is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (h.H.at(row, col).is_zero()) continue;
    for (int j = 0; j < col; ++j) {
      if (h.H.at(row, j).degree() < h.H.at(row, col).degree()) continue;
      auto [q, r] = Poly2::divmod(h.H.at(row, j), h.H.at(row, col));
      pcol_addmul(h.H, j, col, q);
      pcol_addmul(h.U, j, col, q);
    }
    h.pivot_row.push_back(row);
    ++col;
  }
  h.rank = col;
  return h;
}

bool poly_solve(const PolyMat& A, const std::vector<Poly2>& b, std::vector<Poly2>* x) {
  PolyHermite h = poly_hermite(A);
  std::vector<Poly2> y(A.cols), r = b;
  for (int j = 0; j < h.rank; ++j) {
    int row = h.pivot_row[j];
    auto [q, rem] = Poly2::divmod(r[row], h.H.at(row, j));
    if (!rem.is_zero()) return false;
    y[j] = q;
    for (int i = 0; i < A.rows; ++i) r[i] = r[i] + q * h.H.at(i, j);
  }
  for (int i = 0; i < A.rows; ++i)
    if (!r[i].is_zero()) return false;
  if (x) {
    x->assign(A.cols, Poly2::zero());
    for (int i = 0; i < A.cols; ++i)
      for (int j = 0; j < h.rank; ++j) (*x)[i] = (*x)[i] + h.U.at(i, j) * y[j];
  }
  return true;
}

std::vector<Poly2> poly_smith_divisors(PolyMat A) {
  std::vector<Poly2> out;
  int top = 0;
  while (true) {
    int bi = -1, bj = -1;
    for (int i = top; i < A.rows; ++i)
      for (int j = top; j < A.cols; ++j)
        if (!A.at(i, j).is_zero() &&
            (bi < 0 || A.at(i, j).degree() < A.at(bi, bj).degree())) {
          bi = i;
          bj = j;
        }
    if (bi < 0) break;
    if (bi != top)
      for (int j = 0; j < A.cols; ++j) std::swap(A.at(bi, j), A.at(top, j));
    if (bj != top) pcol_swap(A, bj, top);
    bool dirty = false;
    for (int j = top + 1; j < A.cols; ++j) {
      if (A.at(top, j).is_zero()) continue;
      auto [q, r] = Poly2::divmod(A.at(top, j), A.at(top, top));
      pcol_addmul(A, j, top, q);
      if (!A.at(top, j).is_zero()) dirty = true;
    }
    for (int i = top + 1; i < A.rows; ++i) {
      if (A.at(i, top).is_zero()) continue;
      auto [q, r] = Poly2::divmod(A.at(i, top), A.at(top, top));
      for (int j = 0; j < A.cols; ++j) A.at(i, j) = A.at(i, j) + q * A.at(top, j);
      if (!A.at(i, top).is_zero()) dirty = true;
    }
    if (dirty) continue;
    // pivot must divide the rest of the block
    bool fixed = true;
    for (int i = top + 1; i < A.rows && fixed; ++i)
      for (int j = top + 1; j < A.cols && fixed; ++j) {
        if (A.at(i, j).is_zero()) continue;
        auto [q, r] = Poly2::divmod(A.at(i, j), A.at(top, top));
        if (!r.is_zero()) {
          for (int jj = 0; jj < A.cols; ++jj) A.at(top, jj) = A.at(top, jj) + A.at(i, jj);
          fixed = false;
        }
      }
    if (!fixed) continue;
    out.push_back(A.at(top, top));
    ++top;
    if (top >= A.rows || top >= A.cols) break;
  }
  return out;
}

}  // namespace hf
