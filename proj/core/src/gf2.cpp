#include "hf/gf2.hpp"

namespace hf {

int gf2_rank(GF2Matrix m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (m.get(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int w = 0; w < m.words; ++w)
        std::swap(m.bits[static_cast<size_t>(piv) * m.words + w],
                  m.bits[static_cast<size_t>(rank) * m.words + w]);
    for (int i = rank + 1; i < m.rows; ++i)
      if (m.get(i, col)) m.xor_rows(i, rank);
    ++rank;
  }
  return rank;
}

GF2Matrix gf2_multiply(const GF2Matrix& a, const GF2Matrix& b) {
  GF2Matrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k)
      if (a.get(i, k))
        for (int w = 0; w < b.words; ++w)
          out.bits[static_cast<size_t>(i) * out.words + w] ^=
              b.bits[static_cast<size_t>(k) * b.words + w];
  return out;
}

}  // namespace hf
