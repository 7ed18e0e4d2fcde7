#pragma once

#include <cstdint>
#include <vector>

namespace hf {

struct GF2Matrix {
  int rows = 0, cols = 0, words = 0;
  std::vector<uint64_t> bits;

  GF2Matrix() = default;
  GF2Matrix(int r, int c)
      : rows(r), cols(c), words((c + 63) / 64), bits(static_cast<size_t>(r) * words, 0) {}

  bool get(int i, int j) const {
    return (bits[static_cast<size_t>(i) * words + j / 64] >> (j % 64)) & 1;
  }
  void set(int i, int j, bool v) {
    uint64_t& w = bits[static_cast<size_t>(i) * words + j / 64];
    uint64_t m = uint64_t(1) << (j % 64);
    w = v ? (w | m) : (w & ~m);
  }
  void flip(int i, int j) {
    bits[static_cast<size_t>(i) * words + j / 64] ^= uint64_t(1) << (j % 64);
  }
  void xor_rows(int dst, int src) {
    for (int w = 0; w < words; ++w)
      bits[static_cast<size_t>(dst) * words + w] ^= bits[static_cast<size_t>(src) * words + w];
  }
  bool row_empty(int i) const {
    for (int w = 0; w < words; ++w)
      if (bits[static_cast<size_t>(i) * words + w]) return false;
    return true;
  }
};

int gf2_rank(GF2Matrix m);

GF2Matrix gf2_multiply(const GF2Matrix& a, const GF2Matrix& b);

}  // namespace hf
