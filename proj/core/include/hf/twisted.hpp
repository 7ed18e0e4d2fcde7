#pragma once

#include <set>
#include <string>
#include <vector>

#include "hf/complex.hpp"
#include "hf/gf2poly.hpp"

namespace hf {

// Element of GF(2)[H2], exponent vectors in Z^m with GF(2) coefficients.
struct GroupRingElement {
  std::set<ivec> terms;

  void add_term(const ivec& e) {
    auto it = terms.find(e);
    if (it != terms.end())
      terms.erase(it);
    else
      terms.insert(e);
  }
  bool is_zero() const { return terms.empty(); }
  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;
};

struct TwistedComplex {
  std::vector<Generator> gens;    // class members, canonical order
  int base = 0;                   // index into gens (lexicographically smallest)
  std::vector<Domain> ref_domains;  // per member, n_w = 0
  H2Data h2;
  int m = 0;  // exponent rank
  std::vector<std::vector<GroupRingElement>> matrix;  // matrix[y][z]
};

// Reference domains D_y in pi2(base, y) with all basepoint multiplicities zero.
std::vector<Domain> reference_domains(const HeegaardDiagram& d,
                                      const std::vector<Generator>& cls_gens);

TwistedComplex twisted_differential(const HeegaardDiagram& d,
                                    const std::vector<Generator>& gens,
                                    const std::vector<int>& cls);

bool verify_twisted_d_squared(const TwistedComplex& c);

// Specializing every variable to 1 recovers the untwisted GF(2) matrix.
GF2Matrix augmentation(const TwistedComplex& c);

struct UnivariateHomology {
  int free_rank = 0;
  std::vector<std::string> divisors;  // nonunit elementary divisors, t-stripped
  bool finite = false;
  long long gf2_dim = 0;  // meaningful when finite
};

UnivariateHomology univariate_homology(const TwistedComplex& c);

// gr([y,a]) - gr([z,b]) in quarter units (delta as in relative_grading).
long long twisted_grading4(const HeegaardDiagram& d, const TwistedComplex& c, int y,
                           const ivec& a, int z, const ivec& b);

}  // namespace hf
