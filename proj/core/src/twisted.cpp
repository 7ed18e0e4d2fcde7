#include "hf/twisted.hpp"

#include <algorithm>

namespace hf {

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  for (const ivec& e : o.terms) r.add_term(e);
  return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  GroupRingElement r;
  for (const ivec& x : terms)
    for (const ivec& y : o.terms) {
      ivec s = x;
      for (size_t i = 0; i < s.size(); ++i) s[i] += y[i];
      r.add_term(s);
    }
  return r;
}

std::vector<Domain> reference_domains(const HeegaardDiagram& d,
                                      const std::vector<Generator>& cls_gens) {
  std::vector<Domain> out;
  const Generator& base = cls_gens.front();
  for (const Generator& y : cls_gens) out.push_back(reference_domain(d, base, y));
  return out;
}

TwistedComplex twisted_differential(const HeegaardDiagram& d,
                                    const std::vector<Generator>& gens,
                                    const std::vector<int>& cls) {
  TwistedComplex c;
  for (int gi : cls) c.gens.push_back(gens[gi]);
  c.base = 0;
  c.ref_domains = reference_domains(d, c.gens);
  c.h2 = pi2prime_and_h2(d, c.gens[c.base]);
  c.m = c.h2.rank;

  int n = static_cast<int>(c.gens.size());
  c.matrix.assign(n, std::vector<GroupRingElement>(n));
  for (int y = 0; y < n; ++y) {
    for (const auto& [z_gen, D] : empty_polygons(d, c.gens[y])) {
      auto it = std::lower_bound(c.gens.begin(), c.gens.end(), z_gen);
      if (it == c.gens.end() || *it != z_gen) continue;  // other class (cannot happen)
      int z = static_cast<int>(it - c.gens.begin());
      // D_y + D - D_z is a periodic-type class; its H2 coordinates twist the entry.
      Domain P = c.ref_domains[y] + D - c.ref_domains[z];
      c.matrix[y][z].add_term(h2_class(d, c.h2, P).coords);
    }
  }
  return c;
}

bool verify_twisted_d_squared(const TwistedComplex& c) {
  int n = static_cast<int>(c.gens.size());
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      GroupRingElement acc;
      for (int y = 0; y < n; ++y) acc = acc + c.matrix[x][y] * c.matrix[y][z];
      if (!acc.is_zero()) return false;
    }
  return true;
}

GF2Matrix augmentation(const TwistedComplex& c) {
  int n = static_cast<int>(c.gens.size());
  GF2Matrix m(n, n);
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z)
      if (c.matrix[y][z].terms.size() % 2 == 1) m.set(y, z, true);
  return m;
}

UnivariateHomology univariate_homology(const TwistedComplex& c) {
  UnivariateHomology out;
  int n = static_cast<int>(c.gens.size());
  if (c.m == 0) {
    // Group ring is GF(2) itself; homology is a plain vector space.
    GF2Matrix m = augmentation(c);
    out.finite = true;
    out.gf2_dim = n - 2 * gf2_rank(m);
    return out;
  }
  if (c.m != 1) throw NotUnivariate("H2 rank is " + std::to_string(c.m));

  // Clear negative exponents with a global unit t^{-lo}.
  long long lo = 0;
  for (const auto& row : c.matrix)
    for (const GroupRingElement& e : row)
      for (const ivec& t : e.terms) lo = std::min(lo, t[0]);
  PolyMat M(n, n);
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z)
      for (const ivec& t : c.matrix[y][z].terms)
        M.at(z, y).flip(static_cast<int>(t[0] - lo));  // columns act on generators

  PolyHermite h = poly_hermite(M);
  int rank = h.rank;
  int ker_rank = n - rank;
  // Kernel basis = U columns over the zero columns of H.
  PolyMat K(n, ker_rank);
  for (int j = 0; j < ker_rank; ++j)
    for (int i = 0; i < n; ++i) K.at(i, j) = h.U.at(i, rank + j);
  // Image generators (nonzero columns of H) in kernel coordinates.
  PolyMat coords(ker_rank, rank);
  for (int j = 0; j < rank; ++j) {
    std::vector<Poly2> b(n), x;
    for (int i = 0; i < n; ++i) b[i] = h.H.at(i, j);
    if (!poly_solve(K, b, &x))
      throw NotAChainComplex("image not contained in kernel over GF(2)[t]");
    for (int i = 0; i < ker_rank; ++i) coords.at(i, j) = x[i];
  }
  std::vector<Poly2> divisors = poly_smith_divisors(coords);
  out.free_rank = ker_rank - static_cast<int>(divisors.size());
  out.finite = out.free_rank == 0;
  for (const Poly2& dv : divisors) {
    Poly2 s = dv.strip_t();
    if (s.degree() <= 0) continue;  // Laurent unit
    out.divisors.push_back(s.to_string());
    out.gf2_dim += s.degree();
  }
  return out;
}

long long twisted_grading4(const HeegaardDiagram& d, const TwistedComplex& c, int y,
                           const ivec& a, int z, const ivec& b) {
  Domain D = -c.ref_domains[y] + c.ref_domains[z];
  for (int t = 0; t < c.m; ++t) {
    long long k = b[t] - a[t];
    for (int f = 0; f < d.n_faces(); ++f) D.mult[f] += k * c.h2.h2_basis[t].mult[f];
  }
  return maslov4(d, D, c.gens[y], c.gens[z]);
}

}  // namespace hf
