#include "hf/domains.hpp"

#include <algorithm>
#include <numeric>

namespace hf {

Domain Domain::operator+(const Domain& o) const {
  Domain r = *this;
  r += o;
  return r;
}

Domain& Domain::operator+=(const Domain& o) {
  for (size_t i = 0; i < mult.size(); ++i) mult[i] += o.mult[i];
  return *this;
}

Domain Domain::operator-(const Domain& o) const {
  Domain r = *this;
  for (size_t i = 0; i < mult.size(); ++i) r.mult[i] -= o.mult[i];
  return r;
}

Domain Domain::operator-() const {
  Domain r = *this;
  for (long long& v : r.mult) v = -v;
  return r;
}

bool Domain::is_zero() const {
  return std::all_of(mult.begin(), mult.end(), [](long long v) { return v == 0; });
}

std::string quarters_to_string(long long q4) {
  long long g = std::gcd(std::abs(q4), 4LL);
  if (q4 == 0) g = 4;
  long long num = q4 / g, den = 4 / g;
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

IMat corner_matrix(const HeegaardDiagram& d) {
  IMat m(d.map.n_crossings, d.n_faces());
  for (int c = 0; c < d.map.n_crossings; ++c) {
    m.at(c, d.faces.face_of_corner(d.map, {c, Quadrant::A})) += 1;
    m.at(c, d.faces.face_of_corner(d.map, {c, Quadrant::C})) += 1;
    m.at(c, d.faces.face_of_corner(d.map, {c, Quadrant::B})) -= 1;
    m.at(c, d.faces.face_of_corner(d.map, {c, Quadrant::D})) -= 1;
  }
  return m;
}

DomainLattice solve_pi2(const HeegaardDiagram& d, const Generator& x, const Generator& y) {
  IMat A = corner_matrix(d);
  ivec rhs(d.map.n_crossings, 0);
  for (int c : y.coords) rhs[c] += 1;
  for (int c : x.coords) rhs[c] -= 1;
  DomainLattice out;
  if (auto p = solve_integer(A, rhs)) out.particular = Domain{*p};
  for (ivec& k : kernel_basis(A)) out.kernel.push_back(Domain{std::move(k)});
  return out;
}

long long euler_measure4(const HeegaardDiagram& d, const Domain& D) {
  long long e4 = 0;
  for (const Face& f : d.faces.faces)
    e4 += D.mult[f.id] * (4LL * f.chi - f.n_corners());
  return e4;
}

static long long quadrant_sum(const HeegaardDiagram& d, const Domain& D, int crossing) {
  long long s = 0;
  for (Quadrant q : {Quadrant::A, Quadrant::B, Quadrant::C, Quadrant::D})
    s += D.mult[d.faces.face_of_corner(d.map, {crossing, q})];
  return s;
}

long long point_measure4(const HeegaardDiagram& d, const Domain& D, const Generator& x,
                         const Generator& y) {
  long long p4 = 0;
  for (int c : x.coords) p4 += quadrant_sum(d, D, c);
  for (int c : y.coords) p4 += quadrant_sum(d, D, c);
  return p4;
}

long long maslov4(const HeegaardDiagram& d, const Domain& D, const Generator& x,
                  const Generator& y) {
  return euler_measure4(d, D) + point_measure4(d, D, x, y);
}

BasepointMultiplicities basepoint_multiplicities(const HeegaardDiagram& d,
                                                 const Domain& D) {
  BasepointMultiplicities r;
  for (int f : d.basepoint_face) {
    r.per_basepoint.push_back(D.mult[f]);
    r.total += D.mult[f];
  }
  return r;
}

DomainLattice boundary_degenerations(const HeegaardDiagram& d, CurveKind kind) {
  int ncomp = 0;
  std::vector<int> comp = curve_complement_components(d.map, d.faces, kind, &ncomp);
  DomainLattice out;
  for (int c = 0; c < ncomp; ++c) {
    Domain ind{ivec(d.n_faces(), 0)};
    for (int f = 0; f < d.n_faces(); ++f)
      if (comp[f] == c) ind.mult[f] = 1;
    out.kernel.push_back(std::move(ind));
  }
  return out;
}

Domain full_surface(const HeegaardDiagram& d) {
  return Domain{ivec(d.n_faces(), 1)};
}

// Row-reduces s to g*e_0 by unimodular row operations; fills Winv with the
// inverse transform (columns track the basis change).
static void euclid_column(ivec s, std::vector<ivec>& winv_cols, long long* g_out) {
  int r = static_cast<int>(s.size());
  winv_cols.assign(r, ivec(r, 0));
  for (int i = 0; i < r; ++i) winv_cols[i][i] = 1;
  auto nonzeros = [&] {
    int cnt = 0;
    for (long long v : s) cnt += v != 0;
    return cnt;
  };
  while (nonzeros() > 1) {
    int i = -1;
    for (int j = 0; j < r; ++j)
      if (s[j] != 0 && (i < 0 || std::llabs(s[j]) < std::llabs(s[i]))) i = j;
    for (int j = 0; j < r; ++j) {
      if (j == i || s[j] == 0) continue;
      long long q = s[j] / s[i];
      s[j] -= q * s[i];
      // row_j -= q row_i on V means col_i += q col_j on V^{-1}
      for (int t = 0; t < r; ++t) winv_cols[i][t] += q * winv_cols[j][t];
    }
  }
  int piv = 0;
  while (piv < r && s[piv] == 0) ++piv;
  if (piv == r) {
    *g_out = 0;
    return;
  }
  if (piv != 0) {
    std::swap(s[0], s[piv]);
    std::swap(winv_cols[0], winv_cols[piv]);
  }
  if (s[0] < 0) {
    s[0] = -s[0];
    for (long long& v : winv_cols[0]) v = -v;
  }
  *g_out = s[0];
}

H2Data pi2prime_and_h2(const HeegaardDiagram& d, const Generator&) {
  H2Data out;
  out.sigma = full_surface(d);

  IMat corner = corner_matrix(d);
  int extra = std::max(0, d.b() - 1);
  IMat A(corner.rows + extra, corner.cols);
  for (int i = 0; i < corner.rows; ++i)
    for (int j = 0; j < corner.cols; ++j) A.at(i, j) = corner.at(i, j);
  for (int i = 1; i < d.b(); ++i) {
    A.at(corner.rows + i - 1, d.basepoint_face[0]) += 1;
    A.at(corner.rows + i - 1, d.basepoint_face[i]) -= 1;
  }
  std::vector<ivec> basis = kernel_basis(A);
  for (const ivec& v : basis) out.pi2prime.push_back(Domain{v});

  int r = static_cast<int>(basis.size());
  if (r == 0) {
    out.rank = 0;
    return out;
  }
  auto sigma_coords = lattice_coordinates(basis, out.sigma.mult);
  if (!sigma_coords)
    throw NotInLattice("full surface class not in pi2'");
  std::vector<ivec> winv_cols;
  long long g = 0;
  euclid_column(*sigma_coords, winv_cols, &g);
  out.sigma_torsion = g == 0 ? 1 : g;
  int first = g == 0 ? 0 : 1;  // Sigma = 0 would leave the whole lattice
  for (int j = first; j < r; ++j) {
    Domain v{ivec(d.n_faces(), 0)};
    for (int t = 0; t < r; ++t)
      if (winv_cols[j][t] != 0)
        for (int f = 0; f < d.n_faces(); ++f) v.mult[f] += winv_cols[j][t] * basis[t][f];
    out.h2_basis.push_back(std::move(v));
  }
  out.rank = static_cast<int>(out.h2_basis.size());
  return out;
}

H2Class h2_class(const HeegaardDiagram& d, const H2Data& h2, const Domain& D) {
  std::vector<ivec> cols;
  for (const Domain& v : h2.h2_basis) cols.push_back(v.mult);
  cols.push_back(h2.sigma.mult);
  auto sol = lattice_coordinates(cols, D.mult);
  if (!sol) throw NotInLattice("domain not in pi2' modulo the chosen basis");
  H2Class out;
  out.coords.assign(sol->begin(), sol->end() - 1);
  out.z_factor = basepoint_multiplicities(d, D).total;
  return out;
}

}  // namespace hf
