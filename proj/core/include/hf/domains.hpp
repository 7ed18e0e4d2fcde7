#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hf/diagram.hpp"
#include "hf/intmat.hpp"

namespace hf {

// A generator: one crossing per alpha curve, hitting each beta curve once.
struct Generator {
  std::vector<int> coords;  // alpha curve index -> crossing id
  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;

  bool contains(int crossing) const {
    for (int c : coords)
      if (c == crossing) return true;
    return false;
  }
};

// Integer 2-chain of faces.
struct Domain {
  ivec mult;  // indexed by face id

  friend bool operator==(const Domain&, const Domain&) = default;
  Domain operator+(const Domain& o) const;
  Domain operator-(const Domain& o) const;
  Domain operator-() const;
  Domain& operator+=(const Domain& o);
  bool is_zero() const;
};

struct DomainLattice {
  std::optional<Domain> particular;
  std::vector<Domain> kernel;  // canonical lattice basis of pi2(x,x)
};

// Measures carry exact quarter units.
std::string quarters_to_string(long long q4);

// The corner system matrix: one row per crossing, columns over faces, entries
// accumulated from the quadrant labels (+A +C -B -D).
IMat corner_matrix(const HeegaardDiagram& d);

DomainLattice solve_pi2(const HeegaardDiagram& d, const Generator& x, const Generator& y);

long long euler_measure4(const HeegaardDiagram& d, const Domain& D);
long long point_measure4(const HeegaardDiagram& d, const Domain& D, const Generator& x,
                         const Generator& y);
long long maslov4(const HeegaardDiagram& d, const Domain& D, const Generator& x,
                  const Generator& y);

struct BasepointMultiplicities {
  ivec per_basepoint;
  long long total = 0;
};

BasepointMultiplicities basepoint_multiplicities(const HeegaardDiagram& d, const Domain& D);

// Indicator domains of the Sigma-kind components, in component order; each is
// a boundary degeneration and the family spans the whole degeneration lattice.
DomainLattice boundary_degenerations(const HeegaardDiagram& d, CurveKind kind);

struct H2Data {
  std::vector<Domain> pi2prime;  // lattice basis
  std::vector<Domain> h2_basis;  // lifts of a basis of pi2prime / <Sigma>
  int rank = 0;
  Domain sigma;                  // the full surface class
  long long sigma_torsion = 1;   // index of <Sigma> in its saturation (1 normally)
};

H2Data pi2prime_and_h2(const HeegaardDiagram& d, const Generator& x);

struct H2Class {
  ivec coords;           // in h2_basis
  long long z_factor = 0;  // total basepoint multiplicity
};

H2Class h2_class(const HeegaardDiagram& d, const H2Data& h2, const Domain& D);

Domain full_surface(const HeegaardDiagram& d);

}  // namespace hf
