#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hf/complex.hpp"

namespace hf {

// Exhaustive {0,1} search over unpointed faces; the independent check against
// the pruned polygon search. Throws TooLarge past the face cap.
std::vector<Domain> brute_force_polygons(const HeegaardDiagram& d, const Generator& x,
                                         const Generator& y, int max_faces = 22);

// The sheeted surface built over a nonnegative empty domain: n_i copies of
// each elementary domain, glued along elementary arcs (alpha arcs bottom-
// aligned, beta arcs top-aligned).
struct TiledSurface {
  int n_sheets = 0;
  int chi = 0;
  int n_boundary = 0;
  int n_corners = 0;
};

TiledSurface build_surface(const HeegaardDiagram& d, const Domain& D, const Generator& x,
                           const Generator& y);

struct AdditivityReport {
  int trials = 0;
  uint64_t seed = 0;
  bool ok = true;
};

// Random composable pairs D1 in pi2(x,y), D2 in pi2(y,z) with kernel
// coefficients in [-3,3]; checks mu(D1+D2) = mu(D1)+mu(D2) exactly.
AdditivityReport maslov_additivity_sample(const HeegaardDiagram& d, int trials,
                                          uint64_t seed);

}  // namespace hf
