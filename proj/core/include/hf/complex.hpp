#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hf/domains.hpp"
#include "hf/gf2.hpp"

namespace hf {

std::vector<Generator> enumerate_generators(const HeegaardDiagram& d);

// All empty polygons out of x: D >= 0, n_w(D) = 0, mu(D) = 1.
std::vector<std::pair<Generator, Domain>> empty_polygons(const HeegaardDiagram& d,
                                                         const Generator& x);

struct Differential {
  std::vector<Generator> gens;  // canonical order
  // witnesses[x][y] = all empty polygons from gens[x] to gens[y];
  // the GF(2) entry is their count mod 2.
  std::vector<std::map<int, std::vector<Domain>>> witnesses;

  int n() const { return static_cast<int>(gens.size()); }
  bool entry(int x, int y) const;
  GF2Matrix matrix() const;
};

// threads = 0 means HF_THREADS or 1; output independent of the thread count.
Differential differential(const HeegaardDiagram& d, int threads = 0);

int default_threads();

struct DSquaredReport {
  bool ok = true;
  int x = -1, z = -1;  // first failing pair
};

DSquaredReport verify_d_squared(const Differential& df);

struct HomologyResult {
  int total_dim = 0;
  std::vector<std::vector<int>> classes;  // generator indices per pi2-class
  std::vector<int> class_dim;
};

HomologyResult homology(const HeegaardDiagram& d, const Differential& df);

// Pi2-equivalence classes of generators (nonempty pi2(x,y)).
std::vector<std::vector<int>> pi2_classes(const HeegaardDiagram& d,
                                          const std::vector<Generator>& gens);

struct GradingResult {
  long long delta4 = 0;         // grading modulus, quarter units (0 = genuine Z)
  std::vector<long long> gr4;   // per class member, min-normalized, quarter units
};

GradingResult relative_grading(const HeegaardDiagram& d, const std::vector<Generator>& gens,
                               const std::vector<int>& cls);

// A reference domain in pi2(base, y) with all basepoint multiplicities zero.
Domain reference_domain(const HeegaardDiagram& d, const Generator& base, const Generator& y);

struct StableClass {
  long long dim = 0;
  int b = 1;
};

StableClass stable_class(const HeegaardDiagram& d, const Differential& df);
bool stable_equal(const StableClass& a, const StableClass& b);

std::string export_matrix(const Differential& df);

}  // namespace hf
