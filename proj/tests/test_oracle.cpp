#include <doctest.h>

#include <algorithm>

#include "hf/moves.hpp"
#include "hf/oracle.hpp"

using namespace hf;

namespace {

std::vector<Domain> sorted(std::vector<Domain> v) {
  std::sort(v.begin(), v.end(),
            [](const Domain& a, const Domain& b) { return a.mult < b.mult; });
  return v;
}

void check_oracle_agreement(const HeegaardDiagram& d) {
  std::vector<Generator> gens = enumerate_generators(d);
  for (const Generator& x : gens) {
    std::map<std::vector<int>, std::vector<Domain>> pruned;
    for (auto& [y, D] : empty_polygons(d, x)) pruned[y.coords].push_back(D);
    for (const Generator& y : gens) {
      std::vector<Domain> brute = brute_force_polygons(d, x, y);
      std::vector<Domain> fast = pruned.count(y.coords) ? pruned[y.coords] : std::vector<Domain>{};
      CHECK(sorted(brute) == sorted(fast));
    }
  }
}

}  // namespace

TEST_CASE("brute force agrees with the pruned search") {
  check_oracle_agreement(make_s3_sphere());
  check_oracle_agreement(make_s3_torus());
  check_oracle_agreement(make_s1s2());
  check_oracle_agreement(make_lens(5, 2));
  check_oracle_agreement(connected_sum(make_s3_torus(), make_s1s2(), 0, 0));
}

TEST_CASE("brute force respects the face cap") {
  HeegaardDiagram d = make_s3_sphere();
  std::vector<Generator> gens = enumerate_generators(d);
  CHECK_THROWS_AS(brute_force_polygons(d, gens[0], gens[1], 1), TooLarge);
}

TEST_CASE("tiled surfaces over differential witnesses are polygons") {
  for (HeegaardDiagram d : {make_s3_sphere(), make_s1s2(),
                            connected_sum(make_s3_torus(), make_s1s2(), 0, 0)}) {
    Differential df = differential(d);
    int seen = 0;
    for (int x = 0; x < df.n(); ++x)
      for (const auto& [y, ws] : df.witnesses[x])
        for (const Domain& D : ws) {
          TiledSurface ts = build_surface(d, D, df.gens[x], df.gens[y]);
          CHECK(ts.chi == 1);
          CHECK(ts.n_boundary == 1);
          CHECK((ts.n_corners == 2 || ts.n_corners == 4));
          ++seen;
        }
    CHECK(seen > 0);
  }
}

TEST_CASE("surface of a stabilized witness") {
  HeegaardDiagram d = apply_stab_g(make_s3_sphere(), make_s3_sphere().basepoint_face[0]);
  Differential df = differential(d);
  for (int x = 0; x < df.n(); ++x)
    for (const auto& [y, ws] : df.witnesses[x])
      for (const Domain& D : ws) {
        TiledSurface ts = build_surface(d, D, df.gens[x], df.gens[y]);
        CHECK(ts.chi == 1);
        CHECK(ts.n_boundary == 1);
      }
}

TEST_CASE("maslov additivity sampling") {
  for (HeegaardDiagram d : {make_s3_sphere(), make_lens(5, 2), make_s1s2()}) {
    AdditivityReport rep = maslov_additivity_sample(d, 200, 5);
    CHECK(rep.ok);
    CHECK(rep.trials == 200);
  }
}
