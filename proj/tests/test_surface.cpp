#include <doctest.h>

#include "hf/surface.hpp"

using namespace hf;

namespace {

CombinatorialMap grid2_map() {
  return build_map({{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {1, 1, 1, 1}, true);
}

}  // namespace

TEST_CASE("dart encoding") {
  CHECK(dart_alpha_out(3) == 12);
  CHECK(dart_alpha_in(3) == 13);
  CHECK(dart_beta_out(3) == 14);
  CHECK(dart_beta_in(3) == 15);
  CHECK(dart_crossing(14) == 3);
  CHECK(dart_kind(12) == CurveKind::Alpha);
  CHECK(dart_kind(15) == CurveKind::Beta);
  CHECK(dart_outgoing(12));
  CHECK(!dart_outgoing(13));
}

TEST_CASE("build_map single crossing torus") {
  CombinatorialMap m = build_map({{0}}, {{0}}, {1}, true);
  CHECK(m.n_crossings == 1);
  CHECK(m.n_darts() == 4);
  // sigma is a 4-cycle at the crossing
  int d = dart_alpha_out(0);
  CHECK(m.sigma(d) == dart_beta_out(0));
  CHECK(m.sigma(m.sigma(m.sigma(m.sigma(d)))) == d);
  CHECK(m.sigma_inv(m.sigma(d)) == d);
  // iota pairs out with in along the curve
  CHECK(m.iota(dart_alpha_out(0)) == dart_alpha_in(0));
  CHECK(m.iota(m.iota(dart_beta_out(0))) == dart_beta_out(0));
  CHECK(genus(m) == 1);
}

TEST_CASE("negative crossing rotation") {
  CombinatorialMap m = build_map({{0}}, {{0}}, {-1}, true);
  CHECK(m.sigma(dart_alpha_out(0)) == dart_beta_in(0));
  CHECK(genus(m) == 1);
}

TEST_CASE("build_map rejects bad curve systems") {
  CHECK_THROWS_AS(build_map({{0, 0}}, {{0}}, {1, 1}, true), DuplicateCrossing);
  CHECK_THROWS_AS(build_map({{0}}, {{0, 1}}, {1}, true), MissingCrossing);
  CHECK_THROWS_AS(build_map({{0}, {1}}, {{0}, {1}}, {1, 1}, true), DisconnectedMap);
  CHECK_NOTHROW(build_map({{0}, {1}}, {{0}, {1}}, {1, 1}, false));
}

TEST_CASE("grid2 faces are four rectangles") {
  CombinatorialMap m = grid2_map();
  CHECK(genus(m) == 1);
  FaceSet fs = trace_faces(m);
  REQUIRE(fs.faces.size() == 4);
  for (const Face& f : fs.faces) {
    CHECK(f.is_rectangle());
    CHECK(f.chi == 1);
    CHECK(f.n_orbits() == 1);
    CHECK(f.boundary_darts.size() == 4);
  }
  // every dart lies on exactly one face boundary
  std::vector<int> seen(m.n_darts(), 0);
  for (const Face& f : fs.faces)
    for (int d : f.boundary_darts) {
      CHECK(fs.face_of[d] == f.id);
      ++seen[d];
    }
  for (int c : seen) CHECK(c == 1);
}

TEST_CASE("quadrant dart roundtrip") {
  CombinatorialMap m = grid2_map();
  for (int d = 0; d < m.n_darts(); ++d) {
    Corner c{dart_crossing(d), quadrant_of_dart(m, d)};
    CHECK(m.quadrant_dart(c) == d);
  }
  for (int c = 0; c < m.n_crossings; ++c)
    for (Quadrant q : {Quadrant::A, Quadrant::B, Quadrant::C, Quadrant::D}) {
      int d = m.quadrant_dart({c, q});
      CHECK(quadrant_of_dart(m, d) == q);
      CHECK(dart_crossing(d) == c);
    }
}

TEST_CASE("quadrant names") {
  CHECK(quadrant_from_name("A") == Quadrant::A);
  CHECK(quadrant_from_name(quadrant_name(Quadrant::D)) == Quadrant::D);
}

TEST_CASE("curve complement components of grid2") {
  CombinatorialMap m = grid2_map();
  FaceSet fs = trace_faces(m);
  int na = 0, nb = 0;
  curve_complement_components(m, fs, CurveKind::Alpha, &na);
  curve_complement_components(m, fs, CurveKind::Beta, &nb);
  // two parallel curves cut the torus into two annuli
  CHECK(na == 2);
  CHECK(nb == 2);
}

TEST_CASE("crossing components") {
  CombinatorialMap m = build_map({{0}, {1}}, {{0}, {1}}, {1, 1}, false);
  int n = 0;
  std::vector<int> comp = m.crossing_components(&n);
  CHECK(n == 2);
  CHECK(comp[0] != comp[1]);
}
