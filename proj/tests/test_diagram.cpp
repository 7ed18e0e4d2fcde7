#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hf/diagram.hpp"

using namespace hf;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(HF_TEST_DATA) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kFixtures[] = {"s3_sphere.json", "s3_torus.json", "s1s2.json",
                           "lens_3_1.json",  "lens_5_1.json", "lens_5_2.json",
                           "lens_7_1.json",  "t_sum_s1s2.json", "lens31_sum.json",
                           "grid2.json"};

}  // namespace

TEST_CASE("builtin fixtures validate and are nice") {
  for (HeegaardDiagram d : {make_s3_sphere(), make_s3_torus(), make_s1s2(),
                            make_lens(3, 1), make_lens(5, 2)}) {
    ValidationReport vr = validate(d);
    CHECK(vr.valid);
    CHECK(vr.violations.empty());
    CHECK(is_nice(d).is_nice);
  }
}

TEST_CASE("fixture shapes") {
  HeegaardDiagram s = make_s3_sphere();
  CHECK(s.g == 0);
  CHECK(s.k() == 1);
  CHECK(s.b() == 2);
  CHECK(s.n_faces() == 4);

  HeegaardDiagram t = make_s3_torus();
  CHECK(t.g == 1);
  CHECK(t.k() == 1);
  CHECK(t.b() == 1);
  CHECK(t.n_faces() == 1);

  HeegaardDiagram u = make_s1s2();
  CHECK(u.g == 1);
  CHECK(u.b() == 1);
  CHECK(!u.tubes.empty());

  HeegaardDiagram l = make_lens(5, 2);
  CHECK(l.g == 1);
  CHECK(l.map.n_crossings == 5);
}

TEST_CASE("lens requires coprime parameters") {
  CHECK_THROWS_AS(make_lens(4, 2), NotCoprime);
  CHECK_NOTHROW(make_lens(7, 3));
}

TEST_CASE("connected sum") {
  HeegaardDiagram d = connected_sum(make_s3_torus(), make_s1s2(), 0, 0);
  CHECK(d.g == 2);
  CHECK(d.k() == 2);
  CHECK(d.b() == 1);
  CHECK(d.tubes.size() == 2);  // the sum tube plus the s1s2 annulus
  CHECK(validate(d).valid);
  CHECK(is_nice(d).is_nice);
}

TEST_CASE("serialize parse roundtrip") {
  for (const char* name : kFixtures) {
    HeegaardDiagram d = parse(slurp(name));
    CHECK(validate(d).valid);
    HeegaardDiagram back = parse(serialize(d));
    CHECK(same_diagram(d, back));
    CHECK(serialize(back) == serialize(d));
  }
}

TEST_CASE("canonicalize is idempotent") {
  HeegaardDiagram d = make_lens(5, 2);
  HeegaardDiagram c1 = canonicalize(d);
  HeegaardDiagram c2 = canonicalize(c1);
  CHECK(serialize(c1) == serialize(c2));
  CHECK(same_diagram(d, c1));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse("not json"), SchemaError);
  CHECK_THROWS_AS(parse("{}"), SchemaError);
  CHECK_THROWS_AS(parse(R"({"alpha": [[0]], "beta": [[0]]})"), SchemaError);
}

TEST_CASE("validate flags missing basepoints") {
  HeegaardDiagram s = make_s3_sphere();
  HeegaardDiagram broken =
      make_diagram(s.name, s.map, {s.basepoints[0]}, s.tubes);
  ValidationReport vr = validate(broken);
  CHECK(!vr.valid);
  CHECK(!vr.violations.empty());
}

TEST_CASE("basepoints on both sides of every curve") {
  for (HeegaardDiagram d : {make_s3_sphere(), make_s1s2(), make_lens(5, 1)}) {
    for (const CurveSides& cs : basepoints_both_sides(d)) {
      CHECK(!cs.left_pointed.empty());
      CHECK(!cs.right_pointed.empty());
    }
  }
}
