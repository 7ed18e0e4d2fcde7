#include <doctest.h>

#include "hf/twisted.hpp"

using namespace hf;

namespace {

TwistedComplex twisted_of(const HeegaardDiagram& d, int cls_index = 0) {
  std::vector<Generator> gens = enumerate_generators(d);
  std::vector<std::vector<int>> cls = pi2_classes(d, gens);
  return twisted_differential(d, gens, cls[cls_index]);
}

}  // namespace

TEST_CASE("group ring arithmetic") {
  GroupRingElement one;
  one.add_term({0});
  GroupRingElement t;
  t.add_term({1});
  GroupRingElement s = one + t;
  CHECK(s.terms.size() == 2);
  CHECK((s + s).is_zero());
  GroupRingElement sq = s * s;  // (1+t)^2 = 1 + t^2 over GF(2)
  CHECK(sq.terms.size() == 2);
  CHECK(sq.terms.count({0}) == 1);
  CHECK(sq.terms.count({2}) == 1);
}

TEST_CASE("sphere twisted differential is 1 + t") {
  HeegaardDiagram d = make_s3_sphere();
  TwistedComplex c = twisted_of(d);
  REQUIRE(c.gens.size() == 2);
  CHECK(c.m == 1);
  int x = -1, y = -1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!c.matrix[i][j].is_zero()) {
        x = i;
        y = j;
      }
  REQUIRE(x >= 0);
  CHECK(c.matrix[x][y].terms.size() == 2);  // 1 + t
  CHECK(verify_twisted_d_squared(c));
  UnivariateHomology uh = univariate_homology(c);
  CHECK(uh.finite);
  CHECK(uh.free_rank == 0);
  CHECK(uh.gf2_dim == 1);
  REQUIRE(uh.divisors.size() == 1);
  CHECK(uh.divisors[0] == "1+t");
}

TEST_CASE("torus twisted homology has dimension 1") {
  TwistedComplex c = twisted_of(make_s3_torus());
  CHECK(c.m == 0);
  CHECK(verify_twisted_d_squared(c));
  UnivariateHomology uh = univariate_homology(c);
  CHECK(uh.finite);
  CHECK(uh.gf2_dim == 1);
}

TEST_CASE("s1s2 twisted homology is torsion") {
  TwistedComplex c = twisted_of(make_s1s2());
  CHECK(verify_twisted_d_squared(c));
  UnivariateHomology uh = univariate_homology(c);
  CHECK(uh.finite);
  CHECK(uh.gf2_dim == 1);
  REQUIRE(uh.divisors.size() == 1);
  CHECK(uh.divisors[0] == "1+t");
}

TEST_CASE("augmentation recovers the untwisted matrix") {
  for (HeegaardDiagram d : {make_s3_sphere(), make_s3_torus(), make_s1s2(),
                            make_lens(5, 2),
                            connected_sum(make_s3_torus(), make_s1s2(), 0, 0)}) {
    Differential df = differential(d);
    std::vector<std::vector<int>> cls = pi2_classes(d, df.gens);
    for (const std::vector<int>& members : cls) {
      TwistedComplex c = twisted_differential(d, df.gens, members);
      GF2Matrix aug = augmentation(c);
      for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = 0; j < members.size(); ++j)
          CHECK(aug.get(static_cast<int>(i), static_cast<int>(j)) ==
                df.entry(members[i], members[j]));
    }
  }
}

TEST_CASE("reference domains for a class") {
  HeegaardDiagram d = make_s3_sphere();
  std::vector<Generator> gens = enumerate_generators(d);
  std::vector<Domain> refs = reference_domains(d, gens);
  REQUIRE(refs.size() == gens.size());
  for (const Domain& D : refs) CHECK(basepoint_multiplicities(d, D).total == 0);
}

TEST_CASE("twisted grading of the sphere bigons") {
  HeegaardDiagram d = make_s3_sphere();
  TwistedComplex c = twisted_of(d);
  ivec zero(c.m, 0);
  // the two generators sit one grading apart regardless of twisting
  long long g4 = twisted_grading4(d, c, 0, zero, 1, zero);
  CHECK((g4 == 4 || g4 == -4));
}
