#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hf/moves.hpp"
#include "hf/oracle.hpp"
#include "hf/twisted.hpp"

using namespace hf;
using Clock = std::chrono::steady_clock;

namespace {

struct Corpus {
  std::vector<std::pair<std::string, HeegaardDiagram>> fixtures;
};

Corpus corpus() {
  Corpus c;
  c.fixtures.emplace_back("s3_sphere", make_s3_sphere());
  c.fixtures.emplace_back("s3_torus", make_s3_torus());
  c.fixtures.emplace_back("s1s2", make_s1s2());
  c.fixtures.emplace_back("lens_3_1", make_lens(3, 1));
  c.fixtures.emplace_back("lens_5_1", make_lens(5, 1));
  c.fixtures.emplace_back("lens_5_2", make_lens(5, 2));
  c.fixtures.emplace_back("lens_7_1", make_lens(7, 1));
  c.fixtures.emplace_back("t_sum_s1s2",
                          connected_sum(make_s3_torus(), make_s1s2(), 0, 0));
  c.fixtures.emplace_back("lens31_sum",
                          connected_sum(make_lens(3, 1), make_lens(3, 1), 0, 0));
  return c;
}

HeegaardDiagram make_grid2() {
  CombinatorialMap m = build_map({{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {1, 1, 1, 1}, true);
  FaceSet fs = trace_faces(m);
  std::vector<Corner> bps{fs.faces[0].corners[0], fs.faces[1].corners[0]};
  return make_diagram("grid2", std::move(m), bps);
}

long long dim_of(const HeegaardDiagram& d) {
  Differential df = differential(d);
  return homology(d, df).total_dim;
}

int n_failed = 0;

void report(int idx, const std::string& name, bool ok, const std::string& note = "") {
  std::printf("criterion %2d [%s]: %s%s%s\n", idx, name.c_str(), ok ? "PASS" : "FAIL",
              note.empty() ? "" : " — ", note.c_str());
  if (!ok) ++n_failed;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main() {
  Corpus c = corpus();

  // 1. d^2 = 0 on all fixtures and after 5 seeded random nice moves each
  {
    auto t0 = Clock::now();
    bool ok = true;
    std::string note;
    for (auto& [name, d] : c.fixtures) {
      Differential df = differential(d);
      if (!verify_d_squared(df).ok) {
        ok = false;
        note = name + " d^2 != 0";
        break;
      }
      FuzzReport fr = fuzz_invariance(d, 5, 101);  // re-verifies d^2 per move
      if (!fr.ok) {
        ok = false;
        note = name + " after moves: " + fr.violation;
        break;
      }
    }
    double s = seconds_since(t0);
    if (ok && s >= 30.0) {
      ok = false;
      note = "too slow";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1fs", s);
    report(1, "d-squared", ok, note.empty() ? buf : note);
  }

  // 2. dim HF of the S^3 diagrams
  {
    auto t0 = Clock::now();
    bool ok = dim_of(make_s3_sphere()) == 2 && dim_of(make_s3_torus()) == 1;
    report(2, "s3 dims", ok && seconds_since(t0) < 2.0);
  }

  // 3. lens spaces: dim p, zero differential, p singleton classes
  {
    bool ok = true;
    for (auto [p, q] : {std::pair{3, 1}, {5, 1}, {7, 1}, {5, 2}}) {
      HeegaardDiagram d = make_lens(p, q);
      Differential df = differential(d);
      bool zero = true;
      for (int x = 0; x < df.n(); ++x) zero = zero && df.witnesses[x].empty();
      std::vector<std::vector<int>> cls = pi2_classes(d, df.gens);
      ok = ok && zero && homology(d, df).total_dim == p &&
           static_cast<int>(cls.size()) == p;
    }
    report(3, "lens spaces", ok);
  }

  // 4. S^1 x S^2 and the sum with the torus
  {
    bool ok = dim_of(make_s1s2()) == 2 &&
              dim_of(connected_sum(make_s3_torus(), make_s1s2(), 0, 0)) == 2;
    report(4, "s1s2 dims", ok);
  }

  // 5. move invariance over >= 100 seeded fuzz moves
  {
    auto t0 = Clock::now();
    bool ok = true;
    std::string note;
    int total_moves = 0;
    std::map<std::string, int> kinds;
    std::vector<std::pair<std::string, HeegaardDiagram>> targets = c.fixtures;
    targets.emplace_back("grid2", make_grid2());
    for (auto& [name, d] : targets) {
      FuzzReport fr = fuzz_invariance(d, 12, 2024);
      total_moves += static_cast<int>(fr.trace.size());
      for (auto& m : fr.trace) ++kinds[m.type];
      if (!fr.ok) {
        ok = false;
        note = name + ": " + fr.violation;
        break;
      }
    }
    if (ok && total_moves < 100) {
      ok = false;
      note = "only " + std::to_string(total_moves) + " moves";
    }
    double s = seconds_since(t0);
    if (ok && s >= 300.0) {
      ok = false;
      note = "too slow";
    }
    if (note.empty()) {
      note = std::to_string(total_moves) + " moves (";
      for (auto& [k, n] : kinds) note += k + ":" + std::to_string(n) + " ";
      note.back() = ')';
    }
    report(5, "move invariance", ok, note);
  }

  // 6. oracle equivalence on every generator pair of the corpus
  {
    bool ok = true;
    std::string note;
    for (auto& [name, d] : c.fixtures) {
      std::vector<Generator> gens = enumerate_generators(d);
      for (const Generator& x : gens) {
        std::map<std::vector<int>, int> pruned;
        for (auto& [y, D] : empty_polygons(d, x)) ++pruned[y.coords];
        for (const Generator& y : gens) {
          std::vector<Domain> brute;
          try {
            brute = brute_force_polygons(d, x, y);
          } catch (const TooLarge&) {
            continue;
          }
          int fast = pruned.count(y.coords) ? pruned[y.coords] : 0;
          if (static_cast<int>(brute.size()) != fast) {
            ok = false;
            note = name;
          }
        }
      }
    }
    report(6, "oracle equivalence", ok, note);
  }

  // 7. every differential witness is a polygon (chi 1, one boundary, 2 or 4 corners)
  {
    bool ok = true;
    std::string note;
    int checked = 0;
    for (auto& [name, d] : c.fixtures) {
      Differential df = differential(d);
      for (int x = 0; x < df.n() && ok; ++x)
        for (const auto& [y, ws] : df.witnesses[x])
          for (const Domain& D : ws) {
            TiledSurface ts;
            try {
              ts = build_surface(d, D, df.gens[x], df.gens[y]);
            } catch (const Error& e) {
              ok = false;
              note = name + ": " + e.what();
              break;
            }
            ++checked;
            if (ts.chi != 1 || ts.n_boundary != 1 ||
                (ts.n_corners != 2 && ts.n_corners != 4)) {
              ok = false;
              note = name + ": bad surface";
            }
          }
    }
    report(7, "polygon geometry", ok,
           note.empty() ? std::to_string(checked) + " witnesses" : note);
  }

  // 8. Maslov additivity, 1000 trials per fixture
  {
    auto t0 = Clock::now();
    bool ok = true;
    std::string note;
    for (auto& [name, d] : c.fixtures) {
      try {
        AdditivityReport rep = maslov_additivity_sample(d, 1000, 77);
        if (!rep.ok) {
          ok = false;
          note = name;
        }
      } catch (const AdditivityViolation& e) {
        ok = false;
        note = name + ": " + e.what();
      }
    }
    double s = seconds_since(t0);
    if (ok && s >= 10.0) {
      ok = false;
      note = "too slow";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1fs", s);
    report(8, "maslov additivity", ok, note.empty() ? buf : note);
  }

  // 9. twisted examples: sphere has torsion (1+t), torus has dimension 1
  {
    bool ok = true;
    std::string note;
    {
      HeegaardDiagram d = make_s3_sphere();
      std::vector<Generator> gens = enumerate_generators(d);
      std::vector<std::vector<int>> cls = pi2_classes(d, gens);
      TwistedComplex tc = twisted_differential(d, gens, cls[0]);
      int nonzero_terms = 0;
      for (auto& row : tc.matrix)
        for (auto& e : row)
          if (!e.is_zero()) nonzero_terms = static_cast<int>(e.terms.size());
      UnivariateHomology uh = univariate_homology(tc);
      if (nonzero_terms != 2 || !uh.finite || uh.gf2_dim != 1 ||
          uh.divisors != std::vector<std::string>{"1+t"}) {
        ok = false;
        note = "sphere";
      }
    }
    {
      HeegaardDiagram d = make_s3_torus();
      std::vector<Generator> gens = enumerate_generators(d);
      std::vector<std::vector<int>> cls = pi2_classes(d, gens);
      UnivariateHomology uh = univariate_homology(twisted_differential(d, gens, cls[0]));
      if (!uh.finite || uh.gf2_dim != 1) {
        ok = false;
        note = "torus";
      }
    }
    report(9, "twisted examples", ok, note);
  }

  // 10. H_2 ranks: b-1 on rational homology spheres, b on the s1s2 fixtures
  {
    bool ok = true;
    std::string note;
    for (auto& [name, d] : c.fixtures) {
      Generator x = enumerate_generators(d)[0];
      int rank = pi2prime_and_h2(d, x).rank;
      bool has_s1s2 = name == "s1s2" || name == "t_sum_s1s2";
      int expect = has_s1s2 ? d.b() : d.b() - 1;
      if (rank != expect) {
        ok = false;
        note = name + " rank " + std::to_string(rank);
      }
    }
    report(10, "h2 ranks", ok, note);
  }

  // 11. augmentation at t = 1 reproduces the untwisted differential
  {
    bool ok = true;
    std::string note;
    for (auto& [name, d] : c.fixtures) {
      Differential df = differential(d);
      for (const std::vector<int>& members : pi2_classes(d, df.gens)) {
        TwistedComplex tc = twisted_differential(d, df.gens, members);
        GF2Matrix aug = augmentation(tc);
        for (size_t i = 0; i < members.size(); ++i)
          for (size_t j = 0; j < members.size(); ++j)
            if (aug.get(static_cast<int>(i), static_cast<int>(j)) !=
                df.entry(members[i], members[j])) {
              ok = false;
              note = name;
            }
      }
    }
    report(11, "augmentation", ok, note);
  }

  return n_failed == 0 ? 0 : 1;
}
