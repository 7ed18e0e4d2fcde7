#include <benchmark/benchmark.h>

#include "hf/moves.hpp"

namespace {

void BM_DifferentialLens(benchmark::State& state) {
  hf::HeegaardDiagram d = hf::make_lens(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    hf::Differential df = hf::differential(d);
    benchmark::DoNotOptimize(df.gens.size());
  }
}
BENCHMARK(BM_DifferentialLens)->Arg(3)->Arg(5)->Arg(7);

void BM_DifferentialSum(benchmark::State& state) {
  hf::HeegaardDiagram d =
      hf::connected_sum(hf::make_lens(3, 1), hf::make_lens(3, 1), 0, 0);
  for (auto _ : state) {
    hf::Differential df = hf::differential(d);
    benchmark::DoNotOptimize(df.gens.size());
  }
}
BENCHMARK(BM_DifferentialSum);

void BM_Isotopy(benchmark::State& state) {
  hf::HeegaardDiagram d = hf::make_lens(5, 1);
  hf::IsotopySpec spec;
  spec.family = hf::CurveKind::Alpha;
  bool found = false;
  for (int dart = 0; dart < d.map.n_darts() && !found; ++dart) {
    if (hf::dart_kind(dart) != hf::CurveKind::Alpha) continue;
    int f = d.faces.face_of[dart];
    for (int bd : d.faces.faces[f].boundary_darts) {
      if (hf::dart_kind(bd) != hf::CurveKind::Beta) continue;
      hf::IsotopySpec s{hf::CurveKind::Alpha, dart, {bd}};
      if (hf::check_nice_arc(d, s).ok) {
        spec = s;
        found = true;
        break;
      }
    }
  }
  for (auto _ : state) {
    hf::HeegaardDiagram r = hf::apply_isotopy(d, spec);
    benchmark::DoNotOptimize(r.n_faces());
  }
}
BENCHMARK(BM_Isotopy);

void BM_Stabilize(benchmark::State& state) {
  hf::HeegaardDiagram d = hf::make_lens(5, 1);
  for (auto _ : state) {
    hf::HeegaardDiagram r = hf::apply_stab_g(d, d.basepoint_face[0]);
    benchmark::DoNotOptimize(r.n_faces());
  }
}
BENCHMARK(BM_Stabilize);

}  // namespace

BENCHMARK_MAIN();
