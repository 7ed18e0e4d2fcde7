#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hf/moves.hpp"
#include "hf/oracle.hpp"
#include "hf/twisted.hpp"

using json = nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hf::SchemaError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string digest(const hf::HeegaardDiagram& d) {
  std::string s = hf::serialize(hf::canonicalize(d));
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

hf::HeegaardDiagram load(const std::string& path) { return hf::parse(read_file(path)); }

int emit(const std::string& command, const hf::HeegaardDiagram* d, json payload,
         bool verdict_ok) {
  json report;
  report["command"] = command;
  if (d) report["digest"] = digest(*d);
  report["payload"] = std::move(payload);
  std::cout << report.dump(2) << "\n";
  return verdict_ok ? 0 : 1;
}

json coords_json(const hf::Generator& g) { return json(g.coords); }

json stable_json(long long dim, int b) {
  json out;
  out["dim"] = dim;
  out["b"] = b;
  long long denom = b >= 1 && b - 1 < 62 ? (1ll << (b - 1)) : 0;
  if (denom > 0 && dim % denom == 0) {
    out["stable"] = {dim / denom, 1};
  } else {
    out["stable"] = {dim, b};
    out["warning"] = "dimension not divisible by 2^(b-1)";
  }
  return out;
}

int cmd_validate(const std::string& file) {
  hf::HeegaardDiagram d = load(file);
  hf::ValidationReport vr = hf::validate(d);
  hf::NicenessReport nr = hf::is_nice(d);
  json p;
  p["valid"] = vr.valid;
  p["violations"] = vr.violations;
  p["nice"] = nr.is_nice;
  json off = json::array();
  for (const auto& o : nr.offenders)
    off.push_back({{"face", o.face}, {"corners", o.corners}, {"pointed", o.has_basepoint}});
  p["offenders"] = off;
  return emit("validate", &d, p, vr.valid && nr.is_nice);
}

int cmd_info(const std::string& file) {
  hf::HeegaardDiagram d = load(file);
  json p;
  p["name"] = d.name;
  p["genus"] = d.g;
  p["k"] = d.k();
  p["b"] = d.b();
  p["crossings"] = d.map.n_crossings;
  p["faces"] = d.n_faces();
  p["tubes"] = static_cast<int>(d.tubes.size());
  p["nice"] = hf::is_nice(d).is_nice;
  return emit("info", &d, p, true);
}

int cmd_gens(const std::string& file) {
  hf::HeegaardDiagram d = load(file);
  std::vector<hf::Generator> gens = hf::enumerate_generators(d);
  json p;
  p["count"] = static_cast<int>(gens.size());
  json list = json::array();
  for (const auto& g : gens) list.push_back(coords_json(g));
  p["generators"] = list;
  return emit("gens", &d, p, true);
}

int cmd_diff(const std::string& file, bool witnesses, const std::string& matrix_out,
             int threads) {
  hf::HeegaardDiagram d = load(file);
  hf::Differential df = hf::differential(d, threads);
  hf::DSquaredReport sq = hf::verify_d_squared(df);
  json p;
  p["generators"] = df.n();
  int entries = 0;
  for (int x = 0; x < df.n(); ++x)
    for (const auto& [y, w] : df.witnesses[x]) entries += w.size() % 2;
  p["nonzero_entries"] = entries;
  p["d_squared_zero"] = sq.ok;
  if (witnesses) {
    json w = json::array();
    for (int x = 0; x < df.n(); ++x)
      for (const auto& [y, doms] : df.witnesses[x])
        for (const hf::Domain& D : doms)
          w.push_back({{"from", coords_json(df.gens[x])},
                       {"to", coords_json(df.gens[y])},
                       {"domain", json(D.mult)}});
    p["witnesses"] = w;
  }
  if (!matrix_out.empty()) {
    std::ofstream out(matrix_out, std::ios::binary);
    out << hf::export_matrix(df);
    p["matrix_file"] = matrix_out;
  }
  return emit("diff", &d, p, sq.ok);
}

int cmd_homology(const std::string& file, bool per_class, bool graded, int threads) {
  hf::HeegaardDiagram d = load(file);
  hf::Differential df = hf::differential(d, threads);
  hf::HomologyResult h = hf::homology(d, df);
  json p = stable_json(h.total_dim, d.b());
  if (per_class) {
    json cl = json::array();
    for (size_t i = 0; i < h.classes.size(); ++i)
      cl.push_back({{"size", static_cast<int>(h.classes[i].size())}, {"dim", h.class_dim[i]}});
    p["classes"] = cl;
  }
  if (graded) {
    json gr = json::array();
    for (const auto& cls : h.classes) {
      hf::GradingResult g = hf::relative_grading(d, df.gens, cls);
      json gradings = json::array();
      for (long long v : g.gr4) gradings.push_back(hf::quarters_to_string(v));
      gr.push_back({{"delta", hf::quarters_to_string(g.delta4)}, {"gradings", gradings}});
    }
    p["graded"] = gr;
  }
  return emit("homology", &d, p, true);
}

int cmd_twisted(const std::string& file, int only_class) {
  hf::HeegaardDiagram d = load(file);
  std::vector<hf::Generator> gens = hf::enumerate_generators(d);
  std::vector<std::vector<int>> classes = hf::pi2_classes(d, gens);
  hf::Differential df = hf::differential(d);
  bool ok = true;
  json cl = json::array();
  for (size_t i = 0; i < classes.size(); ++i) {
    if (only_class >= 0 && static_cast<int>(i) != only_class) continue;
    hf::TwistedComplex tc = hf::twisted_differential(d, gens, classes[i]);
    bool sq = hf::verify_twisted_d_squared(tc);
    // augmentation must match the untwisted matrix on this class
    hf::GF2Matrix aug = hf::augmentation(tc);
    bool aug_ok = true;
    for (size_t a = 0; a < classes[i].size(); ++a)
      for (size_t b = 0; b < classes[i].size(); ++b)
        if (aug.get(a, b) != df.entry(classes[i][a], classes[i][b])) aug_ok = false;
    json entry;
    entry["class"] = static_cast<int>(i);
    entry["size"] = static_cast<int>(classes[i].size());
    entry["h2_rank"] = tc.m;
    entry["d_squared_zero"] = sq;
    entry["augmentation_consistent"] = aug_ok;
    try {
      hf::UnivariateHomology uh = hf::univariate_homology(tc);
      entry["free_rank"] = uh.free_rank;
      entry["divisors"] = uh.divisors;
      entry["finite"] = uh.finite;
      if (uh.finite) entry["gf2_dim"] = uh.gf2_dim;
    } catch (const hf::NotUnivariate& e) {
      entry["homology"] = std::string("unavailable: ") + e.what();
    }
    ok = ok && sq && aug_ok;
    cl.push_back(entry);
  }
  json p;
  p["classes"] = cl;
  return emit("twisted", &d, p, ok);
}

int cmd_move_apply(const std::string& file, const std::string& script,
                   const std::string& out_path) {
  hf::HeegaardDiagram d = load(file);
  hf::HeegaardDiagram r = hf::apply_move_script(d, read_file(script));
  std::string text = hf::serialize(r);
  if (out_path.empty() || out_path == "-") {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << text;
  }
  return 0;
}

int cmd_fuzz(const std::string& file, int moves, uint64_t seed) {
  hf::HeegaardDiagram d = load(file);
  hf::FuzzReport r = hf::fuzz_invariance(d, moves, seed);
  json p;
  p["ok"] = r.ok;
  p["seed"] = r.seed;
  p["initial"] = {{"dim", r.initial.dim}, {"b", r.initial.b}};
  p["final"] = {{"dim", r.final_class.dim}, {"b", r.final_class.b}};
  json tr = json::array();
  for (const auto& m : r.trace)
    tr.push_back({{"type", m.type}, {"detail", m.detail}, {"dim", m.dim_after}});
  p["trace"] = tr;
  if (!r.ok) p["violation"] = r.violation;
  return emit("fuzz-invariance", &d, p, r.ok);
}

int cmd_oracle(const std::string& file, int pair_x, int pair_y, uint64_t seed) {
  hf::HeegaardDiagram d = load(file);
  std::vector<hf::Generator> gens = hf::enumerate_generators(d);
  json p;
  json mismatches = json::array();
  int pairs = 0, surfaces = 0;
  bool ok = true;
  for (size_t x = 0; x < gens.size(); ++x) {
    if (pair_x >= 0 && static_cast<int>(x) != pair_x) continue;
    std::vector<std::pair<hf::Generator, hf::Domain>> fast = hf::empty_polygons(d, gens[x]);
    for (size_t y = 0; y < gens.size(); ++y) {
      if (pair_y >= 0 && static_cast<int>(y) != pair_y) continue;
      std::vector<hf::Domain> expect;
      for (const auto& [g, D] : fast)
        if (g == gens[y]) expect.push_back(D);
      std::sort(expect.begin(), expect.end(),
                [](const hf::Domain& a, const hf::Domain& b) { return a.mult < b.mult; });
      std::vector<hf::Domain> brute = hf::brute_force_polygons(d, gens[x], gens[y]);
      ++pairs;
      if (brute != expect) {
        ok = false;
        mismatches.push_back({{"x", coords_json(gens[x])}, {"y", coords_json(gens[y])}});
      }
      for (const hf::Domain& D : brute) {
        hf::TiledSurface s = hf::build_surface(d, D, gens[x], gens[y]);
        ++surfaces;
        if (s.chi != 1 || s.n_boundary != 1 || (s.n_corners != 2 && s.n_corners != 4)) {
          ok = false;
          mismatches.push_back({{"surface", json(D.mult)},
                                {"chi", s.chi},
                                {"boundary", s.n_boundary},
                                {"corners", s.n_corners}});
        }
      }
    }
  }
  p["pairs_checked"] = pairs;
  p["surfaces_checked"] = surfaces;
  try {
    hf::maslov_additivity_sample(d, 1000, seed);
    p["additivity"] = "pass";
  } catch (const hf::AdditivityViolation& e) {
    ok = false;
    p["additivity"] = e.what();
  }
  p["counterexamples"] = mismatches;
  p["ok"] = ok;
  return emit("oracle", &d, p, ok);
}

int cmd_stable_eq(const std::string& f1, const std::string& f2, int n1, int n2,
                  int threads) {
  hf::HeegaardDiagram d1 = load(f1), d2 = load(f2);
  hf::Differential df1 = hf::differential(d1, threads);
  hf::Differential df2 = hf::differential(d2, threads);
  hf::StableClass c1 = hf::stable_class(d1, df1), c2 = hf::stable_class(d2, df2);
  // extra (F + F) tensor factors double the dimension each
  c1.b += n1;
  c1.dim <<= n1;
  c2.b += n2;
  c2.dim <<= n2;
  bool eq = hf::stable_equal(c1, c2);
  json p;
  p["first"] = stable_json(c1.dim, c1.b);
  p["second"] = stable_json(c2.dim, c2.b);
  p["equal"] = eq;
  return emit("stable-eq", nullptr, p, eq);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial Heegaard Floer homology from nice diagrams"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = HF_THREADS or 1)");

  std::string file, file2, script, out_path, matrix_out;
  bool witnesses = false, per_class = false, graded = false;
  int moves = 10, only_class = -1, pair_x = -1, pair_y = -1, n1 = 0, n2 = 0;
  uint64_t seed = 1;

  auto* v = app.add_subcommand("validate");
  v->add_option("file", file)->required();
  auto* inf = app.add_subcommand("info");
  inf->add_option("file", file)->required();
  auto* ge = app.add_subcommand("gens");
  ge->add_option("file", file)->required();
  auto* di = app.add_subcommand("diff");
  di->add_option("file", file)->required();
  di->add_flag("--witnesses", witnesses);
  di->add_option("--matrix", matrix_out);
  auto* ho = app.add_subcommand("homology");
  ho->add_option("file", file)->required();
  ho->add_flag("--per-class", per_class);
  ho->add_flag("--graded", graded);
  auto* tw = app.add_subcommand("twisted");
  tw->add_option("file", file)->required();
  tw->add_option("--class", only_class);
  auto* mv = app.add_subcommand("move");
  mv->require_subcommand(1);
  auto* mva = mv->add_subcommand("apply");
  mva->add_option("file", file)->required();
  mva->add_option("--script", script)->required();
  mva->add_option("-o,--output", out_path);
  auto* fz = app.add_subcommand("fuzz-invariance");
  fz->add_option("file", file)->required();
  fz->add_option("--moves", moves);
  fz->add_option("--seed", seed);
  auto* orc = app.add_subcommand("oracle");
  orc->add_option("file", file)->required();
  orc->add_option("--pair", [&](const std::vector<std::string>& vals) {
    if (vals.size() != 2) return false;
    pair_x = std::stoi(vals[0]);
    pair_y = std::stoi(vals[1]);
    return true;
  })->expected(2);
  orc->add_option("--seed", seed);
  auto* se = app.add_subcommand("stable-eq");
  se->add_option("file1", file)->required();
  se->add_option("file2", file2)->required();
  se->add_option("--summands1", n1);
  se->add_option("--summands2", n2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (v->parsed()) return cmd_validate(file);
    if (inf->parsed()) return cmd_info(file);
    if (ge->parsed()) return cmd_gens(file);
    if (di->parsed()) return cmd_diff(file, witnesses, matrix_out, threads);
    if (ho->parsed()) return cmd_homology(file, per_class, graded, threads);
    if (tw->parsed()) return cmd_twisted(file, only_class);
    if (mva->parsed()) return cmd_move_apply(file, script, out_path);
    if (fz->parsed()) return cmd_fuzz(file, moves, seed);
    if (orc->parsed()) return cmd_oracle(file, pair_x, pair_y, seed);
    if (se->parsed()) return cmd_stable_eq(file, file2, n1, n2, threads);
  } catch (const hf::SchemaError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const hf::Error& e) {
    json report;
    report["error"] = {{"code", e.code()}, {"message", e.what()}};
    std::cout << report.dump(2) << "\n";
    return 1;
  }
  return 2;
}
