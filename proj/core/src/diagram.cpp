#include "hf/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <json.hpp>

namespace hf {

using nlohmann::json;

static int orbit_of_corner(const CombinatorialMap& m, const FaceSet& orbits,
                           const Corner& c) {
  if (c.crossing < 0 || c.crossing >= m.n_crossings)
    throw SchemaError("corner references crossing " + std::to_string(c.crossing) +
                      " outside 0.." + std::to_string(m.n_crossings - 1));
  return orbits.face_of[m.quadrant_dart(c)];
}

HeegaardDiagram make_diagram(std::string name, CombinatorialMap map,
                             std::vector<Corner> basepoints, std::vector<Tube> tubes) {
  HeegaardDiagram d;
  d.name = std::move(name);
  d.map = std::move(map);
  d.basepoints = std::move(basepoints);
  d.tubes = std::move(tubes);

  FaceSet orbits = trace_faces(d.map);
  int n_orbits = static_cast<int>(orbits.faces.size());
  std::vector<int> parent(n_orbits);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Tube& t : d.tubes) {
    int a = find(orbit_of_corner(d.map, orbits, t.a));
    int b = find(orbit_of_corner(d.map, orbits, t.b));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  std::vector<int> face_id(n_orbits, -1);
  for (int o = 0; o < n_orbits; ++o) {
    int r = find(o);
    if (face_id[r] < 0) {
      face_id[r] = static_cast<int>(d.faces.faces.size());
      Face f;
      f.id = face_id[r];
      d.faces.faces.push_back(std::move(f));
    }
    face_id[o] = face_id[r];
    Face& f = d.faces.faces[face_id[o]];
    f.orbit_starts.push_back(static_cast<int>(f.boundary_darts.size()));
    const Face& orb = orbits.faces[o];
    f.boundary_darts.insert(f.boundary_darts.end(), orb.boundary_darts.begin(),
                            orb.boundary_darts.end());
    f.corners.insert(f.corners.end(), orb.corners.begin(), orb.corners.end());
  }
  for (Face& f : d.faces.faces) f.chi = f.n_orbits();
  for (const Tube& t : d.tubes)
    d.faces.faces[face_id[find(orbit_of_corner(d.map, orbits, t.a))]].chi -= 2;
  d.faces.face_of.assign(d.map.n_darts(), -1);
  for (int dd = 0; dd < d.map.n_darts(); ++dd)
    d.faces.face_of[dd] = face_id[orbits.face_of[dd]];

  int ncomp = 0;
  std::vector<int> comp = d.map.crossing_components(&ncomp);
  if (ncomp > 1) {
    std::vector<int> cparent(ncomp);
    std::iota(cparent.begin(), cparent.end(), 0);
    auto cfind = [&](int x) {
      while (cparent[x] != x) x = cparent[x] = cparent[cparent[x]];
      return x;
    };
    for (const Tube& t : d.tubes) {
      int a = cfind(comp[t.a.crossing]), b = cfind(comp[t.b.crossing]);
      if (a != b) cparent[std::max(a, b)] = std::min(a, b);
    }
    std::set<int> roots;
    for (int c = 0; c < ncomp; ++c) roots.insert(cfind(c));
    if (roots.size() > 1)
      throw DisconnectedMap("diagram has " + std::to_string(roots.size()) +
                            " components even through tubes");
  }

  int chi = -d.map.n_crossings;
  for (const Face& f : d.faces.faces) chi += f.chi;
  if ((2 - chi) % 2 != 0)
    throw NonIntegerGenus("Euler characteristic " + std::to_string(chi));
  d.g = (2 - chi) / 2;

  d.face_basepoint.assign(d.n_faces(), -1);
  for (size_t i = 0; i < d.basepoints.size(); ++i) {
    int f = d.faces.face_of_corner(d.map, d.basepoints[i]);
    d.basepoint_face.push_back(f);
    if (d.face_basepoint[f] < 0) d.face_basepoint[f] = static_cast<int>(i);
  }
  return d;
}

ValidationReport validate(const HeegaardDiagram& d) {
  ValidationReport r;
  auto fail = [&](std::string s) {
    r.valid = false;
    r.violations.push_back(std::move(s));
  };
  if (d.map.alpha.size() != d.map.beta.size())
    fail("balanced: |alpha| = " + std::to_string(d.map.alpha.size()) +
         " but |beta| = " + std::to_string(d.map.beta.size()));
  int expected_b = d.k() - d.g + 1;
  if (d.b() != expected_b)
    fail("basepoint count: expected k - g + 1 = " + std::to_string(expected_b) +
         ", got " + std::to_string(d.b()));
  {
    std::vector<int> per_face(d.n_faces(), 0);
    for (int f : d.basepoint_face) ++per_face[f];
    for (int f = 0; f < d.n_faces(); ++f)
      if (per_face[f] > 1)
        fail("at most one basepoint per face: face " + std::to_string(f) + " has " +
             std::to_string(per_face[f]));
  }
  for (CurveKind kind : {CurveKind::Alpha, CurveKind::Beta}) {
    const char* kn = kind == CurveKind::Alpha ? "alpha" : "beta";
    int ncomp = 0;
    std::vector<int> comp = curve_complement_components(d.map, d.faces, kind, &ncomp);
    std::vector<int> count(ncomp, 0);
    for (int f : d.basepoint_face) ++count[comp[f]];
    for (int c = 0; c < ncomp; ++c)
      if (count[c] != 1)
        fail(std::string("unique basepoint per ") + kn + "-component: component " +
             std::to_string(c) + " has " + std::to_string(count[c]));
  }
  return r;
}

NicenessReport is_nice(const HeegaardDiagram& d) {
  NicenessReport r;
  for (const Face& f : d.faces.faces) {
    if (d.pointed(f.id)) continue;
    if (f.is_bigon() || f.is_rectangle()) continue;
    r.is_nice = false;
    r.offenders.push_back({f.id, f.n_corners(), false});
  }
  return r;
}

std::vector<CurveSides> basepoints_both_sides(const HeegaardDiagram& d) {
  std::vector<CurveSides> out;
  auto run = [&](CurveKind kind, const std::vector<std::vector<int>>& curves,
                 auto out_dart, auto in_dart) {
    for (size_t k = 0; k < curves.size(); ++k) {
      CurveSides cs{kind, static_cast<int>(k), {}, {}};
      std::set<int> left, right;
      for (int c : curves[k]) {
        left.insert(d.faces.face_of[out_dart(c)]);
        right.insert(d.faces.face_of[in_dart(c)]);
      }
      for (int f : left)
        if (d.pointed(f)) cs.left_pointed.push_back(f);
      for (int f : right)
        if (d.pointed(f)) cs.right_pointed.push_back(f);
      if (cs.left_pointed.empty() || cs.right_pointed.empty())
        throw LemmaViolation(std::string(kind == CurveKind::Alpha ? "alpha" : "beta") +
                             " curve " + std::to_string(k) +
                             " has an unpointed side");
      out.push_back(std::move(cs));
    }
  };
  run(CurveKind::Alpha, d.map.alpha, dart_alpha_out, dart_alpha_in);
  run(CurveKind::Beta, d.map.beta, dart_beta_out, dart_beta_in);
  return out;
}

HeegaardDiagram make_s3_torus() {
  return make_diagram("s3_torus", build_map({{0}}, {{0}}, {1}),
                      {{0, Quadrant::A}});
}

HeegaardDiagram make_s3_sphere() {
  return make_diagram("s3_sphere", build_map({{0, 1}}, {{0, 1}}, {1, -1}),
                      {{0, Quadrant::A}, {0, Quadrant::C}});
}

HeegaardDiagram make_s1s2() {
  // Same curve data as the sphere, but the two pointed bigons are joined by a
  // tube into one annular pointed face, raising the genus to 1.
  return make_diagram("s1s2", build_map({{0, 1}}, {{0, 1}}, {1, -1}),
                      {{0, Quadrant::A}},
                      {{Corner{0, Quadrant::A}, Corner{0, Quadrant::C}}});
}

HeegaardDiagram make_lens(int p, int q) {
  if (p <= 0 || q <= 0 || (q >= p && !(p == 1 && q == 1)))
    throw NotCoprime("require 0 < q < p (or p = q = 1), got p=" + std::to_string(p) +
                     " q=" + std::to_string(q));
  if (std::gcd(p, q) != 1)
    throw NotCoprime("gcd(" + std::to_string(p) + "," + std::to_string(q) + ") != 1");
  std::vector<int> a(p), b(p);
  std::iota(a.begin(), a.end(), 0);
  for (int i = 0; i < p; ++i) b[i] = static_cast<int>((int64_t)i * q % p);
  return make_diagram("lens_" + std::to_string(p) + "_" + std::to_string(q),
                      build_map({a}, {b}, std::vector<int>(p, 1)), {{0, Quadrant::A}});
}

HeegaardDiagram connected_sum(const HeegaardDiagram& d1, const HeegaardDiagram& d2,
                              int face1, int face2) {
  if (face1 < 0 || face1 >= d1.n_faces() || !d1.pointed(face1))
    throw UnpointedFace("face " + std::to_string(face1) + " of " + d1.name);
  if (face2 < 0 || face2 >= d2.n_faces() || !d2.pointed(face2))
    throw UnpointedFace("face " + std::to_string(face2) + " of " + d2.name);

  int off = d1.map.n_crossings;
  auto shift_curves = [&](std::vector<std::vector<int>> cs,
                          const std::vector<std::vector<int>>& extra) {
    for (auto seq : extra) {
      for (int& c : seq) c += off;
      cs.push_back(std::move(seq));
    }
    return cs;
  };
  std::vector<int> signs = d1.map.sign;
  signs.insert(signs.end(), d2.map.sign.begin(), d2.map.sign.end());

  std::vector<Tube> tubes = d1.tubes;
  for (Tube t : d2.tubes) {
    t.a.crossing += off;
    t.b.crossing += off;
    tubes.push_back(t);
  }
  Corner a2 = d2.faces.faces[face2].corners.front();
  a2.crossing += off;
  tubes.push_back({d1.faces.faces[face1].corners.front(), a2});

  std::vector<Corner> bps = d1.basepoints;
  int drop = d2.face_basepoint[face2];
  for (size_t i = 0; i < d2.basepoints.size(); ++i) {
    if (static_cast<int>(i) == drop) continue;
    Corner c = d2.basepoints[i];
    c.crossing += off;
    bps.push_back(c);
  }

  return make_diagram(d1.name + "#" + d2.name,
                      build_map(shift_curves(d1.map.alpha, d2.map.alpha),
                                shift_curves(d1.map.beta, d2.map.beta), signs,
                                /*require_connected=*/false),
                      std::move(bps), std::move(tubes));
}

static std::vector<std::vector<int>> canonical_curves(std::vector<std::vector<int>> cs) {
  for (auto& seq : cs) {
    auto it = std::min_element(seq.begin(), seq.end());
    std::rotate(seq.begin(), it, seq.end());
  }
  std::sort(cs.begin(), cs.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return cs;
}

HeegaardDiagram canonicalize(const HeegaardDiagram& d) {
  return make_diagram(d.name,
                      build_map(canonical_curves(d.map.alpha),
                                canonical_curves(d.map.beta), d.map.sign,
                                /*require_connected=*/false),
                      d.basepoints, d.tubes);
}

bool same_diagram(const HeegaardDiagram& a, const HeegaardDiagram& b) {
  HeegaardDiagram ca = canonicalize(a), cb = canonicalize(b);
  if (ca.map.alpha != cb.map.alpha || ca.map.beta != cb.map.beta ||
      ca.map.sign != cb.map.sign)
    return false;
  auto sorted = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(ca.basepoint_face) != sorted(cb.basepoint_face)) return false;
  auto tube_pairs = [](const HeegaardDiagram& d) {
    FaceSet orbits = trace_faces(d.map);
    std::vector<std::pair<int, int>> ps;
    for (const Tube& t : d.tubes) {
      int x = orbits.face_of[d.map.quadrant_dart(t.a)];
      int y = orbits.face_of[d.map.quadrant_dart(t.b)];
      ps.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(ps.begin(), ps.end());
    return ps;
  };
  return tube_pairs(ca) == tube_pairs(cb);
}

static Corner parse_corner(const json& j, const char* what) {
  if (!j.is_object() || j.size() != 2 || !j.contains("crossing") ||
      !j.contains("quadrant"))
    throw SchemaError(std::string(what) + " must be {\"crossing\", \"quadrant\"}");
  if (!j["crossing"].is_number_integer() || j["crossing"].get<int64_t>() < 0)
    throw SchemaError(std::string(what) + ".crossing must be a nonnegative integer");
  if (!j["quadrant"].is_string())
    throw SchemaError(std::string(what) + ".quadrant must be a string");
  return {j["crossing"].get<int>(), quadrant_from_name(j["quadrant"].get<std::string>())};
}

HeegaardDiagram parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(e.what());
  }
  if (!j.is_object()) throw SchemaError("top level must be an object");
  static const std::set<std::string> known = {"name",       "alpha", "beta",
                                             "signs",      "basepoints",
                                             "tubes"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key())) throw SchemaError("unknown field \"" + it.key() + "\"");
  for (const char* f : {"name", "alpha", "beta", "signs", "basepoints"})
    if (!j.contains(f)) throw SchemaError(std::string("missing field \"") + f + "\"");

  if (!j["name"].is_string()) throw SchemaError("\"name\" must be a string");
  auto read_curves = [&](const char* field) {
    const json& arr = j[field];
    if (!arr.is_array()) throw SchemaError(std::string("\"") + field + "\" must be an array");
    std::vector<std::vector<int>> out;
    for (const json& c : arr) {
      if (!c.is_array()) throw SchemaError(std::string(field) + " curves must be arrays");
      std::vector<int> seq;
      for (const json& x : c) {
        if (!x.is_number_integer() || x.get<int64_t>() < 0)
          throw SchemaError(std::string(field) + " entries must be nonnegative integers");
        seq.push_back(x.get<int>());
      }
      out.push_back(std::move(seq));
    }
    return out;
  };
  auto alpha = read_curves("alpha");
  auto beta = read_curves("beta");
  size_t n = 0;
  for (const auto& c : alpha) n += c.size();

  if (!j["signs"].is_object()) throw SchemaError("\"signs\" must be an object");
  std::vector<int> signs(n, 0);
  for (auto it = j["signs"].begin(); it != j["signs"].end(); ++it) {
    size_t id;
    try {
      size_t pos = 0;
      id = std::stoul(it.key(), &pos);
      if (pos != it.key().size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw SchemaError("signs key \"" + it.key() + "\" is not a crossing id");
    }
    if (id >= n) throw SchemaError("signs key " + it.key() + " out of range");
    if (!it.value().is_number_integer() ||
        (it.value().get<int>() != 1 && it.value().get<int>() != -1))
      throw SchemaError("signs[" + it.key() + "] must be 1 or -1");
    if (signs[id] != 0) throw SchemaError("duplicate signs key " + it.key());
    signs[id] = it.value().get<int>();
  }
  for (size_t c = 0; c < n; ++c)
    if (signs[c] == 0) throw SchemaError("missing sign for crossing " + std::to_string(c));

  if (!j["basepoints"].is_array()) throw SchemaError("\"basepoints\" must be an array");
  std::vector<Corner> bps;
  for (const json& bp : j["basepoints"]) {
    Corner c = parse_corner(bp, "basepoint");
    if (c.crossing >= static_cast<int>(n))
      throw SchemaError("basepoint crossing " + std::to_string(c.crossing) +
                        " out of range");
    bps.push_back(c);
  }

  std::vector<Tube> tubes;
  if (j.contains("tubes")) {
    if (!j["tubes"].is_array()) throw SchemaError("\"tubes\" must be an array");
    for (const json& t : j["tubes"]) {
      if (!t.is_array() || t.size() != 2)
        throw SchemaError("each tube must be a pair of corners");
      Tube tube{parse_corner(t[0], "tube end"), parse_corner(t[1], "tube end")};
      if (tube.a.crossing >= static_cast<int>(n) || tube.b.crossing >= static_cast<int>(n))
        throw SchemaError("tube crossing out of range");
      tubes.push_back(tube);
    }
  }

  return make_diagram(j["name"].get<std::string>(),
                      build_map(alpha, beta, signs, /*require_connected=*/false),
                      std::move(bps), std::move(tubes));
}

std::string serialize(const HeegaardDiagram& d) {
  HeegaardDiagram c = canonicalize(d);
  json j;
  j["name"] = c.name;
  j["alpha"] = c.map.alpha;
  j["beta"] = c.map.beta;
  json signs = json::object();
  for (int i = 0; i < c.map.n_crossings; ++i) signs[std::to_string(i)] = c.map.sign[i];
  j["signs"] = signs;
  json bps = json::array();
  for (const Corner& bp : c.basepoints)
    bps.push_back({{"crossing", bp.crossing}, {"quadrant", quadrant_name(bp.quadrant)}});
  j["basepoints"] = bps;
  if (!c.tubes.empty()) {
    json tubes = json::array();
    for (const Tube& t : c.tubes) {
      json pair = json::array();
      for (const Corner* e : {&t.a, &t.b})
        pair.push_back(
            {{"crossing", e->crossing}, {"quadrant", quadrant_name(e->quadrant)}});
      tubes.push_back(pair);
    }
    j["tubes"] = tubes;
  }
  return j.dump(2) + "\n";
}

}  // namespace hf
