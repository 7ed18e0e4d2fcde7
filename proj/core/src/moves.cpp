#include "hf/moves.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hf {

namespace {

int edge_key(const CombinatorialMap& m, int dart) {
  return dart_outgoing(dart) ? dart : m.iota(dart);  // the out-dart names the edge
}

using SweptPredicate = std::function<bool(const HeegaardDiagram&, const Face&)>;

// Re-anchors basepoints after a rewrite: the faces of `before` were subdivided;
// each old basepoint first avoids pieces swept out by the move, then goes to
// the descendant that is not a bigon or a rectangle when there is exactly one,
// otherwise to the descendant with the most corners (ties to the lowest id).
std::vector<Corner> reanchor_basepoints(const HeegaardDiagram& before,
                                        const HeegaardDiagram& scratch,
                                        const SweptPredicate& swept) {
  std::vector<Corner> out;
  for (size_t i = 0; i < before.basepoints.size(); ++i) {
    const Face& old_face = before.faces.faces[before.basepoint_face[i]];
    std::map<int, Corner> descendants;  // new face id -> witness corner
    for (const Corner& c : old_face.corners) {
      int nf = scratch.faces.face_of_corner(scratch.map, c);
      descendants.emplace(nf, c);
    }
    std::map<int, Corner> keep;
    for (const auto& [nf, c] : descendants)
      if (!swept || !swept(scratch, scratch.faces.faces[nf])) keep.emplace(nf, c);
    if (keep.empty()) keep = descendants;
    int chosen = -1;
    std::vector<int> odd;
    for (const auto& [nf, c] : keep) {
      const Face& f = scratch.faces.faces[nf];
      if (!f.is_bigon() && !f.is_rectangle()) odd.push_back(nf);
    }
    if (odd.size() == 1) {
      chosen = odd.front();
    } else {
      int best_corners = -1;
      for (const auto& [nf, c] : keep) {
        int nc = scratch.faces.faces[nf].n_corners();
        if (nc > best_corners) {
          best_corners = nc;
          chosen = nf;
        }
      }
    }
    out.push_back(keep.at(chosen));
  }
  return out;
}

// Reverses the orientation of one alpha-curve: a relabeling of the same
// geometric diagram (signs flip on the curve, quadrants swap A<->C, B<->D,
// and in/out dart ids swap at its crossings).
HeegaardDiagram reverse_alpha_curve(const HeegaardDiagram& d, int curve) {
  std::vector<std::vector<int>> alpha = d.map.alpha;
  std::reverse(alpha[curve].begin(), alpha[curve].end());
  std::vector<int> signs = d.map.sign;
  for (int c : d.map.alpha[curve]) signs[c] = -signs[c];
  auto flip = [&](Corner c) {
    if (d.map.alpha_curve_of[c.crossing] != curve) return c;
    switch (c.quadrant) {
      case Quadrant::A: c.quadrant = Quadrant::C; break;
      case Quadrant::C: c.quadrant = Quadrant::A; break;
      case Quadrant::B: c.quadrant = Quadrant::D; break;
      case Quadrant::D: c.quadrant = Quadrant::B; break;
    }
    return c;
  };
  std::vector<Corner> bps;
  for (const Corner& c : d.basepoints) bps.push_back(flip(c));
  std::vector<Tube> tubes;
  for (const Tube& t : d.tubes) tubes.push_back({flip(t.a), flip(t.b)});
  return make_diagram(d.name, build_map(alpha, d.map.beta, signs, false), std::move(bps),
                      std::move(tubes));
}

HeegaardDiagram finish_move(const HeegaardDiagram& before, const char* what,
                            std::vector<std::vector<int>> alpha,
                            std::vector<std::vector<int>> beta, std::vector<int> signs,
                            const SweptPredicate& swept = nullptr) {
  HeegaardDiagram scratch =
      make_diagram(before.name, build_map(alpha, beta, signs, false), before.basepoints,
                   before.tubes);
  std::vector<Corner> bps = reanchor_basepoints(before, scratch, swept);
  HeegaardDiagram out = make_diagram(before.name, std::move(scratch.map), std::move(bps),
                                     before.tubes);
  ValidationReport vr = validate(out);
  if (!vr.valid)
    throw PreconditionFailed(std::string(what) + " produced an invalid diagram: " +
                             vr.violations.front());
  NicenessReport nr = is_nice(out);
  if (!nr.is_nice)
    throw PreconditionFailed(std::string(what) + " produced a non-nice diagram");
  return out;
}

// Token stream splitting of a face boundary by non-crossing chords; returns
// corner counts of the resulting components. A chord endpoint on a beta edge
// leaves a corner on both sides of the finger; the endpoint at the start of
// the arc joins the isotoped alpha-curve smoothly and leaves none.
struct ChordSplitter {
  // tokens: -1 corner; otherwise 2*chord_id + weight (weight 1 = beta endpoint)
  std::vector<int> tokens;

  std::vector<int> component_corners() {
    std::vector<int> out;
    int n_chords = 0;
    for (int t : tokens) n_chords += t >= 0;
    n_chords /= 2;
    while (n_chords > 0) {
      int n = static_cast<int>(tokens.size());
      // find an innermost chord: forward walk from one endpoint meets its
      // partner before any other endpoint
      int cut_a = -1, cut_b = -1;
      for (int a = 0; a < n && cut_a < 0; ++a) {
        if (tokens[a] < 0) continue;
        for (int step = 1; step < n; ++step) {
          int b = (a + step) % n;
          if (tokens[b] < 0) continue;
          if (tokens[b] / 2 == tokens[a] / 2) {
            cut_a = a;
            cut_b = b;
          }
          break;
        }
      }
      if (cut_a < 0) throw PreconditionFailed("arc chords interleave (non-embeddable)");
      int w = tokens[cut_a] % 2 + tokens[cut_b] % 2;
      int corners = 0;
      for (int i = (cut_a + 1) % n; i != cut_b; i = (i + 1) % n) ++corners;
      out.push_back(corners + w);
      std::vector<int> rebuilt;
      for (int i = 0; i < w; ++i) rebuilt.push_back(-1);
      for (int i = (cut_b + 1) % n; i != cut_a; i = (i + 1) % n) rebuilt.push_back(tokens[i]);
      tokens = std::move(rebuilt);
      --n_chords;
    }
    int corners = 0;
    for (int t : tokens) corners += t < 0;
    out.push_back(corners);
    return out;
  }
};

}  // namespace

ArcCheck check_nice_arc(const HeegaardDiagram& d, const IsotopySpec& s) {
  if (s.family == CurveKind::Beta) {
    HeegaardDiagram t = transpose(d);
    IsotopySpec ts = s;
    ts.family = CurveKind::Alpha;
    ts.start_dart = s.start_dart ^ 2;
    for (int& p : ts.path) p ^= 2;
    return check_nice_arc(t, ts);
  }
  auto fail = [](std::string c) { return ArcCheck{false, std::move(c)}; };
  if (s.start_dart < 0 || s.start_dart >= d.map.n_darts() ||
      dart_kind(s.start_dart) != CurveKind::Alpha)
    return fail("start dart is not on an alpha-curve");
  if (s.path.empty()) return fail("empty path");

  int F0 = d.faces.face_of[s.start_dart];
  std::set<int> used_edges;
  std::vector<int> face_seq{F0};
  int cur = F0;
  for (int delta : s.path) {
    if (delta < 0 || delta >= d.map.n_darts()) return fail("path dart out of range");
    if (dart_kind(delta) != CurveKind::Beta) return fail("arc crosses an alpha-curve");
    if (d.faces.face_of[delta] != cur)
      return fail("path dart does not bound the current face");
    if (!used_edges.insert(edge_key(d.map, delta)).second)
      return fail("beta edge traversed more than once");
    cur = d.faces.face_of[d.map.iota(delta)];
    face_seq.push_back(cur);
  }
  int Fm = cur;
  const Face& end_face = d.faces.faces[Fm];
  if (!end_face.is_bigon() && !d.pointed(Fm)) return fail("end face");
  int D1 = d.faces.face_of[d.map.iota(s.start_dart)];
  if (!d.faces.faces[D1].is_bigon() && !d.pointed(D1)) return fail("D1");
  if (D1 == Fm && !d.pointed(D1)) return fail("D1 equals end face and is unpointed");

  // chords: (endpoint dart, endpoint dart) inside one face
  int m = static_cast<int>(s.path.size());
  std::map<int, std::vector<std::pair<int, int>>> chords_by_face;
  chords_by_face[F0].push_back({s.start_dart, s.path[0]});
  for (int i = 1; i < m; ++i)
    chords_by_face[face_seq[i]].push_back({d.map.iota(s.path[i - 1]), s.path[i]});

  for (const auto& [f, chords] : chords_by_face) {
    const Face& face = d.faces.faces[f];
    if (face.chi != 1) {
      // non-disk faces are pointed in a nice diagram; the finger is realized
      // away from the handles, so the handle-carrying component keeps the
      // basepoint. Cut-off disk pieces are re-verified by the post-hoc
      // niceness check of the applied move.
      if (d.pointed(f)) continue;
      return fail("arc chords a non-disk unpointed face");
    }
    std::map<int, int> endpoint_of_dart;  // boundary dart -> splitter token
    for (size_t ci = 0; ci < chords.size(); ++ci) {
      int a = chords[ci].first, b = chords[ci].second;
      endpoint_of_dart[a] = 2 * static_cast<int>(ci) + (a == s.start_dart ? 0 : 1);
      endpoint_of_dart[b] = 2 * static_cast<int>(ci) + (b == s.start_dart ? 0 : 1);
    }
    ChordSplitter split;
    for (size_t i = 0; i < face.boundary_darts.size(); ++i) {
      split.tokens.push_back(-1);  // corner i
      auto it = endpoint_of_dart.find(face.boundary_darts[i]);
      if (it != endpoint_of_dart.end()) split.tokens.push_back(it->second);
    }
    std::vector<int> comps;
    try {
      comps = split.component_corners();
    } catch (const PreconditionFailed&) {
      return fail("arc chords interleave");
    }
    int bad = 0;
    for (int c : comps)
      if (c != 2 && c != 4) ++bad;
    if (bad > 1) return fail("more than one non-bigon/rectangle component");
    if (bad == 1 && !d.pointed(f)) return fail("non-bigon/rectangle component unpointed");
  }
  return {true, ""};
}

HeegaardDiagram apply_isotopy(const HeegaardDiagram& d, const IsotopySpec& s) {
  if (s.family == CurveKind::Beta) {
    IsotopySpec ts = s;
    ts.family = CurveKind::Alpha;
    ts.start_dart = s.start_dart ^ 2;
    for (int& p : ts.path) p ^= 2;
    return transpose(apply_isotopy(transpose(d), ts));
  }
  if (s.start_dart >= 0 && s.start_dart < d.map.n_darts() &&
      dart_kind(s.start_dart) == CurveKind::Alpha && !dart_outgoing(s.start_dart)) {
    // normalize to an out-dart start by reversing the moving curve
    int cv = d.map.alpha_curve_of[dart_crossing(s.start_dart)];
    IsotopySpec fs = s;
    fs.start_dart = s.start_dart - 1;
    return reverse_alpha_curve(apply_isotopy(reverse_alpha_curve(d, cv), fs), cv);
  }
  ArcCheck chk = check_nice_arc(d, s);
  if (!chk.ok) throw PreconditionFailed("nice arc check failed: " + chk.clause);

  int n = d.map.n_crossings;
  int m = static_cast<int>(s.path.size());
  auto o_id = [&](int i) { return n + 2 * i; };
  auto r_id = [&](int i) { return n + 2 * i + 1; };

  std::vector<std::vector<int>> alpha = d.map.alpha, beta = d.map.beta;
  std::vector<int> signs = d.map.sign;
  signs.resize(n + 2 * m, 0);

  // alpha-curve detour at the start edge (out along the o side, back on r)
  {
    int c = dart_crossing(s.start_dart);
    std::vector<int> detour;
    for (int i = 0; i < m; ++i) detour.push_back(o_id(i));
    for (int i = m - 1; i >= 0; --i) detour.push_back(r_id(i));
    std::vector<int>& curve = alpha[d.map.alpha_curve_of[c]];
    int pos = d.map.alpha_pos_of[c];
    curve.insert(curve.begin() + pos + 1, detour.begin(), detour.end());
  }

  // beta-edge insertions; each traversed edge gets one (r,o) or (o,r) pair
  std::map<int, std::vector<int>> insert_after;  // edge out-dart -> new crossings
  for (int i = 0; i < m; ++i) {
    int delta = s.path[i];
    if (dart_outgoing(delta)) {
      insert_after[delta] = {r_id(i), o_id(i)};
      signs[o_id(i)] = 1;
      signs[r_id(i)] = -1;
    } else {
      insert_after[d.map.iota(delta)] = {o_id(i), r_id(i)};
      signs[o_id(i)] = -1;
      signs[r_id(i)] = 1;
    }
  }
  for (std::vector<int>& curve : beta) {
    std::vector<int> rebuilt;
    for (int c : curve) {
      rebuilt.push_back(c);
      auto it = insert_after.find(dart_beta_out(c));
      if (it != insert_after.end())
        rebuilt.insert(rebuilt.end(), it->second.begin(), it->second.end());
    }
    curve = std::move(rebuilt);
  }

  // pieces between the two finger tracks were swept clear of basepoints; they
  // are bounded by the tracks alone, so all their corners sit at new crossings
  auto swept = [n](const HeegaardDiagram&, const Face& f) {
    bool o_side = false, r_side = false;
    for (const Corner& c : f.corners) {
      if (c.crossing < n) return false;
      ((c.crossing - n) % 2 == 0 ? o_side : r_side) = true;
    }
    return o_side && r_side;
  };
  return finish_move(d, "isotopy", std::move(alpha), std::move(beta), std::move(signs),
                     swept);
}

HeegaardDiagram apply_handle_slide(const HeegaardDiagram& d, const HandleSlideSpec& s) {
  if (s.family == CurveKind::Beta) {
    HandleSlideSpec ts = s;
    ts.family = CurveKind::Alpha;
    ts.slide_dart = s.slide_dart ^ 2;
    HeegaardDiagram t = transpose(d);
    ts.rect = t.faces.face_of[ts.slide_dart];
    return transpose(apply_handle_slide(t, ts));
  }
  if (s.rect < 0 || s.rect >= d.n_faces()) throw PreconditionFailed("no such face");
  const Face& R = d.faces.faces[s.rect];
  if (!R.is_rectangle()) throw PreconditionFailed("slide face is not a rectangle");
  if (s.slide_dart < 0 || s.slide_dart >= d.map.n_darts() ||
      dart_kind(s.slide_dart) != CurveKind::Alpha ||
      d.faces.face_of[s.slide_dart] != s.rect)
    throw PreconditionFailed("slide dart is not an alpha side of the rectangle");
  int d2 = -1;
  for (int bd : R.boundary_darts)
    if (dart_kind(bd) == CurveKind::Alpha && bd != s.slide_dart) d2 = bd;
  if (d2 < 0) throw PreconditionFailed("rectangle lacks a second alpha side");
  int c1 = dart_crossing(s.slide_dart), c2 = dart_crossing(d2);
  if (d.map.alpha_curve_of[c1] == d.map.alpha_curve_of[c2])
    throw PreconditionFailed("both rectangle alpha sides lie on the same curve");
  int D1 = d.faces.face_of[d.map.iota(s.slide_dart)];
  if (!d.pointed(D1)) throw PreconditionFailed("face behind the slide arc is unpointed");

  // normalize both rectangle sides to out-darts by reversing their curves
  if (!dart_outgoing(s.slide_dart)) {
    int cv = d.map.alpha_curve_of[c1];
    HeegaardDiagram rd = reverse_alpha_curve(d, cv);
    HandleSlideSpec fs = s;
    fs.slide_dart = s.slide_dart - 1;
    fs.rect = rd.faces.face_of[fs.slide_dart];
    return reverse_alpha_curve(apply_handle_slide(rd, fs), cv);
  }
  if (!dart_outgoing(d2)) {
    int cv = d.map.alpha_curve_of[c2];
    HeegaardDiagram rd = reverse_alpha_curve(d, cv);
    HandleSlideSpec fs = s;
    fs.rect = rd.faces.face_of[fs.slide_dart];
    return reverse_alpha_curve(apply_handle_slide(rd, fs), cv);
  }

  int a2 = d.map.alpha_curve_of[c2];
  const std::vector<int>& curve2 = d.map.alpha[a2];
  int n2 = static_cast<int>(curve2.size());
  // copy traversal order x_0..x_{n2-1}, starting at the far end of d2's edge
  std::vector<int> xs;
  {
    int pos = d.map.alpha_pos_of[c2];
    for (int i = 1; i <= n2; ++i) xs.push_back(curve2[(pos + i) % n2]);
  }

  int n = d.map.n_crossings;
  std::vector<std::vector<int>> alpha = d.map.alpha, beta = d.map.beta;
  std::vector<int> signs = d.map.sign;
  signs.resize(n + n2, 0);

  std::map<int, std::vector<int>> before_c, after_c;  // beta insertions by anchor
  for (int i = 0; i < n2; ++i) {
    int x = xs[i];
    int f = n + i;
    int side_dart = d.map.sigma(dart_alpha_out(x));
    if (side_dart == dart_beta_out(x)) {
      after_c[x].push_back(f);
      signs[f] = 1;
    } else {
      before_c[x].push_back(f);
      signs[f] = -1;
    }
  }
  for (std::vector<int>& curve : beta) {
    std::vector<int> rebuilt;
    for (int c : curve) {
      if (auto it = before_c.find(c); it != before_c.end())
        rebuilt.insert(rebuilt.end(), it->second.begin(), it->second.end());
      rebuilt.push_back(c);
      if (auto it = after_c.find(c); it != after_c.end())
        rebuilt.insert(rebuilt.end(), it->second.begin(), it->second.end());
    }
    curve = std::move(rebuilt);
  }

  // splice the parallel copy into the sliding curve
  {
    std::vector<int> splice;
    for (int i = 0; i < n2; ++i) splice.push_back(n + i);
    std::vector<int>& curve = alpha[d.map.alpha_curve_of[c1]];
    int pos = d.map.alpha_pos_of[c1];
    curve.insert(curve.begin() + pos + 1, splice.begin(), splice.end());
  }

  // strips between the slid-over curve and its parallel copy were swept clear;
  // they are bounded by those two curves alone
  std::set<int> curve2_set(curve2.begin(), curve2.end());
  auto swept = [n, curve2_set](const HeegaardDiagram&, const Face& f) {
    bool old_side = false, copy_side = false;
    for (const Corner& c : f.corners) {
      if (c.crossing >= n) copy_side = true;
      else if (curve2_set.count(c.crossing)) old_side = true;
      else return false;
    }
    return old_side && copy_side;
  };
  return finish_move(d, "handle slide", std::move(alpha), std::move(beta),
                     std::move(signs), swept);
}

HeegaardDiagram apply_stab_b(const HeegaardDiagram& d, int face) {
  HeegaardDiagram out = connected_sum(d, make_s3_sphere(), face, 0);
  out.name = d.name;
  return out;
}

HeegaardDiagram apply_stab_g(const HeegaardDiagram& d, int face) {
  HeegaardDiagram out = connected_sum(d, make_s3_torus(), face, 0);
  out.name = d.name;
  return out;
}

namespace {

HeegaardDiagram remove_component(const HeegaardDiagram& d, int p, int q, int alpha_idx,
                                 int beta_idx, int drop_tube, int drop_basepoint) {
  auto renumber = [&](int c) { return c - (c > p) - (q >= 0 && c > q); };
  std::vector<std::vector<int>> alpha, beta;
  for (size_t i = 0; i < d.map.alpha.size(); ++i) {
    if (static_cast<int>(i) == alpha_idx) continue;
    std::vector<int> seq;
    for (int c : d.map.alpha[i]) seq.push_back(renumber(c));
    alpha.push_back(std::move(seq));
  }
  for (size_t i = 0; i < d.map.beta.size(); ++i) {
    if (static_cast<int>(i) == beta_idx) continue;
    std::vector<int> seq;
    for (int c : d.map.beta[i]) seq.push_back(renumber(c));
    beta.push_back(std::move(seq));
  }
  std::vector<int> signs;
  for (int c = 0; c < d.map.n_crossings; ++c)
    if (c != p && c != q) signs.push_back(d.map.sign[c]);
  std::vector<Corner> bps;
  for (size_t i = 0; i < d.basepoints.size(); ++i) {
    if (static_cast<int>(i) == drop_basepoint) continue;
    Corner c = d.basepoints[i];
    c.crossing = renumber(c.crossing);
    bps.push_back(c);
  }
  std::vector<Tube> tubes;
  for (size_t i = 0; i < d.tubes.size(); ++i) {
    if (static_cast<int>(i) == drop_tube) continue;
    Tube t = d.tubes[i];
    t.a.crossing = renumber(t.a.crossing);
    t.b.crossing = renumber(t.b.crossing);
    tubes.push_back(t);
  }
  return make_diagram(d.name, build_map(alpha, beta, signs, false), std::move(bps),
                      std::move(tubes));
}

}  // namespace

std::optional<HeegaardDiagram> try_destab_b(const HeegaardDiagram& d) {
  for (size_t ai = 0; ai < d.map.alpha.size(); ++ai) {
    const std::vector<int>& a = d.map.alpha[ai];
    if (a.size() != 2) continue;
    int p = std::min(a[0], a[1]), q = std::max(a[0], a[1]);
    if (q != p + 1) continue;
    if (!(d.map.sign[p] == 1 && d.map.sign[q] == -1)) continue;
    int bi = d.map.beta_curve_of[p];
    std::set<int> bset(d.map.beta[bi].begin(), d.map.beta[bi].end());
    if (bset != std::set<int>{p, q}) continue;
    int tube = -1, bp = -1;
    bool clean = true;
    for (size_t t = 0; t < d.tubes.size(); ++t) {
      bool touches = d.tubes[t].a.crossing == p || d.tubes[t].a.crossing == q ||
                     d.tubes[t].b.crossing == p || d.tubes[t].b.crossing == q;
      if (!touches) continue;
      if (tube >= 0) clean = false;
      tube = static_cast<int>(t);
    }
    for (size_t i = 0; i < d.basepoints.size(); ++i) {
      if (d.basepoints[i].crossing != p && d.basepoints[i].crossing != q) continue;
      if (bp >= 0) clean = false;
      bp = static_cast<int>(i);
    }
    if (!clean || tube < 0 || bp < 0) continue;
    return remove_component(d, p, q, static_cast<int>(ai), bi, tube, bp);
  }
  return std::nullopt;
}

std::optional<HeegaardDiagram> try_destab_g(const HeegaardDiagram& d) {
  for (size_t ai = 0; ai < d.map.alpha.size(); ++ai) {
    const std::vector<int>& a = d.map.alpha[ai];
    if (a.size() != 1) continue;
    int p = a[0];
    if (d.map.sign[p] != 1) continue;
    int bi = d.map.beta_curve_of[p];
    if (d.map.beta[bi].size() != 1) continue;
    int tube = -1;
    bool clean = true;
    for (size_t t = 0; t < d.tubes.size(); ++t) {
      bool touches = d.tubes[t].a.crossing == p || d.tubes[t].b.crossing == p;
      if (!touches) continue;
      if (tube >= 0) clean = false;
      tube = static_cast<int>(t);
    }
    for (const Corner& c : d.basepoints)
      if (c.crossing == p) clean = false;
    if (!clean || tube < 0) continue;
    return remove_component(d, p, -1, static_cast<int>(ai), bi, tube, -1);
  }
  return std::nullopt;
}

HeegaardDiagram transpose(const HeegaardDiagram& d) {
  std::vector<int> signs = d.map.sign;
  for (int& s : signs) s = -s;
  CombinatorialMap m = build_map(d.map.beta, d.map.alpha, signs, false);
  auto translate = [&](Corner c) {
    int old_dart = d.map.quadrant_dart(c);
    return Corner{c.crossing, quadrant_of_dart(m, old_dart ^ 2)};
  };
  std::vector<Corner> bps;
  for (const Corner& c : d.basepoints) bps.push_back(translate(c));
  std::vector<Tube> tubes;
  for (const Tube& t : d.tubes) tubes.push_back({translate(t.a), translate(t.b)});
  return make_diagram(d.name, std::move(m), std::move(bps), std::move(tubes));
}

HeegaardDiagram apply_move_script(const HeegaardDiagram& d, const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(e.what());
  }
  if (!j.is_array()) throw SchemaError("move script must be a JSON array");
  HeegaardDiagram cur = d;
  for (const nlohmann::json& mv : j) {
    if (!mv.is_object() || !mv.contains("type") || !mv["type"].is_string())
      throw SchemaError("each move must be an object with a \"type\"");
    std::string type = mv["type"].get<std::string>();
    auto family = [&] {
      if (!mv.contains("family")) return CurveKind::Alpha;
      std::string f = mv["family"].get<std::string>();
      if (f == "alpha") return CurveKind::Alpha;
      if (f == "beta") return CurveKind::Beta;
      throw SchemaError("family must be \"alpha\" or \"beta\"");
    };
    if (type == "isotopy") {
      IsotopySpec s;
      s.family = family();
      s.start_dart = mv.at("start").get<int>();
      for (const auto& p : mv.at("path")) s.path.push_back(p.get<int>());
      cur = apply_isotopy(cur, s);
    } else if (type == "handle_slide") {
      HandleSlideSpec s;
      s.family = family();
      s.rect = mv.at("rect").get<int>();
      s.slide_dart = mv.at("slide_dart").get<int>();
      cur = apply_handle_slide(cur, s);
    } else if (type == "stab_b") {
      cur = apply_stab_b(cur, mv.at("face").get<int>());
    } else if (type == "stab_g") {
      cur = apply_stab_g(cur, mv.at("face").get<int>());
    } else if (type == "destab_b") {
      auto r = try_destab_b(cur);
      if (!r) throw PreconditionFailed("no destabilizable type-b pattern");
      cur = *r;
    } else if (type == "destab_g") {
      auto r = try_destab_g(cur);
      if (!r) throw PreconditionFailed("no destabilizable type-g pattern");
      cur = *r;
    } else {
      throw SchemaError("unknown move type \"" + type + "\"");
    }
  }
  return cur;
}

FuzzReport fuzz_invariance(const HeegaardDiagram& d, int n_moves, uint64_t seed) {
  FuzzReport report;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  HeegaardDiagram cur = d;
  Differential df = differential(cur);
  long long dim = homology(cur, df).total_dim;
  report.initial = {dim, cur.b()};

  auto rand_int = [&](int n) { return static_cast<int>(rng() % n); };

  for (int step = 0; step < n_moves; ++step) {
    std::string type, detail;
    HeegaardDiagram next = cur;
    bool applied = false;
    for (int attempt = 0; attempt < 60 && !applied; ++attempt) {
      int kind = rand_int(10);
      try {
        if (kind < 5) {
          IsotopySpec s;
          s.family = rng() % 2 ? CurveKind::Alpha : CurveKind::Beta;
          HeegaardDiagram probe = s.family == CurveKind::Alpha ? cur : transpose(cur);
          int dart = rand_int(probe.map.n_darts());
          if (dart_kind(dart) != CurveKind::Alpha) continue;
          int len = 1 + rand_int(3);
          IsotopySpec ps{CurveKind::Alpha, dart, {}};
          int face = probe.faces.face_of[dart];
          for (int i = 0; i < len; ++i) {
            std::vector<int> betas;
            for (int bd : probe.faces.faces[face].boundary_darts)
              if (dart_kind(bd) == CurveKind::Beta) betas.push_back(bd);
            if (betas.empty()) break;
            int pick = betas[rand_int(static_cast<int>(betas.size()))];
            ps.path.push_back(pick);
            face = probe.faces.face_of[probe.map.iota(pick)];
          }
          if (ps.path.empty()) continue;
          if (!check_nice_arc(probe, ps).ok) continue;
          s.start_dart = s.family == CurveKind::Alpha ? ps.start_dart : ps.start_dart ^ 2;
          s.path = ps.path;
          if (s.family == CurveKind::Beta)
            for (int& p : s.path) p ^= 2;
          next = apply_isotopy(cur, s);
          type = "isotopy";
          detail = (s.family == CurveKind::Alpha ? "alpha" : "beta") +
                   std::string(" start=") + std::to_string(s.start_dart) +
                   " len=" + std::to_string(s.path.size());
          applied = true;
        } else if (kind < 7) {
          CurveKind fam = rng() % 2 ? CurveKind::Alpha : CurveKind::Beta;
          HeegaardDiagram probe = fam == CurveKind::Alpha ? cur : transpose(cur);
          std::vector<std::pair<int, int>> cands;
          for (const Face& f : probe.faces.faces) {
            if (!f.is_rectangle()) continue;
            std::vector<int> adarts;
            for (int bd : f.boundary_darts)
              if (dart_kind(bd) == CurveKind::Alpha) adarts.push_back(bd);
            if (adarts.size() != 2) continue;
            if (probe.map.alpha_curve_of[dart_crossing(adarts[0])] ==
                probe.map.alpha_curve_of[dart_crossing(adarts[1])])
              continue;
            for (int ad : adarts)
              if (probe.pointed(probe.faces.face_of[probe.map.iota(ad)]))
                cands.push_back({f.id, ad});
          }
          if (cands.empty()) continue;
          auto [rect, ad] = cands[rand_int(static_cast<int>(cands.size()))];
          // for the beta family the rect id is recomputed after transposing
          HandleSlideSpec s{fam, rect, fam == CurveKind::Alpha ? ad : ad ^ 2};
          next = apply_handle_slide(cur, s);
          type = "handle_slide";
          detail = (fam == CurveKind::Alpha ? "alpha" : "beta") +
                   std::string(" rect=") + std::to_string(rect);
          applied = true;
        } else if (kind < 9) {
          int bp = rand_int(cur.b());
          next = apply_stab_g(cur, cur.basepoint_face[bp]);
          type = "stab_g";
          detail = "face=" + std::to_string(cur.basepoint_face[bp]);
          applied = true;
        } else {
          if (dim > 64) continue;  // keep the complex small
          int bp = rand_int(cur.b());
          next = apply_stab_b(cur, cur.basepoint_face[bp]);
          type = "stab_b";
          detail = "face=" + std::to_string(cur.basepoint_face[bp]);
          applied = true;
        }
      } catch (const PreconditionFailed&) {
        applied = false;
      }
    }
    if (!applied) {
      // stab_g at a pointed face is always available
      next = apply_stab_g(cur, cur.basepoint_face[0]);
      type = "stab_g";
      detail = "fallback";
    }

    Differential ndf = differential(next);
    long long ndim = homology(next, ndf).total_dim;
    long long expect = type == "stab_b" ? 2 * dim : dim;
    report.trace.push_back({type, detail, ndim});
    if (!verify_d_squared(ndf).ok || ndim != expect ||
        !stable_equal(report.initial, StableClass{ndim, next.b()})) {
      report.ok = false;
      std::ostringstream os;
      os << "move " << step << " (" << type << " " << detail << "): dim " << dim
         << " -> " << ndim << ", expected " << expect;
      report.violation = os.str();
      report.final_class = {ndim, next.b()};
      return report;
    }
    cur = std::move(next);
    dim = ndim;
  }
  report.final_class = {dim, cur.b()};
  return report;
}

}  // namespace hf
