#include "hf/surface.hpp"

#include <algorithm>
#include <numeric>

namespace hf {

const char* quadrant_name(Quadrant q) {
  switch (q) {
    case Quadrant::A: return "A";
    case Quadrant::B: return "B";
    case Quadrant::C: return "C";
    case Quadrant::D: return "D";
  }
  return "?";
}

Quadrant quadrant_from_name(const std::string& s) {
  if (s == "A") return Quadrant::A;
  if (s == "B") return Quadrant::B;
  if (s == "C") return Quadrant::C;
  if (s == "D") return Quadrant::D;
  throw SchemaError("bad quadrant name '" + s + "'");
}

int CombinatorialMap::quadrant_dart(const Corner& corner) const {
  int c = corner.crossing;
  switch (corner.quadrant) {
    case Quadrant::A: return dart_alpha_out(c);
    case Quadrant::C: return dart_alpha_in(c);
    case Quadrant::B: return rotation_inv[dart_alpha_out(c)];
    case Quadrant::D: return rotation_inv[dart_alpha_in(c)];
  }
  return -1;
}

Quadrant quadrant_of_dart(const CombinatorialMap& m, int d) {
  int c = dart_crossing(d);
  if (d == dart_alpha_out(c)) return Quadrant::A;
  if (d == dart_alpha_in(c)) return Quadrant::C;
  if (m.rotation[d] == dart_alpha_out(c)) return Quadrant::B;
  return Quadrant::D;
}

std::vector<int> CombinatorialMap::crossing_components(int* n_components) const {
  std::vector<int> comp(n_crossings, -1);
  int next = 0;
  for (int seed = 0; seed < n_crossings; ++seed) {
    if (comp[seed] >= 0) continue;
    std::vector<int> stack{seed};
    comp[seed] = next;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int i = 0; i < 4; ++i) {
        int nb = dart_crossing(involution[4 * c + i]);
        if (comp[nb] < 0) {
          comp[nb] = next;
          stack.push_back(nb);
        }
      }
    }
    ++next;
  }
  if (n_components) *n_components = next;
  return comp;
}

CombinatorialMap build_map(const std::vector<std::vector<int>>& alpha_curves,
                           const std::vector<std::vector<int>>& beta_curves,
                           const std::vector<int>& signs, bool require_connected) {
  CombinatorialMap m;
  m.alpha = alpha_curves;
  m.beta = beta_curves;
  m.sign = signs;

  if (alpha_curves.empty() || beta_curves.empty())
    throw MissingCrossing("curve families must be nonempty");
  size_t total = 0;
  for (const auto& a : alpha_curves) total += a.size();
  m.n_crossings = static_cast<int>(total);
  if (signs.size() != total)
    throw SchemaError("expected " + std::to_string(total) + " signs, got " +
                      std::to_string(signs.size()));
  for (size_t i = 0; i < signs.size(); ++i)
    if (signs[i] != 1 && signs[i] != -1)
      throw SchemaError("sign of crossing " + std::to_string(i) + " must be +1 or -1");

  auto index_curves = [&](const std::vector<std::vector<int>>& curves,
                          std::vector<int>& curve_of, std::vector<int>& pos_of,
                          const char* kind) {
    curve_of.assign(m.n_crossings, -1);
    pos_of.assign(m.n_crossings, -1);
    for (size_t k = 0; k < curves.size(); ++k) {
      if (curves[k].empty())
        throw SchemaError(std::string(kind) + " curve " + std::to_string(k) + " is empty");
      for (size_t i = 0; i < curves[k].size(); ++i) {
        int c = curves[k][i];
        if (c < 0 || c >= m.n_crossings)
          throw MissingCrossing(std::string(kind) + " curve " + std::to_string(k) +
                                " references crossing " + std::to_string(c) +
                                " outside 0.." + std::to_string(m.n_crossings - 1));
        if (curve_of[c] >= 0)
          throw DuplicateCrossing("crossing " + std::to_string(c) + " occurs twice on " +
                                  kind + " curves");
        curve_of[c] = static_cast<int>(k);
        pos_of[c] = static_cast<int>(i);
      }
    }
    for (int c = 0; c < m.n_crossings; ++c)
      if (curve_of[c] < 0)
        throw MissingCrossing("crossing " + std::to_string(c) + " missing from " + kind +
                              " curves");
  };
  index_curves(alpha_curves, m.alpha_curve_of, m.alpha_pos_of, "alpha");
  index_curves(beta_curves, m.beta_curve_of, m.beta_pos_of, "beta");

  m.rotation.assign(m.n_darts(), -1);
  m.rotation_inv.assign(m.n_darts(), -1);
  m.involution.assign(m.n_darts(), -1);
  for (int c = 0; c < m.n_crossings; ++c) {
    int ao = dart_alpha_out(c), ai = dart_alpha_in(c);
    int bo = dart_beta_out(c), bi = dart_beta_in(c);
    if (m.sign[c] == 1) {
      m.rotation[ao] = bo; m.rotation[bo] = ai;
      m.rotation[ai] = bi; m.rotation[bi] = ao;
    } else {
      m.rotation[ao] = bi; m.rotation[bi] = ai;
      m.rotation[ai] = bo; m.rotation[bo] = ao;
    }
  }
  for (int d = 0; d < m.n_darts(); ++d) m.rotation_inv[m.rotation[d]] = d;

  auto wire = [&](const std::vector<std::vector<int>>& curves, auto out, auto in) {
    for (const auto& seq : curves)
      for (size_t i = 0; i < seq.size(); ++i) {
        int a = seq[i], b = seq[(i + 1) % seq.size()];
        m.involution[out(a)] = in(b);
        m.involution[in(b)] = out(a);
      }
  };
  wire(alpha_curves, dart_alpha_out, dart_alpha_in);
  wire(beta_curves, dart_beta_out, dart_beta_in);

  if (require_connected && m.n_crossings > 0) {
    int ncomp = 0;
    m.crossing_components(&ncomp);
    if (ncomp != 1)
      throw DisconnectedMap("map has " + std::to_string(ncomp) + " components");
  }
  return m;
}

FaceSet trace_faces(const CombinatorialMap& m) {
  FaceSet fs;
  fs.face_of.assign(m.n_darts(), -1);
  for (int seed = 0; seed < m.n_darts(); ++seed) {
    if (fs.face_of[seed] >= 0) continue;
    Face f;
    f.id = static_cast<int>(fs.faces.size());
    f.orbit_starts.push_back(0);
    int d = seed;
    do {
      fs.face_of[d] = f.id;
      f.boundary_darts.push_back(d);
      f.corners.push_back({dart_crossing(d), quadrant_of_dart(m, d)});
      d = m.sigma_inv(m.iota(d));
    } while (d != seed);
    fs.faces.push_back(std::move(f));
  }
  return fs;
}

int genus(const CombinatorialMap& m) {
  int ncomp = 0;
  m.crossing_components(&ncomp);
  if (ncomp != 1) throw DisconnectedMap("genus requires a connected map");
  int chi = m.n_crossings - 2 * m.n_crossings + static_cast<int>(trace_faces(m).faces.size());
  if ((2 - chi) % 2 != 0) throw NonIntegerGenus("Euler characteristic " + std::to_string(chi));
  return (2 - chi) / 2;
}

std::vector<int> curve_complement_components(const CombinatorialMap& m, const FaceSet& faces,
                                             CurveKind kind, int* n_components) {
  int n = static_cast<int>(faces.faces.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // Cutting along `kind` leaves the edges of the other family interior.
  for (int d = 0; d < m.n_darts(); ++d) {
    if (dart_kind(d) == kind || !dart_outgoing(d)) continue;
    int a = find(faces.face_of[d]), b = find(faces.face_of[m.iota(d)]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> comp(n), renumber(n, -1);
  int next = 0;
  for (int f = 0; f < n; ++f) {
    int r = find(f);
    if (renumber[r] < 0) renumber[r] = next++;
    comp[f] = renumber[r];
  }
  if (n_components) *n_components = next;
  return comp;
}

}  // namespace hf
