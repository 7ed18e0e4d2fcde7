#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hf/errors.hpp"

namespace hf {

// Darts are edge-ends. Every crossing c owns four of them, densely packed:
//   4c+0 alpha-out, 4c+1 alpha-in, 4c+2 beta-out, 4c+3 beta-in.
// "out" points along the curve's orientation, "in" arrives with it.
enum class CurveKind { Alpha, Beta };

inline int dart_alpha_out(int c) { return 4 * c; }
inline int dart_alpha_in(int c) { return 4 * c + 1; }
inline int dart_beta_out(int c) { return 4 * c + 2; }
inline int dart_beta_in(int c) { return 4 * c + 3; }
inline int dart_crossing(int d) { return d / 4; }
inline CurveKind dart_kind(int d) { return (d % 4) < 2 ? CurveKind::Alpha : CurveKind::Beta; }
inline bool dart_outgoing(int d) { return d % 2 == 0; }

// Quadrants at a crossing, labelled per the corner equations: A and C are the
// sectors whose first counterclockwise dart is alpha-out resp. alpha-in; B and
// D are the sectors ending there. At a +1 crossing the counterclockwise dart
// order is (a-out, b-out, a-in, b-in); a -1 crossing swaps b-out and b-in.
enum class Quadrant : uint8_t { A, B, C, D };

const char* quadrant_name(Quadrant q);
Quadrant quadrant_from_name(const std::string& s);

struct Corner {
  int crossing = 0;
  Quadrant quadrant = Quadrant::A;
  friend bool operator==(const Corner&, const Corner&) = default;
  friend auto operator<=>(const Corner&, const Corner&) = default;
};

struct CombinatorialMap {
  int n_crossings = 0;
  std::vector<std::vector<int>> alpha;  // cyclic crossing sequences
  std::vector<std::vector<int>> beta;
  std::vector<int> sign;       // per crossing, +1 or -1
  std::vector<int> rotation;   // sigma: next dart counterclockwise at the crossing
  std::vector<int> rotation_inv;
  std::vector<int> involution; // iota: other end of the same edge

  int n_darts() const { return 4 * n_crossings; }
  int sigma(int d) const { return rotation[d]; }
  int sigma_inv(int d) const { return rotation_inv[d]; }
  int iota(int d) const { return involution[d]; }

  // crossing -> (curve index, position within its cyclic sequence)
  std::vector<int> alpha_curve_of, alpha_pos_of;
  std::vector<int> beta_curve_of, beta_pos_of;

  // The dart identifying quadrant (c,q): the sector between it and sigma of it.
  int quadrant_dart(const Corner& corner) const;

  // Connected components of the 4-valent graph, per crossing. Disjoint curve
  // systems (e.g. connected-sum summands) yield several.
  std::vector<int> crossing_components(int* n_components = nullptr) const;
};

// A face of the traced map. Plain trace orbits are disks (chi = 1); diagrams
// may merge several orbits through tubes, lowering chi by 2 per tube.
struct Face {
  int id = 0;
  std::vector<int> boundary_darts;  // concatenated orbit cycles
  std::vector<int> orbit_starts;    // index into boundary_darts, one per orbit
  std::vector<Corner> corners;      // with multiplicity, aligned to boundary_darts
  int chi = 1;

  int n_orbits() const { return static_cast<int>(orbit_starts.size()); }
  int n_corners() const { return static_cast<int>(corners.size()); }
  bool is_bigon() const { return chi == 1 && n_corners() == 2; }
  bool is_rectangle() const { return chi == 1 && n_corners() == 4; }
};

struct FaceSet {
  std::vector<Face> faces;
  std::vector<int> face_of;  // dart -> face id

  int face_of_corner(const CombinatorialMap& m, const Corner& c) const {
    return face_of[m.quadrant_dart(c)];
  }
};

// Builds darts, sigma and iota from cyclic crossing sequences. Every crossing
// must occur exactly once on one alpha and one beta sequence.
CombinatorialMap build_map(const std::vector<std::vector<int>>& alpha_curves,
                           const std::vector<std::vector<int>>& beta_curves,
                           const std::vector<int>& signs,
                           bool require_connected = true);

// Orbits of the face permutation sigma^{-1} o iota; each face lies to the left
// of its directed boundary darts. Ids are assigned lowest-dart-first.
FaceSet trace_faces(const CombinatorialMap& m);

int genus(const CombinatorialMap& m);

// The quadrant whose identifying dart is d (inverse of quadrant_dart).
Quadrant quadrant_of_dart(const CombinatorialMap& m, int d);

// Partition of faces into components of Sigma minus the given curve family
// (faces merged across every edge of the other kind). Returns component id per
// face id, components numbered by lowest face.
std::vector<int> curve_complement_components(const CombinatorialMap& m,
                                             const FaceSet& faces, CurveKind kind,
                                             int* n_components = nullptr);

}  // namespace hf
