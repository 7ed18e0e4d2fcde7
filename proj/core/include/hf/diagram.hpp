#pragma once

#include <string>
#include <vector>

#include "hf/surface.hpp"

namespace hf {

// A tube glues two trace orbits (or one orbit to itself) into a single face,
// dropping its Euler characteristic by 2. The anchors name the orbits by one
// of their corners. This is how annular regions (connected sums, S^1 x S^2)
// are represented while keeping the 4-valent map itself unchanged.
struct Tube {
  Corner a, b;
  friend bool operator==(const Tube&, const Tube&) = default;
};

struct HeegaardDiagram {
  std::string name;
  CombinatorialMap map;
  std::vector<Corner> basepoints;  // corner anchors; the containing face is pointed
  std::vector<Tube> tubes;

  // Derived on construction (make_diagram).
  FaceSet faces;                    // tube-merged
  std::vector<int> basepoint_face;  // basepoint index -> face id
  std::vector<int> face_basepoint;  // face id -> basepoint index, or -1 (first wins)
  int g = 0;

  int k() const { return static_cast<int>(map.alpha.size()); }
  int b() const { return static_cast<int>(basepoints.size()); }
  int n_faces() const { return static_cast<int>(faces.faces.size()); }
  bool pointed(int face) const { return face_basepoint[face] >= 0; }
};

// Merges tube orbits, checks connectivity (through tubes) and integral genus.
HeegaardDiagram make_diagram(std::string name, CombinatorialMap map,
                             std::vector<Corner> basepoints, std::vector<Tube> tubes = {});

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

ValidationReport validate(const HeegaardDiagram& d);

struct NicenessOffender {
  int face = 0;
  int corners = 0;
  bool has_basepoint = false;
};

struct NicenessReport {
  bool is_nice = true;
  std::vector<NicenessOffender> offenders;
};

NicenessReport is_nice(const HeegaardDiagram& d);

struct CurveSides {
  CurveKind kind = CurveKind::Alpha;
  int curve = 0;
  std::vector<int> left_pointed, right_pointed;  // pointed faces touching each side
};

// Sanity check: every curve of a valid nice diagram has a pointed elementary
// domain on both of its sides.
std::vector<CurveSides> basepoints_both_sides(const HeegaardDiagram& d);

HeegaardDiagram make_s3_sphere();
HeegaardDiagram make_s3_torus();
HeegaardDiagram make_s1s2();
HeegaardDiagram make_lens(int p, int q);

// Boundary connected sum merging two pointed faces into one pointed face
// (a tube); d2's crossings are shifted past d1's.
HeegaardDiagram connected_sum(const HeegaardDiagram& d1, const HeegaardDiagram& d2,
                              int face1, int face2);

HeegaardDiagram parse(const std::string& text);
std::string serialize(const HeegaardDiagram& d);

// Canonical form: curves rotated to start at their smallest crossing and
// sorted by it. Applied by serialize; exposed for equality checks.
HeegaardDiagram canonicalize(const HeegaardDiagram& d);

bool same_diagram(const HeegaardDiagram& a, const HeegaardDiagram& b);

}  // namespace hf
