#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hf/complex.hpp"

namespace hf {

// Finger move: the arc starts on the start dart's edge and pushes into the face
// on its left; each path entry is a dart of the other family whose left face is
// the face the arc currently occupies (the arc crosses that edge).
struct IsotopySpec {
  CurveKind family = CurveKind::Alpha;  // family being isotoped
  int start_dart = 0;
  std::vector<int> path;
};

struct HandleSlideSpec {
  CurveKind family = CurveKind::Alpha;
  int rect = 0;        // elementary rectangle containing the slide arc
  int slide_dart = 0;  // boundary dart of rect on the curve that slides
};

struct ArcCheck {
  bool ok = true;
  std::string clause;
};

ArcCheck check_nice_arc(const HeegaardDiagram& d, const IsotopySpec& s);

HeegaardDiagram apply_isotopy(const HeegaardDiagram& d, const IsotopySpec& s);
HeegaardDiagram apply_handle_slide(const HeegaardDiagram& d, const HandleSlideSpec& s);
HeegaardDiagram apply_stab_b(const HeegaardDiagram& d, int face);
HeegaardDiagram apply_stab_g(const HeegaardDiagram& d, int face);

// Inverse rewrites, by exact pattern recognition of our stabilization shapes.
std::optional<HeegaardDiagram> try_destab_b(const HeegaardDiagram& d);
std::optional<HeegaardDiagram> try_destab_g(const HeegaardDiagram& d);

// Swaps the alpha and beta families (flipping all crossing signs); an
// involution used to run beta-family moves through the alpha-family code.
HeegaardDiagram transpose(const HeegaardDiagram& d);

// Applies a JSON move script (list of move records) to the diagram.
HeegaardDiagram apply_move_script(const HeegaardDiagram& d, const std::string& json_text);

struct MoveRecord {
  std::string type;
  std::string detail;
  long long dim_after = 0;
};

struct FuzzReport {
  bool ok = true;
  uint64_t seed = 0;
  std::vector<MoveRecord> trace;
  StableClass initial, final_class;
  std::string violation;
};

FuzzReport fuzz_invariance(const HeegaardDiagram& d, int n_moves, uint64_t seed);

}  // namespace hf
