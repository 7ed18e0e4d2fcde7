#include "hf/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace hf {

std::vector<Domain> brute_force_polygons(const HeegaardDiagram& d, const Generator& x,
                                         const Generator& y, int max_faces) {
  std::vector<int> free_faces;
  for (int f = 0; f < d.n_faces(); ++f)
    if (!d.pointed(f)) free_faces.push_back(f);
  if (static_cast<int>(free_faces.size()) > max_faces)
    throw TooLarge(std::to_string(free_faces.size()) + " unpointed faces exceeds cap " +
                   std::to_string(max_faces));

  IMat A = corner_matrix(d);
  ivec rhs(d.map.n_crossings, 0);
  for (int c : y.coords) rhs[c] += 1;
  for (int c : x.coords) rhs[c] -= 1;

  std::vector<Domain> out;
  int m = static_cast<int>(free_faces.size());
  for (uint64_t bits = 0; bits < (uint64_t(1) << m); ++bits) {
    Domain D{ivec(d.n_faces(), 0)};
    for (int i = 0; i < m; ++i)
      if (bits >> i & 1) D.mult[free_faces[i]] = 1;
    bool ok = true;
    for (int c = 0; c < d.map.n_crossings && ok; ++c) {
      long long s = 0;
      for (int f = 0; f < d.n_faces(); ++f) s += A.at(c, f) * D.mult[f];
      ok = s == rhs[c];
    }
    if (ok && maslov4(d, D, x, y) == 4) out.push_back(std::move(D));
  }
  std::sort(out.begin(), out.end(),
            [](const Domain& a, const Domain& b) { return a.mult < b.mult; });
  return out;
}

namespace {

struct Side {  // directed boundary side of one sheet
  int face, pos, level;  // pos indexes into the face's boundary_darts
  friend bool operator<(const Side& a, const Side& b) {
    return std::tie(a.face, a.pos, a.level) < std::tie(b.face, b.pos, b.level);
  }
  friend bool operator==(const Side& a, const Side& b) {
    return std::tie(a.face, a.pos, a.level) == std::tie(b.face, b.pos, b.level);
  }
};

}  // namespace

TiledSurface build_surface(const HeegaardDiagram& d, const Domain& D, const Generator& x,
                           const Generator& y) {
  for (long long m : D.mult)
    if (m < 0) throw PreconditionFailed("domain has a negative multiplicity");
  if (basepoint_multiplicities(d, D).total != 0)
    throw PreconditionFailed("domain covers a basepoint");
  for (int c : x.coords) {
    long long s4 = 0;
    for (Quadrant q : {Quadrant::A, Quadrant::B, Quadrant::C, Quadrant::D})
      s4 += D.mult[d.faces.face_of_corner(d.map, {c, q})];
    if (s4 >= 4) throw PreconditionFailed("point measure >= 1 at a coordinate");
  }
  for (int c : y.coords) {
    long long s4 = 0;
    for (Quadrant q : {Quadrant::A, Quadrant::B, Quadrant::C, Quadrant::D})
      s4 += D.mult[d.faces.face_of_corner(d.map, {c, q})];
    if (s4 >= 4) throw PreconditionFailed("point measure >= 1 at a coordinate");
  }
  for (int f = 0; f < d.n_faces(); ++f)
    if (D.mult[f] > 0 && d.faces.faces[f].chi != 1)
      throw PreconditionFailed("support contains a non-disk elementary domain");

  TiledSurface S;
  // directed sides, keyed for union-find over vertices and for gluing lookup
  std::map<Side, Side> glued;  // side -> partner (both directions present)
  std::vector<Side> sides;
  for (int f = 0; f < d.n_faces(); ++f) {
    S.n_sheets += static_cast<int>(D.mult[f]);
    for (int lvl = 1; lvl <= D.mult[f]; ++lvl)
      for (size_t p = 0; p < d.faces.faces[f].boundary_darts.size(); ++p)
        sides.push_back({f, static_cast<int>(p), lvl});
  }
  // glue along each map edge (every edge is an elementary arc)
  std::map<std::pair<int, int>, std::pair<int, int>> slot_of;  // (face,dart)->pos
  for (int f = 0; f < d.n_faces(); ++f)
    for (size_t p = 0; p < d.faces.faces[f].boundary_darts.size(); ++p)
      slot_of[{f, d.faces.faces[f].boundary_darts[p]}] = {f, static_cast<int>(p)};
  for (int dart = 0; dart < d.map.n_darts(); ++dart) {
    if (!dart_outgoing(dart)) continue;
    int od = d.map.iota(dart);
    auto [f1, p1] = slot_of.at({d.faces.face_of[dart], dart});
    auto [f2, p2] = slot_of.at({d.faces.face_of[od], od});
    long long n1 = D.mult[f1], n2 = D.mult[f2];
    long long nmin = std::min(n1, n2);
    for (long long t = 0; t < nmin; ++t) {
      long long l1, l2;
      if (dart_kind(dart) == CurveKind::Alpha) {
        l1 = 1 + t;
        l2 = 1 + t;
      } else {
        l1 = n1 - t;
        l2 = n2 - t;
      }
      Side a{f1, p1, static_cast<int>(l1)}, b{f2, p2, static_cast<int>(l2)};
      glued[a] = b;
      glued[b] = a;
    }
  }

  // vertices: corner instance (f,p,lvl) = corner at the start of side (f,p);
  // union across gluings (opposite boundary orientations along a shared arc)
  std::map<Side, int> vid;
  for (const Side& s : sides) vid.emplace(s, static_cast<int>(vid.size()));
  std::vector<int> parent(vid.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  auto next_pos = [&](int f, int p) {
    return (p + 1) % static_cast<int>(d.faces.faces[f].boundary_darts.size());
  };
  for (const auto& [a, b] : glued) {
    // start of a = end of b and vice versa
    unite(vid.at(a), vid.at({b.face, next_pos(b.face, b.pos), b.level}));
    unite(vid.at({a.face, next_pos(a.face, a.pos), a.level}), vid.at(b));
  }

  int n_vertices = 0;
  std::map<int, int> cls_size;
  for (const auto& [s, id] : vid) cls_size[find(id)]++;
  n_vertices = static_cast<int>(cls_size.size());
  int n_edges = 0;
  std::vector<Side> free_sides;
  for (const Side& s : sides) {
    if (glued.count(s)) {
      if (s < glued.at(s) || s == glued.at(s)) ++n_edges;
    } else {
      ++n_edges;
      free_sides.push_back(s);
    }
  }
  S.chi = n_vertices - n_edges + S.n_sheets;

  // corners: vertex classes with an odd number of sector instances
  for (const auto& [root, size] : cls_size) S.n_corners += size % 2;

  // boundary circles: walk free sides by rotating through glued sectors
  std::map<Side, bool> visited;
  for (const Side& s0 : free_sides) {
    if (visited[s0]) continue;
    ++S.n_boundary;
    Side s = s0;
    do {
      visited[s] = true;
      // rotate around the end vertex of s
      Side t{s.face, next_pos(s.face, s.pos), s.level};
      int guard = 0;
      while (glued.count(t)) {
        Side u = glued.at(t);  // u ends where t starts
        t = {u.face, next_pos(u.face, u.pos), u.level};
        if (++guard > static_cast<int>(sides.size()))
          throw PreconditionFailed("boundary walk failed (interior loop)");
      }
      s = t;
    } while (!(s == s0));
  }
  return S;
}

AdditivityReport maslov_additivity_sample(const HeegaardDiagram& d, int trials,
                                          uint64_t seed) {
  AdditivityReport rep;
  rep.trials = trials;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  std::vector<Generator> gens = enumerate_generators(d);
  std::vector<std::vector<int>> classes = pi2_classes(d, gens);
  std::uniform_int_distribution<int> coeff(-3, 3);

  auto random_domain = [&](const Generator& a, const Generator& b) {
    DomainLattice L = solve_pi2(d, a, b);
    Domain D = *L.particular;
    for (const Domain& k : L.kernel) {
      long long c = coeff(rng);
      for (size_t f = 0; f < D.mult.size(); ++f) D.mult[f] += c * k.mult[f];
    }
    return D;
  };

  for (int t = 0; t < trials; ++t) {
    const std::vector<int>& cls = classes[rng() % classes.size()];
    const Generator& gx = gens[cls[rng() % cls.size()]];
    const Generator& gy = gens[cls[rng() % cls.size()]];
    const Generator& gz = gens[cls[rng() % cls.size()]];
    Domain D1 = random_domain(gx, gy), D2 = random_domain(gy, gz);
    long long lhs = maslov4(d, D1 + D2, gx, gz);
    long long rhs = maslov4(d, D1, gx, gy) + maslov4(d, D2, gy, gz);
    if (lhs != rhs) {
      std::ostringstream os;
      os << "trial " << t << ": mu(D1+D2) = " << quarters_to_string(lhs)
         << " but mu(D1)+mu(D2) = " << quarters_to_string(rhs);
      throw AdditivityViolation(os.str());
    }
  }
  return rep;
}

}  // namespace hf
