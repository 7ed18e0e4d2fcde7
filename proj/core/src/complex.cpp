#include "hf/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

namespace hf {

std::vector<Generator> enumerate_generators(const HeegaardDiagram& d) {
  int k = d.k();
  std::vector<Generator> out;
  std::vector<int> coords(k, -1);
  std::vector<char> beta_used(d.map.beta.size(), 0);
  std::vector<std::vector<int>> sorted_alpha = d.map.alpha;
  for (auto& c : sorted_alpha) std::sort(c.begin(), c.end());

  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      out.push_back(Generator{coords});
      return;
    }
    for (int c : sorted_alpha[i]) {
      int bc = d.map.beta_curve_of[c];
      if (beta_used[bc]) continue;
      beta_used[bc] = 1;
      coords[i] = c;
      self(self, i + 1);
      beta_used[bc] = 0;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Bounded {0,1} search over unpointed faces for the corner system of (x,y),
// pruning by per-crossing attainable-sum intervals.
struct PolygonSearch {
  const HeegaardDiagram& d;
  std::vector<int> vars;              // face ids of unpointed faces, search order
  std::vector<int> var_of_face;       // face id -> var index or -1
  std::vector<std::vector<std::pair<int, int>>> var_eqs;  // per var: (crossing, coeff)
  std::vector<long long> rem_min, rem_max, partial;       // per crossing

  explicit PolygonSearch(const HeegaardDiagram& dd) : d(dd) {
    int nf = d.n_faces();
    var_of_face.assign(nf, -1);
    // Coefficients of each face in each crossing equation.
    std::vector<std::map<int, int>> face_coeff(nf);
    for (int c = 0; c < d.map.n_crossings; ++c) {
      face_coeff[d.faces.face_of_corner(d.map, {c, Quadrant::A})][c] += 1;
      face_coeff[d.faces.face_of_corner(d.map, {c, Quadrant::C})][c] += 1;
      face_coeff[d.faces.face_of_corner(d.map, {c, Quadrant::B})][c] -= 1;
      face_coeff[d.faces.face_of_corner(d.map, {c, Quadrant::D})][c] -= 1;
    }
    // Order variables crossing by crossing so equations close early.
    for (int c = 0; c < d.map.n_crossings; ++c)
      for (Quadrant q : {Quadrant::A, Quadrant::B, Quadrant::C, Quadrant::D}) {
        int f = d.faces.face_of_corner(d.map, {c, q});
        if (d.pointed(f) || var_of_face[f] >= 0) continue;
        var_of_face[f] = static_cast<int>(vars.size());
        vars.push_back(f);
      }
    var_eqs.resize(vars.size());
    rem_min.assign(d.map.n_crossings, 0);
    rem_max.assign(d.map.n_crossings, 0);
    for (size_t v = 0; v < vars.size(); ++v)
      for (auto [c, k] : face_coeff[vars[v]])
        if (k != 0) var_eqs[v].emplace_back(c, k);
  }

  std::vector<ivec> solve(const ivec& rhs) {
    partial.assign(d.map.n_crossings, 0);
    for (int c = 0; c < d.map.n_crossings; ++c) rem_min[c] = rem_max[c] = 0;
    for (size_t v = 0; v < vars.size(); ++v)
      for (auto [c, k] : var_eqs[v]) {
        rem_min[c] += std::min(k, 0);
        rem_max[c] += std::max(k, 0);
      }
    std::vector<ivec> out;
    ivec assign(vars.size(), 0);
    rec(0, rhs, assign, out);
    return out;
  }

 private:
  void rec(size_t v, const ivec& rhs, ivec& assign, std::vector<ivec>& out) {
    if (v == vars.size()) {
      out.push_back(assign);
      return;
    }
    for (auto [c, k] : var_eqs[v]) {
      rem_min[c] -= std::min(k, 0);
      rem_max[c] -= std::max(k, 0);
    }
    for (long long val : {0LL, 1LL}) {
      bool ok = true;
      for (auto [c, k] : var_eqs[v]) {
        partial[c] += val * k;
        if (rhs[c] < partial[c] + rem_min[c] || rhs[c] > partial[c] + rem_max[c]) ok = false;
      }
      if (ok) {
        assign[v] = val;
        rec(v + 1, rhs, assign, out);
        assign[v] = 0;
      }
      for (auto [c, k] : var_eqs[v]) partial[c] -= val * k;
    }
    for (auto [c, k] : var_eqs[v]) {
      rem_min[c] += std::min(k, 0);
      rem_max[c] += std::max(k, 0);
    }
  }
};

std::vector<Generator> candidate_targets(const HeegaardDiagram& d, const Generator& x) {
  std::vector<Generator> out;
  int k = d.k();
  for (int i = 0; i < k; ++i) {
    int bi = d.map.beta_curve_of[x.coords[i]];
    for (int c : d.map.alpha[i]) {
      if (c == x.coords[i] || d.map.beta_curve_of[c] != bi) continue;
      Generator y = x;
      y.coords[i] = c;
      out.push_back(std::move(y));
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      int bi = d.map.beta_curve_of[x.coords[i]];
      int bj = d.map.beta_curve_of[x.coords[j]];
      if (bi == bj) continue;
      for (int ci : d.map.alpha[i]) {
        if (d.map.beta_curve_of[ci] != bj) continue;
        for (int cj : d.map.alpha[j]) {
          if (d.map.beta_curve_of[cj] != bi) continue;
          Generator y = x;
          y.coords[i] = ci;
          y.coords[j] = cj;
          out.push_back(std::move(y));
        }
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::pair<Generator, Domain>> empty_polygons(const HeegaardDiagram& d,
                                                         const Generator& x) {
  NicenessReport nr = is_nice(d);
  if (!nr.is_nice)
    throw NotNice("diagram has " + std::to_string(nr.offenders.size()) +
                  " offending faces");
  PolygonSearch search(d);
  std::vector<std::pair<Generator, Domain>> out;
  for (const Generator& y : candidate_targets(d, x)) {
    ivec rhs(d.map.n_crossings, 0);
    for (int c : y.coords) rhs[c] += 1;
    for (int c : x.coords) rhs[c] -= 1;
    for (ivec& sol : search.solve(rhs)) {
      Domain D{ivec(d.n_faces(), 0)};
      for (size_t v = 0; v < search.vars.size(); ++v) D.mult[search.vars[v]] = sol[v];
      if (maslov4(d, D, x, y) == 4) out.emplace_back(y, std::move(D));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first, a.second.mult) < std::tie(b.first, b.second.mult);
  });
  return out;
}

bool Differential::entry(int x, int y) const {
  auto it = witnesses[x].find(y);
  return it != witnesses[x].end() && it->second.size() % 2 == 1;
}

GF2Matrix Differential::matrix() const {
  GF2Matrix m(n(), n());
  for (int x = 0; x < n(); ++x)
    for (const auto& [y, ws] : witnesses[x])
      if (ws.size() % 2 == 1) m.set(x, y, true);
  return m;
}

int default_threads() {
  if (const char* env = std::getenv("HF_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

Differential differential(const HeegaardDiagram& d, int threads) {
  Differential df;
  df.gens = enumerate_generators(d);
  df.witnesses.resize(df.gens.size());
  if (threads <= 0) threads = default_threads();
  threads = std::min<int>(threads, std::max<size_t>(df.gens.size(), 1));

  auto work = [&](int t) {
    for (size_t xi = t; xi < df.gens.size(); xi += threads) {
      for (auto& [y, D] : empty_polygons(d, df.gens[xi])) {
        auto it = std::lower_bound(df.gens.begin(), df.gens.end(), y);
        df.witnesses[xi][static_cast<int>(it - df.gens.begin())].push_back(std::move(D));
      }
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  return df;
}

DSquaredReport verify_d_squared(const Differential& df) {
  GF2Matrix m = df.matrix();
  GF2Matrix sq = gf2_multiply(m, m);
  for (int x = 0; x < df.n(); ++x)
    for (int z = 0; z < df.n(); ++z)
      if (sq.get(x, z)) return {false, x, z};
  return {true, -1, -1};
}

std::vector<std::vector<int>> pi2_classes(const HeegaardDiagram& d,
                                          const std::vector<Generator>& gens) {
  IMat A = corner_matrix(d);
  Hermite h = hermite(A);
  auto residue = [&](const Generator& g) {
    ivec r(A.rows, 0);
    for (int c : g.coords) r[c] += 1;
    for (int j = 0; j < h.rank; ++j) {
      int row = h.pivot_row[j];
      long long p = h.H.at(row, j);
      long long q = r[row] / p;
      if (r[row] % p < 0) q -= 1;
      for (int i = 0; i < A.rows; ++i) r[i] -= q * h.H.at(i, j);
    }
    return r;
  };
  std::map<ivec, std::vector<int>> by_residue;
  for (size_t i = 0; i < gens.size(); ++i)
    by_residue[residue(gens[i])].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> out;
  for (auto& [res, members] : by_residue) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

HomologyResult homology(const HeegaardDiagram& d, const Differential& df) {
  DSquaredReport ds = verify_d_squared(df);
  if (!ds.ok)
    throw NotAChainComplex("d^2 != 0 at generator pair (" + std::to_string(ds.x) + "," +
                           std::to_string(ds.z) + ")");
  HomologyResult out;
  out.classes = pi2_classes(d, df.gens);
  for (const std::vector<int>& cls : out.classes) {
    int n = static_cast<int>(cls.size());
    GF2Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (df.entry(cls[i], cls[j])) m.set(i, j, true);
    int dim = n - 2 * gf2_rank(m);
    out.class_dim.push_back(dim);
    out.total_dim += dim;
  }
  return out;
}

Domain reference_domain(const HeegaardDiagram& d, const Generator& base,
                        const Generator& y) {
  DomainLattice lat = solve_pi2(d, base, y);
  if (!lat.particular)
    throw NoConnectingDomain("generators lie in different pi2 classes");
  Domain D = *lat.particular;
  DomainLattice deg = boundary_degenerations(d, CurveKind::Alpha);
  std::vector<int> comp = curve_complement_components(d.map, d.faces, CurveKind::Alpha);
  BasepointMultiplicities bm = basepoint_multiplicities(d, D);
  for (int i = 0; i < d.b(); ++i) {
    long long v = bm.per_basepoint[i];
    if (v == 0) continue;
    const Domain& ind = deg.kernel[comp[d.basepoint_face[i]]];
    for (int f = 0; f < d.n_faces(); ++f) D.mult[f] -= v * ind.mult[f];
  }
  return D;
}

GradingResult relative_grading(const HeegaardDiagram& d, const std::vector<Generator>& gens,
                               const std::vector<int>& cls) {
  GradingResult out;
  const Generator& base = gens[cls.front()];
  for (int gi : cls) {
    Domain D = reference_domain(d, base, gens[gi]);
    out.gr4.push_back(maslov4(d, D, base, gens[gi]));
  }
  // Periodic domains: kernel with every pointed face pinned to zero.
  IMat A = corner_matrix(d);
  IMat B(A.rows + d.b(), A.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) B.at(i, j) = A.at(i, j);
  for (int i = 0; i < d.b(); ++i) B.at(A.rows + i, d.basepoint_face[i]) = 1;
  long long delta4 = 0;
  for (const ivec& p : kernel_basis(B))
    delta4 = std::gcd(delta4, std::abs(maslov4(d, Domain{p}, base, base)));
  out.delta4 = delta4;
  long long mn = *std::min_element(out.gr4.begin(), out.gr4.end());
  for (long long& g : out.gr4) {
    g -= mn;
    if (delta4 > 0) g %= delta4;
  }
  return out;
}

StableClass stable_class(const HeegaardDiagram& d, const Differential& df) {
  return {homology(d, df).total_dim, d.b()};
}

bool stable_equal(const StableClass& a, const StableClass& b) {
  return (static_cast<__int128>(a.dim) << b.b) == (static_cast<__int128>(b.dim) << a.b);
}

std::string export_matrix(const Differential& df) {
  std::ostringstream os;
  os << df.n() << " " << df.n() << "\n";
  for (int x = 0; x < df.n(); ++x)
    for (const auto& [y, ws] : df.witnesses[x])
      if (ws.size() % 2 == 1) os << x << " " << y << "\n";
  return os.str();
}

}  // namespace hf
