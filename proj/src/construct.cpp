#include "pcarr/construct.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pcarr/canonical.hpp"

namespace pcarr {

Arrangement digon_family(int n, const std::string& lr) {
  if (n < 3) throw ArrangementError("digon family needs n >= 3");
  if (static_cast<int>(lr.size()) != n - 3)
    throw ArrangementError("finger sequence must have length n-3");
  const int m = n - 1;  // finger circles 1..m around black circle 0

  std::vector<int> fan{1};
  if (m >= 2) fan.push_back(2);
  for (int t = 3; t <= m; ++t) {
    auto prev = std::find(fan.begin(), fan.end(), t - 1);
    char c = lr[t - 3];
    if (c == 'R' || c == 'r')
      fan.insert(prev + 1, t);
    else if (c == 'L' || c == 'l')
      fan.insert(prev, t);
    else
      throw ArrangementError("finger sequence may only contain L and R");
  }

  CircleData d;
  d.n = n;
  // fingers: s_i, t_i on the black circle; sweep crossings a(j,i) where
  // circle j ascends through i's sweep and dd(j,i) where it descends
  std::vector<int> s(m + 1), t(m + 1);
  std::map<std::pair<int, int>, int> asc, desc;
  auto new_vertex = [&](CircleId a, CircleId b, bool sign) {
    d.vertices.push_back({a, b, sign});
    return static_cast<int>(d.vertices.size()) - 1;
  };
  for (int i = 1; i <= m; ++i) {
    s[i] = new_vertex(0, i, true);
    t[i] = new_vertex(0, i, false);
  }
  for (int j = 2; j <= m; ++j)
    for (int i = 1; i < j; ++i) {
      asc[{j, i}] = new_vertex(i, j, false);
      desc[{j, i}] = new_vertex(i, j, true);
    }

  d.cycles.resize(n);
  for (int f : fan) {
    d.cycles[0].push_back(s[f]);
    d.cycles[0].push_back(t[f]);
  }
  for (int j = 1; j <= m; ++j) {
    auto& cyc = d.cycles[j];
    cyc.push_back(s[j]);
    cyc.push_back(t[j]);
    for (int i = 1; i < j; ++i) cyc.push_back(asc[{j, i}]);
    int kj = static_cast<int>(std::find(fan.begin(), fan.end(), j) - fan.begin());
    for (int q = 0; q < m; ++q) {
      int pos = (kj + q) % m;
      if (q > 0 && fan[pos] > j) cyc.push_back(asc[{fan[pos], j}]);
      int nxt = fan[(pos + 1) % m];
      if (nxt != j && nxt > j) cyc.push_back(desc[{nxt, j}]);
    }
    for (int i = j - 1; i >= 1; --i) cyc.push_back(desc[{j, i}]);
  }
  return Arrangement::build(std::move(d));
}

DualPath annotate_path(const Arrangement& a, const std::vector<DartId>& steps) {
  DualPath p;
  p.steps = steps;
  if (steps.empty()) throw ArrangementError("empty path");
  p.start = a.face_of(steps.front());
  p.end = a.face_of(a.twin(steps.back()));

  std::vector<FaceId> visited{p.start};
  for (DartId d : steps) visited.push_back(a.face_of(a.twin(d)));
  for (FaceId f : visited)
    if (a.face_size(f) == 3) ++p.tau;

  for (size_t i = 1; i + 1 < visited.size(); ++i) {
    FaceId f = visited[i];
    const auto& bd = a.face(f).boundary;
    DartId in = a.twin(steps[i - 1]), out = steps[i];
    int i1 = -1, i2 = -1;
    for (size_t k = 0; k < bd.size(); ++k) {
      if (bd[k] == in) i1 = static_cast<int>(k);
      if (bd[k] == out) i2 = static_cast<int>(k);
    }
    if (i1 < 0 || i2 < 0) throw ArrangementError("path step not on face boundary");
    int k = a.face_size(f);
    int k1 = ((i2 - i1) % k + k) % k;
    int k2 = k - k1;
    p.delta += (k1 == 1) + (k2 == 1);
  }
  return p;
}

std::vector<DualPath> find_dual_paths(const Arrangement& a) {
  if (!a.is_intersecting() || !a.is_digon_free())
    throw ArrangementError("dual paths need an intersecting digon-free arrangement");
  const int n = a.n();
  std::vector<DualPath> out;
  std::vector<DartId> steps;
  uint64_t crossed = 0;

  // each pseudocircle is crossed once, so faces never repeat along a path
  auto dfs = [&](auto&& self, FaceId f) -> void {
    if (static_cast<int>(steps.size()) == n) {
      if (a.face_of(steps.front()) < f) out.push_back(annotate_path(a, steps));
      return;
    }
    for (DartId g : a.face(f).boundary) {
      uint64_t bit = 1ull << a.circle(g);
      if (crossed & bit) continue;
      crossed |= bit;
      steps.push_back(g);
      self(self, a.face_of(a.twin(g)));
      steps.pop_back();
      crossed &= ~bit;
    }
  };
  for (FaceId f0 = 0; f0 < a.face_count(); ++f0) dfs(dfs, f0);
  return out;
}

int merge_p3_formula(const Arrangement& a, const DualPath& path, const Arrangement& b) {
  return a.pk().triangles() + b.pk().triangles() + path.delta - path.tau - 1;
}

bool buckle_far_cell_is_triangle(const Arrangement& b, FaceId tri, CircleId circ) {
  for (DartId d : b.face(tri).boundary)
    if (b.circle(d) == circ) return b.face_size(b.face_of(b.twin(d))) == 3;
  throw ArrangementError("triangle has no edge on the chosen circle");
}

int merge_p3_expected(const Arrangement& a, const DualPath& path, const Arrangement& b,
                      FaceId tri, CircleId circ) {
  return merge_p3_formula(a, path, b) - (buckle_far_cell_is_triangle(b, tri, circ) ? 1 : 0);
}

Arrangement merge(const Arrangement& a, const DualPath& path, const Arrangement& b,
                  FaceId tri, CircleId circ) {
  const int na = a.n(), nb = b.n();
  if (na < 3 || nb < 3) throw ArrangementError("merge needs hosts with n >= 3");
  if (!a.is_intersecting() || !a.is_digon_free() || !b.is_intersecting() || !b.is_digon_free())
    throw ArrangementError("merge needs digon-free intersecting arrangements");
  if (static_cast<int>(path.steps.size()) != na)
    throw ArrangementError("path does not cross every circle of the host");
  if (b.face_size(tri) != 3) throw ArrangementError("merge site is not a triangle");

  // the buckle edge: the triangle's edge on `circ`
  DartId bdart = -1;
  for (DartId d : b.face(tri).boundary)
    if (b.circle(d) == circ) bdart = d;
  if (bdart < 0) throw ArrangementError("triangle has no edge on the chosen circle");
  const int seg_b = b.cycle_pos(bdart & ~1);  // buckle between cyc[seg_b], cyc[seg_b+1]

  const auto& b0cyc = b.cycle(circ);
  const int L = static_cast<int>(b0cyc.size());  // 2*(nb-1) ladders

  // strand i (0-based) = i-th circle crossed by the path
  std::vector<CircleId> strand(na);
  std::vector<int> strand_of(na, -1), cut_seg(na, -1);
  std::vector<uint8_t> aligned(na, 0);
  for (int i = 0; i < na; ++i) {
    DartId d = path.steps[i];
    strand[i] = a.circle(d);
    if (strand_of[strand[i]] != -1) throw ArrangementError("path crosses a circle twice");
    strand_of[strand[i]] = i;
    aligned[i] = (d & 1) != 0;  // crossed dart runs against the belt direction
    cut_seg[strand[i]] = a.cycle_pos(d & ~1);
  }

  CircleData out;
  out.n = na + nb - 1;
  out.vertices = a.data().vertices;

  // guest circles keep their relative order after the deleted one
  auto guest_id = [&](CircleId g) { return na + (g < circ ? g : g - 1); };

  std::vector<VertexId> bmap(b.vertex_count(), -1);
  for (VertexId v = 0; v < b.vertex_count(); ++v) {
    const CrossingDef& cd = b.crossing(v);
    if (cd.a == circ || cd.b == circ) continue;
    bmap[v] = static_cast<VertexId>(out.vertices.size());
    out.vertices.push_back({guest_id(cd.a), guest_id(cd.b), cd.positive});
  }

  // ladder vertices: strand i crossing the guest at the j-th crossing of circ
  std::vector<uint8_t> out_left(L, 0);
  const int ladder_base = static_cast<int>(out.vertices.size());
  auto ladder_vertex = [&](int j, int i) { return ladder_base + j * na + i; };
  for (int j = 0; j < L; ++j) {
    const CrossingDef& cd = b.crossing(b0cyc[j]);
    CircleId g = cd.a == circ ? cd.b : cd.a;
    out_left[j] = cd.a == circ ? cd.positive : !cd.positive;
    for (int i = 0; i < na; ++i) {
      bool positive = (aligned[i] != 0) == (out_left[j] != 0);
      out.vertices.push_back({strand[i], guest_id(g), positive});
    }
  }

  out.cycles.resize(out.n);
  // host circles: original cycle with the belt wrap spliced in at the cut
  for (CircleId x = 0; x < na; ++x) {
    const auto& cyc = a.cycle(x);
    const int i = strand_of[x];
    auto& nc = out.cycles[x];
    for (int s = 0; s < static_cast<int>(cyc.size()); ++s) {
      nc.push_back(cyc[s]);
      if (s == cut_seg[x]) {
        if (aligned[i])
          for (int q = 1; q <= L; ++q) nc.push_back(ladder_vertex((seg_b + q) % L, i));
        else
          for (int q = 0; q < L; ++q) nc.push_back(ladder_vertex((seg_b - q + L) % L, i));
      }
    }
  }
  // guest circles: each old crossing with circ becomes a run through all strands
  for (CircleId g = 0; g < nb; ++g) {
    if (g == circ) continue;
    auto& nc = out.cycles[guest_id(g)];
    for (VertexId v : b.cycle(g)) {
      if (bmap[v] != -1) {
        nc.push_back(bmap[v]);
        continue;
      }
      int j = static_cast<int>(std::find(b0cyc.begin(), b0cyc.end(), v) - b0cyc.begin());
      if (out_left[j])
        for (int i = na - 1; i >= 0; --i) nc.push_back(ladder_vertex(j, i));
      else
        for (int i = 0; i < na; ++i) nc.push_back(ladder_vertex(j, i));
    }
  }
  return Arrangement::build(std::move(out));
}

Arrangement triangle_flip(const Arrangement& a, FaceId site) {
  if (a.face_size(site) != 3) throw ArrangementError("flip site is not a triangle");
  CircleData d = a.data();
  for (DartId dart : a.face(site).boundary) {
    CircleId c = a.circle(dart);
    int seg = a.cycle_pos(dart & ~1);
    auto& cyc = d.cycles[c];
    std::swap(cyc[seg], cyc[(seg + 1) % cyc.size()]);
  }
  return Arrangement::build(std::move(d));
}

namespace {

std::vector<FaceId> triangle_faces(const Arrangement& a) {
  std::vector<FaceId> out;
  for (FaceId f = 0; f < a.face_count(); ++f)
    if (a.face_size(f) == 3) out.push_back(f);
  return out;
}

}  // namespace

FlipSearchResult maximize_triangles(const Arrangement& a, long budget, int restarts,
                                    uint64_t seed) {
  if (!a.is_intersecting()) throw ArrangementError("flip search expects intersecting input");
  if (restarts < 1) restarts = 1;
  const long budget_each = std::max(1L, budget / restarts);

  struct RunResult {
    CanonicalCode code;
    int p3 = -1;
    std::vector<int> trace;
  };
  std::vector<RunResult> runs(restarts);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int r = 0; r < restarts; ++r) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * (r + 1));
    Arrangement cur = a;
    RunResult& run = runs[r];
    if (r > 0) {
      // perturb the start with a few random flips
      int kicks = 1 + static_cast<int>(rng() % 4);
      for (int k = 0; k < kicks; ++k) {
        auto tris = triangle_faces(cur);
        if (tris.empty()) break;
        FaceId site = tris[rng() % tris.size()];
        cur = triangle_flip(cur, site);
        run.trace.push_back(-2 - site);  // perturbation marker
      }
    }
    std::set<CanonicalCode> seen{canonical_code(cur)};
    int cur_p3 = cur.pk().triangles();
    run.code = *seen.begin();
    run.p3 = cur_p3;

    for (long step = 0; step < budget_each; ++step) {
      auto tris = triangle_faces(cur);
      int best_p3 = -1;
      std::vector<std::pair<FaceId, Arrangement>> best;
      for (FaceId f : tris) {
        Arrangement cand = triangle_flip(cur, f);
        int p3 = cand.pk().triangles();
        if (p3 < cur_p3 || p3 < best_p3) continue;
        if (p3 > best_p3) {
          best_p3 = p3;
          best.clear();
        }
        best.emplace_back(f, std::move(cand));
      }
      bool moved = false;
      // prefer unseen candidates, smallest canonical code first
      std::vector<std::pair<CanonicalCode, size_t>> keyed;
      for (size_t i = 0; i < best.size(); ++i)
        keyed.emplace_back(canonical_code(best[i].second), i);
      std::sort(keyed.begin(), keyed.end());
      for (auto& [code, idx] : keyed) {
        if (seen.count(code)) continue;
        seen.insert(code);
        cur = std::move(best[idx].second);
        cur_p3 = best_p3;
        run.trace.push_back(best[idx].first);
        if (cur_p3 > run.p3) {
          run.p3 = cur_p3;
          run.code = code;
        }
        moved = true;
        break;
      }
      if (!moved) break;  // local optimum with exhausted plateau
    }
  }

  int best_run = 0;
  for (int r = 1; r < restarts; ++r) {
    if (runs[r].p3 > runs[best_run].p3 ||
        (runs[r].p3 == runs[best_run].p3 && runs[r].code < runs[best_run].code))
      best_run = r;
  }
  FlipSearchResult res{decode(runs[best_run].code), runs[best_run].p3, {}};
  for (int r = 0; r <= best_run; ++r) {
    if (r > 0) res.trace.push_back(-1);
    res.trace.insert(res.trace.end(), runs[r].trace.begin(), runs[r].trace.end());
  }
  return res;
}

}  // namespace pcarr
