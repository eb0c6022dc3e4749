#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace pcarr::testsupport {

Arrangement krupp() {
  // Derived from three symmetric unit circles; vertices 0..5 are the far and
  // near crossings of the pairs (0,1), (0,2), (1,2) in that order.
  CircleData d;
  d.n = 3;
  d.vertices = {{0, 1, false}, {0, 1, true},  {0, 2, true},
                {0, 2, false}, {1, 2, false}, {1, 2, true}};
  d.cycles = {{0, 3, 1, 2}, {4, 1, 5, 0}, {2, 5, 3, 4}};
  return Arrangement::build(std::move(d));
}

Arrangement nonkrupp() {
  // Circle 0 meets 1 at {0,1}, meets 2 at {2,3}; circles 1 and 2 cross at
  // {4,5} away from circle 0.
  CircleData d;
  d.n = 3;
  d.vertices = {{0, 1, true}, {0, 1, false}, {0, 2, true},
                {0, 2, false}, {1, 2, true}, {1, 2, false}};
  d.cycles = {{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 5, 4}};
  return Arrangement::build(std::move(d));
}

Arrangement chain4() {
  return from_circles({{0.0, 1.0, 0.85}, {1.0, 0.0, 0.85}, {0.0, -1.0, 0.85}, {-1.0, 0.0, 0.85}});
}

CircleData circle_data(const std::vector<Circle>& circles) {
  const int n = static_cast<int>(circles.size());
  CircleData d;
  d.n = n;

  struct Pt {
    double x, y;
    int vid;
  };
  std::vector<std::vector<std::pair<double, int>>> per_circle(n);  // (angle, vid)

  auto tangent = [&](int c, double px, double py) {
    // ccw tangent direction of circle c at point p
    return std::pair<double, double>{-(py - circles[c].y), px - circles[c].x};
  };

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double dx = circles[j].x - circles[i].x, dy = circles[j].y - circles[i].y;
      double dist = std::hypot(dx, dy);
      double ri = circles[i].r, rj = circles[j].r;
      if (dist + 1e-9 > ri + rj || dist - 1e-9 < std::abs(ri - rj)) {
        if (std::abs(dist - (ri + rj)) < 1e-6 || std::abs(dist - std::abs(ri - rj)) < 1e-6)
          throw ArrangementError("tangent circles");
        continue;  // disjoint or nested
      }
      double a = (ri * ri - rj * rj + dist * dist) / (2 * dist);
      double h2 = ri * ri - a * a;
      if (h2 < 1e-12) throw ArrangementError("tangent circles");
      double h = std::sqrt(h2);
      double mx = circles[i].x + a * dx / dist, my = circles[i].y + a * dy / dist;
      for (double sgn : {+1.0, -1.0}) {
        double px = mx + sgn * h * (-dy) / dist, py = my + sgn * h * dx / dist;
        int vid = static_cast<int>(d.vertices.size());
        auto ti = tangent(i, px, py);
        auto tj = tangent(j, px, py);
        bool positive = ti.first * tj.second - ti.second * tj.first > 0;
        d.vertices.push_back({i, j, positive});
        per_circle[i].push_back({std::atan2(py - circles[i].y, px - circles[i].x), vid});
        per_circle[j].push_back({std::atan2(py - circles[j].y, px - circles[j].x), vid});
      }
    }

  for (int i = 0; i < n; ++i) {
    auto& pts = per_circle[i];
    if (pts.empty()) throw ArrangementError("circle without crossings");
    std::sort(pts.begin(), pts.end());
    for (size_t k = 1; k < pts.size(); ++k)
      if (pts[k].first - pts[k - 1].first < 1e-7)
        throw ArrangementError("crossing cluster too tight");
    std::vector<VertexId> cyc;
    for (auto& [ang, vid] : pts) cyc.push_back(vid);
    d.cycles.push_back(std::move(cyc));
  }
  return d;
}

Arrangement from_circles(const std::vector<Circle>& circles) {
  return Arrangement::build(circle_data(circles));
}

CircleData relabel(const CircleData& d, std::mt19937& rng) {
  CircleData out;
  out.n = d.n;

  std::vector<int> cperm(d.n);
  std::iota(cperm.begin(), cperm.end(), 0);
  std::shuffle(cperm.begin(), cperm.end(), rng);  // cperm[old] = new

  const int V = static_cast<int>(d.vertices.size());
  std::vector<int> vperm(V);
  std::iota(vperm.begin(), vperm.end(), 0);
  std::shuffle(vperm.begin(), vperm.end(), rng);

  std::vector<uint8_t> reversed(d.n);
  for (int c = 0; c < d.n; ++c) reversed[c] = rng() & 1;

  out.vertices.resize(V);
  for (int v = 0; v < V; ++v) {
    CrossingDef cd = d.vertices[v];
    bool sign = cd.positive;
    // reversing one circle's direction flips the rotation sign at its vertices
    if (reversed[cd.a]) sign = !sign;
    if (reversed[cd.b]) sign = !sign;
    int na = cperm[cd.a], nb = cperm[cd.b];
    if ((rng() & 1) != 0) {
      std::swap(na, nb);
      sign = !sign;  // swapping the listed pair flips the sign convention
    }
    out.vertices[vperm[v]] = {na, nb, sign};
  }

  out.cycles.resize(d.n);
  for (int c = 0; c < d.n; ++c) {
    std::vector<VertexId> cyc = d.cycles[c];
    if (reversed[c]) std::reverse(cyc.begin(), cyc.end());
    size_t shift = rng() % cyc.size();
    std::rotate(cyc.begin(), cyc.begin() + shift, cyc.end());
    for (VertexId& v : cyc) v = vperm[v];
    out.cycles[cperm[c]] = std::move(cyc);
  }
  return out;
}

CircleData mirrored(const CircleData& d) {
  CircleData out = d;
  for (CrossingDef& cd : out.vertices) cd.positive = !cd.positive;
  return out;
}

std::map<int, int> projective_cell_vector(const WiringDiagram& w) {
  w.validate();
  const int n = w.n_lines;
  struct Seg {
    int count = 0;
    int left_gap = -1;   // enters at the left border of this gap, or -1 if born at a swap
    int right_gap = -1;  // leaves at the right border, or -1 if it dies at a swap
  };
  std::vector<Seg> segs;
  std::vector<int> cur(n + 1);
  for (int g = 0; g <= n; ++g) {
    segs.push_back({0, g, -1});
    cur[g] = g;
  }
  for (int p : w.swaps) {
    segs[cur[p]].count += 1;  // dying cell sees the crossing
    if (p - 1 >= 0) segs[cur[p - 1]].count += 1;
    if (p + 1 <= n) segs[cur[p + 1]].count += 1;
    segs.push_back({1, -1, -1});  // cell born right of the crossing
    cur[p] = static_cast<int>(segs.size()) - 1;
  }
  for (int g = 0; g <= n; ++g) segs[cur[g]].right_gap = g;

  // successor across the projective gluing: right border of gap g continues
  // at the left border of gap n-g
  std::vector<int> succ(segs.size(), -1), by_left(n + 1, -1);
  for (size_t i = 0; i < segs.size(); ++i)
    if (segs[i].left_gap >= 0) by_left[segs[i].left_gap] = static_cast<int>(i);
  for (size_t i = 0; i < segs.size(); ++i)
    if (segs[i].right_gap >= 0) succ[i] = by_left[n - segs[i].right_gap];

  std::map<int, int> cells;
  std::vector<uint8_t> used(segs.size(), 0);
  for (size_t i = 0; i < segs.size(); ++i) {
    if (used[i] || segs[i].left_gap >= 0) continue;  // start only at born segments
    int total = 0;
    for (int s = static_cast<int>(i); s != -1; s = succ[s]) {
      used[s] = 1;
      total += segs[s].count;
    }
    cells[total]++;
  }
  for (size_t i = 0; i < segs.size(); ++i) {  // pure border cycles (cell at infinity)
    if (used[i]) continue;
    int total = 0;
    int s = static_cast<int>(i);
    do {
      used[s] = 1;
      total += segs[s].count;
      s = succ[s];
    } while (s != static_cast<int>(i));
    cells[total]++;
  }
  return cells;
}

}  // namespace pcarr::testsupport
