#include "pcarr/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace pcarr {

namespace {

constexpr double kPi = 3.14159265358979323846;

const char* kPalette[12] = {"#c0392b", "#2563ab", "#1e8449", "#b7770d", "#7d3c98",
                            "#148f77", "#b03a2e", "#2e86c1", "#7f8c1e", "#6c3483",
                            "#117a65", "#a04000"};

struct GGraph {
  int nv = 0;
  struct E {
    int u, v, f1, f2;
  };
  std::vector<E> edges;
  std::vector<std::vector<int>> faces;  // vertex cycles in boundary-walk order
};

GGraph graph_of(const Arrangement& a) {
  GGraph g;
  g.nv = a.vertex_count();
  for (DartId d = 0; d < a.dart_count(); d += 2)
    g.edges.push_back({a.vertex(d), a.vertex(a.twin(d)), a.face_of(d), a.face_of(a.twin(d))});
  for (const Face& f : a.faces()) {
    std::vector<int> cyc;
    for (DartId d : f.boundary) cyc.push_back(a.vertex(d));
    g.faces.push_back(std::move(cyc));
  }
  return g;
}

double polygon_area(const std::vector<std::array<double, 2>>& pts) {
  double s = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    auto& p = pts[i];
    auto& q = pts[(i + 1) % pts.size()];
    s += p[0] * q[1] - q[0] * p[1];
  }
  return s / 2;
}

double face_signed_area(const GGraph& g, const Embedding& e, int f) {
  double s = 0;
  const auto& cyc = g.faces[f];
  for (size_t i = 0; i < cyc.size(); ++i) {
    auto& p = e.pos[cyc[i]];
    auto& q = e.pos[cyc[(i + 1) % cyc.size()]];
    s += p[0] * q[1] - q[0] * p[1];
  }
  return s / 2;
}

int pick_outer(const GGraph& g, int requested) {
  if (requested >= 0) {
    if (requested >= static_cast<int>(g.faces.size()))
      throw ArrangementError("no such face");
    if (g.faces[requested].size() < 3) throw ArrangementError("outer cell must not be a digon");
    return requested;
  }
  int best = -1;
  for (int f = 0; f < static_cast<int>(g.faces.size()); ++f) {
    if (g.faces[f].size() < 3) continue;
    if (best < 0 || g.faces[f].size() > g.faces[best].size()) best = f;
  }
  if (best < 0) throw ArrangementError("no non-digon cell available");
  return best;
}

Embedding embed_graph(const GGraph& g, const TutteConfig& cfg) {
  Embedding emb;
  emb.outer_face = pick_outer(g, cfg.outer_face);
  const auto& outer = g.faces[emb.outer_face];
  const int m = static_cast<int>(outer.size());

  emb.pos.assign(g.nv, {0.0, 0.0});
  std::vector<uint8_t> fixed(g.nv, 0);
  for (int k = 0; k < m; ++k) {
    double ang = kPi / 2 + 2 * kPi * k / m;
    emb.pos[outer[k]] = {std::cos(ang), std::sin(ang)};
    emb.outer_polygon.push_back(emb.pos[outer[k]]);
    fixed[outer[k]] = 1;
  }

  std::vector<std::vector<std::pair<int, int>>> adj(g.nv);  // (neighbor, edge)
  for (int ei = 0; ei < static_cast<int>(g.edges.size()); ++ei) {
    adj[g.edges[ei].u].push_back({g.edges[ei].v, ei});
    adj[g.edges[ei].v].push_back({g.edges[ei].u, ei});
  }

  std::vector<double> w(g.edges.size(), 1.0);
  auto solve = [&]() {
    for (int sweep = 0; sweep < 200000; ++sweep) {
      double moved = 0;
      for (int v = 0; v < g.nv; ++v) {
        if (fixed[v]) continue;
        double sx = 0, sy = 0, sw = 0;
        for (auto& [u, ei] : adj[v]) {
          sx += w[ei] * emb.pos[u][0];
          sy += w[ei] * emb.pos[u][1];
          sw += w[ei];
        }
        double nx = sx / sw, ny = sy / sw;
        moved = std::max({moved, std::abs(nx - emb.pos[v][0]), std::abs(ny - emb.pos[v][1])});
        emb.pos[v] = {nx, ny};
      }
      if (moved < cfg.solve_tol) break;
    }
  };

  solve();  // unit weights first
  const double outer_area = std::abs(polygon_area(emb.outer_polygon));
  for (int j = 1; j <= cfg.max_iterations; ++j) {
    std::vector<double> areas(g.faces.size());
    for (int f = 0; f < static_cast<int>(g.faces.size()); ++f)
      areas[f] = f == emb.outer_face ? outer_area : std::abs(face_signed_area(g, emb, f));
    std::vector<double> nw(g.edges.size());
    double mean = 0;
    for (size_t ei = 0; ei < g.edges.size(); ++ei) {
      const auto& e = g.edges[ei];
      double len = std::hypot(emb.pos[e.u][0] - emb.pos[e.v][0],
                              emb.pos[e.u][1] - emb.pos[e.v][1]);
      nw[ei] = std::pow(areas[e.f1], cfg.p_exponent) + std::pow(areas[e.f2], cfg.p_exponent) +
               cfg.q_scale * std::pow(len / j, cfg.q_exponent);
      mean += nw[ei];
    }
    mean /= static_cast<double>(g.edges.size());
    double change = 0;
    for (size_t ei = 0; ei < g.edges.size(); ++ei) {
      nw[ei] /= mean;  // layouts are invariant under uniform weight scaling
      // cap the spread: the x^4 area term otherwise drives weight ratios
      // past float headroom, gluing vertices together and stalling the
      // fixed-point iteration in slow drift
      nw[ei] = std::clamp(nw[ei], 1e-1, 1e1);
      change = std::max(change, std::abs(nw[ei] - w[ei]) / w[ei]);
    }
    w = std::move(nw);
    emb.iterations = j;
    emb.weight_change.push_back(change);
    solve();
    if (change < cfg.eps) {
      emb.converged = true;
      break;
    }
  }
  return emb;
}

int orient(const std::array<double, 2>& a, const std::array<double, 2>& b,
           const std::array<double, 2>& c) {
  double d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  const double eps = 1e-12;
  return d > eps ? 1 : d < -eps ? -1 : 0;
}

bool on_segment(const std::array<double, 2>& a, const std::array<double, 2>& b,
                const std::array<double, 2>& p) {
  return std::min(a[0], b[0]) - 1e-12 <= p[0] && p[0] <= std::max(a[0], b[0]) + 1e-12 &&
         std::min(a[1], b[1]) - 1e-12 <= p[1] && p[1] <= std::max(a[1], b[1]) + 1e-12;
}

bool segments_cross(const std::array<double, 2>& a, const std::array<double, 2>& b,
                    const std::array<double, 2>& c, const std::array<double, 2>& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4 && o1 && o2 && o3 && o4) return true;
  if (!o1 && on_segment(a, b, c)) return true;
  if (!o2 && on_segment(a, b, d)) return true;
  if (!o3 && on_segment(c, d, a)) return true;
  if (!o4 && on_segment(c, d, b)) return true;
  return false;
}

bool audit_graph_planarity(const GGraph& g, const Embedding& e, std::string* why) {
  for (size_t i = 0; i < g.edges.size(); ++i)
    for (size_t j = i + 1; j < g.edges.size(); ++j) {
      const auto& ei = g.edges[i];
      const auto& ej = g.edges[j];
      std::array<int, 2> si{ei.u, ei.v}, sj{ej.u, ej.v};
      int shared = 0;
      for (int x : si)
        for (int y : sj) shared += x == y;
      if (shared == 2) continue;  // coinciding digon edges
      if (shared == 1) {
        // adjacent: the open parts must not touch; test midpoint sidedness
        int common = si[0] == sj[0] || si[0] == sj[1] ? si[0] : si[1];
        int oi = si[0] == common ? si[1] : si[0];
        int oj = sj[0] == common ? sj[1] : sj[0];
        // overlap happens only if collinear and pointing the same way
        if (orient(e.pos[common], e.pos[oi], e.pos[oj]) == 0 &&
            on_segment(e.pos[common], e.pos[oi], e.pos[oj])) {
          if (why) *why = "adjacent segments overlap";
          return false;
        }
        if (orient(e.pos[common], e.pos[oj], e.pos[oi]) == 0 &&
            on_segment(e.pos[common], e.pos[oj], e.pos[oi])) {
          if (why) *why = "adjacent segments overlap";
          return false;
        }
        continue;
      }
      if (segments_cross(e.pos[ei.u], e.pos[ei.v], e.pos[ej.u], e.pos[ej.v])) {
        if (why)
          *why = "segments " + std::to_string(i) + " and " + std::to_string(j) + " intersect";
        return false;
      }
    }
  return true;
}

struct Mapper {
  double scale, ox, oy, size;
  Mapper(const std::vector<std::array<double, 2>>& pts, double size_, double margin)
      : size(size_) {
    double lo[2] = {1e18, 1e18}, hi[2] = {-1e18, -1e18};
    for (auto& p : pts)
      for (int k = 0; k < 2; ++k) {
        lo[k] = std::min(lo[k], p[k]);
        hi[k] = std::max(hi[k], p[k]);
      }
    double ext = std::max(hi[0] - lo[0], hi[1] - lo[1]);
    scale = (size_ - 2 * margin) / (ext > 0 ? ext : 1);
    ox = margin - lo[0] * scale + (size_ - 2 * margin - (hi[0] - lo[0]) * scale) / 2;
    oy = margin - lo[1] * scale + (size_ - 2 * margin - (hi[1] - lo[1]) * scale) / 2;
  }
  // svg y grows downward
  std::array<double, 2> svg(const std::array<double, 2>& p) const {
    return {p[0] * scale + ox, size - (p[1] * scale + oy)};
  }
  std::array<double, 2> ipe(const std::array<double, 2>& p) const {
    return {p[0] * scale + ox, p[1] * scale + oy};
  }
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

// ipe wants colors as rgb triples in [0,1]
std::string ipe_color(const char* hex) {
  auto nib = [](char c) { return c <= '9' ? c - '0' : c - 'a' + 10; };
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f %.3f %.3f",
                (nib(hex[1]) * 16 + nib(hex[2])) / 255.0,
                (nib(hex[3]) * 16 + nib(hex[4])) / 255.0,
                (nib(hex[5]) * 16 + nib(hex[6])) / 255.0);
  return buf;
}

// one cubic bezier segment per control point of a closed uniform B-spline
void spline_beziers(const std::vector<std::array<double, 2>>& c,
                    std::vector<std::array<double, 2>>& out) {
  const int k = static_cast<int>(c.size());
  auto at = [&](int i) { return c[((i % k) + k) % k]; };
  out.clear();
  for (int i = 0; i < k; ++i) {
    auto p0 = at(i - 1), p1 = at(i), p2 = at(i + 1);
    std::array<double, 2> s{(p0[0] + 4 * p1[0] + p2[0]) / 6, (p0[1] + 4 * p1[1] + p2[1]) / 6};
    std::array<double, 2> c1{(2 * p1[0] + p2[0]) / 3, (2 * p1[1] + p2[1]) / 3};
    std::array<double, 2> c2{(p1[0] + 2 * p2[0]) / 3, (p1[1] + 2 * p2[1]) / 3};
    if (i == 0) out.push_back(s);
    out.push_back(c1);
    out.push_back(c2);
    auto p3 = at(i + 2);
    out.push_back({(p1[0] + 4 * p2[0] + p3[0]) / 6, (p1[1] + 4 * p2[1] + p3[1]) / 6});
  }
}

}  // namespace

Embedding tutte_embed(const Arrangement& a, const TutteConfig& cfg) {
  return embed_graph(graph_of(a), cfg);
}

bool audit_planarity(const Arrangement& a, const Embedding& e, std::string* why) {
  return audit_graph_planarity(graph_of(a), e, why);
}

bool audit_face_orientation(const Arrangement& a, const Embedding& e, double tol) {
  GGraph g = graph_of(a);
  double total = 0;
  int sign = 0;
  for (int f = 0; f < static_cast<int>(g.faces.size()); ++f) {
    if (f == e.outer_face) continue;
    double s = face_signed_area(g, e, f);
    if (g.faces[f].size() >= 3 && std::abs(s) > tol) {
      int sg = s > 0 ? 1 : -1;
      if (sign == 0) sign = sg;
      if (sg != sign) return false;
    }
    total += std::abs(s);
  }
  return std::abs(total - std::abs(polygon_area(e.outer_polygon))) < 1e-6 + tol * total;
}

CurvePlan curve_plan(const Embedding& e, const Arrangement& a) {
  CurvePlan plan;
  GGraph g = graph_of(a);
  const int V = a.vertex_count();

  auto seg_dist = [&](const std::array<double, 2>& p, const std::array<double, 2>& a0,
                      const std::array<double, 2>& b0) {
    double vx = b0[0] - a0[0], vy = b0[1] - a0[1];
    double L2 = vx * vx + vy * vy;
    double t = L2 > 0 ? ((p[0] - a0[0]) * vx + (p[1] - a0[1]) * vy) / L2 : 0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p[0] - (a0[0] + t * vx), p[1] - (a0[1] + t * vy));
  };

  plan.clearance.assign(V, 0);
  for (int v = 0; v < V; ++v) {
    double min_inc = 1e18, min_other = 1e18;
    for (const auto& ed : g.edges) {
      double len = std::hypot(e.pos[ed.u][0] - e.pos[ed.v][0], e.pos[ed.u][1] - e.pos[ed.v][1]);
      if (ed.u == v || ed.v == v)
        min_inc = std::min(min_inc, len);
      else
        min_other = std::min(min_other, seg_dist(e.pos[v], e.pos[ed.u], e.pos[ed.v]));
    }
    plan.clearance[v] = std::min(min_inc / 3, min_other / 4);
    if (plan.clearance[v] < 1e-9) throw ArrangementError("degenerate edge in embedding");
  }

  // digon faces collapse to a touching point shared by both circles
  std::vector<std::array<double, 2>> pinch(a.dart_count() / 2, {1e18, 1e18});
  for (FaceId f = 0; f < a.face_count(); ++f) {
    if (a.face_size(f) != 2) continue;
    DartId d = a.face(f).boundary[0];
    VertexId u = a.vertex(d), w = a.vertex(a.twin(d));
    std::array<double, 2> mid{(e.pos[u][0] + e.pos[w][0]) / 2, (e.pos[u][1] + e.pos[w][1]) / 2};
    for (DartId b : a.face(f).boundary) pinch[(b & ~1) >> 1] = mid;
  }

  plan.control.resize(a.n());
  for (CircleId c = 0; c < a.n(); ++c) {
    const auto& cyc = a.cycle(c);
    const int k = static_cast<int>(cyc.size());
    auto& ctrl = plan.control[c];
    for (int i = 0; i < k; ++i) {
      VertexId u = cyc[i], w = cyc[(i + 1) % k];
      int edge = a.fwd_dart(c, i) >> 1;
      ctrl.push_back(e.pos[u]);
      if (pinch[edge][0] < 1e17) {
        ctrl.push_back(pinch[edge]);
        continue;
      }
      double dx = e.pos[w][0] - e.pos[u][0], dy = e.pos[w][1] - e.pos[u][1];
      double len = std::hypot(dx, dy);
      double ta = plan.clearance[u] / len, tb = 1 - plan.clearance[w] / len;
      ctrl.push_back({e.pos[u][0] + ta * dx, e.pos[u][1] + ta * dy});
      ctrl.push_back({e.pos[u][0] + tb * dx, e.pos[u][1] + tb * dy});
    }
  }
  return plan;
}

namespace {

struct FillTri {
  std::array<std::array<double, 2>, 3> pts;
};

std::vector<FillTri> triangle_fills(const Arrangement& a, const Embedding& e) {
  std::vector<FillTri> out;
  for (FaceId f = 0; f < a.face_count(); ++f) {
    if (f == e.outer_face || a.face_size(f) != 3) continue;
    FillTri t;
    for (int i = 0; i < 3; ++i) t.pts[i] = e.pos[a.vertex(a.face(f).boundary[i])];
    out.push_back(t);
  }
  return out;
}

}  // namespace

std::string emit_svg(const Arrangement& a, const Embedding& e, const CurvePlan* plan,
                     const RenderStyle& style) {
  Mapper map(e.pos, style.size, style.margin);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(style.size)
     << "\" height=\"" << num(style.size) << "\" viewBox=\"0 0 " << num(style.size) << " "
     << num(style.size) << "\">\n";

  for (const FillTri& t : triangle_fills(a, e)) {
    os << "<path fill=\"" << style.fill << "\" stroke=\"none\" d=\"";
    for (int i = 0; i < 3; ++i) {
      auto p = map.svg(t.pts[i]);
      os << (i ? "L" : "M") << num(p[0]) << " " << num(p[1]) << " ";
    }
    os << "Z\"/>\n";
  }

  for (CircleId c = 0; c < a.n(); ++c) {
    const char* color = kPalette[c % 12];
    os << "<path fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
       << num(style.stroke) << "\" d=\"";
    if (plan) {
      std::vector<std::array<double, 2>> bez;
      spline_beziers(plan->control[c], bez);
      auto p0 = map.svg(bez[0]);
      os << "M" << num(p0[0]) << " " << num(p0[1]) << " ";
      for (size_t i = 1; i + 2 < bez.size() + 1; i += 3) {
        auto c1 = map.svg(bez[i]), c2 = map.svg(bez[i + 1]),
             p = map.svg(bez[(i + 2) % bez.size()]);
        os << "C" << num(c1[0]) << " " << num(c1[1]) << " " << num(c2[0]) << " " << num(c2[1])
           << " " << num(p[0]) << " " << num(p[1]) << " ";
      }
      os << "Z\"/>\n";
    } else {
      const auto& cyc = a.cycle(c);
      for (size_t i = 0; i < cyc.size(); ++i) {
        auto p = map.svg(e.pos[cyc[i]]);
        os << (i ? "L" : "M") << num(p[0]) << " " << num(p[1]) << " ";
      }
      os << "Z\"/>\n";
    }
  }

  if (!plan) {
    // digon edges re-drawn dashed in the two circle colors alternatingly
    for (FaceId f = 0; f < a.face_count(); ++f) {
      if (a.face_size(f) != 2) continue;
      double off = 0;
      for (DartId d : a.face(f).boundary) {
        auto p = map.svg(e.pos[a.vertex(d)]), q = map.svg(e.pos[a.vertex(a.twin(d))]);
        os << "<line x1=\"" << num(p[0]) << "\" y1=\"" << num(p[1]) << "\" x2=\"" << num(q[0])
           << "\" y2=\"" << num(q[1]) << "\" stroke=\"" << kPalette[a.circle(d) % 12]
           << "\" stroke-width=\"" << num(style.stroke) << "\" stroke-dasharray=\"6 6\""
           << " stroke-dashoffset=\"" << num(off) << "\"/>\n";
        off += 6;
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string emit_ipe(const Arrangement& a, const Embedding& e, const CurvePlan* plan,
                     const RenderStyle& style) {
  Mapper map(e.pos, style.size, style.margin);
  std::ostringstream os;
  os << "<?xml version=\"1.0\"?>\n<!DOCTYPE ipe SYSTEM \"ipe.dtd\">\n"
     << "<ipe version=\"70218\" creator=\"pcarr\">\n<page>\n";
  for (const FillTri& t : triangle_fills(a, e)) {
    os << "<path fill=\"" << (style.fill == "gray" ? "0.745 0.745 0.745" : style.fill)
       << "\">\n";
    for (int i = 0; i < 3; ++i) {
      auto p = map.ipe(t.pts[i]);
      os << num(p[0]) << " " << num(p[1]) << (i ? " l\n" : " m\n");
    }
    os << "h\n</path>\n";
  }
  for (CircleId c = 0; c < a.n(); ++c) {
    os << "<path stroke=\"" << ipe_color(kPalette[c % 12]) << "\" pen=\""
       << num(style.stroke) << "\">\n";
    if (plan) {
      for (auto& pt : plan->control[c]) {
        auto p = map.ipe(pt);
        os << num(p[0]) << " " << num(p[1]) << "\n";
      }
      os << "u\n";  // closed uniform cubic B-spline
    } else {
      const auto& cyc = a.cycle(c);
      for (size_t i = 0; i < cyc.size(); ++i) {
        auto p = map.ipe(e.pos[cyc[i]]);
        os << num(p[0]) << " " << num(p[1]) << (i ? " l\n" : " m\n");
      }
      os << "h\n";
    }
    os << "</path>\n";
  }
  if (!plan) {
    for (FaceId f = 0; f < a.face_count(); ++f) {
      if (a.face_size(f) != 2) continue;
      for (DartId d : a.face(f).boundary) {
        auto p = map.ipe(e.pos[a.vertex(d)]), q = map.ipe(e.pos[a.vertex(a.twin(d))]);
        os << "<path stroke=\"" << ipe_color(kPalette[a.circle(d) % 12])
           << "\" dash=\"dashed\" pen=\"" << num(style.stroke) << "\">\n"
           << num(p[0]) << " " << num(p[1]) << " m\n"
           << num(q[0]) << " " << num(q[1]) << " l\n</path>\n";
      }
    }
  }
  os << "</page>\n</ipe>\n";
  return os.str();
}

namespace {

// rotation-system map for the pseudoline drawing inside a polygon
struct RotMap {
  int nv = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> rot;  // per vertex, incident darts ccw

  int add_vertex() {
    rot.emplace_back();
    return nv++;
  }
  int add_edge(int u, int v) {
    edges.push_back({u, v});
    return static_cast<int>(edges.size()) - 1;
  }
  int dart(int edge, int end) const { return 2 * edge + end; }
  int dart_vertex(int d) const { return d & 1 ? edges[d >> 1].second : edges[d >> 1].first; }

  GGraph to_graph() const {
    const int D = 2 * static_cast<int>(edges.size());
    std::vector<int> next(D, -1);
    for (const auto& r : rot)
      for (size_t i = 0; i < r.size(); ++i) next[r[i]] = r[(i + 1) % r.size()];
    std::vector<int> face_of(D, -1);
    GGraph g;
    g.nv = nv;
    for (int d0 = 0; d0 < D; ++d0) {
      if (face_of[d0] != -1) continue;
      int id = static_cast<int>(g.faces.size());
      std::vector<int> cyc;
      int d = d0;
      do {
        face_of[d] = id;
        cyc.push_back(dart_vertex(d));
        d = next[d ^ 1];
        if (d < 0) throw ArrangementError("incomplete rotation data");
      } while (d != d0);
      g.faces.push_back(std::move(cyc));
    }
    for (int ei = 0; ei < static_cast<int>(edges.size()); ++ei)
      g.edges.push_back({edges[ei].first, edges[ei].second, face_of[2 * ei],
                         face_of[2 * ei + 1]});
    return g;
  }
};

}  // namespace

PseudolineDrawing render_pseudolines(const WiringDiagram& w, const TutteConfig& cfg,
                                     const RenderStyle& style, const std::string& format,
                                     int line_at_infinity) {
  w.validate();
  const int inf = line_at_infinity > 0 ? line_at_infinity : w.n_lines;
  WiringDiagram r = delete_line(w, inf);
  const int m = r.n_lines;
  if (m < 2) throw ArrangementError("too few lines to draw");

  RotMap map;
  // boundary points: left ends of lines m..1 then right ends of lines m..1
  std::vector<int> left(m + 1), right(m + 1);
  std::vector<int> boundary;
  for (int i = m; i >= 1; --i) boundary.push_back(left[i] = map.add_vertex());
  for (int i = m; i >= 1; --i) boundary.push_back(right[i] = map.add_vertex());

  // per-line vertex chains through the crossings in sweep order
  std::vector<int> perm(m + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> chain(m + 1);
  for (int i = 1; i <= m; ++i) chain[i].push_back(left[i]);
  struct CrossInfo {
    int v, upper, lower;
  };
  std::vector<CrossInfo> crossings;
  for (int p : r.swaps) {
    int lower = perm[p], upper = perm[p + 1];
    int v = map.add_vertex();
    crossings.push_back({v, upper, lower});
    chain[lower].push_back(v);
    chain[upper].push_back(v);
    std::swap(perm[p], perm[p + 1]);
  }
  for (int i = 1; i <= m; ++i) chain[i].push_back(right[i]);

  std::vector<std::vector<int>> edge_of_chain(m + 1);
  for (int i = 1; i <= m; ++i)
    for (size_t k = 0; k + 1 < chain[i].size(); ++k)
      edge_of_chain[i].push_back(map.add_edge(chain[i][k], chain[i][k + 1]));
  // polygon edges around the boundary
  std::vector<int> poly_edges;
  for (size_t k = 0; k < boundary.size(); ++k)
    poly_edges.push_back(map.add_edge(boundary[k], boundary[(k + 1) % boundary.size()]));

  auto line_in_dart = [&](int line, int pos) {  // dart at chain[pos] toward chain[pos-1]
    return map.dart(edge_of_chain[line][pos - 1], 1);
  };
  auto line_out_dart = [&](int line, int pos) {  // dart at chain[pos] toward chain[pos+1]
    return map.dart(edge_of_chain[line][pos], 0);
  };

  // rotations at crossings: (outA, outB, inA, inB) ccw with A the upper line
  std::vector<std::vector<int>> pos_in_chain(map.nv);
  std::vector<std::vector<int>> line_at(map.nv);
  for (int i = 1; i <= m; ++i)
    for (size_t k = 0; k < chain[i].size(); ++k) {
      pos_in_chain[chain[i][k]].push_back(static_cast<int>(k));
      line_at[chain[i][k]].push_back(i);
    }
  for (const CrossInfo& c : crossings) {
    int posA = -1, posB = -1;
    for (size_t t = 0; t < line_at[c.v].size(); ++t) {
      if (line_at[c.v][t] == c.upper) posA = pos_in_chain[c.v][t];
      if (line_at[c.v][t] == c.lower) posB = pos_in_chain[c.v][t];
    }
    map.rot[c.v] = {line_out_dart(c.upper, posA), line_out_dart(c.lower, posB),
                    line_in_dart(c.upper, posA), line_in_dart(c.lower, posB)};
  }
  // rotations at boundary points: (poly-forward, line-inward, poly-backward)
  for (size_t k = 0; k < boundary.size(); ++k) {
    int v = boundary[k];
    int fwd = map.dart(poly_edges[k], 0);
    int back = map.dart(poly_edges[(k + boundary.size() - 1) % boundary.size()], 1);
    int line = line_at[v][0];
    int inward = pos_in_chain[v][0] == 0
                     ? line_out_dart(line, 0)
                     : line_in_dart(line, static_cast<int>(chain[line].size()) - 1);
    map.rot[v] = {fwd, inward, back};
  }

  GGraph g = map.to_graph();
  // outer face: right of the ccw polygon walk
  TutteConfig cfg2 = cfg;
  {
    // the outer face is the one whose cycle uses only boundary vertices
    int outer = -1;
    for (int f = 0; f < static_cast<int>(g.faces.size()); ++f) {
      if (g.faces[f].size() != boundary.size()) continue;
      bool all_b = true;
      for (int v : g.faces[f]) all_b &= v < 2 * m;
      if (all_b) outer = f;
    }
    if (outer < 0) throw ArrangementError("polygon face not found");
    cfg2.outer_face = outer;
  }

  Embedding emb = embed_graph(g, cfg2);
  PseudolineDrawing out;
  out.inner_crossings = static_cast<int>(crossings.size());
  out.converged = emb.converged;
  std::string why;
  out.planar = audit_graph_planarity(g, emb, &why);

  Mapper mp(emb.pos, style.size, style.margin);
  std::ostringstream os;
  bool svg = format != "ipe";
  if (svg)
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(style.size)
       << "\" height=\"" << num(style.size) << "\" viewBox=\"0 0 " << num(style.size) << " "
       << num(style.size) << "\">\n";
  else
    os << "<?xml version=\"1.0\"?>\n<!DOCTYPE ipe SYSTEM \"ipe.dtd\">\n"
       << "<ipe version=\"70218\" creator=\"pcarr\">\n<page>\n";

  // gray triangles
  for (int f = 0; f < static_cast<int>(g.faces.size()); ++f) {
    if (f == emb.outer_face || g.faces[f].size() != 3) continue;
    if (svg) {
      os << "<path fill=\"" << style.fill << "\" stroke=\"none\" d=\"";
      for (int i = 0; i < 3; ++i) {
        auto p = mp.svg(emb.pos[g.faces[f][i]]);
        os << (i ? "L" : "M") << num(p[0]) << " " << num(p[1]) << " ";
      }
      os << "Z\"/>\n";
    } else {
      os << "<path fill=\"" << (style.fill == "gray" ? "0.745 0.745 0.745" : style.fill)
         << "\">\n";
      for (int i = 0; i < 3; ++i) {
        auto p = mp.ipe(emb.pos[g.faces[f][i]]);
        os << num(p[0]) << " " << num(p[1]) << (i ? " l\n" : " m\n");
      }
      os << "h\n</path>\n";
    }
  }
  // the line at infinity as the polygon, then each pseudoline
  if (svg) {
    os << "<path fill=\"none\" stroke=\"" << kPalette[(inf - 1) % 12] << "\" stroke-width=\""
       << num(style.stroke) << "\" d=\"";
    for (size_t k = 0; k < boundary.size(); ++k) {
      auto p = mp.svg(emb.pos[boundary[k]]);
      os << (k ? "L" : "M") << num(p[0]) << " " << num(p[1]) << " ";
    }
    os << "Z\"/>\n";
  } else {
    os << "<path stroke=\"" << ipe_color(kPalette[(inf - 1) % 12]) << "\" pen=\""
       << num(style.stroke) << "\">\n";
    for (size_t k = 0; k < boundary.size(); ++k) {
      auto p = mp.ipe(emb.pos[boundary[k]]);
      os << num(p[0]) << " " << num(p[1]) << (k ? " l\n" : " m\n");
    }
    os << "h\n</path>\n";
  }
  for (int i = 1; i <= m; ++i) {
    int orig = i < inf ? i : i + 1;  // color by the original line label
    if (svg) {
      os << "<path fill=\"none\" stroke=\"" << kPalette[(orig - 1) % 12]
         << "\" stroke-width=\"" << num(style.stroke) << "\" d=\"";
      for (size_t k = 0; k < chain[i].size(); ++k) {
        auto p = mp.svg(emb.pos[chain[i][k]]);
        os << (k ? "L" : "M") << num(p[0]) << " " << num(p[1]) << " ";
      }
      os << "\"/>\n";
    } else {
      os << "<path stroke=\"" << ipe_color(kPalette[(orig - 1) % 12]) << "\" pen=\""
         << num(style.stroke) << "\">\n";
      for (size_t k = 0; k < chain[i].size(); ++k) {
        auto p = mp.ipe(emb.pos[chain[i][k]]);
        os << num(p[0]) << " " << num(p[1]) << (k ? " l\n" : " m\n");
      }
      os << "</path>\n";
    }
  }
  os << (svg ? "</svg>\n" : "</page>\n</ipe>\n");
  out.document = os.str();
  return out;
}

}  // namespace pcarr
