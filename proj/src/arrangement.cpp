#include "pcarr/arrangement.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace pcarr {

std::string PkVector::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto& [k, c] : counts) {
    if (!first) os << ", ";
    first = false;
    os << k << ":" << c;
  }
  os << "}";
  return os.str();
}

Arrangement Arrangement::build(CircleData data) {
  Arrangement a;
  a.data_ = std::move(data);
  const CircleData& d = a.data_;

  if (d.n < 1 || static_cast<int>(d.cycles.size()) != d.n)
    throw ArrangementError("circle count mismatch");

  const int V = static_cast<int>(d.vertices.size());
  int total_darts = 0;
  a.base_.resize(d.n);
  for (CircleId c = 0; c < d.n; ++c) {
    a.base_[c] = total_darts;
    if (d.cycles[c].empty()) throw ArrangementError("circle with no crossings");
    total_darts += 2 * static_cast<int>(d.cycles[c].size());
  }
  if (total_darts != 4 * V)
    throw ArrangementError("total cycle length must equal 4V");

  a.twin_.assign(total_darts, -1);
  a.next_.assign(total_darts, -1);
  a.prev_.assign(total_darts, -1);
  a.vertex_.assign(total_darts, -1);
  a.circle_.assign(total_darts, -1);
  a.pos_.assign(total_darts, -1);

  // Per vertex the four incident darts, keyed by (circle, out/in).
  struct VertexEnds {
    std::array<CircleId, 2> circ{-1, -1};
    std::array<DartId, 2> out{-1, -1};
    std::array<DartId, 2> in{-1, -1};
  };
  std::vector<VertexEnds> ends(V);

  auto slot = [&](VertexId v, CircleId c) -> int {
    auto& e = ends[v];
    for (int s = 0; s < 2; ++s)
      if (e.circ[s] == c) return s;
    for (int s = 0; s < 2; ++s)
      if (e.circ[s] < 0) {
        e.circ[s] = c;
        return s;
      }
    throw ArrangementError("vertex " + std::to_string(v) + " used by >2 circles");
  };

  for (CircleId c = 0; c < d.n; ++c) {
    const auto& cyc = d.cycles[c];
    const int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i) {
      VertexId u = cyc[i];
      VertexId w = cyc[(i + 1) % k];
      if (u < 0 || u >= V || w < 0 || w >= V) throw ArrangementError("vertex id out of range");
      DartId f = a.base_[c] + 2 * i;
      DartId b = f + 1;
      a.twin_[f] = b;
      a.twin_[b] = f;
      a.circle_[f] = a.circle_[b] = c;
      a.vertex_[f] = u;
      a.vertex_[b] = w;
      a.pos_[f] = i;
      a.pos_[b] = (i + 1) % k;
      int su = slot(u, c);
      if (ends[u].out[su] != -1) throw ArrangementError("circle visits a vertex twice");
      ends[u].out[su] = f;
      int sw = slot(w, c);
      if (ends[w].in[sw] != -1) throw ArrangementError("circle visits a vertex twice");
      ends[w].in[sw] = b;
    }
  }

  for (VertexId v = 0; v < V; ++v) {
    const CrossingDef& cd = d.vertices[v];
    auto& e = ends[v];
    if (cd.a == cd.b) throw ArrangementError("self-crossing declared");
    int sa = -1, sb = -1;
    for (int s = 0; s < 2; ++s) {
      if (e.circ[s] == cd.a) sa = s;
      if (e.circ[s] == cd.b) sb = s;
    }
    if (sa < 0 || sb < 0 || e.out[sa] < 0 || e.in[sa] < 0 || e.out[sb] < 0 || e.in[sb] < 0)
      throw ArrangementError("vertex " + std::to_string(v) +
                             " not visited by its two declared circles");
    // ccw order of the four ends
    std::array<DartId, 4> rot;
    if (cd.positive)
      rot = {e.out[sa], e.out[sb], e.in[sa], e.in[sb]};
    else
      rot = {e.out[sa], e.in[sb], e.in[sa], e.out[sb]};
    for (int i = 0; i < 4; ++i) {
      a.next_[rot[i]] = rot[(i + 1) % 4];
      a.prev_[rot[(i + 1) % 4]] = rot[i];
    }
  }

  a.derive_faces();
  a.validate();
  return a;
}

void Arrangement::derive_faces() {
  const int D = dart_count();
  face_of_.assign(D, -1);
  faces_.clear();
  for (DartId d0 = 0; d0 < D; ++d0) {
    if (face_of_[d0] != -1) continue;
    Face f;
    FaceId id = static_cast<FaceId>(faces_.size());
    DartId d = d0;
    do {
      if (face_of_[d] != -1) throw ArrangementError("face tracing is not a permutation");
      face_of_[d] = id;
      f.boundary.push_back(d);
      d = next_[twin_[d]];
    } while (d != d0);
    faces_.push_back(std::move(f));
  }
}

void Arrangement::validate() const {
  const int V = vertex_count();
  const int E = edge_count();
  const int F = face_count();

  // rotations are 4-cycles visiting all four ends of the vertex
  const int D = dart_count();
  for (DartId d = 0; d < D; ++d) {
    if (next_[d] < 0 || twin_[d] < 0) throw ArrangementError("incomplete dart structure");
    if (twin_[twin_[d]] != d || twin_[d] == d) throw ArrangementError("twin not an involution");
    DartId e = d;
    for (int i = 0; i < 4; ++i) {
      e = next_[e];
      if (vertex_[e] != vertex_[d]) throw ArrangementError("rotation leaves vertex");
    }
    if (e != d) throw ArrangementError("vertex rotation is not a 4-cycle");
    if (circle_[d] == circle_[next_[d]]) throw ArrangementError("non-alternating vertex");
  }

  // pairwise crossing counts are 0 or 2
  std::map<std::pair<CircleId, CircleId>, int> cnt;
  for (const CrossingDef& cd : data_.vertices) {
    auto key = std::minmax(cd.a, cd.b);
    cnt[{key.first, key.second}]++;
  }
  for (auto& [pr, c] : cnt) {
    if (c == 1)
      throw ArrangementError("odd crossing count between circles " + std::to_string(pr.first) +
                             " and " + std::to_string(pr.second));
    if (c != 2)
      throw ArrangementError("circles " + std::to_string(pr.first) + " and " +
                             std::to_string(pr.second) + " cross " + std::to_string(c) +
                             " times");
  }

  // connectivity over darts via twin and next
  if (D > 0) {
    std::vector<uint8_t> seen(D, 0);
    std::vector<DartId> stack{0};
    seen[0] = 1;
    int found = 1;
    while (!stack.empty()) {
      DartId d = stack.back();
      stack.pop_back();
      for (DartId e : {twin_[d], next_[d]}) {
        if (!seen[e]) {
          seen[e] = 1;
          ++found;
          stack.push_back(e);
        }
      }
    }
    if (found != D) throw ArrangementError("disconnected map");
  }

  if (V - E + F != 2)
    throw ArrangementError("Euler relation violated: V=" + std::to_string(V) +
                           " E=" + std::to_string(E) + " F=" + std::to_string(F));
}

PkVector Arrangement::pk() const {
  PkVector p;
  for (const Face& f : faces_) p.counts[f.size()]++;
  return p;
}

int Arrangement::crossings_between(CircleId c, CircleId d) const {
  int cnt = 0;
  for (const CrossingDef& cd : data_.vertices)
    if ((cd.a == c && cd.b == d) || (cd.a == d && cd.b == c)) ++cnt;
  return cnt;
}

bool Arrangement::is_intersecting() const {
  for (CircleId c = 0; c < n(); ++c)
    for (CircleId d = c + 1; d < n(); ++d)
      if (crossings_between(c, d) != 2) return false;
  return true;
}

std::vector<uint8_t> Arrangement::side_map(CircleId c) const {
  std::vector<uint8_t> side(face_count(), 255);
  std::vector<FaceId> stack;
  side[0] = 0;
  stack.push_back(0);
  while (!stack.empty()) {
    FaceId f = stack.back();
    stack.pop_back();
    for (DartId d : faces_[f].boundary) {
      FaceId g = face_of_[twin_[d]];
      uint8_t s = circle_[d] == c ? 1 - side[f] : side[f];
      if (side[g] == 255) {
        side[g] = s;
        stack.push_back(g);
      } else if (side[g] != s) {
        throw ArrangementError("inconsistent side coloring");
      }
    }
  }
  return side;
}

int Arrangement::vertex_side(const std::vector<uint8_t>& side, VertexId v) const {
  // any corner works: all four agree for a vertex not on the coloring circle
  for (DartId d = 0; d < dart_count(); ++d)
    if (vertex_[d] == v) return side[face_of_[d]];
  throw ArrangementError("vertex has no darts");
}

bool Arrangement::is_cylindrical() const {
  std::vector<std::vector<uint8_t>> sides;
  sides.reserve(n());
  for (CircleId c = 0; c < n(); ++c) sides.push_back(side_map(c));
  const int F = face_count();
  for (FaceId f = 0; f < F; ++f)
    for (FaceId g = f + 1; g < F; ++g) {
      bool all = true;
      for (CircleId c = 0; c < n() && all; ++c)
        if (sides[c][f] == sides[c][g]) all = false;
      if (all) return true;
    }
  return false;
}

bool Arrangement::separates_all_pairs(CircleId c) const {
  auto side = side_map(c);
  // first dart of every vertex, to read off a corner face quickly
  std::vector<DartId> vdart(vertex_count(), -1);
  for (DartId d = 0; d < dart_count(); ++d)
    if (vdart[vertex_[d]] == -1) vdart[vertex_[d]] = d;

  std::map<std::pair<CircleId, CircleId>, std::vector<VertexId>> pairs;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    const CrossingDef& cd = data_.vertices[v];
    if (cd.a == c || cd.b == c) continue;
    auto key = std::minmax(cd.a, cd.b);
    pairs[{key.first, key.second}].push_back(v);
  }
  for (auto& [pr, vs] : pairs) {
    if (vs.size() != 2) return false;  // non-intersecting pair: predicate undefined
    if (side[face_of_[vdart[vs[0]]]] == side[face_of_[vdart[vs[1]]]]) return false;
  }
  return true;
}

std::vector<int> Arrangement::triangle_incidence() const {
  std::vector<int> cnt(n(), 0);
  for (const Face& f : faces_) {
    if (f.size() != 3) continue;
    // a triangle has one edge on each of three distinct circles
    for (DartId d : f.boundary) cnt[circle_[d]]++;
  }
  return cnt;
}

std::string Arrangement::fingerprint() const {
  std::ostringstream os;
  os << "n=" << n() << " V=" << vertex_count() << " E=" << edge_count()
     << " F=" << face_count() << " pk=" << pk().str();
  return os.str();
}

Arrangement remove_circle(const Arrangement& a, CircleId c) {
  if (a.n() < 3) throw ArrangementError("remove_circle needs n >= 3");
  const CircleData& d = a.data();
  CircleData out;
  out.n = d.n - 1;

  std::vector<VertexId> vmap(d.vertices.size(), -1);
  auto cmap = [&](CircleId x) { return x < c ? x : x - 1; };
  for (VertexId v = 0; v < static_cast<int>(d.vertices.size()); ++v) {
    const CrossingDef& cd = d.vertices[v];
    if (cd.a == c || cd.b == c) continue;
    vmap[v] = static_cast<VertexId>(out.vertices.size());
    out.vertices.push_back({cmap(cd.a), cmap(cd.b), cd.positive});
  }
  for (CircleId x = 0; x < d.n; ++x) {
    if (x == c) continue;
    std::vector<VertexId> cyc;
    for (VertexId v : d.cycles[x])
      if (vmap[v] != -1) cyc.push_back(vmap[v]);
    if (cyc.empty())
      throw ArrangementError("removal isolates circle " + std::to_string(x));
    out.cycles.push_back(std::move(cyc));
  }
  return Arrangement::build(std::move(out));  // build() rejects disconnection
}

Arrangement two_circle_seed() {
  CircleData d;
  d.n = 2;
  d.vertices = {{0, 1, true}, {0, 1, false}};
  d.cycles = {{0, 1}, {0, 1}};
  return Arrangement::build(std::move(d));
}

}  // namespace pcarr
