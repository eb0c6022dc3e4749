#include "pcarr/extend.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace pcarr {

namespace {

// Depth-first enumeration of closed curves crossing every circle exactly
// twice. The curve state lives in per-edge crossing lists (order along the
// forward dart) and per-face chord lists; simplicity of the curve is exactly
// pairwise non-interleaving of chord endpoints around each face boundary.
class WalkSearch {
 public:
  WalkSearch(const Arrangement& a, const std::function<void(const ExtensionWalk&)>& fn,
             const WalkOptions& opts)
      : a_(a), fn_(fn), opts_(opts), budget_(opts.max_p3_increase), qbudget_(opts.max_q_increase) {
    const int D = a.dart_count();
    bidx_.assign(D, -1);
    for (FaceId f = 0; f < a.face_count(); ++f) {
      const auto& b = a.face(f).boundary;
      for (size_t i = 0; i < b.size(); ++i) bidx_[b[i]] = static_cast<int>(i);
    }
    sides_.reserve(a.n());
    for (CircleId c = 0; c < a.n(); ++c) sides_.push_back(a.side_map(c));
    edge_pts_.assign(D / 2, {});
    chords_.assign(a.face_count(), {});
    count_.assign(a.n(), 0);
  }

  void run() {
    const int E = a_.dart_count() / 2;
    for (int e0 = 0; e0 < E; ++e0) {
      min_edge_ = e0;
      for (int side = 0; side < 2; ++side) {
        DartId d0 = 2 * e0 + side;
        start_face_ = a_.face_of(d0);
        // place the first crossing
        crossing_dart_.push_back(d0);
        edge_pts_[e0].push_back(0);
        count_[a_.circle(d0)] = 1;
        dfs(a_.face_of(a_.twin(d0)), 0);
        count_[a_.circle(d0)] = 0;
        edge_pts_[e0].clear();
        crossing_dart_.pop_back();
      }
    }
  }

 private:
  // boundary position of crossing x on the boundary of face f, strictly
  // ordered and comparable cyclically
  long pos_in_face(int x, FaceId f) const {
    DartId d = crossing_dart_[x];
    if (a_.face_of(d) != f) d = a_.twin(d);
    const auto& pts = edge_pts_[d >> 1];
    int k = static_cast<int>(std::find(pts.begin(), pts.end(), x) - pts.begin());
    if (d & 1) k = static_cast<int>(pts.size()) - 1 - k;  // backward dart sees reversed order
    return 4L * bidx_[d] + k;
  }

  static bool interleaved(long p, long q, long r, long s) {
    auto between = [&](long x) {
      // x strictly inside the cyclic interval (p, q)
      return p < q ? (x > p && x < q) : (x > p || x < q);
    };
    return between(r) != between(s);
  }

  bool chords_ok(FaceId f, std::pair<int, int> extra) const {
    std::vector<std::pair<int, int>> all = chords_[f];
    all.push_back(extra);
    const size_t m = all.size();
    std::vector<std::pair<long, long>> pos(m);
    for (size_t i = 0; i < m; ++i)
      pos[i] = {pos_in_face(all[i].first, f), pos_in_face(all[i].second, f)};
    for (size_t i = 0; i < m; ++i)
      for (size_t j = i + 1; j < m; ++j)
        if (interleaved(pos[i].first, pos[i].second, pos[j].first, pos[j].second)) return false;
    return true;
  }

  bool face_pairs_ok(FaceId f) const {
    const auto& ch = chords_[f];
    std::vector<std::pair<long, long>> pos(ch.size());
    for (size_t i = 0; i < ch.size(); ++i)
      pos[i] = {pos_in_face(ch[i].first, f), pos_in_face(ch[i].second, f)};
    for (size_t i = 0; i < ch.size(); ++i)
      for (size_t j = i + 1; j < ch.size(); ++j)
        if (interleaved(pos[i].first, pos[i].second, pos[j].first, pos[j].second)) return false;
    return true;
  }

  // host vertices strictly between two boundary points of face f
  int verts_between(FaceId f, int x, int y) const {
    long px = pos_in_face(x, f), py = pos_in_face(y, f);
    int k = a_.face_size(f);
    int ix = static_cast<int>(px / 4), iy = static_cast<int>(py / 4);
    return ((iy - ix) % k + k) % k;
  }

  // extra triangles (or p3+2p2 weight) this chord creates; -1 if disallowed
  int chord_p3_cost(FaceId f, int entry, int x) const {
    if (!opts_.preserve_p3 && budget_ < 0 && qbudget_ < 0) return 0;
    int k1 = verts_between(f, entry, x);
    int k2 = a_.face_size(f) - k1;
    int cost = (k1 == 1) + (k2 == 1) + 2 * (k1 == 0 || k2 == 0);
    if (chords_[f].empty()) {
      if (a_.face_size(f) == 3) cost -= 1;
      if (a_.face_size(f) == 2) cost -= 2;
    }
    if (opts_.preserve_p3 && cost > 0) return -1;
    if (budget_ >= 0 && p3_extra_ + cost > budget_) return -1;
    if (qbudget_ >= 0 && p3_extra_ + cost > qbudget_) return -1;
    return cost;
  }

  void emit() {
    ExtensionWalk w;
    w.steps.reserve(crossing_dart_.size());
    for (size_t x = 0; x < crossing_dart_.size(); ++x) {
      const auto& pts = edge_pts_[crossing_dart_[x] >> 1];
      int pos = static_cast<int>(
          std::find(pts.begin(), pts.end(), static_cast<int>(x)) - pts.begin());
      w.steps.push_back({crossing_dart_[x], pos});
    }
    fn_(w);
  }

  // `f`: face the curve currently sits in, entered via crossing `entry`.
  void dfs(FaceId f, int entry) {
    const int total = static_cast<int>(crossing_dart_.size());
    const int needed = 2 * a_.n() - total;

    if (needed == 0) {
      if (f != start_face_) return;
      if (opts_.digon_free_only &&
          (crossing_dart_[entry] >> 1) == (crossing_dart_[0] >> 1))
        return;
      int cost = chord_p3_cost(f, entry, 0);
      if (cost < 0) return;
      if (chords_ok(f, {entry, 0})) {
        chords_[f].push_back({entry, 0});
        emit();
        chords_[f].pop_back();
      }
      return;
    }

    for (DartId g : a_.face(f).boundary) {
      if ((g >> 1) < min_edge_) continue;
      if (opts_.digon_free_only && (g >> 1) == (crossing_dart_[entry] >> 1)) continue;
      CircleId c = a_.circle(g);
      if (count_[c] >= 2) continue;
      FaceId nf = a_.face_of(a_.twin(g));
      // a circle crossed for the second time must leave the curve on the
      // start face's side, or it can never close up
      if (count_[c] == 1 && sides_[c][nf] != sides_[c][start_face_]) continue;

      auto& pts = edge_pts_[g >> 1];
      if (static_cast<int>(pts.size()) >= 2) continue;
      int x = total;  // id of the new crossing
      for (size_t slot = 0; slot <= pts.size(); ++slot) {
        pts.insert(pts.begin() + slot, x);
        crossing_dart_.push_back(g);
        count_[c]++;
        // new chord plus any reordering on edge g must stay non-crossing
        int cost = chord_p3_cost(f, entry, x);
        bool ok = cost >= 0 && chords_ok(f, {entry, x});
        if (ok && pts.size() == 2) {
          FaceId fa = a_.face_of(g), fb = a_.face_of(a_.twin(g));
          ok = face_pairs_ok(fa) && (fb == fa || face_pairs_ok(fb));
          if (ok && fa != f && fb != f) ok = face_pairs_ok(f);
        }
        if (ok) {
          chords_[f].push_back({entry, x});
          p3_extra_ += cost;
          dfs(nf, x);
          p3_extra_ -= cost;
          chords_[f].pop_back();
        }
        count_[c]--;
        crossing_dart_.pop_back();
        pts.erase(pts.begin() + slot);
      }
    }
  }

  const Arrangement& a_;
  const std::function<void(const ExtensionWalk&)>& fn_;
  WalkOptions opts_;
  std::vector<int> bidx_;
  std::vector<std::vector<uint8_t>> sides_;
  std::vector<std::vector<int>> edge_pts_;
  std::vector<std::vector<std::pair<int, int>>> chords_;
  std::vector<int> count_;
  std::vector<DartId> crossing_dart_;
  FaceId start_face_ = -1;
  int min_edge_ = 0;
  int budget_ = -1;
  int qbudget_ = -1;
  int p3_extra_ = 0;
};

}  // namespace

void for_each_extension_walk(const Arrangement& a,
                             const std::function<void(const ExtensionWalk&)>& fn,
                             const WalkOptions& opts) {
  WalkSearch(a, fn, opts).run();
}

Arrangement apply_walk(const Arrangement& a, const ExtensionWalk& w) {
  const CircleData& d = a.data();
  const int V = static_cast<int>(d.vertices.size());
  const int m = static_cast<int>(w.steps.size());

  std::vector<std::vector<int>> edge_pts(a.dart_count() / 2);
  for (int x = 0; x < m; ++x) {
    auto& pts = edge_pts[w.steps[x].crossed >> 1];
    pts.insert(pts.begin() + std::min<size_t>(w.steps[x].pos, pts.size()), x);
  }

  CircleData out;
  out.n = d.n + 1;
  out.vertices = d.vertices;
  for (int x = 0; x < m; ++x) {
    DartId dart = w.steps[x].crossed;
    // face_of(d) lies right of d, so the curve enters a forward dart's edge
    // from the right of its circle: rotation (X-out, N-out, X-in, N-in)
    out.vertices.push_back({a.circle(dart), d.n, (dart & 1) == 0});
  }

  out.cycles.resize(d.n + 1);
  for (CircleId c = 0; c < d.n; ++c) {
    const auto& cyc = d.cycles[c];
    std::vector<VertexId> nc;
    for (int i = 0; i < static_cast<int>(cyc.size()); ++i) {
      nc.push_back(cyc[i]);
      for (int x : edge_pts[a.fwd_dart(c, i) >> 1]) nc.push_back(V + x);
    }
    out.cycles[c] = std::move(nc);
  }
  for (int x = 0; x < m; ++x) out.cycles[d.n].push_back(V + x);

  return Arrangement::build(std::move(out));
}

std::vector<Arrangement> extensions(const Arrangement& a) {
  std::set<CanonicalCode> seen;
  std::vector<Arrangement> out;
  for_each_extension_walk(a, [&](const ExtensionWalk& w) {
    Arrangement child = apply_walk(a, w);
    if (seen.insert(canonical_code(child)).second) out.push_back(std::move(child));
  });
  std::sort(out.begin(), out.end(), [](const Arrangement& x, const Arrangement& y) {
    return canonical_code(x) < canonical_code(y);
  });
  return out;
}

std::vector<CanonicalCode> extension_codes(const Arrangement& a) {
  std::set<CanonicalCode> seen;
  for_each_extension_walk(a, [&](const ExtensionWalk& w) {
    seen.insert(canonical_code(apply_walk(a, w)));
  });
  return {seen.begin(), seen.end()};
}

}  // namespace pcarr
