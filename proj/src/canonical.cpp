#include "pcarr/canonical.hpp"

#include <algorithm>
#include <array>

namespace pcarr {

namespace {

// One flag-code pass from a start dart. Vertices are labeled in discovery
// order; at each vertex the four darts are read in rotation order from the
// entry dart; every dart emits 4*label(target vertex) + rotation position of
// its twin there, big-endian 16 bit. The map is reconstructible from this,
// so equal codes mean isomorphic maps.
//
// Returns -1/0/NEW if the produced code is smaller/equal, +1 if the attempt
// became lexicographically greater than `best` and was aborted. When `best`
// is empty the code is always produced in full.
int generate_code(const Arrangement& a, DartId start, bool rev,
                  const CanonicalCode& best, CanonicalCode& out,
                  std::vector<int>& vlabel, std::vector<DartId>& ventry,
                  std::vector<VertexId>& order) {
  const int V = a.vertex_count();
  vlabel.assign(V, -1);
  ventry.assign(V, -1);
  order.clear();
  out.clear();
  out.reserve(8 * V);

  bool smaller = best.empty();
  auto rot = [&](DartId d) { return rev ? a.prev(d) : a.next(d); };
  auto emit = [&](uint16_t val) {
    for (uint8_t byte : {static_cast<uint8_t>(val >> 8), static_cast<uint8_t>(val & 0xff)}) {
      if (!smaller) {
        uint8_t b = best[out.size()];
        if (byte > b) return false;
        if (byte < b) smaller = true;
      }
      out.push_back(byte);
    }
    return true;
  };

  VertexId v0 = a.vertex(start);
  vlabel[v0] = 0;
  ventry[v0] = start;
  order.push_back(v0);
  for (size_t i = 0; i < order.size(); ++i) {
    DartId d = ventry[order[i]];
    for (int k = 0; k < 4; ++k) {
      DartId e = a.twin(d);
      VertexId w = a.vertex(e);
      if (vlabel[w] < 0) {
        vlabel[w] = static_cast<int>(order.size());
        ventry[w] = e;
        order.push_back(w);
      }
      int pos = 0;
      for (DartId f = ventry[w]; f != e; f = rot(f)) ++pos;
      if (!emit(static_cast<uint16_t>(4 * vlabel[w] + pos))) return +1;
      d = rot(d);
    }
  }
  return smaller ? -1 : 0;
}

}  // namespace

CanonicalCode canonical_code(const Arrangement& a) {
  CanonicalCode best, attempt;
  std::vector<int> vlabel;
  std::vector<DartId> ventry;
  std::vector<VertexId> order;
  for (int rev = 0; rev < 2; ++rev)
    for (DartId d = 0; d < a.dart_count(); ++d) {
      int cmp = generate_code(a, d, rev != 0, best, attempt, vlabel, ventry, order);
      if (cmp < 0) best.swap(attempt);
    }
  return best;
}

Arrangement decode(const CanonicalCode& code) {
  if (code.empty() || code.size() % 8 != 0) throw ArrangementError("bad code length");
  const int V = static_cast<int>(code.size() / 8);
  auto val = [&](int idx) {
    return (static_cast<int>(code[2 * idx]) << 8) | code[2 * idx + 1];
  };
  // darts are 4*v + slot; rotation advances the slot
  auto dart = [&](int v, int s) { return 4 * v + s; };
  std::vector<int> twin(4 * V, -1);
  for (int v = 0; v < V; ++v)
    for (int k = 0; k < 4; ++k) {
      int x = val(4 * v + k);
      int w = x >> 2, pos = x & 3;
      if (w < 0 || w >= V) throw ArrangementError("code target out of range");
      twin[dart(v, k)] = dart(w, pos);
    }
  for (int d = 0; d < 4 * V; ++d)
    if (twin[d] < 0 || twin[twin[d]] != d || twin[d] == d)
      throw ArrangementError("code twin structure invalid");

  // circles are the straight-ahead orbits d -> slot+2 of twin(d)
  auto advance = [&](int d) {
    int e = twin[d];
    return dart(e >> 2, ((e & 3) + 2) & 3);
  };
  std::vector<int> orbit_of(4 * V, -1);
  std::vector<std::vector<int>> orbits;
  for (int d0 = 0; d0 < 4 * V; ++d0) {
    if (orbit_of[d0] != -1) continue;
    int id = static_cast<int>(orbits.size());
    std::vector<int> orb;
    for (int d = d0; orbit_of[d] == -1; d = advance(d)) {
      orbit_of[d] = id;
      orb.push_back(d);
    }
    orbits.push_back(std::move(orb));
  }

  CircleData out;
  std::vector<int> circle_of_orbit(orbits.size(), -1);
  for (size_t i = 0; i < orbits.size(); ++i) {
    if (circle_of_orbit[i] != -1) continue;
    int c = out.n++;
    circle_of_orbit[i] = c;
    circle_of_orbit[orbit_of[twin[orbits[i][0]]]] = c;  // reverse direction orbit
    std::vector<VertexId> cyc;
    for (int d : orbits[i]) cyc.push_back(d >> 2);
    out.cycles.push_back(std::move(cyc));
  }
  // circle of a dart, with "out" darts being those on a kept (forward) orbit
  std::vector<uint8_t> is_out(4 * V, 0);
  std::vector<int> circ(4 * V, -1);
  {
    std::vector<uint8_t> kept(orbits.size(), 0);
    std::vector<int> seen(orbits.size(), 0);
    for (size_t i = 0; i < orbits.size(); ++i) {
      int c = circle_of_orbit[i];
      bool first = !seen[c];
      seen[c] = 1;
      for (int d : orbits[i]) {
        circ[d] = c;
        if (first) is_out[d] = 1;
      }
    }
  }

  out.vertices.resize(V);
  for (int v = 0; v < V; ++v) {
    int a = circ[dart(v, 0)], b = circ[dart(v, 1)];
    if (a == b || circ[dart(v, 2)] != a || circ[dart(v, 3)] != b)
      throw ArrangementError("code: vertex without alternating circles");
    int oa = is_out[dart(v, 0)] ? 0 : 2;
    int ob = is_out[dart(v, 1)] ? 1 : 3;
    out.vertices[v] = {a, b, ob == (oa + 1) % 4};
  }
  return Arrangement::build(std::move(out));
}

std::string code_to_hex(const CanonicalCode& code) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(code.size() * 2);
  for (uint8_t b : code) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 0xf]);
  }
  return s;
}

CanonicalCode code_from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw ArrangementError("bad hex code");
  auto nib = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw ArrangementError("bad hex digit");
  };
  CanonicalCode code(hex.size() / 2);
  for (size_t i = 0; i < code.size(); ++i)
    code[i] = static_cast<uint8_t>((nib(hex[2 * i]) << 4) | nib(hex[2 * i + 1]));
  return code;
}

}  // namespace pcarr
