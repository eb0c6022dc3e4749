#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcarr {

using CircleId = int;
using VertexId = int;
using DartId = int32_t;
using FaceId = int;

class ArrangementError : public std::runtime_error {
 public:
  explicit ArrangementError(const std::string& what) : std::runtime_error(what) {}
};

// A crossing of two pseudocircles. `positive` fixes the counterclockwise
// rotation of the four edge ends: (a-out, b-out, a-in, b-in) when positive,
// (a-out, b-in, a-in, b-out) otherwise, with in/out taken relative to each
// circle's traversal direction.
struct CrossingDef {
  CircleId a = -1;
  CircleId b = -1;
  bool positive = true;
};

// Plain combinatorial description: every pseudocircle as its cyclic sequence
// of crossings, plus the local rotation sign at each crossing. This is what
// the .arr file format stores and what all constructions produce.
struct CircleData {
  int n = 0;
  std::vector<CrossingDef> vertices;            // indexed by VertexId
  std::vector<std::vector<VertexId>> cycles;    // indexed by CircleId
};

struct Face {
  std::vector<DartId> boundary;  // face-tracing orbit, face lies left of each dart
  int size() const { return static_cast<int>(boundary.size()); }
};

struct PkVector {
  std::map<int, int> counts;

  int operator[](int k) const {
    auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
  }
  int digons() const { return (*this)[2]; }
  int triangles() const { return (*this)[3]; }
  int total() const {
    int t = 0;
    for (auto& [k, c] : counts) t += c;
    return t;
  }
  bool operator==(const PkVector& o) const { return counts == o.counts; }
  std::string str() const;
};

// Dart-based plane map of a simple arrangement of pseudocircles.
// Darts emanate from vertices; next() is the counterclockwise successor
// around the vertex, twin() the other end of the same edge segment.
// Faces are the orbits of d -> next(twin(d)); the boundary walk traverses
// every dart in its own direction and the face lies RIGHT of each dart.
//
// Immutable after build(); all operations on it are pure.
class Arrangement {
 public:
  static Arrangement build(CircleData data);

  int n() const { return data_.n; }
  int vertex_count() const { return static_cast<int>(data_.vertices.size()); }
  int dart_count() const { return static_cast<int>(twin_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int face_count() const { return static_cast<int>(faces_.size()); }

  const CircleData& data() const { return data_; }
  const CrossingDef& crossing(VertexId v) const { return data_.vertices[v]; }
  const std::vector<VertexId>& cycle(CircleId c) const { return data_.cycles[c]; }

  DartId twin(DartId d) const { return twin_[d]; }
  DartId next(DartId d) const { return next_[d]; }     // ccw around vertex
  DartId prev(DartId d) const { return prev_[d]; }
  VertexId vertex(DartId d) const { return vertex_[d]; }
  CircleId circle(DartId d) const { return circle_[d]; }
  bool forward(DartId d) const { return (d & 1) == 0; }  // along listed direction

  // Dart from cycle position i of circle c toward position i+1.
  DartId fwd_dart(CircleId c, int i) const { return base_[c] + 2 * i; }
  DartId bwd_dart(CircleId c, int i) const { return base_[c] + 2 * i + 1; }
  // Index into cycle(c) of the vertex a dart emanates from.
  int cycle_pos(DartId d) const { return pos_[d]; }

  FaceId face_of(DartId d) const { return face_of_[d]; }
  const Face& face(FaceId f) const { return faces_[f]; }
  const std::vector<Face>& faces() const { return faces_; }
  int face_size(FaceId f) const { return faces_[f].size(); }

  PkVector pk() const;
  bool is_intersecting() const;
  bool is_digon_free() const { return pk().digons() == 0; }

  // Number of crossings shared by circles c and d (0 or 2 in valid input).
  int crossings_between(CircleId c, CircleId d) const;

  // 2-coloring of faces by side of circle c; side 0 contains face 0's side.
  std::vector<uint8_t> side_map(CircleId c) const;
  // Side of a vertex not lying on c (all four corner faces agree).
  int vertex_side(const std::vector<uint8_t>& side, VertexId v) const;

  bool is_cylindrical() const;
  bool separates_all_pairs(CircleId c) const;

  // Per circle, number of distinct triangular faces with an edge on it.
  std::vector<int> triangle_incidence() const;

  std::string fingerprint() const;  // short human-readable summary

 private:
  Arrangement() = default;
  void derive_faces();
  void validate() const;

  CircleData data_;
  std::vector<DartId> twin_, next_, prev_;
  std::vector<VertexId> vertex_;
  std::vector<CircleId> circle_;
  std::vector<int> pos_;
  std::vector<DartId> base_;     // first dart id per circle
  std::vector<FaceId> face_of_;
  std::vector<Face> faces_;
};

// Subarrangement with circle c deleted; throws if the result disconnects
// or a remaining circle loses all its crossings.
Arrangement remove_circle(const Arrangement& a, CircleId c);

// The unique intersecting arrangement of two pseudocircles.
Arrangement two_circle_seed();

}  // namespace pcarr
