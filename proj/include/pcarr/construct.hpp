#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcarr/arrangement.hpp"
#include "pcarr/wiring.hpp"

namespace pcarr {

// Intersecting arrangement with n digons and n-1 triangles: a black circle
// plus n-1 circles whose fingers poke through it side by side, every later
// circle swept around the outside of all earlier ones. The i-th letter of
// `lr` places the finger of circle i+3 immediately before ('L') or after
// ('R') the previous finger in the cyclic order on the black circle.
Arrangement digon_family(int n, const std::string& lr);

// A simple curve from one face to another crossing every pseudocircle
// exactly once and avoiding vertices. The faces visited are all distinct;
// steps[i] is the dart whose edge is crossed i-th (entering its left face).
struct DualPath {
  std::vector<DartId> steps;
  FaceId start = -1, end = -1;
  int tau = 0;    // triangles among the visited faces, endpoints included
  int delta = 0;  // triangles the curve forms with pairs of host circles
};

// Every dual path of `a` up to reversal, in deterministic order. Empty iff
// the arrangement is not cylindrical. Requires intersecting and digon-free.
std::vector<DualPath> find_dual_paths(const Arrangement& a);

// Recompute tau and delta for a given crossed-edge sequence.
DualPath annotate_path(const Arrangement& a, const std::vector<DartId>& steps);

// Belt merge: replaces circle `circ` of `b` by a belt drawing of `a`, with
// the buckle on the edge that `tri` has on `circ`. The result has
// a.n() + b.n() - 1 pseudocircles and is digon-free and intersecting when
// the inputs are.
Arrangement merge(const Arrangement& a, const DualPath& path, const Arrangement& b,
                  FaceId tri, CircleId circ);

// Triangle count predicted for the merge by the path statistics, before the
// correction for a second triangle on the far side of the buckle edge.
int merge_p3_formula(const Arrangement& a, const DualPath& path, const Arrangement& b);

// Exact prediction: subtracts one more when the cell on the far side of the
// buckle edge is itself a triangle, since that cell absorbs one end of the
// belt and stops being a triangle.
int merge_p3_expected(const Arrangement& a, const DualPath& path, const Arrangement& b,
                      FaceId tri, CircleId circ);

// True when the cell across the buckle edge from `tri` is a triangle.
bool buckle_far_cell_is_triangle(const Arrangement& b, FaceId tri, CircleId circ);

// Local Reidemeister-III surgery on a triangular face: the three pairwise
// crossings of its bounding circles move across, the triangle re-forms
// inverted. Preserves every crossing sign and the crossing counts.
Arrangement triangle_flip(const Arrangement& a, FaceId site);

struct FlipSearchResult {
  Arrangement best;
  int best_p3 = 0;
  std::vector<int> trace;  // flipped face ids, restarts separated by -1
};

// Hill climbing over triangle flips with sideways moves and random restarts;
// deterministic for a fixed seed, tie-breaking by canonical code.
FlipSearchResult maximize_triangles(const Arrangement& a, long budget, int restarts,
                                    uint64_t seed);

}  // namespace pcarr
