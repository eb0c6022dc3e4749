#pragma once

#include <functional>
#include <vector>

#include "pcarr/arrangement.hpp"
#include "pcarr/canonical.hpp"

namespace pcarr {

// A closed curve through the arrangement, recorded as the cyclic sequence of
// crossed edges. `crossed` is the dart whose left face the curve leaves (it
// passes from face_of(crossed) into face_of(twin(crossed))); `pos` is the
// final position of the crossing among all walk crossings on that edge,
// ordered along the edge's forward dart. The walk crosses every pseudocircle
// exactly twice, avoids vertices, and is simple: within every face the chords
// between consecutive boundary points are pairwise non-crossing.
struct ExtensionWalk {
  struct Step {
    DartId crossed;
    int pos;
  };
  std::vector<Step> steps;
};

struct WalkOptions {
  // Forbid two consecutive crossings on the same edge. A new digon appears
  // exactly when a chord has both ends on one edge, so with a digon-free
  // host this enumerates precisely the digon-free extensions.
  bool digon_free_only = false;
  // Additionally forbid chords that cut a corner off a cell, except the
  // unavoidable corner in a triangle's first chord. Every triangle of the
  // child then corresponds to a triangle of the host, so exactly the
  // digon-free extensions with unchanged p3 are enumerated.
  bool preserve_p3 = false;
  // Upper bound on p3(child) - p3(host) for digon-free hosts with
  // digon_free_only set; every corner cut adds exactly one triangle.
  // Negative means unbounded. preserve_p3 is the same as 0.
  int max_p3_increase = -1;
  // Upper bound on (p3+2*p2)(child) - (p3+2*p2)(host). The quantity never
  // decreases under insertion, so pruning on it is sound; the per-chord cost
  // is exact for single-chorded cells and conservative for re-entered ones.
  int max_q_increase = -1;
};

// Enumerates every extension walk, anchored so that each closed curve is
// visited only a handful of times (first crossing on its minimal edge).
void for_each_extension_walk(const Arrangement& a,
                             const std::function<void(const ExtensionWalk&)>& fn,
                             const WalkOptions& opts = {});

// Inserts the walk as pseudocircle n; the result passes all invariants.
Arrangement apply_walk(const Arrangement& a, const ExtensionWalk& w);

// All intersecting one-circle extensions of `a` up to isomorphism, sorted by
// canonical code. Every intersecting arrangement on n+1 circles whose
// deletion of the new circle gives `a` appears exactly once.
std::vector<Arrangement> extensions(const Arrangement& a);

// Canonical codes of the extensions only (cheaper bookkeeping for searches).
std::vector<CanonicalCode> extension_codes(const Arrangement& a);

}  // namespace pcarr
