#pragma once

#include <random>
#include <vector>

#include "pcarr/arrangement.hpp"
#include "pcarr/wiring.hpp"
#include <map>

namespace pcarr::testsupport {

// Hand-checked fixtures. Krupp is the Venn-type arrangement of three
// pairwise separating circles (all eight cells triangles); NonKrupp is the
// other intersecting arrangement of three pseudocircles (three digons, two
// triangles, three quadrangles).
Arrangement krupp();
Arrangement nonkrupp();

// Four circles in a cyclic chain, consecutive ones crossing: connected,
// bipartite intersection graph, not pairwise intersecting.
Arrangement chain4();

// Independent geometric constructor: derives the combinatorial data of an
// arrangement of actual circles in the plane. Throws on tangency, triple
// points, or crossing clusters too tight to order reliably.
struct Circle {
  double x, y, r;
};
CircleData circle_data(const std::vector<Circle>& circles);
Arrangement from_circles(const std::vector<Circle>& circles);

// Structure-preserving random relabeling: permutes circle ids, rotates each
// cycle, optionally reverses circle directions, permutes vertex ids.
CircleData relabel(const CircleData& d, std::mt19937& rng);

// Mirror image (reflection of the sphere): all rotation signs flip.
CircleData mirrored(const CircleData& d);

// Independent cell-vector oracle for projective wiring diagrams: sweeps the
// diagram left to right tracking the open cell in every gap between wires,
// then glues the right border of gap g to the left border of gap n-g (the
// half twist closing the projective plane). Returns k -> number of k-cells.
std::map<int, int> projective_cell_vector(const WiringDiagram& w);

}  // namespace pcarr::testsupport
