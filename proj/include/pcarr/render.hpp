#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pcarr/arrangement.hpp"
#include "pcarr/wiring.hpp"

namespace pcarr {

struct TutteConfig {
  int max_iterations = 50;
  double eps = 1e-4;        // relative max weight change at termination
  double p_exponent = 4.0;  // area term p(x) = x^4
  double q_scale = 0.1;     // length term q(x) = x^2 / 10
  double q_exponent = 2.0;
  int outer_face = -1;      // -1: largest non-digon cell, ties to lowest id
  double solve_tol = 1e-10;
};

struct Embedding {
  std::vector<std::array<double, 2>> pos;            // per vertex
  std::vector<std::array<double, 2>> outer_polygon;  // corners, ccw
  int outer_face = -1;
  int iterations = 0;
  bool converged = false;
  std::vector<double> weight_change;  // max relative change per iteration
};

// Iterated weighted Tutte embedding of the crossing graph: outer cell fixed
// as a regular polygon, every interior vertex the weight-proportional
// barycenter of its neighbors, weights driven by face areas and edge
// lengths of the previous round and renormalized to mean one.
Embedding tutte_embed(const Arrangement& a, const TutteConfig& cfg = {});

// No two non-adjacent segments intersect; adjacent ones meet only at the
// shared endpoint. Parallel digon edges coincide and are exempt.
bool audit_planarity(const Arrangement& a, const Embedding& e, std::string* why = nullptr);

// Face orientation invariant: all bounded cells carry the same sign and
// their areas sum to the outer polygon's area.
bool audit_face_orientation(const Arrangement& a, const Embedding& e, double tol = 1e-9);

struct CurvePlan {
  std::vector<std::vector<std::array<double, 2>>> control;  // closed, per circle
  std::vector<double> clearance;                            // d(v) per vertex
};

// 2-subdivision with per-vertex clearance, digons pinched to a touching
// point; control polygons for closed uniform cubic B-splines.
CurvePlan curve_plan(const Embedding& e, const Arrangement& a);

struct RenderStyle {
  double size = 600;
  double margin = 24;
  double stroke = 2.0;
  std::string fill = "gray";  // triangle fill
  bool curved = false;
};

std::string emit_svg(const Arrangement& a, const Embedding& e,
                     const CurvePlan* plan, const RenderStyle& style);
std::string emit_ipe(const Arrangement& a, const Embedding& e,
                     const CurvePlan* plan, const RenderStyle& style);

// Drawing of a projective wiring diagram with one line as a regular polygon
// at infinity and the rest as curves ending on it.
struct PseudolineDrawing {
  std::string document;
  int inner_crossings = 0;
  bool planar = true;
  bool converged = false;
};
PseudolineDrawing render_pseudolines(const WiringDiagram& w, const TutteConfig& cfg,
                                     const RenderStyle& style, const std::string& format,
                                     int line_at_infinity = -1);

}  // namespace pcarr
