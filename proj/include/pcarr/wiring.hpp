#pragma once

#include <string>
#include <vector>

#include "pcarr/arrangement.hpp"

namespace pcarr {

// Projective pseudoline arrangement as a wiring diagram: n wires numbered
// 1..n bottom to top, swaps applied left to right, a swap at position p
// crossing the lines currently on wires p and p+1. Projective means every
// pair of lines swaps exactly once, so the sequence has n(n-1)/2 swaps and
// reverses the order.
struct WiringDiagram {
  int n_lines = 0;
  std::vector<int> swaps;  // positions in 1..n-1

  void validate() const;  // throws ArrangementError on bad data
};

WiringDiagram load_wiring(const std::string& path);
WiringDiagram parse_wiring_string(const std::string& text);
std::string serialize_wiring(const WiringDiagram& w);
void save_wiring(const WiringDiagram& w, const std::string& path);

// Wiring diagram on n-1 lines obtained by deleting one line.
WiringDiagram delete_line(const WiringDiagram& w, int line);

// Crossing order along every line: for each line, the other lines in the
// order met left to right.
std::vector<std::vector<int>> crossing_sequences(const WiringDiagram& w);

// The arrangement of great-pseudocircles double covering the projective
// arrangement: two antipodal copies of every crossing, each line's two
// copies joined into one pseudocircle.
Arrangement double_pseudolines(const WiringDiagram& w);

}  // namespace pcarr
