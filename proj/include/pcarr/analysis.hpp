#pragma once

#include <string>
#include <vector>

#include "pcarr/arrangement.hpp"
#include "pcarr/enumerate.hpp"

namespace pcarr {

// Crossings classified by the number of triangular cells around them.
// members[v] is that count; sharp() lists the crossings with exactly three.
struct CrossingSet {
  std::vector<int> tri_count;
  std::vector<VertexId> sharp() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < static_cast<int>(tri_count.size()); ++v)
      if (tri_count[v] == 3) out.push_back(v);
    return out;
  }
};
CrossingSet classify_crossings(const Arrangement& a);

struct CheckItem {
  std::string check;    // e.g. "bounds/2p2+3p3>=4n"
  std::string subject;  // arrangement tag
  enum Status { PASS, FAIL, SKIP } status = PASS;
  std::string detail;   // counts, or a serialized witness on failure
};

struct CheckReport {
  std::vector<CheckItem> items;
  int failures() const;
  int passes() const;
  void add(const CheckReport& other);
  std::string table() const;      // human-readable lines
  std::string key_values() const; // check=<name> subject=<s> status=<st> detail=...
};

// Counting bounds: 2p2+3p3 >= 4n, p3 >= ceil(2n/3), every circle on >= 2
// triangles, and p3 >= ceil(4n/3) for digon-free inputs.
CheckReport check_bounds(const Arrangement& a, const std::string& subject = "");

// Local structure of triple-triangle crossings: no crossing with four
// incident triangles, sharp neighbors share two triangles, sharp components
// are cliques of size at most three, non-sharp crossings have at most two
// sharp neighbors, and the |X'| <= |X\X'| count with the resulting
// triangle-cell bound.
CheckReport check_claims(const Arrangement& a, const std::string& subject = "");

// All digons incident to one circle lie on a single side of it.
CheckReport check_digon_sides(const Arrangement& a, const std::string& subject = "");

// If some circle separates both crossings of every other pair, p3 >= 2n;
// if a bounded search finds an extension whose new circle does, p3 >= 2n-4.
CheckReport check_separation_theorems(const Arrangement& a, const std::string& subject = "",
                                      int extension_budget = 2000);

// Evidence for the open conjectures over a catalog: never asserted, only
// reported with witnesses.
CheckReport conjecture_status(const Catalog& c);

// Dual graph: one node per face, one link per shared pseudosegment.
struct DualGraph {
  int nodes = 0;
  std::vector<std::pair<int, int>> links;
};
DualGraph dual_graph(const Arrangement& a);
// Replace every digon node by a direct link between its two neighbors.
DualGraph contract_digons(const DualGraph& g, const Arrangement& a);
bool is_3_connected(const DualGraph& g);

struct VerifyOptions {
  bool bounds = true, claims = true, digons = true, separation = true, conjectures = true;
  int workers = 0;
};
CheckReport verify_catalog(const Catalog& c, const VerifyOptions& opts);

}  // namespace pcarr
