#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "pcarr/canonical.hpp"
#include "pcarr/construct.hpp"
#include "pcarr/wiring.hpp"
#include "support.hpp"

using namespace pcarr;
using namespace pcarr::testsupport;

namespace {
const WiringDiagram w3{3, {1, 2, 1}};
const WiringDiagram w5{5, {1, 2, 3, 4, 1, 2, 3, 1, 2, 1}};
}  // namespace

TEST_CASE("digon family base is the second three circle arrangement") {
  Arrangement a = digon_family(3, "");
  CHECK(a.pk().str() == "{2:3, 3:2, 4:3}");
  CHECK(canonical_code(a) == canonical_code(nonkrupp()));
}

TEST_CASE("digon family has n digons and n-1 triangles") {
  for (int n = 3; n <= 8; ++n) {
    int len = n - 3;
    for (int mask = 0; mask < (1 << len); ++mask) {
      std::string lr;
      for (int b = 0; b < len; ++b) lr += (mask >> b) & 1 ? 'R' : 'L';
      Arrangement a = digon_family(n, lr);
      CHECK(a.is_intersecting());
      CHECK(a.pk().digons() == n);
      CHECK(a.pk().triangles() == n - 1);
      CHECK(a.face_count() == n * (n - 1) + 2);
    }
  }
}

TEST_CASE("digon family members with different finger sequences differ") {
  CHECK(canonical_code(digon_family(6, "LRL")) != canonical_code(digon_family(6, "RRR")));
}

TEST_CASE("digon family digons sit on one side of each circle") {
  Arrangement a = digon_family(5, "RR");
  auto ti = a.triangle_incidence();
  CHECK(*std::min_element(ti.begin(), ti.end()) >= 2);
  CHECK(a.pk().triangles() == 4);
}

TEST_CASE("projective sweep oracle: three lines make four triangles") {
  auto cells = projective_cell_vector(w3);
  CHECK(cells == std::map<int, int>{{3, 4}});
}

TEST_CASE("sweep oracle face count matches Euler characteristic") {
  for (const WiringDiagram& w : {w3, w5}) {
    auto cells = projective_cell_vector(w);
    int F = 0, size_sum = 0;
    for (auto& [k, c] : cells) {
      F += c;
      size_sum += k * c;
    }
    int V = w.n_lines * (w.n_lines - 1) / 2;
    CHECK(F == 1 + V);              // V - E + F = 1 with E = 2V
    CHECK(size_sum == 2 * 2 * V);   // each crossing is incident to 4 cells
  }
}

TEST_CASE("doubling three lines gives the venn type arrangement") {
  Arrangement a = double_pseudolines(w3);
  CHECK(canonical_code(a) == canonical_code(krupp()));
}

TEST_CASE("doubling doubles every count") {
  for (const WiringDiagram& w : {w3, w5}) {
    Arrangement a = double_pseudolines(w);
    auto proj = projective_cell_vector(w);
    int Vp = w.n_lines * (w.n_lines - 1) / 2;
    CHECK(a.vertex_count() == 2 * Vp);
    CHECK(a.edge_count() == 2 * 2 * Vp);
    PkVector pk = a.pk();
    int F = 0;
    for (auto& [k, c] : proj) {
      CHECK(pk[k] == 2 * c);
      F += c;
    }
    CHECK(a.face_count() == 2 * F);
    CHECK(pk.triangles() >= 2 * w.n_lines);
    for (CircleId c = 0; c < a.n(); ++c) CHECK(a.separates_all_pairs(c));
  }
}

TEST_CASE("deleting a line from a wiring keeps it projective") {
  WiringDiagram r = delete_line(w5, 3);
  CHECK(r.n_lines == 4);
  CHECK(static_cast<int>(r.swaps.size()) == 6);
}

TEST_CASE("dual paths of the venn type arrangement") {
  Arrangement a = krupp();
  auto paths = find_dual_paths(a);
  CHECK(!paths.empty());
  for (const DualPath& p : paths) {
    CHECK(static_cast<int>(p.steps.size()) == 3);
    std::set<CircleId> circles;
    for (DartId d : p.steps) circles.insert(a.circle(d));
    CHECK(circles.size() == 3);
    CHECK(p.tau == 4);    // all visited faces are triangles
    CHECK(p.delta == 2);  // both interior chords cut off a corner
  }
}

TEST_CASE("dual paths exist exactly for cylindrical arrangements") {
  // krupp is cylindrical; check the equivalence over small digon-free cases
  Arrangement a = krupp();
  CHECK(a.is_cylindrical() == !find_dual_paths(a).empty());
}

TEST_CASE("triangle flips preserve structure and invert") {
  Arrangement a = krupp();
  CanonicalCode orig = canonical_code(a);
  for (FaceId f = 0; f < a.face_count(); ++f) {
    if (a.face_size(f) != 3) continue;
    Arrangement flipped = triangle_flip(a, f);
    CHECK(flipped.is_intersecting());
    CHECK(flipped.vertex_count() == a.vertex_count());
    CHECK(flipped.pk().digons() >= a.pk().digons());
    // the inverted triangle has the same three corner vertices
    bool found_inverse = false;
    for (FaceId g = 0; g < flipped.face_count(); ++g) {
      if (flipped.face_size(g) != 3) continue;
      if (canonical_code(triangle_flip(flipped, g)) == orig) found_inverse = true;
    }
    CHECK(found_inverse);
  }
}

TEST_CASE("a flip can destroy digons") {
  // pushing a circle back across the opposite crossing of a lens-adjacent
  // triangle removes all three digons: digon counts are not monotone under
  // arbitrary flips, only under the specific digon-trading flips
  Arrangement a = nonkrupp();
  CHECK(a.pk().digons() == 3);
  bool reaches_digon_free = false;
  for (FaceId f = 0; f < a.face_count(); ++f) {
    if (a.face_size(f) != 3) continue;
    if (triangle_flip(a, f).pk().digons() == 0) reaches_digon_free = true;
  }
  CHECK(reaches_digon_free);
}

TEST_CASE("flip search reaches the maximum at n=5") {
  Arrangement start = digon_family(5, "RR");  // p3 = 4
  FlipSearchResult res = maximize_triangles(start, 20000, 8, 1);
  CHECK(res.best_p3 == 13);
  CHECK(res.best.pk().triangles() == 13);
}

TEST_CASE("merge of two venn type arrangements") {
  Arrangement a = krupp();
  auto paths = find_dual_paths(a);
  REQUIRE(!paths.empty());
  const DualPath& p = paths.front();
  FaceId tri = 0;
  CircleId circ = a.circle(a.face(tri).boundary.front());
  Arrangement c = merge(a, p, a, tri, circ);
  CHECK(c.n() == 5);
  CHECK(c.is_intersecting());
  CHECK(c.is_digon_free());
  // with every guest cell a triangle, the far side of the buckle edge loses
  // a triangle too: the exact count is one below the plain formula
  CHECK(buckle_far_cell_is_triangle(a, tri, circ));
  CHECK(c.pk().triangles() == merge_p3_expected(a, p, a, tri, circ));
  CHECK(c.pk().triangles() == 12);
  CHECK(c.is_cylindrical());  // guest is cylindrical, so is the merge
}

TEST_CASE("merge count formula is exact over assorted small inputs") {
  Arrangement host = krupp();
  auto paths = find_dual_paths(host);
  REQUIRE(!paths.empty());
  int checked = 0;
  for (const Arrangement& guest : {krupp(), digon_family(4, "R"), digon_family(4, "L")}) {
    if (!guest.is_digon_free()) continue;  // merge needs digon-free guests
    for (FaceId tri = 0; tri < guest.face_count(); ++tri) {
      if (guest.face_size(tri) != 3) continue;
      for (DartId d : guest.face(tri).boundary) {
        CircleId circ = guest.circle(d);
        for (size_t pi = 0; pi < paths.size() && pi < 2; ++pi) {
          Arrangement c = merge(host, paths[pi], guest, tri, circ);
          CHECK(c.n() == host.n() + guest.n() - 1);
          CHECK(c.is_digon_free());
          CHECK(c.is_intersecting());
          CHECK(c.pk().triangles() == merge_p3_expected(host, paths[pi], guest, tri, circ));
          ++checked;
        }
      }
    }
  }
  CHECK(checked >= 10);
}
