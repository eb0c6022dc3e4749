#include "doctest.h"

#include <cstdio>

#include "pcarr/arr_io.hpp"
#include "pcarr/construct.hpp"
#include "pcarr/enumerate.hpp"
#include "pcarr/wiring.hpp"
#include "support.hpp"

using namespace pcarr;
using namespace pcarr::testsupport;

namespace {
std::string data_file(const std::string& rel) {
  for (const char* base : {"data/", "../data/", "../../data/", "../../../data/"}) {
    std::string p = base + rel;
    if (FILE* f = std::fopen(p.c_str(), "r")) {
      std::fclose(f);
      return p;
    }
  }
  FAIL("cannot locate data/", rel);
  return {};
}
}  // namespace

TEST_CASE("bundled minimal six circle arrangement") {
  Arrangement a = load_arr(data_file("arr/a6.arr"));
  CHECK(a.n() == 6);
  CHECK(a.pk().str() == "{3:8, 4:24}");
  CHECK(a.is_intersecting());
  CHECK(a.is_digon_free());
  CHECK(a.is_cylindrical());
}

TEST_CASE("bundled twelve circle host") {
  Arrangement a = load_arr(data_file("arr/min_tri_n12.arr"));
  CHECK(a.n() == 12);
  CHECK(a.vertex_count() == 132);
  CHECK(a.pk().triangles() == 16);
  CHECK(a.is_digon_free());
  CHECK(a.is_intersecting());
  // the dual-path statistics the recursive merge family relies on
  auto paths = find_dual_paths(a);
  bool has21 = false;
  for (const DualPath& p : paths) has21 |= p.delta == 2 && p.tau == 1;
  CHECK(has21);
}

TEST_CASE("bundled wirings are projective") {
  for (const char* name : {"proj3", "proj5", "proj6max", "nonpappus9"}) {
    WiringDiagram w = load_wiring(data_file(std::string("wirings/") + name + ".wiring"));
    CHECK(static_cast<int>(w.swaps.size()) == w.n_lines * (w.n_lines - 1) / 2);
  }
}

TEST_CASE("two nested circles plus one crossing both") {
  // hand analysis: the pair (inside A and C, outside B and C) is separated by
  // all three circles, so the arrangement is cylindrical
  Arrangement a = from_circles({{0.0, 0.0, 1.0}, {0.0, 0.0, 3.0}, {2.2, 0.0, 1.6}});
  CHECK(a.n() == 3);
  CHECK_FALSE(a.is_intersecting());
  CHECK(a.is_cylindrical());
}

TEST_CASE("the two circle level has no triangles") {
  auto res = enumerate_intersecting(2);
  LevelStats s = catalog_stats(*res.catalog.level(2));
  CHECK(s.count == 1);
  CHECK(s.max_p3 == 0);
}

TEST_CASE("dual paths exist exactly for cylindrical digon-free entries") {
  auto res = enumerate_intersecting(4);
  for (int n : {3, 4})
    for (const CatalogEntry& e : res.catalog.level(n)->entries) {
      if (!e.digon_free) continue;
      Arrangement a = decode(e.code);
      CHECK(a.is_cylindrical() == !find_dual_paths(a).empty());
    }
}

TEST_CASE("worker count does not change catalogs") {
  std::vector<CanonicalCode> parents;
  for (const Arrangement& a : extensions(two_circle_seed()))
    parents.push_back(canonical_code(a));
  auto one = extend_level_parallel(parents, 1);
  auto two = extend_level_parallel(parents, 2);
  REQUIRE(one.size() == two.size());
  for (size_t i = 0; i < one.size(); ++i) CHECK(one[i].code == two[i].code);
}
