#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcarr/canonical.hpp"
#include "pcarr/extend.hpp"

namespace pcarr {

struct CatalogEntry {
  CanonicalCode code;
  int n = 0;
  int p2 = 0;
  int p3 = 0;
  bool intersecting = false;
  bool digon_free = false;
  bool cylindrical = false;

  std::string flags() const;
  static CatalogEntry of(const Arrangement& a);
};

// Isomorph-free store of enumerated arrangements, one level per circle count,
// each level flagged complete only when its whole frontier was extended.
struct Catalog {
  struct Level {
    int n = 0;
    bool complete = false;
    std::vector<CatalogEntry> entries;  // sorted by code, duplicate-free
  };
  std::vector<Level> levels;

  Level* level(int n);
  const Level* level(int n) const;
  bool complete_for(int n) const;
  int total_entries() const;
};

struct PruneBound {
  std::optional<int> max_p3_plus_2p2;
  bool keeps(const CatalogEntry& e) const {
    return !max_p3_plus_2p2 || e.p3 + 2 * e.p2 <= *max_p3_plus_2p2;
  }
};

struct EnumerateOptions {
  PruneBound prune;
  double budget_seconds = 0;  // 0 = unlimited
  int workers = 0;            // 0 = library default
  bool parallel = true;       // false selects the serial reference path
};

struct EnumerateResult {
  Catalog catalog;
  bool complete = true;  // false when the budget cut the run short
};

// Breadth-wise closure of intersecting one-circle extensions from the unique
// two-circle arrangement up to level n. With a prune bound set, arrangements
// violating p3 + 2*p2 <= bound are dropped before being extended, which loses
// nothing below the bound since the quantity never decreases under extension.
EnumerateResult enumerate_intersecting(int n, const EnumerateOptions& opts = {});

// One extension level: all children of `parents`, deduplicated and sorted by
// code. The serial form is the reference; the parallel form must produce an
// identical result for any worker count.
std::vector<CatalogEntry> extend_level_serial(const std::vector<CanonicalCode>& parents);
std::vector<CatalogEntry> extend_level_parallel(const std::vector<CanonicalCode>& parents,
                                                int workers = 0);

// Per-level statistics for reporting.
struct LevelStats {
  int n = 0;
  bool complete = false;
  int count = 0;
  int min_p3 = -1, max_p3 = -1;
  int min_p3_digon_free = -1, max_p3_digon_free = -1;
  std::vector<std::pair<int, int>> p2_histogram;  // (p2, count)
  int count_digon_free = 0, count_cylindrical = 0;
};
LevelStats catalog_stats(const Catalog::Level& level);
std::string stats_table(const std::vector<LevelStats>& rows);

void save_catalog(const Catalog& c, const std::string& path);
Catalog load_catalog(const std::string& path);

}  // namespace pcarr
