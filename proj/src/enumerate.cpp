#include "pcarr/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pcarr {

std::string CatalogEntry::flags() const {
  std::string s;
  s += intersecting ? 'i' : '-';
  s += digon_free ? 'd' : '-';
  s += cylindrical ? 'c' : '-';
  return s;
}

CatalogEntry CatalogEntry::of(const Arrangement& a) {
  CatalogEntry e;
  e.code = canonical_code(a);
  e.n = a.n();
  PkVector pk = a.pk();
  e.p2 = pk.digons();
  e.p3 = pk.triangles();
  e.intersecting = a.is_intersecting();
  e.digon_free = e.p2 == 0;
  e.cylindrical = a.is_cylindrical();
  return e;
}

Catalog::Level* Catalog::level(int n) {
  for (auto& l : levels)
    if (l.n == n) return &l;
  return nullptr;
}

const Catalog::Level* Catalog::level(int n) const {
  for (auto& l : levels)
    if (l.n == n) return &l;
  return nullptr;
}

bool Catalog::complete_for(int n) const {
  const Level* l = level(n);
  return l && l->complete;
}

int Catalog::total_entries() const {
  int t = 0;
  for (auto& l : levels) t += static_cast<int>(l.entries.size());
  return t;
}

namespace {

void sort_unique(std::vector<CatalogEntry>& v) {
  std::sort(v.begin(), v.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.code < b.code; });
  v.erase(std::unique(v.begin(), v.end(),
                      [](const CatalogEntry& a, const CatalogEntry& b) { return a.code == b.code; }),
          v.end());
}

std::vector<CatalogEntry> children_of(const CanonicalCode& parent_code) {
  Arrangement parent = decode(parent_code);
  std::vector<CatalogEntry> out;
  std::set<CanonicalCode> seen;
  for_each_extension_walk(parent, [&](const ExtensionWalk& w) {
    Arrangement child = apply_walk(parent, w);
    CatalogEntry e = CatalogEntry::of(child);
    if (seen.insert(e.code).second) out.push_back(std::move(e));
  });
  return out;
}

}  // namespace

std::vector<CatalogEntry> extend_level_serial(const std::vector<CanonicalCode>& parents) {
  std::vector<CatalogEntry> all;
  for (const CanonicalCode& p : parents) {
    auto kids = children_of(p);
    all.insert(all.end(), kids.begin(), kids.end());
  }
  sort_unique(all);
  return all;
}

std::vector<CatalogEntry> extend_level_parallel(const std::vector<CanonicalCode>& parents,
                                                int workers) {
  const int P = static_cast<int>(parents.size());
  std::vector<std::vector<CatalogEntry>> per_parent(P);
#ifdef _OPENMP
  if (workers > 0) omp_set_num_threads(workers);
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < P; ++i) per_parent[i] = children_of(parents[i]);

  std::vector<CatalogEntry> all;
  for (auto& v : per_parent) {
    all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    v.clear();
  }
  sort_unique(all);
  return all;
}

EnumerateResult enumerate_intersecting(int n, const EnumerateOptions& opts) {
  if (n < 2) throw ArrangementError("enumeration needs n >= 2");
  auto t0 = std::chrono::steady_clock::now();
  auto out_of_budget = [&]() {
    if (opts.budget_seconds <= 0) return false;
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    return dt.count() > opts.budget_seconds;
  };

  EnumerateResult res;
  Catalog::Level seed;
  seed.n = 2;
  seed.complete = true;
  seed.entries.push_back(CatalogEntry::of(two_circle_seed()));
  res.catalog.levels.push_back(seed);

  for (int k = 2; k < n; ++k) {
    const Catalog::Level& cur = res.catalog.levels.back();
    std::vector<const CatalogEntry*> kept;
    for (const CatalogEntry& e : cur.entries)
      if (opts.prune.keeps(e)) kept.push_back(&e);
    // extend the low p3+2p2 corner first so budgeted runs reach witnesses
    // near the bound before time runs out
    std::stable_sort(kept.begin(), kept.end(), [](const CatalogEntry* a, const CatalogEntry* b) {
      return a->p3 + 2 * a->p2 < b->p3 + 2 * b->p2;
    });
    std::vector<CanonicalCode> frontier;
    for (const CatalogEntry* e : kept) frontier.push_back(e->code);

    Catalog::Level next;
    next.n = k + 1;
    next.complete = cur.complete;

    if (out_of_budget()) {
      next.complete = false;
      res.complete = false;
      res.catalog.levels.push_back(std::move(next));
      break;
    }

    std::vector<CatalogEntry> entries;
    if (opts.parallel) {
      // chunked so the budget can interrupt between chunks
      const int chunk = std::max<int>(1, static_cast<int>(frontier.size() / 50));
      std::vector<CatalogEntry> acc;
      for (size_t off = 0; off < frontier.size(); off += chunk) {
        if (out_of_budget()) {
          next.complete = false;
          res.complete = false;
          break;
        }
        std::vector<CanonicalCode> part(
            frontier.begin() + off,
            frontier.begin() + std::min(frontier.size(), off + chunk));
        auto kids = extend_level_parallel(part, opts.workers);
        acc.insert(acc.end(), std::make_move_iterator(kids.begin()),
                   std::make_move_iterator(kids.end()));
      }
      sort_unique(acc);
      entries = std::move(acc);
    } else {
      for (const CanonicalCode& p : frontier) {
        if (out_of_budget()) {
          next.complete = false;
          res.complete = false;
          break;
        }
        auto kids = children_of(p);
        entries.insert(entries.end(), kids.begin(), kids.end());
      }
      sort_unique(entries);
    }

    for (CatalogEntry& e : entries)
      if (opts.prune.keeps(e)) next.entries.push_back(std::move(e));
    res.catalog.levels.push_back(std::move(next));
    if (!res.complete) break;
  }
  return res;
}

LevelStats catalog_stats(const Catalog::Level& level) {
  LevelStats s;
  s.n = level.n;
  s.complete = level.complete;
  s.count = static_cast<int>(level.entries.size());
  std::map<int, int> hist;
  for (const CatalogEntry& e : level.entries) {
    if (s.min_p3 < 0 || e.p3 < s.min_p3) s.min_p3 = e.p3;
    if (e.p3 > s.max_p3) s.max_p3 = e.p3;
    if (e.digon_free) {
      ++s.count_digon_free;
      if (s.min_p3_digon_free < 0 || e.p3 < s.min_p3_digon_free) s.min_p3_digon_free = e.p3;
      if (e.p3 > s.max_p3_digon_free) s.max_p3_digon_free = e.p3;
    }
    if (e.cylindrical) ++s.count_cylindrical;
    hist[e.p2]++;
  }
  s.p2_histogram.assign(hist.begin(), hist.end());
  return s;
}

std::string stats_table(const std::vector<LevelStats>& rows) {
  std::ostringstream os;
  os << "n\tcount\tcomplete\tmin_p3\tmax_p3\tmin_p3_df\tmax_p3_df\tdigon_free\tcylindrical\n";
  for (const LevelStats& s : rows) {
    os << s.n << "\t" << s.count << "\t" << (s.complete ? "yes" : "LOWER-BOUND-ONLY") << "\t"
       << s.min_p3 << "\t" << s.max_p3 << "\t" << s.min_p3_digon_free << "\t"
       << s.max_p3_digon_free << "\t" << s.count_digon_free << "\t" << s.count_cylindrical
       << "\n";
  }
  return os.str();
}

void save_catalog(const Catalog& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ArrangementError("cannot write " + path);
  out << "pcarr-catalog 1\n";
  for (const auto& l : c.levels) {
    out << "level " << l.n << " complete=" << (l.complete ? 1 : 0) << "\n";
    for (const CatalogEntry& e : l.entries)
      out << code_to_hex(e.code) << "\t" << e.n << "\t" << e.p2 << "\t" << e.p3 << "\t"
          << e.flags() << "\n";
  }
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArrangementError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("pcarr-catalog 1", 0) != 0)
    throw ArrangementError("not a catalog file: " + path);
  Catalog c;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("level ", 0) == 0) {
      Catalog::Level l;
      std::istringstream ls(line.substr(6));
      std::string comp;
      ls >> l.n >> comp;
      l.complete = comp == "complete=1";
      c.levels.push_back(std::move(l));
      continue;
    }
    if (c.levels.empty()) throw ArrangementError("catalog entry before level header");
    std::istringstream ls(line);
    std::string hex, flags;
    CatalogEntry e;
    if (!(ls >> hex >> e.n >> e.p2 >> e.p3 >> flags))
      throw ArrangementError("bad catalog line: " + line);
    e.code = code_from_hex(hex);
    e.intersecting = flags.size() > 0 && flags[0] == 'i';
    e.digon_free = flags.size() > 1 && flags[1] == 'd';
    e.cylindrical = flags.size() > 2 && flags[2] == 'c';
    c.levels.back().entries.push_back(std::move(e));
  }
  return c;
}

}  // namespace pcarr
