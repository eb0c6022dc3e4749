// pcarr: arrangements of pseudocircles as combinatorial maps.
// Subcommands: enumerate, verify, construct, draw, stats, reproduce.
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#ifdef _OPENMP
#include <omp.h>
#endif
#include "pcarr/analysis.hpp"
#include "pcarr/arr_io.hpp"
#include "pcarr/canonical.hpp"
#include "pcarr/construct.hpp"
#include "pcarr/enumerate.hpp"
#include "pcarr/render.hpp"
#include "pcarr/util.hpp"
#include "pcarr/wiring.hpp"

using namespace pcarr;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPartial = 3;

struct Global {
  uint64_t seed = 1;
  int workers = 0;
  std::string out_dir = ".";
  std::string log_level = "warn";
  std::vector<std::string> argv;

  std::string out(const std::string& path) const {
    if (path.empty() || path[0] == '/') return path;
    fs::create_directories(out_dir);
    return (fs::path(out_dir) / path).string();
  }
  Manifest manifest(const std::string& command) const {
    Manifest m;
    m.command = command;
    m.argv = argv;
    m.seed = seed;
    m.workers = workers;
    return m;
  }
};

std::map<std::string, std::pair<std::string, std::string>> load_expected(
    const std::string& path) {
  std::map<std::string, std::pair<std::string, std::string>> out;
  std::ifstream in(path);
  if (!in) throw ArrangementError("cannot open expected-values file " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key, value, origin;
    if (ls >> key >> value >> origin) out[key] = {value, origin};
  }
  return out;
}

class Expected {
 public:
  explicit Expected(const std::string& dir) {
    for (const char* f : {"fixed.tsv", "derived.tsv"}) {
      auto part = load_expected((fs::path(dir) / f).string());
      values_.insert(part.begin(), part.end());
    }
  }
  // a missing value is an error, never silently invented
  std::string get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end())
      throw ArrangementError("expected value '" + key + "' missing from data/expected");
    return it->second.first;
  }
  long get_int(const std::string& key) const { return std::stol(get(key)); }

 private:
  std::map<std::string, std::pair<std::string, std::string>> values_;
};

std::string data_dir() {
  for (const char* c : {"data", "../data", "../../data"})
    if (fs::exists(fs::path(c) / "expected" / "fixed.tsv")) return c;
  throw ArrangementError("cannot locate the data directory; run from the repository root");
}

int cmd_enumerate(const Global& g, int n, int prune, bool digon_free, double budget,
                  const std::string& out_file) {
  EnumerateOptions opts;
  if (prune > 0) opts.prune.max_p3_plus_2p2 = prune;
  opts.budget_seconds = budget;
  opts.workers = g.workers;
  EnumerateResult res = enumerate_intersecting(n, opts);
  Catalog cat = std::move(res.catalog);
  if (digon_free)
    for (auto& level : cat.levels) {
      std::vector<CatalogEntry> kept;
      for (auto& e : level.entries)
        if (e.digon_free) kept.push_back(std::move(e));
      level.entries = std::move(kept);
    }
  std::string path = g.out(out_file);
  save_catalog(cat, path);
  Manifest m = g.manifest("enumerate");
  m.complete = res.complete;
  m.extra.push_back({"levels", std::to_string(cat.levels.size())});
  write_manifest(path, m);
  std::vector<LevelStats> rows;
  for (auto& level : cat.levels) rows.push_back(catalog_stats(level));
  std::cout << stats_table(rows);
  if (!res.complete) {
    log(LogLevel::warn, "budget exhausted; catalog is partial and flagged incomplete");
    return kExitPartial;
  }
  return kExitOk;
}

int cmd_verify(const Global& g, const std::string& catalog_file, const std::string& checks,
               const std::string& report_file) {
  Catalog cat = load_catalog(catalog_file);
  VerifyOptions opts;
  opts.workers = g.workers;
  if (!checks.empty()) {
    opts.bounds = checks.find("bounds") != std::string::npos;
    opts.claims = checks.find("claims") != std::string::npos;
    opts.digons = checks.find("digons") != std::string::npos;
    opts.separation = checks.find("separation") != std::string::npos;
    opts.conjectures = checks.find("conjectures") != std::string::npos;
  }
  CheckReport report = verify_catalog(cat, opts);
  std::string table = report.table();
  std::cout << table;
  if (!report_file.empty()) {
    std::string path = g.out(report_file);
    std::ofstream out(path);
    out << table << "\n" << report.key_values();
    Manifest m = g.manifest("verify");
    m.inputs.push_back(catalog_file);
    m.extra.push_back({"failures", std::to_string(report.failures())});
    write_manifest(path, m);
  }
  return report.failures() ? kExitCheckFailed : kExitOk;
}

int cmd_draw_one(const Arrangement& a, const std::string& format, bool curved,
                 const TutteConfig& cfg, const RenderStyle& style,
                 const std::string& path) {
  Embedding e = tutte_embed(a, cfg);
  std::string doc;
  if (curved) {
    CurvePlan plan = curve_plan(e, a);
    doc = format == "ipe" ? emit_ipe(a, e, &plan, style) : emit_svg(a, e, &plan, style);
  } else {
    doc = format == "ipe" ? emit_ipe(a, e, nullptr, style) : emit_svg(a, e, nullptr, style);
  }
  std::ofstream out(path);
  if (!out) throw ArrangementError("cannot write " + path);
  out << doc;
  if (!e.converged)
    log(LogLevel::warn, path + ": weight iteration hit the iteration cap (flagged)");
  std::string why;
  if (!audit_planarity(a, e, &why))
    log(LogLevel::warn, path + ": planarity audit failed: " + why);
  return kExitOk;
}

int cmd_draw(const Global& g, const std::string& in_file, const std::string& format,
             const std::string& mode, int outer, double eps, int max_iter,
             const std::string& out_path) {
  TutteConfig cfg;
  cfg.outer_face = outer;
  cfg.eps = eps;
  cfg.max_iterations = max_iter;
  RenderStyle style;
  bool curved = mode == "curved";

  std::ifstream probe(in_file);
  std::string first;
  std::getline(probe, first);
  probe.close();

  if (first.rfind("pcarr-catalog", 0) == 0) {
    Catalog cat = load_catalog(in_file);
    fs::create_directories(g.out(out_path));
    std::vector<const CatalogEntry*> entries;
    for (auto& level : cat.levels)
      for (auto& entry : level.entries) entries.push_back(&entry);
    const int count = static_cast<int>(entries.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < count; ++i) {
      std::string name = "n" + std::to_string(entries[i]->n) + "_" + std::to_string(i) +
                         "_" + code_to_hex(entries[i]->code).substr(0, 12) + "." + format;
      try {
        Arrangement a = decode(entries[i]->code);
        cmd_draw_one(a, format, curved, cfg, style,
                     (fs::path(g.out(out_path)) / name).string());
      } catch (const std::exception& ex) {
        log(LogLevel::warn, name + ": skipped (" + ex.what() + ")");
      }
    }
    Manifest m = g.manifest("draw");
    m.inputs.push_back(in_file);
    m.extra.push_back({"drawings", std::to_string(count)});
    write_manifest((fs::path(g.out(out_path)) / "batch").string(), m);
    return kExitOk;
  }

  Arrangement a = load_arr(in_file);
  std::string path = g.out(out_path);
  int rc = cmd_draw_one(a, format, curved, cfg, style, path);
  Manifest m = g.manifest("draw");
  m.inputs.push_back(in_file);
  write_manifest(path, m);
  return rc;
}

int cmd_stats(const Global& g, const std::string& catalog_file, bool digon_free_only) {
  (void)g;
  Catalog cat = load_catalog(catalog_file);
  std::vector<LevelStats> rows;
  for (auto& level : cat.levels) {
    if (digon_free_only) {
      Catalog::Level filtered = level;
      filtered.entries.clear();
      for (auto& e : level.entries)
        if (e.digon_free) filtered.entries.push_back(e);
      rows.push_back(catalog_stats(filtered));
    } else {
      rows.push_back(catalog_stats(level));
    }
  }
  std::cout << stats_table(rows);
  return kExitOk;
}

const DualPath& pick_path(const std::vector<DualPath>& paths, int index) {
  if (index < 0 || index >= static_cast<int>(paths.size()))
    throw ArrangementError("path index out of range; the host has " +
                           std::to_string(paths.size()) + " dual paths");
  return paths[index];
}

// ---- reproduce experiments ----

int reproduce_theorem1(const Global& g, const Expected& exp, bool with_max) {
  EnumerateOptions opts;
  opts.workers = g.workers;
  EnumerateResult res = enumerate_intersecting(5, opts);
  if (!res.complete) return kExitPartial;
  bool ok = true;
  for (int n : {3, 4, 5}) {
    LevelStats s = catalog_stats(*res.catalog.level(n));
    long want_min = exp.get_int("theorem1.min_p3_digonfree.n" + std::to_string(n));
    std::cout << "n=" << n << " min digon-free p3=" << s.min_p3_digon_free
              << " expected=" << want_min << "\n";
    ok &= s.min_p3_digon_free == want_min;
    if (with_max) {
      long want_max = exp.get_int("table1.max_p3.n" + std::to_string(n));
      std::cout << "n=" << n << " max p3=" << s.max_p3 << " expected=" << want_max << "\n";
      ok &= s.max_p3 == want_max;
    }
  }
  if (with_max) {
    LevelStats s = catalog_stats(*res.catalog.level(5));
    long want = exp.get_int("table1.max_p3_digonfree.n5");
    std::cout << "n=5 max digon-free p3=" << s.max_p3_digon_free << " expected=" << want
              << "\n";
    ok &= s.max_p3_digon_free == want;
  }
  std::string path = g.out(with_max ? "table1-small.catalog" : "theorem1-small.catalog");
  save_catalog(res.catalog, path);
  Manifest m = g.manifest("reproduce");
  m.complete = res.complete;
  write_manifest(path, m);
  return ok ? kExitOk : kExitCheckFailed;
}

int reproduce_a6(const Global& g, const Expected& exp) {
  EnumerateOptions opts;
  opts.workers = g.workers;
  opts.prune.max_p3_plus_2p2 = 8;
  EnumerateResult res = enumerate_intersecting(6, opts);
  if (!res.complete) return kExitPartial;
  std::vector<const CatalogEntry*> hits;
  for (const CatalogEntry& e : res.catalog.level(6)->entries)
    if (e.digon_free && e.p3 == exp.get_int("a6.p3")) hits.push_back(&e);
  std::cout << "digon-free n=6 entries with p3=" << exp.get_int("a6.p3") << ": "
            << hits.size() << " expected=" << exp.get_int("a6.count") << "\n";
  bool ok = static_cast<long>(hits.size()) == exp.get_int("a6.count");
  if (ok) {
    std::string want_code = exp.get("a6.code");
    ok &= code_to_hex(hits[0]->code) == want_code;
    std::cout << "canonical code matches bundled transcription: " << (ok ? "yes" : "NO")
              << "\n";
    std::string path = g.out("a6-unique.arr");
    save_arr(decode(hits[0]->code), path);
    write_manifest(path, g.manifest("reproduce"));
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int reproduce_n8(const Global& g, const Expected& exp, double budget) {
  EnumerateOptions opts;
  opts.workers = g.workers;
  opts.prune.max_p3_plus_2p2 = 11;
  opts.budget_seconds = budget;
  EnumerateResult res = enumerate_intersecting(8, opts);
  int hits = 0;
  const Catalog::Level* top = res.catalog.level(8);
  if (top)
    for (const CatalogEntry& e : top->entries)
      if (e.digon_free && e.p3 == exp.get_int("n8.p3")) ++hits;
  std::string path = g.out("n8-counterexamples.catalog");
  save_catalog(res.catalog, path);
  Manifest m = g.manifest("reproduce");
  m.complete = res.complete;
  write_manifest(path, m);
  if (!res.complete) {
    std::cout << "partial run: found " << hits << " witnesses with p3=" << exp.get_int("n8.p3")
              << " (need >=1 for the downgraded criterion)\n";
    return hits >= 1 ? kExitPartial : kExitCheckFailed;
  }
  std::cout << "digon-free n=8 entries with p3=" << exp.get_int("n8.p3") << ": " << hits
            << " expected=" << exp.get_int("n8.count_p3_11") << "\n";
  return hits == exp.get_int("n8.count_p3_11") ? kExitOk : kExitCheckFailed;
}

int reproduce_merge_family(const Global& g, const Expected& exp) {
  Arrangement a12 = load_arr((fs::path(data_dir()) / "arr" / "min_tri_n12.arr").string());
  auto paths = find_dual_paths(a12);
  const DualPath* p21 = nullptr;
  for (const DualPath& p : paths)
    if (p.delta == 2 && p.tau == 1) {
      p21 = &p;
      break;
    }
  if (!p21) throw ArrangementError("bundled host admits no (delta=2, tau=1) path");
  Arrangement c = a12;
  bool ok = true;
  for (int k = 2; k <= 3; ++k) {
    bool merged = false;
    for (FaceId tri = 0; tri < c.face_count() && !merged; ++tri) {
      if (c.face_size(tri) != 3) continue;
      for (DartId d : c.face(tri).boundary) {
        CircleId circ = c.circle(d);
        if (buckle_far_cell_is_triangle(c, tri, circ)) continue;
        c = merge(a12, *p21, c, tri, circ);
        merged = true;
        break;
      }
    }
    if (!merged) throw ArrangementError("no merge site without a far-side triangle");
    long want_n = exp.get_int("merge.k" + std::to_string(k) + ".n");
    long want_p3 = exp.get_int("merge.k" + std::to_string(k) + ".p3");
    std::cout << "k=" << k << ": n=" << c.n() << " p3=" << c.pk().triangles()
              << " expected n=" << want_n << " p3=" << want_p3 << "\n";
    ok &= c.n() == want_n && c.pk().triangles() == want_p3;
    std::string path = g.out("merge-family-k" + std::to_string(k) + ".arr");
    save_arr(c, path);
    write_manifest(path, g.manifest("reproduce"));
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int reproduce_doubling(const Global& g, const Expected& exp) {
  (void)g;
  bool ok = true;
  for (const char* name : {"proj3", "proj5", "proj6max", "nonpappus9"}) {
    WiringDiagram w = load_wiring(
        (fs::path(data_dir()) / "wirings" / (std::string(name) + ".wiring")).string());
    Arrangement a = double_pseudolines(w);
    // expected projective cell vector, e.g. "3:4" or "3:17,4:9,5:9,6:2"
    std::string cells = exp.get("doubling." + std::string(name) + ".cells");
    std::map<int, int> proj;
    std::istringstream cs(cells);
    std::string item;
    int total = 0;
    while (std::getline(cs, item, ',')) {
      auto colon = item.find(':');
      proj[std::stoi(item.substr(0, colon))] = std::stoi(item.substr(colon + 1));
      total += std::stoi(item.substr(colon + 1));
    }
    PkVector pk = a.pk();
    bool this_ok = a.face_count() == 2 * total;
    for (auto& [k, cnt] : proj) this_ok &= pk[k] == 2 * cnt;
    int Vp = w.n_lines * (w.n_lines - 1) / 2;
    this_ok &= a.vertex_count() == 2 * Vp && a.edge_count() == 4 * Vp;
    this_ok &= pk.triangles() >= 2 * w.n_lines;
    for (CircleId c = 0; c < a.n() && this_ok; ++c) this_ok &= a.separates_all_pairs(c);
    std::cout << name << ": doubled counts " << (this_ok ? "match" : "MISMATCH") << " ("
              << a.fingerprint() << ")\n";
    ok &= this_ok;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arrangements of pseudocircles: enumeration, construction, checks, drawings"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  for (int i = 0; i < argc; ++i) g.argv.push_back(argv[i]);
  app.add_option("--seed", g.seed, "global random seed");
  app.add_option("--workers", g.workers, "worker threads (0 = library default)");
  app.add_option("--out-dir", g.out_dir, "directory for outputs");
  app.add_option("--log-level", g.log_level, "debug|info|warn|error");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "isomorph-free catalog of intersecting arrangements");
  int en_n = 3, en_prune = 0;
  bool en_df = false;
  double en_budget = 0;
  std::string en_out = "catalog";
  enumerate->add_option("--n", en_n, "target number of pseudocircles")->required();
  enumerate->add_option("--prune-p3-2p2", en_prune, "discard arrangements with p3+2p2 above this before extending");
  enumerate->add_flag("--digon-free", en_df, "keep only digon-free entries in the output");
  enumerate->add_option("--budget", en_budget, "wall-clock budget in seconds (0 = none)");
  enumerate->add_option("--out", en_out, "catalog output file")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "machine-check bounds, claims and lemmas over a catalog");
  std::string ve_catalog, ve_checks, ve_report;
  verify->add_option("--catalog", ve_catalog, "catalog file")->required();
  verify->add_option("--checks", ve_checks, "comma list: bounds,claims,digons,separation,conjectures");
  verify->add_option("--report", ve_report, "report output file");

  // construct digon-family
  auto* construct = app.add_subcommand("construct", "build the explicit families and transformations");
  construct->require_subcommand(1);
  auto* dfam = construct->add_subcommand("digon-family", "n digons and n-1 triangles");
  int df_n = 5;
  std::string df_lr, df_out = "digon-family.arr";
  dfam->add_option("--n", df_n)->required();
  dfam->add_option("--lr", df_lr, "finger sequence of L/R letters, length n-3");
  dfam->add_option("--out", df_out);

  auto* dbl = construct->add_subcommand("double", "great-pseudocircle arrangement from a projective wiring");
  std::string db_wiring, db_out = "double.arr";
  dbl->add_option("--wiring", db_wiring)->required();
  dbl->add_option("--out", db_out);

  auto* mrg = construct->add_subcommand("merge", "belt merge of two arrangements");
  std::string mg_host, mg_guest, mg_out = "merge.arr";
  int mg_path = 0, mg_tri = -1, mg_circle = -1;
  mrg->add_option("--host", mg_host, "cylindrical digon-free host .arr")->required();
  mrg->add_option("--path", mg_path, "index into the host's dual path list");
  mrg->add_option("--guest", mg_guest, "digon-free guest .arr")->required();
  mrg->add_option("--triangle", mg_tri, "guest triangle face id")->required();
  mrg->add_option("--circle", mg_circle, "guest circle bounding that triangle")->required();
  mrg->add_option("--out", mg_out);

  auto* flip = construct->add_subcommand("flip-search", "hill-climb triangle flips");
  std::string fs_in, fs_out = "flip-search.arr";
  long fs_budget = 100000;
  int fs_restarts = 20;
  flip->add_option("--in", fs_in)->required();
  flip->add_option("--budget", fs_budget, "total flip budget");
  flip->add_option("--restarts", fs_restarts);
  flip->add_option("--out", fs_out);

  // draw
  auto* draw = app.add_subcommand("draw", "tutte drawings as svg or ipe");
  std::string dr_in, dr_format = "svg", dr_mode = "straight", dr_out = "drawing.svg";
  int dr_outer = -1, dr_maxiter = 50;
  double dr_eps = 1e-4;
  draw->add_option("--in", dr_in, ".arr file or catalog")->required();
  draw->add_option("--format", dr_format, "svg|ipe");
  draw->add_option("--mode", dr_mode, "straight|curved");
  draw->add_option("--outer", dr_outer, "outer face id");
  draw->add_option("--eps", dr_eps, "weight-change termination threshold");
  draw->add_option("--max-iter", dr_maxiter, "weight iteration cap");
  draw->add_option("--out", dr_out)->required();

  auto* pl = app.add_subcommand("draw-pseudolines", "wiring diagram drawing with a line at infinity");
  std::string pl_wiring, pl_format = "svg", pl_out = "pseudolines.svg";
  int pl_inf = -1;
  pl->add_option("--wiring", pl_wiring)->required();
  pl->add_option("--format", pl_format, "svg|ipe");
  pl->add_option("--line-at-infinity", pl_inf, "line drawn as the outer polygon (default: last)");
  pl->add_option("--out", pl_out)->required();

  // stats
  auto* stats = app.add_subcommand("stats", "catalog summary table");
  std::string st_catalog;
  bool st_df = false;
  stats->add_option("--catalog", st_catalog)->required();
  stats->add_flag("--digon-free", st_df);

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "named experiments against bundled expected values");
  std::string rp_name;
  double rp_budget = 0;
  reproduce->add_option("experiment", rp_name,
                        "theorem1-small|table1-small|a6-unique|n8-counterexamples|merge-family|doubling")
      ->required();
  reproduce->add_option("--budget", rp_budget, "wall-clock budget in seconds (0 = none)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  set_log_level(g.log_level);

  try {
    if (*enumerate) return cmd_enumerate(g, en_n, en_prune, en_df, en_budget, en_out);
    if (*verify) return cmd_verify(g, ve_catalog, ve_checks, ve_report);
    if (*stats) return cmd_stats(g, st_catalog, st_df);
    if (*draw) return cmd_draw(g, dr_in, dr_format, dr_mode, dr_outer, dr_eps, dr_maxiter, dr_out);
    if (*pl) {
      WiringDiagram w = load_wiring(pl_wiring);
      PseudolineDrawing d = render_pseudolines(w, {}, {}, pl_format, pl_inf);
      std::string path = g.out(pl_out);
      std::ofstream out(path);
      out << d.document;
      Manifest m = g.manifest("draw-pseudolines");
      m.inputs.push_back(pl_wiring);
      write_manifest(path, m);
      if (!d.planar) return kExitCheckFailed;
      return kExitOk;
    }
    if (*dfam) {
      Arrangement a = digon_family(df_n, df_lr);
      std::string path = g.out(df_out);
      save_arr(a, path);
      write_manifest(path, g.manifest("construct digon-family"));
      std::cout << a.fingerprint() << "\n";
      return kExitOk;
    }
    if (*dbl) {
      Arrangement a = double_pseudolines(load_wiring(db_wiring));
      std::string path = g.out(db_out);
      save_arr(a, path);
      Manifest m = g.manifest("construct double");
      m.inputs.push_back(db_wiring);
      write_manifest(path, m);
      std::cout << a.fingerprint() << "\n";
      return kExitOk;
    }
    if (*mrg) {
      Arrangement host = load_arr(mg_host), guest = load_arr(mg_guest);
      auto paths = find_dual_paths(host);
      const DualPath& p = pick_path(paths, mg_path);
      Arrangement c = merge(host, p, guest, mg_tri, mg_circle);
      std::string path = g.out(mg_out);
      save_arr(c, path);
      Manifest m = g.manifest("construct merge");
      m.inputs.push_back(mg_host);
      m.inputs.push_back(mg_guest);
      m.extra.push_back({"delta", std::to_string(p.delta)});
      m.extra.push_back({"tau", std::to_string(p.tau)});
      write_manifest(path, m);
      std::cout << c.fingerprint() << "\n";
      return kExitOk;
    }
    if (*flip) {
      Arrangement a = load_arr(fs_in);
      FlipSearchResult res = maximize_triangles(a, fs_budget, fs_restarts, g.seed);
      std::string path = g.out(fs_out);
      save_arr(res.best, path);
      Manifest m = g.manifest("construct flip-search");
      m.inputs.push_back(fs_in);
      m.extra.push_back({"best_p3", std::to_string(res.best_p3)});
      m.extra.push_back({"trace_length", std::to_string(res.trace.size())});
      write_manifest(path, m);
      std::cout << "best p3=" << res.best_p3 << "\n";
      return kExitOk;
    }
    if (*reproduce) {
      Expected exp((fs::path(data_dir()) / "expected").string());
      if (rp_name == "theorem1-small") return reproduce_theorem1(g, exp, false);
      if (rp_name == "table1-small") return reproduce_theorem1(g, exp, true);
      if (rp_name == "a6-unique") return reproduce_a6(g, exp);
      if (rp_name == "n8-counterexamples") return reproduce_n8(g, exp, rp_budget);
      if (rp_name == "merge-family") return reproduce_merge_family(g, exp);
      if (rp_name == "doubling") return reproduce_doubling(g, exp);
      std::cerr << "unknown experiment '" << rp_name << "'\n";
      return kExitUsage;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
