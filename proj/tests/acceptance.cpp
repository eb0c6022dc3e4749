// Acceptance suite: one line per criterion. Exit 0 only when every check
// comes out exactly as analyzed, including the two clauses that are
// impossible as stated (they must fail for precisely the documented reason,
// anything else is an error). Heavy searches honor PCARR_ACCEPT_N8_BUDGET
// seconds and downgrade to the witness check when they run out of time.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <set>

#include "pcarr/analysis.hpp"
#include "pcarr/arr_io.hpp"
#include "pcarr/canonical.hpp"
#include "pcarr/construct.hpp"
#include "pcarr/enumerate.hpp"
#include "pcarr/render.hpp"
#include "pcarr/wiring.hpp"
#include "support.hpp"

using namespace pcarr;

namespace {

int g_bad = 0;

void line(int criterion, bool ok, const std::string& what) {
  std::printf("criterion %2d: %s  %s\n", criterion, ok ? "PASS" : "FAIL", what.c_str());
  if (!ok) ++g_bad;
}

void subline(int criterion, const char* tag, bool ok, const std::string& what) {
  std::printf("criterion %2d: %s (%s)  %s\n", criterion, ok ? "pass" : "FAIL AS STATED", tag,
              what.c_str());
}

std::string data_path(const std::string& rel) {
  for (const char* base : {"data", "../data", "../../data"}) {
    std::string p = std::string(base) + "/" + rel;
    if (FILE* f = std::fopen(p.c_str(), "r")) {
      std::fclose(f);
      return p;
    }
  }
  std::fprintf(stderr, "cannot find data/%s; run from the repository root\n", rel.c_str());
  std::exit(2);
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);

  // shared: complete catalogs up to n=5
  EnumerateOptions full;
  full.workers = 0;
  EnumerateResult res5 = enumerate_intersecting(5, full);
  const Catalog& cat = res5.catalog;

  // 1. minimum p3 over digon-free intersecting arrangements, n = 3,4,5
  {
    bool ok = res5.complete;
    std::string detail;
    for (int n : {3, 4, 5}) {
      LevelStats s = catalog_stats(*cat.level(n));
      ok &= s.min_p3_digon_free == 8;
      detail += "n" + std::to_string(n) + "=" + std::to_string(s.min_p3_digon_free) + " ";
    }
    line(1, ok, "min digon-free p3 = 8 at n=3,4,5: " + detail);
  }

  // 2. maxima: 8, 8, 13 over all; 12 over digon-free at n=5
  {
    bool ok = true;
    std::string detail;
    int want[] = {8, 8, 13};
    for (int n : {3, 4, 5}) {
      LevelStats s = catalog_stats(*cat.level(n));
      ok &= s.max_p3 == want[n - 3];
      detail += "max(n" + std::to_string(n) + ")=" + std::to_string(s.max_p3) + " ";
    }
    LevelStats s5 = catalog_stats(*cat.level(5));
    ok &= s5.max_p3_digon_free == 12;
    detail += "max_df(n5)=" + std::to_string(s5.max_p3_digon_free);
    line(2, ok, detail);
  }

  // 3. the unique digon-free n=6 arrangement with 8 triangles
  {
    EnumerateOptions opts;
    opts.prune.max_p3_plus_2p2 = 8;
    EnumerateResult r = enumerate_intersecting(6, opts);
    int hits = 0;
    CanonicalCode code;
    for (const CatalogEntry& e : r.catalog.level(6)->entries)
      if (e.digon_free && e.p3 == 8) {
        ++hits;
        code = e.code;
      }
    bool ok = r.complete && hits == 1;
    bool matches = false;
    if (hits >= 1)
      matches = canonical_code(load_arr(data_path("arr/a6.arr"))) == code;
    line(3, ok && matches,
         "pruned run complete=" + std::to_string(r.complete) + ", digon-free p3=8 count=" +
             std::to_string(hits) + ", matches bundled arrangement=" +
             (matches ? "yes" : "no"));
  }

  // 4. pruned search to n=8: exactly three arrangements with p3 = 11
  {
    double budget = 0;
    if (const char* env = std::getenv("PCARR_ACCEPT_N8_BUDGET")) budget = std::atof(env);
    EnumerateOptions opts;
    opts.prune.max_p3_plus_2p2 = 11;
    opts.budget_seconds = budget;
    EnumerateResult r = enumerate_intersecting(8, opts);
    int hits = 0;
    if (const Catalog::Level* top = r.catalog.level(8))
      for (const CatalogEntry& e : top->entries)
        if (e.digon_free && e.p3 == 11) ++hits;
    if (r.complete)
      line(4, hits == 3, "complete pruned search: " + std::to_string(hits) +
                             " non-isomorphic n=8 arrangements with p3=11 (want 3)");
    else
      line(4, hits >= 1, "budget hit, downgraded criterion: " + std::to_string(hits) +
                             " witnesses with p3=11 < 2n-4 (want >=1)");
  }

  // 5. deletion never increases p3 + 2 p2
  {
    long checked = 0, violations = 0;
    for (const auto& level : cat.levels) {
      if (level.n < 3) continue;
      for (const CatalogEntry& e : level.entries) {
        Arrangement a = decode(e.code);
        int q = e.p3 + 2 * e.p2;
        for (CircleId c = 0; c < a.n(); ++c) {
          PkVector pk = remove_circle(a, c).pk();
          ++checked;
          if (pk.triangles() + 2 * pk.digons() > q) ++violations;
        }
      }
    }
    line(5, violations == 0, std::to_string(checked) + " deletions over the n<=5 catalog, " +
                                 std::to_string(violations) + " violations");
  }

  // 6. structure of triple-triangle crossings over the n<=5 catalog
  {
    int failures = 0, passes = 0;
    for (int n : {4, 5})
      for (const CatalogEntry& e : cat.level(n)->entries) {
        CheckReport r = check_claims(decode(e.code));
        failures += r.failures();
        passes += r.passes();
      }
    line(6, failures == 0, std::to_string(passes) + " claim checks, " +
                               std::to_string(failures) + " violations");
  }

  // 7. counting bounds and digon sides over the n<=5 catalog
  {
    int failures = 0, passes = 0;
    for (int n : {3, 4, 5})
      for (const CatalogEntry& e : cat.level(n)->entries) {
        Arrangement a = decode(e.code);
        CheckReport r = check_bounds(a);
        r.add(check_digon_sides(a));
        failures += r.failures();
        passes += r.passes();
      }
    line(7, failures == 0, std::to_string(passes) + " bound checks, " +
                               std::to_string(failures) + " violations");
  }

  // 8. merge construction against independent face counting
  {
    Arrangement venn = testsupport::krupp();
    auto venn_paths = find_dual_paths(venn);
    int formula_ok = 0, corrected_ok = 0, total = 0;
    int venn_direct = -1, venn_formula = -1;
    std::vector<std::pair<Arrangement, std::string>> guests;
    guests.push_back({venn, "venn"});
    for (const CatalogEntry& e : cat.level(4)->entries)
      if (e.digon_free) guests.push_back({decode(e.code), "n4"});
    for (auto& [guest, tag] : guests) {
      for (FaceId tri = 0; tri < guest.face_count(); ++tri) {
        if (guest.face_size(tri) != 3) continue;
        for (DartId d : guest.face(tri).boundary) {
          CircleId circ = guest.circle(d);
          const DualPath& p = venn_paths.front();
          Arrangement c = merge(venn, p, guest, tri, circ);
          int direct = c.pk().triangles();
          int stated = merge_p3_formula(venn, p, guest);
          int corrected = merge_p3_expected(venn, p, guest, tri, circ);
          ++total;
          formula_ok += direct == stated;
          corrected_ok += direct == corrected;
          if (tag == "venn" && venn_direct < 0) {
            venn_direct = direct;
            venn_formula = stated;
          }
        }
      }
    }
    // the recursive family from the bundled 12-circle host
    Arrangement a12 = load_arr(data_path("arr/min_tri_n12.arr"));
    auto paths = find_dual_paths(a12);
    const DualPath* p21 = nullptr;
    for (const DualPath& p : paths)
      if (p.delta == 2 && p.tau == 1) {
        p21 = &p;
        break;
      }
    bool chain_ok = p21 != nullptr;
    if (p21) {
      Arrangement c = a12;
      int want_n[] = {23, 34}, want_p3[] = {32, 48};
      for (int k = 0; k < 2 && chain_ok; ++k) {
        bool merged = false;
        for (FaceId tri = 0; tri < c.face_count() && !merged; ++tri) {
          if (c.face_size(tri) != 3) continue;
          for (DartId d : c.face(tri).boundary) {
            if (buckle_far_cell_is_triangle(c, tri, c.circle(d))) continue;
            Arrangement next = merge(a12, *p21, c, tri, c.circle(d));
            chain_ok &= next.pk().triangles() ==
                        merge_p3_expected(a12, *p21, c, tri, c.circle(d));
            c = next;
            merged = true;
            break;
          }
        }
        chain_ok &= merged && c.n() == want_n[k] && c.pk().triangles() == want_p3[k];
      }
    }
    // as stated the formula must hold on every instance including the venn
    // self-merge; there it is off by exactly one because the cell across the
    // buckle edge is itself a triangle and absorbs one end of the belt
    bool stated_holds_everywhere = formula_ok == total;
    subline(8, "p3 = p3(A)+p3(B)+delta-tau-1 on all inputs", stated_holds_everywhere,
            std::to_string(formula_ok) + "/" + std::to_string(total) +
                " instances match the stated formula");
    bool venn_off_by_one = venn_direct == 12 && venn_formula == 13;
    bool ok = corrected_ok == total && total >= 10 && chain_ok && venn_off_by_one;
    line(8, ok,
         "exact face counts on " + std::to_string(total) +
             " instances (far-side-triangle correction), venn self-merge direct=" +
             std::to_string(venn_direct) + " stated=" + std::to_string(venn_formula) +
             ", recursive family (23,32),(34,48)=" + (chain_ok ? "exact" : "MISMATCH"));
  }

  // 9. digon family: p2 = n and p3 = n-1 for n <= 12, all finger sequences
  {
    long built = 0, wrong = 0;
    for (int n = 3; n <= 12; ++n) {
      int len = n - 3;
      for (long mask = 0; mask < (1L << len); ++mask) {
        std::string lr;
        for (int b = 0; b < len; ++b) lr += (mask >> b) & 1 ? 'R' : 'L';
        Arrangement a = digon_family(n, lr);
        PkVector pk = a.pk();
        ++built;
        if (pk.digons() != n || pk.triangles() != n - 1 || !a.is_intersecting()) ++wrong;
      }
    }
    line(9, wrong == 0,
         std::to_string(built) + " family members built, " + std::to_string(wrong) +
             " with wrong counts");
  }

  // 10. doubling the bundled projective wirings
  {
    bool ok = true;
    std::string detail;
    for (const char* name : {"proj3", "proj5", "proj6max", "nonpappus9"}) {
      WiringDiagram w = load_wiring(data_path("wirings/" + std::string(name) + ".wiring"));
      Arrangement a = double_pseudolines(w);
      auto proj = testsupport::projective_cell_vector(w);
      PkVector pk = a.pk();
      int F = 0;
      bool this_ok = true;
      for (auto& [k, c] : proj) {
        this_ok &= pk[k] == 2 * c;
        F += c;
      }
      int Vp = w.n_lines * (w.n_lines - 1) / 2;
      this_ok &= a.vertex_count() == 2 * Vp && a.edge_count() == 4 * Vp &&
                 a.face_count() == 2 * F;
      this_ok &= pk.triangles() >= 2 * w.n_lines;
      for (CircleId c = 0; c < a.n() && this_ok; ++c) this_ok &= a.separates_all_pairs(c);
      ok &= this_ok;
      detail += std::string(name) + (this_ok ? " ok; " : " MISMATCH; ");
    }
    line(10, ok, detail);
  }

  // 11. flips: involution, digon monotonicity as stated, search targets
  {
    std::mt19937 rng(2024);
    bool involution_ok = true;
    long flips_done = 0, digon_drops = 0;
    std::vector<CanonicalCode> pool;
    for (int n : {4, 5})
      for (const CatalogEntry& e : cat.level(n)->entries) pool.push_back(e.code);
    Arrangement cur = decode(pool[rng() % pool.size()]);
    int involution_checks = 0;
    while (flips_done < 10000) {
      std::vector<FaceId> tris;
      for (FaceId f = 0; f < cur.face_count(); ++f)
        if (cur.face_size(f) == 3) tris.push_back(f);
      if (tris.empty()) {
        cur = decode(pool[rng() % pool.size()]);
        continue;
      }
      FaceId site = tris[rng() % tris.size()];
      int before = cur.pk().digons();
      Arrangement flipped = triangle_flip(cur, site);
      ++flips_done;
      if (flipped.pk().digons() < before) ++digon_drops;
      if (involution_checks < 200) {
        // the inverted triangle has the same corner set; flipping it restores
        std::set<VertexId> corners;
        for (DartId d : cur.face(site).boundary) corners.insert(cur.vertex(d));
        bool restored = false;
        for (FaceId f = 0; f < flipped.face_count() && !restored; ++f) {
          if (flipped.face_size(f) != 3) continue;
          std::set<VertexId> c2;
          for (DartId d : flipped.face(f).boundary) c2.insert(flipped.vertex(d));
          if (c2 == corners &&
              canonical_code(triangle_flip(flipped, f)) == canonical_code(cur))
            restored = true;
        }
        involution_ok &= restored;
        ++involution_checks;
      }
      cur = std::move(flipped);
      if (flips_done % 500 == 0) cur = decode(pool[rng() % pool.size()]);
    }
    subline(11, "p2 never decreases over random flips", digon_drops == 0,
            std::to_string(digon_drops) + "/" + std::to_string(flips_done) +
                " flips removed digons");
    // the documented counterexample: flipping a triangle of the three-circle
    // arrangement with digons can reach the digon-free one
    Arrangement nk = testsupport::nonkrupp();
    bool counterexample = false;
    for (FaceId f = 0; f < nk.face_count(); ++f)
      if (nk.face_size(f) == 3 && triangle_flip(nk, f).pk().digons() == 0)
        counterexample = true;

    FlipSearchResult r5 = maximize_triangles(digon_family(5, "RR"), 100000, 20, 1);
    FlipSearchResult r6 =
        maximize_triangles(load_arr(data_path("arr/a6.arr")), 100000, 20, 1);
    bool ok = involution_ok && counterexample && digon_drops > 0 && r5.best_p3 == 13 &&
              r6.best_p3 == 20;
    line(11, ok,
         "double-flip restores (" + std::to_string(involution_checks) +
             " checks), digon drops exist as the counterexample predicts (" +
             std::to_string(digon_drops) + "), search reaches p3=" +
             std::to_string(r5.best_p3) + " at n=5 and p3=" + std::to_string(r6.best_p3) +
             " at n=6");
  }

  // 12. rendering: planarity, convergence, structure, determinism
  {
    std::mt19937 rng(7);
    std::vector<CanonicalCode> sample;
    for (int n : {3, 4})
      for (const CatalogEntry& e : cat.level(n)->entries) sample.push_back(e.code);
    const auto& l5 = cat.level(5)->entries;
    for (int i = 0; i < 100; ++i) sample.push_back(l5[rng() % l5.size()].code);
    int planar = 0, converged = 0, structural = 0, deterministic = 0;
    const int total = static_cast<int>(sample.size());
    RenderStyle st;
    for (const CanonicalCode& code : sample) {
      Arrangement a = decode(code);
      Embedding e = tutte_embed(a);
      planar += audit_planarity(a, e) && audit_face_orientation(a, e);
      converged += e.converged;
      CurvePlan plan = curve_plan(e, a);
      std::string svg = emit_svg(a, e, &plan, st);
      std::string ipe = emit_ipe(a, e, nullptr, st);
      structural += svg.find("</svg>") != std::string::npos &&
                    ipe.find("</ipe>") != std::string::npos &&
                    svg.find("<path") != std::string::npos;
      Embedding e2 = tutte_embed(a);
      CurvePlan plan2 = curve_plan(e2, a);
      deterministic += emit_svg(a, e2, &plan2, st) == svg;
    }
    bool ok = planar == total && structural == total && deterministic == total &&
              converged * 100 >= 95 * total;
    line(12, ok,
         std::to_string(planar) + "/" + std::to_string(total) + " planar, " +
             std::to_string(converged) + " converged (need >=95%), " +
             std::to_string(structural) + " structurally valid, " +
             std::to_string(deterministic) + " byte-identical reruns");
  }

  std::printf("acceptance: %s\n", g_bad ? "FAILURES PRESENT" : "all criteria settled as analyzed");
  return g_bad ? 1 : 0;
}
