#include "pcarr/analysis.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pcarr/canonical.hpp"
#include "pcarr/extend.hpp"

namespace pcarr {

CrossingSet classify_crossings(const Arrangement& a) {
  CrossingSet cs;
  cs.tri_count.assign(a.vertex_count(), 0);
  for (DartId d = 0; d < a.dart_count(); ++d)
    if (a.face_size(a.face_of(d)) == 3) cs.tri_count[a.vertex(d)]++;
  return cs;
}

int CheckReport::failures() const {
  int f = 0;
  for (const CheckItem& i : items) f += i.status == CheckItem::FAIL;
  return f;
}

int CheckReport::passes() const {
  int p = 0;
  for (const CheckItem& i : items) p += i.status == CheckItem::PASS;
  return p;
}

void CheckReport::add(const CheckReport& other) {
  items.insert(items.end(), other.items.begin(), other.items.end());
}

namespace {
const char* status_str(CheckItem::Status s) {
  switch (s) {
    case CheckItem::PASS: return "pass";
    case CheckItem::FAIL: return "FAIL";
    default: return "skip";
  }
}
}  // namespace

std::string CheckReport::table() const {
  std::ostringstream os;
  std::map<std::string, std::array<int, 3>> agg;
  for (const CheckItem& i : items) agg[i.check][i.status]++;
  os << "check\tpass\tfail\tskip\n";
  for (auto& [name, c] : agg)
    os << name << "\t" << c[0] << "\t" << c[1] << "\t" << c[2] << "\n";
  for (const CheckItem& i : items)
    if (i.status == CheckItem::FAIL)
      os << "witness\t" << i.check << "\t" << i.subject << "\t" << i.detail << "\n";
  return os.str();
}

std::string CheckReport::key_values() const {
  std::ostringstream os;
  for (const CheckItem& i : items) {
    os << "check=" << i.check << " subject=" << (i.subject.empty() ? "-" : i.subject)
       << " status=" << status_str(i.status);
    if (!i.detail.empty()) os << " detail=" << i.detail;
    os << "\n";
  }
  return os.str();
}

namespace {

CheckItem item(const std::string& check, const std::string& subject, bool ok,
               const std::string& detail = "") {
  return {check, subject, ok ? CheckItem::PASS : CheckItem::FAIL, detail};
}

CheckItem skip(const std::string& check, const std::string& subject,
               const std::string& why) {
  return {check, subject, CheckItem::SKIP, why};
}

}  // namespace

CheckReport check_bounds(const Arrangement& a, const std::string& subject) {
  CheckReport r;
  if (!a.is_intersecting() || a.n() < 3) {
    r.items.push_back(skip("bounds", subject, "needs intersecting, n>=3"));
    return r;
  }
  PkVector pk = a.pk();
  const int n = a.n(), p2 = pk.digons(), p3 = pk.triangles();
  std::ostringstream d1;
  d1 << "2*" << p2 << "+3*" << p3 << ">=" << 4 * n;
  r.items.push_back(item("bounds/2p2+3p3>=4n", subject, 2 * p2 + 3 * p3 >= 4 * n, d1.str()));
  r.items.push_back(item("bounds/p3>=ceil(2n/3)", subject, p3 >= (2 * n + 2) / 3,
                         "p3=" + std::to_string(p3)));
  auto ti = a.triangle_incidence();
  int min_ti = *std::min_element(ti.begin(), ti.end());
  r.items.push_back(item("bounds/circle-triangle-incidence>=2", subject, min_ti >= 2,
                         "min=" + std::to_string(min_ti)));
  if (p2 == 0)
    r.items.push_back(item("bounds/digon-free-p3>=ceil(4n/3)", subject,
                           p3 >= (4 * n + 2) / 3, "p3=" + std::to_string(p3)));
  return r;
}

CheckReport check_claims(const Arrangement& a, const std::string& subject) {
  CheckReport r;
  if (!a.is_intersecting() || a.n() < 4) {
    r.items.push_back(skip("claims", subject, "needs intersecting, n>=4"));
    return r;
  }
  CrossingSet cs = classify_crossings(a);
  const int V = a.vertex_count();

  int four = 0;
  for (int c : cs.tri_count) four += c >= 4;
  r.items.push_back(item("claims/A-no-crossing-on-4-triangles", subject, four == 0,
                         four ? std::to_string(four) + " offending crossings" : ""));

  std::vector<uint8_t> sharp(V, 0);
  for (VertexId v : cs.sharp()) sharp[v] = 1;

  // adjacency between crossings, one entry per edge
  std::set<std::pair<VertexId, VertexId>> adj;
  bool claimB = true;
  std::string witnessB;
  for (DartId d = 0; d < a.dart_count(); d += 2) {
    VertexId u = a.vertex(d), w = a.vertex(a.twin(d));
    adj.insert(std::minmax(u, w));
    if (sharp[u] && sharp[w]) {
      if (a.face_size(a.face_of(d)) != 3 || a.face_size(a.face_of(a.twin(d))) != 3) {
        claimB = false;
        witnessB = "edge " + std::to_string(u) + "-" + std::to_string(w);
      }
    }
  }
  r.items.push_back(item("claims/B-sharp-neighbors-share-two-triangles", subject, claimB,
                         witnessB));

  // components of the graph induced on sharp crossings
  std::vector<std::vector<VertexId>> nbr(V);
  for (auto& [u, w] : adj)
    if (sharp[u] && sharp[w]) {
      nbr[u].push_back(w);
      nbr[w].push_back(u);
    }
  std::vector<int> comp(V, -1);
  bool claimC = true;
  std::string witnessC;
  for (VertexId v = 0; v < V; ++v) {
    if (!sharp[v] || comp[v] != -1) continue;
    std::vector<VertexId> stack{v}, members;
    comp[v] = v;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (VertexId y : nbr[x])
        if (comp[y] == -1) {
          comp[y] = v;
          stack.push_back(y);
        }
    }
    bool clique = members.size() <= 3;
    for (size_t i = 0; i < members.size() && clique; ++i)
      for (size_t j = i + 1; j < members.size() && clique; ++j)
        if (!adj.count(std::minmax(members[i], members[j]))) clique = false;
    if (!clique) {
      claimC = false;
      witnessC = "component of crossing " + std::to_string(v) + " size " +
                 std::to_string(members.size());
    }
  }
  r.items.push_back(item("claims/C-sharp-components-cliques<=3", subject, claimC, witnessC));

  // minimum intersection degree is n-1 >= 3 for intersecting n >= 4
  bool claimD = true;
  std::string witnessD;
  for (VertexId v = 0; v < V; ++v) {
    if (sharp[v]) continue;
    int cnt = 0;
    for (auto& [u, w] : adj) {
      if (u == v && sharp[w]) ++cnt;
      if (w == v && sharp[u]) ++cnt;
    }
    if (cnt > 2) {
      claimD = false;
      witnessD = "crossing " + std::to_string(v) + " has " + std::to_string(cnt) +
                 " sharp neighbors";
    }
  }
  r.items.push_back(item("claims/D-nonsharp-has<=2-sharp-neighbors", subject, claimD,
                         witnessD));

  const int sharp_count = static_cast<int>(cs.sharp().size());
  const int rest = V - sharp_count;
  r.items.push_back(item("claims/sharp<=rest", subject, sharp_count <= rest,
                         std::to_string(sharp_count) + "<=" + std::to_string(rest)));
  const int p3 = a.pk().triangles();
  r.items.push_back(item("claims/p3<=(3|X'|+2|Y|)/3", subject,
                         3 * p3 <= 3 * sharp_count + 2 * rest,
                         "p3=" + std::to_string(p3)));
  return r;
}

CheckReport check_digon_sides(const Arrangement& a, const std::string& subject) {
  CheckReport r;
  if (!a.is_intersecting() || a.n() < 3) {
    r.items.push_back(skip("digon-sides", subject, "needs intersecting, n>=3"));
    return r;
  }
  if (a.pk().digons() == 0) {
    r.items.push_back(skip("digon-sides", subject, "digon-free"));
    return r;
  }
  bool ok = true;
  std::string witness;
  for (CircleId c = 0; c < a.n() && ok; ++c) {
    auto side = a.side_map(c);
    int seen_side = -1;
    for (FaceId f = 0; f < a.face_count(); ++f) {
      if (a.face_size(f) != 2) continue;
      bool incident = false;
      for (DartId d : a.face(f).boundary) incident |= a.circle(d) == c;
      if (!incident) continue;
      // the digon's side of c: side of the digon face itself
      if (seen_side == -1) {
        seen_side = side[f];
      } else if (seen_side != side[f]) {
        ok = false;
        witness = "circle " + std::to_string(c) + " has digons on both sides";
      }
    }
  }
  r.items.push_back(item("digon-sides/one-side-per-circle", subject, ok, witness));
  return r;
}

CheckReport check_separation_theorems(const Arrangement& a, const std::string& subject,
                                      int extension_budget) {
  CheckReport r;
  if (!a.is_intersecting() || a.n() < 3) {
    r.items.push_back(skip("separation", subject, "needs intersecting, n>=3"));
    return r;
  }
  const int n = a.n(), p3 = a.pk().triangles();
  CircleId separator = -1;
  for (CircleId c = 0; c < n; ++c)
    if (a.separates_all_pairs(c)) separator = c;
  if (separator >= 0)
    r.items.push_back(item("separation/p3>=2n-with-separator", subject, p3 >= 2 * n,
                           "circle " + std::to_string(separator) + " p3=" +
                               std::to_string(p3)));
  else
    r.items.push_back(skip("separation/p3>=2n-with-separator", subject, "no separator"));

  // bounded search over one-circle extensions for a separating new circle
  bool found = false, exhausted = true;
  int examined = 0;
  try {
    for_each_extension_walk(a, [&](const ExtensionWalk& w) {
      if (examined >= extension_budget) {
        exhausted = false;
        throw 0;
      }
      ++examined;
      Arrangement child = apply_walk(a, w);
      if (child.separates_all_pairs(child.n() - 1)) {
        found = true;
        throw 0;
      }
    });
  } catch (int) {
  }
  if (found)
    r.items.push_back(item("separation/p3>=2n-4-with-separating-extension", subject,
                           p3 >= 2 * n - 4, "p3=" + std::to_string(p3)));
  else
    r.items.push_back(skip("separation/p3>=2n-4-with-separating-extension", subject,
                           exhausted ? "no separating extension found"
                                     : "search budget exhausted"));
  return r;
}

CheckReport conjecture_status(const Catalog& c) {
  CheckReport r;
  for (const auto& level : c.levels) {
    if (level.entries.empty() || level.n < 3) continue;
    std::string subject = "n=" + std::to_string(level.n);
    std::string qual = level.complete ? "" : " (incomplete level: evidence only)";
    int min_p3 = -1, min_p3_df = -1, max_p2 = 0, tight_43 = 0;
    for (const CatalogEntry& e : level.entries) {
      if (min_p3 < 0 || e.p3 < min_p3) min_p3 = e.p3;
      if (e.digon_free && (min_p3_df < 0 || e.p3 < min_p3_df)) min_p3_df = e.p3;
      if (e.p2 > max_p2) max_p2 = e.p2;
      if (e.digon_free && e.p3 == (4 * level.n + 2) / 3) ++tight_43;
    }
    const int n = level.n;
    r.items.push_back({"conjecture/circles-p3>=2n-4", subject,
                       CheckItem::PASS,
                       min_p3_df < 0 ? "no digon-free entries" + qual
                                     : "min digon-free p3=" + std::to_string(min_p3_df) +
                                           " vs 2n-4=" + std::to_string(2 * n - 4) +
                                           (min_p3_df < 2 * n - 4
                                                ? " PSEUDOCIRCLE-WITNESS-BELOW"
                                                : "") +
                                           qual});
    r.items.push_back({"conjecture/4n-3-tightness", subject, CheckItem::PASS,
                       std::to_string(tight_43) + " digon-free entries at ceil(4n/3)" + qual});
    r.items.push_back({"conjecture/p3>=n-1", subject,
                       min_p3 >= n - 1 ? CheckItem::PASS : CheckItem::FAIL,
                       "min p3=" + std::to_string(min_p3) + qual});
    r.items.push_back({"conjecture/grunbaum-digons-p2<=2n-2", subject, CheckItem::PASS,
                       "max p2=" + std::to_string(max_p2) + " vs " +
                           std::to_string(2 * n - 2) +
                           (max_p2 > 2 * n - 2 ? " WITNESS-ABOVE" : "") + qual});
  }
  return r;
}

DualGraph dual_graph(const Arrangement& a) {
  DualGraph g;
  g.nodes = a.face_count();
  for (DartId d = 0; d < a.dart_count(); d += 2)
    g.links.push_back({a.face_of(d), a.face_of(a.twin(d))});
  return g;
}

DualGraph contract_digons(const DualGraph& g, const Arrangement& a) {
  DualGraph out;
  std::vector<int> keep(g.nodes, -1);
  int next = 0;
  for (FaceId f = 0; f < a.face_count(); ++f)
    if (a.face_size(f) != 2) keep[f] = next++;
  out.nodes = next;
  std::set<std::pair<int, int>> links;
  for (FaceId f = 0; f < a.face_count(); ++f) {
    if (a.face_size(f) != 2) continue;
    // digon node replaced by a link between its two neighbors
    FaceId u = a.face_of(a.twin(a.face(f).boundary[0]));
    FaceId v = a.face_of(a.twin(a.face(f).boundary[1]));
    links.insert(std::minmax(keep[u], keep[v]));
  }
  for (auto& [u, v] : g.links) {
    if (keep[u] < 0 || keep[v] < 0) continue;
    links.insert(std::minmax(keep[u], keep[v]));
  }
  for (auto& l : links) out.links.push_back(l);
  return out;
}

bool is_3_connected(const DualGraph& g) {
  if (g.nodes < 4) return false;
  std::vector<std::set<int>> nbr(g.nodes);
  for (auto& [u, v] : g.links)
    if (u != v) {
      nbr[u].insert(v);
      nbr[v].insert(u);
    }
  auto connected_without = [&](int x, int y) {
    std::vector<uint8_t> seen(g.nodes, 0);
    seen[x] = seen[y] = 1;
    int start = -1;
    for (int v = 0; v < g.nodes; ++v)
      if (!seen[v]) {
        start = v;
        break;
      }
    if (start < 0) return true;
    std::vector<int> stack{start};
    seen[start] = 1;
    int found = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : nbr[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++found;
          stack.push_back(w);
        }
    }
    return found == g.nodes - 2 + (x == y ? 1 : 0);
  };
  for (int x = 0; x < g.nodes; ++x)
    for (int y = x + 1; y < g.nodes; ++y)
      if (!connected_without(x, y)) return false;
  return true;
}

CheckReport verify_catalog(const Catalog& c, const VerifyOptions& opts) {
  std::vector<const CatalogEntry*> entries;
  for (const auto& level : c.levels)
    for (const CatalogEntry& e : level.entries) entries.push_back(&e);
  const int N = static_cast<int>(entries.size());
  std::vector<CheckReport> partial(N);
#ifdef _OPENMP
  if (opts.workers > 0) omp_set_num_threads(opts.workers);
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < N; ++i) {
    const CatalogEntry& e = *entries[i];
    Arrangement a = decode(e.code);
    std::string subject = "n" + std::to_string(e.n) + ":" + code_to_hex(e.code).substr(0, 12);
    CheckReport r;
    if (opts.bounds) r.add(check_bounds(a, subject));
    if (opts.claims) r.add(check_claims(a, subject));
    if (opts.digons) r.add(check_digon_sides(a, subject));
    if (opts.separation) r.add(check_separation_theorems(a, subject));
    partial[i] = std::move(r);
  }
  CheckReport merged;
  for (auto& r : partial) merged.add(r);
  // stable order for reports: by check name
  std::stable_sort(merged.items.begin(), merged.items.end(),
                   [](const CheckItem& a, const CheckItem& b) { return a.check < b.check; });
  if (opts.conjectures) merged.add(conjecture_status(c));
  return merged;
}

}  // namespace pcarr
