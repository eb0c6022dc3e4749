#include "pcarr/arr_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace pcarr {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

Arrangement parse_arr(std::istream& in) {
  CircleData d;
  d.n = -1;
  std::map<long, VertexId> vmap;
  std::map<long, CircleId> cmap;
  std::vector<std::pair<CircleId, std::vector<long>>> raw_cycles;

  auto vertex_id = [&](long raw) {
    auto it = vmap.find(raw);
    if (it != vmap.end()) return it->second;
    VertexId id = static_cast<VertexId>(d.vertices.size());
    d.vertices.push_back({});
    vmap[raw] = id;
    return id;
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(strip_comment(line));
    std::string tag;
    if (!(ls >> tag)) continue;
    auto fail = [&](const std::string& msg) {
      throw ArrangementError("line " + std::to_string(lineno) + ": " + msg);
    };
    if (tag == "n") {
      if (!(ls >> d.n) || d.n < 1) fail("bad circle count");
    } else if (tag == "v") {
      long vid, c1, c2;
      std::string sign;
      if (!(ls >> vid >> c1 >> c2 >> sign) || (sign != "+" && sign != "-"))
        fail("bad vertex line");
      VertexId v = vertex_id(vid);
      if (d.vertices[v].a != -1) fail("duplicate vertex " + std::to_string(vid));
      auto cid = [&](long raw) {
        auto it = cmap.find(raw);
        if (it == cmap.end()) {
          CircleId id = static_cast<CircleId>(cmap.size());
          cmap[raw] = id;
          return id;
        }
        return it->second;
      };
      d.vertices[v] = {cid(c1), cid(c2), sign == "+"};
    } else if (tag == "c") {
      std::string rest;
      std::getline(ls, rest);
      auto colon = rest.find(':');
      if (colon == std::string::npos) fail("missing ':' in circle line");
      std::istringstream head(rest.substr(0, colon)), tail(rest.substr(colon + 1));
      long craw;
      if (!(head >> craw)) fail("bad circle id");
      auto it = cmap.find(craw);
      CircleId c;
      if (it == cmap.end()) {
        c = static_cast<CircleId>(cmap.size());
        cmap[craw] = c;
      } else {
        c = it->second;
      }
      std::vector<long> cyc;
      long v;
      while (tail >> v) cyc.push_back(v);
      if (cyc.empty()) fail("empty circle");
      raw_cycles.emplace_back(c, std::move(cyc));
    } else {
      fail("unknown tag '" + tag + "'");
    }
  }

  if (d.n < 1) throw ArrangementError("missing 'n' line");
  if (static_cast<int>(cmap.size()) != d.n)
    throw ArrangementError("declared n=" + std::to_string(d.n) + " but found " +
                           std::to_string(cmap.size()) + " circle ids");
  d.cycles.resize(d.n);
  for (auto& [c, raw] : raw_cycles) {
    if (!d.cycles[c].empty()) throw ArrangementError("duplicate cycle for a circle");
    for (long rv : raw) {
      auto it = vmap.find(rv);
      if (it == vmap.end())
        throw ArrangementError("cycle references undeclared vertex " + std::to_string(rv));
      d.cycles[c].push_back(it->second);
    }
  }
  for (const CrossingDef& cd : d.vertices)
    if (cd.a == -1) throw ArrangementError("vertex declared only in a cycle");
  return Arrangement::build(std::move(d));
}

Arrangement parse_arr_string(const std::string& text) {
  std::istringstream in(text);
  return parse_arr(in);
}

Arrangement load_arr(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArrangementError("cannot open " + path);
  return parse_arr(in);
}

std::string serialize_arr(const Arrangement& a) {
  const CircleData& d = a.data();
  std::ostringstream os;
  os << "n " << d.n << "\n";
  for (VertexId v = 0; v < static_cast<int>(d.vertices.size()); ++v) {
    const CrossingDef& cd = d.vertices[v];
    os << "v " << v << " " << cd.a << " " << cd.b << " " << (cd.positive ? '+' : '-') << "\n";
  }
  for (CircleId c = 0; c < d.n; ++c) {
    os << "c " << c << ":";
    for (VertexId v : d.cycles[c]) os << " " << v;
    os << "\n";
  }
  return os.str();
}

void save_arr(const Arrangement& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ArrangementError("cannot write " + path);
  out << serialize_arr(a);
}

}  // namespace pcarr
