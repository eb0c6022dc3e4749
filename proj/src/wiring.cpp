#include "pcarr/wiring.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <sstream>

namespace pcarr {

void WiringDiagram::validate() const {
  if (n_lines < 1) throw ArrangementError("wiring needs at least one line");
  std::vector<std::vector<int>> crossed(n_lines + 1, std::vector<int>(n_lines + 1, 0));
  std::vector<int> perm(n_lines + 1);
  std::iota(perm.begin(), perm.end(), 0);
  for (int p : swaps) {
    if (p < 1 || p >= n_lines) throw ArrangementError("swap position out of range");
    int x = perm[p], y = perm[p + 1];
    crossed[x][y]++;
    crossed[y][x]++;
    std::swap(perm[p], perm[p + 1]);
  }
  for (int i = 1; i <= n_lines; ++i)
    for (int j = i + 1; j <= n_lines; ++j)
      if (crossed[i][j] != 1)
        throw ArrangementError("lines " + std::to_string(i) + "," + std::to_string(j) +
                               " swap " + std::to_string(crossed[i][j]) + " times");
}

WiringDiagram parse_wiring_string(const std::string& text) {
  std::istringstream in(text);
  WiringDiagram w;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "lines") {
      if (!(ls >> w.n_lines)) throw ArrangementError("bad lines count");
    } else if (tag == "swaps") {
      int p;
      while (ls >> p) w.swaps.push_back(p);
    } else {
      throw ArrangementError("unknown wiring tag '" + tag + "'");
    }
  }
  w.validate();
  return w;
}

WiringDiagram load_wiring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArrangementError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_wiring_string(ss.str());
}

std::string serialize_wiring(const WiringDiagram& w) {
  std::ostringstream os;
  os << "lines " << w.n_lines << "\nswaps";
  for (int p : w.swaps) os << " " << p;
  os << "\n";
  return os.str();
}

void save_wiring(const WiringDiagram& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ArrangementError("cannot write " + path);
  out << serialize_wiring(w);
}

WiringDiagram delete_line(const WiringDiagram& w, int line) {
  if (line < 1 || line > w.n_lines) throw ArrangementError("no such line");
  WiringDiagram out;
  out.n_lines = w.n_lines - 1;
  std::vector<int> perm(w.n_lines + 1);
  std::iota(perm.begin(), perm.end(), 0);
  int line_pos = line;
  for (int p : w.swaps) {
    int x = perm[p], y = perm[p + 1];
    if (x != line && y != line) out.swaps.push_back(line_pos < p ? p - 1 : p);
    std::swap(perm[p], perm[p + 1]);
    if (x == line)
      line_pos = p + 1;
    else if (y == line)
      line_pos = p;
  }
  out.validate();
  return out;
}

std::vector<std::vector<int>> crossing_sequences(const WiringDiagram& w) {
  std::vector<std::vector<int>> seq(w.n_lines + 1);
  std::vector<int> perm(w.n_lines + 1);
  std::iota(perm.begin(), perm.end(), 0);
  for (int p : w.swaps) {
    int x = perm[p], y = perm[p + 1];
    seq[x].push_back(y);
    seq[y].push_back(x);
    std::swap(perm[p], perm[p + 1]);
  }
  return seq;
}

Arrangement double_pseudolines(const WiringDiagram& w) {
  w.validate();
  const int n = w.n_lines;
  if (n < 3) throw ArrangementError("doubling needs at least 3 lines");

  CircleData d;
  d.n = n;
  // crossing (i,j) of the wiring: copies 0 and 1, antipodal and hence with
  // opposite local orientation; the upper-before line is listed first with
  // rotation (upper-out, lower-out, upper-in, lower-in) in copy 0
  std::vector<std::vector<std::array<int, 2>>> vid(n + 1, std::vector<std::array<int, 2>>(n + 1));
  std::vector<int> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> seq(n + 1);
  for (int p : w.swaps) {
    int lower = perm[p], upper = perm[p + 1];
    for (int copy = 0; copy < 2; ++copy) {
      int v = static_cast<int>(d.vertices.size());
      d.vertices.push_back({upper - 1, lower - 1, copy == 0});
      vid[upper][lower][copy] = vid[lower][upper][copy] = v;
    }
    seq[lower].push_back(upper);
    seq[upper].push_back(lower);
    std::swap(perm[p], perm[p + 1]);
  }

  d.cycles.resize(n);
  for (int line = 1; line <= n; ++line) {
    std::vector<VertexId>& cyc = d.cycles[line - 1];
    for (int copy = 0; copy < 2; ++copy)
      for (int other : seq[line]) cyc.push_back(vid[line][other][copy]);
  }
  return Arrangement::build(std::move(d));
}

}  // namespace pcarr
