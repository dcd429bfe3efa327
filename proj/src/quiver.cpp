#include "neck/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace neck {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (v.empty()) throw Error(ErrorKind::Parse, "empty vertex name");
    if (!seen.insert(v).second)
      throw Error(ErrorKind::Parse, "duplicate name '" + v + "'");
  }
  for (const auto& e : edges_) {
    if (e.name.empty()) throw Error(ErrorKind::Parse, "empty edge name");
    if (!seen.insert(e.name).second)
      throw Error(ErrorKind::Parse, "duplicate name '" + e.name + "'");
    if (e.source < 0 || e.source >= num_vertices() || e.target < 0 ||
        e.target >= num_vertices())
      throw Error(ErrorKind::Parse, "edge '" + e.name + "' uses an undeclared vertex");
  }
}

std::optional<int> Quiver::find_vertex(const std::string& name) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (vertices_[i] == name) return i;
  return std::nullopt;
}

std::optional<int> Quiver::find_edge(const std::string& name) const {
  for (int i = 0; i < num_edges(); ++i)
    if (edges_[i].name == name) return i;
  return std::nullopt;
}

void Quiver::check_arrow(Arrow a) const {
  if (a.edge < 0 || a.edge >= num_edges())
    throw Error(ErrorKind::Domain, "arrow with edge index " + std::to_string(a.edge) +
                                       " does not belong to this quiver");
}

std::vector<Arrow> Quiver::arrows() const {
  std::vector<Arrow> out;
  out.reserve(num_arrows());
  for (int e = 0; e < num_edges(); ++e) {
    out.push_back(Arrow{e, false});
    out.push_back(Arrow{e, true});
  }
  return out;
}

Quiver parse_quiver(const std::string& text) {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_decl = false;

  auto fail = [&](const std::string& msg) -> void {
    throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + msg);
  };

  auto vertex_index = [&](const std::string& name) -> int {
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
      if (vertices[i] == name) return i;
    fail("unknown vertex '" + name + "'");
    return -1;
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    saw_decl = true;
    if (kw == "vertex") {
      std::string name;
      if (!(ls >> name)) fail("expected: vertex <name>");
      for (const auto& v : vertices)
        if (v == name) fail("duplicate name '" + name + "'");
      vertices.push_back(name);
    } else if (kw == "edge") {
      std::string name, src, tgt;
      if (!(ls >> name >> src >> tgt)) fail("expected: edge <name> <source> <target>");
      for (const auto& v : vertices)
        if (v == name) fail("duplicate name '" + name + "'");
      for (const auto& e : edges)
        if (e.name == name) fail("duplicate name '" + name + "'");
      edges.push_back(Edge{name, vertex_index(src), vertex_index(tgt)});
    } else {
      fail("unknown declaration '" + kw + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing content '" + extra + "'");
  }
  if (!saw_decl) throw Error(ErrorKind::Parse, "empty quiver file");
  return Quiver(std::move(vertices), std::move(edges));
}

Quiver load_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open quiver file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_quiver(buf.str());
}

namespace {

void check_cyclic_composable(const Quiver& q, const std::vector<Arrow>& arrows) {
  if (arrows.empty())
    throw Error(ErrorKind::Composability, "cyclic word must be nonempty");
  const int n = static_cast<int>(arrows.size());
  for (int i = 0; i < n; ++i) {
    q.check_arrow(arrows[i]);
    const Arrow& cur = arrows[i];
    const Arrow& nxt = arrows[(i + 1) % n];
    if (q.target(cur) != q.source(nxt))
      throw Error(ErrorKind::Composability,
                  "arrows at positions " + std::to_string(i) + "," +
                      std::to_string((i + 1) % n) + " do not compose: target(" +
                      q.arrow_name(cur) + ") = " + q.vertex_name(q.target(cur)) +
                      " but source(" + q.arrow_name(nxt) + ") = " +
                      q.vertex_name(q.source(nxt)));
  }
}

}  // namespace

std::vector<int> minimal_rotation_offsets(const std::vector<Arrow>& arrows) {
  const int n = static_cast<int>(arrows.size());
  auto rotation_less = [&](int i, int j) {
    for (int k = 0; k < n; ++k) {
      int a = arrows[(i + k) % n].id();
      int b = arrows[(j + k) % n].id();
      if (a != b) return a < b;
    }
    return false;
  };
  int best = 0;
  for (int i = 1; i < n; ++i)
    if (rotation_less(i, best)) best = i;
  std::vector<int> offs;
  for (int i = 0; i < n; ++i)
    if (!rotation_less(best, i) && !rotation_less(i, best)) offs.push_back(i);
  return offs;
}

CyclicWord::CyclicWord(const Quiver& q, std::vector<Arrow> arrows) {
  check_cyclic_composable(q, arrows);
  int off = minimal_rotation_offsets(arrows).front();
  const int n = static_cast<int>(arrows.size());
  arrows_.reserve(n);
  for (int k = 0; k < n; ++k) arrows_.push_back(arrows[(off + k) % n]);
}

bool CyclicWord::operator<(const CyclicWord& o) const {
  if (arrows_.size() != o.arrows_.size()) return arrows_.size() < o.arrows_.size();
  return arrows_ < o.arrows_;
}

std::string CyclicWord::str(const Quiver& q) const {
  std::string out = "cyc(";
  for (size_t i = 0; i < arrows_.size(); ++i) {
    if (i) out += ",";
    out += q.arrow_name(arrows_[i]);
  }
  return out + ")";
}

CyclicWord canonical_cycle(const Quiver& q, const std::vector<Arrow>& arrows) {
  return CyclicWord(q, arrows);
}

PathWord::PathWord(const Quiver& q, int start, std::vector<Arrow> arrows)
    : start_(start), arrows_(std::move(arrows)) {
  if (start_ < 0 || start_ >= q.num_vertices())
    throw Error(ErrorKind::Domain, "path start vertex out of range");
  int at = start_;
  for (size_t i = 0; i < arrows_.size(); ++i) {
    q.check_arrow(arrows_[i]);
    if (q.source(arrows_[i]) != at)
      throw Error(ErrorKind::Composability,
                  "arrow at position " + std::to_string(i) + " does not compose");
    at = q.target(arrows_[i]);
  }
  end_ = at;
}

std::optional<PathWord> PathWord::compose(const Quiver& q, const PathWord& o) const {
  if (end_ != o.start_) return std::nullopt;
  std::vector<Arrow> arrows = arrows_;
  arrows.insert(arrows.end(), o.arrows_.begin(), o.arrows_.end());
  return PathWord(q, start_, std::move(arrows));
}

std::string PathWord::str(const Quiver& q) const {
  if (arrows_.empty()) return "e_" + q.vertex_name(start_);
  std::string out;
  for (size_t i = 0; i < arrows_.size(); ++i) {
    if (i) out += ".";
    out += q.arrow_name(arrows_[i]);
  }
  return out;
}

}  // namespace neck
