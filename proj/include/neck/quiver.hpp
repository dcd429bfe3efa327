#ifndef NECK_QUIVER_HPP
#define NECK_QUIVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "neck/error.hpp"

namespace neck {

/// An arrow of the double quiver: a declared edge or its reversal.
/// The total order on arrows is declaration order with each edge
/// immediately before its star; that order is fixed once per quiver and
/// every canonical form in the library derives from it.
struct Arrow {
  int edge = -1;        // index into Quiver::edges
  bool starred = false;

  int id() const { return 2 * edge + (starred ? 1 : 0); }
  bool operator==(const Arrow& o) const { return edge == o.edge && starred == o.starred; }
  bool operator!=(const Arrow& o) const { return !(*this == o); }
  bool operator<(const Arrow& o) const { return id() < o.id(); }
};

/// e <-> e*.
inline Arrow involute(Arrow a) { return Arrow{a.edge, !a.starred}; }

struct Edge {
  std::string name;
  int source = -1;
  int target = -1;
};

/// A finite quiver: ordered vertices and edges.  Loops and parallel edges
/// are allowed.  Immutable after parsing/construction.
class Quiver {
public:
  Quiver(std::vector<std::string> vertices, std::vector<Edge> edges);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_arrows() const { return 2 * num_edges(); }

  const std::string& vertex_name(int v) const { return vertices_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }

  std::optional<int> find_vertex(const std::string& name) const;
  std::optional<int> find_edge(const std::string& name) const;

  int source(Arrow a) const { return a.starred ? edges_[a.edge].target : edges_[a.edge].source; }
  int target(Arrow a) const { return a.starred ? edges_[a.edge].source : edges_[a.edge].target; }

  void check_arrow(Arrow a) const;

  std::string arrow_name(Arrow a) const {
    return edges_[a.edge].name + (a.starred ? "*" : "");
  }

  /// All 2|E| arrows in the fixed total order.
  std::vector<Arrow> arrows() const;

private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

/// Line format, '#' comments:
///   vertex <name>
///   edge <name> <source> <target>
Quiver parse_quiver(const std::string& text);
Quiver load_quiver_file(const std::string& path);

/// A cyclic word: a nonempty cyclically composable arrow sequence stored in
/// its lexicographically minimal rotation.
class CyclicWord {
public:
  CyclicWord(const Quiver& q, std::vector<Arrow> arrows);

  const std::vector<Arrow>& arrows() const { return arrows_; }
  int size() const { return static_cast<int>(arrows_.size()); }

  /// The common vertex of consecutive arrows i, i+1 (mod n): target of i.
  bool operator==(const CyclicWord& o) const { return arrows_ == o.arrows_; }
  bool operator!=(const CyclicWord& o) const { return !(*this == o); }

  /// Order used for PBW components: (length, lexicographic minimal rotation).
  bool operator<(const CyclicWord& o) const;

  std::string str(const Quiver& q) const;

private:
  std::vector<Arrow> arrows_;
};

/// canonical_cycle: builds the canonical-rotation representative, checking
/// cyclic composability (the offending index is reported on failure).
CyclicWord canonical_cycle(const Quiver& q, const std::vector<Arrow>& arrows);

/// Minimal rotation helper shared with the heighted-link canonical form:
/// returns the rotation offsets of `arrows` realizing the lexicographically
/// minimal rotation (several when the word is periodic).
std::vector<int> minimal_rotation_offsets(const std::vector<Arrow>& arrows);

/// An open path: a start vertex plus a composable (possibly empty) arrow
/// sequence.  The empty path is the idempotent of its start vertex.
class PathWord {
public:
  PathWord(const Quiver& q, int start, std::vector<Arrow> arrows);

  static PathWord idempotent(const Quiver& q, int vertex) { return PathWord(q, vertex, {}); }

  int start() const { return start_; }
  int end() const { return end_; }
  bool is_idempotent() const { return arrows_.empty(); }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  bool operator==(const PathWord& o) const { return start_ == o.start_ && arrows_ == o.arrows_; }
  bool operator<(const PathWord& o) const {
    if (start_ != o.start_) return start_ < o.start_;
    return std::lexicographical_compare(arrows_.begin(), arrows_.end(),
                                        o.arrows_.begin(), o.arrows_.end());
  }

  /// Path-algebra product: concatenation when this ends where o starts,
  /// nullopt (the zero of the algebra) otherwise.
  std::optional<PathWord> compose(const Quiver& q, const PathWord& o) const;

  std::string str(const Quiver& q) const;

private:
  int start_;
  int end_;
  std::vector<Arrow> arrows_;
};

}  // namespace neck

#endif
