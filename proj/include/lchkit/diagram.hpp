#pragma once

#include <array>
#include <string>
#include <vector>

#include "lchkit/front.hpp"

namespace lchkit {

enum class LagKind { LeftCap, RightCap, Crossing };
enum class CapSide { Left, Right };
enum class Quadrant { N = 0, W = 1, S = 2, E = 3 };

const char* quadrant_name(Quadrant q);

// Where a resolution event came from. For n-copies `copy_over`/`copy_under` name the copies
// (for caps only `copy_over` is used).
struct EventOrigin {
  std::string kind;  // front_crossing, right_cusp, left_cusp, grid, cap_sort, cap_twist, copy_cap
  int source = -1;
  int copy_over = -1;
  int copy_under = -1;
};

struct LagEvent {
  LagKind kind;
  int position;  // 1-based from the bottom, as in fronts
  EventOrigin origin;
};

struct Point {
  double x;
  double y;
};

// Crossing ends in counterclockwise order: NE, NW, SW, SE. Caps: upper, lower.
struct Node {
  LagKind kind;
  int event;
  int index;  // crossing or cap id
  int degree;
  Point at;
};

struct Edge {
  int id;
  int tail_node, tail_end;  // east-pointing end
  int head_node, head_end;  // west-pointing end
  int turn;                 // tangent turning tail -> head, pi/4 units
  int component;
  int forward;  // +1 when the orientation runs tail -> head
  std::vector<Point> polyline;
};

struct Crossing {
  int id;
  int node;
  int event;
  int over_component;
  int under_component;
  EventOrigin origin;
};

struct Cap {
  int id;
  int node;
  int event;
  CapSide side;
  int host_arc;
  int inner_face;
  int outer_face;
  int component;
};

// A maximal strand path between crossing ends (or a closed strand without crossings).
struct Arc {
  int id;
  std::vector<int> half_edges;
  int winding;  // pi/4 units
  std::vector<int> caps;
  int face_left;
  int face_right;
  bool closed;
};

struct Walk {
  int id;
  std::vector<int> half_edges;  // face on the left
  std::vector<int> sectors;     // sector used at the head of each half-edge
  int turning;                  // +8 for a counterclockwise bounding walk, -8 otherwise
  int face;
  int graph_component;
};

struct FaceQuadrant {
  int crossing;
  Quadrant quadrant;
};

struct Face {
  int id;
  bool bounded;
  std::vector<int> walks;
  std::vector<FaceQuadrant> quadrants;
  std::vector<int> caps;
  std::vector<int> inner_caps;  // caps whose inner side is this face
};

struct Chord {
  int id;
  std::string label;
  int crossing;
  int over_component;
  int under_component;
  EventOrigin origin;
};

struct BoundaryPath {
  std::vector<int> half_edges;
  bool closed = false;
};

struct LrsVerdict {
  bool lrs;
  std::vector<int> witnesses;  // event indices in x_order
};

class LagrangianDiagram {
 public:
  LagrangianDiagram() = default;
  explicit LagrangianDiagram(std::vector<LagEvent> events, std::vector<bool> reversed = {});

  const std::vector<LagEvent>& x_order() const { return events_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Cap>& caps() const { return caps_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Walk>& walks() const { return walks_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Chord>& chords() const { return chords_; }
  const std::vector<bool>& reversed() const { return reversed_; }

  int bounded_face_count() const { return static_cast<int>(faces_.size()) - 1; }
  int unbounded_face() const { return static_cast<int>(faces_.size()) - 1; }
  int component_count() const { return component_count_; }
  int graph_component_count() const { return graph_components_; }
  // Total tangent turning of each oriented component, pi/4 units (8 per full turn).
  const std::vector<int>& component_turning() const { return component_turning_; }
  // Base cap of each component (its first left cap in x_order).
  const std::vector<int>& component_base_cap() const { return base_cap_; }

  // Half-edge h = 2*edge + d, d = 0 runs tail -> head.
  int half_edge_count() const { return 2 * static_cast<int>(edges_.size()); }
  int tail_node(int h) const;
  int tail_end(int h) const;
  int head_node(int h) const;
  int head_end(int h) const;
  int half_edge_turn(int h) const;
  int out_half_edge(int node, int end) const { return out_[node * 4 + end]; }
  int left_face(int h) const { return left_face_[h]; }
  int sector_face(int node, int sector) const { return sector_face_[node * 4 + sector]; }
  int end_ray(int node, int end) const;  // pi/4 units
  int vertex_turn(int node, int arrive_end, int depart_end) const;
  int continuation_end(int node, int end) const;
  // Inner sector of a cap node (the convex side of the bend).
  int cap_inner_sector(int cap) const { return caps_[cap].side == CapSide::Left ? 1 : 0; }
  std::vector<Point> half_edge_polyline(int h) const;

 private:
  void build();
  void trace_components();
  void trace_faces();
  void trace_arcs();

  std::vector<LagEvent> events_;
  std::vector<bool> reversed_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<Crossing> crossings_;
  std::vector<Cap> caps_;
  std::vector<Arc> arcs_;
  std::vector<Walk> walks_;
  std::vector<Face> faces_;
  std::vector<Chord> chords_;
  std::vector<int> out_;
  std::vector<int> left_face_;
  std::vector<int> sector_face_;
  std::vector<int> component_turning_;
  std::vector<int> base_cap_;
  int component_count_ = 0;
  int graph_components_ = 0;
};

LagrangianDiagram resolve(const FrontDiagram& front, bool require_plat = true);

const std::vector<Face>& compute_faces(const LagrangianDiagram& diagram);

LrsVerdict check_left_right_simple(const LagrangianDiagram& diagram);

LagrangianDiagram n_copy(const LagrangianDiagram& diagram, int n);

int path_rotation(const LagrangianDiagram& diagram, const BoundaryPath& path);

// Strand path from a crossing end, following the strand until it arrives at `target_node`
// through one of `target_ends`.
BoundaryPath strand_path(const LagrangianDiagram& diagram, int node, int end, int target_node,
                         std::array<bool, 4> target_ends);

int count_euler(const LagrangianDiagram& diagram);  // V - E + F with caps as vertices

}  // namespace lchkit
