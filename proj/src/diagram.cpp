#include "lchkit/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "lchkit/errors.hpp"

namespace lchkit {

namespace {

constexpr int kCrossingRay[4] = {1, 3, 5, 7};
constexpr int kLeftCapRay[2] = {1, 7};
constexpr int kRightCapRay[2] = {3, 5};

int norm8(int a) {
  a %= 8;
  if (a < 0) a += 8;
  return a > 4 ? a - 8 : a;
}

struct Dangling {
  int node;
  int end;
  std::vector<Point> points;
};

double signed_area(const std::vector<Point>& poly) {
  double a = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    a += p.x * q.y - q.x * p.y;
  }
  return a / 2;
}

bool point_in_polygon(const Point& p, const std::vector<Point>& poly) {
  bool inside = false;
  for (size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Point& a = poly[i];
    const Point& b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

}  // namespace

const char* quadrant_name(Quadrant q) {
  switch (q) {
    case Quadrant::N: return "N";
    case Quadrant::W: return "W";
    case Quadrant::S: return "S";
    case Quadrant::E: return "E";
  }
  return "?";
}

LagrangianDiagram::LagrangianDiagram(std::vector<LagEvent> events, std::vector<bool> reversed)
    : events_(std::move(events)), reversed_(std::move(reversed)) {
  build();
  trace_components();
  trace_faces();
  trace_arcs();
}

int LagrangianDiagram::tail_node(int h) const {
  const Edge& e = edges_[h / 2];
  return h % 2 == 0 ? e.tail_node : e.head_node;
}
int LagrangianDiagram::tail_end(int h) const {
  const Edge& e = edges_[h / 2];
  return h % 2 == 0 ? e.tail_end : e.head_end;
}
int LagrangianDiagram::head_node(int h) const {
  const Edge& e = edges_[h / 2];
  return h % 2 == 0 ? e.head_node : e.tail_node;
}
int LagrangianDiagram::head_end(int h) const {
  const Edge& e = edges_[h / 2];
  return h % 2 == 0 ? e.head_end : e.tail_end;
}
int LagrangianDiagram::half_edge_turn(int h) const {
  const Edge& e = edges_[h / 2];
  return h % 2 == 0 ? e.turn : -e.turn;
}

int LagrangianDiagram::end_ray(int node, int end) const {
  switch (nodes_[node].kind) {
    case LagKind::Crossing: return kCrossingRay[end];
    case LagKind::LeftCap: return kLeftCapRay[end];
    case LagKind::RightCap: return kRightCapRay[end];
  }
  return 0;
}

int LagrangianDiagram::vertex_turn(int node, int arrive_end, int depart_end) const {
  return norm8(end_ray(node, depart_end) - end_ray(node, arrive_end) - 4);
}

int LagrangianDiagram::continuation_end(int node, int end) const {
  return nodes_[node].degree == 4 ? (end + 2) % 4 : 1 - end;
}

std::vector<Point> LagrangianDiagram::half_edge_polyline(int h) const {
  std::vector<Point> p = edges_[h / 2].polyline;
  if (h % 2 == 1) std::reverse(p.begin(), p.end());
  return p;
}

void LagrangianDiagram::build() {
  std::vector<Dangling> strands;
  auto connect = [&](Dangling& d, int node, int end) {
    Edge e;
    e.id = static_cast<int>(edges_.size());
    e.tail_node = d.node;
    e.tail_end = d.end;
    e.head_node = node;
    e.head_end = end;
    e.turn = norm8(end_ray(node, end) + 4 - end_ray(d.node, d.end));
    e.component = -1;
    e.forward = 0;
    e.polyline = std::move(d.points);
    e.polyline.push_back(nodes_[node].at);
    edges_.push_back(std::move(e));
  };
  for (int i = 0; i < static_cast<int>(events_.size()); ++i) {
    const LagEvent& ev = events_[i];
    const int k = ev.position;
    const int n = static_cast<int>(strands.size());
    const bool ok = ev.kind == LagKind::LeftCap ? (k >= 1 && k <= n + 1) : (k >= 1 && k + 1 <= n);
    if (!ok) throw Error(ErrorKind::TopologyError, "resolution event exceeds strand count", i + 1);
    const int node = static_cast<int>(nodes_.size());
    const Point at{static_cast<double>(i), k + 0.5};
    switch (ev.kind) {
      case LagKind::LeftCap: {
        nodes_.push_back({ev.kind, i, static_cast<int>(caps_.size()), 2, at});
        caps_.push_back({static_cast<int>(caps_.size()), node, i, CapSide::Left, -1, -1, -1, -1});
        strands.insert(strands.begin() + (k - 1), {Dangling{node, 1, {at}}, Dangling{node, 0, {at}}});
        break;
      }
      case LagKind::RightCap: {
        nodes_.push_back({ev.kind, i, static_cast<int>(caps_.size()), 2, at});
        caps_.push_back({static_cast<int>(caps_.size()), node, i, CapSide::Right, -1, -1, -1, -1});
        connect(strands[k - 1], node, 1);
        connect(strands[k], node, 0);
        strands.erase(strands.begin() + (k - 1), strands.begin() + (k + 1));
        break;
      }
      case LagKind::Crossing: {
        nodes_.push_back({ev.kind, i, static_cast<int>(crossings_.size()), 4, at});
        crossings_.push_back({static_cast<int>(crossings_.size()), node, i, -1, -1, ev.origin});
        connect(strands[k - 1], node, 2);
        connect(strands[k], node, 1);
        strands[k - 1] = Dangling{node, 3, {at}};
        strands[k] = Dangling{node, 0, {at}};
        break;
      }
    }
    for (int p = 0; p < static_cast<int>(strands.size()); ++p) strands[p].points.push_back({i + 0.5, p + 1.0});
  }
  if (!strands.empty()) throw Error(ErrorKind::TopologyError, "open strands", static_cast<long>(events_.size()));

  out_.assign(nodes_.size() * 4, -1);
  for (const Edge& e : edges_) {
    out_[e.tail_node * 4 + e.tail_end] = 2 * e.id;
    out_[e.head_node * 4 + e.head_end] = 2 * e.id + 1;
  }
}

void LagrangianDiagram::trace_components() {
  std::vector<int> comp_of_edge(edges_.size(), -1);
  int next = 0;
  for (const Cap& cap : caps_) {
    if (cap.side != CapSide::Left) continue;
    const int start = out_half_edge(cap.node, 0);
    if (comp_of_edge[start / 2] >= 0) continue;
    const bool rev = next < static_cast<int>(reversed_.size()) && reversed_[next];
    int h = start;
    int turning = 0;
    do {
      comp_of_edge[h / 2] = next;
      edges_[h / 2].component = next;
      edges_[h / 2].forward = (h % 2 == 0) != rev ? 1 : -1;
      turning += half_edge_turn(h);
      const int v = head_node(h);
      const int t = head_end(h);
      const int d = continuation_end(v, t);
      turning += vertex_turn(v, t, d);
      h = out_half_edge(v, d);
    } while (h != start);
    component_turning_.push_back(rev ? -turning : turning);
    base_cap_.push_back(cap.id);
    ++next;
  }
  component_count_ = next;
  reversed_.resize(component_count_, false);
  for (Cap& cap : caps_) cap.component = edges_[out_half_edge(cap.node, 0) / 2].component;
  for (Crossing& c : crossings_) {
    c.over_component = edges_[out_half_edge(c.node, 1) / 2].component;
    c.under_component = edges_[out_half_edge(c.node, 0) / 2].component;
  }
  for (const Crossing& c : crossings_) {
    chords_.push_back({c.id, "r" + std::to_string(c.id + 1), c.id, c.over_component, c.under_component, c.origin});
  }
}

void LagrangianDiagram::trace_faces() {
  const int H = half_edge_count();
  std::vector<int> walk_of(H, -1);
  for (int h0 = 0; h0 < H; ++h0) {
    if (walk_of[h0] >= 0) continue;
    Walk w;
    w.id = static_cast<int>(walks_.size());
    w.turning = 0;
    w.face = -1;
    w.graph_component = -1;
    int h = h0;
    do {
      if (walk_of[h] >= 0) throw Error(ErrorKind::MapInconsistent, "face trace revisits a half-edge", h);
      walk_of[h] = w.id;
      w.half_edges.push_back(h);
      const int v = head_node(h);
      const int t = head_end(h);
      const int deg = nodes_[v].degree;
      const int j = (t - 1 + deg) % deg;
      w.sectors.push_back(j);
      w.turning += half_edge_turn(h) + vertex_turn(v, t, j);
      h = out_half_edge(v, j);
      if (static_cast<int>(w.half_edges.size()) > H) {
        throw Error(ErrorKind::MapInconsistent, "face trace does not close", h0);
      }
    } while (h != h0);
    if (w.turning != 8 && w.turning != -8) {
      throw Error(ErrorKind::MapInconsistent, "face walk with turning " + std::to_string(w.turning), w.id);
    }
    walks_.push_back(std::move(w));
  }

  // Graph components (connectivity through edges).
  std::vector<int> gc(nodes_.size(), -1);
  graph_components_ = 0;
  for (size_t s = 0; s < nodes_.size(); ++s) {
    if (gc[s] >= 0) continue;
    std::vector<int> stack{static_cast<int>(s)};
    gc[s] = graph_components_;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int e = 0; e < nodes_[v].degree; ++e) {
        const int u = head_node(out_half_edge(v, e));
        if (gc[u] < 0) {
          gc[u] = graph_components_;
          stack.push_back(u);
        }
      }
    }
    ++graph_components_;
  }
  for (Walk& w : walks_) w.graph_component = gc[tail_node(w.half_edges[0])];

  std::vector<std::vector<Point>> polygons(walks_.size());
  for (const Walk& w : walks_) {
    for (int h : w.half_edges) {
      auto p = half_edge_polyline(h);
      polygons[w.id].insert(polygons[w.id].end(), p.begin(), p.end() - 1);
    }
  }

  int bounded = 0;
  for (Walk& w : walks_) {
    if (w.turning > 0) w.face = bounded++;
  }
  faces_.assign(bounded + 1, Face{});
  for (int f = 0; f <= bounded; ++f) {
    faces_[f].id = f;
    faces_[f].bounded = f < bounded;
  }
  for (Walk& w : walks_) {
    if (w.turning > 0) continue;
    const Point probe = nodes_[tail_node(w.half_edges[0])].at;
    int best = bounded;
    double best_area = 0;
    for (const Walk& o : walks_) {
      if (o.turning < 0 || o.graph_component == w.graph_component) continue;
      if (!point_in_polygon(probe, polygons[o.id])) continue;
      const double area = std::fabs(signed_area(polygons[o.id]));
      if (best == bounded || area < best_area) {
        best = o.face;
        best_area = area;
      }
    }
    w.face = best;
  }
  for (const Walk& w : walks_) faces_[w.face].walks.push_back(w.id);
  for (auto& f : faces_) std::sort(f.walks.begin(), f.walks.end());

  left_face_.assign(H, -1);
  sector_face_.assign(nodes_.size() * 4, -1);
  for (const Walk& w : walks_) {
    for (size_t i = 0; i < w.half_edges.size(); ++i) {
      const int h = w.half_edges[i];
      left_face_[h] = w.face;
      sector_face_[head_node(h) * 4 + w.sectors[i]] = w.face;
    }
  }
  for (const Crossing& c : crossings_) {
    for (int s = 0; s < 4; ++s) {
      faces_[sector_face(c.node, s)].quadrants.push_back({c.id, static_cast<Quadrant>(s)});
    }
  }
  for (Cap& cap : caps_) {
    const int inner = cap_inner_sector(cap.id);
    cap.inner_face = sector_face(cap.node, inner);
    cap.outer_face = sector_face(cap.node, 1 - inner);
    faces_[cap.inner_face].caps.push_back(cap.id);
    faces_[cap.inner_face].inner_caps.push_back(cap.id);
    if (cap.outer_face != cap.inner_face) faces_[cap.outer_face].caps.push_back(cap.id);
  }
}

void LagrangianDiagram::trace_arcs() {
  std::vector<bool> used_end(nodes_.size() * 4, false);
  std::vector<bool> edge_done(edges_.size(), false);
  auto walk_from = [&](int h, bool stop_at_crossing) {
    Arc a;
    a.id = static_cast<int>(arcs_.size());
    a.winding = 0;
    a.closed = false;
    a.face_left = left_face(h);
    a.face_right = left_face(h ^ 1);
    const int start = h;
    for (;;) {
      a.half_edges.push_back(h);
      edge_done[h / 2] = true;
      a.winding += half_edge_turn(h);
      const int v = head_node(h);
      const int t = head_end(h);
      if (nodes_[v].kind == LagKind::Crossing && stop_at_crossing) {
        used_end[v * 4 + t] = true;
        break;
      }
      const int d = continuation_end(v, t);
      a.winding += vertex_turn(v, t, d);
      if (nodes_[v].kind != LagKind::Crossing) {
        a.caps.push_back(nodes_[v].index);
        caps_[nodes_[v].index].host_arc = a.id;
      }
      h = out_half_edge(v, d);
      if (h == start) {
        a.closed = true;
        break;
      }
    }
    arcs_.push_back(std::move(a));
  };
  for (const Crossing& c : crossings_) {
    for (int e = 0; e < 4; ++e) {
      if (used_end[c.node * 4 + e]) continue;
      used_end[c.node * 4 + e] = true;
      walk_from(out_half_edge(c.node, e), true);
    }
  }
  for (const Edge& e : edges_) {
    if (!edge_done[e.id]) walk_from(2 * e.id, false);
  }
}

const std::vector<Face>& compute_faces(const LagrangianDiagram& diagram) { return diagram.faces(); }

int count_euler(const LagrangianDiagram& d) {
  return static_cast<int>(d.nodes().size()) - static_cast<int>(d.edges().size()) +
         static_cast<int>(d.faces().size());
}

LagrangianDiagram resolve(const FrontDiagram& front, bool require_plat) {
  const bool plat = front.is_plat();
  if (require_plat && !plat) throw Error(ErrorKind::NotPlat, "front is not of the form L* X* R*");
  const auto& ev = front.events();
  std::vector<LagEvent> out;
  const int m = static_cast<int>(ev.size());

  int first_right = m;
  if (plat) {
    for (int i = 0; i < m; ++i) {
      if (ev[i].kind == EventKind::RightCusp) {
        first_right = i;
        break;
      }
    }
  }
  // Pairs merged by the right-cusp block, in positions of the slot before the block.
  std::vector<std::pair<int, int>> right_pairs;  // (lower position, front event)
  bool grouped = plat && first_right < m;
  if (grouped) {
    std::vector<int> ids(front.strand_count(first_right));
    std::iota(ids.begin(), ids.end(), 1);
    for (int i = first_right; i < m; ++i) {
      const int k = ev[i].position;
      if (ids[k] != ids[k - 1] + 1) {
        grouped = false;
        break;
      }
      right_pairs.push_back({ids[k - 1], i});
      ids.erase(ids.begin() + (k - 1), ids.begin() + (k + 1));
    }
    std::sort(right_pairs.begin(), right_pairs.end(), [](auto a, auto b) { return a.first > b.first; });
  }
  for (int i = 0; i < m; ++i) {
    const FrontEvent& e = ev[i];
    if (grouped && i >= first_right) break;
    switch (e.kind) {
      case EventKind::LeftCusp:
        out.push_back({LagKind::LeftCap, e.position, {"left_cusp", i}});
        break;
      case EventKind::Crossing:
        out.push_back({LagKind::Crossing, e.position, {"front_crossing", i}});
        break;
      case EventKind::RightCusp:
        out.push_back({LagKind::Crossing, e.position, {"right_cusp", i}});
        out.push_back({LagKind::RightCap, e.position, {"right_cusp", i}});
        break;
    }
  }
  if (grouped) {
    for (auto [p, i] : right_pairs) out.push_back({LagKind::Crossing, p, {"right_cusp", i}});
    for (auto [p, i] : right_pairs) out.push_back({LagKind::RightCap, p, {"right_cusp", i}});
  }
  return LagrangianDiagram(std::move(out), front.reversed());
}

LrsVerdict check_left_right_simple(const LagrangianDiagram& d) {
  LrsVerdict v{true, {}};
  const auto& ev = d.x_order();
  const int m = static_cast<int>(ev.size());
  bool seen_other = false;
  for (int i = 0; i < m; ++i) {
    if (ev[i].kind != LagKind::LeftCap) {
      seen_other = true;
    } else if (seen_other) {
      v.witnesses.push_back(i);
    }
  }
  seen_other = false;
  for (int i = m - 1; i >= 0; --i) {
    if (ev[i].kind != LagKind::RightCap) {
      seen_other = true;
    } else if (seen_other) {
      v.witnesses.push_back(i);
    }
  }
  // Caps sharing an extremal x-value cannot be nested inside each other.
  auto nested = [&](int begin, int end, int step, LagKind kind) {
    std::vector<int> owner;
    for (int i = begin; i != end && ev[i].kind == kind; i += step) {
      const int k = ev[i].position;
      const int n = static_cast<int>(owner.size());
      if (k >= 2 && k <= n && owner[k - 2] == owner[k - 1]) v.witnesses.push_back(i);
      if (k - 1 <= n) owner.insert(owner.begin() + (k - 1), 2, i);
    }
  };
  nested(0, m, 1, LagKind::LeftCap);
  nested(m - 1, -1, -1, LagKind::RightCap);
  std::sort(v.witnesses.begin(), v.witnesses.end());
  v.witnesses.erase(std::unique(v.witnesses.begin(), v.witnesses.end()), v.witnesses.end());
  v.lrs = v.witnesses.empty();
  return v;
}

namespace {

struct Strand {
  int copy;
  int role;  // 0 lower branch, 1 upper branch (cap templates only)
};

// Adjacent-transposition sort of strands[base .. base+len) into `target` order; emits crossings.
void bubble_to(std::vector<Strand>& strands, int base, const std::vector<Strand>& target, EventOrigin origin,
               std::vector<LagEvent>& out) {
  const int len = static_cast<int>(target.size());
  auto rank = [&](const Strand& s) {
    for (int r = 0; r < len; ++r) {
      if (target[r].copy == s.copy && target[r].role == s.role) return r;
    }
    return -1;
  };
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int i = 0; i + 1 < len; ++i) {
      Strand& lo = strands[base + i];
      Strand& hi = strands[base + i + 1];
      if (rank(lo) > rank(hi)) {
        EventOrigin o = origin;
        o.copy_over = hi.copy;
        o.copy_under = lo.copy;
        if (lo.role == hi.role) o.kind = "cap_twist";
        out.push_back({LagKind::Crossing, base + i + 1, o});
        std::swap(lo, hi);
        swapped = true;
      }
    }
  }
}

}  // namespace

LagrangianDiagram n_copy(const LagrangianDiagram& d, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (!check_left_right_simple(d).lrs) throw Error(ErrorKind::NotLRS, "n-copy needs a left-right-simple diagram");
  const auto& ev = d.x_order();
  const int m = static_cast<int>(ev.size());
  std::vector<LagEvent> out;
  std::vector<Strand> strands;  // n-copy strand labels, bottom-up

  int i = 0;
  // Left caps: n stacked caps per original cap.
  std::vector<int> left_events;
  for (; i < m && ev[i].kind == LagKind::LeftCap; ++i) {
    const int base = (ev[i].position - 1) * n;
    for (int c = 0; c < n; ++c) {
      out.push_back({LagKind::LeftCap, base + 2 * c + 1, {"copy_cap", d.nodes()[i].index, c}});
      strands.insert(strands.begin() + base + 2 * c, {Strand{c, 0}, Strand{c, 1}});
    }
    left_events.push_back(i);
  }
  // Template crossings so that each cap leaves with two parallel bundles.
  {
    std::vector<int> owner;  // original strand pair owner per original position
    for (int e : left_events) {
      const int k = ev[e].position;
      owner.insert(owner.begin() + (k - 1), 2, e);
    }
    for (int p = 0; p + 1 < static_cast<int>(owner.size()); p += 2) {
      const int e = owner[p];
      const int cap = d.nodes()[e].index;
      const int upper_edge = d.out_half_edge(d.caps()[cap].node, 0) / 2;
      const bool up = d.edges()[upper_edge].forward > 0;
      std::vector<Strand> target;
      for (int c = 0; c < n; ++c) target.push_back({up ? c : n - 1 - c, 0});
      for (int c = 0; c < n; ++c) target.push_back({up ? n - 1 - c : c, 1});
      bubble_to(strands, p * n, target, {"cap_sort", cap}, out);
    }
  }
  // Crossings become n x n grids.
  for (; i < m && ev[i].kind == LagKind::Crossing; ++i) {
    const int k = ev[i].position;
    for (int j = 0; j < n; ++j) {
      for (int s = 0; s < n; ++s) {
        const int lower = k * n + j - s;  // 1-based position of the lower strand of the swap
        Strand& lo = strands[lower - 1];
        Strand& hi = strands[lower];
        out.push_back({LagKind::Crossing, lower, {"grid", d.nodes()[i].index, hi.copy, lo.copy}});
        std::swap(lo, hi);
      }
    }
  }
  // Right caps: template crossings, then n stacked caps per original cap.
  {
    const int first_right = i;
    std::vector<int> ids(strands.size() / n);
    std::iota(ids.begin(), ids.end(), 0);
    std::vector<std::pair<int, int>> pairs;  // (lower original position, event)
    for (int e = first_right; e < m; ++e) {
      const int k = ev[e].position;
      pairs.push_back({ids[k - 1], e});
      ids.erase(ids.begin() + (k - 1), ids.begin() + (k + 1));
    }
    std::sort(pairs.begin(), pairs.end());
    for (auto [p, e] : pairs) {
      const int cap = d.nodes()[e].index;
      std::vector<Strand> target;
      for (int c = 0; c < n; ++c) {
        const int copy = strands[p * n + c].copy;
        target.push_back({copy, 0});
        target.push_back({copy, 1});
      }
      for (int c = 0; c < 2 * n; ++c) strands[p * n + c].role = c < n ? 0 : 1;
      const size_t before = out.size();
      bubble_to(strands, p * n, target, {"cap_sort", cap}, out);
      if (static_cast<int>(out.size() - before) != n * (n - 1)) {
        throw Error(ErrorKind::MapInconsistent, "n-copy bundles arrive at a right cap with mismatched framing", e);
      }
    }
    for (int e = first_right; e < m; ++e) {
      const int k = ev[e].position;
      const int cap = d.nodes()[e].index;
      const int base = (k - 1) * n;
      for (int c = n - 1; c >= 0; --c) {
        out.push_back({LagKind::RightCap, base + 2 * c + 1, {"copy_cap", cap, strands[base + 2 * c].copy}});
      }
      strands.erase(strands.begin() + base, strands.begin() + base + 2 * n);
    }
  }
  return LagrangianDiagram(std::move(out));
}

int path_rotation(const LagrangianDiagram& d, const BoundaryPath& path) {
  int total = 0;
  const auto& hs = path.half_edges;
  for (size_t i = 0; i < hs.size(); ++i) {
    if (hs[i] < 0 || hs[i] >= d.half_edge_count()) throw Error(ErrorKind::DisconnectedPath, "bad half-edge", hs[i]);
    total += d.half_edge_turn(hs[i]);
    const bool last = i + 1 == hs.size();
    if (last && !path.closed) break;
    const int next = hs[last ? 0 : i + 1];
    if (d.head_node(hs[i]) != d.tail_node(next)) {
      throw Error(ErrorKind::DisconnectedPath, "consecutive steps are not incident", static_cast<long>(i));
    }
    total += d.vertex_turn(d.head_node(hs[i]), d.head_end(hs[i]), d.tail_end(next));
  }
  return total;
}

BoundaryPath strand_path(const LagrangianDiagram& d, int node, int end, int target_node,
                         std::array<bool, 4> target_ends) {
  BoundaryPath p;
  int h = d.out_half_edge(node, end);
  const int limit = d.half_edge_count();
  for (;;) {
    p.half_edges.push_back(h);
    const int v = d.head_node(h);
    const int t = d.head_end(h);
    if (v == target_node && target_ends[t]) break;
    if (static_cast<int>(p.half_edges.size()) > limit) {
      throw Error(ErrorKind::DisconnectedPath, "strand never reaches the target", target_node);
    }
    h = d.out_half_edge(v, d.continuation_end(v, t));
  }
  return p;
}

}  // namespace lchkit
