#include "lchkit/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "lchkit/errors.hpp"

namespace lchkit {

namespace {

constexpr double kScaleX = 60.0;
constexpr double kScaleY = 40.0;
constexpr double kMargin = 30.0;
constexpr double kGap = 0.35;

struct Vertex {
  Point p;
  int node;  // -1 for a slot point
  int end;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

// Collapses the extreme cap blocks of an LRS diagram onto common x values.
class Layout {
 public:
  explicit Layout(const LagrangianDiagram& d) : d_(d) {
    const auto& ev = d.x_order();
    const int m = static_cast<int>(ev.size());
    lrs_ = check_left_right_simple(d).lrs;
    while (lead_ < m && ev[lead_].kind == LagKind::LeftCap) ++lead_;
    trail_ = m;
    while (trail_ > lead_ && ev[trail_ - 1].kind == LagKind::RightCap) --trail_;
    if (!lrs_) lead_ = 0, trail_ = m;
    shift_ = lead_ > 0 ? lead_ - 1 : 0;
  }

  Point map(const Point& p) const {
    const auto& ev = d_.x_order();
    const int m = static_cast<int>(ev.size());
    double x = p.x, y = p.y;
    const bool node = std::abs(x - std::round(x)) < 1e-9;
    if (lrs_ && lead_ > 0 && x <= lead_ - 0.5 + 1e-9) {
      const int i = static_cast<int>(std::floor(x + 1e-9));
      if (node) {
        y = lead_shift(i, ev[i].position) + 0.5;
        x = lead_ - 1;
      } else {
        y = lead_shift(i, static_cast<int>(std::lround(y)));
        x = lead_ - 0.5;
      }
    } else if (lrs_ && trail_ < m && x >= trail_ - 0.5 - 1e-9) {
      const int i = static_cast<int>(std::ceil(x - 1e-9));
      if (node) {
        y = trail_shift(i - 1, ev[i].position) + 0.5;
        x = trail_;
      } else {
        // slot after event i - 1
        const int slot = static_cast<int>(std::floor(x));
        y = trail_shift(slot, static_cast<int>(std::lround(y)));
        x = trail_ - 0.5;
      }
    }
    return {x - shift_, y};
  }

 private:
  // Position at the end of the leading block of a strand at `p` just after event `from`.
  int lead_shift(int from, int p) const {
    for (int j = from + 1; j < lead_; ++j) {
      if (p >= d_.x_order()[j].position) p += 2;
    }
    return p;
  }
  // Position just before the trailing block of a strand at `p` in the slot after event `slot`.
  int trail_shift(int slot, int p) const {
    for (int j = slot; j >= trail_; --j) {
      if (p >= d_.x_order()[j].position) p += 2;
    }
    return p;
  }

  const LagrangianDiagram& d_;
  bool lrs_ = false;
  int lead_ = 0;
  int trail_ = 0;
  int shift_ = 0;
};

class Canvas {
 public:
  Canvas(const LagrangianDiagram& d, const Layout& layout) : d_(d), layout_(layout) {
    for (const auto& n : d.nodes()) {
      const Point q = layout.map(n.at);
      max_x_ = std::max(max_x_, q.x);
      max_y_ = std::max(max_y_, q.y + 0.5);
    }
  }

  double width() const { return 2 * kMargin + (max_x_ + 1.0) * kScaleX; }
  double height() const { return 2 * kMargin + max_y_ * kScaleY; }

  std::string xy(const Point& p) const {
    const Point q = layout_.map(p);
    return xy_raw(q);
  }
  std::string xy_raw(const Point& q) const {
    return num(kMargin + (q.x + 0.5) * kScaleX) + "," + num(kMargin + (max_y_ - q.y) * kScaleY);
  }

  std::vector<Vertex> vertices(int h) const {
    const auto pts = d_.half_edge_polyline(h);
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Vertex v{pts[i], -1, -1};
      if (i == 0) v = {pts[i], d_.tail_node(h), d_.tail_end(h)};
      if (i + 1 == pts.size()) v = {pts[i], d_.head_node(h), d_.head_end(h)};
      if (!out.empty() && same(out.back(), v) && v.node < 0) continue;
      out.push_back(v);
    }
    return out;
  }

  bool is_cap(const Vertex& v) const { return v.node >= 0 && d_.nodes()[v.node].kind != LagKind::Crossing; }

  // Segment a -> b as an SVG path command (without the initial move).
  std::string segment(const Vertex& a, const Vertex& b) const {
    const Point qa = layout_.map(a.p), qb = layout_.map(b.p);
    if (is_cap(a)) return "Q" + xy_raw({qa.x, qb.y}) + " " + xy_raw(qb);
    if (is_cap(b)) return "Q" + xy_raw({qb.x, qa.y}) + " " + xy_raw(qb);
    return "L" + xy_raw(qb);
  }

  Point mapped(const Vertex& v) const { return layout_.map(v.p); }

 private:
  bool same(const Vertex& a, const Vertex& b) const {
    const Point qa = layout_.map(a.p), qb = layout_.map(b.p);
    return std::abs(qa.x - qb.x) < 1e-9 && std::abs(qa.y - qb.y) < 1e-9;
  }

  const LagrangianDiagram& d_;
  const Layout& layout_;
  double max_x_ = 0.0;
  double max_y_ = 1.0;
};

}  // namespace

std::string render_svg(const LagrangianDiagram& d, const RenderOptions& options) {
  for (int f : options.highlight) {
    if (f < 0 || f >= d.bounded_face_count()) throw Error(ErrorKind::UnknownFace, "no bounded face with this id", f);
  }
  const Layout layout(d);
  const Canvas canvas(d, layout);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(canvas.width()) + "\" height=\"" +
         num(canvas.height()) + "\" viewBox=\"0 0 " + num(canvas.width()) + " " + num(canvas.height()) + "\">\n";
  out += "<style>.strand,.cap{fill:none;stroke:#000;stroke-width:2}.highlight{fill:#9ecae1;fill-opacity:0.6;"
         "stroke:none;fill-rule:evenodd}.label{font:11px sans-serif;fill:#b22}</style>\n";

  if (!options.highlight.empty()) {
    std::set<int> faces(options.highlight.begin(), options.highlight.end());
    std::string path;
    for (int f : faces) {
      for (int w : d.faces()[f].walks) {
        bool first = true;
        for (int h : d.walks()[w].half_edges) {
          const auto vs = canvas.vertices(h);
          if (first) path += (path.empty() ? "M" : " M") + canvas.xy(vs[0].p);
          first = false;
          for (std::size_t i = 1; i < vs.size(); ++i) path += " " + canvas.segment(vs[i - 1], vs[i]);
        }
        path += " Z";
      }
    }
    std::string ids;
    for (int f : faces) ids += (ids.empty() ? "f" : ",f") + std::to_string(f);
    out += "<path class=\"highlight\" data-faces=\"" + ids + "\" d=\"" + path + "\"/>\n";
  }

  // Strands, with the segments next to caps left to the cap curves and a gap on the under strand.
  for (const Edge& e : d.edges()) {
    const auto vs = canvas.vertices(2 * e.id);
    std::string path;
    bool open = false;
    for (std::size_t i = 1; i < vs.size(); ++i) {
      const Vertex& a = vs[i - 1];
      const Vertex& b = vs[i];
      if (canvas.is_cap(a) || canvas.is_cap(b)) {
        open = false;
        continue;
      }
      Point pa = canvas.mapped(a), pb = canvas.mapped(b);
      const auto under = [&](const Vertex& v) { return v.node >= 0 && (v.end == 0 || v.end == 2); };
      if (under(a)) pa = {pa.x + kGap * (pb.x - pa.x), pa.y + kGap * (pb.y - pa.y)}, open = false;
      const bool cut_end = under(b);
      if (cut_end) pb = {pb.x + kGap * (pa.x - pb.x), pb.y + kGap * (pa.y - pb.y)};
      if (!open) path += (path.empty() ? "M" : " M") + canvas.xy_raw(pa);
      path += " L" + canvas.xy_raw(pb);
      open = !cut_end;
    }
    if (!path.empty()) out += "<path class=\"strand\" data-edge=\"" + std::to_string(e.id) + "\" d=\"" + path + "\"/>\n";
  }

  for (const Cap& c : d.caps()) {
    const int node = c.node;
    // Strand vertices adjacent to the cap along its two ends.
    const auto v0 = canvas.vertices(d.out_half_edge(node, 0));
    const auto v1 = canvas.vertices(d.out_half_edge(node, 1));
    const Vertex& a = v0[1];
    const Vertex& b = v1[1];
    std::string path = "M" + canvas.xy(a.p) + " " + canvas.segment(a, v0[0]) + " " + canvas.segment(v1[0], b);
    out += "<path class=\"cap\" data-cap=\"" + std::to_string(c.id) + "\" data-side=\"" +
           (c.side == CapSide::Left ? "left" : "right") + "\" d=\"" + path + "\"/>\n";
  }

  for (const Crossing& x : d.crossings()) {
    const Point q = canvas.mapped({d.nodes()[x.node].at, x.node, -1});
    out += "<g class=\"crossing\" data-chord=\"" + d.chords()[x.id].label + "\">";
    if (options.labels) {
      const Point t{q.x, q.y + 0.3};
      const std::string s = canvas.xy_raw(t);
      out += "<text class=\"label\" x=\"" + s.substr(0, s.find(',')) + "\" y=\"" + s.substr(s.find(',') + 1) +
             "\" text-anchor=\"middle\">" + d.chords()[x.id].label + "</text>";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace lchkit
