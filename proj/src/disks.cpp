#include "lchkit/disks.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "lchkit/errors.hpp"
#include "lchkit/index.hpp"

namespace lchkit {

int FaceMask::count() const {
  int n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

std::vector<int> FaceMask::members() const {
  std::vector<int> out;
  for (int f = 0; f < size_; ++f) {
    if (test(f)) out.push_back(f);
  }
  return out;
}

std::string FaceMask::hex() const {
  std::string s;
  char buf[17];
  bool leading = true;
  for (auto it = words_.rbegin(); it != words_.rend(); ++it) {
    if (leading) {
      if (*it == 0 && it + 1 != words_.rend()) continue;
      std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(*it));
      leading = false;
    } else {
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(*it));
    }
    s += buf;
  }
  return "0x" + (s.empty() ? std::string("0") : s);
}

bool operator<(const FaceMask& a, const FaceMask& b) {
  if (a.words_.size() != b.words_.size()) return a.words_.size() < b.words_.size();
  for (size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
  }
  return false;
}

FaceMask mask_of(const LagrangianDiagram& d, const std::vector<int>& faces) {
  FaceMask m(d.bounded_face_count());
  for (int f : faces) {
    if (f < 0 || f >= d.bounded_face_count()) throw Error(ErrorKind::UnknownFace, "no bounded face " + std::to_string(f), f);
    m.set(f);
  }
  return m;
}

// Quadrants swept counterclockwise from an over-strand ray to an under-strand ray.
bool corner_is_positive(Quadrant q) { return q == Quadrant::E || q == Quadrant::W; }

namespace {

constexpr bool kValidPattern[16] = {
    // bit q set when quadrant q is in the region; 2-opposite (5, 10) handled separately
    true,  true,  true,  true,  true,  false, true,  false,
    true,  true,  false, false, true,  false, false, true,
};

bool is_opposite(int m) { return m == 5 || m == 10; }

int find(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

int threads_for(int requested, int work) {
  int n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("LCHKIT_THREADS")) n = std::atoi(env);
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, std::min(n, work));
}

}  // namespace

RegionAnalysis analyze_region(const LagrangianDiagram& d, const std::vector<int>& faces, bool allow_pinch) {
  RegionAnalysis a;
  const int F = static_cast<int>(d.faces().size());
  std::vector<char> in(F, 0);
  for (int f : faces) {
    if (f < 0 || f >= F) throw Error(ErrorKind::UnknownFace, "no face " + std::to_string(f), f);
    if (f == d.unbounded_face()) {
      a.reject = "unbounded face";
      return a;
    }
    in[f] = 1;
  }
  for (int f = 0; f < F; ++f) {
    if (in[f]) a.faces.push_back(f);
  }
  if (a.faces.empty()) {
    a.reject = "empty";
    return a;
  }

  std::vector<int> parent(F);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& c : d.crossings()) {
    int m = 0;
    for (int q = 0; q < 4; ++q) m |= in[d.sector_face(c.node, q)] << q;
    if (is_opposite(m)) {
      if (!allow_pinch) {
        a.reject = "opposite quadrants at " + std::to_string(c.id);
        return a;
      }
      a.pinches.push_back(c.id);
      const int q0 = m == 5 ? 0 : 1;
      parent[find(parent, d.sector_face(c.node, q0))] = find(parent, d.sector_face(c.node, q0 + 2));
    } else if (!kValidPattern[m]) {
      a.reject = "non-convex corner at " + std::to_string(c.id);
      return a;
    } else if (m == 15) {
      a.interior_crossings.push_back(c.id);
    } else if (std::popcount(static_cast<unsigned>(m)) == 2) {
      a.pass_through.push_back(c.id);
    }
  }
  for (const auto& cap : d.caps()) {
    if (in[cap.outer_face] && !in[cap.inner_face]) {
      a.reject = "outer side of cap " + std::to_string(cap.id);
      return a;
    }
  }
  for (const auto& e : d.edges()) {
    const int l = d.left_face(2 * e.id), r = d.left_face(2 * e.id + 1);
    if (in[l] && in[r]) {
      parent[find(parent, l)] = find(parent, r);
      a.interior_edges.push_back(e.id);
    }
  }
  const int root = find(parent, a.faces[0]);
  for (int f : a.faces) {
    if (find(parent, f) != root) {
      a.reject = "disconnected";
      return a;
    }
  }

  const int H = d.half_edge_count();
  std::vector<char> used(H, 0);
  for (int h0 = 0; h0 < H; ++h0) {
    if (used[h0] || !in[d.left_face(h0)] || in[d.left_face(h0 ^ 1)]) continue;
    const int w = static_cast<int>(a.walks.size());
    a.walks.emplace_back();
    auto& walk = a.walks.back();
    int h = h0;
    do {
      if (used[h]) throw Error(ErrorKind::MapInconsistent, "region boundary revisits a half-edge", h);
      used[h] = 1;
      const int step = static_cast<int>(walk.size());
      walk.push_back(h);
      const int v = d.head_node(h);
      const int t = d.head_end(h);
      const int deg = d.nodes()[v].degree;
      int j = (t - 1 + deg) % deg;
      for (int guard = 0; in[d.sector_face(v, (j - 1 + deg) % deg)]; ++guard) {
        if (guard >= deg) throw Error(ErrorKind::MapInconsistent, "boundary walk enters an interior vertex", v);
        j = (j - 1 + deg) % deg;
      }
      const auto& node = d.nodes()[v];
      if (node.kind == LagKind::Crossing) {
        const int swept = (t - j + 4) % 4;
        const bool pinch = std::find(a.pinches.begin(), a.pinches.end(), node.index) != a.pinches.end();
        if (swept == 1 && !pinch) {
          const auto q = static_cast<Quadrant>(j);
          a.corners.push_back({node.index, q, corner_is_positive(q), w, step});
        }
      } else if (j == d.cap_inner_sector(node.index)) {
        a.cap_touches.push_back(node.index);
        a.cap_steps.push_back({w, step});
      }
      h = d.out_half_edge(v, j);
    } while (h != h0);
  }
  a.chi = 2 - static_cast<int>(a.walks.size());
  for (const auto& c : a.corners) (c.positive ? a.positives : a.negatives)++;
  a.ok = true;
  return a;
}

bool is_rigid(const LagrangianDiagram& d, const RegionAnalysis& a, bool enforce_no_touching) {
  if (!a.ok || !a.pinches.empty() || a.chi != 1) return false;
  if (a.positives < 1 || a.positives + static_cast<int>(a.cap_touches.size()) != 2) return false;
  if (a.positives == 2 && enforce_no_touching) {
    int lo = 1 << 30, hi = -1;
    for (const auto& c : a.corners) {
      if (!c.positive) continue;
      lo = std::min(lo, d.crossings()[c.crossing].event);
      hi = std::max(hi, d.crossings()[c.crossing].event);
    }
    for (const auto& c : a.corners) {
      if (c.positive) continue;
      const int x = d.crossings()[c.crossing].event;
      if (!(lo < x && x < hi)) return false;
    }
  }
  return true;
}

std::vector<SubArc> sub_arcs(const LagrangianDiagram& d, const RegionAnalysis& a) {
  std::vector<SubArc> out;
  for (int w = 0; w < static_cast<int>(a.walks.size()); ++w) {
    const auto& walk = a.walks[w];
    const int n = static_cast<int>(walk.size());
    std::vector<int> corner_ids;
    std::vector<char> is_corner(n, 0), is_cap(n, 0);
    for (int i = 0; i < static_cast<int>(a.corners.size()); ++i) {
      if (a.corners[i].walk == w) {
        corner_ids.push_back(i);
        is_corner[a.corners[i].step] = 1;
      }
    }
    for (auto [cw, s] : a.cap_steps) {
      if (cw == w) is_cap[s] = 1;
    }
    auto turn_at_head = [&](int s) {
      const int h = walk[s];
      const int next = walk[(s + 1) % n];
      return d.vertex_turn(d.head_node(h), d.head_end(h), d.tail_end(next));
    };
    if (corner_ids.empty()) {
      SubArc sa{w, -1, -1, 0, 0};
      for (int s = 0; s < n; ++s) {
        sa.theta += d.half_edge_turn(walk[s]) + turn_at_head(s);
        sa.cap_touches += is_cap[s];
      }
      out.push_back(sa);
      continue;
    }
    const int k = static_cast<int>(corner_ids.size());
    for (int i = 0; i < k; ++i) {
      const int from = corner_ids[i];
      const int to = corner_ids[(i + 1) % k];
      SubArc sa{w, from, to, 0, 0};
      int s = (a.corners[from].step + 1) % n;
      for (;;) {
        sa.theta += d.half_edge_turn(walk[s]);
        if (s == a.corners[to].step) break;
        sa.theta += turn_at_head(s);
        sa.cap_touches += is_cap[s];
        s = (s + 1) % n;
      }
      out.push_back(sa);
    }
  }
  return out;
}

IndexTriple region_index(const LagrangianDiagram& d, const RegionAnalysis& a) {
  const int b = static_cast<int>(a.walks.size());
  std::vector<Puncture> punctures;
  for (const auto& c : a.corners) punctures.push_back({c.positive, c.walk});
  const auto topology = make_topology(a.chi, b, punctures);
  std::vector<std::vector<int>> thetas(b);
  for (const auto& sa : sub_arcs(d, a)) thetas[sa.walk].push_back(sa.theta);
  std::vector<Maslov> maslovs;
  for (int w = 0; w < b; ++w) {
    int m = 0;
    for (const auto& c : a.corners) m += c.walk == w;
    maslovs.push_back(maslov_of_boundary(thetas[w], m));
  }
  IndexTriple t;
  t.from_maslov = index_from_maslov(topology, maslovs, Target::Plane);
  t.from_branch = index_branch(topology, {std::vector<int>(punctures.size(), 0), {}, {}});
  const auto crit = index_crit(topology, {static_cast<int>(a.cap_touches.size()), a.positives});
  t.from_crit = crit.first;
  t.ind_U = crit.second;
  return t;
}

DiskRegion make_disk(const LagrangianDiagram& d, const RegionAnalysis& a) {
  DiskRegion r;
  r.mask = mask_of(d, a.faces);
  r.faces = a.faces;
  r.boundary = {a.walks[0], true};
  int start = -1;
  for (int i = 0; i < static_cast<int>(a.corners.size()); ++i) {
    if (!a.corners[i].positive) continue;
    if (start < 0 ||
        d.crossings()[a.corners[i].crossing].event < d.crossings()[a.corners[start].crossing].event) {
      start = i;
    }
  }
  if (start < 0) start = 0;
  for (size_t i = 0; i < a.corners.size(); ++i) r.corners.push_back(a.corners[(start + i) % a.corners.size()]);
  r.cap_touches = a.cap_touches;
  r.sub_arcs = sub_arcs(d, a);
  r.index = region_index(d, a);
  r.ind_u = r.index.from_crit;
  r.ind_U = r.index.ind_U;
  r.positives = a.positives;
  return r;
}

namespace {

struct SearchContext {
  const LagrangianDiagram& d;
  SearchOptions options;
  int bounded;
  std::vector<std::vector<int>> adjacency;
  std::vector<int> order;  // seeds first
  std::vector<int> rank;
  int seeds = 0;
};

SearchContext make_context(const LagrangianDiagram& d, const SearchOptions& options) {
  SearchContext ctx{d, options, d.bounded_face_count(), {}, {}, {}, 0};
  const int N = ctx.bounded;
  ctx.adjacency.assign(N, {});
  auto link = [&](int a, int b) {
    if (a == b || a >= N || b >= N) return;
    ctx.adjacency[a].push_back(b);
    ctx.adjacency[b].push_back(a);
  };
  for (const auto& e : d.edges()) link(d.left_face(2 * e.id), d.left_face(2 * e.id + 1));
  if (options.allow_pinch) {
    for (const auto& c : d.crossings()) {
      link(d.sector_face(c.node, 0), d.sector_face(c.node, 2));
      link(d.sector_face(c.node, 1), d.sector_face(c.node, 3));
    }
  }
  for (auto& adj : ctx.adjacency) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  std::vector<char> positive_adjacent(N, 0);
  for (const auto& c : d.crossings()) {
    for (int q : {1, 3}) {
      const int f = d.sector_face(c.node, q);
      if (f < N) positive_adjacent[f] = 1;
    }
  }
  for (int f = 0; f < N; ++f) {
    if (positive_adjacent[f]) ctx.order.push_back(f);
  }
  ctx.seeds = static_cast<int>(ctx.order.size());
  for (int f = 0; f < N; ++f) {
    if (!positive_adjacent[f]) ctx.order.push_back(f);
  }
  ctx.rank.assign(N, 0);
  for (int i = 0; i < N; ++i) ctx.rank[ctx.order[i]] = i;
  return ctx;
}

class Grower {
 public:
  Grower(const SearchContext& ctx, int seed,
         const std::function<void(int, const FaceMask&, const RegionAnalysis&)>& visit)
      : ctx_(ctx), seed_(seed), visit_(visit) {
    const int F = static_cast<int>(ctx.d.faces().size());
    in_.assign(F, 0);
    out_.assign(F, 0);
    out_[ctx.d.unbounded_face()] = 1;
    for (int r = 0; r < seed; ++r) out_[ctx.order[r]] = 1;
  }

  void run() {
    const int s = ctx_.order[seed_];
    in_[s] = 1;
    std::vector<int> frontier;
    for (int f : ctx_.adjacency[s]) {
      if (!out_[f]) frontier.push_back(f);
    }
    grow(frontier);
  }

 private:
  bool prune() const {
    const auto& d = ctx_.d;
    int fixed = 0;
    for (const auto& c : d.crossings()) {
      int inm = 0, outm = 0;
      for (int q = 0; q < 4; ++q) {
        const int f = d.sector_face(c.node, q);
        inm |= in_[f] << q;
        outm |= out_[f] << q;
      }
      if (inm == 0) continue;
      bool possible = false;
      for (int m = 0; m < 16 && !possible; ++m) {
        if ((m & inm) != inm || (m & outm) != 0) continue;
        possible = kValidPattern[m] || (ctx_.options.allow_pinch && is_opposite(m));
      }
      if (!possible) return true;
      if (std::popcount(static_cast<unsigned>(inm)) == 1 && (inm | outm) == 15 &&
          corner_is_positive(static_cast<Quadrant>(std::countr_zero(static_cast<unsigned>(inm))))) {
        ++fixed;
      }
    }
    for (const auto& cap : d.caps()) {
      if (in_[cap.outer_face] && out_[cap.inner_face]) return true;
      if (in_[cap.inner_face] && out_[cap.outer_face]) ++fixed;
    }
    return fixed > ctx_.options.max_fixed_sum;
  }

  void grow(std::vector<int>& frontier) {
    if (prune()) return;
    if (frontier.empty()) {
      std::vector<int> faces;
      for (int f = 0; f < ctx_.bounded; ++f) {
        if (in_[f]) faces.push_back(f);
      }
      const auto a = analyze_region(ctx_.d, faces, ctx_.options.allow_pinch);
      if (a.ok) visit_(seed_, mask_of(ctx_.d, faces), a);
      return;
    }
    const int v = frontier.back();
    frontier.pop_back();

    out_[v] = 1;
    {
      std::vector<int> copy = frontier;
      grow(copy);
    }
    out_[v] = 0;

    in_[v] = 1;
    std::vector<int> next = frontier;
    for (int f : ctx_.adjacency[v]) {
      if (in_[f] || out_[f]) continue;
      if (std::find(next.begin(), next.end(), f) == next.end()) next.push_back(f);
    }
    grow(next);
    in_[v] = 0;
    frontier.push_back(v);
  }

  const SearchContext& ctx_;
  int seed_;
  const std::function<void(int, const FaceMask&, const RegionAnalysis&)>& visit_;
  std::vector<char> in_, out_;
};

void require_lrs(const LagrangianDiagram& d) {
  const auto v = check_left_right_simple(d);
  if (!v.lrs) throw Error(ErrorKind::NotLRS, "diagram is not left-right-simple", v.witnesses.front());
}

}  // namespace

int seed_count(const LagrangianDiagram& d) { return make_context(d, {}).seeds; }

void search_regions(const LagrangianDiagram& d, const SearchOptions& options,
                    const std::function<void(int, const FaceMask&, const RegionAnalysis&)>& visit) {
  const auto ctx = make_context(d, options);
  if (ctx.seeds == 0) return;
  const int n = threads_for(options.threads, ctx.seeds);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const int s = next.fetch_add(1);
      if (s >= ctx.seeds) return;
      try {
        Grower(ctx, s, visit).run();
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = ctx.seeds;
      }
    }
  };
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<DiskRegion> enumerate_rigid_disks(const LagrangianDiagram& d, const EnumerateOptions& options) {
  require_lrs(d);
  std::vector<std::vector<DiskRegion>> buckets(seed_count(d));
  SearchOptions so;
  so.threads = options.threads;
  search_regions(d, so, [&](int seed, const FaceMask&, const RegionAnalysis& a) {
    if (is_rigid(d, a, options.enforce_no_touching)) buckets[seed].push_back(make_disk(d, a));
  });
  std::vector<DiskRegion> out;
  for (auto& b : buckets) {
    for (auto& r : b) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const DiskRegion& a, const DiskRegion& b) { return a.mask < b.mask; });
  return out;
}

std::string word_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += w[i];
  }
  return s;
}

namespace {

// Tokens along the boundary after the distinguished corner: chords of corners, "|" at a second positive
// corner, "t" at base caps when requested.
Word boundary_word(const LagrangianDiagram& d, const DiskRegion& disk, bool with_t) {
  const int n = static_cast<int>(disk.boundary.half_edges.size());
  const int start = disk.corners.front().step;
  std::vector<std::pair<int, std::string>> events;
  for (size_t i = 1; i < disk.corners.size(); ++i) {
    const auto& c = disk.corners[i];
    events.push_back({(c.step - start + n) % n, c.positive ? "|" : d.chords()[c.crossing].label});
  }
  if (with_t) {
    const auto& base = d.component_base_cap();
    for (int s = 0; s < n; ++s) {
      const int v = d.head_node(disk.boundary.half_edges[s]);
      const auto& node = d.nodes()[v];
      if (node.kind == LagKind::Crossing) continue;
      if (std::find(base.begin(), base.end(), node.index) == base.end()) continue;
      if (std::find(disk.cap_touches.begin(), disk.cap_touches.end(), node.index) == disk.cap_touches.end()) continue;
      events.push_back({(s - start + n) % n, "t"});
    }
  }
  std::sort(events.begin(), events.end());
  Word w;
  for (auto& e : events) w.push_back(e.second);
  return w;
}

}  // namespace

Differential dga_differential(const LagrangianDiagram& d, const std::vector<DiskRegion>& disks, bool with_t_marker) {
  Differential out;
  for (const auto& c : d.chords()) out.raw[c.label];
  for (const auto& disk : disks) {
    const auto w = boundary_word(d, disk, with_t_marker);
    if (disk.positives == 1) {
      out.raw[d.chords()[disk.corners.front().crossing].label].push_back(w);
    } else {
      int second = -1;
      for (const auto& c : disk.corners) {
        if (c.positive && &c != &disk.corners.front()) second = c.crossing;
      }
      const std::string key = d.chords()[disk.corners.front().crossing].label + "," + d.chords()[second].label;
      Word split;
      Word part;
      for (const auto& tok : w) {
        if (tok == "|") {
          split.push_back(word_string(part));
          split.push_back("|");
          part.clear();
        } else {
          part.push_back(tok);
        }
      }
      split.push_back(word_string(part));
      out.two_positive[key].push_back(split);
    }
  }
  return out;
}

std::vector<Word> reduce_mod2(const std::vector<Word>& words) {
  std::map<Word, int> count;
  for (const auto& w : words) count[w] ^= 1;
  std::vector<Word> out;
  for (auto& [w, c] : count) {
    if (c) out.push_back(w);
  }
  return out;
}

std::map<std::string, std::vector<Word>> d_squared(const Differential& diff) {
  std::map<std::string, std::vector<Word>> out;
  for (const auto& [g, words] : diff.raw) {
    std::vector<Word> terms;
    for (const auto& w : words) {
      for (size_t i = 0; i < w.size(); ++i) {
        const auto it = diff.raw.find(w[i]);
        if (it == diff.raw.end()) continue;
        for (const auto& u : it->second) {
          Word t(w.begin(), w.begin() + i);
          t.insert(t.end(), u.begin(), u.end());
          t.insert(t.end(), w.begin() + i + 1, w.end());
          terms.push_back(std::move(t));
        }
      }
    }
    auto r = reduce_mod2(terms);
    if (!r.empty()) out[g] = std::move(r);
  }
  return out;
}

namespace {

int norm8(int a) {
  a %= 8;
  if (a < 0) a += 8;
  return a > 4 ? a - 8 : a;
}

bool departs_forward(const LagrangianDiagram& d, int node, int end) {
  const int h = d.out_half_edge(node, end);
  return (h % 2 == 0) == (d.edges()[h / 2].forward == 1);
}

struct Travel {
  int units = 0;
  std::vector<int> path;
  int arrive_end = -1;
};

// Follows the strand from `h` until `stop(node, end)` holds on arrival.
template <class Stop>
Travel travel(const LagrangianDiagram& d, int h, Stop stop) {
  Travel t;
  const int limit = d.half_edge_count() + 1;
  for (;;) {
    t.path.push_back(h);
    t.units += d.half_edge_turn(h);
    const int v = d.head_node(h);
    const int e = d.head_end(h);
    if (stop(v, e)) {
      t.arrive_end = e;
      return t;
    }
    if (static_cast<int>(t.path.size()) > limit) throw Error(ErrorKind::DisconnectedPath, "strand does not reach target", v);
    const int next = d.continuation_end(v, e);
    t.units += d.vertex_turn(v, e, next);
    h = d.out_half_edge(v, next);
  }
}

// Tangent at a cap tip for a strand passing arrive -> depart: +2 north, -2 south.
int tip_direction(const LagrangianDiagram& d, int node, int arrive) {
  const int half = d.vertex_turn(node, arrive, 1 - arrive) / 2;
  return norm8(d.end_ray(node, arrive) + 4 + half);
}

int grading_of(int x, int alpha, int beta, int modulus) {
  int g = (alpha * x + beta) / 2;
  if (modulus > 0) g = ((g % modulus) + modulus) % modulus;
  return g;
}

}  // namespace

int capping_rotation(const LagrangianDiagram& d, int chord, int over_end, std::vector<int>* path) {
  const int node = d.crossings()[d.chords()[chord].crossing].node;
  const auto p = strand_path(d, node, over_end, node, {true, false, true, false});
  if (path) *path = p.half_edges;
  return path_rotation(d, p);
}

ChordTable grade_chords(const LagrangianDiagram& d, const std::vector<DiskRegion>& disks) {
  std::vector<ChordGrading> rows;
  std::vector<int> xs;
  std::vector<int> rot(d.component_count());
  for (int i = 0; i < d.component_count(); ++i) rot[i] = d.component_turning()[i] / 8;
  for (const auto& ch : d.chords()) {
    ChordGrading g{};
    g.chord = ch.id;
    g.label = ch.label;
    g.start_component = ch.under_component;
    g.end_component = ch.over_component;
    g.mixed = ch.over_component != ch.under_component;
    const int node = d.crossings()[ch.crossing].node;
    if (!g.mixed) {
      std::vector<int> se, nw;
      const int use = capping_rotation(d, ch.id, 3, &se);
      const int alt = capping_rotation(d, ch.id, 1, &nw);
      if (nw.size() < se.size()) {
        g.capping_units = alt;
        g.capping_path = nw;
      } else {
        g.capping_units = use;
        g.capping_path = se;
      }
      g.modulus = 2 * std::abs(rot[ch.over_component]);
    } else {
      const int i = ch.over_component, j = ch.under_component;
      const int over_end = departs_forward(d, node, 3) ? 3 : 1;
      const int cap_i = d.caps()[d.component_base_cap()[i]].node;
      const int cap_j = d.caps()[d.component_base_cap()[j]].node;
      auto first = travel(d, d.out_half_edge(node, over_end), [&](int v, int) { return v == cap_i; });
      const int arrive_i = first.arrive_end;
      const int phi_i = tip_direction(d, cap_i, arrive_i);
      const int depart_j = departs_forward(d, cap_j, 0) ? 0 : 1;
      const int phi_j = tip_direction(d, cap_j, 1 - depart_j);
      auto second = travel(d, d.out_half_edge(cap_j, depart_j), [&](int v, int e) { return v == node && e % 2 == 0; });
      g.capping_units = first.units + d.vertex_turn(cap_i, arrive_i, 1 - arrive_i) / 2 + (phi_j - phi_i) +
                        d.vertex_turn(cap_j, 1 - depart_j, depart_j) / 2 + second.units;
      g.capping_path = first.path;
      g.capping_path.insert(g.capping_path.end(), second.path.begin(), second.path.end());
      g.modulus = std::gcd(2 * std::abs(rot[i]), 2 * std::abs(rot[j]));
    }
    if (g.capping_units % 4 != 2 && g.capping_units % 4 != -2) {
      throw Error(ErrorKind::MapInconsistent, "capping path rotation is not an odd multiple of pi/2", ch.id);
    }
    xs.push_back(g.capping_units / 2);
    rows.push_back(std::move(g));
  }
  const std::pair<int, int> candidates[] = {{1, -1}, {1, 1}, {-1, -1}, {-1, 1}};
  for (auto [alpha, beta] : candidates) {
    ChordTable table;
    table.alpha = alpha;
    table.beta = beta;
    table.chords = rows;
    for (size_t k = 0; k < rows.size(); ++k) {
      table.chords[k].grading = grading_of(xs[k], alpha, beta, rows[k].modulus);
    }
    bool ok = true;
    for (const auto& disk : disks) {
      if (disk.positives != 1) continue;
      const int m = disk_modulus(table, disk);
      const int defect = degree_defect(table, disk) - 1;
      if (m == 0 ? defect != 0 : defect % m != 0) {
        ok = false;
        break;
      }
    }
    if (ok) return table;
  }
  throw Error(ErrorKind::CalibrationFailure, "no grading normalization satisfies the degree identity");
}

int degree_defect(const ChordTable& table, const DiskRegion& disk) {
  int s = 0;
  for (const auto& c : disk.corners) s += (c.positive ? 1 : -1) * table.chords[c.crossing].grading;
  return s;
}

int disk_modulus(const ChordTable& table, const DiskRegion& disk) {
  int m = 0;
  for (const auto& c : disk.corners) m = std::gcd(m, table.chords[c.crossing].modulus);
  return m;
}

Lift lift_boundary_labels(const LagrangianDiagram& d, const std::vector<int>& faces) {
  if (faces.empty()) throw Error(ErrorKind::EmptyRegion, "a lift needs a non-constant map");
  const auto a = analyze_region(d, faces);
  if (!a.ok) throw Error(ErrorKind::InvalidArgument, "region rejected: " + a.reject);
  auto sheet = [](int end) { return end % 2 == 1 ? Sheet::Top : Sheet::Bottom; };
  Lift lift;
  for (int w = 0; w < static_cast<int>(a.walks.size()); ++w) {
    const auto& walk = a.walks[w];
    const int n = static_cast<int>(walk.size());
    std::vector<int> ids;
    for (int i = 0; i < static_cast<int>(a.corners.size()); ++i) {
      if (a.corners[i].walk == w) ids.push_back(i);
    }
    if (ids.empty()) {
      lift.arcs.push_back({w, -1, -1, Sheet::Top, Sheet::Top});
      continue;
    }
    std::vector<Sheet> arrive(ids.size()), depart(ids.size());
    for (size_t k = 0; k < ids.size(); ++k) {
      const auto& c = a.corners[ids[k]];
      arrive[k] = sheet(d.head_end(walk[c.step]));
      depart[k] = sheet(d.tail_end(walk[(c.step + 1) % n]));
      const bool up = arrive[k] == Sheet::Bottom && depart[k] == Sheet::Top;
      const bool down = arrive[k] == Sheet::Top && depart[k] == Sheet::Bottom;
      if (c.positive ? !up : !down) {
        throw Error(ErrorKind::InconsistentLift, "corner sheets disagree with the corner sign", c.crossing);
      }
    }
    for (size_t k = 0; k < ids.size(); ++k) {
      const size_t next = (k + 1) % ids.size();
      lift.arcs.push_back({w, ids[k], ids[next], depart[k], arrive[next]});
    }
  }
  std::vector<std::string> pos, neg;
  const auto disk = make_disk(d, a);
  for (const auto& c : disk.corners) (c.positive ? pos : neg).push_back("A(" + d.chords()[c.crossing].label + ")");
  std::string e;
  for (size_t i = 0; i < pos.size(); ++i) e += (i ? " + " : "") + pos[i];
  for (const auto& n : neg) e += (e.empty() ? "-" : " - ") + n;
  lift.energy = e;
  return lift;
}

Census index2_census(const LagrangianDiagram& d, int threads) {
  require_lrs(d);
  const int seeds = seed_count(d);
  std::vector<Census> parts(seeds);
  SearchOptions so;
  so.allow_pinch = true;
  so.max_fixed_sum = 3;
  so.threads = threads;
  search_regions(d, so, [&](int seed, const FaceMask& mask, const RegionAnalysis& a) {
    if (a.positives < 1) return;
    Census& out = parts[seed];
    ++out.subsets_examined;
    const int caps = static_cast<int>(a.cap_touches.size());
    const int sum = caps + a.positives;
    auto make = [&](const std::string& kind, int chi, int extra_positive, int slit) {
      CensusCandidate c;
      c.mask = mask;
      c.faces = a.faces;
      c.kind = kind;
      c.chi = chi;
      c.corners = a.corners;
      c.cap_touches = a.cap_touches;
      c.positives = a.positives + extra_positive;
      c.slit_crossing = slit;
      c.ind_u = -2 * chi + caps + c.positives;
      c.ind_U = -chi + caps + c.positives;
      return c;
    };
    if (a.pinches.empty() && a.chi == 1) {
      if (sum == 3) out.disk_candidates.push_back(make("disk_convex", 1, 0, -1));
      if (sum == 2) {
        for (int c : a.pass_through) out.disk_candidates.push_back(make("disk_boundary_slit", 1, 1, c));
        if (!a.interior_edges.empty()) out.annulus_candidates.push_back(make("annulus_interior_slit", 0, 0, -1));
      }
      if (sum < 2) out.violations.push_back(make("disk_low", 1, 0, -1));
    } else if (a.chi == 0) {
      const std::string kind = a.pinches.empty() ? "annulus_hole" : "annulus_pinch";
      if (sum == 2) out.annulus_candidates.push_back(make(kind, 0, 0, -1));
      if (sum < 2) out.violations.push_back(make(kind, 0, 0, -1));
    } else if (a.chi <= -1 && -a.chi + sum <= 2) {
      out.violations.push_back(make("chi_negative", a.chi, 0, -1));
    }
  });
  Census all;
  for (auto& p : parts) {
    all.subsets_examined += p.subsets_examined;
    for (auto* v : {&p.disk_candidates, &p.annulus_candidates, &p.violations}) {
      auto& target = v == &p.disk_candidates ? all.disk_candidates
                     : v == &p.annulus_candidates ? all.annulus_candidates
                                                  : all.violations;
      for (auto& c : *v) target.push_back(std::move(c));
    }
  }
  auto by_key = [](const CensusCandidate& a, const CensusCandidate& b) {
    if (!(a.mask == b.mask)) return a.mask < b.mask;
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.slit_crossing < b.slit_crossing;
  };
  std::sort(all.disk_candidates.begin(), all.disk_candidates.end(), by_key);
  std::sort(all.annulus_candidates.begin(), all.annulus_candidates.end(), by_key);
  std::sort(all.violations.begin(), all.violations.end(), by_key);
  return all;
}

}  // namespace lchkit
