#include "lchkit/front.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "lchkit/errors.hpp"

namespace lchkit {

namespace {

struct Cursor {
  int slot;
  int pos;
  int dir;
};

Cursor step(const std::vector<FrontEvent>& ev, Cursor c) {
  if (c.dir > 0) {
    const FrontEvent& e = ev[c.slot];
    const int k = e.position;
    switch (e.kind) {
      case EventKind::LeftCusp:
        return {c.slot + 1, c.pos < k ? c.pos : c.pos + 2, 1};
      case EventKind::RightCusp:
        if (c.pos == k) return {c.slot, k + 1, -1};
        if (c.pos == k + 1) return {c.slot, k, -1};
        return {c.slot + 1, c.pos < k ? c.pos : c.pos - 2, 1};
      case EventKind::Crossing:
        if (c.pos == k) return {c.slot + 1, k + 1, 1};
        if (c.pos == k + 1) return {c.slot + 1, k, 1};
        return {c.slot + 1, c.pos, 1};
    }
  }
  const FrontEvent& e = ev[c.slot - 1];
  const int k = e.position;
  switch (e.kind) {
    case EventKind::LeftCusp:
      if (c.pos == k) return {c.slot, k + 1, 1};
      if (c.pos == k + 1) return {c.slot, k, 1};
      return {c.slot - 1, c.pos < k ? c.pos : c.pos - 2, -1};
    case EventKind::RightCusp:
      return {c.slot - 1, c.pos < k ? c.pos : c.pos + 2, -1};
    case EventKind::Crossing:
      if (c.pos == k) return {c.slot - 1, k + 1, -1};
      if (c.pos == k + 1) return {c.slot - 1, k, -1};
      return {c.slot - 1, c.pos, -1};
  }
  return c;
}

std::vector<FrontEvent> mirror(const std::vector<FrontEvent>& ev) {
  std::vector<FrontEvent> out(ev.rbegin(), ev.rend());
  for (auto& e : out) {
    if (e.kind == EventKind::LeftCusp) {
      e.kind = EventKind::RightCusp;
    } else if (e.kind == EventKind::RightCusp) {
      e.kind = EventKind::LeftCusp;
    }
  }
  return out;
}

bool is_left(const FrontEvent& e) { return e.kind == EventKind::LeftCusp; }

// Index of the first left cusp inserted inside a pair of the leading left-cusp block, or -1.
int nested_left_cusp(const std::vector<FrontEvent>& ev) {
  std::vector<int> pair_of;
  for (int i = 0; i < static_cast<int>(ev.size()) && is_left(ev[i]); ++i) {
    const int k = ev[i].position;
    const int n = static_cast<int>(pair_of.size());
    if (k >= 2 && k <= n && pair_of[k - 2] == pair_of[k - 1]) return i;
    pair_of.insert(pair_of.begin() + (k - 1), 2, i);
  }
  return -1;
}

// Moves every left cusp to the front of the word using commutations and type-II insertions.
std::vector<FrontEvent> left_cusps_first(std::vector<FrontEvent> ev) {
  for (;;) {
    bool changed = false;
    for (size_t i = 1; i < ev.size(); ++i) {
      if (!is_left(ev[i]) || is_left(ev[i - 1])) continue;
      const FrontEvent prev = ev[i - 1];
      const int k = ev[i].position;
      const int j = prev.position;
      if (prev.kind == EventKind::Crossing) {
        if (k == j + 1) {
          // Slide the cusp below the lower crossing strand: Lk = L(k-1) Xk X(k-1).
          ev[i] = {EventKind::LeftCusp, k - 1};
          ev.insert(ev.begin() + i + 1, {{EventKind::Crossing, k}, {EventKind::Crossing, k - 1}});
        } else {
          ev[i - 1] = {EventKind::LeftCusp, k};
          ev[i] = {EventKind::Crossing, k <= j ? j + 2 : j};
        }
      } else {
        ev[i - 1] = {EventKind::LeftCusp, k < j ? k : k + 2};
        ev[i] = {EventKind::RightCusp, k < j ? j + 2 : j};
      }
      changed = true;
      break;
    }
    if (changed) continue;
    const int nested = nested_left_cusp(ev);
    if (nested < 0) break;
    const int k = ev[nested].position;
    ev[nested] = {EventKind::LeftCusp, k - 1};
    ev.insert(ev.begin() + nested + 1, {{EventKind::Crossing, k}, {EventKind::Crossing, k - 1}});
  }
  return ev;
}

}  // namespace

FrontDiagram::FrontDiagram(std::vector<FrontEvent> events, std::vector<bool> reversed)
    : events_(std::move(events)) {
  const int m = static_cast<int>(events_.size());
  std::vector<int> counts(m + 1, 0);
  int n = 0;
  for (int i = 0; i < m; ++i) {
    const FrontEvent& e = events_[i];
    if (e.position < 1) throw Error(ErrorKind::TopologyError, "position must be positive", i + 1);
    if (e.kind == EventKind::LeftCusp) {
      if (e.position > n + 1) throw Error(ErrorKind::TopologyError, "left cusp above strand stack", i + 1);
      n += 2;
    } else {
      if (e.position + 1 > n) throw Error(ErrorKind::TopologyError, "event exceeds strand count", i + 1);
      if (e.kind == EventKind::RightCusp) n -= 2;
    }
    counts[i + 1] = n;
  }
  if (n != 0) throw Error(ErrorKind::TopologyError, "strands left open at the end", m);

  component_.assign(m + 1, {});
  direction_.assign(m + 1, {});
  for (int s = 0; s <= m; ++s) {
    component_[s].assign(counts[s], -1);
    direction_[s].assign(counts[s], 0);
  }
  int next_component = 0;
  for (int i = 0; i < m; ++i) {
    if (events_[i].kind != EventKind::LeftCusp) continue;
    const int k = events_[i].position;
    if (component_[i + 1][k] >= 0) continue;
    const Cursor start{i + 1, k + 1, 1};
    Cursor c = start;
    do {
      component_[c.slot][c.pos - 1] = next_component;
      direction_[c.slot][c.pos - 1] = c.dir;
      c = step(events_, c);
    } while (c.slot != start.slot || c.pos != start.pos || c.dir != start.dir);
    ++next_component;
  }
  component_count_ = next_component;

  reversed_ = std::move(reversed);
  reversed_.resize(component_count_, false);
  for (int s = 0; s <= m; ++s) {
    for (size_t p = 0; p < direction_[s].size(); ++p) {
      if (reversed_[component_[s][p]]) direction_[s][p] = -direction_[s][p];
    }
  }
}

int FrontDiagram::crossing_count() const {
  return static_cast<int>(std::count_if(events_.begin(), events_.end(),
                                        [](const FrontEvent& e) { return e.kind == EventKind::Crossing; }));
}

bool FrontDiagram::is_plat() const {
  int phase = 0;
  for (const auto& e : events_) {
    const int p = e.kind == EventKind::LeftCusp ? 0 : (e.kind == EventKind::Crossing ? 1 : 2);
    if (p < phase) return false;
    phase = p;
  }
  return true;
}

FrontDiagram FrontDiagram::with_orientation(std::vector<bool> reversed) const {
  return FrontDiagram(events_, std::move(reversed));
}

std::string event_token(const FrontEvent& e) {
  const char c = e.kind == EventKind::LeftCusp ? 'L' : (e.kind == EventKind::RightCusp ? 'R' : 'X');
  return c + std::to_string(e.position);
}

FrontDiagram parse_front(const std::string& text) {
  std::vector<FrontEvent> events;
  std::istringstream lines(text);
  std::string line;
  int token_index = 0;
  while (std::getline(lines, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string tok;
    while (words >> tok) {
      ++token_index;
      if (tok.size() < 2 || (tok[0] != 'L' && tok[0] != 'R' && tok[0] != 'X')) {
        throw Error(ErrorKind::SyntaxError, "bad token '" + tok + "'", token_index);
      }
      for (size_t i = 1; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) {
          throw Error(ErrorKind::SyntaxError, "bad token '" + tok + "'", token_index);
        }
      }
      if (tok.size() > 10) throw Error(ErrorKind::SyntaxError, "position too large", token_index);
      const int k = std::stoi(tok.substr(1));
      if (k < 1) throw Error(ErrorKind::SyntaxError, "position must be positive", token_index);
      const EventKind kind =
          tok[0] == 'L' ? EventKind::LeftCusp : (tok[0] == 'R' ? EventKind::RightCusp : EventKind::Crossing);
      events.push_back({kind, k});
    }
  }
  return FrontDiagram(std::move(events));
}

std::string serialize_front(const FrontDiagram& front) {
  std::string out;
  for (const auto& e : front.events()) {
    if (!out.empty()) out += ' ';
    out += event_token(e);
  }
  return out;
}

FrontDiagram platify(const FrontDiagram& front) {
  std::vector<FrontEvent> ev = left_cusps_first(front.events());
  ev = mirror(left_cusps_first(mirror(ev)));
  return FrontDiagram(std::move(ev));
}

std::vector<Invariants> classical_invariants(const FrontDiagram& front) {
  const int c = front.component_count();
  std::vector<int> writhe(c, 0), cusps(c, 0), up(c, 0), down(c, 0);
  const auto& ev = front.events();
  for (int i = 0; i < static_cast<int>(ev.size()); ++i) {
    const int k = ev[i].position;
    switch (ev[i].kind) {
      case EventKind::LeftCusp: {
        const int comp = front.component_at(i + 1, k + 1);
        ++cusps[comp];
        (front.direction_at(i + 1, k + 1) > 0 ? up : down)[comp]++;
        break;
      }
      case EventKind::RightCusp: {
        const int comp = front.component_at(i, k + 1);
        ++cusps[comp];
        (front.direction_at(i, k + 1) > 0 ? down : up)[comp]++;
        break;
      }
      case EventKind::Crossing: {
        const int a = front.component_at(i, k), b = front.component_at(i, k + 1);
        if (a != b) break;
        writhe[a] += front.direction_at(i, k) == front.direction_at(i, k + 1) ? 1 : -1;
        break;
      }
    }
  }
  std::vector<Invariants> out(c);
  for (int i = 0; i < c; ++i) out[i] = {writhe[i] - cusps[i] / 2, (down[i] - up[i]) / 2};
  return out;
}

int linking_number(const FrontDiagram& front, int a, int b) {
  int total = 0;
  const auto& ev = front.events();
  for (int i = 0; i < static_cast<int>(ev.size()); ++i) {
    if (ev[i].kind != EventKind::Crossing) continue;
    const int k = ev[i].position;
    const int ca = front.component_at(i, k), cb = front.component_at(i, k + 1);
    if (!((ca == a && cb == b) || (ca == b && cb == a))) continue;
    total += front.direction_at(i, k) == front.direction_at(i, k + 1) ? 1 : -1;
  }
  return total / 2;
}

}  // namespace lchkit
