#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "lchkit/diagram.hpp"
#include "lchkit/disks.hpp"
#include "lchkit/front.hpp"

namespace testutil {

struct CorpusEntry {
  std::string name;
  std::string text;
};

inline std::vector<CorpusEntry> load_corpus() {
  std::vector<CorpusEntry> out;
  for (const auto& e : std::filesystem::directory_iterator(LCHKIT_CORPUS_DIR)) {
    if (e.path().extension() != ".front") continue;
    std::ifstream in(e.path());
    std::stringstream ss;
    ss << in.rdbuf();
    out.push_back({e.path().stem().string(), ss.str()});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

struct OracleRegion {
  bool rigid = false;
  int positives = 0;
  int caps = 0;
  int chi = 0;
};

// Rigid-disk test written from quadrant membership and the closure's cell counts alone.
inline OracleRegion oracle_region(const lchkit::LagrangianDiagram& d, std::uint64_t mask, bool no_touching) {
  OracleRegion r;
  const int N = d.bounded_face_count();
  auto in = [&](int f) { return f < N && ((mask >> f) & 1u); };
  int lo = 1 << 30, hi = -1;
  std::vector<int> negative_x;
  for (const auto& c : d.crossings()) {
    int m = 0, k = 0;
    for (int q = 0; q < 4; ++q) {
      if (in(d.sector_face(c.node, q))) {
        m |= 1 << q;
        ++k;
      }
    }
    if (k == 3 || m == 5 || m == 10) return r;
    if (k == 1) {
      const int q = __builtin_ctz(m);
      if (q == 1 || q == 3) {
        ++r.positives;
        lo = std::min(lo, c.event);
        hi = std::max(hi, c.event);
      } else {
        negative_x.push_back(c.event);
      }
    }
  }
  for (const auto& cap : d.caps()) {
    if (in(cap.outer_face) && !in(cap.inner_face)) return r;
    if (in(cap.inner_face) && !in(cap.outer_face)) ++r.caps;
  }
  std::vector<int> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int V = 0, E = 0, F = 0;
  for (const auto& e : d.edges()) {
    const int a = d.left_face(2 * e.id), b = d.left_face(2 * e.id + 1);
    if (in(a) || in(b)) ++E;
    if (in(a) && in(b)) parent[find(a)] = find(b);
  }
  for (size_t v = 0; v < d.nodes().size(); ++v) {
    bool touched = false;
    for (int s = 0; s < d.nodes()[v].degree; ++s) touched |= in(d.sector_face(static_cast<int>(v), s));
    V += touched;
  }
  int root = -1;
  for (int f = 0; f < N; ++f) {
    if (!in(f)) continue;
    F += 2 - static_cast<int>(d.faces()[f].walks.size());
    if (root < 0) root = find(f);
    if (find(f) != root) return r;
  }
  r.chi = V - E + F;
  if (r.chi != 1 || r.positives < 1 || r.positives + r.caps != 2) return r;
  if (r.positives == 2 && no_touching) {
    for (int x : negative_x) {
      if (!(lo < x && x < hi)) return r;
    }
  }
  r.rigid = true;
  return r;
}

inline std::vector<std::uint64_t> exhaustive_rigid(const lchkit::LagrangianDiagram& d, bool no_touching = true) {
  const int N = d.bounded_face_count();
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << N); ++m) {
    if (oracle_region(d, m, no_touching).rigid) out.push_back(m);
  }
  return out;
}

inline std::uint64_t as_u64(const lchkit::FaceMask& m) {
  std::uint64_t v = 0;
  for (int f : m.members()) v |= std::uint64_t{1} << f;
  return v;
}

inline std::vector<std::uint64_t> masks_of(const std::vector<lchkit::DiskRegion>& disks) {
  std::vector<std::uint64_t> out;
  for (const auto& k : disks) out.push_back(as_u64(k.mask));
  return out;
}

}  // namespace testutil
