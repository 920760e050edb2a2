#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lchkit/diagram.hpp"

namespace lchkit {

// Bounded-face subset stored as a little-endian bitmask.
class FaceMask {
 public:
  FaceMask() = default;
  explicit FaceMask(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }
  bool test(int f) const { return (words_[f / 64] >> (f % 64)) & 1u; }
  void set(int f) { words_[f / 64] |= std::uint64_t{1} << (f % 64); }
  void reset(int f) { words_[f / 64] &= ~(std::uint64_t{1} << (f % 64)); }
  int count() const;
  bool empty() const { return count() == 0; }
  std::vector<int> members() const;
  std::string hex() const;

  friend bool operator==(const FaceMask& a, const FaceMask& b) { return a.words_ == b.words_; }
  friend bool operator<(const FaceMask& a, const FaceMask& b);

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

FaceMask mask_of(const LagrangianDiagram& d, const std::vector<int>& faces);

bool corner_is_positive(Quadrant q);

struct CornerRecord {
  int crossing;
  Quadrant quadrant;
  bool positive;
  int walk;  // boundary component
  int step;  // index into the walk's half-edges (corner at the head of that half-edge)
};

// Boundary rotation between consecutive punctures of one boundary component.
struct SubArc {
  int walk;
  int from_corner;  // -1 on a boundary component without corners
  int to_corner;
  int theta;  // pi/4 units
  int cap_touches;
};

struct RegionAnalysis {
  bool ok = false;
  std::string reject;
  std::vector<int> faces;
  std::vector<std::vector<int>> walks;
  std::vector<CornerRecord> corners;  // walk order; pinch quadrants excluded
  std::vector<std::pair<int, int>> cap_steps;  // (walk, step) per cap touch
  std::vector<int> cap_touches;
  std::vector<int> pass_through;
  std::vector<int> pinches;
  std::vector<int> interior_crossings;
  std::vector<int> interior_edges;
  int chi = 0;
  int positives = 0;
  int negatives = 0;
};

RegionAnalysis analyze_region(const LagrangianDiagram& d, const std::vector<int>& faces, bool allow_pinch = false);

struct IndexTriple {
  int from_maslov;
  int from_branch;
  int from_crit;
  int ind_U;
};

struct DiskRegion {
  FaceMask mask;
  std::vector<int> faces;
  BoundaryPath boundary;
  std::vector<CornerRecord> corners;  // counterclockwise from the distinguished positive corner
  std::vector<int> cap_touches;
  std::vector<SubArc> sub_arcs;
  IndexTriple index;
  int ind_u;
  int ind_U;
  int positives;
};

bool is_rigid(const LagrangianDiagram& d, const RegionAnalysis& a, bool enforce_no_touching = true);
DiskRegion make_disk(const LagrangianDiagram& d, const RegionAnalysis& a);
std::vector<SubArc> sub_arcs(const LagrangianDiagram& d, const RegionAnalysis& a);
IndexTriple region_index(const LagrangianDiagram& d, const RegionAnalysis& a);

struct SearchOptions {
  bool allow_pinch = false;
  int max_fixed_sum = 2;  // prune once committed caps + positive corners exceed this
  int threads = 0;        // 0: LCHKIT_THREADS or hardware concurrency
};

// Visits every connected face subset that contains a face next to a positive quadrant and passes the local
// corner and cap filters. The visitor receives the seed rank; calls for one seed are sequential.
void search_regions(const LagrangianDiagram& d, const SearchOptions& options,
                    const std::function<void(int seed, const FaceMask&, const RegionAnalysis&)>& visit);
int seed_count(const LagrangianDiagram& d);

struct EnumerateOptions {
  bool enforce_no_touching = true;
  int threads = 0;
};

std::vector<DiskRegion> enumerate_rigid_disks(const LagrangianDiagram& d, const EnumerateOptions& options = {});

using Word = std::vector<std::string>;  // empty word is 1

struct Differential {
  std::map<std::string, std::vector<Word>> raw;  // chord label -> words, one per disk
  std::map<std::string, std::vector<Word>> two_positive;  // "a,b" -> words "w1 | w2"
};

Differential dga_differential(const LagrangianDiagram& d, const std::vector<DiskRegion>& disks,
                              bool with_t_marker = false);
// Words of d(d(a)) surviving mod 2, per generator; empty when d^2 = 0.
std::map<std::string, std::vector<Word>> d_squared(const Differential& diff);
std::vector<Word> reduce_mod2(const std::vector<Word>& words);
std::string word_string(const Word& w);

struct ChordGrading {
  int chord;
  std::string label;
  int grading;
  int modulus;          // 0: integer grading
  int start_component;  // under strand
  int end_component;    // over strand
  int capping_units;    // rotation of the capping path, pi/4 units
  std::vector<int> capping_path;
  bool mixed;
};

struct ChordTable {
  std::vector<ChordGrading> chords;
  int alpha;
  int beta;
};

// Rotation (pi/4 units) of the capping path of a chord, starting at the given over end.
int capping_rotation(const LagrangianDiagram& d, int chord, int over_end, std::vector<int>* path = nullptr);
ChordTable grade_chords(const LagrangianDiagram& d, const std::vector<DiskRegion>& disks);
// |a| - sum |b| for a one-positive disk, or |a1| + |a2| - sum |b| for a two-positive disk.
int degree_defect(const ChordTable& table, const DiskRegion& disk);
int disk_modulus(const ChordTable& table, const DiskRegion& disk);

enum class Sheet { Top, Bottom };

struct LiftedArc {
  int walk;
  int from_corner;
  int to_corner;
  Sheet start;
  Sheet end;
};

struct Lift {
  std::vector<LiftedArc> arcs;
  std::string energy;
};

Lift lift_boundary_labels(const LagrangianDiagram& d, const std::vector<int>& faces);

struct CensusCandidate {
  FaceMask mask;
  std::vector<int> faces;
  std::string kind;  // disk_boundary_slit, disk_convex, annulus_interior_slit, annulus_pinch, annulus_hole
  int chi;
  std::vector<CornerRecord> corners;
  std::vector<int> cap_touches;
  int positives;
  int slit_crossing;  // disk_boundary_slit only
  int ind_u;
  int ind_U;
};

struct Census {
  std::vector<CensusCandidate> disk_candidates;
  std::vector<CensusCandidate> annulus_candidates;
  std::vector<CensusCandidate> violations;  // low-index annuli or chi <= -1 subsets
  long subsets_examined = 0;
};

Census index2_census(const LagrangianDiagram& d, int threads = 0);

}  // namespace lchkit
