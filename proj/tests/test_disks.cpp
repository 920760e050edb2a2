#include <algorithm>
#include <set>

#include "doctest.h"
#include "lchkit/disks.hpp"
#include "lchkit/errors.hpp"
#include "lchkit/index.hpp"
#include "oracle.hpp"

using namespace lchkit;

namespace {

LagrangianDiagram res(const std::string& text) { return resolve(parse_front(text)); }

std::string corner_signature(const LagrangianDiagram& d, const DiskRegion& k) {
  std::string pos, neg;
  std::multiset<std::string> negs;
  for (const auto& c : k.corners) {
    if (c.positive) {
      pos += (pos.empty() ? "" : ",") + d.chords()[c.crossing].label;
    } else {
      negs.insert(d.chords()[c.crossing].label);
    }
  }
  for (const auto& n : negs) neg += (neg.empty() ? "" : ",") + n;
  return "+" + pos + "/-" + neg;
}

bool has_disk(const LagrangianDiagram& d, const std::vector<DiskRegion>& disks, const std::string& sig) {
  for (const auto& k : disks) {
    if (corner_signature(d, k) == sig) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("corner signs") {
  CHECK(corner_is_positive(Quadrant::E));
  CHECK(corner_is_positive(Quadrant::W));
  CHECK_FALSE(corner_is_positive(Quadrant::N));
  CHECK_FALSE(corner_is_positive(Quadrant::S));
  for (int q = 0; q < 4; ++q) {
    CHECK(corner_is_positive(static_cast<Quadrant>(q)) == corner_is_positive(static_cast<Quadrant>((q + 2) % 4)));
    CHECK(corner_is_positive(static_cast<Quadrant>(q)) != corner_is_positive(static_cast<Quadrant>((q + 1) % 4)));
  }
}

TEST_CASE("unknot disks, differential and grading") {
  const auto d = res("L1 R1");
  const auto disks = enumerate_rigid_disks(d);
  REQUIRE(disks.size() == 2);
  CHECK(testutil::masks_of(disks) == testutil::exhaustive_rigid(d));
  // One disk fills the loop (E quadrant), the other the main face (W quadrant).
  std::set<Quadrant> quadrants;
  for (const auto& k : disks) {
    REQUIRE(k.corners.size() == 1);
    quadrants.insert(k.corners[0].quadrant);
    CHECK(k.cap_touches.size() == 1);
    const auto& cap = d.caps()[k.cap_touches[0]];
    CHECK(cap.side == (k.corners[0].quadrant == Quadrant::E ? CapSide::Right : CapSide::Left));
  }
  CHECK(quadrants == std::set<Quadrant>{Quadrant::E, Quadrant::W});
  const auto diff = dga_differential(d, disks);
  REQUIRE(diff.raw.at("r1").size() == 2);
  CHECK(word_string(diff.raw.at("r1")[0]) == "1");
  CHECK(reduce_mod2(diff.raw.at("r1")).empty());
  CHECK(d_squared(diff).empty());
  const auto table = grade_chords(d, disks);
  CHECK(table.chords[0].grading == 1);
}

TEST_CASE("trefoil disks with corners r4, r1, r2, r3") {
  const auto d = res("L1 L1 X2 X2 X2 R1 R1");
  const auto disks = enumerate_rigid_disks(d);
  CHECK(testutil::masks_of(disks) == testutil::exhaustive_rigid(d));
  CHECK(has_disk(d, disks, "+r4/-r1"));
  CHECK(has_disk(d, disks, "+r4/-r1,r2,r3"));
  CHECK(has_disk(d, disks, "+r2,r3/-"));
  const auto diff = dga_differential(d, disks);
  CHECK(d_squared(diff).empty());
  const auto table = grade_chords(d, disks);
  auto g = [&](const char* l) {
    for (const auto& c : table.chords) {
      if (c.label == l) return c.grading;
    }
    return -100;
  };
  CHECK(g("r4") == g("r1") + 1);
  CHECK(g("r2") + g("r3") == 0);
  for (const auto& k : disks) {
    CHECK(degree_defect(table, k) == (k.positives == 1 ? 1 : 0));
  }
}

TEST_CASE("corpus disk properties") {
  for (const auto& entry : testutil::load_corpus()) {
    CAPTURE(entry.name);
    const auto d = resolve(parse_front(entry.text));
    const auto disks = enumerate_rigid_disks(d);
    const int N = d.bounded_face_count();
    CHECK(static_cast<double>(disks.size()) <= static_cast<double>(std::uint64_t{1} << N));
    if (N <= 20) CHECK(testutil::masks_of(disks) == testutil::exhaustive_rigid(d));
    // The x-separation of two-positive disks holds without being imposed.
    const auto unfiltered = enumerate_rigid_disks(d, {false, 0});
    CHECK(testutil::masks_of(unfiltered) == testutil::masks_of(disks));
    const auto table = grade_chords(d, disks);
    for (const auto& k : disks) {
      CHECK(k.index.from_maslov == k.index.from_branch);
      CHECK(k.index.from_branch == k.index.from_crit);
      CHECK(k.ind_U - k.ind_u == 1);
      CHECK(k.ind_U == 1);
      CHECK(k.positives >= 1);
      CHECK(k.positives <= 2);
      CHECK(k.corners.front().positive);
      const int m = disk_modulus(table, k);
      const int defect = degree_defect(table, k) - (k.positives == 1 ? 1 : 0);
      CHECK((m == 0 ? defect == 0 : defect % m == 0));
      const auto lift = lift_boundary_labels(d, k.faces);
      const auto plus = std::count(lift.energy.begin(), lift.energy.end(), '+');
      CHECK(plus == k.positives - 1);
      CHECK(lift.energy.rfind("A(" + d.chords()[k.corners.front().crossing].label + ")", 0) == 0);
    }
    CHECK(d_squared(dga_differential(d, disks)).empty());
    CHECK(d_squared(dga_differential(d, disks, true)).empty());
  }
}

TEST_CASE("boundary rotation between punctures matches the closed form") {
  for (const auto& entry : testutil::load_corpus()) {
    CAPTURE(entry.name);
    const auto d = resolve(parse_front(entry.text));
    for (const auto& k : enumerate_rigid_disks(d)) {
      const auto a = analyze_region(d, k.faces);
      for (const auto& sa : sub_arcs(d, a)) {
        REQUIRE(sa.from_corner >= 0);
        const bool end_positive = a.corners[sa.to_corner].positive;
        const bool start_negative = !a.corners[sa.from_corner].positive;
        CHECK(sa.theta == 2 * ((end_positive ? 1 : 0) - (start_negative ? 1 : 0) + 2 * sa.cap_touches));
      }
    }
  }
}

TEST_CASE("capping paths: both directions agree up to the rotation number") {
  for (const auto& entry : testutil::load_corpus()) {
    CAPTURE(entry.name);
    const auto d = resolve(parse_front(entry.text));
    for (const auto& ch : d.chords()) {
      if (ch.over_component != ch.under_component) continue;
      const int a = capping_rotation(d, ch.id, 3);
      const int b = capping_rotation(d, ch.id, 1);
      const int full = d.component_turning()[ch.over_component];
      CHECK(((a - b) == full || (a - b) == -full));
    }
  }
}

TEST_CASE("lift labels") {
  const auto d = res("L1 R1");
  const auto disks = enumerate_rigid_disks(d);
  for (const auto& k : disks) {
    const auto lift = lift_boundary_labels(d, k.faces);
    REQUIRE(lift.arcs.size() == 1);
    CHECK(lift.arcs[0].start == Sheet::Top);
    CHECK(lift.arcs[0].end == Sheet::Bottom);
    CHECK(lift.energy == "A(r1)");
  }
  const auto t = res("L1 L1 X2 X2 X2 R1 R1");
  for (const auto& k : enumerate_rigid_disks(t)) {
    if (corner_signature(t, k) == "+r4/-r1") CHECK(lift_boundary_labels(t, k.faces).energy == "A(r4) - A(r1)");
  }
  bool empty = false;
  try {
    lift_boundary_labels(d, {});
  } catch (const Error& e) {
    empty = e.kind() == ErrorKind::EmptyRegion;
  }
  CHECK(empty);
}

TEST_CASE("NotLRS is reported") {
  const auto d = resolve(parse_front("L1 R1 L1 R1"), false);
  bool threw = false;
  try {
    enumerate_rigid_disks(d);
  } catch (const Error& e) {
    threw = e.kind() == ErrorKind::NotLRS;
  }
  CHECK(threw);
}

TEST_CASE("enumeration is independent of thread count") {
  const auto d = res("L1 L1 L1 X3 X2 X4 X3 X1 X5 X3 X2 X4 X3 R1 R1 R1");
  const auto one = enumerate_rigid_disks(d, {true, 1});
  const auto many = enumerate_rigid_disks(d, {true, 4});
  CHECK(testutil::masks_of(one) == testutil::masks_of(many));
}

TEST_CASE("index-2 census") {
  SUBCASE("trefoil annulus through the two regions") {
    const auto d = res("L1 L1 X2 X2 X2 R1 R1");
    const auto disks = enumerate_rigid_disks(d);
    const auto census = index2_census(d);
    bool found = false;
    for (const auto& k : disks) {
      if (corner_signature(d, k) != "+r4/-r1") continue;
      for (const auto& a : census.annulus_candidates) found |= a.mask == k.mask && a.kind == "annulus_interior_slit";
    }
    CHECK(found);
  }
  SUBCASE("stabilized unknot annulus with positive r1 and r3") {
    const auto d = res("L1 X1 X1 R1");
    const auto census = index2_census(d);
    bool found = false;
    for (const auto& a : census.annulus_candidates) {
      std::set<std::string> pos;
      for (const auto& c : a.corners) {
        if (c.positive) pos.insert(d.chords()[c.crossing].label);
      }
      found |= pos == std::set<std::string>{"r1", "r3"} && a.cap_touches.empty();
    }
    CHECK(found);
  }
  SUBCASE("corpus exclusions") {
    for (const auto& entry : testutil::load_corpus()) {
      CAPTURE(entry.name);
      const auto d = resolve(parse_front(entry.text));
      const auto census = index2_census(d);
      CHECK(census.violations.empty());
      for (const auto& a : census.annulus_candidates) {
        CHECK(a.chi == 0);
        CHECK(a.ind_u == 2);
        CHECK(a.ind_U == 2);
        CHECK(static_cast<int>(a.cap_touches.size()) + a.positives == 2);
        // Two boundary branch points account for the index.
        const auto topo = make_topology(0, 2, {{true, 0}});
        CHECK(index_branch(topo, {{0}, {1, 1}, {}}) == a.ind_u);
      }
      for (const auto& a : census.disk_candidates) {
        CHECK(a.ind_u == 1);
        CHECK(a.ind_U == 2);
        CHECK(index_branch(disk(1, 0), {{0}, {1}, {}}) == a.ind_u);
      }
    }
  }
}
