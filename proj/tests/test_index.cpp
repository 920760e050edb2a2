#include "doctest.h"
#include "lchkit/errors.hpp"
#include "lchkit/index.hpp"

using namespace lchkit;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::IoError;
}

}  // namespace

TEST_CASE("maslov of boundary") {
  CHECK(maslov_of_boundary({8}, 0).as_int() == 2);
  for (int m = 1; m <= 5; ++m) {
    // Each convex corner removes pi/2 from the smooth total of 2pi.
    CHECK(maslov_of_boundary({8 - 2 * m}, m).as_int() == 2 - m);
  }
  // Positive to negative with one cap touch: sub-arcs 3pi/2 and -pi/2.
  CHECK(maslov_of_boundary({6, -2}, 2).as_int() == 0);
  CHECK_FALSE(maslov_of_boundary({2}, 0).integral());
  CHECK(kind_of([] { (void)maslov_of_boundary({2}, 0).as_int(); }) == ErrorKind::FractionalMaslov);
}

TEST_CASE("index from maslov") {
  const auto d = disk(1, 1);
  CHECK(index_from_maslov(d, {Maslov{0}}, Target::Plane) == 0);
  CHECK(index_from_maslov(d, {Maslov{0}}, Target::Symplectization) == 1);
  const auto a = make_topology(0, 2, {{true, 0}, {false, 0}});
  CHECK(index_from_maslov(a, {Maslov{0}, Maslov{8}}, Target::Plane) == 4);
  CHECK(index_from_maslov(a, {Maslov{0}, Maslov{8}}, Target::Symplectization) == 4);
  CHECK(kind_of([&] { index_from_maslov(a, {Maslov{0}}, Target::Plane); }) == ErrorKind::ArityMismatch);
  for (int chi = 1; chi >= -3; --chi) {
    for (int b = 1; b <= 3; ++b) {
      if ((2 - b - chi) < 0 || (2 - b - chi) % 2) continue;
      const auto t = make_topology(chi, b, {{true, 0}});
      std::vector<Maslov> m(b, Maslov{4});
      CHECK(index_from_maslov(t, m, Target::Symplectization) - index_from_maslov(t, m, Target::Plane) == chi);
    }
  }
}

TEST_CASE("index from branch data") {
  const auto d = disk(1, 2);
  CHECK(index_branch(d, {{0, 0, 0}, {}, {}}) == 0);
  CHECK(index_branch(d, {{0, 0, 0}, {1}, {}}) == 1);
  CHECK(index_branch(d, {{0, 0, 0}, {}, {1}}) == 2);
  CHECK(index_branch(d, {{2, 0, 4}, {}, {}}) == 3);
  CHECK(kind_of([&] { index_branch(d, {{1, 0, 0}, {}, {}}); }) == ErrorKind::OddPunctureOrder);
  CHECK(kind_of([&] { index_branch(d, {{0}, {}, {}}); }) == ErrorKind::ArityMismatch);
}

TEST_CASE("index from cap touches") {
  CHECK(index_crit(disk(1, 2), {1, 1}) == std::pair{0, 1});
  CHECK(index_crit(disk(2, 1), {0, 2}) == std::pair{0, 1});
  CHECK(index_crit(make_topology(0, 2, {{true, 0}}), {1, 1}) == std::pair{2, 2});
}

TEST_CASE("moduli dimension") {
  const auto d3 = moduli_dim(disk(1, 2));
  CHECK(d3.stable);
  CHECK(d3.dim == 0);
  const auto d2 = moduli_dim(disk(1, 1));
  CHECK_FALSE(d2.stable);
  CHECK(d2.automorphism_dim == 1);
  CHECK(moduli_dim(disk(1, 0)).automorphism_dim == 2);
  CHECK(moduli_dim(disk(0, 0)).automorphism_dim == 3);
  const auto a1 = moduli_dim(make_topology(0, 2, {{true, 0}}));
  CHECK(a1.stable);
  CHECK(a1.dim == 1);
  CHECK_FALSE(moduli_dim(make_topology(0, 2, {})).stable);
}

TEST_CASE("topology validation") {
  CHECK(make_topology(-1, 1, {}).genus() == 1);
  CHECK(kind_of([] { make_topology(0, 1, {}); }) == ErrorKind::InvalidTopology);
  CHECK(kind_of([] { make_topology(2, 1, {}); }) == ErrorKind::InvalidTopology);
  CHECK(kind_of([] { make_topology(1, 1, {{true, 1}}); }) == ErrorKind::InvalidTopology);
}
