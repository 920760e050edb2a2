#pragma once

#include <utility>
#include <vector>

namespace lchkit {

struct Puncture {
  bool positive;
  int boundary;
};

// Compact connected oriented surface with boundary and boundary punctures.
struct CurveTopology {
  int euler_char = 1;
  int boundary_components = 1;
  std::vector<Puncture> punctures;

  int genus() const { return (2 - boundary_components - euler_char) / 2; }
  int positive_count() const;
};

// Throws InvalidTopology unless the data describe a genuine surface.
CurveTopology make_topology(int euler_char, int boundary_components, std::vector<Puncture> punctures);
CurveTopology disk(int positive, int negative);

// Maslov numbers stored in quarters so that every value arising from pi/4 angles is exact.
struct Maslov {
  int quarters = 0;
  bool integral() const { return quarters % 4 == 0; }
  double value() const { return quarters / 4.0; }
  int as_int() const;  // FractionalMaslov unless integral
};

// Maslov of one boundary component from the rotation of its sub-arcs (pi/4 units).
Maslov maslov_of_boundary(const std::vector<int>& theta_units, int puncture_count);

enum class Target { Plane, Symplectization };

int index_from_maslov(const CurveTopology& topology, const std::vector<Maslov>& maslovs, Target target);

struct BranchData {
  std::vector<int> puncture_orders;
  std::vector<int> boundary_crit_orders;
  std::vector<int> interior_crit_orders;
};

int index_branch(const CurveTopology& topology, const BranchData& branch);

struct LrsBoundaryData {
  int cap_touches = 0;
  int positive_punctures = 0;
};

// (ind u, ind U)
std::pair<int, int> index_crit(const CurveTopology& topology, const LrsBoundaryData& lrs);

struct ModuliDim {
  bool stable;
  int dim;              // when stable
  int automorphism_dim; // when unstable
};

ModuliDim moduli_dim(const CurveTopology& topology);

}  // namespace lchkit
