#include "lchkit/index.hpp"

#include <numeric>
#include <string>

#include "lchkit/errors.hpp"

namespace lchkit {

int CurveTopology::positive_count() const {
  int n = 0;
  for (const auto& p : punctures) n += p.positive;
  return n;
}

CurveTopology make_topology(int euler_char, int boundary_components, std::vector<Puncture> punctures) {
  if (boundary_components < 1) throw Error(ErrorKind::InvalidTopology, "a curve needs at least one boundary");
  const int twice_genus = 2 - boundary_components - euler_char;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw Error(ErrorKind::InvalidTopology, "no surface has euler characteristic " + std::to_string(euler_char) +
                                                " and " + std::to_string(boundary_components) + " boundaries");
  }
  for (size_t i = 0; i < punctures.size(); ++i) {
    if (punctures[i].boundary < 0 || punctures[i].boundary >= boundary_components) {
      throw Error(ErrorKind::InvalidTopology, "puncture on a missing boundary component", static_cast<long>(i));
    }
  }
  return CurveTopology{euler_char, boundary_components, std::move(punctures)};
}

CurveTopology disk(int positive, int negative) {
  std::vector<Puncture> p;
  for (int i = 0; i < positive; ++i) p.push_back({true, 0});
  for (int i = 0; i < negative; ++i) p.push_back({false, 0});
  return make_topology(1, 1, std::move(p));
}

int Maslov::as_int() const {
  if (!integral()) throw Error(ErrorKind::FractionalMaslov, "Maslov number " + std::to_string(value()));
  return quarters / 4;
}

Maslov maslov_of_boundary(const std::vector<int>& theta_units, int puncture_count) {
  const int total = std::accumulate(theta_units.begin(), theta_units.end(), 0);
  return Maslov{total - 2 * puncture_count};
}

int index_from_maslov(const CurveTopology& t, const std::vector<Maslov>& maslovs, Target target) {
  if (static_cast<int>(maslovs.size()) != t.boundary_components) {
    throw Error(ErrorKind::ArityMismatch, "expected one Maslov number per boundary component",
                static_cast<long>(maslovs.size()));
  }
  int sum = 0;
  for (const auto& m : maslovs) sum += m.as_int();
  const int p = static_cast<int>(t.punctures.size());
  return target == Target::Plane ? sum - 2 * t.euler_char + p : sum - t.euler_char + p;
}

int index_branch(const CurveTopology& t, const BranchData& b) {
  if (b.puncture_orders.size() != t.punctures.size()) {
    throw Error(ErrorKind::ArityMismatch, "expected one order per puncture", static_cast<long>(b.puncture_orders.size()));
  }
  int half = 0;
  for (size_t i = 0; i < b.puncture_orders.size(); ++i) {
    const int o = b.puncture_orders[i];
    if (o < 0 || o % 2 != 0) throw Error(ErrorKind::OddPunctureOrder, "puncture order " + std::to_string(o), static_cast<long>(i));
    half += o / 2;
  }
  int boundary = 0, interior = 0;
  for (int o : b.boundary_crit_orders) {
    if (o < 1) throw Error(ErrorKind::InvalidArgument, "critical point order must be positive");
    boundary += o;
  }
  for (int o : b.interior_crit_orders) {
    if (o < 1) throw Error(ErrorKind::InvalidArgument, "critical point order must be positive");
    interior += o;
  }
  return half + boundary + 2 * interior;
}

std::pair<int, int> index_crit(const CurveTopology& t, const LrsBoundaryData& lrs) {
  const int s = lrs.cap_touches + lrs.positive_punctures;
  return {-2 * t.euler_char + s, -t.euler_char + s};
}

ModuliDim moduli_dim(const CurveTopology& t) {
  const int p = static_cast<int>(t.punctures.size());
  if (2 * t.euler_char - p < 0) return {true, p - 3 * t.euler_char, 0};
  // With boundary, instability leaves only the disk with at most two punctures and the annulus.
  int aut = 1;
  if (t.euler_char == 1) aut = 3 - p;
  return {false, 0, aut};
}

}  // namespace lchkit
