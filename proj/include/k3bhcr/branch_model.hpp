#pragma once
// The invariant-lattice route to the delta invariant.  The quotient of the
// surface by the full group generated by the symplectic part and the
// involution is a toric plane; we resolve its fan, blow up the nodes of
// the branch divisor, and glue the halved classes of the rational branch
// components onto the doubled Picard lattice.  Every configuration outside
// the implemented patterns, and every failed cross-check, raises
// DeltaAmbiguous so callers can fall back to admissibility forcing.

#include "k3bhcr/lattice.hpp"
#include "k3bhcr/toric.hpp"

namespace k3 {

struct DeltaAmbiguous : std::runtime_error {
  explicit DeltaAmbiguous(const std::string& m) : std::runtime_error(m) {}
};

// One singular point of the double cover's quotient needing exceptional
// curves, located over a vertex or a boundary-ray interior point of the
// plane.
struct ClusterPoint {
  Int k;          // A_k type (k >= 1)
  bool on_curve;  // lies on the image of the main branch curve {x = 0}
};

struct Cluster {
  // exactly one of the two locations:
  int vertex = -1;  // plane variable v: the point where the other two
                    // boundary divisors meet
  int ray = -1;     // plane variable: interior of that boundary divisor
  // the involution orbit at this location: one fixed point, or a swapped
  // pair (which is etale over the plane)
  std::vector<ClusterPoint> points;
  bool swapped = false;
};

struct BranchModelInput {
  PlaneFan plane;                   // downstairs fan, already refined
  std::vector<bool> ray_branched;   // per plane variable
  std::vector<Cluster> clusters;
  int expected_r = 0;               // from orbit counting, cross-checked
  int expected_a = 0;
  Int curve_genus_down = 0;         // genus of the image of {x = 0}
};

// delta of the glued invariant lattice; throws DeltaAmbiguous on any
// unimplemented configuration or failed consistency check.
int branch_model_delta(const BranchModelInput& in);

// Diagnostic version exposing the assembled lattice.
struct BranchModelResult {
  IntegralLattice invariant;  // the glued overlattice
  IMat base_gram;             // doubled Picard-plus-exceptional gram
  std::vector<std::vector<Int>> glue;  // halved classes (integer vectors)
  int r = 0, a = 0, delta = 0;
};
BranchModelResult branch_model_lattice(const BranchModelInput& in);

}  // namespace k3
