#pragma once
// Invariants of the involution x -> -x on the double cover x^2 = f:
// fixed locus, the triple (r, a, delta) of the resolved surface, and the
// mirror map on triples.

#include "k3bhcr/branch_model.hpp"
#include "k3bhcr/wps.hpp"

namespace k3 {

struct OutOfRange : std::runtime_error {
  explicit OutOfRange(const std::string& m) : std::runtime_error(m) {}
};
struct MirrorHypothesisFails : std::runtime_error {
  explicit MirrorHypothesisFails(const std::string& m)
      : std::runtime_error(m) {}
};

struct FixedCurve {
  int vanishing = -1;  // variable index forced to zero (0 = the square
                       // variable for the main curve)
  Int genus = 0;
};

struct FixedLocusDescription {
  FixedCurve main_curve;                  // {x = 0}, genus g
  std::vector<FixedCurve> extra_components;
  bool has_isolated_points = false;       // always false on the resolution
};

// The fixed curves of the involution: {x = 0} always, plus {x_i = 0} for
// each scaling lambda with lambda^{w1} = -1 acting trivially on the other
// two non-square coordinates.
FixedLocusDescription fixed_locus(const Potential& p, const WeightSystem& ws);

// r = 1 + number of involution orbits of exceptional curves: k per fixed
// singular point and k per swapped pair of A_k points.
int invariant_r(const Potential& p, const WeightSystem& ws);

// a = 22 - r - 2g; throws OutOfRange when negative or when a > r.
int invariant_a(int r, const Int& g);

// delta via the branch-divisor lattice model, falling back to the unique
// admissible value for (r, a); throws DeltaAmbiguous when both fail.
int invariant_delta(const Potential& p, const WeightSystem& ws);

// (r, a, delta), asserted admissible.
NikulinTriple nikulin_triple(const Potential& p, const WeightSystem& ws);

// The mirror triple (20 - r, a, delta); requires (r,a,delta) != (14,6,0)
// and fixed-curve genus g >= 1.
NikulinTriple dv_mirror(const NikulinTriple& t);

}  // namespace k3
