#pragma once
// Symplectic quotients: fixed points of diagonal symmetries on the surface
// x^2 = f, the ADE inventory of the quotient by a subgroup between J and
// SL, Riemann-Hurwitz for the quotient of the curve {x = 0}, Nikulin
// triples of the quotient, and the mirror-pair verification.

#include "k3bhcr/branch_model.hpp"
#include "k3bhcr/groups.hpp"
#include "k3bhcr/involution.hpp"
#include "k3bhcr/wps.hpp"

namespace k3 {

struct UnsupportedLocalAction : std::runtime_error {
  explicit UnsupportedLocalAction(const std::string& m)
      : std::runtime_error(m) {}
};
struct InconsistentRamification : std::runtime_error {
  explicit InconsistentRamification(const std::string& m)
      : std::runtime_error(m) {}
};
struct MirrorFailure : std::runtime_error {
  explicit MirrorFailure(const std::string& m) : std::runtime_error(m) {}
};

// Fixed points of one diagonal symmetry, grouped by coordinate support.
struct StratumFixedPoint {
  std::vector<int> stratum;        // support (variable indices)
  std::vector<ExactPoint> points;
  Int upstairs_k = 0;              // ambient A_k at these points (0 smooth)
  bool whole_surface = false;      // the symmetry acts trivially (g in J)
};
std::vector<StratumFixedPoint> fixed_points(const Potential& p,
                                            const WeightSystem& ws,
                                            const DiagonalSymmetry& g);

// One singular point of X / (G/J) (an orbit of special points upstairs).
struct QuotientPoint {
  ExactPoint rep;      // upstairs representative, canonical form
  Int upstairs_k = 0;  // A_k on the cover (0 = smooth)
  Int stabilizer = 1;  // order of the point stabilizer in G/J
  Int k = 0;           // downstairs type: (upstairs_k + 1) * stabilizer - 1
  bool on_curve = false;  // x = 0
  int iota_partner = -1;  // index of the involution image orbit (self if
                          // fixed)
};

struct QuotientInventory {
  std::vector<QuotientPoint> points;  // one per orbit with k >= 1
  Int gtilde_order = 1;               // |G/J|
  Int genus_down = 0;                 // genus of the image of {x = 0}
};

// Throws UnsupportedLocalAction when a stabilizer is not cyclic, and
// propagates UnsupportedStratum from the point enumeration.
QuotientInventory quotient_singularities(const Potential& p,
                                         const WeightSystem& ws,
                                         const DiagonalSubgroup& g);

// g' with 2g - 2 = m (2g' - 2) + sum (e_p - 1) over the upstairs
// ramification points; throws InconsistentRamification.
Int riemann_hurwitz_genus(const Int& g, const Int& m,
                          const std::vector<Int>& ram);

// Downstairs toric model of the quotient, shared with the base case G = J.
BranchModelInput build_branch_model(const Potential& p, const WeightSystem& ws,
                                    const DiagonalSubgroup& g,
                                    const QuotientInventory& inv);

// (r, a, delta) of the resolution of X / (G/J) with the induced involution.
NikulinTriple quotient_triple(const Potential& p, const WeightSystem& ws,
                              const DiagonalSubgroup& g);

struct MirrorReport {
  NikulinTriple triple, transpose_triple;
  bool ok = false;
};

// Verifies transpose_triple == dv_mirror(triple) for the pair of quotients
// by G/J and its transpose; throws MirrorFailure on mismatch.
MirrorReport mirror_pair_check(const Potential& p, const WeightSystem& ws,
                               const DiagonalSubgroup& g);

}  // namespace k3
