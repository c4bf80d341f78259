#pragma once
// Weighted projective space predicates, the genus formula for curves in
// P(w1,w2,w3), the A_k singularity inventory of surfaces x^2 = f(y,z,w),
// and exact enumeration of the points of W on low-dimensional strata
// (all such points have root-of-unity coordinates).

#include <string>
#include <vector>

#include "k3bhcr/potential.hpp"

namespace k3 {

struct NotWellFormed : std::runtime_error {
  explicit NotWellFormed(const std::string& m) : std::runtime_error(m) {}
};
struct NonIntegralGenus : std::runtime_error {
  explicit NonIntegralGenus(const std::string& m) : std::runtime_error(m) {}
};
struct UnsupportedStratum : std::runtime_error {
  explicit UnsupportedStratum(const std::string& m) : std::runtime_error(m) {}
};

struct WeightSystem {
  std::vector<Int> w;  // one weight per variable, column order
  Int d = 0;           // degree
  Int h(int i, int j) const;  // gcd(w_i, w_j)
};

// Weights and degree of an invertible Calabi-Yau potential.
WeightSystem weight_system(const Potential& p);

// gcd of every (n-1)-subset of weights is 1.
bool is_normalized(const WeightSystem& ws);
// Normalized and gcd of every (n-2)-subset divides d.
bool is_well_formed_hypersurface(const WeightSystem& ws);
// Every weight divides the weight sum.
bool is_gorenstein(const WeightSystem& ws);

// Genus of a smooth curve of degree d in P(w1,w2,w3); throws
// NonIntegralGenus if the formula value is not a non-negative integer.
Int curve_genus(const Int& d, const Int& w1, const Int& w2, const Int& w3);

enum class IotaOrbit { Fixed, SwappedPair };
enum class LocKind { Vertex, EdgeInterior, EdgeOneFixedPoint, EdgeSwappedPair };

struct SingularityRecord {
  Int k;                 // type A_k
  LocKind kind;
  int i = 0, j = 0;      // 1-based variable indices (1 = square variable)
  Int multiplicity = 1;  // number of points at this location
  IotaOrbit orbit = IotaOrbit::Fixed;
};

// Complete singular-point inventory of x^2 = f, by closed-form casework on
// the weights: vertices P_i (w_i > 2, w_i does not divide d) give
// A_{w_i-1}; edges P_iP_j (i,j >= 2) give floor(d h/(w_i w_j)) points of
// type A_{h-1} when w_i,w_j > 2, h > 1, and floor(d/w_j) nodes when
// w_i = 2 | w_j; edges P_1P_i with h > 1 give two swapped points when
// w_i | w_1, one fixed point otherwise, of type A_{h-1}.
std::vector<SingularityRecord> hypersurface_singularities(
    const Potential& p, const WeightSystem& ws);

// A point whose nonzero coordinates are roots of unity: coordinate i is
// exp(2 pi sqrt(-1) angle[i]) when support[i], else 0.  Canonical form is
// the lexicographically least angle vector over rescalings
// angle[i] += t * w_i (t rational).
struct ExactPoint {
  std::vector<bool> support;
  std::vector<Rat> angle;
  bool operator==(const ExactPoint& o) const {
    return support == o.support && angle == o.angle;
  }
  bool operator<(const ExactPoint& o) const;
};

ExactPoint canonical_point(ExactPoint p, const std::vector<Int>& w);

// All points of W = {x^2 = f} supported on at most two coordinates,
// in canonical form.  Throws UnsupportedStratum if some restriction of the
// defining polynomial is not empty/monomial/binomial.
std::vector<ExactPoint> special_points(const Potential& p,
                                       const WeightSystem& ws);

// Order of the ambient cyclic quotient singularity through the point:
// gcd of the weights on its support (1 = smooth ambient point).
Int ambient_order(const ExactPoint& pt, const WeightSystem& ws);

// x -> -x on the square variable (column 0).
ExactPoint apply_iota(const ExactPoint& pt, const std::vector<Int>& w);
// Diagonal symmetry gamma (angles mod 1), result re-canonicalized.
ExactPoint apply_symmetry(const ExactPoint& pt, const std::vector<Rat>& gamma,
                          const std::vector<Int>& w);

}  // namespace k3
