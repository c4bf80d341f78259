#pragma once
// Complete 2-dimensional fans, minimal resolution by Hirzebruch-Jung
// subdivision, and Picard intersection data of smooth toric surfaces.

#include <utility>
#include <vector>

#include "k3bhcr/linalg.hpp"

namespace k3 {

struct BasisNotSpanning : std::runtime_error {
  explicit BasisNotSpanning(const std::string& m) : std::runtime_error(m) {}
};

using Ray = std::pair<Int, Int>;

struct Fan2D {
  std::vector<Ray> rays;
};

Int ray_det(const Ray& a, const Ray& b);
Ray primitivize(Ray r, Int* content = nullptr);

// Indices of the rays in counterclockwise cyclic order, starting at the
// lexicographically smallest ray.  Throws on parallel rays.
std::vector<int> ccw_order(const Fan2D& fan);

// Fan of a (possibly non-well-formed) weighted projective plane, realized
// as Z^3 / Z(w2,w3,w4): ray i is the primitivized image of e_i and fold[i]
// is the index dropped when primitivizing (the degree of the coordinate
// angle map onto the ray's angular coordinate).
struct PlaneFan {
  Fan2D fan;              // one ray per plane variable, in variable order
  std::vector<Int> fold;  // per-variable content
};
PlaneFan wps_plane_fan(const Int& w2, const Int& w3, const Int& w4);

// Pass to a finer lattice N' = Z^2 + <gens>; rays are rewritten in a basis
// of N' and re-primitivized (folds multiply accordingly).
PlaneFan refine_lattice(const PlaneFan& pf,
                        const std::vector<std::vector<Rat>>& gens);

struct SmoothToricSurface {
  Fan2D fan;                  // all rays; originals first, then inserted
  std::vector<Int> self_int;  // D_i^2
  std::vector<int> origin;    // index of the input ray, or -1 if inserted
};

// Minimal resolution: subdivide every singular cone along the boundary of
// the lattice hull (Hirzebruch-Jung).  Inserted rays are appended in the
// ccw order of the input cones they subdivide.
SmoothToricSurface resolve(const Fan2D& fan);

// Hirzebruch-Jung rays strictly between two primitive rays (u, v) with
// det(u, v) > 0, in order from u to v.
std::vector<Ray> hj_rays(const Ray& u, const Ray& v);

struct PicardData {
  std::vector<int> basis;  // ray indices forming the Picard basis
  IMat gram;               // intersection matrix on the basis
  QMat classes;            // column j = class of ray j in the basis
};

// If `basis` is empty the last (#rays - 2) rays in canonical ccw order are
// used.  Throws BasisNotSpanning when the chosen classes do not span
// integrally.
PicardData picard_data(const SmoothToricSurface& s,
                       std::vector<int> basis = {});

// Gram matrix of a blow-up at `count` points: g extended by <-1> each.
IMat blow_up_gram(const IMat& g, int count);

}  // namespace k3
