#pragma once
// Integral quadratic lattices: discriminant groups, 2-elementary
// invariants, the delta invariant, index-2 gluing, and the admissible
// (r, a, delta) triples for non-symplectic involutions on K3 surfaces.

#include <string>
#include <vector>

#include "k3bhcr/linalg.hpp"

namespace k3 {

struct Degenerate : std::runtime_error {
  explicit Degenerate(const std::string& m) : std::runtime_error(m) {}
};
struct NotTwoElementary : std::runtime_error {
  explicit NotTwoElementary(const std::string& m) : std::runtime_error(m) {}
};
struct NotIntegralOverlattice : std::runtime_error {
  explicit NotIntegralOverlattice(const std::string& m)
      : std::runtime_error(m) {}
};

struct IntegralLattice {
  IMat gram;  // symmetric
  int rank() const { return gram.rows; }
};

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b);
IntegralLattice diagonal_lattice(const std::vector<Int>& entries);

// Invariant factors (> 1) of L^dual / L.
std::vector<Int> discriminant_group(const IntegralLattice& l);

// Number of Z/2 factors; throws NotTwoElementary unless every invariant
// factor is 2.
int two_elementary_a(const IntegralLattice& l);

// 0 iff every element of the discriminant group has integral square,
// decided on the inverse Gram matrix; requires 2-elementary.
int delta(const IntegralLattice& l);

// Overlattice generated by L and v/2 for each given v (integer vectors in
// the basis of L).  Only integrality of the new Gram matrix is enforced.
IntegralLattice glue_half_classes(const IntegralLattice& l,
                                  const std::vector<std::vector<Int>>& vs);

IntegralLattice twist(const IntegralLattice& l, const Int& m);

// Signature (positive, negative) of a nondegenerate symmetric matrix.
std::pair<int, int> signature(const IntegralLattice& l);

struct NikulinTriple {
  int r = 0, a = 0, delta = 0;
  bool operator==(const NikulinTriple& o) const {
    return r == o.r && a == o.a && delta == o.delta;
  }
  bool operator<(const NikulinTriple& o) const {
    if (r != o.r) return r < o.r;
    if (a != o.a) return a < o.a;
    return delta < o.delta;
  }
};
std::string print_triple(const NikulinTriple& t);

// The finite set of invariants realized by non-symplectic involutions,
// loaded from the data directory (K3BHCR_DATA_DIR, default "data").
const std::vector<NikulinTriple>& admissible_triples();
bool is_admissible(const NikulinTriple& t);
// The delta values admissible for given (r, a); size 0, 1 or 2.
std::vector<int> admissible_deltas(int r, int a);

std::string data_dir();

}  // namespace k3
