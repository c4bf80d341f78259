#pragma once
// Diagonal symmetry groups of invertible potentials: the full group
// Aut(W) = A^{-1}Z^n/Z^n, the subgroups J_W and SL(W), arbitrary
// intermediate subgroups, transpose groups, and quotient structures.

#include <algorithm>
#include <string>
#include <vector>

#include "k3bhcr/potential.hpp"

namespace k3 {

struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& m) : std::runtime_error(m) {}
};
struct NotSubgroup : std::runtime_error {
  explicit NotSubgroup(const std::string& m) : std::runtime_error(m) {}
};

// An element of (Q/Z)^n acting diagonally: coordinate i is multiplied by
// exp(2 pi sqrt(-1) v[i]).  Entries are kept reduced to [0,1).
struct DiagonalSymmetry {
  std::vector<Rat> v;
  bool operator==(const DiagonalSymmetry& o) const { return v == o.v; }
  bool operator<(const DiagonalSymmetry& o) const {
    return std::lexicographical_compare(v.begin(), v.end(), o.v.begin(),
                                        o.v.end());
  }
  bool is_zero() const;
};

DiagonalSymmetry sym_reduce(std::vector<Rat> v);
DiagonalSymmetry sym_add(const DiagonalSymmetry& a, const DiagonalSymmetry& b);
DiagonalSymmetry sym_mul(const DiagonalSymmetry& a, const Int& k);
Int sym_order(const DiagonalSymmetry& a);
// Multiplicative notation: entry 0 prints as "1", else the reduced
// fraction, e.g. "(1, 14/15, 7/15, 3/5)".
std::string print_symmetry(const DiagonalSymmetry& s);

// A subgroup G = C^{-1}Z^n/Z^n of Aut(W) with A = B*C; C is canonical for
// the subgroup (row Hermite form), so equality of subgroups is equality of
// (ambient A, C).
struct DiagonalSubgroup {
  Potential ambient;
  IMat B, C;  // A = B * C
  Int order;  // |det C|
  std::vector<DiagonalSymmetry> generators;  // nonzero columns of C^{-1}
  bool operator==(const DiagonalSubgroup& o) const {
    return ambient.A == o.ambient.A && C == o.C;
  }
};

// Smallest subgroup containing the given elements; throws NotSubgroup when
// an element is not in Aut(W).
DiagonalSubgroup subgroup_from_generators(
    const Potential& p, const std::vector<DiagonalSymmetry>& gens);

DiagonalSubgroup aut_group(const Potential& p);

// Generator of the atom's cyclic symmetry group as an element of
// (Q/Z)^n, n = p.n() (zero outside the atom's variables).
DiagonalSymmetry atomic_generator(const Atom& atom, int n);

// J_W: cyclic of order d, generated by the charge vector.
DiagonalSubgroup j_group(const Potential& p);

// SL(W) = {a in Aut(W) : sum of entries is an integer}.
DiagonalSubgroup sl_group(const Potential& p);

// Closed-form |SL(W)| for the five x^2 - f(y,z,w) shapes.  Known to differ
// from the true order on some weight systems (the even-exponent halving
// rule is not always valid); callers should compare with sl_group().order.
Int sl_order_closed_form(const Potential& p);

// G^T = (B^T)^{-1}Z^n/Z^n inside Aut(W^T).
DiagonalSubgroup transpose_group(const DiagonalSubgroup& g);

// Bilinear pairing b(x, y) = x^T A y mod 1, x in Aut(W^T), y in Aut(W).
Rat pairing(const DiagonalSymmetry& x, const DiagonalSymmetry& y,
            const IMat& A);

bool contains_element(const DiagonalSubgroup& g, const DiagonalSymmetry& s);
bool contains(const DiagonalSubgroup& g, const DiagonalSubgroup& h);

// Invariant factors (> 1) of g/h; throws NotSubgroup unless h is contained
// in g.
std::vector<Int> quotient_structure(const DiagonalSubgroup& g,
                                    const DiagonalSubgroup& h);

// All elements, each exactly once; throws TooLarge beyond the configured
// bound (K3BHCR_GROUP_BOUND, default 10^4).
std::vector<DiagonalSymmetry> enumerate_elements(const DiagonalSubgroup& g);

// All G with J_W contained in G contained in SL(W), sorted by order.
std::vector<DiagonalSubgroup> intermediate_subgroups(const Potential& p);

Int group_bound();

}  // namespace k3
