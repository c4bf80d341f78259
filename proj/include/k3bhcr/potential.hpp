#pragma once
// Invertible (Delsarte) potentials: parsing, atomic decomposition into
// fermat/chain/loop pieces, charges/weights, and transposition.

#include <optional>
#include <string>
#include <vector>

#include "k3bhcr/linalg.hpp"

namespace k3 {

struct NotAtomicSum : std::runtime_error {
  explicit NotAtomicSum(const std::string& m) : std::runtime_error(m) {}
};
struct NotK3Shape : std::runtime_error {
  explicit NotK3Shape(const std::string& m) : std::runtime_error(m) {}
};
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

// A potential is a square exponent matrix: row i = exponents of monomial i,
// with unit coefficients; variable j <-> column j.
struct Potential {
  IMat A;                          // n x n exponent matrix
  std::vector<std::string> vars;   // variable names, column order
  int n() const { return A.rows; }
};

// Parse e.g. "x^2 - y^3*z - z^9*w - w^10" ('*' optional, '^1' optional,
// '+' and '-' both accepted as monomial separators).  If `var_order` is
// given it fixes the column order; otherwise order of first appearance.
Potential parse_potential(const std::string& text,
                          const std::vector<std::string>& var_order = {});

// Round-trip printer: x^2 - y^3*z - ... in the potential's variable order.
std::string print_potential(const Potential& p);

enum class AtomKind { Fermat, Chain, Loop };

struct Atom {
  AtomKind kind;
  std::vector<int> vars;   // variable indices; chain: head..tail, loop: cycle
  std::vector<Int> exps;   // a_i per variable in `vars` order
  // Order of the cyclic group generated by the atom's distinguished
  // symmetry: fermat a1; chain a1..an; loop a1..an + (-1)^(n+1).
  Int group_order() const;
};

// Decompose into atoms; throws NotAtomicSum when the potential is not a
// disjoint sum of fermat/chain/loop atoms with tail exponents 1.
std::vector<Atom> atomic_decomposition(const Potential& p);

struct ChargeData {
  std::vector<Rat> q;     // charges, q = A^{-1} e
  Int d;                  // least common denominator
  std::vector<Int> w;     // weights w_i = d q_i
  bool calabi_yau;        // sum q_i == 1
};
ChargeData charges(const Potential& p);

// Berglund-Hubsch transpose: exponent matrix transposed.
Potential transpose(const Potential& p);

// Shape of a 4-variable K3 potential x^2 = f(y,z,w).
enum class ShapeTag { Fermat, Chain, Loop, ChainFermat, LoopFermat };
std::string shape_name(ShapeTag t);

// Requires: 4 variables, a Fermat x^2 atom, remaining atoms covering the
// other three variables in one of the five shapes.  Throws NotK3Shape.
// Also reports xvar = index of the square variable.
struct K3Shape {
  ShapeTag tag;
  int xvar;
};
K3Shape shape_tag(const Potential& p);

// Canonical string key of a 4-variable potential under permutations of the
// non-x variables that preserve the given weights (weights in column order).
std::string canonical_key(const Potential& p, const std::vector<Int>& w);

}  // namespace k3
