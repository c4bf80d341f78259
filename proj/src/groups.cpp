#include "k3bhcr/groups.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <set>
#include <sstream>

namespace k3 {

bool DiagonalSymmetry::is_zero() const {
  for (auto& x : v)
    if (x != 0) return false;
  return true;
}

DiagonalSymmetry sym_reduce(std::vector<Rat> v) {
  for (auto& x : v) x = mod1(x);
  return DiagonalSymmetry{std::move(v)};
}

DiagonalSymmetry sym_add(const DiagonalSymmetry& a,
                         const DiagonalSymmetry& b) {
  std::vector<Rat> v(a.v.size());
  for (size_t i = 0; i < v.size(); i++) v[i] = mod1(a.v[i] + b.v[i]);
  return DiagonalSymmetry{std::move(v)};
}

DiagonalSymmetry sym_mul(const DiagonalSymmetry& a, const Int& k) {
  std::vector<Rat> v(a.v.size());
  for (size_t i = 0; i < v.size(); i++) v[i] = mod1(a.v[i] * Rat(k));
  return DiagonalSymmetry{std::move(v)};
}

Int sym_order(const DiagonalSymmetry& a) {
  Int n = 1;
  for (auto& x : a.v) n = lcm_int(n, x.get_den());
  return n;
}

std::string print_symmetry(const DiagonalSymmetry& s) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < s.v.size(); i++) {
    if (i) os << ", ";
    if (s.v[i] == 0)
      os << "1";
    else
      os << s.v[i].get_str();
  }
  os << ")";
  return os.str();
}

namespace {

IMat q_to_i(const QMat& m, const char* what) {
  IMat out(m.rows, m.cols);
  for (int i = 0; i < m.rows; i++)
    for (int j = 0; j < m.cols; j++) {
      const Rat& x = m.at(i, j);
      if (x.get_den() != 1)
        throw NotSubgroup(std::string("non-integral ") + what);
      out.at(i, j) = x.get_num();
    }
  return out;
}

// Canonical representative of C under left multiplication by unimodular
// matrices (which does not change the subgroup C^{-1}Z^n/Z^n).
IMat row_hermite(const IMat& c) {
  return transpose(hnf_columns(transpose(c)));
}

DiagonalSubgroup from_lattice_basis(const Potential& p, const QMat& basis) {
  DiagonalSubgroup g;
  g.ambient = p;
  g.C = row_hermite(q_to_i(invert(basis), "subgroup presentation"));
  QMat cinv = invert(g.C);
  g.B = q_to_i(mul(to_q(p.A), cinv), "transposed presentation");
  Int d = det(g.C);
  g.order = d < 0 ? Int(-d) : d;
  for (int j = 0; j < cinv.cols; j++) {
    std::vector<Rat> col(cinv.rows);
    for (int i = 0; i < cinv.rows; i++) col[i] = cinv.at(i, j);
    auto s = sym_reduce(col);
    if (!s.is_zero()) g.generators.push_back(s);
  }
  return g;
}

}  // namespace

DiagonalSubgroup subgroup_from_generators(
    const Potential& p, const std::vector<DiagonalSymmetry>& gens) {
  int n = p.n();
  std::vector<std::vector<Rat>> cols;
  for (auto& g : gens) {
    if ((int)g.v.size() != n) throw NotSubgroup("dimension mismatch");
    for (int i = 0; i < n; i++) {
      Rat acc = 0;
      for (int j = 0; j < n; j++) acc += Rat(p.A.at(i, j)) * g.v[j];
      if (acc.get_den() != 1)
        throw NotSubgroup("generator is not a symmetry of the potential");
    }
    cols.push_back(g.v);
  }
  return from_lattice_basis(p, lattice_with_generators(n, cols));
}

DiagonalSubgroup aut_group(const Potential& p) {
  QMat ainv = invert(p.A);
  std::vector<DiagonalSymmetry> gens;
  for (int j = 0; j < p.n(); j++) {
    std::vector<Rat> col(p.n());
    for (int i = 0; i < p.n(); i++) col[i] = ainv.at(i, j);
    gens.push_back(sym_reduce(col));
  }
  return subgroup_from_generators(p, gens);
}

DiagonalSymmetry atomic_generator(const Atom& atom, int n) {
  std::vector<Rat> v(n, Rat(0));
  int m = (int)atom.vars.size();
  if (atom.kind == AtomKind::Fermat) {
    v[atom.vars[0]] = Rat(1, atom.exps[0]);
  } else if (atom.kind == AtomKind::Chain) {
    for (int i = 0; i < m; i++) {
      Int denom = 1;
      for (int k = i; k < m; k++) denom *= atom.exps[k];
      Rat phi = Rat((m + 1 + i) % 2 == 0 ? 1 : -1) / Rat(denom);
      v[atom.vars[i]] = mod1(phi);
    }
  } else {
    Int gamma = atom.group_order();
    for (int i = 0; i < m; i++) {
      Int num = 1;
      for (int k = 0; k < i; k++) num *= atom.exps[k];
      if ((m - i) % 2 == 1) num = -num;
      v[atom.vars[i]] = mod1(Rat(num) / Rat(gamma));
    }
  }
  return sym_reduce(std::move(v));
}

DiagonalSubgroup j_group(const Potential& p) {
  auto cd = charges(p);
  if (!cd.calabi_yau) throw NotK3Shape("charges do not sum to 1");
  return subgroup_from_generators(p, {sym_reduce(cd.q)});
}

DiagonalSubgroup sl_group(const Potential& p) {
  // SL = A^{-1}K/Z^n where K = {k in Z^n : q^T(W^T) . k in Z}.
  int n = p.n();
  QMat ainv = invert(p.A);
  std::vector<Rat> form(n, Rat(0));  // e^T A^{-1}
  for (int j = 0; j < n; j++)
    for (int i = 0; i < n; i++) form[j] += ainv.at(i, j);
  Int N = 1;
  for (auto& x : form) N = lcm_int(N, x.get_den());
  // K = {k : sum (N form_j) k_j == 0 mod N}; basis via Smith form of the
  // single-row matrix.
  IMat row(1, n);
  for (int j = 0; j < n; j++) {
    Rat s = form[j] * Rat(N);
    assert(s.get_den() == 1);
    row.at(0, j) = s.get_num();
  }
  auto s = smith_normal_form(row);
  Int g1 = s.D.at(0, 0);
  Int step = g1 == 0 ? Int(1) : N / gcd_int(N, g1);
  // columns of V, with the first scaled by `step`, span K; map through
  // A^{-1} to get generators of SL.
  std::vector<DiagonalSymmetry> gsyms;
  for (int j = 0; j < n; j++) {
    std::vector<Rat> a(n, Rat(0));
    Rat scale = j == 0 ? Rat(step) : Rat(1);
    for (int r = 0; r < n; r++)
      for (int i = 0; i < n; i++)
        a[r] += ainv.at(r, i) * Rat(s.V.at(i, j)) * scale;
    gsyms.push_back(sym_reduce(a));
  }
  return subgroup_from_generators(p, gsyms);
}

Int sl_order_closed_form(const Potential& p) {
  K3Shape s = shape_tag(p);
  auto atoms = atomic_decomposition(p);
  std::vector<const Atom*> rest;
  for (auto& a : atoms)
    if (!(a.kind == AtomKind::Fermat && a.vars[0] == s.xvar))
      rest.push_back(&a);
  switch (s.tag) {
    case ShapeTag::Fermat: {
      Int a1 = rest[0]->exps[0], a2 = rest[1]->exps[0], a3 = rest[2]->exps[0];
      return 2 * a1 * a2 * a3 / lcm_int(lcm_int(a1, a2), a3);
    }
    case ShapeTag::Chain: {
      Int a1 = rest[0]->exps[0], a2 = rest[0]->exps[1], a3 = rest[0]->exps[2];
      return 2 * gcd_int(a1 * a2 * a3, 1 - a1 + a1 * a2);
    }
    case ShapeTag::Loop: {
      Int a1 = rest[0]->exps[0], a2 = rest[0]->exps[1], a3 = rest[0]->exps[2];
      return 2 * gcd_int(1 + a1 * a2 * a3, 1 - a1 + a1 * a2);
    }
    case ShapeTag::ChainFermat: {
      const Atom* two = rest[0]->vars.size() == 2 ? rest[0] : rest[1];
      const Atom* one = rest[0]->vars.size() == 2 ? rest[1] : rest[0];
      Int a1 = two->exps[0], a2 = two->exps[1], a3 = one->exps[0];
      Int base = a3 * gcd_int(a1 * a2, a1 - 1);
      return a3 % 2 == 1 ? 2 * base : base;
    }
    case ShapeTag::LoopFermat: {
      const Atom* two = rest[0]->vars.size() == 2 ? rest[0] : rest[1];
      const Atom* one = rest[0]->vars.size() == 2 ? rest[1] : rest[0];
      Int a1 = two->exps[0], a2 = two->exps[1], a3 = one->exps[0];
      Int base = a3 * gcd_int(a1 * a2 - 1, a2 - 1);
      return a3 % 2 == 1 ? 2 * base : base;
    }
  }
  throw NotK3Shape("unreachable");
}

DiagonalSubgroup transpose_group(const DiagonalSubgroup& g) {
  Potential pt = transpose(g.ambient);
  QMat btinv = invert(transpose(g.B));
  std::vector<DiagonalSymmetry> gens;
  for (int j = 0; j < btinv.cols; j++) {
    std::vector<Rat> col(btinv.rows);
    for (int i = 0; i < btinv.rows; i++) col[i] = btinv.at(i, j);
    gens.push_back(sym_reduce(col));
  }
  return subgroup_from_generators(pt, gens);
}

Rat pairing(const DiagonalSymmetry& x, const DiagonalSymmetry& y,
            const IMat& A) {
  Rat acc = 0;
  for (int i = 0; i < A.rows; i++)
    for (int j = 0; j < A.cols; j++) acc += x.v[i] * Rat(A.at(i, j)) * y.v[j];
  return mod1(acc);
}

bool contains_element(const DiagonalSubgroup& g, const DiagonalSymmetry& s) {
  for (int i = 0; i < g.C.rows; i++) {
    Rat acc = 0;
    for (int j = 0; j < g.C.cols; j++) acc += Rat(g.C.at(i, j)) * s.v[j];
    if (acc.get_den() != 1) return false;
  }
  return true;
}

bool contains(const DiagonalSubgroup& g, const DiagonalSubgroup& h) {
  for (auto& s : h.generators)
    if (!contains_element(g, s)) return false;
  return true;
}

std::vector<Int> quotient_structure(const DiagonalSubgroup& g,
                                    const DiagonalSubgroup& h) {
  if (!contains(g, h)) throw NotSubgroup("not a subgroup");
  QMat t = mul(to_q(g.C), invert(to_q(h.C)));
  IMat ti(t.rows, t.cols);
  for (int i = 0; i < t.rows; i++)
    for (int j = 0; j < t.cols; j++) {
      if (t.at(i, j).get_den() != 1) throw NotSubgroup("not a subgroup");
      ti.at(i, j) = t.at(i, j).get_num();
    }
  return invariant_factors(ti);
}

Int group_bound() {
  const char* env = std::getenv("K3BHCR_GROUP_BOUND");
  if (env && *env) return Int(env);
  return Int(10000);
}

std::vector<DiagonalSymmetry> enumerate_elements(const DiagonalSubgroup& g) {
  if (g.order > group_bound())
    throw TooLarge("group order " + g.order.get_str() + " exceeds bound");
  std::set<DiagonalSymmetry> seen;
  seen.insert(sym_reduce(std::vector<Rat>(g.ambient.n(), Rat(0))));
  std::vector<DiagonalSymmetry> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    auto cur = queue.back();
    queue.pop_back();
    for (auto& gen : g.generators) {
      auto nxt = sym_add(cur, gen);
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  assert(Int((long)seen.size()) == g.order);
  return std::vector<DiagonalSymmetry>(seen.begin(), seen.end());
}

std::vector<DiagonalSubgroup> intermediate_subgroups(const Potential& p) {
  auto sl = sl_group(p);
  auto j = j_group(p);
  auto sl_elems = enumerate_elements(sl);
  using ElemSet = std::set<DiagonalSymmetry>;
  auto closure = [&](ElemSet s) {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<DiagonalSymmetry> cur(s.begin(), s.end());
      for (auto& a : cur)
        for (auto& b : cur)
          if (s.insert(sym_add(a, b)).second) changed = true;
    }
    return s;
  };
  ElemSet jset;
  for (auto& e : enumerate_elements(j)) jset.insert(e);
  std::set<ElemSet> subgroups;
  subgroups.insert(closure(jset));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ElemSet> cur(subgroups.begin(), subgroups.end());
    for (auto& s : cur)
      for (auto& e : sl_elems) {
        if (s.count(e)) continue;
        ElemSet bigger = s;
        bigger.insert(e);
        if (subgroups.insert(closure(std::move(bigger))).second) grew = true;
      }
  }
  std::vector<DiagonalSubgroup> out;
  for (auto& s : subgroups)
    out.push_back(subgroup_from_generators(
        p, std::vector<DiagonalSymmetry>(s.begin(), s.end())));
  std::sort(out.begin(), out.end(),
            [](const DiagonalSubgroup& a, const DiagonalSubgroup& b) {
              if (a.order != b.order) return a.order < b.order;
              return a.C.a < b.C.a;
            });
  return out;
}

}  // namespace k3
