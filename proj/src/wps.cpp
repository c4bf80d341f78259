#include "k3bhcr/wps.hpp"

#include <algorithm>
#include <cassert>

namespace k3 {

Int WeightSystem::h(int i, int j) const { return gcd_int(w[i], w[j]); }

WeightSystem weight_system(const Potential& p) {
  auto cd = charges(p);
  WeightSystem ws;
  ws.w = cd.w;
  ws.d = cd.d;
  return ws;
}

bool is_normalized(const WeightSystem& ws) {
  int n = (int)ws.w.size();
  for (int skip = 0; skip < n; skip++) {
    Int g = 0;
    for (int i = 0; i < n; i++)
      if (i != skip) g = gcd_int(g, ws.w[i]);
    if (g != 1) return false;
  }
  return true;
}

bool is_well_formed_hypersurface(const WeightSystem& ws) {
  if (!is_normalized(ws)) return false;
  int n = (int)ws.w.size();
  for (int s1 = 0; s1 < n; s1++)
    for (int s2 = s1 + 1; s2 < n; s2++) {
      Int g = 0;
      for (int i = 0; i < n; i++)
        if (i != s1 && i != s2) g = gcd_int(g, ws.w[i]);
      if (g != 0 && ws.d % g != 0) return false;
    }
  return true;
}

bool is_gorenstein(const WeightSystem& ws) {
  Int sum = 0;
  for (auto& x : ws.w) sum += x;
  for (auto& x : ws.w)
    if (sum % x != 0) return false;
  return true;
}

Int curve_genus(const Int& d, const Int& w1, const Int& w2, const Int& w3) {
  Rat D(d);
  Rat g = D * D / Rat(w1 * w2 * w3);
  Int w[3] = {w1, w2, w3};
  for (int i = 0; i < 3; i++)
    for (int j = i + 1; j < 3; j++)
      g -= D * Rat(gcd_int(w[i], w[j])) / Rat(w[i] * w[j]);
  for (int i = 0; i < 3; i++) g += Rat(gcd_int(d, w[i])) / Rat(w[i]);
  g -= 1;
  g /= 2;
  if (g.get_den() != 1 || g < 0)
    throw NonIntegralGenus("genus formula gave " + g.get_str());
  return g.get_num();
}

std::vector<SingularityRecord> hypersurface_singularities(
    const Potential& p, const WeightSystem& ws) {
  if (p.n() != 4) throw NotK3Shape("need 4 variables");
  if (shape_tag(p).xvar != 0)
    throw NotK3Shape("square variable must be the first column");
  if (!is_well_formed_hypersurface(ws))
    throw NotWellFormed("weight system is not well-formed");
  const Int d = ws.d;
  std::vector<SingularityRecord> out;
  // Vertices P_i, i >= 2 (1-based; columns 1..3).
  for (int i = 1; i < 4; i++) {
    if (ws.w[i] > 2 && d % ws.w[i] != 0) {
      SingularityRecord r;
      r.k = ws.w[i] - 1;
      r.kind = LocKind::Vertex;
      r.i = i + 1;
      out.push_back(r);
    }
  }
  // Edges P_iP_j, i,j >= 2.
  for (int i = 1; i < 4; i++)
    for (int j = i + 1; j < 4; j++) {
      Int wi = ws.w[i], wj = ws.w[j];
      Int h = gcd_int(wi, wj);
      if (wi > 2 && wj > 2 && h > 1) {
        Int cnt = (d * h) / (wi * wj);  // floor
        if (cnt > 0) {
          SingularityRecord r;
          r.k = h - 1;
          r.kind = LocKind::EdgeInterior;
          r.i = i + 1;
          r.j = j + 1;
          r.multiplicity = cnt;
          out.push_back(r);
        }
      } else if (wi == 2 || wj == 2) {
        // nodes along the edge when the weight-2 variable's weight divides
        // the other; counted once per unordered edge
        Int lo = std::min(wi, wj), hi = std::max(wi, wj);
        if (lo == 2 && hi % 2 == 0) {
          Int cnt = d / hi;  // floor
          if (cnt > 0) {
            SingularityRecord r;
            r.k = 1;
            r.kind = LocKind::EdgeInterior;
            r.i = i + 1;
            r.j = j + 1;
            r.multiplicity = cnt;
            out.push_back(r);
          }
        }
      }
    }
  // Edges P_1P_i.
  for (int i = 1; i < 4; i++) {
    Int h = gcd_int(ws.w[0], ws.w[i]);
    if (h > 1) {
      SingularityRecord r;
      r.k = h - 1;
      r.i = 1;
      r.j = i + 1;
      if (ws.w[0] % ws.w[i] == 0) {
        r.kind = LocKind::EdgeSwappedPair;
        r.multiplicity = 2;
        r.orbit = IotaOrbit::SwappedPair;
      } else {
        r.kind = LocKind::EdgeOneFixedPoint;
        r.multiplicity = 1;
      }
      out.push_back(r);
    }
  }
  return out;
}

bool ExactPoint::operator<(const ExactPoint& o) const {
  if (support != o.support) return support < o.support;
  return std::lexicographical_compare(angle.begin(), angle.end(),
                                      o.angle.begin(), o.angle.end());
}

ExactPoint canonical_point(ExactPoint p, const std::vector<Int>& w) {
  int n = (int)p.support.size();
  for (int i = 0; i < n; i++)
    if (!p.support[i])
      p.angle[i] = 0;
    else
      p.angle[i] = mod1(p.angle[i]);
  int i0 = -1;
  for (int i = 0; i < n && i0 < 0; i++)
    if (p.support[i]) i0 = i;
  if (i0 < 0) return p;
  // Candidate rescalings: those sending angle[i0] to 0.
  ExactPoint best = p;
  bool first = true;
  Int wi0 = w[i0];
  for (Int k = 0; k < wi0; k++) {
    Rat t = (Rat(k) - p.angle[i0]) / Rat(wi0);
    ExactPoint q = p;
    for (int i = 0; i < n; i++)
      if (q.support[i]) q.angle[i] = mod1(q.angle[i] + t * Rat(w[i]));
    if (first || q < best) {
      best = q;
      first = false;
    }
  }
  return best;
}

namespace {

// Monomials of x^2 - f supported inside S, as (exponent row, sign):
// sign +1 for x^2 (row with head column 0), -1 for monomials of f.
struct Term {
  std::vector<Int> e;
  int sign;
};

std::vector<Term> restricted_terms(const Potential& p, int xvar,
                                   const std::vector<bool>& S) {
  std::vector<Term> out;
  for (int r = 0; r < p.n(); r++) {
    bool inside = true;
    for (int c = 0; c < p.n(); c++)
      if (p.A.at(r, c) != 0 && !S[c]) inside = false;
    if (!inside) continue;
    Term t;
    t.e.resize(p.n());
    for (int c = 0; c < p.n(); c++) t.e[c] = p.A.at(r, c);
    t.sign = (p.A.at(r, xvar) == 2 && [&] {
               for (int c = 0; c < p.n(); c++)
                 if (c != xvar && p.A.at(r, c) != 0) return false;
               return true;
             }())
                 ? +1
                 : -1;
    out.push_back(t);
  }
  return out;
}

void push_unique(std::vector<ExactPoint>& v, const ExactPoint& p) {
  if (std::find(v.begin(), v.end(), p) == v.end()) v.push_back(p);
}

}  // namespace

std::vector<ExactPoint> special_points(const Potential& p,
                                       const WeightSystem& ws) {
  int n = p.n();
  int xvar = shape_tag(p).xvar;
  std::vector<ExactPoint> out;
  // Support size 1.
  for (int i = 0; i < n; i++) {
    if (i == xvar) continue;  // x^2 != 0 at the x-vertex
    std::vector<bool> S(n, false);
    S[i] = true;
    if (restricted_terms(p, xvar, S).empty()) {
      ExactPoint pt;
      pt.support = S;
      pt.angle.assign(n, Rat(0));
      push_unique(out, canonical_point(pt, ws.w));
    }
  }
  // Support size 2.
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) {
      std::vector<bool> S(n, false);
      S[i] = S[j] = true;
      auto terms = restricted_terms(p, xvar, S);
      bool has_x = (i == xvar || j == xvar);
      if (terms.empty()) {
        if (has_x) continue;  // x^2 = 0 has no solution with x != 0
        throw UnsupportedStratum("defining polynomial vanishes on an edge");
      }
      if (terms.size() == 1) continue;  // single monomial: no torus zeros
      if (terms.size() > 2)
        throw UnsupportedStratum("non-binomial edge restriction");
      // m1 = (-sign ratio) m2 on the torus of the edge.
      Rat rhs = terms[0].sign == terms[1].sign ? Rat(1, 2) : Rat(0);
      // Normalize angle[j] = 0 by rescaling; solve for angle[i].
      Int delta = terms[0].e[i] - terms[1].e[i];
      if (delta == 0) throw UnsupportedStratum("degenerate binomial");
      if (delta < 0) {
        delta = -delta;
        rhs = -rhs;
      }
      for (Int k = 0; k < delta; k++) {
        ExactPoint pt;
        pt.support = S;
        pt.angle.assign(n, Rat(0));
        pt.angle[i] = mod1((rhs + Rat(k)) / Rat(delta));
        push_unique(out, canonical_point(pt, ws.w));
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

Int ambient_order(const ExactPoint& pt, const WeightSystem& ws) {
  Int g = 0;
  for (int i = 0; i < (int)pt.support.size(); i++)
    if (pt.support[i]) g = gcd_int(g, ws.w[i]);
  return g == 0 ? Int(1) : g;
}

ExactPoint apply_iota(const ExactPoint& pt, const std::vector<Int>& w) {
  ExactPoint q = pt;
  if (q.support[0]) q.angle[0] = mod1(q.angle[0] + Rat(1, 2));
  return canonical_point(q, w);
}

ExactPoint apply_symmetry(const ExactPoint& pt, const std::vector<Rat>& gamma,
                          const std::vector<Int>& w) {
  ExactPoint q = pt;
  for (int i = 0; i < (int)q.support.size(); i++)
    if (q.support[i]) q.angle[i] = mod1(q.angle[i] + gamma[i]);
  return canonical_point(q, w);
}

}  // namespace k3
