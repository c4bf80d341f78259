#include "k3bhcr/quotient.hpp"

#include <map>
#include <set>
#include <sstream>

namespace k3 {

namespace {

// does g act on the open stratum of support S as a coordinate rescaling?
bool fixes_stratum(const DiagonalSymmetry& g, const std::vector<int>& sup,
                   const std::vector<Int>& w) {
  if (sup.empty()) return true;
  int i0 = sup[0];
  for (Int kk = 0; kk < w[i0]; ++kk) {
    Rat t = (g.v[i0] + kk) / Rat(w[i0]);
    bool ok = true;
    for (int i : sup)
      if (mod1(g.v[i] - t * w[i]) != 0) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

std::vector<int> support_of(const ExactPoint& pt) {
  std::vector<int> s;
  for (size_t i = 0; i < pt.support.size(); ++i)
    if (pt.support[i]) s.push_back(static_cast<int>(i));
  return s;
}

}  // namespace

std::vector<StratumFixedPoint> fixed_points(const Potential& p,
                                            const WeightSystem& ws,
                                            const DiagonalSymmetry& g) {
  if (contains_element(j_group(p), g))
    return {StratumFixedPoint{{0, 1, 2, 3}, {}, 0, true}};
  // positive-dimensional fixed strata
  for (int skip = 0; skip < 4; ++skip) {
    std::vector<int> sup;
    for (int i = 0; i < 4; ++i)
      if (i != skip) sup.push_back(i);
    if (fixes_stratum(g, sup, ws.w)) {
      if (skip == 0) {
        // the curve {x = 0}: possible only for non-symplectic symmetries
        return {StratumFixedPoint{{1, 2, 3}, {}, 0, false}};
      }
      throw UnsupportedStratum("positive-dimensional fixed stratum");
    }
  }
  std::map<std::vector<int>, StratumFixedPoint> by_stratum;
  for (const ExactPoint& pt : special_points(p, ws)) {
    if (apply_symmetry(pt, g.v, ws.w) == pt) {
      std::vector<int> sup = support_of(pt);
      auto& entry = by_stratum[sup];
      entry.stratum = sup;
      entry.points.push_back(pt);
      entry.upstairs_k = ambient_order(pt, ws) - 1;
    }
  }
  std::vector<StratumFixedPoint> out;
  for (auto& [sup, entry] : by_stratum) out.push_back(entry);
  return out;
}

QuotientInventory quotient_singularities(const Potential& p,
                                         const WeightSystem& ws,
                                         const DiagonalSubgroup& g) {
  DiagonalSubgroup jg = j_group(p);
  if (!contains(g, jg)) throw NotSubgroup("group does not contain J");
  if (!contains(sl_group(p), g)) throw NotSubgroup("group not inside SL");
  std::vector<DiagonalSymmetry> elements = enumerate_elements(g);
  Int d = ws.d;
  QuotientInventory inv;
  inv.gtilde_order = g.order / d;

  std::vector<ExactPoint> pts = special_points(p, ws);
  std::set<ExactPoint> pool(pts.begin(), pts.end());
  std::map<ExactPoint, int> orbit_of;
  std::vector<std::vector<ExactPoint>> orbits;
  for (const ExactPoint& pt : pts) {
    if (orbit_of.count(pt)) continue;
    int id = static_cast<int>(orbits.size());
    std::set<ExactPoint> orb;
    for (const DiagonalSymmetry& s : elements) {
      ExactPoint im = apply_symmetry(pt, s.v, ws.w);
      if (!pool.count(im))
        throw UnsupportedLocalAction("orbit left the special-point set");
      orb.insert(im);
    }
    orbits.push_back({orb.begin(), orb.end()});
    for (const ExactPoint& q : orb) orbit_of[q] = id;
  }

  std::vector<int> inv_index(orbits.size(), -1);
  std::vector<int> partner_orbit;
  for (size_t oid = 0; oid < orbits.size(); ++oid) {
    const ExactPoint& rep = orbits[oid].front();
    Int fixing = 0;
    Int best_order = 1;
    for (const DiagonalSymmetry& s : elements)
      if (apply_symmetry(rep, s.v, ws.w) == rep) {
        ++fixing;
        // order of s modulo J
        DiagonalSymmetry acc = s;
        Int n = 1;
        while (!contains_element(jg, acc)) {
          acc = sym_add(acc, s);
          ++n;
        }
        best_order = std::max(best_order, n);
      }
    if (fixing % d != 0)
      throw UnsupportedLocalAction("stabilizer not saturated by J");
    Int m = fixing / d;
    if (Int(orbits[oid].size()) * m != inv.gtilde_order)
      throw UnsupportedLocalAction("orbit-stabilizer mismatch");
    if (best_order != m)
      throw UnsupportedLocalAction("non-cyclic point stabilizer");
    Int kup = ambient_order(rep, ws) - 1;
    Int kdown = (kup + 1) * m - 1;
    if (kdown < 1) continue;
    QuotientPoint qp;
    qp.rep = rep;
    qp.upstairs_k = kup;
    qp.stabilizer = m;
    qp.k = kdown;
    qp.on_curve = !rep.support[0];
    inv_index[oid] = static_cast<int>(inv.points.size());
    partner_orbit.push_back(
        orbit_of.at(apply_iota(rep, ws.w)));
    inv.points.push_back(qp);
  }
  for (size_t i = 0; i < inv.points.size(); ++i) {
    int po = partner_orbit[i];
    if (inv_index[po] < 0)
      throw UnsupportedLocalAction("involution image orbit not singular");
    inv.points[i].iota_partner = inv_index[po];
  }

  // genus of the image of {x = 0} by Riemann-Hurwitz
  Int gup = curve_genus(d, ws.w[1], ws.w[2], ws.w[3]);
  std::vector<Int> ram;
  for (const QuotientPoint& qp : inv.points)
    if (qp.on_curve && qp.stabilizer > 1) {
      Int copies = inv.gtilde_order / qp.stabilizer;  // orbit size upstairs
      for (Int c = 0; c < copies; ++c) ram.push_back(qp.stabilizer);
    }
  inv.genus_down = riemann_hurwitz_genus(gup, inv.gtilde_order, ram);
  return inv;
}

Int riemann_hurwitz_genus(const Int& g, const Int& m,
                          const std::vector<Int>& ram) {
  Int rhs = 2 * g - 2;
  for (const Int& e : ram) {
    if (e < 2) throw InconsistentRamification("ramification index < 2");
    rhs -= e - 1;
  }
  if (rhs % m != 0)
    throw InconsistentRamification("degree does not divide");
  Int twice = rhs / m + 2;  // = 2 g'
  if (twice % 2 != 0 || twice < 0)
    throw InconsistentRamification("no integral quotient genus");
  return twice / 2;
}

BranchModelInput build_branch_model(const Potential& p, const WeightSystem& ws,
                                    const DiagonalSubgroup& g,
                                    const QuotientInventory& inv) {
  BranchModelInput in;
  PlaneFan pf = wps_plane_fan(ws.w[1], ws.w[2], ws.w[3]);
  std::vector<DiagonalSymmetry> elements = enumerate_elements(g);
  std::vector<std::vector<Rat>> gens;
  for (const DiagonalSymmetry& s : elements) {
    Rat x = 0, y = 0;
    for (int i = 0; i < 3; ++i) {
      x += s.v[i + 1] * pf.fold[i] * pf.fan.rays[i].first;
      y += s.v[i + 1] * pf.fold[i] * pf.fan.rays[i].second;
    }
    x = mod1(x);
    y = mod1(y);
    if (x != 0 || y != 0) gens.push_back({x, y});
  }
  in.plane = refine_lattice(pf, gens);

  // a boundary divisor is in the downstairs branch locus when the
  // involution composed with some group element is a rescaling away from
  // that coordinate
  in.ray_branched.assign(3, false);
  for (int i = 0; i < 3; ++i) {
    int j0 = -1, j1 = -1;
    for (int j = 0; j < 3; ++j)
      if (j != i) (j0 < 0 ? j0 : j1) = j;
    for (const DiagonalSymmetry& s : elements) {
      for (Int kk = 0; kk < ws.w[j0 + 1] && !in.ray_branched[i]; ++kk) {
        Rat t = (s.v[j0 + 1] + kk) / Rat(ws.w[j0 + 1]);
        if (mod1(s.v[j1 + 1] - t * ws.w[j1 + 1]) != 0) continue;
        if (mod1(s.v[0] + Rat(1, 2) - t * ws.w[0]) != 0) continue;
        in.ray_branched[i] = true;
      }
      if (in.ray_branched[i]) break;
    }
  }

  // clusters: one per involution orbit of quotient points
  for (size_t i = 0; i < inv.points.size(); ++i) {
    const QuotientPoint& qp = inv.points[i];
    int partner = qp.iota_partner;
    if (partner >= 0 && partner < static_cast<int>(i)) continue;  // done
    std::vector<int> psup;
    for (int v = 1; v < 4; ++v)
      if (qp.rep.support[v]) psup.push_back(v - 1);
    Cluster cl;
    if (psup.size() == 1)
      cl.vertex = psup[0];
    else if (psup.size() == 2)
      cl.ray = 3 - psup[0] - psup[1];
    else
      throw DeltaAmbiguous("quotient point with unexpected support");
    cl.points.push_back({qp.k, qp.on_curve});
    if (partner != static_cast<int>(i)) {
      const QuotientPoint& qq = inv.points[partner];
      std::vector<int> qsup;
      for (int v = 1; v < 4; ++v)
        if (qq.rep.support[v]) qsup.push_back(v - 1);
      if (qsup != psup)
        throw DeltaAmbiguous("swapped pair at different plane locations");
      cl.points.push_back({qq.k, qq.on_curve});
      cl.swapped = true;
    }
    in.clusters.push_back(cl);
  }

  Int r = 1;
  for (size_t i = 0; i < inv.points.size(); ++i)
    if (inv.points[i].iota_partner >= static_cast<int>(i))
      r += inv.points[i].k;
  in.expected_r = static_cast<int>(r.get_si());
  in.curve_genus_down = inv.genus_down;
  in.expected_a = invariant_a(in.expected_r, inv.genus_down);
  return in;
}

// (exponent matrix, subgroup matrix) -> triple; quotients of dual pairs
// are recomputed many times during catalog-wide verification
static std::map<std::string, NikulinTriple>& triple_memo() {
  static std::map<std::string, NikulinTriple> memo;
  return memo;
}

static std::string memo_key(const Potential& p, const DiagonalSubgroup& g) {
  std::ostringstream os;
  for (int i = 0; i < p.A.rows; ++i)
    for (int j = 0; j < p.A.cols; ++j) os << p.A.at(i, j).get_str() << ",";
  os << "|";
  for (int i = 0; i < g.C.rows; ++i)
    for (int j = 0; j < g.C.cols; ++j) os << g.C.at(i, j).get_str() << ",";
  return os.str();
}

static NikulinTriple quotient_triple_uncached(const Potential& p,
                                              const WeightSystem& ws,
                                              const DiagonalSubgroup& g);

NikulinTriple quotient_triple(const Potential& p, const WeightSystem& ws,
                              const DiagonalSubgroup& g) {
  std::string mk = memo_key(p, g);
  auto hit = triple_memo().find(mk);
  if (hit != triple_memo().end()) return hit->second;
  NikulinTriple t = quotient_triple_uncached(p, ws, g);
  triple_memo().emplace(mk, t);
  return t;
}

static NikulinTriple quotient_triple_uncached(const Potential& p,
                                              const WeightSystem& ws,
                                              const DiagonalSubgroup& g) {
  QuotientInventory inv = quotient_singularities(p, ws, g);
  if (inv.gtilde_order == 1) return nikulin_triple(p, ws);
  Int r = 1;
  for (size_t i = 0; i < inv.points.size(); ++i)
    if (inv.points[i].iota_partner >= static_cast<int>(i))
      r += inv.points[i].k;
  int ri = static_cast<int>(r.get_si());
  int a = invariant_a(ri, inv.genus_down);
  int dlt;
  if (inv.gtilde_order > 2 &&
      mpz_probab_prime_p(inv.gtilde_order.get_mpz_t(), 30) > 0 &&
      inv.gtilde_order % 2 == 1) {
    // odd prime order: delta is inherited from the cover
    dlt = nikulin_triple(p, ws).delta;
  } else {
    std::vector<int> ds = admissible_deltas(ri, a);
    if (ds.empty())
      throw OutOfRange("quotient invariants not admissible: (" +
                       std::to_string(ri) + "," + std::to_string(a) + ")");
    if (ds.size() == 1) {
      dlt = ds[0];
    } else {
      dlt = branch_model_delta(build_branch_model(p, ws, g, inv));
    }
  }
  NikulinTriple t{ri, a, dlt};
  if (!is_admissible(t))
    throw OutOfRange("quotient triple not admissible: " + print_triple(t));
  return t;
}

MirrorReport mirror_pair_check(const Potential& p, const WeightSystem& ws,
                               const DiagonalSubgroup& g) {
  MirrorReport rep;
  rep.triple = quotient_triple(p, ws, g);
  DiagonalSubgroup gt = transpose_group(g);
  Potential pt = transpose(p);
  WeightSystem wst = weight_system(pt);
  rep.transpose_triple = quotient_triple(pt, wst, gt);
  NikulinTriple want = dv_mirror(rep.triple);
  rep.ok = rep.transpose_triple == want;
  if (!rep.ok)
    throw MirrorFailure("expected " + print_triple(want) + ", transpose gave " +
                        print_triple(rep.transpose_triple) + " (cover " +
                        print_triple(rep.triple) + ")");
  return rep;
}

}  // namespace k3
