#include "k3bhcr/involution.hpp"

#include <set>

#include "k3bhcr/groups.hpp"
#include "k3bhcr/quotient.hpp"

namespace k3 {

FixedLocusDescription fixed_locus(const Potential& p, const WeightSystem& ws) {
  K3Shape shape = shape_tag(p);
  if (shape.xvar != 0) throw NotK3Shape("square variable must come first");
  FixedLocusDescription out;
  out.main_curve.vanishing = 0;
  out.main_curve.genus = curve_genus(ws.d, ws.w[1], ws.w[2], ws.w[3]);
  // rescalings lambda with lambda^{w1} = -1: lambda = exp(2 pi i t),
  // t = (2k+1) / (2 w1)
  std::set<int> seen;
  for (Int kk = 0; kk < ws.w[0]; ++kk) {
    Rat t = Rat(2 * kk + 1, 2 * ws.w[0]);
    std::vector<int> vanish;
    for (int i = 1; i < 4; ++i)
      if (mod1(t * ws.w[i]) != 0) vanish.push_back(i);
    if (vanish.size() == 1 && seen.insert(vanish[0]).second) {
      int i = vanish[0];
      int j = (i == 1) ? 2 : 1, k = (i == 3) ? 2 : 3;
      FixedCurve c;
      c.vanishing = i;
      c.genus = curve_genus(ws.d, ws.w[0], ws.w[j], ws.w[k]);
      out.extra_components.push_back(c);
    }
  }
  return out;
}

int invariant_r(const Potential& p, const WeightSystem& ws) {
  Int r = 1;
  for (const SingularityRecord& rec : hypersurface_singularities(p, ws)) {
    if (rec.orbit == IotaOrbit::SwappedPair)
      r += rec.k;  // the pair gives one orbit per chain curve
    else
      r += rec.k * rec.multiplicity;
  }
  return static_cast<int>(r.get_si());
}

int invariant_a(int r, const Int& g) {
  Int a = 22 - r - 2 * g;
  if (a < 0 || a > r)
    throw OutOfRange("no valid a for r=" + std::to_string(r) +
                     ", g=" + g.get_str());
  return static_cast<int>(a.get_si());
}

int invariant_delta(const Potential& p, const WeightSystem& ws) {
  int r = invariant_r(p, ws);
  Int g = curve_genus(ws.d, ws.w[1], ws.w[2], ws.w[3]);
  int a = invariant_a(r, g);
  try {
    DiagonalSubgroup jg = j_group(p);
    QuotientInventory inv = quotient_singularities(p, ws, jg);
    BranchModelInput in = build_branch_model(p, ws, jg, inv);
    if (in.expected_r != r)
      throw DeltaAmbiguous("orbit count disagrees with the closed form");
    int dlt = branch_model_delta(in);
    if (!is_admissible(NikulinTriple{r, a, dlt}))
      throw DeltaAmbiguous("lattice model produced inadmissible delta");
    return dlt;
  } catch (const DeltaAmbiguous&) {
  } catch (const UnsupportedStratum&) {
  } catch (const UnsupportedLocalAction&) {
  }
  std::vector<int> ds = admissible_deltas(r, a);
  if (ds.size() == 1) return ds[0];
  throw DeltaAmbiguous("both deltas admissible for (r,a)=(" +
                       std::to_string(r) + "," + std::to_string(a) +
                       ") and no lattice model");
}

NikulinTriple nikulin_triple(const Potential& p, const WeightSystem& ws) {
  int r = invariant_r(p, ws);
  Int g = curve_genus(ws.d, ws.w[1], ws.w[2], ws.w[3]);
  int a = invariant_a(r, g);
  NikulinTriple t{r, a, invariant_delta(p, ws)};
  if (!is_admissible(t))
    throw OutOfRange("triple not admissible: " + print_triple(t));
  return t;
}

NikulinTriple dv_mirror(const NikulinTriple& t) {
  if (t.r == 14 && t.a == 6 && t.delta == 0)
    throw MirrorHypothesisFails("(14,6,0) is excluded");
  if (t.r + t.a > 20)
    throw MirrorHypothesisFails("fixed curve genus below 1");
  return NikulinTriple{20 - t.r, t.a, t.delta};
}

}  // namespace k3
