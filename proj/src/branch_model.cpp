#include "k3bhcr/branch_model.hpp"

#include <map>
#include <set>

namespace k3 {

namespace {

[[noreturn]] void fail(const std::string& m) { throw DeltaAmbiguous(m); }

// the inserted-ray chain at the vertex where the boundary divisors of the
// two variables other than v meet, ordered from d_first to d_last
struct Germ {
  int d_first, d_last;
  std::vector<int> chain;
};

Germ germ_at(const SmoothToricSurface& s, const std::vector<int>& cyc,
             const std::vector<int>& pos, int v) {
  int nr = static_cast<int>(s.fan.rays.size());
  int a = (v + 1) % 3, b = (v + 2) % 3;
  for (int start : {a, b}) {
    int other = (start == a) ? b : a;
    std::vector<int> chain;
    bool ok = false;
    for (int step = 1; step < nr; ++step) {
      int r = cyc[(pos[start] + step) % nr];
      if (r == other) {
        ok = true;
        break;
      }
      if (r < 3) break;  // crossed a different boundary divisor
      chain.push_back(r);
    }
    if (ok) return {start, other, chain};
  }
  fail("branch model: vertex germ not located");
}

}  // namespace

BranchModelResult branch_model_lattice(const BranchModelInput& in) {
  if (in.plane.fan.rays.size() != 3) fail("branch model: need a 3-ray plane");
  if (in.curve_genus_down <= 0)
    fail("branch model: rational main branch curve is not modeled");
  if (in.expected_a > in.expected_r || (in.expected_r - in.expected_a) % 2)
    fail("branch model: inconsistent (r,a)");

  SmoothToricSurface s = resolve(in.plane.fan);
  int nr = static_cast<int>(s.fan.rays.size());
  std::vector<int> cyc = ccw_order(s.fan);
  std::vector<int> pos(nr);
  for (int i = 0; i < nr; ++i) pos[cyc[i]] = i;

  std::map<int, const Cluster*> at_vertex;
  std::map<int, std::vector<const Cluster*>> on_ray;
  for (const Cluster& c : in.clusters) {
    if ((c.vertex >= 0) == (c.ray >= 0) || c.points.empty())
      fail("branch model: malformed cluster");
    for (const ClusterPoint& p : c.points)
      if (p.k < 1) fail("branch model: cluster point must be singular");
    if (c.vertex >= 0) {
      if (!at_vertex.emplace(c.vertex, &c).second)
        fail("branch model: two involution orbits over one vertex");
    } else {
      on_ray[c.ray].push_back(&c);
    }
  }

  std::set<int> glue_rays;
  for (int v = 0; v < 3; ++v)
    if (in.ray_branched[v]) glue_rays.insert(v);
  // each blow-up center is a node of the branch divisor; we record which
  // glue components pass through it (the main curve is not tracked)
  std::vector<std::vector<int>> blowups;

  for (int v = 0; v < 3; ++v) {
    Germ g = germ_at(s, cyc, pos, v);
    int t = static_cast<int>(g.chain.size());
    bool bf = in.ray_branched[g.d_first], bl = in.ray_branched[g.d_last];
    auto it = at_vertex.find(v);
    if (it == at_vertex.end()) {
      if (t > 0) fail("branch model: singular vertex without a cluster");
      if (bf && bl)
        fail("branch model: branch components crossing without a cluster");
      continue;
    }
    const Cluster& cl = *it->second;
    if (cl.swapped) {
      if (cl.points.size() != 2 || cl.points[0].k != cl.points[1].k)
        fail("branch model: malformed swapped pair");
      if (cl.points[0].on_curve || cl.points[1].on_curve)
        fail("branch model: swapped pair cannot lie on the fixed curve");
      if (Int(t) != cl.points[0].k) fail("branch model: etale germ size");
      for (int r : g.chain)
        if (s.self_int[r] != -2) fail("branch model: etale germ is not A_k");
      if (bf || bl)
        fail("branch model: branch ray adjacent to an etale cluster");
      continue;
    }
    if (cl.points.size() != 1)
      fail("branch model: several fixed points over one vertex");
    Int kk = cl.points[0].k;
    bool onc = cl.points[0].on_curve;
    if (t == 0) {
      // smooth germ: only a transversal node of two branch components
      int comps = (bf ? 1 : 0) + (bl ? 1 : 0) + (onc ? 1 : 0);
      if (kk != 1 || comps != 2)
        fail("branch model: unmodeled smooth-vertex configuration");
      std::vector<int> touch;
      if (bf) touch.push_back(g.d_first);
      if (bl) touch.push_back(g.d_last);
      blowups.push_back(touch);
      continue;
    }
    // resolved germ: every chain ray becomes a branch component; its
    // proper transform must reach self-intersection -4
    Int total = t - 1 + (bf ? 1 : 0) + (bl ? 1 : 0);
    for (int r = 0; r < t; ++r) {
      Int b = -s.self_int[g.chain[r]];
      Int forced = (r > 0 ? 1 : 0) + (r < t - 1 ? 1 : 0) +
                   (r == 0 && bf ? 1 : 0) + (r == t - 1 && bl ? 1 : 0);
      Int cross = 4 - b - forced;  // transversal main-curve crossings
      if (cross < 0) fail("branch model: chain ray too negative");
      if (cross > 0 && !onc)
        fail("branch model: crossings needed off the main curve");
      if (r > 0) blowups.push_back({g.chain[r - 1], g.chain[r]});
      if (r == 0 && bf) blowups.push_back({g.d_first, g.chain[0]});
      if (r == t - 1 && bl) blowups.push_back({g.d_last, g.chain[t - 1]});
      for (Int i = 0; i < cross; ++i) blowups.push_back({g.chain[r]});
      total += cross;
    }
    if (total != kk - t)
      fail("branch model: blow-up count does not match the A_k type");
    for (int r : g.chain) glue_rays.insert(r);
  }

  for (const auto& [ray, list] : on_ray)
    for (const Cluster* cl : list) {
      if (cl->swapped)
        fail("branch model: swapped pair over a boundary interior point");
      if (cl->points.size() != 1 || cl->points[0].k != 1 ||
          !cl->points[0].on_curve || !in.ray_branched[ray])
        fail("branch model: unmodeled boundary-interior singularity");
      blowups.push_back({ray});
    }

  PicardData pd = picard_data(s);
  int rk = nr - 2;
  int ns = static_cast<int>(blowups.size());
  int rank = rk + ns;
  if (rank != in.expected_r) fail("branch model: rank mismatch");

  IMat big = blow_up_gram(pd.gram, ns);
  std::vector<std::vector<Int>> vecs;
  for (int ray : glue_rays) {
    std::vector<Int> v(rank, 0);
    for (int p = 0; p < rk; ++p) v[p] = pd.classes.at(p, ray).get_num();
    for (int bidx = 0; bidx < ns; ++bidx)
      for (int touched : blowups[bidx])
        if (touched == ray) v[rk + bidx] -= 1;
    // proper transform must be a halved (-2)-class, disjoint from the rest
    auto pair_with = [&](const std::vector<Int>& u) {
      Int acc = 0;
      for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) acc += u[i] * big.at(i, j) * v[j];
      return acc;
    };
    if (pair_with(v) != -4)
      fail("branch model: branch component is not a -2 curve upstairs");
    for (const auto& u : vecs)
      if (pair_with(u) != 0)
        fail("branch model: branch components not disjoint");
    vecs.push_back(v);
  }
  if (static_cast<int>(vecs.size()) != (in.expected_r - in.expected_a) / 2)
    fail("branch model: glue count does not match k = (r-a)/2");

  IntegralLattice doubled = twist(IntegralLattice{big}, 2);
  BranchModelResult res;
  try {
    res.invariant = glue_half_classes(doubled, vecs);
  } catch (const NotIntegralOverlattice&) {
    fail("branch model: halved classes not integral");
  }
  res.base_gram = doubled.gram;
  res.glue = vecs;
  res.r = rank;
  try {
    res.a = two_elementary_a(res.invariant);
  } catch (const NotTwoElementary&) {
    fail("branch model: invariant lattice not 2-elementary");
  }
  if (res.a != in.expected_a) fail("branch model: 2-rank mismatch");
  res.delta = delta(res.invariant);
  return res;
}

int branch_model_delta(const BranchModelInput& in) {
  return branch_model_lattice(in).delta;
}

}  // namespace k3
