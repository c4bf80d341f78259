#include "k3bhcr/toric.hpp"

#include <algorithm>
#include <numeric>

#include "k3bhcr/lattice.hpp"

namespace k3 {

Int ray_det(const Ray& a, const Ray& b) {
  return a.first * b.second - a.second * b.first;
}

Ray primitivize(Ray r, Int* content) {
  Int g = gcd_int(abs(r.first), abs(r.second));
  if (g == 0) throw std::runtime_error("primitivize: zero ray");
  r.first /= g;
  r.second /= g;
  if (content) *content = g;
  return r;
}

// 0 for the closed upper half plane minus the negative x-axis, 1 otherwise.
static int half_of(const Ray& r) {
  return (r.second > 0 || (r.second == 0 && r.first > 0)) ? 0 : 1;
}

std::vector<int> ccw_order(const Fan2D& fan) {
  int n = static_cast<int>(fan.rays.size());
  if (n < 3) throw std::runtime_error("ccw_order: need at least 3 rays");
  std::vector<int> ord(n);
  std::iota(ord.begin(), ord.end(), 0);
  std::sort(ord.begin(), ord.end(), [&](int i, int j) {
    const Ray &a = fan.rays[i], &b = fan.rays[j];
    int ha = half_of(a), hb = half_of(b);
    if (ha != hb) return ha < hb;
    return ray_det(a, b) > 0;
  });
  for (int i = 0; i < n; ++i) {
    const Ray &a = fan.rays[ord[i]], &b = fan.rays[ord[(i + 1) % n]];
    if (ray_det(a, b) == 0)
      throw std::runtime_error("ccw_order: parallel or repeated rays");
  }
  int best = 0;
  for (int i = 1; i < n; ++i)
    if (fan.rays[ord[i]] < fan.rays[ord[best]]) best = i;
  std::rotate(ord.begin(), ord.begin() + best, ord.end());
  return ord;
}

PlaneFan wps_plane_fan(const Int& w2, const Int& w3, const Int& w4) {
  std::vector<Int> w = {w2, w3, w4};
  for (const Int& x : w)
    if (x <= 0) throw std::runtime_error("wps_plane_fan: weights must be > 0");
  Int g = gcd_int(gcd_int(w[0], w[1]), w[2]);
  for (Int& x : w) x /= g;
  IMat m = primitive_extension(w);
  PlaneFan pf;
  for (int i = 0; i < 3; ++i) {
    Ray raw = {m.at(1, i), m.at(2, i)};
    Int c;
    pf.fan.rays.push_back(primitivize(raw, &c));
    pf.fold.push_back(c);
  }
  // the weighted coordinate relation must map to zero in the quotient
  Int rx = 0, ry = 0;
  for (int i = 0; i < 3; ++i) {
    rx += w[i] * pf.fold[i] * pf.fan.rays[i].first;
    ry += w[i] * pf.fold[i] * pf.fan.rays[i].second;
  }
  if (rx != 0 || ry != 0)
    throw std::runtime_error("wps_plane_fan: relation check failed");
  std::vector<int> ord = ccw_order(pf.fan);
  for (int i = 0; i < 3; ++i)
    if (ray_det(pf.fan.rays[ord[i]], pf.fan.rays[ord[(i + 1) % 3]]) <= 0)
      throw std::runtime_error("wps_plane_fan: fan not complete");
  return pf;
}

PlaneFan refine_lattice(const PlaneFan& pf,
                        const std::vector<std::vector<Rat>>& gens) {
  QMat basis = lattice_with_generators(2, gens);
  QMat inv = invert(basis);
  PlaneFan out;
  for (size_t i = 0; i < pf.fan.rays.size(); ++i) {
    Rat x = inv.at(0, 0) * pf.fan.rays[i].first +
            inv.at(0, 1) * pf.fan.rays[i].second;
    Rat y = inv.at(1, 0) * pf.fan.rays[i].first +
            inv.at(1, 1) * pf.fan.rays[i].second;
    if (x.get_den() != 1 || y.get_den() != 1)
      throw std::runtime_error("refine_lattice: ray not in refined lattice");
    Int extra;
    Ray r = primitivize({x.get_num(), y.get_num()}, &extra);
    out.fan.rays.push_back(r);
    out.fold.push_back(pf.fold[i] * extra);
  }
  return out;
}

std::vector<Ray> hj_rays(const Ray& u, const Ray& v) {
  Int d = ray_det(u, v);
  if (d <= 0) throw std::runtime_error("hj_rays: need det(u,v) > 0");
  if (d == 1) return {};
  // w0 with det(u, w0) = 1 via the extended gcd s*u1 + t*u2 = 1
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
             u.first.get_mpz_t(), u.second.get_mpz_t());
  if (g != 1) throw std::runtime_error("hj_rays: ray not primitive");
  Ray w0 = {-t, s};
  Int d0 = ray_det(w0, v);
  // adjacent hull ray w = w0 + k*u with det(w, v) in [1, d-1]
  Int target = ((d0 - 1) % d + d) % d + 1;
  if (target == d) throw std::runtime_error("hj_rays: ray v not primitive");
  Int k = (target - d0) / d;
  Ray w = {w0.first + k * u.first, w0.second + k * u.second};
  std::vector<Ray> rest = hj_rays(w, v);
  rest.insert(rest.begin(), w);
  return rest;
}

SmoothToricSurface resolve(const Fan2D& fan) {
  std::vector<int> ord = ccw_order(fan);
  int n = static_cast<int>(ord.size());
  for (int i = 0; i < n; ++i)
    if (ray_det(fan.rays[ord[i]], fan.rays[ord[(i + 1) % n]]) <= 0)
      throw std::runtime_error("resolve: fan not complete");
  for (const Ray& r : fan.rays) {
    Int c;
    primitivize(r, &c);
    if (c != 1) throw std::runtime_error("resolve: non-primitive ray");
  }

  SmoothToricSurface s;
  s.fan.rays = fan.rays;
  s.origin.resize(fan.rays.size());
  std::iota(s.origin.begin(), s.origin.end(), 0);

  // ccw list of (ray, final index); inserted rays are appended cone by cone
  std::vector<std::pair<Ray, int>> cyc;
  for (int i = 0; i < n; ++i) cyc.push_back({fan.rays[ord[i]], ord[i]});
  std::vector<std::pair<Ray, int>> full;
  for (int i = 0; i < n; ++i) {
    full.push_back(cyc[i]);
    for (const Ray& w : hj_rays(cyc[i].first, cyc[(i + 1) % n].first)) {
      int idx = static_cast<int>(s.fan.rays.size());
      s.fan.rays.push_back(w);
      s.origin.push_back(-1);
      full.push_back({w, idx});
    }
  }

  int m = static_cast<int>(full.size());
  s.self_int.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    const Ray& prev = full[(i + m - 1) % m].first;
    const Ray& cur = full[i].first;
    const Ray& next = full[(i + 1) % m].first;
    Ray sum = {prev.first + next.first, prev.second + next.second};
    if (ray_det(sum, cur) != 0)
      throw std::runtime_error("resolve: neighbor sum not parallel to ray");
    Int b;
    if (cur.first != 0) {
      if (sum.first % cur.first != 0)
        throw std::runtime_error("resolve: non-integral self-intersection");
      b = sum.first / cur.first;
    } else {
      if (sum.second % cur.second != 0)
        throw std::runtime_error("resolve: non-integral self-intersection");
      b = sum.second / cur.second;
    }
    s.self_int[full[i].second] = -b;
  }
  return s;
}

PicardData picard_data(const SmoothToricSurface& s, std::vector<int> basis) {
  int nr = static_cast<int>(s.fan.rays.size());
  std::vector<int> ord = ccw_order(s.fan);
  for (int i = 0; i < nr; ++i)
    if (ray_det(s.fan.rays[ord[i]], s.fan.rays[ord[(i + 1) % nr]]) != 1)
      throw std::runtime_error("picard_data: surface not smooth");
  if (basis.empty())
    basis.assign(ord.begin() + 2, ord.end());
  int rk = nr - 2;
  if (static_cast<int>(basis.size()) != rk)
    throw BasisNotSpanning("picard_data: basis must have #rays - 2 classes");

  // position in the ccw cycle, for adjacency
  std::vector<int> pos(nr);
  for (int i = 0; i < nr; ++i) pos[ord[i]] = i;
  auto inter = [&](int i, int j) -> Int {
    if (i == j) return s.self_int[i];
    int di = ((pos[i] - pos[j]) % nr + nr) % nr;
    return (di == 1 || di == nr - 1) ? 1 : 0;
  };

  PicardData pd;
  pd.basis = basis;
  pd.gram = IMat(rk, rk);
  for (int p = 0; p < rk; ++p)
    for (int q = 0; q < rk; ++q) pd.gram.at(p, q) = inter(basis[p], basis[q]);

  // e_j = sum_b c_b e_b + lambda . (linear relations among ray classes)
  IMat sys(nr, nr);
  for (int p = 0; p < rk; ++p) sys.at(basis[p], p) = 1;
  for (int i = 0; i < nr; ++i) {
    sys.at(i, rk) = s.fan.rays[i].first;
    sys.at(i, rk + 1) = s.fan.rays[i].second;
  }
  pd.classes = QMat(rk, nr);
  for (int j = 0; j < nr; ++j) {
    std::vector<Rat> rhs(nr, 0);
    rhs[j] = 1;
    std::vector<Rat> sol;
    try {
      sol = solve_rational(sys, rhs);
    } catch (const SingularMatrix&) {
      throw BasisNotSpanning("picard_data: classes do not span");
    }
    for (int p = 0; p < rk; ++p) {
      if (sol[p].get_den() != 1)
        throw BasisNotSpanning("picard_data: basis spans only a sublattice");
      pd.classes.at(p, j) = sol[p];
    }
  }

  // consistency: unimodular, hyperbolic signature, Noether sum, and the
  // class matrix must reproduce every intersection number
  Int dg = det(pd.gram);
  if (dg != 1 && dg != -1)
    throw std::runtime_error("picard_data: gram not unimodular");
  auto sig = signature(IntegralLattice{pd.gram});
  if (sig.first != 1 || sig.second != rk - 1)
    throw std::runtime_error("picard_data: wrong signature");
  Int noether = 0;
  for (int i = 0; i < nr; ++i) noether += s.self_int[i];
  if (noether != 12 - 3 * nr)
    throw std::runtime_error("picard_data: Noether check failed");
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nr; ++j) {
      Rat acc = 0;
      for (int p = 0; p < rk; ++p)
        for (int q = 0; q < rk; ++q)
          acc += pd.classes.at(p, i) * pd.gram.at(p, q) * pd.classes.at(q, j);
      if (acc != Rat(inter(i, j)))
        throw std::runtime_error("picard_data: class pairing mismatch");
    }
  return pd;
}

IMat blow_up_gram(const IMat& g, int count) {
  IMat out(g.rows + count, g.cols + count);
  for (int i = 0; i < g.rows; ++i)
    for (int j = 0; j < g.cols; ++j) out.at(i, j) = g.at(i, j);
  for (int i = 0; i < count; ++i) out.at(g.rows + i, g.cols + i) = -1;
  return out;
}

}  // namespace k3
