// End-to-end acceptance suite: one printed pass/fail line per criterion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "k3bhcr/catalog.hpp"
#include "k3bhcr/toric.hpp"

using namespace k3;

namespace {

struct Shared {
  std::vector<CatalogEntry> cat;
  std::vector<GoldenRow> golden;
  std::map<std::pair<int, std::string>, int> row_of;  // (table,no) -> index
};

Shared& shared() {
  static Shared s = [] {
    Shared x;
    x.cat = build_catalog(66);
    x.golden = load_golden(data_dir() + "/tables_1_5.json");
    for (const GoldenRow& g : x.golden)
      x.row_of[{g.table, g.no}] = find_row(x.cat, x.golden, "T" + std::to_string(g.table) + ":" + g.no);
    return x;
  }();
  return s;
}

void verdict(int n, const std::string& what, bool ok,
             const std::string& extra = "") {
  std::cout << "criterion " << n << " (" << what << "): "
            << (ok ? "PASS" : "FAIL");
  if (!extra.empty()) std::cout << " -- " << extra;
  std::cout << "\n";
  CHECK(ok);
}

DiagonalSymmetry parse_sym(const nlohmann::json& j) {
  DiagonalSymmetry s;
  for (const auto& c : j) s.v.push_back(Rat(c.get<std::string>()));
  return sym_reduce(s.v);
}

std::vector<Int> cyclic_selfint(const SmoothToricSurface& s) {
  std::vector<int> ord = ccw_order(s.fan);
  std::vector<Int> out;
  for (int i : ord) out.push_back(s.self_int[i]);
  return out;
}

bool cyclic_equal(std::vector<Int> a, std::vector<Int> b) {
  if (a.size() != b.size()) return false;
  for (int flip = 0; flip < 2; ++flip) {
    for (size_t r = 0; r < a.size(); ++r) {
      std::rotate(a.begin(), a.begin() + 1, a.end());
      if (a == b) return true;
    }
    std::reverse(a.begin(), a.end());
  }
  return false;
}

}  // namespace

TEST_CASE("1: weights and degrees of all golden rows") {
  auto& s = shared();
  int bad = 0;
  for (const GoldenRow& g : s.golden) {
    Potential p = parse_potential("x^2+" + g.f, {"x", "y", "z", "w"});
    WeightSystem ws = weight_system(p);
    if (ws.w != g.w || ws.d != 2 * g.w[0] || !charges(p).calabi_yau) ++bad;
  }
  verdict(1, "charges/weights on all table rows", bad == 0,
          std::to_string(s.golden.size()) + " rows");
}

TEST_CASE("2: group orders and SL/J structure") {
  auto& s = shared();
  int bad = 0;
  int structures = 0;
  for (const GoldenRow& g : s.golden) {
    const CatalogEntry& e = s.cat[s.row_of.at({g.table, g.no})];
    if (e.sl != g.sl || e.j != g.j) ++bad;
    if (g.structure) {
      ++structures;
      if (e.structure != *g.structure) ++bad;
    }
  }
  verdict(2, "|J|, |SL|, and structure columns", bad == 0,
          std::to_string(structures) + " structure cells checked");
}

TEST_CASE("3: closed-form |SL| audit") {
  auto& s = shared();
  // The halving rule behind the closed forms undercounts on some rows with
  // a fermat summand of even exponent: the direct order is then exactly
  // twice the formula.  The direct value always equals the table value
  // (criterion 2), so the audit checks that every fermat, loop, and chain
  // row matches the formula and that every mismatch is a documented
  // factor-2 case, including the three known loop+fermat rows.
  std::vector<std::string> mismatches;
  bool ok = true;
  std::set<int> mismatch_rows;
  for (size_t i = 0; i < s.cat.size(); ++i) {
    const CatalogEntry& e = s.cat[i];
    Int cf = sl_order_closed_form(e.pot);
    if (cf == e.sl) continue;
    mismatch_rows.insert((int)i);
    std::ostringstream os;
    os << "  mismatch: " << render_row(e) << "  closed-form " << cf.get_str()
       << ", direct " << e.sl.get_str();
    mismatches.push_back(os.str());
    if (e.shape == ShapeTag::Fermat || e.shape == ShapeTag::Loop ||
        e.shape == ShapeTag::Chain)
      ok = false;  // pure shapes must match
    if (2 * cf != e.sl) ok = false;
  }
  // the three known loop+fermat rows are among the mismatches
  for (const char* label : {"1", "3", "30"})
    if (!mismatch_rows.count(s.row_of.at({3, label}))) ok = false;
  for (const std::string& m : mismatches) std::cout << m << "\n";
  verdict(3, "closed-form vs direct |SL|", ok,
          std::to_string(mismatches.size()) +
              " factor-2 mismatches, all with direct = table value");
}

TEST_CASE("4: transpose-group duality suite") {
  auto& s = shared();
  int bad = 0, pairs = 0;
  for (const CatalogEntry& e : s.cat) {
    Int detA = det(e.pot.A);
    if (detA < 0) detA = -detA;
    if (detA > group_bound()) continue;
    Potential pt = transpose(e.pot);
    // J^T = SL(W^T)
    if (!(transpose_group(j_group(e.pot)) == sl_group(pt))) ++bad;
    std::vector<DiagonalSymmetry> aut_t = enumerate_elements(aut_group(pt));
    for (const DiagonalSubgroup& g : intermediate_subgroups(e.pot)) {
      ++pairs;
      DiagonalSubgroup gt = transpose_group(g);
      if (!(transpose_group(gt) == g)) ++bad;
      if (g.order * gt.order != detA) ++bad;
      // brute-force annihilator of g under the pairing
      std::set<DiagonalSymmetry> ann;
      for (const DiagonalSymmetry& x : aut_t) {
        bool orth = true;
        for (const DiagonalSymmetry& y : g.generators)
          if (pairing(x, y, e.pot.A) != 0) { orth = false; break; }
        if (orth) ann.insert(x);
      }
      std::vector<DiagonalSymmetry> gte = enumerate_elements(gt);
      if (ann.size() != gte.size() ||
          !std::all_of(gte.begin(), gte.end(),
                       [&](const DiagonalSymmetry& x) { return ann.count(x); }))
        ++bad;
    }
  }
  verdict(4, "transpose groups and pairing annihilators", bad == 0,
          std::to_string(pairs) + " subgroup pairs");
}

TEST_CASE("5: singular-point inventories") {
  auto& s = shared();
  bool ok = true;
  {
    const CatalogEntry& e = s.cat[s.row_of.at({3, "6"})];  // (9,4,3,2)
    std::multiset<std::string> got, want = {"A3 x1 fixed", "A1 x4 fixed",
                                            "A2 x2 pair"};
    for (const auto& r : e.sing) {
      std::ostringstream os;
      os << "A" << r.k.get_str() << " x" << r.multiplicity.get_str() << " "
         << (r.orbit == IotaOrbit::SwappedPair ? "pair" : "fixed");
      got.insert(os.str());
    }
    if (got != want) ok = false;
  }
  {
    const CatalogEntry& e = s.cat[s.row_of.at({5, "28"})];  // (27,18,4,5)
    std::multiset<Int> got, want = {1, 3, 4, 8};
    for (const auto& r : e.sing) {
      if (r.multiplicity != 1) ok = false;
      got.insert(r.k);
    }
    if (got != want) ok = false;
  }
  verdict(5, "A_k inventories of the two worked weight systems", ok);
}

TEST_CASE("6: Nikulin triples across the catalog") {
  auto& s = shared();
  int bad = 0;
  std::map<std::vector<Int>, std::set<NikulinTriple>> by_weights;
  for (const GoldenRow& g : s.golden) {
    const CatalogEntry& e = s.cat[s.row_of.at({g.table, g.no})];
    if (!e.triple || !(*e.triple == g.triple)) ++bad;
    if (e.triple && !is_admissible(*e.triple)) ++bad;
    if (e.triple) by_weights[e.w].insert(*e.triple);
  }
  int multi = 0;
  for (const auto& [w, ts] : by_weights) {
    if (ts.size() > 1) ++bad;
    ++multi;
  }
  verdict(6, "(r,a,delta) on all rows, admissible and weight-determined",
          bad == 0, std::to_string(multi) + " weight classes");
}

TEST_CASE("7: lattice route on the reference toric computation") {
  bool ok = true;
  Fan2D fan;
  fan.rays = {{-1, 1}, {0, -1}, {2, 1}};
  SmoothToricSurface s = resolve(fan);
  // six rays: the three above plus (1,0), (1,1), (0,1)
  std::vector<Ray> want_inserted = {{1, 0}, {1, 1}, {0, 1}};
  if (s.fan.rays.size() != 6) ok = false;
  auto idx = [&](const Ray& r) {
    for (size_t i = 0; i < s.fan.rays.size(); ++i)
      if (s.fan.rays[i] == r) return (int)i;
    return -1;
  };
  for (const Ray& r : want_inserted)
    if (idx(r) < 0) ok = false;
  if (ok) {
    // basis (r3, r4, r5, r6) = ((2,1), (1,1), (0,1), (1,0))
    std::vector<int> basis = {idx({2, 1}), idx({1, 1}), idx({0, 1}),
                              idx({1, 0})};
    PicardData pd = picard_data(s, basis);
    IMat want_m(4, 4);
    long mrows[4][4] = {{-1, 1, 0, 1}, {1, -2, 1, 0}, {0, 1, -2, 0},
                        {1, 0, 0, -2}};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) want_m.at(i, j) = mrows[i][j];
    if (!(pd.gram == want_m)) ok = false;
    // divisor classes: basis rays are unit vectors; the classes of the two
    // non-basis rays follow from the ray relations (the published column
    // entries for these two differ; see data notes)
    std::map<int, std::vector<long>> want_cols = {
        {idx({-1, 1}), {2, 1, 0, 1}}, {idx({0, -1}), {3, 2, 1, 1}},
        {idx({2, 1}), {1, 0, 0, 0}},  {idx({1, 1}), {0, 1, 0, 0}},
        {idx({0, 1}), {0, 0, 1, 0}},  {idx({1, 0}), {0, 0, 0, 1}}};
    for (const auto& [col, v] : want_cols)
      for (int i = 0; i < 4; ++i)
        if (pd.classes.at(i, col) != v[i]) ok = false;
  }
  // downstairs model of x^2 = f on (9,4,3,2) over this fan: rank 10,
  // M(2) + six (-2)-classes, two half-classes, delta = 1
  BranchModelInput in;
  in.plane.fan.rays = {{-1, 1}, {0, -1}, {2, 1}};
  in.plane.fold = {1, 2, 1};
  in.ray_branched = {false, true, false};
  Cluster a3;
  a3.vertex = 0;
  a3.points = {{3, true}};
  Cluster pair;
  pair.vertex = 1;
  pair.points = {{2, false}, {2, false}};
  pair.swapped = true;
  in.clusters = {a3, pair};
  for (int i = 0; i < 4; ++i) {
    Cluster node;
    node.ray = 1;
    node.points = {{1, true}};
    in.clusters.push_back(node);
  }
  in.expected_r = 10;
  in.expected_a = 6;
  in.curve_genus_down = 3;
  BranchModelResult res = branch_model_lattice(in);
  if (res.r != 10 || res.a != 6 || res.delta != 1) ok = false;
  if (res.glue.size() != 2) ok = false;
  Int dt = det(res.invariant.gram);
  if (dt != 64 && dt != -64) ok = false;
  verdict(7, "reference fan, intersection matrix, classes, half-classes, delta",
          ok);
}

TEST_CASE("8: quotient ladders, including both published ladders") {
  auto& s = shared();
  bool ok = true;
  auto triple_for = [&](const Potential& p, const DiagonalSubgroup& g) {
    return quotient_triple(p, weight_system(p), g);
  };
  // the three worked quotients
  {
    const CatalogEntry& e = s.cat[s.row_of.at({5, "3b"})];
    if (!(triple_for(e.pot, sl_group(e.pot)) == NikulinTriple{13, 3, 1}))
      ok = false;
  }
  {
    const CatalogEntry& e = s.cat[s.row_of.at({5, "5"})];
    if (!(triple_for(e.pot, sl_group(e.pot)) == NikulinTriple{17, 1, 1}))
      ok = false;
  }
  {
    const CatalogEntry& e = s.cat[s.row_of.at({1, "1"})];
    WeightSystem ws = weight_system(e.pot);
    DiagonalSubgroup sl = sl_group(e.pot);
    QuotientInventory inv = quotient_singularities(e.pot, ws, sl);
    std::multiset<Int> ks;
    for (const auto& q : inv.points) ks.insert(q.k);
    if (ks != std::multiset<Int>{1, 1, 1, 5, 5, 5}) ok = false;
    if (inv.genus_down != 1) ok = false;
    if (!(triple_for(e.pot, sl) == NikulinTriple{19, 1, 1})) ok = false;
  }
  // both published subgroup ladders, row by row from the data file
  std::ifstream in(data_dir() + "/tables_6_7.json");
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  int rows = 0;
  for (const auto& ladder : j.at("ladders")) {
    Potential p = parse_potential(ladder.at("potential").get<std::string>(),
                                  {"x", "y", "z", "w"});
    WeightSystem ws = weight_system(p);
    Potential pt = transpose(p);
    std::vector<DiagonalSymmetry> jgens = j_group(p).generators;
    std::vector<DiagonalSymmetry> basis;
    if (ladder.contains("basis"))
      for (const auto& b : ladder.at("basis")) basis.push_back(parse_sym(b));
    auto build = [&](const nlohmann::json& row, const char* gkey,
                     const char* ckey) {
      std::vector<DiagonalSymmetry> gens = jgens;
      if (row.contains(gkey))
        for (const auto& g : row.at(gkey)) gens.push_back(parse_sym(g));
      if (row.contains(ckey))
        for (const auto& co : row.at(ckey)) {
          DiagonalSymmetry g = sym_mul(basis[0], Int(co[0].get<long>()));
          g = sym_add(g, sym_mul(basis[1], Int(co[1].get<long>())));
          gens.push_back(g);
        }
      return subgroup_from_generators(p, gens);
    };
    auto factors = [](const nlohmann::json& a) {
      std::vector<Int> v;
      for (const auto& x : a) v.push_back(Int(x.get<long>()));
      return v;
    };
    std::multiset<std::string> transposes, published;
    auto cstring = [](const DiagonalSubgroup& g) {
      std::ostringstream os;
      for (int i = 0; i < g.C.rows; ++i)
        for (int k = 0; k < g.C.cols; ++k) os << g.C.at(i, k).get_str() << ",";
      return os.str();
    };
    for (const auto& row : ladder.at("rows")) {
      ++rows;
      DiagonalSubgroup g = build(row, "generators", "coords");
      if (quotient_structure(g, j_group(p)) != factors(row.at("group")))
        ok = false;
      auto tr = row.at("triple");
      if (!(triple_for(p, g) ==
            NikulinTriple{tr[0].get<int>(), tr[1].get<int>(), tr[2].get<int>()}))
        ok = false;
      DiagonalSubgroup gt = transpose_group(g);
      if (quotient_structure(gt, j_group(pt)) != factors(row.at("tgroup")))
        ok = false;
      transposes.insert(cstring(gt));
      published.insert(cstring(build(row, "tgenerators", "tcoords")));
      auto tt = row.at("ttriple");
      if (!(triple_for(pt, gt) ==
            NikulinTriple{tt[0].get<int>(), tt[1].get<int>(), tt[2].get<int>()}))
        ok = false;
    }
    // the published transpose generators realize exactly the set of actual
    // transpose groups (the two potentials here are self-transpose, so both
    // sides live in the same ambient group); the pairing of the published
    // generator columns is checked up to reordering of equal-triple rows
    if (transposes != published) ok = false;
  }
  // the shipped resolved fan for the full quotient of T1 No. 30 agrees with
  // the computed one (cyclic self-intersection sequence is a complete
  // invariant here)
  {
    const CatalogEntry& e = s.cat[s.row_of.at({1, "30"})];
    WeightSystem ws = weight_system(e.pot);
    DiagonalSubgroup sl = sl_group(e.pot);
    QuotientInventory inv = quotient_singularities(e.pot, ws, sl);
    BranchModelInput in30 = build_branch_model(e.pot, ws, sl, inv);
    std::ifstream fin(data_dir() + "/fake_wps_no30_fan.json");
    REQUIRE(fin.good());
    nlohmann::json fj;
    fin >> fj;
    Fan2D fake;
    for (const auto& r : fj.at("rays"))
      fake.rays.push_back({Int(r[0].get<long>()), Int(r[1].get<long>())});
    SmoothToricSurface mine = resolve(in30.plane.fan);
    SmoothToricSurface theirs = resolve(fake);
    if (theirs.fan.rays.size() != 8) ok = false;
    if (!cyclic_equal(cyclic_selfint(mine), cyclic_selfint(theirs))) ok = false;
  }
  verdict(8, "worked quotients and both subgroup ladders", ok,
          std::to_string(rows) + " ladder rows");
}

TEST_CASE("9: mirror relation with zero failures") {
  auto& s = shared();
  MirrorSummary sum = verify_mirrors(s.cat);
  for (const auto& r : sum.rows)
    if (!r.ok) std::cout << "  FAIL " << r.label << ": " << r.detail << "\n";
  // negative control: a corrupted golden row is caught
  auto corrupted = s.golden;
  corrupted[3].sl += 1;
  bool control = !verify_golden(s.cat, corrupted).failures.empty();
  GoldenReport gr = verify_golden(s.cat, s.golden);
  verdict(9, "Dolgachev-Voisin relation on every row and subgroup",
          sum.all_ok && gr.ok() && control,
          std::to_string(sum.rows.size()) + " rows");
}

TEST_CASE("10: standalone property suites") {
  auto& s = shared();
  bool ok = true;
  // randomized integer linear algebra invariants
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dim(2, 4), val(-5, 5);
  int cases = 0;
  for (int it = 0; it < 1000; ++it, ++cases) {
    int n = dim(rng);
    IMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = val(rng);
    Int d = det(m);
    SmithDecomposition sd = smith_normal_form(m);
    Int du = det(sd.U), dv = det(sd.V);
    if (du != 1 && du != -1) ok = false;
    if (dv != 1 && dv != -1) ok = false;
    Int prod = 1;
    for (int i = 0; i < n; ++i) {
      prod *= sd.D.at(i, i);
      if (i && sd.D.at(i, i) != 0 && sd.D.at(i - 1, i - 1) != 0 &&
          sd.D.at(i, i) % sd.D.at(i - 1, i - 1) != 0)
        ok = false;
    }
    if (prod != d && prod != -d) ok = false;
    if (d != 0) {
      std::vector<Int> f = invariant_factors(m);
      Int fp = 1;
      for (const Int& x : f) fp *= x;
      if (fp != d && fp != -d) ok = false;
    }
  }
  // Riemann-Hurwitz on the three worked curve quotients
  if (riemann_hurwitz_genus(9, 3, {3, 3}) != 3) ok = false;
  if (riemann_hurwitz_genus(10, 12, std::vector<Int>(18, 2)) != 1) ok = false;
  if (riemann_hurwitz_genus(6, 3, {3, 3}) != 2) ok = false;
  // genus integrality across the catalog
  for (const CatalogEntry& e : s.cat) {
    try {
      Int g = curve_genus(e.d, e.w[1], e.w[2], e.w[3]);
      if (g < 0) ok = false;
    } catch (const NonIntegralGenus&) {
      ok = false;
    }
  }
  verdict(10, "randomized linear algebra, Riemann-Hurwitz, genus integrality",
          ok, std::to_string(cases) + " random cases");
}
