#include "k3bhcr/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace k3 {

namespace {

const char* kVarNames[4] = {"x", "y", "z", "w"};

// f-part monomial renderer: row of the exponent matrix -> "y^3*z"
std::string render_monomial(const IMat& A, int row) {
  std::ostringstream os;
  bool first = true;
  for (int c = 1; c < 4; ++c) {
    Int e = A.at(row, c);
    if (e == 0) continue;
    if (!first) os << "*";
    os << kVarNames[c];
    if (e != 1) os << "^" << e.get_str();
    first = false;
  }
  return os.str();
}

std::string render_f(const Potential& p) {
  std::vector<std::string> terms;
  for (int r = 0; r < 4; ++r)
    if (p.A.at(r, 0) == 0) terms.push_back(render_monomial(p.A, r));
  std::string out;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i) out += "+";
    out += terms[i];
  }
  return out;
}

// exact division helper: returns exponent >= 2 or 0 when there is none
Int exp_div(const Int& num, const Int& den) {
  if (den == 0 || num % den != 0) return 0;
  Int e = num / den;
  return e >= 2 ? e : Int(0);
}

Potential make_potential(const std::vector<std::vector<Int>>& frows) {
  Potential p;
  p.A = IMat(4, 4);
  p.vars = {"x", "y", "z", "w"};
  p.A.at(0, 0) = 2;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c) p.A.at(r + 1, c) = frows[r][c];
  return p;
}

ShapeTag shape_rank(const Potential& p) { return shape_tag(p).tag; }

int shape_order(ShapeTag t) {
  switch (t) {
    case ShapeTag::Fermat: return 1;
    case ShapeTag::Loop: return 2;
    case ShapeTag::LoopFermat: return 3;
    case ShapeTag::ChainFermat: return 4;
    case ShapeTag::Chain: return 5;
  }
  return 0;
}

}  // namespace

int shape_table(ShapeTag t) { return shape_order(t); }

std::vector<Potential> potentials_for_weights(const std::vector<Int>& w) {
  Int d = 2 * w[0];
  std::map<std::string, Potential> found;
  auto add = [&](const std::vector<std::vector<Int>>& frows) {
    Potential p = make_potential(frows);
    if (det(p.A) == 0) return;
    try {
      atomic_decomposition(p);
      shape_tag(p);
    } catch (const NotAtomicSum&) {
      return;
    } catch (const NotK3Shape&) {
      return;
    }
    found.emplace(catalog_key(p), p);
  };
  auto row = [&](int i, const Int& a, int j = -1) {
    std::vector<Int> r(4, Int(0));
    r[i] = a;
    if (j >= 0) r[j] = 1;
    return r;
  };

  // fermat: y^a + z^b + w^c
  {
    Int a = exp_div(d, w[1]), b = exp_div(d, w[2]), c = exp_div(d, w[3]);
    if (a != 0 && b != 0 && c != 0)
      add({row(1, a), row(2, b), row(3, c)});
  }
  int vs[3] = {1, 2, 3};
  // chain+fermat and loop+fermat: pair (i,j) plus fermat k
  for (int i : vs)
    for (int j : vs)
      for (int k : vs) {
        if (i == j || j == k || i == k) continue;
        Int c = exp_div(d, w[k]);
        if (c == 0) continue;
        Int a = exp_div(d - w[j], w[i]);
        if (a == 0) continue;
        Int b = exp_div(d, w[j]);
        if (b != 0) add({row(i, a, j), row(j, b), row(k, c)});
        Int bl = exp_div(d - w[i], w[j]);
        if (bl != 0) add({row(i, a, j), row(j, bl, i), row(k, c)});
      }
  // chain and loop on all three variables
  for (int i : vs)
    for (int j : vs)
      for (int k : vs) {
        if (i == j || j == k || i == k) continue;
        Int a = exp_div(d - w[j], w[i]);
        Int b = exp_div(d - w[k], w[j]);
        if (a == 0 || b == 0) continue;
        Int c = exp_div(d, w[k]);
        if (c != 0) add({row(i, a, j), row(j, b, k), row(k, c)});
        Int cl = exp_div(d - w[i], w[k]);
        if (cl != 0) add({row(i, a, j), row(j, b, k), row(k, cl, i)});
      }

  std::vector<Potential> out;
  std::vector<std::pair<std::pair<int, std::string>, Potential>> ranked;
  for (auto& [key, p] : found)
    ranked.push_back({{shape_order(shape_rank(p)), key}, p});
  std::sort(ranked.begin(), ranked.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [k, p] : ranked) out.push_back(p);
  return out;
}

std::vector<std::vector<Int>> enumerate_weights(const Int& d_max) {
  std::vector<std::vector<Int>> out;
  for (Int w1 = 3; 2 * w1 <= d_max; ++w1)
    for (Int w2 = (w1 + 2) / 3; w2 <= w1 - 2; ++w2) {
      for (Int w3 = 1; w3 <= w2; ++w3) {
        Int w4 = w1 - w2 - w3;
        if (w4 < 1 || w4 > w3) continue;
        std::vector<Int> w = {w1, w2, w3, w4};
        WeightSystem ws;
        ws.w = w;
        ws.d = 2 * w1;
        if (!is_normalized(ws)) continue;
        if (!is_well_formed_hypersurface(ws)) continue;
        if (potentials_for_weights(w).empty()) continue;
        out.push_back(w);
      }
    }
  std::sort(out.begin(), out.end(),
            [](const std::vector<Int>& a, const std::vector<Int>& b) {
              if (a[0] != b[0]) return a[0] < b[0];
              return a < b;
            });
  return out;
}

std::string catalog_key(const Potential& p) {
  ChargeData cd = charges(p);
  K3Shape s = shape_tag(p);
  // permute the non-square columns into descending weight order
  std::vector<int> cols;
  for (int c = 0; c < 4; ++c)
    if (c != s.xvar) cols.push_back(c);
  std::stable_sort(cols.begin(), cols.end(),
                   [&](int a, int b) { return cd.w[a] > cd.w[b]; });
  cols.insert(cols.begin(), s.xvar);
  Potential q;
  q.A = IMat(4, 4);
  q.vars = {"x", "y", "z", "w"};
  std::vector<Int> wq(4);
  for (int c = 0; c < 4; ++c) {
    wq[c] = cd.w[cols[c]];
    for (int r = 0; r < 4; ++r) q.A.at(r, c) = p.A.at(r, cols[c]);
  }
  return canonical_key(q, wq);
}

std::vector<CatalogEntry> build_catalog(const Int& d_max) {
  std::vector<CatalogEntry> cat;
  for (const std::vector<Int>& w : enumerate_weights(d_max)) {
    for (const Potential& p : potentials_for_weights(w)) {
      CatalogEntry e;
      e.w = w;
      e.d = 2 * w[0];
      e.pot = p;
      e.text = render_f(p);
      e.shape = shape_rank(p);
      e.key = catalog_key(p);
      WeightSystem ws = weight_system(p);
      try {
        e.sing = hypersurface_singularities(p, ws);
      } catch (const std::exception& ex) {
        e.flags.push_back(std::string("singularities: ") + ex.what());
      }
      try {
        e.sl = sl_group(p).order;
        e.j = ws.d;
        e.structure = quotient_structure(sl_group(p), j_group(p));
        e.starred = e.sl > e.j;
      } catch (const std::exception& ex) {
        e.flags.push_back(std::string("groups: ") + ex.what());
      }
      try {
        e.triple = nikulin_triple(p, ws);
      } catch (const std::exception& ex) {
        e.flags.push_back(std::string("triple: ") + ex.what());
      }
      cat.push_back(e);
    }
  }
  std::stable_sort(cat.begin(), cat.end(),
                   [](const CatalogEntry& a, const CatalogEntry& b) {
                     int sa = shape_order(a.shape), sb = shape_order(b.shape);
                     if (sa != sb) return sa < sb;
                     if (a.d != b.d) return a.d < b.d;
                     if (a.w != b.w) return a.w < b.w;
                     return a.key < b.key;
                   });
  // transpose linkage
  std::map<std::string, int> index;
  for (size_t i = 0; i < cat.size(); ++i) index[cat[i].key] = (int)i;
  for (CatalogEntry& e : cat) {
    std::string tk = catalog_key(transpose(e.pot));
    auto it = index.find(tk);
    e.transpose_index = it == index.end() ? -1 : it->second;
  }
  return cat;
}

static std::string entry_label(const std::vector<CatalogEntry>& cat, int i) {
  const CatalogEntry& e = cat[i];
  std::ostringstream os;
  os << "T" << shape_table(e.shape) << " (";
  for (size_t k = 0; k < e.w.size(); ++k)
    os << (k ? "," : "") << e.w[k].get_str();
  os << ") " << e.text;
  return os.str();
}

MirrorSummary verify_mirrors(const std::vector<CatalogEntry>& cat) {
  MirrorSummary sum;
  for (size_t i = 0; i < cat.size(); ++i) {
    const CatalogEntry& e = cat[i];
    MirrorRowReport rep;
    rep.label = entry_label(cat, (int)i);
    if (!e.triple) {
      rep.detail = "no triple: " + (e.flags.empty() ? "?" : e.flags.front());
      sum.rows.push_back(rep);
      sum.all_ok = false;
      continue;
    }
    try {
      if (!e.starred) {
        if (e.transpose_index < 0) throw MirrorFailure("transpose not in catalog");
        const CatalogEntry& t = cat[e.transpose_index];
        if (!t.triple) throw MirrorFailure("transpose row has no triple");
        NikulinTriple want = dv_mirror(*e.triple);
        if (!(*t.triple == want))
          throw MirrorFailure("transpose triple " + print_triple(*t.triple) +
                              " != " + print_triple(want));
        rep.ok = true;
        rep.detail = print_triple(*e.triple) + " <-> " + print_triple(*t.triple);
      } else {
        WeightSystem ws = weight_system(e.pot);
        int n = 0;
        for (const DiagonalSubgroup& g : intermediate_subgroups(e.pot)) {
          mirror_pair_check(e.pot, ws, g);
          ++n;
        }
        rep.ok = true;
        rep.detail = std::to_string(n) + " subgroup pairs";
      }
    } catch (const std::exception& ex) {
      rep.ok = false;
      rep.detail = ex.what();
      sum.all_ok = false;
    }
    sum.rows.push_back(rep);
  }
  return sum;
}

std::vector<GoldenRow> load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  nlohmann::json j;
  in >> j;
  std::vector<GoldenRow> rows;
  for (const auto& r : j.at("rows")) {
    GoldenRow g;
    g.table = r.at("table").get<int>();
    g.no = r.at("no").get<std::string>();
    g.xref = r.value("xref", "");
    for (const auto& x : r.at("w")) g.w.push_back(Int(x.get<long>()));
    g.f = r.at("f").get<std::string>();
    auto t = r.at("triple");
    g.triple = NikulinTriple{t[0].get<int>(), t[1].get<int>(), t[2].get<int>()};
    g.sl = Int(r.at("sl").get<long>());
    g.j = Int(r.at("j").get<long>());
    if (r.contains("structure")) {
      std::vector<Int> st;
      for (const auto& x : r.at("structure")) st.push_back(Int(x.get<long>()));
      g.structure = st;
    }
    g.note = r.value("note", "");
    rows.push_back(g);
  }
  return rows;
}

static Potential parse_golden_potential(const GoldenRow& g) {
  return parse_potential("x^2+" + g.f, {"x", "y", "z", "w"});
}

GoldenReport verify_golden(const std::vector<CatalogEntry>& cat,
                           const std::vector<GoldenRow>& golden) {
  GoldenReport rep;
  std::map<std::string, int> index;
  for (size_t i = 0; i < cat.size(); ++i) index[cat[i].key] = (int)i;
  std::map<std::pair<int, std::string>, int> by_label;  // (table, no) -> cat
  std::set<int> used;
  for (const GoldenRow& g : golden) {
    ++rep.rows_checked;
    std::string label = "T" + std::to_string(g.table) + ":" + g.no;
    auto fail = [&](const std::string& m) { rep.failures.push_back(label + ": " + m); };
    Potential p;
    try {
      p = parse_golden_potential(g);
    } catch (const std::exception& ex) {
      fail(std::string("parse: ") + ex.what());
      continue;
    }
    WeightSystem ws = weight_system(p);
    if (ws.w != g.w) {
      fail("weights disagree");
      continue;
    }
    auto it = index.find(catalog_key(p));
    if (it == index.end()) {
      fail("not found in catalog");
      continue;
    }
    const CatalogEntry& e = cat[it->second];
    by_label[{g.table, g.no}] = it->second;
    used.insert(it->second);
    if (shape_table(e.shape) != g.table) fail("shape table disagrees");
    if (!e.triple)
      fail("catalog row flagged: " + (e.flags.empty() ? "?" : e.flags.front()));
    else if (!(*e.triple == g.triple))
      fail("triple " + print_triple(*e.triple) + " != " + print_triple(g.triple));
    if (e.sl != g.sl) fail("|SL| " + e.sl.get_str() + " != " + g.sl.get_str());
    if (e.j != g.j) fail("|J| " + e.j.get_str() + " != " + g.j.get_str());
    if (g.structure && e.structure != *g.structure) fail("SL/J structure disagrees");
  }
  // cross-references are reproduced by the transpose linkage
  for (const GoldenRow& g : golden) {
    auto self = by_label.find({g.table, g.no});
    if (self == by_label.end()) continue;
    std::string target = g.xref.empty() ? g.no : g.xref;
    auto other = by_label.find({g.table, target});
    if (other == by_label.end()) {
      rep.failures.push_back("T" + std::to_string(g.table) + ":" + g.no +
                             ": cross-reference " + target + " missing");
      continue;
    }
    if (cat[self->second].transpose_index != other->second)
      rep.failures.push_back("T" + std::to_string(g.table) + ":" + g.no +
                             ": transpose link does not match cross-reference " +
                             target);
  }
  // and the catalog contains nothing beyond the golden rows
  for (size_t i = 0; i < cat.size(); ++i)
    if (cat[i].d <= 66 && !used.count((int)i))
      rep.failures.push_back(entry_label(cat, (int)i) + ": not a golden row");
  return rep;
}

int find_row(const std::vector<CatalogEntry>& cat,
             const std::vector<GoldenRow>& golden, const std::string& label) {
  size_t colon = label.find(':');
  if (label.size() < 4 || label[0] != 'T' || colon == std::string::npos)
    throw IoError("bad row label: " + label + " (expected e.g. T5:3a)");
  int table = std::stoi(label.substr(1, colon - 1));
  std::string no = label.substr(colon + 1);
  for (const GoldenRow& g : golden) {
    if (g.table != table || g.no != no) continue;
    Potential p = parse_golden_potential(g);
    std::string key = catalog_key(p);
    for (size_t i = 0; i < cat.size(); ++i)
      if (cat[i].key == key) return (int)i;
    throw IoError("row " + label + " not in catalog");
  }
  throw IoError("no golden row " + label);
}

std::string render_row(const CatalogEntry& e) {
  std::ostringstream os;
  os << "(";
  for (size_t k = 0; k < e.w.size(); ++k)
    os << (k ? "," : "") << e.w[k].get_str();
  os << ")  " << e.text << "  ";
  os << (e.triple ? print_triple(*e.triple) : std::string("flagged"));
  os << "  " << e.sl.get_str() << "  " << e.j.get_str() << "  ";
  if (e.structure.empty())
    os << "1";
  else
    for (size_t k = 0; k < e.structure.size(); ++k)
      os << (k ? "x" : "") << "Z/" << e.structure[k].get_str();
  return os.str();
}

std::string render_text(const std::vector<CatalogEntry>& cat) {
  static const char* titles[6] = {"",
                                  "fermat",
                                  "loop",
                                  "loop+fermat",
                                  "chain+fermat",
                                  "chain"};
  std::ostringstream os;
  int current = 0;
  for (const CatalogEntry& e : cat) {
    int t = shape_table(e.shape);
    if (t != current) {
      current = t;
      os << "== Table " << t << " (" << titles[t] << ") ==\n";
    }
    os << render_row(e) << "\n";
  }
  return os.str();
}

std::string render_csv(const std::vector<CatalogEntry>& cat) {
  std::ostringstream os;
  os << "table,w1,w2,w3,w4,d,potential,r,a,delta,sl,j,structure,starred,flags\n";
  for (const CatalogEntry& e : cat) {
    os << shape_table(e.shape);
    for (const Int& wi : e.w) os << "," << wi.get_str();
    os << "," << e.d.get_str() << "," << e.text << ",";
    if (e.triple)
      os << e.triple->r << "," << e.triple->a << "," << e.triple->delta;
    else
      os << ",,";
    os << "," << e.sl.get_str() << "," << e.j.get_str() << ",";
    for (size_t k = 0; k < e.structure.size(); ++k)
      os << (k ? " " : "") << e.structure[k].get_str();
    os << "," << (e.starred ? 1 : 0) << ",";
    for (size_t k = 0; k < e.flags.size(); ++k)
      os << (k ? "; " : "") << e.flags[k];
    os << "\n";
  }
  return os.str();
}

std::string render_json(const std::vector<CatalogEntry>& cat) {
  nlohmann::json out = nlohmann::json::array();
  for (const CatalogEntry& e : cat) {
    nlohmann::json r;
    r["table"] = shape_table(e.shape);
    r["w"] = nlohmann::json::array();
    for (const Int& wi : e.w) r["w"].push_back(wi.get_si());
    r["d"] = e.d.get_si();
    r["potential"] = "x^2+" + e.text;
    if (e.triple)
      r["triple"] = {e.triple->r, e.triple->a, e.triple->delta};
    r["sl"] = e.sl.get_si();
    r["j"] = e.j.get_si();
    r["structure"] = nlohmann::json::array();
    for (const Int& s : e.structure) r["structure"].push_back(s.get_si());
    r["starred"] = e.starred;
    r["transpose_index"] = e.transpose_index;
    r["flags"] = e.flags;
    out.push_back(r);
  }
  return out.dump(1);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace k3
