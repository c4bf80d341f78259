#include "k3bhcr/potential.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace k3 {

namespace {

struct Token {
  std::string var;
  Int exp;
};

}  // namespace

Potential parse_potential(const std::string& text,
                          const std::vector<std::string>& var_order) {
  std::vector<std::string> vars = var_order;
  std::map<std::string, int> idx;
  for (int i = 0; i < (int)vars.size(); i++) idx[vars[i]] = i;
  std::vector<std::vector<Token>> monos;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && isspace(text[i])) i++; };
  skip_ws();
  bool first = true;
  while (i < text.size()) {
    skip_ws();
    if (!first || text[i] == '+' || text[i] == '-') {
      if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
        throw ParseError("expected '+' or '-' between monomials");
      i++;
    }
    first = false;
    skip_ws();
    std::vector<Token> mono;
    bool more = true;
    while (more) {
      skip_ws();
      if (i >= text.size() || !isalpha(text[i]))
        throw ParseError("expected variable name");
      std::string name;
      while (i < text.size() && (isalnum(text[i]) || text[i] == '_'))
        name += text[i++];
      Int exp = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        i++;
        skip_ws();
        std::string num;
        while (i < text.size() && isdigit(text[i])) num += text[i++];
        if (num.empty()) throw ParseError("expected exponent after '^'");
        exp = Int(num);
      }
      mono.push_back({name, exp});
      if (!idx.count(name)) {
        idx[name] = (int)vars.size();
        vars.push_back(name);
      }
      skip_ws();
      if (i < text.size() && text[i] == '*') { i++; continue; }
      more = i < text.size() && isalpha(text[i]);
    }
    monos.push_back(mono);
  }
  if (monos.size() != vars.size())
    throw ParseError("potential must have as many monomials as variables");
  Potential p;
  p.vars = vars;
  p.A = IMat((int)monos.size(), (int)vars.size());
  for (int r = 0; r < (int)monos.size(); r++)
    for (auto& t : monos[r]) p.A.at(r, idx[t.var]) += t.exp;
  return p;
}

std::string print_potential(const Potential& p) {
  std::ostringstream os;
  for (int r = 0; r < p.n(); r++) {
    if (r) os << " - ";
    bool any = false;
    for (int c = 0; c < p.n(); c++) {
      if (p.A.at(r, c) == 0) continue;
      if (any) os << "*";
      os << p.vars[c];
      if (p.A.at(r, c) != 1) os << "^" << p.A.at(r, c).get_str();
      any = true;
    }
    if (!any) os << "0";
  }
  return os.str();
}

Int Atom::group_order() const {
  Int prod = 1;
  for (auto& a : exps) prod *= a;
  if (kind == AtomKind::Loop)
    prod += (exps.size() % 2 == 0) ? Int(-1) : Int(1);
  return prod;
}

std::vector<Atom> atomic_decomposition(const Potential& p) {
  int n = p.n();
  // Each monomial row must be a*e_h (pure) or a*e_h + e_t with a >= 2.
  // Find the head assignment by backtracking over candidate heads.
  std::vector<std::vector<std::pair<int, int>>> options(n);  // (head, tail)
  for (int r = 0; r < n; r++) {
    std::vector<int> support;
    for (int c = 0; c < n; c++)
      if (p.A.at(r, c) != 0) support.push_back(c);
    if (support.empty()) throw NotAtomicSum("zero monomial");
    for (int h : support) {
      if (p.A.at(r, h) < 2) continue;
      bool ok = true;
      int tail = -1;
      for (int c : support) {
        if (c == h) continue;
        if (p.A.at(r, c) != 1 || tail != -1) { ok = false; break; }
        tail = c;
      }
      if (ok) options[r].emplace_back(h, tail);
    }
    if (options[r].empty())
      throw NotAtomicSum("monomial " + std::to_string(r) +
                         " is not of atomic form");
  }
  std::vector<int> head_of_row(n, -1), row_of_head(n, -1), tail_of_row(n, -1);
  std::function<bool(int)> assign = [&](int r) -> bool {
    if (r == n) return true;
    for (auto [h, t] : options[r]) {
      if (row_of_head[h] >= 0) continue;
      row_of_head[h] = r; head_of_row[r] = h; tail_of_row[r] = t;
      if (assign(r + 1)) return true;
      row_of_head[h] = -1;
    }
    return false;
  };
  if (!assign(0))
    throw NotAtomicSum("no consistent head assignment");
  // succ(v) = tail of the monomial with head v (or -1).
  std::vector<int> succ(n, -1);
  for (int r = 0; r < n; r++) succ[head_of_row[r]] = tail_of_row[r];
  std::vector<int> indeg(n, 0);
  for (int v = 0; v < n; v++)
    if (succ[v] >= 0) indeg[succ[v]]++;
  for (int v = 0; v < n; v++)
    if (indeg[v] > 1)
      throw NotAtomicSum("variable hit by two monomial tails");
  std::vector<bool> used(n, false);
  std::vector<Atom> atoms;
  // Chains start at in-degree 0 vertices.
  for (int v = 0; v < n; v++) {
    if (indeg[v] != 0 || used[v]) continue;
    std::vector<int> path;
    int u = v;
    while (u >= 0 && !used[u]) {
      used[u] = true;
      path.push_back(u);
      u = succ[u];
    }
    if (u >= 0) throw NotAtomicSum("chain runs into a cycle");
    Atom a;
    a.kind = path.size() == 1 ? AtomKind::Fermat : AtomKind::Chain;
    a.vars = path;
    for (int x : path) a.exps.push_back(p.A.at(row_of_head[x], x));
    atoms.push_back(a);
  }
  // Remaining vertices form loops.
  for (int v = 0; v < n; v++) {
    if (used[v]) continue;
    std::vector<int> cyc;
    int u = v;
    while (!used[u]) {
      used[u] = true;
      cyc.push_back(u);
      u = succ[u];
    }
    if (u != v) throw NotAtomicSum("malformed cycle");
    Atom a;
    a.kind = AtomKind::Loop;
    a.vars = cyc;
    for (int x : cyc) a.exps.push_back(p.A.at(row_of_head[x], x));
    atoms.push_back(a);
  }
  return atoms;
}

ChargeData charges(const Potential& p) {
  ChargeData cd;
  std::vector<Rat> e(p.n(), Rat(1));
  cd.q = solve_rational(p.A, e);
  cd.d = 1;
  for (auto& x : cd.q) cd.d = lcm_int(cd.d, x.get_den());
  Rat sum = 0;
  for (auto& x : cd.q) {
    Rat wi = x * Rat(cd.d);
    assert(wi.get_den() == 1);
    cd.w.push_back(wi.get_num());
    sum += x;
  }
  cd.calabi_yau = (sum == 1);
  return cd;
}

Potential transpose(const Potential& p) {
  Potential t;
  t.A = transpose(p.A);
  t.vars = p.vars;
  return t;
}

std::string shape_name(ShapeTag t) {
  switch (t) {
    case ShapeTag::Fermat: return "fermat";
    case ShapeTag::Chain: return "chain";
    case ShapeTag::Loop: return "loop";
    case ShapeTag::ChainFermat: return "chain+fermat";
    case ShapeTag::LoopFermat: return "loop+fermat";
  }
  return "?";
}

K3Shape shape_tag(const Potential& p) {
  if (p.n() != 4) throw NotK3Shape("need 4 variables");
  auto atoms = atomic_decomposition(p);
  int xvar = -1;
  for (auto& a : atoms)
    if (a.kind == AtomKind::Fermat && a.exps[0] == 2) {
      xvar = a.vars[0];
      break;
    }
  if (xvar < 0) throw NotK3Shape("no x^2 fermat atom");
  std::vector<const Atom*> rest;
  for (auto& a : atoms)
    if (!(a.kind == AtomKind::Fermat && a.vars[0] == xvar))
      rest.push_back(&a);
  K3Shape s;
  s.xvar = xvar;
  if (rest.size() == 3 && rest[0]->kind == AtomKind::Fermat &&
      rest[1]->kind == AtomKind::Fermat && rest[2]->kind == AtomKind::Fermat) {
    s.tag = ShapeTag::Fermat;
    return s;
  }
  if (rest.size() == 1 && rest[0]->vars.size() == 3) {
    s.tag = rest[0]->kind == AtomKind::Chain ? ShapeTag::Chain
                                             : ShapeTag::Loop;
    return s;
  }
  if (rest.size() == 2) {
    const Atom* two = rest[0]->vars.size() == 2 ? rest[0] : rest[1];
    const Atom* one = rest[0]->vars.size() == 2 ? rest[1] : rest[0];
    if (two->vars.size() == 2 && one->vars.size() == 1 &&
        one->kind == AtomKind::Fermat) {
      s.tag = two->kind == AtomKind::Chain ? ShapeTag::ChainFermat
                                           : ShapeTag::LoopFermat;
      return s;
    }
  }
  throw NotK3Shape("atoms do not fit any of the five shapes");
}

std::string canonical_key(const Potential& p, const std::vector<Int>& w) {
  K3Shape s = shape_tag(p);
  std::vector<int> others;
  for (int i = 0; i < 4; i++)
    if (i != s.xvar) others.push_back(i);
  std::string best;
  std::sort(others.begin(), others.end());
  std::vector<int> perm = others;
  do {
    bool weight_ok = true;
    for (int k = 0; k < 3; k++)
      if (w[perm[k]] != w[others[k]]) { weight_ok = false; break; }
    if (!weight_ok) continue;
    // column map: xvar->0, others[k] -> k+1 via perm
    std::vector<int> colmap(4, 0);
    colmap[s.xvar] = 0;
    for (int k = 0; k < 3; k++) colmap[perm[k]] = k + 1;
    std::vector<std::vector<Int>> rows;
    for (int r = 0; r < 4; r++) {
      std::vector<Int> row(4, Int(0));
      for (int c = 0; c < 4; c++) row[colmap[c]] = p.A.at(r, c);
      rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end());
    std::ostringstream os;
    for (auto& row : rows) {
      for (auto& x : row) os << x.get_str() << ",";
      os << ";";
    }
    std::string key = os.str();
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace k3
