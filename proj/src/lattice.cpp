#include "k3bhcr/lattice.hpp"

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace k3 {

IntegralLattice direct_sum(const IntegralLattice& a,
                           const IntegralLattice& b) {
  int n = a.rank(), m = b.rank();
  IntegralLattice out;
  out.gram = IMat(n + m, n + m);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) out.gram.at(i, j) = a.gram.at(i, j);
  for (int i = 0; i < m; i++)
    for (int j = 0; j < m; j++) out.gram.at(n + i, n + j) = b.gram.at(i, j);
  return out;
}

IntegralLattice diagonal_lattice(const std::vector<Int>& entries) {
  IntegralLattice out;
  out.gram = IMat((int)entries.size(), (int)entries.size());
  for (int i = 0; i < (int)entries.size(); i++)
    out.gram.at(i, i) = entries[i];
  return out;
}

std::vector<Int> discriminant_group(const IntegralLattice& l) {
  if (det(l.gram) == 0) throw Degenerate("degenerate lattice");
  return invariant_factors(l.gram);
}

int two_elementary_a(const IntegralLattice& l) {
  auto inv = discriminant_group(l);
  for (auto& d : inv)
    if (d != 2)
      throw NotTwoElementary("invariant factor " + d.get_str());
  return (int)inv.size();
}

int delta(const IntegralLattice& l) {
  two_elementary_a(l);
  QMat inv = invert(l.gram);
  for (int i = 0; i < inv.rows; i++) {
    if (inv.at(i, i).get_den() != 1) return 1;
    for (int j = i + 1; j < inv.cols; j++) {
      Rat twice = inv.at(i, j) * 2;
      if (twice.get_den() != 1) return 1;
    }
  }
  return 0;
}

IntegralLattice glue_half_classes(const IntegralLattice& l,
                                  const std::vector<std::vector<Int>>& vs) {
  int n = l.rank();
  std::vector<std::vector<Rat>> gens;
  for (auto& v : vs) {
    std::vector<Rat> half(n);
    for (int i = 0; i < n; i++) half[i] = Rat(v[i]) / 2;
    gens.push_back(half);
  }
  QMat basis = lattice_with_generators(n, gens);
  QMat g = mul(mul(transpose(basis), to_q(l.gram)), basis);
  IntegralLattice out;
  out.gram = IMat(n, n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      if (g.at(i, j).get_den() != 1)
        throw NotIntegralOverlattice("pairing " + g.at(i, j).get_str());
      out.gram.at(i, j) = g.at(i, j).get_num();
    }
  return out;
}

IntegralLattice twist(const IntegralLattice& l, const Int& m) {
  IntegralLattice out = l;
  for (auto& x : out.gram.a) x *= m;
  return out;
}

std::pair<int, int> signature(const IntegralLattice& l) {
  int n = l.rank();
  QMat g = to_q(l.gram);
  int pos = 0, neg = 0;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; step++) {
    int piv = -1;
    for (int i = 0; i < n && piv < 0; i++)
      if (!done[i] && g.at(i, i) != 0) piv = i;
    if (piv < 0) {
      // all remaining diagonal entries vanish; fold an off-diagonal one in
      int a = -1, b = -1;
      for (int i = 0; i < n && a < 0; i++)
        if (!done[i])
          for (int j = 0; j < n && a < 0; j++)
            if (!done[j] && j != i && g.at(i, j) != 0) {
              a = i;
              b = j;
            }
      if (a < 0) throw Degenerate("degenerate lattice");
      for (int k = 0; k < n; k++) g.at(a, k) += g.at(b, k);
      for (int k = 0; k < n; k++) g.at(k, a) += g.at(k, b);
      piv = a;
    }
    Rat d = g.at(piv, piv);
    if (d > 0)
      pos++;
    else
      neg++;
    done[piv] = true;
    for (int i = 0; i < n; i++) {
      if (done[i] || g.at(i, piv) == 0) continue;
      Rat f = g.at(i, piv) / d;
      for (int k = 0; k < n; k++) g.at(i, k) -= f * g.at(piv, k);
      for (int k = 0; k < n; k++) g.at(k, i) -= f * g.at(k, piv);
    }
  }
  return {pos, neg};
}

std::string print_triple(const NikulinTriple& t) {
  std::ostringstream os;
  os << "(" << t.r << "," << t.a << "," << t.delta << ")";
  return os.str();
}

std::string data_dir() {
  const char* env = std::getenv("K3BHCR_DATA_DIR");
  return env && *env ? env : "data";
}

const std::vector<NikulinTriple>& admissible_triples() {
  static std::vector<NikulinTriple> cache = [] {
    std::ifstream in(data_dir() + "/nikulin_triples.json");
    if (!in) throw std::runtime_error("cannot open nikulin_triples.json");
    nlohmann::json j;
    in >> j;
    std::vector<NikulinTriple> out;
    for (auto& e : j["triples"]) {
      NikulinTriple t;
      t.r = e["r"];
      t.a = e["a"];
      t.delta = e["delta"];
      // transcription sanity: genus and curve count are non-negative ints
      if ((22 - t.r - t.a) % 2 != 0 || (t.r - t.a) % 2 != 0 ||
          22 - t.r - t.a < 0 || t.r < t.a)
        throw std::runtime_error("inadmissible triple in data file");
      out.push_back(t);
    }
    return out;
  }();
  return cache;
}

bool is_admissible(const NikulinTriple& t) {
  for (auto& x : admissible_triples())
    if (x == t) return true;
  return false;
}

std::vector<int> admissible_deltas(int r, int a) {
  std::vector<int> out;
  for (auto& x : admissible_triples())
    if (x.r == r && x.a == a) out.push_back(x.delta);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace k3
