// k3bhcr: classification of K3 double covers x^2 = f(y,z,w) with invertible
// f, their diagonal symmetry quotients, and mirror verification.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "k3bhcr/catalog.hpp"

using namespace k3;

namespace {

std::string data_file(const std::string& name) {
  return data_dir() + "/" + name;
}

void print_entry(const CatalogEntry& e) {
  std::cout << "table " << shape_table(e.shape) << " ("
            << shape_name(e.shape) << ")\n";
  std::cout << "row: " << render_row(e) << "\n";
}

int cmd_enumerate(long dmax) {
  for (const auto& w : enumerate_weights(Int(dmax))) {
    std::cout << "(";
    for (size_t i = 0; i < w.size(); ++i)
      std::cout << (i ? "," : "") << w[i].get_str();
    std::cout << ")  d=" << Int(2 * w[0]).get_str();
    auto ps = potentials_for_weights(w);
    std::cout << "  potentials=" << ps.size() << "\n";
  }
  return 0;
}

int cmd_analyze(const std::string& text) {
  Potential p = parse_potential(text);
  WeightSystem ws = weight_system(p);
  K3Shape shape = shape_tag(p);
  std::cout << "potential: " << print_potential(p) << "\n";
  std::cout << "shape: " << shape_name(shape.tag) << "\n";
  std::cout << "weights: (";
  for (size_t i = 0; i < ws.w.size(); ++i)
    std::cout << (i ? "," : "") << ws.w[i].get_str();
  std::cout << ")  degree " << ws.d.get_str() << "\n";
  std::cout << "fixed curve genus: "
            << curve_genus(ws.d, ws.w[1], ws.w[2], ws.w[3]).get_str() << "\n";
  std::cout << "singular points:";
  auto sing = hypersurface_singularities(p, ws);
  if (sing.empty()) std::cout << " none";
  for (const auto& s : sing) {
    std::cout << "  " << s.multiplicity.get_str() << "xA_" << s.k.get_str();
    if (s.orbit == IotaOrbit::SwappedPair) std::cout << " (swapped pair)";
  }
  std::cout << "\n";
  DiagonalSubgroup sl = sl_group(p), jg = j_group(p);
  std::cout << "|SL| = " << sl.order.get_str()
            << ", |J| = " << jg.order.get_str() << ", SL/J = ";
  auto st = quotient_structure(sl, jg);
  if (st.empty()) std::cout << "1";
  for (size_t i = 0; i < st.size(); ++i)
    std::cout << (i ? " x " : "") << "Z/" << st[i].get_str();
  std::cout << "\n";
  std::cout << "closed-form |SL| = " << sl_order_closed_form(p).get_str()
            << "\n";
  std::cout << "triple: " << print_triple(nikulin_triple(p, ws)) << "\n";
  Potential pt = transpose(p);
  WeightSystem wst = weight_system(pt);
  std::cout << "transpose: " << print_potential(pt) << "  weights (";
  for (size_t i = 0; i < wst.w.size(); ++i)
    std::cout << (i ? "," : "") << wst.w[i].get_str();
  std::cout << ")\n";
  return 0;
}

int cmd_mirror_check(const std::string& row) {
  auto cat = build_catalog(66);
  auto golden = load_golden(data_file("tables_1_5.json"));
  const CatalogEntry& e = cat[find_row(cat, golden, row)];
  print_entry(e);
  WeightSystem ws = weight_system(e.pot);
  bool all_ok = true;
  if (!e.starred) {
    NikulinTriple mine = *e.triple;
    const CatalogEntry& t = cat.at(e.transpose_index);
    NikulinTriple want = dv_mirror(mine);
    bool ok = t.triple && *t.triple == want;
    all_ok = ok;
    std::cout << print_triple(mine) << " <-> "
              << (t.triple ? print_triple(*t.triple) : "?") << "  "
              << (ok ? "ok" : "MISMATCH") << "\n";
  } else {
    for (const DiagonalSubgroup& g : intermediate_subgroups(e.pot)) {
      auto st = quotient_structure(g, j_group(e.pot));
      std::cout << "G/J = ";
      if (st.empty()) std::cout << "1";
      for (size_t i = 0; i < st.size(); ++i)
        std::cout << (i ? " x " : "") << "Z/" << st[i].get_str();
      try {
        MirrorReport rep = mirror_pair_check(e.pot, ws, g);
        std::cout << "  " << print_triple(rep.triple) << " <-> "
                  << print_triple(rep.transpose_triple) << "  ok\n";
      } catch (const std::exception& ex) {
        all_ok = false;
        std::cout << "  FAIL: " << ex.what() << "\n";
      }
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_quotients(const std::string& row) {
  auto cat = build_catalog(66);
  auto golden = load_golden(data_file("tables_1_5.json"));
  const CatalogEntry& e = cat[find_row(cat, golden, row)];
  print_entry(e);
  WeightSystem ws = weight_system(e.pot);
  for (const DiagonalSubgroup& g : intermediate_subgroups(e.pot)) {
    auto st = quotient_structure(g, j_group(e.pot));
    std::cout << "G/J = ";
    if (st.empty()) std::cout << "1";
    for (size_t i = 0; i < st.size(); ++i)
      std::cout << (i ? " x " : "") << "Z/" << st[i].get_str();
    QuotientInventory inv = quotient_singularities(e.pot, ws, g);
    std::cout << "  singular points:";
    if (inv.points.empty()) std::cout << " none";
    for (size_t i = 0; i < inv.points.size(); ++i)
      if (inv.points[i].iota_partner >= (int)i)
        std::cout << " A_" << inv.points[i].k.get_str();
    std::cout << "  genus " << inv.genus_down.get_str();
    std::cout << "  triple " << print_triple(quotient_triple(e.pot, ws, g))
              << "\n";
  }
  return 0;
}

int cmd_emit(const std::string& format, const std::string& out) {
  auto cat = build_catalog(66);
  if (format == "csv")
    write_file(out + "/catalog.csv", render_csv(cat));
  else if (format == "json")
    write_file(out + "/catalog.json", render_json(cat));
  else
    write_file(out + "/catalog.txt", render_text(cat));
  std::cout << "wrote " << out << "/catalog." << format << "\n";
  return 0;
}

int cmd_verify(const std::string& golden_path) {
  auto cat = build_catalog(66);
  auto golden = load_golden(golden_path);
  GoldenReport rep = verify_golden(cat, golden);
  std::cout << "golden rows checked: " << rep.rows_checked << "\n";
  for (const auto& f : rep.failures) std::cout << "  FAIL " << f << "\n";
  MirrorSummary sum = verify_mirrors(cat);
  int ok = 0;
  for (const auto& r : sum.rows) {
    if (r.ok)
      ++ok;
    else
      std::cout << "  FAIL " << r.label << ": " << r.detail << "\n";
  }
  std::cout << "mirror rows ok: " << ok << "/" << sum.rows.size() << "\n";
  bool pass = rep.ok() && sum.all_ok;
  std::cout << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K3 double covers of invertible potentials: symmetry groups, "
               "Nikulin invariants, quotients, and mirror pairs"};
  app.require_subcommand(1);

  long dmax = 66;
  auto* enumerate = app.add_subcommand("enumerate", "list K3 weight systems");
  enumerate->add_option("--dmax", dmax, "largest degree");

  std::string potential_text;
  auto* analyze = app.add_subcommand("analyze", "analyze one potential");
  analyze->add_option("potential", potential_text, "e.g. \"x^2+y^3+z^10+w^15\"")
      ->required();

  std::string row;
  auto* mirror = app.add_subcommand("mirror-check", "verify one table row");
  mirror->add_option("--row", row, "row label, e.g. T5:3a")->required();

  std::string qrow;
  auto* quot = app.add_subcommand("quotients", "quotient ladder of one row");
  quot->add_option("--row", qrow, "row label, e.g. T1:1")->required();

  std::string format = "text", outdir = ".";
  auto* emit = app.add_subcommand("emit-tables", "write the catalog");
  emit->add_option("--format", format, "csv|json|text")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  emit->add_option("--out", outdir, "output directory");

  std::string golden_path;
  auto* verify = app.add_subcommand("verify", "golden and mirror verification");
  verify->add_option("--golden", golden_path, "golden table file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(enumerate)) return cmd_enumerate(dmax);
    if (app.got_subcommand(analyze)) return cmd_analyze(potential_text);
    if (app.got_subcommand(mirror)) return cmd_mirror_check(row);
    if (app.got_subcommand(quot)) return cmd_quotients(qrow);
    if (app.got_subcommand(emit)) return cmd_emit(format, outdir);
    if (app.got_subcommand(verify)) return cmd_verify(golden_path);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
