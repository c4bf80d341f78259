#pragma once
// Catalog assembly: enumeration of K3 weight systems and their invertible
// potentials, per-row invariants, transpose cross-links, mirror
// verification, golden-table comparison, and table emission.

#include <optional>
#include <string>
#include <vector>

#include "k3bhcr/quotient.hpp"

namespace k3 {

struct IoError : std::runtime_error {
  explicit IoError(const std::string& m) : std::runtime_error(m) {}
};

// All normalized well-formed weight vectors (w1,w2,w3,w4) with
// w1 = w2 + w3 + w4, w2 >= w3 >= w4, d = 2 w1 <= d_max, admitting at
// least one invertible potential x^2 = f(y,z,w); sorted by (d, w).
std::vector<std::vector<Int>> enumerate_weights(const Int& d_max);

// All invertible potentials x^2 = f with the given weights (variables
// x,y,z,w carry w1..w4 in column order), one representative per
// weight-preserving permutation class, all atom exponents >= 2.
std::vector<Potential> potentials_for_weights(const std::vector<Int>& w);

// Canonical key of a potential class, independent of how the non-square
// columns are ordered (columns are first sorted by descending weight).
std::string catalog_key(const Potential& p);

struct CatalogEntry {
  std::vector<Int> w;   // (w1,w2,w3,w4), w2 >= w3 >= w4
  Int d = 0;
  Potential pot;        // columns x,y,z,w in weight order
  std::string text;     // f(y,z,w) rendered
  ShapeTag shape = ShapeTag::Fermat;
  std::string key;      // catalog_key(pot)
  int transpose_index = -1;  // entry whose class is the transpose
  std::vector<SingularityRecord> sing;
  std::optional<NikulinTriple> triple;  // absent when flagged
  Int sl = 0, j = 0;
  std::vector<Int> structure;  // invariant factors of SL/J
  bool starred = false;        // |SL| > |J|
  std::vector<std::string> flags;  // per-row computation failures
};

// One entry per (weights, potential class) with d <= d_max, sorted by
// shape (fermat, loop, loop+fermat, chain+fermat, chain), then (d, w, key).
// Row failures are collected in flags, never thrown.
std::vector<CatalogEntry> build_catalog(const Int& d_max);

// Table number 1..5 in the shape order above.
int shape_table(ShapeTag t);

struct MirrorRowReport {
  std::string label;
  bool ok = false;
  std::string detail;
};
struct MirrorSummary {
  std::vector<MirrorRowReport> rows;
  bool all_ok = true;
};

// Rows with SL = J: the transpose entry's triple must be (20-r, a, delta).
// Starred rows: mirror_pair_check over every intermediate subgroup.
MirrorSummary verify_mirrors(const std::vector<CatalogEntry>& cat);

struct GoldenRow {
  int table = 0;
  std::string no, xref;       // row label and transpose row label
  std::vector<Int> w;         // as printed (variable order of f)
  std::string f;              // f(y,z,w)
  NikulinTriple triple{0, 0, 0};
  Int sl = 0, j = 0;
  std::optional<std::vector<Int>> structure;
  std::string note;           // transcription corrections
};

std::vector<GoldenRow> load_golden(const std::string& path);

struct GoldenReport {
  int rows_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Two-way comparison: every golden row matches a catalog entry on
// (weights, potential class, triple, |SL|, |J|, structure) and the
// transpose linkage reproduces the golden cross-references; every catalog
// entry with d <= 66 is a golden row.
GoldenReport verify_golden(const std::vector<CatalogEntry>& cat,
                           const std::vector<GoldenRow>& golden);

// Find the catalog entry for a golden row label like "T5:3a".
int find_row(const std::vector<CatalogEntry>& cat,
             const std::vector<GoldenRow>& golden, const std::string& label);

std::string render_text(const std::vector<CatalogEntry>& cat);
std::string render_csv(const std::vector<CatalogEntry>& cat);
std::string render_json(const std::vector<CatalogEntry>& cat);
void write_file(const std::string& path, const std::string& content);

// One-line rendering "(15,10,3,2)  y^3+z^10+w^15  (10,4,0)  30  30  1".
std::string render_row(const CatalogEntry& e);

}  // namespace k3
