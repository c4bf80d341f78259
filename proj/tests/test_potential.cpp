#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3bhcr/potential.hpp"

using namespace k3;

TEST_CASE("parse and print round trip") {
  auto p = parse_potential("x^2 - y^3*z - z^9*w - w^10");
  REQUIRE(p.n() == 4);
  CHECK(p.vars == std::vector<std::string>{"x", "y", "z", "w"});
  CHECK(p.A.at(1, 1) == 3);
  CHECK(p.A.at(1, 2) == 1);
  CHECK(print_potential(p) == "x^2 - y^3*z - z^9*w - w^10");
  auto p2 = parse_potential(print_potential(p));
  CHECK(p2.A == p.A);
}

TEST_CASE("parse with implicit '*' and '+' separators") {
  auto p = parse_potential("x^2 + y^3 z + z^9 w + w^10",
                           {"x", "y", "z", "w"});
  CHECK(p.A.at(2, 3) == 1);
  CHECK(p.A.at(3, 3) == 10);
}

TEST_CASE("parse errors") {
  // monomial count must equal variable count
  CHECK_THROWS_AS(parse_potential("x^2 - y^3 - x^4"), ParseError);
  CHECK_THROWS_AS(parse_potential("x^ - y^3*z - z^2"), ParseError);
}

TEST_CASE("atomic decomposition: fermat sum") {
  auto p = parse_potential("x^2 - y^4 - z^6 - w^12");
  auto atoms = atomic_decomposition(p);
  REQUIRE(atoms.size() == 4);
  for (auto& a : atoms) CHECK(a.kind == AtomKind::Fermat);
  CHECK(atoms[0].group_order() == 2);
  CHECK(atoms[3].group_order() == 12);
}

TEST_CASE("atomic decomposition: chain") {
  auto p = parse_potential("x^2 - y^3*z - z^9*w - w^10");
  auto atoms = atomic_decomposition(p);
  REQUIRE(atoms.size() == 2);
  const Atom* chain = atoms[0].kind == AtomKind::Chain ? &atoms[0] : &atoms[1];
  REQUIRE(chain->kind == AtomKind::Chain);
  CHECK(chain->vars == std::vector<int>{1, 2, 3});
  CHECK(chain->exps == std::vector<Int>{3, 9, 10});
  CHECK(chain->group_order() == 270);
}

TEST_CASE("atomic decomposition: loop") {
  auto p = parse_potential("x^2 - y^3*z - z^9*w - w^10*y");
  auto atoms = atomic_decomposition(p);
  REQUIRE(atoms.size() == 2);
  const Atom* loop = atoms[0].kind == AtomKind::Loop ? &atoms[0] : &atoms[1];
  REQUIRE(loop->kind == AtomKind::Loop);
  CHECK(loop->vars.size() == 3);
  CHECK(loop->group_order() == 3 * 9 * 10 + 1);
}

TEST_CASE("atomic decomposition rejects non-atomic sums") {
  CHECK_THROWS_AS(atomic_decomposition(parse_potential("x^2 - y^2*z^2 - z^3 - w^4")),
                  NotAtomicSum);
  CHECK_THROWS_AS(atomic_decomposition(parse_potential("x^2 - y^3*z*w - z^3 - w^4")),
                  NotAtomicSum);
}

TEST_CASE("charges and weights") {
  auto p = parse_potential("x^2 - y^6 - z^6 - w^6");
  auto cd = charges(p);
  CHECK(cd.q == std::vector<Rat>{Rat(1, 2), Rat(1, 6), Rat(1, 6), Rat(1, 6)});
  CHECK(cd.d == 6);
  CHECK(cd.w == std::vector<Int>{3, 1, 1, 1});
  CHECK(cd.calabi_yau);
}

TEST_CASE("charges of a chain potential") {
  auto p = parse_potential("x^2 - y^3*z - z^9*w - w^10");
  auto cd = charges(p);
  CHECK(cd.d == 10);
  CHECK(cd.w == std::vector<Int>{5, 3, 1, 1});
  CHECK(cd.calabi_yau);
}

TEST_CASE("transpose") {
  auto p = parse_potential("x^2 - y^3*z - z^9*w - w^10");
  auto t = transpose(p);
  CHECK(t.A.at(2, 1) == 1);
  CHECK(t.A.at(1, 2) == 0);
  CHECK(print_potential(t) == "x^2 - y^3 - y*z^9 - z*w^10");
  auto tt = transpose(t);
  CHECK(tt.A == p.A);
}

TEST_CASE("shape classification") {
  CHECK(shape_tag(parse_potential("x^2 - y^4 - z^6 - w^12")).tag ==
        ShapeTag::Fermat);
  CHECK(shape_tag(parse_potential("x^2 - y^3*z - z^9*w - w^10")).tag ==
        ShapeTag::Chain);
  CHECK(shape_tag(parse_potential("x^2 - y^3*z - z^9*w - w^10*y")).tag ==
        ShapeTag::Loop);
  CHECK(shape_tag(parse_potential("x^2 - y^3*z - z^8 - w^4")).tag ==
        ShapeTag::ChainFermat);
  CHECK(shape_tag(parse_potential("x^2 - y^3*z - z^5*y - w^4")).tag ==
        ShapeTag::LoopFermat);
  CHECK(shape_tag(parse_potential("x^2 - y^3*z - z^8 - w^4")).xvar == 0);
  CHECK_THROWS_AS(shape_tag(parse_potential("x^3 - y^3 - z^3 - w^3")),
                  NotK3Shape);
}

TEST_CASE("canonical_key identifies relabelings") {
  auto p1 = parse_potential("x^2 - y^6 - z^6 - w^6");
  auto p2 = parse_potential("x^2 - w^6 - y^6 - z^6", {"x", "w", "y", "z"});
  std::vector<Int> w = {3, 1, 1, 1};
  CHECK(canonical_key(p1, w) == canonical_key(p2, w));
  // chain y->z vs chain z->y with equal weights: same orbit
  auto c1 = parse_potential("x^2 - y^4*z - z^4*y - w^3");
  auto c2 = parse_potential("x^2 - z^4*y - y^4*z - w^3");
  auto cd = charges(c1);
  CHECK(canonical_key(c1, cd.w) == canonical_key(c2, cd.w));
}
