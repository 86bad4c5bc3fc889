#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace omlkit;

namespace {

std::vector<CatalogEntry> everything() {
  auto all = standard_catalog();
  for (auto& p : catalog_products(64)) all.push_back(std::move(p));
  return all;
}

ElementId id(const OrthoLattice& L, std::string_view name) {
  auto x = L.find(name);
  REQUIRE(x.has_value());
  return *x;
}

std::vector<std::string> names(const OrthoLattice& L, const std::vector<ElementId>& ids) {
  std::vector<std::string> out;
  for (ElementId x : ids) out.push_back(L.label(x));
  return out;
}

}  // namespace

TEST_CASE("distributive triples") {
  const auto B = boolean_power(2);
  for (ElementId a = 0; a < 4; ++a)
    for (ElementId b = 0; b < 4; ++b)
      for (ElementId c = 0; c < 4; ++c) CHECK(t_triple(B, a, b, c));

  const auto M = mo(2);
  const ElementId a = id(M, "a1"), na = id(M, "~a1"), b = id(M, "a2");
  CHECK(d_triple(M, a, b, M.top()));
  CHECK(d_star_triple(M, a, b, M.top()));
  // repeating an argument keeps every permutation distributive
  CHECK(t_triple(M, a, b, a));
  CHECK_FALSE(t_triple(M, a, b, na));
  CHECK_FALSE(d_triple(M, a, b, na));
}

TEST_CASE("center on named lattices") {
  CHECK(names(mo(2), center(mo(2)).members) == std::vector<std::string>{"0", "1"});
  CHECK(names(mo(3), center_fast(mo(3)).members) == std::vector<std::string>{"0", "1"});
  CHECK(center(boolean_power(3)).members.size() == 8);
  const auto P = product(boolean_power(1), mo(2));
  CHECK(names(P, center(P).members) == std::vector<std::string>{"(0,0)", "(0,1)", "(1,0)", "(1,1)"});
  CHECK(center_fast(product(mo(2), mo(2))).members.size() == 4);
  for (int n : {2, 3, 4}) CHECK(center(mo(n)).members.size() == 2);
}

TEST_CASE("both center algorithms and the commutation oracle agree") {
  for (const auto& e : everything()) {
    INFO(e.name);
    const auto slow = center(e.lattice);
    CHECK(slow.members == center_fast(e.lattice).members);
    CHECK(slow.members == oracle::center(e.lattice));
    CHECK(is_boolean(slow.as_subalgebra()));
  }
}

TEST_CASE("center of a product is the product of centers") {
  const auto base = standard_catalog();
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = 0; j < base.size(); ++j) {
      const auto& A = base[i].lattice;
      const auto& B = base[j].lattice;
      if (A.size() * B.size() > 64) continue;
      const auto P = product(A, B);
      std::vector<ElementId> expected;
      for (ElementId x : center(A).members)
        for (ElementId y : center(B).members) expected.push_back(static_cast<ElementId>(x * B.size() + y));
      std::sort(expected.begin(), expected.end());
      INFO(base[i].name << " * " << base[j].name);
      CHECK(center(P).members == expected);
    }
}

TEST_CASE("diamond and box on named elements") {
  const ModalFrame M(mo(2));
  const auto& L = M.lattice();
  CHECK(M.diamond(id(L, "a1")) == L.top());
  CHECK(M.box(id(L, "a1")) == L.bottom());
  CHECK(possibility_space(M).members() == std::vector<ElementId>{L.bottom(), L.top()});

  const ModalFrame B(boolean_power(2));
  for (ElementId x = 0; x < 4; ++x) {
    CHECK(diamond(B, x) == x);
    CHECK(box(B, x) == x);
  }
  CHECK(ModalFrame(boolean_power(3)).possibility_space().size() == 8);

  const ModalFrame P(product(boolean_power(1), mo(2)));
  const auto& PL = P.lattice();
  CHECK(PL.label(P.diamond(id(PL, "(1,a1)"))) == "(1,1)");
  CHECK(PL.label(P.box(id(PL, "(1,a1)"))) == "(1,0)");
  CHECK(names(PL, P.possibility_space().members()) ==
        std::vector<std::string>{"(0,0)", "(0,1)", "(1,0)", "(1,1)"});
}

TEST_CASE("modal laws hold for every element") {
  for (const auto& e : everything()) {
    INFO(e.name);
    const ModalFrame F(e.lattice);
    const auto& L = F.lattice();
    const auto Z = oracle::center(L);
    for (ElementId p = 0; p < L.size(); ++p) {
      const ElementId d = F.diamond(p);
      REQUIRE(d == oracle::diamond(L, Z, p));
      REQUIRE(L.leq(p, d));
      REQUIRE(F.is_central(d));
      REQUIRE(F.diamond(d) == d);
      if (F.is_central(p)) REQUIRE(d == p);
      REQUIRE(L.leq(F.box(p), p));
      REQUIRE(F.is_central(F.box(p)));
      for (ElementId q = 0; q < L.size(); ++q)
        if (L.leq(p, q)) REQUIRE(L.leq(d, F.diamond(q)));
    }
    for (ElementId x : F.possibility_space().members()) REQUIRE(F.is_central(x));
  }
}

TEST_CASE("modal frames need an orthomodular lattice") {
  CHECK_THROWS_AS(ModalFrame(benzene_o6()), std::invalid_argument);
}

TEST_CASE("expanded contexts") {
  const ModalFrame M(mo(2));
  const auto& L = M.lattice();
  const BooleanBlock W(Subalgebra(L, {0, id(L, "a1"), id(L, "~a1"), L.top()}));
  CHECK(expanded_context(M, W).carrier.members() == W.members());

  const ModalFrame B(boolean_power(2));
  const BooleanBlock trivial(Subalgebra(B.lattice(), {0, 3}));
  CHECK(expanded_context(B, trivial).carrier.size() == 4);

  const ModalFrame P(product(boolean_power(1), mo(2)));
  const auto& PL = P.lattice();
  const ElementId p = id(PL, "(1,a1)");
  const auto blocks = enumerate_blocks(PL);
  for (const auto& blk : blocks) {
    if (!blk.contains(p)) continue;
    const auto ex = expanded_context(P, blk);
    for (ElementId z : P.center().members) CHECK(ex.carrier.contains(z));
    for (ElementId x : blk.members()) CHECK(ex.carrier.contains(x));
    CHECK(is_boolean(ex.carrier.carrier()));
  }
}

TEST_CASE("every expanded context of every maximal block is Boolean") {
  for (const auto& e : everything()) {
    INFO(e.name);
    const ModalFrame F(e.lattice);
    for (const auto& W : enumerate_blocks(e.lattice)) CHECK_NOTHROW(expanded_context(F, W));
  }
}

TEST_CASE("blocks of another lattice cannot be expanded") {
  const ModalFrame M(mo(2));
  const BooleanBlock foreign(Subalgebra(mo(2), {0, 1, 2, 5}));
  CHECK_THROWS_AS(expanded_context(M, foreign), std::invalid_argument);
}
