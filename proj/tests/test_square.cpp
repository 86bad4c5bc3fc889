#include <catch_amalgamated.hpp>

#include <set>

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

const BooleanBlock& first_block_with(const std::vector<BooleanBlock>& bs, ElementId p) {
  for (const auto& b : bs)
    if (b.contains(p)) return b;
  throw std::logic_error("no block");
}

// true when the four vertex values differ between some two valuations of W^◇
bool vertices_vary(const SquareInstance& inst) {
  std::set<std::array<bool, 4>> seen;
  const auto& x = inst.vertices();
  for (const auto& v : inst.valuations())
    seen.insert({v(x.box_p), v(x.not_diamond_p), v(x.diamond_p), v(x.diamond_not_p)});
  return seen.size() > 1;
}

}  // namespace

TEST_CASE("square in MO2") {
  const ModalFrame F(mo(2));
  const auto& L = F.lattice();
  const ElementId a = id(L, "a1");
  const auto blocks = enumerate_blocks(L);
  const SquareInstance inst(F, a, first_block_with(blocks, a));
  CHECK(inst.vertices().box_p == L.bottom());
  CHECK(inst.vertices().not_diamond_p == L.bottom());
  CHECK(inst.vertices().diamond_p == L.top());
  CHECK(inst.vertices().diamond_not_p == L.top());

  const auto contraries = check_contraries(inst);
  CHECK(contraries.holds);
  REQUIRE_FALSE(contraries.witnesses.empty());
  CHECK_FALSE(contraries.witnesses[0].values[0]);
  CHECK_FALSE(contraries.witnesses[0].values[1]);

  const auto sub = check_subcontraries(inst);
  CHECK(sub.holds);
  REQUIRE_FALSE(sub.witnesses.empty());
  CHECK(sub.witnesses[0].values[2]);
  CHECK(sub.witnesses[0].values[3]);

  for (const auto& v : inst.valuations()) {
    CHECK_FALSE(v(inst.vertices().box_p));
    CHECK(v(inst.vertices().diamond_p));
  }
  const auto [left, right] = check_subalterns(inst);
  CHECK(left.holds);
  CHECK(right.holds);
  const auto [d1, d2] = check_contradictories(inst);
  CHECK(d1.holds);
  CHECK(d2.holds);

  const auto report = square_report(inst);
  CHECK_FALSE(report.collapsed);
  CHECK(report.all_hold());
  CHECK(report.possibility_overlap);
}

TEST_CASE("square in 2 x MO2 has nonconstant witnesses") {
  const ModalFrame F(product(boolean_power(1), mo(2)));
  const auto& L = F.lattice();
  const ElementId p = id(L, "(1,a1)");
  const auto blocks = enumerate_blocks(L);
  const SquareInstance inst(F, p, first_block_with(blocks, p));
  CHECK_FALSE(inst.central());
  // W^◇ is the block 2 x {0, a1, ¬a1, 1} itself, with atoms (1,0), (0,a1), (0,¬a1)
  CHECK(inst.valuations().size() == 3);
  const auto report = square_report(inst);
  CHECK(report.all_hold());
  CHECK_FALSE(report.collapsed);
  CHECK(vertices_vary(inst));
  CHECK_FALSE(report.contraries.witnesses.empty());
  CHECK_FALSE(report.subcontraries.witnesses.empty());

  // the subaltern implication is exercised: some valuation makes ¬◇¬p true
  bool superaltern_true = false;
  for (const auto& v : inst.valuations()) superaltern_true = superaltern_true || v(inst.vertices().box_p);
  CHECK(superaltern_true);
}

TEST_CASE("central propositions collapse the square") {
  const ModalFrame F(boolean_power(3));
  const auto& L = F.lattice();
  const ElementId x = id(L, "a1");
  const auto blocks = enumerate_blocks(L);
  const auto r = square_report(F, x, blocks[0]);
  CHECK(r.collapsed);
  CHECK(r.all_hold());
  CHECK(r.vertices.diamond_p == x);
  CHECK(r.vertices.box_p == x);
  CHECK(r.vertices.not_diamond_p == L.ortho(x));
  CHECK(r.vertices.diamond_not_p == L.ortho(x));
  CHECK(r.contraries.degenerate);

  const ModalFrame B(boolean_power(2));
  const auto rb = square_report(B, id(B.lattice(), "a1"), enumerate_blocks(B.lattice())[0]);
  CHECK(rb.collapsed);
  CHECK(rb.subalterns_left.holds);
}

TEST_CASE("propositions outside the chosen block are rejected") {
  const ModalFrame F(mo(2));
  const auto& L = F.lattice();
  const auto blocks = enumerate_blocks(L);
  CHECK_THROWS_AS(SquareInstance(F, id(L, "a2"), blocks[0]), std::invalid_argument);
}

TEST_CASE("witness valuations respect the homomorphism laws on the expanded context") {
  for (const auto& e : everything()) {
    const ModalFrame F(e.lattice);
    const auto blocks = enumerate_blocks(e.lattice);
    for (ElementId p = 0; p < e.lattice.size(); p += 3) {
      const SquareInstance inst(F, p, first_block_with(blocks, p));
      const auto r = square_report(inst);
      for (const Verdict* v : r.verdicts())
        for (const auto& w : v->witnesses) {
          const Valuation val(inst.expanded().carrier, w.true_atom);
          INFO(e.name << " p=" << e.lattice.label(p));
          CHECK_FALSE(homomorphism_violation(inst.expanded().carrier, [&](ElementId x) { return val(x); }));
        }
    }
  }
}

TEST_CASE("full square sweep over the catalog and products") {
  std::size_t pairs = 0;
  for (const auto& e : everything()) {
    INFO(e.name);
    const auto reports = square_sweep(e.lattice, 2);
    for (const auto& r : reports) {
      INFO("p = " << r.p_label);
      CHECK(r.all_hold());
      if (!r.collapsed) {
        CHECK_FALSE(r.contraries.witnesses.empty());
        CHECK_FALSE(r.subcontraries.witnesses.empty());
        CHECK(r.possibility_overlap);
      } else {
        CHECK(r.vertices.diamond_p == r.p);
      }
    }
    pairs += reports.size();
  }
  CHECK(pairs > 1000);
}

TEST_CASE("threaded sweeps match the sequential order") {
  const auto L = product(mo(2), mo(2));
  const auto a = square_sweep(L, 1);
  const auto b = square_sweep(L, 5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].p == b[i].p);
    CHECK(a[i].block_atoms == b[i].block_atoms);
  }
}
