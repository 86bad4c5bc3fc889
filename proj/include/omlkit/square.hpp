#pragma once

// The modal square of opposition on the vertices ¬◇¬p, ¬◇p, ◇p, ◇¬p,
// checked by enumerating every two-valued homomorphism of the classically
// expanded context W^◇ (a finite Boolean algebra, so the check is complete).

#include <algorithm>
#include <array>
#include <future>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "block.hpp"
#include "modal.hpp"
#include "valuations.hpp"

namespace omlkit {

struct SquareVertices {
  ElementId box_p;          // ¬◇¬p
  ElementId not_diamond_p;  // ¬◇p
  ElementId diamond_p;      // ◇p
  ElementId diamond_not_p;  // ◇¬p
};

class SquareInstance {
public:
  SquareInstance(ModalFrame frame, ElementId p, BooleanBlock W)
      : frame_(std::move(frame)), p_(p), block_(std::move(W)),
        expanded_(init_expanded(frame_, p_, block_)) {
    const auto& L = frame_.lattice();
    vertices_ = {frame_.box(p_), L.ortho(frame_.diamond(p_)), frame_.diamond(p_),
                 frame_.diamond(L.ortho(p_))};
    valuations_ = enumerate_valuations(expanded_.carrier);
  }

  const ModalFrame& frame() const { return frame_; }
  ElementId p() const { return p_; }
  const BooleanBlock& block() const { return block_; }
  const ExpandedContext& expanded() const { return expanded_; }
  const SquareVertices& vertices() const { return vertices_; }
  const std::vector<Valuation>& valuations() const { return valuations_; }
  bool central() const { return frame_.is_central(p_); }

private:
  static ExpandedContext init_expanded(const ModalFrame& frame, ElementId p, const BooleanBlock& W) {
    if (p >= frame.lattice().size()) throw std::invalid_argument("proposition out of range");
    if (!W.contains(p))
      throw std::invalid_argument("proposition " + frame.lattice().label(p) +
                                  " is not in the chosen block");
    return expanded_context(frame, W);
  }

  ModalFrame frame_;
  ElementId p_;
  BooleanBlock block_;
  ExpandedContext expanded_;
  SquareVertices vertices_{};
  std::vector<Valuation> valuations_;
};

/// A valuation of W^◇ (named by its true atom) and what it gives the four
/// vertices, in the order ¬◇¬p, ¬◇p, ◇p, ◇¬p.
struct SquareWitness {
  ElementId true_atom;
  std::array<bool, 4> values;
};

struct Verdict {
  std::string relation;
  bool holds = false;
  bool degenerate = false;  // central p: the relation collapses onto {p, ¬p}
  std::vector<SquareWitness> witnesses{};
  std::string note{};
};

namespace detail {

inline SquareWitness witness_of(const SquareInstance& inst, const Valuation& v) {
  const auto& x = inst.vertices();
  return SquareWitness{v.true_atom(),
                       {v(x.box_p), v(x.not_diamond_p), v(x.diamond_p), v(x.diamond_not_p)}};
}

// "cannot both be <forbidden>" universally, and "can both be <wanted>" by a
// recorded witness unless p is central.
inline Verdict opposition(const SquareInstance& inst, std::string name, ElementId a, ElementId b,
                          bool forbidden, bool wanted) {
  Verdict out{std::move(name)};
  out.degenerate = inst.central();
  bool universal = true;
  bool found = false;
  for (const auto& v : inst.valuations()) {
    if (v(a) == forbidden && v(b) == forbidden) {
      universal = false;
      out.witnesses.push_back(witness_of(inst, v));
      out.note = "counterexample: both " + std::string(forbidden ? "true" : "false");
      break;
    }
  }
  if (universal) {
    for (const auto& v : inst.valuations())
      if (v(a) == wanted && v(b) == wanted) {
        found = true;
        out.witnesses.push_back(witness_of(inst, v));
        out.note = std::string("witness: both ") + (wanted ? "true" : "false");
        break;
      }
    if (!found && out.degenerate)
      out.note = "collapsed onto the classical pair {p, not p}";
  }
  out.holds = universal && (found || out.degenerate);
  return out;
}

// superaltern true => subaltern true, under every valuation
inline Verdict subaltern(const SquareInstance& inst, std::string name, ElementId super,
                         ElementId sub) {
  Verdict out{std::move(name)};
  out.degenerate = inst.central();
  out.holds = true;
  for (const auto& v : inst.valuations())
    if (v(super) && !v(sub)) {
      out.holds = false;
      out.witnesses.push_back(witness_of(inst, v));
      out.note = "counterexample: superaltern true, subaltern false";
      break;
    }
  if (out.holds && out.degenerate) out.note = "collapsed onto p <-> p";
  return out;
}

// exactly one of a, b true, under every valuation
inline Verdict contradiction(const SquareInstance& inst, std::string name, ElementId a,
                             ElementId b) {
  Verdict out{std::move(name)};
  out.degenerate = inst.central();
  out.holds = true;
  for (const auto& v : inst.valuations())
    if (v(a) == v(b)) {
      out.holds = false;
      out.witnesses.push_back(witness_of(inst, v));
      out.note = "counterexample: both " + std::string(v(a) ? "true" : "false");
      break;
    }
  return out;
}

}  // namespace detail

/// ¬◇¬p and ¬◇p: never both true; both false under some valuation.
inline Verdict check_contraries(const SquareInstance& inst) {
  const auto& x = inst.vertices();
  return detail::opposition(inst, "contraries", x.box_p, x.not_diamond_p, true, false);
}

/// ◇p and ◇¬p: never both false; both true under some valuation.
inline Verdict check_subcontraries(const SquareInstance& inst) {
  const auto& x = inst.vertices();
  return detail::opposition(inst, "subcontraries", x.diamond_p, x.diamond_not_p, false, true);
}

/// (¬◇¬p ⇒ ◇p, ¬◇p ⇒ ◇¬p). The contrapositive half ("subaltern false
/// implies superaltern false") is the same condition per valuation.
inline std::pair<Verdict, Verdict> check_subalterns(const SquareInstance& inst) {
  const auto& x = inst.vertices();
  return {detail::subaltern(inst, "subalterns_left", x.box_p, x.diamond_p),
          detail::subaltern(inst, "subalterns_right", x.not_diamond_p, x.diamond_not_p)};
}

/// (¬◇¬p vs ◇¬p, ◇p vs ¬◇p): exclusive and exhaustive on both diagonals.
inline std::pair<Verdict, Verdict> check_contradictories(const SquareInstance& inst) {
  const auto& x = inst.vertices();
  return {detail::contradiction(inst, "contradictories_diag1", x.box_p, x.diamond_not_p),
          detail::contradiction(inst, "contradictories_diag2", x.diamond_p, x.not_diamond_p)};
}

struct SquareReport {
  ElementId p = 0;
  std::string p_label;
  std::vector<ElementId> block_atoms;
  std::vector<ElementId> expanded_members;
  SquareVertices vertices{};
  Verdict contraries;
  Verdict subcontraries;
  Verdict subalterns_left;
  Verdict subalterns_right;
  Verdict contradictories_diag1;
  Verdict contradictories_diag2;
  bool collapsed = false;
  bool possibility_overlap = false;  // ◇p ∧ ◇¬p ≠ 0

  std::array<const Verdict*, 6> verdicts() const {
    return {&contraries,      &subcontraries,         &subalterns_left,
            &subalterns_right, &contradictories_diag1, &contradictories_diag2};
  }
  bool all_hold() const {
    const auto v = verdicts();
    return std::all_of(v.begin(), v.end(), [](const Verdict* d) { return d->holds; });
  }
};

inline SquareReport square_report(const SquareInstance& inst) {
  const auto& L = inst.frame().lattice();
  const ElementId p = inst.p();
  SquareReport r;
  r.p = p;
  r.p_label = L.label(p);
  r.block_atoms = inst.block().atoms();
  r.expanded_members = inst.expanded().carrier.members();
  r.vertices = inst.vertices();
  r.contraries = check_contraries(inst);
  r.subcontraries = check_subcontraries(inst);
  std::tie(r.subalterns_left, r.subalterns_right) = check_subalterns(inst);
  std::tie(r.contradictories_diag1, r.contradictories_diag2) = check_contradictories(inst);
  r.collapsed = inst.central();
  r.possibility_overlap = L.meet(r.vertices.diamond_p, r.vertices.diamond_not_p) != L.bottom();
  if (r.collapsed) {
    const auto& x = r.vertices;
    if (x.diamond_p != p || x.box_p != p || x.not_diamond_p != L.ortho(p) ||
        x.diamond_not_p != L.ortho(p))
      throw std::logic_error("central proposition " + r.p_label +
                             " does not collapse the square onto {p, not p}");
  }
  return r;
}

inline SquareReport square_report(const ModalFrame& frame, ElementId p, const BooleanBlock& W) {
  return square_report(SquareInstance(frame, p, W));
}

/// Reports for every element p and every maximal block containing p, in
/// ascending (p, block) order. With threads > 1 the elements are split across
/// worker tasks; the output order is unchanged.
inline std::vector<SquareReport> square_sweep(const OrthoLattice& L, unsigned threads = 1) {
  const ModalFrame frame(L);
  const auto blocks = enumerate_blocks(L);
  auto run = [&](ElementId lo, ElementId hi) {
    std::vector<SquareReport> out;
    for (ElementId p = lo; p < hi; ++p)
      for (const auto& W : blocks)
        if (W.contains(p)) out.push_back(square_report(frame, p, W));
    return out;
  };
  const auto n = static_cast<ElementId>(L.size());
  if (threads <= 1) return run(0, n);
  std::vector<std::future<std::vector<SquareReport>>> parts;
  const ElementId step = (n + threads - 1) / threads;
  for (ElementId lo = 0; lo < n; lo += step)
    parts.push_back(std::async(std::launch::async, run, lo, std::min<ElementId>(n, lo + step)));
  std::vector<SquareReport> out;
  for (auto& part : parts) {
    auto chunk = part.get();
    std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace omlkit
