#pragma once

// Commutation triples, the center Z(L), the possibility operator ◇ with its
// dual □p = ¬◇¬p, the possibility space ◇L and classically expanded contexts.
//
// A finite lattice is complete, so it serves as its own modal extension and
// all ◇ values live in L itself.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "block.hpp"
#include "lattice.hpp"

namespace omlkit {

/// (a ∨ b) ∧ c = (a ∧ c) ∨ (b ∧ c)
inline bool d_triple(const OrthoLattice& L, ElementId a, ElementId b, ElementId c) {
  return L.meet(L.join(a, b), c) == L.join(L.meet(a, c), L.meet(b, c));
}

/// (a ∧ b) ∨ c = (a ∨ c) ∧ (b ∨ c)
inline bool d_star_triple(const OrthoLattice& L, ElementId a, ElementId b, ElementId c) {
  return L.join(L.meet(a, b), c) == L.meet(L.join(a, c), L.join(b, c));
}

/// D and D* under all six permutations of (a, b, c).
inline bool t_triple(const OrthoLattice& L, ElementId a, ElementId b, ElementId c) {
  const std::array<std::array<ElementId, 3>, 6> perms = {{
      {a, b, c}, {a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}}};
  for (const auto& p : perms)
    if (!d_triple(L, p[0], p[1], p[2]) || !d_star_triple(L, p[0], p[1], p[2])) return false;
  return true;
}

struct CenterInfo {
  std::vector<ElementId> members;
  BooleanBlock as_block;

  const Subalgebra& as_subalgebra() const { return as_block.carrier(); }
  bool contains(ElementId z) const { return as_block.contains(z); }
};

/// Definition-based center: z with (a, b, z)T for every a, b. O(n^3).
inline CenterInfo center(const OrthoLattice& L) {
  std::vector<ElementId> members;
  for (ElementId z = 0; z < L.size(); ++z) {
    bool central = true;
    for (ElementId a = 0; a < L.size() && central; ++a)
      for (ElementId b = 0; b < L.size() && central; ++b)
        if (!t_triple(L, a, b, z)) central = false;
    if (central) members.push_back(z);
  }
  BooleanBlock block{Subalgebra(L, members)};
  return CenterInfo{std::move(members), std::move(block)};
}

/// Center via a = (a ∧ z) ∨ (a ∧ ¬z) for every a. O(n^2).
inline CenterInfo center_fast(const OrthoLattice& L) {
  std::vector<ElementId> members;
  for (ElementId z = 0; z < L.size(); ++z) {
    const ElementId nz = L.ortho(z);
    bool central = true;
    for (ElementId a = 0; a < L.size() && central; ++a)
      if (L.join(L.meet(a, z), L.meet(a, nz)) != a) central = false;
    if (central) members.push_back(z);
  }
  BooleanBlock block{Subalgebra(L, members)};
  return CenterInfo{std::move(members), std::move(block)};
}

/// A lattice with its center and the ◇ table precomputed.
class ModalFrame {
public:
  explicit ModalFrame(OrthoLattice L) : lattice_(std::move(L)), center_(init_center(lattice_)) {
    diamond_.resize(lattice_.size());
    for (ElementId p = 0; p < lattice_.size(); ++p) {
      ElementId d = lattice_.top();
      for (ElementId z : center_.members)
        if (lattice_.leq(p, z)) d = lattice_.meet(d, z);
      diamond_[p] = d;
    }
    std::vector<ElementId> gens(diamond_.begin(), diamond_.end());
    possibility_.emplace(Subalgebra(closure(lattice_, gens)));
    for (ElementId x : possibility_->members())
      if (!center_.contains(x))
        throw std::logic_error("possibility space escapes the center at " + lattice_.label(x));
  }

  const OrthoLattice& lattice() const { return lattice_; }
  const CenterInfo& center() const { return center_; }
  const std::vector<ElementId>& diamond_table() const { return diamond_; }
  bool is_central(ElementId p) const { return center_.contains(p); }

  /// Smallest central element above p.
  ElementId diamond(ElementId p) const { return diamond_.at(p); }
  /// ¬◇¬p, the largest central element below p.
  ElementId box(ElementId p) const { return lattice_.ortho(diamond(lattice_.ortho(p))); }

  /// Subalgebra generated by {◇p : p ∈ L}.
  const BooleanBlock& possibility_space() const { return *possibility_; }

private:
  static CenterInfo init_center(const OrthoLattice& L) {
    const auto report = verify_axioms(L);
    if (!report.orthomodular())
      throw std::invalid_argument("modal frame requires an orthomodular lattice (fails: " +
                                  report.failed().front() + ")");
    return center_fast(L);
  }

  OrthoLattice lattice_;
  CenterInfo center_;
  std::vector<ElementId> diamond_;
  std::optional<BooleanBlock> possibility_;
};

inline ElementId diamond(const ModalFrame& frame, ElementId p) { return frame.diamond(p); }
inline ElementId box(const ModalFrame& frame, ElementId p) { return frame.box(p); }
inline const BooleanBlock& possibility_space(const ModalFrame& frame) {
  return frame.possibility_space();
}

/// W^◇: the subalgebra generated by a block together with the center.
struct ExpandedContext {
  BooleanBlock base_block;
  BooleanBlock carrier;
};

class ExpansionError : public std::runtime_error {
public:
  ExpansionError(const std::string& what, std::array<ElementId, 3> witness)
      : std::runtime_error(what), witness_(witness) {}
  const std::array<ElementId, 3>& witness() const { return witness_; }

private:
  std::array<ElementId, 3> witness_;
};

inline ExpandedContext expanded_context(const ModalFrame& frame, const BooleanBlock& W) {
  const auto& L = frame.lattice();
  if (!W.lattice().same_tables(L))
    throw std::invalid_argument("block belongs to a different lattice");
  std::vector<ElementId> gens = W.members();
  gens.insert(gens.end(), frame.center().members.begin(), frame.center().members.end());
  Subalgebra generated = closure(L, gens);
  if (auto w = distributivity_witness(generated))
    throw ExpansionError("expanded context is not Boolean: distributivity fails at (" +
                             L.label((*w)[0]) + ", " + L.label((*w)[1]) + ", " +
                             L.label((*w)[2]) + ")",
                         *w);
  return ExpandedContext{W, BooleanBlock(std::move(generated))};
}

}  // namespace omlkit
