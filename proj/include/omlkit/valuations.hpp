#pragma once

// Boolean blocks, two-valued homomorphisms on them, and the search for
// global valuations and compatible actualizations.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "block.hpp"
#include "lattice.hpp"
#include "modal.hpp"
#include "search.hpp"

namespace omlkit {

// ---------------------------------------------------------------------------
// Blocks

namespace detail {

// Bron-Kerbosch with pivoting over a dense adjacency matrix.
inline void maximal_cliques(const std::vector<std::vector<std::uint8_t>>& adj,
                            std::vector<std::size_t>& r, std::vector<std::size_t> p,
                            std::vector<std::size_t> x,
                            std::vector<std::vector<std::size_t>>& out) {
  if (p.empty() && x.empty()) {
    auto clique = r;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  std::size_t pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto& cand : {p, x})
    for (std::size_t u : cand) {
      std::size_t deg = 0;
      for (std::size_t v : p) deg += adj[u][v];
      if (deg > best) best = deg, pivot = u;
    }
  const std::vector<std::size_t> candidates = [&] {
    std::vector<std::size_t> c;
    for (std::size_t v : p)
      if (!adj[pivot][v]) c.push_back(v);
    return c;
  }();
  for (std::size_t v : candidates) {
    std::vector<std::size_t> np, nx;
    for (std::size_t w : p)
      if (adj[v][w]) np.push_back(w);
    for (std::size_t w : x)
      if (adj[v][w]) nx.push_back(w);
    r.push_back(v);
    maximal_cliques(adj, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace detail

/// Every maximal Boolean subalgebra of an orthomodular lattice, sorted by
/// member set.
///
/// In a finite OML the atoms of a maximal block are atoms of L, and they form
/// a maximal pairwise-orthogonal set of atoms; conversely every such set
/// generates a maximal block (its 2^k joins). Blocks are therefore read off
/// the maximal cliques of the atom orthogonality graph.
inline std::vector<BooleanBlock> enumerate_blocks(const OrthoLattice& L) {
  const auto atoms = L.atoms();
  const std::size_t k = atoms.size();
  std::vector<std::vector<std::uint8_t>> adj(k, std::vector<std::uint8_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      adj[i][j] = i != j && L.leq(atoms[i], L.ortho(atoms[j]));
  std::vector<std::vector<std::size_t>> cliques;
  std::vector<std::size_t> r, p(k), x;
  for (std::size_t i = 0; i < k; ++i) p[i] = i;
  detail::maximal_cliques(adj, r, p, x, cliques);

  std::vector<std::vector<ElementId>> member_sets;
  for (const auto& c : cliques) {
    if (c.size() > 20) throw std::length_error("block with more than 20 atoms");
    std::vector<ElementId> members;
    for (std::size_t mask = 0; mask < (std::size_t{1} << c.size()); ++mask) {
      ElementId e = L.bottom();
      for (std::size_t i = 0; i < c.size(); ++i)
        if (mask >> i & 1) e = L.join(e, atoms[c[i]]);
      members.push_back(e);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!std::binary_search(members.begin(), members.end(), L.top()))
      throw std::invalid_argument("maximal orthogonal atom set does not join to 1; "
                                  "lattice is not orthomodular");
    member_sets.push_back(std::move(members));
  }
  std::sort(member_sets.begin(), member_sets.end());
  std::vector<BooleanBlock> blocks;
  blocks.reserve(member_sets.size());
  for (auto& m : member_sets) blocks.emplace_back(Subalgebra(L, std::move(m)));
  return blocks;
}

// ---------------------------------------------------------------------------
// Valuations

/// Checks the two-valued homomorphism laws of v on a block. Returns a
/// description of the first violation, or nothing.
inline std::optional<std::string> homomorphism_violation(
    const BooleanBlock& W, const std::function<bool(ElementId)>& v) {
  const auto& L = W.lattice();
  if (v(L.bottom())) return "v(0) != 0";
  if (!v(L.top())) return "v(1) != 1";
  for (ElementId x : W.members()) {
    if (v(L.ortho(x)) == v(x)) return "v(ortho(" + L.label(x) + ")) != 1 - v(" + L.label(x) + ")";
    for (ElementId y : W.members()) {
      if (v(L.meet(x, y)) != (v(x) && v(y)))
        return "v(" + L.label(x) + " ^ " + L.label(y) + ") != v(x) v(y)";
      if (v(L.join(x, y)) != (v(x) || v(y)))
        return "v(" + L.label(x) + " v " + L.label(y) + ") != max(v(x), v(y))";
    }
  }
  std::size_t true_atoms = 0;
  for (ElementId a : W.atoms()) true_atoms += v(a);
  if (true_atoms != 1) return "expected exactly one true atom, found " + std::to_string(true_atoms);
  return std::nullopt;
}

/// A homomorphism W -> 2, determined by the unique atom it sends to 1.
class Valuation {
public:
  Valuation(BooleanBlock block, ElementId true_atom)
      : block_(std::move(block)), true_atom_(true_atom) {
    const auto& atoms = block_.atoms();
    if (std::find(atoms.begin(), atoms.end(), true_atom_) == atoms.end())
      throw std::invalid_argument("valuation atom is not an atom of the block");
  }

  const BooleanBlock& block() const { return block_; }
  ElementId true_atom() const { return true_atom_; }

  bool operator()(ElementId x) const {
    if (!block_.contains(x)) throw std::out_of_range("element outside the valuation's block");
    return block_.lattice().leq(true_atom_, x);
  }

  std::map<ElementId, bool> assignment() const {
    std::map<ElementId, bool> out;
    for (ElementId x : block_.members()) out[x] = (*this)(x);
    return out;
  }

private:
  BooleanBlock block_;
  ElementId true_atom_;
};

/// One valuation per atom, ascending; each is checked against the
/// homomorphism laws before being returned.
inline std::vector<Valuation> enumerate_valuations(const BooleanBlock& W) {
  std::vector<Valuation> out;
  for (ElementId a : W.atoms()) {
    Valuation v(W, a);
    if (auto bad = homomorphism_violation(W, [&](ElementId x) { return v(x); }))
      throw std::logic_error("valuation fails homomorphism law: " + *bad);
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Global valuations

struct GlobalValuation {
  std::vector<BooleanBlock> blocks;
  std::vector<ElementId> true_atoms;  // one per block

  Valuation at(std::size_t i) const { return Valuation(blocks.at(i), true_atoms.at(i)); }
};

/// First (i, j, x) with x in W_i ∩ W_j on which the two valuations differ.
struct CompatibilityViolation {
  std::size_t block_i;
  std::size_t block_j;
  ElementId element;
};

inline std::optional<CompatibilityViolation> compatibility_violation(const GlobalValuation& g) {
  for (std::size_t i = 0; i < g.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < g.blocks.size(); ++j) {
      const Valuation vi = g.at(i);
      const Valuation vj = g.at(j);
      for (ElementId x : g.blocks[i].members())
        if (g.blocks[j].contains(x) && vi(x) != vj(x)) return CompatibilityViolation{i, j, x};
    }
  return std::nullopt;
}

struct GlobalSearchResult {
  std::optional<GlobalValuation> witness;
  SearchStats stats;

  bool sat() const { return witness.has_value(); }
};

namespace detail {

inline ChoiceProblem block_choice_problem(const std::vector<BooleanBlock>& blocks) {
  std::vector<std::size_t> domains;
  for (const auto& b : blocks) domains.push_back(b.atoms().size());
  ChoiceProblem p(std::move(domains));
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      std::vector<ElementId> shared;
      for (ElementId x : blocks[i].members())
        if (blocks[j].contains(x)) shared.push_back(x);
      const auto& L = blocks[i].lattice();
      const auto& ai = blocks[i].atoms();
      const auto& aj = blocks[j].atoms();
      p.constrain(i, j, [&](std::size_t u, std::size_t w) {
        for (ElementId x : shared)
          if (L.leq(ai[u], x) != L.leq(aj[w], x)) return false;
        return true;
      });
    }
  return p;
}

inline GlobalValuation to_global(const std::vector<BooleanBlock>& blocks,
                                 const std::vector<std::size_t>& choice) {
  GlobalValuation g{blocks, {}};
  for (std::size_t i = 0; i < blocks.size(); ++i) g.true_atoms.push_back(blocks[i].atoms()[choice[i]]);
  return g;
}

inline GlobalSearchResult run_block_search(const std::vector<BooleanBlock>& blocks,
                                           const ChoiceProblem& p) {
  GlobalSearchResult r;
  auto s = solve(p);
  r.stats = s.stats;
  if (s.solution) r.witness = to_global(blocks, *s.solution);
  return r;
}

}  // namespace detail

inline GlobalSearchResult find_global_valuation(const std::vector<BooleanBlock>& blocks) {
  return detail::run_block_search(blocks, detail::block_choice_problem(blocks));
}

inline GlobalSearchResult find_global_valuation(const OrthoLattice& L) {
  return find_global_valuation(enumerate_blocks(L));
}

inline std::size_t count_global_valuations(const OrthoLattice& L) {
  return count_solutions(detail::block_choice_problem(enumerate_blocks(L)));
}

// ---------------------------------------------------------------------------
// Compatible actualizations

/// A homomorphism f on the possibility space, to be extended to a global
/// valuation agreeing with f wherever blocks meet the possibility space.
class ActualizationProblem {
public:
  ActualizationProblem(ModalFrame frame, Valuation f) : frame_(std::move(frame)), f_(std::move(f)) {
    if (!(f_.block() == frame_.possibility_space()))
      throw std::invalid_argument("f must be defined on the possibility space");
  }

  /// Validates an explicit assignment on the possibility space.
  static ActualizationProblem from_assignment(const ModalFrame& frame,
                                              const std::map<ElementId, bool>& f) {
    const auto& space = frame.possibility_space();
    for (ElementId x : space.members())
      if (!f.count(x))
        throw std::invalid_argument("f is undefined on " + frame.lattice().label(x));
    auto v = [&](ElementId x) { return f.at(x); };
    if (auto bad = homomorphism_violation(space, v))
      throw std::invalid_argument("f is not a Boolean homomorphism: " + *bad);
    for (ElementId a : space.atoms())
      if (f.at(a)) return ActualizationProblem(frame, Valuation(space, a));
    throw std::logic_error("unreachable: homomorphism without a true atom");
  }

  const ModalFrame& frame() const { return frame_; }
  const Valuation& f() const { return f_; }

private:
  ModalFrame frame_;
  Valuation f_;
};

inline GlobalSearchResult find_compatible_actualization(const ActualizationProblem& problem,
                                                        const std::vector<BooleanBlock>& blocks) {
  ChoiceProblem p = detail::block_choice_problem(blocks);
  const auto& space = problem.frame().possibility_space();
  const auto& L = problem.frame().lattice();
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t u = 0; u < blocks[i].atoms().size(); ++u)
      for (ElementId x : blocks[i].members())
        if (space.contains(x) && L.leq(blocks[i].atoms()[u], x) != problem.f()(x)) {
          p.forbid(i, u);
          break;
        }
  return detail::run_block_search(blocks, p);
}

inline GlobalSearchResult find_compatible_actualization(const ActualizationProblem& problem) {
  return find_compatible_actualization(problem, enumerate_blocks(problem.frame().lattice()));
}

struct MksVerdict {
  bool has_global = false;
  bool exists_actualizable_f = false;
  bool biconditional_holds = false;
  std::size_t f_count = 0;                 // homomorphisms on the possibility space
  std::vector<ElementId> actualizable_f;  // true atom of each actualizable f
  SearchStats global_stats;
};

/// Both sides of the modal Kochen-Specker equivalence, computed independently:
/// existence of a global valuation, and existence of some f on ◇L admitting
/// a compatible actualization.
inline MksVerdict mks_check(const OrthoLattice& L) {
  const ModalFrame frame(L);
  const auto blocks = enumerate_blocks(L);
  MksVerdict verdict;
  const auto global = find_global_valuation(blocks);
  verdict.has_global = global.sat();
  verdict.global_stats = global.stats;
  for (const auto& f : enumerate_valuations(frame.possibility_space())) {
    ++verdict.f_count;
    if (find_compatible_actualization(ActualizationProblem(frame, f), blocks).sat())
      verdict.actualizable_f.push_back(f.true_atom());
  }
  verdict.exists_actualizable_f = !verdict.actualizable_f.empty();
  verdict.biconditional_holds = verdict.has_global == verdict.exists_actualizable_f;
  return verdict;
}

/// On a Boolean lattice ◇ is the identity, so every valuation satisfies
/// v(◇A) = v(A). Checked over all valuations and elements.
inline bool classical_correspondence_check(const OrthoLattice& B) {
  const Subalgebra all = whole(B);
  if (!is_boolean(all)) throw std::invalid_argument("classical correspondence needs a Boolean lattice");
  const ModalFrame frame(B);
  const BooleanBlock block(all);
  for (const auto& v : enumerate_valuations(block))
    for (ElementId a = 0; a < B.size(); ++a)
      if (v(frame.diamond(a)) != v(a)) return false;
  return true;
}

}  // namespace omlkit
