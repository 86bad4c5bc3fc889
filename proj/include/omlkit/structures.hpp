#pragma once

// Context families (Greechie-style hypergraphs of atoms and contexts): built
// from ray sets by exact orthogonality, searched for two-valued assignments,
// and pasted into orthomodular lattices when the diagram is admissible.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lattice.hpp"
#include "search.hpp"

namespace omlkit {

using Rational = boost::multiprecision::cpp_rational;

struct RaySet {
  std::size_t dim = 0;
  std::vector<std::vector<Rational>> rays;
  std::vector<std::string> labels;
};

class RayError : public std::invalid_argument {
public:
  RayError(const std::string& what, std::size_t first, std::size_t second)
      : std::invalid_argument(what), first_(first), second_(second) {}
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

private:
  std::size_t first_;
  std::size_t second_;
};

inline Rational inner_product(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

/// True iff u and v span the same line (all 2x2 minors vanish).
inline bool projectively_equal(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

/// Throws RayError on a dimension mismatch, a zero vector, or two rays that
/// are scalar multiples of each other.
inline void validate(const RaySet& R) {
  if (R.dim < 2) throw RayError("dimension must be at least 2", 0, 0);
  if (!R.labels.empty() && R.labels.size() != R.rays.size())
    throw RayError("label count does not match ray count", 0, 0);
  for (std::size_t i = 0; i < R.rays.size(); ++i) {
    if (R.rays[i].size() != R.dim)
      throw RayError("ray " + std::to_string(i + 1) + " has " + std::to_string(R.rays[i].size()) +
                         " entries, expected " + std::to_string(R.dim),
                     i, i);
    if (std::all_of(R.rays[i].begin(), R.rays[i].end(), [](const Rational& q) { return q == 0; }))
      throw RayError("ray " + std::to_string(i + 1) + " is the zero vector", i, i);
  }
  for (std::size_t i = 0; i < R.rays.size(); ++i)
    for (std::size_t j = i + 1; j < R.rays.size(); ++j)
      if (projectively_equal(R.rays[i], R.rays[j]))
        throw RayError("rays " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                           " are scalar multiples",
                       i, j);
}

/// Atoms and contexts (lists of atom indices). Atoms may be orphans (in no
/// context) when the family comes from rays that complete no basis.
struct ContextFamily {
  std::vector<std::string> atoms;
  std::vector<std::vector<std::size_t>> contexts;

  std::vector<std::size_t> orphans() const {
    std::vector<std::uint8_t> seen(atoms.size(), 0);
    for (const auto& c : contexts)
      for (std::size_t a : c) seen[a] = 1;
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < atoms.size(); ++a)
      if (!seen[a]) out.push_back(a);
    return out;
  }

  /// Number of contexts each atom lies in.
  std::vector<std::size_t> multiplicities() const {
    std::vector<std::size_t> m(atoms.size(), 0);
    for (const auto& c : contexts)
      for (std::size_t a : c) ++m[a];
    return m;
  }
};

/// Throws std::invalid_argument on an out-of-range atom, an empty context or a
/// repeated atom within a context.
inline void validate(const ContextFamily& F) {
  for (std::size_t c = 0; c < F.contexts.size(); ++c) {
    const auto& ctx = F.contexts[c];
    if (ctx.empty()) throw std::invalid_argument("context " + std::to_string(c + 1) + " is empty");
    std::set<std::size_t> seen;
    for (std::size_t a : ctx) {
      if (a >= F.atoms.size())
        throw std::invalid_argument("context " + std::to_string(c + 1) + " names an unknown atom");
      if (!seen.insert(a).second)
        throw std::invalid_argument("context " + std::to_string(c + 1) + " repeats atom " +
                                    F.atoms[a]);
    }
  }
}

struct RayFamily {
  ContextFamily family;
  std::vector<std::string> warnings;
};

/// Orthogonality hypergraph of a ray set: contexts are the sets of dim
/// pairwise-orthogonal rays (orthogonal nonzero vectors are independent, so
/// these are exactly the maximal cliques of full size). Inner products are
/// exact.
inline RayFamily from_rays(const RaySet& R) {
  validate(R);
  const std::size_t n = R.rays.size();
  std::vector<std::vector<std::uint8_t>> orth(n, std::vector<std::uint8_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      orth[i][j] = orth[j][i] = inner_product(R.rays[i], R.rays[j]) == 0;

  RayFamily out;
  for (std::size_t i = 0; i < n; ++i)
    out.family.atoms.push_back(R.labels.empty() ? "r" + std::to_string(i + 1) : R.labels[i]);

  std::vector<std::size_t> clique;
  auto extend = [&](auto&& self, std::size_t start) -> void {
    if (clique.size() == R.dim) {
      out.family.contexts.push_back(clique);
      return;
    }
    // not enough rays left to fill a basis
    if (n - start < R.dim - clique.size()) return;
    for (std::size_t v = start; v < n; ++v) {
      bool ok = true;
      for (std::size_t u : clique)
        if (!orth[u][v]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      clique.push_back(v);
      self(self, v + 1);
      clique.pop_back();
    }
  };
  extend(extend, 0);

  for (std::size_t a : out.family.orphans())
    out.warnings.push_back("atom " + out.family.atoms[a] + " lies in no complete context");
  return out;
}

// ---------------------------------------------------------------------------
// Two-valued assignments on families

struct FamilySearchResult {
  std::optional<std::vector<std::uint8_t>> assignment;  // per atom
  SearchStats stats;

  bool sat() const { return assignment.has_value(); }
};

namespace detail {

inline ChoiceProblem family_choice_problem(const ContextFamily& F) {
  std::vector<std::size_t> domains;
  for (const auto& c : F.contexts) domains.push_back(c.size());
  ChoiceProblem p(std::move(domains));
  for (std::size_t i = 0; i < F.contexts.size(); ++i)
    for (std::size_t j = i + 1; j < F.contexts.size(); ++j) {
      const auto& ci = F.contexts[i];
      const auto& cj = F.contexts[j];
      std::vector<std::size_t> shared;
      for (std::size_t a : ci)
        if (std::find(cj.begin(), cj.end(), a) != cj.end()) shared.push_back(a);
      if (shared.empty()) continue;
      p.constrain(i, j, [&](std::size_t u, std::size_t w) {
        for (std::size_t a : shared)
          if ((ci[u] == a) != (cj[w] == a)) return false;
        return true;
      });
    }
  return p;
}

inline std::vector<std::uint8_t> to_assignment(const ContextFamily& F,
                                               const std::vector<std::size_t>& choice) {
  std::vector<std::uint8_t> v(F.atoms.size(), 0);
  for (std::size_t i = 0; i < F.contexts.size(); ++i) v[F.contexts[i][choice[i]]] = 1;
  return v;
}

}  // namespace detail

/// Searches atom -> {0,1} with exactly one true atom per context, shared atoms
/// taking one value everywhere. Orphan atoms are left at 0.
inline FamilySearchResult find_global_valuation_on_family(const ContextFamily& F) {
  validate(F);
  const auto p = detail::family_choice_problem(F);
  auto s = solve(p);
  FamilySearchResult r;
  r.stats = s.stats;
  if (s.solution) r.assignment = detail::to_assignment(F, *s.solution);
  return r;
}

inline std::size_t count_family_assignments(const ContextFamily& F) {
  validate(F);
  return count_solutions(detail::family_choice_problem(F));
}

/// Independent UNSAT certificate: if every atom lies in an even number of
/// contexts, summing "one true atom per context" over all contexts counts
/// each true atom an even number of times, so an odd context count is
/// impossible.
struct ParityCertificate {
  std::size_t contexts = 0;
  std::size_t atoms = 0;
};

inline std::optional<ParityCertificate> parity_certificate(const ContextFamily& F) {
  if (F.contexts.size() % 2 == 0) return std::nullopt;
  const auto m = F.multiplicities();
  for (std::size_t k : m)
    if (k % 2 != 0) return std::nullopt;
  return ParityCertificate{F.contexts.size(), F.atoms.size()};
}

// ---------------------------------------------------------------------------
// Pasting

struct NotPastable {
  std::string reason;
};

using PasteResult = std::variant<OrthoLattice, NotPastable>;

/// Reason the family cannot be pasted, or nothing. Requires contexts of at
/// least two atoms, no orphans, contexts of two atoms sharing nothing, any two
/// contexts sharing at most one atom, and no loops of order 3 or 4.
inline std::optional<std::string> paste_obstruction(const ContextFamily& F) {
  validate(F);
  if (F.contexts.empty()) return "family has no contexts";
  if (!F.orphans().empty()) return "atom " + F.atoms[F.orphans().front()] + " lies in no context";
  const std::size_t m = F.contexts.size();
  // shared[i][j]: the single shared atom, or npos
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> shared(m, std::vector<std::size_t>(m, none));
  for (std::size_t i = 0; i < m; ++i) {
    if (F.contexts[i].size() < 2)
      return "context " + std::to_string(i + 1) + " has fewer than two atoms";
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<std::size_t> common;
      for (std::size_t a : F.contexts[i])
        if (std::find(F.contexts[j].begin(), F.contexts[j].end(), a) != F.contexts[j].end())
          common.push_back(a);
      if (common.size() > 1) return "contexts overlap in more than one atom";
      if (common.size() == 1) {
        if (F.contexts[i].size() == 2 || F.contexts[j].size() == 2)
          return "a two-atom context shares an atom with another context";
        shared[i][j] = shared[j][i] = common.front();
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i || shared[i][j] == none) continue;
      for (std::size_t k = 0; k < m; ++k) {
        if (k == i || k == j || shared[j][k] == none) continue;
        const std::size_t x1 = shared[i][j];
        const std::size_t x2 = shared[j][k];
        if (x1 == x2) continue;
        if (shared[k][i] != none && shared[k][i] != x1 && shared[k][i] != x2)
          return "diagram has a loop of order 3";
        for (std::size_t l = 0; l < m; ++l) {
          if (l == i || l == j || l == k || shared[k][l] == none || shared[l][i] == none) continue;
          const std::size_t x3 = shared[k][l];
          const std::size_t x4 = shared[l][i];
          const std::set<std::size_t> atoms = {x1, x2, x3, x4};
          if (atoms.size() == 4) return "diagram has a loop of order 4";
        }
      }
    }
  return std::nullopt;
}

/// Greechie paste: each context becomes a Boolean block 2^k, an atom shared
/// by two contexts (and with it its orthocomplement) is identified. Atom
/// labels carry over; the complement of atom x is "¬x" and other block
/// elements are written as joins "x+y".
inline PasteResult paste_to_lattice(const ContextFamily& F) {
  if (auto why = paste_obstruction(F)) return NotPastable{*why};

  // An element is keyed by its canonical description.
  struct Rep {
    std::size_t context;
    std::size_t mask;
  };
  std::map<std::string, std::size_t> index;
  std::vector<std::vector<Rep>> reps;
  std::vector<std::string> labels;
  auto key_for = [&](std::size_t c, std::size_t mask) -> std::pair<std::string, std::string> {
    const auto& ctx = F.contexts[c];
    const std::size_t k = ctx.size();
    const std::size_t full = (std::size_t{1} << k) - 1;
    const int bits = __builtin_popcountll(mask);
    if (mask == 0) return {"0", "0"};
    if (mask == full) return {"1", "1"};
    if (bits == 1) {
      const std::size_t a = ctx[__builtin_ctzll(mask)];
      return {"a" + std::to_string(a), F.atoms[a]};
    }
    if (static_cast<std::size_t>(bits) == k - 1) {
      const std::size_t a = ctx[__builtin_ctzll(full & ~mask)];
      return {"n" + std::to_string(a), "\xC2\xAC" + F.atoms[a]};
    }
    std::string label;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) label += (label.empty() ? "" : "+") + F.atoms[ctx[i]];
    return {"b" + std::to_string(c) + ":" + std::to_string(mask), label};
  };
  // Deterministic element order: 0, atoms, coatoms, then block interiors, 1.
  auto intern = [&](std::size_t c, std::size_t mask) {
    auto [key, label] = key_for(c, mask);
    auto [it, fresh] = index.emplace(key, reps.size());
    if (fresh) {
      reps.emplace_back();
      labels.push_back(label);
    }
    reps[it->second].push_back(Rep{c, mask});
  };
  intern(0, 0);
  for (std::size_t a = 0; a < F.atoms.size(); ++a)
    for (std::size_t c = 0; c < F.contexts.size(); ++c) {
      const auto& ctx = F.contexts[c];
      const auto it = std::find(ctx.begin(), ctx.end(), a);
      if (it == ctx.end()) continue;
      const std::size_t bit = static_cast<std::size_t>(it - ctx.begin());
      intern(c, std::size_t{1} << bit);
    }
  for (std::size_t a = 0; a < F.atoms.size(); ++a)
    for (std::size_t c = 0; c < F.contexts.size(); ++c) {
      const auto& ctx = F.contexts[c];
      const auto it = std::find(ctx.begin(), ctx.end(), a);
      if (it == ctx.end() || ctx.size() == 2) continue;
      const std::size_t full = (std::size_t{1} << ctx.size()) - 1;
      intern(c, full & ~(std::size_t{1} << (it - ctx.begin())));
    }
  for (std::size_t c = 0; c < F.contexts.size(); ++c) {
    const std::size_t k = F.contexts[c].size();
    const std::size_t full = (std::size_t{1} << k) - 1;
    for (std::size_t mask = 1; mask < full; ++mask) {
      const int bits = __builtin_popcountll(mask);
      if (bits > 1 && static_cast<std::size_t>(bits) < k - 1) intern(c, mask);
    }
  }
  for (std::size_t c = 0; c < F.contexts.size(); ++c) {
    intern(c, 0);
    intern(c, (std::size_t{1} << F.contexts[c].size()) - 1);
  }
  // intern(c, 0) above re-adds reps to the existing "0" entry; "1" is last.
  const std::size_t n = reps.size();

  // Element ids per (context, mask).
  std::vector<std::map<std::size_t, std::size_t>> id_of(F.contexts.size());
  for (std::size_t e = 0; e < n; ++e)
    for (const Rep& r : reps[e]) id_of[r.context][r.mask] = e;

  std::vector<std::uint8_t> leq(n * n, 0);
  std::vector<ElementId> ortho(n, 0);
  for (std::size_t c = 0; c < F.contexts.size(); ++c) {
    const std::size_t full = (std::size_t{1} << F.contexts[c].size()) - 1;
    for (const auto& [ma, ea] : id_of[c]) {
      ortho[ea] = static_cast<ElementId>(id_of[c].at(full & ~ma));
      for (const auto& [mb, eb] : id_of[c])
        if ((ma & ~mb) == 0) leq[ea * n + eb] = 1;
    }
  }
  // transitive closure; a no-op on admissible diagrams
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;

  OrthoLattice L = OrthoLattice::from_order(n, leq, ortho, labels);
  const auto report = verify_axioms(L);
  if (!report.orthomodular())
    return NotPastable{"paste violates the " + report.failed().front() + " law"};
  return L;
}

}  // namespace omlkit
