#pragma once

// Brute-force reference implementations. They use only the order relation
// and the ortho map of a lattice, never the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <omlkit/omlkit.hpp>

namespace oracle {

using omlkit::ElementId;
using omlkit::OrthoLattice;

inline ElementId glb(const OrthoLattice& L, ElementId a, ElementId b) {
  std::vector<ElementId> lower;
  for (ElementId z = 0; z < L.size(); ++z)
    if (L.leq(z, a) && L.leq(z, b)) lower.push_back(z);
  for (ElementId z : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](ElementId w) { return L.leq(w, z); })) return z;
  throw std::logic_error("no glb");
}

inline ElementId lub(const OrthoLattice& L, ElementId a, ElementId b) {
  std::vector<ElementId> upper;
  for (ElementId z = 0; z < L.size(); ++z)
    if (L.leq(a, z) && L.leq(b, z)) upper.push_back(z);
  for (ElementId z : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](ElementId w) { return L.leq(z, w); })) return z;
  throw std::logic_error("no lub");
}

// z is central iff it commutes with every a: a = (a ∧ z) ∨ (a ∧ ¬z), with
// meets and joins recomputed from the order.
inline std::vector<ElementId> center(const OrthoLattice& L) {
  std::vector<ElementId> out;
  for (ElementId z = 0; z < L.size(); ++z) {
    bool central = true;
    for (ElementId a = 0; a < L.size() && central; ++a)
      central = lub(L, glb(L, a, z), glb(L, a, L.ortho(z))) == a;
    if (central) out.push_back(z);
  }
  return out;
}

// The literal minimum of the central upper bounds of p.
inline ElementId diamond(const OrthoLattice& L, const std::vector<ElementId>& Z, ElementId p) {
  std::vector<ElementId> up;
  for (ElementId z : Z)
    if (L.leq(p, z)) up.push_back(z);
  for (ElementId z : up)
    if (std::all_of(up.begin(), up.end(), [&](ElementId w) { return L.leq(z, w); })) return z;
  throw std::logic_error("no minimum central upper bound");
}

inline bool closed(const OrthoLattice& L, const std::vector<std::uint8_t>& in) {
  for (ElementId x = 0; x < L.size(); ++x) {
    if (!in[x]) continue;
    if (!in[L.ortho(x)]) return false;
    for (ElementId y = 0; y < L.size(); ++y)
      if (in[y] && (!in[glb(L, x, y)] || !in[lub(L, x, y)])) return false;
  }
  return true;
}

inline bool distributive(const OrthoLattice& L, const std::vector<ElementId>& s) {
  for (ElementId x : s)
    for (ElementId y : s)
      for (ElementId z : s)
        if (glb(L, x, lub(L, y, z)) != lub(L, glb(L, x, y), glb(L, x, z))) return false;
  return true;
}

// Maximal Boolean subalgebras by scanning every subset containing 0 and 1.
// Only for lattices with at most 16 elements.
inline std::vector<std::vector<ElementId>> blocks(const OrthoLattice& L) {
  const std::size_t n = L.size();
  if (n > 16) throw std::invalid_argument("subset scan limited to 16 elements");
  const std::size_t inner = n - 2;
  std::vector<std::vector<ElementId>> boolean;
  for (std::uint32_t mask = 0; mask < (1u << inner); ++mask) {
    std::vector<std::uint8_t> in(n, 0);
    in[0] = in[n - 1] = 1;
    for (std::size_t i = 0; i < inner; ++i)
      if (mask >> i & 1u) in[i + 1] = 1;
    if (!closed(L, in)) continue;
    std::vector<ElementId> s;
    for (ElementId x = 0; x < n; ++x)
      if (in[x]) s.push_back(x);
    if (distributive(L, s)) boolean.push_back(s);
  }
  std::vector<std::vector<ElementId>> maximal;
  for (const auto& s : boolean) {
    bool dominated = false;
    for (const auto& t : boolean)
      if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) dominated = true;
    if (!dominated) maximal.push_back(s);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

inline std::vector<ElementId> atoms_of(const OrthoLattice& L, const std::vector<ElementId>& s) {
  std::vector<ElementId> out;
  for (ElementId x : s) {
    if (x == L.bottom()) continue;
    bool minimal = true;
    for (ElementId y : s)
      if (y != L.bottom() && y != x && L.leq(y, x)) minimal = false;
    if (minimal) out.push_back(x);
  }
  return out;
}

// Number of atom tuples (one per block) whose induced valuations agree on
// every shared element; a valuation with true atom t sends x to [t <= x].
inline std::size_t global_valuations(const OrthoLattice& L,
                                     const std::vector<std::vector<ElementId>>& bs) {
  std::vector<std::vector<ElementId>> at;
  for (const auto& b : bs) at.push_back(atoms_of(L, b));
  std::vector<std::size_t> idx(bs.size(), 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < bs.size() && ok; ++i)
      for (std::size_t j = i + 1; j < bs.size() && ok; ++j)
        for (ElementId x : bs[i])
          if (std::binary_search(bs[j].begin(), bs[j].end(), x) &&
              L.leq(at[i][idx[i]], x) != L.leq(at[j][idx[j]], x)) {
            ok = false;
            break;
          }
    count += ok;
    std::size_t k = 0;
    while (k < bs.size() && ++idx[k] == at[k].size()) idx[k++] = 0;
    if (k == bs.size()) break;
  }
  return count;
}

// Assignments with exactly one true atom per context, over all 2^atoms maps.
inline std::size_t family_assignments(const omlkit::ContextFamily& F) {
  if (F.atoms.size() > 22) throw std::invalid_argument("too many atoms for brute force");
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << F.atoms.size()); ++mask) {
    bool ok = true;
    for (const auto& c : F.contexts) {
      int ones = 0;
      for (std::size_t a : c) ones += mask >> a & 1u;
      if (ones != 1) {
        ok = false;
        break;
      }
    }
    // orphan atoms are pinned to 0 by the search, so count them that way
    for (std::size_t a : F.orphans())
      if (mask >> a & 1u) ok = false;
    count += ok;
  }
  return count;
}

inline omlkit::ContextFamily random_family(std::mt19937& rng, std::size_t max_contexts,
                                           std::size_t max_atoms, std::size_t max_size) {
  omlkit::ContextFamily F;
  const std::size_t atoms = std::uniform_int_distribution<std::size_t>(2, max_atoms)(rng);
  for (std::size_t a = 0; a < atoms; ++a) F.atoms.push_back("x" + std::to_string(a));
  const std::size_t contexts = std::uniform_int_distribution<std::size_t>(1, max_contexts)(rng);
  for (std::size_t c = 0; c < contexts; ++c) {
    std::vector<std::size_t> pool(atoms);
    for (std::size_t a = 0; a < atoms; ++a) pool[a] = a;
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min(max_size, atoms))(rng);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    F.contexts.push_back(pool);
  }
  return F;
}

// Odd number of contexts, every atom in exactly two of them: atoms are the
// edges of a random loopless multigraph in which every vertex has an edge.
inline omlkit::ContextFamily random_parity_family(std::mt19937& rng, std::size_t max_contexts) {
  std::size_t k = std::uniform_int_distribution<std::size_t>(1, (max_contexts - 1) / 2)(rng) * 2 + 1;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::uniform_int_distribution<std::size_t> vertex(0, k - 1);
  for (std::size_t v = 0; v < k; ++v) {
    std::size_t w;
    do w = vertex(rng);
    while (w == v);
    edges.emplace_back(v, w);
  }
  const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, k)(rng);
  for (std::size_t e = 0; e < extra; ++e) {
    const std::size_t v = vertex(rng);
    std::size_t w;
    do w = vertex(rng);
    while (w == v);
    edges.emplace_back(v, w);
  }
  omlkit::ContextFamily F;
  F.contexts.resize(k);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    F.atoms.push_back("e" + std::to_string(e));
    F.contexts[edges[e].first].push_back(e);
    F.contexts[edges[e].second].push_back(e);
  }
  return F;
}

}  // namespace oracle
