#pragma once

// Named lattices used as fixtures: Boolean powers 2^k, the horizontal sums
// MO_n, and the non-orthomodular hexagon O6.
//
// Labels: atoms a1..ak, coatoms ¬a1..¬ak, bottom "0", top "1". Remaining
// Boolean elements are written as joins of atoms, e.g. "a1+a3".

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lattice.hpp"

namespace omlkit {

inline constexpr std::string_view kNegation = "\xC2\xAC";  // ¬

inline OrthoLattice boolean_power(int k) {
  if (k < 1 || k > 5) throw std::invalid_argument("boolean_power: k must be in [1, 5]");
  const std::size_t n = std::size_t{1} << k;
  const std::size_t full = n - 1;
  std::vector<std::uint8_t> leq(n * n, 0);
  std::vector<ElementId> ortho(n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    ortho[a] = static_cast<ElementId>(full & ~a);
    for (std::size_t b = 0; b < n; ++b) leq[a * n + b] = (a & ~b) == 0;
    const int bits = __builtin_popcountll(a);
    if (a == 0) labels[a] = "0";
    else if (a == full) labels[a] = "1";
    else if (bits == 1) labels[a] = "a" + std::to_string(__builtin_ctzll(a) + 1);
    else if (bits == k - 1)
      labels[a] = std::string(kNegation) + "a" + std::to_string(__builtin_ctzll(full & ~a) + 1);
    else {
      std::string s;
      for (int i = 0; i < k; ++i)
        if (a >> i & 1) s += (s.empty() ? "a" : "+a") + std::to_string(i + 1);
      labels[a] = s;
    }
  }
  return OrthoLattice::from_order(n, leq, ortho, std::move(labels));
}

/// Horizontal sum of n copies of 2^2: 0, a1, ¬a1, ..., an, ¬an, 1.
inline OrthoLattice mo(int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("mo: n must be in [1, 64]");
  const std::size_t size = 2 * static_cast<std::size_t>(n) + 2;
  std::vector<std::uint8_t> leq(size * size, 0);
  std::vector<ElementId> ortho(size);
  std::vector<std::string> labels(size);
  const std::size_t top = size - 1;
  labels[0] = "0";
  labels[top] = "1";
  ortho[0] = static_cast<ElementId>(top);
  ortho[top] = 0;
  for (int i = 1; i <= n; ++i) {
    const std::size_t a = 2 * i - 1;
    const std::size_t na = 2 * i;
    labels[a] = "a" + std::to_string(i);
    labels[na] = std::string(kNegation) + "a" + std::to_string(i);
    ortho[a] = static_cast<ElementId>(na);
    ortho[na] = static_cast<ElementId>(a);
  }
  for (std::size_t x = 0; x < size; ++x) {
    leq[x * size + x] = 1;
    leq[0 * size + x] = 1;
    leq[x * size + top] = 1;
  }
  return OrthoLattice::from_order(size, leq, ortho, std::move(labels));
}

/// The hexagon 0 < a1 < ¬a2 < 1, 0 < a2 < ¬a1 < 1. An ortholattice that
/// violates the orthomodular law.
inline OrthoLattice benzene_o6() {
  const std::size_t n = 6;
  const std::vector<std::string> labels = {
      "0", "a1", std::string(kNegation) + "a2", "a2", std::string(kNegation) + "a1", "1"};
  const std::vector<ElementId> ortho = {5, 4, 3, 2, 1, 0};
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    leq[x * n + x] = 1;
    leq[0 * n + x] = 1;
    leq[x * n + 5] = 1;
  }
  leq[1 * n + 2] = 1;
  leq[3 * n + 4] = 1;
  return OrthoLattice::from_order(n, leq, ortho, labels);
}

/// Lookup by name: "boolean_power" (param k in [1,5]), "mo" (param n >= 1),
/// "benzene_o6" (param ignored).
inline OrthoLattice catalog(std::string_view name, int param = 0) {
  if (name == "boolean_power") return boolean_power(param);
  if (name == "mo") return mo(param);
  if (name == "benzene_o6") return benzene_o6();
  throw std::invalid_argument("unknown catalog lattice '" + std::string(name) + "'");
}

struct CatalogEntry {
  std::string name;
  OrthoLattice lattice;
};

/// The orthomodular catalog members used for sweeps: 2^1..2^5 and MO1..MO4.
inline std::vector<CatalogEntry> standard_catalog() {
  std::vector<CatalogEntry> out;
  for (int k = 1; k <= 5; ++k) out.push_back({"bool" + std::to_string(k), boolean_power(k)});
  for (int n = 1; n <= 4; ++n) out.push_back({"mo" + std::to_string(n), mo(n)});
  return out;
}

/// All ordered pairs from standard_catalog() whose product has at most
/// max_size elements, paired with their names "A*B".
inline std::vector<CatalogEntry> catalog_products(std::size_t max_size = 64) {
  std::vector<CatalogEntry> out;
  const auto base = standard_catalog();
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) {
      if (base[i].lattice.size() * base[j].lattice.size() > max_size) continue;
      out.push_back({base[i].name + "*" + base[j].name,
                     product(base[i].lattice, base[j].lattice)});
    }
  return out;
}

}  // namespace omlkit
