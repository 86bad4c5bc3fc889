#pragma once

// Finite bounded lattices with an orthocomplementation, stored as dense
// order / meet / join / ortho tables. Bottom is always id 0 and top is id n-1.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace omlkit {

using ElementId = std::uint32_t;

/// Raised when tables are malformed (ragged, ids out of range) or when an
/// order relation does not describe a bounded lattice. Axiom failures are
/// reported through AxiomReport instead.
class StructureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raw table representation. May be inconsistent; verify_axioms() inspects it.
struct LatticeTables {
  std::size_t n = 0;
  std::vector<std::uint8_t> leq;  // row-major n*n
  std::vector<ElementId> meet;    // row-major n*n
  std::vector<ElementId> join;    // row-major n*n
  std::vector<ElementId> ortho;   // n
  std::vector<std::string> labels;

  bool le(ElementId a, ElementId b) const { return leq[a * n + b] != 0; }
  ElementId m(ElementId a, ElementId b) const { return meet[a * n + b]; }
  ElementId j(ElementId a, ElementId b) const { return join[a * n + b]; }
};

inline void check_structure(const LatticeTables& t) {
  const std::size_t n = t.n;
  if (n == 0) throw StructureError("lattice has no elements");
  if (t.leq.size() != n * n) throw StructureError("order table is not n x n");
  if (t.meet.size() != n * n) throw StructureError("meet table is not n x n");
  if (t.join.size() != n * n) throw StructureError("join table is not n x n");
  if (t.ortho.size() != n) throw StructureError("ortho map does not have n entries");
  if (!t.labels.empty() && t.labels.size() != n)
    throw StructureError("label list does not have n entries");
  for (std::size_t i = 0; i < n * n; ++i) {
    if (t.meet[i] >= n)
      throw StructureError("meet entry (" + std::to_string(i / n) + "," + std::to_string(i % n) +
                           ") out of range");
    if (t.join[i] >= n)
      throw StructureError("join entry (" + std::to_string(i / n) + "," + std::to_string(i % n) +
                           ") out of range");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (t.ortho[i] >= n) throw StructureError("ortho entry " + std::to_string(i) + " out of range");
}

/// Immutable orthocomplemented lattice. Copies share the underlying tables.
class OrthoLattice {
public:
  OrthoLattice() = default;

  /// Wraps already-built tables after a structural check. Axioms are not
  /// verified here.
  static OrthoLattice from_tables(LatticeTables t) {
    check_structure(t);
    if (t.labels.empty()) {
      t.labels.reserve(t.n);
      for (std::size_t i = 0; i < t.n; ++i) t.labels.push_back("#" + std::to_string(i));
    }
    OrthoLattice L;
    L.data_ = std::make_shared<const LatticeTables>(std::move(t));
    return L;
  }

  /// Builds a lattice from a partial order (row-major n*n, already reflexive
  /// and transitive) and an ortho map. Elements are renumbered along the
  /// smallest-index-first linear extension so bottom = 0 and top = n-1;
  /// inputs whose ids already form a linear extension keep their ids.
  static OrthoLattice from_order(std::size_t n, const std::vector<std::uint8_t>& leq,
                                 const std::vector<ElementId>& ortho,
                                 std::vector<std::string> labels);

  std::size_t size() const { return data_ ? data_->n : 0; }
  ElementId bottom() const { return 0; }
  ElementId top() const { return static_cast<ElementId>(size() - 1); }

  bool leq(ElementId a, ElementId b) const { return data_->le(a, b); }
  ElementId meet(ElementId a, ElementId b) const { return data_->m(a, b); }
  ElementId join(ElementId a, ElementId b) const { return data_->j(a, b); }
  ElementId ortho(ElementId a) const { return data_->ortho[a]; }
  const std::string& label(ElementId a) const { return data_->labels[a]; }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const LatticeTables& tables() const { return *data_; }

  /// Looks up an element by label. Accepts '~' as an ASCII spelling of the
  /// leading '¬', and "#k" for a raw id.
  std::optional<ElementId> find(std::string_view name) const;

  /// Minimal nonzero elements, ascending.
  std::vector<ElementId> atoms() const {
    std::vector<ElementId> out;
    for (ElementId x = 1; x < size(); ++x) {
      bool minimal = true;
      for (ElementId y = 1; y < size() && minimal; ++y)
        if (y != x && leq(y, x)) minimal = false;
      if (minimal) out.push_back(x);
    }
    return out;
  }

  /// Hasse diagram edges (a covered by b), lexicographic.
  std::vector<std::pair<ElementId, ElementId>> covers() const {
    std::vector<std::pair<ElementId, ElementId>> out;
    const auto n = static_cast<ElementId>(size());
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b) {
        if (a == b || !leq(a, b)) continue;
        bool cover = true;
        for (ElementId c = 0; c < n && cover; ++c)
          if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
        if (cover) out.emplace_back(a, b);
      }
    return out;
  }

  /// Length of the longest chain from bottom to x.
  std::vector<std::size_t> heights() const {
    std::vector<std::size_t> h(size(), 0);
    // ids form a linear extension, so one ascending pass suffices
    for (ElementId b = 0; b < size(); ++b)
      for (ElementId a = 0; a < b; ++a)
        if (leq(a, b) && a != b) h[b] = std::max(h[b], h[a] + 1);
    return h;
  }

  bool same_tables(const OrthoLattice& other) const { return data_ == other.data_; }

private:
  std::shared_ptr<const LatticeTables> data_;
};

namespace detail {

inline std::string normalize_label(std::string_view s) {
  std::string out(s);
  if (!out.empty() && out[0] == '~') out = "\xC2\xAC" + out.substr(1);
  return out;
}

}  // namespace detail

inline std::optional<ElementId> OrthoLattice::find(std::string_view name) const {
  const std::string key = detail::normalize_label(name);
  for (ElementId i = 0; i < size(); ++i)
    if (label(i) == key) return i;
  if (!name.empty() && name[0] == '#') {
    try {
      std::size_t pos = 0;
      const unsigned long v = std::stoul(std::string(name.substr(1)), &pos);
      if (pos + 1 == name.size() && v < size()) return static_cast<ElementId>(v);
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

inline OrthoLattice OrthoLattice::from_order(std::size_t n, const std::vector<std::uint8_t>& leq,
                                             const std::vector<ElementId>& ortho,
                                             std::vector<std::string> labels) {
  if (n == 0) throw StructureError("lattice has no elements");
  if (leq.size() != n * n) throw StructureError("order table is not n x n");
  if (ortho.size() != n) throw StructureError("ortho map does not have n entries");
  if (!labels.empty() && labels.size() != n)
    throw StructureError("label list does not have n entries");
  for (ElementId x : ortho)
    if (x >= n) throw StructureError("ortho entry out of range");
  auto le = [&](std::size_t a, std::size_t b) { return leq[a * n + b] != 0; };

  // Kahn's algorithm, always taking the smallest available id.
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && le(a, b)) {
        if (le(b, a))
          throw StructureError("order is not antisymmetric: " + std::to_string(a) + " and " +
                               std::to_string(b));
        ++indeg[b];
      }
  std::vector<std::size_t> order;
  std::vector<std::uint8_t> done(n, 0);
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t x = 0; x < n; ++x)
      if (!done[x] && indeg[x] == 0) {
        pick = x;
        break;
      }
    if (pick == n) throw StructureError("order relation contains a cycle");
    done[pick] = 1;
    order.push_back(pick);
    for (std::size_t b = 0; b < n; ++b)
      if (b != pick && le(pick, b)) --indeg[b];
  }
  std::vector<ElementId> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = static_cast<ElementId>(i);

  LatticeTables t;
  t.n = n;
  t.leq.assign(n * n, 0);
  t.meet.assign(n * n, 0);
  t.join.assign(n * n, 0);
  t.ortho.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t.leq[pos[a] * n + pos[b]] = leq[a * n + b];
  for (std::size_t a = 0; a < n; ++a) t.ortho[pos[a]] = pos[ortho[a]];
  if (!labels.empty()) {
    t.labels.resize(n);
    for (std::size_t a = 0; a < n; ++a) t.labels[pos[a]] = std::move(labels[a]);
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!t.le(0, static_cast<ElementId>(x)))
      throw StructureError("order has no least element");
    if (!t.le(static_cast<ElementId>(x), static_cast<ElementId>(n - 1)))
      throw StructureError("order has no greatest element");
  }

  auto lbl = [&](std::size_t x) {
    return t.labels.empty() ? "#" + std::to_string(x) : t.labels[x];
  };
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = a; b < n; ++b) {
      // glb: the greatest common lower bound; ids ascend along the order, so
      // the largest-id common lower bound is the only candidate.
      ElementId g = 0;
      ElementId l = static_cast<ElementId>(n - 1);
      for (ElementId c = 0; c < n; ++c)
        if (t.le(c, a) && t.le(c, b)) g = c;
      for (ElementId c = static_cast<ElementId>(n); c-- > 0;)
        if (t.le(a, c) && t.le(b, c)) l = c;
      for (ElementId c = 0; c < n; ++c) {
        if (t.le(c, a) && t.le(c, b) && !t.le(c, g))
          throw StructureError("elements " + lbl(a) + " and " + lbl(b) +
                               " have no greatest lower bound");
        if (t.le(a, c) && t.le(b, c) && !t.le(l, c))
          throw StructureError("elements " + lbl(a) + " and " + lbl(b) +
                               " have no least upper bound");
      }
      t.meet[a * n + b] = t.meet[b * n + a] = g;
      t.join[a * n + b] = t.join[b * n + a] = l;
    }
  return from_tables(std::move(t));
}

// ---------------------------------------------------------------------------
// Axiom verification

struct LawResult {
  std::string law;
  bool holds = true;
  std::vector<ElementId> witness{};  // first counterexample, lexicographic
  std::string detail{};
};

struct AxiomReport {
  std::vector<LawResult> laws;

  bool orthomodular() const {
    return std::all_of(laws.begin(), laws.end(), [](const LawResult& r) { return r.holds; });
  }
  const LawResult* find(std::string_view law) const {
    for (const auto& r : laws)
      if (r.law == law) return &r;
    return nullptr;
  }
  std::vector<std::string> failed() const {
    std::vector<std::string> out;
    for (const auto& r : laws)
      if (!r.holds) out.push_back(r.law);
    return out;
  }
};

/// Law names, in report order.
inline constexpr std::string_view kLawOrder = "order";
inline constexpr std::string_view kLawLattice = "lattice";
inline constexpr std::string_view kLawInvolution = "involution";
inline constexpr std::string_view kLawComplement = "complement";
inline constexpr std::string_view kLawOrthomodular = "orthomodular";

/// Checks, in order: partial-order and bound laws, glb/lub coherence of the
/// meet and join tables, involution laws (double negation, antitone, De
/// Morgan), x ∧ ¬x = 0, and the orthomodular law
/// x ∨ (¬x ∧ (x ∨ y)) = x ∨ y. Each law records its first counterexample.
inline AxiomReport verify_axioms(const LatticeTables& t) {
  check_structure(t);
  const auto n = static_cast<ElementId>(t.n);
  const ElementId bot = 0;
  const ElementId top = n - 1;
  AxiomReport report;

  auto fail = [](LawResult& r, std::vector<ElementId> w, std::string why) {
    r.holds = false;
    r.witness = std::move(w);
    r.detail = std::move(why);
  };

  {
    LawResult r{std::string(kLawOrder)};
    for (ElementId x = 0; x < n && r.holds; ++x) {
      if (!t.le(x, x)) fail(r, {x}, "not reflexive");
      else if (!t.le(bot, x)) fail(r, {x}, "bottom is not below x");
      else if (!t.le(x, top)) fail(r, {x}, "x is not below top");
    }
    for (ElementId x = 0; x < n && r.holds; ++x)
      for (ElementId y = 0; y < n && r.holds; ++y)
        if (x != y && t.le(x, y) && t.le(y, x)) fail(r, {x, y}, "not antisymmetric");
    for (ElementId x = 0; x < n && r.holds; ++x)
      for (ElementId y = 0; y < n && r.holds; ++y) {
        if (!t.le(x, y)) continue;
        for (ElementId z = 0; z < n && r.holds; ++z)
          if (t.le(y, z) && !t.le(x, z)) fail(r, {x, y, z}, "not transitive");
      }
    report.laws.push_back(std::move(r));
  }

  {
    LawResult r{std::string(kLawLattice)};
    for (ElementId x = 0; x < n && r.holds; ++x)
      for (ElementId y = 0; y < n && r.holds; ++y) {
        const ElementId m = t.m(x, y);
        const ElementId jn = t.j(x, y);
        if (!t.le(m, x) || !t.le(m, y)) {
          fail(r, {x, y}, "meet is not a lower bound");
          break;
        }
        if (!t.le(x, jn) || !t.le(y, jn)) {
          fail(r, {x, y}, "join is not an upper bound");
          break;
        }
        for (ElementId z = 0; z < n; ++z) {
          if (t.le(z, x) && t.le(z, y) && !t.le(z, m)) {
            fail(r, {x, y, z}, "meet is not the greatest lower bound");
            break;
          }
          if (t.le(x, z) && t.le(y, z) && !t.le(jn, z)) {
            fail(r, {x, y, z}, "join is not the least upper bound");
            break;
          }
        }
      }
    report.laws.push_back(std::move(r));
  }

  {
    LawResult r{std::string(kLawInvolution)};
    for (ElementId x = 0; x < n && r.holds; ++x)
      if (t.ortho[t.ortho[x]] != x) fail(r, {x}, "ortho(ortho(x)) != x");
    for (ElementId x = 0; x < n && r.holds; ++x)
      for (ElementId y = 0; y < n && r.holds; ++y) {
        if (t.le(x, y) && !t.le(t.ortho[y], t.ortho[x]))
          fail(r, {x, y}, "ortho is not order-reversing");
        else if (t.ortho[t.j(x, y)] != t.m(t.ortho[x], t.ortho[y]))
          fail(r, {x, y}, "ortho(x v y) != ortho(x) ^ ortho(y)");
      }
    report.laws.push_back(std::move(r));
  }

  {
    LawResult r{std::string(kLawComplement)};
    for (ElementId x = 0; x < n && r.holds; ++x)
      if (t.m(x, t.ortho[x]) != bot) fail(r, {x}, "x ^ ortho(x) != 0");
    report.laws.push_back(std::move(r));
  }

  {
    LawResult r{std::string(kLawOrthomodular)};
    for (ElementId x = 0; x < n && r.holds; ++x)
      for (ElementId y = 0; y < n && r.holds; ++y) {
        const ElementId xy = t.j(x, y);
        if (t.j(x, t.m(t.ortho[x], xy)) != xy)
          fail(r, {x, y}, "x v (ortho(x) ^ (x v y)) != x v y");
      }
    report.laws.push_back(std::move(r));
  }
  return report;
}

inline AxiomReport verify_axioms(const OrthoLattice& L) { return verify_axioms(L.tables()); }

inline bool is_complement(const OrthoLattice& L, ElementId a, ElementId c) {
  return L.meet(a, c) == L.bottom() && L.join(a, c) == L.top();
}

// ---------------------------------------------------------------------------
// Subalgebras

/// A subset of a lattice containing 0 and 1 and closed under meet, join and
/// ortho. Members are kept sorted ascending.
class Subalgebra {
public:
  Subalgebra(OrthoLattice parent, std::vector<ElementId> members)
      : parent_(std::move(parent)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    in_.assign(parent_.size(), 0);
    for (ElementId x : members_) {
      if (x >= parent_.size()) throw std::invalid_argument("subalgebra member out of range");
      in_[x] = 1;
    }
    if (!contains(parent_.bottom()) || !contains(parent_.top()))
      throw std::invalid_argument("subalgebra must contain bottom and top");
    for (ElementId x : members_) {
      if (!contains(parent_.ortho(x)))
        throw std::invalid_argument("subalgebra not closed under ortho at " + parent_.label(x));
      for (ElementId y : members_)
        if (!contains(parent_.meet(x, y)) || !contains(parent_.join(x, y)))
          throw std::invalid_argument("subalgebra not closed under meet/join at (" +
                                      parent_.label(x) + ", " + parent_.label(y) + ")");
    }
  }

  const OrthoLattice& parent() const { return parent_; }
  const std::vector<ElementId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(ElementId x) const { return x < in_.size() && in_[x] != 0; }

  /// Minimal nonzero members.
  std::vector<ElementId> atoms() const {
    std::vector<ElementId> out;
    for (ElementId x : members_) {
      if (x == parent_.bottom()) continue;
      bool minimal = true;
      for (ElementId y : members_)
        if (y != x && y != parent_.bottom() && parent_.leq(y, x)) {
          minimal = false;
          break;
        }
      if (minimal) out.push_back(x);
    }
    return out;
  }

  bool operator==(const Subalgebra& o) const { return members_ == o.members_; }

private:
  OrthoLattice parent_;
  std::vector<ElementId> members_;
  std::vector<std::uint8_t> in_;
};

/// Smallest subalgebra containing the generators. Fixpoint iteration in
/// ascending id order.
inline Subalgebra closure(const OrthoLattice& L, const std::vector<ElementId>& generators) {
  std::vector<std::uint8_t> in(L.size(), 0);
  in[L.bottom()] = in[L.top()] = 1;
  for (ElementId g : generators) {
    if (g >= L.size()) throw std::invalid_argument("generator out of range");
    in[g] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (ElementId x = 0; x < L.size(); ++x) {
      if (!in[x]) continue;
      if (!in[L.ortho(x)]) in[L.ortho(x)] = 1, changed = true;
      for (ElementId y = 0; y < L.size(); ++y) {
        if (!in[y]) continue;
        if (!in[L.meet(x, y)]) in[L.meet(x, y)] = 1, changed = true;
        if (!in[L.join(x, y)]) in[L.join(x, y)] = 1, changed = true;
      }
    }
  }
  std::vector<ElementId> members;
  for (ElementId x = 0; x < L.size(); ++x)
    if (in[x]) members.push_back(x);
  return Subalgebra(L, std::move(members));
}

inline Subalgebra whole(const OrthoLattice& L) {
  std::vector<ElementId> all(L.size());
  for (ElementId i = 0; i < L.size(); ++i) all[i] = i;
  return Subalgebra(L, std::move(all));
}

/// First triple (x, y, z) of members, lexicographic by id, violating
/// x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z).
inline std::optional<std::array<ElementId, 3>> distributivity_witness(const Subalgebra& S) {
  const auto& L = S.parent();
  for (ElementId x : S.members())
    for (ElementId y : S.members())
      for (ElementId z : S.members())
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)))
          return std::array<ElementId, 3>{x, y, z};
  return std::nullopt;
}

inline bool is_boolean(const Subalgebra& S) { return !distributivity_witness(S).has_value(); }

// ---------------------------------------------------------------------------
// Products

/// Componentwise product. Element (i, j) gets id i * |L2| + j and label
/// "(l1,l2)". Both factors must be orthomodular.
inline OrthoLattice product(const OrthoLattice& L1, const OrthoLattice& L2) {
  if (!verify_axioms(L1).orthomodular())
    throw std::invalid_argument("product: first factor is not an orthomodular lattice");
  if (!verify_axioms(L2).orthomodular())
    throw std::invalid_argument("product: second factor is not an orthomodular lattice");
  const std::size_t n1 = L1.size();
  const std::size_t n2 = L2.size();
  const std::size_t n = n1 * n2;
  auto id = [n2](std::size_t i, std::size_t j) { return static_cast<ElementId>(i * n2 + j); };
  LatticeTables t;
  t.n = n;
  t.leq.assign(n * n, 0);
  t.meet.assign(n * n, 0);
  t.join.assign(n * n, 0);
  t.ortho.assign(n, 0);
  t.labels.resize(n);
  for (ElementId i = 0; i < n1; ++i)
    for (ElementId j = 0; j < n2; ++j) {
      const ElementId a = id(i, j);
      t.ortho[a] = id(L1.ortho(i), L2.ortho(j));
      t.labels[a] = "(" + L1.label(i) + "," + L2.label(j) + ")";
      for (ElementId k = 0; k < n1; ++k)
        for (ElementId l = 0; l < n2; ++l) {
          const ElementId b = id(k, l);
          t.leq[a * n + b] = L1.leq(i, k) && L2.leq(j, l);
          t.meet[a * n + b] = id(L1.meet(i, k), L2.meet(j, l));
          t.join[a * n + b] = id(L1.join(i, k), L2.join(j, l));
        }
    }
  return OrthoLattice::from_tables(std::move(t));
}

}  // namespace omlkit
