#pragma once

// Backtracking with forward checking over "pick one value per variable"
// problems with binary compatibility tables. Global valuations (one atom per
// block) and hypergraph colourings (one true atom per context) both reduce
// to this form.
//
// Variables are assigned in index order and values tried ascending, so the
// first solution found is the lexicographically least one.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace omlkit {

class ChoiceProblem {
public:
  explicit ChoiceProblem(std::vector<std::size_t> domain_sizes)
      : domains_(std::move(domain_sizes)), neighbours_(domains_.size()) {
    unary_.reserve(domains_.size());
    for (std::size_t d : domains_) unary_.emplace_back(d, 1);
  }

  std::size_t variables() const { return domains_.size(); }
  std::size_t domain_size(std::size_t var) const { return domains_[var]; }

  void forbid(std::size_t var, std::size_t value) { unary_.at(var).at(value) = 0; }
  bool allowed(std::size_t var, std::size_t value) const { return unary_[var][value] != 0; }

  /// Adds a binary constraint; ok(va, vb) says whether var a = va and var
  /// b = vb may coexist. Pairs without a constraint are unconstrained.
  template <class Pred>
  void constrain(std::size_t a, std::size_t b, Pred ok) {
    if (a == b || a >= variables() || b >= variables())
      throw std::invalid_argument("constrain: bad variable pair");
    Table t{a, b, std::vector<std::uint8_t>(domains_[a] * domains_[b], 0)};
    bool trivial = true;
    for (std::size_t va = 0; va < domains_[a]; ++va)
      for (std::size_t vb = 0; vb < domains_[b]; ++vb) {
        const bool allowed = ok(va, vb);
        t.allowed[va * domains_[b] + vb] = allowed;
        trivial = trivial && allowed;
      }
    if (trivial) return;
    neighbours_[a].push_back(tables_.size());
    neighbours_[b].push_back(tables_.size());
    tables_.push_back(std::move(t));
  }

  /// True iff var a = va and var b = vb are compatible under every table.
  bool compatible(std::size_t a, std::size_t va, std::size_t b, std::size_t vb) const {
    for (std::size_t ti : neighbours_[a]) {
      const Table& t = tables_[ti];
      if (t.a == a && t.b == b && !t.allowed[va * domains_[b] + vb]) return false;
      if (t.a == b && t.b == a && !t.allowed[vb * domains_[a] + va]) return false;
    }
    return true;
  }

  struct Table {
    std::size_t a;
    std::size_t b;
    std::vector<std::uint8_t> allowed;  // row-major domain(a) x domain(b)
  };
  const std::vector<Table>& tables() const { return tables_; }
  const std::vector<std::size_t>& neighbours(std::size_t var) const { return neighbours_[var]; }

private:
  std::vector<std::size_t> domains_;
  std::vector<std::vector<std::uint8_t>> unary_;
  std::vector<Table> tables_;
  std::vector<std::vector<std::size_t>> neighbours_;
};

struct SearchStats {
  std::size_t nodes = 0;           // value assignments tried
  std::size_t contradictions = 0;  // assignments that wiped out some domain
  std::size_t solutions = 0;
};

struct SearchResult {
  std::optional<std::vector<std::size_t>> solution;
  SearchStats stats;

  bool sat() const { return solution.has_value(); }
};

namespace detail {

class ForwardChecker {
public:
  explicit ForwardChecker(const ChoiceProblem& p) : p_(p), live_(p.variables()) {
    for (std::size_t v = 0; v < p.variables(); ++v) {
      live_[v].assign(p.domain_size(v), 0);
      for (std::size_t x = 0; x < p.domain_size(v); ++x) live_[v][x] = p.allowed(v, x);
    }
    choice_.assign(p.variables(), 0);
  }

  // visit returns false to stop the enumeration
  void run(const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    visit_ = &visit;
    for (std::size_t v = 0; v < p_.variables(); ++v)
      if (p_.domain_size(v) == 0 || !any_live(v)) return;
    descend(0);
  }

  const SearchStats& stats() const { return stats_; }

private:
  bool any_live(std::size_t v) const {
    for (auto x : live_[v])
      if (x) return true;
    return false;
  }

  // returns false when the enumeration should stop
  bool descend(std::size_t var) {
    if (var == p_.variables()) {
      ++stats_.solutions;
      return (*visit_)(choice_);
    }
    for (std::size_t value = 0; value < p_.domain_size(var); ++value) {
      if (!live_[var][value]) continue;
      ++stats_.nodes;
      choice_[var] = value;
      const std::size_t mark = trail_.size();
      bool wiped = false;
      for (std::size_t ti : p_.neighbours(var)) {
        const auto& t = p_.tables()[ti];
        const bool forward = t.a == var;
        const std::size_t other = forward ? t.b : t.a;
        if (other <= var) continue;
        bool remaining = false;
        for (std::size_t w = 0; w < p_.domain_size(other); ++w) {
          if (!live_[other][w]) continue;
          const bool ok = forward ? t.allowed[value * p_.domain_size(other) + w]
                                  : t.allowed[w * p_.domain_size(var) + value];
          if (ok) {
            remaining = true;
          } else {
            live_[other][w] = 0;
            trail_.emplace_back(other, w);
          }
        }
        if (!remaining) {
          wiped = true;
          break;
        }
      }
      bool keep_going = true;
      if (wiped) ++stats_.contradictions;
      else keep_going = descend(var + 1);
      while (trail_.size() > mark) {
        live_[trail_.back().first][trail_.back().second] = 1;
        trail_.pop_back();
      }
      if (!keep_going) return false;
    }
    return true;
  }

  const ChoiceProblem& p_;
  std::vector<std::vector<std::uint8_t>> live_;
  std::vector<std::size_t> choice_;
  std::vector<std::pair<std::size_t, std::size_t>> trail_;
  const std::function<bool(const std::vector<std::size_t>&)>* visit_ = nullptr;
  SearchStats stats_;
};

}  // namespace detail

/// First solution in lexicographic order, or none with the size of the
/// exhausted search tree.
inline SearchResult solve(const ChoiceProblem& p) {
  detail::ForwardChecker fc(p);
  SearchResult result;
  fc.run([&](const std::vector<std::size_t>& s) {
    result.solution = s;
    return false;
  });
  result.stats = fc.stats();
  return result;
}

/// Calls visit for every solution in lexicographic order until it returns false.
inline SearchStats enumerate_solutions(
    const ChoiceProblem& p, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  detail::ForwardChecker fc(p);
  fc.run(visit);
  return fc.stats();
}

inline std::size_t count_solutions(const ChoiceProblem& p) {
  return enumerate_solutions(p, [](const std::vector<std::size_t>&) { return true; }).solutions;
}

}  // namespace omlkit
