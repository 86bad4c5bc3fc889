#pragma once

// Text formats (lattice, Greechie, ray documents), DOT export and JSON
// serialization of reports. Grammars are documented in docs/formats.md.

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "lattice.hpp"
#include "modal.hpp"
#include "square.hpp"
#include "structures.hpp"
#include "valuations.hpp"

namespace omlkit {

inline constexpr std::string_view kLatticeHeader = "omlkit-lattice v1";
inline constexpr std::string_view kGreechieHeader = "omlkit-greechie v1";
inline constexpr std::string_view kRaysHeader = "omlkit-rays v1";

/// Input error with a 1-based position; line 0 means the whole document.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message),
        line_(line), column_(column), message_(message) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

namespace detail {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

struct Line {
  std::string text;
  std::size_t number;
};

// Splits on newlines and ';'. Blank lines and lines starting with '#' are dropped.
inline std::vector<Line> logical_lines(std::string_view text, bool semicolons) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string raw(text.substr(start, end - start));
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto first = raw.find_first_not_of(" \t");
    if (first != std::string::npos && raw[first] != '#') {
      if (semicolons) {
        std::size_t s = 0;
        while (s <= raw.size()) {
          std::size_t e = raw.find(';', s);
          if (e == std::string::npos) e = raw.size();
          std::string piece = raw.substr(0, e);
          // keep columns meaningful by blanking everything before the piece
          for (std::size_t i = 0; i < s; ++i) piece[i] = ' ';
          if (piece.find_first_not_of(" \t") != std::string::npos) out.push_back({piece, number});
          s = e + 1;
        }
      } else {
        out.push_back({raw, number});
      }
    }
    start = end + 1;
  }
  return out;
}

inline std::vector<Token> tokens(const Line& l, std::size_t from = 0) {
  std::vector<Token> out;
  std::size_t i = from;
  while (i < l.text.size()) {
    while (i < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[i]))) ++i;
    if (i >= l.text.size()) break;
    std::size_t j = i;
    while (j < l.text.size() && !std::isspace(static_cast<unsigned char>(l.text[j]))) ++j;
    out.push_back({l.text.substr(i, j - i), l.number, i + 1});
    i = j;
  }
  return out;
}

// Splits a line at commas outside parentheses, so product labels like
// "(a,b)" stay whole. Columns point at the first non-blank of each item.
inline std::vector<Token> comma_items(const Line& l, std::size_t from = 0) {
  std::vector<Token> out;
  int depth = 0;
  std::size_t start = from;
  auto flush = [&](std::size_t end) {
    std::size_t a = start;
    while (a < end && std::isspace(static_cast<unsigned char>(l.text[a]))) ++a;
    std::size_t b = end;
    while (b > a && std::isspace(static_cast<unsigned char>(l.text[b - 1]))) --b;
    if (a < b) out.push_back({l.text.substr(a, b - a), l.number, a + 1});
  };
  for (std::size_t i = from; i < l.text.size(); ++i) {
    const char c = l.text[i];
    if (c == '(') ++depth;
    else if (c == ')' && depth > 0) --depth;
    else if (c == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(l.text.size());
  return out;
}

inline std::string trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string_view::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return std::string(s.substr(a, b - a + 1));
}

inline void expect_header(const std::vector<Line>& lines, std::string_view header) {
  if (lines.empty()) throw ParseError(1, 1, "empty document, expected '" + std::string(header) + "'");
  if (trim(lines.front().text) != header)
    throw ParseError(lines.front().number, 1, "expected header '" + std::string(header) + "'");
}

// "name:" at the start of a line opens a section; the rest of the line is content.
inline std::optional<std::pair<std::string, std::size_t>> section_start(const Line& l) {
  const std::string t = trim(l.text);
  const auto colon = t.find(':');
  if (colon == std::string::npos) return std::nullopt;
  const std::string name = t.substr(0, colon);
  if (name != "elements" && name != "covers" && name != "ortho" && name != "atoms" &&
      name != "contexts")
    return std::nullopt;
  return std::make_pair(name, l.text.find(':') + 1);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Lattice documents

/// Parses a lattice document: header, then "elements:", "covers:" and
/// "ortho:" sections. The order is the reflexive-transitive closure of the
/// covers. Axioms are not checked here.
inline OrthoLattice parse_lattice(std::string_view text) {
  using detail::Line;
  using detail::Token;
  const auto lines = detail::logical_lines(text, false);
  detail::expect_header(lines, kLatticeHeader);

  std::map<std::string, std::vector<std::pair<Line, std::size_t>>> sections;
  std::map<std::string, std::size_t> section_line;
  std::string current;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (auto s = detail::section_start(lines[i])) {
      if (s->first == "atoms" || s->first == "contexts")
        throw ParseError(lines[i].number, 1, "section '" + s->first + "' belongs to Greechie documents");
      if (sections.count(s->first))
        throw ParseError(lines[i].number, 1, "duplicate section '" + s->first + "'");
      current = s->first;
      sections[current];
      section_line[current] = lines[i].number;
      sections[current].push_back({lines[i], s->second});
      continue;
    }
    if (current.empty())
      throw ParseError(lines[i].number, 1, "content before the first section");
    sections[current].push_back({lines[i], 0});
  }
  for (const char* name : {"elements", "covers", "ortho"})
    if (!sections.count(name))
      throw ParseError(0, 0, std::string("missing section '") + name + ":'");

  std::vector<std::string> labels;
  std::vector<Token> declared;
  std::map<std::string, std::size_t> id;
  for (const auto& [line, from] : sections["elements"])
    for (const auto& tok : detail::tokens(line, from)) {
      if (tok.text[0] == '#' || tok.text.find_first_of(";<") != std::string::npos ||
          (tok.text.find(',') != std::string::npos && tok.text[0] != '('))
        throw ParseError(tok.line, tok.column, "invalid element label '" + tok.text + "'");
      if (!id.emplace(tok.text, labels.size()).second)
        throw ParseError(tok.line, tok.column, "duplicate element '" + tok.text + "'");
      labels.push_back(tok.text);
      declared.push_back(tok);
    }
  const std::size_t n = labels.size();
  if (n == 0) throw ParseError(section_line["elements"], 1, "no elements declared");
  auto lookup = [&](const Token& t) {
    auto it = id.find(detail::normalize_label(t.text));
    if (it == id.end()) it = id.find(t.text);
    if (it == id.end())
      throw ParseError(t.line, t.column, "dangling label '" + t.text + "' (not an element)");
    return it->second;
  };

  struct Cover {
    std::size_t lo, hi;
    Token at;
  };
  std::vector<Cover> covers;
  for (const auto& [line, from] : sections["covers"]) {
    for (const auto& item : detail::comma_items(line, from)) {
      const auto lt = item.text.find('<');
      const std::string lo = detail::trim(item.text.substr(0, lt == std::string::npos ? 0 : lt));
      const std::string hi = lt == std::string::npos ? "" : detail::trim(item.text.substr(lt + 1));
      if (lt == std::string::npos || lo.empty() || hi.empty() || hi.find('<') != std::string::npos ||
          lo.find_first_of(" \t") != std::string::npos || hi.find_first_of(" \t") != std::string::npos)
        throw ParseError(item.line, item.column, "expected a cover 'x < y', got '" + item.text + "'");
      covers.push_back({lookup(Token{lo, item.line, item.column}),
                        lookup(Token{hi, item.line, item.column}), item});
    }
  }

  std::vector<ElementId> ortho(n, static_cast<ElementId>(n));
  for (const auto& [line, from] : sections["ortho"]) {
    std::vector<Token> toks;
    for (const auto& item : detail::comma_items(line, from)) {
      Line sub{std::string(item.column - 1, ' ') + item.text, item.line};
      for (auto& t : detail::tokens(sub)) toks.push_back(t);
    }
    if (toks.size() % 2 != 0)
      throw ParseError(toks.back().line, toks.back().column, "ortho entries come in pairs");
    for (std::size_t i = 0; i < toks.size(); i += 2) {
      const std::size_t a = lookup(toks[i]);
      const std::size_t b = lookup(toks[i + 1]);
      for (auto [x, y, t] : {std::tuple{a, b, toks[i]}, std::tuple{b, a, toks[i + 1]}}) {
        if (ortho[x] != n && ortho[x] != y)
          throw ParseError(t.line, t.column, "conflicting ortho for '" + labels[x] + "'");
        ortho[x] = static_cast<ElementId>(y);
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (ortho[x] == n)
      throw ParseError(declared[x].line, declared[x].column,
                       "dangling label '" + labels[x] + "' has no ortho partner");

  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) leq[x * n + x] = 1;
  for (const auto& c : covers) {
    if (c.lo == c.hi)
      throw ParseError(c.at.line, c.at.column, "cover relates '" + labels[c.lo] + "' to itself");
    leq[c.lo * n + c.hi] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;
  for (const auto& c : covers)
    if (leq[c.hi * n + c.lo])
      throw ParseError(c.at.line, c.at.column,
                       "covers form a cycle through '" + labels[c.lo] + "' and '" + labels[c.hi] + "'");
  try {
    return OrthoLattice::from_order(n, leq, ortho, labels);
  } catch (const StructureError& e) {
    throw ParseError(section_line["covers"], 1, std::string("not a bounded lattice: ") + e.what());
  }
}

inline std::string render_lattice(const OrthoLattice& L) {
  std::ostringstream out;
  out << kLatticeHeader << "\nelements:\n ";
  for (ElementId x = 0; x < L.size(); ++x) out << ' ' << L.label(x);
  out << "\ncovers:\n";
  for (const auto& [a, b] : L.covers()) out << "  " << L.label(a) << " < " << L.label(b) << '\n';
  out << "ortho:\n";
  for (ElementId x = 0; x < L.size(); ++x)
    if (x <= L.ortho(x)) out << "  " << L.label(x) << ' ' << L.label(L.ortho(x)) << '\n';
  return out.str();
}

/// Same labels, and the same order and ortho map once elements are matched
/// by label.
inline bool label_isomorphic(const OrthoLattice& A, const OrthoLattice& B) {
  if (A.size() != B.size()) return false;
  std::vector<ElementId> to(A.size());
  for (ElementId x = 0; x < A.size(); ++x) {
    auto y = B.find(A.label(x));
    if (!y || B.label(*y) != A.label(x)) return false;
    to[x] = *y;
  }
  for (ElementId x = 0; x < A.size(); ++x) {
    if (to[A.ortho(x)] != B.ortho(to[x])) return false;
    for (ElementId y = 0; y < A.size(); ++y)
      if (A.leq(x, y) != B.leq(to[x], to[y])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Greechie documents

/// Header, optional "atoms:" section declaring atom order, then "contexts:"
/// with one whitespace-separated context per line.
inline ContextFamily parse_greechie(std::string_view text) {
  const auto lines = detail::logical_lines(text, false);
  detail::expect_header(lines, kGreechieHeader);
  ContextFamily F;
  std::map<std::string, std::size_t> id;
  bool declared = false;
  std::string current;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::size_t from = 0;
    if (auto s = detail::section_start(lines[i])) {
      if (s->first != "atoms" && s->first != "contexts")
        throw ParseError(lines[i].number, 1, "unexpected section '" + s->first + "'");
      if (s->first == "atoms" && (declared || current == "contexts"))
        throw ParseError(lines[i].number, 1, "'atoms:' must come once, before 'contexts:'");
      if (s->first == "contexts" && current == "contexts")
        throw ParseError(lines[i].number, 1, "duplicate section 'contexts'");
      current = s->first;
      declared = declared || current == "atoms";
      from = s->second;
    } else if (current.empty()) {
      throw ParseError(lines[i].number, 1, "content before the first section");
    }
    const auto toks = detail::tokens(lines[i], from);
    if (current == "atoms") {
      for (const auto& t : toks) {
        if (!id.emplace(t.text, F.atoms.size()).second)
          throw ParseError(t.line, t.column, "duplicate atom '" + t.text + "'");
        F.atoms.push_back(t.text);
      }
      continue;
    }
    if (toks.empty()) continue;
    std::vector<std::size_t> ctx;
    std::set<std::size_t> seen;
    for (const auto& t : toks) {
      auto it = id.find(t.text);
      if (it == id.end()) {
        if (declared) throw ParseError(t.line, t.column, "dangling label '" + t.text + "' (not a declared atom)");
        it = id.emplace(t.text, F.atoms.size()).first;
        F.atoms.push_back(t.text);
      }
      if (!seen.insert(it->second).second)
        throw ParseError(t.line, t.column, "atom '" + t.text + "' repeated in context");
      ctx.push_back(it->second);
    }
    F.contexts.push_back(std::move(ctx));
  }
  if (current != "contexts") throw ParseError(0, 0, "missing section 'contexts:'");
  return F;
}

inline std::string render_greechie(const ContextFamily& F) {
  std::ostringstream out;
  out << kGreechieHeader << "\natoms:\n ";
  for (const auto& a : F.atoms) out << ' ' << a;
  out << "\ncontexts:\n";
  for (const auto& c : F.contexts) {
    out << ' ';
    for (std::size_t a : c) out << ' ' << F.atoms[a];
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Ray documents

namespace detail {

inline Rational parse_rational(const Token& t) {
  const auto slash = t.text.find('/');
  auto integer = [&](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) throw ParseError(t.line, t.column, "malformed number '" + t.text + "'");
    for (std::size_t k = i; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k])))
        throw ParseError(t.line, t.column, "malformed number '" + t.text + "'");
    return boost::multiprecision::cpp_int(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rational(integer(t.text));
  const auto num = integer(t.text.substr(0, slash));
  const auto den = integer(t.text.substr(slash + 1));
  if (den == 0) throw ParseError(t.line, t.column, "zero denominator in '" + t.text + "'");
  return Rational(num, den);
}

}  // namespace detail

/// Header, "dim d", then one ray per line: optional "label:" followed by d
/// rational entries (integers or p/q). ';' also separates lines.
inline RaySet parse_rays(std::string_view text) {
  const auto lines = detail::logical_lines(text, true);
  // the header may be omitted when the document opens with "dim"
  const bool headerless = !lines.empty() && detail::trim(lines.front().text).rfind("dim", 0) == 0;
  if (!headerless) detail::expect_header(lines, kRaysHeader);
  RaySet R;
  std::set<std::string> names;
  bool have_dim = false;
  for (std::size_t i = headerless ? 0 : 1; i < lines.size(); ++i) {
    auto toks = detail::tokens(lines[i]);
    if (toks.empty()) continue;
    if (!have_dim) {
      if (toks.size() != 2 || toks[0].text != "dim")
        throw ParseError(toks[0].line, toks[0].column, "expected 'dim <d>'");
      try {
        std::size_t pos = 0;
        R.dim = std::stoul(toks[1].text, &pos);
        if (pos != toks[1].text.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(toks[1].line, toks[1].column, "malformed dimension '" + toks[1].text + "'");
      }
      if (R.dim < 2) throw ParseError(toks[1].line, toks[1].column, "dimension must be at least 2");
      have_dim = true;
      continue;
    }
    std::string label = "r" + std::to_string(R.rays.size() + 1);
    if (toks[0].text.back() == ':') {
      label = toks[0].text.substr(0, toks[0].text.size() - 1);
      if (label.empty()) throw ParseError(toks[0].line, toks[0].column, "empty ray label");
      toks.erase(toks.begin());
    }
    if (!names.insert(label).second)
      throw ParseError(lines[i].number, 1, "duplicate ray label '" + label + "'");
    if (toks.size() != R.dim)
      throw ParseError(lines[i].number, toks.empty() ? 1 : toks.front().column,
                       "ray has " + std::to_string(toks.size()) + " entries, expected " +
                           std::to_string(R.dim));
    std::vector<Rational> ray;
    for (const auto& t : toks) ray.push_back(detail::parse_rational(t));
    R.rays.push_back(std::move(ray));
    R.labels.push_back(label);
  }
  if (!have_dim) throw ParseError(0, 0, "missing 'dim <d>' line");
  try {
    validate(R);
  } catch (const RayError& e) {
    throw ParseError(0, 0, e.what());
  }
  return R;
}

inline std::string render_rays(const RaySet& R) {
  std::ostringstream out;
  out << kRaysHeader << "\ndim " << R.dim << '\n';
  for (std::size_t i = 0; i < R.rays.size(); ++i) {
    out << (i < R.labels.size() ? R.labels[i] : "r" + std::to_string(i + 1)) << ':';
    for (const auto& x : R.rays[i]) out << ' ' << x.str();
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// DOT export

namespace detail {
inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

/// Hasse diagram, one rank per height level, edges are covers.
inline std::string export_dot(const OrthoLattice& L) {
  std::ostringstream out;
  out << "graph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (ElementId x = 0; x < L.size(); ++x)
    out << "  n" << x << " [label=" << detail::dot_quote(L.label(x)) << "];\n";
  const auto h = L.heights();
  const std::size_t levels = *std::max_element(h.begin(), h.end()) + 1;
  for (std::size_t lv = 0; lv < levels; ++lv) {
    out << "  { rank=same;";
    for (ElementId x = 0; x < L.size(); ++x)
      if (h[x] == lv) out << " n" << x << ';';
    out << " }\n";
  }
  for (const auto& [a, b] : L.covers()) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

/// Greechie diagram: atoms are nodes; each context is drawn as a clique whose
/// edges carry the context's label and colour.
inline std::string export_dot(const ContextFamily& F) {
  static constexpr std::array<const char*, 8> palette = {
      "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4"};
  std::ostringstream out;
  out << "graph greechie {\n  node [shape=circle];\n";
  for (std::size_t a = 0; a < F.atoms.size(); ++a)
    out << "  a" << a << " [label=" << detail::dot_quote(F.atoms[a]) << "];\n";
  for (std::size_t c = 0; c < F.contexts.size(); ++c) {
    const auto& ctx = F.contexts[c];
    const std::string attrs = " [label=\"C" + std::to_string(c + 1) + "\", color=" +
                              palette[c % palette.size()] + "];\n";
    for (std::size_t i = 0; i < ctx.size(); ++i)
      for (std::size_t j = i + 1; j < ctx.size(); ++j)
        out << "  a" << ctx[i] << " -- a" << ctx[j] << attrs;
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// JSON

using Json = nlohmann::ordered_json;

inline Json labels_json(const OrthoLattice& L, const std::vector<ElementId>& ids) {
  Json out = Json::array();
  for (ElementId x : ids) out.push_back(L.label(x));
  return out;
}

inline Json to_json(const AxiomReport& r, const OrthoLattice& L) {
  Json laws = Json::array();
  for (const auto& law : r.laws) {
    Json j{{"law", law.law}, {"holds", law.holds}};
    if (!law.holds) {
      Json w = Json::array();
      for (ElementId x : law.witness) w.push_back(x < L.size() ? L.label(x) : std::to_string(x));
      j["witness"] = w;
      j["detail"] = law.detail;
    }
    laws.push_back(j);
  }
  return Json{{"orthomodular", r.orthomodular()}, {"laws", laws}};
}

inline Json to_json(const MksVerdict& v, const OrthoLattice& L) {
  return Json{{"has_global", v.has_global},
              {"exists_actualizable_f", v.exists_actualizable_f},
              {"biconditional_holds", v.biconditional_holds},
              {"f_count", v.f_count},
              {"actualizable_f", labels_json(L, v.actualizable_f)},
              {"search_nodes", v.global_stats.nodes},
              {"search_contradictions", v.global_stats.contradictions}};
}

inline Json to_json(const GlobalSearchResult& r, const OrthoLattice& L) {
  Json j{{"sat", r.sat()}};
  if (r.witness) {
    Json blocks = Json::array();
    for (std::size_t i = 0; i < r.witness->blocks.size(); ++i)
      blocks.push_back(Json{{"block", labels_json(L, r.witness->blocks[i].atoms())},
                            {"true_atom", L.label(r.witness->true_atoms[i])}});
    j["valuation"] = blocks;
  }
  j["search_nodes"] = r.stats.nodes;
  j["search_contradictions"] = r.stats.contradictions;
  return j;
}

inline Json to_json(const FamilySearchResult& r, const ContextFamily& F) {
  Json j{{"sat", r.sat()}};
  if (r.assignment) {
    Json t = Json::array();
    for (std::size_t a = 0; a < F.atoms.size(); ++a)
      if ((*r.assignment)[a]) t.push_back(F.atoms[a]);
    j["true_atoms"] = t;
  }
  j["search_nodes"] = r.stats.nodes;
  j["search_contradictions"] = r.stats.contradictions;
  if (auto cert = parity_certificate(F))
    j["parity_certificate"] = Json{{"contexts", cert->contexts}, {"atoms", cert->atoms},
                                   {"every_atom_in_even_number_of_contexts", true}};
  return j;
}

inline Json to_json(const SquareReport& r, const OrthoLattice& L) {
  auto verdict = [&](const Verdict& v) {
    Json w = Json::array();
    for (const auto& wit : v.witnesses)
      w.push_back(Json{{"true_atom", L.label(wit.true_atom)},
                       {"box_p", wit.values[0]},
                       {"not_diamond_p", wit.values[1]},
                       {"diamond_p", wit.values[2]},
                       {"diamond_not_p", wit.values[3]}});
    return Json{{"holds", v.holds}, {"degenerate", v.degenerate}, {"note", v.note}, {"witnesses", w}};
  };
  const auto& x = r.vertices;
  return Json{{"proposition", r.p_label},
              {"block", labels_json(L, r.block_atoms)},
              {"expanded_context", labels_json(L, r.expanded_members)},
              {"collapsed", r.collapsed},
              {"possibility_overlap", r.possibility_overlap},
              {"vertices",
               Json{{"box_p", L.label(x.box_p)},
                    {"not_diamond_p", L.label(x.not_diamond_p)},
                    {"diamond_p", L.label(x.diamond_p)},
                    {"diamond_not_p", L.label(x.diamond_not_p)}}},
              {"relations",
               Json{{"contraries", verdict(r.contraries)},
                    {"subcontraries", verdict(r.subcontraries)},
                    {"subalterns_left", verdict(r.subalterns_left)},
                    {"subalterns_right", verdict(r.subalterns_right)},
                    {"contradictories_diag1", verdict(r.contradictories_diag1)},
                    {"contradictories_diag2", verdict(r.contradictories_diag2)}}},
              {"all_hold", r.all_hold()}};
}

/// Text rendering of the square, corners as in the classical diagram.
inline std::string render_square(const SquareReport& r, const OrthoLattice& L) {
  auto mark = [](const Verdict& v) { return std::string(v.holds ? "ok" : "FAILS"); };
  const auto& x = r.vertices;
  auto corner = [&](const char* name, ElementId e) { return std::string(name) + " = " + L.label(e); };
  std::ostringstream out;
  out << "p = " << r.p_label << (r.collapsed ? "  (central: square collapses onto {p, \xC2\xACp})" : "")
      << '\n';
  out << corner("\xC2\xAC\xE2\x97\x87\xC2\xACp", x.box_p) << "  --- contraries [" << mark(r.contraries)
      << "] ---  " << corner("\xC2\xAC\xE2\x97\x87p", x.not_diamond_p) << '\n';
  out << "   |   \\                              /   |\n";
  out << "subalterns [" << mark(r.subalterns_left) << "]   contradictories ["
      << mark(r.contradictories_diag1) << " / " << mark(r.contradictories_diag2)
      << "]   subalterns [" << mark(r.subalterns_right) << "]\n";
  out << "   |   /                              \\   |\n";
  out << corner("\xE2\x97\x87p", x.diamond_p) << "  --- subcontraries [" << mark(r.subcontraries)
      << "] ---  " << corner("\xE2\x97\x87\xC2\xACp", x.diamond_not_p) << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Input resolution

using Input = std::variant<OrthoLattice, ContextFamily, RaySet>;

/// Catalog expression: factors "boolK", "moN" or "o6" joined by '*'.
inline OrthoLattice catalog_expression(std::string_view spec) {
  std::vector<OrthoLattice> factors;
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto end = spec.find('*', start);
    if (end == std::string_view::npos) end = spec.size();
    const std::string f(spec.substr(start, end - start));
    auto number = [&](std::size_t prefix) {
      const std::string digits = f.substr(prefix);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
          digits.size() > 3)
        throw std::invalid_argument("unknown lattice '" + f + "'");
      return std::stoi(digits);
    };
    if (f == "o6") factors.push_back(benzene_o6());
    else if (f.rfind("bool", 0) == 0) factors.push_back(boolean_power(number(4)));
    else if (f.rfind("mo", 0) == 0) factors.push_back(mo(number(2)));
    else throw std::invalid_argument("unknown lattice '" + f + "'");
    start = end + 1;
  }
  OrthoLattice L = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) L = product(L, factors[i]);
  return L;
}

/// Reads a file (format chosen by its header line) or, when no such file
/// exists, evaluates a catalog expression.
inline Input load_input(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    const std::string text = detail::read_file(arg);
    const auto lines = detail::logical_lines(text, false);
    const std::string head = lines.empty() ? "" : detail::trim(lines.front().text);
    if (head == kGreechieHeader) return parse_greechie(text);
    if (head == kRaysHeader) return parse_rays(text);
    return parse_lattice(text);
  }
  return catalog_expression(arg);
}

}  // namespace omlkit
