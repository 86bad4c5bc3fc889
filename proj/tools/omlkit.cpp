// omlkit command line: exit 0 on success/SAT/holds, 1 on falsified/UNSAT,
// 2 on input errors.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <omlkit/omlkit.hpp>

namespace {

using namespace omlkit;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

OrthoLattice paste_or_fail(const ContextFamily& F) {
  auto pasted = paste_to_lattice(F);
  if (auto* bad = std::get_if<NotPastable>(&pasted))
    throw InputError("Greechie family cannot be pasted: " + bad->reason);
  return std::get<OrthoLattice>(pasted);
}

// Greechie and ray inputs are pasted into a lattice when a command needs one.
OrthoLattice lattice_input(const std::string& arg) {
  const Input in = load_input(arg);
  if (auto* L = std::get_if<OrthoLattice>(&in)) return *L;
  if (auto* F = std::get_if<ContextFamily>(&in)) return paste_or_fail(*F);
  return paste_or_fail(from_rays(std::get<RaySet>(in)).family);
}

ElementId element(const OrthoLattice& L, const std::string& name) {
  auto x = L.find(name);
  if (!x) throw InputError("no element '" + name + "'");
  return *x;
}

ModalFrame frame_of(const OrthoLattice& L) {
  try {
    return ModalFrame(L);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::string set_text(const OrthoLattice& L, const std::vector<ElementId>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? ", " : "") + L.label(ids[i]);
  return out + "}";
}

int cmd_check(const std::string& arg, bool json) {
  const auto L = lattice_input(arg);
  const auto report = verify_axioms(L);
  if (json) {
    std::cout << to_json(report, L).dump(2) << '\n';
  } else {
    for (const auto& law : report.laws) {
      std::cout << law.law << std::string(14 - std::min<std::size_t>(13, law.law.size()), ' ')
                << (law.holds ? "holds" : "FAILS");
      if (!law.holds) {
        std::vector<std::string> w;
        for (ElementId x : law.witness) w.push_back(x < L.size() ? L.label(x) : std::to_string(x));
        std::cout << "  witness (";
        for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? ", " : "") << w[i];
        std::cout << "): " << law.detail;
      }
      std::cout << '\n';
    }
  }
  return report.failed().empty() ? kOk : kFalse;
}

int cmd_center(const std::string& arg, bool json) {
  const auto L = lattice_input(arg);
  const auto slow = center(L);
  const auto fast = center_fast(L);
  const bool agree = slow.members == fast.members;
  if (json) {
    std::cout << Json{{"center", labels_json(L, slow.members)},
                      {"center_fast", labels_json(L, fast.members)},
                      {"agree", agree}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "center       " << set_text(L, slow.members) << '\n'
              << "center_fast  " << set_text(L, fast.members) << '\n';
    if (!agree) std::cout << "algorithms disagree\n";
  }
  return agree ? kOk : kFalse;
}

int cmd_diamond(const std::string& arg, const std::string& name, bool json) {
  const auto L = lattice_input(arg);
  const ElementId p = element(L, name);
  const auto frame = frame_of(L);
  const ElementId d = frame.diamond(p);
  const ElementId b = frame.box(p);
  if (json) {
    std::cout << Json{{"p", L.label(p)}, {"diamond", L.label(d)}, {"box", L.label(b)},
                      {"central", frame.is_central(p)}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "\xE2\x97\x87" << L.label(p) << " = " << L.label(d) << '\n'
              << "\xC2\xAC\xE2\x97\x87\xC2\xAC" << L.label(p) << " = " << L.label(b) << '\n';
  }
  return kOk;
}

int cmd_blocks(const std::string& arg, bool json) {
  const auto L = lattice_input(arg);
  const auto blocks = enumerate_blocks(L);
  if (json) {
    Json out = Json::array();
    for (std::size_t i = 0; i < blocks.size(); ++i)
      out.push_back(Json{{"id", i + 1},
                         {"atoms", labels_json(L, blocks[i].atoms())},
                         {"members", labels_json(L, blocks[i].members())}});
    std::cout << out.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      std::cout << "W" << i + 1 << "  atoms " << set_text(L, blocks[i].atoms()) << "  ("
                << blocks[i].members().size() << " elements)\n";
  }
  return kOk;
}

int cmd_global(const std::string& arg) {
  const Input in = load_input(arg);
  if (auto* L = std::get_if<OrthoLattice>(&in)) {
    const auto r = find_global_valuation(*L);
    std::cout << to_json(r, *L).dump(2) << '\n';
    return r.sat() ? kOk : kFalse;
  }
  const ContextFamily F = std::holds_alternative<ContextFamily>(in)
                              ? std::get<ContextFamily>(in)
                              : from_rays(std::get<RaySet>(in)).family;
  const auto r = find_global_valuation_on_family(F);
  std::cout << to_json(r, F).dump(2) << '\n';
  return r.sat() ? kOk : kFalse;
}

int cmd_mks(const std::string& arg) {
  const auto L = lattice_input(arg);
  frame_of(L);
  const auto v = mks_check(L);
  std::cout << to_json(v, L).dump(2) << '\n';
  return v.biconditional_holds ? kOk : kFalse;
}

int cmd_square(const std::string& arg, const std::string& name, int block_id,
               const std::string& format) {
  const auto L = lattice_input(arg);
  const ElementId p = element(L, name);
  const auto frame = frame_of(L);
  const auto blocks = enumerate_blocks(L);
  const BooleanBlock* W = nullptr;
  if (block_id > 0) {
    if (static_cast<std::size_t>(block_id) > blocks.size())
      throw InputError("no block W" + std::to_string(block_id) + " (there are " +
                       std::to_string(blocks.size()) + ")");
    W = &blocks[block_id - 1];
    if (!W->contains(p))
      throw InputError("block W" + std::to_string(block_id) + " does not contain " + L.label(p));
  } else {
    for (const auto& b : blocks)
      if (b.contains(p)) {
        W = &b;
        break;
      }
  }
  const auto report = square_report(frame, p, *W);
  if (format != "text") std::cout << to_json(report, L).dump(2) << '\n';
  if (format != "json") std::cout << render_square(report, L);
  return report.all_hold() ? kOk : kFalse;
}

int cmd_sweep(const std::string& arg, unsigned threads) {
  const auto L = lattice_input(arg);
  frame_of(L);
  const auto reports = square_sweep(L, threads);
  std::size_t failing = 0;
  std::size_t collapsed = 0;
  for (const auto& r : reports) {
    collapsed += r.collapsed;
    if (!r.all_hold()) {
      ++failing;
      std::cout << "FAILS  p = " << r.p_label << "  block " << set_text(L, r.block_atoms) << '\n';
    }
  }
  std::cout << reports.size() << " (p, W) pairs, " << collapsed << " central, " << failing
            << " failing\n";
  return failing == 0 ? kOk : kFalse;
}

int cmd_from_rays(const std::string& arg) {
  const Input in = load_input(arg);
  if (!std::holds_alternative<RaySet>(in)) throw InputError(arg + " is not a ray document");
  const auto rf = from_rays(std::get<RaySet>(in));
  for (const auto& w : rf.warnings) std::cerr << "warning: " << w << '\n';
  std::cout << render_greechie(rf.family);
  return kOk;
}

int cmd_paste(const std::string& arg) {
  std::cout << render_lattice(lattice_input(arg));
  return kOk;
}

int cmd_export_dot(const std::string& arg) {
  const Input in = load_input(arg);
  if (auto* L = std::get_if<OrthoLattice>(&in)) std::cout << export_dot(*L);
  else if (auto* F = std::get_if<ContextFamily>(&in)) std::cout << export_dot(*F);
  else std::cout << export_dot(from_rays(std::get<RaySet>(in)).family);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite orthomodular lattices: axioms, center, possibility, valuations, square of opposition"};
  app.require_subcommand(1);
  std::string input;
  std::string name;
  bool json = false;
  int block_id = 0;
  std::string format = "both";
  unsigned threads = 1;
  const char* input_help = "file (lattice, Greechie or ray document) or catalog name such as mo2, bool3, o6, bool1*mo2";

  auto add = [&](const char* cmd, const char* help) {
    auto* sub = app.add_subcommand(cmd, help);
    sub->add_option("input", input, input_help)->required();
    return sub;
  };
  auto* check = add("check", "verify the orthomodular lattice laws");
  check->add_flag("--json", json, "JSON output");
  auto* cen = add("center", "central elements, by definition and by the fast criterion");
  cen->add_flag("--json", json, "JSON output");
  auto* dia = add("diamond", "possibility and necessity of an element");
  dia->add_option("element", name, "element label")->required();
  dia->add_flag("--json", json, "JSON output");
  auto* blk = add("blocks", "maximal Boolean blocks");
  blk->add_flag("--json", json, "JSON output");
  auto* glob = add("global", "global valuation search (lattice, Greechie family or rays)");
  auto* mks = add("mks", "both sides of the modal Kochen-Specker equivalence, as JSON");
  auto* sq = add("square", "square of opposition for an element in a context");
  sq->add_option("element", name, "element label")->required();
  sq->add_option("--block", block_id, "block id as listed by 'blocks' (default: first containing the element)")
      ->check(CLI::PositiveNumber);
  sq->add_option("--format", format, "json, text or both")->check(CLI::IsMember({"json", "text", "both"}));
  auto* sweep = add("sweep", "square report for every element and every block containing it");
  sweep->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
  auto* fr = add("from-rays", "orthogonality contexts of a ray set, as a Greechie document");
  auto* paste = add("paste", "paste a Greechie family into a lattice document");
  auto* dot = add("export-dot", "Hasse or Greechie diagram in DOT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (check->parsed()) return cmd_check(input, json);
    if (cen->parsed()) return cmd_center(input, json);
    if (dia->parsed()) return cmd_diamond(input, name, json);
    if (blk->parsed()) return cmd_blocks(input, json);
    if (glob->parsed()) return cmd_global(input);
    if (mks->parsed()) return cmd_mks(input);
    if (sq->parsed()) return cmd_square(input, name, block_id, format);
    if (sweep->parsed()) return cmd_sweep(input, threads);
    if (fr->parsed()) return cmd_from_rays(input);
    if (paste->parsed()) return cmd_paste(input);
    if (dot->parsed()) return cmd_export_dot(input);
  } catch (const ParseError& e) {
    std::cerr << "error: " << input << ": " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
