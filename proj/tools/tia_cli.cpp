// Command-line front end. Exit codes: 0 success or pass, 1 usage, 2 validation
// failure, 3 search budget exceeded.
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tia/io.hpp"

namespace {

using namespace tia;

constexpr int kUsage = 1, kInvalid = 2, kBudget = 3;

// Default partition tolerance, overridable per run.
double default_tolerance() {
  const char* env = std::getenv("TIA_TOLERANCE");
  if (!env || !*env) return 1e-6;
  char* end = nullptr;
  double t = std::strtod(env, &end);
  if (*end || !(t > 0)) throw Error("TIA_TOLERANCE must be a positive number");
  return t;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_file(path, text);
}

std::vector<TileKind> parse_kinds(const std::string& list) {
  std::vector<TileKind> out;
  std::stringstream s(list);
  for (std::string k; std::getline(s, k, ',');)
    if (!k.empty()) out.push_back(parse_tile_kind(k));
  if (out.empty()) throw Error("no tile kinds given");
  return out;
}

std::pair<double, double> parse_window(const std::string& w) {
  auto x = w.find('x');
  try {
    if (x != std::string::npos) return {std::stod(w.substr(0, x)), std::stod(w.substr(x + 1))};
  } catch (const std::exception&) {
  }
  throw Error("window must look like WxH, e.g. 6x6");
}

struct BlockArgs {
  std::string source;
  double height = 1.0;
  std::string out;
};

int run_block(const BlockArgs& a) {
  Block b;
  std::string name = a.source;
  if (std::filesystem::is_regular_file(a.source)) {
    b = block_from_assignment(assignment_from_json(read_text_file(a.source)), a.height);
  } else {
    const auto& names = canonical_block_names();
    if (std::find(names.begin(), names.end(), a.source) == names.end())
      throw Error("unknown block '" + a.source + "' (see `block --list`)");
    b = canonical_block(a.source, a.height);
  }
  if (a.out.empty()) {
    std::cout << mesh_to_text(b.mesh);
    return 0;
  }
  write_text_file(a.out, mesh_to_text(b.mesh));
  nlohmann::json info{{"block", name},
                      {"vertices", b.mesh.vertices.size()},
                      {"faces", b.mesh.faces.size()},
                      {"closed", is_closed(b.mesh)},
                      {"euler", euler_characteristic(b.mesh)},
                      {"volume", block_volume(b)}};
  std::cout << info.dump() << "\n";
  return 0;
}

struct TilingArgs {
  std::string mode;
  int n = 0, m = 0;
  std::string kinds = "bi,quad";
  std::uint64_t seed = 0;
  std::string out;
};

constexpr int kMaxEnumeratedLines = 100000;

int run_tiling(const TilingArgs& a) {
  if (a.n < 1 || a.m < 1) throw Error("tiling dimensions must be positive");
  if (a.mode == "count") {
    if (a.kinds != "bi,quad") throw Error("count covers bi and quad tilings only");
    emit(count_tilings(a.n, a.m).str() + "\n", a.out);
  } else if (a.mode == "enumerate") {
    // Each tiling is a JSON line; stop before producing an unwieldy file.
    std::string text;
    int lines = 0;
    for_each_tiling(a.n, a.m, parse_kinds(a.kinds), [&](const Tiling& t) {
      if (++lines > kMaxEnumeratedLines)
        throw BudgetExceeded("more than " + std::to_string(kMaxEnumeratedLines) +
                             " tilings; use 'tiling count' for the number only");
      text += tiling_to_json(t) + "\n";
    });
    emit(text, a.out);
  } else {
    emit(tiling_to_json(random_tiling(a.n, a.m, parse_kinds(a.kinds), a.seed)) + "\n", a.out);
  }
  return 0;
}

int run_colouring(const std::string& mode, const std::string& input, const std::string& out) {
  std::string text = read_text_file(input);
  if (mode == "to") {
    Tiling t = tiling_from_json(text);
    std::string v = first_violation(t);
    if (!v.empty()) throw Error("invalid tiling: " + v);
    emit(colouring_to_text(tiling_to_colouring(t)), out);
  } else {
    emit(tiling_to_json(colouring_to_tiling(colouring_from_text(text))) + "\n", out);
  }
  return 0;
}

struct AssemblyArgs {
  std::string input;
  std::string group;
  std::vector<std::string> blocks;
  std::string window;
  double pad = 1.0;
  std::string snub;
  int cells = 2;
  int ring = 1;
  bool no_pad = false;
  double height = 1.0;
  bool verify = false;
  std::optional<double> tol;
  int samples = 4;
  std::uint64_t seed = 0;
  std::string out, mesh, svg;
};

Assembly build_assembly(const AssemblyArgs& a) {
  int sources = !a.input.empty() + !a.group.empty() + !a.snub.empty();
  if (sources != 1) throw CLI::ValidationError("give exactly one of: an input file, --group or --snub");
  if (!(a.height > 0)) throw Error("height must be positive");
  if (!a.snub.empty()) {
    SnubVariant v = parse_snub_variant(a.snub);
    TilingComplex c = snub_square_complex(a.cells, 1);
    return complex_assembly(c, snub_square_colouring(c, v), v, a.height);
  }
  if (!a.group.empty()) {
    if (a.blocks.empty()) throw CLI::ValidationError("--group needs --block");
    auto [w, h] = parse_window(a.window.empty() ? "6x6" : a.window);
    return orbit_assembly(make_group(a.group), a.blocks, rectangle_window(-0.5, -0.5, w - 0.5, h - 0.5), a.height,
                          a.pad);
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(a.input));
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed input JSON: " + std::string(e.what()));
  }
  std::string text = j.dump();
  if (j.contains("placements")) {
    Assembly as = assembly_from_json(text);
    return as;
  }
  if (j.contains("lozenges")) {
    DecoratedLozengeTiling d = lozenge_tiling_from_json(text);
    if (d.decorations.empty()) throw Error("lozenge tiling has no decorations");
    return lozenge_assembly(d, a.height, !a.no_pad);
  }
  Tiling t = tiling_from_json(text);
  std::string v = first_violation(t);
  if (!v.empty()) throw Error("invalid tiling: " + v);
  return tiling_to_assembly(t, a.height, a.ring);
}

int run_assembly(const AssemblyArgs& a) {
  // Everything is computed before any file is written.
  Assembly as = select_frame(build_assembly(a));
  std::string json_text = assembly_to_json(as);
  std::string mesh_text = a.mesh.empty() ? "" : mesh_to_text(assembly_mesh(as));
  std::string svg_text = a.svg.empty() ? "" : assembly_svg(as);
  std::optional<SpaceFillingReport> rep;
  if (a.verify) rep = verify_space_filling(as, default_z_samples(as.height, a.samples, a.seed), a.tol.value_or(default_tolerance()));
  emit(json_text, a.out);
  if (!a.mesh.empty()) write_text_file(a.mesh, mesh_text);
  if (!a.svg.empty()) write_text_file(a.svg, svg_text);
  if (rep) {
    std::cout << report_to_json(*rep);
    std::cerr << (rep->pass ? "space filling: pass\n" : "space filling: FAIL\n");
    return rep->pass ? 0 : kInvalid;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interlocking block construction, tiling enumeration and assembly verification"};
  app.require_subcommand(1);

  BlockArgs block;
  bool list = false;
  auto* cb = app.add_subcommand("block", "Write the mesh of a named block or of an assignment file");
  cb->add_option("source", block.source, "block name or assignment JSON file");
  cb->add_option("--height", block.height, "slab height")->check(CLI::PositiveNumber);
  cb->add_option("--out", block.out, "mesh file; prints a summary instead of the mesh");
  cb->add_flag("--list", list, "list block names");

  TilingArgs tiling;
  auto* ct = app.add_subcommand("tiling", "Enumerate, count or draw Truchet tilings");
  ct->add_option("mode", tiling.mode)->required()->check(CLI::IsMember({"enumerate", "count", "random"}));
  ct->add_option("n", tiling.n, "rows")->required();
  ct->add_option("m", tiling.m, "columns")->required();
  ct->add_option("--kinds", tiling.kinds, "comma list of bi, quad, octa_sym, octa_asym");
  ct->add_option("--seed", tiling.seed);
  ct->add_option("--out", tiling.out, "output file (JSON lines for enumerate)");

  std::string col_mode, col_input, col_out;
  auto* cc = app.add_subcommand("colouring", "Convert between tilings and vertex 3-colourings");
  cc->add_option("mode", col_mode)->required()->check(CLI::IsMember({"to", "from"}));
  cc->add_option("input", col_input, "tiling JSON (to) or colouring text (from)")->required();
  cc->add_option("--out", col_out);

  AssemblyArgs asm_args;
  double tol = 0;
  auto* ca = app.add_subcommand("assembly", "Build, export and verify an assembly");
  ca->add_option("input", asm_args.input, "tiling, decorated lozenge tiling or assembly JSON");
  ca->add_option("--group", asm_args.group, "wallpaper group for an orbit assembly");
  ca->add_option("--block", asm_args.blocks, "block name(s); the mirrored partner second")->delimiter(',');
  ca->add_option("--window", asm_args.window, "orbit window WxH in cells");
  ca->add_option("--pad", asm_args.pad, "extra orbit margin around the window")->check(CLI::NonNegativeNumber);
  ca->add_option("--snub", asm_args.snub, "snub square variant: rhom_pair or versatile_triple");
  ca->add_option("--cells", asm_args.cells, "snub square cells per side")->check(CLI::PositiveNumber);
  ca->add_option("--ring", asm_args.ring, "tile layers added around a Truchet tiling")->check(CLI::NonNegativeNumber);
  ca->add_flag("--no-pad", asm_args.no_pad, "do not surround lozenge tilings with a decorated layer");
  ca->add_option("--height", asm_args.height)->check(CLI::PositiveNumber);
  ca->add_flag("--verify", asm_args.verify, "check the space-filling partition");
  auto* tol_opt = ca->add_option("--tol", tol, "relative partition tolerance")->check(CLI::PositiveNumber);
  ca->add_option("--samples", asm_args.samples, "extra random z samples")->check(CLI::NonNegativeNumber);
  ca->add_option("--seed", asm_args.seed, "seed of the z samples");
  ca->add_option("--out", asm_args.out, "assembly JSON file");
  ca->add_option("--mesh", asm_args.mesh, "concatenated mesh file");
  ca->add_option("--svg", asm_args.svg, "top-view diagram");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*cb) {
      if (list) {
        for (const auto& n : canonical_block_names()) std::cout << n << "\n";
        return 0;
      }
      if (block.source.empty()) throw CLI::ValidationError("block needs a name or an assignment file");
      return run_block(block);
    }
    if (*ct) return run_tiling(tiling);
    if (*cc) return run_colouring(col_mode, col_input, col_out);
    if (*tol_opt) asm_args.tol = tol;
    return run_assembly(asm_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
