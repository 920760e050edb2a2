#include "lchkit/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lchkit/diagram.hpp"
#include "lchkit/disks.hpp"
#include "lchkit/errors.hpp"
#include "lchkit/io.hpp"
#include "lchkit/obstruction.hpp"
#include "lchkit/render.hpp"

namespace lchkit {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json parse_json(const std::string& text, const std::string& path) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::SyntaxError, "'" + path + "' is not valid JSON: " + e.what());
  }
}

// A front file, or a diagram JSON written by `resolve`.
LagrangianDiagram load_diagram(const std::string& path, bool require_plat) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return diagram_from_json(parse_json(text, path));
  return resolve(parse_front(text), require_plat);
}

std::vector<int> parse_highlight(const LagrangianDiagram& d, const std::string& text) {
  std::vector<int> faces;
  if (text.empty()) return faces;
  if (text[0] == 'd') {
    int k = -1;
    try {
      std::size_t used = 0;
      k = std::stoi(text.substr(1), &used);
      if (used + 1 != text.size()) k = -1;
    } catch (const std::exception&) {
      k = -1;
    }
    const auto disks = enumerate_rigid_disks(d);
    if (k < 0 || k >= static_cast<int>(disks.size())) {
      throw Error(ErrorKind::InvalidArgument, "no rigid disk '" + text + "'");
    }
    return disks[k].faces;
  }
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    if (item.size() < 2 || item[0] != 'f' || item.find_first_not_of("0123456789", 1) != std::string::npos) {
      throw Error(ErrorKind::SyntaxError, "highlight must look like f0,f2 or d1");
    }
    faces.push_back(std::stoi(item.substr(1)));
  }
  return faces;
}

void write(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
  f << text;
}

bool usage_error(ErrorKind k) { return k == ErrorKind::SyntaxError || k == ErrorKind::IoError; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Holomorphic disk invariants of Legendrian links from plat fronts", "lchkit"};
  app.require_subcommand(1);
  std::string input, output, family, highlight;
  bool no_plat = false, json_flag = false, t_marker = false, certificates = false, no_labels = false;
  int copies = 2;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("input", input, "front file or diagram JSON")->required();
    sub->add_option("-o,--output", output, "output path (default stdout)");
  };
  auto* resolve_cmd = app.add_subcommand("resolve", "Lagrangian resolution as diagram JSON");
  add_io(resolve_cmd);
  resolve_cmd->add_flag("--no-require-plat", no_plat, "accept fronts whose cusps are not aligned");
  resolve_cmd->add_flag("--json", json_flag, "JSON output (the default)");
  auto* chords_cmd = app.add_subcommand("chords", "Reeb chords with gradings");
  add_io(chords_cmd);
  auto* dga_cmd = app.add_subcommand("dga", "differential over Z/2 with disk certificates");
  add_io(dga_cmd);
  dga_cmd->add_flag("--with-t-marker", t_marker, "insert t at base point crossings");
  auto* disks_cmd = app.add_subcommand("disks", "rigid disks");
  add_io(disks_cmd);
  disks_cmd->add_flag("--certificates", certificates, "full certificates");
  auto* census_cmd = app.add_subcommand("census2", "index-2 candidates and exclusion checks");
  add_io(census_cmd);
  auto* ncopy_cmd = app.add_subcommand("ncopy", "n-copy diagram JSON");
  add_io(ncopy_cmd);
  ncopy_cmd->add_option("--n", copies, "number of copies")->required()->check(CLI::Range(1, 64));
  auto* obstruction_cmd = app.add_subcommand("obstruction", "zero of the flat-annulus obstruction along a family");
  obstruction_cmd->add_option("--family", family, "family JSON")->required();
  obstruction_cmd->add_option("-o,--output", output, "output path (default stdout)");
  auto* render_cmd = app.add_subcommand("render", "SVG drawing");
  add_io(render_cmd);
  render_cmd->add_option("--highlight", highlight, "faces f0,f2 or rigid disk dN");
  render_cmd->add_flag("--no-labels", no_labels, "omit chord labels");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  }

  try {
    std::string text;
    if (resolve_cmd->parsed()) {
      text = dump(diagram_to_json(load_diagram(input, !no_plat)));
    } else if (chords_cmd->parsed()) {
      const auto d = load_diagram(input, true);
      text = dump(chords_to_json(d, grade_chords(d, enumerate_rigid_disks(d))));
    } else if (dga_cmd->parsed()) {
      const auto d = load_diagram(input, true);
      const auto disks = enumerate_rigid_disks(d);
      text = dump(dga_to_json(d, disks, grade_chords(d, disks), t_marker));
    } else if (disks_cmd->parsed()) {
      const auto d = load_diagram(input, true);
      text = dump(disks_to_json(d, enumerate_rigid_disks(d), certificates));
    } else if (census_cmd->parsed()) {
      const auto d = load_diagram(input, true);
      text = dump(census_to_json(d, index2_census(d)));
    } else if (ncopy_cmd->parsed()) {
      const auto d = n_copy(load_diagram(input, true), copies);
      auto j = diagram_to_json(d);
      j["n"] = copies;
      j["chord_count"] = d.chords().size();
      text = dump(j);
    } else if (obstruction_cmd->parsed()) {
      const auto f = family_from_json(parse_json(read_file(family), family));
      text = dump(zero_to_json(f, solve_family(f)));
    } else if (render_cmd->parsed()) {
      const auto d = load_diagram(input, true);
      RenderOptions opts;
      opts.highlight = parse_highlight(d, highlight);
      opts.labels = !no_labels;
      text = render_svg(d, opts);
    }
    write(text, output, out);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lchkit
