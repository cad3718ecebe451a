// polycx: command-line surface over the library. Exit status 0 means
// success/true, 1 false/violation, 2 input error.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "json_report.hpp"
#include "polycx/io.hpp"

using namespace polycx;
using polycx::cli::json;

namespace {

struct Outcome {
  int code = 0;
  json result = json::object();
  json violations = json::array();
  std::string text;
};

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string header_of(const std::string& text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string line = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line.substr(0, line.find(' '));
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return "";
}

IncidenceComplex load_icx(const std::string& path) { return parse_icx(read_text_file(path)); }
SubgroupSystem load_sgs(const std::string& path) { return parse_sgs(read_text_file(path)); }
GeometricComplex load_gcx(const std::string& path) { return parse_gcx(read_text_file(path)); }

bool is_file(const std::string& arg) {
  std::ifstream in(arg);
  return static_cast<bool>(in);
}

// Catalog entries by name or alias, rational Platonic solids and fixtures.
GeometricComplex named_complex(const std::string& name, int window) {
  if (name == "cube-petrial") return cube_petrial();
  if (name == "three-fold-book") return three_fold_book();
  for (const auto& p : platonic_names())
    if (p == name) return platonic(name);
  return build_window(find_entry(name), window).complex;
}

void emit(const std::string& path, const std::string& text, Outcome& out) {
  if (path.empty() || path == "-") {
    out.text += text;
  } else {
    write_text_file(path, text);
    out.result["output"] = path;
  }
}

std::string yes(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- commands

Outcome cmd_validate(const std::string& path) {
  Outcome o;
  const std::string text = read_text_file(path);
  ValidationReport rep;
  if (header_of(text) == "GCX") {
    rep = validate_interior(parse_gcx(text));
    o.result["scope"] = "interior";
  } else {
    rep = validate_complex(parse_icx(text));
    o.result["scope"] = "complex";
  }
  o.result["passed"] = rep.passed;
  o.violations = cli::violations_json(rep);
  o.text = rep.passed ? "valid\n" : "invalid\n";
  for (const auto& v : rep.violations) {
    o.text += std::string(axiom_name(v.axiom)) + ": " + v.detail;
    if (!v.witness.empty()) {
      o.text += " [";
      for (std::size_t i = 0; i < v.witness.size(); ++i) o.text += (i ? " " : "") + v.witness[i];
      o.text += "]";
    }
    o.text += "\n";
  }
  o.code = rep.passed ? 0 : 1;
  return o;
}

Outcome cmd_flags(const std::string& path) {
  Outcome o;
  const auto c = load_icx(path);
  if (!c.well_formed()) throw InputError("malformed complex: " + c.structural_issues().front());
  const auto fl = flags(c);
  json list = json::array();
  o.text = "flags: " + std::to_string(fl.size()) + "\n";
  for (const auto& f : fl) {
    auto j = cli::flag_json(c, f);
    list.push_back(j);
    std::string line;
    for (const auto& id : j) line += (line.empty() ? "" : " ") + id.get<std::string>();
    o.text += line + "\n";
  }
  o.result = {{"count", fl.size()}, {"flags", list}};
  return o;
}

Outcome cmd_aut(const std::string& path) {
  Outcome o;
  const auto c = load_icx(path);
  if (!c.well_formed()) throw InputError("malformed complex: " + c.structural_issues().front());
  const auto g = automorphisms(c);
  const auto order = g.enumerate().order();
  const auto orbits = flag_orbit_count(g);
  json gens = json::array();
  for (const auto& p : g.generators) gens.push_back(cycle_string(p));
  o.result = {{"order", order}, {"flags", g.degree()}, {"flag_orbits", orbits}, {"generators", gens}};
  o.text = "order: " + std::to_string(order) + "\nflags: " + std::to_string(g.degree()) +
           "\nflag orbits: " + std::to_string(orbits) + "\n";
  return o;
}

Outcome cmd_regular(const std::string& path) {
  Outcome o;
  const auto c = load_icx(path);
  if (!c.well_formed()) throw InputError("malformed complex: " + c.structural_issues().front());
  const bool reg = is_regular(c);
  o.result["regular"] = reg;
  o.text = std::string("regular: ") + yes(reg) + "\n";
  o.code = reg ? 0 : 1;
  return o;
}

Outcome cmd_system(const std::string& path, const std::string& out_path) {
  Outcome o;
  const auto c = load_icx(path);
  if (!c.well_formed()) throw InputError("malformed complex: " + c.structural_issues().front());
  try {
    const auto ds = distinguished_system(c, automorphisms(c));
    o.result["group_order"] = ds.group_order;
    json orders = json::array();
    for (auto x : ds.orders) orders.push_back(x);
    o.result["subgroup_orders"] = orders;
    emit(out_path, write_sgs(system_from(ds)), o);
  } catch (const NotFlagTransitive& e) {
    o.code = 1;
    o.violations.push_back({{"detail", e.what()}});
    o.text = std::string(e.what()) + "\n";
  }
  return o;
}

Outcome cmd_check(const std::string& path, bool products) {
  Outcome o;
  const auto s = load_sgs(path);
  const auto r = products ? check_products(s) : check_intersection(s);
  o.result = cli::to_json(r);
  if (r.ok) {
    o.text = products ? "product condition holds\n" : "intersection condition holds\n";
    return o;
  }
  o.code = 1;
  o.violations.push_back(cli::to_json(r));
  o.text = std::string(products ? "product" : "intersection") + " condition fails: " + r.detail + "\n";
  if (products)
    o.text += "pair: R(" + std::to_string(r.i) + "), R(" + std::to_string(r.j) + ")\n";
  if (r.witness) o.text += "witness: " + cycle_string(*r.witness) + "\n";
  return o;
}

Outcome cmd_from_group(const std::string& path, const std::string& out_path) {
  Outcome o;
  const auto s = load_sgs(path);
  try {
    const auto c = complex_from_system(s);
    json counts = json::array();
    for (int r = 0; r < c.rank(); ++r) counts.push_back(c.face_count(r));
    o.result["face_counts"] = counts;
    emit(out_path, write_icx(c), o);
  } catch (const ConstructionRefused& e) {
    o.code = 1;
    o.violations.push_back({{"detail", e.what()}});
    o.text = std::string("refused: ") + e.what() + "\n";
  }
  return o;
}

Outcome cmd_roundtrip(const std::string& path) {
  Outcome o;
  const auto c = load_icx(path);
  if (!c.well_formed()) throw InputError("malformed complex: " + c.structural_issues().front());
  bool ok = false;
  try {
    ok = round_trip(c);
  } catch (const NotFlagTransitive& e) {
    o.violations.push_back({{"detail", e.what()}});
  } catch (const ConstructionRefused& e) {
    o.violations.push_back({{"detail", e.what()}});
  }
  o.result["isomorphic"] = ok;
  o.text = std::string("round trip isomorphic: ") + yes(ok) + "\n";
  o.code = ok ? 0 : 1;
  return o;
}

Outcome cmd_catalog(const std::string& name, int window, const std::string& out_path) {
  Outcome o;
  const auto g = named_complex(name, window);
  json counts = json::array(), interior = json::array();
  for (int r = 0; r < g.rank(); ++r) {
    counts.push_back(g.abstract.face_count(r));
    interior.push_back(g.interior_count(r));
  }
  o.result = {{"name", name}, {"window", window}, {"face_counts", counts}, {"interior_counts", interior}};
  emit(out_path, write_gcx(g), o);
  return o;
}

std::vector<FaceKey> facet_keys(const GeometricComplex& g) {
  std::vector<FaceKey> keys;
  for (const auto& f : g.facets) {
    if (!f) throw InputError("facet without geometry");
    keys.push_back(f->key());
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

Outcome cmd_petrie(const std::string& arg, int window, const std::string& out_path) {
  Outcome o;
  if (!is_file(arg)) {
    const auto e = find_entry(arg);
    const auto p = petrie_dual_4(e);
    json gens = json::array();
    for (const auto& g : p.generators) gens.push_back(cli::to_json(g));
    o.result = {{"entry", e.name}, {"petrie_dual", p.name}, {"generators", gens}};
    o.text = e.name + " -> " + p.name + "\n";
    if (!out_path.empty()) emit(out_path, write_gcx(build_window(p, window).complex), o);
    return o;
  }
  // a windowed rank-4 complex: the audit of its 2-skeleton finds both
  // extensions; the Petrie dual is the one that is not the input
  const auto g = load_gcx(arg);
  if (g.rank() != 4 || !g.window) throw InputError("petrie needs a windowed rank-4 complex or a catalog name");
  const auto skel = two_skeleton(g);
  const auto rep = audit(skel);
  const auto own = facet_keys(g);
  std::optional<Rank4Candidate> other;
  bool found_self = false;
  for (const auto& c : rep.candidates) {
    if (c.facets == own)
      found_self = true;
    else
      other = c;
  }
  o.result["verdict"] = std::string(verdict_name(rep.verdict));
  o.result["input_is_candidate"] = found_self;
  if (!found_self || !other || rep.candidates.size() != 2) {
    o.code = 1;
    o.violations.push_back({{"detail", "the input is not one of exactly two rank-4 extensions of its 2-skeleton"}});
    o.text = "no Petrie dual found\n";
    return o;
  }
  json gens = json::array();
  for (const auto& x : other->generators) gens.push_back(cli::to_json(x));
  o.result["generators"] = gens;
  o.result["facets_in_window"] = other->facets.size();
  o.text = "Petrie dual: " + std::to_string(other->facets.size()) + " facets in the window\n";
  if (!out_path.empty()) {
    const auto base = choose_base_flag(skel);
    const Vec3 p0 = skel.coords[base.vertex];
    const auto& ends = skel.edges[base.edge];
    const Vec3 p1 = ends.first == p0 ? ends.second : ends.first;
    const auto& a = other->generators;
    GeometricFlag gf{p0, p1, skel.polygons[base.face], Facet::from_group({a[0], a[1], a[2]}, skel.polygons[base.face])};
    auto oc = orbit_complex({a.begin(), a.end()}, gf, *g.window);
    emit(out_path, write_gcx(oc.complex), o);
  }
  return o;
}

Outcome cmd_skeleton(int k, const std::string& path, const std::string& out_path) {
  Outcome o;
  const std::string text = read_text_file(path);
  if (header_of(text) == "GCX") {
    auto g = parse_gcx(text);
    if (k + 1 >= g.rank()) {
      emit(out_path, write_gcx(g), o);
    } else if (k == 2) {
      emit(out_path, write_gcx(two_skeleton(g)), o);
    } else {
      throw InputError("geometric skeletons are available for k = 2 only");
    }
    o.result["rank"] = std::min(g.rank(), k + 1);
    return o;
  }
  const auto c = parse_icx(text);
  if (k < 0 || k >= c.rank()) throw InputError("k must lie in 0.." + std::to_string(c.rank() - 1));
  const auto s = skeleton(c, k);
  o.result["rank"] = s.rank();
  emit(out_path, write_icx(s), o);
  return o;
}

Outcome cmd_audit(const std::string& path) {
  Outcome o;
  const auto rep = audit(load_gcx(path));
  o.result = cli::to_json(rep);
  o.text = "verdict: " + std::string(verdict_name(rep.verdict)) + "\n";
  o.text += "planar faces: " + yes(rep.planar_faces) + "\nface mirrors: " + yes(rep.face_mirrors_found) + "\n";
  o.text += "flag stabilizer order: " + std::to_string(rep.flag_stabilizer_order) + "\n";
  if (rep.r) o.text += "r: " + std::to_string(*rep.r) + "\n";
  if (rep.facet_r3) o.text += "facet r3: " + std::to_string(*rep.facet_r3) + "\n";
  o.text += "edge stabilizer: " + std::string(edge_shape_name(rep.edge_stabilizer_shape)) + "\nangles:";
  for (auto c : rep.edge_angle_classes) o.text += " " + std::string(angle_class_name(c));
  o.text += "\ncandidates: " + std::to_string(rep.candidates.size()) + "\n";
  for (const auto& c : rep.candidates)
    o.text += "  facets in window " + std::to_string(c.facets.size()) + ", " + (c.facets_finite ? "finite" : "infinite") +
              " facets, r3 " + std::to_string(c.facet_r3) + "\n";
  for (const auto& n : rep.notes) o.text += "note: " + n + "\n";
  if (rep.verdict == Verdict::InconsistentInput) {
    o.code = 1;
    o.violations.push_back({{"detail", "inconsistent input"}});
  }
  return o;
}

Outcome cmd_rank5(const std::string& arg, int window) {
  Outcome o;
  const auto r = is_file(arg) ? rank5_obstruction(load_gcx(arg)) : rank5_obstruction(find_entry(arg), window);
  o.result = cli::to_json(r);
  o.text = "obstructed: " + yes(r.obstructed) + "\nstabilizer order: " + std::to_string(r.stabilizer_order) +
           "\nbranch: " + r.branch + "\n";
  o.code = r.obstructed ? 0 : 1;
  return o;
}

Outcome cmd_export(const std::string& format, const std::string& path, const std::string& out_path) {
  Outcome o;
  const auto g = load_gcx(path);
  const auto mesh = export_mesh(g, format == "off" ? MeshFormat::Off : MeshFormat::Obj);
  o.result = {{"format", format}, {"vertices", g.coords.size()}};
  emit(out_path, mesh, o);
  return o;
}

Outcome cmd_all_eight(int window, const std::string& report_path) {
  Outcome o;
  json entries = json::array();
  bool all_ok = true;
  std::vector<OrbitComplex> windows;
  const auto eight = all_eight();
  for (const auto& e : eight) {
    const auto t0 = std::chrono::steady_clock::now();
    windows.push_back(build_window(e, window));
    const auto v = verify_entry(e, windows.back());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    auto j = cli::to_json(v);
    j["seconds"] = secs;
    entries.push_back(j);
    all_ok = all_ok && v.ok();
    o.text += std::string(v.ok() ? "ok   " : "FAIL ") + e.name + "\n";
    for (const auto& c : v.checks)
      if (!c.ok) {
        o.violations.push_back({{"entry", e.name}, {"check", c.name}, {"detail", c.detail}});
        o.text += "  " + c.name + ": " + c.detail + "\n";
      }
  }
  json pairs = json::array();
  for (std::size_t i = 0; i + 1 < eight.size(); i += 2) {
    const bool same = same_faces(two_skeleton(windows[i].complex), two_skeleton(windows[i + 1].complex), 2);
    pairs.push_back({{"entry", eight[i].name}, {"petrie_dual", eight[i + 1].name}, {"same_2_skeleton", same}});
    all_ok = all_ok && same;
    o.text += std::string(same ? "ok   " : "FAIL ") + "2-skeleton of " + eight[i].name + " = " + eight[i + 1].name + "\n";
  }
  o.result = {{"window", window}, {"entries", entries}, {"pairs", pairs}, {"ok", all_ok}};
  if (!report_path.empty()) write_text_file(report_path, o.result.dump(2) + "\n");
  o.code = all_ok ? 0 : 1;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polycx: incidence complexes, regular apeirotopes and the rank-4 audit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output (envelope: command, inputs, result, violations)");

  std::string in, out, name, format = "obj", report;
  int window = kDefaultWindow, k = 2;
  json inputs = json::object();
  std::function<Outcome()> run;

  auto sub = [&](const char* cmd, const char* help) { return app.add_subcommand(cmd, help); };
  auto on_icx = [&](const char* cmd, const char* help, std::function<Outcome(const std::string&)> f) {
    auto* s = sub(cmd, help);
    s->add_option("file", in, "input file")->required();
    s->callback([&, f] {
      inputs = {{"file", in}};
      run = [&, f] { return f(in); };
    });
  };
  on_icx("validate", "Check the incidence-complex axioms (.icx, or interior of a .gcx)", cmd_validate);
  on_icx("flags", "List the flags of a complex", cmd_flags);
  on_icx("aut", "Automorphism group acting on flags", cmd_aut);
  on_icx("regular", "Exit 0 iff the complex is regular", cmd_regular);
  on_icx("roundtrip", "Rebuild from the distinguished subgroups and compare", cmd_roundtrip);
  on_icx("audit", "Rank-4 extension audit of a geometric complex (.gcx)", cmd_audit);
  on_icx("check-products", "Product condition of a subgroup system (.sgs)",
         [](const std::string& p) { return cmd_check(p, true); });
  on_icx("check-intersection", "Intersection condition of a subgroup system (.sgs)",
         [](const std::string& p) { return cmd_check(p, false); });

  auto* sys = sub("system", "Write the distinguished subgroup system of a regular complex");
  sys->add_option("file", in, "input .icx")->required();
  sys->add_option("-o,--output", out, "output .sgs (default stdout)");
  sys->callback([&] {
    inputs = {{"file", in}};
    run = [&] { return cmd_system(in, out); };
  });

  auto* fg = sub("from-group", "Build the coset complex of a subgroup system");
  fg->add_option("file", in, "input .sgs")->required();
  fg->add_option("-o,--output", out, "output .icx (default stdout)");
  fg->callback([&] {
    inputs = {{"file", in}};
    run = [&] { return cmd_from_group(in, out); };
  });

  auto* cat = sub("catalog", "Write a catalog entry's window (or a fixture) as .gcx");
  cat->add_option("name", name, "entry name, alias, Platonic solid, cube-petrial or three-fold-book")->required();
  cat->add_option("--window", window, "window N: the box [-N, N+1]^3")->check(CLI::Range(0, 12));
  cat->add_option("-o,--output", out, "output .gcx (default stdout)");
  cat->callback([&] {
    inputs = {{"name", name}, {"window", window}};
    run = [&] { return cmd_catalog(name, window, out); };
  });

  auto* pet = sub("petrie", "Petrie dual of a catalog entry or of a windowed rank-4 .gcx");
  pet->add_option("input", in, "entry name or .gcx file")->required();
  pet->add_option("--window", window, "window N for named entries")->check(CLI::Range(0, 12));
  pet->add_option("-o,--output", out, "write the dual's window as .gcx");
  pet->callback([&] {
    inputs = {{"input", in}, {"window", window}};
    run = [&] { return cmd_petrie(in, window, out); };
  });

  auto* sk = sub("skeleton", "k-skeleton of an .icx (any k) or .gcx (k = 2)");
  sk->add_option("-k", k, "skeleton rank")->required();
  sk->add_option("file", in, "input file")->required();
  sk->add_option("-o,--output", out, "output file (default stdout)");
  sk->callback([&] {
    inputs = {{"file", in}, {"k", k}};
    run = [&] { return cmd_skeleton(k, in, out); };
  });

  auto* r5 = sub("rank5", "Rank-5 obstruction for a catalog entry or .gcx");
  r5->add_option("input", in, "entry name or .gcx file")->required();
  r5->add_option("--window", window, "window N for named entries")->check(CLI::Range(0, 12));
  r5->callback([&] {
    inputs = {{"input", in}, {"window", window}};
    run = [&] { return cmd_rank5(in, window); };
  });

  auto* ex = sub("export", "Export a .gcx as an OFF or OBJ mesh");
  ex->add_option("--format", format, "off or obj")->check(CLI::IsMember({"off", "obj"}));
  ex->add_option("file", in, "input .gcx")->required();
  ex->add_option("-o,--output", out, "output mesh (default stdout)");
  ex->callback([&] {
    inputs = {{"file", in}, {"format", format}};
    run = [&] { return cmd_export(format, in, out); };
  });

  auto* ae = sub("all-eight", "Build and verify the eight catalog entries");
  ae->add_option("--window", window, "window N")->check(CLI::Range(0, 12));
  ae->add_option("--report", report, "write the JSON report here");
  ae->callback([&] {
    inputs = {{"window", window}, {"report", report}};
    run = [&] { return cmd_all_eight(window, report); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    for (int i = 1; i < argc; ++i) {
      const std::string a = argv[i];
      if (a.empty() || a[0] == '-') continue;
      if (!app.get_subcommand_no_throw(a)) what = "unknown command '" + a + "'";
      break;
    }
    std::cerr << "error: " << what << "\n\n" << app.help();
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Outcome o;
  std::string error;
  try {
    o = run();
  } catch (const std::exception& e) {
    error = e.what();
    o.code = 2;
  }
  if (as_json) {
    json env{{"command", command}, {"inputs", inputs}, {"result", o.result}, {"violations", o.violations},
             {"exit", o.code}};
    if (!error.empty()) env["error"] = error;
    else if (!o.text.empty() && !o.result.contains("output") && (command == "system" || command == "from-group" ||
                                                                  command == "catalog" || command == "skeleton" ||
                                                                  command == "export"))
      env["result"]["text"] = o.text;
    std::cout << env.dump(2) << "\n";
  } else if (!error.empty()) {
    std::cerr << "error: " << error << "\n";
  } else {
    std::cout << o.text;
  }
  return o.code;
}
