// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include <unistd.h>

#include "oracle.hpp"
#include "polycx/audit.hpp"
#include "polycx/catalog.hpp"
#include "polycx/coset.hpp"
#include "polycx/flag_aut.hpp"
#include "polycx/io.hpp"
#include "random_fixtures.hpp"

using namespace polycx;

namespace {

// Collects failure reasons for one criterion.
struct Log {
  std::vector<std::string> failures;
  std::ostringstream info;  // printed under the result line
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

// ---------------------------------------------------------------- criterion 1

using Records = std::vector<FaceRecord>;

Records delete_face(Records r, const std::string& id) {
  r.erase(std::remove_if(r.begin(), r.end(), [&](const FaceRecord& f) { return f.id == id; }), r.end());
  for (auto& f : r) f.covers.erase(std::remove(f.covers.begin(), f.covers.end(), id), f.covers.end());
  return r;
}

Records merge_faces(Records r, const std::string& keep, const std::string& gone) {
  r.erase(std::remove_if(r.begin(), r.end(), [&](const FaceRecord& f) { return f.id == gone; }), r.end());
  for (auto& f : r)
    for (auto& c : f.covers)
      if (c == gone) c = keep;
  return r;
}

const FaceRecord& first_of_rank(const Records& r, int rank) {
  return *std::find_if(r.begin(), r.end(), [&](const FaceRecord& f) { return f.rank == rank; });
}

// A vertex sharing no 2-face with the first vertex.
std::string opposite_vertex(const IncidenceComplex& c) {
  const auto near = c.faces_above({0, 0}, 2);
  for (std::size_t v = 1; v < c.face_count(0); ++v) {
    const auto f = c.faces_above({0, static_cast<int>(v)}, 2);
    if (std::none_of(f.begin(), f.end(), [&](int x) { return std::count(near.begin(), near.end(), x); }))
      return c.id(0, static_cast<int>(v));
  }
  return {};
}

struct Mutation {
  std::string name;
  Records records;
  Axiom expected;
};

bool oracle_fails(const oracle::AxiomCheck& a, Axiom ax) {
  switch (ax) {
    case Axiom::FlagLength: return !a.flag_length;
    case Axiom::AtLeastTwo: return !a.at_least_two;
    case Axiom::StronglyFlagConnected: return !a.strongly_connected;
    default: return false;
  }
}

void criterion_axioms(Log& log) {
  for (const auto& n : platonic_names()) log.expect(validate_complex(platonic_lattice(n)).passed, n + " fails validation");
  for (const char* n : {"tetrahedron", "cube", "octahedron"})
    log.expect(validate_complex(platonic(n).abstract).passed, std::string(n) + " (geometric) fails validation");

  std::vector<Mutation> ms;
  for (const char* n : {"cube", "octahedron", "tetrahedron"}) {
    const auto c = platonic_lattice(n);
    const Records base = c.records();
    const std::string s(n);
    ms.push_back({s + ": delete a middle 2-face", delete_face(base, first_of_rank(base, 2).id), Axiom::AtLeastTwo});
    Records broken = base;
    for (auto& f : broken)
      if (f.rank == 2) {
        f.covers.pop_back();
        break;
      }
    ms.push_back({s + ": break a cover link", broken, Axiom::AtLeastTwo});
    Records detached = base;
    for (auto& f : detached)
      if (f.rank == 1) {
        f.covers.clear();
        break;
      }
    ms.push_back({s + ": detach an edge from its vertices", detached, Axiom::FlagLength});
    if (s != "tetrahedron") {
      ms.push_back({s + ": merge the vertices of two far flags", merge_faces(base, c.id(0, 0), opposite_vertex(c)),
                    Axiom::StronglyFlagConnected});
    } else {
      // two tetrahedra: merge one vertex of each
      const auto two = oracle::records_of(oracle::from_cycles(
          8, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {4, 5, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}}));
      ms.push_back({s + ": merge the vertices of two far flags", merge_faces(two, "v0", "v4"),
                    Axiom::StronglyFlagConnected});
    }
  }
  log.expect(ms.size() == 12, "expected 12 mutations");
  for (const auto& m : ms) {
    const auto rep = validate_complex(IncidenceComplex::from_records(3, m.records));
    const auto truth = oracle::check_axioms(3, m.records);
    log.expect(oracle_fails(truth, m.expected), m.name + ": oracle does not see " + std::string(axiom_name(m.expected)));
    log.expect(!rep.passed && rep.has(m.expected), m.name + ": " + std::string(axiom_name(m.expected)) + " not reported");
  }
}

// ---------------------------------------------------------------- criterion 2

void criterion_groups(Log& log) {
  const std::vector<std::pair<std::string, IncidenceComplex>> fixtures = {
      {"cube", platonic_lattice("cube")},
      {"octahedron", platonic_lattice("octahedron")},
      {"tetrahedron", platonic_lattice("tetrahedron")},
      {"square", polygon_lattice(4)},
      {"torus {3,6}_(2,0)", torus_map_3_6_2_0()}};
  const std::map<std::string, std::size_t> want = {
      {"cube", 48}, {"octahedron", 48}, {"tetrahedron", 24}, {"square", 8}, {"torus {3,6}_(2,0)", 48}};
  for (const auto& [name, c] : fixtures) {
    const std::size_t nflags = flags(c).size();
    log.expect(nflags == oracle::check_axioms(c.rank(), c.records()).flags, name + ": flag count disagrees with chains");
    log.expect(nflags == want.at(name), name + ": flag count " + std::to_string(nflags));
    const auto g = automorphisms(c);
    const std::size_t order = g.enumerate().order();
    log.expect(order == nflags, name + ": |Gamma| = " + std::to_string(order));
    log.expect(is_regular(c), name + ": not flag-transitive");
    const auto ds = distinguished_system(c, g);
    log.expect(ds.order_of(-1) == 1, name + ": R(-1) not trivial");
    for (int i = 0; i < c.rank(); ++i)
      log.expect(ds.order_of(i) == 2, name + ": R(" + std::to_string(i) + ") not of order 2");
    const auto s = system_from(ds);
    log.expect(check_products(s).ok, name + ": product condition fails");
    log.expect(check_intersection(s).ok, name + ": intersection condition fails");
    log.expect(round_trip(c), name + ": round trip not isomorphic");
  }
}

// ---------------------------------------------------------------- criterion 3

void criterion_faithfulness(Log& log) {
  const auto t = torus_map_3_6_2_0();
  log.expect(is_regular(t), "torus map not regular");
  const auto rep = faithfulness_check(t);
  log.expect(!rep.ok, "torus map passes faithfulness");
  log.expect(!rep.first.empty() && rep.first != rep.second, "no witness pair");
  if (rep.ok || rep.rank < 1) return;
  const auto a = t.find(rep.rank, rep.first), b = t.find(rep.rank, rep.second);
  log.expect(a && b, "witness ids not found");
  if (!a || !b) return;
  auto ca = t.covers(rep.rank, *a), cb = t.covers(rep.rank, *b);
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  log.expect(ca == cb, "witness faces have different boundaries");
  log.info << "  witness: rank " << rep.rank << " faces " << rep.first << ", " << rep.second << "\n";
}

// ---------------------------------------------------------------- criteria 4-8

struct Corpus {
  std::vector<CatalogEntry> eight = all_eight();
  std::vector<OrbitComplex> windows;  // N = 3
};

Corpus& corpus() {
  static Corpus c;
  return c;
}

std::vector<EntryVerification> verifications;

void criterion_catalog(Log& log) {
  auto& c = corpus();
  log.expect(c.eight.size() == 8, "expected 8 entries");
  for (const auto& e : c.eight) {
    c.windows.push_back(build_window(e, 3));
    verifications.push_back(verify_entry(e, c.windows.back()));
    const auto& v = verifications.back();
    for (const auto& ch : v.checks) log.expect(ch.ok, e.name + ": " + ch.name + (ch.detail.empty() ? "" : " (" + ch.detail + ")"));
    log.expect(v.flag_stabilizer_order == 2, e.name + ": flag stabilizer order " + std::to_string(v.flag_stabilizer_order));
  }
}

// 2-faces of the facet containing the base vertex, counted at that vertex.
std::size_t facet_valency(const OrbitComplex& w) {
  const auto& a = w.complex.abstract;
  const auto in_facet = a.faces_below({3, w.base_flag.faces[3]}, 2);
  const auto at_vertex = a.faces_above({0, w.base_flag.faces[0]}, 2);
  std::size_t n = 0;
  for (int f : in_facet) n += std::count(at_vertex.begin(), at_vertex.end(), f);
  return n;
}

std::set<FaceKey> facet_keys(const GeometricComplex& g) {
  std::set<FaceKey> out;
  for (std::size_t f = 0; f < g.abstract.face_count(3); ++f) out.insert(*g.face_key(3, static_cast<int>(f)));
  return out;
}

void criterion_petrie(Log& log) {
  auto& c = corpus();
  if (c.windows.size() != 8) return log.expect(false, "catalog windows missing");
  std::set<std::string> names;
  for (std::size_t i = 0; i < 8; i += 2) {
    const auto& a = c.eight[i];
    const auto& b = c.eight[i + 1];
    names.insert(a.name);
    names.insert(b.name);
    const auto pa = petrie_dual_4(a), pb = petrie_dual_4(b);
    log.expect(pa.name == b.name && pb.name == a.name, a.name + ": Petrie names do not pair");
    for (int k = 0; k < 4; ++k) {
      log.expect(pa.generators[k] == b.generators[k], a.name + ": Petrie generators differ");
      log.expect(pb.generators[k] == a.generators[k], b.name + ": Petrie operation not involutive");
    }
    log.expect(same_faces(two_skeleton(c.windows[i].complex), two_skeleton(c.windows[i + 1].complex), 2),
               a.name + ": 2-skeletons differ");
    log.expect(facet_keys(c.windows[i].complex) != facet_keys(c.windows[i + 1].complex), a.name + ": same facets");
    const auto qa = facet_valency(c.windows[i]), qb = facet_valency(c.windows[i + 1]);
    log.expect(qa != qb, a.name + ": facet sections have the same vertex valency " + std::to_string(qa));
    log.info << "  " << a.name << " <-> " << b.name << ": facet valency " << qa << " vs " << qb << "\n";
  }
  log.expect(names.size() == 8, "pairs overlap");
}

void criterion_r_values(Log& log) {
  auto& c = corpus();
  if (verifications.size() != 8) return log.expect(false, "catalog verification missing");
  const std::vector<int> want = {4, 4, 3, 3, 4, 4, 3, 3};
  for (std::size_t i = 0; i < 8; ++i) {
    const auto& name = c.eight[i].name;
    log.expect(verifications[i].r_values == std::vector<int>{want[i]}, name + ": unexpected r values");
    const int r3 = facet_r3(c.windows[i].complex, c.windows[i].base_flag.faces[3]);
    log.expect(r3 == 2, name + ": facet r3 = " + std::to_string(r3));
    log.info << "  " << name << ": r = " << (verifications[i].r_values.empty() ? 0 : verifications[i].r_values[0])
              << ", r3 = " << r3 << "\n";
  }
}

void criterion_dihedral(Log& log) {
  auto& c = corpus();
  const auto skel = two_skeleton(c.windows.empty() ? build_window(c.eight[0], 3).complex : c.windows[0].complex);
  const auto base = choose_base_flag(skel);
  std::vector<AngleClass> classes;
  for (const auto& a : dihedral_angles_at_edge(skel, base.edge)) classes.push_back(a.cls);
  const std::set<AngleClass> distinct(classes.begin(), classes.end());
  log.expect(distinct == std::set<AngleClass>{AngleClass::Coincident, AngleClass::Deg90},
             "{4,3,4} edge classes are not exactly {coincident, 90}");
  log.expect(dihedral_obstruction(4, 3, classes).excluded, "(4,3) not excluded");
  log.expect(!dihedral_obstruction(4, 2, classes).excluded, "(4,2) excluded");
  const auto book = three_fold_book();
  const auto angles = dihedral_angles_at_edge(book, *book.abstract.find(1, "e0"));
  log.expect(angles.size() == 3, "book edge does not carry three angle pairs");
  for (const auto& a : angles)
    log.expect(a.cls == AngleClass::Deg120 && a.signed_cos2 == Rational(-1, 4), "book angle is not exactly 120");
}

void criterion_theorem(Log& log) {
  auto& c = corpus();
  for (std::size_t i = 0; i < 8; ++i) {
    const auto& e = c.eight[i];
    const auto& mate = c.eight[i ^ 1];
    const auto w = build_window(e, 2);
    const auto wm = build_window(mate, 2);
    const auto rep = audit(two_skeleton(w.complex));
    log.expect(rep.verdict == Verdict::Rank4Candidates, e.name + ": verdict " + std::string(verdict_name(rep.verdict)));
    std::set<std::vector<FaceKey>> got, want;
    for (const auto& cand : rep.candidates) got.insert(cand.facets);
    for (const auto* k : {&w.complex, &wm.complex}) {
      const auto keys = facet_keys(*k);
      want.insert({keys.begin(), keys.end()});
    }
    log.expect(got == want, e.name + ": candidates are not {entry, Petrie dual}");
    const auto r5 = rank5_obstruction(e, 3);
    log.expect(r5.obstructed, e.name + ": rank-5 extension not obstructed");
    log.info << "  " << e.name << ": " << verdict_name(rep.verdict) << ", " << rep.candidates.size()
              << " candidates; rank 5 " << (r5.obstructed ? "obstructed" : "open") << " (" << r5.branch << ")\n";
  }
  const auto cube = audit(platonic("cube"));
  log.expect(cube.verdict == Verdict::NoRank4Extension, "cube: verdict " + std::string(verdict_name(cube.verdict)));
}

// ---------------------------------------------------------------- criterion 9

std::string run_reader(const std::string& path) {
  const std::string cmd = std::string(POLYCX_PYTHON) + " " + POLYCX_MESH_READER + " " + path + " 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return "popen failed";
  std::string out;
  char buf[256];
  while (std::fgets(buf, sizeof buf, pipe.get())) out += buf;
  while (!out.empty() && (out.back() == '\n' || out.back() == '\r')) out.pop_back();
  return out;
}

void criterion_formats(Log& log) {
  fixtures::Rng rng(9);
  int icx = 0, sgs = 0, gcx = 0;
  for (int t = 0; t < 100; ++t) {
    const auto c = fixtures::random_icx(rng);
    const auto ct = write_icx(c);
    icx += parse_icx(ct) == c && write_icx(parse_icx(ct)) == ct;
    const auto s = fixtures::random_sgs(rng);
    sgs += fixtures::same_system(parse_sgs(write_sgs(s)), s);
    const auto g = fixtures::random_gcx(rng);
    const auto gt = write_gcx(g);
    gcx += same_geometric(parse_gcx(gt), g) && write_gcx(parse_gcx(gt)) == gt;
  }
  log.expect(icx == 100, ".icx round trips: " + std::to_string(icx) + "/100");
  log.expect(sgs == 100, ".sgs round trips: " + std::to_string(sgs) + "/100");
  log.expect(gcx == 100, ".gcx round trips: " + std::to_string(gcx) + "/100");

  const auto dir = std::filesystem::temp_directory_path() / ("polycx_acceptance_" + std::to_string(getpid()));
  std::filesystem::create_directories(dir);
  std::vector<std::pair<std::string, GeometricComplex>> meshes = {{"cube", platonic("cube")},
                                                                  {"cube-petrial", cube_petrial()}};
  for (std::size_t i = 0; i < 8; ++i) meshes.push_back({"entry" + std::to_string(i), build_window(corpus().eight[i], 2).complex});
  int checked = 0;
  for (const auto& [name, g] : meshes)
    for (auto fmt : {MeshFormat::Off, MeshFormat::Obj}) {
      std::string text;
      try {
        text = export_mesh(g, fmt);
      } catch (const MeshError&) {
        continue;  // OFF cannot hold skew or infinite faces
      }
      const auto path = (dir / (name + (fmt == MeshFormat::Off ? ".off" : ".obj"))).string();
      write_text_file(path, text);
      const auto got = run_reader(path);
      log.expect(got == std::to_string(g.coords.size()),
                 path + ": reader says '" + got + "', expected " + std::to_string(g.coords.size()));
      ++checked;
    }
  std::filesystem::remove_all(dir);
  log.expect(checked >= 12, "too few meshes exported");
  log.info << "  " << checked << " mesh files reparsed\n";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Log&)>>> criteria = {
      {"axiom suite and 12 mutations", criterion_axioms},
      {"group correspondence", criterion_groups},
      {"faithfulness counterexample", criterion_faithfulness},
      {"catalog regularity (N=3)", criterion_catalog},
      {"Petrie pairing", criterion_petrie},
      {"r values and facet r3", criterion_r_values},
      {"dihedral obstruction", criterion_dihedral},
      {"rank-4 candidates and rank-5 obstruction", criterion_theorem},
      {"format round trips and mesh reparse", criterion_formats}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Log log;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(log);
    } catch (const std::exception& e) {
      log.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = log.failures.empty();
    failed += !ok;
    char line[160];
    std::snprintf(line, sizeof line, "%s criterion %zu: %s (%.2f s)", ok ? "PASS" : "FAIL", i + 1,
                  criteria[i].first.c_str(), secs);
    std::cout << line << "\n";
    std::cout << log.info.str();
    for (const auto& f : log.failures) std::cout << "    " << f << "\n";
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
  return failed ? 1 : 0;
}
