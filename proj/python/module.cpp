// Python bindings: complexes are opaque handles, reports come back as plain
// dicts built from the same JSON the CLI prints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "../tools/json_report.hpp"
#include "polycx/io.hpp"

namespace py = pybind11;
using namespace polycx;
using nlohmann::json;

namespace {

py::object to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& x : j) out.append(to_py(x));
      return out;
    }
    default: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
  }
}

std::string vec_str(const Vec3& v) {
  return "(" + v.x.str() + ", " + v.y.str() + ", " + v.z.str() + ")";
}

IncidenceComplex from_tuples(int rank, const std::vector<std::tuple<int, std::string, std::vector<std::string>>>& faces) {
  std::vector<FaceRecord> recs;
  for (const auto& [r, id, covers] : faces) recs.push_back({r, id, covers});
  return IncidenceComplex::from_records(rank, recs);
}

py::dict validation_dict(const ValidationReport& r) {
  py::dict d;
  d["passed"] = r.passed;
  d["violations"] = to_py(cli::violations_json(r));
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Incidence complexes, regular 4-apeirotopes and the rank-4 audit";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<MeshError>(m, "MeshError", PyExc_ValueError);
  py::register_exception<AuditError>(m, "AuditError", PyExc_ValueError);

  py::class_<IncidenceComplex>(m, "IncidenceComplex")
      .def(py::init(&from_tuples), py::arg("rank"), py::arg("faces"),
           "faces: (rank, id, [ids of covered faces]) tuples")
      .def_property_readonly("rank", &IncidenceComplex::rank)
      .def("face_count", &IncidenceComplex::face_count)
      .def("ids", [](const IncidenceComplex& c, int r) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < c.face_count(r); ++i) out.push_back(c.id(r, static_cast<int>(i)));
        return out;
      })
      .def("covers", [](const IncidenceComplex& c, int r, const std::string& id) {
        const auto i = c.find(r, id);
        if (!i) throw py::key_error(id);
        std::vector<std::string> out;
        for (int x : c.covers(r, *i)) out.push_back(c.id(r - 1, x));
        return out;
      })
      .def("__eq__", [](const IncidenceComplex& a, const IncidenceComplex& b) { return a == b; })
      .def("__repr__", [](const IncidenceComplex& c) {
        std::string s = "<IncidenceComplex rank " + std::to_string(c.rank()) + ":";
        for (int r = 0; r < c.rank(); ++r) s += " " + std::to_string(c.face_count(r));
        return s + ">";
      });

  py::class_<GeometricComplex>(m, "GeometricComplex")
      .def_property_readonly("rank", &GeometricComplex::rank)
      .def_property_readonly("abstract", [](const GeometricComplex& g) { return g.abstract; })
      .def("vertices", [](const GeometricComplex& g) {
        std::vector<std::string> out;
        for (const auto& p : g.coords) out.push_back(vec_str(p));
        return out;
      }, "exact coordinates as strings")
      .def("interior_count", &GeometricComplex::interior_count)
      .def("__eq__", [](const GeometricComplex& a, const GeometricComplex& b) { return same_geometric(a, b); })
      .def("__repr__", [](const GeometricComplex& g) {
        std::string s = "<GeometricComplex rank " + std::to_string(g.rank()) + ":";
        for (int r = 0; r < g.rank(); ++r) s += " " + std::to_string(g.abstract.face_count(r));
        return s + ">";
      });

  // complexes and groups
  m.def("validate", [](const IncidenceComplex& c) { return validation_dict(validate_complex(c)); });
  m.def("validate_interior", [](const GeometricComplex& g) { return validation_dict(validate_interior(g)); });
  m.def("flag_count", [](const IncidenceComplex& c) { return flags(c).size(); });
  m.def("is_polytope", &is_polytope);
  m.def("is_regular", &is_regular);
  m.def("group_order", [](const IncidenceComplex& c) { return automorphisms(c).enumerate().order(); });
  m.def("are_isomorphic", &are_isomorphic);
  m.def("faithfulness", [](const IncidenceComplex& c) {
    const auto r = faithfulness_check(c);
    py::dict d;
    d["ok"] = r.ok;
    if (!r.ok) d["witness"] = py::make_tuple(r.rank, r.first, r.second);
    return d;
  });
  m.def("dual", &dual);
  m.def("skeleton", &skeleton, py::arg("complex"), py::arg("k"));

  // subgroup systems, passed as .sgs text
  m.def("subgroup_system", [](const IncidenceComplex& c) {
    return write_sgs(system_from(distinguished_system(c, automorphisms(c))));
  }, "distinguished subgroups at the first flag, as .sgs text");
  m.def("check_products", [](const std::string& sgs) { return to_py(cli::to_json(check_products(parse_sgs(sgs)))); });
  m.def("check_intersection", [](const std::string& sgs) {
    return to_py(cli::to_json(check_intersection(parse_sgs(sgs))));
  });
  m.def("complex_from_system", [](const std::string& sgs) { return complex_from_system(parse_sgs(sgs)); });
  m.def("round_trip", &round_trip);

  // formats
  m.def("parse_icx", [](const std::string& t) { return parse_icx(t); });
  m.def("write_icx", &write_icx);
  m.def("parse_gcx", [](const std::string& t) { return parse_gcx(t); });
  m.def("write_gcx", &write_gcx);
  m.def("export_mesh", [](const GeometricComplex& g, const std::string& fmt) {
    if (fmt != "off" && fmt != "obj") throw py::value_error("format must be 'off' or 'obj'");
    return export_mesh(g, fmt == "off" ? MeshFormat::Off : MeshFormat::Obj);
  }, py::arg("complex"), py::arg("format") = "obj");

  // catalog
  m.def("platonic_names", &platonic_names);
  m.def("platonic", [](const std::string& n) { return platonic(n); });
  m.def("platonic_lattice", [](const std::string& n) { return platonic_lattice(n); });
  m.def("torus_map", &torus_map_3_6_2_0, "the regular map {3,6}_(2,0)");
  m.def("cube_petrial", &cube_petrial);
  m.def("three_fold_book", &three_fold_book);
  m.def("catalog_names", [] {
    std::vector<std::string> out;
    for (const auto& e : all_eight()) out.push_back(e.name);
    return out;
  });
  m.def("petrie_name", [](const std::string& n) { return find_entry(n).petrie_name; });
  m.def("window", [](const std::string& n, int size) { return build_window(find_entry(n), size).complex; },
        py::arg("name"), py::arg("n") = kDefaultWindow, "the entry's complex on the box [-n, n+1]^3");
  m.def("verify_entry", [](const std::string& n, int size) {
    const auto e = find_entry(n);
    return to_py(cli::to_json(verify_entry(e, build_window(e, size))));
  }, py::arg("name"), py::arg("n") = kDefaultWindow);
  m.def("two_skeleton", &two_skeleton);

  // the audit
  m.def("audit", [](const GeometricComplex& g) { return to_py(cli::to_json(audit(g))); });
  m.def("rank5_obstruction", [](const std::string& n, int size) {
    return to_py(cli::to_json(rank5_obstruction(find_entry(n), size)));
  }, py::arg("name"), py::arg("n") = kDefaultWindow);
  m.def("dihedral_obstruction", [](int r, int r3, const std::vector<std::string>& classes) {
    std::vector<AngleClass> cs;
    for (const auto& s : classes) {
      bool found = false;
      for (auto c : {AngleClass::Coincident, AngleClass::Deg60, AngleClass::Deg90, AngleClass::Deg120, AngleClass::Other})
        if (angle_class_name(c) == s) {
          cs.push_back(c);
          found = true;
        }
      if (!found) throw py::value_error("unknown angle class '" + s + "'");
    }
    const auto res = dihedral_obstruction(r, r3, cs);
    return py::make_tuple(res.excluded, res.branch);
  });
}
