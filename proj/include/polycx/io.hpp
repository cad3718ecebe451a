#pragma once

// Line-based text formats (.icx incidence complexes, .sgs subgroup systems,
// .gcx geometric complexes) and OFF/OBJ mesh export.

#include <stdexcept>
#include <string>
#include <string_view>

#include "polycx/coset.hpp"
#include "polycx/geometric.hpp"

namespace polycx {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

std::string write_icx(const IncidenceComplex& c);
/// Structural problems (dangling or duplicate ids) are kept in the complex
/// for validate_complex; only malformed lines throw.
IncidenceComplex parse_icx(std::string_view text);

std::string write_sgs(const SubgroupSystem& s);
SubgroupSystem parse_sgs(std::string_view text);

/// Besides the vertex lines and incidence block, edges, polygons and facets
/// carry their exact geometry ("edge", "polygon", "facet" lines) so that
/// truncated apeirogons and infinite facets survive the round trip.
std::string write_gcx(const GeometricComplex& g);
GeometricComplex parse_gcx(std::string_view text);

/// Equality of everything a .gcx file records.
bool same_geometric(const GeometricComplex& a, const GeometricComplex& b);

class MeshError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class MeshFormat { Off, Obj };

/// OFF holds every vertex and the finite planar 2-faces whose vertices are
/// all present; OBJ adds polylines for apeirogon runs and skew polygons.
std::string export_mesh(const GeometricComplex& g, MeshFormat format);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace polycx
