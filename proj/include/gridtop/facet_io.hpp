#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gridtop/complex.hpp"

namespace gridtop {

/// Facet-list text format:
///   #universe: a1 b1 a2 ...   (optional; otherwise labels in order of first use)
///   a1 b2                     one face per line
///   -                         the empty face
/// Blank lines and other '#' lines are skipped; no faces means the void complex.
auto read_facets(std::istream& in) -> SimplicialComplex;
auto read_facets_file(const std::string& path) -> SimplicialComplex;
void write_facets(std::ostream& out, const SimplicialComplex& k);

/// Ordered face list over an existing universe, same line syntax, no header required.
auto read_face_sequence(std::istream& in, const Universe& universe) -> std::vector<Face>;
auto read_face_sequence_file(const std::string& path, const Universe& universe) -> std::vector<Face>;
void write_face_sequence(std::ostream& out, const Universe& universe, const std::vector<Face>& faces);

}  // namespace gridtop
