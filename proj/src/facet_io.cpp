#include "gridtop/facet_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gridtop/error.hpp"

namespace gridtop {

namespace {

constexpr std::string_view kHeader = "#universe:";

auto tokens(const std::string& line) -> std::vector<std::string> {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

auto lookup(const Universe& u, const std::string& label, int line_no) -> int {
  auto it = std::find(u.begin(), u.end(), label);
  if (it == u.end()) {
    throw ParseError("line " + std::to_string(line_no) + ": label '" + label + "' is not in the universe");
  }
  return static_cast<int>(it - u.begin());
}

auto parse_face(const std::vector<std::string>& toks, Universe& u, bool grow, int line_no) -> Face {
  if (toks.size() == 1 && toks[0] == "-") return Face{};
  Face f;
  for (const auto& t : toks) {
    if (t == "-") throw ParseError("line " + std::to_string(line_no) + ": '-' must stand alone");
    if (grow && std::find(u.begin(), u.end(), t) == u.end()) {
      if (u.size() >= static_cast<std::size_t>(kMaxVertices)) throw CapacityError("more than 64 labels");
      u.push_back(t);
    }
    const int v = lookup(u, t, line_no);
    if (f.contains(v)) throw ParseError("line " + std::to_string(line_no) + ": repeated label '" + t + "'");
    f.insert(v);
  }
  return f;
}

auto open(const std::string& path) -> std::ifstream {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

void write_face(std::ostream& out, const Universe& u, Face f) {
  if (f.empty()) {
    out << "-\n";
    return;
  }
  bool first = true;
  for (int v : f) {
    out << (first ? "" : " ") << u[v];
    first = false;
  }
  out << '\n';
}

}  // namespace

auto read_facets(std::istream& in) -> SimplicialComplex {
  Universe u;
  bool header = false;
  std::vector<Face> faces;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.rfind(kHeader, 0) == 0) {
      if (header || !faces.empty()) throw ParseError("line " + std::to_string(line_no) + ": misplaced header");
      header = true;
      u = tokens(line.substr(kHeader.size()));
      auto sorted = u;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ParseError("duplicate label in universe header");
      }
      if (u.size() > static_cast<std::size_t>(kMaxVertices)) throw CapacityError("more than 64 labels");
      continue;
    }
    if (!line.empty() && line[0] == '#') continue;
    auto toks = tokens(line);
    if (toks.empty()) continue;
    faces.push_back(parse_face(toks, u, !header, line_no));
  }
  return SimplicialComplex::from_facets(std::move(u), std::move(faces));
}

auto read_facets_file(const std::string& path) -> SimplicialComplex {
  auto in = open(path);
  return read_facets(in);
}

void write_facets(std::ostream& out, const SimplicialComplex& k) {
  out << kHeader;
  for (const auto& l : k.universe()) out << ' ' << l;
  out << '\n';
  for (Face f : k.facets()) write_face(out, k.universe(), f);
}

auto read_face_sequence(std::istream& in, const Universe& universe) -> std::vector<Face> {
  Universe u = universe;
  std::vector<Face> faces;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line[0] == '#') continue;
    auto toks = tokens(line);
    if (toks.empty()) continue;
    faces.push_back(parse_face(toks, u, false, line_no));
  }
  return faces;
}

auto read_face_sequence_file(const std::string& path, const Universe& universe) -> std::vector<Face> {
  auto in = open(path);
  return read_face_sequence(in, universe);
}

void write_face_sequence(std::ostream& out, const Universe& universe, const std::vector<Face>& faces) {
  for (Face f : faces) write_face(out, universe, f);
}

}  // namespace gridtop
