#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace faceq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when input cannot even be interpreted structurally (bad JSON shape,
// out-of-range indices).  Semantic problems go into a ValidationReport instead.
struct ParseError : Error {
  using Error::Error;
};

// Raised when an internal consistency check fails; the CLI maps this to its
// own exit code so corrupted results are never reported as clean ones.
struct InvariantError : Error {
  using Error::Error;
};

// A signed, 1-based reference to an edge (in face boundaries) or to a
// generator (in relators).  +k means element k-1 traversed forward,
// -k means backward.  Zero is never a valid symbol.
using Sym = int;

inline int sym_index(Sym s) { return (s > 0 ? s : -s) - 1; }
inline bool sym_forward(Sym s) { return s > 0; }
inline Sym sym_inverse(Sym s) { return -s; }
inline Sym make_sym(int index, bool forward) {
  return forward ? index + 1 : -(index + 1);
}

// A closed polygonal cell structure on the 2-sphere.  Faces are closed walks
// over directed edge references; every edge lies on exactly two face sides
// (possibly both on the same face).
struct BoundaryComplex {
  std::vector<std::string> vertices;            // display labels
  std::vector<std::pair<int, int>> edges;       // endpoint vertex ids
  std::vector<std::vector<Sym>> faces;          // boundary walks

  int tail(int face, int pos) const {
    Sym s = faces[face][pos];
    const auto& e = edges[sym_index(s)];
    return sym_forward(s) ? e.first : e.second;
  }
  int head(int face, int pos) const {
    Sym s = faces[face][pos];
    const auto& e = edges[sym_index(s)];
    return sym_forward(s) ? e.second : e.first;
  }
  std::size_t flag_count() const {
    std::size_t n = 0;
    for (const auto& f : faces) n += f.size();
    return n;
  }
};

// One glued face pair.  The correspondence maps boundary position i of face
// `a` to position j of face `b` (both faces have the same length L):
//
//   reversed == false:  j = (i + offset) mod L     (same walk direction)
//   reversed == true:   j = (offset - i) mod L     (opposite walk direction)
//
// The inverse map (b back to a) uses offset' = -offset mod L when not
// reversed; a reversed correspondence is its own inverse.
struct PairingEntry {
  int a = -1;
  int b = -1;
  int offset = 0;
  bool reversed = false;
};

struct FacePairingScheme {
  BoundaryComplex complex;
  std::vector<PairingEntry> pairing;   // one entry per unordered face pair
  std::string meta_json;               // optional provenance blob ("" = none)
};

// Flat numbering of face sides ("flags"): face f occupies the id range
// [base[f], base[f] + len(f)).
struct FlagIndexer {
  std::vector<int> base;
  int total = 0;

  static FlagIndexer build(const BoundaryComplex& c);
  int id(int face, int pos) const { return base[face] + pos; }
  std::pair<int, int> face_pos(int id) const;
};

// Pairing data resolved into per-face form; assumes a structurally sound
// scheme (throws ParseError otherwise).
struct PairingView {
  std::vector<int> peer;         // peer[f] = face glued to f
  std::vector<int> offset;       // correspondence params seen from f
  std::vector<char> reversed;

  static PairingView build(const FacePairingScheme& s);
  // Image under the correspondence of position pos on face f.
  int map_pos(const BoundaryComplex& c, int f, int pos) const {
    int len = static_cast<int>(c.faces[f].size());
    int j = reversed[f] ? (offset[f] - pos) % len : (pos + offset[f]) % len;
    return j < 0 ? j + len : j;
  }
};

enum class ElementKind { vertex, edge, face };

// A partition of vertices, edges or faces into identification classes.
// Classes are numbered in increasing order of their smallest member and each
// member list is sorted, so equal partitions compare equal structurally.
struct ClassPartition {
  ElementKind kind = ElementKind::edge;
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;

  bool operator==(const ClassPartition&) const = default;
};

struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> errors;
  std::vector<Violation> warnings;
  bool valid() const { return errors.empty(); }
};

// Checks every structural invariant of a face-pairing scheme: closed face
// walks, two sides per edge, fixed-point-free face involution with matching
// lengths and in-range offsets, connectivity, and sphere Euler count.
// Faces carrying several edges of one identification class are legal but
// reported as warnings.
ValidationReport validate(const FacePairingScheme& s);

// Edge identification classes: two edges lie in one class iff a chain of
// pairing correspondences glues them.
ClassPartition edge_classes(const FacePairingScheme& s);

// Vertex identification classes induced by the glued boundary walks.
ClassPartition vertex_classes(const FacePairingScheme& s);

// Inserts a midpoint vertex on every edge.  The result is an equivalent
// scheme (same identification space) in which no edge class can fold onto
// itself, which makes neighbourhood checks at former edge midpoints ordinary
// vertex checks.  Face f of length L becomes length 2L; a correspondence
// (offset o, reversed r) becomes (2o, false) or (2o+1, true).
FacePairingScheme subdivide_edges(const FacePairingScheme& s);

}  // namespace faceq
