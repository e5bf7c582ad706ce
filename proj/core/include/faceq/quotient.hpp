#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "faceq/actions.hpp"
#include "faceq/complex.hpp"

namespace faceq {

struct QuotientVertex {
  int id = 0;
  std::vector<int> members;  // originating scheme vertex ids, ascending
  friend bool operator==(const QuotientVertex&, const QuotientVertex&) =
      default;
};

struct QuotientEdge {
  int id = 0;
  // Endpoints in the reference direction (tail u, head v).  The reference
  // direction is the forward direction of the class's smallest edge.
  int u = 0, v = 0;
  int scheme_class = -1;  // edge-class id in the originating scheme
  long long order = 1;
  bool flat = true;
  // True when the gluings identify the two directions of the class's edges
  // with each other; such an edge is always a loop in the quotient.
  bool flipped = false;
  friend bool operator==(const QuotientEdge&, const QuotientEdge&) = default;
};

struct QuotientCell {
  int id = 0;
  // Attaching word: signed 1-based quotient-edge references forming a closed
  // walk.  May become empty after deformations; the cell is then attached at
  // its basepoint.
  std::vector<Sym> word;
  int basepoint = 0;
  int face_a = -1, face_b = -1;  // originating scheme face pair
  friend bool operator==(const QuotientCell&, const QuotientCell&) = default;
};

// The 2-complex obtained by performing all face identifications on the
// boundary sphere: vertices and edges are identification classes, and each
// face pair contributes one 2-cell.
struct QuotientComplex {
  std::vector<QuotientVertex> vertices;
  std::vector<QuotientEdge> edges;
  std::vector<QuotientCell> cells;
  std::uint64_t scheme_hash = 0;  // hash of the originating scheme
  friend bool operator==(const QuotientComplex&, const QuotientComplex&) =
      default;
};

// Structural hash covering vertices, edges, cells, and the scheme hash; used
// as the lineage id tying presentations and deformation records together.
std::uint64_t quotient_hash(const QuotientComplex& q);

QuotientComplex build_quotient(const FacePairingScheme& s);

int euler_characteristic(const QuotientComplex& q);

// The subgraph of the quotient 1-skeleton spanned by the edges whose order
// exceeds 2, together with their endpoint vertices.
struct GammaEdge {
  int id = 0;  // quotient edge id
  int u = 0, v = 0;
  long long order = 1;
  friend bool operator==(const GammaEdge&, const GammaEdge&) = default;
};

struct NonFlatGraph {
  std::vector<int> vertices;  // quotient vertex ids, ascending
  std::vector<GammaEdge> edges;
};

NonFlatGraph gamma_graph(const QuotientComplex& q);

// Multigraph cycle criterion: some connected component has at least as many
// edges as vertices (loops count as edges).
bool has_circuit(const NonFlatGraph& g);

// Deterministic spanning forest of the quotient 1-skeleton: breadth-first
// from the smallest vertex id of each component, visiting incident edges in
// ascending id order.  Returned edge ids are sorted.
std::vector<int> spanning_forest(const QuotientComplex& q);

// A tree in the full 1-skeleton that contains every vertex touched by an
// order > 2 edge and uses as many order > 2 edges as possible; leaves not
// touched by such edges are pruned away.  Empty when no order > 2 edge
// exists.
std::vector<int> gamma_spanning_tree(const QuotientComplex& q);

// Record of one elementary deformation, carrying enough provenance to induce
// the corresponding presentation map: old-id removal lists, old-to-new index
// maps, Euler characteristics, lineage hashes, and the resulting complex.
struct DeformationRecord {
  std::string kind;  // "tree-contraction" | "edge-contraction" | "subcomplex-collapse"
  std::vector<int> removed_vertices;
  std::vector<int> removed_edges;
  std::vector<int> removed_cells;
  std::vector<int> vertex_map;  // old vertex id -> new vertex id
  std::vector<int> edge_map;    // old edge id -> new edge id, -1 if removed
  std::vector<int> cell_map;    // old cell id -> new cell id, -1 if removed
  int chi_before = 0, chi_after = 0;
  std::uint64_t lineage_before = 0, lineage_after = 0;
  QuotientComplex after;
};

// Contracts an acyclic edge set: each tree component's vertices merge into
// the component's smallest vertex, tree edges disappear, and attaching words
// drop the erased symbols.  Preserves the Euler characteristic and the cell
// count.
std::pair<QuotientComplex, DeformationRecord> contract_tree(
    const QuotientComplex& q, const std::vector<int>& tree_edges);

// Single-edge contraction; rejects loops (contracting a loop changes the
// homotopy type).
std::pair<QuotientComplex, DeformationRecord> contract_edge(
    const QuotientComplex& q, int edge_id);

struct SubcomplexSelection {
  std::vector<int> vertices;
  std::vector<int> edges;
  std::vector<int> cells;
};

// Collapses a connected, boundary-closed subcomplex to a single vertex:
// selected cells and edges disappear, selected vertices merge, and surviving
// attaching words drop the erased symbols.  The Euler characteristic may
// change (it is preserved exactly when the collapsed subcomplex is
// contractible); both values are recorded.
std::pair<QuotientComplex, DeformationRecord> collapse_subcomplex(
    const QuotientComplex& q, const SubcomplexSelection& sel);

// Number of order > 2 edges remaining; after contracting the tree returned
// by gamma_spanning_tree these are loops at the merged vertex, one circle
// each.
int nonflat_circles(const QuotientComplex& q);

enum class SurfaceKind { disk, projective_plane, sphere, other, not_a_surface };

std::string surface_kind_name(SurfaceKind k);

struct SurfaceClass {
  SurfaceKind kind = SurfaceKind::not_a_surface;
  bool is_surface = false;
  bool connected = false;
  bool orientable = false;
  bool has_boundary = false;
  int chi = 0;
  std::string reason;  // diagnostic for other / not_a_surface
};

// Decides whether the quotient is a compact surface (every edge has at most
// two incident cell sides and every vertex link is a single arc or circle)
// and classifies it by Euler characteristic, orientability, and boundary.
SurfaceClass classify_surface(const QuotientComplex& q);

// Recognizes the one-vertex, one-edge, one-cell complex whose attaching word
// is the q-th power of the single edge (up to rotation and inversion) with
// q >= 3; returns q, or nothing for any other shape.
std::optional<int> recognize_lens_shell(const QuotientComplex& q);

// Deterministic DOT rendering of the order > 2 subgraph.
std::string gamma_dot(const QuotientComplex& q);

}  // namespace faceq
