#pragma once

#include <vector>

#include "faceq/complex.hpp"

namespace faceq {

// A permutation of side ids (see FlagIndexer): image[i] is where side i goes.
using SidePermutation = std::vector<int>;

// The involution induced by the face pairing: side (face, pos) maps to the
// corresponding side of the partner face.  Fixed-point free.
SidePermutation pairing_involution(const FacePairingScheme& s);

// The involution that swaps the two sides of every edge belonging to the
// given edge class and fixes all other sides.
SidePermutation class_reflection(const FacePairingScheme& s,
                                 const ClassPartition& edge_cls, int class_id);

// Swaps the two sides of every edge (union of all class reflections).
SidePermutation full_reflection(const FacePairingScheme& s);

struct EdgeClassInfo {
  int id = 0;
  std::vector<int> members;  // edge ids, ascending
  long long order = 1;       // see edge_order
  bool collapsible = false;  // see is_collapsible_class
  bool flat = true;          // order <= 2
};

struct ActionAnalysis {
  ClassPartition edge_cls;
  std::vector<EdgeClassInfo> classes;  // indexed like edge_cls.classes
  long long degree = 1;                // max order over classes
  bool flat = true;                    // degree <= 2
};

// Order of one quotient edge: the lcm of the cycle lengths of
// pairing-then-reflection restricted to the class's sides.  This counts how
// many face sides wrap around the quotient edge.
long long edge_order(const FacePairingScheme& s, const ClassPartition& edge_cls,
                     int class_id);

// True when some edge of the class is glued directly onto itself: the
// correspondence of its two faces carries the edge's position on one face to
// the same edge's position on the other, folding the faces together there.
bool is_collapsible_class(const FacePairingScheme& s,
                          const ClassPartition& edge_cls, int class_id);

ActionAnalysis analyze_actions(const FacePairingScheme& s);

long long scheme_degree(const FacePairingScheme& s);

// Flat means degree <= 2; degree-1 (fully collapsible) schemes count as flat.
bool is_flat(const FacePairingScheme& s);

// Orbits of the face set under the fold moves of order-2 non-collapsible
// classes: a face crossing exactly one distinct edge of such a class maps to
// the face on the other side of that edge; faces carrying zero or several
// distinct edges of the class stay fixed (the fold is ambiguous there, so no
// move is generated).  These orbits are the building blocks that the pairing
// matches up into coarse 2-cells.
ClassPartition flat_reflection_orbits(const FacePairingScheme& s);

}  // namespace faceq
