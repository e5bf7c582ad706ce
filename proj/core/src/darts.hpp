#pragma once

#include "dsu.hpp"
#include "faceq/complex.hpp"

namespace faceq::detail {

// Darts are directed edges: dart 2e runs along edge e forward, dart 2e+1
// backward.
inline int dart_of(Sym sym) {
  return 2 * sym_index(sym) + (sym_forward(sym) ? 0 : 1);
}

inline int dart_opposite(int d) { return d ^ 1; }

// Identifications induced on darts by the face gluings: a side maps to its
// partner side traversed the same way for a direct correspondence and the
// opposite way for a reversed one.  When a class ends up with some edge's two
// darts in one orbit, the gluing folds that edge onto itself.
inline Dsu dart_union(const FacePairingScheme& s, const PairingView& view) {
  Dsu dsu(2 * static_cast<int>(s.complex.edges.size()));
  for (int f = 0; f < static_cast<int>(s.complex.faces.size()); ++f) {
    if (view.peer[f] < f) continue;  // handle each pair once
    const int k = view.peer[f];
    const int len = static_cast<int>(s.complex.faces[f].size());
    for (int i = 0; i < len; ++i) {
      int a = dart_of(s.complex.faces[f][i]);
      int b = dart_of(s.complex.faces[k][view.map_pos(s.complex, f, i)]);
      // A side gluing identifies the two edges as oriented arcs, so it pins
      // down both direction pairs at once.
      int target = view.reversed[f] ? dart_opposite(b) : b;
      dsu.unite(a, target);
      dsu.unite(dart_opposite(a), dart_opposite(target));
    }
  }
  return dsu;
}

}  // namespace faceq::detail
