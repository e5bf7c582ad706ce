#pragma once

// Shared test helpers.  The oracles here are deliberately written from
// scratch (plain containers, no library internals) so that production code
// and test code cannot share a bug.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "faceq/complex.hpp"
#include "faceq/gallery.hpp"

namespace testutil {

// First octahedron seed whose identification space fails the manifold check;
// frozen so the suite always exercises a genuine failure witness.  Its report
// includes a vertex link that is not a sphere (Euler characteristic != 2).
inline constexpr std::uint64_t kPinnedNonManifoldOctahedronSeed = 1;

// Minimal union-find, independent of the library's version.
struct NaiveDsu {
  std::vector<int> parent;
  explicit NaiveDsu(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
  // Classes sorted by smallest member, members ascending.
  std::vector<std::vector<int>> classes() {
    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
      by_root[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : by_root) out.push_back(members);
    return out;
  }
};

// Position map of one pairing entry, recomputed from first principles.
inline int corr_pos(const faceq::PairingEntry& p, int len, int i) {
  int j = p.reversed ? (p.offset - i) % len : (i + p.offset) % len;
  return j < 0 ? j + len : j;
}

// Edge identification classes derived directly from the pairing entries.
inline std::vector<std::vector<int>> oracle_edge_classes(
    const faceq::FacePairingScheme& s) {
  NaiveDsu dsu(static_cast<int>(s.complex.edges.size()));
  for (const faceq::PairingEntry& p : s.pairing) {
    const auto& fa = s.complex.faces[p.a];
    const auto& fb = s.complex.faces[p.b];
    const int len = static_cast<int>(fa.size());
    for (int i = 0; i < len; ++i)
      dsu.unite(faceq::sym_index(fa[i]),
                faceq::sym_index(fb[corr_pos(p, len, i)]));
  }
  return dsu.classes();
}

// Vertex identification classes derived directly from endpoint matching:
// with the same walk direction, tails glue to tails and heads to heads;
// against the walk direction, they cross over.
inline std::vector<std::vector<int>> oracle_vertex_classes(
    const faceq::FacePairingScheme& s) {
  NaiveDsu dsu(static_cast<int>(s.complex.vertices.size()));
  for (const faceq::PairingEntry& p : s.pairing) {
    const int len = static_cast<int>(s.complex.faces[p.a].size());
    for (int i = 0; i < len; ++i) {
      const int j = corr_pos(p, len, i);
      if (p.reversed) {
        dsu.unite(s.complex.tail(p.a, i), s.complex.head(p.b, j));
        dsu.unite(s.complex.head(p.a, i), s.complex.tail(p.b, j));
      } else {
        dsu.unite(s.complex.tail(p.a, i), s.complex.tail(p.b, j));
        dsu.unite(s.complex.head(p.a, i), s.complex.head(p.b, j));
      }
    }
  }
  return dsu.classes();
}

// The full gallery at unit-test scale: the lens sweep, small trivial
// spheres, both platonic spaces, and a few random schemes per base.
inline std::vector<std::pair<std::string, faceq::FacePairingScheme>>
gallery_schemes() {
  std::vector<std::pair<std::string, faceq::FacePairingScheme>> out;
  for (int q = 2; q <= 12; ++q)
    for (int p = 1; p < q; ++p)
      if (std::gcd(q, p) == 1)
        out.emplace_back("lens(" + std::to_string(q) + "," +
                             std::to_string(p) + ")",
                         faceq::gen_lens(q, p));
  for (int n = 1; n <= 6; ++n)
    out.emplace_back("trivial_sphere(" + std::to_string(n) + ")",
                     faceq::gen_trivial_sphere(n));
  out.emplace_back("quaternion",
                   faceq::gen_platonic_space(faceq::PlatonicKind::quaternion));
  out.emplace_back("poincare",
                   faceq::gen_platonic_space(faceq::PlatonicKind::poincare));
  for (faceq::BaseSolid base :
       {faceq::BaseSolid::tetrahedron, faceq::BaseSolid::cube,
        faceq::BaseSolid::octahedron, faceq::BaseSolid::dodecahedron})
    for (std::uint64_t seed = 0; seed < 3; ++seed)
      out.emplace_back("random(" + faceq::base_solid_name(base) + "," +
                           std::to_string(seed) + ")",
                       faceq::gen_random(base, seed));
  return out;
}

}  // namespace testutil
