#include "faceq/gallery.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "nlohmann/json.hpp"

namespace faceq {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string meta_text(const ordered_json& j) { return j.dump(); }

// q vertices and q edges around an equator: edge i runs from vertex i to
// vertex (i + 1) mod q.  The upper face walks the equator forward, the lower
// face walks it backward.
BoundaryComplex bilune(int q) {
  BoundaryComplex c;
  for (int i = 0; i < q; ++i) c.vertices.push_back("v" + std::to_string(i));
  for (int i = 0; i < q; ++i) c.edges.emplace_back(i, (i + 1) % q);
  std::vector<Sym> upper, lower;
  for (int i = 0; i < q; ++i) upper.push_back(make_sym(i, true));
  for (int i = q - 1; i >= 0; --i) lower.push_back(make_sym(i, false));
  c.faces.push_back(std::move(upper));
  c.faces.push_back(std::move(lower));
  return c;
}

// True when the correspondence (a -> b, offset, reversed) glues some side of
// face a onto the other side of the same underlying edge.  Such a gluing
// folds the pair flat across their shared edge, so the glued pair collapses
// on sight and the scheme merely re-presents a smaller one.
bool folds_on_shared_edge(const BoundaryComplex& c, int a, int b, int offset,
                          bool reversed) {
  const int len = static_cast<int>(c.faces[a].size());
  for (int i = 0; i < len; ++i) {
    int j = reversed ? (offset - i) % len : (i + offset) % len;
    if (j < 0) j += len;
    if (sym_index(c.faces[a][i]) == sym_index(c.faces[b][j])) return true;
  }
  return false;
}

}  // namespace

FacePairingScheme gen_lens(int q, int p) {
  if (q < 2 || p < 1 || p >= q)
    throw ParseError("lens parameters require q > p >= 1 (got q=" +
                     std::to_string(q) + ", p=" + std::to_string(p) + ")");
  if (std::gcd(q, p) != 1)
    throw ParseError("lens parameters must be coprime (got q=" +
                     std::to_string(q) + ", p=" + std::to_string(p) + ")");
  FacePairingScheme s;
  s.complex = bilune(q);
  // Matching up the two walks around the shared equator with a twist of p
  // steps gives, in side coordinates, a reversed correspondence with offset
  // q - 1 - p (mod q).
  PairingEntry e;
  e.a = 0;
  e.b = 1;
  e.offset = ((q - 1 - p) % q + q) % q;
  e.reversed = true;
  s.pairing.push_back(e);
  ordered_json meta;
  meta["generator"] = "lens";
  meta["q"] = q;
  meta["p"] = p;
  s.meta_json = meta_text(meta);
  return s;
}

FacePairingScheme gen_trivial_sphere(int n) {
  if (n < 1)
    throw ParseError("trivial sphere requires n >= 1 (got n=" +
                     std::to_string(n) + ")");
  FacePairingScheme s;
  BoundaryComplex c;
  for (int i = 0; i < n; ++i) c.vertices.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) c.edges.emplace_back(i, (i + 1) % n);
  std::vector<Sym> walk;
  for (int i = 0; i < n; ++i) walk.push_back(make_sym(i, true));
  c.faces.push_back(walk);
  c.faces.push_back(walk);
  s.complex = std::move(c);
  PairingEntry e;
  e.a = 0;
  e.b = 1;
  e.offset = 0;
  e.reversed = false;
  s.pairing.push_back(e);
  ordered_json meta;
  meta["generator"] = "trivial-sphere";
  meta["n"] = n;
  s.meta_json = meta_text(meta);
  return s;
}

namespace {

// Cube with vertices numbered by binary coordinates (bit 0 = x, bit 1 = y,
// bit 2 = z) and edges listed lexicographically by endpoint pair.
BoundaryComplex cube_complex() {
  BoundaryComplex c;
  for (int i = 0; i < 8; ++i) c.vertices.push_back("v" + std::to_string(i));
  c.edges = {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3},
             {2, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}};
  // Opposite faces are adjacent in this list: (0,1) bottom/top, (2,3)
  // front/back, (4,5) left/right.  Each walk is oriented as seen from
  // outside the cube.
  c.faces = {
      {+2, +6, -4, -1},    // z = 0:  0 -> 2 -> 3 -> 1 -> 0
      {+9, +11, -12, -10}, // z = 1:  4 -> 5 -> 7 -> 6 -> 4
      {+1, +5, -9, -3},    // y = 0:  0 -> 1 -> 5 -> 4 -> 0
      {+7, +12, -8, -6},   // y = 1:  2 -> 6 -> 7 -> 3 -> 2
      {+3, +10, -7, -2},   // x = 0:  0 -> 4 -> 6 -> 2 -> 0
      {+4, +8, -11, -5},   // x = 1:  1 -> 3 -> 7 -> 5 -> 1
  };
  return c;
}

// Regular tetrahedron on vertices 0..3.
BoundaryComplex tetrahedron_complex() {
  BoundaryComplex c;
  for (int i = 0; i < 4; ++i) c.vertices.push_back("v" + std::to_string(i));
  c.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  c.faces = {
      {+1, +4, -2},  // 0 -> 1 -> 2 -> 0
      {+3, -5, -1},  // 0 -> 3 -> 1 -> 0
      {+5, -6, -4},  // 1 -> 3 -> 2 -> 1
      {+2, +6, -3},  // 0 -> 2 -> 3 -> 0
  };
  return c;
}

// Regular octahedron: vertex 0 at the north pole, 1..4 around the equator,
// 5 at the south pole.
BoundaryComplex octahedron_complex() {
  BoundaryComplex c;
  for (int i = 0; i < 6; ++i) c.vertices.push_back("v" + std::to_string(i));
  c.edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3},
             {3, 4}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}};
  c.faces = {
      {+1, +5, -2},    // 0 -> 1 -> 2 -> 0
      {+2, +6, -3},    // 0 -> 2 -> 3 -> 0
      {+3, +7, -4},    // 0 -> 3 -> 4 -> 0
      {+4, -8, -1},    // 0 -> 4 -> 1 -> 0
      {-10, -5, +9},   // 5 -> 2 -> 1 -> 5
      {-11, -6, +10},  // 5 -> 3 -> 2 -> 5
      {-12, -7, +11},  // 5 -> 4 -> 3 -> 5
      {-9, +8, +12},   // 5 -> 1 -> 4 -> 5
  };
  return c;
}

// Regular dodecahedron organized in four rings of five vertices: a ring
// (top face), b ring below it, c ring below that, d ring (bottom face).
// Edge ids: 0..4 around the top, 5..9 vertical a->b, 10..14 slanted b->c,
// 15..19 slanted b->c one step over, 20..24 vertical c->d, 25..29 around
// the bottom.
BoundaryComplex dodecahedron_complex() {
  BoundaryComplex c;
  const char* ring = "abcd";
  for (int r = 0; r < 4; ++r)
    for (int i = 0; i < 5; ++i)
      c.vertices.push_back(std::string(1, ring[r]) + std::to_string(i));
  auto a = [](int i) { return i % 5; };
  auto b = [](int i) { return 5 + i % 5; };
  auto cc = [](int i) { return 10 + i % 5; };
  auto d = [](int i) { return 15 + i % 5; };
  for (int i = 0; i < 5; ++i) c.edges.emplace_back(a(i), a(i + 1));
  for (int i = 0; i < 5; ++i) c.edges.emplace_back(a(i), b(i));
  for (int i = 0; i < 5; ++i) c.edges.emplace_back(b(i), cc(i));
  for (int i = 0; i < 5; ++i) c.edges.emplace_back(b(i + 1), cc(i));
  for (int i = 0; i < 5; ++i) c.edges.emplace_back(cc(i), d(i));
  for (int i = 0; i < 5; ++i) c.edges.emplace_back(d(i), d(i + 1));
  auto sym = [](int edge, bool fwd) { return make_sym(edge, fwd); };
  // Face 0: top pentagon a0 a1 a2 a3 a4.
  c.faces.push_back({sym(0, true), sym(1, true), sym(2, true), sym(3, true),
                     sym(4, true)});
  // Faces 1..5: upper ring, face 1+i touches top edge i.
  for (int i = 0; i < 5; ++i)
    c.faces.push_back({sym(i, false), sym(5 + i, true), sym(10 + i, true),
                       sym(15 + i, false), sym(5 + (i + 1) % 5, false)});
  // Faces 6..10: lower ring, face 6+j touches bottom edge j.
  for (int j = 0; j < 5; ++j)
    c.faces.push_back({sym(25 + j, true), sym(20 + (j + 1) % 5, false),
                       sym(10 + (j + 1) % 5, false), sym(15 + j, true),
                       sym(20 + j, true)});
  // Face 11: bottom pentagon d4 d3 d2 d1 d0 (oriented from outside).
  c.faces.push_back({sym(29, false), sym(28, false), sym(27, false),
                     sym(26, false), sym(25, false)});
  return c;
}

BoundaryComplex base_solid_complex(BaseSolid base) {
  switch (base) {
    case BaseSolid::tetrahedron: return tetrahedron_complex();
    case BaseSolid::cube: return cube_complex();
    case BaseSolid::octahedron: return octahedron_complex();
    case BaseSolid::dodecahedron: return dodecahedron_complex();
  }
  throw InvariantError("unknown base solid");
}

}  // namespace

FacePairingScheme gen_platonic_space(PlatonicKind kind) {
  FacePairingScheme s;
  ordered_json meta;
  meta["generator"] = "platonic";
  if (kind == PlatonicKind::quaternion) {
    s.complex = cube_complex();
    // Each face is glued to the opposite face with a quarter turn.  In side
    // coordinates all three gluings come out as reversed with offset 0.
    for (int k = 0; k < 3; ++k) {
      PairingEntry e;
      e.a = 2 * k;
      e.b = 2 * k + 1;
      e.offset = 0;
      e.reversed = true;
      s.pairing.push_back(e);
    }
    meta["kind"] = "quaternion";
  } else {
    s.complex = dodecahedron_complex();
    // Opposite faces glued with a minimal (one-tenth) twist: top to bottom
    // with offset 0, and each upper-ring face to the lower-ring face two
    // steps around with offset 3.  All correspondences are reversed since
    // both walks are oriented from outside.
    PairingEntry tb;
    tb.a = 0;
    tb.b = 11;
    tb.offset = 0;
    tb.reversed = true;
    s.pairing.push_back(tb);
    for (int i = 0; i < 5; ++i) {
      PairingEntry e;
      e.a = 1 + i;
      e.b = 6 + (i + 2) % 5;
      e.offset = 3;
      e.reversed = true;
      s.pairing.push_back(e);
    }
    meta["kind"] = "poincare";
  }
  s.meta_json = meta_text(meta);
  return s;
}

FacePairingScheme gen_random(BaseSolid base, std::uint64_t seed) {
  FacePairingScheme s;
  s.complex = base_solid_complex(base);
  const int nfaces = static_cast<int>(s.complex.faces.size());
  if (nfaces % 2 != 0)
    throw ParseError("random pairing needs an even number of faces");
  SplitMix64 rng(seed);
  std::vector<int> order(nfaces);
  std::iota(order.begin(), order.end(), 0);
  for (int i = nfaces - 1; i > 0; --i) {
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(order[i], order[j]);
  }
  for (int k = 0; k < nfaces; k += 2) {
    int a = order[k], b = order[k + 1];
    const int len = static_cast<int>(s.complex.faces[a].size());
    int offset = 0;
    bool reversed = false;
    // Re-draw correspondences that would fold the pair flat across a shared
    // edge; sampled schemes stay in general position.  Any two faces share
    // fewer edges than they have sides, so an acceptable draw always exists.
    for (int tries = 0;; ++tries) {
      offset = static_cast<int>(rng.below(static_cast<std::uint64_t>(len)));
      reversed = (rng.next() & 1) != 0;
      if (!folds_on_shared_edge(s.complex, a, b, offset, reversed)) break;
      if (tries > 4096)
        throw InvariantError("random pairing cannot avoid a degenerate fold");
    }
    if (a > b) {
      // Store with the smaller face first; invert the correspondence when
      // the random draw produced it the other way around.
      std::swap(a, b);
      if (!reversed) offset = (len - offset) % len;
    }
    PairingEntry e;
    e.a = a;
    e.b = b;
    e.offset = offset;
    e.reversed = reversed;
    s.pairing.push_back(e);
  }
  std::sort(s.pairing.begin(), s.pairing.end(),
            [](const PairingEntry& x, const PairingEntry& y) {
              return x.a < y.a;
            });
  ordered_json meta;
  meta["generator"] = "random";
  meta["base"] = base_solid_name(base);
  meta["seed"] = seed;
  s.meta_json = meta_text(meta);
  return s;
}

std::optional<BaseSolid> base_solid_from_name(const std::string& name) {
  if (name == "tetrahedron") return BaseSolid::tetrahedron;
  if (name == "cube") return BaseSolid::cube;
  if (name == "octahedron") return BaseSolid::octahedron;
  if (name == "dodecahedron") return BaseSolid::dodecahedron;
  return std::nullopt;
}

std::string base_solid_name(BaseSolid base) {
  switch (base) {
    case BaseSolid::tetrahedron: return "tetrahedron";
    case BaseSolid::cube: return "cube";
    case BaseSolid::octahedron: return "octahedron";
    case BaseSolid::dodecahedron: return "dodecahedron";
  }
  return "?";
}

std::optional<PlatonicKind> platonic_kind_from_name(const std::string& name) {
  if (name == "quaternion") return PlatonicKind::quaternion;
  if (name == "poincare") return PlatonicKind::poincare;
  return std::nullopt;
}

}  // namespace faceq
