#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "faceq/complex.hpp"

namespace faceq {

// Two hemispheres over a q-gon equator, glued with rotation p and an
// orientation-reversing correspondence.  Requires q > p >= 1 and
// gcd(q, p) = 1; the quotient has one vertex, one edge of order q, and one
// 2-cell attached along the q-th power of that edge.
FacePairingScheme gen_lens(int q, int p);

// Two n-gons sharing all n boundary edges, glued by the identity
// correspondence.  Every edge is its own class; the quotient is a disk.
FacePairingScheme gen_trivial_sphere(int n);

enum class PlatonicKind { quaternion, poincare };

// Hand-written face pairings on the cube (quarter-twist between opposite
// faces) and the dodecahedron (minimal twist between opposite faces).  The
// correspondence tables are spelled out in the source rather than derived
// from coordinates.
FacePairingScheme gen_platonic_space(PlatonicKind kind);

enum class BaseSolid { tetrahedron, cube, octahedron, dodecahedron };

// Deterministic pseudo-random pairing of the base solid's faces with random
// offsets and orientations.  The same seed always produces the identical
// scheme byte for byte.
FacePairingScheme gen_random(BaseSolid base, std::uint64_t seed);

std::optional<BaseSolid> base_solid_from_name(const std::string& name);
std::string base_solid_name(BaseSolid base);
std::optional<PlatonicKind> platonic_kind_from_name(const std::string& name);

// splitmix64: tiny deterministic generator used for all randomized choices so
// results do not depend on platform library internals.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Uniform value in [0, n) by rejection, so small moduli stay unbiased.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = ~0ull - (~0ull % n);
    std::uint64_t v;
    do v = next(); while (v >= limit);
    return v % n;
  }
};

}  // namespace faceq
