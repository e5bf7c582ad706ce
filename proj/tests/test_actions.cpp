#include <doctest.h>

#include <vector>

#include "faceq/actions.hpp"
#include "faceq/complex.hpp"
#include "faceq/gallery.hpp"
#include "faceq/manifold.hpp"
#include "test_util.hpp"

using namespace faceq;

namespace {

// The canonical (non-random) gallery members for frozen-value checks.
std::vector<std::pair<std::string, FacePairingScheme>> canonical_schemes() {
  std::vector<std::pair<std::string, FacePairingScheme>> out;
  for (const auto& [name, s] : testutil::gallery_schemes())
    if (name.rfind("random(", 0) != 0) out.emplace_back(name, s);
  return out;
}

// Edge underlying a given flat side id.
int edge_of_flag(const BoundaryComplex& c, const FlagIndexer& fi, int id) {
  auto [f, pos] = fi.face_pos(id);
  return sym_index(c.faces[f][pos]);
}

FacePairingScheme relabel_edges_reversed(FacePairingScheme s) {
  const int ne = static_cast<int>(s.complex.edges.size());
  std::vector<std::pair<int, int>> edges(ne);
  for (int e = 0; e < ne; ++e) edges[ne - 1 - e] = s.complex.edges[e];
  s.complex.edges = std::move(edges);
  for (auto& f : s.complex.faces)
    for (auto& sym : f)
      sym = make_sym(ne - 1 - sym_index(sym), sym_forward(sym));
  return s;
}

}  // namespace

TEST_CASE("pairing and reflections are involutions on face sides") {
  for (const auto& [name, s] : testutil::gallery_schemes()) {
    CAPTURE(name);
    const FlagIndexer fi = FlagIndexer::build(s.complex);
    const SidePermutation p0 = pairing_involution(s);
    const SidePermutation refl = full_reflection(s);
    REQUIRE(static_cast<int>(p0.size()) == fi.total);
    for (int i = 0; i < fi.total; ++i) {
      CHECK(p0[p0[i]] == i);
      CHECK(p0[i] != i);  // no face is glued to itself
      CHECK(refl[refl[i]] == i);
      CHECK(refl[i] != i);  // every edge has two distinct sides
    }
  }
}

TEST_CASE("a class reflection moves exactly its own class's sides") {
  for (const auto& [name, s] : canonical_schemes()) {
    CAPTURE(name);
    const FlagIndexer fi = FlagIndexer::build(s.complex);
    const ClassPartition ec = edge_classes(s);
    for (int c = 0; c < static_cast<int>(ec.classes.size()); ++c) {
      const SidePermutation refl = class_reflection(s, ec, c);
      for (int i = 0; i < fi.total; ++i) {
        const bool in_class =
            ec.class_of[edge_of_flag(s.complex, fi, i)] == c;
        CHECK((refl[i] != i) == in_class);
        if (in_class)
          CHECK(edge_of_flag(s.complex, fi, refl[i]) ==
                edge_of_flag(s.complex, fi, i));
      }
    }
  }
}

TEST_CASE("pairing-then-reflection stays inside each class's side set") {
  for (const auto& [name, s] : canonical_schemes()) {
    CAPTURE(name);
    const FlagIndexer fi = FlagIndexer::build(s.complex);
    const ClassPartition ec = edge_classes(s);
    const SidePermutation p0 = pairing_involution(s);
    for (int c = 0; c < static_cast<int>(ec.classes.size()); ++c) {
      const SidePermutation refl = class_reflection(s, ec, c);
      for (int i = 0; i < fi.total; ++i) {
        if (ec.class_of[edge_of_flag(s.complex, fi, i)] != c) continue;
        const int image = refl[p0[i]];
        CHECK(ec.class_of[edge_of_flag(s.complex, fi, image)] == c);
      }
    }
  }
}

TEST_CASE("edge orders reproduce the frozen family values") {
  for (int q : {3, 5, 7}) {
    CAPTURE(q);
    FacePairingScheme s = gen_lens(q, q == 3 ? 1 : 2);
    ClassPartition ec = edge_classes(s);
    REQUIRE(ec.classes.size() == 1);
    CHECK(edge_order(s, ec, 0) == q);
  }
  {
    FacePairingScheme s = gen_lens(2, 1);
    CHECK(edge_order(s, edge_classes(s), 0) == 2);
  }
  {
    FacePairingScheme s = gen_trivial_sphere(3);
    ClassPartition ec = edge_classes(s);
    REQUIRE(ec.classes.size() == 3);
    for (int c = 0; c < 3; ++c) CHECK(edge_order(s, ec, c) == 1);
  }
  for (PlatonicKind kind : {PlatonicKind::quaternion, PlatonicKind::poincare}) {
    FacePairingScheme s = gen_platonic_space(kind);
    ClassPartition ec = edge_classes(s);
    for (int c = 0; c < static_cast<int>(ec.classes.size()); ++c)
      CHECK(edge_order(s, ec, c) == 3);
  }
}

TEST_CASE("degree and flatness") {
  CHECK(scheme_degree(gen_lens(7, 3)) == 7);
  CHECK(scheme_degree(gen_platonic_space(PlatonicKind::quaternion)) == 3);
  for (int n = 1; n <= 4; ++n) CHECK(scheme_degree(gen_trivial_sphere(n)) == 1);

  CHECK(is_flat(gen_lens(2, 1)));
  CHECK_FALSE(is_flat(gen_lens(5, 2)));
  CHECK(is_flat(gen_trivial_sphere(3)));
}

TEST_CASE("collapsibility detection") {
  {
    FacePairingScheme s = gen_trivial_sphere(3);
    ClassPartition ec = edge_classes(s);
    for (int c = 0; c < 3; ++c) CHECK(is_collapsible_class(s, ec, c));
  }
  {
    FacePairingScheme s = gen_lens(5, 2);
    CHECK_FALSE(is_collapsible_class(s, edge_classes(s), 0));
  }
  {
    FacePairingScheme s = gen_lens(2, 1);
    CHECK_FALSE(is_collapsible_class(s, edge_classes(s), 0));
  }
  {
    FacePairingScheme s = gen_platonic_space(PlatonicKind::poincare);
    ClassPartition ec = edge_classes(s);
    for (int c = 0; c < static_cast<int>(ec.classes.size()); ++c)
      CHECK_FALSE(is_collapsible_class(s, ec, c));
  }
}

TEST_CASE("on manifold schemes the order equals the class size") {
  for (const auto& [name, s] : canonical_schemes()) {
    CAPTURE(name);
    if (!verify_manifold(s).is_manifold) continue;
    for (const EdgeClassInfo& c : analyze_actions(s).classes)
      CHECK(c.order == static_cast<long long>(c.members.size()));
  }
}

TEST_CASE("order two occurs exactly at size-two non-collapsible classes") {
  for (const auto& [name, s] : canonical_schemes()) {
    CAPTURE(name);
    for (const EdgeClassInfo& c : analyze_actions(s).classes)
      CHECK((c.order == 2) == (c.members.size() == 2 && !c.collapsible));
  }
}

TEST_CASE("degree is invariant under edge relabeling") {
  for (const char* which : {"lens", "quaternion", "poincare"}) {
    FacePairingScheme s =
        which == std::string("lens")
            ? gen_lens(7, 3)
            : gen_platonic_space(which == std::string("quaternion")
                                     ? PlatonicKind::quaternion
                                     : PlatonicKind::poincare);
    CAPTURE(which);
    CHECK(scheme_degree(relabel_edges_reversed(s)) == scheme_degree(s));
  }
}

TEST_CASE("fold orbits of the frozen examples are singletons") {
  for (const auto& [name, s] :
       {std::pair<std::string, FacePairingScheme>{"lens(5,2)", gen_lens(5, 2)},
        {"lens(2,1)", gen_lens(2, 1)},
        {"trivial_sphere(3)", gen_trivial_sphere(3)}}) {
    CAPTURE(name);
    ClassPartition orbits = flat_reflection_orbits(s);
    REQUIRE(orbits.classes.size() == 2);
    CHECK(orbits.classes[0] == std::vector<int>{0});
    CHECK(orbits.classes[1] == std::vector<int>{1});
  }
}

TEST_CASE("fold orbits always partition the face set") {
  for (const auto& [name, s] : testutil::gallery_schemes()) {
    CAPTURE(name);
    ClassPartition orbits = flat_reflection_orbits(s);
    std::vector<int> seen(s.complex.faces.size(), 0);
    for (const auto& orbit : orbits.classes)
      for (int f : orbit) ++seen[f];
    for (int f = 0; f < static_cast<int>(seen.size()); ++f) {
      CAPTURE(f);
      CHECK(seen[f] == 1);
    }
  }
}
