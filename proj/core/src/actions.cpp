#include "faceq/actions.hpp"

#include <numeric>

#include "dsu.hpp"
#include "sides.hpp"

namespace faceq {

namespace {

FlagIndexer indexer_for(const BoundaryComplex& c) {
  return FlagIndexer::build(c);
}

}  // namespace

SidePermutation pairing_involution(const FacePairingScheme& s) {
  FlagIndexer fi = indexer_for(s.complex);
  PairingView view = PairingView::build(s);
  SidePermutation perm(fi.total);
  for (int f = 0; f < static_cast<int>(s.complex.faces.size()); ++f) {
    const int len = static_cast<int>(s.complex.faces[f].size());
    for (int i = 0; i < len; ++i)
      perm[fi.id(f, i)] = fi.id(view.peer[f], view.map_pos(s.complex, f, i));
  }
  return perm;
}

SidePermutation class_reflection(const FacePairingScheme& s,
                                 const ClassPartition& edge_cls, int class_id) {
  if (class_id < 0 || class_id >= static_cast<int>(edge_cls.classes.size()))
    throw ParseError("unknown edge class id " + std::to_string(class_id));
  FlagIndexer fi = indexer_for(s.complex);
  SidePermutation perm(fi.total);
  std::iota(perm.begin(), perm.end(), 0);
  auto sides = detail::sides_per_edge(s.complex, fi);
  for (int e : edge_cls.classes[class_id]) {
    perm[sides[e][0]] = sides[e][1];
    perm[sides[e][1]] = sides[e][0];
  }
  return perm;
}

SidePermutation full_reflection(const FacePairingScheme& s) {
  FlagIndexer fi = indexer_for(s.complex);
  SidePermutation perm(fi.total);
  auto sides = detail::sides_per_edge(s.complex, fi);
  for (const auto& pair : sides) {
    perm[pair[0]] = pair[1];
    perm[pair[1]] = pair[0];
  }
  return perm;
}

namespace {

// Shared implementation: orders and collapsibility read off the composite
// pairing(reflection(side)) restricted to one class's sides.
struct ActionContext {
  FlagIndexer fi;
  SidePermutation pairing;
  SidePermutation reflection;

  explicit ActionContext(const FacePairingScheme& s)
      : fi(indexer_for(s.complex)),
        pairing(pairing_involution(s)),
        reflection(full_reflection(s)) {}
};

std::vector<int> class_sides(const FacePairingScheme& s, const FlagIndexer& fi,
                             const std::vector<int>& members) {
  auto sides = detail::sides_per_edge(s.complex, fi);
  std::vector<int> out;
  for (int e : members) {
    out.push_back(sides[e][0]);
    out.push_back(sides[e][1]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long order_of(const ActionContext& ctx, const FacePairingScheme& s,
                   const std::vector<int>& members) {
  std::vector<int> sides = class_sides(s, ctx.fi, members);
  std::vector<bool> seen(ctx.fi.total, false);
  long long order = 1;
  for (int start : sides) {
    if (seen[start]) continue;
    long long len = 0;
    int x = start;
    do {
      seen[x] = true;
      ++len;
      x = ctx.pairing[ctx.reflection[x]];
      if (!seen[x] && len > ctx.fi.total)
        throw InvariantError("side action cycle exceeded the side count");
    } while (x != start);
    order = std::lcm(order, len);
  }
  return order;
}

bool collapsible_of(const ActionContext& ctx, const FacePairingScheme& s,
                    const std::vector<int>& members) {
  for (int x : class_sides(s, ctx.fi, members))
    if (ctx.pairing[x] == ctx.reflection[x]) return true;
  return false;
}

}  // namespace

long long edge_order(const FacePairingScheme& s, const ClassPartition& edge_cls,
                     int class_id) {
  if (class_id < 0 || class_id >= static_cast<int>(edge_cls.classes.size()))
    throw ParseError("unknown edge class id " + std::to_string(class_id));
  ActionContext ctx(s);
  return order_of(ctx, s, edge_cls.classes[class_id]);
}

bool is_collapsible_class(const FacePairingScheme& s,
                          const ClassPartition& edge_cls, int class_id) {
  if (class_id < 0 || class_id >= static_cast<int>(edge_cls.classes.size()))
    throw ParseError("unknown edge class id " + std::to_string(class_id));
  ActionContext ctx(s);
  return collapsible_of(ctx, s, edge_cls.classes[class_id]);
}

ActionAnalysis analyze_actions(const FacePairingScheme& s) {
  ActionAnalysis out;
  out.edge_cls = edge_classes(s);
  ActionContext ctx(s);
  for (int c = 0; c < static_cast<int>(out.edge_cls.classes.size()); ++c) {
    EdgeClassInfo info;
    info.id = c;
    info.members = out.edge_cls.classes[c];
    info.order = order_of(ctx, s, info.members);
    info.collapsible = collapsible_of(ctx, s, info.members);
    info.flat = info.order <= 2;
    out.degree = std::max(out.degree, info.order);
    out.classes.push_back(std::move(info));
  }
  out.flat = out.degree <= 2;
  return out;
}

long long scheme_degree(const FacePairingScheme& s) {
  return analyze_actions(s).degree;
}

bool is_flat(const FacePairingScheme& s) { return analyze_actions(s).flat; }

ClassPartition flat_reflection_orbits(const FacePairingScheme& s) {
  ActionAnalysis a = analyze_actions(s);
  PairingView view = PairingView::build(s);
  const int nfaces = static_cast<int>(s.complex.faces.size());
  detail::Dsu dsu(nfaces);
  for (const EdgeClassInfo& info : a.classes) {
    if (info.order != 2 || info.collapsible) continue;
    std::vector<bool> in_class(s.complex.edges.size(), false);
    for (int e : info.members) in_class[e] = true;
    for (int f = 0; f < nfaces; ++f) {
      int distinct = 0, the_edge = -1;
      for (Sym sym : s.complex.faces[f]) {
        int e = sym_index(sym);
        if (in_class[e] && e != the_edge) {
          ++distinct;
          the_edge = e;
        }
      }
      if (distinct != 1) continue;  // no unambiguous fold from this face
      int other = -1;
      for (int g = 0; g < nfaces; ++g) {
        if (g == f) continue;
        for (Sym sym : s.complex.faces[g])
          if (sym_index(sym) == the_edge) other = g;
      }
      // A face whose walk uses the edge twice folds onto itself: no move.
      if (other >= 0) dsu.unite(f, other);
    }
  }
  std::vector<int> roots(nfaces);
  for (int f = 0; f < nfaces; ++f) roots[f] = dsu.find(f);
  ClassPartition part;
  part.kind = ElementKind::face;
  std::vector<int> index_of_root(nfaces, -1);
  for (int f = 0; f < nfaces; ++f) {
    if (index_of_root[roots[f]] < 0) {
      index_of_root[roots[f]] = static_cast<int>(part.classes.size());
      part.classes.emplace_back();
    }
    part.classes[index_of_root[roots[f]]].push_back(f);
  }
  part.class_of.resize(nfaces);
  for (int f = 0; f < nfaces; ++f) part.class_of[f] = index_of_root[roots[f]];
  return part;
}

}  // namespace faceq
