#include "faceq/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dsu.hpp"

namespace faceq {

FlagIndexer FlagIndexer::build(const BoundaryComplex& c) {
  FlagIndexer fi;
  fi.base.resize(c.faces.size());
  int acc = 0;
  for (std::size_t f = 0; f < c.faces.size(); ++f) {
    fi.base[f] = acc;
    acc += static_cast<int>(c.faces[f].size());
  }
  fi.total = acc;
  return fi;
}

std::pair<int, int> FlagIndexer::face_pos(int id) const {
  auto it = std::upper_bound(base.begin(), base.end(), id);
  int f = static_cast<int>(it - base.begin()) - 1;
  return {f, id - base[f]};
}

PairingView PairingView::build(const FacePairingScheme& s) {
  const int nf = static_cast<int>(s.complex.faces.size());
  PairingView v;
  v.peer.assign(nf, -1);
  v.offset.assign(nf, 0);
  v.reversed.assign(nf, 0);
  for (const auto& p : s.pairing) {
    if (p.a < 0 || p.a >= nf || p.b < 0 || p.b >= nf)
      throw ParseError("pairing entry references face out of range");
    if (p.a == p.b) throw ParseError("pairing entry glues a face to itself");
    if (v.peer[p.a] != -1 || v.peer[p.b] != -1)
      throw ParseError("face appears in more than one pairing entry");
    const int la = static_cast<int>(s.complex.faces[p.a].size());
    const int lb = static_cast<int>(s.complex.faces[p.b].size());
    if (la != lb) throw ParseError("paired faces have different lengths");
    v.peer[p.a] = p.b;
    v.peer[p.b] = p.a;
    int o = p.offset % la;
    if (o < 0) o += la;
    v.offset[p.a] = o;
    v.offset[p.b] = p.reversed ? o : (o == 0 ? 0 : la - o);
    v.reversed[p.a] = v.reversed[p.b] = p.reversed ? 1 : 0;
  }
  for (int f = 0; f < nf; ++f)
    if (v.peer[f] == -1) throw ParseError("face " + std::to_string(f) + " is unpaired");
  return v;
}

namespace {

ClassPartition partition_from_dsu(detail::Dsu& dsu, int n, ElementKind kind) {
  ClassPartition p;
  p.kind = kind;
  p.class_of.assign(n, -1);
  std::map<int, std::vector<int>> groups;  // keyed by representative = smallest member
  for (int i = 0; i < n; ++i) groups[dsu.find(i)].push_back(i);
  for (auto& [root, members] : groups) {
    p.class_of[root] = static_cast<int>(p.classes.size());
    for (int m : members) p.class_of[m] = static_cast<int>(p.classes.size());
    p.classes.push_back(std::move(members));
  }
  return p;
}

}  // namespace

ValidationReport validate(const FacePairingScheme& s) {
  ValidationReport rep;
  const BoundaryComplex& c = s.complex;
  auto err = [&rep](std::string code, std::string msg) {
    rep.errors.push_back({std::move(code), std::move(msg)});
  };

  const int nv = static_cast<int>(c.vertices.size());
  const int ne = static_cast<int>(c.edges.size());
  const int nf = static_cast<int>(c.faces.size());

  if (nv == 0) err("empty", "scheme has no vertices");
  if (ne == 0) err("empty", "scheme has no edges");
  if (nf == 0) err("empty", "scheme has no faces");

  for (int e = 0; e < ne; ++e)
    if (c.edges[e].first < 0 || c.edges[e].first >= nv || c.edges[e].second < 0 ||
        c.edges[e].second >= nv)
      throw ParseError("edge " + std::to_string(e) + " references vertex out of range");

  for (int f = 0; f < nf; ++f) {
    if (c.faces[f].empty()) {
      err("face-empty", "face " + std::to_string(f) + " has no sides");
      continue;
    }
    for (std::size_t i = 0; i < c.faces[f].size(); ++i) {
      Sym sy = c.faces[f][i];
      if (sy == 0 || sym_index(sy) >= ne)
        throw ParseError("face " + std::to_string(f) + " position " + std::to_string(i) +
                         " references edge out of range");
    }
    const int len = static_cast<int>(c.faces[f].size());
    for (int i = 0; i < len; ++i) {
      if (c.head(f, i) != c.tail(f, (i + 1) % len))
        err("face-walk", "face " + std::to_string(f) + " is not a closed walk at position " +
                             std::to_string(i));
    }
  }
  if (!rep.errors.empty() && rep.errors.front().code == "empty") return rep;

  // Every edge on exactly two face sides.
  std::vector<int> side_count(ne, 0);
  for (int f = 0; f < nf; ++f)
    for (Sym sy : c.faces[f]) side_count[sym_index(sy)]++;
  for (int e = 0; e < ne; ++e)
    if (side_count[e] != 2)
      err("edge-sides", "edge " + std::to_string(e) + " lies on " +
                            std::to_string(side_count[e]) + " face sides, expected 2");

  // Pairing must be a fixed-point-free involution on faces.
  if (nf % 2 != 0)
    err("pairing", "pairing has a fixed point or odd face count");
  std::vector<int> seen(nf, 0);
  bool pairing_sound = nf % 2 == 0;
  for (const auto& p : s.pairing) {
    if (p.a < 0 || p.a >= nf || p.b < 0 || p.b >= nf)
      throw ParseError("pairing entry references face out of range");
    if (p.a == p.b) {
      err("pairing", "pairing has a fixed point or odd face count");
      pairing_sound = false;
      continue;
    }
    for (int f : {p.a, p.b}) {
      if (seen[f]++) {
        err("pairing", "face " + std::to_string(f) + " appears in more than one pairing entry");
        pairing_sound = false;
      }
    }
    const int la = static_cast<int>(c.faces[p.a].size());
    const int lb = static_cast<int>(c.faces[p.b].size());
    if (la != lb) {
      err("pairing-length", "paired faces " + std::to_string(p.a) + " and " +
                                std::to_string(p.b) + " have lengths " + std::to_string(la) +
                                " and " + std::to_string(lb));
      pairing_sound = false;
    } else if (p.offset < 0 || p.offset >= la) {
      err("pairing-offset", "pair (" + std::to_string(p.a) + "," + std::to_string(p.b) +
                                ") has offset " + std::to_string(p.offset) +
                                " outside [0," + std::to_string(la) + ")");
    }
  }
  for (int f = 0; f < nf && pairing_sound; ++f)
    if (!seen[f]) {
      err("pairing", "face " + std::to_string(f) + " is unpaired");
      pairing_sound = false;
    }

  // Connectivity of the 1-skeleton.
  {
    detail::Dsu dsu(nv);
    for (const auto& e : c.edges) dsu.unite(e.first, e.second);
    std::set<int> roots;
    for (int v = 0; v < nv; ++v) roots.insert(dsu.find(v));
    if (roots.size() > 1)
      err("disconnected", "complex has " + std::to_string(roots.size()) +
                              " connected components, expected 1");
  }

  if (nv - ne + nf != 2)
    err("euler", "V - E + F = " + std::to_string(nv - ne + nf) + ", expected 2 (sphere)");

  // Warning, not an error: a face carrying several edges of one class.  Such
  // schemes are meaningful (the lens shells all do this) but some face-level
  // constructions degenerate on them, so flag it for the user.
  if (rep.errors.empty()) {
    ClassPartition ec = edge_classes(s);
    std::map<int, std::set<int>> offenders;  // class -> faces
    for (int f = 0; f < nf; ++f) {
      std::map<int, std::set<int>> per_class;  // class -> distinct edges on f
      for (Sym sy : c.faces[f]) {
        int e = sym_index(sy);
        per_class[ec.class_of[e]].insert(e);
      }
      for (auto& [cls, edges] : per_class)
        if (edges.size() > 1) offenders[cls].insert(f);
    }
    for (auto& [cls, faces] : offenders) {
      std::string who;
      for (int f : faces) who += (who.empty() ? "" : ", ") + std::to_string(f);
      rep.warnings.push_back(
          {"multi-edge-face", "class " + std::to_string(cls) +
                                  " has several edges on one face (faces " + who + ")"});
    }
  }
  return rep;
}

ClassPartition edge_classes(const FacePairingScheme& s) {
  const BoundaryComplex& c = s.complex;
  PairingView pv = PairingView::build(s);
  detail::Dsu dsu(static_cast<int>(c.edges.size()));
  for (std::size_t f = 0; f < c.faces.size(); ++f) {
    int fi = static_cast<int>(f);
    if (pv.peer[fi] < fi) continue;  // handle each pair once
    for (std::size_t i = 0; i < c.faces[f].size(); ++i) {
      int j = pv.map_pos(c, fi, static_cast<int>(i));
      dsu.unite(sym_index(c.faces[fi][i]), sym_index(c.faces[pv.peer[fi]][j]));
    }
  }
  return partition_from_dsu(dsu, static_cast<int>(c.edges.size()), ElementKind::edge);
}

ClassPartition vertex_classes(const FacePairingScheme& s) {
  const BoundaryComplex& c = s.complex;
  PairingView pv = PairingView::build(s);
  detail::Dsu dsu(static_cast<int>(c.vertices.size()));
  for (std::size_t f = 0; f < c.faces.size(); ++f) {
    int fi = static_cast<int>(f);
    if (pv.peer[fi] < fi) continue;
    int peer = pv.peer[fi];
    for (std::size_t i = 0; i < c.faces[f].size(); ++i) {
      int pos = static_cast<int>(i);
      int j = pv.map_pos(c, fi, pos);
      if (pv.reversed[fi]) {
        dsu.unite(c.tail(fi, pos), c.head(peer, j));
        dsu.unite(c.head(fi, pos), c.tail(peer, j));
      } else {
        dsu.unite(c.tail(fi, pos), c.tail(peer, j));
        dsu.unite(c.head(fi, pos), c.head(peer, j));
      }
    }
  }
  return partition_from_dsu(dsu, static_cast<int>(c.vertices.size()), ElementKind::vertex);
}

FacePairingScheme subdivide_edges(const FacePairingScheme& s) {
  const BoundaryComplex& c = s.complex;
  FacePairingScheme out;
  out.complex.vertices = c.vertices;
  const int ne = static_cast<int>(c.edges.size());
  for (int e = 0; e < ne; ++e)
    out.complex.vertices.push_back("m" + std::to_string(e));
  const int nv = static_cast<int>(c.vertices.size());
  // Edge e splits into ids 2e (first endpoint to midpoint) and 2e+1.
  for (int e = 0; e < ne; ++e) {
    out.complex.edges.emplace_back(c.edges[e].first, nv + e);
    out.complex.edges.emplace_back(nv + e, c.edges[e].second);
  }
  for (const auto& walk : c.faces) {
    std::vector<Sym> w;
    w.reserve(2 * walk.size());
    for (Sym sy : walk) {
      int e = sym_index(sy);
      if (sym_forward(sy)) {
        w.push_back(make_sym(2 * e, true));
        w.push_back(make_sym(2 * e + 1, true));
      } else {
        w.push_back(make_sym(2 * e + 1, false));
        w.push_back(make_sym(2 * e, false));
      }
    }
    out.complex.faces.push_back(std::move(w));
  }
  for (const auto& p : s.pairing) {
    PairingEntry q = p;
    q.offset = p.reversed ? 2 * p.offset + 1 : 2 * p.offset;
    out.pairing.push_back(q);
  }
  return out;
}

}  // namespace faceq
