#include "faceq/quotient.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "darts.hpp"
#include "dsu.hpp"
#include "faceq/io.hpp"

namespace faceq {

namespace {

int quotient_tail(const QuotientComplex& q, Sym sym) {
  const QuotientEdge& e = q.edges[sym_index(sym)];
  return sym_forward(sym) ? e.u : e.v;
}

int quotient_head(const QuotientComplex& q, Sym sym) {
  const QuotientEdge& e = q.edges[sym_index(sym)];
  return sym_forward(sym) ? e.v : e.u;
}

void check_cell(const QuotientComplex& q, const QuotientCell& cell) {
  if (cell.basepoint < 0 ||
      cell.basepoint >= static_cast<int>(q.vertices.size()))
    throw InvariantError("cell " + std::to_string(cell.id) +
                         " basepoint out of range");
  const int n = static_cast<int>(cell.word.size());
  for (int i = 0; i < n; ++i) {
    int e = sym_index(cell.word[i]);
    if (e < 0 || e >= static_cast<int>(q.edges.size()))
      throw InvariantError("cell " + std::to_string(cell.id) +
                           " references a missing edge");
    if (quotient_head(q, cell.word[i]) !=
        quotient_tail(q, cell.word[(i + 1) % n]))
      throw InvariantError("cell " + std::to_string(cell.id) +
                           " attaching word is not a closed walk");
  }
  if (n > 0 && quotient_tail(q, cell.word[0]) != cell.basepoint)
    throw InvariantError("cell " + std::to_string(cell.id) +
                         " basepoint disagrees with its attaching word");
}

void check_complex(const QuotientComplex& q) {
  for (const QuotientCell& cell : q.cells) check_cell(q, cell);
}

}  // namespace

std::uint64_t quotient_hash(const QuotientComplex& q) {
  std::ostringstream blob;
  blob << "quotient/v1\n" << q.scheme_hash << '\n';
  blob << q.vertices.size() << ' ' << q.edges.size() << ' ' << q.cells.size()
       << '\n';
  for (const QuotientVertex& v : q.vertices) {
    blob << 'v' << v.id << ':';
    for (int m : v.members) blob << ' ' << m;
    blob << '\n';
  }
  for (const QuotientEdge& e : q.edges)
    blob << 'e' << e.id << ':' << e.u << ',' << e.v << ',' << e.scheme_class
         << ',' << e.order << ',' << e.flat << ',' << e.flipped << '\n';
  for (const QuotientCell& c : q.cells) {
    blob << 'c' << c.id << ':' << c.basepoint << ',' << c.face_a << ','
         << c.face_b << ':';
    for (Sym sym : c.word) blob << ' ' << sym;
    blob << '\n';
  }
  return fnv1a(blob.str());
}

QuotientComplex build_quotient(const FacePairingScheme& s) {
  ValidationReport vr = validate(s);
  if (!vr.valid())
    throw ParseError("cannot build the quotient of an invalid scheme: " +
                     vr.errors.front().message);
  ActionAnalysis a = analyze_actions(s);
  ClassPartition vcls = vertex_classes(s);
  PairingView view = PairingView::build(s);
  detail::Dsu darts = detail::dart_union(s, view);

  QuotientComplex q;
  q.scheme_hash = scheme_hash(s);
  for (int i = 0; i < static_cast<int>(vcls.classes.size()); ++i) {
    QuotientVertex v;
    v.id = i;
    v.members = vcls.classes[i];
    q.vertices.push_back(std::move(v));
  }
  const int ncls = static_cast<int>(a.classes.size());
  std::vector<int> plus_root(ncls);
  for (int c = 0; c < ncls; ++c) {
    const int rep = a.classes[c].members.front();
    plus_root[c] = darts.find(2 * rep);
    QuotientEdge e;
    e.id = c;
    e.scheme_class = c;
    e.order = a.classes[c].order;
    e.flat = a.classes[c].flat;
    e.flipped = darts.find(2 * rep) == darts.find(2 * rep + 1);
    e.u = vcls.class_of[s.complex.edges[rep].first];
    e.v = vcls.class_of[s.complex.edges[rep].second];
    q.edges.push_back(e);
  }
  std::size_t total_syms = 0;
  for (int f = 0; f < static_cast<int>(s.complex.faces.size()); ++f) {
    if (view.peer[f] < f) continue;
    QuotientCell cell;
    cell.id = static_cast<int>(q.cells.size());
    cell.face_a = f;
    cell.face_b = view.peer[f];
    for (Sym sym : s.complex.faces[f]) {
      const int c = a.edge_cls.class_of[sym_index(sym)];
      const bool fwd = darts.find(detail::dart_of(sym)) == plus_root[c];
      cell.word.push_back(make_sym(c, fwd));
    }
    cell.basepoint = vcls.class_of[s.complex.tail(f, 0)];
    total_syms += cell.word.size();
    q.cells.push_back(std::move(cell));
  }
  if (total_syms != s.complex.edges.size())
    throw InvariantError(
        "attaching words do not account for every edge side exactly once");
  check_complex(q);
  return q;
}

int euler_characteristic(const QuotientComplex& q) {
  return static_cast<int>(q.vertices.size()) -
         static_cast<int>(q.edges.size()) + static_cast<int>(q.cells.size());
}

NonFlatGraph gamma_graph(const QuotientComplex& q) {
  NonFlatGraph g;
  std::set<int> verts;
  for (const QuotientEdge& e : q.edges) {
    if (e.order <= 2) continue;
    GammaEdge ge;
    ge.id = e.id;
    ge.u = e.u;
    ge.v = e.v;
    ge.order = e.order;
    g.edges.push_back(ge);
    verts.insert(e.u);
    verts.insert(e.v);
  }
  g.vertices.assign(verts.begin(), verts.end());
  return g;
}

bool has_circuit(const NonFlatGraph& g) {
  if (g.edges.empty()) return false;
  std::map<int, int> idx;
  for (int v : g.vertices) idx.emplace(v, static_cast<int>(idx.size()));
  detail::Dsu dsu(static_cast<int>(g.vertices.size()));
  for (const GammaEdge& e : g.edges) dsu.unite(idx.at(e.u), idx.at(e.v));
  std::map<int, std::pair<int, int>> comp;  // root -> (vertices, edges)
  for (int v : g.vertices) comp[dsu.find(idx.at(v))].first++;
  for (const GammaEdge& e : g.edges) comp[dsu.find(idx.at(e.u))].second++;
  for (const auto& [root, counts] : comp)
    if (counts.second >= counts.first) return true;
  return false;
}

std::vector<int> spanning_forest(const QuotientComplex& q) {
  const int nv = static_cast<int>(q.vertices.size());
  std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (edge id, other)
  for (const QuotientEdge& e : q.edges) {
    if (e.u == e.v) continue;
    adj[e.u].emplace_back(e.id, e.v);
    adj[e.v].emplace_back(e.id, e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  std::vector<bool> visited(nv, false);
  std::vector<int> tree;
  for (int root = 0; root < nv; ++root) {
    if (visited[root]) continue;
    visited[root] = true;
    std::queue<int> bfs;
    bfs.push(root);
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (auto [eid, w] : adj[u]) {
        if (visited[w]) continue;
        visited[w] = true;
        tree.push_back(eid);
        bfs.push(w);
      }
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

std::vector<int> gamma_spanning_tree(const QuotientComplex& q) {
  const int nv = static_cast<int>(q.vertices.size());
  std::vector<bool> keep_vertex(nv, false);
  bool any = false;
  for (const QuotientEdge& e : q.edges) {
    if (e.order <= 2) continue;
    keep_vertex[e.u] = keep_vertex[e.v] = true;
    any = true;
  }
  if (!any) return {};
  std::vector<int> candidates;
  for (const QuotientEdge& e : q.edges)
    if (e.order > 2) candidates.push_back(e.id);
  for (const QuotientEdge& e : q.edges)
    if (e.order <= 2) candidates.push_back(e.id);
  detail::Dsu dsu(nv);
  std::set<int> tree;
  for (int eid : candidates) {
    const QuotientEdge& e = q.edges[eid];
    if (e.u != e.v && dsu.unite(e.u, e.v)) tree.insert(eid);
  }
  std::vector<int> degree(nv, 0);
  for (int eid : tree) {
    degree[q.edges[eid].u]++;
    degree[q.edges[eid].v]++;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = tree.begin(); it != tree.end();) {
      const QuotientEdge& e = q.edges[*it];
      if ((degree[e.u] == 1 && !keep_vertex[e.u]) ||
          (degree[e.v] == 1 && !keep_vertex[e.v])) {
        degree[e.u]--;
        degree[e.v]--;
        it = tree.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  return std::vector<int>(tree.begin(), tree.end());
}

namespace {

struct Rebuild {
  QuotientComplex after;
  std::vector<int> vmap, emap, cmap;
  std::vector<int> removed_vertices;
};

Rebuild rebuild(const QuotientComplex& q, detail::Dsu& vdsu,
                const std::set<int>& dead_edges,
                const std::set<int>& dead_cells) {
  const int nv = static_cast<int>(q.vertices.size());
  Rebuild r;
  r.after.scheme_hash = q.scheme_hash;
  r.vmap.assign(nv, -1);
  std::vector<int> root(nv);
  for (int v = 0; v < nv; ++v) root[v] = vdsu.find(v);
  for (int v = 0; v < nv; ++v) {
    if (root[v] != v) continue;
    r.vmap[v] = static_cast<int>(r.after.vertices.size());
    QuotientVertex nvx;
    nvx.id = r.vmap[v];
    r.after.vertices.push_back(std::move(nvx));
  }
  for (int v = 0; v < nv; ++v) {
    r.vmap[v] = r.vmap[root[v]];
    auto& members = r.after.vertices[r.vmap[v]].members;
    members.insert(members.end(), q.vertices[v].members.begin(),
                   q.vertices[v].members.end());
    if (root[v] != v) r.removed_vertices.push_back(v);
  }
  for (QuotientVertex& v : r.after.vertices)
    std::sort(v.members.begin(), v.members.end());
  r.emap.assign(q.edges.size(), -1);
  for (const QuotientEdge& e : q.edges) {
    if (dead_edges.count(e.id)) continue;
    QuotientEdge ne = e;
    ne.id = static_cast<int>(r.after.edges.size());
    ne.u = r.vmap[e.u];
    ne.v = r.vmap[e.v];
    r.emap[e.id] = ne.id;
    r.after.edges.push_back(ne);
  }
  r.cmap.assign(q.cells.size(), -1);
  for (const QuotientCell& cell : q.cells) {
    if (dead_cells.count(cell.id)) continue;
    QuotientCell nc;
    nc.id = static_cast<int>(r.after.cells.size());
    nc.face_a = cell.face_a;
    nc.face_b = cell.face_b;
    for (Sym sym : cell.word) {
      const int e = sym_index(sym);
      if (dead_edges.count(e)) continue;
      nc.word.push_back(make_sym(r.emap[e], sym_forward(sym)));
    }
    nc.basepoint = r.vmap[cell.basepoint];
    r.cmap[cell.id] = nc.id;
    r.after.cells.push_back(std::move(nc));
  }
  return r;
}

DeformationRecord make_record(const QuotientComplex& q, const Rebuild& r,
                              std::string kind,
                              const std::set<int>& dead_edges,
                              const std::set<int>& dead_cells) {
  DeformationRecord rec;
  rec.kind = std::move(kind);
  rec.removed_vertices = r.removed_vertices;
  rec.removed_edges.assign(dead_edges.begin(), dead_edges.end());
  rec.removed_cells.assign(dead_cells.begin(), dead_cells.end());
  rec.vertex_map = r.vmap;
  rec.edge_map = r.emap;
  rec.cell_map = r.cmap;
  rec.chi_before = euler_characteristic(q);
  rec.chi_after = euler_characteristic(r.after);
  rec.lineage_before = quotient_hash(q);
  rec.lineage_after = quotient_hash(r.after);
  rec.after = r.after;
  return rec;
}

std::pair<QuotientComplex, DeformationRecord> contract_impl(
    const QuotientComplex& q, const std::vector<int>& tree_edges,
    const std::string& kind) {
  std::set<int> dead(tree_edges.begin(), tree_edges.end());
  if (dead.size() != tree_edges.size())
    throw ParseError("duplicate edge id in the contraction set");
  for (int eid : dead)
    if (eid < 0 || eid >= static_cast<int>(q.edges.size()))
      throw ParseError("edge id out of range: " + std::to_string(eid));
  detail::Dsu dsu(static_cast<int>(q.vertices.size()));
  for (int eid : dead) {
    const QuotientEdge& e = q.edges[eid];
    if (e.u == e.v || !dsu.unite(e.u, e.v))
      throw ParseError("edge set is not acyclic: edge " + std::to_string(eid) +
                       " closes a cycle");
  }
  Rebuild r = rebuild(q, dsu, dead, {});
  DeformationRecord rec = make_record(q, r, kind, dead, {});
  if (rec.chi_before != rec.chi_after)
    throw InvariantError("contraction changed the Euler characteristic");
  if (q.cells.size() != rec.after.cells.size())
    throw InvariantError("contraction changed the number of 2-cells");
  check_complex(rec.after);
  return {rec.after, std::move(rec)};
}

}  // namespace

std::pair<QuotientComplex, DeformationRecord> contract_tree(
    const QuotientComplex& q, const std::vector<int>& tree_edges) {
  return contract_impl(q, tree_edges, "tree-contraction");
}

std::pair<QuotientComplex, DeformationRecord> contract_edge(
    const QuotientComplex& q, int edge_id) {
  if (edge_id < 0 || edge_id >= static_cast<int>(q.edges.size()))
    throw ParseError("edge id out of range: " + std::to_string(edge_id));
  if (q.edges[edge_id].u == q.edges[edge_id].v)
    throw ParseError("cannot contract a loop edge (id " +
                     std::to_string(edge_id) + ")");
  return contract_impl(q, {edge_id}, "edge-contraction");
}

std::pair<QuotientComplex, DeformationRecord> collapse_subcomplex(
    const QuotientComplex& q, const SubcomplexSelection& sel) {
  auto check_ids = [](const std::vector<int>& ids, int limit,
                      const char* what) {
    std::set<int> seen;
    for (int id : ids) {
      if (id < 0 || id >= limit)
        throw ParseError(std::string(what) + " id out of range: " +
                         std::to_string(id));
      if (!seen.insert(id).second)
        throw ParseError(std::string("duplicate ") + what + " id " +
                         std::to_string(id) + " in the selection");
    }
  };
  check_ids(sel.vertices, static_cast<int>(q.vertices.size()), "vertex");
  check_ids(sel.edges, static_cast<int>(q.edges.size()), "edge");
  check_ids(sel.cells, static_cast<int>(q.cells.size()), "cell");
  if (sel.vertices.empty() && sel.edges.empty() && sel.cells.empty())
    throw ParseError("empty selection");
  std::set<int> sv(sel.vertices.begin(), sel.vertices.end());
  std::set<int> se(sel.edges.begin(), sel.edges.end());
  std::set<int> sc(sel.cells.begin(), sel.cells.end());
  for (int eid : se) {
    const QuotientEdge& e = q.edges[eid];
    if (!sv.count(e.u) || !sv.count(e.v))
      throw ParseError("selection is not closed under boundary: edge " +
                       std::to_string(eid) +
                       " has an endpoint outside the selection");
  }
  for (int cid : sc) {
    const QuotientCell& cell = q.cells[cid];
    for (Sym sym : cell.word)
      if (!se.count(sym_index(sym)))
        throw ParseError("selection is not closed under boundary: cell " +
                         std::to_string(cid) + " uses edge " +
                         std::to_string(sym_index(sym)) +
                         " outside the selection");
    if (cell.word.empty() && !sv.count(cell.basepoint))
      throw ParseError("selection is not closed under boundary: cell " +
                       std::to_string(cid) +
                       " attaches at a vertex outside the selection");
  }
  detail::Dsu dsu(static_cast<int>(q.vertices.size()));
  for (int eid : se) dsu.unite(q.edges[eid].u, q.edges[eid].v);
  if (!sv.empty()) {
    const int root = dsu.find(*sv.begin());
    for (int v : sv)
      if (dsu.find(v) != root)
        throw ParseError("selection is not connected");
  }
  Rebuild r = rebuild(q, dsu, se, sc);
  DeformationRecord rec = make_record(q, r, "subcomplex-collapse", se, sc);
  check_complex(rec.after);
  return {rec.after, std::move(rec)};
}

int nonflat_circles(const QuotientComplex& q) {
  int count = 0;
  for (const QuotientEdge& e : q.edges)
    if (e.order > 2) ++count;
  return count;
}

std::string surface_kind_name(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::disk: return "disk";
    case SurfaceKind::projective_plane: return "projective_plane";
    case SurfaceKind::sphere: return "sphere";
    case SurfaceKind::other: return "other";
    case SurfaceKind::not_a_surface: return "not_a_surface";
  }
  return "?";
}

SurfaceClass classify_surface(const QuotientComplex& q) {
  SurfaceClass out;
  out.chi = euler_characteristic(q);
  const int nv = static_cast<int>(q.vertices.size());
  const int ne = static_cast<int>(q.edges.size());
  const int nf = static_cast<int>(q.cells.size());
  if (nv == 0) {
    out.reason = "empty complex";
    return out;
  }
  detail::Dsu comp(nv);
  for (const QuotientEdge& e : q.edges) comp.unite(e.u, e.v);
  int components = 0;
  for (int v = 0; v < nv; ++v)
    if (comp.find(v) == v) ++components;
  out.connected = components == 1;
  if (nf == 0) {
    out.reason = "no 2-cells";
    return out;
  }
  bool any_empty_word = false;
  for (const QuotientCell& c : q.cells) any_empty_word |= c.word.empty();
  if (any_empty_word) {
    if (nv == 1 && ne == 0 && nf == 1) {
      out.kind = SurfaceKind::sphere;
      out.is_surface = true;
      out.connected = true;
      out.orientable = true;
      return out;
    }
    out.reason =
        "a 2-cell attaches at a single point in a complex with other cells "
        "or edges";
    return out;
  }
  std::vector<int> incidence(ne, 0);
  for (const QuotientCell& c : q.cells)
    for (Sym sym : c.word) incidence[sym_index(sym)]++;
  for (int e = 0; e < ne; ++e) {
    if (incidence[e] == 0) {
      out.reason = "edge " + std::to_string(e) + " has no incident cell side";
      return out;
    }
    if (incidence[e] > 2) {
      out.reason = "edge " + std::to_string(e) + " has " +
                   std::to_string(incidence[e]) + " incident cell sides";
      return out;
    }
  }
  std::vector<bool> touched(nv, false);
  for (const QuotientEdge& e : q.edges) touched[e.u] = touched[e.v] = true;
  for (int v = 0; v < nv; ++v)
    if (!touched[v]) {
      out.reason = "vertex " + std::to_string(v) + " is isolated";
      return out;
    }
  // Link of each vertex: one node per edge end (node 2e = tail end, 2e+1 =
  // head end), one link edge per cell corner.  The link must be a single arc
  // or circle, i.e. the nodes sitting at the vertex must form one connected
  // piece (node degrees are bounded by the incidence check above).
  detail::Dsu link(2 * ne);
  for (const QuotientCell& c : q.cells) {
    const int n = static_cast<int>(c.word.size());
    for (int i = 0; i < n; ++i) {
      Sym prev = c.word[(i + n - 1) % n];
      Sym cur = c.word[i];
      int a = 2 * sym_index(prev) + (sym_forward(prev) ? 1 : 0);  // head end
      int b = 2 * sym_index(cur) + (sym_forward(cur) ? 0 : 1);    // tail end
      link.unite(a, b);
    }
  }
  auto node_vertex = [&](int node) {
    const QuotientEdge& e = q.edges[node / 2];
    return (node % 2 == 0) ? e.u : e.v;
  };
  std::vector<std::vector<int>> nodes_at(nv);
  for (int node = 0; node < 2 * ne; ++node)
    nodes_at[node_vertex(node)].push_back(node);
  for (int v = 0; v < nv; ++v) {
    std::set<int> roots;
    for (int node : nodes_at[v]) roots.insert(link.find(node));
    if (roots.size() > 1) {
      out.reason = "vertex " + std::to_string(v) +
                   " has a pinched or disconnected link";
      return out;
    }
  }
  out.is_surface = true;
  for (int e = 0; e < ne; ++e) out.has_boundary |= incidence[e] == 1;
  // Orientability: try to orient every cell so that each interior edge is
  // traversed once in each direction by its two incident sides.
  std::vector<std::vector<std::pair<int, int>>> sides(ne);  // (cell, sign)
  for (const QuotientCell& c : q.cells)
    for (Sym sym : c.word)
      sides[sym_index(sym)].emplace_back(c.id, sym_forward(sym) ? 1 : -1);
  std::vector<int> orient(nf, 0);
  bool orientable = true;
  for (int start = 0; start < nf && orientable; ++start) {
    if (orient[start] != 0) continue;
    orient[start] = 1;
    std::queue<int> bfs;
    bfs.push(start);
    while (!bfs.empty() && orientable) {
      int c = bfs.front();
      bfs.pop();
      for (Sym sym : q.cells[c].word) {
        const auto& inc = sides[sym_index(sym)];
        if (inc.size() != 2) continue;
        const auto& [c1, s1] = inc[0];
        const auto& [c2, s2] = inc[1];
        if (c1 == c2) {
          if (s1 == s2) orientable = false;
          continue;
        }
        // orient[c1] * s1 must equal -orient[c2] * s2
        int other = (c1 == c) ? c2 : c1;
        int want = -orient[c] * s1 * s2;
        if (orient[other] == 0) {
          orient[other] = want;
          bfs.push(other);
        } else if (orient[other] != want) {
          orientable = false;
        }
      }
    }
  }
  out.orientable = orientable;
  if (!out.connected) {
    out.kind = SurfaceKind::other;
    out.reason = "disconnected";
    return out;
  }
  if (!out.has_boundary) {
    if (out.chi == 2)
      out.kind = SurfaceKind::sphere;
    else if (out.chi == 1)
      out.kind = SurfaceKind::projective_plane;
    else {
      out.kind = SurfaceKind::other;
      out.reason = "closed surface that is neither a sphere nor a projective "
                   "plane";
    }
    return out;
  }
  if (out.chi == 1 && out.orientable) {
    out.kind = SurfaceKind::disk;
    return out;
  }
  out.kind = SurfaceKind::other;
  out.reason = "surface with boundary other than a disk";
  return out;
}

std::optional<int> recognize_lens_shell(const QuotientComplex& q) {
  if (q.vertices.size() != 1 || q.edges.size() != 1 || q.cells.size() != 1)
    return std::nullopt;
  const std::vector<Sym>& w = q.cells[0].word;
  if (w.size() < 3) return std::nullopt;
  for (Sym sym : w)
    if (sym != w[0]) return std::nullopt;
  return static_cast<int>(w.size());
}

std::string gamma_dot(const QuotientComplex& q) {
  NonFlatGraph g = gamma_graph(q);
  std::string out = "graph gamma {\n";
  for (int v : g.vertices) out += "  v" + std::to_string(v) + ";\n";
  for (const GammaEdge& e : g.edges)
    out += "  v" + std::to_string(e.u) + " -- v" + std::to_string(e.v) +
           " [label=\"order=" + std::to_string(e.order) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace faceq
