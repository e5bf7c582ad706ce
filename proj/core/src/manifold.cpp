#include "faceq/manifold.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "dsu.hpp"

namespace faceq {

namespace {

// The whole computation happens on the midpoint-subdivided scheme.  Naming
// used below, all relative to that scheme:
//  * side (f, i): position i of face f's walk; identified with its partner
//    side on the paired face.
//  * corner (f, i): the angular sector of face f at the walk vertex
//    tail(f, i), bounded by sides i-1 and i.  Under the gluing of face f
//    onto its partner, corners map to corners.
//  * end instance 2e / 2e+1: the spot where edge e meets its first / second
//    endpoint.  Each instance is flanked by exactly two corners.
// The link of an identified vertex class C is the surface with one disk per
// member vertex, one 1-cell per corner pair at C, and one 0-cell per
// identified end instance at C.
struct LinkMachine {
  const FacePairingScheme& sub;
  FlagIndexer fi;
  PairingView view;
  ClassPartition vcls;
  detail::Dsu ends;            // identification of end instances
  std::vector<int> corner_pair;  // corner id -> partner corner id
  std::vector<int> corner_in;    // corner id -> end instance on its in side
  std::vector<int> corner_out;   // corner id -> end instance on its out side
  std::vector<int> corner_vertex;  // corner id -> vertex at the corner
  // corner-end ids: 2*corner (in end), 2*corner+1 (out end)
  std::vector<int> sector_step;  // corner-end -> flanking corner-end across the disk
  std::vector<int> glue_step;    // corner-end -> corner-end across the glued side
  std::vector<int> cycles_at_root;  // end-class root -> number of corner-end cycles

  explicit LinkMachine(const FacePairingScheme& subdivided)
      : sub(subdivided), ends(0) {
    fi = FlagIndexer::build(sub.complex);
    view = PairingView::build(sub);
    vcls = vertex_classes(sub);
    build_corners();
    build_end_union();
    build_steps();
    count_cycles();
  }

  int tail_instance(int f, int i) const {
    Sym sy = sub.complex.faces[f][i];
    return 2 * sym_index(sy) + (sym_forward(sy) ? 0 : 1);
  }

  int head_instance(int f, int i) const {
    Sym sy = sub.complex.faces[f][i];
    return 2 * sym_index(sy) + (sym_forward(sy) ? 1 : 0);
  }

  void build_corners() {
    corner_pair.assign(fi.total, -1);
    corner_in.assign(fi.total, -1);
    corner_out.assign(fi.total, -1);
    corner_vertex.assign(fi.total, -1);
    for (int f = 0; f < static_cast<int>(sub.complex.faces.size()); ++f) {
      const int len = static_cast<int>(sub.complex.faces[f].size());
      for (int i = 0; i < len; ++i) {
        const int id = fi.id(f, i);
        const int k = view.peer[f];
        const int o = view.offset[f];
        const int j = view.reversed[f] ? ((o - i + 1) % len + len) % len
                                       : (i + o) % len;
        corner_pair[id] = fi.id(k, j);
        corner_in[id] = head_instance(f, (i + len - 1) % len);
        corner_out[id] = tail_instance(f, i);
        corner_vertex[id] = sub.complex.tail(f, i);
      }
    }
    for (int id = 0; id < fi.total; ++id) {
      if (corner_pair[corner_pair[id]] != id)
        throw InvariantError("corner pairing is not an involution");
      if (vcls.class_of[corner_vertex[id]] !=
          vcls.class_of[corner_vertex[corner_pair[id]]])
        throw InvariantError("paired corners sit at different vertex classes");
    }
  }

  void build_end_union() {
    ends = detail::Dsu(2 * static_cast<int>(sub.complex.edges.size()));
    for (int f = 0; f < static_cast<int>(sub.complex.faces.size()); ++f) {
      if (view.peer[f] < f) continue;
      const int k = view.peer[f];
      const int len = static_cast<int>(sub.complex.faces[f].size());
      for (int i = 0; i < len; ++i) {
        const int j = view.map_pos(sub.complex, f, i);
        if (view.reversed[f]) {
          ends.unite(tail_instance(f, i), head_instance(k, j));
          ends.unite(head_instance(f, i), tail_instance(k, j));
        } else {
          ends.unite(tail_instance(f, i), tail_instance(k, j));
          ends.unite(head_instance(f, i), head_instance(k, j));
        }
      }
    }
  }

  void build_steps() {
    // Across the disk at one end instance: the two flanking corner-ends.
    std::vector<std::vector<int>> flank;
    flanking_of_instances(flank);
    sector_step.assign(2 * fi.total, -1);
    for (const auto& pair : flank) {
      sector_step[pair[0]] = pair[1];
      sector_step[pair[1]] = pair[0];
    }
    // Across a glued side: a direct correspondence matches in ends with in
    // ends; a reversed one exchanges them.
    glue_step.assign(2 * fi.total, -1);
    for (int id = 0; id < fi.total; ++id) {
      const int partner = corner_pair[id];
      const bool rev = view.reversed[fi.face_pos(id).first];
      glue_step[2 * id] = 2 * partner + (rev ? 1 : 0);
      glue_step[2 * id + 1] = 2 * partner + (rev ? 0 : 1);
    }
    for (int ce = 0; ce < 2 * fi.total; ++ce) {
      if (sector_step[ce] < 0 || glue_step[ce] < 0)
        throw InvariantError("incomplete corner-end adjacency");
      if (glue_step[glue_step[ce]] != ce)
        throw InvariantError("corner-end gluing is not an involution");
    }
  }

  void flanking_of_instances(std::vector<std::vector<int>>& out) {
    std::vector<std::vector<int>> at(2 * sub.complex.edges.size());
    for (int id = 0; id < fi.total; ++id) {
      at[corner_in[id]].push_back(2 * id);
      at[corner_out[id]].push_back(2 * id + 1);
    }
    for (const auto& list : at)
      if (list.size() != 2)
        throw InvariantError(
            "an edge end is not flanked by exactly two corners");
    out = std::move(at);
  }

  void count_cycles() {
    cycles_at_root.assign(2 * sub.complex.edges.size(), 0);
    std::vector<bool> seen(2 * fi.total, false);
    for (int start = 0; start < 2 * fi.total; ++start) {
      if (seen[start]) continue;
      int instance = (start % 2 == 0) ? corner_in[start / 2]
                                      : corner_out[start / 2];
      const int root = ends.find(instance);
      int ce = start;
      bool use_sector = true;
      do {
        seen[ce] = true;
        ce = use_sector ? sector_step[ce] : glue_step[ce];
        use_sector = !use_sector;
      } while (ce != start || !use_sector);
      cycles_at_root[root]++;
    }
  }
};

}  // namespace

ManifoldReport verify_manifold(const FacePairingScheme& s) {
  ValidationReport vr = validate(s);
  if (!vr.valid())
    throw ParseError("cannot run the manifold check on an invalid scheme: " +
                     vr.errors.front().message);
  const int orig_v = static_cast<int>(s.complex.vertices.size());
  FacePairingScheme sub = subdivide_edges(s);
  LinkMachine m(sub);

  ManifoldReport report;
  report.is_manifold = true;
  const int classes = static_cast<int>(m.vcls.classes.size());

  // Per class: corners grouped by class, disks = member vertices.
  std::vector<std::vector<int>> corners_at(classes);
  for (int id = 0; id < m.fi.total; ++id)
    corners_at[m.vcls.class_of[m.corner_vertex[id]]].push_back(id);

  int vertex_count = 0, edge_count = 0;
  for (int c = 0; c < classes; ++c) {
    const std::vector<int>& members = m.vcls.classes[c];
    LinkReport link;
    const bool is_edge_link = members.front() >= orig_v;
    link.kind = is_edge_link ? "edge" : "vertex";
    link.class_id = is_edge_link ? edge_count++ : vertex_count++;
    for (int v : members)
      link.members.push_back(is_edge_link ? v - orig_v : v);
    link.disks = static_cast<int>(members.size());
    // 1-cells: corner pairs.
    if (corners_at[c].size() % 2 != 0)
      throw InvariantError("odd number of corners at an identified vertex");
    link.link_edges = static_cast<int>(corners_at[c].size()) / 2;
    // 0-cells: identified end instances, and the pinch test per 0-cell.
    std::set<int> roots;
    for (int id : corners_at[c]) {
      roots.insert(m.ends.find(m.corner_in[id]));
      roots.insert(m.ends.find(m.corner_out[id]));
    }
    link.link_vertices = static_cast<int>(roots.size());
    link.euler_characteristic =
        link.link_vertices - link.link_edges + link.disks;
    link.pinch_free = true;
    for (int root : roots)
      if (m.cycles_at_root[root] != 1) link.pinch_free = false;
    // Connectivity of the glued disks.
    std::map<int, int> disk_index;
    for (int v : members) disk_index.emplace(v, static_cast<int>(disk_index.size()));
    detail::Dsu disks(static_cast<int>(members.size()));
    for (int id : corners_at[c]) {
      const int partner = m.corner_pair[id];
      disks.unite(disk_index.at(m.corner_vertex[id]),
                  disk_index.at(m.corner_vertex[partner]));
    }
    int components = 0;
    for (int d = 0; d < static_cast<int>(members.size()); ++d)
      if (disks.find(d) == d) ++components;
    link.connected = components == 1;
    link.sphere =
        link.connected && link.euler_characteristic == 2 && link.pinch_free;
    if (!link.sphere) {
      report.is_manifold = false;
      std::ostringstream note;
      note << link.kind << " link " << link.class_id << " (members";
      for (int v : link.members) note << ' ' << v;
      note << ") is not a sphere: chi=" << link.euler_characteristic
           << (link.connected ? "" : ", disconnected")
           << (link.pinch_free ? "" : ", pinched");
      report.notes.push_back(note.str());
    }
    if (is_edge_link)
      report.edge_links.push_back(std::move(link));
    else
      report.vertex_links.push_back(std::move(link));
  }
  return report;
}

}  // namespace faceq
