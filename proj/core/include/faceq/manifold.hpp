#pragma once

#include <string>
#include <vector>

#include "faceq/complex.hpp"

namespace faceq {

// One assembled link: the small surface surrounding an identification class
// of special points (an identified vertex, or an identified edge probed at
// its midpoint).  The link is glued from one corner disk per class member
// vertex; it is a sphere exactly when it is connected, has Euler
// characteristic 2, and carries no pinch point.
struct LinkReport {
  std::string kind;  // "vertex" | "edge"
  int class_id = 0;
  std::vector<int> members;  // original vertex ids, or original edge ids
  int disks = 0;
  int link_vertices = 0;
  int link_edges = 0;
  int euler_characteristic = 0;
  bool connected = false;
  bool pinch_free = false;
  bool sphere = false;
};

struct ManifoldReport {
  bool is_manifold = false;
  std::vector<LinkReport> vertex_links;
  std::vector<LinkReport> edge_links;
  std::vector<std::string> notes;  // diagnostics for every failing link
};

// Decides whether the identification space is a closed 3-manifold.  Edges
// are split at their midpoints first, which turns every potentially singular
// locus (identified vertices and identified edge interiors) into a vertex;
// then the link of every identified vertex is assembled from face-corner
// disks glued along their boundary arcs by the correspondences, and tested
// for being a sphere.
ManifoldReport verify_manifold(const FacePairingScheme& s);

}  // namespace faceq
