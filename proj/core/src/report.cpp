#include "faceq/report.hpp"

#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "faceq/io.hpp"

namespace faceq {

namespace {

using ojson = nlohmann::ordered_json;

Presentation advance(const Presentation& p,
                     const std::vector<DeformationRecord>& records) {
  Presentation cur = p;
  for (const DeformationRecord& rec : records)
    cur = induced_presentation(cur, rec);
  return cur;
}

DeformationOutcome finish_outcome(const Analysis& a,
                                  std::vector<DeformationRecord> records,
                                  QuotientComplex result) {
  DeformationOutcome out;
  out.result = std::move(result);
  out.chi = euler_characteristic(out.result);
  out.circles = nonflat_circles(out.result);
  out.induced = advance(a.presentation, records);
  out.records = std::move(records);
  out.simplified = tietze_simplify(out.induced);
  out.homology = abelianization(out.induced);
  out.triviality = triviality_status(out.induced);
  return out;
}

ojson presentation_json(const Presentation& p) {
  ojson j;
  j["generators"] = p.generators;
  j["relators"] = p.relators;
  j["text"] = presentation_text(p);
  return j;
}

ojson group_json(const Presentation& pres, const Presentation& simplified,
                 const AbelianGroup& h1, Triviality triv) {
  ojson g;
  g["presentation"] = presentation_json(pres);
  g["simplified"] = presentation_json(simplified);
  ojson ab;
  ojson factors = ojson::array();
  for (const BigInt& d : h1.invariant_factors) factors.push_back(d.str());
  ab["invariant_factors"] = factors;
  ab["free_rank"] = h1.free_rank;
  ab["text"] = h1.text();
  g["abelianization"] = ab;
  g["triviality"] = triviality_name(triv);
  return g;
}

ojson link_json(const LinkReport& l) {
  ojson j;
  j["kind"] = l.kind;
  j["class_id"] = l.class_id;
  j["members"] = l.members;
  j["disks"] = l.disks;
  j["link_vertices"] = l.link_vertices;
  j["link_edges"] = l.link_edges;
  j["euler_characteristic"] = l.euler_characteristic;
  j["connected"] = l.connected;
  j["pinch_free"] = l.pinch_free;
  j["sphere"] = l.sphere;
  return j;
}

ojson record_json(const DeformationRecord& r) {
  ojson j;
  j["kind"] = r.kind;
  j["removed_vertices"] = r.removed_vertices;
  j["removed_edges"] = r.removed_edges;
  j["removed_cells"] = r.removed_cells;
  j["vertex_map"] = r.vertex_map;
  j["edge_map"] = r.edge_map;
  j["cell_map"] = r.cell_map;
  j["chi_before"] = r.chi_before;
  j["chi_after"] = r.chi_after;
  j["lineage_before"] = hash_hex(r.lineage_before);
  j["lineage_after"] = hash_hex(r.lineage_after);
  return j;
}

ojson quotient_json(const QuotientComplex& q) {
  ojson j;
  j["chi"] = euler_characteristic(q);
  ojson vs = ojson::array();
  for (const QuotientVertex& v : q.vertices) {
    ojson vj;
    vj["id"] = v.id;
    vj["members"] = v.members;
    vs.push_back(vj);
  }
  j["vertices"] = vs;
  ojson es = ojson::array();
  for (const QuotientEdge& e : q.edges) {
    ojson ej;
    ej["id"] = e.id;
    ej["u"] = e.u;
    ej["v"] = e.v;
    ej["scheme_class"] = e.scheme_class;
    ej["order"] = e.order;
    ej["flat"] = e.flat;
    ej["flipped"] = e.flipped;
    es.push_back(ej);
  }
  j["edges"] = es;
  ojson cs = ojson::array();
  for (const QuotientCell& c : q.cells) {
    ojson cj;
    cj["id"] = c.id;
    cj["word"] = c.word;
    cj["word_text"] = word_text(c.word);
    cj["basepoint"] = c.basepoint;
    cj["faces"] = ojson::array({c.face_a, c.face_b});
    cs.push_back(cj);
  }
  j["cells"] = cs;
  return j;
}

ojson report_object(const Analysis& a, const DeformationOutcome* d) {
  ojson r;
  r["tool"] = ojson{{"name", kToolName}, {"version", kToolVersion}};

  ojson scheme;
  scheme["hash"] = hash_hex(a.hash);
  scheme["vertices"] = a.scheme.complex.vertices.size();
  scheme["edges"] = a.scheme.complex.edges.size();
  scheme["faces"] = a.scheme.complex.faces.size();
  if (!a.scheme.meta_json.empty())
    scheme["meta"] = ojson::parse(a.scheme.meta_json);
  r["scheme"] = scheme;

  ojson val;
  val["valid"] = a.validation.valid();
  auto viol_array = [](const std::vector<Violation>& vs) {
    ojson arr = ojson::array();
    for (const Violation& v : vs)
      arr.push_back(ojson{{"code", v.code}, {"message", v.message}});
    return arr;
  };
  val["errors"] = viol_array(a.validation.errors);
  val["warnings"] = viol_array(a.validation.warnings);
  r["validation"] = val;

  ojson vcs = ojson::array();
  for (size_t i = 0; i < a.vertex_cls.classes.size(); ++i) {
    ojson vj;
    vj["id"] = i;
    vj["members"] = a.vertex_cls.classes[i];
    vcs.push_back(vj);
  }
  ojson ecs = ojson::array();
  for (const EdgeClassInfo& c : a.actions.classes) {
    ojson ej;
    ej["id"] = c.id;
    ej["members"] = c.members;
    ej["order"] = c.order;
    ej["collapsible"] = c.collapsible;
    ej["flat"] = c.flat;
    bool flipped = false;
    for (const QuotientEdge& qe : a.quotient.edges)
      if (qe.scheme_class == c.id) flipped = qe.flipped;
    ej["flipped"] = flipped;
    ecs.push_back(ej);
  }
  r["classes"] = ojson{{"vertex_classes", vcs}, {"edge_classes", ecs}};
  r["degree"] = a.actions.degree;
  r["flat"] = a.actions.flat;
  if (a.fold_orbits)
    r["flat_reflection_orbits"] = a.fold_orbits->classes;
  else
    r["flat_reflection_orbits"] = nullptr;

  r["quotient"] = quotient_json(a.quotient);

  ojson man;
  man["is_manifold"] = a.manifold.is_manifold;
  ojson vlinks = ojson::array();
  for (const LinkReport& l : a.manifold.vertex_links)
    vlinks.push_back(link_json(l));
  ojson elinks = ojson::array();
  for (const LinkReport& l : a.manifold.edge_links)
    elinks.push_back(link_json(l));
  man["vertex_links"] = vlinks;
  man["edge_links"] = elinks;
  man["notes"] = a.manifold.notes;
  r["manifold"] = man;

  ojson gam;
  gam["vertices"] = a.gamma.vertices;
  ojson gedges = ojson::array();
  for (const GammaEdge& e : a.gamma.edges) {
    ojson ej;
    ej["id"] = e.id;
    ej["u"] = e.u;
    ej["v"] = e.v;
    ej["order"] = e.order;
    gedges.push_back(ej);
  }
  gam["edges"] = gedges;
  gam["has_circuit"] = a.circuit;
  gam["nonflat_circles"] = a.circles;
  r["gamma"] = gam;

  ojson surf;
  surf["kind"] = surface_kind_name(a.surface.kind);
  surf["is_surface"] = a.surface.is_surface;
  surf["connected"] = a.surface.connected;
  surf["orientable"] = a.surface.orientable;
  surf["has_boundary"] = a.surface.has_boundary;
  surf["chi"] = a.surface.chi;
  surf["reason"] = a.surface.reason;
  r["surface"] = surf;

  if (a.lens_q)
    r["lens_shell_q"] = *a.lens_q;
  else
    r["lens_shell_q"] = nullptr;

  r["group"] =
      group_json(a.presentation, a.simplified, a.homology, a.triviality);

  // Flat scheme with disk quotient: the classical flatness result says the
  // identification space is then a 3-sphere.  Reported as an external claim
  // — this tool does not certify 3-sphere recognition itself.
  if (a.actions.flat && a.surface.kind == SurfaceKind::disk) {
    ojson claim;
    claim["claim"] = "identification space is a 3-sphere";
    claim["basis"] =
        "classical result for flat schemes whose quotient is a disk";
    claim["certified_by_tool"] = false;
    r["sphere_claim"] = claim;
  } else {
    r["sphere_claim"] = nullptr;
  }

  if (d) {
    ojson def;
    ojson log = ojson::array();
    for (const DeformationRecord& rec : d->records)
      log.push_back(record_json(rec));
    def["log"] = log;
    def["result"] = quotient_json(d->result);
    def["nonflat_circles"] = d->circles;
    def["group"] =
        group_json(d->induced, d->simplified, d->homology, d->triviality);
    r["deformation"] = def;
  }
  return r;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void text_group(std::ostream& os, const std::string& indent,
                const Presentation& pres, const Presentation& simplified,
                const AbelianGroup& h1, Triviality triv) {
  os << indent << "presentation: " << presentation_text(pres) << "\n";
  os << indent << "simplified:   " << presentation_text(simplified) << "\n";
  os << indent << "H1:           " << h1.text() << "\n";
  os << indent << "triviality:   " << triviality_name(triv) << "\n";
}

void text_members(std::ostream& os, const std::vector<int>& members) {
  os << "{";
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) os << ", ";
    os << members[i];
  }
  os << "}";
}

}  // namespace

Analysis analyze(const FacePairingScheme& s) {
  Analysis a;
  a.scheme = s;
  a.hash = scheme_hash(s);
  a.validation = validate(s);
  if (!a.validation.valid()) {
    std::string msg = "invalid scheme:";
    for (const Violation& v : a.validation.errors)
      msg += " [" + v.code + "] " + v.message + ";";
    msg.pop_back();
    throw ParseError(msg);
  }
  a.vertex_cls = vertex_classes(s);
  a.actions = analyze_actions(s);
  if (a.actions.flat) a.fold_orbits = flat_reflection_orbits(s);
  a.quotient = build_quotient(s);
  a.chi = euler_characteristic(a.quotient);
  a.manifold = verify_manifold(s);
  a.gamma = gamma_graph(a.quotient);
  a.circuit = has_circuit(a.gamma);
  a.circles = nonflat_circles(a.quotient);
  a.surface = classify_surface(a.quotient);
  a.lens_q = recognize_lens_shell(a.quotient);
  a.presentation = fundamental_presentation(a.quotient);
  a.simplified = tietze_simplify(a.presentation);
  a.homology = abelianization(a.presentation);
  a.triviality = triviality_status(a.presentation);
  return a;
}

DeformationOutcome contract_gamma_tree(const Analysis& a) {
  std::vector<int> tree = gamma_spanning_tree(a.quotient);
  auto [after, record] = contract_tree(a.quotient, tree);
  std::vector<DeformationRecord> records;
  records.push_back(std::move(record));
  return finish_outcome(a, std::move(records), std::move(after));
}

DeformationOutcome contract_edge_list(const Analysis& a,
                                      const std::vector<int>& edge_ids) {
  QuotientComplex cur = a.quotient;
  std::vector<DeformationRecord> records;
  for (int e : edge_ids) {
    auto [after, record] = contract_edge(cur, e);
    records.push_back(std::move(record));
    cur = std::move(after);
  }
  return finish_outcome(a, std::move(records), std::move(cur));
}

std::string render_json(const Analysis& a, const DeformationOutcome* d) {
  return report_object(a, d).dump(2) + "\n";
}

std::string render_text(const Analysis& a, const DeformationOutcome* d) {
  std::ostringstream os;
  os << kToolName << " " << kToolVersion << " — face-pairing scheme report\n";
  os << "scheme hash: " << hash_hex(a.hash) << "\n";
  os << "sphere: " << a.scheme.complex.vertices.size() << " vertices, "
     << a.scheme.complex.edges.size() << " edges, "
     << a.scheme.complex.faces.size() << " faces\n\n";

  os << "validation: ok";
  if (!a.validation.warnings.empty())
    os << " (" << a.validation.warnings.size() << " warning"
       << (a.validation.warnings.size() == 1 ? "" : "s") << ")";
  os << "\n";
  for (const Violation& w : a.validation.warnings)
    os << "  warning [" << w.code << "] " << w.message << "\n";
  os << "\n";

  os << "vertex classes (" << a.vertex_cls.classes.size() << "):\n";
  for (size_t i = 0; i < a.vertex_cls.classes.size(); ++i) {
    os << "  v" << i << ": ";
    text_members(os, a.vertex_cls.classes[i]);
    os << "\n";
  }
  os << "edge classes (" << a.actions.classes.size() << "):\n";
  for (const EdgeClassInfo& c : a.actions.classes) {
    os << "  e" << c.id << ": ";
    text_members(os, c.members);
    os << "  order " << c.order << "  collapsible " << yes_no(c.collapsible)
       << "  flat " << yes_no(c.flat) << "\n";
  }
  os << "degree " << a.actions.degree << "   flat " << yes_no(a.actions.flat)
     << "\n";
  if (a.fold_orbits) {
    os << "fold orbits (" << a.fold_orbits->classes.size() << "):";
    for (const auto& orbit : a.fold_orbits->classes) {
      os << " ";
      text_members(os, orbit);
    }
    os << "\n";
  }
  os << "\n";

  os << "quotient: chi = " << a.chi << "  (" << a.quotient.vertices.size()
     << " vertices, " << a.quotient.edges.size() << " edges, "
     << a.quotient.cells.size() << " cells)\n";
  for (const QuotientCell& c : a.quotient.cells)
    os << "  cell " << c.id << ": word " << word_text(c.word)
       << "  basepoint v" << c.basepoint << "  faces (" << c.face_a << ", "
       << c.face_b << ")\n";
  os << "\n";

  os << "manifold: " << yes_no(a.manifold.is_manifold) << " ("
     << a.manifold.vertex_links.size() << " vertex links, "
     << a.manifold.edge_links.size() << " edge links)\n";
  for (const std::string& n : a.manifold.notes) os << "  note: " << n << "\n";

  os << "gamma: " << a.gamma.vertices.size() << " vertices, "
     << a.gamma.edges.size() << " edges;  circuit " << yes_no(a.circuit)
     << ";  non-flat circles " << a.circles << "\n";
  os << "surface: " << surface_kind_name(a.surface.kind);
  if (!a.surface.reason.empty()) os << " (" << a.surface.reason << ")";
  os << "\n";
  os << "lens shell: ";
  if (a.lens_q)
    os << "q = " << *a.lens_q << "\n";
  else
    os << "not recognized\n";
  if (a.actions.flat && a.surface.kind == SurfaceKind::disk)
    os << "note: flat scheme with disk quotient — by the classical flatness "
          "result the identification space is a 3-sphere (external claim, "
          "not certified by this tool)\n";
  os << "\ngroup:\n";
  text_group(os, "  ", a.presentation, a.simplified, a.homology, a.triviality);

  if (d) {
    os << "\ndeformation pipeline (" << d->records.size() << " step"
       << (d->records.size() == 1 ? "" : "s") << "):\n";
    for (size_t i = 0; i < d->records.size(); ++i) {
      const DeformationRecord& rec = d->records[i];
      os << "  step " << i + 1 << ": " << rec.kind << "  removed "
         << rec.removed_edges.size() << " edges, "
         << rec.removed_vertices.size() << " vertices, "
         << rec.removed_cells.size() << " cells;  chi " << rec.chi_before
         << " -> " << rec.chi_after << "\n";
    }
    os << "result: chi = " << d->chi << "  (" << d->result.vertices.size()
       << " vertices, " << d->result.edges.size() << " edges, "
       << d->result.cells.size() << " cells);  non-flat circles "
       << d->circles << "\n";
    for (const QuotientCell& c : d->result.cells)
      os << "  cell " << c.id << ": word " << word_text(c.word)
         << "  basepoint v" << c.basepoint << "\n";
    os << "induced group:\n";
    text_group(os, "  ", d->induced, d->simplified, d->homology,
               d->triviality);
  }
  return os.str();
}

}  // namespace faceq
