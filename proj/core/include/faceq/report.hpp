#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "faceq/actions.hpp"
#include "faceq/complex.hpp"
#include "faceq/manifold.hpp"
#include "faceq/presentation.hpp"
#include "faceq/quotient.hpp"

namespace faceq {

inline constexpr const char* kToolName = "faceq";
inline constexpr const char* kToolVersion = "0.1.0";

// Every derived artifact for one scheme, computed in dependency order:
// validation, identification classes, edge orders, the quotient complex and
// its Euler characteristic, the manifold check, the order > 2 subgraph, the
// surface classification, lens-shell recognition, and the fundamental-group
// presentation with its abelianization.
struct Analysis {
  FacePairingScheme scheme;
  std::uint64_t hash = 0;
  ValidationReport validation;
  ClassPartition vertex_cls;
  ActionAnalysis actions;
  std::optional<ClassPartition> fold_orbits;  // computed for flat schemes
  QuotientComplex quotient;
  int chi = 0;
  ManifoldReport manifold;
  NonFlatGraph gamma;
  bool circuit = false;
  int circles = 0;  // order > 2 edge count
  SurfaceClass surface;
  std::optional<int> lens_q;
  Presentation presentation;
  Presentation simplified;
  AbelianGroup homology;
  Triviality triviality = Triviality::unknown;
};

// Full pipeline; throws ParseError when validation finds hard errors.
Analysis analyze(const FacePairingScheme& s);

// Result of a deformation pipeline applied to an analyzed scheme's quotient,
// with the presentation carried through every step.
struct DeformationOutcome {
  std::vector<DeformationRecord> records;
  QuotientComplex result;
  int chi = 0;
  int circles = 0;
  Presentation induced;
  Presentation simplified;
  AbelianGroup homology;
  Triviality triviality = Triviality::unknown;
};

// Contracts the tree produced by gamma_spanning_tree (a no-op record when
// that tree is empty).
DeformationOutcome contract_gamma_tree(const Analysis& a);

// Contracts the listed edges one at a time; each id refers to the complex
// produced by the previous step.
DeformationOutcome contract_edge_list(const Analysis& a,
                                      const std::vector<int>& edge_ids);

// Byte-stable renderings.  Reports embed the scheme hash and tool version;
// the same analysis always renders to identical bytes.
std::string render_json(const Analysis& a,
                        const DeformationOutcome* d = nullptr);
std::string render_text(const Analysis& a,
                        const DeformationOutcome* d = nullptr);

}  // namespace faceq
