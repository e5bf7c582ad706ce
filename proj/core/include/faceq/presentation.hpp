#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "faceq/quotient.hpp"
#include "faceq/snf.hpp"

namespace faceq {

// A finite group presentation.  Generators are numbered 0..n-1; relator
// letters are signed 1-based generator references (+3 means generator 2,
// -3 its inverse), the same convention boundary walks use for edges.
// Relator words are kept freely reduced.
//
// generator_edges / relator_cells track which quotient-complex element each
// generator or relator came from (-1 once simplification has mixed things
// up).  lineage is the hash of the originating quotient complex so that
// records of later deformations can be matched against the right stage.
struct Presentation {
  int generators = 0;
  std::vector<std::vector<int>> relators;
  std::vector<int> generator_edges;
  std::vector<int> relator_cells;
  std::uint64_t lineage = 0;

  bool operator==(const Presentation&) const = default;
};

// Finitely generated abelian group in invariant-factor form:
// Z^free_rank  x  Z/d_1 x ... x Z/d_k  with d_1 | d_2 | ... | d_k, d_i > 1.
struct AbelianGroup {
  std::vector<BigInt> invariant_factors;
  int free_rank = 0;

  bool trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  // "0", "Z", "Z^2", "Z_5", "Z ⊕ Z_2 ⊕ Z_4", ...
  std::string text() const;

  bool operator==(const AbelianGroup&) const = default;
};

enum class Triviality { trivial, nontrivial, unknown };

std::string triviality_name(Triviality t);

// Fundamental-group presentation of a connected quotient complex read off a
// spanning tree: one generator per non-tree edge, one relator per 2-cell
// (tree letters erased, then freely reduced).  The one-argument form uses
// the deterministic spanning forest of the 1-skeleton.  Throws ParseError
// when the complex is disconnected or tree_edges is not a spanning tree.
Presentation fundamental_presentation(const QuotientComplex& q);
Presentation fundamental_presentation(const QuotientComplex& q,
                                      const std::vector<int>& tree_edges);

// Fixed-point presentation cleanup: free and cyclic reduction, dropping
// empty and duplicate relators (duplicate up to rotation and inversion),
// killing generators named by length-1 relators, and substituting away a
// generator defined by a length-2 relator on two distinct generators.
// Terminates because every step lowers the generator count, the total
// relator length, or the relator count.  Provenance columns are reset to -1
// as soon as the presentation changes at all.
Presentation tietze_simplify(const Presentation& p);

// Abelianization computed from the Smith normal form of the exponent-sum
// matrix (rows = relators, columns = generators).
AbelianGroup abelianization(const Presentation& p);

// nontrivial when the abelianization is nonzero; trivial when
// simplification reaches zero generators; unknown otherwise.
Triviality triviality_status(const Presentation& p);

// Carries a presentation through a deformation.  Edge contractions leave
// the fundamental group alone, so the presentation is re-derived from the
// record's result complex.  Subcomplex collapses drop the relators of
// removed cells and append a length-1 kill relator for each generator whose
// edge was removed; this needs intact provenance.  Throws ParseError when
// the record does not continue p's lineage or provenance is missing.
Presentation induced_presentation(const Presentation& p,
                                  const DeformationRecord& record);

// "a".."z" then "g26", "g27", ...
std::string generator_name(int index);

// Word rendering with exponent folding: {1,1,1} -> "a^3", {-2} -> "b^-1",
// empty -> "1".
std::string word_text(const std::vector<int>& word);

// "⟨a, b | a b a, b⟩"; the empty presentation renders as "⟨ | ⟩".
std::string presentation_text(const Presentation& p);

}  // namespace faceq
