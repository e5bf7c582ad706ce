#include "faceq/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <utility>

#include "dsu.hpp"

namespace faceq {

namespace {

std::vector<int> free_reduce(const std::vector<int>& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int s : w) {
    if (!out.empty() && out.back() == -s)
      out.pop_back();
    else
      out.push_back(s);
  }
  return out;
}

std::vector<int> cyclic_reduce(const std::vector<int>& w) {
  std::vector<int> r = free_reduce(w);
  while (r.size() >= 2 && r.front() == -r.back()) {
    r.erase(r.begin());
    r.pop_back();
  }
  return r;
}

std::vector<int> inverse_word(const std::vector<int>& w) {
  std::vector<int> out(w.rbegin(), w.rend());
  for (int& s : out) s = -s;
  return out;
}

// Smallest rotation of the word or its inverse; relators that agree as
// unoriented cyclic words share a canonical form.
std::vector<int> canonical_cyclic(const std::vector<int>& w) {
  if (w.empty()) return w;
  std::vector<int> best;
  bool first = true;
  for (const std::vector<int>& base : {w, inverse_word(w)}) {
    const int n = static_cast<int>(base.size());
    for (int r = 0; r < n; ++r) {
      std::vector<int> rot(base.begin() + r, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + r);
      if (first || rot < best) {
        best = std::move(rot);
        first = false;
      }
    }
  }
  return best;
}

// Removes generator `dead` from the numbering, rewriting every occurrence
// of it to `replacement` (a possibly empty word in the remaining OLD
// numbering) before renumbering.
void eliminate_generator(Presentation& p, int dead,
                         const std::vector<int>& replacement) {
  std::vector<std::vector<int>> next;
  next.reserve(p.relators.size());
  for (const std::vector<int>& rel : p.relators) {
    std::vector<int> w;
    w.reserve(rel.size());
    for (int s : rel) {
      int g = std::abs(s) - 1;
      if (g == dead) {
        if (s > 0)
          w.insert(w.end(), replacement.begin(), replacement.end());
        else {
          std::vector<int> inv = inverse_word(replacement);
          w.insert(w.end(), inv.begin(), inv.end());
        }
      } else {
        w.push_back(s);
      }
    }
    for (int& s : w) {
      int g = std::abs(s) - 1;
      if (g > dead) s = (s > 0 ? 1 : -1) * g;  // old ref g+1 becomes g
    }
    next.push_back(free_reduce(w));
  }
  p.relators = std::move(next);
  p.generators -= 1;
}

}  // namespace

Presentation fundamental_presentation(const QuotientComplex& q) {
  return fundamental_presentation(q, spanning_forest(q));
}

Presentation fundamental_presentation(const QuotientComplex& q,
                                      const std::vector<int>& tree_edges) {
  const int nv = static_cast<int>(q.vertices.size());
  const int ne = static_cast<int>(q.edges.size());
  {
    detail::Dsu comp(nv);
    for (const QuotientEdge& e : q.edges) comp.unite(e.u, e.v);
    int roots = 0;
    for (int v = 0; v < nv; ++v)
      if (comp.find(v) == v) ++roots;
    if (roots > 1)
      throw ParseError("quotient complex is disconnected; no single "
                       "presentation exists");
  }
  std::vector<bool> in_tree(ne, false);
  {
    detail::Dsu acyc(nv);
    for (int e : tree_edges) {
      if (e < 0 || e >= ne)
        throw ParseError("tree edge id out of range: " + std::to_string(e));
      if (in_tree[e])
        throw ParseError("duplicate tree edge id: " + std::to_string(e));
      in_tree[e] = true;
      if (!acyc.unite(q.edges[e].u, q.edges[e].v))
        throw ParseError("tree edges contain a cycle");
    }
    if (nv > 0 && static_cast<int>(tree_edges.size()) != nv - 1)
      throw ParseError("tree edges do not span the complex");
  }

  Presentation p;
  p.lineage = quotient_hash(q);
  std::vector<int> gen_of(ne, -1);
  for (int e = 0; e < ne; ++e) {
    if (in_tree[e]) continue;
    gen_of[e] = p.generators++;
    p.generator_edges.push_back(e);
  }
  for (const QuotientCell& cell : q.cells) {
    std::vector<int> word;
    for (Sym s : cell.word) {
      const int e = sym_index(s);
      if (in_tree[e]) continue;
      const int letter = gen_of[e] + 1;
      word.push_back(sym_forward(s) ? letter : -letter);
    }
    p.relators.push_back(free_reduce(word));
    p.relator_cells.push_back(cell.id);
  }
  return p;
}

Presentation tietze_simplify(const Presentation& input) {
  Presentation p = input;
  bool any = false;
  bool changed = true;
  while (changed) {
    changed = false;

    for (std::vector<int>& rel : p.relators) {
      std::vector<int> red = cyclic_reduce(rel);
      if (red != rel) {
        rel = std::move(red);
        changed = true;
      }
    }

    {
      std::set<std::vector<int>> seen;
      std::vector<std::vector<int>> kept;
      for (std::vector<int>& rel : p.relators) {
        if (rel.empty()) {
          changed = true;
          continue;
        }
        if (!seen.insert(canonical_cyclic(rel)).second) {
          changed = true;
          continue;
        }
        kept.push_back(std::move(rel));
      }
      p.relators = std::move(kept);
    }

    int kill = -1;
    for (size_t i = 0; i < p.relators.size() && kill < 0; ++i)
      if (p.relators[i].size() == 1) kill = static_cast<int>(i);
    if (kill >= 0) {
      const int dead = std::abs(p.relators[kill][0]) - 1;
      p.relators.erase(p.relators.begin() + kill);
      eliminate_generator(p, dead, {});
      changed = true;
    } else {
      // x^s1 y^s2 = 1 with x != y defines the larger-indexed generator in
      // terms of the other; substitute it away.
      int sub = -1;
      for (size_t i = 0; i < p.relators.size() && sub < 0; ++i) {
        const std::vector<int>& rel = p.relators[i];
        if (rel.size() == 2 && std::abs(rel[0]) != std::abs(rel[1]))
          sub = static_cast<int>(i);
      }
      if (sub >= 0) {
        std::vector<int> rel = p.relators[sub];
        int a = std::abs(rel[0]) - 1, b = std::abs(rel[1]) - 1;
        int sa = rel[0] > 0 ? 1 : -1, sb = rel[1] > 0 ? 1 : -1;
        if (a > b) {
          std::swap(a, b);
          std::swap(sa, sb);
        }
        // a^sa b^sb = 1  =>  b = a^(-sa*sb); replacement word for +b.
        p.relators.erase(p.relators.begin() + sub);
        eliminate_generator(p, b, {-sa * sb * (a + 1)});
        changed = true;
      }
    }

    if (changed) any = true;
  }

  if (any) {
    p.generator_edges.assign(p.generators, -1);
    p.relator_cells.assign(p.relators.size(), -1);
    return p;
  }
  return input;
}

AbelianGroup abelianization(const Presentation& p) {
  IntegerMatrix m(static_cast<int>(p.relators.size()), p.generators);
  for (int r = 0; r < m.rows; ++r)
    for (int s : p.relators[r]) {
      const int g = std::abs(s) - 1;
      m.at(r, g) += (s > 0 ? 1 : -1);
    }
  SnfResult snf = smith_normal_form(std::move(m));
  AbelianGroup out;
  int rank = 0;
  const int n = std::min(snf.d.rows, snf.d.cols);
  for (int t = 0; t < n; ++t) {
    const BigInt& d = snf.d.at(t, t);
    if (d == 0) continue;
    ++rank;
    if (d > 1) out.invariant_factors.push_back(d);
  }
  out.free_rank = p.generators - rank;
  return out;
}

std::string triviality_name(Triviality t) {
  switch (t) {
    case Triviality::trivial: return "trivial";
    case Triviality::nontrivial: return "nontrivial";
    case Triviality::unknown: return "unknown";
  }
  return "unknown";
}

Triviality triviality_status(const Presentation& p) {
  if (!abelianization(p).trivial()) return Triviality::nontrivial;
  if (tietze_simplify(p).generators == 0) return Triviality::trivial;
  return Triviality::unknown;
}

Presentation induced_presentation(const Presentation& p,
                                  const DeformationRecord& record) {
  if (record.lineage_before != p.lineage)
    throw ParseError("deformation record does not start from this "
                     "presentation's complex");
  if (record.kind == "tree-contraction" || record.kind == "edge-contraction")
    return fundamental_presentation(record.after);
  if (record.kind != "subcomplex-collapse")
    throw ParseError("unknown deformation kind: " + record.kind);

  const int ne = static_cast<int>(record.edge_map.size());
  const int nc = static_cast<int>(record.cell_map.size());
  for (int e : p.generator_edges)
    if (e < 0 || e >= ne)
      throw ParseError("presentation lost edge provenance; cannot carry it "
                       "through a collapse");
  for (int c : p.relator_cells)
    if (c < 0 || c >= nc)
      throw ParseError("presentation lost cell provenance; cannot carry it "
                       "through a collapse");

  Presentation out;
  out.generators = p.generators;
  out.lineage = record.lineage_after;
  out.generator_edges.resize(p.generators);
  for (int g = 0; g < p.generators; ++g)
    out.generator_edges[g] = record.edge_map[p.generator_edges[g]];
  for (size_t i = 0; i < p.relators.size(); ++i) {
    if (record.cell_map[p.relator_cells[i]] < 0) continue;
    out.relators.push_back(p.relators[i]);
    out.relator_cells.push_back(record.cell_map[p.relator_cells[i]]);
  }
  for (int g = 0; g < p.generators; ++g) {
    if (out.generator_edges[g] >= 0) continue;
    out.relators.push_back({g + 1});
    out.relator_cells.push_back(-1);
  }
  return out;
}

std::string generator_name(int index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "g" + std::to_string(index);
}

std::string word_text(const std::vector<int>& word) {
  if (word.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < word.size()) {
    size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    const int run = static_cast<int>(j - i);
    const int exp = word[i] > 0 ? run : -run;
    if (!out.empty()) out += ' ';
    out += generator_name(std::abs(word[i]) - 1);
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

std::string presentation_text(const Presentation& p) {
  std::string gens;
  for (int g = 0; g < p.generators; ++g) {
    if (g) gens += ", ";
    gens += generator_name(g);
  }
  std::string rels;
  for (size_t i = 0; i < p.relators.size(); ++i) {
    if (i) rels += ", ";
    rels += word_text(p.relators[i]);
  }
  return "⟨" + gens + " | " + rels + "⟩";
}

std::string AbelianGroup::text() const {
  if (trivial()) return "0";
  std::vector<std::string> parts;
  if (free_rank == 1)
    parts.push_back("Z");
  else if (free_rank > 1)
    parts.push_back("Z^" + std::to_string(free_rank));
  for (const BigInt& d : invariant_factors)
    parts.push_back("Z_" + d.str());
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " ⊕ ";
    out += parts[i];
  }
  return out;
}

}  // namespace faceq
