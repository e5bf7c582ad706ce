// Acceptance driver: one pass/fail line per end-to-end guarantee.
// argv[1] is the path to the faceq binary, argv[2] a scratch directory.
#include <sys/wait.h>

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "faceq/gallery.hpp"
#include "faceq/presentation.hpp"
#include "faceq/quotient.hpp"
#include "faceq/report.hpp"
#include "faceq/snf.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using namespace faceq;

namespace {

std::string cli;
fs::path work;

bool criterion(const std::string& name, const std::function<bool()>& body) {
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::cerr << "  (" << name << " threw: " << e.what() << ")\n";
    ok = false;
  }
  std::cout << (ok ? "PASS: " : "FAIL: ") << name << "\n";
  return ok;
}

bool note(bool ok, const std::string& detail) {
  if (!ok) std::cerr << "  detail: " << detail << "\n";
  return ok;
}

// Independent homology oracle: Smith normal form of the two boundary maps of
// the quotient complex, bypassing the presentation layer entirely.
AbelianGroup homology_from_boundaries(const QuotientComplex& q) {
  const int nv = int(q.vertices.size());
  const int ne = int(q.edges.size());
  const int nc = int(q.cells.size());
  IntegerMatrix d2(nc, ne);
  for (int c = 0; c < nc; ++c)
    for (int sym : q.cells[c].word)
      d2.at(c, std::abs(sym) - 1) += sym > 0 ? 1 : -1;
  IntegerMatrix d1(ne, nv);
  for (int e = 0; e < ne; ++e)
    if (q.edges[e].u != q.edges[e].v) {
      d1.at(e, q.edges[e].v) += 1;
      d1.at(e, q.edges[e].u) -= 1;
    }
  auto rank = [](const IntegerMatrix& m) {
    SnfResult r = smith_normal_form(m);
    int k = 0;
    for (int i = 0; i < std::min(m.rows, m.cols); ++i)
      if (r.d.at(i, i) != 0) ++k;
    return k;
  };
  AbelianGroup h;
  SnfResult r2 = smith_normal_form(d2);
  int rank2 = 0;
  for (int i = 0; i < std::min(d2.rows, d2.cols); ++i)
    if (r2.d.at(i, i) != 0) {
      ++rank2;
      if (r2.d.at(i, i) > 1) h.invariant_factors.push_back(r2.d.at(i, i));
    }
  h.free_rank = ne - rank(d1) - rank2;
  return h;
}

BigInt bareiss_determinant(IntegerMatrix m) {
  int n = m.rows;
  if (n == 0) return 1;
  BigInt prev = 1, sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (m.at(r, k) != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

int run_cli(const std::string& args) {
  std::string cmd = "FQ_DETERMINISTIC=1 " + cli + " " + args + " > " +
                    (work / "stdout.txt").string() + " 2> " +
                    (work / "stderr.txt").string();
  int rc = std::system(cmd.c_str());
  if (rc == -1 || !WIFEXITED(rc)) return -1;
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Aggregated results of the shared random sweep (two base solids, 1000 seeds
// each), reused by several criteria below.
struct SweepStats {
  int analyzed = 0;
  int exceptions = 0;
  int flat_violations = 0;
  int circuit_violations = 0;
  int manifold_chi_violations = 0;
};

SweepStats run_sweep() {
  SweepStats st;
  for (BaseSolid base : {BaseSolid::octahedron, BaseSolid::cube})
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      try {
        Analysis a = analyze(gen_random(base, seed));
        ++st.analyzed;
        // Random schemes are usually singular; the fold and circuit claims
        // are only promised for schemes whose identification space is a
        // manifold.  Flatness itself is synonymous with degree <= 2.
        bool flat_ok = a.actions.flat == (a.actions.degree <= 2);
        if (a.actions.flat && a.manifold.is_manifold)
          flat_ok = flat_ok && (a.surface.kind == SurfaceKind::disk ||
                                a.surface.kind == SurfaceKind::projective_plane);
        if (!flat_ok) ++st.flat_violations;
        if (a.manifold.is_manifold && a.actions.degree > 2 && !a.circuit)
          ++st.circuit_violations;
        if (a.manifold.is_manifold && a.chi != 1) ++st.manifold_chi_violations;
      } catch (const std::exception&) {
        ++st.exceptions;
      }
    }
  return st;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <faceq-binary> <workdir>\n";
    return 2;
  }
  cli = argv[1];
  work = argv[2];
  fs::remove_all(work);
  fs::create_directories(work);

  const auto gallery = testutil::gallery_schemes();
  const SweepStats sweep = run_sweep();

  int failed = 0;

  failed += !criterion("lens family matches its closed-form invariants", [&] {
    bool ok = true;
    for (int q = 2; q <= 12; ++q)
      for (int p = 1; p < q; ++p) {
        if (std::gcd(q, p) != 1) continue;
        Analysis a = analyze(gen_lens(q, p));
        std::string tag = "lens(" + std::to_string(q) + "," +
                          std::to_string(p) + ")";
        ok &= note(a.vertex_cls.classes.size() == 1, tag + " vertex classes");
        ok &= note(a.actions.classes.size() == 1 &&
                       a.actions.classes[0].order == q,
                   tag + " edge order");
        ok &= note(a.chi == 1 && a.quotient.cells.size() == 1 &&
                       a.quotient.cells[0].word == std::vector<Sym>(q, 1),
                   tag + " attaching word");
        ok &= note(a.manifold.is_manifold, tag + " manifold");
        ok &= note(a.homology.text() == "Z_" + std::to_string(q),
                   tag + " homology");
        ok &= note(q >= 3 ? a.lens_q == q : !a.lens_q.has_value(),
                   tag + " shell recognition");
      }
    return ok;
  });

  failed += !criterion(
      "flat schemes are exactly degree <= 2 and their manifold quotients "
      "fold to a disk or a projective plane",
      [&] {
        bool ok = note(sweep.exceptions == 0, "sweep raised exceptions");
        ok &= note(sweep.flat_violations == 0, "sweep flat violations");
        Analysis rp = analyze(gen_lens(2, 1));
        ok &= note(rp.actions.flat &&
                       rp.surface.kind == SurfaceKind::projective_plane,
                   "lens(2,1) folds to a projective plane");
        for (int n = 1; n <= 6; ++n) {
          Analysis d = analyze(gen_trivial_sphere(n));
          ok &= note(d.actions.flat && d.surface.kind == SurfaceKind::disk,
                     "trivial_sphere(" + std::to_string(n) + ") folds to a disk");
        }
        for (const auto& [name, s] : gallery) {
          bool canonical = name.rfind("random(", 0) != 0;
          Analysis a = analyze(s);
          bool here = a.actions.flat == (a.actions.degree <= 2);
          if (a.actions.flat && (canonical || a.manifold.is_manifold))
            here = here && (a.surface.kind == SurfaceKind::disk ||
                            a.surface.kind == SurfaceKind::projective_plane);
          ok &= note(here, name);
        }
        return ok;
      });

  failed += !criterion(
      "manifold schemes of degree > 2 always have a circuit in the "
      "order > 2 subgraph",
      [&] {
        bool ok = note(sweep.circuit_violations == 0, "sweep circuit violations");
        for (const auto& [name, s] : gallery) {
          bool canonical = name.rfind("random(", 0) != 0;
          Analysis a = analyze(s);
          if (a.actions.degree > 2 && (canonical || a.manifold.is_manifold))
            ok &= note(a.circuit, name);
        }
        return ok;
      });

  failed += !criterion(
      "manifold schemes have quotient Euler characteristic 1; the pinned "
      "seed fails with a bad vertex link",
      [&] {
        bool ok = note(sweep.manifold_chi_violations == 0,
                       "sweep Euler characteristic violations");
        for (const auto& [name, s] : gallery) {
          Analysis a = analyze(s);
          if (a.manifold.is_manifold) ok &= note(a.chi == 1, name);
        }
        Analysis bad = analyze(gen_random(
            BaseSolid::octahedron, testutil::kPinnedNonManifoldOctahedronSeed));
        ok &= note(!bad.manifold.is_manifold, "pinned seed is non-manifold");
        bool bad_chi = false;
        for (const LinkReport& l : bad.manifold.vertex_links)
          if (l.euler_characteristic != 2) bad_chi = true;
        ok &= note(bad_chi, "pinned seed has a vertex link with Euler != 2");
        return ok;
      });

  failed += !criterion(
      "platonic gluings match hand-checked classes and homology oracles", [&] {
        FacePairingScheme qs = gen_platonic_space(PlatonicKind::quaternion);
        Analysis qa = analyze(qs);
        bool ok = note(testutil::oracle_vertex_classes(qs) ==
                           std::vector<std::vector<int>>{{0, 3, 5, 6},
                                                         {1, 2, 4, 7}},
                       "cube vertex classes");
        ok &= note(testutil::oracle_edge_classes(qs) ==
                       std::vector<std::vector<int>>{
                           {0, 6, 10}, {1, 7, 8}, {2, 3, 11}, {4, 5, 9}},
                   "cube edge classes");
        ok &= note(qa.vertex_cls.classes == testutil::oracle_vertex_classes(qs),
                   "cube vertex classes agree with the library");
        for (const EdgeClassInfo& c : qa.actions.classes)
          ok &= note(c.order == 3 && c.members.size() == 3,
                     "cube edge order/size");
        AbelianGroup qh = homology_from_boundaries(qa.quotient);
        ok &= note(qh == qa.homology && qh.text() == "Z_2 ⊕ Z_2",
                   "cube homology oracle");
        ok &= note(qa.manifold.is_manifold && qa.chi == 1, "cube manifold");

        FacePairingScheme ps = gen_platonic_space(PlatonicKind::poincare);
        Analysis pa = analyze(ps);
        ok &= note(pa.vertex_cls.classes.size() == 5 &&
                       pa.actions.classes.size() == 10,
                   "dodecahedron class counts");
        for (const auto& cls : pa.vertex_cls.classes)
          ok &= note(cls.size() == 4, "dodecahedron vertex class size");
        for (const EdgeClassInfo& c : pa.actions.classes)
          ok &= note(c.order == 3 && c.members.size() == 3,
                     "dodecahedron edge order/size");
        AbelianGroup ph = homology_from_boundaries(pa.quotient);
        ok &= note(ph == pa.homology && ph.trivial(),
                   "dodecahedron homology oracle");
        ok &= note(pa.manifold.is_manifold && pa.chi == 1,
                   "dodecahedron manifold");
        ok &= note(pa.triviality == Triviality::unknown,
                   "dodecahedron group status stays open");
        return ok;
      });

  failed += !criterion(
      "contractions preserve Euler characteristic and homology", [&] {
        bool ok = true;
        for (const auto& [name, s] : gallery) {
          Analysis a = analyze(s);
          DeformationOutcome d = contract_gamma_tree(a);
          ok &= note(d.chi == a.chi, name + " Euler characteristic");
          ok &= note(d.homology == a.homology, name + " homology");
          for (const QuotientEdge& e : a.quotient.edges) {
            if (e.u == e.v) continue;  // loops cannot be contracted
            auto [after, record] = contract_edge(a.quotient, e.id);
            ok &= note(euler_characteristic(after) == a.chi,
                       name + " edge " + std::to_string(e.id) +
                           " Euler characteristic");
            ok &= note(abelianization(tietze_simplify(
                           fundamental_presentation(after))) == a.homology,
                       name + " edge " + std::to_string(e.id) + " homology");
          }
        }
        Analysis qa = analyze(gen_platonic_space(PlatonicKind::quaternion));
        DeformationOutcome qd = contract_gamma_tree(qa);
        ok &= note(qd.circles == 3 && qd.result.vertices.size() == 1,
                   "contracted cube gluing has three circles");
        return ok;
      });

  failed += !criterion(
      "diagonalization postconditions and simplification-invariant "
      "abelianization hold on random inputs",
      [&] {
        bool ok = true;
        SplitMix64 rng(987654321);
        for (int trial = 0; trial < 500; ++trial) {
          int rows = 1 + int(rng.below(8));
          int cols = 1 + int(rng.below(8));
          IntegerMatrix m(rows, cols);
          for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = int(rng.below(19)) - 9;
          SnfResult r = smith_normal_form(m);
          bool here = multiply(multiply(r.u, m), r.v) == r.d;
          for (int i = 0; i < r.d.rows; ++i)
            for (int j = 0; j < r.d.cols; ++j)
              if (i != j && r.d.at(i, j) != 0) here = false;
          for (int i = 0; i < std::min(rows, cols); ++i)
            if (r.d.at(i, i) < 0) here = false;
          for (int i = 0; i + 1 < std::min(rows, cols); ++i) {
            const BigInt &x = r.d.at(i, i), &y = r.d.at(i + 1, i + 1);
            if (x == 0 ? y != 0 : y % x != 0) here = false;
          }
          BigInt du = bareiss_determinant(r.u), dv = bareiss_determinant(r.v);
          if (!(du == 1 || du == -1) || !(dv == 1 || dv == -1)) here = false;
          ok &= note(here, "matrix trial " + std::to_string(trial));
        }
        for (int trial = 0; trial < 1000; ++trial) {
          Presentation p;
          p.generators = 1 + int(rng.below(4));
          int nrel = int(rng.below(4));
          for (int rel = 0; rel < nrel; ++rel) {
            std::vector<int> w(rng.below(7));
            for (int& sym : w) {
              int g = 1 + int(rng.below(std::uint64_t(p.generators)));
              sym = rng.below(2) ? g : -g;
            }
            p.relators.push_back(std::move(w));
          }
          p.generator_edges.assign(std::size_t(p.generators), -1);
          p.relator_cells.assign(p.relators.size(), -1);
          ok &= note(abelianization(tietze_simplify(p)) == abelianization(p),
                     "presentation trial " + std::to_string(trial));
        }
        return ok;
      });

  failed += !criterion("command-line output is byte-identical across runs", [&] {
    const std::string lens = (work / "lens.json").string();
    bool ok = note(run_cli("gen lens --q 7 --p 3 --out " + lens) == 0,
                   "gen exits 0");
    ok &= note(run_cli("analyze " + lens + " --out " +
                       (work / "a1.json").string()) == 0,
               "first analyze exits 0");
    ok &= note(run_cli("analyze " + lens + " --out " +
                       (work / "a2.json").string()) == 0,
               "second analyze exits 0");
    ok &= note(!slurp(work / "a1.json").empty() &&
                   slurp(work / "a1.json") == slurp(work / "a2.json"),
               "analyze outputs match byte for byte");
    ok &= note(run_cli("fuzz --base cube --count 40 --seed 11 --out " +
                       (work / "f1").string()) == 0,
               "first fuzz exits 0");
    ok &= note(run_cli("fuzz --base cube --count 40 --seed 11 --out " +
                       (work / "f2").string()) == 0,
               "second fuzz exits 0");
    ok &= note(!slurp(work / "f1" / "results.csv").empty() &&
                   slurp(work / "f1" / "results.csv") ==
                       slurp(work / "f2" / "results.csv"),
               "fuzz tables match byte for byte");
    ok &= note(slurp(work / "f1" / "summary.json") ==
                   slurp(work / "f2" / "summary.json"),
               "fuzz summaries match byte for byte");
    return ok;
  });

  std::cout << (failed == 0 ? "all acceptance checks passed"
                            : std::to_string(failed) + " acceptance checks failed")
            << "\n";
  return failed;
}
